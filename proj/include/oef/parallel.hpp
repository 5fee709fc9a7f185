#pragma once

#include <functional>

#include "oef/vec.hpp"

namespace oef {

// Deterministic blocked reduction. Terms are grouped into fixed-size blocks;
// each block accumulates its indices in increasing order and blocks are
// combined left to right. The result is bit-identical for any thread count,
// and the serial path is the reference the parallel path is tested against.
inline constexpr Index kReductionBlock = 256;

Vector blocked_vector_sum(Index count, Index dim,
                          const std::function<void(Index, Vector&)>& accumulate,
                          bool parallel);

Matrix blocked_matrix_sum(Index count, Index rows, Index cols,
                          const std::function<void(Index, Matrix&)>& accumulate,
                          bool parallel);

double blocked_scalar_sum(Index count,
                          const std::function<double(Index)>& term,
                          bool parallel);

}  // namespace oef
