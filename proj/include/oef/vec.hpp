#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace oef {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Purpose tags for per-(seed, iteration) RNG substreams. Results of a run are
// independent of evaluation order because each consumer owns its own stream.
enum class Stream : uint64_t {
  gradient_noise = 1,
  hessian_noise = 2,
  gradient_sample = 3,
  hessian_sample = 4,
  eigen_start = 5,
  start_point = 6,
  pilot = 7,
  data = 8,
};

uint64_t substream(uint64_t seed, uint64_t iteration, uint64_t purpose);

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t iteration, Stream purpose) {
  return std::mt19937_64(substream(seed, iteration, static_cast<uint64_t>(purpose)));
}

Vector gaussian_vector(std::mt19937_64& rng, Index n);
Vector random_unit_vector(std::mt19937_64& rng, Index n);
// Symmetric matrix with i.i.d. standard normal entries up to symmetrization.
Matrix random_symmetric(std::mt19937_64& rng, Index n);

}  // namespace oef
