#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "oef/problem.hpp"

namespace oef {

// Deterministic benchmark instance: (name, sizes, seed, lambda) fully
// determines the data. lambda is the l1 weight for l1-student-t, the ridge
// weight for ridge-logistic, and the smallest eigenvalue for quadratic
// (negative makes the instance indefinite).
struct ProblemDescriptor {
  std::string name;
  Index m = 0;
  Index n = 0;
  uint64_t seed = 0;
  double lambda = 0.0;
};

ProblemDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json descriptor_to_json(const ProblemDescriptor& d);

// Names: l1-student-t, ridge-logistic, quadratic, saddle-2d.
// Throws std::invalid_argument for unknown names or bad sizes.
CompositeProblem make_builtin_problem(const ProblemDescriptor& d);

// CSV dump of the instance data: one row of A per line, then the b vector.
std::string problem_data_csv(const CompositeProblem& p);

}  // namespace oef
