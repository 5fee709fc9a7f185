#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "oef/vec.hpp"

namespace oef {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class StepKind {
  none,
  prox_newton,
  newton,
  sc_newton,
  nc,
  sol,
  terminal_sol,           // unit step along the last CG direction
  terminal_second_phase,  // stationary iterate accepted as is
};

const char* step_kind_name(StepKind k);

enum class CertStatus { unknown = -1, fail = 0, pass = 1, vacuous = 2 };

// One outer iteration. Iterates are kept in memory so certificates and exact
// residuals can be computed after the run by replaying the oracle streams;
// CSV output carries the scalar columns only.
struct TraceRow {
  long k = 0;
  Vector x;

  double residual = kNaN;  // ||Gtilde(x_k)|| (composite) or ||g_k||
  double delta_g = 0.0;
  double delta_h = 0.0;
  double eta = 0.0;
  double c = kNaN;
  double h_norm_bound = kNaN;
  double step_norm = kNaN;
  double xi_norm = kNaN;
  double cg_residual = kNaN;
  double mu = kNaN;

  StepKind kind = StepKind::none;
  int phase = 0;
  double lambda_hat = kNaN;
  double alpha = kNaN;
  double d_norm = kNaN;
  int eigen_attempts = 0;
  bool oracle_fallback = false;

  long inner_iterations = 0;
  long cg_matvecs = 0;
  long eigen_matvecs = 0;
  long gradient_samples = 0;
  long hessian_samples = 0;

  // Diagnostics (out of band, filled by the *_diagnostics passes).
  double exact_residual = kNaN;  // ||G(x_k)|| or ||grad f(x_k)||
  double objective = kNaN;       // phi(x_k) or f(x_k); never read by solvers
  double error_to_ref = kNaN;    // ||x_k - x*|| when a reference is known
  CertStatus cert_decrease = CertStatus::unknown;
  CertStatus cert_gradient = CertStatus::unknown;  // estimate accuracy chain
  CertStatus cert_residual_bound = CertStatus::unknown;
  CertStatus cert_step = CertStatus::unknown;     // linear-system step rule
  CertStatus cert_rayleigh = CertStatus::unknown; // NC curvature consistency
};

struct SolverTrace {
  std::string solver;
  std::string problem;
  uint64_t run_seed = 0;
  std::vector<TraceRow> rows;

  bool terminated = false;
  StepKind termination = StepKind::none;
  Vector final_point;

  // Objective evaluations observed inside the solver loop; must be zero.
  long objective_evals_in_loop = -1;
  bool diagnostics_ran = false;

  long total_cg_matvecs = 0;
  long total_eigen_matvecs = 0;
  long total_gradient_samples = 0;
  long total_hessian_samples = 0;

  double wall_seconds = 0.0;

  void write_csv(std::ostream& os) const;
  std::string csv() const;
};

}  // namespace oef
