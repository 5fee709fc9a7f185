#pragma once

#include <optional>
#include <utility>

#include "oef/linalg.hpp"
#include "oef/problem.hpp"

namespace oef {

enum class OracleMode { exact, adversarial, subsampled };
enum class NoiseSchedule { constant, geometric, adaptive };

// Which accuracy model the solver needs the estimate to certify.
enum class ReferenceKind {
  composite,        // ||g - grad f|| <= delta_g ||x - prox_h(x - g)||
  unconstrained,    // ||g - grad f|| <= delta_g ||g||
  strongly_convex,  // unconstrained + the feasibility caps tied to sigma, theta
  sosp_absolute,    // ||g - grad f|| <= level_g, ||Q - hess f|| <= level_h
};

struct OraclePolicy {
  OracleMode mode = OracleMode::exact;
  double delta_g_bar = 0.0;  // must stay below 1/2 (relative models)
  double delta_h_bar = 0.0;
  NoiseSchedule schedule = NoiseSchedule::constant;
  double decay = 1.0;   // geometric schedule rate
  double theta = 0.0;   // adaptive schedule / strongly convex exponent
  double confidence = 0.05;
  uint64_t seed = 0;

  // Throws std::invalid_argument on inconsistent settings. sigma > 0 enables
  // the strongly convex checks (delta_h_bar < sigma).
  void validate(ReferenceKind ref, double sigma) const;
};

struct DerivativeEstimate {
  Vector g;
  LinOp q;
  double delta_g = 0.0;  // certified level (relative, or absolute in SOSP mode)
  double delta_h = 0.0;
  bool absolute_levels = false;
  bool fallback_exact = false;  // halving loop exhausted, noise dropped
  int halvings = 0;
  long gradient_samples = 0;
  long hessian_samples = 0;
  bool certificate_checked = false;
  bool certificate_ok = true;
};

// Sample-size rules for uniform subsampling with replacement. Results are
// capped at m when m > 0; hitting the cap means full batch (exact estimate).
long gradient_sample_size(double delta_g, double eps, double u_g,
                          double confidence, long m);
long hessian_sample_size(double delta_h, Index n, double u_h, double confidence,
                         long m);
std::pair<long, long> sosp_sample_sizes(double eps_g, double eps_h, Index n,
                                        double u_g, double u_h,
                                        double confidence, long m);

// Produces (g_k, Q_k) for a given iterate and iteration index. Estimates are
// pure functions of (x, policy.seed, iteration), so a post-run diagnostics
// pass can replay them exactly.
class OracleEngine {
 public:
  OracleEngine(const CompositeProblem& problem, OraclePolicy policy);

  // Absolute accuracy levels for ReferenceKind::sosp_absolute.
  void set_absolute_levels(double level_g, double level_h);
  // Stop tolerance consumed by the gradient sample-size rule.
  void set_sample_target(double eps);

  DerivativeEstimate estimate(const Vector& x, long iteration,
                              ReferenceKind ref) const;

  const OraclePolicy& policy() const { return policy_; }
  const CompositeProblem& problem() const { return problem_; }

  // Scheduled noise level before any per-call feasibility adjustment.
  double scheduled_delta(double bar, long iteration) const;

 private:
  DerivativeEstimate estimate_exact(const Vector& x) const;
  DerivativeEstimate estimate_adversarial(const Vector& x, long iteration,
                                          ReferenceKind ref) const;
  DerivativeEstimate estimate_subsampled(const Vector& x, long iteration,
                                         ReferenceKind ref) const;

  LinOp dense_hessian(const Vector& x) const;

  const CompositeProblem& problem_;
  OraclePolicy policy_;
  double level_g_ = 0.0;
  double level_h_ = 0.0;
  double sample_eps_ = 0.0;
};

}  // namespace oef
