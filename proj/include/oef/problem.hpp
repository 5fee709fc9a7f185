#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oef/prox.hpp"
#include "oef/vec.hpp"

namespace oef {

struct EvalCounters {
  long objective = 0;
  long gradient = 0;
  long hessian = 0;
  long hessian_vector = 0;
  long component_gradient = 0;
  long component_hessian = 0;
  long component_hessian_vector = 0;
};

// Twice differentiable objective with certified constants. Oracles are pure;
// the only mutable state is the evaluation counters, so instances may be
// shared across threads only for read paths that tolerate non-atomic counts.
// The runner builds one instance per run.
class SmoothObjective {
 public:
  virtual ~SmoothObjective() = default;

  virtual Index dimension() const = 0;

  double value(const Vector& x) const {
    ++counters_.objective;
    return value_impl(x);
  }
  Vector gradient(const Vector& x) const {
    ++counters_.gradient;
    return gradient_impl(x);
  }
  Matrix hessian(const Vector& x) const {
    ++counters_.hessian;
    return hessian_impl(x);
  }
  Vector hessian_vector(const Vector& x, const Vector& v) const {
    ++counters_.hessian_vector;
    return hessian_vector_impl(x, v);
  }

  // Certified upper bounds, not tight values. All regularization formulas
  // consume these bounds.
  double lipschitz_grad() const { return lipschitz_grad_; }
  std::optional<double> lipschitz_hess() const { return lipschitz_hess_; }
  double strong_convexity() const { return strong_convexity_; }
  std::optional<double> lower_bound() const { return lower_bound_; }

  EvalCounters& counters() const { return counters_; }
  void reset_counters() const { counters_ = EvalCounters{}; }

 protected:
  virtual double value_impl(const Vector& x) const = 0;
  virtual Vector gradient_impl(const Vector& x) const = 0;
  virtual Matrix hessian_impl(const Vector& x) const = 0;
  virtual Vector hessian_vector_impl(const Vector& x, const Vector& v) const {
    return hessian_impl(x) * v;
  }

  double lipschitz_grad_ = 0.0;
  std::optional<double> lipschitz_hess_;
  double strong_convexity_ = 0.0;
  std::optional<double> lower_bound_;

 private:
  mutable EvalCounters counters_;
};

struct ComponentBounds {
  double gradient = 0.0;  // sup ||grad f_i|| over the level set
  double hessian = 0.0;   // sup ||hess f_i|| over the level set
  bool heuristic = false;
};

// Mean of m component objectives. Full-batch oracles reduce component terms
// in a fixed deterministic order (see parallel.hpp), so results are
// bit-identical across thread counts.
class FiniteSumObjective : public SmoothObjective {
 public:
  virtual Index count() const = 0;

  Vector component_gradient(Index i, const Vector& x) const {
    ++counters().component_gradient;
    return component_gradient_impl(i, x);
  }
  Matrix component_hessian(Index i, const Vector& x) const {
    ++counters().component_hessian;
    return component_hessian_impl(i, x);
  }
  Vector component_hessian_vector(Index i, const Vector& x,
                                  const Vector& v) const {
    ++counters().component_hessian_vector;
    return component_hessian_vector_impl(i, x, v);
  }

  // Means over an explicit index sequence (entries may repeat); the
  // accumulation order is the order of idx.
  virtual Vector sample_mean_gradient(const std::vector<Index>& idx,
                                      const Vector& x) const;
  virtual Matrix sample_mean_hessian(const std::vector<Index>& idx,
                                     const Vector& x) const;
  virtual Vector sample_mean_hessian_vector(const std::vector<Index>& idx,
                                            const Vector& x,
                                            const Vector& v) const;

  // Analytic when the subclass can certify them; otherwise a pilot estimate
  // (1.1x the max over 1e4 sampled points) flagged heuristic.
  virtual ComponentBounds component_bounds() const;

 protected:
  virtual Vector component_gradient_impl(Index i, const Vector& x) const = 0;
  virtual Matrix component_hessian_impl(Index i, const Vector& x) const = 0;
  virtual Vector component_hessian_vector_impl(Index i, const Vector& x,
                                               const Vector& v) const {
    return component_hessian_impl(i, x) * v;
  }
};

struct CompositeProblem {
  std::string name;
  std::shared_ptr<SmoothObjective> smooth;
  std::shared_ptr<ProxFunction> nonsmooth;

  // Lower bound on the composite objective: the exact optimum when
  // lower_bound_is_optimum, otherwise a certified surrogate for the bound
  // calculators.
  std::optional<double> lower_bound;
  bool lower_bound_is_optimum = false;

  // Recorded stationary point for instances where it is known exactly.
  std::optional<Vector> stationary_point;

  Index dimension() const { return smooth->dimension(); }
  double value(const Vector& x) const {
    return smooth->value(x) + nonsmooth->value(x);
  }
  const FiniteSumObjective* finite_sum() const {
    return dynamic_cast<const FiniteSumObjective*>(smooth.get());
  }
};

}  // namespace oef
