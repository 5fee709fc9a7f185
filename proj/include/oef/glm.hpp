#pragma once

#include "oef/problem.hpp"

namespace oef {

// Row-separable losses psi(a_i'x - b_i) (robust regression) or
// psi(b_i * a_i'x) with labels b_i in {-1,+1} (classification), plus an
// optional ridge term shared by every component.
enum class GlmLink {
  student_t,  // psi(t) = log(1 + t^2), nonconvex
  logistic,   // psi(t) = log(1 + exp(-t)), convex
};

class GlmObjective final : public FiniteSumObjective {
 public:
  GlmObjective(Matrix a, Vector b, GlmLink link, double ridge);

  Index dimension() const override { return a_.cols(); }
  Index count() const override { return a_.rows(); }

  const Matrix& data_matrix() const { return a_; }
  const Vector& data_rhs() const { return b_; }
  GlmLink link() const { return link_; }
  double ridge() const { return ridge_; }

  ComponentBounds component_bounds() const override { return bounds_; }

  Vector sample_mean_gradient(const std::vector<Index>& idx,
                              const Vector& x) const override;
  Vector sample_mean_hessian_vector(const std::vector<Index>& idx,
                                    const Vector& x,
                                    const Vector& v) const override;

  // Serial reference paths for the OpenMP kernels; kept for the equivalence
  // tests and the kernel benchmark.
  Vector gradient_serial(const Vector& x) const;
  Matrix hessian_serial(const Vector& x) const;
  Vector hessian_vector_serial(const Vector& x, const Vector& v) const;

 protected:
  double value_impl(const Vector& x) const override;
  Vector gradient_impl(const Vector& x) const override;
  Matrix hessian_impl(const Vector& x) const override;
  Vector hessian_vector_impl(const Vector& x, const Vector& v) const override;

  Vector component_gradient_impl(Index i, const Vector& x) const override;
  Matrix component_hessian_impl(Index i, const Vector& x) const override;
  Vector component_hessian_vector_impl(Index i, const Vector& x,
                                       const Vector& v) const override;

 private:
  Vector gradient_blocked(const Vector& x, bool parallel) const;
  Matrix hessian_blocked(const Vector& x, bool parallel) const;
  Vector hessian_vector_blocked(const Vector& x, const Vector& v,
                                bool parallel) const;

  Matrix a_;
  Vector b_;
  GlmLink link_;
  double ridge_;
  ComponentBounds bounds_;
};

// f(x) = x'Px/2 - q'x with symmetric P.
class QuadraticObjective final : public SmoothObjective {
 public:
  QuadraticObjective(Matrix p, Vector q);

  Index dimension() const override { return p_.rows(); }
  const Matrix& quadratic_term() const { return p_; }

  // Solves P x = q; meaningful for nonsingular P.
  Vector stationary_point() const;

 protected:
  double value_impl(const Vector& x) const override;
  Vector gradient_impl(const Vector& x) const override;
  Matrix hessian_impl(const Vector& x) const override;
  Vector hessian_vector_impl(const Vector& x, const Vector& v) const override;

 private:
  Matrix p_;
  Vector q_;
};

}  // namespace oef
