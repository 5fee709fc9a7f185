#pragma once

#include <memory>

#include "oef/vec.hpp"

namespace oef {

// Convex nonsmooth term with a closed-form proximal operator.
class ProxFunction {
 public:
  virtual ~ProxFunction() = default;

  // Extended-real value; +inf outside the domain.
  virtual double value(const Vector& x) const = 0;

  // argmin_z { h(z) + ||z - u||^2 / (2t) }, t > 0.
  virtual Vector prox(const Vector& u, double t) const = 0;

  // Exact subdifferential membership v in dh(x), up to tol on boundary cases.
  virtual bool subdifferential_contains(const Vector& x, const Vector& v,
                                        double tol) const = 0;

  virtual bool is_zero() const { return false; }
};

class ZeroFunction final : public ProxFunction {
 public:
  double value(const Vector&) const override { return 0.0; }
  Vector prox(const Vector& u, double) const override { return u; }
  bool subdifferential_contains(const Vector&, const Vector& v,
                                double tol) const override {
    return v.lpNorm<Eigen::Infinity>() <= tol;
  }
  bool is_zero() const override { return true; }
};

class L1Norm final : public ProxFunction {
 public:
  explicit L1Norm(double weight);
  double weight() const { return weight_; }
  double value(const Vector& x) const override;
  Vector prox(const Vector& u, double t) const override;
  bool subdifferential_contains(const Vector& x, const Vector& v,
                                double tol) const override;

 private:
  double weight_;
};

class BoxIndicator final : public ProxFunction {
 public:
  BoxIndicator(Vector lower, Vector upper);
  double value(const Vector& x) const override;
  Vector prox(const Vector& u, double t) const override;
  bool subdifferential_contains(const Vector& x, const Vector& v,
                                double tol) const override;

 private:
  Vector lower_, upper_;
};

// Validated front end: rejects non-finite input or t <= 0.
Vector prox(const ProxFunction& h, const Vector& u, double t);

// x - prox_h(x - g) with unit step. With g the exact gradient this is the
// KKT residual of min f + h; with an approximate gradient it is the
// computable surrogate the solvers stop on.
Vector kkt_residual(const Vector& x, const Vector& g, const ProxFunction& h);

}  // namespace oef
