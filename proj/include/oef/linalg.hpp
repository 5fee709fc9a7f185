#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "oef/vec.hpp"

namespace oef {

// Symmetric linear operator, dense-backed or matrix-free. Copies share the
// matvec counter so accounting survives being passed around by value.
class LinOp {
 public:
  LinOp() = default;
  static LinOp dense(Matrix m);
  static LinOp closure(Index dim, std::function<Vector(const Vector&)> apply);

  Index dim() const { return dim_; }
  bool valid() const { return dim_ > 0; }
  bool is_dense() const { return dense_ != nullptr; }
  const Matrix& matrix() const { return *dense_; }

  Vector apply(const Vector& v) const;

  // Dense copy; a matrix-free operator is applied to the n basis vectors.
  Matrix materialize() const;

  // Same operator plus shift * I; shares this operator's matvec counter.
  LinOp shifted(double shift) const;

  long matvecs() const { return *matvecs_; }
  void reset_matvecs() const { *matvecs_ = 0; }

 private:
  Index dim_ = 0;
  std::shared_ptr<const Matrix> dense_;
  std::function<Vector(const Vector&)> apply_;
  std::shared_ptr<long> matvecs_ = std::make_shared<long>(0);
};

// Thrown when CG meets curvature at or below the caller's floor, i.e. the
// positive-definiteness certificate of the operator was wrong.
struct CurvatureError : std::runtime_error {
  CurvatureError(std::string what, Vector direction, double curvature)
      : std::runtime_error(std::move(what)),
        direction(std::move(direction)),
        curvature(curvature) {}
  Vector direction;
  double curvature;
};

struct CgResult {
  Vector d;  // approximate solution of A d = -g
  Vector r;  // final residual A d + g
  int iterations = 0;
  long matvecs = 0;
  bool converged = false;
};

// CG on A d = -g from the zero vector, stopping at ||A d + g|| <= rel_tol * ||g||.
// curvature_floor > -inf turns on the p'Ap/(p'p) check. on_iterate, when set,
// receives every partial iterate (used by the error-monotonicity tests).
CgResult cg_solve(const LinOp& a, const Vector& g, double rel_tol, int max_iterations,
                  double curvature_floor = 0.0,
                  const std::function<void(const Vector&)>& on_iterate = nullptr);

enum class EigenMode { automatic, dense, lanczos };

struct EigenEstimate {
  double lambda = 0.0;  // Rayleigh quotient p' Q p, recomputed at exit
  Vector p;             // unit vector
  long matvecs = 0;
  bool converged = true;
  EigenMode mode = EigenMode::dense;
};

// Dense/iterative switch: exact eigendecomposition up to this dimension,
// Lanczos above (accounting charges a dense solve as n matvecs).
inline constexpr Index kDenseEigenLimit = 256;

// Lanczos step budget min(n, ceil(2 * eps^(-1/2) * ln(9 n / delta^2))) with
// eps = 2 * accuracy; requesting accuracy eps/2 gives the eps^(-1/2) scaling.
long eigen_budget(Index n, double accuracy, double confidence);

// Worst-case CG iteration count to reach ||r|| <= tau ||g|| on an operator
// with condition number kappa, capped at n.
long cg_budget(Index n, double kappa, double tau);

// Smallest-eigenvalue estimate with unit approximate eigenvector. Dense mode
// is exact; Lanczos mode (full reorthogonalization, random unit start)
// guarantees lambda_hat - lambda_min <= accuracy with probability >= 1 -
// confidence within the step budget. ritz_history, when set, records the
// running Ritz minimum.
EigenEstimate min_eigen(const LinOp& q, double accuracy, double confidence,
                        uint64_t seed, EigenMode mode = EigenMode::automatic,
                        std::vector<double>* ritz_history = nullptr);

struct RegularizedHessian {
  LinOp h;             // Q + shift * I
  double shift = 0.0;  // max(-lambda_safe, 0) + c
  double lambda_safe = 0.0;
};

// H = Q + ([-lambda]_+ + c) I. In dense mode lambda is the exact smallest
// eigenvalue; in Lanczos mode the estimate is safeguarded by the accuracy
// slack so H >= c I still holds with the estimate's probability.
RegularizedHessian regularized_hessian(const LinOp& q, double c,
                                       const EigenEstimate& eig,
                                       double safeguard);

}  // namespace oef
