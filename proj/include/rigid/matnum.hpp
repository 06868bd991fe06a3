#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace rigid {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

/// Ground field of a vector space. Everything is carried in complex
/// arithmetic; a Real tag means imaginary parts must vanish.
enum class Field { Real, Complex };

const char* to_string(Field f);
Field field_from_string(const std::string& s);

struct ToleranceConfig {
  /// Absolute singular-value threshold. When unset the relative default
  /// 1e-9 * sigma_max * max(rows, cols) is used.
  std::optional<double> rank_tol;
  double residual_tol = 1e-8;
  /// Target for Newton-type loops before they report success.
  double newton_tol = 1e-12;
  int max_newton_iters = 30;
  /// Largest accepted chart coordinate (sup over group elements).
  double trust_radius = 0.5;
  /// Largest sup-distance between cocycles handed to local retractions.
  double locality_radius = 0.5;

  double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols) const;
};

namespace matnum {

Mat mat_exp(const Mat& x);

/// Principal logarithm. Throws BranchCutError if an eigenvalue lies on the
/// closed negative real axis (within `branch_tol` of it).
Mat mat_log(const Mat& a, double branch_tol = 1e-12);

/// Unitary factor U of W = U P, P positive definite.
Mat polar_unitary(const Mat& w, const ToleranceConfig& tol = {});

/// Positive factor sqrt(W^* W).
Mat polar_positive(const Mat& w);

/// `scale` floors the largest singular value as in numerical_rank.
std::vector<Vec> nullspace_basis(const Mat& m, const ToleranceConfig& tol = {}, double scale = 0.0);

struct LeastSquares {
  Vec x;
  double residual;  // ||M x - b||_2
};
LeastSquares least_squares_solve(const Mat& m, const Vec& b, const ToleranceConfig& tol = {});

/// Numerical rank under the tolerance rule. Large matrices are ranked
/// through the eigenvalues of the Gram matrix on the smaller side.
/// `scale` is a floor for the largest singular value when setting the
/// threshold, so that a matrix of pure roundoff has rank 0.
Eigen::Index numerical_rank(const Mat& m, const ToleranceConfig& tol = {}, double scale = 0.0);
Eigen::Index numerical_rank(const RMat& m, const ToleranceConfig& tol = {}, double scale = 0.0);

Eigen::VectorXd singular_values(const Mat& m);

double spectral_norm(const Mat& m);
double max_entry_norm(const Mat& m);
double sup_distance(const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Largest imaginary part; used to certify real-field results.
double max_imag(const Mat& m);

/// Checks the imaginary parts are below `tol` and drops them.
Mat truncate_to_real(const Mat& m, double tol);

bool is_square(const Mat& m);

Mat commutator(const Mat& a, const Mat& b);

}  // namespace matnum
}  // namespace rigid
