#include "rigid/matnum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Sparse>
#include <unsupported/Eigen/MatrixFunctions>

#include "rigid/errors.hpp"

namespace rigid {

const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

Field field_from_string(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw InputError("unknown field '" + s + "' (expected real or complex)");
}

double ToleranceConfig::rank_threshold(double sigma_max, Eigen::Index rows,
                                       Eigen::Index cols) const {
  if (rank_tol) return *rank_tol;
  return 1e-9 * sigma_max * static_cast<double>(std::max(rows, cols));
}

namespace matnum {

namespace {

void require_square(const Mat& m, const char* op) {
  if (!is_square(m))
    throw InputError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
}

// Above this many entries rank is computed from the Gram matrix.
constexpr Eigen::Index kGramThreshold = 250000;

template <typename M>
Eigen::Index rank_impl(const M& m, const ToleranceConfig& tol, double scale) {
  if (m.size() == 0) return 0;
  if (m.size() <= kGramThreshold) {
    Eigen::BDCSVD<M> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double thr = tol.rank_threshold(std::max(s(0), scale), m.rows(), m.cols());
    return (s.array() > thr).count();
  }
  // Gram route: sigma_i^2 are the eigenvalues of M^* M (or M M^*). The
  // large matrices here are differentials with few nonzeros per row.
  const Eigen::SparseMatrix<typename M::Scalar> sp = m.sparseView();
  M gram = m.rows() >= m.cols() ? M(sp.adjoint() * sp) : M(sp * sp.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(gram, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const double smax = ev.size() ? ev.maxCoeff() : 0.0;
  const double thr = tol.rank_threshold(std::max(smax, scale), m.rows(), m.cols());
  return (ev.array() > thr).count();
}

}  // namespace

bool is_square(const Mat& m) { return m.rows() == m.cols() && m.rows() > 0; }

Mat mat_exp(const Mat& x) {
  require_square(x, "mat_exp");
  return x.exp();
}

Mat mat_log(const Mat& a, double branch_tol) {
  require_square(a, "mat_log");
  Eigen::ComplexEigenSolver<Mat> es(a, false);
  const double scale = std::max(1.0, spectral_norm(a));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx lam = es.eigenvalues()(i);
    if (std::abs(lam) <= branch_tol * scale)
      throw BranchCutError("mat_log: singular matrix is outside principal branch");
    if (lam.real() < 0 && std::abs(lam.imag()) <= branch_tol * scale)
      throw BranchCutError("mat_log: eigenvalue on the negative real axis, outside principal branch");
  }
  return a.log();
}

Mat polar_unitary(const Mat& w, const ToleranceConfig& tol) {
  require_square(w, "polar_unitary");
  Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = tol.rank_threshold(s(0), w.rows(), w.cols());
  if (s(s.size() - 1) <= thr)
    throw InputError("polar_unitary: singular matrix (smallest singular value " +
                     std::to_string(s(s.size() - 1)) + ")");
  return svd.matrixU() * svd.matrixV().adjoint();
}

Mat polar_positive(const Mat& w) {
  Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeFullV);
  const Mat& v = svd.matrixV();
  return v * svd.singularValues().cast<cplx>().asDiagonal() * v.adjoint();
}

std::vector<Vec> nullspace_basis(const Mat& m, const ToleranceConfig& tol, double scale) {
  std::vector<Vec> out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(Vec::Unit(m.cols(), j));
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = tol.rank_threshold(std::max(s.size() ? s(0) : 0.0, scale), m.rows(), m.cols());
  const Eigen::Index rank = (s.array() > thr).count();
  for (Eigen::Index j = rank; j < m.cols(); ++j) out.push_back(svd.matrixV().col(j));
  return out;
}

LeastSquares least_squares_solve(const Mat& m, const Vec& b, const ToleranceConfig& tol) {
  if (m.rows() != b.size()) throw InputError("least_squares_solve: dimension mismatch");
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double thr = tol.rank_threshold(s.size() ? s(0) : 0.0, m.rows(), m.cols());
  Vec coeff = svd.matrixU().adjoint() * b;
  for (Eigen::Index i = 0; i < s.size(); ++i) coeff(i) = s(i) > thr ? coeff(i) / s(i) : cplx(0);
  LeastSquares r;
  r.x = svd.matrixV() * coeff;
  r.residual = (m * r.x - b).norm();
  return r;
}

Eigen::Index numerical_rank(const Mat& m, const ToleranceConfig& tol, double scale) {
  return rank_impl(m, tol, scale);
}
Eigen::Index numerical_rank(const RMat& m, const ToleranceConfig& tol, double scale) {
  return rank_impl(m, tol, scale);
}

Eigen::VectorXd singular_values(const Mat& m) {
  if (m.size() == 0) return {};
  return Eigen::BDCSVD<Mat>(m).singularValues();
}

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

double max_entry_norm(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double sup_distance(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) throw InputError("sup_distance: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, spectral_norm(a[i] - b[i]));
  return d;
}

double max_imag(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
}

Mat truncate_to_real(const Mat& m, double tol) {
  const double im = max_imag(m);
  if (im > tol) throw InvariantViolation("real-field result has imaginary part", im);
  return m.real().cast<cplx>();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

}  // namespace matnum
}  // namespace rigid
