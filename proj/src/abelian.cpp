#include "rigid/abelian.hpp"

#include <algorithm>
#include <cmath>

#include "rigid/errors.hpp"
#include "rigid/random.hpp"

namespace rigid {

GModule::GModule(GroupPtr group, Field field, std::vector<Mat> action, double law_tol)
    : group_(std::move(group)), field_(field), action_(std::move(action)) {
  if (!group_) throw InputError("GModule: null group");
  const int m = group_->order();
  if (static_cast<int>(action_.size()) != m)
    throw InputError("GModule: need one action matrix per group element");
  dim_ = static_cast<int>(action_.front().rows());
  if (dim_ < 1) throw InputError("GModule: dimension must be positive");
  for (const Mat& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw InputError("GModule: action matrices must be dim x dim");
    if (field_ == Field::Real && matnum::max_imag(a) > 0.0)
      throw InputError("GModule: real-field module with complex action matrix");
  }
  const double id_res = (rho(group_->identity()) - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (id_res > law_tol) throw InvariantViolation("GModule: rho(identity) != I", id_res);
  const double law = action_law_residual();
  if (law > law_tol) throw InvariantViolation("GModule: rho(gh) != rho(g) rho(h)", law);
}

double GModule::action_norm() const {
  double s = 0.0;
  for (const Mat& a : action_) s = std::max(s, matnum::spectral_norm(a));
  return s;
}

double GModule::action_law_residual() const {
  const int m = group_->order();
  double worst = 0.0;
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      const double scale = std::max(1.0, rho(g).norm() * rho(h).norm());
      worst = std::max(worst, (rho(group_->mul(g, h)) - rho(g) * rho(h)).cwiseAbs().maxCoeff() / scale);
    }
  return worst;
}

kernels::GroupActionView GModule::view() const {
  return {group_->order(), group_->mul_table(), group_->inv_table(), action_, dim_};
}

ModulePtr trivial_module(GroupPtr g, int dim, Field field) {
  std::vector<Mat> act(static_cast<std::size_t>(g->order()), Mat::Identity(dim, dim));
  return std::make_shared<GModule>(std::move(g), field, std::move(act));
}

// ---------------------------------------------------------------------------

AbelianCochain::AbelianCochain(ModulePtr module, int degree)
    : module_(std::move(module)), degree_(degree) {
  if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  values_ = Vec::Zero(tuple_count() * module_->dim());
}

AbelianCochain::AbelianCochain(ModulePtr module, int degree, Vec values)
    : module_(std::move(module)), degree_(degree), values_(std::move(values)) {
  if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  if (values_.size() != tuple_count() * module_->dim())
    throw InputError("cochain has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(tuple_count() * module_->dim()));
}

std::int64_t AbelianCochain::tuple_count() const { return ipow(module_->group().order(), degree_); }

Eigen::Map<const Vec> AbelianCochain::at(std::int64_t t) const {
  return Eigen::Map<const Vec>(values_.data() + t * module_->dim(), module_->dim());
}

Eigen::Map<Vec> AbelianCochain::at(std::int64_t t) {
  return Eigen::Map<Vec>(values_.data() + t * module_->dim(), module_->dim());
}

Eigen::Map<const Vec> AbelianCochain::at(std::span<const int> tuple) const {
  return at(TupleIndex(module_->group().order(), degree_).encode(tuple));
}

double AbelianCochain::norm() const {
  double s = 0.0;
  for (std::int64_t t = 0; t < tuple_count(); ++t) s = std::max(s, at(t).norm());
  return s;
}

bool AbelianCochain::is_normalized(double tol) const {
  const TupleIndex idx(module_->group().order(), degree_);
  const int e = module_->group().identity();
  std::vector<int> tup(static_cast<std::size_t>(degree_), 0);
  if (degree_ == 0) return true;
  do {
    if (std::find(tup.begin(), tup.end(), e) != tup.end() && at(idx.encode(tup)).norm() > tol)
      return false;
  } while (idx.next(tup));
  return true;
}

AbelianCochain AbelianCochain::operator+(const AbelianCochain& o) const {
  if (o.module_ != module_ || o.degree_ != degree_) throw InputError("cochain sum: incompatible operands");
  return AbelianCochain(module_, degree_, values_ + o.values_);
}

AbelianCochain AbelianCochain::operator-(const AbelianCochain& o) const {
  if (o.module_ != module_ || o.degree_ != degree_) throw InputError("cochain difference: incompatible operands");
  return AbelianCochain(module_, degree_, values_ - o.values_);
}

AbelianCochain AbelianCochain::operator*(cplx s) const {
  return AbelianCochain(module_, degree_, values_ * s);
}

// ---------------------------------------------------------------------------

AbelianCochain differential(const AbelianCochain& f) {
  AbelianCochain out(f.module_ptr(), f.degree() + 1);
  kernels::omp::group_differential(f.module().view(), f.degree(), f.values(), out.values());
  return out;
}

Mat differential_matrix(const GModule& module, int degree) {
  return kernels::omp::group_differential_matrix(module.view(), degree);
}

namespace {

Eigen::Index rank_of_differential(const GModule& module, int degree, const ToleranceConfig& tol) {
  // Every nonzero differential has a singular value of order 1 or more.
  const double scale = std::max(1.0, module.action_norm());
  if (module.field() == Field::Real)
    return matnum::numerical_rank(kernels::omp::group_differential_matrix_real(module.view(), degree), tol,
                                  scale);
  return matnum::numerical_rank(differential_matrix(module, degree), tol, scale);
}

}  // namespace

CohomologyDims cohomology_dims(const GModule& module, int degree, const ToleranceConfig& tol) {
  if (degree < 0) throw InputError("cohomology degree must be nonnegative");
  const Eigen::Index cn = ipow(module.group().order(), degree) * module.dim();
  const Eigen::Index rank_n = rank_of_differential(module, degree, tol);
  const Eigen::Index rank_prev = degree == 0 ? 0 : rank_of_differential(module, degree - 1, tol);
  CohomologyDims d{cn - rank_n, rank_prev, 0};
  d.dim_h = d.dim_z - d.dim_b;
  return d;
}

AbelianCochain averaging_split_unchecked(const AbelianCochain& a) {
  if (a.degree() < 1) throw InputError("averaging_split: input degree must be >= 1");
  AbelianCochain b(a.module_ptr(), a.degree() - 1);
  kernels::omp::group_split(a.module().view(), a.degree() - 1, a.values(), b.values());
  return b;
}

AbelianCochain averaging_split(const AbelianCochain& a, const ToleranceConfig& tol) {
  const double res = differential(a).norm();
  if (res > tol.residual_tol) throw NotACocycle(res);
  return averaging_split_unchecked(a);
}

AbelianCochain abelian_retraction(const AbelianCochain& u, const AbelianCochain& u_prime,
                                  const ToleranceConfig& tol) {
  if (u.module_ptr() != u_prime.module_ptr() || u.degree() != u_prime.degree())
    throw InputError("abelian_retraction: cocycles must share module and degree");
  const double ru = differential(u).norm(), rp = differential(u_prime).norm();
  if (std::max(ru, rp) > tol.residual_tol) throw NotACocycle(std::max(ru, rp));
  return averaging_split(u_prime - u, tol) * cplx(-1.0);
}

AbelianCochain normalize(const AbelianCochain& f) {
  AbelianCochain out = f;
  const int n = f.degree();
  if (n == 0) return out;
  const TupleIndex idx(f.module().group().order(), n);
  const int e = f.module().group().identity();
  std::vector<int> tup(static_cast<std::size_t>(n), 0);
  do {
    if (std::find(tup.begin(), tup.end(), e) != tup.end()) out.at(idx.encode(tup)).setZero();
  } while (idx.next(tup));
  return out;
}

// ---------------------------------------------------------------------------

namespace random {

namespace {

// Irreducible pieces of the regular representation over `field`, as
// orthonormal bases of invariant subspaces.
std::vector<Mat> regular_pieces(const FiniteGroup& g, Field field, std::mt19937_64& rng) {
  const int m = g.order();
  std::vector<Mat> perm(static_cast<std::size_t>(m), Mat::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int h = 0; h < m; ++h) perm[static_cast<std::size_t>(a)](g.mul(a, h), h) = 1.0;
  const Mat r = rigid::random::gaussian(m, m, field, rng);
  const Mat h = (r + r.adjoint()) / 2.0;
  Mat avg = Mat::Zero(m, m);
  for (const Mat& p : perm) avg += p * h * p.adjoint();
  avg /= static_cast<double>(m);
  Eigen::VectorXd ev;
  Mat vecs;
  if (field == Field::Real) {
    Eigen::SelfAdjointEigenSolver<RMat> es(RMat(avg.real()));
    ev = es.eigenvalues();
    vecs = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Mat> es(avg);
    ev = es.eigenvalues();
    vecs = es.eigenvectors();
  }
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Mat> pieces;
  int start = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || ev(i) - ev(i - 1) > 1e-7 * scale) {
      pieces.push_back(vecs.middleCols(start, i - start));
      start = i;
    }
  }
  return pieces;
}

}  // namespace

ModulePtr module(GroupPtr g, int dim, Field field, std::mt19937_64& rng) {
  if (dim < 1) throw InputError("random module dimension must be positive");
  const int m = g->order();
  std::vector<Mat> perm(static_cast<std::size_t>(m), Mat::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int h = 0; h < m; ++h) perm[static_cast<std::size_t>(a)](g->mul(a, h), h) = 1.0;
  const auto pieces = regular_pieces(*g, field, rng);

  std::vector<const Mat*> chosen;
  int remaining = dim;
  while (remaining > 0) {
    std::vector<const Mat*> fit;
    for (const Mat& p : pieces)
      if (p.cols() <= remaining) fit.push_back(&p);
    std::uniform_int_distribution<std::size_t> pick(0, fit.size() - 1);
    const Mat* p = fit[pick(rng)];
    chosen.push_back(p);
    remaining -= static_cast<int>(p->cols());
  }

  Mat t = Mat::Identity(dim, dim);
  {
    const Mat noise = rigid::random::gaussian(dim, dim, field, rng);
    t += 0.4 * noise / matnum::spectral_norm(noise);
  }
  const Mat t_inv = t.inverse();
  std::vector<Mat> act;
  for (int a = 0; a < m; ++a) {
    Mat block = Mat::Zero(dim, dim);
    int off = 0;
    for (const Mat* q : chosen) {
      const auto k = q->cols();
      block.block(off, off, k, k) = q->adjoint() * perm[static_cast<std::size_t>(a)] * *q;
      off += static_cast<int>(k);
    }
    Mat rho = t * block * t_inv;
    if (field == Field::Real) rho = rho.real().cast<cplx>();
    act.push_back(rho);
  }
  act[static_cast<std::size_t>(g->identity())] = Mat::Identity(dim, dim);
  return std::make_shared<GModule>(std::move(g), field, std::move(act));
}

AbelianCochain cochain(ModulePtr m, int degree, std::mt19937_64& rng) {
  const auto n = ipow(m->group().order(), degree) * m->dim();
  Vec v = rigid::random::gaussian_vector(n, m->field(), rng);
  return AbelianCochain(std::move(m), degree, std::move(v));
}

}  // namespace random

}  // namespace rigid
