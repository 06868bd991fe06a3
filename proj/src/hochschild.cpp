#include "rigid/hochschild.hpp"

#include <algorithm>
#include <cmath>

#include "rigid/errors.hpp"
#include "rigid/random.hpp"

namespace rigid {

namespace {

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Permutation matrix sending the row-major coordinate of E_ij to E_ji.
Mat transpose_permutation(int n) {
  Mat s = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(j * n + i, i * n + j) = 1.0;
  return s;
}

int block_dim(const std::vector<MatrixBlock>& blocks) {
  int d = 0;
  for (const auto& b : blocks) d += b.size * b.size;
  return d;
}

std::vector<cplx> block_structure(const std::vector<MatrixBlock>& blocks) {
  const int d = block_dim(blocks);
  std::vector<cplx> c(at(std::int64_t{d} * d * d), 0.0);
  int off = 0;
  for (const auto& b : blocks) {
    const int n = b.size;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const int x = off + i * n + j, y = off + j * n + l, z = off + i * n + l;
          c[at((std::int64_t{x} * d + y) * d + z)] = 1.0;
        }
    off += n * n;
  }
  return c;
}

Field joint_field(const std::vector<MatrixBlock>& blocks) {
  for (const auto& b : blocks)
    if (b.field == Field::Complex) return Field::Complex;
  return Field::Real;
}

}  // namespace

// ---------------------------------------------------------------------------

FinDimAlgebra::FinDimAlgebra(int dim, Field field, std::vector<cplx> structure, Vec unit,
                             std::optional<Mat> star_in, std::vector<MatrixBlock> blocks, GroupPtr group, double tol)
    : dim_(dim),
      field_(field),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      star_(std::move(star_in)),
      blocks_(std::move(blocks)),
      group_(std::move(group)) {
  if (dim_ < 1) throw InputError("algebra dimension must be positive");
  const auto d = static_cast<std::size_t>(dim_);
  if (structure_.size() != d * d * d) throw InputError("structure constants must have dim^3 entries");
  if (unit_.size() != dim_) throw InputError("unit vector has the wrong length");
  if (field_ == Field::Real) {
    for (const cplx& x : structure_)
      if (x.imag() != 0.0) throw InputError("real algebra with complex structure constants");
  }
  left_.assign(d, Mat::Zero(dim_, dim_));
  right_.assign(d, Mat::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k)
      for (int m = 0; m < dim_; ++m) {
        left_[at(i)](m, k) = c(i, k, m);
        right_[at(i)](m, k) = c(k, i, m);
      }

  const Mat id = Mat::Identity(dim_, dim_);
  const double unit_res = std::max(max_abs(left_regular(unit_) - id), max_abs(right_regular(unit_) - id));
  if (unit_res > tol) throw InvariantViolation("algebra unit axioms fail", unit_res);
  if (dim_ <= 16) {
    const double assoc = associativity_residual();
    if (assoc > tol) throw InvariantViolation("structure constants are not associative", assoc);
  }
  if (star_) {
    if (star_->rows() != dim_ || star_->cols() != dim_) throw InputError("star matrix must be dim x dim");
    const double inv = max_abs(*star_ * star_->conjugate() - id);
    if (inv > tol) throw InvariantViolation("algebra star is not involutive", inv);
    double anti = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        anti = std::max(anti, (star(multiply(basis(i), basis(j))) - multiply(star(basis(j)), star(basis(i))))
                                  .cwiseAbs()
                                  .maxCoeff());
    if (anti > tol) throw InvariantViolation("algebra star is not anti-multiplicative", anti);
  }
  if (!blocks_.empty()) {
    if (block_dim(blocks_) != dim_) throw InputError("block sizes do not add up to the algebra dimension");
    const auto bc = block_structure(blocks_);
    double res = 0.0;
    for (std::size_t i = 0; i < bc.size(); ++i) res = std::max(res, std::abs(bc[i] - structure_[i]));
    if (res > tol) throw InvariantViolation("block decomposition does not reproduce the structure constants", res);
  }
  if (group_) {
    if (group_->order() != dim_) throw InputError("group algebra dimension must equal the group order");
    double res = 0.0;
    for (int g = 0; g < dim_; ++g)
      for (int h = 0; h < dim_; ++h)
        for (int k = 0; k < dim_; ++k)
          res = std::max(res, std::abs(c(g, h, k) - (k == group_->mul(g, h) ? 1.0 : 0.0)));
    if (res > tol) throw InvariantViolation("structure constants are not those of the group algebra", res);
  }
}

Vec FinDimAlgebra::basis(int i) const {
  Vec v = Vec::Zero(dim_);
  v(i) = 1.0;
  return v;
}

Vec FinDimAlgebra::multiply(const Vec& x, const Vec& y) const { return left_regular(x) * y; }

Vec FinDimAlgebra::star(const Vec& x) const {
  if (!star_) throw InputError("algebra has no star structure");
  return *star_ * x.conjugate();
}

Mat FinDimAlgebra::left_regular(const Vec& x) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != cplx(0)) out += x(i) * left_[at(i)];
  return out;
}

Mat FinDimAlgebra::right_regular(const Vec& x) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != cplx(0)) out += x(i) * right_[at(i)];
  return out;
}

int FinDimAlgebra::realization_size() const {
  if (blocks_.empty()) return dim_;
  int n = 0;
  for (const auto& b : blocks_) n += b.size;
  return n;
}

Mat FinDimAlgebra::realize(const Vec& x) const {
  if (x.size() != dim_) throw InputError("algebra element has the wrong length");
  if (blocks_.empty()) return left_regular(x);
  const int n = realization_size();
  Mat out = Mat::Zero(n, n);
  int off = 0, pos = 0;
  for (const auto& b : blocks_) {
    for (int i = 0; i < b.size; ++i)
      for (int j = 0; j < b.size; ++j) out(pos + i, pos + j) = x(off + i * b.size + j);
    off += b.size * b.size;
    pos += b.size;
  }
  return out;
}

Vec FinDimAlgebra::coordinates(const Mat& m) const {
  const int n = realization_size();
  if (m.rows() != n || m.cols() != n) throw InputError("matrix has the wrong size for this algebra");
  if (!blocks_.empty()) {
    Vec x(dim_);
    int off = 0, pos = 0;
    for (const auto& b : blocks_) {
      for (int i = 0; i < b.size; ++i)
        for (int j = 0; j < b.size; ++j) x(off + i * b.size + j) = m(pos + i, pos + j);
      off += b.size * b.size;
      pos += b.size;
    }
    return x;
  }
  Mat flat(n * n, dim_);
  for (int i = 0; i < dim_; ++i) flat.col(i) = left_[at(i)].reshaped();
  return flat.colPivHouseholderQr().solve(Vec(m.reshaped()));
}

double FinDimAlgebra::associativity_residual() const {
  double res = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Mat prod = Mat::Zero(dim_, dim_);
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != cplx(0)) prod += c(i, j, k) * left_[at(k)];
      res = std::max(res, max_abs(prod - left_[at(i)] * left_[at(j)]));
    }
  return res;
}

namespace algebras {

namespace {

AlgebraPtr from_blocks(const std::vector<MatrixBlock>& blocks) {
  const int d = block_dim(blocks);
  Vec unit = Vec::Zero(d);
  Mat star = Mat::Zero(d, d);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) unit(off + i * b.size + i) = 1.0;
    star.block(off, off, b.size * b.size, b.size * b.size) = transpose_permutation(b.size);
    off += b.size * b.size;
  }
  return std::make_shared<FinDimAlgebra>(d, joint_field(blocks), block_structure(blocks), unit, star, blocks);
}

}  // namespace

AlgebraPtr matrix(int n, Field field) {
  if (n < 1) throw InputError("matrix algebra size must be positive");
  return from_blocks({{n, field}});
}

AlgebraPtr diagonal(int k) {
  if (k < 1) throw InputError("diagonal algebra needs k >= 1");
  return from_blocks(std::vector<MatrixBlock>(static_cast<std::size_t>(k), MatrixBlock{1, Field::Complex}));
}

AlgebraPtr product(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  const int da = a.dim(), db = b.dim(), d = da + db;
  std::vector<cplx> c(at(std::int64_t{d} * d * d), 0.0);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k) c[at((std::int64_t{i} * d + j) * d + k)] = a.c(i, j, k);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < db; ++k) c[at((std::int64_t{da + i} * d + da + j) * d + da + k)] = b.c(i, j, k);
  Vec unit(d);
  unit << a.unit(), b.unit();
  std::optional<Mat> star;
  if (a.has_star() && b.has_star()) {
    star = Mat::Zero(d, d);
    star->topLeftCorner(da, da) = *a.star_matrix();
    star->bottomRightCorner(db, db) = *b.star_matrix();
  }
  std::vector<MatrixBlock> blocks;
  if (!a.blocks().empty() && !b.blocks().empty()) {
    blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  }
  const Field f = (a.field() == Field::Complex || b.field() == Field::Complex) ? Field::Complex : Field::Real;
  return std::make_shared<FinDimAlgebra>(d, f, std::move(c), unit, star, blocks);
}

AlgebraPtr group_algebra(GroupPtr g) {
  const int m = g->order();
  std::vector<cplx> c(at(std::int64_t{m} * m * m), 0.0);
  Mat star = Mat::Zero(m, m);
  for (int x = 0; x < m; ++x) {
    star(g->inv(x), x) = 1.0;
    for (int y = 0; y < m; ++y) c[at((std::int64_t{x} * m + y) * m + g->mul(x, y))] = 1.0;
  }
  Vec unit = Vec::Zero(m);
  unit(g->identity()) = 1.0;
  return std::make_shared<FinDimAlgebra>(m, Field::Complex, std::move(c), unit, star, std::vector<MatrixBlock>{},
                                         std::move(g));
}

AlgebraPtr dual_numbers() {
  std::vector<cplx> c(8, 0.0);
  c[(0 * 2 + 0) * 2 + 0] = 1.0;
  c[(0 * 2 + 1) * 2 + 1] = 1.0;
  c[(1 * 2 + 0) * 2 + 1] = 1.0;
  Vec unit(2);
  unit << 1.0, 0.0;
  return std::make_shared<FinDimAlgebra>(2, Field::Real, std::move(c), unit);
}

}  // namespace algebras

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgebraPtr algebra, std::vector<Mat> left_in, std::vector<Mat> right_in,
                   std::optional<Mat> star_in, double tol)
    : algebra_(std::move(algebra)), left_(std::move(left_in)), right_(std::move(right_in)), star_(std::move(star_in)) {
  if (!algebra_) throw InputError("bimodule: null algebra");
  const int d = algebra_->dim();
  if (static_cast<int>(left_.size()) != d || static_cast<int>(right_.size()) != d)
    throw InputError("bimodule: need one left and one right matrix per basis element");
  dim_ = static_cast<int>(left_.front().rows());
  if (dim_ < 1) throw InputError("bimodule dimension must be positive");
  for (int i = 0; i < d; ++i)
    if (left(i).rows() != dim_ || left(i).cols() != dim_ || right(i).rows() != dim_ || right(i).cols() != dim_)
      throw InputError("bimodule: action matrices must be dim x dim");

  const double scale = std::max(1.0, action_norm() * action_norm());
  auto fail = [&](const char* what, double r) {
    if (r > tol * scale) throw InvariantViolation(std::string("bimodule: ") + what, r);
  };
  const Mat id = Mat::Identity(dim_, dim_);
  fail("left action is not unital", max_abs(left_of(algebra_->unit()) - id));
  fail("right action is not unital", max_abs(right_of(algebra_->unit()) - id));
  double lm = 0.0, rm = 0.0, cm = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec ij = algebra_->multiply(algebra_->basis(i), algebra_->basis(j));
      lm = std::max(lm, max_abs(left_of(ij) - left(i) * left(j)));
      rm = std::max(rm, max_abs(right_of(ij) - right(j) * right(i)));
      cm = std::max(cm, max_abs(left(i) * right(j) - right(j) * left(i)));
    }
  fail("left action is not multiplicative", lm);
  fail("right action is not multiplicative", rm);
  fail("left and right actions do not commute", cm);
  if (star_) {
    if (!algebra_->has_star()) throw InputError("bimodule star needs a star on the algebra");
    const Mat& s = *star_;
    if (s.rows() != dim_ || s.cols() != dim_) throw InputError("bimodule star must be dim x dim");
    fail("bimodule star is not involutive", max_abs(s * s.conjugate() - id));
    double compat = 0.0;
    for (int i = 0; i < d; ++i) {
      const Vec ai = algebra_->star(algebra_->basis(i));
      compat = std::max(compat, max_abs(s * left(i).conjugate() - right_of(ai) * s));
      compat = std::max(compat, max_abs(s * right(i).conjugate() - left_of(ai) * s));
    }
    fail("bimodule star is not compatible with the actions", compat);
  }
}

Mat Bimodule::left_of(const Vec& a) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int i = 0; i < algebra_->dim(); ++i)
    if (a(i) != cplx(0)) out += a(i) * left(i);
  return out;
}

Mat Bimodule::right_of(const Vec& a) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int i = 0; i < algebra_->dim(); ++i)
    if (a(i) != cplx(0)) out += a(i) * right(i);
  return out;
}

double Bimodule::action_norm() const {
  double s = 0.0;
  for (int i = 0; i < algebra_->dim(); ++i)
    s = std::max({s, matnum::spectral_norm(left(i)), matnum::spectral_norm(right(i))});
  return s;
}

kernels::BimoduleView Bimodule::view() const {
  return {algebra_->dim(), dim_, algebra_->structure(), left_, right_};
}

namespace bimodules {

BimodulePtr regular(AlgebraPtr a) {
  std::vector<Mat> l, r;
  for (int i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_basis(i));
    r.push_back(a->right_basis(i));
  }
  auto star = a->star_matrix();
  return std::make_shared<Bimodule>(std::move(a), std::move(l), std::move(r), std::move(star));
}

BimodulePtr matrices(AlgebraPtr a, const std::vector<Mat>& phi, const std::vector<Mat>& psi, bool with_star) {
  if (static_cast<int>(phi.size()) != a->dim() || static_cast<int>(psi.size()) != a->dim())
    throw InputError("matrix bimodule: need one image per basis element on each side");
  const int n = static_cast<int>(phi.front().rows());
  const Mat id = Mat::Identity(n, n);
  std::vector<Mat> l, r;
  for (int i = 0; i < a->dim(); ++i) {
    l.push_back(kron(phi[at(i)], id));
    r.push_back(kron(id, psi[at(i)].transpose()));
  }
  std::optional<Mat> star;
  if (with_star) star = transpose_permutation(n);
  return std::make_shared<Bimodule>(std::move(a), std::move(l), std::move(r), std::move(star));
}

BimodulePtr from_group_module(AlgebraPtr group_algebra, const std::vector<Mat>& rho) {
  if (!group_algebra->group()) throw InputError("group module bimodule needs a group algebra");
  if (static_cast<int>(rho.size()) != group_algebra->dim()) throw InputError("need one matrix per group element");
  const auto e = rho.front().rows();
  std::vector<Mat> r(rho.size(), Mat::Identity(e, e));
  return std::make_shared<Bimodule>(std::move(group_algebra), rho, std::move(r));
}

}  // namespace bimodules

// ---------------------------------------------------------------------------

HochschildCochain::HochschildCochain(BimodulePtr bimodule, int degree)
    : bimodule_(std::move(bimodule)), degree_(degree) {
  if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  if (degree_ > kMaxHochschildDegree + 2) throw Unsupported("Hochschild cochains are limited to degree 5");
  values_ = Vec::Zero(tuple_count() * bimodule_->dim());
}

HochschildCochain::HochschildCochain(BimodulePtr bimodule, int degree, Vec values)
    : bimodule_(std::move(bimodule)), degree_(degree), values_(std::move(values)) {
  if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  if (degree_ > kMaxHochschildDegree + 2) throw Unsupported("Hochschild cochains are limited to degree 5");
  if (values_.size() != tuple_count() * bimodule_->dim())
    throw InputError("cochain has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(tuple_count() * bimodule_->dim()));
}

std::int64_t HochschildCochain::tuple_count() const { return ipow(bimodule_->algebra().dim(), degree_); }

Eigen::Map<const Vec> HochschildCochain::at(std::int64_t t) const {
  return Eigen::Map<const Vec>(values_.data() + t * bimodule_->dim(), bimodule_->dim());
}

Eigen::Map<Vec> HochschildCochain::at(std::int64_t t) {
  return Eigen::Map<Vec>(values_.data() + t * bimodule_->dim(), bimodule_->dim());
}

Eigen::Map<const Vec> HochschildCochain::at(std::span<const int> tuple) const {
  return at(TupleIndex(bimodule_->algebra().dim(), degree_).encode(tuple));
}

double HochschildCochain::norm() const {
  double s = 0.0;
  for (std::int64_t t = 0; t < tuple_count(); ++t) s = std::max(s, at(t).norm());
  return s;
}

HochschildCochain HochschildCochain::operator+(const HochschildCochain& o) const {
  if (o.bimodule_ != bimodule_ || o.degree_ != degree_) throw InputError("cochain sum: incompatible operands");
  return HochschildCochain(bimodule_, degree_, values_ + o.values_);
}

HochschildCochain HochschildCochain::operator-(const HochschildCochain& o) const {
  if (o.bimodule_ != bimodule_ || o.degree_ != degree_) throw InputError("cochain difference: incompatible operands");
  return HochschildCochain(bimodule_, degree_, values_ - o.values_);
}

HochschildCochain HochschildCochain::operator*(cplx s) const {
  return HochschildCochain(bimodule_, degree_, values_ * s);
}

HochschildCochain hochschild_differential(const HochschildCochain& f) {
  HochschildCochain out(f.bimodule_ptr(), f.degree() + 1);
  kernels::omp::hochschild_differential(f.bimodule().view(), f.degree(), f.values(), out.values());
  return out;
}

Mat hochschild_differential_matrix(const Bimodule& e, int degree) {
  if (degree < 0 || degree > kMaxHochschildDegree) throw Unsupported("Hochschild degree out of range");
  return kernels::omp::hochschild_differential_matrix(e.view(), degree);
}

HochschildDims hochschild_cohomology_dims(const Bimodule& e, int degree, const ToleranceConfig& tol) {
  if (degree < 0) throw InputError("cohomology degree must be nonnegative");
  const double scale = std::max(1.0, e.action_norm());
  auto rank = [&](int n) { return matnum::numerical_rank(hochschild_differential_matrix(e, n), tol, scale); };
  const Eigen::Index cn = ipow(e.algebra().dim(), degree) * e.dim();
  HochschildDims d{cn - rank(degree), degree == 0 ? 0 : rank(degree - 1), 0};
  d.dim_h = d.dim_z - d.dim_b;
  return d;
}

// ---------------------------------------------------------------------------

SeparabilityIdempotent::SeparabilityIdempotent(AlgebraPtr algebra, std::vector<std::pair<Vec, Vec>> terms,
                                               double tol)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  for (const auto& [x, y] : terms_)
    if (x.size() != algebra_->dim() || y.size() != algebra_->dim())
      throw InputError("separability idempotent terms have the wrong length");
  const double c = commutation_residual();
  if (c > tol) throw InvariantViolation("separability idempotent: a e != e a", c);
  const double m = multiplication_residual();
  if (m > tol) throw InvariantViolation("separability idempotent: multiplication(e) != 1", m);
}

Mat SeparabilityIdempotent::tensor() const {
  const int d = algebra_->dim();
  Mat t = Mat::Zero(d, d);
  for (const auto& [x, y] : terms_) t += x * y.transpose();
  return t;
}

double SeparabilityIdempotent::commutation_residual() const {
  const Mat t = tensor();
  double r = 0.0;
  for (int i = 0; i < algebra_->dim(); ++i)
    r = std::max(r, max_abs(algebra_->left_basis(i) * t - t * algebra_->right_basis(i).transpose()));
  return r;
}

double SeparabilityIdempotent::multiplication_residual() const {
  Vec m = Vec::Zero(algebra_->dim());
  for (const auto& [x, y] : terms_) m += algebra_->multiply(x, y);
  return (m - algebra_->unit()).cwiseAbs().maxCoeff();
}

SeparabilityIdempotent separability_idempotent(const AlgebraPtr& a) {
  std::vector<std::pair<Vec, Vec>> terms;
  if (!a->blocks().empty()) {
    int off = 0;
    for (const auto& b : a->blocks()) {
      for (int i = 0; i < b.size; ++i) terms.emplace_back(a->basis(off + i * b.size), a->basis(off + i));
      off += b.size * b.size;
    }
  } else if (a->group()) {
    const auto& g = *a->group();
    const double w = 1.0 / g.order();
    for (int x = 0; x < g.order(); ++x) terms.emplace_back(w * a->basis(x), a->basis(g.inv(x)));
  } else {
    throw Unsupported("separability idempotent: the algebra declares no block structure and is not a group algebra");
  }
  return SeparabilityIdempotent(a, std::move(terms));
}

HochschildSplit hochschild_split(const HochschildCochain& a, const SeparabilityIdempotent& e,
                                 const ToleranceConfig& tol) {
  if (a.degree() < 1) throw InputError("hochschild_split: input degree must be >= 1");
  if (&e.algebra() != &a.bimodule().algebra() && e.algebra().structure() != a.bimodule().algebra().structure())
    throw InputError("hochschild_split: idempotent belongs to a different algebra");
  const double res = hochschild_differential(a).norm();
  if (res > tol.residual_tol) throw NotACocycle(res);

  std::vector<Mat> first;
  std::vector<Vec> second;
  double k = 0.0;
  for (const auto& [x, y] : e.terms()) {
    first.push_back(a.bimodule().left_of(x));
    second.push_back(y);
    k += matnum::spectral_norm(first.back()) * y.cwiseAbs().sum();
  }
  HochschildSplit out{HochschildCochain(a.bimodule_ptr(), a.degree() - 1), k};
  kernels::omp::hochschild_split(a.bimodule().view(), {first, second}, a.degree() - 1, a.values(), out.b.values());
  return out;
}

HochschildCochain cochain_star(const HochschildCochain& f) {
  const auto& e = f.bimodule();
  const auto& alg = e.algebra();
  if (!alg.has_star() || !e.has_star()) throw InputError("cochain_star needs stars on the algebra and the bimodule");
  const int d = alg.dim(), n = f.degree();
  const Mat& sa = *alg.star_matrix();
  const Mat& se = *e.star_matrix();

  // nonzero coordinates of e_i*
  std::vector<std::vector<std::pair<int, cplx>>> stars(at(d));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (sa(k, i) != cplx(0)) stars[at(i)].emplace_back(k, sa(k, i));

  HochschildCochain out(f.bimodule_ptr(), n);
  const TupleIndex idx(d, n);
  std::vector<int> t(at(n), 0), s(at(n)), pos(at(n));
  do {
    // f(e_{t_n}*, ..., e_{t_1}*) expanded multilinearly
    Vec acc = Vec::Zero(e.dim());
    std::fill(pos.begin(), pos.end(), 0);
    bool more = true;
    while (more) {
      cplx coef = 1.0;
      for (int j = 0; j < n; ++j) {
        const auto& [k, v] = stars[at(t[at(n - 1 - j)])][at(pos[at(j)])];
        s[at(j)] = k;
        coef *= v;
      }
      acc += coef * f.at(s);
      more = false;
      for (int j = n - 1; j >= 0; --j) {
        if (++pos[at(j)] < static_cast<int>(stars[at(t[at(n - 1 - j)])].size())) {
          more = true;
          break;
        }
        pos[at(j)] = 0;
      }
    }
    out.at(idx.encode(t)) = se * acc.conjugate();
  } while (idx.next(t));
  return out;
}

namespace random {

HochschildCochain hochschild_cochain(BimodulePtr e, int degree, std::mt19937_64& rng) {
  HochschildCochain f(e, degree);
  f.values() = gaussian_vector(f.values().size(), Field::Complex, rng);
  return f;
}

}  // namespace random

}  // namespace rigid
