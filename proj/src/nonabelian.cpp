#include "rigid/nonabelian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rigid/errors.hpp"
#include "rigid/random.hpp"

namespace rigid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double real_inner(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace().real(); }

std::size_t at(int g) { return static_cast<std::size_t>(g); }

}  // namespace

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GeneralLinear: return "general-linear";
    case GroupKind::Unitary: return "unitary";
    case GroupKind::SpecialUnitary: return "special-unitary";
    case GroupKind::SpecialOrthogonal: return "special-orthogonal";
    case GroupKind::UnitScalars: return "unit-scalars";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  for (GroupKind k : {GroupKind::GeneralLinear, GroupKind::Unitary, GroupKind::SpecialUnitary,
                      GroupKind::SpecialOrthogonal, GroupKind::UnitScalars})
    if (s == to_string(k)) return k;
  throw InputError("unknown matrix group kind '" + s + "'");
}

// ---------------------------------------------------------------------------

MatrixGroupSpec::MatrixGroupSpec(GroupKind kind, int n, Field field) : kind_(kind), n_(n), field_(field) {
  if (n < 1) throw InputError("matrix group size must be positive");
  if (kind == GroupKind::SpecialOrthogonal) field_ = Field::Real;
  if (kind == GroupKind::Unitary || kind == GroupKind::SpecialUnitary || kind == GroupKind::UnitScalars)
    field_ = Field::Complex;

  // Gram-Schmidt on the projected matrix units.
  std::vector<Mat> span;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Mat e = Mat::Zero(n, n);
      e(j, k) = 1.0;
      span.push_back(e);
      if (field_ == Field::Complex) span.push_back(cplx(0, 1) * e);
    }
  for (const Mat& s : span) {
    Mat x = project_lie(s);
    for (const Mat& b : basis_) x -= real_inner(b, x) * b;
    const double nrm = std::sqrt(real_inner(x, x));
    if (nrm > 1e-10) basis_.push_back(x / nrm);
  }
}

bool MatrixGroupSpec::is_unitary() const { return kind_ != GroupKind::GeneralLinear; }

double MatrixGroupSpec::membership_residual(const Mat& a) const {
  if (a.rows() != n_ || a.cols() != n_) return kInf;
  if (!a.allFinite()) return kInf;
  const Mat id = Mat::Identity(n_, n_);
  double r = field_ == Field::Real ? matnum::max_imag(a) : 0.0;
  switch (kind_) {
    case GroupKind::GeneralLinear: {
      const Eigen::VectorXd s = matnum::singular_values(a);
      if (s(0) == 0.0 || s(s.size() - 1) <= 1e-12 * s(0)) return kInf;
      return r;
    }
    case GroupKind::Unitary:
      return r + matnum::spectral_norm(a.adjoint() * a - id);
    case GroupKind::SpecialUnitary:
      return r + matnum::spectral_norm(a.adjoint() * a - id) + std::abs(a.determinant() - 1.0);
    case GroupKind::SpecialOrthogonal:
      return r + matnum::spectral_norm(a.transpose() * a - id) + std::abs(a.determinant() - 1.0);
    case GroupKind::UnitScalars: {
      const cplx lam = a.trace() / static_cast<double>(n_);
      return matnum::spectral_norm(a - lam * id) + std::abs(std::abs(lam) - 1.0);
    }
  }
  return kInf;
}

Mat MatrixGroupSpec::project_lie(const Mat& x) const {
  switch (kind_) {
    case GroupKind::GeneralLinear:
      return field_ == Field::Real ? Mat(x.real().cast<cplx>()) : x;
    case GroupKind::Unitary:
      return (x - x.adjoint()) / 2.0;
    case GroupKind::SpecialUnitary: {
      Mat s = (x - x.adjoint()) / 2.0;
      s -= (s.trace() / static_cast<double>(n_)) * Mat::Identity(n_, n_);
      return s;
    }
    case GroupKind::SpecialOrthogonal: {
      const RMat r = x.real();
      return ((r - r.transpose()) / 2.0).cast<cplx>();
    }
    case GroupKind::UnitScalars:
      return cplx(0.0, (x.trace() / static_cast<double>(n_)).imag()) * Mat::Identity(n_, n_);
  }
  return x;
}

Vec MatrixGroupSpec::lie_coords(const Mat& x) const {
  Vec c(lie_dim());
  for (int i = 0; i < lie_dim(); ++i) c(i) = real_inner(basis_[at(i)], x);
  return c;
}

Mat MatrixGroupSpec::from_lie_coords(const Eigen::Ref<const Vec>& c) const {
  if (c.size() != lie_dim()) throw InputError("Lie coordinates have the wrong length");
  Mat x = Mat::Zero(n_, n_);
  for (int i = 0; i < lie_dim(); ++i) x += c(i).real() * basis_[at(i)];
  return x;
}

Mat MatrixGroupSpec::inverse(const Mat& a) const {
  if (kind_ == GroupKind::GeneralLinear) return a.inverse();
  return a.adjoint();
}

Mat MatrixGroupSpec::random_element(double scale, std::mt19937_64& rng) const {
  Vec c = rigid::random::gaussian_vector(lie_dim(), Field::Real, rng);
  Mat x = from_lie_coords(c);
  const double nrm = matnum::spectral_norm(x);
  if (nrm > 0) x *= scale / nrm;
  return matnum::mat_exp(x);
}

// ---------------------------------------------------------------------------

GroupAction::GroupAction(GroupPtr group, MatrixGroupSpec target)
    : group_(std::move(group)), target_(std::move(target)) {
  if (!group_) throw InputError("GroupAction: null group");
}

GroupAction::GroupAction(GroupPtr group, MatrixGroupSpec target, std::vector<Mat> conjugators, double law_tol)
    : group_(std::move(group)), target_(std::move(target)), conj_(std::move(conjugators)) {
  if (!group_) throw InputError("GroupAction: null group");
  const int m = group_->order(), n = target_.size();
  if (static_cast<int>(conj_.size()) != m) throw InputError("GroupAction: need one conjugator per group element");
  for (const Mat& c : conj_) {
    if (c.rows() != n || c.cols() != n) throw InputError("GroupAction: conjugator has the wrong size");
    if (!std::isfinite(MatrixGroupSpec(GroupKind::GeneralLinear, n).membership_residual(c)))
      throw InputError("GroupAction: conjugator is singular");
    conj_inv_.push_back(c.inverse());
  }
  for (int g = 0; g < m; ++g) {
    for (const Mat& b : target_.lie_basis()) {
      const Mat gb = apply(g, b);
      const double moved = (target_.project_lie(gb) - gb).norm();
      if (moved > law_tol * std::max(1.0, gb.norm()))
        throw InvariantViolation("GroupAction: conjugation does not preserve the target", moved);
      if (g == group_->identity() && (gb - b).norm() > law_tol)
        throw InvariantViolation("GroupAction: identity acts nontrivially", (gb - b).norm());
      for (int h = 0; h < m; ++h) {
        const Mat lhs = apply(group_->mul(g, h), b), rhs = apply(g, apply(h, b));
        const double res = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
        if (res > law_tol) throw InvariantViolation("GroupAction: not an action", res);
      }
    }
  }
}

Mat GroupAction::apply(int g, const Mat& x) const {
  if (conj_.empty()) return x;
  return conj_[at(g)] * x * conj_inv_[at(g)];
}

double check_cocycle(const GroupAction& action, const std::vector<Mat>& values) {
  const auto& G = action.group();
  if (static_cast<int>(values.size()) != G.order()) throw InputError("cocycle needs one value per group element");
  double worst = 0.0;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      worst = std::max(worst, matnum::spectral_norm(values[at(G.mul(g, h))] -
                                                    values[at(g)] * action.apply(g, values[at(h)])));
  return worst;
}

double cocycle_distance(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) throw InputError("cocycle_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, matnum::spectral_norm(a[i] - b[i]));
  return d;
}

NonabelianCocycle::NonabelianCocycle(ActionPtr action, std::vector<Mat> values, const ToleranceConfig& tol)
    : action_(std::move(action)), values_(std::move(values)) {
  if (!action_) throw InputError("cocycle: null action");
  if (static_cast<int>(values_.size()) != action_->group().order())
    throw InputError("cocycle needs one value per group element");
  for (std::size_t g = 0; g < values_.size(); ++g) {
    const double r = target().membership_residual(values_[g]);
    if (r > tol.residual_tol)
      throw InputError("cocycle value for '" + action_->group().name(static_cast<int>(g)) + "' is not in the " +
                       to_string(target().kind()) + " group (residual " + std::to_string(r) + ")");
  }
  const double res = residual();
  if (res > tol.residual_tol) throw NotACocycle(res);
}

// ---------------------------------------------------------------------------

namespace detail {

ModulePtr twisted_module_unchecked(const GroupAction& action, const std::vector<Mat>& u) {
  const auto& spec = action.target();
  const int d = spec.lie_dim(), m = action.group().order();
  std::vector<Mat> rho;
  for (int g = 0; g < m; ++g) {
    const Mat ug_inv = spec.inverse(u[at(g)]);
    Mat r(d, d);
    for (int j = 0; j < d; ++j) r.col(j) = spec.lie_coords(u[at(g)] * action.apply(g, spec.lie_basis()[at(j)]) * ug_inv);
    rho.push_back(r);
  }
  return std::make_shared<GModule>(action.group_ptr(), Field::Real, std::move(rho), kInf);
}

}  // namespace detail

ModulePtr twisted_module(const NonabelianCocycle& u, const ToleranceConfig& tol) {
  const double res = u.residual();
  if (res > tol.residual_tol) throw NotACocycle(res);
  auto mod = detail::twisted_module_unchecked(u.action(), u.values());
  const double law = mod->action_law_residual();
  const double allowed = std::max(1e-12, 8.0 * res);
  if (law > allowed) throw InvariantViolation("twisted action fails the action law", law);
  return mod;
}

namespace {

AbelianCochain to_coords(const ModulePtr& mod, const MatrixGroupSpec& spec, const std::vector<Mat>& x) {
  AbelianCochain c(mod, 1);
  for (std::size_t g = 0; g < x.size(); ++g) c.at(static_cast<std::int64_t>(g)) = spec.lie_coords(x[g]);
  return c;
}

void require_same_action(const NonabelianCocycle& a, const NonabelianCocycle& b) {
  if (a.action_ptr() == b.action_ptr()) return;
  const auto &x = a.action(), &y = b.action();
  bool same = x.group().table() == y.group().table() && x.target() == y.target() &&
              x.is_trivial() == y.is_trivial();
  if (same && !x.is_trivial())
    for (std::size_t g = 0; g < x.conjugators().size(); ++g)
      same = same && (x.conjugators()[g] - y.conjugators()[g]).norm() <= 1e-14;
  if (!same) throw InputError("cocycles are for different actions");
}

}  // namespace

ChartResult chart_to_cocycle(const NonabelianCocycle& u, const AbelianCochain& x, const ToleranceConfig& tol) {
  const auto& spec = u.target();
  const auto& G = u.action().group();
  const int m = G.order();
  if (x.degree() != 1 || x.module().dim() != spec.lie_dim() || x.module().group().order() != m)
    throw InputError("chart_to_cocycle: X must be a 1-cochain in the twisted module");
  const auto mod = twisted_module(u, tol);
  AbelianCochain xc(mod, 1, x.values());
  const double dx = differential(xc).norm();
  if (dx > tol.residual_tol) throw NotACocycle(dx);
  if (xc.norm() > tol.trust_radius)
    throw OutOfNeighborhood("chart_to_cocycle", "|X| = " + std::to_string(xc.norm()) + " exceeds the trust radius " +
                                                    std::to_string(tol.trust_radius));

  std::vector<Mat> ug_inv;
  for (int g = 0; g < m; ++g) ug_inv.push_back(spec.inverse(u.at(g)));
  auto twist = [&](int g, const Mat& y) -> Mat { return u.at(g) * u.action().apply(g, y) * ug_inv[at(g)]; };

  int it = 0;
  std::vector<Mat> lie(static_cast<std::size_t>(m)), ex(static_cast<std::size_t>(m));
  for (;; ++it) {
    for (int g = 0; g < m; ++g) {
      lie[at(g)] = spec.from_lie_coords(xc.at(g));
      ex[at(g)] = lie[at(g)].isZero(0.0) ? Mat::Identity(spec.size(), spec.size()) : matnum::mat_exp(lie[at(g)]);
    }
    AbelianCochain r(mod, 2);
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h) {
        const Mat prod = spec.inverse(ex[at(G.mul(g, h))]) * ex[at(g)] * twist(g, ex[at(h)]);
        r.at(static_cast<std::int64_t>(g) * m + h) = spec.lie_coords(spec.log_lie(prod));
      }
    if (r.norm() <= tol.newton_tol || it >= tol.max_newton_iters) break;
    const auto s = averaging_split_unchecked(r);
    xc = xc - averaging_split_unchecked(differential(s));
  }

  ChartResult out{{}, it, 0.0};
  for (int g = 0; g < m; ++g) out.values.push_back(ex[at(g)] * u.at(g));
  out.residual = check_cocycle(u.action(), out.values);
  if (out.residual > tol.residual_tol)
    throw NoConvergence("chart_to_cocycle", "Newton correction did not converge in " + std::to_string(it) +
                                                " iterations (residual " + std::to_string(out.residual) + ")");
  return out;
}

AbelianCochain chart_coordinates(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                 const ToleranceConfig& tol) {
  require_same_action(u, u_prime);
  const auto& spec = u.target();
  const auto mod = twisted_module(u, tol);
  std::vector<Mat> logs;
  for (int g = 0; g < u.action().group().order(); ++g)
    logs.push_back(spec.log_lie(u_prime.at(g) * spec.inverse(u.at(g))));
  const auto x = to_coords(mod, spec, logs);
  return x - averaging_split_unchecked(differential(x));
}

// ---------------------------------------------------------------------------

namespace detail {

RetractionResult retract_core(const GroupAction& action, const std::vector<Mat>& u,
                              const std::vector<Mat>& u_prime, const ToleranceConfig& tol) {
  const auto& spec = action.target();
  const auto& G = action.group();
  const int m = G.order(), n = spec.size();
  Mat v = Mat::Identity(n, n), v_inv = v;
  std::vector<Mat> c(static_cast<std::size_t>(m)), c_inv(static_cast<std::size_t>(m));
  double prev = kInf;
  for (int it = 0;; ++it) {
    double defect = 0.0;
    for (int g = 0; g < m; ++g) {
      c[at(g)] = v_inv * u[at(g)] * action.apply(g, v);
      defect = std::max(defect, matnum::spectral_norm(u_prime[at(g)] - c[at(g)]));
    }
    if (defect <= tol.newton_tol || (defect <= tol.residual_tol && defect > 0.5 * prev))
      return {v, it, defect};
    if (it >= tol.max_newton_iters || !std::isfinite(defect)) {
      if (defect <= tol.residual_tol) return {v, it, defect};
      throw NoConvergence("conjugation_retraction",
                          "no local convergence after " + std::to_string(it) + " iterations (defect " +
                              std::to_string(defect) +
                              "); the inputs may not be cohomologous or lie outside the local neighborhood");
    }
    prev = defect;
    Mat y = Mat::Zero(n, n);
    try {
      for (int g = 0; g < m; ++g) {
        c_inv[at(g)] = spec.inverse(c[at(g)]);
        const Mat d = spec.log_lie(u_prime[at(g)] * c_inv[at(g)]);
        const int gi = G.inv(g);
        // (g^{-1} acting through the current twisting) on D_g
        y += c[at(gi)] * action.apply(gi, d) * spec.inverse(c[at(gi)]);
      }
    } catch (const BranchCutError& e) {
      throw NoConvergence("conjugation_retraction", std::string("no local convergence: ") + e.what());
    }
    y = spec.project_lie(y / static_cast<double>(m));
    v = v * matnum::mat_exp(y);
    v_inv = spec.inverse(v);
  }
}

}  // namespace detail

RetractionResult conjugation_retraction(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                        const ToleranceConfig& tol) {
  require_same_action(u, u_prime);
  const double dist = cocycle_distance(u.values(), u_prime.values());
  if (dist > tol.locality_radius)
    throw OutOfNeighborhood("conjugation_retraction", "distance " + std::to_string(dist) +
                                                          " exceeds the locality radius " +
                                                          std::to_string(tol.locality_radius));
  return detail::retract_core(u.action(), u.values(), u_prime.values(), tol);
}

RetractionResult morphism_conjugacy(const NonabelianCocycle& phi, const NonabelianCocycle& psi,
                                    const ToleranceConfig& tol) {
  if (!phi.action().is_trivial() || !psi.action().is_trivial())
    throw InputError("morphism_conjugacy: morphisms need the trivial action");
  auto r = conjugation_retraction(phi, psi, tol);
  r.v = phi.target().inverse(r.v);
  return r;
}

// ---------------------------------------------------------------------------

H1Signature h1_invariant_signature(const NonabelianCocycle& u) {
  if (!u.action().is_trivial() || !u.target().is_unitary())
    throw InputError("h1_invariant_signature: needs the trivial action on a unitary target");
  const int m = u.action().group().order();
  H1Signature s;
  auto key = [](cplx z) {
    double a = std::arg(z);
    if (a <= -M_PI + 1e-9) a = M_PI;
    return std::make_pair(std::round(a * 1e9), std::abs(z));
  };
  for (int g = 0; g < m; ++g) {
    Eigen::ComplexEigenSolver<Mat> es(u.at(g), false);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [&](cplx a, cplx b) { return key(a) < key(b); });
    s.eigenvalues.push_back(ev);
  }
  for (int g = 0; g < m; ++g) s.traces.push_back(u.at(g).trace());
  for (int g = 0; g < m; ++g)
    for (int h = g; h < m; ++h) s.traces.push_back((u.at(g) * u.at(h)).trace());
  return s;
}

bool same_signature(const H1Signature& a, const H1Signature& b, double tol) {
  if (a.eigenvalues.size() != b.eigenvalues.size() || a.traces.size() != b.traces.size()) return false;
  for (std::size_t g = 0; g < a.eigenvalues.size(); ++g) {
    if (a.eigenvalues[g].size() != b.eigenvalues[g].size()) return false;
    for (std::size_t i = 0; i < a.eigenvalues[g].size(); ++i)
      if (std::abs(a.eigenvalues[g][i] - b.eigenvalues[g][i]) > tol) return false;
  }
  for (std::size_t i = 0; i < a.traces.size(); ++i)
    if (std::abs(a.traces[i] - b.traces[i]) > tol) return false;
  return true;
}

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

// Push a solution of the linear conjugacy equation into the target group.
std::optional<Mat> into_group(const MatrixGroupSpec& spec, Mat v) {
  const int n = spec.size();
  if (spec.field() == Field::Real) v = v.real().cast<cplx>();
  try {
    switch (spec.kind()) {
      case GroupKind::GeneralLinear:
        break;
      case GroupKind::Unitary:
        v = matnum::polar_unitary(v);
        break;
      case GroupKind::SpecialUnitary: {
        v = matnum::polar_unitary(v);
        v *= std::polar(1.0, -std::arg(v.determinant()) / n);
        break;
      }
      case GroupKind::SpecialOrthogonal: {
        v = matnum::polar_unitary(v);
        if (v.determinant().real() < 0) {
          if (n % 2 == 0) return std::nullopt;
          v = -v;
        }
        break;
      }
      case GroupKind::UnitScalars: {
        const cplx lam = v.trace();
        if (std::abs(lam) == 0.0) return std::nullopt;
        v = (lam / std::abs(lam)) * Mat::Identity(n, n);
        break;
      }
    }
  } catch (const InputError&) {
    return std::nullopt;
  }
  if (!std::isfinite(spec.membership_residual(v))) return std::nullopt;
  return v;
}

}  // namespace

std::optional<RetractionResult> global_align(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                             std::mt19937_64& rng, int restarts, const ToleranceConfig& tol) {
  require_same_action(u, u_prime);
  const auto& action = u.action();
  const auto& spec = u.target();
  const int m = action.group().order(), n = spec.size();
  const Mat id = Mat::Identity(n, n);
  // v·u'_g·C_g − u_g·C_g·v = 0, column-major vec.
  Mat lin(static_cast<Eigen::Index>(m) * n * n, n * n);
  for (int g = 0; g < m; ++g) {
    const Mat c = action.is_trivial() ? id : action.conjugators()[at(g)];
    const Mat left = u_prime.at(g) * c, right = u.at(g) * c;
    lin.middleRows(static_cast<Eigen::Index>(g) * n * n, n * n) = kron(left.transpose(), id) - kron(id, right);
  }
  // the values are group elements, so unit scale keeps roundoff out of the solution space
  const auto basis = matnum::nullspace_basis(lin, tol, 1.0);
  if (basis.empty()) return std::nullopt;
  for (int r = 0; r < restarts; ++r) {
    const Vec coef = rigid::random::gaussian_vector(static_cast<Eigen::Index>(basis.size()), spec.field(), rng);
    Vec vec = Vec::Zero(n * n);
    for (std::size_t i = 0; i < basis.size(); ++i) vec += coef(static_cast<Eigen::Index>(i)) * basis[i];
    const auto v0 = into_group(spec, Eigen::Map<const Mat>(vec.data(), n, n));
    if (!v0) continue;
    const auto moved = random::conjugate(action, u.values(), *v0);
    if (cocycle_distance(moved, u_prime.values()) > tol.locality_radius) continue;
    try {
      auto res = detail::retract_core(action, moved, u_prime.values(), tol);
      res.v = *v0 * res.v;
      res.residual = cocycle_distance(random::conjugate(action, u.values(), res.v), u_prime.values());
      if (res.residual <= tol.residual_tol) return res;
    } catch (const NoConvergence&) {
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace random {

AbelianCochain tangent_cocycle(const NonabelianCocycle& u, double norm, std::mt19937_64& rng) {
  const auto mod = twisted_module(u);
  const auto c = cochain(mod, 1, rng);
  auto x = c - averaging_split_unchecked(differential(c));
  const double nrm = x.norm();
  if (nrm < 1e-12) return AbelianCochain(mod, 1);
  return x * cplx(norm / nrm);
}

std::vector<Mat> conjugate(const GroupAction& action, const std::vector<Mat>& u, const Mat& w) {
  const Mat w_inv = action.target().inverse(w);
  std::vector<Mat> out;
  for (std::size_t g = 0; g < u.size(); ++g) out.push_back(w_inv * u[g] * action.apply(static_cast<int>(g), w));
  return out;
}

}  // namespace random

}  // namespace rigid
