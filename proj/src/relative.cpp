#include "rigid/relative.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "rigid/errors.hpp"

namespace rigid {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

AbelianCochain wrapped(const AbelianCochain& a) {
  AbelianCochain out = a;
  for (Eigen::Index i = 0; i < out.values().size(); ++i) out.values()(i) = wrap_phase(out.values()(i).real());
  return out;
}

double max_wrapped(const Vec& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(wrap_phase(v(i).real())));
  return m;
}

void require_phase_cochain(const AbelianCochain& a) {
  const auto& mod = a.module();
  if (mod.dim() != 1) throw InputError("phase cochains must be scalar");
  for (const Mat& r : mod.action())
    if (r(0, 0) != cplx(1.0)) throw InputError("phase cochains need the trivial action");
}

// Solve A y ≡ b (mod n) by diagonalizing A with unimodular row and column
// operations over the integers, reducing mod n throughout.
std::optional<std::vector<std::int64_t>> solve_mod(std::vector<std::int64_t> a, std::int64_t rows,
                                                   std::int64_t cols, std::vector<std::int64_t> b,
                                                   std::int64_t n) {
  auto A = [&](std::int64_t i, std::int64_t j) -> std::int64_t& { return a[at(i * cols + j)]; };
  auto md = [n](std::int64_t x) { return ((x % n) + n) % n; };
  for (auto& x : a) x = md(x);
  for (auto& x : b) x = md(x);
  std::vector<std::int64_t> vt(at(cols * cols), 0);  // column transform, row-major
  for (std::int64_t j = 0; j < cols; ++j) vt[at(j * cols + j)] = 1;
  auto V = [&](std::int64_t i, std::int64_t j) -> std::int64_t& { return vt[at(i * cols + j)]; };

  auto xgcd = [](std::int64_t p, std::int64_t q, std::int64_t& s, std::int64_t& t) {
    // keep the pivot row when it already divides q; a swap here can cycle
    if (p != 0 && q % p == 0) {
      s = 1;
      t = 0;
      return p;
    }
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (q != 0) {
      const std::int64_t k = p / q;
      std::tie(p, q) = std::make_pair(q, p - k * q);
      std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
    }
    s = s0;
    t = t0;
    return p;
  };
  // rows (r1, r2) <- ([s t; -q/g p/g]) (r1, r2), applied to A and b
  auto row_op = [&](std::int64_t r1, std::int64_t r2, std::int64_t s, std::int64_t t, std::int64_t c, std::int64_t d) {
    for (std::int64_t j = 0; j < cols; ++j) {
      const std::int64_t x = A(r1, j), y = A(r2, j);
      A(r1, j) = md(s * x + t * y);
      A(r2, j) = md(c * x + d * y);
    }
    const std::int64_t x = b[at(r1)], y = b[at(r2)];
    b[at(r1)] = md(s * x + t * y);
    b[at(r2)] = md(c * x + d * y);
  };
  auto col_op = [&](std::int64_t c1, std::int64_t c2, std::int64_t s, std::int64_t t, std::int64_t c, std::int64_t d) {
    for (std::int64_t i = 0; i < rows; ++i) {
      const std::int64_t x = A(i, c1), y = A(i, c2);
      A(i, c1) = md(s * x + t * y);
      A(i, c2) = md(c * x + d * y);
    }
    for (std::int64_t i = 0; i < cols; ++i) {
      const std::int64_t x = V(i, c1), y = V(i, c2);
      V(i, c1) = md(s * x + t * y);
      V(i, c2) = md(c * x + d * y);
    }
  };

  std::int64_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    // pivot: the entry sharing the smallest gcd with n
    std::int64_t pi = -1, pj = -1, best = n + 1;
    for (std::int64_t i = k; i < rows && best > 1; ++i)
      for (std::int64_t j = k; j < cols; ++j)
        if (A(i, j) != 0) {
          const std::int64_t g = std::gcd(A(i, j), n);
          if (g < best) {
            best = g;
            pi = i;
            pj = j;
            if (g == 1) break;
          }
        }
    if (pi < 0) break;
    if (pi != k) {
      for (std::int64_t j = 0; j < cols; ++j) std::swap(A(k, j), A(pi, j));
      std::swap(b[at(k)], b[at(pi)]);
    }
    if (pj != k) {
      for (std::int64_t i = 0; i < rows; ++i) std::swap(A(i, k), A(i, pj));
      for (std::int64_t i = 0; i < cols; ++i) std::swap(V(i, k), V(i, pj));
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::int64_t i = k + 1; i < rows; ++i) {
        if (A(i, k) == 0) continue;
        std::int64_t s, t;
        const std::int64_t p = A(k, k), q = A(i, k);
        const std::int64_t g = xgcd(p, q, s, t);
        row_op(k, i, s, t, -(q / g), p / g);
      }
      for (std::int64_t j = k + 1; j < cols; ++j) {
        if (A(k, j) == 0) continue;
        std::int64_t s, t;
        const std::int64_t p = A(k, k), q = A(k, j);
        const std::int64_t g = xgcd(p, q, s, t);
        col_op(k, j, s, t, -(q / g), p / g);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (std::int64_t i = k + 1; i < rows; ++i) dirty = dirty || A(i, k) != 0;
      }
    }
  }

  std::vector<std::int64_t> z(at(cols), 0);
  for (std::int64_t i = 0; i < rows; ++i) {
    if (i < k) {
      const std::int64_t d = A(i, i);
      const std::int64_t g = std::gcd(d, n);
      if (b[at(i)] % g != 0) return std::nullopt;
      const std::int64_t ng = n / g;
      std::int64_t s, t;
      xgcd(d / g, ng, s, t);  // s·(d/g) ≡ 1 mod n/g
      z[at(i)] = md(((b[at(i)] / g) % ng) * (((s % ng) + ng) % ng));
    } else if (b[at(i)] != 0) {
      return std::nullopt;
    }
  }
  std::vector<std::int64_t> y(at(cols), 0);
  for (std::int64_t i = 0; i < cols; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < cols; ++j) acc = md(acc + V(i, j) * z[at(j)]);
    y[at(i)] = acc;
  }
  return y;
}

}  // namespace

double wrap_phase(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -M_PI) r += kTwoPi;
  return r;
}

ModulePtr phase_module(GroupPtr g) { return trivial_module(std::move(g), 1, Field::Real); }

// ---------------------------------------------------------------------------

CentralPair::CentralPair(MatrixGroupSpec ambient)
    : ambient_(std::move(ambient)), central_(GroupKind::UnitScalars, ambient_.size()) {
  const auto k = ambient_.kind();
  if (!(k == GroupKind::Unitary || k == GroupKind::UnitScalars ||
        (k == GroupKind::GeneralLinear && ambient_.field() == Field::Complex)))
    throw Unsupported("central pair: the scalar circle is supported inside unitary, complex general-linear or "
                      "unit-scalar groups only");
  // centrality spot check on the Lie basis, and the projection axioms
  const Mat z = from_phase(0.7);
  for (const Mat& b : ambient_.lie_basis()) {
    const double c = (z * b - b * z).norm();
    if (c > 1e-12) throw InvariantViolation("central pair: K is not central", c);
    const Mat p = project(b);
    if ((project(p) - p).norm() > 1e-12) throw InvariantViolation("central pair: projection not idempotent", 0.0);
  }
  const Mat i = cplx(0, 1) * Mat::Identity(ambient_.size(), ambient_.size());
  if ((project(i) - i).norm() > 1e-12) throw InvariantViolation("central pair: projection not identity on Lie(K)", 0.0);
}

double CentralPair::phase(const Mat& a) const {
  return wrap_phase(std::arg(a.trace() / static_cast<double>(ambient_.size())));
}

Mat CentralPair::from_phase(double theta) const {
  return std::polar(1.0, theta) * Mat::Identity(ambient_.size(), ambient_.size());
}

// ---------------------------------------------------------------------------

namespace {

// ∂u for degree 1: u_{gh}·(u_g·ᵍu_h)^{-1}.
std::vector<Mat> boundary_matrices(const CentralPair& pair, const GroupAction& action, const std::vector<Mat>& u) {
  const auto& G = action.group();
  const int m = G.order();
  std::vector<Mat> out;
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      out.push_back(u[at(G.mul(g, h))] * pair.ambient().inverse(u[at(g)] * action.apply(g, u[at(h)])));
  return out;
}

AbelianCochain phases_of(const CentralPair& pair, GroupPtr g, int degree, const std::vector<Mat>& values) {
  AbelianCochain out(phase_module(std::move(g)), degree);
  for (std::size_t t = 0; t < values.size(); ++t) out.values()(static_cast<Eigen::Index>(t)) = pair.phase(values[t]);
  return out;
}

}  // namespace

RelativeCocycle::RelativeCocycle(CentralPair pair, ActionPtr action, int degree, std::vector<Mat> values,
                                 bool normalized, const ToleranceConfig& tol)
    : pair_(std::move(pair)), action_(std::move(action)), degree_(degree), normalized_(normalized),
      values_(std::move(values)) {
  if (!action_) throw InputError("relative cocycle: null action");
  if (!(action_->target() == pair_.ambient()))
    throw InputError("relative cocycle: action target differs from the ambient group");
  if (pair_.ambient_is_abelian()) {
    if (degree_ < 1 || degree_ > 3) throw Unsupported("relative cocycles into the circle: degree must be 1..3");
  } else if (degree_ != 1) {
    throw Unsupported("relative cocycles into a nonabelian group have degree 1");
  }
  const std::int64_t count = ipow(group().order(), degree_);
  if (static_cast<std::int64_t>(values_.size()) != count)
    throw InputError("relative cocycle needs " + std::to_string(count) + " values");
  for (std::size_t t = 0; t < values_.size(); ++t) {
    const double r = pair_.ambient().membership_residual(values_[t]);
    if (r > tol.residual_tol)
      throw InputError("relative cocycle value " + std::to_string(t) + " is not in the ambient group (residual " +
                       std::to_string(r) + ")");
  }
  const double rel = relative_residual();
  if (rel > tol.residual_tol) throw InvariantViolation("relative cocycle: ∂u has values outside K", rel);
  if (normalized_) {
    const TupleIndex idx(group().order(), degree_);
    std::vector<int> tup(static_cast<std::size_t>(degree_), 0);
    const Mat id = Mat::Identity(pair_.ambient().size(), pair_.ambient().size());
    do {
      if (std::find(tup.begin(), tup.end(), group().identity()) != tup.end()) {
        const double r = (at(idx.encode(tup)) - id).norm();
        if (r > tol.residual_tol) throw InvariantViolation("relative cocycle is not normalized", r);
      }
    } while (idx.next(tup));
  }
}

double RelativeCocycle::relative_residual() const {
  if (pair_.ambient_is_abelian()) return 0.0;
  double worst = 0.0;
  for (const Mat& k : boundary_matrices(pair_, *action_, values_)) worst = std::max(worst, pair_.central_residual(k));
  return worst;
}

AbelianCochain k_coboundary(const AbelianCochain& phases) {
  require_phase_cochain(phases);
  return wrapped(differential(phases) * cplx(-1.0));
}

AbelianCochain rel_coboundary(const RelativeCocycle& u, const ToleranceConfig& tol) {
  const auto& pair = u.pair();
  AbelianCochain sigma(phase_module(u.action().group_ptr()), u.degree() + 1);
  if (u.degree() == 1) {
    const auto ks = boundary_matrices(pair, u.action(), u.values());
    for (std::size_t t = 0; t < ks.size(); ++t) {
      const double r = pair.central_residual(ks[t]);
      if (r > tol.residual_tol) throw InvariantViolation("∂u has values outside K", r);
      sigma.values()(static_cast<Eigen::Index>(t)) = pair.phase(ks[t]);
    }
  } else {
    sigma = k_coboundary(phases_of(pair, u.action().group_ptr(), u.degree(), u.values()));
  }
  const double res = max_wrapped(differential(sigma).values());
  if (res > tol.residual_tol) throw InvariantViolation("∂u fails the circle cocycle condition", res);
  return sigma;
}

std::optional<AbelianCochain> solve_circle_coboundary(const AbelianCochain& a, const ToleranceConfig& tol) {
  require_phase_cochain(a);
  const int deg = a.degree();
  if (deg < 1) throw InputError("solve_circle_coboundary: degree must be >= 1");
  const double cres = max_wrapped(differential(a).values());
  if (cres > tol.residual_tol) throw NotACocycle(cres);
  const auto& mod = a.module_ptr();
  const std::int64_t m = mod->group().order();
  const std::int64_t n = m * m;

  const AbelianCochain lift = wrapped(a);
  const AbelianCochain b = averaging_split_unchecked(lift);
  const AbelianCochain tau = lift - differential(b);  // values in (2π/m)ℤ

  const Mat d = differential_matrix(*mod, deg - 1);
  if (d.size() > 4'000'000)
    throw Unsupported("solve_circle_coboundary: integer system too large (" + std::to_string(d.rows()) + "x" +
                      std::to_string(d.cols()) + ")");
  std::vector<std::int64_t> dz(static_cast<std::size_t>(d.size()));
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      dz[at(i * d.cols() + j)] = static_cast<std::int64_t>(std::llround(d(i, j).real()));
  std::vector<std::int64_t> rhs(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    const double t = tau.values()(i).real() * static_cast<double>(m) / kTwoPi;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-6)
      throw InvariantViolation("solve_circle_coboundary: lattice reduction failed", std::abs(t - r));
    rhs[at(i)] = static_cast<std::int64_t>(r) * m;
  }
  const auto y = solve_mod(std::move(dz), d.rows(), d.cols(), std::move(rhs), n);
  if (!y) return std::nullopt;
  AbelianCochain xi = b;
  for (Eigen::Index i = 0; i < xi.values().size(); ++i)
    xi.values()(i) += kTwoPi * static_cast<double>((*y)[at(i)]) / static_cast<double>(n);
  const double check = max_wrapped((differential(xi) - lift).values());
  if (check > 1e-8) throw InvariantViolation("solve_circle_coboundary: solution check failed", check);
  return xi;
}

namespace {

void require_compatible(const RelativeCocycle& u, const RelativeCocycle& v) {
  if (u.degree() != v.degree() || !(u.pair().ambient() == v.pair().ambient()) ||
      u.group().table() != v.group().table() || u.action().is_trivial() != v.action().is_trivial())
    throw InputError("relative cocycles are for different groups, ambients, actions or degrees");
  if (!u.action().is_trivial())
    for (std::size_t g = 0; g < u.action().conjugators().size(); ++g)
      if ((u.action().conjugators()[g] - v.action().conjugators()[g]).norm() > 1e-14)
        throw InputError("relative cocycles are for different actions");
}

AbelianCochain rebase(const AbelianCochain& x, const ModulePtr& mod) { return AbelianCochain(mod, x.degree(), x.values()); }

}  // namespace

ComponentResult same_component(const RelativeCocycle& u, const RelativeCocycle& u_prime, const ToleranceConfig& tol) {
  require_compatible(u, u_prime);
  const auto sigma = rel_coboundary(u, tol);
  const auto sigma_p = rebase(rel_coboundary(u_prime, tol), sigma.module_ptr());
  const AbelianCochain a = wrapped(sigma_p - sigma);
  ComponentResult out{false, std::nullopt, std::nullopt};
  // ∂_K(x) = −δξ, so ∂u' = ∂u·∂_K(x) needs δξ ≡ σ − σ'.
  out.witness = solve_circle_coboundary(a * cplx(-1.0), tol);
  out.same = out.witness.has_value();

  const auto& G = u.group();
  if (u.degree() == 1 && G.is_abelian()) {
    const int m = G.order();
    double anti = 0.0;
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        anti = std::max(anti, std::abs(wrap_phase(a.values()(g * m + h).real() - a.values()(h * m + g).real())));
    out.antisymmetry = anti;
    if ((anti > 1e-8) == out.same)
      throw InvariantViolation("same_component: lattice solve disagrees with the antisymmetry invariant", anti);
  }
  return out;
}

RelativeCocycle fiber_transport(const RelativeCocycle& u, const AbelianCochain& phases, const ToleranceConfig& tol) {
  require_phase_cochain(phases);
  if (phases.degree() != u.degree() || phases.module().group().order() != u.group().order())
    throw InputError("fiber_transport: cochain degree or group does not match");
  std::vector<Mat> values;
  for (std::size_t t = 0; t < u.values().size(); ++t)
    values.push_back(u.values()[t] * std::polar(1.0, phases.values()(static_cast<Eigen::Index>(t)).real()));
  const bool norm = u.normalized() && phases.is_normalized(1e-15);
  RelativeCocycle out(u.pair(), u.action_ptr(), u.degree(), std::move(values), norm, tol);
  const auto before = rel_coboundary(u, tol);
  const auto after = rebase(rel_coboundary(out, tol), before.module_ptr());
  const auto shift = rebase(k_coboundary(phases), before.module_ptr());
  const double res = max_wrapped((after - before - shift).values());
  if (res > tol.residual_tol) throw InvariantViolation("fiber_transport: ∂(u·x) != ∂u·∂x", res);
  return out;
}

RelativeCocycle fiber_transport(const RelativeCocycle& u, const std::vector<Mat>& x, const ToleranceConfig& tol) {
  if (x.size() != u.values().size()) throw InputError("fiber_transport: cochain has the wrong number of values");
  AbelianCochain phases(phase_module(u.action().group_ptr()), u.degree());
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double r = u.pair().central_residual(x[t]);
    if (r > tol.residual_tol)
      throw InputError("fiber_transport: value " + std::to_string(t) + " is not in K (residual " + std::to_string(r) +
                       ")");
    phases.values()(static_cast<Eigen::Index>(t)) = u.pair().phase(x[t]);
  }
  return fiber_transport(u, phases, tol);
}

// ---------------------------------------------------------------------------

std::vector<Mat> apply_relative_retraction(const RelativeCocycle& u_prime, const RelativeRetraction& r) {
  std::vector<Mat> out;
  for (std::size_t t = 0; t < u_prime.values().size(); ++t)
    out.push_back(u_prime.values()[t] * std::polar(1.0, r.w.values()(static_cast<Eigen::Index>(t)).real()));
  if (r.v) {
    const Mat v_inv = u_prime.pair().ambient().inverse(*r.v);
    for (std::size_t g = 0; g < out.size(); ++g)
      out[g] = *r.v * out[g] * u_prime.action().apply(static_cast<int>(g), v_inv);
  }
  if (r.v_phases) {
    const auto dv = k_coboundary(*r.v_phases);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] *= std::polar(1.0, dv.values()(static_cast<Eigen::Index>(t)).real());
  }
  return out;
}

RelativeRetraction relative_retraction(const RelativeCocycle& u, const RelativeCocycle& u_prime,
                                       const ToleranceConfig& tol) {
  require_compatible(u, u_prime);
  const auto& pair = u.pair();
  const auto pm = phase_module(u.action().group_ptr());

  // Stage 1: δω ≡ σ' − σ puts u'·e^{iω} in the fiber of ∂u.
  AbelianCochain sigma(pm, 0), sigma_p(pm, 0);
  try {
    sigma = rebase(rel_coboundary(u, tol), pm);
    sigma_p = rebase(rel_coboundary(u_prime, tol), pm);
  } catch (const InvariantViolation& e) {
    throw NoConvergence("relative_retraction stage 1", e.what());
  }
  const AbelianCochain a = wrapped(sigma_p - sigma);
  AbelianCochain omega = averaging_split_unchecked(a);
  if (max_wrapped((differential(omega) - a).values()) > tol.residual_tol) {
    auto exact = solve_circle_coboundary(a, tol);
    if (!exact)
      throw NoConvergence("relative_retraction stage 1",
                          "u and u' lie in different components (their coboundaries are not cohomologous)");
    omega = rebase(*exact, pm);
  }
  std::vector<Mat> moved;
  for (std::size_t t = 0; t < u_prime.values().size(); ++t)
    moved.push_back(u_prime.values()[t] * std::polar(1.0, omega.values()(static_cast<Eigen::Index>(t)).real()));

  const double dist = cocycle_distance(u.values(), moved);
  if (dist > tol.locality_radius)
    throw OutOfNeighborhood("relative_retraction stage 2", "distance " + std::to_string(dist) +
                                                               " within the fiber exceeds the locality radius " +
                                                               std::to_string(tol.locality_radius));

  RelativeRetraction out{std::nullopt, std::nullopt, omega, 0, 0.0};
  // Stage 2: conjugate within the fiber.
  if (!pair.ambient_is_abelian()) {
    try {
      const auto r = detail::retract_core(u.action(), u.values(), moved, tol);
      out.v = r.v;
      out.iterations = r.iterations;
    } catch (const NoConvergence& e) {
      throw NoConvergence("relative_retraction stage 2", e.what());
    }
  } else {
    AbelianCochain zeta(pm, u.degree());
    for (std::size_t t = 0; t < moved.size(); ++t)
      zeta.values()(static_cast<Eigen::Index>(t)) = wrap_phase(pair.phase(u.values()[t]) - pair.phase(moved[t]));
    // (u'·w)·∂_K(v) = u needs δν ≡ −ζ.
    const AbelianCochain target = zeta * cplx(-1.0);
    AbelianCochain nu(pm, u.degree() - 1);
    if (u.degree() > 1 || target.norm() > 0) {
      if (u.degree() > 1) nu = averaging_split_unchecked(target);
      if (max_wrapped((differential(nu) - target).values()) > tol.residual_tol) {
        auto exact = solve_circle_coboundary(target, tol);
        if (!exact)
          throw NoConvergence("relative_retraction stage 2", "u and u'·w are not cohomologous within the fiber");
        nu = rebase(*exact, pm);
      }
    }
    out.v_phases = nu;
  }
  out.residual = cocycle_distance(apply_relative_retraction(u_prime, out), u.values());
  if (out.residual > tol.residual_tol)
    throw NoConvergence("relative_retraction stage 2",
                        "composite identity fails (residual " + std::to_string(out.residual) + ")");
  return out;
}

// ---------------------------------------------------------------------------

ProjectiveRepReport projective_rep_check(const FiniteGroup& G, const std::vector<Mat>& values,
                                         const ToleranceConfig& tol) {
  const int m = G.order();
  if (static_cast<int>(values.size()) != m) throw InputError("projective_rep_check: need one value per element");
  const int n = static_cast<int>(values.front().rows());
  const MatrixGroupSpec un(GroupKind::Unitary, n), k(GroupKind::UnitScalars, n);
  ProjectiveRepReport rep{true, std::vector<std::vector<double>>(static_cast<std::size_t>(m),
                                                                 std::vector<double>(static_cast<std::size_t>(m))),
                          {}};
  for (int g = 0; g < m; ++g) {
    const double r = un.membership_residual(values[at(g)]);
    if (r > tol.residual_tol) rep.violations.push_back({g, -1, "not unitary", r});
  }
  const double norm_res = (values[at(G.identity())] - Mat::Identity(n, n)).norm();
  if (norm_res > tol.residual_tol) rep.violations.push_back({G.identity(), -1, "not normalized", norm_res});

  std::vector<std::vector<cplx>> sig(static_cast<std::size_t>(m), std::vector<cplx>(static_cast<std::size_t>(m)));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      const Mat prod = values[at(g)] * values[at(h)];
      const Mat kk = values[at(G.mul(g, h))] * prod.inverse();
      const double cr = k.membership_residual(kk);
      if (!(cr <= tol.residual_tol)) rep.violations.push_back({g, h, "multiplier not a unit scalar", cr});
      const cplx lam = std::polar(1.0, std::arg(kk.trace() / static_cast<double>(n)));
      sig[at(g)][at(h)] = lam;
      rep.sigma[at(g)][at(h)] = wrap_phase(std::arg(lam));
      const double r1 = matnum::spectral_norm(values[at(G.mul(g, h))] - lam * prod);
      if (r1 > tol.residual_tol) rep.violations.push_back({g, h, "phi(gh) != sigma(g,h) phi(g) phi(h)", r1});
    }
  for (int g = 0; g < m; ++g) {
    const int gi = G.inv(g);
    const double r2 = matnum::spectral_norm(values[at(g)].adjoint() - sig[at(g)][at(gi)] * values[at(gi)]);
    if (r2 > tol.residual_tol) rep.violations.push_back({g, gi, "phi(g)* != sigma(g,g^-1) phi(g^-1)", r2});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace rigid
