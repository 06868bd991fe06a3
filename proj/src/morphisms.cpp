#include "rigid/morphisms.hpp"

#include <algorithm>
#include <cmath>

#include "rigid/errors.hpp"
#include "rigid/random.hpp"

namespace rigid {

namespace {

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_same_spaces(const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
  if (phi.domain().structure() != psi.domain().structure() ||
      phi.codomain().structure() != psi.codomain().structure())
    throw InputError("morphisms have different domains or codomains");
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix, bool cstar)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), cstar_(cstar) {
  if (!domain_ || !codomain_) throw InputError("morphism: null algebra");
  if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim())
    throw InputError("morphism matrix must be dim(codomain) x dim(domain)");
  if (cstar_ && (!domain_->has_star() || !codomain_->has_star()))
    throw InputError("a cstar morphism needs stars on both algebras");
}

AlgebraMorphism AlgebraMorphism::from_images(AlgebraPtr domain, AlgebraPtr codomain, const std::vector<Mat>& images,
                                             bool cstar) {
  if (static_cast<int>(images.size()) != domain->dim()) throw InputError("need one image per domain basis element");
  Mat m(codomain->dim(), domain->dim());
  for (int i = 0; i < domain->dim(); ++i) {
    m.col(i) = codomain->coordinates(images[at(i)]);
    const double back = max_abs(codomain->realize(m.col(i)) - images[at(i)]);
    if (back > 1e-12) throw InputError("image " + std::to_string(i) + " does not lie in the codomain");
  }
  return AlgebraMorphism(std::move(domain), std::move(codomain), std::move(m), cstar);
}

Mat AlgebraMorphism::image(int i) const { return codomain_->realize(matrix_.col(i)); }

Mat AlgebraMorphism::image_of(const Vec& a) const { return codomain_->realize(matrix_ * a); }

std::vector<Mat> AlgebraMorphism::images() const {
  std::vector<Mat> out;
  for (int i = 0; i < domain_->dim(); ++i) out.push_back(image(i));
  return out;
}

MorphismReport check_morphism(const AlgebraMorphism& phi, const ToleranceConfig& tol) {
  const auto& a = phi.domain();
  const auto& b = phi.codomain();
  MorphismReport r{};
  r.unital = max_abs(phi.image_of(a.unit()) - b.realize(b.unit()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      r.multiplicative = std::max(
          r.multiplicative, max_abs(phi.image_of(a.multiply(a.basis(i), a.basis(j))) - phi.image(i) * phi.image(j)));
  bool ok = r.unital <= tol.residual_tol && r.multiplicative <= tol.residual_tol;
  if (phi.cstar()) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
      s = std::max(s, (phi.matrix() * a.star(a.basis(i)) - b.star(phi.matrix().col(i))).cwiseAbs().maxCoeff());
    r.star = s;
    ok = ok && s <= tol.residual_tol;
  }
  r.ok = ok;
  return r;
}

double morphism_distance(const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
  require_same_spaces(phi, psi);
  double d = 0.0;
  for (int i = 0; i < phi.domain().dim(); ++i) {
    const double scale = matnum::spectral_norm(phi.domain().realize(phi.domain().basis(i)));
    d = std::max(d, matnum::spectral_norm(phi.image(i) - psi.image(i)) / scale);
  }
  return d;
}

BimodulePtr induced_bimodule(const AlgebraMorphism& phi) {
  const auto& b = phi.codomain();
  std::vector<Mat> l, r;
  for (int i = 0; i < phi.domain().dim(); ++i) {
    l.push_back(b.left_regular(phi.matrix().col(i)));
    r.push_back(b.right_regular(phi.matrix().col(i)));
  }
  std::optional<Mat> star;
  if (phi.cstar()) star = b.star_matrix();
  return std::make_shared<Bimodule>(phi.domain_ptr(), std::move(l), std::move(r), std::move(star));
}

Mat intertwiner(const AlgebraMorphism& phi, const AlgebraMorphism& psi, const SeparabilityIdempotent& e) {
  require_same_spaces(phi, psi);
  const int n = phi.codomain().realization_size();
  Mat w = Mat::Zero(n, n);
  for (const auto& [x, y] : e.terms()) w += psi.image_of(x) * phi.image_of(y);
  return w;
}

double intertwining_residual(const AlgebraMorphism& phi, const AlgebraMorphism& psi, const Mat& w) {
  double r = 0.0;
  for (int i = 0; i < phi.domain().dim(); ++i) r = std::max(r, matnum::spectral_norm(psi.image(i) * w - w * phi.image(i)));
  return r;
}

MorphismConjugation conjugate_nearby_morphisms(const AlgebraMorphism& phi, const AlgebraMorphism& psi,
                                               ConjugationMode mode, const ToleranceConfig& tol) {
  require_same_spaces(phi, psi);
  const auto e = separability_idempotent(phi.domain_ptr());
  MorphismConjugation out;
  out.w = intertwiner(phi, psi, e);
  out.intertwining = intertwining_residual(phi, psi, out.w);

  const Eigen::VectorXd s = matnum::singular_values(out.w);
  if (s(0) == 0.0 || s(s.size() - 1) < 1e-8 * s(0))
    throw OutOfNeighborhood("conjugate_nearby_morphisms", "outside local neighborhood (intertwiner is singular)");

  if (mode == ConjugationMode::CStar) {
    if (!phi.cstar() || !psi.cstar()) throw InputError("cstar conjugation needs morphisms flagged cstar");
    for (const auto* m : {&phi, &psi}) {
      const auto rep = check_morphism(*m, tol);
      if (*rep.star > tol.residual_tol) throw InputError("cstar conjugation: a morphism does not preserve the star");
    }
    const Mat ww = out.w.adjoint() * out.w;
    double c = 0.0;
    for (int i = 0; i < phi.domain().dim(); ++i) c = std::max(c, matnum::spectral_norm(matnum::commutator(ww, phi.image(i))));
    out.commutator = c;
    if (c > 1e-10 * std::max(1.0, matnum::spectral_norm(ww)))
      throw InvariantViolation("cstar conjugation: w*w does not commute with the image of phi", c);
    out.conjugator = matnum::polar_unitary(out.w, tol);
  } else {
    out.conjugator = out.w;
  }
  const Mat inv = out.conjugator.inverse();
  out.recovery = 0.0;
  for (int i = 0; i < phi.domain().dim(); ++i)
    out.recovery = std::max(out.recovery, matnum::spectral_norm(out.conjugator * phi.image(i) * inv - psi.image(i)));
  return out;
}

TangentReport tangent_cocycle_check(const AlgebraMorphism& phi, const std::vector<Mat>& direction, bool cstar,
                                    double tol) {
  if (static_cast<int>(direction.size()) != phi.domain().dim())
    throw InputError("tangent direction needs one matrix per domain basis element");
  const AlgebraMorphism flagged(phi.domain_ptr(), phi.codomain_ptr(), phi.matrix(), cstar);
  const auto bm = induced_bimodule(flagged);
  HochschildCochain f(bm, 1);
  for (int i = 0; i < phi.domain().dim(); ++i) f.at(i) = phi.codomain().coordinates(direction[at(i)]);
  TangentReport r{hochschild_differential(f).norm(), std::nullopt, false};
  r.tangent = r.residual <= tol;
  if (cstar) {
    r.self_adjoint = (cochain_star(f) - f).norm();
    r.tangent = r.tangent && *r.self_adjoint <= tol;
  }
  return r;
}

// ---------------------------------------------------------------------------

DualNumbersReport dual_numbers_demo(int kmax) {
  const auto a = algebras::dual_numbers();
  const auto b = algebras::matrix(2, Field::Real);
  const Mat id = Mat::Identity(2, 2);
  Mat e12 = Mat::Zero(2, 2);
  e12(0, 1) = 1.0;
  const auto phi_at = [&](double r) -> AlgebraMorphism {
    return AlgebraMorphism::from_images(a, b, {id, Mat(r * e12)});
  };
  const auto base = phi_at(1.0);

  DualNumbersReport rep{{}, true, false, true};
  for (int k = 0; k <= kmax; ++k) {
    const double r = std::ldexp(1.0, -k);
    const auto phi = phi_at(r);
    Mat c = Mat::Identity(2, 2);
    c(0, 0) = r;
    Mat cinv = Mat::Identity(2, 2);
    cinv(0, 0) = 1.0 / r;
    const Mat moved = c * base.image(1) * cinv;
    const auto check = check_morphism(phi);
    rep.steps.push_back({k, r, matnum::max_entry_norm(phi.image(1)), matnum::max_entry_norm(moved - phi.image(1)),
                         std::max(check.unital, check.multiplicative)});
    if (k > 0 && !(rep.steps.back().distance < rep.steps[at(k - 1)].distance)) rep.strictly_decreasing = false;
    if (matnum::numerical_rank(phi.image(1)) != 1) rep.limit_outside_orbit = false;
  }
  const auto degenerate = phi_at(0.0);
  const auto dc = check_morphism(degenerate);
  rep.degenerate_is_morphism = dc.ok;
  if (matnum::numerical_rank(degenerate.image(1)) != 0) rep.limit_outside_orbit = false;
  return rep;
}

SemisimpleReport semisimple_orbit_demo(std::mt19937_64& rng, int samples) {
  const auto a = algebras::diagonal(2);
  const auto b = algebras::matrix(2);
  const Mat id = Mat::Identity(2, 2);
  auto projection = [](int rank) {
    Mat p = Mat::Zero(2, 2);
    for (int i = 0; i < rank; ++i) p(i, i) = 1.0;
    return p;
  };
  auto morphism = [&](const Mat& p) { return AlgebraMorphism::from_images(a, b, {p, Mat(id - p)}, true); };
  auto rank_of = [](const Mat& p) { return static_cast<int>(matnum::numerical_rank(p)); };

  SemisimpleReport rep{{}, 0, true};
  for (int r = 0; r <= 2; ++r) rep.classes.push_back({r, 0, true, 0.0});

  for (int r = 0; r <= 2; ++r) {
    const Mat pr = projection(r);
    const Mat u = random::unitary(2, Field::Complex, rng);
    const Mat x = random::skew_hermitian(2, 1.0, rng);
    const Mat limit = u * pr * u.adjoint();
    bool closed = check_morphism(morphism(limit)).ok && rank_of(limit) == r;
    for (int k = 0; k <= 30; ++k) {
      const Mat uk = u * matnum::mat_exp(std::ldexp(1.0, -k) * x);
      const Mat pk = uk * pr * uk.adjoint();
      closed = closed && rank_of(pk) == r && check_morphism(morphism(pk)).ok;
    }
    rep.classes[at(r)].closed = closed;
  }

  for (int s = 0; s < samples; ++s) {
    const int r = s % 3;
    const Mat v = random::unitary(2, Field::Complex, rng);
    const Mat p = v * projection(r) * v.adjoint();
    if (!check_morphism(morphism(p)).ok) throw InvariantViolation("semisimple demo: sample is not a morphism", 1.0);
    const int found = rank_of(p);
    // unitary taking p to the diagonal representative
    Eigen::SelfAdjointEigenSolver<Mat> es(p);
    const Mat w = es.eigenvectors().rowwise().reverse();
    auto& cls = rep.classes[at(found)];
    ++cls.samples;
    cls.conjugation_residual = std::max(cls.conjugation_residual, max_abs(w.adjoint() * p * w - projection(found)));
  }
  for (const auto& c : rep.classes) {
    if (c.samples > 0) ++rep.orbit_count;
    rep.all_closed = rep.all_closed && c.closed;
  }
  return rep;
}

}  // namespace rigid
