// Acceptance runner: one PASS/FAIL line per criterion, with measured runtime.
// Exit status is nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "fixtures.hpp"
#include "rigid/abelian.hpp"
#include "rigid/errors.hpp"
#include "rigid/hochschild.hpp"
#include "rigid/matnum.hpp"
#include "rigid/morphisms.hpp"
#include "rigid/nonabelian.hpp"
#include "rigid/random.hpp"
#include "rigid/relative.hpp"

using namespace rigid;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %s: %s [%s; %.2f s of %.0f s]\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs,
              limit_s);
  std::fflush(stdout);
}

std::vector<GroupPtr> small_groups() {
  return {groups::cyclic(2), groups::cyclic(3), groups::klein_four(), groups::symmetric(3)};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Mat unit_matrix(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

AlgebraMorphism conjugated(const AlgebraMorphism& phi, const Mat& u) {
  std::vector<Mat> im;
  for (const Mat& p : phi.images()) im.push_back(u * p * u.inverse());
  return AlgebraMorphism::from_images(phi.domain_ptr(), phi.codomain_ptr(), im, phi.cstar());
}

AlgebraMorphism c3_m4() {
  Mat p3 = Mat::Zero(4, 4);
  p3(2, 2) = p3(3, 3) = 1.0;
  return AlgebraMorphism::from_images(algebras::diagonal(3), algebras::matrix(4),
                                      {unit_matrix(4, 0, 0), unit_matrix(4, 1, 1), p3}, true);
}

Outcome ac1() {
  std::mt19937_64 rng(101);
  int checked = 0, vanishing = 0;
  for (const auto& g : small_groups())
    for (int m = 0; m < 5; ++m) {
      const auto mod = random::module(g, 1 + m % 4, m % 2 ? Field::Complex : Field::Real, rng);
      for (int n = 1; n <= 3; ++n) {
        const auto d = cohomology_dims(*mod, n);
        ++checked;
        if (d.dim_h == 0 && d.dim_z == d.dim_b) ++vanishing;
      }
    }
  return {vanishing == checked, std::to_string(vanishing) + "/" + std::to_string(checked) + " with dim H^n = 0"};
}

Outcome ac2() {
  std::mt19937_64 rng(102);
  double worst = 0.0;
  int bound_ok = 0, trials = 0;
  for (const auto& g : small_groups()) {
    std::vector<ModulePtr> mods;
    for (int m = 0; m < 5; ++m) mods.push_back(random::module(g, 1 + m % 4, m % 2 ? Field::Complex : Field::Real, rng));
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 100; ++t) {
        const auto& mod = mods[static_cast<std::size_t>(t % 5)];
        const auto a = differential(random::cochain(mod, n - 1, rng));
        const auto b = averaging_split(a);
        worst = std::max(worst, (differential(b) - a).norm());
        if (b.norm() <= mod->action_norm() * a.norm() * (1 + 1e-6)) ++bound_ok;
        ++trials;
      }
  }
  return {worst <= 1e-10 && bound_ok == trials,
          "worst |delta b - a| " + fmt(worst) + ", bound held " + std::to_string(bound_ok) + "/" + std::to_string(trials)};
}

Outcome ac3() {
  std::mt19937_64 rng(103);
  const auto s3 = groups::symmetric(3);
  const auto triv = fixtures::trivial_action(s3, GroupKind::Unitary, 2);
  const NonabelianCocycle s3_base(triv, fixtures::s3_standard_rep(*s3));
  const auto conj = fixtures::z2_sigma_x_action();
  const NonabelianCocycle z2_base(conj, fixtures::z2_sigma_x_base());

  int ok = 0, total = 0, max_steps = 0;
  double worst = 0.0;
  for (const auto* u : {&s3_base, &z2_base})
    for (int t = 0; t < 50; ++t) {
      const double size = random::uniform(0.01, 0.1, rng);
      std::vector<Mat> moved;
      if (t % 2 == 0) {
        moved = chart_to_cocycle(*u, random::tangent_cocycle(*u, size, rng)).values;
      } else {
        moved = random::conjugate(u->action(), u->values(), u->target().random_element(size, rng));
      }
      ++total;
      try {
        const auto r = conjugation_retraction(*u, NonabelianCocycle(u->action_ptr(), moved));
        worst = std::max(worst, r.residual);
        max_steps = std::max(max_steps, r.iterations);
        if (r.residual <= 1e-8 && r.iterations <= 12) ++ok;
      } catch (const Error&) {
      }
    }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " retracted, worst residual " + fmt(worst) +
                           ", max steps " + std::to_string(max_steps)};
}

Outcome ac4() {
  const auto su = cli::h1_count(2, GroupKind::SpecialUnitary, 2, 200, 104);
  const auto u = cli::h1_count(2, GroupKind::Unitary, 2, 200, 105);
  const bool pass = su.classes == 2 && su.expected == 2 && su.aligned == su.samples &&
                    su.separated_pairs == su.representative_pairs && u.classes == 3 && u.expected == 3 &&
                    u.aligned == u.samples && u.separated_pairs == u.representative_pairs;
  return {pass, "SU(2): " + std::to_string(su.classes) + " classes, " + std::to_string(su.aligned) +
                    "/200 aligned; U(2): " + std::to_string(u.classes) + " classes, " + std::to_string(u.aligned) +
                    "/200 aligned"};
}

Outcome ac5() {
  const auto p = cli::pauli_demo();
  // every genuine representation V4 -> U(2): a sum of two characters, conjugated
  std::mt19937_64 rng(106);
  const auto v4 = groups::klein_four();
  const MatrixGroupSpec u2(GroupKind::Unitary, 2);
  const auto action = std::make_shared<GroupAction>(v4, u2);
  const RelativeCocycle pauli(CentralPair(u2), action, 1, cli::pauli_values(), true);
  int separated = 0, genuine_ok = 0, total = 0;
  for (int c1 = 0; c1 < 4; ++c1)
    for (int c2 = 0; c2 < 4; ++c2) {
      const Mat v = random::unitary(2, Field::Complex, rng);
      std::vector<Mat> vals;
      for (int g = 0; g < 4; ++g) {
        // characters of Z2 x Z2 = {e, x, z, xz} indexed by bit pairs
        const auto chi = [&](int c) { return (std::popcount(static_cast<unsigned>(c & g)) % 2) ? -1.0 : 1.0; };
        Mat d = Mat::Zero(2, 2);
        d(0, 0) = chi(c1);
        d(1, 1) = chi(c2);
        vals.push_back(v * d * v.adjoint());
      }
      ++total;
      const RelativeCocycle genuine(CentralPair(u2), action, 1, vals);
      if (!same_component(pauli, genuine).same) ++separated;
      if (projective_rep_check(*v4, vals).ok) ++genuine_ok;
    }
  const bool pass = p.circle_residual <= 1e-12 && p.commutator_ratio == cplx(-1.0, 0.0) && !p.same_as_genuine &&
                    separated == total && p.projective_ok && genuine_ok == total;
  return {pass, "circle residual " + fmt(p.circle_residual) + ", ratio " +
                    std::to_string(static_cast<int>(p.commutator_ratio.real())) + ", separated from " +
                    std::to_string(separated) + "/" + std::to_string(total) + " genuine reps"};
}

Outcome ac6() {
  std::mt19937_64 rng(107);
  const auto v4 = groups::klein_four();
  const MatrixGroupSpec u2(GroupKind::Unitary, 2);
  const auto action = std::make_shared<GroupAction>(v4, u2);
  const RelativeCocycle p(CentralPair(u2), action, 1, cli::pauli_values(), true);
  int ok = 0;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Mat w = u2.random_element(random::uniform(0.0, 0.1, rng), rng);
    const RelativeCocycle c(p.pair(), action, 1, random::conjugate(*action, p.values(), w));
    AbelianCochain phases(phase_module(v4), 1);
    for (int g = 0; g < 4; ++g) phases.at(g)(0) = random::uniform(-0.1, 0.1, rng);
    const auto up = fiber_transport(c, phases);
    try {
      const auto r = relative_retraction(p, up);
      const double composite = cocycle_distance(apply_relative_retraction(up, r), p.values());
      worst = std::max({worst, r.residual, composite});
      if (r.residual <= 1e-8 && composite <= 1e-8) ++ok;
    } catch (const Error&) {
    }
  }
  return {ok == 50, std::to_string(ok) + "/50 recovered, worst composite residual " + fmt(worst)};
}

Outcome ac7() {
  std::mt19937_64 rng(108);
  const std::vector<std::pair<std::string, AlgebraPtr>> algs{
      {"C^2", algebras::diagonal(2)},
      {"M2", algebras::matrix(2)},
      {"M2+C", algebras::product(*algebras::matrix(2), *algebras::diagonal(1))},
      {"CZ2", algebras::group_algebra(groups::cyclic(2))},
      {"CZ3", algebras::group_algebra(groups::cyclic(3))}};
  double dd = 0.0, split = 0.0;
  bool h1_zero = true;
  for (const auto& [name, a] : algs) {
    const auto e = bimodules::regular(a);
    for (int n = 0; n <= 2; ++n) {
      const auto f = random::hochschild_cochain(e, n, rng);
      dd = std::max(dd, hochschild_differential(hochschild_differential(f)).norm());
    }
    h1_zero = h1_zero && hochschild_cohomology_dims(*e, 1).dim_h == 0;
    const auto idem = separability_idempotent(a);
    for (int t = 0; t < 100; ++t) {
      const auto c = random::hochschild_cochain(e, t % 2, rng);
      const auto cocycle = hochschild_differential(c);
      const auto s = hochschild_split(cocycle, idem);
      split = std::max(split, (hochschild_differential(s.b) - cocycle).norm());
    }
  }

  // the derivation eps d/d eps of the dual numbers: a cocycle that is not inner
  const auto dn = bimodules::regular(algebras::dual_numbers());
  HochschildCochain der(dn, 1);
  der.at(1) = algebras::dual_numbers()->basis(1);
  const double der_residual = hochschild_differential(der).norm();
  const auto inner = matnum::least_squares_solve(hochschild_differential_matrix(*dn, 0), der.values());
  const bool non_inner = der_residual == 0.0 && inner.residual > 0.5;
  const auto dn_dims = hochschild_cohomology_dims(*dn, 1);

  // (1/|G|) sum_g g (x) g^{-1}, entry by entry
  bool formula = true;
  for (int k : {2, 3}) {
    const auto g = groups::cyclic(k);
    const Mat t = separability_idempotent(algebras::group_algebra(g)).tensor();
    Mat expect = Mat::Zero(k, k);
    for (int x = 0; x < k; ++x) expect(x, g->inv(x)) = 1.0 / k;
    formula = formula && t == expect;
  }
  const bool pass = dd <= 1e-12 && split <= 1e-10 && h1_zero && dn_dims.dim_h >= 1 && non_inner && formula;
  return {pass, "|delta delta| " + fmt(dd) + ", split residual " + fmt(split) + ", H^1 = 0 on all five: " +
                    (h1_zero ? "yes" : "no") + ", dual numbers H^1 = " + std::to_string(dn_dims.dim_h) +
                    ", group idempotent exact: " + (formula ? "yes" : "no")};
}

Outcome ac8() {
  std::mt19937_64 rng(109);
  const auto base = c3_m4();
  const auto e = separability_idempotent(base.domain_ptr());
  double inter = 0.0, recovery = 0.0;
  int ratio_ok = 0;
  for (int t = 0; t < 50; ++t) {
    const auto far_a = conjugated(base, random::unitary(4, Field::Complex, rng));
    const auto far_b = conjugated(base, random::unitary(4, Field::Complex, rng));
    inter = std::max(inter, intertwining_residual(far_a, far_b, intertwiner(far_a, far_b, e)));

    const Mat x = random::skew_hermitian(4, random::uniform(1e-3, 0.2, rng), rng);
    const auto psi = conjugated(base, matnum::mat_exp(x));
    const auto c = conjugate_nearby_morphisms(base, psi, ConjugationMode::CStar);
    inter = std::max(inter, c.intertwining);
    recovery = std::max(recovery, c.recovery);
    const double unitarity = (c.conjugator.adjoint() * c.conjugator - Mat::Identity(4, 4)).norm();
    if (unitarity <= 1e-10 &&
        matnum::spectral_norm(c.w - Mat::Identity(4, 4)) <= 2 * morphism_distance(base, psi)) ++ratio_ok;
  }
  const auto c2 = algebras::diagonal(2);
  const auto phi = AlgebraMorphism::from_images(c2, algebras::matrix(2), {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)}, true);
  const auto psi = AlgebraMorphism::from_images(c2, algebras::matrix(2), {unit_matrix(2, 1, 1), unit_matrix(2, 0, 0)}, true);
  const bool far_zero = intertwiner(phi, psi, separability_idempotent(c2)) == Mat::Zero(2, 2);
  const bool pass = inter <= 1e-11 && recovery <= 1e-8 && ratio_ok == 50 && far_zero;
  return {pass, "intertwining " + fmt(inter) + ", recovery " + fmt(recovery) + ", |w-1| <= 2 dist in " +
                    std::to_string(ratio_ok) + "/50, far pair w = 0: " + (far_zero ? "yes" : "no")};
}

Outcome ac9() {
  std::mt19937_64 rng(110);
  const auto base = c3_m4();
  int inner_ok = 0, fd_ok = 0, rejected = 0;
  for (int t = 0; t < 20; ++t) {
    const Mat x = random::skew_hermitian(4, 1.0, rng);
    std::vector<Mat> inner, fd, junk;
    const double step = 1e-4;
    const Mat ut = matnum::mat_exp(step * x);
    for (const Mat& p : base.images()) {
      inner.push_back(x * p - p * x);
      fd.push_back((ut * p * ut.adjoint() - p) / step);
      junk.push_back(random::gaussian(4, 4, Field::Complex, rng));
    }
    const auto ri = tangent_cocycle_check(base, inner, true, 1e-12);
    if (ri.tangent && ri.residual <= 1e-13) ++inner_ok;
    if (tangent_cocycle_check(base, fd, true, 1e-3).tangent) ++fd_ok;
    if (!tangent_cocycle_check(base, junk, false, 1e-3).tangent) ++rejected;
  }

  // Z^1 = B^1 for semisimple domains
  const auto cz3 = algebras::group_algebra(groups::cyclic(3));
  std::vector<Mat> perm;
  for (int g = 0; g < 3; ++g) perm.push_back(cz3->realize(cz3->basis(g)));
  const auto m2 = algebras::matrix(2);
  const std::vector<AlgebraMorphism> phis{
      base,
      AlgebraMorphism::from_images(algebras::diagonal(2), m2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)}, true),
      AlgebraMorphism(m2, m2, Mat::Identity(4, 4), true),
      AlgebraMorphism::from_images(cz3, algebras::matrix(3), perm, true)};
  int zb = 0;
  for (const auto& phi : phis) {
    const auto d = hochschild_cohomology_dims(*induced_bimodule(phi), 1);
    if (d.dim_z == d.dim_b) ++zb;
  }
  const bool pass = inner_ok == 20 && fd_ok == 20 && rejected == 20 && zb == static_cast<int>(phis.size());
  return {pass, "inner " + std::to_string(inner_ok) + "/20, finite differences " + std::to_string(fd_ok) +
                    "/20, random rejected " + std::to_string(rejected) + "/20, Z^1 = B^1 in " + std::to_string(zb) +
                    "/" + std::to_string(phis.size())};
}

Outcome ac10() {
  const auto rep = dual_numbers_demo(20);
  bool exact = rep.steps.size() == 21 && rep.strictly_decreasing;
  for (const auto& s : rep.steps) exact = exact && s.distance == std::ldexp(1.0, -s.k);
  // diag(r/s, 1) phi_s(eps) diag(s/r, 1) = phi_r(eps) for every pair of members
  bool mutual = true;
  for (int k = 0; k <= 20; ++k)
    for (int l = 0; l <= 20; ++l) {
      const double r = std::ldexp(1.0, -k), s = std::ldexp(1.0, -l);
      Mat c = Mat::Identity(2, 2), ci = Mat::Identity(2, 2);
      c(0, 0) = r / s;
      ci(0, 0) = s / r;
      mutual = mutual && (c * (s * unit_matrix(2, 0, 1)) * ci - r * unit_matrix(2, 0, 1)).norm() == 0.0;
    }
  std::mt19937_64 rng(111);
  const auto ss = semisimple_orbit_demo(rng);
  const bool pass = exact && mutual && rep.degenerate_is_morphism && rep.limit_outside_orbit &&
                    ss.orbit_count == 3 && ss.all_closed;
  return {pass, std::string("distances 2^-k exact: ") + (exact ? "yes" : "no") + ", members mutually conjugate: " +
                    (mutual ? "yes" : "no") + ", semisimple orbits " + std::to_string(ss.orbit_count) +
                    (ss.all_closed ? " (closed)" : " (not closed)")};
}

}  // namespace

int main() {
  criterion("AC1", "vector-coefficient vanishing", 10, ac1);
  criterion("AC2", "averaging splitting identity and bound", 30, ac2);
  criterion("AC3", "discreteness of H^1 by retraction", 60, ac3);
  criterion("AC4", "class counts H^1(Z/2, SU(2)) = 2, H^1(Z/2, U(2)) = 3", 60, ac4);
  criterion("AC5", "Pauli projective representation", 1, ac5);
  criterion("AC6", "relative retraction on the Pauli fiber", 30, ac6);
  criterion("AC7", "Hochschild differential, splitting and H^1", 30, ac7);
  criterion("AC8", "nearby morphism conjugation", 10, ac8);
  criterion("AC9", "tangent identification", 10, ac9);
  criterion("AC10", "non-semisimple dichotomy", 5, ac10);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
