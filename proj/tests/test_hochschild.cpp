#include <random>

#include "doctest.h"
#include "rigid/abelian.hpp"
#include "rigid/errors.hpp"
#include "rigid/hochschild.hpp"
#include "rigid/random.hpp"

using namespace rigid;

namespace {

std::vector<Mat> images(const FinDimAlgebra& a) {
  std::vector<Mat> out;
  for (int i = 0; i < a.dim(); ++i) out.push_back(a.realize(a.basis(i)));
  return out;
}

Mat unit_matrix(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

// [x, .] on M_n as a 1-cochain on the regular bimodule.
HochschildCochain inner_derivation(const BimodulePtr& e, const Mat& x) {
  const auto& a = e->algebra();
  HochschildCochain d(e, 1);
  for (int i = 0; i < a.dim(); ++i) {
    const Mat ai = a.realize(a.basis(i));
    d.at(i) = a.coordinates(x * ai - ai * x);
  }
  return d;
}

struct Case {
  const char* name;
  AlgebraPtr algebra;
  std::vector<BimodulePtr> bimodules;
};

std::vector<Case> separable_cases() {
  std::vector<Case> out;
  auto add = [&](const char* name, AlgebraPtr a) {
    const auto im = images(*a);
    std::vector<BimodulePtr> bs{bimodules::regular(a), bimodules::matrices(a, im, im, a->has_star())};
    out.push_back({name, a, bs});
  };
  add("C^2", algebras::diagonal(2));
  add("M2", algebras::matrix(2));
  add("M2+C", algebras::product(*algebras::matrix(2), *algebras::diagonal(1)));
  add("CZ2", algebras::group_algebra(groups::cyclic(2)));
  add("CZ3", algebras::group_algebra(groups::cyclic(3)));
  // C^2 acting through two different embeddings into M2
  auto c2 = algebras::diagonal(2);
  out[0].bimodules.push_back(bimodules::matrices(c2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)},
                                                 {unit_matrix(2, 1, 1), unit_matrix(2, 0, 0)}));
  return out;
}

}  // namespace

TEST_CASE("algebra construction and validation") {
  const auto m2 = algebras::matrix(2);
  CHECK(m2->dim() == 4);
  CHECK(m2->associativity_residual() == 0.0);
  const Mat e12 = unit_matrix(2, 0, 1);
  CHECK(m2->realize(m2->coordinates(e12)) == e12);
  CHECK(m2->star(m2->coordinates(e12)) == m2->coordinates(unit_matrix(2, 1, 0)));

  const auto sum = algebras::product(*m2, *algebras::diagonal(1));
  CHECK(sum->dim() == 5);
  CHECK(sum->blocks().size() == 2);
  CHECK(sum->realization_size() == 3);

  const auto cz3 = algebras::group_algebra(groups::cyclic(3));
  CHECK(cz3->has_star());
  CHECK(cz3->realization_size() == 3);
  const Vec g = cz3->basis(1);
  CHECK((cz3->multiply(g, cz3->star(g)) - cz3->unit()).norm() == 0.0);

  const auto dual = algebras::dual_numbers();
  CHECK(dual->multiply(dual->basis(1), dual->basis(1)).norm() == 0.0);
  const Mat eps = dual->realize(dual->basis(1));
  CHECK(dual->coordinates(eps).isApprox(dual->basis(1)));

  // x*y := y (not unital and not associative with this unit)
  std::vector<cplx> bad(8, 0.0);
  bad[(0 * 2 + 0) * 2 + 0] = 1.0;
  bad[(0 * 2 + 1) * 2 + 1] = 1.0;
  bad[(1 * 2 + 0) * 2 + 1] = 1.0;
  bad[(1 * 2 + 1) * 2 + 0] = 1.0;
  bad[(1 * 2 + 1) * 2 + 1] = 1.0;  // eps^2 = 1 + eps still associative (commutative, 2-dim)
  CHECK_NOTHROW(FinDimAlgebra(2, Field::Real, bad, dual->unit()));
  std::vector<cplx> nonassoc(8, 0.0);
  nonassoc[(0 * 2 + 0) * 2 + 0] = 1.0;
  nonassoc[(0 * 2 + 1) * 2 + 1] = 1.0;
  nonassoc[(1 * 2 + 0) * 2 + 1] = 1.0;
  nonassoc[(1 * 2 + 1) * 2 + 0] = 1.0;
  Vec wrong_unit(2);
  wrong_unit << 0.0, 1.0;
  CHECK_THROWS_AS(FinDimAlgebra(2, Field::Real, nonassoc, wrong_unit), InvariantViolation);
  CHECK_THROWS_AS(FinDimAlgebra(2, Field::Real, nonassoc, dual->unit(), Mat(Mat::Identity(2, 2) * 2.0)),
                  InvariantViolation);
}

TEST_CASE("bimodule validation") {
  const auto c2 = algebras::diagonal(2);
  CHECK_NOTHROW(bimodules::regular(c2));
  // left action not multiplicative
  CHECK_THROWS_AS(bimodules::matrices(c2, {unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)}, images(*c2)),
                  InvariantViolation);
  const auto m2 = algebras::matrix(2);
  const auto reg = bimodules::regular(m2);
  CHECK(reg->has_star());
  CHECK(reg->dim() == 4);
}

TEST_CASE("hochschild differential") {
  const auto m2 = algebras::matrix(2);
  const auto reg = bimodules::regular(m2);
  std::mt19937_64 rng(61);

  // degree 0: a -> a m - m a
  const auto m = random::hochschild_cochain(reg, 0, rng);
  const auto dm = hochschild_differential(m);
  for (int i = 0; i < 4; ++i) {
    const Vec ai = m2->basis(i);
    const Vec expect = m2->multiply(ai, m.at(0)) - m2->multiply(m.at(0), ai);
    CHECK((dm.at(i) - expect).norm() < 1e-15);
  }

  const auto d = inner_derivation(reg, random::gaussian(2, 2, Field::Complex, rng));
  CHECK(hochschild_differential(d).norm() < 1e-14);

  for (const auto& c : separable_cases())
    for (const auto& e : c.bimodules)
      for (int n = 0; n <= 3; ++n) {
        if (ipow(c.algebra->dim(), n + 2) * e->dim() > 20'000) continue;
        const auto f = random::hochschild_cochain(e, n, rng);
        CHECK(hochschild_differential(hochschild_differential(f)).norm() <= 1e-12 * std::max(1.0, f.norm()));
      }
}

TEST_CASE("hochschild cohomology dimensions") {
  const auto m2 = algebras::matrix(2);
  const auto d = hochschild_cohomology_dims(*bimodules::regular(m2), 1);
  CHECK(d.dim_z == 3);
  CHECK(d.dim_b == 3);
  CHECK(d.dim_h == 0);

  const auto c2 = hochschild_cohomology_dims(*bimodules::regular(algebras::diagonal(2)), 1);
  CHECK(c2.dim_z == 0);
  CHECK(c2.dim_b == 0);
  CHECK(c2.dim_h == 0);

  const auto dual = algebras::dual_numbers();
  const auto reg = bimodules::regular(dual);
  const auto dd = hochschild_cohomology_dims(*reg, 1);
  CHECK(dd.dim_h >= 1);
  // eps d/d eps: 1 -> 0, eps -> eps
  HochschildCochain der(reg, 1);
  der.at(1) = dual->basis(1);
  CHECK(hochschild_differential(der).norm() == 0.0);
  CHECK(hochschild_differential(HochschildCochain(reg, 0, dual->basis(1))).norm() == 0.0);  // B^1 = 0 here

  for (const auto& c : separable_cases())
    for (const auto& e : c.bimodules) {
      INFO(c.name);
      CHECK(hochschild_cohomology_dims(*e, 1).dim_h == 0);
      CHECK(hochschild_cohomology_dims(*e, 2).dim_h == 0);
    }
}

TEST_CASE("separability idempotents") {
  const auto c2 = algebras::diagonal(2);
  const auto e2 = separability_idempotent(c2);
  CHECK(e2.tensor() == Mat::Identity(2, 2));

  const auto cz2 = algebras::group_algebra(groups::cyclic(2));
  const auto ez = separability_idempotent(cz2);
  Mat half = Mat::Identity(2, 2) * 0.5;  // 1/2 (1 (x) 1 + s (x) s)
  CHECK(ez.tensor() == half);
  CHECK(ez.commutation_residual() == 0.0);
  CHECK(ez.multiplication_residual() == 0.0);

  const auto m2 = algebras::matrix(2);
  const auto em = separability_idempotent(m2);
  REQUIRE(em.terms().size() == 2);
  CHECK(m2->realize(em.terms()[0].first) == unit_matrix(2, 0, 0));
  CHECK(m2->realize(em.terms()[0].second) == unit_matrix(2, 0, 0));
  CHECK(m2->realize(em.terms()[1].first) == unit_matrix(2, 1, 0));
  CHECK(m2->realize(em.terms()[1].second) == unit_matrix(2, 0, 1));
  CHECK(em.commutation_residual() == 0.0);

  const auto cz3 = algebras::group_algebra(groups::cyclic(3));
  const auto e3 = separability_idempotent(cz3);
  const auto& g = *cz3->group();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(e3.tensor()(x, y) == (y == g.inv(x) ? 1.0 / 3.0 : 0.0));

  CHECK_THROWS_AS(separability_idempotent(algebras::dual_numbers()), Unsupported);
  CHECK_THROWS_AS(SeparabilityIdempotent(c2, {{c2->basis(0), c2->basis(1)}}), InvariantViolation);
}

TEST_CASE("hochschild_split") {
  std::mt19937_64 rng(62);
  const auto m2 = algebras::matrix(2);
  const auto reg = bimodules::regular(m2);
  const auto e = separability_idempotent(m2);

  CHECK(hochschild_split(HochschildCochain(reg, 1), e).b.norm() == 0.0);

  // D = [E12, .] is inner with witness b = -E12 (delta^0 b (a) = a b - b a).
  const auto d = inner_derivation(reg, unit_matrix(2, 0, 1));
  const auto s = hochschild_split(d, e);
  CHECK((m2->realize(s.b.at(0)) + unit_matrix(2, 0, 1)).norm() < 1e-15);
  CHECK((hochschild_differential(s.b) - d).norm() < 1e-15);

  // CZ3 acting on M3 through the regular permutation representation.
  const auto cz3 = algebras::group_algebra(groups::cyclic(3));
  const auto perm = images(*cz3);
  const auto m3 = bimodules::matrices(cz3, perm, perm);
  const auto e3 = separability_idempotent(cz3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random::hochschild_cochain(m3, 1, rng);
    const auto a = hochschild_differential(c);
    const auto b = hochschild_split(a, e3);
    CHECK((hochschild_differential(b.b) - a).norm() <= 1e-10);
  }

  int trials = 0;
  for (const auto& cs : separable_cases()) {
    const auto idem = separability_idempotent(cs.algebra);
    for (const auto& bm : cs.bimodules)
      for (int n = 0; n <= 2; ++n) {
        if (ipow(cs.algebra->dim(), n + 2) * bm->dim() > 20'000) continue;
        for (int k = 0; k < 4; ++k, ++trials) {
          const auto a = hochschild_differential(random::hochschild_cochain(bm, n, rng));
          const auto r = hochschild_split(a, idem);
          CHECK((hochschild_differential(r.b) - a).norm() <= 1e-10 * std::max(1.0, a.norm()));
          CHECK(r.b.norm() <= r.bound * a.norm() * (1 + 1e-12));
        }
      }
  }
  CHECK(trials >= 100);

  HochschildCochain notc(reg, 1);
  notc.at(0) = m2->basis(1);
  CHECK_THROWS_AS(hochschild_split(notc, e), NotACocycle);
}

TEST_CASE("group algebra split agrees with the group averaging split") {
  std::mt19937_64 rng(63);
  for (int order : {2, 3}) {
    auto g = groups::cyclic(order);
    const auto cg = algebras::group_algebra(g);
    const auto idem = separability_idempotent(cg);
    for (int trial = 0; trial < 5; ++trial) {
      const auto mod = random::module(g, 2, Field::Complex, rng);
      const auto bm = bimodules::from_group_module(cg, mod->action());
      for (int n = 1; n <= 3; ++n) {
        const auto c = random::cochain(mod, n - 1, rng);
        const auto a = differential(c);
        const HochschildCochain ha(bm, n, a.values());
        CHECK((hochschild_differential(HochschildCochain(bm, n - 1, c.values())).values() - a.values()).norm() <
              1e-12);
        const Vec hb = hochschild_split(ha, idem).b.values();
        const Vec gb = averaging_split(a).values();
        CHECK((hb - gb).norm() <= 1e-12 * std::max(1.0, gb.norm()));
      }
    }
  }
}

TEST_CASE("cochain_star") {
  std::mt19937_64 rng(64);
  const auto m2 = algebras::matrix(2);
  const auto reg = bimodules::regular(m2);
  HochschildCochain id(reg, 1);
  for (int i = 0; i < 4; ++i) id.at(i) = m2->basis(i);
  CHECK((cochain_star(id) - id).norm() == 0.0);

  for (const auto& c : separable_cases())
    for (const auto& e : c.bimodules) {
      if (!e->has_star()) continue;
      for (int n = 0; n <= 2; ++n) {
        for (int k = 0; k < 3; ++k) {
          const auto f = random::hochschild_cochain(e, n, rng);
          CHECK((cochain_star(cochain_star(f)) - f).norm() <= 1e-12);
          const double sign = (n % 2 == 0) ? -1.0 : 1.0;
          const auto lhs = cochain_star(hochschild_differential(f));
          const auto rhs = hochschild_differential(cochain_star(f)) * sign;
          CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, f.norm()));
        }
      }
    }

  // Self-adjoint inner derivations: D = [x, .] with x skew-adjoint.
  const auto d = inner_derivation(reg, random::skew_hermitian(2, 1.0, rng));
  CHECK((cochain_star(d) - d).norm() <= 1e-14);

  CHECK_THROWS_AS(cochain_star(HochschildCochain(bimodules::regular(algebras::dual_numbers()), 1)), InputError);
}
