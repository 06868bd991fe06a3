#include <random>

#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/morphisms.hpp"
#include "rigid/random.hpp"

using namespace rigid;

namespace {

Mat unit_matrix(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

// C^k -> M_n sending e_i to the i-th of the given orthogonal projections.
AlgebraMorphism projections(const std::vector<Mat>& ps, bool cstar = true) {
  const int n = static_cast<int>(ps.front().rows());
  return AlgebraMorphism::from_images(algebras::diagonal(static_cast<int>(ps.size())), algebras::matrix(n), ps, cstar);
}

AlgebraMorphism conjugated(const AlgebraMorphism& phi, const Mat& u) {
  std::vector<Mat> im;
  for (const Mat& p : phi.images()) im.push_back(u * p * u.inverse());
  return AlgebraMorphism::from_images(phi.domain_ptr(), phi.codomain_ptr(), im, phi.cstar());
}

// C^3 -> M_4 with ranks 1, 1, 2.
AlgebraMorphism c3_m4() {
  Mat p3 = Mat::Zero(4, 4);
  p3(2, 2) = p3(3, 3) = 1.0;
  return projections({unit_matrix(4, 0, 0), unit_matrix(4, 1, 1), p3});
}

}  // namespace

TEST_CASE("check_morphism") {
  const auto m2 = algebras::matrix(2);
  const AlgebraMorphism id(m2, m2, Mat::Identity(4, 4), true);
  const auto r = check_morphism(id);
  CHECK(r.ok);
  CHECK(r.unital == 0.0);
  CHECK(r.multiplicative == 0.0);
  CHECK(*r.star == 0.0);

  CHECK(check_morphism(projections({unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)})).ok);
  const auto bad = check_morphism(projections({unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)}, false));
  CHECK_FALSE(bad.ok);
  CHECK(bad.multiplicative >= 1.0);

  CHECK_THROWS_AS(AlgebraMorphism(m2, m2, Mat::Identity(3, 3)), InputError);
  CHECK_THROWS_AS(AlgebraMorphism::from_images(algebras::diagonal(2), m2,
                                               {Mat::Identity(3, 3), Mat::Identity(3, 3)}),
                  InputError);
}

TEST_CASE("intertwiner") {
  std::mt19937_64 rng(71);
  const auto phi = projections({unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)});
  const auto e = separability_idempotent(phi.domain_ptr());
  CHECK(intertwiner(phi, phi, e) == Mat::Identity(2, 2));

  // far pair: E11 vs E22
  const auto psi = projections({unit_matrix(2, 1, 1), unit_matrix(2, 0, 0)});
  CHECK(intertwiner(phi, psi, e) == Mat::Zero(2, 2));
  CHECK(morphism_distance(phi, psi) == doctest::Approx(1.0));
  CHECK_THROWS_AS(conjugate_nearby_morphisms(phi, psi, ConjugationMode::CStar), OutOfNeighborhood);

  // the identity holds for arbitrary pairs, near or not
  const auto base = c3_m4();
  const auto e3 = separability_idempotent(base.domain_ptr());
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = conjugated(base, random::unitary(4, Field::Complex, rng));
    const auto b = conjugated(base, random::unitary(4, Field::Complex, rng));
    CHECK(intertwining_residual(a, b, intertwiner(a, b, e3)) <= 1e-11);
  }

  // M2 -> M2 automorphisms through the matrix-unit idempotent
  const auto m2 = algebras::matrix(2);
  const AlgebraMorphism id(m2, m2, Mat::Identity(4, 4), true);
  const Mat u = random::unitary(2, Field::Complex, rng);
  const auto inner = conjugated(id, u);
  const auto em = separability_idempotent(m2);
  CHECK(intertwining_residual(id, inner, intertwiner(id, inner, em)) <= 1e-12);
}

TEST_CASE("conjugate_nearby_morphisms") {
  std::mt19937_64 rng(72);
  const auto phi = projections({unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)});
  const auto same = conjugate_nearby_morphisms(phi, phi, ConjugationMode::CStar);
  CHECK(same.w == Mat::Identity(2, 2));
  CHECK((same.conjugator - Mat::Identity(2, 2)).norm() < 1e-15);

  // small rotation of E11
  const double t = 0.1;
  Mat rot(2, 2);
  rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  const auto psi = conjugated(phi, rot);
  const auto c = conjugate_nearby_morphisms(phi, psi, ConjugationMode::CStar);
  CHECK(c.recovery <= 1e-9);
  CHECK((c.conjugator.adjoint() * c.conjugator - Mat::Identity(2, 2)).norm() <= 1e-10);

  const auto base = c3_m4();
  for (int trial = 0; trial < 50; ++trial) {
    const Mat x = random::skew_hermitian(4, random::uniform(0.0, 0.2, rng), rng);
    const auto moved = conjugated(base, matnum::mat_exp(x));
    const auto cs = conjugate_nearby_morphisms(base, moved, ConjugationMode::CStar);
    CHECK(cs.recovery <= 1e-8);
    CHECK(cs.intertwining <= 1e-11);
    CHECK(matnum::spectral_norm(cs.w - Mat::Identity(4, 4)) <= 2 * morphism_distance(base, moved) + 1e-15);
    CHECK((cs.conjugator.adjoint() * cs.conjugator - Mat::Identity(4, 4)).norm() <= 1e-10);

    // Banach mode with a non-unitary similarity
    const Mat s = Mat::Identity(4, 4) + 0.1 * random::gaussian(4, 4, Field::Complex, rng) / 4.0;
    const auto ban = conjugated(AlgebraMorphism(base.domain_ptr(), base.codomain_ptr(), base.matrix()), s);
    const auto cb = conjugate_nearby_morphisms(AlgebraMorphism(base.domain_ptr(), base.codomain_ptr(), base.matrix()),
                                               ban, ConjugationMode::Banach);
    CHECK(cb.recovery <= 1e-8);
  }

  // group algebra domain: C(Z/3) -> M3 by the permutation representation
  const auto cz3 = algebras::group_algebra(groups::cyclic(3));
  std::vector<Mat> perm;
  for (int g = 0; g < 3; ++g) perm.push_back(cz3->realize(cz3->basis(g)));
  const auto rep = AlgebraMorphism::from_images(cz3, algebras::matrix(3), perm, true);
  CHECK(check_morphism(rep).ok);
  const auto moved = conjugated(rep, matnum::mat_exp(random::skew_hermitian(3, 0.2, rng)));
  CHECK(conjugate_nearby_morphisms(rep, moved, ConjugationMode::CStar).recovery <= 1e-9);

  CHECK_THROWS_AS(conjugate_nearby_morphisms(
                      AlgebraMorphism::from_images(algebras::dual_numbers(), algebras::matrix(2, Field::Real),
                                                   {Mat::Identity(2, 2), unit_matrix(2, 0, 1)}),
                      AlgebraMorphism::from_images(algebras::dual_numbers(), algebras::matrix(2, Field::Real),
                                                   {Mat::Identity(2, 2), unit_matrix(2, 0, 1)}),
                      ConjugationMode::Banach),
                  Unsupported);
}

TEST_CASE("tangent_cocycle_check") {
  std::mt19937_64 rng(73);
  const auto base = c3_m4();
  for (int trial = 0; trial < 10; ++trial) {
    const Mat x = random::skew_hermitian(4, 1.0, rng);
    std::vector<Mat> inner;
    for (const Mat& p : base.images()) inner.push_back(x * p - p * x);
    const auto r = tangent_cocycle_check(base, inner, true, 1e-12);
    CHECK(r.tangent);
    CHECK(r.residual <= 1e-14);

    const double t = 1e-4;
    const Mat ut = matnum::mat_exp(t * x);
    std::vector<Mat> fd;
    for (const Mat& p : base.images()) fd.push_back((ut * p * ut.adjoint() - p) / t);
    const auto rf = tangent_cocycle_check(base, fd, true, 1e-3);
    CHECK(rf.tangent);
    CHECK(rf.residual > 0.0);

    std::vector<Mat> junk;
    for (int i = 0; i < 3; ++i) junk.push_back(random::gaussian(4, 4, Field::Complex, rng));
    const auto rj = tangent_cocycle_check(base, junk, false, 1e-3);
    CHECK_FALSE(rj.tangent);
    CHECK(rj.residual >= 0.1);
  }

  // Z^1 = B^1 on the induced bimodule
  const auto bm = induced_bimodule(base);
  const auto d = hochschild_cohomology_dims(*bm, 1);
  CHECK(d.dim_h == 0);
  CHECK(d.dim_z == d.dim_b);
}

TEST_CASE("dual numbers orbit closure") {
  const auto rep = dual_numbers_demo();
  REQUIRE(rep.steps.size() == 21);
  for (const auto& s : rep.steps) {
    CHECK(s.distance == std::ldexp(1.0, -s.k));
    CHECK(s.conjugation_residual == 0.0);
    CHECK(s.morphism_residual == 0.0);
  }
  CHECK(rep.steps[10].distance == doctest::Approx(9.765625e-4));
  CHECK(rep.strictly_decreasing);
  CHECK(rep.degenerate_is_morphism);
  CHECK(rep.limit_outside_orbit);
}

TEST_CASE("semisimple orbits are closed") {
  std::mt19937_64 rng(74);
  const auto rep = semisimple_orbit_demo(rng);
  CHECK(rep.orbit_count == 3);
  CHECK(rep.all_closed);
  for (const auto& c : rep.classes) {
    CHECK(c.samples == 20);
    CHECK(c.conjugation_residual <= 1e-12);
  }
}
