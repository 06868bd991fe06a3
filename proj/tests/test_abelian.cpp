#include <random>

#include "doctest.h"
#include "rigid/abelian.hpp"
#include "rigid/errors.hpp"
#include "rigid/random.hpp"

using namespace rigid;

namespace {

ModulePtr sign_module() {
  auto z2 = groups::cyclic(2);
  std::vector<Mat> act{Mat::Identity(1, 1), Mat::Constant(1, 1, -1.0)};
  return std::make_shared<GModule>(z2, Field::Real, act);
}

AbelianCochain one_cochain(ModulePtr m, double at_e, double at_s) {
  Vec v(2);
  v << at_e, at_s;
  return AbelianCochain(std::move(m), 1, v);
}

}  // namespace

TEST_CASE("GModule validation") {
  auto z2 = groups::cyclic(2);
  std::vector<Mat> bad{Mat::Identity(1, 1), Mat::Constant(1, 1, 2.0)};  // 2*2 != 1
  CHECK_THROWS_AS(GModule(z2, Field::Real, bad), InvariantViolation);
  std::vector<Mat> cplx_act{Mat::Identity(1, 1), Mat::Constant(1, 1, cplx(0, 1))};
  CHECK_THROWS_AS(GModule(z2, Field::Real, cplx_act), InputError);
  CHECK_THROWS_AS(GModule(z2, Field::Real, {Mat::Identity(1, 1)}), InputError);
}

TEST_CASE("differential in degree 0 and the sign-module cocycle") {
  auto sign = sign_module();
  Vec b(1);
  b << 2.5;
  const auto db = differential(AbelianCochain(sign, 0, b));
  CHECK(db.at(0)(0) == cplx(0.0));   // rho(e) b - b
  CHECK(db.at(1)(0) == cplx(-5.0));  // rho(s) b - b

  // f(e) = 0, f(s) = 1: delta f(s,s) = -1 - 0 + 1 = 0 and the rest vanish by hand.
  CHECK(differential(one_cochain(sign, 0, 1)).norm() == 0.0);
}

TEST_CASE("delta squared vanishes") {
  std::mt19937_64 rng(31);
  int trials = 0;
  for (const char* gname : {"z2", "z3", "s3"}) {
    auto g = groups::by_name(gname);
    for (int k = 0; k < 4; ++k) {
      auto mod = random::module(g, 1 + k % 3, k % 2 ? Field::Complex : Field::Real, rng);
      for (int n = 0; n <= 3; ++n) {
        for (int r = 0; r < 2; ++r, ++trials) {
          const auto f = random::cochain(mod, n, rng);
          CHECK(differential(differential(f)).norm() <= 1e-12);
        }
      }
    }
  }
  CHECK(trials >= 96);
}

TEST_CASE("cohomology dimensions: hand-solved cases") {
  auto z2 = groups::cyclic(2);
  const auto triv = cohomology_dims(*trivial_module(z2, 1), 1);
  CHECK(triv.dim_z == 0);
  CHECK(triv.dim_b == 0);
  CHECK(triv.dim_h == 0);

  const auto sgn = cohomology_dims(*sign_module(), 1);
  CHECK(sgn.dim_z == 1);
  CHECK(sgn.dim_b == 1);
  CHECK(sgn.dim_h == 0);

  // Degree 0 is the invariants: 1 for the trivial module, 0 for the sign module.
  CHECK(cohomology_dims(*trivial_module(z2, 1), 0).dim_h == 1);
  CHECK(cohomology_dims(*sign_module(), 0).dim_h == 0);
}

TEST_CASE("vector-coefficient cohomology vanishes in positive degree") {
  std::mt19937_64 rng(32);
  for (const char* gname : {"z3", "s3"}) {
    auto g = groups::by_name(gname);
    for (int k = 0; k < 5; ++k) {
      auto mod = random::module(g, 1 + k % 3, k % 2 ? Field::Complex : Field::Real, rng);
      for (int n = 1; n <= 2; ++n) CHECK(cohomology_dims(*mod, n).dim_h == 0);
    }
  }
}

TEST_CASE("averaging_split examples") {
  auto sign = sign_module();
  const auto zero = AbelianCochain(sign, 2);
  CHECK(averaging_split(zero).norm() == 0.0);

  // a(s) = 2: b = avg rho(g)^{-1} a(g) = (0 + (-1)(2))/2 = -1, and rho(s)b - b = 2.
  const auto b = averaging_split(one_cochain(sign, 0, 2));
  CHECK(b.at(0)(0) == cplx(-1.0));

  CHECK_THROWS_AS(averaging_split(one_cochain(sign, 1, 0)), NotACocycle);

  std::mt19937_64 rng(33);
  auto z3 = groups::cyclic(3);
  auto mod = random::module(z3, 2, Field::Real, rng);
  const auto c = random::cochain(mod, 1, rng);
  const auto a = differential(c);
  const auto s = averaging_split(a);
  CHECK((differential(s) - a).norm() <= 1e-10);
}

TEST_CASE("averaging_split: identity, linearity and norm bound") {
  std::mt19937_64 rng(34);
  for (const char* gname : {"z2", "z3", "s3"}) {
    auto g = groups::by_name(gname);
    auto mod = random::module(g, 3, Field::Complex, rng);
    const double bound = mod->action_norm();
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = differential(random::cochain(mod, n - 1, rng));
        const auto a2 = differential(random::cochain(mod, n - 1, rng));
        const auto b = averaging_split(a);
        CHECK((differential(b) - a).norm() <= 1e-10);
        CHECK(b.norm() <= bound * a.norm() * (1 + 1e-12));
        const cplx al(0.7, -0.2), be(-1.3, 0.4);
        const auto lhs = averaging_split(a * al + a2 * be);
        const auto rhs = b * al + averaging_split(a2) * be;
        CHECK((lhs - rhs).norm() <= 1e-10);
      }
    }
  }
}

TEST_CASE("abelian_retraction") {
  auto sign = sign_module();
  const auto u = one_cochain(sign, 0, 1), up = one_cochain(sign, 0, 3);
  CHECK(abelian_retraction(u, u).norm() == 0.0);
  const auto v = abelian_retraction(u, up);
  CHECK(std::abs(v.at(0)(0) - 1.0) < 1e-15);
  CHECK((u - differential(v) - up).norm() < 1e-15);

  std::mt19937_64 rng(35);
  auto s3 = groups::symmetric(3);
  auto mod = random::module(s3, 2, Field::Real, rng);
  const auto base = differential(random::cochain(mod, 1, rng));
  const auto w = random::cochain(mod, 1, rng);
  const auto moved = base - differential(w);
  const auto r = abelian_retraction(base, moved);
  CHECK((differential(r) - differential(w)).norm() <= 1e-10);

  CHECK_THROWS_AS(abelian_retraction(one_cochain(sign, 1, 0), u), NotACocycle);
}

TEST_CASE("normalized cochains are preserved by the differential") {
  std::mt19937_64 rng(36);
  auto s3 = groups::symmetric(3);
  auto mod = random::module(s3, 2, Field::Complex, rng);
  for (int n = 1; n <= 3; ++n) {
    const auto f = normalize(random::cochain(mod, n, rng));
    CHECK(f.is_normalized());
    CHECK(differential(f).is_normalized(1e-13));
  }
}

TEST_CASE("random modules are genuine actions of the requested size") {
  std::mt19937_64 rng(37);
  for (const char* gname : {"z2", "v4", "s3"}) {
    for (int d = 1; d <= 4; ++d) {
      auto mod = random::module(groups::by_name(gname), d, Field::Real, rng);
      CHECK(mod->dim() == d);
      CHECK(mod->action_law_residual() <= 1e-12);
    }
  }
}
