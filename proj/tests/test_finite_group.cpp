#include <complex>
#include <random>

#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/finite_group.hpp"

using namespace rigid;

TEST_CASE("named constructors") {
  auto z2 = groups::by_name("cyclic 2");
  REQUIRE(z2->order() == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(z2->mul(a, b) == (a ^ b));

  auto v4 = groups::by_name("klein-four");
  CHECK(v4->order() == 4);
  for (int g = 0; g < 4; ++g) CHECK(v4->inv(g) == g);
  CHECK(v4->is_abelian());

  auto s3 = groups::by_name("symmetric 3");
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());

  auto p = groups::by_name("z2xz3");
  CHECK(p->order() == 6);
  CHECK(p->is_abelian());
  CHECK(groups::by_name("S3")->order() == 6);
  CHECK_THROWS_AS(groups::by_name("q8"), InputError);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InputError);          // no inverse for 1
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 0}}), InputError);          // no identity
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), InputError);  // not associative
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), InputError);

  // Identity need not be element 0.
  FiniteGroup g({{1, 0}, {0, 1}}, {"s", "e"});
  CHECK(g.identity() == 1);
  CHECK(g.index_of("s") == 0);
  CHECK(g.index_of("1") == 1);
}

TEST_CASE("inverse table is consistent") {
  for (const char* name : {"z5", "s3", "v4", "z2xz2xz2", "s4"}) {
    auto g = groups::by_name(name);
    for (int a = 0; a < g->order(); ++a) {
      CHECK(g->inv(g->inv(a)) == a);
      CHECK(g->mul(a, g->inv(a)) == g->identity());
    }
  }
}

TEST_CASE("tuple enumeration is a lexicographic bijection") {
  TupleIndex idx(3, 3);
  CHECK(idx.count() == 27);
  std::vector<int> t(3, 0);
  std::int64_t k = 0;
  do {
    CHECK(idx.encode(t) == k);
    CHECK(idx.decode(k) == t);
    ++k;
  } while (idx.next(t));
  CHECK(k == 27);
  CHECK(idx.decode(5) == std::vector<int>{0, 1, 2});
  CHECK(TupleIndex(4, 0).count() == 1);
}

TEST_CASE("haar_average") {
  auto z2 = groups::cyclic(2);
  Vec v(2);
  v << 1.5, -2.0;
  std::vector<Vec> constant(2, v);
  CHECK((haar_average(*z2, constant) - v).norm() == 0.0);

  std::vector<Vec> balanced{Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
  CHECK(haar_average(*z2, balanced).norm() == 0.0);

  auto z3 = groups::cyclic(3);
  const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
  std::vector<Vec> roots{Vec::Constant(1, 1.0), Vec::Constant(1, w), Vec::Constant(1, w * w)};
  CHECK(haar_average(*z3, roots).norm() < 1e-15);

  std::vector<Vec> bad{Vec::Zero(1), Vec::Zero(2)};
  CHECK_THROWS_AS(haar_average(*z2, bad), InputError);
}

TEST_CASE("haar_average is translation invariant") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  auto s3 = groups::symmetric(3);
  std::vector<Vec> f;
  for (int g = 0; g < 6; ++g) f.push_back(Vec::NullaryExpr(3, [&] { return cplx(nd(rng), nd(rng)); }));
  const Vec base = haar_average(*s3, f);
  for (int h = 0; h < 6; ++h) {
    std::vector<Vec> shifted;
    for (int g = 0; g < 6; ++g) shifted.push_back(f[static_cast<std::size_t>(s3->mul(h, g))]);
    CHECK((haar_average(*s3, shifted) - base).norm() < 1e-14);
  }
}
