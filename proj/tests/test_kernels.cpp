// The OpenMP kernels against the serial reference kernels.

#include <random>

#include "doctest.h"
#include "rigid/abelian.hpp"
#include "rigid/kernels.hpp"
#include "rigid/random.hpp"

using namespace rigid;

namespace {

struct Algebra {
  int d;
  std::vector<cplx> c;
  std::vector<Mat> left, right;
};

// M_2 acting on itself; basis E11, E12, E21, E22 (row-major matrix units).
Algebra m2_regular() {
  Algebra a{4, std::vector<cplx>(64, 0.0), {}, {}};
  auto unit = [](int k) {
    Mat m = Mat::Zero(2, 2);
    m(k / 2, k % 2) = 1.0;
    return m;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Mat p = unit(i) * unit(j);
      for (int k = 0; k < 4; ++k) a.c[static_cast<std::size_t>((i * 4 + j) * 4 + k)] = p(k / 2, k % 2);
    }
  for (int i = 0; i < 4; ++i) {
    Mat l(4, 4), r(4, 4);
    for (int k = 0; k < 4; ++k) {
      const Mat lk = unit(i) * unit(k), rk = unit(k) * unit(i);
      for (int q = 0; q < 4; ++q) {
        l(q, k) = lk(q / 2, q % 2);
        r(q, k) = rk(q / 2, q % 2);
      }
    }
    a.left.push_back(l);
    a.right.push_back(r);
  }
  return a;
}

}  // namespace

TEST_CASE("group kernels: serial and OpenMP agree exactly") {
  std::mt19937_64 rng(21);
  for (const char* gname : {"z2", "z3", "s3", "v4"}) {
    auto g = groups::by_name(gname);
    for (Field field : {Field::Real, Field::Complex}) {
      auto mod = random::module(g, 3, field, rng);
      for (int n = 0; n <= 3; ++n) {
        const auto f = random::cochain(mod, n, rng);
        Vec a(f.tuple_count() * g->order() * 3), b(a.size());
        kernels::serial::group_differential(mod->view(), n, f.values(), a);
        kernels::omp::group_differential(mod->view(), n, f.values(), b);
        CHECK(a == b);

        const auto h = random::cochain(mod, n + 1, rng);
        Vec s1(f.values().size()), s2(f.values().size());
        kernels::serial::group_split(mod->view(), n, h.values(), s1);
        kernels::omp::group_split(mod->view(), n, h.values(), s2);
        CHECK(s1 == s2);

        const Mat m1 = kernels::serial::group_differential_matrix(mod->view(), n);
        const Mat m2 = kernels::omp::group_differential_matrix(mod->view(), n);
        CHECK(m1 == m2);
        CHECK((m1 * f.values() - a).cwiseAbs().maxCoeff() < 1e-12);
        if (field == Field::Real)
          CHECK(kernels::omp::group_differential_matrix_real(mod->view(), n) == RMat(m1.real()));
      }
    }
  }
}

TEST_CASE("hochschild kernels: serial and OpenMP agree exactly") {
  std::mt19937_64 rng(22);
  const Algebra a = m2_regular();
  const kernels::BimoduleView view{a.d, 4, a.c, a.left, a.right};
  // e = E11 (x) E11 + E21 (x) E12
  const std::vector<Mat> first{a.left[0], a.left[2]};
  std::vector<Vec> second(2, Vec::Zero(4));
  second[0](0) = 1.0;
  second[1](1) = 1.0;
  const kernels::IdempotentView idem{first, second};
  for (int n = 0; n <= 2; ++n) {
    const Vec f = random::gaussian_vector(ipow(4, n) * 4, Field::Complex, rng);
    Vec x(ipow(4, n + 1) * 4), y(x.size());
    kernels::serial::hochschild_differential(view, n, f, x);
    kernels::omp::hochschild_differential(view, n, f, y);
    CHECK(x == y);

    Vec s1(f.size()), s2(f.size());
    kernels::serial::hochschild_split(view, idem, n, x, s1);
    kernels::omp::hochschild_split(view, idem, n, x, s2);
    CHECK(s1 == s2);

    const Mat m1 = kernels::serial::hochschild_differential_matrix(view, n);
    CHECK(m1 == kernels::omp::hochschild_differential_matrix(view, n));
    CHECK((m1 * f - x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("thread count controls") {
  const int before = kernels::max_threads();
  CHECK(before >= 1);
  kernels::set_threads(1);
  CHECK(kernels::max_threads() == 1);
  kernels::set_threads(before);
}
