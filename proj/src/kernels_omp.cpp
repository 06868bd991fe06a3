// OpenMP kernels. Each output tuple is owned by one iteration, so the
// loops carry no reductions and results match the serial kernels exactly.

#include <vector>

#ifdef RIGID_HAVE_OPENMP
#include <omp.h>
#endif

#include "rigid/errors.hpp"
#include "rigid/finite_group.hpp"
#include "rigid/kernels.hpp"

namespace rigid::kernels {

int max_threads() {
#ifdef RIGID_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef RIGID_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace omp {

namespace {

using CMap = Eigen::Map<const Vec>;
using OMap = Eigen::Map<Vec>;
using i64 = std::int64_t;

double sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

std::vector<i64> powers(int base, int n) {
  std::vector<i64> p(static_cast<std::size_t>(n + 2), 1);
  for (int i = 1; i <= n + 1; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * base;
  return p;
}

// Digit i (0 = most significant) of an arity-`arity` tuple index.
inline int digit(i64 idx, int i, int arity, const std::vector<i64>& pw, int base) {
  return static_cast<int>((idx / pw[static_cast<std::size_t>(arity - 1 - i)]) % base);
}

// Index of the arity-n tuple obtained by replacing positions i, i+1 of the
// arity-(n+1) tuple `idx` with the single value `merged`.
inline i64 merge_index(i64 idx, int i, int n, int merged, const std::vector<i64>& pw) {
  const i64 low = idx % pw[static_cast<std::size_t>(n - 1 - i)];  // digits after i+1
  const i64 high = idx / pw[static_cast<std::size_t>(n + 1 - i)];  // digits before i
  return (high * pw[1] + merged) * pw[static_cast<std::size_t>(n - 1 - i)] + low;
}

void check_sizes(std::size_t in, i64 want_in, std::size_t out, i64 want_out) {
  if (static_cast<i64>(in) != want_in || static_cast<i64>(out) != want_out)
    throw InputError("kernel: buffer size mismatch");
}

}  // namespace

void group_differential(const GroupActionView& v, int degree, std::span<const cplx> in,
                        std::span<cplx> out) {
  const int m = v.order, d = v.dim, n = degree;
  const auto pw = powers(m, n);
  const i64 total = pw[static_cast<std::size_t>(n + 1)];
  check_sizes(in.size(), pw[static_cast<std::size_t>(n)] * d, out.size(), total * d);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    const int g1 = digit(idx, 0, n + 1, pw, m);
    Vec acc(d);
    acc = v.action[static_cast<std::size_t>(g1)] * CMap(in.data() + (idx % pw[static_cast<std::size_t>(n)]) * d, d);
    for (int i = 0; i < n; ++i) {
      const int a = digit(idx, i, n + 1, pw, m), b = digit(idx, i + 1, n + 1, pw, m);
      const i64 s = merge_index(idx, i, n, v.mul[static_cast<std::size_t>(a * m + b)], pw);
      acc += sign(i + 1) * CMap(in.data() + s * d, d);
    }
    acc += sign(n + 1) * CMap(in.data() + (idx / m) * d, d);
    OMap(out.data() + idx * d, d) = acc;
  }
}

void group_split(const GroupActionView& v, int degree, std::span<const cplx> in,
                 std::span<cplx> out) {
  const int m = v.order, d = v.dim, n = degree;
  const auto pw = powers(m, n);
  const i64 total = pw[static_cast<std::size_t>(n)];
  check_sizes(in.size(), pw[static_cast<std::size_t>(n + 1)] * d, out.size(), total * d);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    Vec acc = Vec::Zero(d);
    for (int g = 0; g < m; ++g)
      acc += v.action[static_cast<std::size_t>(v.inv[static_cast<std::size_t>(g)])] *
             CMap(in.data() + (g * total + idx) * d, d);
    OMap(out.data() + idx * d, d) = acc / static_cast<double>(m);
  }
}

void hochschild_differential(const BimoduleView& v, int degree, std::span<const cplx> in,
                             std::span<cplx> out) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const auto pw = powers(da, n);
  const i64 total = pw[static_cast<std::size_t>(n + 1)];
  check_sizes(in.size(), pw[static_cast<std::size_t>(n)] * e, out.size(), total * e);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    const int a1 = digit(idx, 0, n + 1, pw, da);
    Vec acc = v.left[static_cast<std::size_t>(a1)] * CMap(in.data() + (idx % pw[static_cast<std::size_t>(n)]) * e, e);
    for (int i = 0; i < n; ++i) {
      const int a = digit(idx, i, n + 1, pw, da), b = digit(idx, i + 1, n + 1, pw, da);
      for (int k = 0; k < da; ++k) {
        const cplx c = v.structure[static_cast<std::size_t>((a * da + b) * da + k)];
        if (c == cplx(0)) continue;
        acc += (sign(i + 1) * c) * CMap(in.data() + merge_index(idx, i, n, k, pw) * e, e);
      }
    }
    const int last = digit(idx, n, n + 1, pw, da);
    acc += sign(n + 1) * (v.right[static_cast<std::size_t>(last)] * CMap(in.data() + (idx / da) * e, e));
    OMap(out.data() + idx * e, e) = acc;
  }
}

void hochschild_split(const BimoduleView& v, const IdempotentView& idem, int degree,
                      std::span<const cplx> in, std::span<cplx> out) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const auto pw = powers(da, n);
  const i64 total = pw[static_cast<std::size_t>(n)];
  check_sizes(in.size(), pw[static_cast<std::size_t>(n + 1)] * e, out.size(), total * e);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    Vec acc = Vec::Zero(e);
    for (std::size_t p = 0; p < idem.second.size(); ++p) {
      Vec inner = Vec::Zero(e);
      for (int j = 0; j < da; ++j) {
        const cplx c = idem.second[p](j);
        if (c == cplx(0)) continue;
        inner += c * CMap(in.data() + (j * total + idx) * e, e);
      }
      acc += idem.left_first[p] * inner;
    }
    OMap(out.data() + idx * e, e) = acc;
  }
}

namespace {

template <typename M, typename Conv>
M assemble_group(const GroupActionView& v, int degree, Conv conv) {
  const int m = v.order, d = v.dim, n = degree;
  const auto pw = powers(m, n);
  const i64 total = pw[static_cast<std::size_t>(n + 1)];
  M out = M::Zero(total * d, pw[static_cast<std::size_t>(n)] * d);
  using Scalar = typename M::Scalar;
  const M id = M::Identity(d, d);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    const i64 row = idx * d;
    const int g1 = digit(idx, 0, n + 1, pw, m);
    out.block(row, (idx % pw[static_cast<std::size_t>(n)]) * d, d, d) += conv(v.action[static_cast<std::size_t>(g1)]);
    for (int i = 0; i < n; ++i) {
      const int a = digit(idx, i, n + 1, pw, m), b = digit(idx, i + 1, n + 1, pw, m);
      const i64 s = merge_index(idx, i, n, v.mul[static_cast<std::size_t>(a * m + b)], pw);
      out.block(row, s * d, d, d) += Scalar(sign(i + 1)) * id;
    }
    out.block(row, (idx / m) * d, d, d) += Scalar(sign(n + 1)) * id;
  }
  return out;
}

}  // namespace

Mat group_differential_matrix(const GroupActionView& v, int degree) {
  return assemble_group<Mat>(v, degree, [](const Mat& a) { return a; });
}

RMat group_differential_matrix_real(const GroupActionView& v, int degree) {
  return assemble_group<RMat>(v, degree, [](const Mat& a) { return RMat(a.real()); });
}

Mat hochschild_differential_matrix(const BimoduleView& v, int degree) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const auto pw = powers(da, n);
  const i64 total = pw[static_cast<std::size_t>(n + 1)];
  Mat out = Mat::Zero(total * e, pw[static_cast<std::size_t>(n)] * e);
  const Mat id = Mat::Identity(e, e);
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < total; ++idx) {
    const i64 row = idx * e;
    const int a1 = digit(idx, 0, n + 1, pw, da);
    out.block(row, (idx % pw[static_cast<std::size_t>(n)]) * e, e, e) += v.left[static_cast<std::size_t>(a1)];
    for (int i = 0; i < n; ++i) {
      const int a = digit(idx, i, n + 1, pw, da), b = digit(idx, i + 1, n + 1, pw, da);
      for (int k = 0; k < da; ++k) {
        const cplx c = v.structure[static_cast<std::size_t>((a * da + b) * da + k)];
        if (c == cplx(0)) continue;
        out.block(row, merge_index(idx, i, n, k, pw) * e, e, e) += (sign(i + 1) * c) * id;
      }
    }
    const int last = digit(idx, n, n + 1, pw, da);
    out.block(row, (idx / da) * e, e, e) += sign(n + 1) * v.right[static_cast<std::size_t>(last)];
  }
  return out;
}

}  // namespace omp
}  // namespace rigid::kernels
