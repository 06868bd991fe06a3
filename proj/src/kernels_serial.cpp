// Serial reference kernels: tuple-walking, no index tricks.

#include <vector>

#include "rigid/errors.hpp"
#include "rigid/finite_group.hpp"
#include "rigid/kernels.hpp"

namespace rigid::kernels::serial {

namespace {

using CMap = Eigen::Map<const Vec>;
using OMap = Eigen::Map<Vec>;

double sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void check_sizes(std::size_t in, std::size_t want_in, std::size_t out, std::size_t want_out) {
  if (in != want_in || out != want_out) throw InputError("kernel: buffer size mismatch");
}

}  // namespace

void group_differential(const GroupActionView& v, int degree, std::span<const cplx> in,
                        std::span<cplx> out) {
  const int m = v.order, d = v.dim, n = degree;
  const TupleIndex src(m, n), dst(m, n + 1);
  check_sizes(in.size(), static_cast<std::size_t>(src.count() * d), out.size(),
              static_cast<std::size_t>(dst.count() * d));
  std::vector<int> t(static_cast<std::size_t>(n + 1), 0), s(static_cast<std::size_t>(n));
  auto value = [&](const std::vector<int>& tup) {
    return CMap(in.data() + src.encode(tup) * d, d);
  };
  do {
    Vec acc(d);
    // g1 . f(g2, ..., g_{n+1})
    s.assign(t.begin() + 1, t.end());
    acc = v.action[static_cast<std::size_t>(t[0])] * value(s);
    for (int i = 0; i < n; ++i) {
      s.clear();
      for (int j = 0; j < i; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
      s.push_back(v.mul[static_cast<std::size_t>(t[static_cast<std::size_t>(i)] * m + t[static_cast<std::size_t>(i + 1)])]);
      for (int j = i + 2; j <= n; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
      acc += sign(i + 1) * value(s);
    }
    s.assign(t.begin(), t.end() - 1);
    acc += sign(n + 1) * value(s);
    OMap(out.data() + dst.encode(t) * d, d) = acc;
  } while (dst.next(t));
}

void group_split(const GroupActionView& v, int degree, std::span<const cplx> in,
                 std::span<cplx> out) {
  const int m = v.order, d = v.dim, n = degree;
  const TupleIndex src(m, n + 1), dst(m, n);
  check_sizes(in.size(), static_cast<std::size_t>(src.count() * d), out.size(),
              static_cast<std::size_t>(dst.count() * d));
  std::vector<int> t(static_cast<std::size_t>(n), 0), s(static_cast<std::size_t>(n + 1));
  do {
    Vec acc = Vec::Zero(d);
    for (int g = 0; g < m; ++g) {
      s[0] = g;
      std::copy(t.begin(), t.end(), s.begin() + 1);
      acc += v.action[static_cast<std::size_t>(v.inv[static_cast<std::size_t>(g)])] *
             CMap(in.data() + src.encode(s) * d, d);
    }
    OMap(out.data() + dst.encode(t) * d, d) = acc / static_cast<double>(m);
  } while (dst.next(t));
}

void hochschild_differential(const BimoduleView& v, int degree, std::span<const cplx> in,
                             std::span<cplx> out) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const TupleIndex src(da, n), dst(da, n + 1);
  check_sizes(in.size(), static_cast<std::size_t>(src.count() * e), out.size(),
              static_cast<std::size_t>(dst.count() * e));
  std::vector<int> t(static_cast<std::size_t>(n + 1), 0), s;
  auto value = [&](const std::vector<int>& tup) {
    return CMap(in.data() + src.encode(tup) * e, e);
  };
  do {
    s.assign(t.begin() + 1, t.end());
    Vec acc = v.left[static_cast<std::size_t>(t[0])] * value(s);
    for (int i = 0; i < n; ++i) {
      const int a = t[static_cast<std::size_t>(i)], b = t[static_cast<std::size_t>(i + 1)];
      for (int k = 0; k < da; ++k) {
        const cplx c = v.structure[static_cast<std::size_t>((a * da + b) * da + k)];
        if (c == cplx(0)) continue;
        s.clear();
        for (int j = 0; j < i; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
        s.push_back(k);
        for (int j = i + 2; j <= n; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
        acc += (sign(i + 1) * c) * value(s);
      }
    }
    s.assign(t.begin(), t.end() - 1);
    acc += sign(n + 1) * (v.right[static_cast<std::size_t>(t[static_cast<std::size_t>(n)])] * value(s));
    OMap(out.data() + dst.encode(t) * e, e) = acc;
  } while (dst.next(t));
}

void hochschild_split(const BimoduleView& v, const IdempotentView& idem, int degree,
                      std::span<const cplx> in, std::span<cplx> out) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const TupleIndex src(da, n + 1), dst(da, n);
  check_sizes(in.size(), static_cast<std::size_t>(src.count() * e), out.size(),
              static_cast<std::size_t>(dst.count() * e));
  std::vector<int> t(static_cast<std::size_t>(n), 0), s(static_cast<std::size_t>(n + 1));
  do {
    Vec acc = Vec::Zero(e);
    for (std::size_t p = 0; p < idem.second.size(); ++p) {
      Vec inner = Vec::Zero(e);
      for (int j = 0; j < da; ++j) {
        const cplx c = idem.second[p](j);
        if (c == cplx(0)) continue;
        s[0] = j;
        std::copy(t.begin(), t.end(), s.begin() + 1);
        inner += c * CMap(in.data() + src.encode(s) * e, e);
      }
      acc += idem.left_first[p] * inner;
    }
    OMap(out.data() + dst.encode(t) * e, e) = acc;
  } while (dst.next(t));
}

Mat group_differential_matrix(const GroupActionView& v, int degree) {
  const int m = v.order, d = v.dim, n = degree;
  const TupleIndex src(m, n), dst(m, n + 1);
  Mat out = Mat::Zero(dst.count() * d, src.count() * d);
  std::vector<int> t(static_cast<std::size_t>(n + 1), 0), s;
  const Mat id = Mat::Identity(d, d);
  do {
    const auto row = dst.encode(t) * d;
    s.assign(t.begin() + 1, t.end());
    out.block(row, src.encode(s) * d, d, d) += v.action[static_cast<std::size_t>(t[0])];
    for (int i = 0; i < n; ++i) {
      s.clear();
      for (int j = 0; j < i; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
      s.push_back(v.mul[static_cast<std::size_t>(t[static_cast<std::size_t>(i)] * m + t[static_cast<std::size_t>(i + 1)])]);
      for (int j = i + 2; j <= n; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
      out.block(row, src.encode(s) * d, d, d) += sign(i + 1) * id;
    }
    s.assign(t.begin(), t.end() - 1);
    out.block(row, src.encode(s) * d, d, d) += sign(n + 1) * id;
  } while (dst.next(t));
  return out;
}

Mat hochschild_differential_matrix(const BimoduleView& v, int degree) {
  const int da = v.dim_a, e = v.dim_e, n = degree;
  const TupleIndex src(da, n), dst(da, n + 1);
  Mat out = Mat::Zero(dst.count() * e, src.count() * e);
  std::vector<int> t(static_cast<std::size_t>(n + 1), 0), s;
  const Mat id = Mat::Identity(e, e);
  do {
    const auto row = dst.encode(t) * e;
    s.assign(t.begin() + 1, t.end());
    out.block(row, src.encode(s) * e, e, e) += v.left[static_cast<std::size_t>(t[0])];
    for (int i = 0; i < n; ++i) {
      const int a = t[static_cast<std::size_t>(i)], b = t[static_cast<std::size_t>(i + 1)];
      for (int k = 0; k < da; ++k) {
        const cplx c = v.structure[static_cast<std::size_t>((a * da + b) * da + k)];
        if (c == cplx(0)) continue;
        s.clear();
        for (int j = 0; j < i; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
        s.push_back(k);
        for (int j = i + 2; j <= n; ++j) s.push_back(t[static_cast<std::size_t>(j)]);
        out.block(row, src.encode(s) * e, e, e) += (sign(i + 1) * c) * id;
      }
    }
    s.assign(t.begin(), t.end() - 1);
    out.block(row, src.encode(s) * e, e, e) += sign(n + 1) * v.right[static_cast<std::size_t>(t[static_cast<std::size_t>(n)])];
  } while (dst.next(t));
  return out;
}

}  // namespace rigid::kernels::serial
