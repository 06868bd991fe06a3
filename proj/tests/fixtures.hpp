#pragma once

// Small hand-built groups, representations and cocycles shared by the unit
// tests and the acceptance runner.

#include <cmath>
#include <memory>
#include <vector>

#include "rigid/finite_group.hpp"
#include "rigid/matnum.hpp"
#include "rigid/nonabelian.hpp"

namespace fixtures {

using rigid::cplx;
using rigid::Mat;

inline Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat pauli_y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

inline Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Mat diag2(cplx a, cplx b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

/// Permutation matrices of G acting by conjugation on its involutions.
inline std::vector<Mat> involution_permutation_rep(const rigid::FiniteGroup& g) {
  std::vector<int> inv;
  for (int a = 0; a < g.order(); ++a)
    if (a != g.identity() && g.mul(a, a) == g.identity()) inv.push_back(a);
  const int k = static_cast<int>(inv.size());
  std::vector<Mat> out;
  for (int a = 0; a < g.order(); ++a) {
    Mat p = Mat::Zero(k, k);
    for (int j = 0; j < k; ++j) {
      const int img = g.mul(g.mul(a, inv[static_cast<std::size_t>(j)]), g.inv(a));
      for (int i = 0; i < k; ++i)
        if (inv[static_cast<std::size_t>(i)] == img) p(i, j) = 1.0;
    }
    out.push_back(p);
  }
  return out;
}

/// The 2-dimensional irreducible unitary representation of S3: the
/// permutation representation on involutions restricted to the sum-zero plane.
inline std::vector<Mat> s3_standard_rep(const rigid::FiniteGroup& s3) {
  Mat q(3, 2);
  q << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), 0.0,
      -2.0 / std::sqrt(6.0);
  std::vector<Mat> out;
  for (const Mat& p : involution_permutation_rep(s3)) out.push_back(q.adjoint() * p * q);
  return out;
}

/// Z/2 acting on U(2) by conjugation with σx, and the cocycle u_s = iσy for it.
inline rigid::ActionPtr z2_sigma_x_action() {
  const auto z2 = rigid::groups::cyclic(2);
  return std::make_shared<rigid::GroupAction>(z2, rigid::MatrixGroupSpec(rigid::GroupKind::Unitary, 2),
                                              std::vector<Mat>{Mat::Identity(2, 2), pauli_x()});
}

inline std::vector<Mat> z2_sigma_x_base() { return {Mat::Identity(2, 2), cplx(0, 1) * pauli_y()}; }

inline rigid::ActionPtr trivial_action(rigid::GroupPtr g, rigid::GroupKind kind, int n) {
  return std::make_shared<rigid::GroupAction>(std::move(g), rigid::MatrixGroupSpec(kind, n));
}

}  // namespace fixtures
