#pragma once

// Data-parallel cochain kernels. Every kernel exists twice: a plain serial
// reference in `kernels::serial` and an OpenMP version in `kernels::omp`
// that parallelizes over output tuples. Both must agree bit for bit; the
// library calls the OpenMP versions.

#include <span>

#include "rigid/matnum.hpp"

namespace rigid::kernels {

/// Read-only view of a finite group together with a linear action.
struct GroupActionView {
  int order;
  std::span<const int> mul;  // row-major order x order
  std::span<const int> inv;
  std::span<const Mat> action;  // one dim x dim matrix per element
  int dim;
};

/// Read-only view of an algebra (structure constants) and a bimodule.
struct BimoduleView {
  int dim_a;
  int dim_e;
  std::span<const cplx> structure;  // c[(i*d + j)*d + k]: e_i e_j = sum_k c e_k
  std::span<const Mat> left;        // left action of basis element i on E
  std::span<const Mat> right;       // right action, as matrices acting on coordinates
};

/// A separability idempotent sum_p e'_p (x) e''_p, with e'_p already pushed
/// through the left action.
struct IdempotentView {
  std::span<const Mat> left_first;   // lambda(e'_p)
  std::span<const Vec> second;       // coordinates of e''_p
};

namespace serial {
void group_differential(const GroupActionView& v, int degree, std::span<const cplx> in,
                        std::span<cplx> out);
void group_split(const GroupActionView& v, int degree, std::span<const cplx> in,
                 std::span<cplx> out);
void hochschild_differential(const BimoduleView& v, int degree, std::span<const cplx> in,
                             std::span<cplx> out);
void hochschild_split(const BimoduleView& v, const IdempotentView& e, int degree,
                      std::span<const cplx> in, std::span<cplx> out);
Mat group_differential_matrix(const GroupActionView& v, int degree);
Mat hochschild_differential_matrix(const BimoduleView& v, int degree);

inline void group_differential(const GroupActionView& v, int degree, const Vec& in, Vec& out) {
  group_differential(v, degree, std::span<const cplx>(in.data(), in.size()), std::span<cplx>(out.data(), out.size()));
}
inline void group_split(const GroupActionView& v, int degree, const Vec& in, Vec& out) {
  group_split(v, degree, std::span<const cplx>(in.data(), in.size()), std::span<cplx>(out.data(), out.size()));
}
inline void hochschild_differential(const BimoduleView& v, int degree, const Vec& in, Vec& out) {
  hochschild_differential(v, degree, std::span<const cplx>(in.data(), in.size()),
                          std::span<cplx>(out.data(), out.size()));
}
inline void hochschild_split(const BimoduleView& v, const IdempotentView& e, int degree, const Vec& in,
                             Vec& out) {
  hochschild_split(v, e, degree, std::span<const cplx>(in.data(), in.size()),
                   std::span<cplx>(out.data(), out.size()));
}
}  // namespace serial

namespace omp {
void group_differential(const GroupActionView& v, int degree, std::span<const cplx> in,
                        std::span<cplx> out);
void group_split(const GroupActionView& v, int degree, std::span<const cplx> in,
                 std::span<cplx> out);
void hochschild_differential(const BimoduleView& v, int degree, std::span<const cplx> in,
                             std::span<cplx> out);
void hochschild_split(const BimoduleView& v, const IdempotentView& e, int degree,
                      std::span<const cplx> in, std::span<cplx> out);
Mat group_differential_matrix(const GroupActionView& v, int degree);
Mat hochschild_differential_matrix(const BimoduleView& v, int degree);
/// Real-valued assembly for real-field modules (imaginary parts dropped).
RMat group_differential_matrix_real(const GroupActionView& v, int degree);

inline void group_differential(const GroupActionView& v, int degree, const Vec& in, Vec& out) {
  group_differential(v, degree, std::span<const cplx>(in.data(), in.size()), std::span<cplx>(out.data(), out.size()));
}
inline void group_split(const GroupActionView& v, int degree, const Vec& in, Vec& out) {
  group_split(v, degree, std::span<const cplx>(in.data(), in.size()), std::span<cplx>(out.data(), out.size()));
}
inline void hochschild_differential(const BimoduleView& v, int degree, const Vec& in, Vec& out) {
  hochschild_differential(v, degree, std::span<const cplx>(in.data(), in.size()),
                          std::span<cplx>(out.data(), out.size()));
}
inline void hochschild_split(const BimoduleView& v, const IdempotentView& e, int degree, const Vec& in,
                             Vec& out) {
  hochschild_split(v, e, degree, std::span<const cplx>(in.data(), in.size()),
                   std::span<cplx>(out.data(), out.size()));
}
}  // namespace omp

/// Number of OpenMP threads in use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace rigid::kernels
