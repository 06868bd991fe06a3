#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigid/finite_group.hpp"
#include "rigid/kernels.hpp"
#include "rigid/matnum.hpp"

namespace rigid {

/// One simple factor M_n(F) of a semisimple algebra.
struct MatrixBlock {
  int size;
  Field field;
  bool operator==(const MatrixBlock&) const = default;
};

/// A finite-dimensional unital algebra given by structure constants
/// e_i e_j = sum_k c(i,j,k) e_k.
class FinDimAlgebra {
 public:
  /// Validates unit axioms, associativity (exhaustively for d <= 16) and,
  /// when present, that the star is involutive and anti-multiplicative and
  /// that the blocks reproduce the structure constants.
  /// The star acts as x* = S conj(x) on coordinates.
  FinDimAlgebra(int dim, Field field, std::vector<cplx> structure, Vec unit, std::optional<Mat> star = {},
                std::vector<MatrixBlock> blocks = {}, GroupPtr group = nullptr, double tol = 1e-12);

  int dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<cplx>& structure() const { return structure_; }
  cplx c(int i, int j, int k) const { return structure_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)]; }
  const Vec& unit() const { return unit_; }
  const std::optional<Mat>& star_matrix() const { return star_; }
  bool has_star() const { return star_.has_value(); }
  /// Block decomposition in the concatenated matrix-unit basis (row-major
  /// E_ij per block), when declared.
  const std::vector<MatrixBlock>& blocks() const { return blocks_; }
  /// The group when this is a group algebra with basis the group elements.
  const GroupPtr& group() const { return group_; }

  Vec basis(int i) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec star(const Vec& x) const;
  /// Matrix of y -> x y (left) and y -> y x (right) on coordinates.
  Mat left_regular(const Vec& x) const;
  Mat right_regular(const Vec& x) const;
  const Mat& left_basis(int i) const { return left_[static_cast<std::size_t>(i)]; }
  const Mat& right_basis(int i) const { return right_[static_cast<std::size_t>(i)]; }

  /// A faithful matrix picture: block-diagonal when blocks are declared,
  /// otherwise the left regular representation.
  Mat realize(const Vec& x) const;
  int realization_size() const;
  /// Coordinates of a matrix in the image of realize (least squares).
  Vec coordinates(const Mat& m) const;

  double associativity_residual() const;

 private:
  int dim_;
  Field field_;
  std::vector<cplx> structure_;
  Vec unit_;
  std::optional<Mat> star_;
  std::vector<MatrixBlock> blocks_;
  GroupPtr group_;
  std::vector<Mat> left_, right_;
};

using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

namespace algebras {

/// M_n(F) with the matrix-unit basis and the conjugate-transpose star.
AlgebraPtr matrix(int n, Field field = Field::Complex);
/// C^k with the idempotent basis and complex conjugation.
AlgebraPtr diagonal(int k);
/// Direct product, with blocks and stars combined when both sides have them.
AlgebraPtr product(const FinDimAlgebra& a, const FinDimAlgebra& b);
/// Complex group algebra with g* = g^{-1}.
AlgebraPtr group_algebra(GroupPtr g);
/// R[eps]/(eps^2), basis {1, eps}.
AlgebraPtr dual_numbers();

}  // namespace algebras

/// An A-bimodule on E = F^e: lambda(a) m = a m and rho(a) m = m a as
/// matrices on coordinates.
class Bimodule {
 public:
  /// Checks that both actions are unital and multiplicative, that they
  /// commute, and star compatibility when a star on E is given.
  Bimodule(AlgebraPtr algebra, std::vector<Mat> left, std::vector<Mat> right, std::optional<Mat> star = {},
           double tol = 1e-10);

  const FinDimAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int dim() const { return dim_; }
  const Mat& left(int i) const { return left_[static_cast<std::size_t>(i)]; }
  const Mat& right(int i) const { return right_[static_cast<std::size_t>(i)]; }
  Mat left_of(const Vec& a) const;
  Mat right_of(const Vec& a) const;
  const std::optional<Mat>& star_matrix() const { return star_; }
  bool has_star() const { return star_.has_value(); }
  /// Max of the action operator norms, the constant C of the splitting bound.
  double action_norm() const;

  kernels::BimoduleView view() const;

 private:
  AlgebraPtr algebra_;
  int dim_;
  std::vector<Mat> left_, right_;
  std::optional<Mat> star_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

namespace bimodules {

/// A acting on itself.
BimodulePtr regular(AlgebraPtr a);
/// M_n with a.m = phi(a) m and m.a = m psi(a), phi and psi given by the
/// images of the basis; the star is the adjoint when `with_star`.
BimodulePtr matrices(AlgebraPtr a, const std::vector<Mat>& phi, const std::vector<Mat>& psi, bool with_star = false);
/// A G-module E viewed as a CG-bimodule with trivial right action.
BimodulePtr from_group_module(AlgebraPtr group_algebra, const std::vector<Mat>& rho);

}  // namespace bimodules

/// An n-cochain A^n -> E stored over basis tuples, tuple-major.
class HochschildCochain {
 public:
  HochschildCochain(BimodulePtr bimodule, int degree);
  HochschildCochain(BimodulePtr bimodule, int degree, Vec values);

  const Bimodule& bimodule() const { return *bimodule_; }
  const BimodulePtr& bimodule_ptr() const { return bimodule_; }
  int degree() const { return degree_; }
  std::int64_t tuple_count() const;
  const Vec& values() const { return values_; }
  Vec& values() { return values_; }
  Eigen::Map<const Vec> at(std::int64_t tuple) const;
  Eigen::Map<Vec> at(std::int64_t tuple);
  Eigen::Map<const Vec> at(std::span<const int> tuple) const;
  /// Sup over basis tuples of the Euclidean norm of the value.
  double norm() const;

  HochschildCochain operator+(const HochschildCochain& o) const;
  HochschildCochain operator-(const HochschildCochain& o) const;
  HochschildCochain operator*(cplx s) const;

 private:
  BimodulePtr bimodule_;
  int degree_;
  Vec values_;
};

/// Degrees are capped here.
inline constexpr int kMaxHochschildDegree = 3;

HochschildCochain hochschild_differential(const HochschildCochain& f);
Mat hochschild_differential_matrix(const Bimodule& e, int degree);

struct HochschildDims {
  Eigen::Index dim_z;
  Eigen::Index dim_b;
  Eigen::Index dim_h;
};
HochschildDims hochschild_cohomology_dims(const Bimodule& e, int degree, const ToleranceConfig& tol = {});

/// e = sum_p e'_p (x) e''_p in A (x) A.
class SeparabilityIdempotent {
 public:
  /// Throws InvariantViolation unless a e = e a for every basis a and
  /// sum_p e'_p e''_p = 1, both to `tol`.
  SeparabilityIdempotent(AlgebraPtr algebra, std::vector<std::pair<Vec, Vec>> terms, double tol = 1e-12);

  const FinDimAlgebra& algebra() const { return *algebra_; }
  const std::vector<std::pair<Vec, Vec>>& terms() const { return terms_; }
  /// T(j,k) = sum_p e'_p[j] e''_p[k].
  Mat tensor() const;
  double commutation_residual() const;
  double multiplication_residual() const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::pair<Vec, Vec>> terms_;
};

/// Built from the declared blocks (sum_i E_i1 (x) E_1i per block) or, for a
/// group algebra, (1/|G|) sum_g g (x) g^{-1}. Throws Unsupported otherwise.
SeparabilityIdempotent separability_idempotent(const AlgebraPtr& a);

struct HochschildSplit {
  HochschildCochain b;
  /// K*C with ||b|| <= K*C*||a|| in the sup-over-basis-tuples norm:
  /// C = action_norm, K = sum_p ||lambda(e'_p)|| ||e''_p||_1 / C.
  double bound;
};

/// b(a_1..a_n) = sum_p e'_p a(e''_p, a_1, ..., a_n), so that delta b = a for
/// every (n+1)-cocycle a. Throws NotACocycle if ||delta a|| > residual_tol.
HochschildSplit hochschild_split(const HochschildCochain& a, const SeparabilityIdempotent& e,
                                 const ToleranceConfig& tol = {});

/// f*(a_1..a_n) = f(a_n*, ..., a_1*)*. Satisfies (delta f)* = (-1)^{n+1} delta(f*).
/// Throws InputError when A or E lacks a star.
HochschildCochain cochain_star(const HochschildCochain& f);

namespace random {
HochschildCochain hochschild_cochain(BimodulePtr e, int degree, std::mt19937_64& rng);
}  // namespace random

}  // namespace rigid
