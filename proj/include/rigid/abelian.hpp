#pragma once

#include <memory>
#include <random>
#include <vector>

#include "rigid/finite_group.hpp"
#include "rigid/kernels.hpp"
#include "rigid/matnum.hpp"

namespace rigid {

/// A finite-dimensional G-module: invertible matrices rho(g) with
/// rho(gh) = rho(g) rho(h).
class GModule {
 public:
  /// Validates rho(identity) = I and the action law to `law_tol` (relative
  /// to the product norms). Real-field modules must have real matrices.
  GModule(GroupPtr group, Field field, std::vector<Mat> action, double law_tol = 1e-12);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int dim() const { return dim_; }
  Field field() const { return field_; }
  const Mat& rho(int g) const { return action_[static_cast<std::size_t>(g)]; }
  const std::vector<Mat>& action() const { return action_; }
  /// sup_g ||rho(g)||_2, the norm bound of the averaging splitting.
  double action_norm() const;
  /// Largest deviation from rho(gh) = rho(g) rho(h).
  double action_law_residual() const;

  kernels::GroupActionView view() const;

 private:
  GroupPtr group_;
  Field field_;
  int dim_;
  std::vector<Mat> action_;
};

using ModulePtr = std::shared_ptr<const GModule>;

ModulePtr trivial_module(GroupPtr g, int dim, Field field = Field::Real);

/// An element of C^n(G, E): one vector of E per tuple in G^n, stored
/// tuple-major in lexicographic order.
class AbelianCochain {
 public:
  AbelianCochain(ModulePtr module, int degree);  // zero cochain
  AbelianCochain(ModulePtr module, int degree, Vec values);

  const GModule& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  int degree() const { return degree_; }
  std::int64_t tuple_count() const;
  const Vec& values() const { return values_; }
  Vec& values() { return values_; }
  Eigen::Map<const Vec> at(std::int64_t tuple) const;
  Eigen::Map<Vec> at(std::int64_t tuple);
  Eigen::Map<const Vec> at(std::span<const int> tuple) const;

  /// Sup over tuples of the Euclidean norm of the value.
  double norm() const;
  /// Value vanishes whenever some argument is the identity (within tol).
  bool is_normalized(double tol = 0.0) const;

  AbelianCochain operator+(const AbelianCochain& o) const;
  AbelianCochain operator-(const AbelianCochain& o) const;
  AbelianCochain operator*(cplx s) const;

 private:
  ModulePtr module_;
  int degree_;
  Vec values_;
};

AbelianCochain differential(const AbelianCochain& f);

/// Matrix of delta^n on C^n(G, E) in the tuple-major basis.
Mat differential_matrix(const GModule& module, int degree);

struct CohomologyDims {
  Eigen::Index dim_z;
  Eigen::Index dim_b;
  Eigen::Index dim_h;
};

/// Dimensions of Z^n, B^n and H^n (n >= 0; B^0 = 0).
CohomologyDims cohomology_dims(const GModule& module, int degree, const ToleranceConfig& tol = {});

/// Averaging splitting b(g_1..g_n) = avg_g rho(g)^{-1} a(g, g_1, ..., g_n).
/// Under the inhomogeneous differential used here this gives delta b = a
/// on every (n+1)-cocycle a, with no sign correction. Throws NotACocycle if
/// ||delta a|| exceeds tol.residual_tol.
AbelianCochain averaging_split(const AbelianCochain& a, const ToleranceConfig& tol = {});

/// The same linear map without the cocycle check (used inside Newton loops
/// where the input is a cocycle only to second order).
AbelianCochain averaging_split_unchecked(const AbelianCochain& a);

/// v with u' = u - delta v, computed as v = -split(u' - u).
AbelianCochain abelian_retraction(const AbelianCochain& u, const AbelianCochain& u_prime,
                                  const ToleranceConfig& tol = {});

/// Projects a cochain onto the normalized subcomplex by zeroing every
/// value with an identity argument.
AbelianCochain normalize(const AbelianCochain& f);

namespace random {

/// Random G-module of dimension `dim`: a direct sum of pieces of the regular
/// representation (split by a random element of its commutant), conjugated
/// by a well-conditioned random matrix.
ModulePtr module(GroupPtr g, int dim, Field field, std::mt19937_64& rng);

AbelianCochain cochain(ModulePtr m, int degree, std::mt19937_64& rng);

}  // namespace random

}  // namespace rigid
