#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigid/abelian.hpp"
#include "rigid/finite_group.hpp"
#include "rigid/matnum.hpp"

namespace rigid {

enum class GroupKind { GeneralLinear, Unitary, SpecialUnitary, SpecialOrthogonal, UnitScalars };

std::string to_string(GroupKind k);
GroupKind group_kind_from_string(const std::string& s);

/// A closed matrix group of n x n matrices, given by its kind.
class MatrixGroupSpec {
 public:
  /// The field is forced to Real for special-orthogonal and to Complex for
  /// the unitary kinds; general-linear honours `field`.
  MatrixGroupSpec(GroupKind kind, int n, Field field = Field::Complex);

  GroupKind kind() const { return kind_; }
  int size() const { return n_; }
  Field field() const { return field_; }
  bool is_unitary() const;  // every element satisfies A^* A = I

  /// Distance from the group; 0 for members. Infinity for singular matrices.
  double membership_residual(const Mat& a) const;
  bool contains(const Mat& a, double tol) const { return membership_residual(a) <= tol; }

  /// Linear projection onto the Lie algebra.
  Mat project_lie(const Mat& x) const;
  /// Orthonormal real basis of the Lie algebra for <A,B> = Re tr(A^* B).
  const std::vector<Mat>& lie_basis() const { return basis_; }
  int lie_dim() const { return static_cast<int>(basis_.size()); }
  /// Real coordinates in lie_basis(), stored with zero imaginary part.
  Vec lie_coords(const Mat& x) const;
  Mat from_lie_coords(const Eigen::Ref<const Vec>& c) const;

  Mat exp_lie(const Mat& x) const { return matnum::mat_exp(project_lie(x)); }
  Mat log_lie(const Mat& a) const { return project_lie(matnum::mat_log(a)); }
  /// Inverse, using the adjoint for unitary kinds.
  Mat inverse(const Mat& a) const;
  /// exp of a random Lie element of spectral norm `scale`.
  Mat random_element(double scale, std::mt19937_64& rng) const;

  friend bool operator==(const MatrixGroupSpec& a, const MatrixGroupSpec& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.field_ == b.field_;
  }

 private:
  GroupKind kind_;
  int n_;
  Field field_;
  std::vector<Mat> basis_;
};

/// An action of a finite group on a matrix group, either trivial or by
/// conjugation ᵍx = C_g x C_g^{-1} with fixed matrices C_g.
class GroupAction {
 public:
  GroupAction(GroupPtr group, MatrixGroupSpec target);
  /// Validates that Ad(C_g) is an action to `law_tol` and preserves the target.
  GroupAction(GroupPtr group, MatrixGroupSpec target, std::vector<Mat> conjugators, double law_tol = 1e-12);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const MatrixGroupSpec& target() const { return target_; }
  bool is_trivial() const { return conj_.empty(); }
  const std::vector<Mat>& conjugators() const { return conj_; }
  Mat apply(int g, const Mat& x) const;

 private:
  GroupPtr group_;
  MatrixGroupSpec target_;
  std::vector<Mat> conj_, conj_inv_;
};

using ActionPtr = std::shared_ptr<const GroupAction>;

/// Largest ‖u_{gh} − u_g·ᵍu_h‖_2 over all pairs.
double check_cocycle(const GroupAction& action, const std::vector<Mat>& values);

/// A 1-cocycle G → U: u_{gh} = u_g·ᵍu_h.
class NonabelianCocycle {
 public:
  /// Throws InputError on wrong count or non-members, NotACocycle on residual.
  NonabelianCocycle(ActionPtr action, std::vector<Mat> values, const ToleranceConfig& tol = {});

  const GroupAction& action() const { return *action_; }
  const ActionPtr& action_ptr() const { return action_; }
  const MatrixGroupSpec& target() const { return action_->target(); }
  const Mat& at(int g) const { return values_[static_cast<std::size_t>(g)]; }
  const std::vector<Mat>& values() const { return values_; }
  double residual() const { return check_cocycle(*action_, values_); }

 private:
  ActionPtr action_;
  std::vector<Mat> values_;
};

/// max_g ‖a_g − b_g‖_2.
double cocycle_distance(const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Lie algebra of the target with g▷X = u_g·ᵍX·u_g^{-1}, in lie_basis coordinates.
ModulePtr twisted_module(const NonabelianCocycle& u, const ToleranceConfig& tol = {});

struct ChartResult {
  std::vector<Mat> values;
  int iterations;
  double residual;
};

/// The exp/log chart: a twisted 1-cocycle X near 0 goes to the cocycle
/// u'_g = exp(X_g + Y_g)·u_g with a Newton-corrected Y of second order.
ChartResult chart_to_cocycle(const NonabelianCocycle& u, const AbelianCochain& x, const ToleranceConfig& tol = {});

/// Chart coordinates of a nearby cocycle: the projection of log(u'_g u_g^{-1})
/// onto the twisted cocycles.
AbelianCochain chart_coordinates(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                 const ToleranceConfig& tol = {});

struct RetractionResult {
  Mat v;
  int iterations;
  double residual;
};

/// v with u'_g = v^{-1}·u_g·ᵍv, by Newton iteration re-twisted at each step.
/// Throws OutOfNeighborhood beyond the locality radius, NoConvergence otherwise.
RetractionResult conjugation_retraction(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                        const ToleranceConfig& tol = {});

/// For group morphisms (trivial action): v with ψ(g) = v·φ(g)·v^{-1}.
RetractionResult morphism_conjugacy(const NonabelianCocycle& phi, const NonabelianCocycle& psi,
                                    const ToleranceConfig& tol = {});

/// Spectral data invariant under simultaneous conjugation.
struct H1Signature {
  std::vector<std::vector<cplx>> eigenvalues;  // per element, sorted
  std::vector<cplx> traces;                    // tr u_g, then tr(u_g u_h) for g <= h
};

H1Signature h1_invariant_signature(const NonabelianCocycle& u);
bool same_signature(const H1Signature& a, const H1Signature& b, double tol = 1e-8);

/// Best-effort global conjugacy: solve the linear equation v·u'_g·C_g = u_g·C_g·v,
/// sample the solution space `restarts` times, push into the target group and
/// polish with the retraction. Empty if no sample converges.
std::optional<RetractionResult> global_align(const NonabelianCocycle& u, const NonabelianCocycle& u_prime,
                                             std::mt19937_64& rng, int restarts = 20,
                                             const ToleranceConfig& tol = {});

namespace detail {

/// Newton core shared with the relative retraction; v with
/// u'_g = v^{-1}·u_g·ᵍv. No cocycle or locality checks.
RetractionResult retract_core(const GroupAction& action, const std::vector<Mat>& u,
                              const std::vector<Mat>& u_prime, const ToleranceConfig& tol);

/// Twisted module for arbitrary values (no cocycle check).
ModulePtr twisted_module_unchecked(const GroupAction& action, const std::vector<Mat>& u);

}  // namespace detail

namespace random {

/// A twisted 1-cocycle of sup-norm `norm` (the projection of a random cochain).
AbelianCochain tangent_cocycle(const NonabelianCocycle& u, double norm, std::mt19937_64& rng);

/// g ↦ w^{-1}·u_g·ᵍw.
std::vector<Mat> conjugate(const GroupAction& action, const std::vector<Mat>& u, const Mat& w);

}  // namespace random

}  // namespace rigid
