#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigid/abelian.hpp"
#include "rigid/nonabelian.hpp"

namespace rigid {

/// The scalar circle K = {λI : |λ| = 1} inside an ambient matrix group U.
/// Lie(K) is the imaginary scalars; the complement is the trace-zero part.
class CentralPair {
 public:
  /// Ambient must be unitary, general-linear (complex) or unit-scalars.
  explicit CentralPair(MatrixGroupSpec ambient);

  const MatrixGroupSpec& ambient() const { return ambient_; }
  const MatrixGroupSpec& central() const { return central_; }
  bool ambient_is_abelian() const { return ambient_.kind() == GroupKind::UnitScalars; }

  double central_residual(const Mat& a) const { return central_.membership_residual(a); }
  /// θ with a = e^{iθ}·I (a assumed central), θ in (−π, π].
  double phase(const Mat& a) const;
  Mat from_phase(double theta) const;
  /// Projection Lie(U) → Lie(K) along the trace-zero matrices.
  Mat project(const Mat& x) const { return central_.project_lie(x); }

 private:
  MatrixGroupSpec ambient_, central_;
};

/// Phases in (−π, π].
double wrap_phase(double theta);

/// The trivial real line module for phases of K-valued cochains.
ModulePtr phase_module(GroupPtr g);

/// A map u: G^n → U whose coboundary ∂u lands in K. Degree 1 for a
/// nonabelian ambient; 1..3 when the ambient is the circle itself.
class RelativeCocycle {
 public:
  RelativeCocycle(CentralPair pair, ActionPtr action, int degree, std::vector<Mat> values,
                  bool normalized = false, const ToleranceConfig& tol = {});

  const CentralPair& pair() const { return pair_; }
  const GroupAction& action() const { return *action_; }
  const ActionPtr& action_ptr() const { return action_; }
  const FiniteGroup& group() const { return action_->group(); }
  int degree() const { return degree_; }
  bool normalized() const { return normalized_; }
  const std::vector<Mat>& values() const { return values_; }
  const Mat& at(std::int64_t t) const { return values_[static_cast<std::size_t>(t)]; }
  /// Largest distance of ∂u from K.
  double relative_residual() const;

 private:
  CentralPair pair_;
  ActionPtr action_;
  int degree_;
  bool normalized_;
  std::vector<Mat> values_;
};

/// Multiplicative coboundary of a K-valued cochain given by phases,
/// with the sign that makes ∂(u·w) = ∂u·∂_K(w): returns the phases of ∂_K(w).
AbelianCochain k_coboundary(const AbelianCochain& phases);

/// ∂u as phases: ∂u(t) = exp(iσ(t))·I. Throws InvariantViolation if ∂u
/// leaves K or σ fails the circle cocycle condition.
AbelianCochain rel_coboundary(const RelativeCocycle& u, const ToleranceConfig& tol = {});

/// ξ with δξ ≡ a (mod 2π), if one exists. Exact: a real averaging split
/// reduces the question to a linear congruence modulo |G|², solved by
/// diagonalization over ℤ/|G|².
std::optional<AbelianCochain> solve_circle_coboundary(const AbelianCochain& a, const ToleranceConfig& tol = {});

struct ComponentResult {
  bool same;
  std::optional<AbelianCochain> witness;  // phases x with ∂u' = ∂u·∂_K(x)
  /// For abelian G in degree 1: the antisymmetrization σ(g,h) − σ(h,g) of
  /// the class difference, maximal |wrapped value| over pairs.
  std::optional<double> antisymmetry;
};

ComponentResult same_component(const RelativeCocycle& u, const RelativeCocycle& u_prime,
                               const ToleranceConfig& tol = {});

/// u·x for a K-valued cochain x given by phases.
RelativeCocycle fiber_transport(const RelativeCocycle& u, const AbelianCochain& phases,
                                const ToleranceConfig& tol = {});
/// u·x for K-valued matrices; throws InputError if some x(t) is not in K.
RelativeCocycle fiber_transport(const RelativeCocycle& u, const std::vector<Mat>& x,
                                const ToleranceConfig& tol = {});

struct RelativeRetraction {
  /// Degree 1, nonabelian ambient: v with v·(u'_g w_g)·ᵍv^{-1} = u_g.
  std::optional<Mat> v;
  /// Circle ambient: phases of an (n−1)-cochain with (u'·w)·∂_K(v) = u.
  std::optional<AbelianCochain> v_phases;
  AbelianCochain w;  // phases of the K-valued n-cochain
  int iterations;
  double residual;  // composite identity
};

/// Stage 1 moves u' into the fiber of ∂u by a K-cochain w (exact, no
/// locality needed); stage 2 conjugates within the fiber and needs u'·w
/// within the locality radius of u. Errors name the failing stage.
RelativeRetraction relative_retraction(const RelativeCocycle& u, const RelativeCocycle& u_prime,
                                       const ToleranceConfig& tol = {});

/// Applies (v, w) to u' and returns the composite, for checking.
std::vector<Mat> apply_relative_retraction(const RelativeCocycle& u_prime, const RelativeRetraction& r);

struct ProjectiveViolation {
  int g, h;  // h = −1 for per-element checks
  std::string what;
  double residual;
};

struct ProjectiveRepReport {
  bool ok;
  std::vector<std::vector<double>> sigma;  // phases σ(g,h)
  std::vector<ProjectiveViolation> violations;
};

/// Checks φ(gh) = σ(g,h)φ(g)φ(h) and φ(g)* = σ(g,g^{-1})φ(g^{-1}) for
/// values on G (trivial action), reporting unitarity, normalization and
/// centrality failures instead of throwing.
ProjectiveRepReport projective_rep_check(const FiniteGroup& g, const std::vector<Mat>& values,
                                         const ToleranceConfig& tol = {});

}  // namespace rigid
