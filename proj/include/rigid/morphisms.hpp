#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigid/hochschild.hpp"

namespace rigid {

/// A linear map A -> B stored as a dim(B) x dim(A) coordinate matrix.
/// Construction only checks shapes; check_morphism reports the axioms.
class AlgebraMorphism {
 public:
  AlgebraMorphism(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix, bool cstar = false);
  /// From the realized images of the domain basis.
  static AlgebraMorphism from_images(AlgebraPtr domain, AlgebraPtr codomain, const std::vector<Mat>& images,
                                     bool cstar = false);

  const FinDimAlgebra& domain() const { return *domain_; }
  const FinDimAlgebra& codomain() const { return *codomain_; }
  const AlgebraPtr& domain_ptr() const { return domain_; }
  const AlgebraPtr& codomain_ptr() const { return codomain_; }
  const Mat& matrix() const { return matrix_; }
  bool cstar() const { return cstar_; }

  /// Realized image of the i-th domain basis element.
  Mat image(int i) const;
  Mat image_of(const Vec& a) const;
  std::vector<Mat> images() const;

 private:
  AlgebraPtr domain_, codomain_;
  Mat matrix_;
  bool cstar_;
};

struct MorphismReport {
  double unital;
  double multiplicative;
  std::optional<double> star;  // set when both sides carry stars and the cstar flag is on
  bool ok;
};

MorphismReport check_morphism(const AlgebraMorphism& phi, const ToleranceConfig& tol = {});

/// max_i ||phi(e_i) - psi(e_i)||_2 / ||e_i||_2 over the domain basis, in
/// the realizations of both algebras.
double morphism_distance(const AlgebraMorphism& phi, const AlgebraMorphism& psi);

/// B as an A-bimodule through phi: a.b.a' = phi(a) b phi(a'); it carries
/// B's star when phi is flagged cstar and both sides have stars.
BimodulePtr induced_bimodule(const AlgebraMorphism& phi);

/// w = sum_p psi(e'_p) phi(e''_p). For any two morphisms psi(a) w = w phi(a).
Mat intertwiner(const AlgebraMorphism& phi, const AlgebraMorphism& psi, const SeparabilityIdempotent& e);
double intertwining_residual(const AlgebraMorphism& phi, const AlgebraMorphism& psi, const Mat& w);

enum class ConjugationMode { Banach, CStar };

struct MorphismConjugation {
  Mat w;
  /// w itself (banach) or its unitary polar part (cstar): psi = c phi c^{-1}.
  Mat conjugator;
  double intertwining;  // max_i ||psi(e_i) w - w phi(e_i)||
  double recovery;      // max_i ||c phi(e_i) c^{-1} - psi(e_i)||
  std::optional<double> commutator;  // cstar: max_i ||[w* w, phi(e_i)]||
};

/// Conjugates psi back to phi through the separability-idempotent
/// intertwiner. Throws OutOfNeighborhood when w is singular and
/// InvariantViolation if the cstar polar step is not justified.
MorphismConjugation conjugate_nearby_morphisms(const AlgebraMorphism& phi, const AlgebraMorphism& psi,
                                               ConjugationMode mode, const ToleranceConfig& tol = {});

struct TangentReport {
  double residual;                     // ||delta^1 f||
  std::optional<double> self_adjoint;  // ||f* - f|| in cstar mode
  bool tangent;
};

/// Is `direction` (realized images of the domain basis) a Hochschild
/// 1-cocycle for the bimodule induced by phi (self-adjoint in cstar mode)?
TangentReport tangent_cocycle_check(const AlgebraMorphism& phi, const std::vector<Mat>& direction, bool cstar,
                                    double tol);

struct DualNumbersStep {
  int k;
  double r;
  double distance;              // max-entry distance to eps -> 0
  double conjugation_residual;  // diag(r,1) phi_1 diag(r,1)^{-1} vs phi_r
  double morphism_residual;
};

struct DualNumbersReport {
  std::vector<DualNumbersStep> steps;
  bool strictly_decreasing;
  bool degenerate_is_morphism;
  /// rank phi_r(eps) = 1 for every r != 0 while the limit has rank 0.
  bool limit_outside_orbit;
};

/// A = R[eps]/(eps^2) into M_2(R) along eps -> 2^{-k} E_12, k = 0..kmax.
DualNumbersReport dual_numbers_demo(int kmax = 20);

struct OrbitClass {
  int rank;  // rank of phi(1,0)
  int samples;
  bool closed;  // limits of convergent conjugate sequences keep the rank
  double conjugation_residual;
};

struct SemisimpleReport {
  std::vector<OrbitClass> classes;
  int orbit_count;
  bool all_closed;
};

/// Unital *-morphisms C^2 -> M_2 classified by the rank of the image of
/// (1,0), with closure checked along sequences u exp(2^{-k} X) of unitaries.
SemisimpleReport semisimple_orbit_demo(std::mt19937_64& rng, int samples = 60);

}  // namespace rigid
