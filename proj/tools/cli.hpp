#pragma once

// Command implementations behind rigid_cli. Each command returns a Report;
// main() renders it and maps exceptions to exit codes.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigid/io.hpp"

namespace rigid::cli {

using io::json;

enum ExitCode : int { kOk = 0, kInputError = 2, kNoConvergence = 3, kInvariantViolation = 4 };

/// Command name, input digests, results and verdicts. Rendering is
/// deterministic; wall time is included only when asked for.
class Report {
 public:
  explicit Report(std::string command);

  void input(const std::string& role, const std::string& digest);
  void set(const std::string& key, json value) { results_[key] = std::move(value); }
  void verdict(const std::string& name, bool pass);
  std::ostream& text() { return text_; }

  bool ok() const;
  const json& results() const { return results_; }
  json verdicts() const { return verdicts_; }
  std::string render(bool as_json, std::optional<double> wall_seconds = {}) const;

 private:
  std::string command_;
  json inputs_ = json::object();
  json results_ = json::object();
  json verdicts_ = json::object();
  std::ostringstream text_;
};

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

// Text formatting shared by the commands.
std::string num(double x);
std::string sci(double x);
std::string complex_str(cplx z);
std::string matrix_str(const Mat& m, const std::string& indent = "  ");

struct Common {
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// A file argument: loaded if it exists, an error if it looks like a path,
/// otherwise passed through as a string (builtin names).
io::Document argument(const std::string& arg);

Report cmd_cohomology(const std::string& group, const std::string& module, const std::vector<int>& degrees);
Report cmd_split(const std::string& cochain);
Report cmd_retract(const std::string& base, const std::string& moved);
Report cmd_hochschild(const std::string& bimodule, const std::vector<int>& degrees, const std::string& cochain);
Report cmd_conjugate_morphisms(const std::string& phi, const std::string& psi, const std::string& mode);
Report cmd_tangent_check(const std::string& phi, const std::string& direction, std::optional<bool> cstar,
                         double tol);
Report cmd_demo(const std::string& name, const std::string& group, const std::string& target, int samples,
                const Common& common);
Report cmd_selftest(const Common& common);

// ---------------------------------------------------------------------------
// Demo scenarios, also used by the acceptance suite.

struct H1CountResult {
  int classes;         // distinct spectral signatures among the samples
  int expected;        // eigenvalue-multiset count of order-dividing-k matrices
  int samples;
  int aligned;         // samples that retract onto their class representative
  int separated_pairs; // representative pairs with no alignment found
  int representative_pairs;
};

/// Cocycles of the cyclic group of order k (trivial action) in U(n) or
/// SU(n): homomorphisms, sampled as V·diag(roots)·V*. Classes are counted by
/// signature and cross-checked by global alignment.
H1CountResult h1_count(int k, GroupKind target, int n, int samples, std::uint64_t seed, int jobs = 1);

struct PauliResult {
  std::vector<std::vector<double>> sigma;  // phases of the multiplier
  std::vector<std::string> names;
  double circle_residual;  // distance of ∂u from the scalar circle
  cplx commutator_ratio;   // σ(x,z)/σ(z,x)
  bool same_as_genuine;
  double antisymmetry;
  bool projective_ok;
  bool projective_ok_genuine;
};

PauliResult pauli_demo();
/// u(e) = I, u(x) = σ_x, u(z) = σ_z, u(xz) = σ_x σ_z on the Klein four-group.
std::vector<Mat> pauli_values();

}  // namespace rigid::cli
