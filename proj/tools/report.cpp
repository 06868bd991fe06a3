#include <cmath>
#include <cstdio>

#include "cli.hpp"
#include "rigid/errors.hpp"

namespace rigid::cli {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::input(const std::string& role, const std::string& digest) {
  if (!digest.empty()) inputs_[role] = "fnv1a:" + digest;
}

void Report::verdict(const std::string& name, bool pass) { verdicts_[name] = pass; }

bool Report::ok() const {
  for (const auto& [k, v] : verdicts_.items())
    if (!v.get<bool>()) return false;
  return true;
}

std::string Report::render(bool as_json, std::optional<double> wall_seconds) const {
  if (as_json) {
    json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["results"] = results_;
    j["verdicts"] = verdicts_;
    j["ok"] = ok();
    if (wall_seconds) j["wall_time_s"] = *wall_seconds;
    return j.dump(2) + "\n";
  }
  std::string out = text_.str();
  for (const auto& [k, v] : verdicts_.items()) out += std::string(v.get<bool>() ? "PASS " : "FAIL ") + k + "\n";
  if (wall_seconds) out += "wall time: " + num(*wall_seconds) + " s\n";
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const Unsupported*>(&e)) return kInputError;
  if (dynamic_cast<const NoConvergence*>(&e) || dynamic_cast<const BranchCutError*>(&e)) return kNoConvergence;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kInvariantViolation;
  if (dynamic_cast<const io::json::exception*>(&e)) return kInputError;
  return kInvariantViolation;
}

std::string num(double x) {
  if (std::abs(x) < 1e-14) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string complex_str(cplx z) {
  const double re = std::abs(z.real()) < 1e-14 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-14 ? 0.0 : z.imag();
  if (im == 0.0) return num(re);
  if (re == 0.0) return num(im) + "i";
  return num(re) + (im < 0 ? "-" : "+") + num(std::abs(im)) + "i";
}

std::string matrix_str(const Mat& m, const std::string& indent) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += indent + "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += complex_str(m(r, c));
    }
    out += "]\n";
  }
  return out;
}

io::Document argument(const std::string& arg) {
  const io::fs::path p(arg);
  if (io::fs::is_regular_file(p)) return io::load(p);
  if (p.has_extension() || arg.find('/') != std::string::npos) throw InputError("cannot open " + arg);
  return {json(arg), io::fs::current_path(), ""};
}

}  // namespace rigid::cli
