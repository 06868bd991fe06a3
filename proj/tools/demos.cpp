#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cli.hpp"
#include "rigid/errors.hpp"
#include "rigid/matnum.hpp"
#include "rigid/random.hpp"

namespace rigid::cli {

namespace {

Mat diag(const std::vector<cplx>& d) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

cplx root_of_unity(int k, int a) {
  const double t = 2.0 * std::numbers::pi * a / k;
  return {std::cos(t), std::sin(t)};
}

// Nondecreasing exponent vectors in {0..k-1}^n; with `special`, exponent sum = 0 mod k.
std::vector<std::vector<int>> exponent_multisets(int k, int n, bool special) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    int sum = 0;
    for (int x : a) sum += x;
    if (!special || sum % k == 0) out.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == k - 1) --i;
    if (i < 0) break;
    const int v = a[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j) a[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

// The homomorphism s^g -> V diag(w^{a_i g}) V* of the cyclic group.
std::vector<Mat> cyclic_hom(int k, const std::vector<int>& a, const Mat& v) {
  std::vector<Mat> out;
  for (int g = 0; g < k; ++g) {
    std::vector<cplx> d;
    for (int x : a) d.push_back(root_of_unity(k, (x * g) % k));
    out.push_back(v * diag(d) * v.adjoint());
  }
  return out;
}

Mat pauli(char which) {
  Mat m(2, 2);
  if (which == 'x') m << 0, 1, 1, 0;
  else m << 1, 0, 0, -1;
  return m;
}

void dual_numbers(Report& r) {
  const auto rep = dual_numbers_demo(20);
  r.text() << "A = R[eps]/(eps^2) -> M2(R), eps -> r E12 with r = 2^-k\n";
  r.text() << "   k  r            distance     conj residual  morphism residual\n";
  json rows = json::array();
  bool exact = true, conj = true;
  for (const auto& s : rep.steps) {
    char line[128];
    std::snprintf(line, sizeof line, "  %2d  %-11.6g  %-11.6g  %-13s  %s\n", s.k, s.r, s.distance,
                  sci(s.conjugation_residual).c_str(), sci(s.morphism_residual).c_str());
    r.text() << line;
    exact = exact && s.distance == std::ldexp(1.0, -s.k);
    conj = conj && s.conjugation_residual == 0.0 && s.morphism_residual == 0.0;
    rows.push_back({{"k", s.k}, {"r", s.r}, {"distance", s.distance},
                    {"conjugation_residual", s.conjugation_residual}, {"morphism_residual", s.morphism_residual}});
  }
  r.text() << "limit eps -> 0 is a morphism: " << (rep.degenerate_is_morphism ? "yes" : "no")
           << "; outside the orbit (rank drops): " << (rep.limit_outside_orbit ? "yes" : "no") << "\n";
  r.set("steps", rows);
  r.set("strictly_decreasing", rep.strictly_decreasing);
  r.set("degenerate_is_morphism", rep.degenerate_is_morphism);
  r.set("limit_outside_orbit", rep.limit_outside_orbit);
  r.verdict("distance = 2^-k exactly", exact);
  r.verdict("members conjugate by diag(r,1)", conj);
  r.verdict("strictly decreasing", rep.strictly_decreasing);
  r.verdict("limit is a non-conjugate morphism", rep.degenerate_is_morphism && rep.limit_outside_orbit);
}

void projections(Report& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto rep = semisimple_orbit_demo(rng);
  r.text() << "unital *-morphisms C^2 -> M2 by rank of phi(1,0):\n";
  json rows = json::array();
  for (const auto& c : rep.classes) {
    r.text() << "  rank " << c.rank << ": " << c.samples << " samples, closed " << (c.closed ? "yes" : "no")
             << ", conjugation residual " << sci(c.conjugation_residual) << "\n";
    rows.push_back({{"rank", c.rank}, {"samples", c.samples}, {"closed", c.closed},
                    {"conjugation_residual", c.conjugation_residual}});
  }
  r.text() << "unitary orbits: " << rep.orbit_count << "\n";

  // orthogonal projections E11 and E22: far apart, the intertwiner vanishes
  Mat e11 = Mat::Zero(2, 2), e22 = Mat::Zero(2, 2);
  e11(0, 0) = 1.0;
  e22(1, 1) = 1.0;
  const auto c2 = algebras::diagonal(2);
  const auto m2 = algebras::matrix(2);
  const auto phi = AlgebraMorphism::from_images(c2, m2, {e11, e22}, true);
  const auto psi = AlgebraMorphism::from_images(c2, m2, {e22, e11}, true);
  const Mat w = intertwiner(phi, psi, separability_idempotent(c2));
  r.text() << "far pair E11 vs E22: distance " << num(morphism_distance(phi, psi)) << ", |w| = " << num(w.norm())
           << "\n";
  r.set("classes", rows);
  r.set("orbit_count", rep.orbit_count);
  r.set("far_pair_w_norm", w.norm());
  r.verdict("3 orbits", rep.orbit_count == 3);
  r.verdict("orbits closed", rep.all_closed);
  r.verdict("far pair w = 0", w == Mat::Zero(2, 2));
}

void pauli_report(Report& r) {
  const auto p = pauli_demo();
  r.text() << "Pauli projective representation of Z2 x Z2 in U(2): u(x) = sigma_x, u(z) = sigma_z\n";
  r.text() << "multiplier sigma (phase/π, row g, column h):\n      ";
  for (const auto& n : p.names) r.text() << " " << n;
  r.text() << "\n";
  for (std::size_t g = 0; g < p.sigma.size(); ++g) {
    r.text() << "  " << p.names[g] << " |";
    for (double s : p.sigma[g]) r.text() << " " << num(s / std::numbers::pi);
    r.text() << "\n";
  }
  const double zx = std::cos(p.sigma[2][1]);
  r.text() << "sigma(z,x) = " << num(zx) << ", sigma(x,z)/sigma(z,x) = " << complex_str(p.commutator_ratio) << "\n";
  r.text() << "distance of coboundary from the circle: " << sci(p.circle_residual) << "\n";
  r.text() << "same component as a genuine representation: " << (p.same_as_genuine ? "yes" : "no")
           << " (antisymmetry " << num(p.antisymmetry / std::numbers::pi) << "π)\n";
  r.text() << "class of sigma: " << (p.same_as_genuine ? "trivial" : "nontrivial") << "\n";
  json sig = json::array();
  for (const auto& row : p.sigma) sig.push_back(row);
  r.set("sigma", sig);
  r.set("sigma_zx", zx);
  r.set("commutator_ratio", io::to_json(p.commutator_ratio));
  r.set("circle_residual", p.circle_residual);
  r.set("same_component_as_genuine", p.same_as_genuine);
  r.verdict("coboundary in the circle", p.circle_residual <= 1e-12);
  r.verdict("sigma(x,z)/sigma(z,x) = -1", p.commutator_ratio == cplx(-1.0, 0.0));
  r.verdict("class nontrivial", !p.same_as_genuine);
  r.verdict("projective identities", p.projective_ok && p.projective_ok_genuine);
}

// "su2" -> (SpecialUnitary, 2), "u3" -> (Unitary, 3).
std::pair<GroupKind, int> parse_target(const std::string& t) {
  std::size_t pos = 0;
  GroupKind kind;
  if (t.rfind("su", 0) == 0) {
    kind = GroupKind::SpecialUnitary;
    pos = 2;
  } else if (t.rfind("u", 0) == 0) {
    kind = GroupKind::Unitary;
    pos = 1;
  } else {
    throw InputError("target must be su<n> or u<n>, got '" + t + "'");
  }
  int n = 0;
  try {
    n = std::stoi(t.substr(pos));
  } catch (const std::exception&) {
    throw InputError("target must be su<n> or u<n>, got '" + t + "'");
  }
  if (n < 1 || n > 4) throw InputError("target size must be between 1 and 4");
  return {kind, n};
}

void h1_report(Report& r, const std::string& group, const std::string& target, int samples, const Common& common) {
  const auto g = groups::by_name(group);
  const int k = g->order();
  bool cyclic = false;
  for (int x = 0; x < k && !cyclic; ++x) {
    int ord = 1;
    for (int y = x; y != g->identity(); y = g->mul(y, x)) ++ord;
    cyclic = ord == k;
  }
  if (!cyclic) throw Unsupported("h1-count supports cyclic groups only");
  const auto [kind, n] = parse_target(target);
  const auto res = h1_count(k, kind, n, samples, common.seed, common.jobs);
  r.text() << "H^1(Z/" << k << ", " << to_string(kind) << "(" << n << ")) with trivial action\n";
  r.text() << "samples " << res.samples << ", classes by signature " << res.classes << ", expected "
           << res.expected << "\n";
  r.text() << "aligned to their class representative: " << res.aligned << "/" << res.samples << "\n";
  r.text() << "representative pairs kept apart: " << res.separated_pairs << "/" << res.representative_pairs << "\n";
  r.text() << res.classes << " classes\n";
  r.set("classes", res.classes);
  r.set("expected", res.expected);
  r.set("samples", res.samples);
  r.set("aligned", res.aligned);
  r.set("separated_pairs", res.separated_pairs);
  r.verdict("class count matches classification", res.classes == res.expected);
  r.verdict("same-signature samples retract", res.aligned == res.samples);
  r.verdict("distinct classes not aligned", res.separated_pairs == res.representative_pairs);
}

}  // namespace

std::vector<Mat> pauli_values() {
  return {Mat::Identity(2, 2), pauli('x'), pauli('z'), Mat(pauli('x') * pauli('z'))};
}

PauliResult pauli_demo() {
  const auto g = groups::klein_four();
  const MatrixGroupSpec u2(GroupKind::Unitary, 2);
  const auto action = std::make_shared<GroupAction>(g, u2);
  const RelativeCocycle u(CentralPair(u2), action, 1, pauli_values(), true);
  const std::vector<Mat> genuine_values{Mat::Identity(2, 2), diag({1.0, -1.0}), diag({-1.0, 1.0}),
                                        Mat(-Mat::Identity(2, 2))};
  const RelativeCocycle genuine(CentralPair(u2), action, 1, genuine_values, true);

  PauliResult p;
  p.names = g->names();
  const auto s = rel_coboundary(u);
  const TupleIndex idx(g->order(), 2);
  p.sigma.assign(4, std::vector<double>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int t[2] = {a, b};
      p.sigma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = wrap_phase(s.at(idx.encode(t))(0).real());
    }
  p.circle_residual = u.relative_residual();
  // ∂u(g,h) = u_gh (u_g u_h)^{-1}, read off directly
  const auto bd = [&](int a, int b) -> cplx {
    return (u.at(g->mul(a, b)) * (u.at(a) * u.at(b)).inverse())(0, 0);
  };
  p.commutator_ratio = bd(1, 2) / bd(2, 1);
  const auto comp = same_component(u, genuine);
  p.same_as_genuine = comp.same;
  p.antisymmetry = comp.antisymmetry.value_or(0.0);
  p.projective_ok = projective_rep_check(*g, u.values()).ok;
  p.projective_ok_genuine = projective_rep_check(*g, genuine_values).ok;
  return p;
}

H1CountResult h1_count(int k, GroupKind target, int n, int samples, std::uint64_t seed, int jobs) {
  const auto g = groups::cyclic(k);
  const MatrixGroupSpec spec(target, n);
  const auto action = std::make_shared<GroupAction>(g, spec);
  const auto shapes = exponent_multisets(k, n, target == GroupKind::SpecialUnitary);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::vector<NonabelianCocycle> cocycles;
  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < samples; ++s) {
    const auto& a = shapes[pick(rng)];
    cocycles.emplace_back(action, cyclic_hom(k, a, random::unitary(n, Field::Complex, rng)));
    seeds.push_back(rng());
  }

  std::vector<H1Signature> rep_sig;
  std::vector<int> rep_index, class_of;
  for (int s = 0; s < samples; ++s) {
    const auto sig = h1_invariant_signature(cocycles[static_cast<std::size_t>(s)]);
    int c = 0;
    while (c < static_cast<int>(rep_sig.size()) && !same_signature(rep_sig[static_cast<std::size_t>(c)], sig)) ++c;
    if (c == static_cast<int>(rep_sig.size())) {
      rep_sig.push_back(sig);
      rep_index.push_back(s);
    }
    class_of.push_back(c);
  }

  int aligned = 0;
#pragma omp parallel for num_threads(std::max(1, jobs)) schedule(static) reduction(+ : aligned)
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 local(seeds[static_cast<std::size_t>(s)]);
    const auto& rep = cocycles[static_cast<std::size_t>(rep_index[static_cast<std::size_t>(class_of[static_cast<std::size_t>(s)])])];
    try {
      const auto r = global_align(rep, cocycles[static_cast<std::size_t>(s)], local);
      if (r && r->residual <= 1e-8) ++aligned;
    } catch (const Error&) {
      // counted as not aligned
    }
  }

  int separated = 0, pairs = 0;
  std::mt19937_64 pair_rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (std::size_t a = 0; a < rep_index.size(); ++a)
    for (std::size_t b = a + 1; b < rep_index.size(); ++b) {
      ++pairs;
      const auto r = global_align(cocycles[static_cast<std::size_t>(rep_index[a])],
                                  cocycles[static_cast<std::size_t>(rep_index[b])], pair_rng);
      if (!r) ++separated;
    }

  return {static_cast<int>(rep_sig.size()), static_cast<int>(shapes.size()), samples, aligned, separated, pairs};
}

Report cmd_demo(const std::string& name, const std::string& group, const std::string& target, int samples,
                const Common& common) {
  Report r("demo " + name);
  if (name == "dual-numbers") {
    dual_numbers(r);
  } else if (name == "projections") {
    projections(r, common.seed);
  } else if (name == "pauli") {
    pauli_report(r);
  } else if (name == "h1-count") {
    h1_report(r, group, target, samples, common);
  } else {
    throw InputError("unknown demo '" + name + "' (dual-numbers, projections, pauli, h1-count)");
  }
  return r;
}

Report cmd_selftest(const Common& common) {
  Report r("selftest");
  std::mt19937_64 rng(common.seed);

  {
    const auto g = groups::cyclic(2);
    const auto sign = std::make_shared<GModule>(g, Field::Real, std::vector<Mat>{Mat::Identity(1, 1), Mat(-Mat::Identity(1, 1))});
    const auto d = cohomology_dims(*sign, 1);
    r.text() << "H^1(Z/2, sign): Z=" << d.dim_z << " B=" << d.dim_b << " H=" << d.dim_h << "\n";
    r.verdict("sign module H^1", d.dim_z == 1 && d.dim_b == 1 && d.dim_h == 0);
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random::module(groups::symmetric(3), 3, Field::Complex, rng);
      const auto a = differential(random::cochain(m, 1 + trial % 2, rng));
      worst = std::max(worst, (differential(averaging_split(a)) - a).norm());
    }
    r.text() << "averaging split on S3, worst residual " << sci(worst) << "\n";
    r.verdict("averaging split", worst <= 1e-10);
  }
  {
    const auto g = groups::cyclic(3);
    const auto action = std::make_shared<GroupAction>(g, MatrixGroupSpec(GroupKind::Unitary, 2));
    const NonabelianCocycle u(action, cyclic_hom(3, {1, 2}, Mat::Identity(2, 2)));
    const Mat w = matnum::mat_exp(random::skew_hermitian(2, 0.05, rng));
    const NonabelianCocycle moved(action, random::conjugate(*action, u.values(), w));
    const auto res = conjugation_retraction(u, moved);
    r.text() << "conjugation retraction on Z/3 -> U(2): " << res.iterations << " steps, residual "
             << sci(res.residual) << "\n";
    r.verdict("conjugation retraction", res.residual <= 1e-8);
  }
  {
    const auto p = pauli_demo();
    r.text() << "Pauli multiplier nontrivial: " << (p.same_as_genuine ? "no" : "yes") << "\n";
    r.verdict("Pauli class", !p.same_as_genuine && p.commutator_ratio == cplx(-1.0, 0.0));
  }
  {
    const auto m2 = hochschild_cohomology_dims(*bimodules::regular(algebras::matrix(2)), 1);
    const auto dn = hochschild_cohomology_dims(*bimodules::regular(algebras::dual_numbers()), 1);
    r.text() << "HH^1(M2) = " << m2.dim_h << ", HH^1(dual numbers) = " << dn.dim_h << "\n";
    r.verdict("Hochschild H^1", m2.dim_h == 0 && dn.dim_h >= 1);
  }
  {
    const auto c3 = algebras::diagonal(3);
    std::vector<Mat> ps(3, Mat::Zero(4, 4));
    ps[0](0, 0) = ps[1](1, 1) = ps[2](2, 2) = ps[2](3, 3) = 1.0;
    const auto phi = AlgebraMorphism::from_images(c3, algebras::matrix(4), ps, true);
    const Mat u = matnum::mat_exp(random::skew_hermitian(4, 0.1, rng));
    std::vector<Mat> moved;
    for (const Mat& p : ps) moved.push_back(u * p * u.adjoint());
    const auto psi = AlgebraMorphism::from_images(c3, algebras::matrix(4), moved, true);
    const auto c = conjugate_nearby_morphisms(phi, psi, ConjugationMode::CStar);
    r.text() << "nearby morphism conjugation C^3 -> M4: recovery " << sci(c.recovery) << "\n";
    r.verdict("morphism conjugation", c.recovery <= 1e-8);
  }
  {
    const auto rep = dual_numbers_demo(20);
    bool exact = true;
    for (const auto& s : rep.steps) exact = exact && s.distance == std::ldexp(1.0, -s.k);
    r.text() << "dual-numbers distances exact: " << (exact ? "yes" : "no") << "\n";
    r.verdict("dual numbers", exact && rep.limit_outside_orbit);
  }
  return r;
}

}  // namespace rigid::cli
