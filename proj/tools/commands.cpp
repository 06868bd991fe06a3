#include <cmath>
#include <numbers>

#include "cli.hpp"
#include "rigid/errors.hpp"
#include "rigid/matnum.hpp"

namespace rigid::cli {

namespace {

json cochain_json(const AbelianCochain& c) {
  const FiniteGroup& g = c.module().group();
  const TupleIndex idx(g.order(), c.degree());
  json out = json::object();
  for (std::int64_t t = 0; t < idx.count(); ++t) out[io::tuple_key(idx.decode(t), g)] = io::to_json(Vec(c.at(t)));
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + complex_str(v(i));
  return s + ")";
}

// Phases of a degree-2 circle cochain as a table in units of π.
void phase_table(Report& r, const std::string& label, const AbelianCochain& phases) {
  const FiniteGroup& g = phases.module().group();
  json rows = json::array();
  if (phases.degree() == 2) {
    r.text() << label << " (phase/π, row g, column h):\n";
    r.text() << "      ";
    for (int h = 0; h < g.order(); ++h) r.text() << " " << g.name(h);
    r.text() << "\n";
  } else {
    r.text() << label << " (phase/π):\n";
  }
  const TupleIndex idx(g.order(), phases.degree());
  std::vector<double> row;
  for (std::int64_t t = 0; t < idx.count(); ++t) {
    const double p = wrap_phase(phases.at(t)(0).real()) / std::numbers::pi;
    const auto tup = idx.decode(t);
    if (phases.degree() == 2) {
      if (tup[1] == 0) r.text() << "  " << g.name(tup[0]) << " |";
      r.text() << " " << num(p);
      row.push_back(p);
      if (tup[1] == g.order() - 1) {
        r.text() << "\n";
        rows.push_back(row);
        row.clear();
      }
    } else {
      r.text() << "  (" << io::tuple_key(tup, g) << ") " << num(p) << "\n";
      rows.push_back(json::array({io::tuple_key(tup, g), p}));
    }
  }
  r.set(label, rows);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) { return a.table() == b.table(); }

bool same_action(const GroupAction& a, const GroupAction& b) {
  if (!same_group(a.group(), b.group()) || !(a.target() == b.target()) || a.is_trivial() != b.is_trivial())
    return false;
  for (std::size_t i = 0; i < a.conjugators().size(); ++i)
    if ((a.conjugators()[i] - b.conjugators()[i]).norm() > 1e-12) return false;
  return true;
}

}  // namespace

Report cmd_cohomology(const std::string& group, const std::string& module, const std::vector<int>& degrees) {
  Report r("cohomology");
  const auto gd = argument(group);
  r.input("group", gd.digest);
  const auto g = io::parse_group(gd.value, gd.base);
  ModulePtr m;
  if (module.empty()) {
    m = trivial_module(g, 1);
  } else {
    const auto md = argument(module);
    r.input("module", md.digest);
    m = io::parse_module(md.value, g, md.base);
  }
  r.set("group_order", g->order());
  r.set("module_dim", m->dim());
  r.text() << "group order " << g->order() << ", module dimension " << m->dim() << " (" << to_string(m->field())
           << ")\n";
  json rows = json::array();
  for (int n : degrees) {
    if (n < 0) throw InputError("degrees must be nonnegative");
    const auto d = cohomology_dims(*m, n);
    r.text() << "H^" << n << ": Z=" << d.dim_z << " B=" << d.dim_b << " H=" << d.dim_h << "\n";
    rows.push_back({{"degree", n}, {"dim_z", d.dim_z}, {"dim_b", d.dim_b}, {"dim_h", d.dim_h}});
  }
  r.set("degrees", rows);
  return r;
}

Report cmd_split(const std::string& cochain) {
  Report r("split");
  const auto doc = argument(cochain);
  r.input("cochain", doc.digest);
  const auto a = io::parse_cochain(doc.value, doc.base);
  if (a.degree() < 1) throw InputError("split needs a cocycle of degree >= 1");
  const auto b = averaging_split(a);
  const double residual = (differential(b) - a).norm();
  const double bound = a.module().action_norm() * a.norm();
  r.text() << "cocycle degree " << a.degree() << ", |a| = " << num(a.norm()) << "\n";
  r.text() << "split b of degree " << b.degree() << ", |b| = " << num(b.norm()) << " (bound " << num(bound) << ")\n";
  r.text() << "|delta b - a| = " << sci(residual) << "\n";
  const FiniteGroup& g = a.module().group();
  const TupleIndex idx(g.order(), b.degree());
  for (std::int64_t t = 0; t < idx.count(); ++t)
    r.text() << "  b(" << io::tuple_key(idx.decode(t), g) << ") = " << vec_str(Vec(b.at(t))) << "\n";
  r.set("degree", a.degree());
  r.set("norm_a", a.norm());
  r.set("norm_b", b.norm());
  r.set("bound", bound);
  r.set("residual", residual);
  r.set("b", cochain_json(b));
  r.verdict("split identity", residual <= 1e-10 * std::max(1.0, a.norm()));
  r.verdict("norm bound", b.norm() <= bound * (1 + 1e-6));
  return r;
}

Report cmd_retract(const std::string& base, const std::string& moved) {
  Report r("retract");
  const auto bd = argument(base);
  const auto md = argument(moved);
  r.input("base", bd.digest);
  r.input("moved", md.digest);
  const auto bc = io::parse_cocycle(bd.value, bd.base);
  const auto mc = io::parse_cocycle(md.value, md.base);
  if (!same_action(*bc.action, *mc.action) || bc.degree != mc.degree)
    throw InputError("base and moved cocycles have different groups, targets or actions");

  if (!bc.central && !mc.central) {
    const auto u = io::make_cocycle(bc);
    const auto up = io::make_cocycle(mc);
    const auto res = conjugation_retraction(u, up);
    r.text() << "mode: conjugation\n";
    r.text() << "conjugator v (u'_g = v^-1 u_g g(v)):\n" << matrix_str(res.v);
    r.text() << "iterations " << res.iterations << ", residual " << sci(res.residual) << "\n";
    r.set("mode", "conjugation");
    r.set("v", io::to_json(res.v));
    r.set("iterations", res.iterations);
    r.set("residual", res.residual);
    r.verdict("residual <= 1e-8", res.residual <= 1e-8);
    return r;
  }

  const auto u = io::make_relative(bc);
  const auto up = io::make_relative(mc);
  r.text() << "mode: relative\n";
  r.set("mode", "relative");
  phase_table(r, "sigma_base", rel_coboundary(u));
  phase_table(r, "sigma_moved", rel_coboundary(up));
  const auto res = relative_retraction(u, up);
  phase_table(r, "w", res.w);
  if (res.v) {
    r.text() << "conjugator v:\n" << matrix_str(*res.v);
    r.set("v", io::to_json(*res.v));
  }
  if (res.v_phases) {
    phase_table(r, "v_phases", *res.v_phases);
  }
  r.text() << "iterations " << res.iterations << ", residual " << sci(res.residual) << "\n";
  r.set("iterations", res.iterations);
  r.set("residual", res.residual);
  r.verdict("residual <= 1e-8", res.residual <= 1e-8);
  return r;
}

Report cmd_hochschild(const std::string& bimodule, const std::vector<int>& degrees, const std::string& cochain) {
  Report r("hochschild");
  if (!cochain.empty()) {
    const auto doc = argument(cochain);
    r.input("cochain", doc.digest);
    const auto a = io::parse_hochschild_cochain(doc.value, doc.base);
    if (a.degree() < 1) throw InputError("split needs a cocycle of degree >= 1");
    const auto e = separability_idempotent(a.bimodule().algebra_ptr());
    const auto s = hochschild_split(a, e);
    const double residual = (hochschild_differential(s.b) - a).norm();
    r.text() << "separability idempotent: " << e.terms().size() << " terms, commutation residual "
             << sci(e.commutation_residual()) << ", multiplication residual " << sci(e.multiplication_residual())
             << "\n";
    r.text() << "cocycle degree " << a.degree() << ", |a| = " << num(a.norm()) << "\n";
    r.text() << "split b: |b| = " << num(s.b.norm()) << " (bound " << num(s.bound * a.norm()) << ")\n";
    r.text() << "|delta b - a| = " << sci(residual) << "\n";
    const TupleIndex idx(a.bimodule().algebra().dim(), s.b.degree());
    json b = json::object();
    for (std::int64_t t = 0; t < idx.count(); ++t) {
      std::string key;
      for (int i : idx.decode(t)) key += (key.empty() ? "" : ",") + std::to_string(i);
      r.text() << "  b(" << key << ") = " << vec_str(Vec(s.b.at(t))) << "\n";
      b[key] = io::to_json(Vec(s.b.at(t)));
    }
    r.set("degree", a.degree());
    r.set("norm_a", a.norm());
    r.set("norm_b", s.b.norm());
    r.set("bound", s.bound * a.norm());
    r.set("residual", residual);
    r.set("b", b);
    r.verdict("split identity", residual <= 1e-10 * std::max(1.0, a.norm()));
    r.verdict("norm bound", s.b.norm() <= s.bound * a.norm() * (1 + 1e-6) + 1e-14);
    return r;
  }
  if (bimodule.empty()) throw InputError("hochschild needs --bimodule or --cochain");
  const auto doc = argument(bimodule);
  r.input("bimodule", doc.digest);
  const auto e = io::parse_bimodule(doc.value, doc.base);
  r.text() << "algebra dimension " << e->algebra().dim() << ", bimodule dimension " << e->dim() << "\n";
  r.set("algebra_dim", e->algebra().dim());
  r.set("bimodule_dim", e->dim());
  json rows = json::array();
  for (int n : degrees) {
    if (n < 0) throw InputError("degrees must be nonnegative");
    const auto d = hochschild_cohomology_dims(*e, n);
    r.text() << "HH^" << n << ": Z=" << d.dim_z << " B=" << d.dim_b << " H=" << d.dim_h << "\n";
    rows.push_back({{"degree", n}, {"dim_z", d.dim_z}, {"dim_b", d.dim_b}, {"dim_h", d.dim_h}});
  }
  r.set("degrees", rows);
  return r;
}

Report cmd_conjugate_morphisms(const std::string& phi_arg, const std::string& psi_arg, const std::string& mode) {
  Report r("conjugate-morphisms");
  const auto pd = argument(phi_arg);
  const auto qd = argument(psi_arg);
  r.input("phi", pd.digest);
  r.input("psi", qd.digest);
  const auto phi = io::parse_morphism(pd.value, pd.base);
  const auto psi = io::parse_morphism(qd.value, qd.base);
  ConjugationMode m;
  if (mode == "cstar") {
    m = ConjugationMode::CStar;
  } else if (mode == "banach") {
    m = ConjugationMode::Banach;
  } else if (mode == "auto") {
    m = phi.cstar() && psi.cstar() ? ConjugationMode::CStar : ConjugationMode::Banach;
  } else {
    throw InputError("mode must be auto, banach or cstar");
  }
  const auto cp = check_morphism(phi);
  const auto cq = check_morphism(psi);
  if (!cp.ok) throw InvariantViolation("phi is not a morphism", std::max(cp.unital, cp.multiplicative));
  if (!cq.ok) throw InvariantViolation("psi is not a morphism", std::max(cq.unital, cq.multiplicative));
  const double dist = morphism_distance(phi, psi);
  const auto c = conjugate_nearby_morphisms(phi, psi, m);
  const Eigen::Index n = c.w.rows();
  const double w_dev = matnum::spectral_norm(c.w - Mat::Identity(n, n));
  const std::string mode_name = m == ConjugationMode::CStar ? "cstar" : "banach";
  r.text() << "mode: " << mode_name << "\n";
  r.text() << "distance |phi - psi| = " << num(dist) << "\n";
  r.text() << "intertwiner w:\n" << matrix_str(c.w);
  r.text() << "conjugator (psi = c phi c^-1):\n" << matrix_str(c.conjugator);
  r.text() << "|w - 1| = " << num(w_dev) << "\n";
  r.text() << "intertwining residual " << sci(c.intertwining) << ", recovery residual " << sci(c.recovery) << "\n";
  if (c.commutator) r.text() << "commutator [w*w, phi] = " << sci(*c.commutator) << "\n";
  r.set("mode", mode_name);
  r.set("distance", dist);
  r.set("w", io::to_json(c.w));
  r.set("conjugator", io::to_json(c.conjugator));
  r.set("w_deviation", w_dev);
  r.set("intertwining", c.intertwining);
  r.set("recovery", c.recovery);
  if (c.commutator) r.set("commutator", *c.commutator);
  r.verdict("recovery <= 1e-8", c.recovery <= 1e-8);
  return r;
}

Report cmd_tangent_check(const std::string& phi_arg, const std::string& direction, std::optional<bool> cstar,
                         double tol) {
  Report r("tangent-check");
  const auto pd = argument(phi_arg);
  const auto dd = argument(direction);
  r.input("phi", pd.digest);
  r.input("direction", dd.digest);
  const auto phi = io::parse_morphism(pd.value, pd.base);
  const io::json& dj = dd.value.is_object() && dd.value.contains("images") ? dd.value["images"] : dd.value;
  if (!dj.is_array()) throw InputError("direction must be a list of matrices or {\"images\": [...]}");
  std::vector<Mat> dir;
  for (const auto& m : dj) dir.push_back(io::parse_matrix(m));
  const bool cs = cstar.value_or(phi.cstar());
  const auto t = tangent_cocycle_check(phi, dir, cs, tol);
  r.text() << "|delta f| = " << sci(t.residual) << "\n";
  if (t.self_adjoint) r.text() << "|f* - f| = " << sci(*t.self_adjoint) << "\n";
  r.text() << "tangent at tolerance " << sci(tol) << ": " << (t.tangent ? "yes" : "no") << "\n";
  r.set("residual", t.residual);
  if (t.self_adjoint) r.set("self_adjoint", *t.self_adjoint);
  r.set("tolerance", tol);
  r.set("tangent", t.tangent);
  return r;
}

}  // namespace rigid::cli
