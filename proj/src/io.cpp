#include "rigid/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rigid/errors.hpp"

namespace rigid::io {

namespace {

std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

const json& need(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Field field_of(const json& j, Field fallback) {
  return j.contains("field") ? field_from_string(get<std::string>(j.at("field"), "field")) : fallback;
}

std::vector<Mat> parse_matrix_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a list of matrices");
  std::vector<Mat> out;
  for (const auto& m : j) out.push_back(parse_matrix(m));
  return out;
}

// Per-element matrices keyed by element name or index.
std::vector<Mat> element_map(const json& j, const FiniteGroup& g, const Mat& fill_identity, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object keyed by group element");
  std::vector<std::optional<Mat>> vals(at(g.order()));
  for (const auto& [k, v] : j.items()) vals[at(g.index_of(k))] = parse_matrix(v);
  std::vector<Mat> out;
  for (int e = 0; e < g.order(); ++e) {
    if (vals[at(e)]) {
      out.push_back(*vals[at(e)]);
    } else if (e == g.identity() && fill_identity.size() > 0) {
      out.push_back(fill_identity);
    } else {
      throw InputError(std::string(what) + ": no value for element " + g.name(e));
    }
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Document load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Document d;
  try {
    d.value = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  d.base = path.parent_path();
  d.digest = hex64(fnv1a(text));
  return d;
}

Document resolve(const json& ref, const fs::path& base) {
  if (ref.is_string()) {
    const fs::path p = base / ref.get<std::string>();
    if (fs::is_regular_file(p)) return load(p);
  }
  return {ref, base, ""};
}

cplx parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("expected a number or a [re, im] pair, got " + j.dump());
}

Vec parse_vector(const json& j) {
  if (!j.is_array()) throw InputError("expected a vector, got " + j.dump());
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(j[i]);
  return v;
}

Mat parse_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("expected a matrix (list of rows)");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[at(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw InputError("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_complex(row[at(c)]);
  }
  return m;
}

json to_json(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------------------

GroupPtr parse_group(const json& ref, const fs::path& base) {
  const auto doc = resolve(ref, base);
  const json& j = doc.value;
  if (j.is_string()) return groups::by_name(j.get<std::string>());
  if (j.is_object() && j.contains("name") && !j.contains("mul")) return groups::by_name(get<std::string>(j["name"], "group name"));
  const auto table = get<std::vector<std::vector<int>>>(need(j, "mul", "group"), "group table");
  if (j.contains("order") && get<int>(j["order"], "group order") != static_cast<int>(table.size()))
    throw InputError("group: order does not match the table");
  std::vector<std::string> names;
  if (j.contains("names")) names = get<std::vector<std::string>>(j["names"], "group names");
  return std::make_shared<FiniteGroup>(table, names);
}

ModulePtr parse_module(const json& ref, const GroupPtr& g, const fs::path& base) {
  const auto doc = resolve(ref, base);
  const json& j = doc.value;
  const int dim = get<int>(need(j, "dim", "module"), "module dim");
  const Field f = field_of(j, Field::Real);
  if (j.value("trivial", false)) return trivial_module(g, dim, f);
  const auto act = element_map(need(j, "action", "module"), *g, Mat::Identity(dim, dim), "module action");
  for (const Mat& a : act)
    if (a.rows() != dim || a.cols() != dim) throw InputError("module action matrices must be dim x dim");
  return std::make_shared<GModule>(g, f, act);
}

std::vector<int> parse_tuple_key(const std::string& key, const FiniteGroup& g) {
  std::vector<int> out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = key.find(',', start);
    std::string part = key.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    out.push_back(g.index_of(part));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string tuple_key(std::span<const int> tuple, const FiniteGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += g.name(tuple[i]);
  }
  return s;
}

AbelianCochain parse_cochain(const json& j, const fs::path& base) {
  const auto g = parse_group(need(j, "group", "cochain"), base);
  const auto mod = parse_module(need(j, "module", "cochain"), g, base);
  const int n = get<int>(need(j, "degree", "cochain"), "cochain degree");
  AbelianCochain c(mod, n);
  const TupleIndex idx(g->order(), n);
  if (j.contains("values")) {
    for (const auto& [k, v] : j["values"].items()) {
      const auto t = parse_tuple_key(k, *g);
      if (static_cast<int>(t.size()) != n) throw InputError("cochain key '" + k + "' has the wrong arity");
      const Vec x = parse_vector(v);
      if (x.size() != mod->dim()) throw InputError("cochain value for '" + k + "' has the wrong length");
      c.at(idx.encode(t)) = x;
    }
  }
  if (j.value("normalized", false) && !c.is_normalized(1e-12))
    throw InputError("cochain is flagged normalized but has values at identity arguments");
  return c;
}

CocycleData parse_cocycle(const json& j, const fs::path& base) {
  CocycleData d;
  const auto g = parse_group(need(j, "group", "cocycle"), base);
  const json& t = need(j, "target", "cocycle");
  const auto kind = group_kind_from_string(get<std::string>(need(t, "kind", "target"), "target kind"));
  const int n = t.value("n", 1);
  const MatrixGroupSpec target(kind, n, field_of(t, Field::Complex));
  const Mat id = Mat::Identity(n, n);

  const json action = j.value("action", json("trivial"));
  if (action.is_string()) {
    if (action.get<std::string>() != "trivial") throw InputError("action must be \"trivial\" or an object");
    d.action = std::make_shared<GroupAction>(g, target);
  } else {
    d.action = std::make_shared<GroupAction>(
        g, target, element_map(need(action, "conjugators", "action"), *g, id, "action conjugators"));
  }
  d.normalized = j.value("normalized", false);
  d.degree = j.value("degree", 1);
  if (j.contains("central")) {
    const auto ck = get<std::string>(need(j["central"], "kind", "central"), "central kind");
    if (ck != "unit-scalars") throw Unsupported("central subgroup '" + ck + "' (only unit-scalars is supported)");
    d.central = CentralPair(target);
  }
  const json& vals = need(j, "values", "cocycle");
  if (d.degree == 1) {
    d.values = element_map(vals, *g, d.normalized ? id : Mat(), "cocycle values");
  } else {
    const TupleIndex idx(g->order(), d.degree);
    std::vector<std::optional<Mat>> v(at(idx.count()));
    for (const auto& [k, x] : vals.items()) {
      const auto tup = parse_tuple_key(k, *g);
      if (static_cast<int>(tup.size()) != d.degree) throw InputError("cocycle key '" + k + "' has the wrong arity");
      v[at(idx.encode(tup))] = parse_matrix(x);
    }
    for (std::int64_t i = 0; i < idx.count(); ++i) {
      if (!v[at(i)]) {
        const auto tup = idx.decode(i);
        const bool has_id = std::find(tup.begin(), tup.end(), g->identity()) != tup.end();
        if (!(d.normalized && has_id)) throw InputError("cocycle: no value for '" + tuple_key(tup, *g) + "'");
        v[at(i)] = id;
      }
      d.values.push_back(*v[at(i)]);
    }
  }
  return d;
}

NonabelianCocycle make_cocycle(const CocycleData& d, const ToleranceConfig& tol) {
  if (d.degree != 1) throw InputError("nonabelian cocycles have degree 1");
  return NonabelianCocycle(d.action, d.values, tol);
}

RelativeCocycle make_relative(const CocycleData& d, const ToleranceConfig& tol) {
  const CentralPair pair = d.central ? *d.central : CentralPair(d.action->target());
  return RelativeCocycle(pair, d.action, d.degree, d.values, d.normalized, tol);
}

// ---------------------------------------------------------------------------

AlgebraPtr parse_algebra(const json& ref, const fs::path& base) {
  const auto doc = resolve(ref, base);
  const json& j = doc.value;
  if (j.contains("builtin")) {
    const auto b = get<std::string>(j["builtin"], "builtin algebra");
    if (b == "matrix") return algebras::matrix(get<int>(need(j, "size", "matrix algebra"), "size"), field_of(j, Field::Complex));
    if (b == "diagonal") return algebras::diagonal(get<int>(need(j, "size", "diagonal algebra"), "size"));
    if (b == "dual-numbers") return algebras::dual_numbers();
    if (b == "product") {
      const json& fs_ = need(j, "factors", "product algebra");
      if (!fs_.is_array() || fs_.empty()) throw InputError("product algebra needs a nonempty factor list");
      AlgebraPtr acc = parse_algebra(fs_[0], doc.base);
      for (std::size_t i = 1; i < fs_.size(); ++i) acc = algebras::product(*acc, *parse_algebra(fs_[i], doc.base));
      return acc;
    }
    throw InputError("unknown builtin algebra '" + b + "'");
  }
  if (j.contains("group_algebra_of")) return algebras::group_algebra(parse_group(j["group_algebra_of"], doc.base));

  const int d = get<int>(need(j, "dim", "algebra"), "algebra dim");
  const json& s = need(j, "structure", "algebra");
  if (!s.is_array() || static_cast<int>(s.size()) != d) throw InputError("structure must be d x d x d");
  std::vector<cplx> c(at(std::int64_t{d} * d * d));
  for (int i = 0; i < d; ++i) {
    if (!s[at(i)].is_array() || static_cast<int>(s[at(i)].size()) != d) throw InputError("structure must be d x d x d");
    for (int k = 0; k < d; ++k) {
      const Vec row = parse_vector(s[at(i)][at(k)]);
      if (row.size() != d) throw InputError("structure must be d x d x d");
      for (int m = 0; m < d; ++m) c[at((std::int64_t{i} * d + k) * d + m)] = row(m);
    }
  }
  std::optional<Mat> star;
  if (j.contains("star")) star = parse_matrix(j["star"]);
  std::vector<MatrixBlock> blocks;
  if (j.contains("blocks"))
    for (const auto& b : j["blocks"]) blocks.push_back({get<int>(need(b, "size", "block"), "block size"), field_of(b, Field::Complex)});
  return std::make_shared<FinDimAlgebra>(d, field_of(j, Field::Complex), std::move(c),
                                         parse_vector(need(j, "unit", "algebra")), star, blocks);
}

BimodulePtr parse_bimodule(const json& ref, const fs::path& base) {
  const auto doc = resolve(ref, base);
  const json& j = doc.value;
  const auto a = parse_algebra(need(j, "algebra", "bimodule"), doc.base);
  const std::string kind = j.value("kind", std::string(j.contains("left") ? "explicit" : "regular"));
  if (kind == "regular") return bimodules::regular(a);
  if (kind == "matrices")
    return bimodules::matrices(a, parse_matrix_list(need(j, "phi", "bimodule"), "phi"),
                               parse_matrix_list(need(j, "psi", "bimodule"), "psi"), j.value("star", false));
  if (kind == "explicit") {
    std::optional<Mat> star;
    if (j.contains("star")) star = parse_matrix(j["star"]);
    return std::make_shared<Bimodule>(a, parse_matrix_list(need(j, "left", "bimodule"), "left"),
                                      parse_matrix_list(need(j, "right", "bimodule"), "right"), star);
  }
  throw InputError("unknown bimodule kind '" + kind + "'");
}

HochschildCochain parse_hochschild_cochain(const json& j, const fs::path& base) {
  const auto e = parse_bimodule(need(j, "bimodule", "Hochschild cochain"), base);
  const int n = get<int>(need(j, "degree", "Hochschild cochain"), "degree");
  HochschildCochain f(e, n);
  const int d = e->algebra().dim();
  const TupleIndex idx(d, n);
  if (j.contains("values")) {
    for (const auto& [k, v] : j["values"].items()) {
      std::vector<int> t;
      std::stringstream ss(k);
      std::string part;
      while (std::getline(ss, part, ',')) {
        int i = -1;
        try {
          i = std::stoi(part);
        } catch (const std::exception&) {
          throw InputError("Hochschild cochain key '" + k + "' must list basis indices");
        }
        if (i < 0 || i >= d) throw InputError("basis index out of range in '" + k + "'");
        t.push_back(i);
      }
      if (static_cast<int>(t.size()) != n) throw InputError("Hochschild cochain key '" + k + "' has the wrong arity");
      const Vec x = parse_vector(v);
      if (x.size() != e->dim()) throw InputError("Hochschild cochain value has the wrong length");
      f.at(idx.encode(t)) = x;
    }
  }
  return f;
}

AlgebraMorphism parse_morphism(const json& ref, const fs::path& base) {
  const auto doc = resolve(ref, base);
  const json& j = doc.value;
  const auto a = parse_algebra(need(j, "domain", "morphism"), doc.base);
  const auto b = parse_algebra(need(j, "codomain", "morphism"), doc.base);
  const bool cstar = j.value("cstar", false);
  if (j.contains("images")) return AlgebraMorphism::from_images(a, b, parse_matrix_list(j["images"], "images"), cstar);
  return AlgebraMorphism(a, b, parse_matrix(need(j, "matrix", "morphism")), cstar);
}

}  // namespace rigid::io
