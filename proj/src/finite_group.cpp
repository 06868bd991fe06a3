#include "rigid/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "rigid/errors.hpp"

namespace rigid {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : order_(static_cast<int>(table.size())) {
  if (order_ == 0) throw InputError("group table is empty");
  mul_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order_) throw InputError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= order_) throw InputError("group table entry out of range");
      mul_.push_back(v);
    }
  }

  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("group table has no identity");

  inv_.assign(static_cast<std::size_t>(order_), -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inv_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inv_[static_cast<std::size_t>(g)] < 0)
      throw InputError("element " + std::to_string(g) + " has no inverse");
  }

  auto assoc = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (!assoc(a, b, c)) throw InputError("group table is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int t = 0; t < 200000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw InputError("group table is not associative");
  }

  if (names.empty()) {
    for (int g = 0; g < order_; ++g) names.push_back("g" + std::to_string(g));
  }
  if (static_cast<int>(names.size()) != order_) throw InputError("names length differs from order");
  names_ = std::move(names);
}

int FiniteGroup::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<int>(it - names_.begin());
  if (!name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int i = std::stoi(name);
    if (i < order_) return i;
  }
  throw InputError("unknown group element '" + name + "'");
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order_));
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h) t[static_cast<std::size_t>(g)].push_back(mul(g, h));
  return t;
}

namespace groups {

GroupPtr cyclic(int k) {
  if (k < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::string> names;
  for (int a = 0; a < k; ++a) {
    names.push_back(a == 0 ? "e" : (a == 1 ? "s" : "s" + std::to_string(a)));
    for (int b = 0; b < k; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw Unsupported("symmetric groups supported for n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (pq)(i) = p(q(i))
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> names;
  for (int a = 0; a < m; ++a) {
    std::string nm = "(";
    for (int i = 0; i < n; ++i) nm += std::to_string(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] + 1);
    names.push_back(nm + ")");
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(c);
    }
  }
  names[0] = "e";
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

GroupPtr klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{"e", "x", "z", "xz"});
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int m = a.order() * b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    const int ia = i / b.order(), ib = i % b.order();
    const bool ea = ia == a.identity(), eb = ib == b.identity();
    names.push_back(ea && eb ? "e" : "(" + a.name(ia) + "," + b.name(ib) + ")");
    for (int j = 0; j < m; ++j) {
      const int ja = j / b.order(), jb = j % b.order();
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.mul(ia, ja) * b.order() + b.mul(ib, jb);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

GroupPtr single(const std::string& s) {
  if (s == "klein-four" || s == "kleinfour" || s == "v4" || s == "klein") return klein_four();
  auto num = [&](std::size_t prefix) {
    const std::string rest = s.substr(prefix);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InputError("cannot parse group name '" + s + "'");
    return std::stoi(rest);
  };
  if (s.rfind("cyclic", 0) == 0) return cyclic(num(6));
  if (s.rfind("symmetric", 0) == 0) return symmetric(num(9));
  if (s.rfind("z", 0) == 0 || s.rfind("c", 0) == 0) return cyclic(num(1));
  if (s.rfind("s", 0) == 0) return symmetric(num(1));
  throw InputError("unknown group name '" + s + "'");
}

}  // namespace

GroupPtr by_name(const std::string& spec) {
  const std::string s = lower(spec);
  if (s == "klein-four" || s == "v4") return klein_four();
  GroupPtr result;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find('x', start);
    if (pos == std::string::npos) pos = s.size();
    GroupPtr factor = single(s.substr(start, pos - start));
    result = result ? direct_product(*result, *factor) : factor;
    start = pos + 1;
  }
  return result;
}

}  // namespace groups

TupleIndex::TupleIndex(int order, int arity)
    : order_(order), arity_(arity), count_(ipow(order, arity)) {
  if (order < 1 || arity < 0) throw InputError("TupleIndex: invalid order/arity");
}

std::int64_t TupleIndex::encode(std::span<const int> tuple) const {
  std::int64_t idx = 0;
  for (int v : tuple) idx = idx * order_ + v;
  return idx;
}

void TupleIndex::decode(std::int64_t index, std::span<int> tuple) const {
  for (int i = arity_ - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(index % order_);
    index /= order_;
  }
}

std::vector<int> TupleIndex::decode(std::int64_t index) const {
  std::vector<int> t(static_cast<std::size_t>(arity_));
  decode(index, t);
  return t;
}

bool TupleIndex::next(std::span<int> tuple) const {
  for (int i = arity_ - 1; i >= 0; --i) {
    if (++tuple[static_cast<std::size_t>(i)] < order_) return true;
    tuple[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

Vec haar_average(const FiniteGroup& g, std::span<const Vec> family) {
  if (static_cast<int>(family.size()) != g.order())
    throw InputError("haar_average: family must have one vector per group element");
  const Eigen::Index d = family.front().size();
  Vec acc = Vec::Zero(d);
  for (const Vec& v : family) {
    if (v.size() != d) throw InputError("haar_average: dimension mismatch");
    acc += v;
  }
  return acc / static_cast<double>(g.order());
}

}  // namespace rigid
