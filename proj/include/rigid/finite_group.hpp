#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rigid/matnum.hpp"

namespace rigid {

/// A finite group given by its full Cayley table. Elements are indices
/// 0..order-1; the identity need not be index 0.
class FiniteGroup {
 public:
  /// Validates the table: closure, associativity (exhaustive up to order 64,
  /// sampled above), identity, inverses. Names default to "g<i>".
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g * order_ + h)]; }
  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with this name, or a decimal index. Throws InputError.
  int index_of(const std::string& name) const;

  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;
  /// Flat row-major multiplication table.
  std::span<const int> mul_table() const { return mul_; }
  std::span<const int> inv_table() const { return inv_; }

 private:
  int order_;
  int identity_ = -1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace groups {
GroupPtr cyclic(int k);
/// Symmetric group on n letters (n <= 5), elements in lexicographic order of
/// permutations; identity first.
GroupPtr symmetric(int n);
GroupPtr klein_four();
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Named constructors: "cyclic k" / "zk", "symmetric n" / "sn",
/// "klein-four" / "v4", products joined with "x" (e.g. "z2xz2").
GroupPtr by_name(const std::string& spec);
}  // namespace groups

/// Lexicographic enumeration of G^n (first coordinate most significant).
class TupleIndex {
 public:
  TupleIndex(int order, int arity);

  int arity() const { return arity_; }
  std::int64_t count() const { return count_; }
  std::int64_t encode(std::span<const int> tuple) const;
  void decode(std::int64_t index, std::span<int> tuple) const;
  std::vector<int> decode(std::int64_t index) const;

  /// Steps `tuple` to its successor; returns false after the last tuple.
  bool next(std::span<int> tuple) const;

 private:
  int order_;
  int arity_;
  std::int64_t count_;
};

std::int64_t ipow(std::int64_t base, int exp);

/// Uniform average (1/|G|) sum_g f(g). `family` is indexed by group element.
Vec haar_average(const FiniteGroup& g, std::span<const Vec> family);

}  // namespace rigid
