#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bl {

/// A finite or cofinite subset of the natural numbers, kept in canonical
/// form: `elems` is the sorted member list when finite, the sorted list of
/// excluded naturals when cofinite. This family is closed under union,
/// intersection and complement, which is all the support calculus needs.
class FinCofSet {
public:
  FinCofSet() = default;

  static FinCofSet empty() { return FinCofSet(); }
  static FinCofSet naturals();
  static FinCofSet finite(std::vector<uint32_t> elems);
  static FinCofSet cofinite(std::vector<uint32_t> excluded);
  /// The interval {lo, lo+1, ..., hi}; empty when hi < lo.
  static FinCofSet range(uint32_t lo, uint32_t hi);
  /// The upward-closed set {n, n+1, ...}.
  static FinCofSet from(uint32_t n);
  static FinCofSet singleton(uint32_t n) { return finite({n}); }

  bool is_finite() const { return finite_; }
  bool is_empty() const { return finite_ && elems_.empty(); }
  bool is_all() const { return !finite_ && elems_.empty(); }
  /// Member list (finite) or excluded list (cofinite), sorted.
  const std::vector<uint32_t>& carrier() const { return elems_; }
  /// Number of members; nullopt when cofinite.
  std::optional<size_t> size() const;

  bool contains(uint32_t n) const;
  bool subset_of(const FinCofSet& other) const;
  /// Smallest member, if the set is nonempty.
  std::optional<uint32_t> min() const;

  FinCofSet unite(const FinCofSet& other) const;
  FinCofSet intersect(const FinCofSet& other) const;
  FinCofSet complement() const;
  FinCofSet difference(const FinCofSet& other) const { return intersect(other.complement()); }

  bool operator==(const FinCofSet& other) const = default;

  /// "{1,2,3}", "N", "N\\{0,4}", "{}".
  std::string to_string() const;

private:
  bool finite_ = true;
  std::vector<uint32_t> elems_;
};

FinCofSet fincof_union(const FinCofSet& a, const FinCofSet& b);
FinCofSet fincof_intersect(const FinCofSet& a, const FinCofSet& b);
FinCofSet fincof_complement(const FinCofSet& a);

} // namespace bl
