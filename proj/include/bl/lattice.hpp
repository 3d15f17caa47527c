#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bl {

class LatticeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite bounded lattice given by an explicit carrier, order relation and
/// join/meet tables. Elements are referred to by index into `elems`; the
/// names are opaque identifiers used for display and serialization.
///
/// Carriers are capped at 4096 elements; everything here is brute force.
class FiniteLattice {
public:
  static constexpr size_t kMaxCarrier = 4096;

  FiniteLattice() = default;

  /// Build from an order relation; join/meet tables are computed as least
  /// upper / greatest lower bounds and existence is verified.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  const std::vector<std::pair<uint32_t, uint32_t>>& leq_pairs);

  /// Lattice of all subsets of {0,...,n} ordered by inclusion.
  static FiniteLattice power_set(uint32_t n);

  /// Build from explicit tables; runs the cheap O(n^2) consistency checks.
  static FiniteLattice from_tables(std::vector<std::string> names, std::vector<uint8_t> leq,
                                   std::vector<uint32_t> join, std::vector<uint32_t> meet,
                                   uint32_t top, uint32_t bottom);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(uint32_t x) const { return names_[x]; }
  std::optional<uint32_t> index_of(const std::string& name) const;

  bool leq(uint32_t a, uint32_t b) const { return leq_[a * size() + b] != 0; }
  uint32_t join(uint32_t a, uint32_t b) const { return join_[a * size() + b]; }
  uint32_t meet(uint32_t a, uint32_t b) const { return meet_[a * size() + b]; }
  uint32_t top() const { return top_; }
  uint32_t bottom() const { return bottom_; }

  /// For power-set carriers: the subset encoded by element x.
  /// Only meaningful for lattices built by power_set(); see mask_of.
  bool has_masks() const { return !masks_.empty(); }
  uint64_t mask_of(uint32_t x) const { return masks_[x]; }
  std::optional<uint32_t> index_of_mask(uint64_t mask) const;

  bool is_distributive() const;
  bool is_boolean() const;
  /// Unique complement if one exists; nullopt if none. Throws LatticeError
  /// when several complements exist (the lattice is not distributive there).
  std::optional<uint32_t> complement_of(uint32_t x) const;
  size_t count_complemented() const;

  /// Exhaustive law check: idempotence, commutativity, absorption on all
  /// pairs, associativity on all triples, order consistency.
  void check_laws() const;

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<uint32_t, uint32_t>> covers() const;

  bool operator==(const FiniteLattice& other) const;

private:
  void derive_tables_from_order();
  void validate_basics() const;

  std::vector<std::string> names_;
  std::vector<uint8_t> leq_;
  std::vector<uint32_t> join_;
  std::vector<uint32_t> meet_;
  uint32_t top_ = 0;
  uint32_t bottom_ = 0;
  std::vector<uint64_t> masks_; // power-set lattices only
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A function between lattice carriers, candidate lattice homomorphism.
struct LatticeHom {
  LatticePtr source;
  LatticePtr target;
  std::vector<uint32_t> mapping; // indexed by source element

  uint32_t operator()(uint32_t x) const { return mapping[x]; }
};

LatticeHom identity_hom(LatticePtr lat);

/// True iff h preserves all pairwise joins, bottom and top.
bool check_hom(const LatticeHom& h);

/// Element-wise composition f(g(x)); requires g.target and f.source to be
/// the same lattice.
LatticeHom compose_homs(const LatticeHom& f, const LatticeHom& g);

bool hom_equal(const LatticeHom& a, const LatticeHom& b);

/// The inverse limit of the truncation tower
///   2^{0..depth} -> ... -> 2^{0..0},  S |-> S /\ {0,...,k-1},
/// computed as the lattice of compatible families, together with the
/// projections onto each stage (projections[k] lands in 2^{0..k}).
struct InverseLimit {
  LatticePtr limit;
  std::vector<LatticePtr> stages;
  std::vector<LatticeHom> projections;
  /// Compatible families in carrier order; family[k] is a subset mask of {0..k}.
  std::vector<std::vector<uint64_t>> families;
};

InverseLimit inverse_limit(uint32_t depth);

/// The truncation hom 2^{0..n} -> 2^{0..m} (m <= n), S |-> S /\ {0..m}.
LatticeHom truncation_hom(LatticePtr from_pow, LatticePtr to_pow);

} // namespace bl
