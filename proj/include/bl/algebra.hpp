#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bl/expr.hpp"
#include "bl/fincof.hpp"
#include "bl/rules.hpp"
#include "bl/tri.hpp"

namespace bl {

/// A smash product of generators after rule saturation: no reducible pair
/// remains. Factors are sorted by (kind, index). The factor list {Sphere}
/// is the top class; a monomial never contains Zero, E, Q, or more than one
/// factor of the same reducible family.
struct Monomial {
  std::vector<Generator> factors;

  std::optional<Generator> known_atom() const {
    if (factors.size() == 1) return factors.front();
    return std::nullopt;
  }
  bool is_top() const { return factors.size() == 1 && factors[0].kind == Gen::Sphere; }
  auto operator<=>(const Monomial& other) const = default;
  std::string to_string() const;
};

/// Canonical join-of-monomials form of a class expression. The Morava part
/// is kept as a finite-or-cofinite index set (the join of K(i) over
/// k_family), which keeps the infinite wedge Q finitely describable;
/// everything else is a sorted, absorption-reduced list of monomials.
/// The empty form is <0>.
struct NormalForm {
  FinCofSet k_family;
  std::vector<Monomial> monomials;

  bool is_zero() const { return k_family.is_empty() && monomials.empty(); }
  bool operator==(const NormalForm& other) const = default;
  std::string to_string() const;
};

struct SupportBounds {
  FinCofSet lower; // indices certainly in the support
  FinCofSet upper; // indices possibly in the support
};

/// Citations of the reduction rules fired during a normalization, in order.
using RuleLog = std::vector<std::string>;

/// Outcome of reducing one unordered factor pair.
struct PairReduction {
  bool reduces = false;
  bool to_zero = false;
  Generator out{};
  const char* rule = nullptr;
};

/// The pair-rule table on saturated factors (E and Q never appear here).
PairReduction reduce_pair(const Generator& a, const Generator& b);

/// Saturate a factor multiset to a monomial; nullopt when it collapses to
/// zero. Deterministic: factors kept sorted, leftmost reducible pair first.
std::optional<Monomial> saturate_factors(std::vector<Generator> factors, RuleLog* log = nullptr);

FinCofSet generator_support(const Generator& g);
FinCofSet monomial_support(const Monomial& m);

/// Normalization is configuration-independent: it distributes smash over
/// wedge, expands E(n) and Q into the Morava family, saturates the pair
/// rules and reduces by absorption. Seeded telescope equalities only enter
/// the deduction operations below, never the normal form.
NormalForm normalize(const ClassExpr& e, RuleLog* log = nullptr);
NormalForm nf_smash(const NormalForm& a, const NormalForm& b, RuleLog* log = nullptr);
NormalForm nf_wedge(const NormalForm& a, const NormalForm& b, RuleLog* log = nullptr);

/// An expression whose normal form is the given one (used for round trips
/// and for printing; cofinite Morava families print through Q ^ F(m)).
ClassExpr to_expr(const NormalForm& nf);

/// Exact support of a normal form under the shipped rule table.
FinCofSet support_of(const NormalForm& nf);
SupportBounds support(const ClassExpr& e);

/// Citation when the class is rule-certainly nonzero, nullopt when unknown.
/// Zero-ness is decided only by saturation (is_zero); support emptiness is
/// never taken as evidence of zero-ness.
std::optional<std::string> certainly_nonzero(const NormalForm& nf);

Tri leq(const ClassExpr& a, const ClassExpr& b, const AlgebraConfig& cfg = default_config());
Tri eq(const ClassExpr& a, const ClassExpr& b, const AlgebraConfig& cfg = default_config());
Tri is_square_zero(const ClassExpr& e, const AlgebraConfig& cfg = default_config());
Tri in_dl(const ClassExpr& e, const AlgebraConfig& cfg = default_config());

/// Certain order check on normal forms; provenance when it holds.
std::optional<std::vector<std::string>> nf_leq_certain(const NormalForm& a, const NormalForm& b,
                                                       const AlgebraConfig& cfg = default_config());

/// Rewrite every telescope generator T(n) to K(n) (used by models in which
/// the telescope classes are known to agree with the Morava classes).
ClassExpr substitute_t_with_k(const ClassExpr& e);

} // namespace bl
