#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bl/localization.hpp"

namespace bl {

enum class ConjectureFamily : uint8_t { TC1, TC2, TC3, LTC1, LTC2, LTC3, GSC, SDGSC };

const char* family_name(ConjectureFamily f);
bool family_has_index(ConjectureFamily f);
bool family_is_ambient(ConjectureFamily f);

struct ConjectureId {
  ConjectureFamily family = ConjectureFamily::TC1;
  std::optional<uint32_t> index;
  CategoryId category = CategoryId::ambient();

  static ConjectureId tc(ConjectureFamily f, uint32_t n);
  static ConjectureId ltc(ConjectureFamily f, uint32_t n, CategoryId cat);
  static ConjectureId gsc(CategoryId cat);
  static ConjectureId sdgsc(CategoryId cat);

  auto operator<=>(const ConjectureId& other) const = default;
  std::string to_string() const; // e.g. "TC1_2@ambient", "LTC3_1@E(2)"
};

/// What a conjecture asserts: a lattice equality the engine can evaluate,
/// or an object-level flag that only theorem edges resolve.
struct Statement {
  enum class Form : uint8_t { LatticeEquality, Flag } form = Form::Flag;
  ClassExpr lhs, rhs; // LatticeEquality only
  CategoryId category;
  std::string description;
};

Statement statement_of(const ConjectureId& id);

/// One replayable step of a derivation. Rewrite steps assert that the two
/// recorded expressions normalize identically; Image steps assert that a
/// class localizes to the recorded model element; Assemble steps record a
/// congruence and are checked against the rule registry only.
struct TraceStep {
  enum class Kind : uint8_t { Rewrite, Image, Assemble } kind = Kind::Assemble;
  std::string description;
  std::string before; // expression text; for Image: "category|expression"
  std::string after;  // expression text, or rendered model element
  std::vector<std::string> citations;
};

struct DerivationTrace {
  std::string goal;
  std::vector<std::string> hypotheses;
  std::vector<TraceStep> steps;
  std::string conclusion;
};

/// Re-run every step of a trace through the normalizer and the models;
/// false when any recorded outcome or citation no longer checks out.
bool replay_trace(const DerivationTrace& trace, const AlgebraConfig& cfg = default_config());

enum class VerdictMode : uint8_t { Recomputed, Cited };

struct Verdict {
  Tri tri;
  VerdictMode mode = VerdictMode::Cited;
  std::optional<DerivationTrace> trace; // present on Recomputed verdicts
};

Verdict evaluate(const ConjectureId& id, const AlgebraConfig& cfg = default_config());

/// Under the hypothesis that the joins up to n agree, smashing with T(i)
/// derives the height-i equality. Throws when i > n.
DerivationTrace derive_tc1_from_tc2(uint32_t n, uint32_t i);

/// Join the height-wise equalities into the join equality. `hypotheses`
/// lists the heights for which the equality may be assumed; it must cover
/// 0..n or the derivation refuses.
DerivationTrace derive_tc2_from_tc1s(uint32_t n,
                                     const std::optional<std::set<uint32_t>>& hypotheses = {});

/// Transport an ambient equality that holds into a localized category along
/// the induced lattice surjection. Refuses unless the ambient verdict holds.
Verdict transport(const ConjectureId& ambient_conjecture, const CategoryId& target,
                  const AlgebraConfig& cfg = default_config());

struct ImplicationEdge {
  enum class Justification : uint8_t { MechanizedDerivation, CitedTheorem };
  std::vector<ConjectureId> from; // conjunction
  ConjectureId to;
  Justification justification = Justification::CitedTheorem;
  std::string citation;
  std::optional<std::string> condition; // e.g. "L smashing"
  std::optional<DerivationTrace> trace; // mechanized edges
};

struct ImplicationGraph {
  std::vector<ImplicationEdge> edges;
  std::vector<std::string> notes;
};

ImplicationGraph implication_graph(uint32_t max_n);

/// Forward-propagate Holds across unconditional edges from the seeded facts;
/// throws std::logic_error on a contradiction (some conjecture both ways).
std::map<ConjectureId, Verdict3> close_facts(const ImplicationGraph& graph,
                                             std::map<ConjectureId, Verdict3> facts);

struct ReportCell {
  ConjectureId id;
  Verdict verdict;
};

struct ReportRow {
  CategoryId category;
  std::vector<ReportCell> cells;
};

struct ReportTable {
  uint32_t max_n = 0;
  std::vector<ReportRow> rows;
};

/// Per-category verdicts for the telescope variants at indices <= max_n
/// plus GSC and SDGSC.
ReportTable report(const std::vector<CategoryId>& cats, uint32_t max_n,
                   const AlgebraConfig& cfg = default_config());

} // namespace bl
