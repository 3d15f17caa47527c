#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bl/algebra.hpp"
#include "bl/lattice.hpp"

namespace bl {

enum class CatKind : uint8_t { Ambient, Harmonic, En, Kn, HFpLocal, ILocal, BPLocal, GenericLocal };

/// A modeled localized category. GenericLocal ("L") is a placeholder used
/// only in implication-graph edges, never registered as a model.
struct CategoryId {
  CatKind kind = CatKind::Ambient;
  uint32_t index = 0; // En, Kn only

  static CategoryId ambient() { return {CatKind::Ambient, 0}; }
  static CategoryId harmonic() { return {CatKind::Harmonic, 0}; }
  static CategoryId en(uint32_t n) { return {CatKind::En, n}; }
  static CategoryId kn(uint32_t n) { return {CatKind::Kn, n}; }
  static CategoryId hfp_local() { return {CatKind::HFpLocal, 0}; }
  static CategoryId i_local() { return {CatKind::ILocal, 0}; }
  static CategoryId bp_local() { return {CatKind::BPLocal, 0}; }
  static CategoryId generic_local() { return {CatKind::GenericLocal, 0}; }

  /// Accepts "ambient"/"S", "harmonic"/"H", "E(n)", "K(n)", "HFp", "I", "BP".
  static std::optional<CategoryId> parse(const std::string& text);

  auto operator<=>(const CategoryId& other) const = default;
  std::string to_string() const;
};

enum class LatticeKind : uint8_t {
  SymbolicFragment, // ambient: the symbolic calculus itself
  PowerSetFinCof,   // harmonic: finite/cofinite subsets of N
  PowerSetFinite,   // E(n)-local: subsets of {0..n}
  TwoElement,
  QuotientOnly, // BP-local: only the harmonic quotient is concrete
};

/// Registry entry for a modeled category: which lattice model applies, plus
/// the compactness and classification metadata the verdict logic consumes.
struct CategoryModel {
  CategoryId id;
  LatticeKind lattice_kind = LatticeKind::SymbolicFragment;
  std::string zero_test; // prose description of the model's zero test
  bool registry_complete = false;
  bool no_nonzero_compacts = false;
  /// Whether the localization defining this category is itself smashing
  /// (condition for the conditioned implication edges).
  bool conditioned_edges_apply = false;
  /// Every l_n on this category is smashing (Open for hypothetical
  /// user-defined categories; Holds for all shipped ones).
  Tri ln_smashing;
  std::vector<std::string> notes;
};

bool is_registered(const CategoryId& id);
CategoryModel category_model(const CategoryId& id);
/// The categories of the standard report: harmonic, E(0..3), K(0..3),
/// HFp-local, I-local, BP-local.
std::vector<CategoryId> shipped_categories();

enum class ZTest : uint8_t { Zero, Nonzero, Indeterminate };

struct BpLocalImage {
  FinCofSet harmonic_support;
  NormalForm form;
  bool operator==(const BpLocalImage& other) const = default;
};

/// The image of a class in a category's lattice model. The variant shape
/// follows the model: support sets for the power-set models, a zero test
/// for the two-element ones, the harmonic image plus the symbolic form for
/// the BP-local quotient, and the normal form itself for the ambient
/// category. An Open zero test is reported as Indeterminate, never coerced.
struct LocalElement {
  CategoryId category;
  std::variant<FinCofSet, ZTest, BpLocalImage, NormalForm> value;

  bool operator==(const LocalElement& other) const = default;
  std::string to_string() const;
};

LocalElement localize(const CategoryId& cat, const ClassExpr& e,
                      const AlgebraConfig& cfg = default_config());

Tri eq_local(const CategoryId& cat, const ClassExpr& a, const ClassExpr& b,
             const AlgebraConfig& cfg = default_config());
Tri leq_local(const CategoryId& cat, const ClassExpr& a, const ClassExpr& b,
              const AlgebraConfig& cfg = default_config());

/// The Bousfield lattice of a concretely modeled category; the harmonic
/// model must be truncated to a finite depth. QuotientOnly and
/// SymbolicFragment refuse with a LatticeError.
FiniteLattice lattice_of(const CategoryId& cat, std::optional<uint32_t> truncation = std::nullopt);

enum class GeneratedBy : uint8_t { CompactSet, StronglyDualizableSet, Unknown };
const char* generated_by_name(GeneratedBy g);

/// A named smashing localization together with its complemented pair of
/// classes (acyclics and locals) and what generates it.
struct SmashingLocalizationRecord {
  std::string name;
  CategoryId category;
  ClassExpr acyclic_class;
  ClassExpr local_unit_class;
  GeneratedBy generated_by = GeneratedBy::Unknown;
  std::string citation;
};

/// The category's smashing localizations, bounded by `cap` for the infinite
/// families (l_n^f on the harmonic category, L_n on the BP-local one).
std::vector<SmashingLocalizationRecord> smashing_registry(const CategoryId& cat, uint32_t cap = 16);

/// acyclic ^ local maps to bottom and acyclic v local to top in the model.
bool verify_complemented_pair(const CategoryId& cat, const SmashingLocalizationRecord& rec,
                              const AlgebraConfig& cfg = default_config());

Tri gsc_verdict(const CategoryId& cat, uint32_t cap = 16);
Tri sdgsc_verdict(const CategoryId& cat, uint32_t cap = 16);

/// Does localization at x factor through localization at y on the modeled
/// lattices? Holds requires leq(x, y) plus image-wise agreement of the
/// composite with the direct map on every sample.
Tri check_compose(const ClassExpr& x, const ClassExpr& y, const std::vector<ClassExpr>& samples,
                  const AlgebraConfig& cfg = default_config());

/// Two-route consistency of the harmonic support model with the E(n)-local
/// tower and the inverse-limit construction, for indices up to depth.
bool realize_diagram_check(uint32_t depth);

struct SublatticeReport {
  size_t bl_size = 0;
  size_t dl_size = 0; // idempotents
  size_t ba_size = 0; // complemented elements
};

SublatticeReport sublattice_report(const CategoryId& cat,
                                   std::optional<uint32_t> truncation = std::nullopt);

} // namespace bl
