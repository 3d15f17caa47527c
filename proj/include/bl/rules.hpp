#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bl/expr.hpp"

namespace bl {

/// Identifiers for the smash reduction rules and for the order / nonzero /
/// classification facts the deduction engine may cite. Every provenance
/// entry produced by the library starts with one of these ids, so verdicts
/// stay machine-checkable against the registry.
namespace rule {
// pair reductions
inline constexpr const char* unit = "smash.unit";
inline constexpr const char* zero = "smash.zero";
inline constexpr const char* ff_max = "smash.ff";
inline constexpr const char* ft = "smash.ft";
inline constexpr const char* fk = "smash.fk";
inline constexpr const char* tt = "smash.tt";
inline constexpr const char* tk = "smash.tk";
inline constexpr const char* kk = "smash.kk";
inline constexpr const char* t_hfp = "smash.t_hfp";
inline constexpr const char* k_hfp = "smash.k_hfp";
inline constexpr const char* i_t = "smash.i_t";
inline constexpr const char* i_k = "smash.i_k";
inline constexpr const char* i_bp = "smash.i_bp";
inline constexpr const char* i_hfp = "smash.i_hfp";
inline constexpr const char* i_i = "smash.i_i";
inline constexpr const char* bp_ring = "smash.bp_ring";
inline constexpr const char* hfp_ring = "smash.hfp_ring";
inline constexpr const char* bp_k = "smash.bp_k";
inline constexpr const char* e_expand = "expand.e";
inline constexpr const char* q_expand = "expand.q";
// order facts
inline constexpr const char* ord_bottom = "ord.bottom";
inline constexpr const char* ord_top = "ord.top";
inline constexpr const char* ord_refl = "ord.refl";
inline constexpr const char* ord_smash_lower = "ord.smash_lower";
inline constexpr const char* ord_k_member = "ord.k_member";
inline constexpr const char* ord_k_t = "ord.k_t";
inline constexpr const char* ord_k_f = "ord.k_f";
inline constexpr const char* ord_t_f = "ord.t_f";
inline constexpr const char* ord_f_f = "ord.f_f";
inline constexpr const char* ord_k_bp = "ord.k_bp";
inline constexpr const char* ord_i_hfp = "ord.i_hfp";
inline constexpr const char* ord_compose = "ord.compose";
// nonzero facts
inline constexpr const char* nz_k = "nz.k";
inline constexpr const char* nz_t = "nz.t";
inline constexpr const char* nz_f = "nz.f";
inline constexpr const char* nz_sphere = "nz.sphere";
inline constexpr const char* nz_bp = "nz.bp";
inline constexpr const char* nz_hfp = "nz.hfp";
inline constexpr const char* nz_f_i = "nz.f_i";
inline constexpr const char* witness_k = "witness.k";
// seeded telescope facts
inline constexpr const char* seed_tc1 = "seed.tc1";
inline constexpr const char* open_tc1 = "open.tc1";
// congruence steps used by derivations
inline constexpr const char* cong_smash = "cong.smash";
inline constexpr const char* cong_wedge = "cong.wedge";
inline constexpr const char* hypothesis = "hypothesis";
// classification facts for the localized categories
inline constexpr const char* cls_harmonic_bl = "cls.harmonic.bl";
inline constexpr const char* cls_en_bl = "cls.en.bl";
inline constexpr const char* cls_kn_bl = "cls.kn.bl";
inline constexpr const char* cls_hfp_bl = "cls.hfp.bl";
inline constexpr const char* cls_i_bl = "cls.i.bl";
inline constexpr const char* cls_bp_bounds = "cls.bp.bounds";
inline constexpr const char* cls_bp_ltc = "cls.bp.ltc";
inline constexpr const char* cls_harmonic_smashing = "cls.harmonic.smashing";
inline constexpr const char* cls_en_smashing = "cls.en.smashing";
inline constexpr const char* cls_kn_smashing = "cls.kn.smashing";
inline constexpr const char* cls_hfp_smashing = "cls.hfp.smashing";
inline constexpr const char* cls_i_smashing = "cls.i.smashing";
inline constexpr const char* cls_bp_smashing = "cls.bp.smashing";
inline constexpr const char* cls_ambient_smashing = "cls.ambient.smashing";
inline constexpr const char* cls_lnf_pair = "cls.lnf.pair";
inline constexpr const char* cls_no_compacts = "cls.no_compacts";
inline constexpr const char* cls_en_smashing_loc = "cls.en.smashing_loc";
// implication edges between conjecture variants
inline constexpr const char* edge_tc1_tc3 = "edge.tc1_tc3";
inline constexpr const char* edge_tc2_tc1 = "edge.tc2_tc1";
inline constexpr const char* edge_tc1s_tc2 = "edge.tc1s_tc2";
inline constexpr const char* edge_step_tc2 = "edge.step_tc2";
inline constexpr const char* edge_ltc1_ltc3 = "edge.ltc1_ltc3";
inline constexpr const char* edge_ltc3_ltc1 = "edge.ltc3_ltc1";
inline constexpr const char* edge_gsc_sdgsc = "edge.gsc_sdgsc";
inline constexpr const char* edge_gsc_tc2 = "edge.gsc_tc2";
inline constexpr const char* edge_transport = "edge.transport";
} // namespace rule

/// Human-readable statement of a rule or fact id; empty when unknown.
const std::string& rule_text(const std::string& id);
bool is_registered_rule(const std::string& id);
const std::map<std::string, std::string>& rule_registry();

/// A provenance entry "id: detail" or just "id".
std::string cite(const std::string& id);
std::string cite(const std::string& id, const std::string& detail);
/// The id part of a provenance entry produced by cite().
std::string cited_id(const std::string& entry);

/// Configuration for the deduction engine. The telescope equalities
/// <T(n)> = <K(n)> known at heights 0 and 1 are seeded here; what-if runs
/// may extend or clear the set.
struct AlgebraConfig {
  std::set<uint32_t> tc1_seeds = {0, 1};

  bool tc1_seeded(uint32_t n) const { return tc1_seeds.count(n) > 0; }
};

const AlgebraConfig& default_config();

} // namespace bl
