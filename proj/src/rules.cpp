#include "bl/rules.hpp"

#include "bl/tri.hpp"

namespace bl {

const char* verdict3_name(Verdict3 v) {
  switch (v) {
    case Verdict3::Holds: return "HOLDS";
    case Verdict3::Fails: return "FAILS";
    case Verdict3::Open: return "OPEN";
  }
  return "?";
}

Tri Tri::holds(std::vector<std::string> provenance) {
  if (provenance.empty()) throw std::logic_error("a definite verdict needs provenance");
  return Tri(Verdict3::Holds, std::move(provenance));
}

Tri Tri::fails(std::vector<std::string> provenance) {
  if (provenance.empty()) throw std::logic_error("a definite verdict needs provenance");
  return Tri(Verdict3::Fails, std::move(provenance));
}

Tri Tri::open(std::vector<std::string> provenance) {
  return Tri(Verdict3::Open, std::move(provenance));
}

namespace {

const std::map<std::string, std::string>& registry() {
  static const std::map<std::string, std::string> table = {
      {rule::unit, "S^0 is the unit: <S ^ X> = <X>"},
      {rule::zero, "<0 ^ X> = <0>"},
      {rule::ff_max, "<F(m) ^ F(n)> = <F(max(m,n))> (derived from the finite-type order)"},
      {rule::ft, "<F(m) ^ T(n)> = <0> for m > n, = <T(n)> for m <= n"},
      {rule::fk, "<F(m) ^ K(n)> = <0> for m > n, = <K(n)> for m <= n"},
      {rule::tt, "<T(m) ^ T(n)> = <0> for m != n, <T(n) ^ T(n)> = <T(n)>"},
      {rule::tk, "<T(m) ^ K(n)> = <0> for m != n, <T(n) ^ K(n)> = <K(n)>"},
      {rule::kk, "<K(m) ^ K(n)> = <0> for m != n, <K(n) ^ K(n)> = <K(n)>"},
      {rule::t_hfp, "T(n) ^ HFp = 0"},
      {rule::k_hfp, "K(n) ^ HFp = 0"},
      {rule::i_t, "T(n) ^ I = 0"},
      {rule::i_k, "K(n) ^ I = 0 (K(n) is a BP-module and BP ^ I = 0)"},
      {rule::i_bp, "BP ^ I = 0"},
      {rule::i_hfp, "HFp ^ I = 0"},
      {rule::i_i, "I ^ I = 0 (the Brown-Comenetz dual squares to zero)"},
      {rule::bp_ring, "BP is a ring spectrum: <BP ^ BP> = <BP>"},
      {rule::hfp_ring, "HFp is a ring spectrum: <HFp ^ HFp> = <HFp>"},
      {rule::bp_k, "<BP ^ K(n)> = <K(n)> (K(n) is a BP-module, retract of BP ^ K(n))"},
      {rule::e_expand, "<E(n)> = <K(0) v ... v K(n)>"},
      {rule::q_expand, "Q is the wedge of all K(i)"},
      {rule::ord_bottom, "<0> is the minimum class"},
      {rule::ord_top, "<S^0> is the maximum class"},
      {rule::ord_refl, "identical classes are comparable"},
      {rule::ord_smash_lower, "<M ^ N> = <M> certifies <M> <= <N>"},
      {rule::ord_k_member, "<K(i)> <= <X> whenever X ^ K(i) != 0"},
      {rule::ord_k_t, "<K(n)> <= <T(n)>"},
      {rule::ord_k_f, "<K(n)> <= <F(m)> for m <= n"},
      {rule::ord_t_f, "<T(n)> <= <F(m)> for m <= n"},
      {rule::ord_f_f, "<F(m)> <= <F(n)> iff m >= n"},
      {rule::ord_k_bp, "<K(i)> <= <BP> (K(i) is a BP-module)"},
      {rule::ord_i_hfp, "<I> <= <HFp>"},
      {rule::ord_compose, "<X> <= <Y> iff L_X = L_X L_Y = L_Y L_X; localization at X then "
                          "factors through localization at Y"},
      {rule::nz_k, "K(n) != 0 (skew field object)"},
      {rule::nz_t, "T(n) != 0 (T(n) ^ K(n) = K(n) != 0)"},
      {rule::nz_f, "F(n) != 0 (F(n) ^ K(n) = K(n) != 0)"},
      {rule::nz_sphere, "S^0 != 0"},
      {rule::nz_bp, "BP != 0 (ring spectrum)"},
      {rule::nz_hfp, "HFp != 0 (ring spectrum)"},
      {rule::nz_f_i, "F(n) ^ I != 0 for all n"},
      {rule::witness_k, "separating Morava K-theory witness"},
      {rule::seed_tc1, "telescope conjecture known at height 0 (Ravenel) and height 1 "
                       "(Mahowald p=2, Miller p>2); seeded equality <T(n)> = <K(n)>"},
      {rule::open_tc1, "telescope conjecture open at heights >= 2"},
      {rule::cong_smash, "smash congruence: <A> = <B> implies <A ^ W> = <B ^ W>"},
      {rule::cong_wedge, "wedge congruence: joins of equal classes are equal"},
      {rule::hypothesis, "assumed hypothesis of the derivation"},
      {rule::cls_harmonic_bl, "the Bousfield lattice of the harmonic category is the power set "
                              "of N, a class corresponding to its Morava support"},
      {rule::cls_en_bl, "the Bousfield lattice of the E(n)-local category is the power set of "
                        "{0,...,n} (Hovey-Strickland)"},
      {rule::cls_kn_bl, "the Bousfield lattice of the K(n)-local category is {<0>, <K(n)>}"},
      {rule::cls_hfp_bl, "the Bousfield lattice of the HFp-local category is {<0>, <HFp>} "
                         "(HFp is a skew field object)"},
      {rule::cls_i_bl, "the Bousfield lattice of the I-local category is {<0>, <L_I S>}"},
      {rule::cls_bp_bounds, "2^aleph_0 <= |BL(BP-local)| <= 2^(2^aleph_0); only the harmonic "
                            "quotient of that lattice is modeled"},
      {rule::cls_bp_ltc, "in the BP-local category <LT(n)> = <LK(n)> for all n (the localized "
                         "telescope conjectures hold there)"},
      {rule::cls_harmonic_smashing, "every smashing localization of the harmonic category is 0, "
                                    "the identity, or finite localization l_n^f"},
      {rule::cls_en_smashing, "every smashing localization of the E(n)-local category is 0 or "
                              "L_i = L_i^f for some i <= n (Hovey-Strickland)"},
      {rule::cls_kn_smashing, "the K(n)-local category has exactly two smashing localizations"},
      {rule::cls_hfp_smashing, "the HFp-local category has exactly two smashing localizations "
                               "(two-element Bousfield lattice)"},
      {rule::cls_i_smashing, "the I-local category has exactly two smashing localizations "
                             "(two-element Bousfield lattice)"},
      {rule::cls_bp_smashing, "each L_n is a smashing localization of the BP-local category; "
                              "the full classification is unknown"},
      {rule::cls_ambient_smashing, "L_n^f and L_n are the only known smashing localizations of "
                                   "the p-local stable homotopy category"},
      {rule::cls_lnf_pair, "l_n^f is localization away from LF(n+1); <F(n+1)> is complemented "
                           "by <T(0) v ... v T(n)> (Hovey-Palmieri)"},
      {rule::cls_no_compacts, "this category has no nonzero compact objects"},
      {rule::cls_en_smashing_loc, "E(n)-localization of spectra is smashing (Ravenel)"},
      {rule::edge_tc1_tc3, "TC1_n and TC3_n are equivalent"},
      {rule::edge_tc2_tc1, "TC2_n implies TC1_i for i <= n (smash the join equality with T(i))"},
      {rule::edge_tc1s_tc2, "TC1_i for all i <= n implies TC2_n (join the equalities)"},
      {rule::edge_step_tc2, "TC2_(n-1) and TC1_n imply TC2_n"},
      {rule::edge_ltc1_ltc3, "LTC1_n implies LTC3_n"},
      {rule::edge_ltc3_ltc1, "LTC3_n implies LTC1_n when the ambient localization is smashing"},
      {rule::edge_gsc_sdgsc, "GSC and SDGSC are equivalent when compact and strongly dualizable "
                             "objects coincide (ambient; localized requires L smashing)"},
      {rule::edge_gsc_tc2, "GSC implies TC2_n for all n"},
      {rule::edge_transport, "conjectures transport from the ambient category along the induced "
                             "surjection of Bousfield lattices"},
  };
  return table;
}

const std::string kEmpty;

} // namespace

const std::string& rule_text(const std::string& id) {
  auto it = registry().find(id);
  return it == registry().end() ? kEmpty : it->second;
}

bool is_registered_rule(const std::string& id) { return registry().count(id) > 0; }

const std::map<std::string, std::string>& rule_registry() { return registry(); }

std::string cite(const std::string& id) { return id + ": " + rule_text(id); }

std::string cite(const std::string& id, const std::string& detail) {
  return id + " [" + detail + "]: " + rule_text(id);
}

std::string cited_id(const std::string& entry) {
  size_t cut = entry.find_first_of(":[ ");
  return cut == std::string::npos ? entry : entry.substr(0, cut);
}

const AlgebraConfig& default_config() {
  static const AlgebraConfig cfg{};
  return cfg;
}

} // namespace bl
