#include "doctest.h"

#include "bl/lattice.hpp"

using namespace bl;

namespace {

// Diamond M3: bottom, three incomparable atoms, top. A lattice, but not
// distributive.
FiniteLattice m3() {
  return FiniteLattice::from_order({"0", "a", "b", "c", "1"},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice chain(uint32_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<uint32_t, uint32_t>> leq;
  for (uint32_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) leq.push_back({i - 1, i});
  }
  return FiniteLattice::from_order(std::move(names), leq);
}

} // namespace

TEST_CASE("power set lattices") {
  auto p0 = FiniteLattice::power_set(0);
  CHECK(p0.size() == 2);
  auto p2 = FiniteLattice::power_set(2);
  CHECK(p2.size() == 8);
  CHECK(p2.is_distributive());
  auto p4 = FiniteLattice::power_set(4);
  CHECK(p4.size() == 32);
  // every element complemented, found by brute-force search
  CHECK(p4.count_complemented() == 32);
  for (uint32_t x = 0; x < p4.size(); ++x) CHECK(p4.complement_of(x).has_value());
  CHECK_THROWS_AS(FiniteLattice::power_set(12), LatticeError);
}

TEST_CASE("lattice laws hold exhaustively on small carriers") {
  FiniteLattice::power_set(2).check_laws();
  FiniteLattice::power_set(5).check_laws();
  m3().check_laws();
  chain(5).check_laws();
}

TEST_CASE("distributivity and booleanness") {
  CHECK(FiniteLattice::power_set(2).is_distributive());
  CHECK(chain(2).is_distributive());
  CHECK(!m3().is_distributive());
  CHECK(FiniteLattice::power_set(3).is_boolean());
  CHECK(chain(2).is_boolean());
  CHECK(!chain(3).is_boolean());
  for (uint32_t n = 0; n <= 6; ++n) CHECK(FiniteLattice::power_set(n).is_boolean());
}

TEST_CASE("complements") {
  auto p2 = FiniteLattice::power_set(2);
  auto single = p2.index_of_mask(0b001).value();
  CHECK(p2.complement_of(single) == p2.index_of_mask(0b110));
  auto p1 = FiniteLattice::power_set(1);
  CHECK(p1.complement_of(p1.bottom()) == p1.top());
  // middle of a 3-chain has no complement
  CHECK(!chain(3).complement_of(1).has_value());
  // in M3 every atom has two complements: ambiguity is an error
  CHECK_THROWS_AS(m3().complement_of(1), LatticeError);
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(FiniteLattice::from_order({"a", "b"}, {{0, 1}, {1, 0}}), LatticeError);
  // two maximal elements: no top
  CHECK_THROWS_AS(FiniteLattice::from_order({"0", "a", "b"}, {{0, 1}, {0, 2}}), LatticeError);
}

TEST_CASE("check_hom and composition") {
  auto p2 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(2));
  CHECK(check_hom(identity_hom(p2)));

  auto p3 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(3));
  auto p4 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(4));
  auto t32 = truncation_hom(p3, p2);
  auto t43 = truncation_hom(p4, p3);
  CHECK(check_hom(t32));
  CHECK(check_hom(t43));

  // trunc(3->2) o trunc(4->3) equals S |-> S /\ {0,1,2}, element-wise
  auto composed = compose_homs(t32, t43);
  auto direct = truncation_hom(p4, p2);
  CHECK(hom_equal(composed, direct));
  for (uint32_t x = 0; x < p4->size(); ++x)
    CHECK(p2->mask_of(composed(x)) == (p4->mask_of(x) & 0b111));

  // id o f = f
  CHECK(hom_equal(compose_homs(identity_hom(p2), t32), t32));

  // trunc(1->0) o trunc(2->1) applied to {0,2} gives {0}
  auto p1 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(1));
  auto p0 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(0));
  auto t = compose_homs(truncation_hom(p1, p0), truncation_hom(p2, p1));
  CHECK(p0->mask_of(t(p2->index_of_mask(0b101).value())) == 0b1);

  // a map crushing top to bottom is not a hom
  LatticeHom bad;
  bad.source = p1;
  bad.target = p1;
  bad.mapping = {0, 0, 0, 0};
  CHECK(!check_hom(bad));

  // composition is associative on composable checked homs
  auto p5 = std::make_shared<const FiniteLattice>(FiniteLattice::power_set(5));
  auto t54 = truncation_hom(p5, p4);
  CHECK(hom_equal(compose_homs(compose_homs(t32, t43), t54),
                  compose_homs(t32, compose_homs(t43, t54))));

  // mismatched source/target is an error
  CHECK_THROWS_AS(compose_homs(t43, t32), LatticeError);
}

TEST_CASE("inverse limit of the truncation tower") {
  auto inv0 = inverse_limit(0);
  CHECK(inv0.limit->size() == 2);

  auto inv3 = inverse_limit(3);
  CHECK(inv3.limit->size() == 16);
  // compatible families correspond exactly to subsets of {0..3}
  for (const auto& fam : inv3.families) {
    for (uint32_t k = 0; k + 1 < fam.size(); ++k)
      CHECK((fam[k + 1] & ((uint64_t(1) << (k + 1)) - 1)) == fam[k]);
  }
  for (const auto& p : inv3.projections) CHECK(check_hom(p));

  // lattice-isomorphic to the power set via the family bijection
  for (uint32_t d = 0; d <= 6; ++d) {
    auto inv = inverse_limit(d);
    auto pow = FiniteLattice::power_set(d);
    REQUIRE(inv.limit->size() == pow.size());
    for (uint32_t a = 0; a < pow.size(); ++a)
      for (uint32_t b = 0; b < pow.size(); ++b) {
        uint64_t ja = inv.families[inv.limit->join(a, b)].back();
        uint64_t ma = inv.families[inv.limit->meet(a, b)].back();
        CHECK(ja == (inv.families[a].back() | inv.families[b].back()));
        CHECK(ma == (inv.families[a].back() & inv.families[b].back()));
      }
  }
}
