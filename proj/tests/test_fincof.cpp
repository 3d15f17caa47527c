#include "doctest.h"

#include <random>

#include "bl/fincof.hpp"

using bl::FinCofSet;

TEST_CASE("fincof basic algebra") {
  auto a = FinCofSet::finite({1, 2});
  auto b = FinCofSet::finite({2, 3});
  CHECK(bl::fincof_union(a, b) == FinCofSet::finite({1, 2, 3}));
  CHECK(bl::fincof_complement(FinCofSet::finite({0})) == FinCofSet::cofinite({0}));
  CHECK(bl::fincof_intersect(FinCofSet::cofinite({0, 1}), FinCofSet::finite({0, 5})) ==
        FinCofSet::finite({5}));
}

TEST_CASE("fincof canonical forms and queries") {
  CHECK(FinCofSet::empty().is_empty());
  CHECK(FinCofSet::naturals().is_all());
  CHECK(FinCofSet::finite({}) == FinCofSet::empty());
  CHECK(FinCofSet::cofinite({}) == FinCofSet::naturals());
  CHECK(FinCofSet::finite({3, 1, 3, 2}) == FinCofSet::finite({1, 2, 3}));

  auto c = FinCofSet::cofinite({0, 2});
  CHECK(c.contains(1));
  CHECK(c.contains(100));
  CHECK(!c.contains(2));
  CHECK(c.min() == 1);
  CHECK(!c.size().has_value());
  CHECK(FinCofSet::range(2, 4) == FinCofSet::finite({2, 3, 4}));
  CHECK(FinCofSet::range(4, 2).is_empty());
  CHECK(FinCofSet::from(3) == FinCofSet::cofinite({0, 1, 2}));
  CHECK(FinCofSet::from(0).is_all());

  CHECK(FinCofSet::finite({1, 2}).subset_of(FinCofSet::cofinite({0})));
  CHECK(!FinCofSet::cofinite({0}).subset_of(FinCofSet::finite({1, 2})));

  CHECK(FinCofSet::finite({0, 2}).to_string() == "{0,2}");
  CHECK(FinCofSet::cofinite({1}).to_string() == "N\\{1}");
  CHECK(FinCofSet::naturals().to_string() == "N");
}

TEST_CASE("fincof satisfies De Morgan and double complement on random input") {
  std::mt19937 rng(7);
  auto random_set = [&] {
    std::vector<uint32_t> elems;
    const int count = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < count; ++i)
      elems.push_back(std::uniform_int_distribution<uint32_t>(0, 63)(rng));
    return std::uniform_int_distribution<int>(0, 1)(rng) ? FinCofSet::finite(elems)
                                                         : FinCofSet::cofinite(elems);
  };
  for (int it = 0; it < 10000; ++it) {
    FinCofSet a = random_set(), b = random_set();
    CHECK(a.complement().complement() == a);
    CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
    CHECK(a.intersect(b).complement() == a.complement().unite(b.complement()));
    // membership agrees pointwise on a window around the carrier bound
    for (uint32_t i = 0; i < 66; ++i) {
      CHECK(a.unite(b).contains(i) == (a.contains(i) || b.contains(i)));
      CHECK(a.intersect(b).contains(i) == (a.contains(i) && b.contains(i)));
      CHECK(a.complement().contains(i) == !a.contains(i));
    }
  }
}
