#include "doctest.h"

#include "bl/conjecture.hpp"
#include "bl/serialize.hpp"

using namespace bl;
using F = ConjectureFamily;

TEST_CASE("evaluate the telescope variants") {
  auto h = CategoryId::harmonic();
  Verdict v = evaluate(ConjectureId::ltc(F::LTC1, 5, h));
  CHECK(v.tri.is_holds());
  CHECK(v.mode == VerdictMode::Recomputed);
  REQUIRE(v.trace.has_value());
  CHECK(replay_trace(*v.trace));

  CHECK(evaluate(ConjectureId::tc(F::TC1, 0)).tri.is_holds());
  CHECK(evaluate(ConjectureId::tc(F::TC1, 1)).tri.is_holds());
  CHECK(evaluate(ConjectureId::tc(F::TC1, 2)).tri.is_open());
  CHECK(evaluate(ConjectureId::tc(F::TC1, 1)).mode == VerdictMode::Cited);
  CHECK(evaluate(ConjectureId::tc(F::TC2, 1)).tri.is_holds());
  CHECK(evaluate(ConjectureId::tc(F::TC2, 2)).tri.is_open());
  CHECK(evaluate(ConjectureId::tc(F::TC3, 2)).tri.is_open());
  CHECK(evaluate(ConjectureId::tc(F::TC3, 1)).tri.is_holds());

  Verdict ltc2 = evaluate(ConjectureId::ltc(F::LTC2, 3, CategoryId::i_local()));
  CHECK(ltc2.tri.is_holds());
  CHECK(ltc2.mode == VerdictMode::Recomputed);

  Verdict bp = evaluate(ConjectureId::ltc(F::LTC1, 4, CategoryId::bp_local()));
  CHECK(bp.tri.is_holds());
  CHECK(bp.mode == VerdictMode::Cited);

  Verdict ltc3 = evaluate(ConjectureId::ltc(F::LTC3, 2, CategoryId::en(1)));
  CHECK(ltc3.tri.is_holds());
  CHECK(ltc3.mode == VerdictMode::Recomputed);

  CHECK(evaluate(ConjectureId::gsc(CategoryId::harmonic())).tri.is_fails());
  CHECK(evaluate(ConjectureId::sdgsc(CategoryId::harmonic())).tri.is_holds());

  CHECK_THROWS_AS(evaluate(ConjectureId{F::LTC1, 1, CategoryId::ambient()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate(ConjectureId{F::TC1, 1, CategoryId::harmonic()}),
                  std::invalid_argument);
}

TEST_CASE("derivations from the join equality") {
  DerivationTrace t = derive_tc1_from_tc2(3, 1);
  CHECK(replay_trace(t));
  CHECK(t.conclusion.find("T(1) = K(1)") != std::string::npos);
  // the rewrite steps cite the telescope and Morava pair rules
  bool saw_tt = false, saw_tk = false;
  for (const auto& step : t.steps)
    for (const auto& c : step.citations) {
      if (cited_id(c) == rule::tt) saw_tt = true;
      if (cited_id(c) == rule::tk) saw_tk = true;
    }
  CHECK(saw_tt);
  CHECK(saw_tk);

  CHECK(replay_trace(derive_tc1_from_tc2(0, 0)));
  CHECK(replay_trace(derive_tc1_from_tc2(5, 5)));
  for (uint32_t n = 0; n <= 8; ++n)
    for (uint32_t i = 0; i <= n; ++i) CHECK(replay_trace(derive_tc1_from_tc2(n, i)));
  CHECK_THROWS_AS(derive_tc1_from_tc2(2, 3), std::invalid_argument);

  CHECK(replay_trace(derive_tc2_from_tc1s(0)));
  CHECK(replay_trace(derive_tc2_from_tc1s(2)));
  std::set<uint32_t> missing{0, 1, 2, 4}; // height 3 omitted
  CHECK_THROWS_AS(derive_tc2_from_tc1s(4, missing), std::invalid_argument);
}

TEST_CASE("tampered traces fail to replay") {
  DerivationTrace t = derive_tc1_from_tc2(3, 1);
  DerivationTrace wrong = t;
  for (auto& step : wrong.steps)
    if (step.kind == TraceStep::Kind::Rewrite) step.after = "K(2)";
  CHECK(!replay_trace(wrong));
  DerivationTrace bad_cite = t;
  bad_cite.steps[0].citations = {"made.up: nonsense"};
  CHECK(!replay_trace(bad_cite));
}

TEST_CASE("transport along the lattice surjection") {
  Verdict v = transport(ConjectureId::tc(F::TC1, 1), CategoryId::bp_local());
  CHECK(v.tri.is_holds());
  // two-route agreement where both are available
  for (const auto& cat : shipped_categories()) {
    for (uint32_t n = 0; n <= 1; ++n) {
      Verdict direct = evaluate(ConjectureId::ltc(F::LTC1, n, cat));
      Verdict moved = transport(ConjectureId::tc(F::TC1, n), cat);
      CHECK(direct.tri.value() == moved.tri.value());
    }
  }
  CHECK_THROWS_AS(transport(ConjectureId::tc(F::TC1, 2), CategoryId::harmonic()),
                  std::invalid_argument);
  CHECK_THROWS_AS(transport(ConjectureId::tc(F::TC3, 1), CategoryId::harmonic()),
                  std::invalid_argument);
}

TEST_CASE("implication graph") {
  ImplicationGraph g = implication_graph(3);
  auto find_edge = [&](const std::string& from, const std::string& to) {
    for (const auto& e : g.edges)
      for (const auto& f : e.from)
        if (f.to_string() == from && e.to.to_string() == to) return true;
    return false;
  };
  CHECK(find_edge("TC2_3@ambient", "TC1_1@ambient"));
  CHECK(find_edge("TC1_2@ambient", "TC3_2@ambient"));
  CHECK(find_edge("GSC@ambient", "TC2_3@ambient"));
  CHECK(find_edge("GSC@ambient", "SDGSC@ambient"));
  CHECK(find_edge("TC1_0@ambient", "LTC1_0@L"));
  CHECK(find_edge("LTC3_1@L", "LTC1_1@L"));

  // mechanized edges replay; conditioned edges carry their condition
  for (const auto& e : g.edges) {
    if (e.justification == ImplicationEdge::Justification::MechanizedDerivation) {
      REQUIRE(e.trace.has_value());
      CHECK(replay_trace(*e.trace));
    } else {
      CHECK(is_registered_rule(cited_id(e.citation)));
    }
    if (e.citation.find(rule::edge_ltc3_ltc1) != std::string::npos)
      CHECK(e.condition == std::string("L smashing"));
  }
  CHECK(!g.notes.empty());
}

TEST_CASE("closure of the seeded facts is consistent") {
  ImplicationGraph g = implication_graph(16);
  std::map<ConjectureId, Verdict3> facts;
  facts[ConjectureId::tc(F::TC1, 0)] = Verdict3::Holds;
  facts[ConjectureId::tc(F::TC1, 1)] = Verdict3::Holds;
  for (uint32_t n = 2; n <= 16; ++n) facts[ConjectureId::tc(F::TC1, n)] = Verdict3::Open;
  // category verdicts join the fact set, instantiating the generic edges
  for (const auto& cat : shipped_categories()) {
    ImplicationGraph inst;
    const bool smashing = category_model(cat).conditioned_edges_apply;
    for (auto e : g.edges) {
      bool generic = e.to.category.kind == CatKind::GenericLocal;
      for (const auto& f : e.from) generic = generic || f.category.kind == CatKind::GenericLocal;
      if (generic) {
        if (e.condition && !smashing) continue;
        for (auto& f : e.from)
          if (f.category.kind == CatKind::GenericLocal) f.category = cat;
        if (e.to.category.kind == CatKind::GenericLocal) e.to.category = cat;
        e.condition = std::nullopt;
      }
      inst.edges.push_back(std::move(e));
    }
    for (uint32_t n = 0; n <= 4; ++n) {
      for (F fam : {F::LTC1, F::LTC2, F::LTC3}) {
        auto id = ConjectureId::ltc(fam, n, cat);
        facts[id] = evaluate(id).tri.value();
      }
    }
    facts[ConjectureId::gsc(cat)] = evaluate(ConjectureId::gsc(cat)).tri.value();
    facts[ConjectureId::sdgsc(cat)] = evaluate(ConjectureId::sdgsc(cat)).tri.value();
    CHECK_NOTHROW(close_facts(inst, facts));
  }
  // and a direct contradiction is detected
  ImplicationGraph tiny;
  tiny.edges.push_back({{ConjectureId::tc(F::TC1, 0)},
                        ConjectureId::tc(F::TC3, 0),
                        ImplicationEdge::Justification::CitedTheorem,
                        cite(rule::edge_tc1_tc3),
                        std::nullopt,
                        std::nullopt});
  std::map<ConjectureId, Verdict3> bad;
  bad[ConjectureId::tc(F::TC1, 0)] = Verdict3::Holds;
  bad[ConjectureId::tc(F::TC3, 0)] = Verdict3::Fails;
  CHECK_THROWS_AS(close_facts(tiny, bad), std::logic_error);
}

TEST_CASE("report rows match the expected classification") {
  ReportTable table = report({CategoryId::harmonic(), CategoryId::en(2), CategoryId::bp_local()}, 4);
  REQUIRE(table.rows.size() == 3);
  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) {
      if (cell.id.family == F::GSC || cell.id.family == F::SDGSC) continue;
      CHECK(cell.verdict.tri.is_holds());
      const auto expected = row.category.kind == CatKind::BPLocal ? VerdictMode::Cited
                                                                  : VerdictMode::Recomputed;
      CHECK(cell.verdict.mode == expected);
    }
  }
  // serialization is deterministic
  CHECK(to_json(table).dump() == to_json(report({CategoryId::harmonic(), CategoryId::en(2),
                                                 CategoryId::bp_local()}, 4)).dump());
  CHECK(report_text(table).find("GSC: FAILS") != std::string::npos);
  // graph exports render
  ImplicationGraph g = implication_graph(1);
  CHECK(graph_dot(g).find("digraph") == 0);
  CHECK(to_json(g)["edges"].is_array());
}
