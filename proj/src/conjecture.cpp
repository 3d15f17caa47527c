#include "bl/conjecture.hpp"

#include <algorithm>
#include <stdexcept>

#include "bl/parse.hpp"

namespace bl {

const char* family_name(ConjectureFamily f) {
  switch (f) {
    case ConjectureFamily::TC1: return "TC1";
    case ConjectureFamily::TC2: return "TC2";
    case ConjectureFamily::TC3: return "TC3";
    case ConjectureFamily::LTC1: return "LTC1";
    case ConjectureFamily::LTC2: return "LTC2";
    case ConjectureFamily::LTC3: return "LTC3";
    case ConjectureFamily::GSC: return "GSC";
    case ConjectureFamily::SDGSC: return "SDGSC";
  }
  return "?";
}

bool family_has_index(ConjectureFamily f) {
  return f != ConjectureFamily::GSC && f != ConjectureFamily::SDGSC;
}

bool family_is_ambient(ConjectureFamily f) {
  return f == ConjectureFamily::TC1 || f == ConjectureFamily::TC2 || f == ConjectureFamily::TC3;
}

ConjectureId ConjectureId::tc(ConjectureFamily f, uint32_t n) {
  return {f, n, CategoryId::ambient()};
}

ConjectureId ConjectureId::ltc(ConjectureFamily f, uint32_t n, CategoryId cat) {
  return {f, n, cat};
}

ConjectureId ConjectureId::gsc(CategoryId cat) {
  return {ConjectureFamily::GSC, std::nullopt, cat};
}

ConjectureId ConjectureId::sdgsc(CategoryId cat) {
  return {ConjectureFamily::SDGSC, std::nullopt, cat};
}

std::string ConjectureId::to_string() const {
  std::string out = family_name(family);
  if (index) out += "_" + std::to_string(*index);
  out += "@" + category.to_string();
  return out;
}

namespace {

void validate(const ConjectureId& id) {
  if (family_has_index(id.family) && !id.index)
    throw std::invalid_argument(id.to_string() + ": missing index");
  if (family_is_ambient(id.family) && id.category.kind != CatKind::Ambient)
    throw std::invalid_argument(id.to_string() + ": TC variants live on the ambient category");
  if (!family_is_ambient(id.family) && family_has_index(id.family) &&
      id.category.kind == CatKind::Ambient)
    throw std::invalid_argument(id.to_string() + ": LTC variants live on a localized category");
}

ClassExpr generator_join(Gen kind, uint32_t n) {
  ClassExpr e = atom(kind, 0);
  for (uint32_t i = 1; i <= n; ++i) e = wedge(std::move(e), atom(kind, i));
  return e;
}

const std::set<std::string>& cited_fact_ids() {
  static const std::set<std::string> ids{rule::seed_tc1, rule::open_tc1, rule::cls_bp_ltc};
  return ids;
}

VerdictMode mode_from_provenance(const Tri& tri) {
  for (const auto& entry : tri.provenance())
    if (cited_fact_ids().count(cited_id(entry))) return VerdictMode::Cited;
  return VerdictMode::Recomputed;
}

TraceStep image_step(const CategoryId& cat, const ClassExpr& e, const AlgebraConfig& cfg,
                     std::string description) {
  TraceStep s;
  s.kind = TraceStep::Kind::Image;
  s.description = std::move(description);
  s.before = cat.to_string() + "|" + e.to_string();
  s.after = localize(cat, e, cfg).to_string();
  return s;
}

Verdict equality_verdict(const ConjectureId& id, const AlgebraConfig& cfg) {
  const Statement st = statement_of(id);
  Verdict v;
  v.tri = eq_local(st.category, st.lhs, st.rhs, cfg);
  v.mode = mode_from_provenance(v.tri);
  if (v.mode == VerdictMode::Recomputed) {
    DerivationTrace trace;
    trace.goal = id.to_string() + ": " + st.description;
    trace.steps.push_back(image_step(st.category, st.lhs, cfg, "localize the left side"));
    trace.steps.push_back(image_step(st.category, st.rhs, cfg, "localize the right side"));
    TraceStep cmp;
    cmp.kind = TraceStep::Kind::Assemble;
    cmp.description = "compare the images in the model";
    cmp.citations = v.tri.provenance();
    trace.steps.push_back(std::move(cmp));
    trace.conclusion = std::string(verdict3_name(v.tri.value())) + " in " + st.category.to_string();
    v.trace = std::move(trace);
  }
  return v;
}

Verdict flag_from_equality(const ConjectureId& flag_id, const ConjectureId& source,
                           const char* bridge, const AlgebraConfig& cfg) {
  Verdict base = evaluate(source, cfg);
  auto prov = base.tri.provenance();
  prov.insert(prov.begin(), cite(bridge));
  Verdict v;
  switch (base.tri.value()) {
    case Verdict3::Holds: v.tri = Tri::holds(std::move(prov)); break;
    case Verdict3::Fails: v.tri = Tri::fails(std::move(prov)); break;
    case Verdict3::Open: v.tri = Tri::open(std::move(prov)); break;
  }
  v.mode = base.mode;
  v.trace = base.trace;
  if (v.trace) v.trace->goal = flag_id.to_string() + " via " + source.to_string();
  return v;
}

Verdict registry_verdict(Tri tri) {
  Verdict v;
  v.tri = std::move(tri);
  if (v.tri.is_open()) {
    v.mode = VerdictMode::Cited;
    return v;
  }
  v.mode = VerdictMode::Recomputed;
  DerivationTrace trace;
  trace.goal = "scan the smashing localization registry";
  TraceStep s;
  s.kind = TraceStep::Kind::Assemble;
  s.description = "registry records and compactness metadata";
  s.citations = v.tri.provenance();
  trace.steps.push_back(std::move(s));
  trace.conclusion = verdict3_name(v.tri.value());
  v.trace = std::move(trace);
  return v;
}

} // namespace

Statement statement_of(const ConjectureId& id) {
  validate(id);
  Statement st;
  st.category = id.category;
  switch (id.family) {
    case ConjectureFamily::TC1:
    case ConjectureFamily::LTC1:
      st.form = Statement::Form::LatticeEquality;
      st.lhs = telescope(*id.index);
      st.rhs = morava_k(*id.index);
      st.description = "<T(" + std::to_string(*id.index) + ")> = <K(" +
                       std::to_string(*id.index) + ")>";
      break;
    case ConjectureFamily::TC2:
    case ConjectureFamily::LTC2:
      st.form = Statement::Form::LatticeEquality;
      st.lhs = generator_join(Gen::T, *id.index);
      st.rhs = generator_join(Gen::K, *id.index);
      st.description = "<T(0) v ... v T(" + std::to_string(*id.index) + ")> = <K(0) v ... v K(" +
                       std::to_string(*id.index) + ")>";
      break;
    case ConjectureFamily::TC3:
    case ConjectureFamily::LTC3:
      st.form = Statement::Form::Flag;
      st.description = "finite localization of a type-n complex agrees with the telescope "
                       "(object-level; resolved through the height equality)";
      break;
    case ConjectureFamily::GSC:
      st.form = Statement::Form::Flag;
      st.description = "every smashing localization is generated by compact objects";
      break;
    case ConjectureFamily::SDGSC:
      st.form = Statement::Form::Flag;
      st.description = "every smashing localization is generated by strongly dualizable objects";
      break;
  }
  return st;
}

Verdict evaluate(const ConjectureId& id, const AlgebraConfig& cfg) {
  validate(id);
  switch (id.family) {
    case ConjectureFamily::TC1:
    case ConjectureFamily::TC2:
    case ConjectureFamily::LTC1:
    case ConjectureFamily::LTC2:
      return equality_verdict(id, cfg);
    case ConjectureFamily::TC3:
      return flag_from_equality(id, ConjectureId::tc(ConjectureFamily::TC1, *id.index),
                                rule::edge_tc1_tc3, cfg);
    case ConjectureFamily::LTC3:
      return flag_from_equality(
          id, ConjectureId::ltc(ConjectureFamily::LTC1, *id.index, id.category),
          rule::edge_ltc1_ltc3, cfg);
    case ConjectureFamily::GSC:
      return registry_verdict(gsc_verdict(id.category));
    case ConjectureFamily::SDGSC:
      return registry_verdict(sdgsc_verdict(id.category));
  }
  throw std::invalid_argument("unknown conjecture family");
}

namespace {

TraceStep rewrite_step(const ClassExpr& before, const ClassExpr& after, std::string description) {
  TraceStep s;
  s.kind = TraceStep::Kind::Rewrite;
  s.description = std::move(description);
  s.before = before.to_string();
  s.after = after.to_string();
  RuleLog log;
  NormalForm nb = normalize(before, &log);
  if (!(nb == normalize(after)))
    throw std::logic_error("derivation step does not normalize as recorded");
  s.citations = log;
  return s;
}

} // namespace

DerivationTrace derive_tc1_from_tc2(uint32_t n, uint32_t i) {
  if (i > n)
    throw std::invalid_argument("derive_tc1_from_tc2: height " + std::to_string(i) +
                                " exceeds the join bound " + std::to_string(n));
  const ClassExpr t_join = generator_join(Gen::T, n);
  const ClassExpr k_join = generator_join(Gen::K, n);
  const ClassExpr ti = telescope(i);

  DerivationTrace trace;
  trace.goal = "derive <T(" + std::to_string(i) + ")> = <K(" + std::to_string(i) +
               ")> from the join equality at height " + std::to_string(n);
  trace.hypotheses = {t_join.to_string() + " = " + k_join.to_string()};

  TraceStep smash_cong;
  smash_cong.kind = TraceStep::Kind::Assemble;
  smash_cong.description = "smash both sides of the hypothesis with T(" + std::to_string(i) + ")";
  smash_cong.citations = {cite(rule::hypothesis), cite(rule::cong_smash)};
  trace.steps.push_back(std::move(smash_cong));

  trace.steps.push_back(rewrite_step(smash(t_join, ti), ti, "reduce the left side"));
  trace.steps.push_back(rewrite_step(smash(k_join, ti), morava_k(i), "reduce the right side"));

  trace.conclusion = "T(" + std::to_string(i) + ") = K(" + std::to_string(i) +
                     ") under the hypothesis";
  return trace;
}

DerivationTrace derive_tc2_from_tc1s(uint32_t n, const std::optional<std::set<uint32_t>>& hypotheses) {
  std::set<uint32_t> have;
  if (hypotheses) {
    have = *hypotheses;
  } else {
    for (uint32_t i = 0; i <= n; ++i) have.insert(i);
  }
  for (uint32_t i = 0; i <= n; ++i)
    if (!have.count(i))
      throw std::invalid_argument("derive_tc2_from_tc1s: missing hypothesis at height " +
                                  std::to_string(i));

  DerivationTrace trace;
  trace.goal = "derive the join equality at height " + std::to_string(n) +
               " from the height-wise equalities";
  for (uint32_t i = 0; i <= n; ++i)
    trace.hypotheses.push_back(telescope(i).to_string() + " = " + morava_k(i).to_string());

  TraceStep join_cong;
  join_cong.kind = TraceStep::Kind::Assemble;
  join_cong.description = "join the hypothesis equalities over heights 0.." + std::to_string(n);
  join_cong.citations = {cite(rule::hypothesis), cite(rule::cong_wedge)};
  trace.steps.push_back(std::move(join_cong));

  trace.conclusion = generator_join(Gen::T, n).to_string() + " = " +
                     generator_join(Gen::K, n).to_string() + " under the hypotheses";
  return trace;
}

bool replay_trace(const DerivationTrace& trace, const AlgebraConfig& cfg) {
  for (const auto& step : trace.steps) {
    for (const auto& c : step.citations)
      if (!is_registered_rule(cited_id(c))) return false;
    switch (step.kind) {
      case TraceStep::Kind::Rewrite: {
        ClassExpr before = parse_expr(step.before);
        ClassExpr after = parse_expr(step.after);
        RuleLog log;
        if (!(normalize(before, &log) == normalize(after))) return false;
        // Every recorded reduction citation must fire again.
        std::set<std::string> fired;
        for (const auto& c : log) fired.insert(cited_id(c));
        for (const auto& c : step.citations) {
          const std::string id = cited_id(c);
          if (id.rfind("smash.", 0) == 0 || id.rfind("expand.", 0) == 0)
            if (!fired.count(id)) return false;
        }
        break;
      }
      case TraceStep::Kind::Image: {
        const size_t cut = step.before.find('|');
        if (cut == std::string::npos) return false;
        auto cat = CategoryId::parse(step.before.substr(0, cut));
        if (!cat) return false;
        ClassExpr e = parse_expr(step.before.substr(cut + 1));
        if (localize(*cat, e, cfg).to_string() != step.after) return false;
        break;
      }
      case TraceStep::Kind::Assemble:
        if (step.citations.empty()) return false;
        break;
    }
  }
  return true;
}

Verdict transport(const ConjectureId& ambient_conjecture, const CategoryId& target,
                  const AlgebraConfig& cfg) {
  validate(ambient_conjecture);
  const Statement st = statement_of(ambient_conjecture);
  if (st.form != Statement::Form::LatticeEquality)
    throw std::invalid_argument("transport: only lattice equalities transport directly");
  if (ambient_conjecture.category.kind != CatKind::Ambient)
    throw std::invalid_argument("transport: the source conjecture must be ambient");
  Verdict ambient = evaluate(ambient_conjecture, cfg);
  if (!ambient.tri.is_holds())
    throw std::invalid_argument("transport: the ambient verdict is " +
                                std::string(verdict3_name(ambient.tri.value())) +
                                ", not HOLDS");
  ConjectureFamily fam = ambient_conjecture.family == ConjectureFamily::TC1
                             ? ConjectureFamily::LTC1
                             : ConjectureFamily::LTC2;
  ConjectureId target_id = ConjectureId::ltc(fam, *ambient_conjecture.index, target);
  auto prov = ambient.tri.provenance();
  prov.insert(prov.begin(),
              cite(rule::edge_transport, ambient_conjecture.to_string() + " -> " +
                                             target_id.to_string()));
  Verdict v;
  v.tri = Tri::holds(std::move(prov));
  v.mode = VerdictMode::Cited;
  return v;
}

ImplicationGraph implication_graph(uint32_t max_n) {
  ImplicationGraph g;
  const CategoryId L = CategoryId::generic_local();
  auto cited = [&](std::vector<ConjectureId> from, ConjectureId to, const char* citation,
                   std::optional<std::string> condition = std::nullopt) {
    g.edges.push_back({std::move(from), std::move(to), ImplicationEdge::Justification::CitedTheorem,
                       cite(citation), std::move(condition), std::nullopt});
  };
  auto mech = [&](std::vector<ConjectureId> from, ConjectureId to, const char* citation,
                  DerivationTrace trace) {
    g.edges.push_back({std::move(from), std::move(to),
                       ImplicationEdge::Justification::MechanizedDerivation, cite(citation),
                       std::nullopt, std::move(trace)});
  };
  using F = ConjectureFamily;
  for (uint32_t n = 0; n <= max_n; ++n) {
    cited({ConjectureId::tc(F::TC1, n)}, ConjectureId::tc(F::TC3, n), rule::edge_tc1_tc3);
    cited({ConjectureId::tc(F::TC3, n)}, ConjectureId::tc(F::TC1, n), rule::edge_tc1_tc3);
    for (uint32_t i = 0; i <= n; ++i)
      mech({ConjectureId::tc(F::TC2, n)}, ConjectureId::tc(F::TC1, i), rule::edge_tc2_tc1,
           derive_tc1_from_tc2(n, i));
    std::vector<ConjectureId> all_tc1;
    for (uint32_t i = 0; i <= n; ++i) all_tc1.push_back(ConjectureId::tc(F::TC1, i));
    mech(all_tc1, ConjectureId::tc(F::TC2, n), rule::edge_tc1s_tc2, derive_tc2_from_tc1s(n));
    if (n > 0)
      mech({ConjectureId::tc(F::TC2, n - 1), ConjectureId::tc(F::TC1, n)},
           ConjectureId::tc(F::TC2, n), rule::edge_step_tc2, derive_tc2_from_tc1s(n));

    cited({ConjectureId::ltc(F::LTC1, n, L)}, ConjectureId::ltc(F::LTC3, n, L),
          rule::edge_ltc1_ltc3);
    cited({ConjectureId::ltc(F::LTC3, n, L)}, ConjectureId::ltc(F::LTC1, n, L),
          rule::edge_ltc3_ltc1, "L smashing");
    for (uint32_t i = 0; i <= n; ++i)
      mech({ConjectureId::ltc(F::LTC2, n, L)}, ConjectureId::ltc(F::LTC1, i, L),
           rule::edge_tc2_tc1, derive_tc1_from_tc2(n, i));
    std::vector<ConjectureId> all_ltc1;
    for (uint32_t i = 0; i <= n; ++i) all_ltc1.push_back(ConjectureId::ltc(F::LTC1, i, L));
    mech(all_ltc1, ConjectureId::ltc(F::LTC2, n, L), rule::edge_tc1s_tc2, derive_tc2_from_tc1s(n));

    cited({ConjectureId::gsc(CategoryId::ambient())}, ConjectureId::tc(F::TC2, n),
          rule::edge_gsc_tc2);
    cited({ConjectureId::gsc(L)}, ConjectureId::ltc(F::LTC2, n, L), rule::edge_gsc_tc2,
          "L smashing");

    cited({ConjectureId::tc(F::TC1, n)}, ConjectureId::ltc(F::LTC1, n, L), rule::edge_transport);
    cited({ConjectureId::tc(F::TC2, n)}, ConjectureId::ltc(F::LTC2, n, L), rule::edge_transport);
    cited({ConjectureId::tc(F::TC3, n)}, ConjectureId::ltc(F::LTC3, n, L), rule::edge_transport);
  }
  cited({ConjectureId::gsc(CategoryId::ambient())}, ConjectureId::sdgsc(CategoryId::ambient()),
        rule::edge_gsc_sdgsc);
  cited({ConjectureId::sdgsc(CategoryId::ambient())}, ConjectureId::gsc(CategoryId::ambient()),
        rule::edge_gsc_sdgsc);
  cited({ConjectureId::gsc(L)}, ConjectureId::sdgsc(L), rule::edge_gsc_sdgsc, "L smashing");
  cited({ConjectureId::sdgsc(L)}, ConjectureId::gsc(L), rule::edge_gsc_sdgsc, "L smashing");
  cited({ConjectureId::gsc(CategoryId::ambient())}, ConjectureId::gsc(L), rule::edge_transport,
        "L smashing");
  cited({ConjectureId::sdgsc(CategoryId::ambient())}, ConjectureId::sdgsc(L),
        rule::edge_transport, "L smashing");

  g.notes = {
      "edges over the generic category L instantiate per localized category; conditioned "
      "edges apply only where the defining localization is smashing (the E(n)-local and "
      "BP-local models)",
      "the speculative converse 'SDGSC implies LTC2_n without the smashing hypothesis' is "
      "excluded from the edge set: it would require knowing that every l_n is smashing",
  };
  return g;
}

std::map<ConjectureId, Verdict3> close_facts(const ImplicationGraph& graph,
                                             std::map<ConjectureId, Verdict3> facts) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& edge : graph.edges) {
      if (edge.condition) continue;
      bool all_hold = !edge.from.empty();
      for (const auto& f : edge.from) {
        auto it = facts.find(f);
        all_hold = all_hold && it != facts.end() && it->second == Verdict3::Holds;
      }
      if (!all_hold) continue;
      auto [it, inserted] = facts.emplace(edge.to, Verdict3::Holds);
      if (!inserted) {
        if (it->second == Verdict3::Fails)
          throw std::logic_error("contradiction: " + edge.to.to_string() +
                                 " both fails and is implied to hold");
        if (it->second != Verdict3::Holds) {
          it->second = Verdict3::Holds;
          changed = true;
        }
      } else {
        changed = true;
      }
    }
  }
  return facts;
}

ReportTable report(const std::vector<CategoryId>& cats, uint32_t max_n, const AlgebraConfig& cfg) {
  ReportTable table;
  table.max_n = max_n;
  using F = ConjectureFamily;
  for (const auto& cat : cats) {
    ReportRow row;
    row.category = cat;
    const bool ambient = cat.kind == CatKind::Ambient;
    const std::vector<F> fams = ambient ? std::vector<F>{F::TC1, F::TC2, F::TC3}
                                        : std::vector<F>{F::LTC1, F::LTC2, F::LTC3};
    for (F fam : fams) {
      for (uint32_t n = 0; n <= max_n; ++n) {
        ConjectureId id = ambient ? ConjectureId::tc(fam, n) : ConjectureId::ltc(fam, n, cat);
        row.cells.push_back({id, evaluate(id, cfg)});
      }
    }
    row.cells.push_back({ConjectureId::gsc(cat), evaluate(ConjectureId::gsc(cat), cfg)});
    row.cells.push_back({ConjectureId::sdgsc(cat), evaluate(ConjectureId::sdgsc(cat), cfg)});
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace bl
