#include "bl/serialize.hpp"

#include <sstream>

namespace bl {

json to_json(const FinCofSet& s) {
  return json{{"polarity", s.is_finite() ? "finite" : "cofinite"}, {"elements", s.carrier()}};
}

json to_json(const Generator& g) {
  json j{{"kind", gen_name(g.kind)}};
  if (gen_has_index(g.kind)) j["index"] = g.index;
  return j;
}

json to_json(const Monomial& m) {
  json factors = json::array();
  for (const auto& g : m.factors) factors.push_back(to_json(g));
  return json{{"factors", factors}};
}

json to_json(const NormalForm& nf) {
  json monos = json::array();
  for (const auto& m : nf.monomials) monos.push_back(to_json(m));
  return json{{"k_family", to_json(nf.k_family)},
              {"monomials", monos},
              {"display", nf.to_string()}};
}

json to_json(const SupportBounds& sb) {
  return json{{"lower", to_json(sb.lower)}, {"upper", to_json(sb.upper)}};
}

json to_json(const Tri& t) {
  return json{{"verdict", verdict3_name(t.value())}, {"provenance", t.provenance()}};
}

json to_json(const FiniteLattice& lat) {
  json leq_pairs = json::array();
  for (uint32_t a = 0; a < lat.size(); ++a)
    for (uint32_t b = 0; b < lat.size(); ++b)
      if (lat.leq(a, b)) leq_pairs.push_back(json::array({lat.name(a), lat.name(b)}));
  return json{{"carrier", lat.names()},
              {"leq", leq_pairs},
              {"top", lat.name(lat.top())},
              {"bottom", lat.name(lat.bottom())}};
}

json to_json(const LocalElement& e) {
  json j{{"category", e.category.to_string()}};
  if (std::holds_alternative<FinCofSet>(e.value)) {
    j["support"] = to_json(std::get<FinCofSet>(e.value));
  } else if (std::holds_alternative<ZTest>(e.value)) {
    switch (std::get<ZTest>(e.value)) {
      case ZTest::Zero: j["class"] = "zero"; break;
      case ZTest::Nonzero: j["class"] = "nonzero"; break;
      case ZTest::Indeterminate: j["class"] = "indeterminate"; break;
    }
  } else if (std::holds_alternative<BpLocalImage>(e.value)) {
    const auto& bp = std::get<BpLocalImage>(e.value);
    j["harmonic_support"] = to_json(bp.harmonic_support);
    j["form"] = to_json(bp.form);
  } else {
    j["form"] = to_json(std::get<NormalForm>(e.value));
  }
  return j;
}

json to_json(const SmashingLocalizationRecord& rec) {
  return json{{"name", rec.name},
              {"category", rec.category.to_string()},
              {"acyclic_class", rec.acyclic_class.to_string()},
              {"local_unit_class", rec.local_unit_class.to_string()},
              {"generated_by", generated_by_name(rec.generated_by)},
              {"citation", rec.citation}};
}

json to_json(const DerivationTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    const char* kind = s.kind == TraceStep::Kind::Rewrite
                           ? "rewrite"
                           : (s.kind == TraceStep::Kind::Image ? "image" : "assemble");
    steps.push_back(json{{"kind", kind},
                         {"description", s.description},
                         {"before", s.before},
                         {"after", s.after},
                         {"citations", s.citations}});
  }
  return json{{"goal", trace.goal},
              {"hypotheses", trace.hypotheses},
              {"steps", steps},
              {"conclusion", trace.conclusion}};
}

json to_json(const Verdict& v) {
  json j{{"verdict", verdict3_name(v.tri.value())},
         {"mode", v.mode == VerdictMode::Recomputed ? "recomputed" : "cited"},
         {"provenance", v.tri.provenance()}};
  if (v.trace) j["trace"] = to_json(*v.trace);
  return j;
}

json to_json(const ReportTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json cells = json::object();
    for (const auto& cell : row.cells) {
      std::string key = family_name(cell.id.family);
      if (cell.id.index) key += "_" + std::to_string(*cell.id.index);
      cells[key] = to_json(cell.verdict);
    }
    rows.push_back(json{{"category", row.category.to_string()}, {"cells", cells}});
  }
  return json{{"max_n", table.max_n}, {"rows", rows}};
}

json to_json(const ImplicationGraph& graph) {
  json edges = json::array();
  for (const auto& e : graph.edges) {
    json from = json::array();
    for (const auto& f : e.from) from.push_back(f.to_string());
    json j{{"from", from},
           {"to", e.to.to_string()},
           {"justification", e.justification == ImplicationEdge::Justification::MechanizedDerivation
                                 ? "derived"
                                 : "cited"},
           {"citation", e.citation}};
    if (e.condition) j["condition"] = *e.condition;
    if (e.trace) j["trace"] = to_json(*e.trace);
    edges.push_back(std::move(j));
  }
  return json{{"edges", edges}, {"notes", graph.notes}};
}

json registry_json(const CategoryId& cat, uint32_t cap) {
  json records = json::array();
  for (const auto& rec : smashing_registry(cat, cap)) {
    json j = to_json(rec);
    j["complemented_pair_verified"] = verify_complemented_pair(cat, rec);
    records.push_back(std::move(j));
  }
  const CategoryModel model = category_model(cat);
  return json{{"category", cat.to_string()},
              {"records", records},
              {"registry_complete", model.registry_complete},
              {"cap", cap}};
}

namespace {

const char* lattice_kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::SymbolicFragment: return "symbolic fragment";
    case LatticeKind::PowerSetFinCof: return "power set of N (finite/cofinite model)";
    case LatticeKind::PowerSetFinite: return "finite power set";
    case LatticeKind::TwoElement: return "two-element lattice";
    case LatticeKind::QuotientOnly: return "quotient model only";
  }
  return "?";
}

} // namespace

json category_report_json(const CategoryId& cat, uint32_t cap) {
  const CategoryModel model = category_model(cat);
  json j{{"category", cat.to_string()},
         {"lattice_kind", lattice_kind_name(model.lattice_kind)},
         {"zero_test", model.zero_test},
         {"registry_complete", model.registry_complete},
         {"no_nonzero_compacts", model.no_nonzero_compacts},
         {"l_n_smashing", to_json(model.ln_smashing)},
         {"notes", model.notes},
         {"smashing_registry", registry_json(cat, cap)["records"]},
         {"gsc", to_json(gsc_verdict(cat, cap))},
         {"sdgsc", to_json(sdgsc_verdict(cat, cap))}};
  if (model.lattice_kind == LatticeKind::PowerSetFinite ||
      model.lattice_kind == LatticeKind::TwoElement) {
    auto rep = sublattice_report(cat);
    j["sublattices"] = json{{"BL", rep.bl_size}, {"DL", rep.dl_size}, {"BA", rep.ba_size}};
  }
  return j;
}

json invlimit_json(uint32_t depth) {
  InverseLimit inv = inverse_limit(depth);
  const FiniteLattice pow = FiniteLattice::power_set(depth);
  bool projections_ok = true;
  for (const auto& p : inv.projections) projections_ok = projections_ok && check_hom(p);
  // The bijection sends a compatible family to its deepest component.
  bool iso_ok = inv.limit->size() == pow.size();
  for (uint32_t a = 0; a < inv.limit->size() && iso_ok; ++a)
    for (uint32_t b = 0; b < inv.limit->size() && iso_ok; ++b) {
      uint64_t ja = inv.families[inv.limit->join(a, b)].back();
      uint64_t jb = inv.families[a].back() | inv.families[b].back();
      iso_ok = ja == jb;
    }
  json witness = json::array();
  if (depth <= 4) {
    for (const auto& fam : inv.families) {
      json stages = json::array();
      for (uint64_t m : fam) stages.push_back(m);
      witness.push_back(std::move(stages));
    }
  }
  json j{{"depth", depth},
         {"size", inv.limit->size()},
         {"isomorphic_to_power_set", iso_ok},
         {"projections_pass_check_hom", projections_ok}};
  if (!witness.empty()) j["compatible_families"] = witness;
  return j;
}

std::string lattice_dot(const FiniteLattice& lat, const std::string& name) {
  if (lat.size() > 256)
    throw LatticeError("refusing to render a Hasse diagram with more than 256 elements");
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (uint32_t x = 0; x < lat.size(); ++x)
    os << "  n" << x << " [label=\"" << lat.name(x) << "\"];\n";
  for (auto [a, b] : lat.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_dot(const ImplicationGraph& graph) {
  std::ostringstream os;
  os << "digraph implications {\n  node [shape=box];\n";
  auto node_id = [](const ConjectureId& id) {
    std::string s = id.to_string();
    for (auto& c : s)
      if (!isalnum(static_cast<unsigned char>(c))) c = '_';
    return s;
  };
  std::vector<std::string> declared;
  auto declare = [&](const ConjectureId& id) {
    std::string n = node_id(id);
    if (std::find(declared.begin(), declared.end(), n) == declared.end()) {
      declared.push_back(n);
      os << "  " << n << " [label=\"" << id.to_string() << "\"];\n";
    }
  };
  for (const auto& e : graph.edges) {
    for (const auto& f : e.from) declare(f);
    declare(e.to);
  }
  for (const auto& e : graph.edges) {
    std::string label =
        e.justification == ImplicationEdge::Justification::MechanizedDerivation ? "derived"
                                                                                : "cited";
    if (e.condition) label += ", if " + *e.condition;
    for (const auto& f : e.from)
      os << "  " << node_id(f) << " -> " << node_id(e.to) << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tri_text(const Tri& t) {
  std::ostringstream os;
  os << verdict3_name(t.value());
  for (const auto& p : t.provenance()) os << "\n  - " << p;
  return os.str();
}

std::string report_text(const ReportTable& table) {
  std::ostringstream os;
  for (const auto& row : table.rows) {
    os << "== " << row.category.to_string() << " ==\n";
    // Compress uniform runs per family.
    size_t i = 0;
    while (i < row.cells.size()) {
      const auto& first = row.cells[i];
      size_t j = i;
      auto same = [&](size_t k) {
        return row.cells[k].id.family == first.id.family &&
               row.cells[k].verdict.tri.value() == first.verdict.tri.value() &&
               row.cells[k].verdict.mode == first.verdict.mode;
      };
      while (j + 1 < row.cells.size() && same(j + 1)) ++j;
      std::string label = family_name(first.id.family);
      if (first.id.index) {
        label += "_" + std::to_string(*first.id.index);
        if (j > i && row.cells[j].id.index)
          label += ".." + std::to_string(*row.cells[j].id.index);
      }
      os << "  " << label << ": " << verdict3_name(first.verdict.tri.value()) << " ["
         << (first.verdict.mode == VerdictMode::Recomputed ? "recomputed" : "cited") << "]\n";
      i = j + 1;
    }
  }
  return os.str();
}

} // namespace bl
