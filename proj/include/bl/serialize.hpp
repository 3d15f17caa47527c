#pragma once

#include <string>

#include "json.hpp"

#include "bl/conjecture.hpp"
#include "bl/localization.hpp"

namespace bl {

using json = nlohmann::json;

json to_json(const FinCofSet& s);
json to_json(const Generator& g);
json to_json(const Monomial& m);
json to_json(const NormalForm& nf);
json to_json(const SupportBounds& sb);
json to_json(const Tri& t);
json to_json(const FiniteLattice& lat);
json to_json(const LocalElement& e);
json to_json(const SmashingLocalizationRecord& rec);
json to_json(const Verdict& v);
json to_json(const DerivationTrace& trace);
json to_json(const ReportTable& table);
json to_json(const ImplicationGraph& graph);

/// Registry plus verification status for each record.
json registry_json(const CategoryId& cat, uint32_t cap);
/// Category summary: model kind, metadata, registry, GSC/SDGSC verdicts.
json category_report_json(const CategoryId& cat, uint32_t cap);
/// Inverse limit summary: size, projection checks, the stage bijection.
json invlimit_json(uint32_t depth);

/// Hasse diagram (covers only); refuses carriers above 256 elements.
std::string lattice_dot(const FiniteLattice& lat, const std::string& name);
std::string graph_dot(const ImplicationGraph& graph);

std::string tri_text(const Tri& t);
std::string report_text(const ReportTable& table);

} // namespace bl
