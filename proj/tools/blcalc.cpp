// blcalc: calculator for Bousfield classes of p-local spectra and the
// lattice models of their localized categories.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bl/parse.hpp"
#include "bl/serialize.hpp"

namespace {

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(path);
      out << text << "\n";
    }
  }
  void emit_json(const bl::json& j) const { emit(j.dump(2)); }
};

bl::CategoryId parse_category(const std::string& text) {
  auto cat = bl::CategoryId::parse(text);
  if (!cat) throw CLI::ValidationError("--category", "unknown category '" + text + "'");
  return *cat;
}

bl::AlgebraConfig config_with(const std::vector<uint32_t>& assume_tc1) {
  bl::AlgebraConfig cfg = bl::default_config();
  for (uint32_t n : assume_tc1) cfg.tc1_seeds.insert(n);
  return cfg;
}

void add_output_opts(CLI::App* cmd, Output& out, bool allow_dot = false) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember(allow_dot ? std::vector<std::string>{"text", "json", "dot"}
                                      : std::vector<std::string>{"text", "json"}));
  cmd->add_option("--output", out.path, "write to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bousfield class calculator for localized categories of spectra"};
  app.require_subcommand(1);

  std::vector<uint32_t> assume_tc1;
  app.add_option("--assume-tc1", assume_tc1,
                 "treat <T(n)> = <K(n)> as known at these extra heights (what-if runs)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "normalize an expression, optionally in a category");
  std::string eval_expr, eval_cat;
  Output eval_out;
  eval_cmd->add_option("expr", eval_expr, "class expression")->required();
  eval_cmd->add_option("--category", eval_cat, "evaluate in this category's lattice model");
  add_output_opts(eval_cmd, eval_out);

  // eq / leq
  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two classes (HOLDS/FAILS/OPEN)");
  auto* leq_cmd = app.add_subcommand("leq", "decide the order between two classes");
  std::string cmp_lhs, cmp_rhs, cmp_cat;
  Output cmp_out;
  for (auto* cmd : {eq_cmd, leq_cmd}) {
    cmd->add_option("lhs", cmp_lhs, "left class expression")->required();
    cmd->add_option("rhs", cmp_rhs, "right class expression")->required();
    cmd->add_option("--category", cmp_cat, "decide in this category");
    add_output_opts(cmd, cmp_out);
  }

  // support
  auto* supp_cmd = app.add_subcommand("support", "Morava support bounds of an expression");
  std::string supp_expr;
  Output supp_out;
  supp_cmd->add_option("expr", supp_expr, "class expression")->required();
  add_output_opts(supp_cmd, supp_out);

  // report
  auto* report_cmd = app.add_subcommand("report", "telescope-variant verdict table per category");
  std::vector<std::string> report_cats;
  uint32_t report_max_n = 8;
  Output report_out;
  report_cmd->add_option("--category", report_cats,
                         "categories to report on (default: all shipped models)");
  report_cmd->add_option("--max-n", report_max_n, "largest height to report");
  add_output_opts(report_cmd, report_out);

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "Bousfield lattice of a modeled category");
  std::string lattice_cat;
  std::optional<uint32_t> lattice_depth;
  Output lattice_out;
  lattice_cmd->add_option("--category", lattice_cat, "category")->required();
  lattice_cmd->add_option("--depth", lattice_depth, "truncation depth (harmonic model)");
  add_output_opts(lattice_cmd, lattice_out, /*allow_dot=*/true);

  // registry
  auto* registry_cmd = app.add_subcommand("registry", "smashing localization registry");
  std::string registry_cat;
  uint32_t registry_cap = 16;
  Output registry_out;
  registry_cmd->add_option("--category", registry_cat, "category")->required();
  registry_cmd->add_option("--cap", registry_cap, "index cap for infinite families");
  add_output_opts(registry_cmd, registry_out);

  // invlimit
  auto* inv_cmd = app.add_subcommand("invlimit", "inverse limit of the E(n) lattice tower");
  uint32_t inv_depth = 3;
  Output inv_out;
  inv_cmd->add_option("--depth", inv_depth, "tower depth")->required();
  add_output_opts(inv_cmd, inv_out);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "implication graph of the telescope variants");
  uint32_t graph_max_n = 3;
  Output graph_out;
  graph_cmd->add_option("--max-n", graph_max_n, "largest height");
  add_output_opts(graph_cmd, graph_out, /*allow_dot=*/true);

  CLI11_PARSE(app, argc, argv);

  try {
    const bl::AlgebraConfig cfg = config_with(assume_tc1);

    if (*eval_cmd) {
      bl::ClassExpr e = bl::parse_expr(eval_expr);
      if (eval_cat.empty()) {
        bl::NormalForm nf = bl::normalize(e);
        if (eval_out.format == "json")
          eval_out.emit_json(bl::to_json(nf));
        else
          eval_out.emit(nf.to_string());
      } else {
        bl::LocalElement img = bl::localize(parse_category(eval_cat), e, cfg);
        if (eval_out.format == "json")
          eval_out.emit_json(bl::to_json(img));
        else
          eval_out.emit(img.to_string());
      }
    } else if (*eq_cmd || *leq_cmd) {
      bl::ClassExpr a = bl::parse_expr(cmp_lhs);
      bl::ClassExpr b = bl::parse_expr(cmp_rhs);
      bl::Tri t;
      if (cmp_cat.empty()) {
        t = *eq_cmd ? bl::eq(a, b, cfg) : bl::leq(a, b, cfg);
      } else {
        bl::CategoryId cat = parse_category(cmp_cat);
        t = *eq_cmd ? bl::eq_local(cat, a, b, cfg) : bl::leq_local(cat, a, b, cfg);
      }
      if (cmp_out.format == "json")
        cmp_out.emit_json(bl::to_json(t));
      else
        cmp_out.emit(bl::tri_text(t));
    } else if (*supp_cmd) {
      bl::SupportBounds sb = bl::support(bl::parse_expr(supp_expr));
      if (supp_out.format == "json")
        supp_out.emit_json(bl::to_json(sb));
      else
        supp_out.emit("lower = " + sb.lower.to_string() + "\nupper = " + sb.upper.to_string());
    } else if (*report_cmd) {
      std::vector<bl::CategoryId> cats;
      if (report_cats.empty()) {
        cats = bl::shipped_categories();
      } else {
        for (const auto& c : report_cats) cats.push_back(parse_category(c));
      }
      bl::ReportTable table = bl::report(cats, report_max_n, cfg);
      if (report_out.format == "json")
        report_out.emit_json(bl::to_json(table));
      else
        report_out.emit(bl::report_text(table));
    } else if (*lattice_cmd) {
      bl::CategoryId cat = parse_category(lattice_cat);
      bl::FiniteLattice lat = bl::lattice_of(cat, lattice_depth);
      if (lattice_out.format == "json")
        lattice_out.emit_json(bl::to_json(lat));
      else if (lattice_out.format == "dot")
        lattice_out.emit(bl::lattice_dot(lat, cat.to_string()));
      else
        lattice_out.emit("BL(" + cat.to_string() + "): " + std::to_string(lat.size()) +
                         " elements, top = " + lat.name(lat.top()) +
                         ", bottom = " + lat.name(lat.bottom()));
    } else if (*registry_cmd) {
      bl::CategoryId cat = parse_category(registry_cat);
      if (registry_out.format == "json") {
        registry_out.emit_json(bl::registry_json(cat, registry_cap));
      } else {
        std::string text = "smashing localizations of " + cat.to_string() + ":";
        for (const auto& rec : bl::smashing_registry(cat, registry_cap)) {
          text += "\n  " + rec.name + ": acyclics <" + rec.acyclic_class.to_string() +
                  ">, locals <" + rec.local_unit_class.to_string() + ">, generated by " +
                  bl::generated_by_name(rec.generated_by) +
                  (bl::verify_complemented_pair(cat, rec) ? " [complemented pair verified]"
                                                          : " [complement check FAILED]");
        }
        if (!bl::category_model(cat).registry_complete)
          text += "\n  (registry not known to be complete)";
        registry_out.emit(text);
      }
    } else if (*inv_cmd) {
      bl::json j = bl::invlimit_json(inv_depth);
      if (inv_out.format == "json") {
        inv_out.emit_json(j);
      } else {
        std::string text = "inverse limit of the tower at depth " + std::to_string(inv_depth) +
                           ": " + std::to_string(j["size"].get<size_t>()) + " elements";
        text += j["isomorphic_to_power_set"].get<bool>()
                    ? "\n  isomorphic to the power set of {0.." + std::to_string(inv_depth) +
                          "} via the deepest component"
                    : "\n  NOT isomorphic to the expected power set";
        text += j["projections_pass_check_hom"].get<bool>()
                    ? "\n  all projections are lattice maps"
                    : "\n  some projection is not a lattice map";
        inv_out.emit(text);
      }
    } else if (*graph_cmd) {
      bl::ImplicationGraph g = bl::implication_graph(graph_max_n);
      if (graph_out.format == "json")
        graph_out.emit_json(bl::to_json(g));
      else if (graph_out.format == "dot")
        graph_out.emit(bl::graph_dot(g));
      else {
        std::string text;
        for (const auto& e : g.edges) {
          std::string from;
          for (size_t i = 0; i < e.from.size(); ++i)
            from += (i ? " & " : "") + e.from[i].to_string();
          text += from + " => " + e.to.to_string() +
                  (e.justification == bl::ImplicationEdge::Justification::MechanizedDerivation
                       ? "  [derived]"
                       : "  [cited]");
          if (e.condition) text += " (if " + *e.condition + ")";
          text += "\n";
        }
        graph_out.emit(text);
      }
    }
  } catch (const bl::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
