#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bl/parse.hpp"
#include "bl/serialize.hpp"

namespace py = pybind11;

namespace {

bl::AlgebraConfig config_from(const std::vector<uint32_t>& assume_tc1) {
  bl::AlgebraConfig cfg = bl::default_config();
  for (uint32_t n : assume_tc1) cfg.tc1_seeds.insert(n);
  return cfg;
}

bl::CategoryId category_from(const std::string& name) {
  auto cat = bl::CategoryId::parse(name);
  if (!cat) throw py::value_error("unknown category '" + name + "'");
  return *cat;
}

py::dict tri_dict(const bl::Tri& t) {
  py::dict d;
  d["verdict"] = bl::verdict3_name(t.value());
  d["provenance"] = t.provenance();
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bousfield class calculus for localized categories of spectra";

  py::class_<bl::ClassExpr>(m, "Expr")
      .def("__str__", &bl::ClassExpr::to_string)
      .def("__repr__", [](const bl::ClassExpr& e) { return "Expr(\"" + e.to_string() + "\")"; })
      .def("__eq__", [](const bl::ClassExpr& a, const bl::ClassExpr& b) { return a == b; })
      .def("__xor__", [](const bl::ClassExpr& a, const bl::ClassExpr& b) { return bl::smash(a, b); })
      .def("__or__", [](const bl::ClassExpr& a, const bl::ClassExpr& b) { return bl::wedge(a, b); });

  py::class_<bl::NormalForm>(m, "NormalForm")
      .def("__str__", &bl::NormalForm::to_string)
      .def("__repr__",
           [](const bl::NormalForm& nf) { return "NormalForm(\"" + nf.to_string() + "\")"; })
      .def("__eq__", [](const bl::NormalForm& a, const bl::NormalForm& b) { return a == b; })
      .def("is_zero", &bl::NormalForm::is_zero)
      .def("json", [](const bl::NormalForm& nf) { return bl::to_json(nf).dump(); })
      .def("expr", [](const bl::NormalForm& nf) { return bl::to_expr(nf); });

  m.def("parse", [](const std::string& text) { return bl::parse_expr(text); }, py::arg("text"),
        "Parse a class expression such as 'T(2) ^ K(3)' or 'K(0) v E(2)'.");
  m.def("smash", [](const bl::ClassExpr& a, const bl::ClassExpr& b) { return bl::smash(a, b); });
  m.def("wedge", [](const bl::ClassExpr& a, const bl::ClassExpr& b) { return bl::wedge(a, b); });
  m.def("normalize", [](const bl::ClassExpr& e) { return bl::normalize(e); }, py::arg("expr"));

  m.def(
      "support",
      [](const bl::ClassExpr& e) {
        auto sb = bl::support(e);
        py::dict d;
        d["lower"] = sb.lower.to_string();
        d["upper"] = sb.upper.to_string();
        return d;
      },
      py::arg("expr"));

  m.def(
      "eq",
      [](const bl::ClassExpr& a, const bl::ClassExpr& b, const std::string& category,
         const std::vector<uint32_t>& assume_tc1) {
        const auto cfg = config_from(assume_tc1);
        return tri_dict(category.empty() ? bl::eq(a, b, cfg)
                                         : bl::eq_local(category_from(category), a, b, cfg));
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("category") = "",
      py::arg("assume_tc1") = std::vector<uint32_t>{});
  m.def(
      "leq",
      [](const bl::ClassExpr& a, const bl::ClassExpr& b, const std::string& category,
         const std::vector<uint32_t>& assume_tc1) {
        const auto cfg = config_from(assume_tc1);
        return tri_dict(category.empty() ? bl::leq(a, b, cfg)
                                         : bl::leq_local(category_from(category), a, b, cfg));
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("category") = "",
      py::arg("assume_tc1") = std::vector<uint32_t>{});
  m.def("is_square_zero",
        [](const bl::ClassExpr& e) { return tri_dict(bl::is_square_zero(e)); });
  m.def("in_dl", [](const bl::ClassExpr& e) { return tri_dict(bl::in_dl(e)); });

  m.def(
      "localize",
      [](const std::string& category, const bl::ClassExpr& e) {
        return bl::to_json(bl::localize(category_from(category), e)).dump();
      },
      py::arg("category"), py::arg("expr"));

  m.def("shipped_categories", [] {
    std::vector<std::string> out;
    for (const auto& cat : bl::shipped_categories()) out.push_back(cat.to_string());
    return out;
  });
  m.def(
      "report_json",
      [](const std::vector<std::string>& categories, uint32_t max_n) {
        std::vector<bl::CategoryId> cats;
        if (categories.empty()) {
          cats = bl::shipped_categories();
        } else {
          for (const auto& c : categories) cats.push_back(category_from(c));
        }
        return bl::to_json(bl::report(cats, max_n)).dump();
      },
      py::arg("categories") = std::vector<std::string>{}, py::arg("max_n") = 8);
  m.def(
      "registry_json",
      [](const std::string& category, uint32_t cap) {
        return bl::registry_json(category_from(category), cap).dump();
      },
      py::arg("category"), py::arg("cap") = 16);
  m.def(
      "category_report_json",
      [](const std::string& category, uint32_t cap) {
        return bl::category_report_json(category_from(category), cap).dump();
      },
      py::arg("category"), py::arg("cap") = 16);
  m.def(
      "lattice_json",
      [](const std::string& category, std::optional<uint32_t> depth) {
        return bl::to_json(bl::lattice_of(category_from(category), depth)).dump();
      },
      py::arg("category"), py::arg("depth") = std::nullopt);
  m.def(
      "lattice_dot",
      [](const std::string& category, std::optional<uint32_t> depth) {
        return bl::lattice_dot(bl::lattice_of(category_from(category), depth), category);
      },
      py::arg("category"), py::arg("depth") = std::nullopt);
  m.def("invlimit_json", [](uint32_t depth) { return bl::invlimit_json(depth).dump(); },
        py::arg("depth"));
  m.def("implication_graph_json",
        [](uint32_t max_n) { return bl::to_json(bl::implication_graph(max_n)).dump(); },
        py::arg("max_n") = 8);
  m.def("implication_graph_dot",
        [](uint32_t max_n) { return bl::graph_dot(bl::implication_graph(max_n)); },
        py::arg("max_n") = 8);
  m.def("realize_diagram_check", &bl::realize_diagram_check, py::arg("depth"));

  py::register_exception<bl::ParseError>(m, "ParseError");
}
