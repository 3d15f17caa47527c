#include "bl/expr.hpp"

#include <sstream>

namespace bl {

bool gen_has_index(Gen g) {
  return g == Gen::F || g == Gen::T || g == Gen::K || g == Gen::E;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Zero: return "0";
    case Gen::Sphere: return "S";
    case Gen::F: return "F";
    case Gen::T: return "T";
    case Gen::K: return "K";
    case Gen::E: return "E";
    case Gen::Q: return "Q";
    case Gen::BP: return "BP";
    case Gen::HFp: return "HFp";
    case Gen::I: return "I";
  }
  return "?";
}

std::string Generator::to_string() const {
  std::ostringstream os;
  os << gen_name(kind);
  if (gen_has_index(kind)) os << '(' << index << ')';
  return os.str();
}

ClassExpr::ClassExpr(Node op, ClassExpr lhs, ClassExpr rhs)
    : node_(op),
      gen_{Gen::Zero, 0},
      lhs_(std::make_shared<const ClassExpr>(std::move(lhs))),
      rhs_(std::make_shared<const ClassExpr>(std::move(rhs))) {}

bool ClassExpr::operator==(const ClassExpr& other) const {
  if (node_ != other.node_) return false;
  if (node_ == Node::Atom) return gen_ == other.gen_;
  return *lhs_ == *other.lhs_ && *rhs_ == *other.rhs_;
}

namespace {

void print(const ClassExpr& e, std::ostringstream& os, bool parenthesize_wedge) {
  switch (e.node()) {
    case ClassExpr::Node::Atom:
      os << e.atom().to_string();
      break;
    case ClassExpr::Node::Smash:
      print(e.lhs(), os, true);
      os << " ^ ";
      print(e.rhs(), os, true);
      break;
    case ClassExpr::Node::Wedge:
      if (parenthesize_wedge) os << '(';
      print(e.lhs(), os, false);
      os << " v ";
      print(e.rhs(), os, false);
      if (parenthesize_wedge) os << ')';
      break;
  }
}

} // namespace

std::string ClassExpr::to_string() const {
  std::ostringstream os;
  print(*this, os, false);
  return os.str();
}

ClassExpr atom(Gen kind, uint32_t index) { return ClassExpr(Generator{kind, index}); }
ClassExpr zero_expr() { return atom(Gen::Zero); }
ClassExpr sphere() { return atom(Gen::Sphere); }
ClassExpr finite_type(uint32_t n) { return atom(Gen::F, n); }
ClassExpr telescope(uint32_t n) { return atom(Gen::T, n); }
ClassExpr morava_k(uint32_t n) { return atom(Gen::K, n); }
ClassExpr johnson_wilson(uint32_t n) { return atom(Gen::E, n); }
ClassExpr all_morava() { return atom(Gen::Q); }
ClassExpr bp() { return atom(Gen::BP); }
ClassExpr hfp() { return atom(Gen::HFp); }
ClassExpr brown_comenetz() { return atom(Gen::I); }
ClassExpr smash(ClassExpr a, ClassExpr b) {
  return ClassExpr(ClassExpr::Node::Smash, std::move(a), std::move(b));
}
ClassExpr wedge(ClassExpr a, ClassExpr b) {
  return ClassExpr(ClassExpr::Node::Wedge, std::move(a), std::move(b));
}

} // namespace bl
