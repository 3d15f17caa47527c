#include "bl/parse.hpp"

namespace bl {

namespace {

constexpr uint32_t kMaxIndex = 65536;

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

ClassExpr parse_wedge(Cursor& c);

uint32_t parse_nat(Cursor& c) {
  c.skip_ws();
  const size_t start = c.pos;
  if (start >= c.text.size() || c.text[start] < '0' || c.text[start] > '9')
    throw ParseError("expected index", start);
  uint64_t value = 0;
  while (c.pos < c.text.size() && c.text[c.pos] >= '0' && c.text[c.pos] <= '9') {
    value = value * 10 + uint64_t(c.text[c.pos] - '0');
    if (value > kMaxIndex) throw ParseError("index overflow", start);
    ++c.pos;
  }
  return uint32_t(value);
}

ClassExpr parse_factor(Cursor& c) {
  c.skip_ws();
  const size_t start = c.pos;
  if (c.eat('(')) {
    ClassExpr e = parse_wedge(c);
    if (!c.eat(')')) throw ParseError("expected ')'", c.pos);
    return e;
  }
  if (c.eat('0')) return zero_expr();
  // Longest generator name first so HFp is not read as H.
  if (c.eat_word("HFp")) return hfp();
  if (c.eat_word("BP")) return bp();
  if (c.eat_word("S")) return sphere();
  if (c.eat_word("I")) return brown_comenetz();
  if (c.eat_word("Q")) return all_morava();
  for (auto [letter, kind] : {std::pair{'F', Gen::F}, {'T', Gen::T}, {'K', Gen::K}, {'E', Gen::E}}) {
    if (c.eat(letter)) {
      if (!c.eat('(')) throw ParseError("expected '('", c.pos);
      uint32_t n = parse_nat(c);
      if (!c.eat(')')) throw ParseError("expected ')'", c.pos);
      return atom(kind, n);
    }
  }
  throw ParseError("expected generator, '0' or '('", start);
}

bool eat_smash_op(Cursor& c) {
  if (c.eat('^')) return true;
  return c.eat_word("∧");
}

bool eat_wedge_op(Cursor& c) {
  if (c.eat('v')) return true;
  return c.eat_word("∨");
}

ClassExpr parse_term(Cursor& c) {
  ClassExpr e = parse_factor(c);
  while (eat_smash_op(c)) e = smash(std::move(e), parse_factor(c));
  return e;
}

ClassExpr parse_wedge(Cursor& c) {
  ClassExpr e = parse_term(c);
  while (eat_wedge_op(c)) e = wedge(std::move(e), parse_term(c));
  return e;
}

} // namespace

ClassExpr parse_expr(std::string_view text) {
  Cursor c{text};
  ClassExpr e = parse_wedge(c);
  if (!c.eof()) throw ParseError("unexpected trailing input", c.pos);
  return e;
}

} // namespace bl
