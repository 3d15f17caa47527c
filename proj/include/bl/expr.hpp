#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace bl {

/// Generator alphabet for Bousfield-class expressions. Sphere is the unit
/// class <S^0>; F, T, K, E carry a height index; Q is the wedge of all
/// Morava K-theories.
enum class Gen : uint8_t { Zero, Sphere, F, T, K, E, Q, BP, HFp, I };

bool gen_has_index(Gen g);
const char* gen_name(Gen g);

struct Generator {
  Gen kind = Gen::Zero;
  uint32_t index = 0;

  auto operator<=>(const Generator& other) const = default;
  std::string to_string() const;
};

/// Immutable expression tree over the generator alphabet with binary smash
/// and wedge nodes. Smash and wedge are associative and commutative at the
/// class level; the tree shape is whatever the caller or parser produced.
class ClassExpr {
public:
  enum class Node : uint8_t { Atom, Smash, Wedge };

  ClassExpr() : node_(Node::Atom), gen_{Gen::Zero, 0} {}
  explicit ClassExpr(Generator g) : node_(Node::Atom), gen_(g) {}
  ClassExpr(Node op, ClassExpr lhs, ClassExpr rhs);

  Node node() const { return node_; }
  const Generator& atom() const { return gen_; }
  const ClassExpr& lhs() const { return *lhs_; }
  const ClassExpr& rhs() const { return *rhs_; }

  bool operator==(const ClassExpr& other) const;

  std::string to_string() const;

private:
  Node node_;
  Generator gen_;
  std::shared_ptr<const ClassExpr> lhs_, rhs_;
};

ClassExpr atom(Gen kind, uint32_t index = 0);
ClassExpr zero_expr();
ClassExpr sphere();
ClassExpr finite_type(uint32_t n); // F(n)
ClassExpr telescope(uint32_t n);   // T(n)
ClassExpr morava_k(uint32_t n);    // K(n)
ClassExpr johnson_wilson(uint32_t n); // E(n)
ClassExpr all_morava();            // Q
ClassExpr bp();
ClassExpr hfp();
ClassExpr brown_comenetz();        // I
ClassExpr smash(ClassExpr a, ClassExpr b);
ClassExpr wedge(ClassExpr a, ClassExpr b);

} // namespace bl
