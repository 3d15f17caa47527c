#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bl {

enum class Verdict3 : uint8_t { Holds, Fails, Open };

const char* verdict3_name(Verdict3 v);

/// Three-valued verdict with provenance. Open is an answer, not an error:
/// it marks questions the smash calculus genuinely cannot settle (most
/// prominently the telescope conjecture at heights >= 2). Definite verdicts
/// always carry at least one provenance entry naming the rule, fact or
/// witness that decided them.
class Tri {
public:
  static Tri holds(std::vector<std::string> provenance);
  static Tri fails(std::vector<std::string> provenance);
  static Tri open(std::vector<std::string> provenance = {});

  Verdict3 value() const { return value_; }
  bool is_holds() const { return value_ == Verdict3::Holds; }
  bool is_fails() const { return value_ == Verdict3::Fails; }
  bool is_open() const { return value_ == Verdict3::Open; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  Tri() : value_(Verdict3::Open) {}

private:
  Tri(Verdict3 v, std::vector<std::string> prov) : value_(v), provenance_(std::move(prov)) {}

  Verdict3 value_;
  std::vector<std::string> provenance_;
};

} // namespace bl
