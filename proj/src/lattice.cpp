#include "bl/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bl {

namespace {

std::string subset_name(uint64_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (uint32_t i = 0; i < 64; ++i) {
    if (mask & (uint64_t(1) << i)) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

} // namespace

std::optional<uint32_t> FiniteLattice::index_of(const std::string& name) const {
  for (uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<uint32_t> FiniteLattice::index_of_mask(uint64_t mask) const {
  for (uint32_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == mask) return i;
  return std::nullopt;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        const std::vector<std::pair<uint32_t, uint32_t>>& leq_pairs) {
  FiniteLattice lat;
  const size_t n = names.size();
  if (n == 0) throw LatticeError("empty carrier");
  if (n > kMaxCarrier) throw LatticeError("carrier exceeds the 4096-element cap");
  lat.names_ = std::move(names);
  lat.leq_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) lat.leq_[i * n + i] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a >= n || b >= n) throw LatticeError("leq pair out of range");
    lat.leq_[a * n + b] = 1;
  }
  // transitive closure
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (lat.leq_[i * n + k])
        for (size_t j = 0; j < n; ++j)
          if (lat.leq_[k * n + j]) lat.leq_[i * n + j] = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (lat.leq_[i * n + j] && lat.leq_[j * n + i])
        throw LatticeError("order is not antisymmetric");
  lat.derive_tables_from_order();
  lat.validate_basics();
  return lat;
}

FiniteLattice FiniteLattice::power_set(uint32_t n) {
  const uint32_t bits = n + 1;
  if (bits > 12) throw LatticeError("carrier exceeds the 4096-element cap");
  const size_t count = size_t(1) << bits;
  FiniteLattice lat;
  lat.names_.reserve(count);
  lat.masks_.reserve(count);
  for (uint64_t m = 0; m < count; ++m) {
    lat.names_.push_back(subset_name(m));
    lat.masks_.push_back(m);
  }
  lat.leq_.assign(count * count, 0);
  lat.join_.assign(count * count, 0);
  lat.meet_.assign(count * count, 0);
  for (uint64_t a = 0; a < count; ++a) {
    for (uint64_t b = 0; b < count; ++b) {
      lat.leq_[a * count + b] = ((a & ~b) == 0) ? 1 : 0;
      lat.join_[a * count + b] = uint32_t(a | b);
      lat.meet_[a * count + b] = uint32_t(a & b);
    }
  }
  lat.bottom_ = 0;
  lat.top_ = uint32_t(count - 1);
  return lat;
}

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> names, std::vector<uint8_t> leq,
                                         std::vector<uint32_t> join, std::vector<uint32_t> meet,
                                         uint32_t top, uint32_t bottom) {
  FiniteLattice lat;
  const size_t n = names.size();
  if (n == 0) throw LatticeError("empty carrier");
  if (n > kMaxCarrier) throw LatticeError("carrier exceeds the 4096-element cap");
  if (leq.size() != n * n || join.size() != n * n || meet.size() != n * n)
    throw LatticeError("table size mismatch");
  lat.names_ = std::move(names);
  lat.leq_ = std::move(leq);
  lat.join_ = std::move(join);
  lat.meet_ = std::move(meet);
  lat.top_ = top;
  lat.bottom_ = bottom;
  lat.validate_basics();
  return lat;
}

void FiniteLattice::derive_tables_from_order() {
  const size_t n = names_.size();
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      // least upper bound
      uint32_t lub = UINT32_MAX;
      for (size_t c = 0; c < n; ++c) {
        if (!leq_[a * n + c] || !leq_[b * n + c]) continue;
        if (lub == UINT32_MAX || leq_[c * n + lub]) lub = uint32_t(c);
      }
      if (lub == UINT32_MAX) throw LatticeError("pair without upper bound");
      for (size_t c = 0; c < n; ++c)
        if (leq_[a * n + c] && leq_[b * n + c] && !leq_[lub * n + c])
          throw LatticeError("pair without least upper bound");
      join_[a * n + b] = lub;
      uint32_t glb = UINT32_MAX;
      for (size_t c = 0; c < n; ++c) {
        if (!leq_[c * n + a] || !leq_[c * n + b]) continue;
        if (glb == UINT32_MAX || leq_[glb * n + c]) glb = uint32_t(c);
      }
      if (glb == UINT32_MAX) throw LatticeError("pair without lower bound");
      for (size_t c = 0; c < n; ++c)
        if (leq_[c * n + a] && leq_[c * n + b] && !leq_[c * n + glb])
          throw LatticeError("pair without greatest lower bound");
      meet_[a * n + b] = glb;
    }
  }
  uint32_t top = 0, bottom = 0;
  for (size_t c = 1; c < n; ++c) {
    if (leq_[top * n + c]) top = uint32_t(c);
    if (leq_[c * n + bottom]) bottom = uint32_t(c);
  }
  for (size_t c = 0; c < n; ++c) {
    if (!leq_[c * n + top]) throw LatticeError("no maximum element");
    if (!leq_[bottom * n + c]) throw LatticeError("no minimum element");
  }
  top_ = top;
  bottom_ = bottom;
}

void FiniteLattice::validate_basics() const {
  const size_t n = size();
  for (size_t a = 0; a < n; ++a) {
    if (join_[a * n + a] != a || meet_[a * n + a] != a)
      throw LatticeError("idempotence fails");
    for (size_t b = 0; b < n; ++b) {
      if (join_[a * n + b] != join_[b * n + a] || meet_[a * n + b] != meet_[b * n + a])
        throw LatticeError("commutativity fails");
      const bool le = leq_[a * n + b] != 0;
      if (le != (join_[a * n + b] == b) || le != (meet_[a * n + b] == a))
        throw LatticeError("tables inconsistent with order");
    }
  }
}

void FiniteLattice::check_laws() const {
  validate_basics();
  const size_t n = size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (join_[a * n + meet_[a * n + b]] != a) throw LatticeError("absorption fails");
      if (meet_[a * n + join_[a * n + b]] != a) throw LatticeError("absorption fails");
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        if (join_[a * n + join_[b * n + c]] != join_[join_[a * n + b] * n + c])
          throw LatticeError("join associativity fails");
        if (meet_[a * n + meet_[b * n + c]] != meet_[meet_[a * n + b] * n + c])
          throw LatticeError("meet associativity fails");
      }
}

bool FiniteLattice::is_distributive() const {
  const size_t n = size();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        uint32_t lhs = meet_[x * n + join_[y * n + z]];
        uint32_t rhs = join_[meet_[x * n + y] * n + meet_[x * n + z]];
        if (lhs != rhs) return false;
      }
  return true;
}

std::optional<uint32_t> FiniteLattice::complement_of(uint32_t x) const {
  const size_t n = size();
  std::vector<uint32_t> found;
  for (uint32_t c = 0; c < n; ++c)
    if (meet_[x * n + c] == bottom_ && join_[x * n + c] == top_) found.push_back(c);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) throw LatticeError("multiple complements (lattice not distributive)");
  return found.front();
}

size_t FiniteLattice::count_complemented() const {
  const size_t n = size();
  size_t count = 0;
  for (uint32_t x = 0; x < n; ++x) {
    for (uint32_t c = 0; c < n; ++c) {
      if (meet_[x * n + c] == bottom_ && join_[x * n + c] == top_) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool FiniteLattice::is_boolean() const {
  return is_distributive() && count_complemented() == size();
}

std::vector<std::pair<uint32_t, uint32_t>> FiniteLattice::covers() const {
  const size_t n = size();
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a * n + b]) continue;
      bool covered = true;
      for (uint32_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq_[a * n + c] && leq_[c * n + b]) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  return names_ == other.names_ && leq_ == other.leq_ && join_ == other.join_ &&
         meet_ == other.meet_ && top_ == other.top_ && bottom_ == other.bottom_;
}

LatticeHom identity_hom(LatticePtr lat) {
  LatticeHom h;
  h.source = lat;
  h.target = lat;
  h.mapping.resize(lat->size());
  for (uint32_t x = 0; x < lat->size(); ++x) h.mapping[x] = x;
  return h;
}

bool check_hom(const LatticeHom& h) {
  if (!h.source || !h.target || h.mapping.size() != h.source->size()) return false;
  const auto& src = *h.source;
  const auto& dst = *h.target;
  for (uint32_t x : h.mapping)
    if (x >= dst.size()) return false;
  if (h.mapping[src.bottom()] != dst.bottom()) return false;
  if (h.mapping[src.top()] != dst.top()) return false;
  for (uint32_t a = 0; a < src.size(); ++a)
    for (uint32_t b = 0; b < src.size(); ++b)
      if (h.mapping[src.join(a, b)] != dst.join(h.mapping[a], h.mapping[b])) return false;
  return true;
}

LatticeHom compose_homs(const LatticeHom& f, const LatticeHom& g) {
  if (!g.target || !f.source || !(*g.target == *f.source))
    throw LatticeError("compose_homs: source/target mismatch");
  LatticeHom out;
  out.source = g.source;
  out.target = f.target;
  out.mapping.resize(g.mapping.size());
  for (size_t x = 0; x < g.mapping.size(); ++x) out.mapping[x] = f.mapping[g.mapping[x]];
  return out;
}

bool hom_equal(const LatticeHom& a, const LatticeHom& b) {
  return a.source && b.source && *a.source == *b.source && *a.target == *b.target &&
         a.mapping == b.mapping;
}

LatticeHom truncation_hom(LatticePtr from_pow, LatticePtr to_pow) {
  if (to_pow->size() > from_pow->size()) throw LatticeError("truncation must not grow the carrier");
  LatticeHom h;
  h.source = from_pow;
  h.target = to_pow;
  const uint64_t keep = to_pow->mask_of(to_pow->top());
  h.mapping.resize(from_pow->size());
  for (uint32_t x = 0; x < from_pow->size(); ++x) {
    auto idx = to_pow->index_of_mask(from_pow->mask_of(x) & keep);
    if (!idx) throw LatticeError("truncation image missing");
    h.mapping[x] = *idx;
  }
  return h;
}

InverseLimit inverse_limit(uint32_t depth) {
  InverseLimit out;
  out.stages.reserve(depth + 1);
  for (uint32_t k = 0; k <= depth; ++k)
    out.stages.push_back(std::make_shared<const FiniteLattice>(FiniteLattice::power_set(k)));

  // Enumerate compatible families stage by stage: a family through stage k-1
  // extends to stage k exactly by choosing whether k belongs to the next set.
  std::vector<std::vector<uint64_t>> families;
  for (uint64_t m = 0; m < 2; ++m) families.push_back({m});
  for (uint32_t k = 1; k <= depth; ++k) {
    std::vector<std::vector<uint64_t>> next;
    const uint64_t low_mask = (uint64_t(1) << k) - 1;
    for (const auto& fam : families) {
      for (uint64_t x = 0; x < (uint64_t(1) << (k + 1)); ++x) {
        if ((x & low_mask) == fam.back()) {
          auto extended = fam;
          extended.push_back(x);
          next.push_back(std::move(extended));
        }
      }
    }
    families = std::move(next);
  }
  std::sort(families.begin(), families.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });

  // The limit lattice: order and operations are component-wise. Joins and
  // meets of compatible families are again compatible, so the tables can be
  // filled by locating the component-wise result among the families.
  const size_t n = families.size();
  std::map<uint64_t, uint32_t> by_top;
  for (uint32_t i = 0; i < n; ++i) by_top[families[i].back()] = i;
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& fam : families) {
    std::ostringstream os;
    os << "lim" << subset_name(fam.back());
    names.push_back(os.str());
  }
  std::vector<uint8_t> leq(n * n, 0);
  std::vector<uint32_t> join(n * n, 0), meet(n * n, 0);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      bool le = true;
      for (uint32_t k = 0; k <= depth && le; ++k)
        le = (families[a][k] & ~families[b][k]) == 0;
      leq[a * n + b] = le ? 1 : 0;
      join[a * n + b] = by_top.at(families[a].back() | families[b].back());
      meet[a * n + b] = by_top.at(families[a].back() & families[b].back());
    }
  out.limit = std::make_shared<const FiniteLattice>(FiniteLattice::from_tables(
      std::move(names), std::move(leq), std::move(join), std::move(meet),
      by_top.at((uint64_t(1) << (depth + 1)) - 1), by_top.at(0)));
  out.families = families;

  out.projections.reserve(depth + 1);
  for (uint32_t k = 0; k <= depth; ++k) {
    LatticeHom p;
    p.source = out.limit;
    p.target = out.stages[k];
    p.mapping.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
      auto idx = out.stages[k]->index_of_mask(families[i][k]);
      if (!idx) throw LatticeError("projection image missing");
      p.mapping[i] = *idx;
    }
    out.projections.push_back(std::move(p));
  }
  return out;
}

} // namespace bl
