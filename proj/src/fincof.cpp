#include "bl/fincof.hpp"

#include <algorithm>
#include <sstream>

namespace bl {

namespace {

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<uint32_t> list_union(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<uint32_t> list_intersect(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<uint32_t> list_difference(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

FinCofSet FinCofSet::naturals() {
  FinCofSet s;
  s.finite_ = false;
  return s;
}

FinCofSet FinCofSet::finite(std::vector<uint32_t> elems) {
  FinCofSet s;
  s.finite_ = true;
  s.elems_ = sorted_unique(std::move(elems));
  return s;
}

FinCofSet FinCofSet::cofinite(std::vector<uint32_t> excluded) {
  FinCofSet s;
  s.finite_ = false;
  s.elems_ = sorted_unique(std::move(excluded));
  return s;
}

FinCofSet FinCofSet::range(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> v;
  for (uint32_t i = lo; i <= hi; ++i) {
    v.push_back(i);
    if (i == hi) break; // guard wrap at UINT32_MAX
  }
  if (hi < lo) v.clear();
  return finite(std::move(v));
}

FinCofSet FinCofSet::from(uint32_t n) {
  std::vector<uint32_t> excluded;
  for (uint32_t i = 0; i < n; ++i) excluded.push_back(i);
  return cofinite(std::move(excluded));
}

std::optional<size_t> FinCofSet::size() const {
  if (!finite_) return std::nullopt;
  return elems_.size();
}

bool FinCofSet::contains(uint32_t n) const {
  bool listed = std::binary_search(elems_.begin(), elems_.end(), n);
  return finite_ ? listed : !listed;
}

std::optional<uint32_t> FinCofSet::min() const {
  if (finite_) {
    if (elems_.empty()) return std::nullopt;
    return elems_.front();
  }
  uint32_t n = 0;
  while (std::binary_search(elems_.begin(), elems_.end(), n)) ++n;
  return n;
}

FinCofSet FinCofSet::unite(const FinCofSet& other) const {
  FinCofSet out;
  if (finite_ && other.finite_) {
    out.finite_ = true;
    out.elems_ = list_union(elems_, other.elems_);
  } else if (!finite_ && !other.finite_) {
    out.finite_ = false;
    out.elems_ = list_intersect(elems_, other.elems_);
  } else {
    const FinCofSet& fin = finite_ ? *this : other;
    const FinCofSet& cof = finite_ ? other : *this;
    out.finite_ = false;
    out.elems_ = list_difference(cof.elems_, fin.elems_);
  }
  return out;
}

FinCofSet FinCofSet::intersect(const FinCofSet& other) const {
  return complement().unite(other.complement()).complement();
}

FinCofSet FinCofSet::complement() const {
  FinCofSet out;
  out.finite_ = !finite_;
  out.elems_ = elems_;
  return out;
}

bool FinCofSet::subset_of(const FinCofSet& other) const {
  return intersect(other) == *this;
}

std::string FinCofSet::to_string() const {
  if (is_all()) return "N";
  std::ostringstream os;
  if (!finite_) os << "N\\";
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

FinCofSet fincof_union(const FinCofSet& a, const FinCofSet& b) { return a.unite(b); }
FinCofSet fincof_intersect(const FinCofSet& a, const FinCofSet& b) { return a.intersect(b); }
FinCofSet fincof_complement(const FinCofSet& a) { return a.complement(); }

} // namespace bl
