#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supertypical/rational.hpp"

namespace supertypical {

// A vector in the weight lattice's ambient rational space, expressed in the
// distinguished orthogonal-ish basis of its family. basis_tag names that
// family ("B(0,2)", "gl(1,1)", ...); operations mixing tags are errors.
struct Weight {
  std::vector<Rational> coords;
  std::string basis_tag;

  Weight() = default;
  Weight(std::vector<Rational> c, std::string tag)
      : coords(std::move(c)), basis_tag(std::move(tag)) {}

  static Weight zero(int rank, std::string tag) {
    return Weight(std::vector<Rational>(rank), std::move(tag));
  }

  int rank() const { return static_cast<int>(coords.size()); }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ", ";
      s += coords[i].str();
    }
    return s + ")";
  }
};

inline void check_same_basis(const Weight& a, const Weight& b) {
  if (a.basis_tag != b.basis_tag || a.rank() != b.rank())
    throw DomainError("weight basis mismatch: " + a.basis_tag + " rank " +
                      std::to_string(a.rank()) + " vs " + b.basis_tag +
                      " rank " + std::to_string(b.rank()));
}

inline Weight operator+(const Weight& a, const Weight& b) {
  check_same_basis(a, b);
  Weight r = a;
  for (int i = 0; i < r.rank(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  check_same_basis(a, b);
  Weight r = a;
  for (int i = 0; i < r.rank(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

inline Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

inline Weight operator*(const Rational& s, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

inline bool operator==(const Weight& a, const Weight& b) {
  return a.basis_tag == b.basis_tag && a.coords == b.coords;
}
inline bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

// Total order: tag, then rank, then coordinates lexicographically. The
// lexicographic part is what "canonical representative" maximizes.
inline bool operator<(const Weight& a, const Weight& b) {
  if (a.basis_tag != b.basis_tag) return a.basis_tag < b.basis_tag;
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (int i = 0; i < a.rank(); ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  return false;
}
inline bool operator>(const Weight& a, const Weight& b) { return b < a; }
inline bool operator<=(const Weight& a, const Weight& b) { return !(b < a); }
inline bool operator>=(const Weight& a, const Weight& b) { return !(a < b); }

// Finitely supported function from weights to non-negative integers, the
// container for truncated characters. Zero values are never stored, so
// equality is equality of supports with multiplicities. All keys must share
// one basis_tag.
class WeightFunction {
 public:
  using Map = std::map<Weight, std::uint64_t>;

  WeightFunction() = default;

  void add(const Weight& w, std::uint64_t mult) {
    if (mult == 0) return;
    if (!entries_.empty()) check_same_basis(entries_.begin()->first, w);
    entries_[w] += mult;
  }

  std::uint64_t at(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
  }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  WeightFunction& operator+=(const WeightFunction& o) {
    for (const auto& [w, m] : o.entries_) add(w, m);
    return *this;
  }

  friend WeightFunction operator+(WeightFunction a, const WeightFunction& b) {
    a += b;
    return a;
  }

  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

}  // namespace supertypical
