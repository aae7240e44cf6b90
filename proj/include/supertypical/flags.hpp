#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "supertypical/root_data.hpp"

namespace supertypical {

// The 0/1 shift vectors of B(0,l), split by coordinate-sum parity.
// |gamma| = 2^l and the two halves have size 2^{l-1} each.
struct GammaSet {
  int l = 0;
  std::vector<Weight> gamma;
  std::vector<Weight> gamma0;
  std::vector<Weight> gamma1;
};

inline int parity_of(const Weight& gamma) {
  long long s = 0;
  for (const auto& c : gamma.coords) {
    if (!c.is_nonneg_integer()) throw DomainError(gamma.str() + " is not a 0/1 vector");
    s += c.as_int();
  }
  return static_cast<int>(s % 2);
}

inline bool in_gamma_cube(const Weight& g) {
  for (const auto& c : g.coords)
    if (c != Rational(0) && c != Rational(1)) return false;
  return true;
}

// Binary counting order: entry r has coordinate i equal to bit i-1 of r, so
// the list starts 0, sigma_1, sigma_2, sigma_1+sigma_2, ...
inline GammaSet gamma_sets(int l) {
  if (l < 1) throw DomainError("gamma_sets needs l >= 1");
  const std::string tag = FamilySpec{Family::B0n, 0, l}.str();
  GammaSet gs;
  gs.l = l;
  for (std::uint32_t r = 0; r < (1u << l); ++r) {
    Weight g = Weight::zero(l, tag);
    for (int i = 0; i < l; ++i)
      if (r >> i & 1u) g.coords[i] = 1;
    gs.gamma.push_back(g);
    (parity_of(g) == 0 ? gs.gamma0 : gs.gamma1).push_back(g);
  }
  return gs;
}

// A finite multiset of Verma highest weights with parities, over g or g0.
// This is the whole representation of a module with a Verma flag: no bases,
// no morphisms, just factors with multiplicity.
struct GradedVermaFlag {
  Ambient ambient = Ambient::Even;
  std::map<std::pair<Weight, int>, std::uint64_t> entries;

  void add(const Weight& w, int parity, std::uint64_t mult = 1) {
    if (parity != 0 && parity != 1) throw DomainError("parity must be 0 or 1");
    if (mult == 0) return;
    if (!entries.empty()) check_same_basis(entries.begin()->first.first, w);
    entries[{w, parity}] += mult;
  }

  std::uint64_t total_multiplicity() const {
    std::uint64_t t = 0;
    for (const auto& [k, m] : entries) t += m;
    return t;
  }

  bool empty() const { return entries.empty(); }

  friend bool operator==(const GradedVermaFlag& a, const GradedVermaFlag& b) {
    return a.ambient == b.ambient && a.entries == b.entries;
  }
};

inline void require_b0n(const SuperRootData& d, const char* what) {
  if (d.spec.family != Family::B0n)
    throw DomainError(std::string(what) + " is defined for B(0,l) only, not " +
                      d.basis_tag());
}

// Verma flag of M~(lambda) restricted to g0: factors M(lambda-gamma) over all
// gamma, the factor's parity being |gamma| mod 2 (highest weight vector even).
inline GradedVermaFlag restriction_flag(const SuperRootData& d, const Weight& lambda) {
  require_b0n(d, "restriction_flag");
  check_rank(d, lambda);
  GradedVermaFlag f;
  f.ambient = Ambient::Even;
  for (const auto& g : gamma_sets(d.spec.n).gamma)
    f.add(lambda - g, parity_of(g));
  return f;
}

// Verma flag of Ind M(mu) over g: factors M~(mu+gamma) with parity
// (|gamma| + base_parity) mod 2. Cross-checked against the super partition
// character rather than taken on faith; see the character tests.
inline GradedVermaFlag induction_flag(const SuperRootData& d, const Weight& mu,
                                      int base_parity) {
  require_b0n(d, "induction_flag");
  check_rank(d, mu);
  if (base_parity != 0 && base_parity != 1)
    throw DomainError("base parity must be 0 or 1");
  GradedVermaFlag f;
  f.ambient = Ambient::Full;
  for (const auto& g : gamma_sets(d.spec.n).gamma)
    f.add(mu + g, (parity_of(g) + base_parity) % 2);
  return f;
}

}  // namespace supertypical
