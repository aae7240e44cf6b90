#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supertypical/root_data.hpp"
#include "supertypical/weyl.hpp"

namespace supertypical {

// P(T)(lambda): product of (beta, lambda+rho) over all odd positive roots.
// Nonzero exactly on the strongly typical weights.
inline Rational eval_T(const SuperRootData& d, const Weight& lambda) {
  check_rank(d, lambda);
  Weight s = lambda + d.rho;
  Rational p(1);
  for (const auto& beta : d.delta1_plus) p *= inner(d, beta, s);
  return p;
}

// P(Q)(lambda): same product over the isotropic odd positive roots only;
// empty product is 1, so eval_Q is identically 1 for B(0,l).
inline Rational eval_Q(const SuperRootData& d, const Weight& lambda) {
  check_rank(d, lambda);
  Weight s = lambda + d.rho;
  Rational p(1);
  for (const auto& beta : d.delta1_plus_isotropic) p *= inner(d, beta, s);
  return p;
}

enum class Kind { StronglyTypical, TypicalNotStrong, Atypical };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::StronglyTypical: return "StronglyTypical";
    case Kind::TypicalNotStrong: return "TypicalNotStrong";
    case Kind::Atypical: default: return "Atypical";
  }
}

struct Classification {
  Kind kind = Kind::StronglyTypical;
  std::vector<Weight> vanishing_odd_roots;
  bool generic_weakly_atypical = false;
  Rational T_value;
  Rational Q_value;
};

// Sorts lambda into strongly typical (no odd root vanishes on lambda+rho),
// atypical (an isotropic one does), or typical-but-not-strongly in between.
// generic_weakly_atypical flags the single-vanishing-root pattern the mate
// construction needs.
inline Classification classify(const SuperRootData& d, const Weight& lambda) {
  check_rank(d, lambda);
  Weight s = lambda + d.rho;
  Classification c;
  c.T_value = Rational(1);
  c.Q_value = Rational(1);
  bool isotropic_vanishes = false;
  for (const auto& beta : d.delta1_plus) {
    Rational v = inner(d, beta, s);
    c.T_value *= v;
    if (v.is_zero()) c.vanishing_odd_roots.push_back(beta);
  }
  for (const auto& beta : d.delta1_plus_isotropic) {
    Rational v = inner(d, beta, s);
    c.Q_value *= v;
    if (v.is_zero()) isotropic_vanishes = true;
  }
  if (c.vanishing_odd_roots.empty())
    c.kind = Kind::StronglyTypical;
  else if (isotropic_vanishes)
    c.kind = Kind::Atypical;
  else
    c.kind = Kind::TypicalNotStrong;
  c.generic_weakly_atypical = c.vanishing_odd_roots.size() == 1;
  return c;
}

// A central character, identified with its shifted Weyl orbit: the ambient
// algebra, the shift (rho for g, rho0 for g0) and the canonical orbit
// representative of lambda+shift.
struct CentralCharacter {
  Ambient ambient = Ambient::Full;
  Weight shift;
  Weight rep;
};

inline bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
  return a.ambient == b.ambient && a.shift == b.shift && a.rep == b.rep;
}
inline bool operator!=(const CentralCharacter& a, const CentralCharacter& b) {
  return !(a == b);
}
inline bool operator<(const CentralCharacter& a, const CentralCharacter& b) {
  if (a.ambient != b.ambient) return a.ambient < b.ambient;
  if (a.shift != b.shift) return a.shift < b.shift;
  return a.rep < b.rep;
}

inline CentralCharacter g_char_of(const SuperRootData& d, const WeylGroup& g,
                                  const Weight& lambda) {
  check_rank(d, lambda);
  return CentralCharacter{Ambient::Full, d.rho, canonical_rep(g, lambda + d.rho)};
}

inline CentralCharacter g0_char_of(const SuperRootData& d, const WeylGroup& g,
                                   const Weight& mu) {
  check_rank(d, mu);
  return CentralCharacter{Ambient::Even, d.rho0, canonical_rep(g, mu + d.rho0)};
}

inline void check_char(const SuperRootData& d, const CentralCharacter& chi) {
  const Weight& expect = chi.ambient == Ambient::Full ? d.rho : d.rho0;
  if (chi.shift != expect)
    throw DomainError("central character shift " + chi.shift.str() +
                      " does not match " + ambient_name(chi.ambient) + " over " +
                      d.basis_tag());
  check_rank(d, chi.rep);
}

// The full dot orbit {lambda : g_char_of(lambda) = chi}. Typical characters
// only: for an atypical one this orbit is not the whole fiber.
inline std::vector<Weight> weights_of_char(const SuperRootData& d, const WeylGroup& g,
                                           const CentralCharacter& chi) {
  check_char(d, chi);
  if (chi.ambient != Ambient::Full)
    throw DomainError("weights_of_char expects a g central character");
  if (classify(d, chi.rep - d.rho).kind == Kind::Atypical)
    throw DomainError("weights_of_char is restricted to typical central characters");
  std::set<Weight> out;
  for (const auto& w : g.elements) out.insert(act(w, chi.rep) - d.rho);
  return std::vector<Weight>(out.begin(), out.end());
}

// Maximal and minimal elements of the dot orbit under the root-cone partial
// order. Incomparable ties are all reported.
inline std::pair<std::vector<Weight>, std::vector<Weight>> extremal_weights(
    const SuperRootData& d, const WeylGroup& g, const CentralCharacter& chi) {
  std::vector<Weight> ws = weights_of_char(d, g, chi);
  std::vector<Weight> maximal, minimal;
  for (const auto& a : ws) {
    bool has_above = false, has_below = false;
    for (const auto& b : ws) {
      if (a == b) continue;
      if (leq(d, a, b)) has_above = true;
      if (leq(d, b, a)) has_below = true;
    }
    if (!has_above) maximal.push_back(a);
    if (!has_below) minimal.push_back(a);
  }
  return {maximal, minimal};
}

}  // namespace supertypical
