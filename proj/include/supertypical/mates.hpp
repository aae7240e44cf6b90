#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "supertypical/blocks.hpp"
#include "supertypical/central_characters.hpp"
#include "supertypical/flags.hpp"
#include "supertypical/weyl.hpp"

namespace supertypical {

// Outcome of testing a g0 character chi as the mate of the block of
// M~(lambda): which gamma shifts land in chi's orbit, whether they are
// exactly {0, sigma_l} with parities {0, 1}, and whether the two-factor
// Verma shape persists across the whole dot orbit of lambda.
struct MateReport {
  Weight lambda;
  CentralCharacter chi;
  std::vector<Weight> matched_gammas;
  bool is_mate = false;
  bool orbit_verified = false;
  std::optional<std::pair<Weight, Weight>> graded_split;
};

struct PerWLine {
  WeylElement w;
  std::size_t xw_size = 0;
  bool disjoint = false;
};

struct PerfectMateReport {
  Weight lambda;
  CentralCharacter chi;
  std::vector<PerWLine> per_w;
  bool incl_rho0 = false;
  bool incl_rho0_minus_sigma_l = false;
  bool is_perfect = false;
};

namespace detail {

inline Weight sigma_l(const SuperRootData& d) {
  return basis_vector(d.rank(), d.rank() - 1, d.basis_tag());
}

}  // namespace detail

// The distinguished weight of a generic weakly atypical g character:
// lambda with (lambda+rho) = (k_1, ..., k_{l-1}, 0), all k_i > 0. That is
// exactly the canonical orbit representative, provided it has one vanishing
// coordinate (necessarily the last).
inline Weight choose_lambda(const SuperRootData& d, const WeylGroup& g,
                            const CentralCharacter& chi_tilde) {
  require_b0n(d, "choose_lambda");
  check_char(d, chi_tilde);
  if (chi_tilde.ambient != Ambient::Full)
    throw DomainError("choose_lambda expects a g central character");
  Weight rep = canonical_rep(g, chi_tilde.rep);
  if (rep != chi_tilde.rep)
    throw DomainError("central character rep " + chi_tilde.rep.str() +
                      " is not canonical");
  Classification cls = classify(d, rep - d.rho);
  if (!cls.generic_weakly_atypical || cls.kind != Kind::TypicalNotStrong)
    throw DomainError("character with rep " + rep.str() +
                      " is not generic weakly atypical");
  const int l = d.rank();
  for (int i = 0; i + 1 < l; ++i)
    if (!(rep.coords[i] > Rational(0)))
      throw DomainError("representative " + rep.str() +
                        " does not have k_1..k_{l-1} > k_l = 0");
  if (!rep.coords[l - 1].is_zero())
    throw std::logic_error("generic weakly atypical rep without zero last slot");
  return rep - d.rho;
}

// (lambda, chi) with chi the g0 character of M(lambda); the candidate mate of
// the block of chi_tilde.
inline std::pair<Weight, CentralCharacter> construct_mate(
    const SuperRootData& d, const WeylGroup& g, const CentralCharacter& chi_tilde) {
  Weight lambda = choose_lambda(d, g, chi_tilde);
  return {lambda, g0_char_of(d, g, lambda)};
}

// Exhaustively find {gamma : g0_char_of(lambda - gamma) = chi}. is_mate holds
// exactly when that set is {0, sigma_l}; those two entries carry parities 0
// and 1, giving the even/odd graded split. orbit_verified re-checks that the
// chi block stays a two-Verma flag with both parities at every dot-orbit
// translate of lambda.
inline MateReport verify_mate(const SuperRootData& d, const WeylGroup& g,
                              const Weight& lambda, const CentralCharacter& chi) {
  require_b0n(d, "verify_mate");
  check_rank(d, lambda);
  check_char(d, chi);
  if (chi.ambient != Ambient::Even)
    throw DomainError("verify_mate expects a g0 central character");

  MateReport r;
  r.lambda = lambda;
  r.chi = chi;
  const auto gs = gamma_sets(d.spec.n);
  for (const auto& gamma : gs.gamma)
    if (g0_char_of(d, g, lambda - gamma) == chi) r.matched_gammas.push_back(gamma);

  const Weight zero = Weight::zero(d.rank(), d.basis_tag());
  const Weight sl = detail::sigma_l(d);
  r.is_mate = r.matched_gammas.size() == 2 &&
              ((r.matched_gammas[0] == zero && r.matched_gammas[1] == sl) ||
               (r.matched_gammas[0] == sl && r.matched_gammas[1] == zero));
  if (r.is_mate) r.graded_split = std::make_pair(lambda, lambda - sl);

  r.orbit_verified = true;
  for (const auto& lp : orbit(g, lambda, d.rho, true)) {
    int seen[2] = {0, 0};
    for (const auto& gamma : gs.gamma)
      if (g0_char_of(d, g, lp - gamma) == chi) ++seen[parity_of(gamma)];
    if (seen[0] != 1 || seen[1] != 1) {
      r.orbit_verified = false;
      break;
    }
  }
  return r;
}

// Obstruction check run on every group element: the pair
// {w.lambda - w*0, w.lambda - w*sigma_l} must avoid the set X_w built from
// all y with y.lambda strictly below w.lambda. Also checks the two
// stabilizer inclusions. Everything exhaustive, nothing assumed.
inline PerfectMateReport verify_perfect(const SuperRootData& d, const WeylGroup& g,
                                        const Weight& lambda,
                                        const CentralCharacter& chi) {
  MateReport mate = verify_mate(d, g, lambda, chi);
  if (!mate.is_mate)
    throw DomainError("verify_perfect requires a verified mate for " +
                      lambda.str());

  PerfectMateReport r;
  r.lambda = lambda;
  r.chi = chi;

  const Weight zero = Weight::zero(d.rank(), d.basis_tag());
  const Weight sl = detail::sigma_l(d);
  struct Row {
    Weight dot_lambda;
    Weight a, b;  // w.lambda - w*0, w.lambda - w*sigma_l
  };
  std::vector<Row> rows;
  rows.reserve(g.size());
  for (const auto& w : g.elements) {
    Weight dl = dot(d, w, lambda);
    rows.push_back(Row{dl, dl - star(d, w, zero), dl - star(d, w, sl)});
  }

  bool all_disjoint = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::set<Weight> xw;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].dot_lambda != rows[i].dot_lambda &&
          leq(d, rows[j].dot_lambda, rows[i].dot_lambda)) {
        xw.insert(rows[j].a);
        xw.insert(rows[j].b);
      }
    }
    bool disjoint = !xw.count(rows[i].a) && !xw.count(rows[i].b);
    all_disjoint = all_disjoint && disjoint;
    r.per_w.push_back(PerWLine{g.elements[i], xw.size(), disjoint});
  }

  WeylGroup stab_rho = stabilizer(g, lambda + d.rho);
  r.incl_rho0 = is_subgroup(stabilizer(g, lambda + d.rho0), stab_rho);
  r.incl_rho0_minus_sigma_l =
      is_subgroup(stabilizer(g, lambda + d.rho0 - sl), stab_rho);
  r.is_perfect = all_disjoint && r.incl_rho0 && r.incl_rho0_minus_sigma_l;
  return r;
}

// For a strongly typical g character: the g0 characters whose block in the
// restriction flag has multiplicity 1 at every weight of the dot orbit.
// These are the flag-level mate candidates; the dominant orbit weight is the
// natural source of representatives.
inline std::vector<CentralCharacter> candidate_mates_strong(
    const SuperRootData& d, const WeylGroup& g, const CentralCharacter& chi_tilde) {
  require_b0n(d, "candidate_mates_strong");
  check_char(d, chi_tilde);
  if (chi_tilde.ambient != Ambient::Full)
    throw DomainError("candidate_mates_strong expects a g central character");
  if (classify(d, chi_tilde.rep - d.rho).kind != Kind::StronglyTypical)
    throw DomainError("character with rep " + chi_tilde.rep.str() +
                      " is not strongly typical");

  std::optional<std::set<CentralCharacter>> candidates;
  for (const auto& lp : orbit(g, chi_tilde.rep - d.rho, d.rho, true)) {
    std::set<CentralCharacter> here;
    for (const auto& [chi, part] : block_decompose(d, g, restriction_flag(d, lp)))
      if (part.total_multiplicity() == 1) here.insert(chi);
    if (!candidates) {
      candidates = std::move(here);
      continue;
    }
    std::set<CentralCharacter> keep;
    for (const auto& chi : *candidates)
      if (here.count(chi)) keep.insert(chi);
    *candidates = std::move(keep);
  }
  return candidates ? std::vector<CentralCharacter>(candidates->begin(),
                                                    candidates->end())
                    : std::vector<CentralCharacter>{};
}

}  // namespace supertypical
