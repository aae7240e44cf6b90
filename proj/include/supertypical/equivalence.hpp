#pragma once

#include <utility>

#include "supertypical/mates.hpp"

namespace supertypical {

enum class Mode { StronglyTypical, OspWeakGeneric };

inline const char* mode_name(Mode m) {
  return m == Mode::StronglyTypical ? "StronglyTypical" : "OspWeakGeneric";
}

// A verified (chi_tilde, chi) block pair of B(0,l), the setting in which the
// flag-level functors psi and phi act. In OspWeakGeneric the g0 side is not
// graded; its flags are represented with all parities 0.
struct BlockContext {
  SuperRootData data;
  WeylGroup group;
  CentralCharacter chi_tilde;
  CentralCharacter chi;
  Mode mode = Mode::StronglyTypical;
};

inline BlockContext make_context(const SuperRootData& d, const WeylGroup& g,
                                 const CentralCharacter& chi_tilde,
                                 const CentralCharacter& chi, Mode mode) {
  require_b0n(d, "block context");
  check_char(d, chi_tilde);
  check_char(d, chi);
  if (chi_tilde.ambient != Ambient::Full || chi.ambient != Ambient::Even)
    throw DomainError("block context needs a g character and a g0 character");
  if (mode == Mode::StronglyTypical) {
    auto cands = candidate_mates_strong(d, g, chi_tilde);
    bool found = false;
    for (const auto& c : cands) found = found || c == chi;
    if (!found)
      throw DomainError("chi with rep " + chi.rep.str() +
                        " is not a candidate mate of rep " + chi_tilde.rep.str());
  } else {
    Weight lambda = choose_lambda(d, g, chi_tilde);
    if (!verify_mate(d, g, lambda, chi).is_mate)
      throw DomainError("chi with rep " + chi.rep.str() +
                        " is not the mate of rep " + chi_tilde.rep.str());
  }
  return BlockContext{d, g, chi_tilde, chi, mode};
}

namespace detail {

inline void check_weak_mode_parities(const BlockContext& ctx,
                                     const GradedVermaFlag& flag) {
  if (ctx.mode != Mode::OspWeakGeneric) return;
  for (const auto& [key, mult] : flag.entries)
    if (key.second != 0)
      throw DomainError(
          "g0 flags of a weak-generic block are ungraded; represent them "
          "with parity 0");
}

}  // namespace detail

// N~ -> (Res N~)_chi: expand every entry to its restriction flag, keep the
// chi block. In weak-generic mode only the parity-0 layer survives (the
// block's even part is the Verma flag, the odd part is its mate image).
inline GradedVermaFlag psi(const BlockContext& ctx, const GradedVermaFlag& flag) {
  if (flag.ambient != Ambient::Full)
    throw DomainError("psi expects a flag over g");
  GradedVermaFlag out;
  out.ambient = Ambient::Even;
  for (const auto& [key, mult] : flag.entries) {
    const auto& [lp, p] = key;
    if (g_char_of(ctx.data, ctx.group, lp) != ctx.chi_tilde)
      throw DomainError("flag entry " + lp.str() + " lies outside the chi~ block");
    for (const auto& gamma : gamma_sets(ctx.data.spec.n).gamma) {
      Weight w = lp - gamma;
      if (g0_char_of(ctx.data, ctx.group, w) != ctx.chi) continue;
      int parity = (p + parity_of(gamma)) % 2;
      if (ctx.mode == Mode::OspWeakGeneric && parity != 0) continue;
      out.add(w, parity, mult);
    }
  }
  return out;
}

// N -> (Ind N)_chi~: expand every entry to its induction flag with the
// entry's parity as base, keep the chi~ block.
inline GradedVermaFlag phi(const BlockContext& ctx, const GradedVermaFlag& flag) {
  if (flag.ambient != Ambient::Even)
    throw DomainError("phi expects a flag over g0");
  detail::check_weak_mode_parities(ctx, flag);
  GradedVermaFlag out;
  out.ambient = Ambient::Full;
  for (const auto& [key, mult] : flag.entries) {
    const auto& [nu, q] = key;
    if (g0_char_of(ctx.data, ctx.group, nu) != ctx.chi)
      throw DomainError("flag entry " + nu.str() + " lies outside the chi block");
    for (const auto& gamma : gamma_sets(ctx.data.spec.n).gamma) {
      Weight w = nu + gamma;
      if (g_char_of(ctx.data, ctx.group, w) != ctx.chi_tilde) continue;
      out.add(w, (q + parity_of(gamma)) % 2, mult);
    }
  }
  return out;
}

// Parity flip.
inline GradedVermaFlag pi(const GradedVermaFlag& flag) {
  GradedVermaFlag out;
  out.ambient = flag.ambient;
  for (const auto& [key, mult] : flag.entries)
    out.add(key.first, 1 - key.second, mult);
  return out;
}

// The mate involution on the ungraded g0 side: induce up to g, restrict the
// chi block back down, keep the parity-1 layer, normalize its parity to 0.
// Swaps the two Verma classes of the chi block.
inline GradedVermaFlag pi_prime(const BlockContext& ctx, const GradedVermaFlag& flag) {
  if (ctx.mode != Mode::OspWeakGeneric)
    throw DomainError("pi_prime is defined in weak-generic mode only");
  if (flag.ambient != Ambient::Even)
    throw DomainError("pi_prime expects a flag over g0");
  detail::check_weak_mode_parities(ctx, flag);
  GradedVermaFlag lifted = phi(ctx, flag);
  GradedVermaFlag out;
  out.ambient = Ambient::Even;
  for (const auto& [key, mult] : lifted.entries) {
    const auto& [mu, p] = key;
    for (const auto& gamma : gamma_sets(ctx.data.spec.n).gamma) {
      Weight w = mu - gamma;
      if (g0_char_of(ctx.data, ctx.group, w) != ctx.chi) continue;
      if ((p + parity_of(gamma)) % 2 != 1) continue;
      out.add(w, 0, mult);
    }
  }
  return out;
}

enum class Direction { PsiPhi, PhiPsi };

struct RoundTripReport {
  GradedVermaFlag input;
  GradedVermaFlag forward;
  GradedVermaFlag back;
  bool equal = false;
};

// PsiPhi: down then up again, for flags over g. PhiPsi: up then down, for
// flags over g0. equal reports exact graded multiset equality with the input.
inline RoundTripReport round_trip(const BlockContext& ctx,
                                  const GradedVermaFlag& flag, Direction dir) {
  RoundTripReport r;
  r.input = flag;
  if (dir == Direction::PsiPhi) {
    r.forward = psi(ctx, flag);
    r.back = phi(ctx, r.forward);
  } else {
    r.forward = phi(ctx, flag);
    r.back = psi(ctx, r.forward);
  }
  r.equal = r.back == flag;
  return r;
}

}  // namespace supertypical
