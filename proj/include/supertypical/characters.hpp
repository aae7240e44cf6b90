#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "supertypical/flags.hpp"
#include "supertypical/root_data.hpp"

namespace supertypical {

// EvenOnly counts N-combinations of Delta0+; Super additionally lets each odd
// positive root appear at most once (the exterior-algebra factor).
enum class PartitionVariant { EvenOnly, Super };

namespace detail {

// Partition counts on the cone {sum of simple coefficients <= depth}, keyed
// by those coefficient vectors. value[s] = number of decompositions using an
// odd number of odd roots iff s = 1 (EvenOnly leaves slot 1 at zero).
using PartitionTable = std::map<std::vector<long long>, std::array<std::uint64_t, 2>>;

inline std::vector<std::vector<long long>> cone_points(int dims, long long depth) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(dims);
  // lexicographic enumeration of all non-negative vectors with sum <= depth
  auto rec = [&](auto&& self, int i, long long left) -> void {
    if (i == dims) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, depth);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              long long ha = cone_height(a), hb = cone_height(b);
              return ha != hb ? ha < hb : a < b;
            });
  return out;
}

inline PartitionTable partition_table(const SuperRootData& d,
                                      PartitionVariant variant,
                                      long long depth) {
  const int dims = static_cast<int>(d.simple_roots.size());
  auto root_coeffs = [&](const Weight& a) {
    auto c = cone_coefficients(d, a);
    if (!c) throw std::logic_error("positive root outside the simple cone");
    return *c;
  };

  auto points = cone_points(dims, depth);
  PartitionTable t;
  for (const auto& p : points) t[p] = {0, 0};
  t[std::vector<long long>(dims)] = {1, 0};

  auto minus = [&](const std::vector<long long>& p,
                   const std::vector<long long>& a,
                   std::vector<long long>& out) {
    for (int i = 0; i < dims; ++i) {
      out[i] = p[i] - a[i];
      if (out[i] < 0) return false;
    }
    return true;
  };

  std::vector<long long> prev(dims);
  // unbounded part: classic coin-change sweep, ascending height
  for (const auto& alpha : d.delta0_plus) {
    auto ca = root_coeffs(alpha);
    for (const auto& p : points) {
      if (!minus(p, ca, prev)) continue;
      auto& cell = t[p];
      const auto& from = t[prev];
      cell[0] += from[0];
      cell[1] += from[1];
    }
  }
  if (variant == PartitionVariant::Super) {
    // 0/1 part: descending height so each odd root is used at most once;
    // using an odd root flips the parity slot
    for (const auto& beta : d.delta1_plus) {
      auto cb = root_coeffs(beta);
      for (auto it = points.rbegin(); it != points.rend(); ++it) {
        if (!minus(*it, cb, prev)) continue;
        const auto from = t[prev];
        auto& cell = t[*it];
        cell[0] += from[1];
        cell[1] += from[0];
      }
    }
  }
  return t;
}

}  // namespace detail

// Number of ways to write nu as an N-combination of Delta0+ (EvenOnly), each
// odd root additionally allowed at most once (Super). Zero when nu is not in
// the integer cone of the simple roots.
inline std::uint64_t kostant_partition(const SuperRootData& d,
                                       PartitionVariant variant,
                                       const Weight& nu) {
  auto c = cone_coefficients(d, nu);
  if (!c) return 0;
  auto t = detail::partition_table(d, variant, cone_height(*c));
  const auto& cell = t.at(*c);
  return cell[0] + cell[1];
}

namespace detail {

inline PartitionVariant variant_for(Ambient a) {
  return a == Ambient::Even ? PartitionVariant::EvenOnly : PartitionVariant::Super;
}

template <typename Sink>
void accumulate_flag_character(const SuperRootData& d, const GradedVermaFlag& flag,
                               long long depth, Sink&& sink) {
  if (depth < 0) throw DomainError("character depth must be >= 0");
  if (flag.empty()) return;
  for (const auto& [key, mult] : flag.entries) check_rank(d, key.first);
  auto table = partition_table(d, variant_for(flag.ambient), depth);
  for (const auto& [key, mult] : flag.entries) {
    const auto& [mu, parity] = key;
    for (const auto& [coeffs, ways] : table) {
      Weight nu = mu;
      for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
          nu = nu - Rational(coeffs[k]) * d.simple_roots[k];
      for (int s = 0; s < 2; ++s)
        if (ways[s] != 0) sink(nu, (parity + s) % 2, mult * ways[s]);
    }
  }
}

}  // namespace detail

// Sum of the flag entries' Verma characters (g0-Verma for ambient g0, g-Verma
// for ambient g), each entry truncated to weights nu with
// height(entry highest weight - nu) <= depth.
inline WeightFunction truncated_character(const SuperRootData& d,
                                          const GradedVermaFlag& flag,
                                          long long depth) {
  WeightFunction out;
  detail::accumulate_flag_character(
      d, flag, depth, [&](const Weight& nu, int, std::uint64_t m) { out.add(nu, m); });
  return out;
}

// Same, split into the parity-0 and parity-1 layers. For ambient g each odd
// root used in a decomposition flips the layer.
inline std::array<WeightFunction, 2> truncated_character_by_parity(
    const SuperRootData& d, const GradedVermaFlag& flag, long long depth) {
  std::array<WeightFunction, 2> out;
  detail::accumulate_flag_character(
      d, flag, depth,
      [&](const Weight& nu, int p, std::uint64_t m) { out[p].add(nu, m); });
  return out;
}

// Restriction of a character table to the cone below `top`:
// keys nu with top - nu an N-combination of simple roots of height <= depth.
// Entries of a flag sitting strictly below its top weight reach keys outside
// this cone, so table comparisons happen after restricting both sides.
inline WeightFunction restrict_below(const SuperRootData& d,
                                     const WeightFunction& fn, const Weight& top,
                                     long long depth) {
  WeightFunction out;
  for (const auto& [nu, m] : fn.entries()) {
    auto c = cone_coefficients(d, top - nu);
    if (c && cone_height(*c) <= depth) out.add(nu, m);
  }
  return out;
}

}  // namespace supertypical
