#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "supertypical/supertypical.hpp"

// Independent oracles for the test suite: brute-force enumerations that
// recompute what the library computes by smarter means. Everything here
// prefers obviousness over speed.
namespace oracle {

using namespace supertypical;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed0123456789ull);
  return r;
}

inline Rational rand_rational(long long lo = -24, long long hi = 24) {
  std::uniform_int_distribution<long long> num(lo, hi);
  std::uniform_int_distribution<long long> den(1, 4);
  long long n = num(rng());
  long long d = den(rng());
  return Rational(n, d);
}

inline Weight rand_weight(const SuperRootData& d) {
  Weight w = Weight::zero(d.rank(), d.basis_tag());
  for (auto& c : w.coords) c = rand_rational();
  return w;
}

// Exhaustive recursion over the root list: number of ways to reach nu using
// even roots freely and (in the Super variant) each odd root at most once.
inline std::uint64_t brute_force_partition(const SuperRootData& d,
                                           PartitionVariant variant,
                                           const Weight& nu) {
  auto target = cone_coefficients(d, nu);
  if (!target) return 0;

  std::vector<std::vector<long long>> roots;
  std::vector<bool> once;
  for (const auto& a : d.delta0_plus) {
    roots.push_back(*cone_coefficients(d, a));
    once.push_back(false);
  }
  if (variant == PartitionVariant::Super) {
    for (const auto& b : d.delta1_plus) {
      roots.push_back(*cone_coefficients(d, b));
      once.push_back(true);
    }
  }

  std::uint64_t count = 0;
  std::vector<long long> rem = *target;
  auto fits = [&](const std::vector<long long>& r) {
    for (size_t i = 0; i < rem.size(); ++i)
      if (r[i] > rem[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == roots.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; }))
        count += 1;
      return;
    }
    // zero copies of root i
    self(self, i + 1);
    long long copies = 0;
    while (fits(roots[i])) {
      for (size_t k = 0; k < rem.size(); ++k) rem[k] -= roots[i][k];
      ++copies;
      self(self, i + 1);
      if (once[i]) break;
    }
    for (size_t k = 0; k < rem.size(); ++k) rem[k] += roots[i][k] * copies;
  };
  rec(rec, 0);
  return count;
}

// All non-negative integer vectors of the given length with sum <= depth.
inline std::vector<std::vector<long long>> cone_points_naive(int dims,
                                                             long long depth) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(dims);
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
  return out;
}

inline Weight from_cone(const SuperRootData& d, const std::vector<long long>& c) {
  Weight w = Weight::zero(d.rank(), d.basis_tag());
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) w = w + Rational(c[k]) * d.simple_roots[k];
  return w;
}

// Truncated Verma character of one highest weight, every count recomputed by
// brute_force_partition.
inline WeightFunction verma_table_brute(const SuperRootData& d, const Weight& mu,
                                        PartitionVariant variant, long long depth) {
  WeightFunction out;
  for (const auto& c : cone_points_naive(static_cast<int>(d.simple_roots.size()),
                                         depth)) {
    Weight drop = from_cone(d, c);
    std::uint64_t n = brute_force_partition(d, variant, drop);
    if (n) out.add(mu - drop, n);
  }
  return out;
}

// Truncated character of Ind M(mu) from the product formula: the even Verma
// character of mu convolved with prod over odd positive beta of
// (1 + e^{-beta})(1 + e^{+beta}), expanded over all sign subsets. No gamma
// sets involved. Result restricted below top = mu + sum of odd roots.
inline WeightFunction induction_char_oracle(const SuperRootData& d, const Weight& mu,
                                            long long depth) {
  WeightFunction even = verma_table_brute(d, mu, PartitionVariant::EvenOnly, depth);
  const auto& odd = d.delta1_plus;
  const size_t n = odd.size();
  Weight top = mu;
  for (const auto& b : odd) top = top + b;

  WeightFunction out;
  for (std::uint64_t minus = 0; minus < (1ull << n); ++minus)
    for (std::uint64_t plus = 0; plus < (1ull << n); ++plus) {
      Weight shift = Weight::zero(d.rank(), d.basis_tag());
      for (size_t i = 0; i < n; ++i) {
        if (minus >> i & 1ull) shift = shift - odd[i];
        if (plus >> i & 1ull) shift = shift + odd[i];
      }
      for (const auto& [w, m] : even.entries()) {
        Weight nu = w + shift;
        auto c = cone_coefficients(d, top - nu);
        if (c && cone_height(*c) <= depth) out.add(nu, m);
      }
    }
  return out;
}

// All images of v under signed permutations, generated directly from
// permutation/sign enumeration rather than from the Weyl group closure.
inline std::set<std::vector<Rational>> signed_perm_orbit(
    const std::vector<Rational>& v) {
  const int l = static_cast<int>(v.size());
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  std::set<std::vector<Rational>> out;
  do {
    for (std::uint32_t signs = 0; signs < (1u << l); ++signs) {
      std::vector<Rational> img(l);
      for (int i = 0; i < l; ++i) {
        img[i] = v[perm[i]];
        if (signs >> i & 1u) img[i] = -img[i];
      }
      out.insert(img);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Weight weight_of(const SuperRootData& d, const std::vector<Rational>& coords) {
  return Weight(coords, d.basis_tag());
}

inline Weight weight_of(const SuperRootData& d, std::initializer_list<long long> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long long v : coords) c.emplace_back(v);
  return Weight(std::move(c), d.basis_tag());
}

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace oracle
