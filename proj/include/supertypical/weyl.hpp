#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "supertypical/flags.hpp"
#include "supertypical/root_data.hpp"

namespace supertypical {

using Matrix = std::vector<std::vector<Rational>>;

// One Weyl group element: an exact rational matrix acting on weight
// coordinates, plus one witness word over the generating reflections
// (product taken left to right; not necessarily reduced). Equality and
// ordering use the matrix alone.
struct WeylElement {
  Matrix matrix;
  std::vector<int> word;

  int rank() const { return static_cast<int>(matrix.size()); }
  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (matrix[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
  }
};

inline bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.matrix == b.matrix;
}
inline bool operator<(const WeylElement& a, const WeylElement& b) {
  return a.matrix < b.matrix;
}

// The Weyl group of g0, fully enumerated. elements are sorted by matrix, so
// every orbit scan and report is deterministic.
struct WeylGroup {
  std::string basis_tag;
  int rank = 0;
  std::vector<WeylElement> generators;
  std::vector<WeylElement> elements;

  std::size_t size() const { return elements.size(); }

  bool contains(const WeylElement& w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
  }
};

namespace detail {

inline Matrix identity_matrix(int r) {
  Matrix m(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const int r = static_cast<int>(a.size());
  Matrix c(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < r; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix reflection_matrix(const SuperRootData& d, const Weight& alpha) {
  const int r = d.rank();
  Rational norm = inner(d, alpha, alpha);
  if (norm.is_zero()) throw DomainError("reflection in isotropic root " + alpha.str());
  Matrix m = identity_matrix(r);
  for (int j = 0; j < r; ++j) {
    Weight ej = basis_vector(r, j, d.basis_tag());
    Rational c = Rational(2) * inner(d, ej, alpha) / norm;
    if (c.is_zero()) continue;
    for (int i = 0; i < r; ++i) m[i][j] -= c * alpha.coords[i];
  }
  return m;
}

}  // namespace detail

// The simple system of Delta0+: the even positive roots that are not sums of
// two even positive roots. These generate W.
inline std::vector<Weight> even_simple_roots(const SuperRootData& d) {
  std::set<Weight> all(d.delta0_plus.begin(), d.delta0_plus.end());
  std::vector<Weight> out;
  for (const auto& a : d.delta0_plus) {
    bool decomposable = false;
    for (const auto& b : d.delta0_plus) {
      if (all.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

inline Weight act(const WeylElement& w, const Weight& mu) {
  if (w.rank() != mu.rank())
    throw DomainError("rank mismatch: element of rank " +
                      std::to_string(w.rank()) + " applied to " + mu.str());
  Weight out = Weight::zero(mu.rank(), mu.basis_tag);
  for (int i = 0; i < mu.rank(); ++i)
    for (int j = 0; j < mu.rank(); ++j)
      if (!w.matrix[i][j].is_zero()) out.coords[i] += w.matrix[i][j] * mu.coords[j];
  return out;
}

// Breadth-first closure of the even simple reflections. Throws once the
// element count would pass `cap`.
inline WeylGroup generate(const SuperRootData& d, std::size_t cap = 1000000) {
  WeylGroup g;
  g.basis_tag = d.basis_tag();
  g.rank = d.rank();

  auto gens = even_simple_roots(d);
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    g.generators.push_back(WeylElement{detail::reflection_matrix(d, gens[i]), {i}});

  std::map<Matrix, std::vector<int>> seen;
  std::deque<WeylElement> queue;
  WeylElement id{detail::identity_matrix(d.rank()), {}};
  seen[id.matrix] = id.word;
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement cur = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      WeylElement next;
      next.matrix = detail::multiply(cur.matrix, s.matrix);
      if (seen.count(next.matrix)) continue;
      next.word = cur.word;
      next.word.push_back(s.word[0]);
      if (seen.size() >= cap)
        throw DomainError("Weyl group of " + d.basis_tag() + " exceeds cap " +
                          std::to_string(cap));
      seen[next.matrix] = next.word;
      queue.push_back(next);
    }
  }
  for (auto& [m, w] : seen) g.elements.push_back(WeylElement{m, w});
  return g;
}

inline void check_group_weight(const WeylGroup& g, const Weight& mu) {
  if (mu.basis_tag != g.basis_tag || mu.rank() != g.rank)
    throw DomainError("weight " + mu.str() + " tagged " + mu.basis_tag +
                      " does not match group over " + g.basis_tag);
}

// w.mu = w(mu + rho) - rho.
inline Weight dot(const SuperRootData& d, const WeylElement& w, const Weight& mu) {
  check_rank(d, mu);
  return act(w, mu + d.rho) - d.rho;
}

// w * gamma = w(gamma - rho1) + rho1. Defined on the gamma cube of B(0,l),
// where it stays inside the cube because rho1 centers it at the origin.
inline Weight star(const SuperRootData& d, const WeylElement& w, const Weight& gamma) {
  require_b0n(d, "star action");
  check_rank(d, gamma);
  if (!in_gamma_cube(gamma))
    throw DomainError(gamma.str() + " is not a 0/1 shift vector");
  Weight out = act(w, gamma - d.rho1) + d.rho1;
  if (!in_gamma_cube(out))
    throw std::logic_error("star action left the gamma cube at " + out.str());
  return out;
}

// {w(mu + shift) : w in G}, minus the shift again when subtract_shift is set.
// Sorted and deduplicated.
inline std::vector<Weight> orbit(const WeylGroup& g, const Weight& mu,
                                 const std::optional<Weight>& shifted_by = std::nullopt,
                                 bool subtract_shift = false) {
  check_group_weight(g, mu);
  Weight base = mu;
  if (shifted_by) base = base + *shifted_by;
  std::set<Weight> out;
  for (const auto& w : g.elements) {
    Weight v = act(w, base);
    if (shifted_by && subtract_shift) v = v - *shifted_by;
    out.insert(v);
  }
  return std::vector<Weight>(out.begin(), out.end());
}

// Subgroup fixing mu under the plain action. Generators are listed as the
// non-identity elements (a valid, if lazy, generating set).
inline WeylGroup stabilizer(const WeylGroup& g, const Weight& mu) {
  check_group_weight(g, mu);
  WeylGroup sub;
  sub.basis_tag = g.basis_tag;
  sub.rank = g.rank;
  for (const auto& w : g.elements)
    if (act(w, mu) == mu) sub.elements.push_back(w);
  for (const auto& w : sub.elements)
    if (!w.is_identity()) sub.generators.push_back(w);
  return sub;
}

inline bool is_subgroup(const WeylGroup& sub, const WeylGroup& super) {
  return std::includes(super.elements.begin(), super.elements.end(),
                       sub.elements.begin(), sub.elements.end());
}

// Lexicographically greatest element of the plain orbit of mu; the orbit key
// used for central-character equality.
inline Weight canonical_rep(const WeylGroup& g, const Weight& mu) {
  check_group_weight(g, mu);
  Weight best = mu;
  for (const auto& w : g.elements) {
    Weight v = act(w, mu);
    if (best < v) best = v;
  }
  return best;
}

}  // namespace supertypical
