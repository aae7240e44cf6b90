#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertypical/weight.hpp"

namespace supertypical {

// g is the full superalgebra, g0 its even part. Verma flags and central
// characters are tagged with the algebra they live over.
enum class Ambient { Full, Even };

inline const char* ambient_name(Ambient a) {
  return a == Ambient::Full ? "g" : "g0";
}

enum class Family { B0n, GLmn, Bmn };

// Which series and which (m, n). B0n is osp(1,2n); Bmn with m >= 1 is
// osp(2m+1,2n); GLmn is gl(m,n). B0n carries the full orbit/flag/mate
// machinery, the other two only classification.
struct FamilySpec {
  Family family = Family::B0n;
  int m = 0;
  int n = 1;

  int rank() const { return family == Family::B0n ? n : m + n; }

  bool operator==(const FamilySpec& o) const {
    return family == o.family && m == o.m && n == o.n;
  }
  bool operator!=(const FamilySpec& o) const { return !(*this == o); }

  std::string str() const {
    switch (family) {
      case Family::B0n:
        return "B(0," + std::to_string(n) + ")";
      case Family::GLmn:
        return "gl(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Family::Bmn:
      default:
        return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  }

  // Accepts "B(m,n)", "gl(m,n)", "osp(a,b)" with a odd and b even; osp maps
  // to B((a-1)/2, b/2). Case-insensitive name, whitespace ignored.
  static FamilySpec parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t open = s.find('(');
    if (open == std::string::npos || s.empty() || s.back() != ')')
      throw ParseError("malformed family '" + std::string(text) + "'");
    std::string name = s.substr(0, open);
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::string inside = s.substr(open + 1, s.size() - open - 2);
    size_t comma = inside.find(',');
    if (comma == std::string::npos)
      throw ParseError("family '" + std::string(text) + "' needs two parameters");
    auto to_int = [&](const std::string& t) {
      if (t.empty()) throw ParseError("malformed family '" + std::string(text) + "'");
      for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("malformed family '" + std::string(text) + "'");
      return std::stoi(t);
    };
    int a = to_int(inside.substr(0, comma));
    int b = to_int(inside.substr(comma + 1));

    FamilySpec fs;
    if (name == "b") {
      fs.m = a;
      fs.n = b;
      fs.family = a == 0 ? Family::B0n : Family::Bmn;
    } else if (name == "gl") {
      if (a < 1 || b < 1)
        throw ParseError("gl(m,n) needs m,n >= 1, got " + std::string(text));
      fs.family = Family::GLmn;
      fs.m = a;
      fs.n = b;
    } else if (name == "osp") {
      if (a % 2 == 0 || a < 1 || b % 2 != 0 || b < 2)
        throw ParseError("osp(a,b) needs a odd, b even positive, got " +
                         std::string(text));
      fs.m = (a - 1) / 2;
      fs.n = b / 2;
      fs.family = fs.m == 0 ? Family::B0n : Family::Bmn;
    } else {
      throw ParseError("unknown family '" + std::string(text) + "'");
    }
    if (fs.n < 1)
      throw ParseError("family '" + std::string(text) + "' needs n >= 1");
    return fs;
  }
};

// Root data of one family: positive roots by parity, the invariant form, the
// distinguished simple system, and the three rho vectors
// (rho = rho0 - rho1, rho_i = half sum of the parity-i positive roots).
//
// Coordinates:
//   B(0,n): basis sigma_1..sigma_n, form = identity.
//   gl(m,n): basis eps_1..eps_m, delta_1..delta_n, form diag(+1^m, -1^n).
//   B(m,n): basis delta_1..delta_n, eps_1..eps_m, form diag(+1^n, -1^m);
//           delta first keeps B(0,n) as the literal n-dimensional sub-basis.
// In every family the simple roots are the consecutive basis differences,
// followed by the last basis vector when the family has one (B(0,n), B(m,n)),
// so expansion over simple roots is a prefix-sum computation.
struct SuperRootData {
  FamilySpec spec;
  std::vector<Weight> delta0_plus;
  std::vector<Weight> delta1_plus;
  std::vector<Weight> delta1_plus_isotropic;
  std::vector<std::vector<Rational>> form;
  std::vector<Weight> simple_roots;
  Weight rho, rho0, rho1;

  int rank() const { return spec.rank(); }
  std::string basis_tag() const { return spec.str(); }
};

namespace detail {

inline Weight basis_vector(int rank, int i, const std::string& tag) {
  Weight w = Weight::zero(rank, tag);
  w.coords[i] = 1;
  return w;
}

}  // namespace detail

inline SuperRootData build_family(const FamilySpec& spec) {
  if (spec.n < 1 || spec.m < 0 ||
      (spec.family == Family::B0n && spec.m != 0) ||
      (spec.family == Family::GLmn && spec.m < 1) ||
      (spec.family == Family::Bmn && spec.m < 1))
    throw DomainError("invalid family parameters " + spec.str());

  SuperRootData d;
  d.spec = spec;
  const int r = spec.rank();
  const std::string tag = spec.str();
  auto e = [&](int i) { return detail::basis_vector(r, i, tag); };

  d.form.assign(r, std::vector<Rational>(r));
  switch (spec.family) {
    case Family::B0n: {
      const int l = spec.n;
      for (int i = 0; i < l; ++i) d.form[i][i] = 1;
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) d.delta0_plus.push_back(e(i) - e(j));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) d.delta0_plus.push_back(e(i) + e(j));
      for (int i = 0; i < l; ++i) d.delta0_plus.push_back(e(i) + e(i));
      for (int i = 0; i < l; ++i) d.delta1_plus.push_back(e(i));
      for (int i = 0; i + 1 < l; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      d.simple_roots.push_back(e(l - 1));
      break;
    }
    case Family::GLmn: {
      const int m = spec.m, n = spec.n;
      for (int i = 0; i < m; ++i) d.form[i][i] = 1;
      for (int i = m; i < r; ++i) d.form[i][i] = -1;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) d.delta0_plus.push_back(e(i) - e(j));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          d.delta0_plus.push_back(e(m + i) - e(m + j));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d.delta1_plus.push_back(e(i) - e(m + j));
      for (int i = 0; i + 1 < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      break;
    }
    case Family::Bmn: {
      const int m = spec.m, n = spec.n;
      for (int i = 0; i < n; ++i) d.form[i][i] = 1;
      for (int i = n; i < r; ++i) d.form[i][i] = -1;
      // delta block first (type C_n side), then eps block (type B_m side)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.delta0_plus.push_back(e(i) - e(j));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.delta0_plus.push_back(e(i) + e(j));
      for (int i = 0; i < n; ++i) d.delta0_plus.push_back(e(i) + e(i));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          d.delta0_plus.push_back(e(n + i) - e(n + j));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          d.delta0_plus.push_back(e(n + i) + e(n + j));
      for (int i = 0; i < m; ++i) d.delta0_plus.push_back(e(n + i));
      for (int i = 0; i < n; ++i) d.delta1_plus.push_back(e(i));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          d.delta1_plus.push_back(e(i) - e(n + j));
          d.delta1_plus.push_back(e(i) + e(n + j));
        }
      for (int i = 0; i + 1 < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      d.simple_roots.push_back(e(r - 1));
      break;
    }
  }

  Weight sum0 = Weight::zero(r, tag), sum1 = Weight::zero(r, tag);
  for (const auto& a : d.delta0_plus) sum0 = sum0 + a;
  for (const auto& b : d.delta1_plus) sum1 = sum1 + b;
  d.rho0 = half(1) * sum0;
  d.rho1 = half(1) * sum1;
  d.rho = d.rho0 - d.rho1;

  for (const auto& b : d.delta1_plus) {
    Rational v;
    for (int i = 0; i < r; ++i) v += b.coords[i] * b.coords[i] * d.form[i][i];
    if (v.is_zero()) d.delta1_plus_isotropic.push_back(b);
  }
  return d;
}

inline void check_rank(const SuperRootData& d, const Weight& w) {
  if (w.basis_tag != d.basis_tag() || w.rank() != d.rank())
    throw DomainError("weight " + w.str() + " tagged " + w.basis_tag +
                      " does not belong to " + d.basis_tag());
}

inline Rational inner(const SuperRootData& d, const Weight& mu, const Weight& nu) {
  check_rank(d, mu);
  check_rank(d, nu);
  Rational v;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (!d.form[i][j].is_zero()) v += mu.coords[i] * d.form[i][j] * nu.coords[j];
  return v;
}

inline std::vector<Weight> isotropic_roots(const SuperRootData& d) {
  return d.delta1_plus_isotropic;
}

// Expansion of nu over the simple roots, or nullopt when nu is outside their
// rational span. The simple systems above are consecutive-difference chains
// (plus a terminal unit vector for B(0,n)/B(m,n)), so coefficients are the
// prefix sums of the coordinates; for gl(m,n) the full sum must vanish.
inline std::optional<std::vector<Rational>> simple_coefficients(
    const SuperRootData& d, const Weight& nu) {
  check_rank(d, nu);
  const int r = d.rank();
  std::vector<Rational> prefix(r);
  Rational acc;
  for (int i = 0; i < r; ++i) {
    acc += nu.coords[i];
    prefix[i] = acc;
  }
  std::vector<Rational> coeffs;
  if (static_cast<int>(d.simple_roots.size()) == r) {
    coeffs = prefix;
  } else {
    if (!prefix[r - 1].is_zero()) return std::nullopt;
    coeffs.assign(prefix.begin(), prefix.end() - 1);
  }
  Weight back = Weight::zero(r, d.basis_tag());
  for (size_t k = 0; k < coeffs.size(); ++k)
    back = back + coeffs[k] * d.simple_roots[k];
  if (back != nu)
    throw std::logic_error("simple-root expansion failed for " + nu.str());
  return coeffs;
}

// nu as non-negative integer simple-root coefficients, or nullopt when it is
// not in the positive root cone over the integers.
inline std::optional<std::vector<long long>> cone_coefficients(
    const SuperRootData& d, const Weight& nu) {
  auto coeffs = simple_coefficients(d, nu);
  if (!coeffs) return std::nullopt;
  std::vector<long long> out;
  out.reserve(coeffs->size());
  for (const auto& c : *coeffs) {
    if (!c.is_nonneg_integer()) return std::nullopt;
    out.push_back(c.as_int());
  }
  return out;
}

// Height of a cone element: sum of its simple-root coefficients.
inline long long cone_height(const std::vector<long long>& coeffs) {
  long long h = 0;
  for (long long c : coeffs) h += c;
  return h;
}

// True iff hi - lo is an N-combination of the simple roots.
inline bool leq(const SuperRootData& d, const Weight& lo, const Weight& hi) {
  check_rank(d, lo);
  check_rank(d, hi);
  return cone_coefficients(d, hi - lo).has_value();
}

}  // namespace supertypical
