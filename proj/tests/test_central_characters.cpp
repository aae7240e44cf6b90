#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "supertypical/serialize.hpp"

using namespace supertypical;
using oracle::rat;

namespace {

const SuperRootData& b02() {
  static auto d = build_family(FamilySpec::parse("B(0,2)"));
  return d;
}

const WeylGroup& w02() {
  static auto g = generate(b02());
  return g;
}

}  // namespace

TEST_CASE("odd-root product evaluation") {
  const auto& d = b02();
  REQUIRE(eval_T(d, oracle::weight_of(d, {1, 1})) == rat(15, 4));
  REQUIRE(eval_T(d, -d.rho) == rat(0));
  REQUIRE(eval_T(d, Weight({rat(1, 2), rat(-1, 2)}, d.basis_tag())) == rat(0));
  REQUIRE_THROWS_AS(eval_T(d, Weight({rat(1)}, "B(0,1)")), DomainError);

  for (int trial = 0; trial < 10; ++trial)
    REQUIRE(eval_Q(d, oracle::rand_weight(d)) == rat(1));
}

TEST_CASE("isotropic product evaluation for gl(1,1)") {
  auto gl = build_family(FamilySpec::parse("gl(1,1)"));
  auto at = [&](std::initializer_list<long long> shifted) {
    return oracle::weight_of(gl, shifted) - gl.rho;
  };
  REQUIRE(eval_Q(gl, at({1, 0})) == rat(1));
  REQUIRE(eval_Q(gl, at({1, -1})) == rat(0));
  // (eps1-delta1, eps1+delta1) = 2 under the diag(+1,-1) form: the pairing
  // vanishes on multiples of eps1-delta1 itself, not on eps1+delta1
  REQUIRE(eval_Q(gl, at({1, 1})) == rat(2));
  REQUIRE(eval_T(gl, at({1, 1})) == eval_Q(gl, at({1, 1})));
}

TEST_CASE("typicality classification") {
  const auto& d = b02();

  auto strong = classify(d, oracle::weight_of(d, {1, 1}));
  REQUIRE(strong.kind == Kind::StronglyTypical);
  REQUIRE(strong.vanishing_odd_roots.empty());
  REQUIRE(!strong.generic_weakly_atypical);
  REQUIRE(strong.T_value == rat(15, 4));
  REQUIRE(strong.Q_value == rat(1));

  auto generic = classify(d, Weight({rat(1, 2), rat(-1, 2)}, d.basis_tag()));
  REQUIRE(generic.kind == Kind::TypicalNotStrong);
  REQUIRE(generic.vanishing_odd_roots ==
          std::vector<Weight>{oracle::weight_of(d, {0, 1})});
  REQUIRE(generic.generic_weakly_atypical);

  auto degenerate = classify(d, -d.rho);
  REQUIRE(degenerate.kind == Kind::TypicalNotStrong);
  REQUIRE(degenerate.vanishing_odd_roots.size() == 2);
  REQUIRE(!degenerate.generic_weakly_atypical);

  for (int trial = 0; trial < 40; ++trial) {
    Weight lambda = oracle::rand_weight(d);
    auto c = classify(d, lambda);
    REQUIRE(c.T_value == eval_T(d, lambda));
    REQUIRE((c.kind == Kind::StronglyTypical) == !eval_T(d, lambda).is_zero());
    REQUIRE(c.kind != Kind::Atypical);
  }
}

TEST_CASE("classification with isotropic roots present") {
  auto gl = build_family(FamilySpec::parse("gl(1,1)"));
  auto gl_at = [&](std::initializer_list<long long> s) {
    return oracle::weight_of(gl, s) - gl.rho;
  };
  REQUIRE(classify(gl, gl_at({1, 0})).kind == Kind::StronglyTypical);
  auto gl_atypical = classify(gl, gl_at({1, -1}));
  REQUIRE(gl_atypical.kind == Kind::Atypical);
  REQUIRE(gl_atypical.generic_weakly_atypical);
  REQUIRE(gl_atypical.Q_value == rat(0));

  auto b11 = build_family(FamilySpec::parse("B(1,1)"));
  auto b11_at = [&](std::initializer_list<long long> s) {
    return oracle::weight_of(b11, s) - b11.rho;
  };
  // delta1 vanishes on multiples of eps1, the isotropic pair does not
  auto tns = classify(b11, b11_at({0, 3}));
  REQUIRE(tns.kind == Kind::TypicalNotStrong);
  REQUIRE(tns.vanishing_odd_roots ==
          std::vector<Weight>{oracle::weight_of(b11, {1, 0})});
  REQUIRE(tns.generic_weakly_atypical);
  REQUIRE(!tns.Q_value.is_zero());
  REQUIRE(tns.T_value.is_zero());

  auto atypical = classify(b11, b11_at({1, 1}));
  REQUIRE(atypical.kind == Kind::Atypical);
  REQUIRE(atypical.vanishing_odd_roots ==
          std::vector<Weight>{oracle::weight_of(b11, {1, 1})});
  REQUIRE(atypical.Q_value.is_zero());

  REQUIRE(classify(b11, b11_at({5, 2})).kind == Kind::StronglyTypical);
}

TEST_CASE("classification serializes with the documented keys") {
  const auto& d = b02();
  Json j = to_json(classify(d, Weight({rat(1, 2), rat(-1, 2)}, d.basis_tag())));
  REQUIRE(j["kind"] == "TypicalNotStrong");
  REQUIRE(j["vanishing_roots"].size() == 1);
  REQUIRE(j["generic"] == true);
  REQUIRE(j["T_value"] == "0");
  REQUIRE(j["Q_value"] == "1");
}

TEST_CASE("central characters are orbit keys") {
  const auto& d = b02();
  const auto& g = w02();

  Weight lambda = oracle::weight_of(d, {1, 1});
  auto chi_tilde = g_char_of(d, g, lambda);
  REQUIRE(chi_tilde.ambient == Ambient::Full);
  REQUIRE(chi_tilde.shift == d.rho);
  REQUIRE(chi_tilde.rep == Weight({rat(5, 2), rat(3, 2)}, d.basis_tag()));
  for (const auto& w : g.elements)
    REQUIRE(g_char_of(d, g, dot(d, w, lambda)) == chi_tilde);

  Weight mu({rat(1, 2), rat(-1, 2)}, d.basis_tag());
  auto chi = g0_char_of(d, g, mu);
  REQUIRE(chi.ambient == Ambient::Even);
  REQUIRE(chi.rep == Weight({rat(5, 2), rat(1, 2)}, d.basis_tag()));
  REQUIRE(chi == g0_char_of(d, g, mu - oracle::weight_of(d, {0, 1})));
  REQUIRE(chi != g_char_of(d, g, mu));

  check_char(d, chi);
  REQUIRE_THROWS_AS(check_char(d, CentralCharacter{Ambient::Full, d.rho0, mu}),
                    DomainError);

  for (int trial = 0; trial < 10; ++trial) {
    Weight x = oracle::rand_weight(d);
    for (const auto& w : g.elements) {
      REQUIRE(eval_T(d, dot(d, w, x)).abs() == eval_T(d, x).abs());
      REQUIRE(g0_char_of(d, g, act(w, x + d.rho0) - d.rho0) == g0_char_of(d, g, x));
    }
  }
}

TEST_CASE("weight fibers of typical characters") {
  const auto& d = b02();
  const auto& g = w02();

  auto ws = weights_of_char(d, g, g_char_of(d, g, oracle::weight_of(d, {1, 1})));
  REQUIRE(ws.size() == 8);
  REQUIRE(std::count(ws.begin(), ws.end(), oracle::weight_of(d, {1, 1})) == 1);

  auto fixed = weights_of_char(d, g, g_char_of(d, g, -d.rho));
  REQUIRE(fixed == std::vector<Weight>{-d.rho});

  Weight mu({rat(1, 2), rat(-1, 2)}, d.basis_tag());
  REQUIRE(weights_of_char(d, g, g_char_of(d, g, mu)).size() == 4);

  REQUIRE_THROWS_AS(weights_of_char(d, g, g0_char_of(d, g, mu)), DomainError);

  auto gl = build_family(FamilySpec::parse("gl(1,1)"));
  auto glg = generate(gl);
  Weight atypical = oracle::weight_of(gl, {1, -1}) - gl.rho;
  REQUIRE_THROWS_AS(weights_of_char(gl, glg, g_char_of(gl, glg, atypical)),
                    DomainError);
}

TEST_CASE("extremal orbit weights") {
  const auto& d = b02();
  const auto& g = w02();

  auto [max1, min1] = extremal_weights(d, g, g_char_of(d, g, oracle::weight_of(d, {1, 1})));
  REQUIRE(max1 == std::vector<Weight>{oracle::weight_of(d, {1, 1})});
  REQUIRE(min1 == std::vector<Weight>{oracle::weight_of(d, {-4, -2})});

  auto [max2, min2] = extremal_weights(d, g, g_char_of(d, g, -d.rho));
  REQUIRE(max2 == std::vector<Weight>{-d.rho});
  REQUIRE(min2 == std::vector<Weight>{-d.rho});

  Weight mu({rat(1, 2), rat(-1, 2)}, d.basis_tag());
  auto [max3, min3] = extremal_weights(d, g, g_char_of(d, g, mu));
  REQUIRE(max3 == std::vector<Weight>{mu});
  REQUIRE(min3 == std::vector<Weight>{Weight({rat(-7, 2), rat(-1, 2)}, d.basis_tag())});

  for (int trial = 0; trial < 5; ++trial) {
    auto chi = g_char_of(d, g, oracle::rand_weight(d));
    auto [mx, mn] = extremal_weights(d, g, chi);
    REQUIRE(!mx.empty());
    REQUIRE(!mn.empty());
  }
}

TEST_CASE("restriction character multiset is Weyl invariant") {
  for (int l = 2; l <= 3; ++l) {
    auto d = build_family(FamilySpec{Family::B0n, 0, l});
    auto g = generate(d);
    auto gs = gamma_sets(l);
    for (int trial = 0; trial < 10; ++trial) {
      Weight lambda = oracle::rand_weight(d);
      std::multiset<CentralCharacter> base;
      for (const auto& gamma : gs.gamma)
        base.insert(g0_char_of(d, g, lambda - gamma));
      for (const auto& w : g.elements) {
        std::multiset<CentralCharacter> moved;
        Weight wl = dot(d, w, lambda);
        for (const auto& gamma : gs.gamma)
          moved.insert(g0_char_of(d, g, wl - gamma));
        REQUIRE(moved == base);
      }
    }
  }
}
