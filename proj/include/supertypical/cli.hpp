#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "supertypical/serialize.hpp"
#include "supertypical/supertypical.hpp"

namespace supertypical {
namespace cli {

struct ConfigValues {
  std::string family;
  std::optional<long long> depth;
  std::optional<std::uint64_t> cap;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\'')))
    return s.substr(1, s.size() - 2);
  return s;
}

inline long long config_int(const std::string& key, const std::string& value) {
  Rational r;
  try {
    r = Rational::parse(value);
  } catch (const ParseError&) {
    throw ParseError("config key " + key + ": expected an integer, got \"" + value + "\"");
  }
  if (!r.is_integer())
    throw ParseError("config key " + key + ": expected an integer, got \"" + value + "\"");
  return r.as_int();
}

}  // namespace detail

// key=value lines; # starts a comment; unknown keys are ignored so the file
// can hold settings for other tools.
inline ConfigValues load_config(const std::string& path, bool required) {
  std::ifstream in(path);
  ConfigValues cv;
  if (!in) {
    if (required) throw ParseError("cannot open config file " + path);
    return cv;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::unquote(detail::trim(line.substr(eq + 1)));
    if (key == "family") {
      cv.family = value;
    } else if (key == "depth") {
      cv.depth = detail::config_int(key, value);
    } else if (key == "cap") {
      long long c = detail::config_int(key, value);
      if (c < 0) throw ParseError("config key cap: expected a nonnegative integer");
      cv.cap = static_cast<std::uint64_t>(c);
    }
  }
  return cv;
}

namespace detail {

inline Weight parse_weight(const SuperRootData& d, const std::string& text) {
  std::vector<Rational> coords;
  std::string piece;
  size_t start = 0;
  if (trim(text).empty()) throw ParseError("empty weight");
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    piece = comma == std::string::npos ? text.substr(start)
                                       : text.substr(start, comma - start);
    coords.push_back(Rational::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  Weight w(std::move(coords), d.basis_tag());
  check_rank(d, w);
  return w;
}

struct WeightArgs {
  std::string weight;
  std::string lambda_plus_rho;
};

inline void add_weight_options(CLI::App* sub, WeightArgs& wa) {
  auto* w = sub->add_option("--weight", wa.weight, "weight, comma-separated rationals");
  auto* l = sub->add_option("--lambda-plus-rho", wa.lambda_plus_rho,
                            "same weight given as lambda+rho");
  w->excludes(l);
  l->excludes(w);
}

inline Weight resolve_lambda(const SuperRootData& d, const WeightArgs& wa) {
  if (!wa.weight.empty()) return parse_weight(d, wa.weight);
  if (!wa.lambda_plus_rho.empty()) return parse_weight(d, wa.lambda_plus_rho) - d.rho;
  throw ParseError("need --weight or --lambda-plus-rho");
}

inline std::string join_weights(const std::vector<Weight>& ws) {
  if (ws.empty()) return "(none)";
  std::string s;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) s += " ";
    s += ws[i].str();
  }
  return s;
}

inline const char* yesno(bool b) { return b ? "true" : "false"; }

inline std::string coordinate_names(const SuperRootData& d) {
  switch (d.spec.family) {
    case Family::B0n:
      return "sigma_1..sigma_" + std::to_string(d.spec.n);
    case Family::GLmn:
      return "eps_1..eps_" + std::to_string(d.spec.m) + ", delta_1..delta_" +
             std::to_string(d.spec.n);
    case Family::Bmn:
      return "delta_1..delta_" + std::to_string(d.spec.n) + ", eps_1..eps_" +
             std::to_string(d.spec.m);
  }
  return "";
}

inline std::string word_str(const WeylElement& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w.word[i]);
  }
  return s + "]";
}

}  // namespace detail

// Compiled-in checks over the frozen example values. Each entry is
// (description, pass).
inline std::vector<std::pair<std::string, bool>> selftest_checks() {
  std::vector<std::pair<std::string, bool>> out;
  auto check = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out.emplace_back(name, ok);
  };

  check("rho closed forms for B(0,l), l = 1..4", [] {
    for (int l = 1; l <= 4; ++l) {
      auto d = build_family(FamilySpec{Family::B0n, 0, l});
      for (int i = 0; i < l; ++i) {
        if (d.rho.coords[i] != Rational(2 * (l - i) - 1, 2)) return false;
        if (d.rho1.coords[i] != Rational(1, 2)) return false;
        if (d.rho0.coords[i] != Rational(l - i)) return false;
      }
      if (d.rho + d.rho1 != d.rho0) return false;
    }
    return true;
  });

  check("Weyl group orders 2^l l! for l = 1..3", [] {
    std::uint64_t expect = 1;
    for (int l = 1; l <= 3; ++l) {
      expect *= 2 * static_cast<std::uint64_t>(l);
      auto d = build_family(FamilySpec{Family::B0n, 0, l});
      if (generate(d).size() != expect) return false;
    }
    return true;
  });

  check("even decomposition count of 2*sigma_1 in B(0,2) is 3", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    Weight nu({Rational(2), Rational(0)}, d.basis_tag());
    return kostant_partition(d, PartitionVariant::EvenOnly, nu) == 3;
  });

  check("classification at (1,1) in B(0,2): strongly typical, T = 15/4", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    Weight lambda({Rational(1), Rational(1)}, d.basis_tag());
    auto c = classify(d, lambda);
    return c.kind == Kind::StronglyTypical && c.T_value == Rational(15, 4) &&
           c.vanishing_odd_roots.empty() && !c.generic_weakly_atypical;
  });

  check("classification at -rho in B(0,2): typical not strong, not generic", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto c = classify(d, Weight::zero(2, d.basis_tag()) - d.rho);
    return c.kind == Kind::TypicalNotStrong && c.vanishing_odd_roots.size() == 2 &&
           !c.generic_weakly_atypical && c.T_value.is_zero();
  });

  check("atypicality witnesses in gl(1,1) and B(1,1)", [] {
    auto dgl = build_family(FamilySpec::parse("gl(1,1)"));
    Weight mu({Rational(1, 2), Rational(-1, 2)}, dgl.basis_tag());
    if (classify(dgl, mu - dgl.rho).kind != Kind::Atypical) return false;
    auto db = build_family(FamilySpec::parse("B(1,1)"));
    Weight nu({Rational(1), Rational(1)}, db.basis_tag());
    return classify(db, nu - db.rho).kind == Kind::Atypical;
  });

  check("restriction flag of (1,1) in B(0,2) splits into 4 singleton blocks", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto g = generate(d);
    Weight lambda({Rational(1), Rational(1)}, d.basis_tag());
    auto blocks = block_decompose(d, g, restriction_flag(d, lambda));
    if (blocks.size() != 4) return false;
    for (const auto& [chi, part] : blocks)
      if (part.total_multiplicity() != 1) return false;
    return true;
  });

  check("mate pipeline at lambda+rho = (2,0): chi rep (5/2,1/2), perfect", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto g = generate(d);
    Weight lambda({Rational(1, 2), Rational(-1, 2)}, d.basis_tag());
    auto [l, chi] = construct_mate(d, g, g_char_of(d, g, lambda));
    if (l != lambda) return false;
    if (chi.rep != Weight({Rational(5, 2), Rational(1, 2)}, d.basis_tag())) return false;
    auto mate = verify_mate(d, g, l, chi);
    Weight sigma2({Rational(0), Rational(1)}, d.basis_tag());
    if (!mate.is_mate || mate.matched_gammas.size() != 2) return false;
    if (mate.matched_gammas[1] != sigma2) return false;
    return verify_perfect(d, g, l, chi).is_perfect;
  });

  check("weak-generic round trips at lambda+rho = (2,0) recover single Vermas", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto g = generate(d);
    Weight lambda({Rational(1, 2), Rational(-1, 2)}, d.basis_tag());
    auto [l, chi] = construct_mate(d, g, g_char_of(d, g, lambda));
    auto ctx = make_context(d, g, g_char_of(d, g, lambda), chi, Mode::OspWeakGeneric);
    GradedVermaFlag top;
    top.ambient = Ambient::Full;
    top.add(lambda, 0, 1);
    if (!round_trip(ctx, top, Direction::PsiPhi).equal) return false;
    return round_trip(ctx, psi(ctx, top), Direction::PhiPsi).equal;
  });

  check("strongly typical candidate count at (1,1) in B(0,2) is 4", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto g = generate(d);
    Weight lambda({Rational(1), Rational(1)}, d.basis_tag());
    return candidate_mates_strong(d, g, g_char_of(d, g, lambda)).size() == 4;
  });

  check("shifted star identity on a fixed rational weight in B(0,2)", [] {
    auto d = build_family(FamilySpec::parse("B(0,2)"));
    auto g = generate(d);
    Weight lambda({Rational(1, 3), Rational(-5, 4)}, d.basis_tag());
    for (const auto& w : g.elements)
      for (const auto& gamma : gamma_sets(2).gamma) {
        Weight lhs = dot(d, w, lambda) - star(d, w, gamma) + d.rho0;
        if (lhs != act(w, lambda - gamma + d.rho0)) return false;
      }
    return true;
  });

  return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact central-character combinatorics for osp(1,2n) and its relatives"};
  app.name("supertypical");
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  bool verbose = false;
  long long depth = 4;
  std::uint64_t cap = 1000000;
  std::string config_path;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_flag("--verbose", verbose, "include per-element detail");
  auto* depth_opt =
      app.add_option("--depth", depth, "truncation depth for character tables");
  auto* cap_opt = app.add_option("--cap", cap, "cap on Weyl group generation");
  app.add_option("--config", config_path,
                 "key=value config file (default ./supertypical.toml if present)");

  std::string fam_roots, fam_classify, fam_orbit, fam_flag, fam_blocks, fam_mate,
      fam_perfect, fam_equiv;
  detail::WeightArgs wa_classify, wa_orbit, wa_flag, wa_blocks, wa_mate, wa_perfect,
      wa_equiv;
  bool orbit_dot = false;
  bool flag_induction = false;
  bool flag_character = false;
  int base_parity = 0;
  std::string equiv_mode = "auto";

  auto* roots = app.add_subcommand("roots", "print the root data of a family");
  roots->add_option("family", fam_roots, "family, e.g. B(0,2), gl(1,1), osp(3,2)");

  auto* cls = app.add_subcommand("classify", "typicality classification of a weight");
  cls->add_option("family", fam_classify, "family");
  detail::add_weight_options(cls, wa_classify);

  auto* orb = app.add_subcommand("orbit", "Weyl orbit of a weight, sorted");
  orb->add_option("family", fam_orbit, "family");
  detail::add_weight_options(orb, wa_orbit);
  orb->add_flag("--dot", orbit_dot, "use the rho-shifted dot action");

  auto* flg = app.add_subcommand("flag", "restriction or induction Verma flag");
  flg->add_option("family", fam_flag, "family");
  detail::add_weight_options(flg, wa_flag);
  flg->add_flag("--induction", flag_induction,
                "induce a g0 weight up instead of restricting a g weight");
  flg->add_option("--base-parity", base_parity, "base parity for induction");
  flg->add_flag("--character", flag_character,
                "also print the truncated character at --depth");

  auto* blk = app.add_subcommand("blocks",
                                 "block decomposition of a restriction flag");
  blk->add_option("family", fam_blocks, "family");
  detail::add_weight_options(blk, wa_blocks);

  auto* mat = app.add_subcommand("mate", "construct and verify the mate of a block");
  mat->add_option("family", fam_mate, "family");
  detail::add_weight_options(mat, wa_mate);

  auto* per = app.add_subcommand("verify-perfect",
                                 "orbit-level disjointness check for a mate");
  per->add_option("family", fam_perfect, "family");
  detail::add_weight_options(per, wa_perfect);

  auto* eqv = app.add_subcommand("equiv", "round-trip the block equivalences");
  eqv->add_option("family", fam_equiv, "family");
  detail::add_weight_options(eqv, wa_equiv);
  eqv->add_option("--mode", equiv_mode, "strong, weak, or auto")
      ->check(CLI::IsMember({"strong", "weak", "auto"}));

  auto* self = app.add_subcommand("selftest", "run the compiled-in example checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

  try {
    ConfigValues cfg = load_config(config_path.empty() ? "supertypical.toml" : config_path,
                                   !config_path.empty());
    if (depth_opt->count() == 0 && cfg.depth) depth = *cfg.depth;
    if (cap_opt->count() == 0 && cfg.cap) cap = *cfg.cap;

    auto family_of = [&](const std::string& given) {
      const std::string& name = given.empty() ? cfg.family : given;
      if (name.empty())
        throw ParseError("no family given (pass one or set family= in the config)");
      return build_family(FamilySpec::parse(name));
    };

    if (roots->parsed()) {
      auto d = family_of(fam_roots);
      if (json) {
        Json j{{"family", d.spec.str()},
               {"coordinates", detail::coordinate_names(d)},
               {"rank", d.rank()},
               {"simple_roots", orbit_json(d.simple_roots)},
               {"even_positive_roots", orbit_json(d.delta0_plus)},
               {"odd_positive_roots", orbit_json(d.delta1_plus)},
               {"isotropic_roots", orbit_json(d.delta1_plus_isotropic)},
               {"rho", to_json(d.rho)},
               {"rho0", to_json(d.rho0)},
               {"rho1", to_json(d.rho1)}};
        emit(j);
      } else {
        out << "family: " << d.spec.str() << "\n";
        out << "coordinates: " << detail::coordinate_names(d) << "\n";
        out << "rank: " << d.rank() << "\n";
        out << "simple roots: " << detail::join_weights(d.simple_roots) << "\n";
        out << "even positive roots: " << detail::join_weights(d.delta0_plus) << "\n";
        out << "odd positive roots: " << detail::join_weights(d.delta1_plus) << "\n";
        out << "isotropic roots: " << detail::join_weights(d.delta1_plus_isotropic)
            << "\n";
        out << "rho: " << d.rho.str() << "\n";
        out << "rho0: " << d.rho0.str() << "\n";
        out << "rho1: " << d.rho1.str() << "\n";
      }
      return 0;
    }

    if (cls->parsed()) {
      auto d = family_of(fam_classify);
      auto c = classify(d, detail::resolve_lambda(d, wa_classify));
      if (json) {
        emit(to_json(c));
      } else {
        out << "kind: " << kind_name(c.kind) << "\n";
        out << "vanishing roots: " << detail::join_weights(c.vanishing_odd_roots)
            << "\n";
        out << "generic weakly atypical: " << detail::yesno(c.generic_weakly_atypical)
            << "\n";
        out << "T = " << c.T_value.str() << "\n";
        out << "Q = " << c.Q_value.str() << "\n";
      }
      return 0;
    }

    if (orb->parsed()) {
      auto d = family_of(fam_orbit);
      auto g = generate(d, cap);
      Weight mu = detail::resolve_lambda(d, wa_orbit);
      auto ws = orbit_dot ? orbit(g, mu, d.rho, true) : orbit(g, mu);
      if (json) {
        emit(Json{{"action", orbit_dot ? "dot" : "plain"},
                  {"size", ws.size()},
                  {"weights", orbit_json(ws)}});
      } else {
        out << "action: " << (orbit_dot ? "dot" : "plain") << "\n";
        out << "size: " << ws.size() << "\n";
        for (const auto& w : ws) out << w.str() << "\n";
      }
      return 0;
    }

    if (flg->parsed()) {
      auto d = family_of(fam_flag);
      Weight mu = detail::resolve_lambda(d, wa_flag);
      GradedVermaFlag f =
          flag_induction ? induction_flag(d, mu, base_parity) : restriction_flag(d, mu);
      if (json) {
        Json j = to_json(f);
        if (flag_character) {
          j["depth"] = depth;
          j["character"] = to_json(truncated_character(d, f, depth));
        }
        emit(j);
      } else {
        out << "ambient: " << ambient_name(f.ambient) << "\n";
        out << "entries: " << f.entries.size() << "\n";
        for (const auto& [key, mult] : f.entries)
          out << key.first.str() << " parity " << key.second << " mult " << mult
              << "\n";
        if (flag_character) {
          auto ch = truncated_character(d, f, depth);
          out << "character to depth " << depth << ":\n";
          for (const auto& [nu, m] : ch.entries())
            out << nu.str() << " mult " << m << "\n";
        }
      }
      return 0;
    }

    if (blk->parsed()) {
      auto d = family_of(fam_blocks);
      auto g = generate(d, cap);
      Weight lambda = detail::resolve_lambda(d, wa_blocks);
      auto report = support_report(d, g, lambda);
      if (json) {
        Json j{{"support", to_json(report)}};
        if (verbose)
          j["blocks"] = to_json(block_decompose(d, g, restriction_flag(d, lambda)));
        emit(j);
      } else {
        out << "blocks: " << report.size() << "\n";
        for (const auto& line : report) {
          out << "chi rep " << line.chi.rep.str() << ": multiplicity "
              << line.multiplicity << ", parities {";
          bool first = true;
          for (int p : line.parities) {
            if (!first) out << " ";
            out << p;
            first = false;
          }
          out << "}\n";
        }
      }
      return 0;
    }

    if (mat->parsed()) {
      auto d = family_of(fam_mate);
      auto g = generate(d, cap);
      Weight lambda = detail::resolve_lambda(d, wa_mate);
      auto [chosen, chi] = construct_mate(d, g, g_char_of(d, g, lambda));
      auto mate = verify_mate(d, g, chosen, chi);
      auto perfect = verify_perfect(d, g, chosen, chi);
      if (json) {
        Json j = to_json(mate);
        j["is_perfect"] = perfect.is_perfect;
        j["perfect"] = to_json(perfect, verbose);
        emit(j);
      } else {
        out << "lambda: " << mate.lambda.str() << "\n";
        out << "chi rep: " << mate.chi.rep.str() << "\n";
        out << "matched gammas: " << detail::join_weights(mate.matched_gammas) << "\n";
        out << "is_mate: " << detail::yesno(mate.is_mate) << "\n";
        out << "orbit_verified: " << detail::yesno(mate.orbit_verified) << "\n";
        if (mate.graded_split)
          out << "graded split: even " << mate.graded_split->first.str() << ", odd "
              << mate.graded_split->second.str() << "\n";
        out << "is_perfect: " << detail::yesno(perfect.is_perfect) << "\n";
      }
      return 0;
    }

    if (per->parsed()) {
      auto d = family_of(fam_perfect);
      auto g = generate(d, cap);
      Weight lambda = detail::resolve_lambda(d, wa_perfect);
      auto [chosen, chi] = construct_mate(d, g, g_char_of(d, g, lambda));
      auto perfect = verify_perfect(d, g, chosen, chi);
      if (json) {
        emit(to_json(perfect, verbose));
      } else {
        out << "lambda: " << perfect.lambda.str() << "\n";
        out << "chi rep: " << perfect.chi.rep.str() << "\n";
        out << "elements checked: " << perfect.per_w.size() << "\n";
        out << "stabilizer inclusion at rho0: " << detail::yesno(perfect.incl_rho0)
            << "\n";
        out << "stabilizer inclusion at rho0 - sigma_l: "
            << detail::yesno(perfect.incl_rho0_minus_sigma_l) << "\n";
        if (verbose)
          for (const auto& line : perfect.per_w)
            out << "w " << detail::word_str(line.w) << " X size " << line.xw_size
                << " disjoint " << detail::yesno(line.disjoint) << "\n";
        out << "is_perfect: " << detail::yesno(perfect.is_perfect) << "\n";
      }
      return 0;
    }

    if (eqv->parsed()) {
      auto d = family_of(fam_equiv);
      auto g = generate(d, cap);
      Weight lambda = detail::resolve_lambda(d, wa_equiv);
      Mode mode;
      if (equiv_mode == "strong") {
        mode = Mode::StronglyTypical;
      } else if (equiv_mode == "weak") {
        mode = Mode::OspWeakGeneric;
      } else {
        auto c = classify(d, lambda);
        if (c.kind == Kind::StronglyTypical)
          mode = Mode::StronglyTypical;
        else if (c.generic_weakly_atypical)
          mode = Mode::OspWeakGeneric;
        else
          throw DomainError("weight " + lambda.str() +
                            " is neither strongly typical nor generic weakly "
                            "atypical; no equivalence context");
      }
      auto chi_tilde = g_char_of(d, g, lambda);
      CentralCharacter chi = mode == Mode::StronglyTypical
                                 ? g0_char_of(d, g, lambda)
                                 : construct_mate(d, g, chi_tilde).second;
      auto ctx = make_context(d, g, chi_tilde, chi, mode);
      GradedVermaFlag top;
      top.ambient = Ambient::Full;
      top.add(lambda, 0, 1);
      auto rt_down = round_trip(ctx, top, Direction::PsiPhi);
      auto rt_up = round_trip(ctx, psi(ctx, top), Direction::PhiPsi);
      if (json) {
        emit(Json{{"mode", mode_name(mode)},
                  {"chi_tilde", to_json(chi_tilde)},
                  {"chi", to_json(chi)},
                  {"psi_phi", to_json(rt_down)},
                  {"phi_psi", to_json(rt_up)}});
      } else {
        out << "mode: " << mode_name(mode) << "\n";
        out << "chi~ rep: " << chi_tilde.rep.str() << "\n";
        out << "chi rep: " << chi.rep.str() << "\n";
        out << "psi-phi round trip equal: " << detail::yesno(rt_down.equal) << "\n";
        out << "phi-psi round trip equal: " << detail::yesno(rt_up.equal) << "\n";
      }
      return 0;
    }

    if (self->parsed()) {
      auto checks = selftest_checks();
      size_t passed = 0;
      for (const auto& [name, ok] : checks) passed += ok ? 1 : 0;
      if (json) {
        Json list = Json::array();
        for (const auto& [name, ok] : checks)
          list.push_back(Json{{"name", name}, {"pass", ok}});
        emit(Json{{"checks", list},
                  {"passed", passed},
                  {"total", checks.size()},
                  {"all_pass", passed == checks.size()}});
      } else {
        for (const auto& [name, ok] : checks)
          out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        out << passed << "/" << checks.size() << " checks passed\n";
      }
      return passed == checks.size() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace supertypical
