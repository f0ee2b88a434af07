#include "run.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/error.hpp"
#include "sturmian/groupoid.hpp"
#include "sturmian/invariants.hpp"

namespace sturmian::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad user input, reported against the option name.
[[noreturn]] void bad(const std::string& field, const std::string& what) { throw ParseError(field, what); }

SturmianSystem system_from(const std::string& field, const std::string& spec) {
  if (spec.empty()) bad(field, "required");
  try {
    return SturmianSystem(parse_alpha(spec));
  } catch (const Error& e) {
    bad(field, e.what());
  }
}

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

Json class_json(const EqClass& c) {
  return Json{{"prefix", c.prefix.str()}, {"past", words_json(c.past)},
              {"representative", to_string(c.representative)}};
}

Json bound_json(const ResolutionBound& b) {
  return Json{{"K", b.K}, {"L", b.L}, {"expected", b.expected}};
}

std::string kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::Forward: return "forward";
    case OrbitKind::Backward: return "backward";
    case OrbitKind::Generic: break;
  }
  return "generic";
}

Json fibre_json(const Cover& cover, const OrbitPoint& x, std::size_t K, std::size_t L, int& status) {
  auto bound = cover.resolution_bound(x);
  auto loc = cover.system().locate(x);
  Json j{{"point", to_string(x)}, {"orbit", kind_name(loc.kind)}, {"K", K}, {"L", L},
         {"resolution_bound", bound_json(bound)}};
  bool resolved = K >= bound.K && L >= bound.L;
  auto threads = cover.search_fibre(x, K, L);
  j["resolved"] = resolved;
  j["count"] = threads.size();
  Json isolated = Json::array();
  if (resolved && loc.kind != OrbitKind::Generic) {
    for (const auto& th : threads) isolated.push_back(cover.is_isolated(th));
  }
  j["isolated"] = isolated;
  j["verified"] = resolved && threads.size() == bound.expected;
  if (!j["verified"].get<bool>()) status = kVerificationFailed;
  return j;
}

Json run_word(const SturmianSystem& sys, const RunConfig& cfg) {
  auto x = parse_point(sys, cfg.point);
  return Json{{"alpha", sys.alpha().to_string()}, {"point", to_string(x)}, {"n", cfg.n},
              {"word", sys.code_word(x, cfg.n).str()}};
}

Json run_omega(const SturmianSystem& sys, const RunConfig& cfg) {
  return Json{{"alpha", sys.alpha().to_string()}, {"n", cfg.n},
              {"word", sys.code_word(sys.branch_point(), cfg.n).str()}};
}

Json run_language(const SturmianSystem& sys, const RunConfig& cfg) {
  auto ws = sys.language(cfg.n);
  return Json{{"alpha", sys.alpha().to_string()}, {"n", cfg.n}, {"count", ws.size()}, {"words", words_json(ws)}};
}

Json run_past(const SturmianSystem& sys, const RunConfig& cfg) {
  auto x = parse_point(sys, cfg.point);
  return Json{{"alpha", sys.alpha().to_string()}, {"point", to_string(x)}, {"l", cfg.n},
              {"past", words_json(sys.past_set(x, cfg.n))}};
}

Json run_cover(const SturmianSystem& sys, const RunConfig& cfg, int& status) {
  if (cfg.K > cfg.L) bad("--K", "must not exceed --L");
  Cover cover(sys);
  Json j{{"alpha", sys.alpha().to_string()}, {"k", cfg.K}, {"l", cfg.L}, {"seed", cfg.seed}};
  try {
    auto q = cover.quotient({cfg.K, cfg.L}, cfg.samples, cfg.seed);
    j["samples_checked"] = q.samples_checked;
    j["count"] = q.classes.size();
    Json cs = Json::array();
    for (const auto& c : q.classes) cs.push_back(class_json(c));
    j["classes"] = cs;
    j["verified"] = true;
  } catch (const IncompleteEnumeration& e) {
    j["verified"] = false;
    j["error"] = e.what();
    status = kVerificationFailed;
  }
  return j;
}

Json run_fibre(const SturmianSystem& sys, const RunConfig& cfg, int& status) {
  if (cfg.K > cfg.L) bad("--K", "must not exceed --L");
  Cover cover(sys);
  auto x = parse_point(sys, cfg.point);
  Json j{{"alpha", sys.alpha().to_string()}, {"seed", cfg.seed}};
  j.update(fibre_json(cover, x, cfg.K, cfg.L, status));
  return j;
}

Json run_dad(const SturmianSystem& sys, const RunConfig& cfg, int& status) {
  std::set<std::size_t> F(cfg.F.begin(), cfg.F.end());
  if (F.empty() || *F.rbegin() == 0) bad("--F", "needs a positive entry");
  auto w = dad_witness(sys, F);
  std::size_t need = 2 * w.lbar * std::max(w.beta_mu, w.beta_nu);
  std::size_t window = cfg.window.value_or(need);
  if (window < need) bad("--window", "must be at least " + std::to_string(need));
  auto rep = check_witness(sys, w, window);
  std::size_t one_set = one_set_chain(F, window);
  Json j{{"alpha", sys.alpha().to_string()},
         {"F", cfg.F},
         {"lbar", w.lbar},
         {"mu_prime", w.mu_prime.str()},
         {"nu_prime", w.nu_prime.str()},
         {"mu", w.mu.str()},
         {"nu", w.nu.str()},
         {"beta_mu", w.beta_mu},
         {"beta_nu", w.beta_nu},
         {"u_words", words_json(w.u_words)},
         {"window", window},
         {"hits_u", rep.hits_u},
         {"nu_in_v", rep.nu_in_v},
         {"max_chain_V", rep.max_chain_V},
         {"max_chain_U", rep.max_chain_U},
         {"cocycle_bound", rep.cocycle_bound},
         {"one_set_chain", one_set},
         {"pass", rep.pass}};
  if (!rep.pass) status = kVerificationFailed;
  return j;
}

Json run_compare(const SturmianSystem& a, const SturmianSystem& b) {
  auto rep = compare(a.alpha(), b.alpha());
  return Json{{"conjugate", rep.conjugate}, {"flow_equivalent", rep.flow_equivalent},
              {"k0", rep.k_theory.k0}, {"k1", rep.k_theory.k1}};
}

Json run_report(const SturmianSystem& sys, const RunConfig& cfg, int& status) {
  Cover cover(sys);
  Json j{{"alpha", sys.alpha().to_string()}, {"cf", cf_expand(sys.alpha()).to_string()},
         {"omega", sys.code_word(sys.branch_point(), cfg.n).str()}, {"seed", cfg.seed}};
  bool complexity = true;
  for (std::size_t m = 1; m <= cfg.n; ++m) complexity = complexity && sys.language(m).size() == m + 1;
  j["complexity_n_plus_1"] = complexity;
  Json fibres = Json::array();
  for (const auto& x : {sys.branch_point(), sys.point(QuadraticNumber(), Variant::L),
                        sys.point(QuadraticNumber(), Variant::R), sys.point(QuadraticNumber::rational(1, 2))}) {
    fibres.push_back(fibre_json(cover, x, cfg.K, cfg.L, status));
  }
  j["fibres"] = fibres;
  auto k = k_theory_report(sys.alpha());
  j["k0"] = k.k0;
  j["order_unit"] = k.order_unit;
  j["k1"] = k.k1;
  if (!complexity) status = kVerificationFailed;
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + scalar_text(v[i]);
    return out;
  }
  return v.dump();
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == Format::Json) {
    out << j.dump(2) << "\n";
    return;
  }
  if (cfg.command == "word" || cfg.command == "omega") {
    out << j["word"].get<std::string>() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << key << ":\n";
      for (const auto& item : value) out << "  " << item.dump() << "\n";
    } else {
      out << key << "=" << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

OrbitPoint parse_point(const SturmianSystem& sys, const std::string& text) {
  try {
    if (text == "omega") return sys.branch_point();
    if (text.starts_with("shift:")) {
      std::size_t j = 0;
      auto digits = std::string_view(text).substr(6);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
      if (ec != std::errc() || end != digits.data() + digits.size()) {
        bad("--point", "malformed shift count in '" + text + "'");
      }
      return sys.forward_point(j);
    }
    if (text.starts_with("pre:")) return sys.omega_preimage(Word(text.substr(4)));
    if (text.starts_with("t:")) {
      std::string value = text.substr(2);
      Variant v = Variant::L;
      if (value.ends_with(":L") || value.ends_with(":R")) {
        v = value.back() == 'R' ? Variant::R : Variant::L;
        value.resize(value.size() - 2);
      }
      return sys.point(parse_number(value), v);
    }
  } catch (const ParseError& e) {
    if (e.field() == "--point") throw;
    bad("--point", e.what());
  } catch (const std::exception& e) {
    bad("--point", e.what());
  }
  bad("--point", "expected omega, shift:j, pre:WORD or t:VALUE[:L|R], got '" + text + "'");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    int status = kOk;
    auto sys = system_from("--alpha", cfg.alpha_spec);
    Json j;
    if (cfg.command == "word") j = run_word(sys, cfg);
    else if (cfg.command == "omega") j = run_omega(sys, cfg);
    else if (cfg.command == "language") j = run_language(sys, cfg);
    else if (cfg.command == "past") j = run_past(sys, cfg);
    else if (cfg.command == "cover") j = run_cover(sys, cfg, status);
    else if (cfg.command == "fibre") j = run_fibre(sys, cfg, status);
    else if (cfg.command == "dad") j = run_dad(sys, cfg, status);
    else if (cfg.command == "compare") j = run_compare(sys, system_from("--beta", cfg.beta_spec));
    else if (cfg.command == "report") j = run_report(sys, cfg, status);
    else bad("command", "unknown command '" + cfg.command + "'");
    emit(cfg, j, out);
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on Sturmian subshifts and their covers"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::string format;
  if (const char* env = std::getenv("STURMIAN_FORMAT")) format = env;
  if (format.empty()) format = "text";

  struct Spec {
    const char* name;
    const char* help;
    bool point, level, dad, beta, samples;
  };
  const Spec specs[] = {
      {"word", "Coding of a point", true, false, false, false, false},
      {"language", "Factors of length n", false, false, false, false, false},
      {"omega", "Prefix of the branch point", false, false, false, false, false},
      {"past", "Words of length n that can precede a point", true, false, false, false, false},
      {"cover", "Classes of the finite quotient at level (K, L)", false, true, false, false, true},
      {"fibre", "Threads over a point at truncation (K, L)", true, true, false, false, false},
      {"dad", "Two-set witness and its exhaustive check", false, false, true, false, false},
      {"compare", "Conjugacy and flow equivalence of two parameters", false, false, false, true, false},
      {"report", "Summary of one parameter", false, true, false, false, false},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--alpha", cfg.alpha_spec, "quad:p,q,d,r or cf:[a0;...,(period)]")->required();
    sub->add_option("--format", format, "text or json (default from STURMIAN_FORMAT)");
    sub->add_option("--seed", cfg.seed, "Seed for sampling cross-checks");
    sub->add_option("--n", cfg.n, "Length");
    if (s.point) sub->add_option("--point", cfg.point, "omega, shift:j, pre:WORD or t:VALUE[:L|R]");
    if (s.level) {
      sub->add_option("--K", cfg.K, "Prefix depth");
      sub->add_option("--L", cfg.L, "Past depth");
    }
    if (s.samples) sub->add_option("--samples", cfg.samples, "Random points cross-checked");
    if (s.dad) {
      sub->add_option("--F", cfg.F, "Step set, comma separated")->delimiter(',');
      sub->add_option("--window", cfg.window, "Window length for the exhaustive check");
    }
    if (s.beta) sub->add_option("--beta", cfg.beta_spec, "Second parameter")->required();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (format == "text") cfg.format = Format::Text;
  else if (format == "json") cfg.format = Format::Json;
  else {
    err << "error: --format: expected text or json, got '" << format << "'\n";
    return kUsage;
  }
  return run(cfg, out, err);
}

}  // namespace sturmian::cli
