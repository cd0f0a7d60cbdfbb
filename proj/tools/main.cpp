#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tunnelrho/arcsys.hpp"
#include "tunnelrho/error.hpp"
#include "tunnelrho/lattice.hpp"
#include "tunnelrho/pillowcase.hpp"
#include "tunnelrho/slope.hpp"
#include "tunnelrho/twistgen.hpp"

using namespace tunnelrho;

namespace {

// problems with the command line itself (exit 2), as opposed to domain
// errors (exit 1)
struct UsageError {
  std::string msg;
};

Slope arg_slope(const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot open \"" + path + "\"");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, "\"" + path + "\": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::ParseError, "cannot write \"" + path + "\"");
  out << content;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string mod2_str(const SlopeMod2& r) { return r.str() + " (mod 2)"; }

int cmd_delta(const std::string& a, const std::string& b, bool json) {
  long long d = delta(arg_slope(a), arg_slope(b));
  if (json)
    emit({{"a", arg_slope(a).str()}, {"b", arg_slope(b).str()}, {"delta", d}});
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_intersect(const std::string& a_str, const std::string& b_str,
                  bool with_oracle, bool json) {
  Slope a = arg_slope(a_str), b = arg_slope(b_str);
  long long formula = min_intersections(a, b);
  std::optional<long long> oracle;
  if (with_oracle && !(a == b))
    oracle = count_crossings(realize_pair(a), realize_pair(b));
  if (json) {
    nlohmann::json j = {{"a", a.str()},
                        {"b", b.str()},
                        {"delta", delta(a, b)},
                        {"min_intersections", formula}};
    if (oracle) {
      j["oracle"] = *oracle;
      j["match"] = *oracle == formula;
    }
    emit(j);
  } else {
    std::cout << formula << "\n";
    if (oracle)
      std::cout << "oracle: " << *oracle << " ("
                << (*oracle == formula ? "match" : "MISMATCH") << ")\n";
  }
  return 0;
}

int cmd_rho_torus(long long m, long long n, bool trace, bool json,
                  const std::string& svg_path) {
  TorusKnotCertificate cert = certify_torus_knot({m, n});
  if (!svg_path.empty()) {
    std::ostringstream os;
    render_svg(os, cert);
    write_file(svg_path, os.str());
  }
  if (trace)
    emit(trace_json(cert));
  else if (json)
    emit({{"m", m}, {"n", n}, {"rho", cert.rho.str()}});
  else
    std::cout << mod2_str(cert.rho) << "\n";
  return 0;
}

nlohmann::json waves_report(const ArcSystem& sys) {
  ValidationReport rep = validate(sys);
  nlohmann::json j = {
      {"valid", rep.valid()},
      {"balanced", rep.balanced},
      {"ends",
       {{"MinusLeft", rep.ends_minus_left},
        {"MinusRight", rep.ends_minus_right},
        {"PlusLeft", rep.ends_plus_left},
        {"PlusRight", rep.ends_plus_right}}},
      {"class_issues", rep.class_issues},
      {"pair_violations", rep.pair_violations},
  };
  if (!rep.valid()) return j;

  nlohmann::json ws = nlohmann::json::array();
  for (const auto& [base, cls] : waves_of(sys))
    ws.push_back({{"base", puncture_name(base)}, {"slope", cls.slope.str()}});
  j["waves"] = ws;

  auto aug = derive_augmented_slope(sys);
  if (aug) {
    j["augmented_slope"] = {{"slope", aug->slope.str()},
                            {"base", meridian_name(aug->base)}};
    if (aug->slope.finite())
      j["rho"] = reduce_mod2(aug->slope).str();
    else
      j["rho_error"] = err_name(Err::InfiniteSlope);
  } else {
    j["augmented_slope"] = nullptr;
    j["rho_error"] = err_name(Err::NoWaves);
  }
  return j;
}

int cmd_waves(const std::string& path, bool json) {
  ArcSystem sys = arc_system_from_json(parse_json_file(path));
  nlohmann::json rep = waves_report(sys);
  if (json) {
    nlohmann::json out = arc_system_to_json(sys);
    out["report"] = rep;
    emit(out);
    return 0;
  }
  std::cout << "valid: " << (rep["valid"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "ends: MinusLeft=" << rep["ends"]["MinusLeft"]
            << " MinusRight=" << rep["ends"]["MinusRight"]
            << " PlusLeft=" << rep["ends"]["PlusLeft"]
            << " PlusRight=" << rep["ends"]["PlusRight"] << "\n";
  for (const auto& issue : rep["class_issues"])
    std::cout << "class issue: " << issue.get<std::string>() << "\n";
  for (const auto& v : rep["pair_violations"])
    std::cout << "pair violation: " << v.get<std::string>() << "\n";
  if (!rep["valid"].get<bool>()) return 0;
  std::cout << "waves: " << rep["waves"].size();
  for (const auto& w : rep["waves"])
    std::cout << " " << w["base"].get<std::string>() << "("
              << w["slope"].get<std::string>() << ")";
  std::cout << "\n";
  if (!rep["augmented_slope"].is_null())
    std::cout << "augmented slope: "
              << rep["augmented_slope"]["slope"].get<std::string>() << " on "
              << rep["augmented_slope"]["base"].get<std::string>()
              << " meridian\n";
  if (rep.contains("rho"))
    std::cout << "rho: " << rep["rho"].get<std::string>() << " (mod 2)\n";
  else
    std::cout << "rho: undefined (" << rep["rho_error"].get<std::string>()
              << ")\n";
  return 0;
}

int cmd_realize(const std::string& target_str, long long max_len,
                const std::string& gens_path, bool json) {
  Slope target_slope = arg_slope(target_str);
  if (target_slope.infinite())
    throw UsageError{"realize target must be finite"};
  SlopeMod2 target = reduce_mod2(target_slope);
  GeneratorSet gens = GeneratorSet::default_set();
  if (!gens_path.empty()) {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(read_file(gens_path));
    } catch (const nlohmann::json::exception& e) {
      fail(Err::ParseError, "\"" + gens_path + "\": " + e.what());
    }
    gens = GeneratorSet::from_json(j);
  }
  auto word = realize(target, gens, max_len);
  if (!word)
    fail(Err::NotFound, "no word of length <= " + std::to_string(max_len) +
                            " realizes " + target.str());
  Slope result = apply_word(*word, Slope(1, 1), gens);
  if (json) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& [name, power] : word->letters)
      letters.push_back({{"gen", name}, {"power", power}});
    emit({{"target", target.str()},
          {"word", letters},
          {"word_str", word->str()},
          {"length", word->length()},
          {"result", result.str()},
          {"verified", reduce_mod2(result) == target}});
  } else {
    std::cout << "word: " << word->str() << "\n";
    std::cout << "1/1 -> " << result.str() << " = " << mod2_str(reduce_mod2(result))
              << "\n";
  }
  return 0;
}

int cmd_render(const std::string& a_str, const std::string& b_str,
               const std::string& svg_path) {
  std::vector<RealizedPair> pairs = {realize_pair(arg_slope(a_str))};
  if (!b_str.empty()) pairs.push_back(realize_pair(arg_slope(b_str)));
  std::ostringstream os;
  render_svg(os, pairs);
  write_file(svg_path, os.str());
  std::cout << "wrote " << svg_path << "\n";
  return 0;
}

int cmd_oracle_check(long long max_p, long long max_q, bool json) {
  if (max_p < 1 || max_q < 1) throw UsageError{"bounds must be >= 1"};
  OracleSweepReport rep = oracle_sweep(max_p, max_q);
  if (json) {
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& [a, b] : rep.mismatches)
      mm.push_back({a.str(), b.str()});
    emit({{"slopes", rep.slopes},
          {"pairs", rep.pairs_checked},
          {"mismatches", mm},
          {"elapsed_ms", rep.elapsed_ms}});
  } else {
    std::cout << "slopes: " << rep.slopes << "\n"
              << "pairs: " << rep.pairs_checked << "\n"
              << "mismatches: " << rep.mismatches.size() << "\n"
              << "elapsed: " << static_cast<long long>(rep.elapsed_ms)
              << " ms\n";
    for (const auto& [a, b] : rep.mismatches)
      std::cout << "MISMATCH " << a.str() << " " << b.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slope calculus on the 4-punctured sphere and the tunnel "
               "invariant rho"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string a_str, b_str, file, svg_path, gens_path;
  long long m = 0, n = 0, max_len = 12, max_p = 10, max_q = 10;
  bool json = false, with_oracle = false, trace = false;

  auto* sc_delta = app.add_subcommand("delta", "distance between two slopes");
  sc_delta->add_option("A", a_str, "slope p/q or inf")->required();
  sc_delta->add_option("B", b_str, "slope p/q or inf")->required();
  sc_delta->add_flag("--json", json, "JSON output");
  sc_delta->callback([&] { action = [&] { return cmd_delta(a_str, b_str, json); }; });

  auto* sc_int = app.add_subcommand(
      "intersect", "minimal crossing number of two complete pairs");
  sc_int->add_option("A", a_str, "slope p/q or inf")->required();
  sc_int->add_option("B", b_str, "slope p/q or inf")->required();
  sc_int->add_flag("--oracle", with_oracle,
                   "also count crossings of the flat realizations");
  sc_int->add_flag("--json", json, "JSON output");
  sc_int->callback([&] {
    action = [&] { return cmd_intersect(a_str, b_str, with_oracle, json); };
  });

  auto* sc_rho = app.add_subcommand(
      "rho-torus", "invariant of a torus knot with annulus-spanning tunnel");
  sc_rho->add_option("M", m, "strands around one way")->required();
  sc_rho->add_option("N", n, "strands around the other way")->required();
  sc_rho->add_flag("--trace", trace, "emit the full certificate chain as JSON");
  sc_rho->add_flag("--json", json, "JSON output");
  sc_rho->add_option("--svg", svg_path, "write a picture of the certificate");
  sc_rho->callback(
      [&] { action = [&] { return cmd_rho_torus(m, n, trace, json, svg_path); }; });

  auto* sc_waves = app.add_subcommand(
      "waves", "validate an arc system file and derive its wave slope");
  sc_waves->add_option("FILE", file, "arc system JSON")->required();
  sc_waves->add_flag("--json", json, "JSON output");
  sc_waves->callback([&] { action = [&] { return cmd_waves(file, json); }; });

  auto* sc_realize = app.add_subcommand(
      "realize", "search twist words reaching a target invariant");
  sc_realize->add_option("TARGET", a_str, "target slope mod 2")->required();
  sc_realize->add_option("--max-len", max_len, "word length budget");
  sc_realize->add_option("--gens", gens_path, "generator set JSON file");
  sc_realize->add_flag("--json", json, "JSON output");
  sc_realize->callback([&] {
    action = [&] { return cmd_realize(a_str, max_len, gens_path, json); };
  });

  auto* sc_render = app.add_subcommand(
      "render", "draw realized arc pairs on the fundamental square");
  sc_render->add_option("A", a_str, "slope p/q or inf")->required();
  sc_render->add_option("B", b_str, "second slope (optional)");
  sc_render->add_option("--svg", svg_path, "output path")->required();
  sc_render->callback(
      [&] { action = [&] { return cmd_render(a_str, b_str, svg_path); }; });

  auto* sc_oracle = app.add_subcommand(
      "oracle-check", "sweep the crossing oracle against the formula");
  sc_oracle->add_option("--max-p", max_p, "numerator bound");
  sc_oracle->add_option("--max-q", max_q, "denominator bound");
  sc_oracle->add_flag("--json", json, "JSON output");
  sc_oracle->callback(
      [&] { action = [&] { return cmd_oracle_check(max_p, max_q, json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << e.msg << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << err_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
