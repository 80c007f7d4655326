#pragma once

// Command-line front end: flag parsing, job configuration with JSON
// round-trip, dispatch to the library, and output rendering in the four
// supported formats.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cousin/char_ring.hpp"
#include "cousin/checks.hpp"
#include "cousin/cousin_complex.hpp"
#include "cousin/errors.hpp"
#include "cousin/newton.hpp"
#include "cousin/rational.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/serialize.hpp"
#include "cousin/slope_calc.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

// ---------------------------------------------------------------------------
// Job configuration.
// ---------------------------------------------------------------------------

struct JobConfig {
  std::string command;              // e.g. "slopes.table"
  std::string preset;               // preset tag, "@file.json", or empty
  std::vector<int> levi;            // simple-root indices of the Levi
  std::string format = "plain";     // plain | md | json | latex
  std::optional<long long> seed;    // for the randomized property sweep
  json params = json::object();     // command-specific parameters

  bool operator==(const JobConfig&) const = default;
};

inline json job_to_json(const JobConfig& config) {
  json out{{"command", config.command},
           {"preset", config.preset},
           {"levi", config.levi},
           {"format", config.format},
           {"params", config.params}};
  if (config.seed) out["seed"] = *config.seed;
  return out;
}

inline JobConfig job_from_json(const json& j) {
  if (!j.is_object()) fail_config("cli", "config", "config must be an object");
  JobConfig out;
  if (!j.contains("command") || !j["command"].is_string())
    fail_config("cli", "config", "config needs a string 'command'");
  out.command = j["command"].get<std::string>();
  if (j.contains("preset")) out.preset = j["preset"].get<std::string>();
  if (j.contains("levi")) {
    if (!j["levi"].is_array())
      fail_config("cli", "config", "'levi' must be an array of indices");
    for (const auto& x : j["levi"]) out.levi.push_back(x.get<int>());
  }
  if (j.contains("format")) out.format = j["format"].get<std::string>();
  if (j.contains("seed")) out.seed = j["seed"].get<long long>();
  if (j.contains("params")) {
    if (!j["params"].is_object())
      fail_config("cli", "config", "'params' must be an object");
    out.params = j["params"];
  }
  return out;
}

namespace cli_detail {

inline void require_format(const std::string& format) {
  if (format != "plain" && format != "md" && format != "json" &&
      format != "latex")
    fail_config("cli", "format",
                "format must be plain, md, json, or latex (got '" + format +
                    "')");
}

inline const json& need(const json& params, const char* key) {
  if (!params.contains(key))
    fail_config("cli", "params", std::string("missing parameter '") + key + "'");
  return params[key];
}

inline RootDatum need_datum(const JobConfig& config) {
  if (config.preset.empty())
    fail_config("cli", "preset", "--preset is required for this command");
  return resolve_datum(config.preset);
}

inline LeviDatum need_levi(const RootDatum& datum, const JobConfig& config) {
  for (int i : config.levi)
    if (i < 0 || i >= datum.rank())
      fail_config("cli", "levi",
                  "Levi index " + std::to_string(i) + " out of range [0, " +
                      std::to_string(datum.rank()) + ")");
  return make_levi(datum, config.levi);
}

inline void emit(std::ostream& out, const JobConfig& config, const json& data,
                 const std::string& text) {
  if (config.format == "json")
    out << data.dump(2) << "\n";
  else
    out << text;
}

// --- weyl ------------------------------------------------------------------

inline int run_weyl(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const LeviDatum levi = need_levi(datum, config);
  json elements = json::array();
  std::string text;
  for (int w : weyl.kostant(levi)) {
    elements.push_back(json{{"name", weyl.name(w)},
                            {"length", weyl.length(w)},
                            {"ell_plus", weyl.ell_plus(w)},
                            {"ell_minus", weyl.ell_minus(w, levi)}});
    text += weyl.name(w) + "  length=" + std::to_string(weyl.length(w)) +
            "  ell+=" + std::to_string(weyl.ell_plus(w)) +
            "  ell-=" + std::to_string(weyl.ell_minus(w, levi)) + "\n";
  }
  emit(out, config, json{{"levi", config.levi}, {"elements", elements}}, text);
  return 0;
}

// --- char ------------------------------------------------------------------

inline int run_char(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const std::string variant = need(config.params, "variant").get<std::string>();
  const Vec weight = vec_from_json(need(config.params, "weight"), "char");
  const int depth = need(config.params, "depth").get<int>();
  if (depth < 0) fail_config("cli", "char", "depth must be nonnegative");
  FormalCharacter chr;
  if (variant == "verma") {
    chr = verma_character(datum, weight, depth);
  } else if (variant == "weyl") {
    const WeylGroup weyl(datum);
    chr = weyl_character(datum, weyl, weight, depth);
  } else {
    fail_config("cli", "char", "variant must be verma or weyl");
  }
  std::string text;
  for (const auto& [mu, coeff] : character_entries(datum, chr))
    text += to_string(mu) + "  " + std::to_string(coeff) + "\n";
  emit(out, config, character_to_json(datum, chr), text);
  return 0;
}

// --- slopes ----------------------------------------------------------------

inline int run_slopes_cond(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const LeviDatum levi = need_levi(datum, config);
  SlopeConditionArgs args;
  args.kind = parse_condition_kind(need(config.params, "kind").get<std::string>());
  args.flavor =
      parse_condition_flavor(need(config.params, "flavor").get<std::string>());
  args.sign = parse_sign(need(config.params, "sign").get<std::string>());
  args.weight = vec_from_json(need(config.params, "weight"), "slopes");
  if (config.params.contains("w"))
    args.w = weyl.parse(config.params["w"].get<std::string>());
  const Vec lambda = vec_from_json(need(config.params, "lambda"), "slopes");
  const CompiledSlopeCondition cond =
      compile_slope_condition(datum, weyl, levi, args);
  const bool ok = eval_condition(datum, cond, lambda);
  json violations = json::array();
  std::string text = std::string(ok ? "satisfied" : "violated") + "\n";
  for (int at : violating_items(datum, cond, lambda)) {
    violations.push_back(cond.items[at].label);
    text += "violated at " + cond.items[at].label + "\n";
  }
  emit(out, config,
       json{{"satisfied", ok}, {"violations", violations}}, text);
  return 0;
}

inline int run_slopes_table(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const ConditionKind kind =
      parse_condition_kind(need(config.params, "variant").get<std::string>());
  const HeckeTable table = hecke_table(datum, weyl, kind);
  const std::string variant = kind == ConditionKind::ss ? "ss" : "sss";
  const RenderedTable rendered = hecke_table_rendered(table, variant);
  std::string text;
  if (config.format == "latex")
    text = render_table_latex(rendered);
  else if (config.format == "md")
    text = render_table_markdown(rendered);
  else
    text = render_table_plain(rendered);
  emit(out, config, hecke_table_to_json(table, variant), text);
  return 0;
}

inline int run_slopes_bound(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const LeviDatum levi = need_levi(datum, config);
  const int w = weyl.parse(need(config.params, "w").get<std::string>());
  const Vec kappa = vec_from_json(need(config.params, "kappa"), "slopes");
  const Sign sign = parse_sign(need(config.params, "sign").get<std::string>());
  const BoundVariant variant =
      parse_bound_variant(need(config.params, "variant").get<std::string>());
  const std::vector<Vec> bounds =
      slope_bound(datum, weyl, levi, w, kappa, sign, variant);
  json arr = json::array();
  std::string text;
  for (const Vec& b : bounds) {
    arr.push_back(vec_to_json(b));
    text += to_string(b) + "\n";
  }
  emit(out, config, json{{"bounds", arr}}, text);
  return 0;
}

// --- cousin ----------------------------------------------------------------

inline std::string descriptor_text(const CousinDescriptor& desc) {
  std::string text;
  for (int p = 0; p < static_cast<int>(desc.terms.size()); ++p) {
    text += "degree " + std::to_string(p) + ":";
    if (desc.terms[p].empty()) text += " -";
    for (const auto& term : desc.terms[p]) {
      text += " " + term.label;
      if (term.weight) text += to_string(*term.weight);
    }
    text += "\n";
  }
  return text;
}

inline int run_cousin_flag(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const Vec kappa = vec_from_json(need(config.params, "kappa"), "cousin");
  const int depth = need(config.params, "depth").get<int>();
  if (depth < 0) fail_config("cli", "cousin", "depth must be nonnegative");
  const CousinDescriptor desc = flag_cousin(datum, weyl, kappa, depth);
  emit(out, config, descriptor_to_json(desc), descriptor_text(desc));
  return 0;
}

inline int run_cousin_bwb(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const Vec kappa = vec_from_json(need(config.params, "kappa"), "cousin");
  const auto result = bwb(datum, weyl, kappa);
  json data{{"result", nullptr}};
  if (result)
    data["result"] = json{{"w", weyl.name(result->w)},
                          {"degree", result->degree},
                          {"weight", vec_to_json(result->weight)},
                          {"dimension", rat_to_json(result->dimension)}};
  // This report is JSON-shaped in every text format.
  out << data.dump() << "\n";
  return 0;
}

inline int run_cousin_ranges(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const LeviDatum levi = need_levi(datum, config);
  const Vec kappa = vec_from_json(need(config.params, "kappa"), "cousin");
  const ClassicalRanges ranges = classical_ranges(datum, weyl, levi, kappa);
  auto pair_json = [](const std::pair<int, int>& p) {
    return json::array({p.first, p.second});
  };
  auto pair_text = [](const std::pair<int, int>& p) {
    return "[" + std::to_string(p.first) + ", " + std::to_string(p.second) +
           "]";
  };
  emit(out, config,
       json{{"cuspidal", pair_json(ranges.cuspidal)},
            {"non_cuspidal", pair_json(ranges.non_cuspidal)},
            {"interior", pair_json(ranges.interior)}},
       "cuspidal " + pair_text(ranges.cuspidal) + "\nnon_cuspidal " +
           pair_text(ranges.non_cuspidal) + "\ninterior " +
           pair_text(ranges.interior) + "\n");
  return 0;
}

inline int run_cousin_shimura(const JobConfig& config, std::ostream& out) {
  const RootDatum datum = need_datum(config);
  const WeylGroup weyl(datum);
  const LeviDatum levi = need_levi(datum, config);
  const Vec kappa = vec_from_json(need(config.params, "kappa"), "cousin");
  const Sign sign = parse_sign(need(config.params, "sign").get<std::string>());
  const CousinDescriptor desc =
      shimura_cousin_shape(datum, weyl, levi, kappa, sign);
  emit(out, config, descriptor_to_json(desc), descriptor_text(desc));
  return 0;
}

// --- newton ----------------------------------------------------------------

inline int run_newton_poly(const JobConfig& config, std::ostream& out) {
  const long long p = need(config.params, "p").get<long long>();
  const PValuation val(p);
  const Vec coeffs = vec_from_json(need(config.params, "coeffs"), "newton");
  const NewtonPolygon poly = newton_polygon(val, coeffs);
  std::string text = "ord " + std::to_string(poly.ord) + ", degree " +
                     std::to_string(poly.degree) + "\n";
  for (const auto& seg : poly.segments)
    text += "slope " + to_string(seg.slope) + " length " +
            std::to_string(seg.length) + "\n";
  for (const auto& [value, mult] : root_valuations(poly))
    text += "valuation " + to_string(value) + " x" + std::to_string(mult) +
            "\n";
  emit(out, config, polygon_to_json(poly), text);
  return 0;
}

inline int run_newton_slopedim(const JobConfig& config, std::ostream& out) {
  const long long p = need(config.params, "p").get<long long>();
  const PValuation val(p);
  const Mat matrix = mat_from_json(need(config.params, "matrix"), "newton");
  const Rat h = rat_from_json(need(config.params, "h"), "newton");
  const int dim = h_slope_dimension(val, matrix, h);
  emit(out, config, json{{"dimension", dim}},
       std::to_string(dim) + "\n");
  return 0;
}

// --- check -----------------------------------------------------------------

inline int run_check(const JobConfig& config, std::ostream& out) {
  if (config.seed) randomized_check_seed() = static_cast<unsigned long long>(
                       *config.seed);
  if (config.format == "json") {
    json arr = json::array();
    bool all_ok = true;
    for (const CheckResult& r : run_all_checks(nullptr)) {
      arr.push_back(json{{"name", r.name},
                         {"passed", r.passed},
                         {"checks", r.checks},
                         {"millis", r.millis},
                         {"detail", r.detail}});
      all_ok = all_ok && r.passed;
    }
    out << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }
  bool all_ok = true;
  for (const CheckResult& r : run_all_checks(&out)) all_ok = all_ok && r.passed;
  out << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace cli_detail

// Dispatch a parsed configuration.  Returns the process exit code.
inline int run_job(const JobConfig& config, std::ostream& out) {
  cli_detail::require_format(config.format);
  if (config.command == "weyl") return cli_detail::run_weyl(config, out);
  if (config.command == "char") return cli_detail::run_char(config, out);
  if (config.command == "slopes.cond")
    return cli_detail::run_slopes_cond(config, out);
  if (config.command == "slopes.table")
    return cli_detail::run_slopes_table(config, out);
  if (config.command == "slopes.bound")
    return cli_detail::run_slopes_bound(config, out);
  if (config.command == "cousin.flag")
    return cli_detail::run_cousin_flag(config, out);
  if (config.command == "cousin.bwb")
    return cli_detail::run_cousin_bwb(config, out);
  if (config.command == "cousin.ranges")
    return cli_detail::run_cousin_ranges(config, out);
  if (config.command == "cousin.shimura")
    return cli_detail::run_cousin_shimura(config, out);
  if (config.command == "newton.poly")
    return cli_detail::run_newton_poly(config, out);
  if (config.command == "newton.slopedim")
    return cli_detail::run_newton_slopedim(config, out);
  if (config.command == "check") return cli_detail::run_check(config, out);
  fail_config("cli", "run", "unknown command '" + config.command + "'");
}

// Parse command-line arguments (program name excluded) and run.
inline int cli_run(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact root-datum, slope-condition, and character calculator"};
  app.fallthrough();
  // "--h" is a documented option of "newton slopedim", so help is long-form
  // only, on every node.
  app.set_help_flag("--help", "print help");
  auto add_sub = [](CLI::App* parent, const std::string& name,
                    const std::string& description) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  std::string config_arg;
  app.add_option("--config", config_arg,
                 "job configuration as JSON (inline or @file)");

  // Shared options; subcommands inherit them through fallthrough.
  std::string preset, levi_str, format = "plain";
  bool json_flag = false;
  app.add_option("--preset", preset,
                 "root datum: A1, A2, C2, GSp4, GSp2g:g=<n>, "
                 "product:<a>x<b>, res:<a>^<r>, or @file.json");
  app.add_option("--levi", levi_str, "comma-separated simple-root indices");
  app.add_option("--format", format, "output format: plain, md, json, latex");
  app.add_flag("--json", json_flag, "shorthand for --format json");

  std::optional<JobConfig> job;
  auto base_config = [&](std::string command) {
    JobConfig config;
    config.command = std::move(command);
    config.preset = preset;
    if (!levi_str.empty()) {
      std::istringstream in(levi_str);
      std::string item;
      while (std::getline(in, item, ','))
        config.levi.push_back(std::stoi(item));
    }
    config.format = json_flag ? "json" : format;
    return config;
  };

  // weyl
  auto* weyl_cmd = add_sub(&app, "weyl", "list minimal coset data");
  bool list_kostant = false;
  weyl_cmd->add_flag("--list-kostant", list_kostant,
                     "list the minimal coset representatives");
  weyl_cmd->callback([&] { job = base_config("weyl"); });

  // char
  auto* char_cmd = add_sub(&app, "char", "truncated formal characters");
  std::string char_variant, char_weight;
  int char_depth = 6;
  char_cmd->add_option("variant", char_variant, "verma or weyl")->required();
  char_cmd->add_option("--weight", char_weight, "highest weight")->required();
  char_cmd->add_option("--depth", char_depth, "truncation depth");
  char_cmd->callback([&] {
    job = base_config("char");
    job->params = json{{"variant", char_variant},
                       {"weight", vec_to_json(parse_vec(char_weight))},
                       {"depth", char_depth}};
  });

  // slopes
  auto* slopes_cmd = add_sub(&app, "slopes", "slope conditions and bounds");
  slopes_cmd->require_subcommand(1);

  auto* cond_cmd = add_sub(slopes_cmd, "cond", "evaluate a condition");
  std::string cond_kind = "ss", cond_flavor, cond_sign = "+";
  std::string cond_kappa, cond_nu, cond_lambda, cond_w;
  cond_cmd->add_option("--kind", cond_kind, "ss or sss");
  cond_cmd->add_option("--flavor", cond_flavor, "nu, M, Mw, or b")->required();
  cond_cmd->add_option("--sign", cond_sign, "+ or -");
  cond_cmd->add_option("--kappa", cond_kappa, "weight (chamber flavors)");
  cond_cmd->add_option("--nu", cond_nu, "weight (nu and b flavors)");
  cond_cmd->add_option("--lambda", cond_lambda, "slope vector")->required();
  cond_cmd->add_option("--w", cond_w, "minimal representative, e.g. s1s0");
  cond_cmd->callback([&] {
    job = base_config("slopes.cond");
    if (cond_kappa.empty() == cond_nu.empty())
      fail_config("cli", "slopes",
                  "give the weight as exactly one of --kappa or --nu");
    const std::string& weight = cond_kappa.empty() ? cond_nu : cond_kappa;
    job->params = json{{"kind", cond_kind},
                       {"flavor", cond_flavor},
                       {"sign", cond_sign},
                       {"weight", vec_to_json(parse_vec(weight))},
                       {"lambda", vec_to_json(parse_vec(cond_lambda))}};
    if (!cond_w.empty()) job->params["w"] = cond_w;
  });

  auto* table_cmd = add_sub(slopes_cmd, "table", "operator bound table");
  std::string table_variant = "ss";
  table_cmd->add_option("--variant", table_variant, "ss or sss");
  table_cmd->callback([&] {
    job = base_config("slopes.table");
    job->params = json{{"variant", table_variant}};
  });

  auto* bound_cmd = add_sub(slopes_cmd, "bound", "slope lower bounds");
  std::string bound_w, bound_kappa, bound_sign = "+", bound_variant = "conjectural";
  bound_cmd->add_option("--w", bound_w, "minimal representative")->required();
  bound_cmd->add_option("--kappa", bound_kappa, "weight")->required();
  bound_cmd->add_option("--sign", bound_sign, "+ or -");
  bound_cmd->add_option("--variant", bound_variant,
                        "conjectural or proven_pair");
  bound_cmd->callback([&] {
    job = base_config("slopes.bound");
    job->params = json{{"w", bound_w},
                       {"kappa", vec_to_json(parse_vec(bound_kappa))},
                       {"sign", bound_sign},
                       {"variant", bound_variant}};
  });

  // cousin
  auto* cousin_cmd = add_sub(&app, "cousin", "descriptor computations");
  cousin_cmd->require_subcommand(1);

  auto* flag_cmd = add_sub(cousin_cmd, "flag", "full-flag descriptor");
  std::string flag_kappa;
  int flag_depth = 6;
  flag_cmd->add_option("--kappa", flag_kappa, "weight")->required();
  flag_cmd->add_option("--depth", flag_depth, "character truncation depth");
  flag_cmd->callback([&] {
    job = base_config("cousin.flag");
    job->params = json{{"kappa", vec_to_json(parse_vec(flag_kappa))},
                       {"depth", flag_depth}};
  });

  auto* bwb_cmd = add_sub(cousin_cmd, "bwb",
                          "dominant twist in the shifted orbit, if any");
  std::string bwb_kappa;
  bwb_cmd->add_option("--kappa", bwb_kappa, "weight")->required();
  bwb_cmd->callback([&] {
    job = base_config("cousin.bwb");
    job->params = json{{"kappa", vec_to_json(parse_vec(bwb_kappa))}};
  });

  auto* ranges_cmd = add_sub(cousin_cmd, "ranges", "contribution degree ranges");
  std::string ranges_kappa;
  ranges_cmd->add_option("--kappa", ranges_kappa, "weight")->required();
  ranges_cmd->callback([&] {
    job = base_config("cousin.ranges");
    job->params = json{{"kappa", vec_to_json(parse_vec(ranges_kappa))}};
  });

  auto* shimura_cmd = add_sub(cousin_cmd, "shimura", "degree-wise descriptor shape");
  std::string shimura_kappa, shimura_sign = "+";
  shimura_cmd->add_option("--kappa", shimura_kappa, "weight")->required();
  shimura_cmd->add_option("--sign", shimura_sign, "+ or -");
  shimura_cmd->callback([&] {
    job = base_config("cousin.shimura");
    job->params = json{{"kappa", vec_to_json(parse_vec(shimura_kappa))},
                       {"sign", shimura_sign}};
  });

  // newton
  auto* newton_cmd = add_sub(&app, "newton", "valuation polygons");
  newton_cmd->require_subcommand(1);

  auto* poly_cmd = add_sub(newton_cmd, "poly", "polygon of a polynomial");
  long long poly_p = 0;
  std::string poly_coeffs;
  poly_cmd->add_option("--p", poly_p, "prime")->required();
  poly_cmd->add_option("--coeffs", poly_coeffs,
                       "coefficients, ascending degree")->required();
  poly_cmd->callback([&] {
    job = base_config("newton.poly");
    job->params = json{{"p", poly_p},
                       {"coeffs", vec_to_json(parse_vec(poly_coeffs))}};
  });

  auto* dim_cmd = add_sub(newton_cmd, "slopedim",
                          "dimension of the slope-le-h part");
  long long dim_p = 0;
  std::string dim_matrix, dim_h;
  dim_cmd->add_option("--p", dim_p, "prime")->required();
  dim_cmd->add_option("--matrix", dim_matrix, "matrix JSON (inline or @file)")
      ->required();
  dim_cmd->add_option("--h", dim_h, "slope cutoff (rational)")->required();
  dim_cmd->callback([&] {
    job = base_config("newton.slopedim");
    job->params = json{{"p", dim_p},
                       {"matrix", read_json_argument(dim_matrix, "newton")},
                       {"h", rat_to_json(parse_rat(dim_h))}};
  });

  // check
  auto* check_cmd = add_sub(&app, "check", "run the property suites");
  long long check_seed = -1;
  check_cmd->add_option("--seed", check_seed,
                        "seed for the randomized valuation sweep");
  check_cmd->callback([&] {
    job = base_config("check");
    if (check_seed >= 0) job->seed = check_seed;
  });

  try {
    std::vector<std::string> argv_storage = args;
    argv_storage.insert(argv_storage.begin(), "cousin");
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (std::string& s : argv_storage) argv.push_back(s.data());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (!config_arg.empty()) {
      if (job)
        fail_config("cli", "config",
                    "give either --config or a subcommand, not both");
      job = job_from_json(read_json_argument(config_arg, "config"));
    }
    if (!job) {
      err << app.help();
      return 2;
    }
    return run_job(*job, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: [cli/parse] (config) " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

}  // namespace cousin
