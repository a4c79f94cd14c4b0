// Copyright 2026 The maxspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxspec/maxspec.h"

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Exit with this code after the message has been printed.
struct Exit {
  int code;
};

[[noreturn]] void usage_error(const std::string& flags, const std::string& what) {
  std::fprintf(stderr, "maxspec: %s: %s\n", flags.c_str(), what.c_str());
  throw Exit{1};
}

void check(maxspec_status s, const char* flags) {
  if (s == MAXSPEC_OK) return;
  std::fprintf(stderr, "maxspec: %s: %s [%s]\n", flags, maxspec_last_error(),
               maxspec_status_name(s));
  const bool usage = s == MAXSPEC_INVALID_ARGUMENT || s == MAXSPEC_EMPTY_RANGE;
  throw Exit{usage ? 1 : 2};
}

struct StringFree {
  void operator()(char* s) const { maxspec_string_free(s); }
};
struct RootsFree {
  void operator()(maxspec_roots* r) const { maxspec_roots_destroy(r); }
};
struct ModelFree {
  void operator()(maxspec_model* m) const { maxspec_model_destroy(m); }
};
struct SweepFree {
  void operator()(maxspec_sweep* s) const { maxspec_sweep_destroy(s); }
};
using Roots = std::unique_ptr<maxspec_roots, RootsFree>;
using Model = std::unique_ptr<maxspec_model, ModelFree>;
using SweepHandle = std::unique_ptr<maxspec_sweep, SweepFree>;

std::string take(char* s) {
  std::unique_ptr<char, StringFree> holder(s);
  return s == nullptr ? std::string() : std::string(s);
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) j = std::strtod(number(v).c_str(), nullptr);
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

std::string dump(json j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) usage_error("--output", "cannot write " + path);
}

// Rows of a CSV without its header line.
std::string csv_body(const std::string& csv) {
  const auto nl = csv.find('\n');
  return nl == std::string::npos ? std::string() : csv.substr(nl + 1);
}

struct Params {
  std::string config;
  std::string output;
  std::string trajectories;
  std::string out_dir = "figure-data";

  std::string variant = "conductive";
  double L2 = 1.0, L3 = 2.0;
  double delta = 10.0;
  double X = kNaN;
  std::vector<double> X_list = {10, 20, 40, 80};
  std::vector<double> re, im;
  bool mirror = true;
  double c_max = 0.0;
  double residual_tol = 1e-10;
  double match_radius = 0.25;
  double tol = 1e-6;

  double eps_min = 1, eps_max = 1, mu_min = 1, mu_max = 1;
  double sigma_min = 0, sigma_max = 1;
  double lambda_min = kNaN, lambda_e_min = kNaN;
  double eps_inf = 1, mu_inf = 1;
  int samples = 201;
  int nx = 161, ny = 101;
};

void add_config(CLI::App* sub, Params& p) {
  sub->add_option("--config", p.config, "JSON config file ({\"schema\": 1, ...}); flags override it");
}

void add_output(CLI::App* sub, Params& p) {
  sub->add_option("-o,--output", p.output, "Output file (default: stdout)");
}

void add_model(CLI::App* sub, Params& p) {
  sub->add_option("--variant", p.variant, "conductive or permittivity")
      ->check(CLI::IsMember({"conductive", "permittivity"}));
  sub->add_option("--L2", p.L2, "Cross-section side L2");
  sub->add_option("--L3", p.L3, "Cross-section side L3");
  sub->add_option("--delta", p.delta, "Permittivity contrast (permittivity variant)");
}

void add_rect(CLI::App* sub, Params& p, bool mirror) {
  sub->add_option("--re", p.re, "Search window real range LO HI")->expected(2);
  sub->add_option("--im", p.im, "Search window imaginary range LO HI")->expected(2);
  sub->add_option("--c-max", p.c_max, "Largest mode constant (default: from the window)");
  sub->add_option("--residual-tol", p.residual_tol, "Residual tolerance for accepted roots");
  if (mirror) sub->add_option("--mirror", p.mirror, "Also search the mirrored window");
}

void add_sweep(CLI::App* sub, Params& p) {
  sub->add_option("--X-list", p.X_list, "Ascending truncation lengths");
  sub->add_option("--match-radius", p.match_radius, "Largest link between consecutive X");
}

void add_bounds(CLI::App* sub, Params& p) {
  sub->add_option("--eps-min", p.eps_min);
  sub->add_option("--eps-max", p.eps_max);
  sub->add_option("--mu-min", p.mu_min);
  sub->add_option("--mu-max", p.mu_max);
  sub->add_option("--sigma-min", p.sigma_min);
  sub->add_option("--sigma-max", p.sigma_max);
  sub->add_option("--lambda-min", p.lambda_min, "Default: pi^2/max(L2,L3)^2");
  sub->add_option("--lambda-e-min", p.lambda_e_min, "Default: pi^2/max(L2,L3)^2");
  sub->add_option("--L2", p.L2, "Cross-section side, for the lambda defaults");
  sub->add_option("--L3", p.L3, "Cross-section side, for the lambda defaults");
}

void build(CLI::App& app, Params& p) {
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(maxspec_version()));

  auto* enc = app.add_subcommand("enclosure", "Enclosure boundary samples (CSV)");
  add_config(enc, p);
  add_output(enc, p);
  add_bounds(enc, p);
  enc->add_option("--im", p.im, "Imaginary range LO HI (default: [-sigma_max/eps_min, 0])")
      ->expected(2);
  enc->add_option("--samples", p.samples, "Samples per branch");

  auto* res = app.add_subcommand("resolvent-grid", "Resolvent bound on a grid (CSV)");
  add_config(res, p);
  add_output(res, p);
  add_bounds(res, p);
  res->add_option("--re", p.re, "Real range LO HI (default: -4 4)")->expected(2);
  res->add_option("--im", p.im, "Imaginary range LO HI (default: -5 0)")->expected(2);
  res->add_option("--nx", p.nx);
  res->add_option("--ny", p.ny);

  auto* ess = app.add_subcommand("essential-spectrum", "Essential spectrum (JSON)");
  add_config(ess, p);
  add_output(ess, p);
  add_model(ess, p);

  auto* pol = app.add_subcommand("pollution-set", "Possible pollution set (JSON)");
  add_config(pol, p);
  add_output(pol, p);
  pol->add_option("--eps-inf", p.eps_inf);
  pol->add_option("--mu-inf", p.mu_inf);
  pol->add_option("--lambda-e-min", p.lambda_e_min, "Default: pi^2/max(L2,L3)^2");
  pol->add_option("--sigma-max", p.sigma_max);
  pol->add_option("--eps-min", p.eps_min);
  pol->add_option("--L2", p.L2);
  pol->add_option("--L3", p.L3);

  auto* eigs = app.add_subcommand("eigs", "Eigenvalues of the half-infinite waveguide (CSV)");
  add_config(eigs, p);
  add_output(eigs, p);
  add_model(eigs, p);
  add_rect(eigs, p, true);

  auto* eigt = app.add_subcommand("eigs-truncated", "Eigenvalues of the truncated waveguide (CSV)");
  add_config(eigt, p);
  add_output(eigt, p);
  add_model(eigt, p);
  add_rect(eigt, p, true);
  eigt->add_option("--X", p.X, "Truncation length (> 1)");

  auto* sw = app.add_subcommand("sweep", "Truncated eigenvalues over X, linked (CSV)");
  add_config(sw, p);
  add_output(sw, p);
  add_model(sw, p);
  add_rect(sw, p, false);
  add_sweep(sw, p);
  sw->add_option("--trajectories", p.trajectories, "Also write the trajectories CSV here");

  auto* rep = app.add_subcommand("pollution-report", "Classify sweep limits (JSON)");
  add_config(rep, p);
  add_output(rep, p);
  add_model(rep, p);
  add_rect(rep, p, false);
  add_sweep(rep, p);
  rep->add_option("--tol", p.tol, "Convergence tolerance");

  auto* app_checks = app.add_subcommand("appendix-checks", "Appendix checks (JSON)");
  add_config(app_checks, p);
  add_output(app_checks, p);

  auto* fig = app.add_subcommand("figure-data", "Write the figure inputs to a directory");
  add_config(fig, p);
  fig->add_option("--out-dir", p.out_dir, "Output directory");
}

// Command-line tokens for config entries whose flags were not given.
std::vector<std::string> config_tokens(const CLI::App& sub) {
  std::vector<std::string> tokens;
  const CLI::Option* opt = sub.get_option_no_throw("--config");
  if (opt == nullptr || opt->count() == 0) return tokens;
  const std::string path = opt->as<std::string>();
  std::ifstream in(path);
  if (!in) usage_error("--config", "cannot read " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    usage_error("--config", std::string("malformed JSON: ") + e.what());
  }
  if (!cfg.is_object()) usage_error("--config", "top level must be an object");
  if (!cfg.contains("schema") || cfg["schema"] != 1) {
    usage_error("--config", "unsupported schema (expected \"schema\": 1)");
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "schema") continue;
    if (key == "command") {
      if (value != sub.get_name()) usage_error("--config", "config is for command " + value.dump());
      continue;
    }
    const CLI::Option* target = sub.get_option_no_throw("--" + key);
    if (target == nullptr || key == "config") {
      usage_error("--config", "unknown key \"" + key + "\" for " + sub.get_name());
    }
    if (target->count() > 0) continue;
    tokens.push_back("--" + key);
    auto add = [&](const json& v) {
      if (v.is_string()) {
        tokens.push_back(v.get<std::string>());
      } else if (v.is_boolean()) {
        tokens.push_back(v.get<bool>() ? "true" : "false");
      } else if (v.is_number_integer()) {
        tokens.push_back(std::to_string(v.get<long long>()));
      } else if (v.is_number()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        tokens.push_back(buf);
      } else {
        usage_error("--config", "bad value for \"" + key + "\"");
      }
    };
    if (value.is_array()) {
      for (const json& v : value) add(v);
    } else {
      add(value);
    }
  }
  return tokens;
}

maxspec_bounds bounds_of(const Params& p) {
  const double L = std::max(p.L2, p.L3);
  const double lambda = M_PI * M_PI / (L * L);
  maxspec_bounds b;
  b.eps_min = p.eps_min;
  b.eps_max = p.eps_max;
  b.mu_min = p.mu_min;
  b.mu_max = p.mu_max;
  b.sigma_min = p.sigma_min;
  b.sigma_max = p.sigma_max;
  b.lambda_min = std::isnan(p.lambda_min) ? lambda : p.lambda_min;
  b.lambda_e_min = std::isnan(p.lambda_e_min) ? lambda : p.lambda_e_min;
  return b;
}

maxspec_variant variant_of(const Params& p) {
  return p.variant == "permittivity" ? MAXSPEC_PERMITTIVITY : MAXSPEC_CONDUCTIVE;
}

Model model_of(const Params& p) {
  maxspec_model* m = nullptr;
  check(maxspec_model_create(variant_of(p), p.L2, p.L3, p.delta, &m), "--variant/--L2/--L3/--delta");
  return Model(m);
}

// Lower end of the essential spectrum on the positive real axis.
double essential_threshold(const Params& p) {
  char* s = nullptr;
  check(maxspec_essential_spectrum_json(variant_of(p), p.L2, p.L3, &s), "--L2/--L3");
  const json j = json::parse(take(s));
  double lo = std::numeric_limits<double>::infinity();
  for (const json& iv : j["real"]) {
    if (iv[0].is_number() && iv[0].get<double>() > 0.0) lo = std::min(lo, iv[0].get<double>());
  }
  return lo;
}

maxspec_rect rect_of(const Params& p) {
  maxspec_rect r;
  if (variant_of(p) == MAXSPEC_CONDUCTIVE) {
    r = {0.05, 8.0, -0.55, -0.005};
  } else {
    r = {0.01, p.re.empty() ? essential_threshold(p) - 1e-6 : 0.0, -1e-6, 1e-6};
  }
  if (!p.re.empty()) {
    r.re_lo = p.re[0];
    r.re_hi = p.re[1];
  }
  if (!p.im.empty()) {
    r.im_lo = p.im[0];
    r.im_hi = p.im[1];
  }
  return r;
}

maxspec_root_options options_of(const Params& p) {
  maxspec_root_options o = maxspec_root_options_default();
  o.residual_tol = p.residual_tol;
  return o;
}

Roots eigenvalues(const maxspec_model* m, maxspec_rect r, const Params& p) {
  maxspec_roots* roots = nullptr;
  const maxspec_root_options o = options_of(p);
  check(maxspec_eigenvalues(m, r, p.c_max, &o, &roots), "--re/--im/--c-max");
  return Roots(roots);
}

// CSV of the roots in the window and, if requested, in its mirror image.
std::string eigs_csv(const maxspec_model* m, const Params& p) {
  const maxspec_rect r = rect_of(p);
  const Roots main = eigenvalues(m, r, p);
  char* s = nullptr;
  check(maxspec_roots_csv(main.get(), &s), "--output");
  const std::string csv = take(s);
  if (!p.mirror || r.re_lo <= 0.0) return csv;
  const Roots mirrored = eigenvalues(m, {-r.re_hi, -r.re_lo, r.im_lo, r.im_hi}, p);
  check(maxspec_roots_csv(mirrored.get(), &s), "--output");
  const std::string left = take(s);
  return left + csv_body(csv);
}

void set_truncation(maxspec_model* m, double X) {
  if (std::isnan(X)) usage_error("--X", "required (truncation length > 1)");
  check(maxspec_model_set_truncation(m, X), "--X");
}

SweepHandle run_sweep(const maxspec_model* m, const Params& p) {
  const maxspec_root_options o = options_of(p);
  maxspec_sweep* s = nullptr;
  check(maxspec_sweep_run(m, p.X_list.data(), p.X_list.size(), rect_of(p), p.c_max,
                          p.match_radius, &o, &s),
        "--X-list/--re/--im/--match-radius");
  return SweepHandle(s);
}

void cmd_enclosure(const Params& p) {
  const maxspec_bounds b = bounds_of(p);
  const double lo = p.im.empty() ? -p.sigma_max / p.eps_min : p.im[0];
  const double hi = p.im.empty() ? 0.0 : p.im[1];
  char* s = nullptr;
  check(maxspec_enclosure_boundary_csv(&b, lo, hi, p.samples, &s), "--im/--samples/bounds");
  write_text(take(s), p.output);
}

void cmd_resolvent(const Params& p) {
  const maxspec_bounds b = bounds_of(p);
  maxspec_rect w{-4.0, 4.0, -5.0, 0.0};
  if (!p.re.empty()) w.re_lo = p.re[0], w.re_hi = p.re[1];
  if (!p.im.empty()) w.im_lo = p.im[0], w.im_hi = p.im[1];
  char* s = nullptr;
  check(maxspec_resolvent_grid_csv(&b, w, p.nx, p.ny, &s), "--re/--im/--nx/--ny/bounds");
  write_text(take(s), p.output);
}

void cmd_essential(const Params& p) {
  char* s = nullptr;
  check(maxspec_essential_spectrum_json(variant_of(p), p.L2, p.L3, &s), "--variant/--L2/--L3");
  write_text(take(s), p.output);
}

void cmd_pollution_set(const Params& p) {
  const double lambda = std::isnan(p.lambda_e_min) ? bounds_of(p).lambda_e_min : p.lambda_e_min;
  char* s = nullptr;
  check(maxspec_pollution_set_json(p.eps_inf, p.mu_inf, lambda, p.sigma_max, p.eps_min, &s),
        "--eps-inf/--mu-inf/--lambda-e-min/--sigma-max/--eps-min");
  write_text(take(s), p.output);
}

void cmd_eigs(const Params& p, bool truncated) {
  Model m = model_of(p);
  if (truncated) set_truncation(m.get(), p.X);
  write_text(eigs_csv(m.get(), p), p.output);
}

void cmd_sweep(const Params& p) {
  Model m = model_of(p);
  SweepHandle s = run_sweep(m.get(), p);
  char* text = nullptr;
  check(maxspec_sweep_csv(s.get(), &text), "--output");
  write_text(take(text), p.output);
  if (!p.trajectories.empty()) {
    check(maxspec_sweep_trajectories_csv(s.get(), &text), "--trajectories");
    std::ofstream out(p.trajectories, std::ios::binary);
    out << take(text);
    if (!out) usage_error("--trajectories", "cannot write " + p.trajectories);
  }
}

void cmd_pollution_report(const Params& p) {
  Model m = model_of(p);
  const Roots truth = eigenvalues(m.get(), rect_of(p), p);
  SweepHandle s = run_sweep(m.get(), p);
  char* text = nullptr;
  check(maxspec_pollution_report(s.get(), truth.get(), p.tol, nullptr, &text), "--tol");
  json j = json::parse(take(text));
  const maxspec_rect r = rect_of(p);
  j["rect"] = {r.re_lo, r.re_hi, r.im_lo, r.im_hi};
  j["true_eigenvalues"] = maxspec_roots_count(truth.get());
  write_text(dump(j), p.output);
}

void cmd_appendix(const Params& p) {
  char* s = nullptr;
  check(maxspec_appendix_checks_json(&s, nullptr), "appendix-checks");
  write_text(take(s), p.output);
}

void cmd_figure_data(const Params& p) {
  std::error_code ec;
  std::filesystem::create_directories(p.out_dir, ec);
  if (ec) usage_error("--out-dir", "cannot create " + p.out_dir);
  const std::string dir = p.out_dir + "/";
  json manifest = {{"schema", 1}, {"version", maxspec_version()}, {"files", json::object()}};
  auto save = [&](const std::string& name, const std::string& text, json info) {
    Params q = p;
    q.output = dir + name;
    write_text(text, q.output);
    manifest["files"][name] = std::move(info);
  };

  static const char* const kCaseNames[] = {"below_i", "case_i", "case_ii", "case_iii"};
  // Enclosure in the three threshold cases: eps = mu = 1, sigma in [0, 1].
  const char* case_names[] = {"i", "ii", "iii"};
  const double case_lambda[] = {0.2, 0.3, 0.5};
  for (int k = 0; k < 3; ++k) {
    Params q = p;
    q.sigma_max = 1.0;
    q.lambda_min = q.lambda_e_min = case_lambda[k];
    const maxspec_bounds b = bounds_of(q);
    maxspec_threshold_case c;
    check(maxspec_threshold_case_of(&b, &c), "bounds");
    char* s = nullptr;
    check(maxspec_enclosure_boundary_csv(&b, -1.0, 0.0, p.samples, &s), "--samples");
    save(std::string("enclosure_case_") + case_names[k] + ".csv", take(s),
         {{"plot", "enclosure_cases"}, {"sigma_max", 1.0}, {"lambda_min", case_lambda[k]},
          {"threshold_case", kCaseNames[c]}});
  }

  {
    Params q = p;
    q.sigma_max = 2.0;
    const maxspec_bounds b = bounds_of(q);
    char* s = nullptr;
    check(maxspec_resolvent_grid_csv(&b, {-4.0, 4.0, -5.0, 0.0}, p.nx, p.ny, &s), "--nx/--ny");
    save("resolvent_grid.csv", take(s),
         {{"plot", "resolvent_levels"}, {"sigma_max", 2.0}, {"window", {-4.0, 4.0, -5.0, 0.0}}});
  }

  Params q = p;
  q.variant = "conductive";
  q.re.clear();
  q.im.clear();
  q.mirror = true;
  {
    const maxspec_bounds b = bounds_of(q);
    char* s = nullptr;
    check(maxspec_enclosure_boundary_csv(&b, -1.0, 0.0, p.samples, &s), "--samples");
    save("enclosure_waveguide.csv", take(s),
         {{"plot", json::array({"spectrum", "truncated_spectrum"})}, {"sigma_max", q.sigma_max},
          {"lambda_min", b.lambda_min}});
    check(maxspec_essential_spectrum_json(MAXSPEC_CONDUCTIVE, q.L2, q.L3, &s), "--L2/--L3");
    save("essential_spectrum.json", take(s), {{"plot", json::array({"spectrum", "truncated_spectrum"})}});
  }
  const maxspec_rect r = rect_of(q);
  const json rects = {{-r.re_hi, -r.re_lo, r.im_lo, r.im_hi}, {r.re_lo, r.re_hi, r.im_lo, r.im_hi}};
  Model m = model_of(q);
  save("eigenvalues_true.csv", eigs_csv(m.get(), q),
       {{"plot", "spectrum"}, {"L2", q.L2}, {"L3", q.L3}, {"rects", rects}});
  set_truncation(m.get(), 50.0);
  save("eigenvalues_X50.csv", eigs_csv(m.get(), q),
       {{"plot", "truncated_spectrum"}, {"X", 50.0}, {"L2", q.L2}, {"L3", q.L3}, {"rects", rects},
        {"zoom", {0.0, 1.5 * M_PI, -0.1, 0.0}}});
  const std::string text = dump(manifest);
  write_text(text, dir + "manifest.json");
  write_text(text, "");
}

int run(int argc, char** argv) {
  Params first;
  CLI::App probe{"maxspec: spectra of the dissipative Maxwell pencil on waveguides"};
  build(probe, first);
  try {
    probe.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return probe.exit(e) == 0 ? 0 : 1;
  }
  const CLI::App* chosen = probe.get_subcommands().front();

  std::vector<std::string> args(argv + 1, argv + argc);
  const std::vector<std::string> extra = config_tokens(*chosen);
  args.insert(args.end(), extra.begin(), extra.end());
  std::reverse(args.begin(), args.end());

  Params p;
  CLI::App app{"maxspec: spectra of the dissipative Maxwell pencil on waveguides"};
  build(app, p);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "enclosure") cmd_enclosure(p);
  else if (name == "resolvent-grid") cmd_resolvent(p);
  else if (name == "essential-spectrum") cmd_essential(p);
  else if (name == "pollution-set") cmd_pollution_set(p);
  else if (name == "eigs") cmd_eigs(p, false);
  else if (name == "eigs-truncated") cmd_eigs(p, true);
  else if (name == "sweep") cmd_sweep(p);
  else if (name == "pollution-report") cmd_pollution_report(p);
  else if (name == "appendix-checks") cmd_appendix(p);
  else if (name == "figure-data") cmd_figure_data(p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "maxspec: %s\n", e.what());
    return 2;
  }
}
