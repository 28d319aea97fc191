#include "darboux/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "darboux/bessel.hpp"
#include "darboux/chain.hpp"
#include "darboux/potentials.hpp"
#include "darboux/seed_parser.hpp"
#include "darboux/spectral.hpp"
#include "darboux/version.hpp"

namespace darboux::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertification = 2;

struct Options {
  int m = 1;
  int n = 0;
  double k = 1.0;
  int target_k = 0;
  int levels = 4;
  int points = 50;
  int grid = 20000;
  std::vector<double> interval;
  std::string out_path;
  std::string format = "json";
  std::string potential = "tdpt";
  std::vector<std::string> seed_exprs;
};

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
    f << text;
  } else {
    out << text;
  }
}

ordered_json envelope(const std::string& command, ordered_json payload, double wall_ms) {
  ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["payload"] = std::move(payload);
  j["wall_ms"] = wall_ms;
  return j;
}

PotentialFn potential_fn(const std::string& name, int m, int n) {
  if (name == "tdpt")
    return [p = tdpt_potential(m, n)](double x) { return static_cast<double>(p.eval(x)); };
  if (name == "bessel")
    return [p = bessel_potential(m)](double x) { return static_cast<double>(p.eval(x)); };
  return [](double) { return 0.0; };
}

ordered_json spectral_json(const SpectralResult& r) {
  ordered_json j;
  j["eigenvalues"] = r.eigenvalues;
  j["node_counts"] = r.node_counts;
  j["residuals"] = r.residuals;
  j["config"] = {{"grid_points", r.config_echo.grid_points},
                 {"interval", {r.config_echo.lo, r.config_echo.hi}},
                 {"wall_offset", r.config_echo.wall_offset},
                 {"eigen_count", r.config_echo.eigen_count},
                 {"tolerance", r.config_echo.tolerance},
                 {"method", r.config_echo.method == SolverConfig::Method::NumerovShooting
                                ? "numerov-shooting"
                                : "finite-difference-matrix"}};
  return j;
}

int cmd_verify_gm(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  WronskianRepCertificate cert = verify_tdpt_wronskian(opt.m, opt.n);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(envelope("verify-gm", cert.to_json(), ms).dump(2) + "\n", opt, out);
  return cert.identity_verified ? kExitOk : kExitCertification;
}

int cmd_verify_si(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  ShapeInvarianceCertificate cert = verify_shape_invariance(opt.m, opt.n);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(envelope("verify-si", cert.to_json(), ms).dump(2) + "\n", opt, out);
  return cert.ok() ? kExitOk : kExitCertification;
}

int cmd_chain(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  ChainSpec chain;
  ordered_json scales = ordered_json::array();
  if (!opt.seed_exprs.empty()) {
    for (const auto& text : opt.seed_exprs) {
      auto ast = parse_seed(text);
      auto [spec, scale] = to_seed_spec(ast);
      chain.seeds.push_back(spec);
      scales.push_back(scale.str());
    }
  } else {
    chain = tdpt_seed_chain(opt.m, opt.n);
  }

  int k = opt.target_k;
  if (k == 0) {
    // Smallest free level not used by a seed.
    for (k = 1;; ++k) {
      bool used = false;
      for (const auto& s : chain.seeds)
        if (s.kind == SeedSpec::Kind::SinK && s.k == k) used = true;
      if (!used) break;
    }
  }
  CrumStepwiseComparison cmp = verify_crum_vs_stepwise(chain, SeedSpec::sin_k(k));
  ordered_json payload = cmp.to_json();
  if (!scales.empty()) payload["seed_scales"] = scales;
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(envelope("chain", std::move(payload), ms).dump(2) + "\n", opt, out);
  return cmp.ok() ? kExitOk : kExitCertification;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  SolverConfig cfg;
  cfg.grid_points = opt.grid;
  cfg.eigen_count = opt.levels;
  if (opt.interval.size() == 2) {
    cfg.lo = opt.interval[0];
    cfg.hi = opt.interval[1];
  } else if (opt.potential == "tdpt") {
    cfg.lo = 0.0;
    cfg.hi = opt.n == 0 ? M_PI : M_PI / 2;
  } else if (opt.potential == "bessel") {
    cfg.lo = 0.0;
    cfg.hi = 10.0;
  } else {
    cfg.lo = 0.0;
    cfg.hi = M_PI;
  }
  SpectralResult r = solve_dirichlet(potential_fn(opt.potential, opt.m, opt.n), cfg);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (opt.format == "csv") {
    std::ostringstream os;
    os.precision(15);
    os << "index,eigenvalue,nodes,residual\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      os << i << "," << r.eigenvalues[i] << "," << r.node_counts[i] << "," << r.residuals[i]
         << "\n";
    emit(os.str(), opt, out);
  } else {
    ordered_json payload = spectral_json(r);
    payload["potential"] = {{"family", opt.potential}, {"m", opt.m}, {"n", opt.n}};
    emit(envelope("spectrum", std::move(payload), ms).dump(2) + "\n", opt, out);
  }
  return kExitOk;
}

int cmd_bessel(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  if (opt.format == "csv") {
    std::ostringstream os;
    write_bessel_comparison_csv(os, opt.m, opt.k, opt.points);
    emit(os.str(), opt, out);
    return kExitOk;
  }
  auto rows = bessel_comparison_table(opt.m, opt.k, opt.points);
  // Fit the per-route proportionality constants against the oracle and
  // report the worst relative deviation.
  double num_w = 0, den_w = 0, num_o = 0, den_o = 0;
  for (const auto& r : rows) {
    num_w += r.wronskian_route * r.bessel_oracle;
    den_w += r.bessel_oracle * r.bessel_oracle;
    num_o += r.operator_route * r.bessel_oracle;
    den_o += r.bessel_oracle * r.bessel_oracle;
  }
  double cw = den_w > 0 ? num_w / den_w : 0.0;
  double co = den_o > 0 ? num_o / den_o : 0.0;
  double scale = 0.0, worst = 0.0;
  for (const auto& r : rows) scale = std::max(scale, std::fabs(r.bessel_oracle));
  for (const auto& r : rows) {
    worst = std::max(worst, std::fabs(r.wronskian_route - cw * r.bessel_oracle) / (scale * std::fabs(cw) + 1e-300));
    worst = std::max(worst, std::fabs(r.operator_route - co * r.bessel_oracle) / (scale * std::fabs(co) + 1e-300));
  }
  ordered_json payload;
  payload["m"] = opt.m;
  payload["k"] = opt.k;
  payload["points"] = opt.points;
  payload["wronskian_vs_oracle_constant"] = cw;
  payload["operator_vs_oracle_constant"] = co;
  payload["max_relative_deviation"] = worst;
  ordered_json table = ordered_json::array();
  for (const auto& r : rows)
    table.push_back({{"x", r.x},
                     {"wronskian_route", r.wronskian_route},
                     {"operator_route", r.operator_route},
                     {"bessel_oracle", r.bessel_oracle}});
  payload["table"] = std::move(table);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(envelope("bessel", std::move(payload), ms).dump(2) + "\n", opt, out);
  return worst < 1e-6 ? kExitOk : kExitCertification;
}

int cmd_filter_predict(const Options& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  ChainSpec chain = tdpt_seed_chain(opt.m, opt.n);
  auto levels = predict_filtered_spectrum(chain, opt.levels);
  ordered_json payload;
  payload["params"] = {{"family", "tdpt"}, {"m", opt.m}, {"n", opt.n}};
  payload["max_level"] = opt.levels;
  ordered_json arr = ordered_json::array();
  for (const auto& l : levels)
    arr.push_back({{"k", l.k}, {"energy", l.energy}, {"label", l.label}});
  payload["levels"] = std::move(arr);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(envelope("filter-predict", std::move(payload), ms).dump(2) + "\n", opt, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Darboux chain and Wronskian certification tool"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "Write the report to this path instead of stdout");
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* verify_gm = app.add_subcommand(
      "verify-gm", "Certify the Wronskian representation of V(x;m,n)");
  verify_gm->add_option("--m", opt.m)->required();
  verify_gm->add_option("--n", opt.n)->required();
  add_common(verify_gm);

  CLI::App* verify_si = app.add_subcommand(
      "verify-si", "Certify shape invariance of V(x;m,n) from its exact ground state");
  verify_si->add_option("--m", opt.m)->required();
  verify_si->add_option("--n", opt.n)->required();
  add_common(verify_si);

  CLI::App* chain = app.add_subcommand(
      "chain", "Compare the stepwise operator chain against the Wronskian ratio");
  chain->add_option("--m", opt.m);
  chain->add_option("--n", opt.n);
  chain->add_option("--k", opt.target_k, "Target wavenumber (default: smallest unused)");
  chain->add_option("--seed", opt.seed_exprs, "Explicit seed expressions, e.g. sin(2x)");
  add_common(chain);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Numerov Dirichlet spectrum of a constructed potential");
  spectrum->add_option("--potential", opt.potential)
      ->check(CLI::IsMember({"tdpt", "bessel", "zero"}));
  spectrum->add_option("--m", opt.m);
  spectrum->add_option("--n", opt.n);
  spectrum->add_option("--levels", opt.levels);
  spectrum->add_option("--grid", opt.grid);
  spectrum->add_option("--interval", opt.interval)->expected(2);
  add_common(spectrum);

  CLI::App* bessel = app.add_subcommand(
      "bessel", "Three-way Bessel eigenstate comparison table");
  bessel->add_option("--m", opt.m)->required();
  bessel->add_option("--k", opt.k);
  bessel->add_option("--points", opt.points);
  add_common(bessel);

  CLI::App* filter = app.add_subcommand(
      "filter-predict", "Predicted surviving free levels for a seed chain");
  filter->add_option("--m", opt.m)->required();
  filter->add_option("--n", opt.n)->required();
  filter->add_option("--levels", opt.levels, "Highest free wavenumber to consider");
  add_common(filter);

  std::vector<const char*> cargv;
  cargv.push_back("darboux");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify_gm->parsed()) return cmd_verify_gm(opt, out);
    if (verify_si->parsed()) return cmd_verify_si(opt, out);
    if (chain->parsed()) return cmd_chain(opt, out);
    if (spectrum->parsed()) return cmd_spectrum(opt, out);
    if (bessel->parsed()) return cmd_bessel(opt, out);
    if (filter->parsed()) return cmd_filter_predict(opt, out);
  } catch (const SeedParseError& e) {
    err << "seed expression error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCertification;
  }
  return kExitUsage;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace darboux::cli
