// faberzeros: zeros of Faber polynomials of Joukowski airfoils, their
// predicted limit sets and measures, verification gates and SVG figures.
//
//   faberzeros zeros   --R 1.26 --theta 0 --n 20,70
//   faberzeros predict --paper-figure 3
//   faberzeros verify  --R 2.1 --n 25,50,100
//   faberzeros plot    --R 2.1 --n 70 --out figs
//
// Exit codes: 0 success, 1 verification failure, 2 parameter error,
// 3 numerical failure.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "faber/cli.hpp"

namespace {

struct RawOptions {
  std::map<std::string, std::string> values;  // config key -> flag text
  std::vector<std::string> tol;               // name=value
  std::string config;
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
  struct OptionDef {
    const char* flag;
    const char* key;
    const char* help;
  };
  static const OptionDef defs[] = {
      {"--R", "R", "Airfoil parameter R (> 1, R cos(theta) > 1)"},
      {"--theta", "theta", "Airfoil angle theta in (-pi/2, pi/2), default 0"},
      {"--n", "n", "Comma-separated degrees, each 1..500 (default 70)"},
      {"--out", "out", "Output directory (default .)"},
      {"--format", "format", "Comma list of csv,json,svg (default csv,json)"},
      {"--seed-method", "seed_method", "auto | simultaneous | seeded"},
      {"--tol-quad", "tol_quad", "Quadrature gate tolerance (default 1e-6, 1e-4 for n > 60)"},
      {"--paper-figure", "paper_figure", "Preset 1..4: (1.26,0) (2.1,0) (2.1,0.2) (1.45,0.2), n = 70"},
      {"--zeros-in", "zeros_in", "Read zeros from this CSV instead of computing them"},
  };
  for (const OptionDef& s : defs) cmd->add_option(s.flag, raw.values[s.key], s.help);
  cmd->add_option("--tol", raw.tol, "Tolerance override name=value (tol_cdf, tol_mass, tol_potential, tol_quad)");
  cmd->add_option("--config", raw.config, "Config file of key = value lines; flags take precedence");
}

faber::cli::Settings flag_settings(CLI::App* cmd, const RawOptions& raw) {
  faber::cli::Settings s;
  for (const auto& [key, value] : raw.values) {
    std::string flag = "--" + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    if (cmd->count(flag) > 0) faber::cli::apply_setting(s, key, value);
  }
  for (const std::string& t : raw.tol) {
    auto eq = t.find('=');
    if (eq == std::string::npos) throw faber::ParameterError("--tol expects name=value (got '" + t + "')");
    s.tolerances[faber::cli::tolerance_key(t.substr(0, eq))] = faber::cli::parse_real(t.substr(0, eq), t.substr(eq + 1));
  }
  return s;
}

void list_written(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faber polynomials of Joukowski airfoils: zeros, limit sets, verification"};
  app.require_subcommand(1);
  RawOptions raw;
  CLI::App* zeros = app.add_subcommand("zeros", "Compute zeros and write CSV/JSON per n");
  CLI::App* predict = app.add_subcommand("predict", "Write predicted limit curves (CSV) and measure (JSON)");
  CLI::App* verify = app.add_subcommand("verify", "Run diagnostics and gates; exit 1 on failure");
  CLI::App* plot = app.add_subcommand("plot", "Write SVG figures of zeros over predicted curves");
  for (CLI::App* c : {zeros, predict, verify, plot}) add_common_options(c, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : faber::cli::kExitParameter;
  }

  CLI::App* cmd = app.get_subcommands().front();
  try {
    faber::cli::Settings file;
    if (!raw.config.empty()) file = faber::cli::load_config(raw.config);
    faber::cli::RunConfig config = faber::cli::resolve(flag_settings(cmd, raw), file);

    if (cmd == zeros) {
      list_written(faber::cli::cmd_zeros(config));
    } else if (cmd == predict) {
      list_written(faber::cli::cmd_predict(config));
    } else if (cmd == plot) {
      list_written(faber::cli::cmd_plot(config));
    } else {
      auto result = faber::cli::cmd_verify(config);
      std::cout << result.report.string() << '\n';
      for (const auto& r : result.outcome.reports)
        std::cout << "n=" << r.n << " counts segment=" << r.counts.segment << " loop=" << r.counts.loop
                  << " other=" << r.counts.other << " cdf_dist=" << faber::format_e12(r.cdf_dist)
                  << " quad_max_residual=" << faber::format_e12(r.quad_max_residual) << '\n';
      if (result.exit_code == faber::cli::kExitOk) {
        std::cout << "PASS\n";
      } else {
        std::cout << "FAIL:";
        for (const auto& g : result.outcome.failing) std::cout << ' ' << g;
        std::cout << '\n';
        std::cerr << "verification failed: ";
        for (std::size_t i = 0; i < result.outcome.failing.size(); ++i)
          std::cerr << (i ? ", " : "") << result.outcome.failing[i];
        std::cerr << '\n';
      }
      return result.exit_code;
    }
    return faber::cli::kExitOk;
  } catch (const faber::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return faber::cli::kExitParameter;
  } catch (const faber::FaberError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return faber::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return faber::cli::kExitNumerical;
  }
}
