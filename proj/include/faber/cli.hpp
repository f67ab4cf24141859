#pragma once

// Orchestration behind the faberzeros tool: configuration, the four commands
// and their output files. Commands throw library errors; exit_code_for maps
// them to the process exit status.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "faber/common.hpp"
#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/limitsets.hpp"
#include "faber/measures.hpp"
#include "faber/parallel.hpp"
#include "faber/polynomials.hpp"
#include "faber/rootfind.hpp"
#include "faber/svg.hpp"

namespace faber::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr int kMaxDegree = 500;
inline constexpr int kDefaultDegree = 70;

/// Asymptotic gates (convergence, potential) only apply from this degree on.
inline constexpr int kAsymptoticMinDegree = 20;
/// tol_quad is defined up to this degree; beyond it the quadrature gate is
/// reported as not evaluated.
inline constexpr int kQuadratureGateMaxDegree = 120;

inline const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"tol_cdf", 0.12},       // cdf_dist bound for n >= 20
      {"tol_mass", 2.0},       // |fraction - mass| <= tol_mass / sqrt(n)
      {"tol_potential", 0.05}, // max potential deviation for n >= 20
  };
  return t;
}

struct RunConfig {
  double R = 0.0;
  double theta = 0.0;
  std::vector<int> n_list{kDefaultDegree};
  fs::path out_dir = ".";
  std::set<std::string> formats{"csv", "json"};
  std::map<std::string, double> tolerances;  // tol_quad, tol_cdf, tol_mass, tol_potential
  rootfind::SeedMethod seed_method = rootfind::SeedMethod::Auto;
  std::optional<fs::path> zeros_in;

  double tolerance(const std::string& name, int n) const {
    if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
    if (name == "tol_quad") return measures::default_tol_quad(n);
    return default_tolerances().at(name);
  }
  bool wants(const std::string& fmt) const { return formats.count(fmt) != 0; }
};

/// Raw settings from one source (flags or config file). Unset fields defer to
/// the next source.
struct Settings {
  std::optional<double> R, theta;
  std::optional<std::vector<int>> n_list;
  std::optional<std::string> out_dir;
  std::optional<std::set<std::string>> formats;
  std::map<std::string, double> tolerances;
  std::optional<std::string> seed_method;
  std::optional<int> paper_figure;
  std::optional<std::string> zeros_in;
};

struct Preset {
  double R, theta;
};

/// Parameters of the four reference figures.
inline Preset paper_figure_preset(int k) {
  switch (k) {
    case 1: return {1.26, 0.0};
    case 2: return {2.1, 0.0};
    case 3: return {2.1, 0.2};
    case 4: return {1.45, 0.2};
    default: throw ParameterError("figure preset must be 1..4 (got " + std::to_string(k) + ")");
  }
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParameterError(key + ": not a number: '" + v + "'");
  }
}

inline std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    double x = parse_real("n", item);
    if (x != std::floor(x) || std::abs(x) > 1e9) throw ParameterError("n: not an integer: '" + item + "'");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

inline std::set<std::string> parse_formats(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item != "csv" && item != "json" && item != "svg") throw ParameterError("unknown format '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) throw ParameterError("format list is empty");
  return out;
}

/// "tol_quad" and "tol-quad" and "quad" all name the same tolerance.
inline std::string tolerance_key(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  if (name.rfind("tol_", 0) != 0) name = "tol_" + name;
  if (name != "tol_quad" && !default_tolerances().count(name)) throw ParameterError("unknown tolerance '" + name + "'");
  return name;
}

/// Applies one key=value assignment, as found in a config file.
inline void apply_setting(Settings& s, std::string key, const std::string& value) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "R" || key == "r") s.R = parse_real("R", value);
  else if (key == "theta") s.theta = parse_real("theta", value);
  else if (key == "n") s.n_list = parse_n_list(value);
  else if (key == "out" || key == "out_dir") s.out_dir = value;
  else if (key == "format" || key == "formats") s.formats = parse_formats(value);
  else if (key == "seed_method") s.seed_method = value;
  else if (key == "paper_figure") s.paper_figure = static_cast<int>(parse_real("paper_figure", value));
  else if (key == "zeros_in") s.zeros_in = value;
  else if (key.rfind("tol_", 0) == 0) s.tolerances[tolerance_key(key)] = parse_real(key, value);
  else throw ParameterError("unknown config key '" + key + "'");
}

/// Config file: one key = value per line; '#' starts a comment; values may be
/// quoted.
inline Settings parse_config(std::istream& in) {
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    apply_setting(s, key, value);
  }
  return s;
}

inline Settings load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path.string());
  return parse_config(in);
}

/// Merges settings (flags > config file > defaults) and validates the result.
/// A paper-figure preset supplies R, theta and n at the level where it is
/// given; explicit values at the same or a higher level win.
inline RunConfig resolve(const Settings& flags, const Settings& file = {}) {
  RunConfig c;
  bool have_R = false;
  for (const Settings* s : {&file, &flags}) {
    if (s->paper_figure) {
      Preset pr = paper_figure_preset(*s->paper_figure);
      c.R = pr.R;
      c.theta = pr.theta;
      c.n_list = {kDefaultDegree};
      have_R = true;
    }
    if (s->R) {
      c.R = *s->R;
      have_R = true;
    }
    if (s->theta) c.theta = *s->theta;
    if (s->n_list) c.n_list = *s->n_list;
    if (s->out_dir) c.out_dir = *s->out_dir;
    if (s->formats) c.formats = *s->formats;
    for (const auto& [k, v] : s->tolerances) c.tolerances[k] = v;
    if (s->seed_method) {
      try {
        c.seed_method = rootfind::parse_seed_method(*s->seed_method);
      } catch (const std::exception&) {
        throw ParameterError("unknown seed method '" + *s->seed_method + "'");
      }
    }
    if (s->zeros_in) c.zeros_in = fs::path(*s->zeros_in);
  }
  if (!have_R) throw ParameterError("R is required (use --R or --paper-figure)");
  conformal::params_from(c.R, c.theta);
  if (c.n_list.empty()) throw ParameterError("n list is empty");
  for (int n : c.n_list)
    if (n < 1 || n > kMaxDegree)
      throw ParameterError("n must lie in 1.." + std::to_string(kMaxDegree) + " (got " + std::to_string(n) + ")");
  for (const auto& [k, v] : c.tolerances)
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(k + " must be positive");
  return c;
}

/// Exit status for an exception escaping a command.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return kExitParameter;
  return kExitNumerical;
}

inline std::string fmt_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string stem(const RunConfig& c) { return "R" + fmt_param(c.R) + "_theta" + fmt_param(c.theta); }

inline fs::path zeros_path(const RunConfig& c, int n, const std::string& ext) {
  return c.out_dir / ("zeros_" + stem(c) + "_n" + std::to_string(n) + "." + ext);
}
inline fs::path curves_path(const RunConfig& c) { return c.out_dir / ("curves_" + stem(c) + ".csv"); }
inline fs::path predicted_path(const RunConfig& c) { return c.out_dir / ("predicted_" + stem(c) + ".json"); }
inline fs::path report_path(const RunConfig& c) { return c.out_dir / ("report_" + stem(c) + ".json"); }
inline fs::path plot_path(const RunConfig& c, int n) {
  return c.out_dir / ("plot_" + stem(c) + "_n" + std::to_string(n) + ".svg");
}

/// Writes text to path, creating the directory. Returns the path.
inline fs::path write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << text;
  if (!out) throw ParameterError("write failed: " + path.string());
  return path;
}

inline nlohmann::ordered_json complex_json(cplx z) { return {{"re", round_e12(z.real())}, {"im", round_e12(z.imag())}}; }

/// Reads zeros from CSV with at least the columns n, re, im. Rows are grouped
/// by n; each group must hold exactly n zeros.
inline std::vector<rootfind::ZeroSet> read_zeros_csv(std::istream& in, const conformal::AirfoilParams& p) {
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("zeros file is empty");
  std::vector<std::string> cols;
  {
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(trim(c));
  }
  auto col = [&](const std::string& name) -> std::size_t {
    auto it = std::find(cols.begin(), cols.end(), name);
    if (it == cols.end()) throw ParameterError("zeros file lacks column '" + name + "'");
    return static_cast<std::size_t>(it - cols.begin());
  };
  const std::size_t cn = col("n"), cre = col("re"), cim = col("im");
  std::map<int, std::vector<cplx>> groups;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) f.push_back(trim(c));
    if (f.size() < cols.size()) throw ParameterError("zeros file line " + std::to_string(lineno) + ": too few fields");
    auto ns = parse_n_list(f[cn]);
    if (ns.size() != 1) throw ParameterError("zeros file line " + std::to_string(lineno) + ": bad n");
    groups[ns[0]].push_back({parse_real("re", f[cre]), parse_real("im", f[cim])});
  }
  if (groups.empty()) throw ParameterError("zeros file has no rows");
  std::vector<rootfind::ZeroSet> out;
  for (auto& [n, z] : groups) {
    if (n < 1 || n > kMaxDegree) throw ParameterError("zeros file: n out of range");
    if (static_cast<int>(z.size()) != n)
      throw ParameterError("zeros file: n = " + std::to_string(n) + " has " + std::to_string(z.size()) + " rows");
    rootfind::ZeroSet zs;
    zs.n = n;
    zs.zeros = z;
    for (cplx w : z) zs.residuals.push_back(polynomials::residual(p, n, w).relative());
    rootfind::finalize(zs);
    out.push_back(std::move(zs));
  }
  return out;
}

/// Zero sets for every n in the config (or from --zeros-in), computed in
/// parallel over n, in n_list order.
inline std::vector<rootfind::ZeroSet> compute_zero_sets(const RunConfig& c, const conformal::AirfoilParams& p) {
  if (c.zeros_in) {
    std::ifstream in(*c.zeros_in);
    if (!in) throw ParameterError("cannot read zeros file " + c.zeros_in->string());
    return read_zeros_csv(in, p);
  }
  std::vector<rootfind::ZeroSet> out(c.n_list.size());
  parallel_for(c.n_list.size(), [&](std::size_t i) {
    out[i] = rootfind::faber_zeros(p, c.n_list[i], c.seed_method);
    measures::classify_zeros(p, out[i]);
  });
  return out;
}

inline std::string zeros_json(const rootfind::ZeroSet& zs) {
  nlohmann::ordered_json j;
  j["n"] = zs.n;
  j["method"] = rootfind::to_string(zs.method);
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    nlohmann::ordered_json e = complex_json(zs.zeros[i]);
    e["residual"] = round_e12(zs.residuals[i]);
    e["class"] = rootfind::to_string(zs.classes[i]);
    arr.push_back(e);
  }
  j["zeros"] = arr;
  return j.dump(2) + "\n";
}

/// Writes zeros CSV (and JSON) per n. Returns the written paths.
inline std::vector<fs::path> cmd_zeros(const RunConfig& c) {
  auto p = conformal::params_from(c.R, c.theta);
  auto sets = compute_zero_sets(c, p);
  std::vector<fs::path> written;
  for (const auto& zs : sets) {
    if (c.wants("csv")) {
      std::ostringstream os;
      rootfind::write_zeros_csv(os, zs);
      written.push_back(write_file(zeros_path(c, zs.n, "csv"), os.str()));
    }
    if (c.wants("json")) written.push_back(write_file(zeros_path(c, zs.n, "json"), zeros_json(zs)));
  }
  return written;
}

inline constexpr int kCurveSamples = 1001;

inline std::string predicted_json(const RunConfig& c, const conformal::AirfoilParams& p) {
  auto cls = limitsets::classify(p);
  auto pm = measures::predicted(p);
  auto mom = measures::predicted_moments(pm, measures::kMomentDistanceOrder);
  nlohmann::ordered_json j;
  j["R"] = c.R;
  j["theta"] = c.theta;
  j["case"] = limitsets::to_string(cls.tag);
  j["rcos"] = round_e12(cls.rcos);
  j["b"] = complex_json(p.b());
  j["capacity"] = round_e12(std::abs(p.a()) / 2.0);
  auto ib = limitsets::intersection_ib(p);
  j["i_b"] = ib ? complex_json(*ib) : nlohmann::ordered_json(nullptr);
  j["masses"] = {{"segment", round_e12(pm.mass_segment)}, {"loop", round_e12(pm.mass_loop)}};
  j["segment_s_max"] = round_e12(pm.s_max);
  j["loop_start_angle"] = round_e12(pm.loop_start);
  j["loop_sweep"] = round_e12(pm.loop_sweep);
  auto arr = nlohmann::ordered_json::array();
  for (int k = 1; k <= mom.k_max; ++k) arr.push_back(complex_json(mom.at(k)));
  j["moments"] = arr;
  return j.dump(2) + "\n";
}

/// Writes the curve CSV and the predicted-measure JSON.
inline std::vector<fs::path> cmd_predict(const RunConfig& c) {
  auto p = conformal::params_from(c.R, c.theta);
  std::vector<fs::path> written;
  if (c.wants("csv")) {
    std::ostringstream os;
    limitsets::write_curves_csv(os, p, limitsets::limit_sets(p, kCurveSamples));
    written.push_back(write_file(curves_path(c), os.str()));
  }
  if (c.wants("json")) written.push_back(write_file(predicted_path(c), predicted_json(c, p)));
  return written;
}

struct GateResult {
  explicit GateResult(std::string gate) : name(std::move(gate)) {}
  std::string name;
  bool evaluated = true;
  bool passed = true;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<measures::Report> reports;
  std::vector<std::vector<GateResult>> per_n;
  std::vector<GateResult> across_n;
  std::vector<std::string> failing;  // gate names, sorted, unique
  bool passed() const { return failing.empty(); }
};

/// Runs the diagnostics and the four gates: quadrature, mass_split,
/// convergence, potential.
inline VerifyOutcome verify(const RunConfig& c) {
  auto p = conformal::params_from(c.R, c.theta);
  auto sets = compute_zero_sets(c, p);
  auto pm = measures::predicted(p);
  VerifyOutcome v;
  v.reports.resize(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) { v.reports[i] = measures::diagnose(p, sets[i], pm); });

  std::set<std::string> failing;
  auto record = [&](std::vector<GateResult>& into, GateResult g) {
    if (g.evaluated && !g.passed) failing.insert(g.name);
    into.push_back(std::move(g));
  };
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return std::string(buf);
  };
  for (const auto& r : v.reports) {
    std::vector<GateResult> gates;
    const double rn = std::sqrt(static_cast<double>(r.n));

    GateResult q("quadrature");
    if (r.n > kQuadratureGateMaxDegree) {
      q.evaluated = false;
      q.detail = "not evaluated above n = " + std::to_string(kQuadratureGateMaxDegree);
    } else {
      double tol = c.tolerance("tol_quad", r.n);
      q.passed = r.quad_max_residual < tol;
      q.detail = num(r.quad_max_residual) + " < " + num(tol);
    }
    record(gates, q);

    GateResult m("mass_split");
    double tol_m = c.tolerance("tol_mass", r.n) / rn;
    double fs_ = static_cast<double>(r.counts.segment) / r.n, fl = static_cast<double>(r.counts.loop) / r.n;
    m.passed = std::abs(fs_ - r.mass_segment) <= tol_m && std::abs(fl - r.mass_loop) <= tol_m &&
               r.counts.other <= 3.0 * rn;
    m.detail = "segment " + num(fs_) + " vs " + num(r.mass_segment) + ", loop " + num(fl) + " vs " +
               num(r.mass_loop) + ", other " + std::to_string(r.counts.other);
    record(gates, m);

    GateResult cv("convergence");
    GateResult pt("potential");
    if (r.n < kAsymptoticMinDegree) {
      cv.evaluated = pt.evaluated = false;
      cv.detail = pt.detail = "not evaluated below n = " + std::to_string(kAsymptoticMinDegree);
    } else {
      double tc = c.tolerance("tol_cdf", r.n), tp = c.tolerance("tol_potential", r.n);
      cv.passed = r.cdf_dist < tc;
      cv.detail = "cdf_dist " + num(r.cdf_dist) + " < " + num(tc);
      pt.passed = r.potential_max_dev < tp;
      pt.detail = "max deviation " + num(r.potential_max_dev) + " < " + num(tp);
    }
    record(gates, cv);
    record(gates, pt);
    v.per_n.push_back(std::move(gates));
  }

  // Trends between the smallest and largest n.
  if (v.reports.size() >= 2) {
    auto lo = std::min_element(v.reports.begin(), v.reports.end(), [](auto& a, auto& b) { return a.n < b.n; });
    auto hi = std::max_element(v.reports.begin(), v.reports.end(), [](auto& a, auto& b) { return a.n < b.n; });
    if (lo->n < hi->n) {
      GateResult cv("convergence");
      cv.passed = hi->cdf_dist < lo->cdf_dist;
      cv.detail = "cdf_dist n=" + std::to_string(hi->n) + " " + num(hi->cdf_dist) + " < n=" + std::to_string(lo->n) +
                  " " + num(lo->cdf_dist);
      record(v.across_n, cv);
      GateResult pt("potential");
      // deviations at the rounding floor count as not increasing
      pt.passed = hi->potential_max_dev <= lo->potential_max_dev + 1e-12;
      pt.detail = "max deviation n=" + std::to_string(hi->n) + " " + num(hi->potential_max_dev) +
                  " <= n=" + std::to_string(lo->n) + " " + num(lo->potential_max_dev);
      record(v.across_n, pt);
    }
  }
  v.failing.assign(failing.begin(), failing.end());
  return v;
}

inline nlohmann::ordered_json gate_json(const GateResult& g) {
  return {{"gate", g.name}, {"status", !g.evaluated ? "skipped" : g.passed ? "pass" : "fail"}, {"detail", g.detail}};
}

inline std::string verify_json(const RunConfig& c, const VerifyOutcome& v) {
  nlohmann::ordered_json j;
  j["R"] = c.R;
  j["theta"] = c.theta;
  j["status"] = v.passed() ? "PASS" : "FAIL";
  j["failing_gates"] = v.failing;
  auto reps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < v.reports.size(); ++i) {
    nlohmann::ordered_json r = measures::to_json(v.reports[i]);
    auto gates = nlohmann::ordered_json::array();
    for (const auto& g : v.per_n[i]) gates.push_back(gate_json(g));
    r["gates"] = gates;
    reps.push_back(r);
  }
  j["reports"] = reps;
  auto trend = nlohmann::ordered_json::array();
  for (const auto& g : v.across_n) trend.push_back(gate_json(g));
  j["trend_gates"] = trend;
  return j.dump(2) + "\n";
}

struct VerifyResult {
  VerifyOutcome outcome;
  fs::path report;
  int exit_code;
};

/// Writes the JSON report; exit code 0 iff every evaluated gate passes.
inline VerifyResult cmd_verify(const RunConfig& c) {
  VerifyOutcome v = verify(c);
  fs::path path = write_file(report_path(c), verify_json(c, v));
  int code = v.passed() ? kExitOk : kExitVerifyFailed;
  return {std::move(v), path, code};
}

/// Figure of the predicted curves with the zeros of F_n as dots.
inline std::string plot_svg(const conformal::AirfoilParams& p, const limitsets::LimitSets& ls,
                            const rootfind::ZeroSet& zs, const std::string& title) {
  svg::Figure fig(title);
  auto airfoil = limitsets::airfoil_boundary(p, kCurveSamples);
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (cplx z : airfoil) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  double pad = 0.08 * std::max(xmax - xmin, ymax - ymin);
  fig.set_window(xmin - pad, xmax + pad, ymin - pad, ymax + pad);

  fig.add_curve(airfoil, {"#7f7f7f", 1.0, ""});
  fig.add_curve(ls.circle, {"#2ca02c", 1.0, "6 4"});
  if (!ls.circle_tilde.empty()) fig.add_curve(ls.circle_tilde, {"#9467bd", 1.0, "6 4"});
  std::vector<cplx> plus, minus;
  for (const auto& s : ls.arc.samples) {
    plus.push_back(s.z_plus);
    minus.push_back(s.z_minus);
  }
  fig.add_curve(plus, {"#1f77b4", 1.5, ""});
  fig.add_curve(minus, {"#1f77b4", 1.5, ""});
  if (ls.loop && !ls.loop->samples.empty()) fig.add_curve(ls.loop->samples, {"#d62728", 1.5, ""});
  if (ls.ib) fig.add_points({*ls.ib}, "#ff7f0e", 4.5);
  fig.add_points(zs.zeros, "#000000", 2.5);
  std::ostringstream os;
  fig.write(os);
  return os.str();
}

/// Writes one SVG per n.
inline std::vector<fs::path> cmd_plot(const RunConfig& c) {
  auto p = conformal::params_from(c.R, c.theta);
  auto sets = compute_zero_sets(c, p);
  auto ls = limitsets::limit_sets(p, kCurveSamples);
  std::vector<fs::path> written;
  for (const auto& zs : sets) {
    std::string title = "Zeros of F_" + std::to_string(zs.n) + ", R = " + fmt_param(c.R) +
                        ", theta = " + fmt_param(c.theta);
    written.push_back(write_file(plot_path(c, zs.n), plot_svg(p, ls, zs, title)));
  }
  return written;
}

}  // namespace faber::cli
