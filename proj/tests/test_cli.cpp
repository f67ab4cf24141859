#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "faber/cli.hpp"

using namespace faber;
using namespace faber::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("faber_cli_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_tool(const std::string& args) {
  std::string cmd = std::string(FABERZEROS_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, FlagsOverrideFileOverrideDefaults) {
  std::istringstream file("# comment\nR = 2.1\ntheta = 0.2\nn = 10, 20\nformat = \"json\"\ntol_cdf = 0.2\n");
  Settings f = parse_config(file);
  Settings flags;
  flags.theta = 0.0;
  RunConfig c = resolve(flags, f);
  EXPECT_EQ(c.R, 2.1);
  EXPECT_EQ(c.theta, 0.0);
  EXPECT_EQ(c.n_list, (std::vector<int>{10, 20}));
  EXPECT_EQ(c.formats, (std::set<std::string>{"json"}));
  EXPECT_EQ(c.tolerance("tol_cdf", 10), 0.2);
  EXPECT_EQ(c.tolerance("tol_quad", 10), 1e-6);
  EXPECT_EQ(c.tolerance("tol_quad", 100), 1e-4);
  EXPECT_EQ(c.out_dir, fs::path("."));
}

TEST(Config, FigurePresets) {
  Settings s;
  s.paper_figure = 3;
  RunConfig c = resolve(s);
  EXPECT_EQ(c.R, 2.1);
  EXPECT_EQ(c.theta, 0.2);
  EXPECT_EQ(c.n_list, (std::vector<int>{70}));
  s.R = 2.5;  // explicit value at the same level wins
  EXPECT_EQ(resolve(s).R, 2.5);
  s.paper_figure = 5;
  EXPECT_THROW(resolve(s), ParameterError);
}

TEST(Config, Validation) {
  Settings s;
  EXPECT_THROW(resolve(s), ParameterError);  // no R
  s.R = 0.9;
  EXPECT_THROW(resolve(s), ParameterError);
  s.R = 1.26;
  s.n_list = std::vector<int>{0};
  EXPECT_THROW(resolve(s), ParameterError);
  s.n_list = std::vector<int>{501};
  EXPECT_THROW(resolve(s), ParameterError);
  s.n_list = std::vector<int>{500};
  EXPECT_NO_THROW(resolve(s));
  EXPECT_THROW(parse_formats("csv,xml"), ParameterError);
  EXPECT_THROW(parse_n_list("3,4.5"), ParameterError);
  EXPECT_THROW(tolerance_key("tol_bogus"), ParameterError);
  EXPECT_EQ(tolerance_key("quad"), "tol_quad");
  std::istringstream bad("R 2.1\n");
  EXPECT_THROW(parse_config(bad), ParameterError);
  std::istringstream unknown("color = red\n");
  EXPECT_THROW(parse_config(unknown), ParameterError);
}

TEST(ExitCodes, ErrorMapping) {
  EXPECT_EQ(exit_code_for(ParameterError("x")), kExitParameter);
  EXPECT_EQ(exit_code_for(ConvergenceError("x")), kExitNumerical);
  EXPECT_EQ(exit_code_for(DeficitError("x", 2)), kExitNumerical);
}

TEST(Commands, ZerosWritesCsvPerDegree) {
  Settings s;
  s.R = 1.26;
  s.n_list = std::vector<int>{7, 70};
  s.out_dir = scratch("zeros").string();
  RunConfig c = resolve(s);
  auto files = cmd_zeros(c);
  ASSERT_EQ(files.size(), 4u);
  std::ifstream in(zeros_path(c, 70, "csv"));
  auto sets = read_zeros_csv(in, conformal::params_from(1.26, 0.0));
  ASSERT_EQ(sets.size(), 1u);
  ASSERT_EQ(sets[0].zeros.size(), 70u);
  for (cplx z : sets[0].zeros) EXPECT_LT(std::abs(z.imag()), 1e-9);
  EXPECT_TRUE(fs::exists(zeros_path(c, 7, "json")));
}

TEST(Commands, ZerosCsvRoundTrip) {
  Settings s;
  s.R = 2.1;
  s.theta = 0.2;
  s.n_list = std::vector<int>{30};
  s.out_dir = scratch("roundtrip").string();
  s.formats = std::set<std::string>{"csv"};
  RunConfig c = resolve(s);
  cmd_zeros(c);
  std::ifstream in(zeros_path(c, 30, "csv"));
  auto sets = read_zeros_csv(in, conformal::params_from(2.1, 0.2));
  ASSERT_EQ(sets.size(), 1u);
  auto direct = rootfind::faber_zeros(conformal::params_from(2.1, 0.2), 30);
  EXPECT_LT(rootfind::cross_check(direct, sets[0], 1e-11).max_distance, 1e-11);
}

TEST(Commands, ZerosFileWithWrongCountRejected) {
  std::istringstream in("n,re,im\n3,0.1,0.0\n3,0.2,0.0\n");
  EXPECT_THROW(read_zeros_csv(in, conformal::params_from(1.26, 0.0)), ParameterError);
  std::istringstream nocol("n,x,im\n1,0.1,0.0\n");
  EXPECT_THROW(read_zeros_csv(nocol, conformal::params_from(1.26, 0.0)), ParameterError);
}

TEST(Commands, PredictSupercriticalHasLoopAndMasses) {
  Settings s;
  s.R = 2.1;
  s.theta = 0.2;
  s.out_dir = scratch("predict").string();
  RunConfig c = resolve(s);
  cmd_predict(c);
  std::string curves = slurp(curves_path(c));
  EXPECT_NE(curves.find("\nloop,"), std::string::npos);
  EXPECT_NE(curves.find("\ncorner,"), std::string::npos);
  auto j = nlohmann::json::parse(slurp(predicted_path(c)));
  EXPECT_EQ(j["case"], "supercritical");
  EXPECT_NEAR(j["masses"]["segment"].get<double>() + j["masses"]["loop"].get<double>(), 1.0, 1e-10);
  EXPECT_NEAR(j["i_b"]["re"].get<double>(), -0.6936820605316, 1e-9);
}

TEST(Commands, PredictSubcriticalHasNoLoop) {
  Settings s;
  s.R = 1.45;
  s.theta = 0.2;
  s.out_dir = scratch("predict_sub").string();
  RunConfig c = resolve(s);
  cmd_predict(c);
  std::string curves = slurp(curves_path(c));
  EXPECT_EQ(curves.find("\nloop,"), std::string::npos);
  EXPECT_NE(curves.find("\narc_plus,"), std::string::npos);
  auto j = nlohmann::json::parse(slurp(predicted_path(c)));
  EXPECT_EQ(j["case"], "subcritical");
  EXPECT_TRUE(j["i_b"].is_null());
  EXPECT_EQ(j["masses"]["loop"].get<double>(), 0.0);
}

TEST(Commands, VerifyPassesOnComputedZeros) {
  Settings s;
  s.R = 2.1;
  s.n_list = std::vector<int>{70};
  s.out_dir = scratch("verify").string();
  VerifyResult r = cmd_verify(resolve(s));
  EXPECT_EQ(r.exit_code, kExitOk);
  ASSERT_EQ(r.outcome.reports.size(), 1u);
  EXPECT_EQ(r.outcome.reports[0].counts.segment, 21);
  EXPECT_EQ(r.outcome.reports[0].counts.loop, 49);
  auto j = nlohmann::json::parse(slurp(r.report));
  EXPECT_EQ(j["status"], "PASS");
}

TEST(Commands, VerifyFailsQuadratureOnCorruptedZeros) {
  fs::path dir = scratch("corrupt");
  auto p = conformal::params_from(2.1, 0.0);
  auto zs = rootfind::faber_zeros(p, 40);
  zs.zeros[11] += cplx(0.0, 1e-3);
  {
    std::ofstream out(dir / "bad.csv");
    rootfind::write_zeros_csv(out, zs);
  }
  Settings s;
  s.R = 2.1;
  s.zeros_in = (dir / "bad.csv").string();
  s.out_dir = dir.string();
  VerifyResult r = cmd_verify(resolve(s));
  EXPECT_EQ(r.exit_code, kExitVerifyFailed);
  EXPECT_EQ(r.outcome.failing, (std::vector<std::string>{"quadrature"}));
}

TEST(Commands, VerifyTrendGateCatchesNonConvergence) {
  Settings s;
  s.R = 1.26;
  s.n_list = std::vector<int>{25, 50, 100};
  s.out_dir = scratch("trend").string();
  VerifyOutcome v = verify(resolve(s));
  EXPECT_TRUE(v.passed());
  ASSERT_EQ(v.across_n.size(), 2u);
  EXPECT_TRUE(v.across_n[0].passed);
}

TEST(Commands, PlotIsDeterministicAndHasOneDotPerZero) {
  Settings s;
  s.R = 1.26;
  s.n_list = std::vector<int>{70};
  s.out_dir = scratch("plot").string();
  RunConfig c = resolve(s);
  cmd_plot(c);
  std::string first = slurp(plot_path(c, 70));
  cmd_plot(c);
  EXPECT_EQ(first, slurp(plot_path(c, 70)));
  EXPECT_NE(first.find("viewBox=\"0 0 800 800\""), std::string::npos);
  std::size_t dots = 0;
  for (std::size_t pos = 0; (pos = first.find("fill=\"#000000\"/>", pos)) != std::string::npos; ++pos) ++dots;
  EXPECT_EQ(dots, 70u);
}

TEST(Svg, CoordinatesAtFourDecimals) {
  EXPECT_EQ(svg::fmt4(1.0 / 3.0), "0.3333");
  EXPECT_EQ(svg::fmt4(-1e-7), "0.0000");
  EXPECT_EQ(svg::xml_escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
}

TEST(Tool, ExitCodes) {
  fs::path dir = scratch("tool");
  EXPECT_EQ(run_tool("zeros --R 0.9 --theta 0 --n 10 --out " + dir.string()), kExitParameter);
  EXPECT_EQ(run_tool("zeros --R 1.26 --n 501 --out " + dir.string()), kExitParameter);
  EXPECT_EQ(run_tool("zeros --R 1.26 --bogus"), kExitParameter);
  EXPECT_EQ(run_tool("zeros --R 1.26 --theta 0 --n 70 --out " + dir.string()), kExitOk);
  EXPECT_EQ(run_tool("verify --R 1.26 --theta 0 --n 25,50,100 --out " + dir.string()), kExitOk);
  EXPECT_EQ(run_tool("verify --R 2.1 --n 40 --tol-quad 1e-40 --out " + dir.string()), kExitVerifyFailed);
}

TEST(Tool, ConfigFileAndFlagPrecedence) {
  fs::path dir = scratch("toolcfg");
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "R = 2.1\ntheta = 0.2\nn = 12\nformat = csv\nout = " << dir.string() << "\n";
  }
  EXPECT_EQ(run_tool("zeros --config " + (dir / "run.cfg").string() + " --theta 0"), kExitOk);
  EXPECT_TRUE(fs::exists(dir / "zeros_R2.1_theta0_n12.csv"));
  EXPECT_FALSE(fs::exists(dir / "zeros_R2.1_theta0.2_n12.csv"));
}
