#include <gtest/gtest.h>

#include <json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "support/cli_runner.hpp"
#include "windrose/format.hpp"

namespace windrose {
namespace {

using testing::run_cli;
using testing::write_temp;

constexpr const char* kFortySixty =
    "# bands=6.4,15,30,47 classes=8\n"
    "0,0,0,0,0,0,0,0\n"
    "40,0,0,0,60,0,0,0\n"
    "0,0,0,0,0,0,0,0\n";

TEST(CliBin, ThreeObservations) {
  const auto raw = write_temp("three.csv",
                              "direction_deg,speed_kmph\n"
                              "0,10\n"
                              "190,20\n"
                              "0,5\n");
  const auto r = run_cli("bin " + raw.string());
  ASSERT_EQ(r.exit_code, 0);
  const auto j = run_cli("bin --format json " + raw.string());
  ASSERT_EQ(j.exit_code, 0);
  const auto rose = nlohmann::json::parse(j.out);
  const double third = 100.0 / 3.0;
  EXPECT_NEAR(rose["cells"][0][0].get<double>(), third, 1e-12);
  EXPECT_NEAR(rose["cells"][1][0].get<double>(), third, 1e-12);
  EXPECT_NEAR(rose["calm"].get<double>(), third, 1e-12);
}

TEST(CliBin, Errors) {
  const auto empty = write_temp("empty.csv", "direction_deg,speed_kmph\n# nothing\n");
  auto r = run_cli("bin " + empty.string());
  EXPECT_EQ(r.exit_code, 2);
  const auto neg = write_temp("neg.csv", "direction_deg,speed_kmph\n10,4\n20,-1\n");
  EXPECT_EQ(run_cli("bin " + neg.string()).exit_code, 2);
  EXPECT_EQ(run_cli("bin /nonexistent/file.csv").exit_code, 2);
  EXPECT_EQ(run_cli("bin --bogus-flag").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("orient --help").exit_code, 0);
}

TEST(CliBin, NegativeSpeedMessageHasLineNumber) {
  const auto neg = write_temp("neg2.csv", "direction_deg,speed_kmph\n10,4\n20,-1\n");
  const std::string cmd = std::string(WINDROSE_CLI_PATH) + " bin " + neg.string() + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  char buf[256] = {};
  std::string err;
  while (fgets(buf, sizeof buf, p)) err += buf;
  const int status = pclose(p);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(err.find("line 3: negative speed"), std::string::npos) << err;
}

TEST(CliOrient, FortySixtyLegacyCoefficients) {
  const auto path = write_temp("4060.csv", kFortySixty);
  const auto r = run_cli("orient --coeffs paper " + path.string());
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["coefficient_source"], "paper");
  EXPECT_EQ(j["best"]["class"], 2);
  EXPECT_NE(r.out.find("\"azimuth_deg\": 90.000000, \"orientation\": \"E-W\", \"designator\": \"09-27\", "
                       "\"coverage_pct\": 85.043240"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("\"coverage_pct\": 77.564860"), std::string::npos);
}

TEST(CliOrient, AllCalmRose) {
  const auto path = write_temp("calm.csv",
                               "# bands=6.4,15,30,47 classes=8\n"
                               "0,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0\n");
  const auto r = run_cli("orient " + path.string());
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["coverage"]) EXPECT_EQ(c["coverage_pct"].get<double>(), 100.0);
  EXPECT_EQ(j["best"]["class"], 0);
  EXPECT_EQ(j["meets_threshold"], true);
}

TEST(CliOrient, ValidationExitCodes) {
  const auto over = write_temp("over.csv",
                               "# bands=6.4,15,30,47 classes=8\n"
                               "60,0,0,0,0,0,0,0\n60,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(run_cli("orient " + over.string()).exit_code, 1);
  const auto path = write_temp("4060b.csv", kFortySixty);
  EXPECT_EQ(run_cli("orient --coeffs paper --crosswind 20 " + path.string()).exit_code, 1);
  EXPECT_EQ(run_cli("orient --threshold 0 " + path.string()).exit_code, 1);
  EXPECT_EQ(run_cli("orient --pair sideways " + path.string()).exit_code, 1);
  EXPECT_EQ(run_cli("orient --classes 12 " + path.string()).exit_code, 1);
  const auto garbage = write_temp("garbage.csv", "# bands=6.4,15 classes=2\n1,zz\n");
  EXPECT_EQ(run_cli("orient " + garbage.string()).exit_code, 2);
}

TEST(CliOrient, TextFormatAndSvg) {
  const auto path = write_temp("4060c.csv", kFortySixty);
  const auto svg = std::filesystem::temp_directory_path() / "windrose_tests" / "out.svg";
  std::filesystem::remove(svg);
  const auto r = run_cli("orient --format text --pair perpendicular --svg " + svg.string() + " " + path.string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Runway number:"), std::string::npos);
  EXPECT_NE(r.out.find("Second runway:"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(svg));
}

TEST(CliOrient, PipeEqualsSingleStep) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dir(0, 360), spd(0, 55);
  std::ostringstream raw;
  raw << "direction_deg,speed_kmph\n";
  for (int i = 0; i < 500; ++i) raw << format_roundtrip(dir(rng)) << "," << format_roundtrip(spd(rng)) << "\n";
  const auto raw_path = write_temp("pipe_raw.csv", raw.str());
  const auto single = run_cli("orient --pair exhaustive " + raw_path.string());
  const auto piped = run_cli("bin " + raw_path.string() + " | " + WINDROSE_CLI_PATH + " orient --pair exhaustive -");
  ASSERT_EQ(single.exit_code, 0);
  ASSERT_EQ(piped.exit_code, 0);
  const auto a = nlohmann::json::parse(single.out);
  const auto b = nlohmann::json::parse(piped.out);
  EXPECT_NEAR(a["calm_pct"].get<double>(), b["calm_pct"].get<double>(), 1e-9);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(a["coverage"][i]["coverage_pct"].get<double>(), b["coverage"][i]["coverage_pct"].get<double>(),
                1e-9);
  }
  EXPECT_EQ(a["best"], b["best"]);
  EXPECT_EQ(a["pair"], b["pair"]);
}

TEST(CliCoeffs, LegacyVerbatimAndDerived) {
  const auto paper = run_cli("coeffs --coeffs paper");
  ASSERT_EQ(paper.exit_code, 0);
  EXPECT_NE(paper.out.find("15-30,1,1,1,0.831353,0.626081,0.831353,1,1\n"), std::string::npos);
  EXPECT_NE(paper.out.find("30-47,1,1,0.358123,0,0,0,0.358123,1\n"), std::string::npos);
  const auto derived = run_cli("coeffs");
  ASSERT_EQ(derived.exit_code, 0);
  EXPECT_NE(derived.out.find("6.4-15,1,1,1,1,1,1,1,1\n"), std::string::npos);
  EXPECT_EQ(run_cli("coeffs --coeffs paper --classes 16").exit_code, 1);
  EXPECT_EQ(run_cli("coeffs --coeffs paper --bands 5,10,20").exit_code, 1);
}

TEST(CliCoeffs, VerifyReportsDeviation) {
  const auto r = run_cli("coeffs --verify --mc-samples 200000 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["oracle_max_abs_deviation"].get<double>(), 1e-2);
}

TEST(CliRender, WritesSvg) {
  const auto path = write_temp("4060d.csv", kFortySixty);
  const auto a = run_cli("render --strip-azimuth 90 --show-values " + path.string());
  const auto b = run_cli("render --strip-azimuth 90 --show-values " + path.string());
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<?xml", 0), 0u);
}

}  // namespace
}  // namespace windrose
