// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and runtime limits are fixed here.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/cli_runner.hpp"
#include "support/legacy_loop.hpp"
#include "support/random_roses.hpp"
#include "windrose/coverage.hpp"
#include "windrose/error.hpp"
#include "windrose/geometry.hpp"
#include "windrose/io.hpp"
#include "windrose/render.hpp"

namespace {

using namespace windrose;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int g_failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char timing[96];
  std::snprintf(timing, sizeof timing, "runtime %.2f s (limit %.0f s)", secs, limit_s);
  check.expect(secs < limit_s, std::string("runtime over limit: ") + timing);
  std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << name << " -- " << timing << "\n";
  for (const auto& n : check.notes) std::cout << "         " << n << "\n";
  if (!check.ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

WindRose single_cell(std::size_t band, std::size_t cls, double pct) {
  WindRose rose;
  rose.set_cell(band, cls, pct);
  return rose;
}

}  // namespace

int main() {
  std::cout << "windrose acceptance suite\n";

  criterion(1, "legacy coefficient constants embedded and emitted verbatim", 1.0, [](Check& c) {
    const auto& t = paper_coefficient_table();
    const std::vector<double> band2 = {1, 1, 1, 0.831353, 0.626081, 0.831353, 1, 1};
    const std::vector<double> band3 = {1, 1, 0.358123, 0, 0, 0, 0.358123, 1};
    c.expect(t.rows.size() == 3, "table must have 3 rows");
    c.expect(t.rows[0] == std::vector<double>(8, 1.0), "band 1 must be all 1");
    c.expect(t.rows[1] == band2, "band 2 differs from the listing");
    c.expect(t.rows[2] == band3, "band 3 differs from the listing");
    const auto r = testing::run_cli("coeffs --coeffs paper");
    c.expect(r.exit_code == 0, "coeffs --coeffs paper exit " + std::to_string(r.exit_code));
    c.expect(r.out.find("15-30,1,1,1,0.831353,0.626081,0.831353,1,1\n") != std::string::npos,
             "CLI band 2 row not verbatim");
    c.expect(r.out.find("30-47,1,1,0.358123,0,0,0,0.358123,1\n") != std::string::npos,
             "CLI band 3 row not verbatim");
  });

  criterion(2, "legacy-table coverage bit-identical to the rotate-right loop on 1000 roses", 5.0, [](Check& c) {
    std::mt19937_64 rng(20120101);
    int mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto rose = testing::random_rose(rng);
      std::array<double, 8> v1, v2, v3;
      for (int j = 0; j < 8; ++j) {
        v1[j] = rose.cell(0, j);
        v2[j] = rose.cell(1, j);
        v3[j] = rose.cell(2, j);
      }
      const auto expected = testing::legacy_coverage(v1, v2, v3);
      const auto got = coverage_vector(rose, paper_coefficient_table());
      for (int i = 0; i < 8; ++i) {
        if (got[i] != expected[i]) ++mismatches;
      }
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " coverage values differ bitwise");
  });

  criterion(3, "derived coefficients: exact values and Monte Carlo agreement", 60.0, [](Check& c) {
    const BandGeometry g;
    const OrientationClasses classes;
    const auto t = coefficient_table(g, classes, 25.0);
    for (std::size_t k = 0; k < 8; ++k) c.expect(t.at(0, k) == 1.0, "band 1 offset " + std::to_string(k) + " != 1");
    for (std::size_t k = 3; k <= 5; ++k) {
      c.expect(t.at(2, k) == 0.0, "band 3 offset " + std::to_string(k) + " = " + fmt(t.at(2, k)) + ", expected 0.0");
    }
    const double d = 22.5 * std::numbers::pi / 180.0;
    const double deg = std::numbers::pi / 180.0;
    const double closed =
        0.5 * (625.0 * (1.0 / std::tan(33.75 * deg) - 1.0 / std::tan(56.25 * deg)) - 900.0 * d) / (0.5 * 1309.0 * d);
    c.expect(std::abs(t.at(2, 2) - closed) <= 1e-6,
             "band 3 offset 2 = " + fmt(t.at(2, 2)) + ", closed form " + fmt(closed));
    c.expect(std::abs(closed - 0.3197) < 5e-5, "closed form " + fmt(closed) + " is not ~0.3197");
    const auto cmp = verify_against_oracle(t, g, classes, kDefaultMcSamples, kDefaultMcSeed);
    std::cout << "         exact vs Monte Carlo (1e7 samples): max |dev| = " << fmt(cmp.max_abs_deviation)
              << " at band " << cmp.worst_band << " offset " << cmp.worst_offset << "\n";
    c.expect(cmp.max_abs_deviation <= 3e-3, "Monte Carlo deviation " + fmt(cmp.max_abs_deviation) + " > 3e-3");
  });

  criterion(4, "rotation equivariance of coverage and argmax", 5.0, [](Check& c) {
    std::mt19937_64 rng(4);
    const CoefficientTable tables[] = {paper_coefficient_table(),
                                       coefficient_table(BandGeometry{}, OrientationClasses{})};
    int bad_values = 0;
    int bad_argmax = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto rose = testing::random_rose(rng);
      for (const auto& table : tables) {
        const auto base = coverage_vector(rose, table);
        const auto best = best_orientation(base);
        for (std::size_t k = 0; k < 8; ++k) {
          const auto rot = coverage_vector(rose.rotated(k), table);
          for (std::size_t i = 0; i < 8; ++i) {
            if (std::abs(rot[i] - base[(i + 8 - k) % 8]) > 1e-9) ++bad_values;
          }
          std::size_t expected = 8;
          for (std::size_t i = 0; i < 8; ++i) {
            if (std::abs(base[i] - best.value) <= 1e-9) expected = std::min(expected, (i + k) % 8);
          }
          if (best_orientation(rot).index != expected) ++bad_argmax;
        }
      }
    }
    c.expect(bad_values == 0, std::to_string(bad_values) + " rotated coverage values off by > 1e-9");
    c.expect(bad_argmax == 0, std::to_string(bad_argmax) + " argmax indices did not shift by k");
  });

  criterion(5, "trivial roses and the >100 validation path", 1.0, [](Check& c) {
    for (const auto* table : {&paper_coefficient_table()}) {
      const auto zero = make_report(WindRose{}, *table);
      for (double v : zero.coverage) c.expect(v == 100.0, "all-zero rose coverage " + fmt(v));
      c.expect(zero.best_class == 0, "all-zero rose best class " + std::to_string(zero.best_class));
      for (double v : coverage_vector(single_cell(0, 3, 100.0), *table)) {
        c.expect(v == 100.0, "band-1 rose coverage " + fmt(v));
      }
    }
    const auto derived = coefficient_table(BandGeometry{}, OrientationClasses{});
    for (double v : coverage_vector(WindRose{}, derived)) c.expect(v == 100.0, "derived all-zero coverage " + fmt(v));
    for (double v : coverage_vector(single_cell(0, 6, 100.0), derived)) {
      c.expect(v == 100.0, "derived band-1 rose coverage " + fmt(v));
    }
    bool threw = false;
    try {
      validate_rose(single_cell(1, 2, 120.0));
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::kTotalExceeds100;
    }
    c.expect(threw, "rose totaling 120 not rejected with TotalExceeds100");
    const auto path = testing::write_temp("ac5_over.csv",
                                          "# bands=6.4,15,30,47 classes=8\n"
                                          "50,0,0,0,0,0,0,0\n40,0,0,0,0,0,0,0\n0,0,30,0,0,0,0,0\n");
    const auto r = testing::run_cli("orient " + path.string());
    c.expect(r.exit_code == 1, "orient on a 120% rose exited " + std::to_string(r.exit_code));
  });

  criterion(6, "pair coverage bounds and exhaustive >= perpendicular", 120.0, [](Check& c) {
    std::mt19937_64 rng(6);
    const auto derived = coefficient_table(BandGeometry{}, OrientationClasses{});
    int violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto rose = testing::random_rose(rng);
      const auto cov = coverage_vector(rose, derived);
      for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
          if (a == b) continue;
          const double p = pair_coverage(rose, a, b);
          if (p < std::max(cov[a], cov[b]) - 1e-9 || p > 100.0 + 1e-9) ++violations;
        }
      }
      const auto primary = best_orientation(cov).index;
      const auto perp = best_pair(rose, primary, PairMode::kPerpendicular);
      const auto ex = best_pair(rose, primary, PairMode::kExhaustive);
      if (ex.coverage_pct < perp.coverage_pct) ++violations;
    }
    c.expect(violations == 0, std::to_string(violations) + " pair-coverage violations");
  });

  criterion(7, "binning conservation and FROM-direction folding", 30.0, [](Check& c) {
    std::mt19937_64 rng(7);
    int conservation = 0;
    int folding = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto obs = testing::random_observations(rng, 1 + trial % 64);
      const auto rose = bin_observations(obs, BandGeometry{}, OrientationClasses{});
      if (std::abs(rose.cell_total() + rose.above_max() + rose.calm() - 100.0) > 1e-9) ++conservation;
      for (auto& o : obs) o.direction_deg = normalize_azimuth(o.direction_deg + 180.0);
      if (!(bin_observations(obs, BandGeometry{}, OrientationClasses{}) == rose)) ++folding;
    }
    c.expect(conservation == 0, std::to_string(conservation) + " sets break conservation");
    c.expect(folding == 0, std::to_string(folding) + " sets break folding invariance");
  });

  criterion(8, "SVG rendering determinism, well-formedness and scale", 1.0, [](Check& c) {
    std::mt19937_64 rng(8);
    const auto rose = testing::random_rose(rng);
    RenderOptions opts;
    opts.show_values = true;
    opts.strip = Strip{67.5, 25.0};
    const auto a = render_rose_svg(rose, opts);
    const auto b = render_rose_svg(rose, opts);
    c.expect(a == b, "two renders differ");
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in(a);
    try {
      pt::read_xml(in, tree);
    } catch (const std::exception& e) {
      c.expect(false, std::string("XML parse failed: ") + e.what());
      return;
    }
    std::vector<double> radii;
    for (const auto& [name, child] : tree.get_child("svg")) {
      if (name == "circle" && child.get("<xmlattr>.class", "") == "ring") radii.push_back(child.get<double>("<xmlattr>.r"));
    }
    const auto rings = rose.geometry().rings();
    c.expect(radii.size() == rings.size(), "ring count " + std::to_string(radii.size()));
    for (std::size_t k = 0; k < std::min(radii.size(), rings.size()); ++k) {
      const double expected = radii.back() * rings[k] / rings.back();
      c.expect(std::abs(radii[k] - expected) <= 0.5, "ring " + std::to_string(k) + " radius " + fmt(radii[k]));
    }
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(g_failures) + " CRITERIA FAILED") << "\n";
  return g_failures == 0 ? 0 : 1;
}
