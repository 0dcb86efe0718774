// windrose: runway orientation from wind data (Type-II wind rose).
//
// Exit codes: 0 success, 1 validation, 2 I/O or parse, 3 internal.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "windrose/coverage.hpp"
#include "windrose/error.hpp"
#include "windrose/format.hpp"
#include "windrose/geometry.hpp"
#include "windrose/io.hpp"
#include "windrose/render.hpp"

namespace {

using namespace windrose;

enum ExitCode : int { kOk = 0, kValidation = 1, kIoOrParse = 2, kInternal = 3 };

struct RunConfig {
  std::string input = "-";
  std::string bands = "6.4,15,30,47";
  std::size_t classes = 8;
  double crosswind = kDefaultHalfWidth;
  std::string coeffs = "derived";
  double threshold = kFaaThresholdPct;
  std::string pair = "none";
  std::string numbering = "standard";
  std::uint64_t seed = kDefaultMcSeed;
  std::size_t mc_samples = kDefaultMcSamples;
  std::string format;
  std::string svg;
  std::string out = "-";
  bool storm_as_calm = false;
  bool verify = false;
  std::optional<double> strip_azimuth;
  bool show_values = false;
  int decimals = 2;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kIo:
      return kIoOrParse;
    default:
      return kValidation;
  }
}

BandGeometry geometry_of(const RunConfig& cfg) { return BandGeometry(parse_band_list(cfg.bands)); }

StormPolicy storm_policy(const RunConfig& cfg) {
  return cfg.storm_as_calm ? StormPolicy::kFoldIntoCalm : StormPolicy::kTrackAboveMax;
}

// Binned input carries its own geometry; raw input is binned with the flags.
WindRose load_rose(const RunConfig& cfg, bool geometry_flags_given) {
  const std::string text = read_file(cfg.input);
  switch (detect_input_kind(text)) {
    case InputKind::kBinnedCsv:
    case InputKind::kBinnedJson: {
      WindRose rose = detect_input_kind(text) == InputKind::kBinnedCsv ? parse_rose_csv(text) : parse_rose_json(text);
      if (geometry_flags_given &&
          (rose.geometry() != geometry_of(cfg) || rose.class_count() != cfg.classes)) {
        throw Error(ErrorCode::kBadOptions, "--bands/--classes disagree with the binned input header");
      }
      return rose;
    }
    case InputKind::kRawObservations:
      break;
  }
  const auto obs = parse_observations_csv(text);
  return bin_observations(obs, geometry_of(cfg), OrientationClasses(cfg.classes), storm_policy(cfg));
}

CoefficientTable table_for(const RunConfig& cfg, const BandGeometry& geometry, const OrientationClasses& classes) {
  if (parse_coefficient_source(cfg.coeffs) == CoefficientSource::kPaper) {
    if (!geometry.is_default() || classes.count() != 8 || cfg.crosswind != kDefaultHalfWidth) {
      throw Error(ErrorCode::kCompatModeUnavailable,
                  "paper coefficients exist only for bands 6.4,15,30,47, 8 classes and crosswind 25");
    }
    return paper_coefficient_table();
  }
  return coefficient_table(geometry, classes, cfg.crosswind);
}

int run_bin(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  const auto obs = parse_observations_csv(text);
  const auto rose = bin_observations(obs, geometry_of(cfg), OrientationClasses(cfg.classes), storm_policy(cfg));
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  if (fmt != "csv" && fmt != "json") throw Error(ErrorCode::kBadOptions, "bin --format must be csv or json");
  write_file(cfg.out, fmt == "json" ? write_rose_json(rose) : write_rose_csv(rose));
  return kOk;
}

int run_orient(const RunConfig& cfg, bool geometry_flags_given) {
  const WindRose rose = load_rose(cfg, geometry_flags_given);
  validate_rose(rose);
  const auto table = table_for(cfg, rose.geometry(), rose.classes());
  const auto numbering = parse_numbering(cfg.numbering);
  const auto report = make_report(rose, table, numbering, cfg.threshold);

  ReportContext ctx;
  ctx.rose = &rose;
  ctx.source = table.source;
  ctx.half_width_kmph = cfg.crosswind;
  ctx.numbering = numbering;
  ctx.pair_mode = parse_pair_mode(cfg.pair);
  if (ctx.pair_mode != PairMode::kNone) {
    ctx.pair = best_pair(rose, report.best_class, ctx.pair_mode, cfg.crosswind);
  }

  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt != "json" && fmt != "text") throw Error(ErrorCode::kBadOptions, "orient --format must be json or text");
  write_file(cfg.out, fmt == "json" ? write_report_json(report, ctx) : write_report_text(report, ctx));

  if (!cfg.svg.empty()) {
    RenderOptions opts;
    opts.strip = Strip{report.best_azimuth_deg, cfg.crosswind};
    opts.show_values = true;
    write_file(cfg.svg, render_rose_svg(rose, opts));
  }
  return kOk;
}

int run_coeffs(const RunConfig& cfg) {
  const auto geometry = geometry_of(cfg);
  const OrientationClasses classes(cfg.classes);
  const auto table = table_for(cfg, geometry, classes);
  std::optional<double> deviation;
  if (cfg.verify) {
    const auto exact = coefficient_table(geometry, classes, cfg.crosswind);
    deviation = verify_against_oracle(exact, geometry, classes, cfg.mc_samples, cfg.seed).max_abs_deviation;
  }
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  if (fmt == "json") {
    write_file(cfg.out, write_coefficients_json(table, geometry, deviation));
  } else if (fmt == "csv") {
    std::string text = write_coefficients_csv(table, geometry);
    if (deviation) text += "# oracle_max_abs_deviation=" + format_significant(*deviation, 9) + "\n";
    write_file(cfg.out, text);
  } else {
    throw Error(ErrorCode::kBadOptions, "coeffs --format must be csv or json");
  }
  return kOk;
}

int run_render(const RunConfig& cfg, bool geometry_flags_given) {
  const WindRose rose = load_rose(cfg, geometry_flags_given);
  RenderOptions opts;
  if (cfg.strip_azimuth) opts.strip = Strip{*cfg.strip_azimuth, cfg.crosswind};
  opts.show_values = cfg.show_values;
  opts.decimals = cfg.decimals;
  write_file(cfg.out, render_rose_svg(rose, opts));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Runway orientation from wind data using the Type-II wind rose"};
  app.require_subcommand(1);

  auto add_geometry = [&](CLI::App* cmd) {
    auto* b = cmd->add_option("--bands", cfg.bands, "Ring radii in km/h; the first is the calm threshold");
    auto* c = cmd->add_option("--classes", cfg.classes, "Number of runway orientation classes")
                  ->check(CLI::Range(std::size_t{2}, std::size_t{3600}));
    return std::pair{b, c};
  };

  auto* bin = app.add_subcommand("bin", "Bin raw observations into a wind rose");
  bin->add_option("input", cfg.input, "Raw observation CSV ('-' for stdin)");
  add_geometry(bin);
  bin->add_flag("--storm-as-calm", cfg.storm_as_calm,
                "Leave winds at or above the outer ring unrecorded (they count as calm)");
  bin->add_option("--format", cfg.format, "csv | json");
  bin->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  auto* orient = app.add_subcommand("orient", "Find the best runway orientation");
  orient->add_option("input", cfg.input, "Binned rose (CSV or JSON) or raw observation CSV");
  auto orient_geo = add_geometry(orient);
  orient->add_flag("--storm-as-calm", cfg.storm_as_calm, "When binning raw input, fold storm winds into calm");
  orient->add_option("--crosswind", cfg.crosswind, "Crosswind half-width in km/h");
  orient->add_option("--coeffs", cfg.coeffs, "derived | paper");
  orient->add_option("--threshold", cfg.threshold, "Required coverage in percent");
  orient->add_option("--pair", cfg.pair, "none | perpendicular | exhaustive");
  orient->add_option("--numbering", cfg.numbering, "standard | paper");
  orient->add_option("--format", cfg.format, "json | text");
  orient->add_option("--svg", cfg.svg, "Also write an SVG of the rose with the chosen strip");
  orient->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  auto* coeffs = app.add_subcommand("coeffs", "Print the strip-overlap coefficient table");
  add_geometry(coeffs);
  coeffs->add_option("--crosswind", cfg.crosswind, "Crosswind half-width in km/h");
  coeffs->add_option("--coeffs", cfg.coeffs, "derived | paper");
  coeffs->add_flag("--verify", cfg.verify, "Compare the exact table with the Monte Carlo oracle");
  coeffs->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples per cell")
      ->check(CLI::PositiveNumber);
  coeffs->add_option("--seed", cfg.seed, "Monte Carlo seed");
  coeffs->add_option("--format", cfg.format, "csv | json");
  coeffs->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  auto* render = app.add_subcommand("render", "Render the wind rose as SVG");
  render->add_option("input", cfg.input, "Binned rose (CSV or JSON) or raw observation CSV");
  auto render_geo = add_geometry(render);
  render->add_flag("--storm-as-calm", cfg.storm_as_calm, "When binning raw input, fold storm winds into calm");
  render->add_option("--crosswind", cfg.crosswind, "Strip half-width in km/h");
  render->add_option("--strip-azimuth", cfg.strip_azimuth, "Overlay a strip along this azimuth");
  render->add_flag("--show-values", cfg.show_values, "Print cell percentages");
  render->add_option("--decimals", cfg.decimals, "Decimal places for cell values");
  render->add_option("--out", cfg.out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (bin->parsed()) return run_bin(cfg);
    if (orient->parsed()) {
      return run_orient(cfg, orient_geo.first->count() > 0 || orient_geo.second->count() > 0);
    }
    if (coeffs->parsed()) return run_coeffs(cfg);
    if (render->parsed()) {
      return run_render(cfg, render_geo.first->count() > 0 || render_geo.second->count() > 0);
    }
  } catch (const Error& e) {
    std::cerr << "windrose: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "windrose: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
