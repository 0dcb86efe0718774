#pragma once

// File formats.
//
// Raw observations (CSV):
//   direction_deg,speed_kmph[,weight]
//   270,12.5
//   # comment lines start with '#'
//
// Binned rose (CSV):
//   # bands=6.4,15,30,47 classes=8
//   <n percentages for band 0>
//   ...
//   above_max,<pct>          (optional)
//
// All parse failures throw Error(kParse) with a 1-based line number.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/coefficients.hpp"
#include "windrose/coverage.hpp"
#include "windrose/rose.hpp"

namespace windrose {

std::vector<RawObservation> parse_observations_csv(std::string_view text);

WindRose parse_rose_csv(std::string_view text);
std::string write_rose_csv(const WindRose& rose);

WindRose parse_rose_json(std::string_view text);
std::string write_rose_json(const WindRose& rose);

enum class InputKind { kRawObservations, kBinnedCsv, kBinnedJson };

/// Binned CSV starts with "# bands=", binned JSON with '{'; anything else
/// is treated as raw observations.
InputKind detect_input_kind(std::string_view text);

/// Parses "6.4,15,30,47" into ring radii.
std::vector<double> parse_band_list(std::string_view text);

/// Rows are bands, columns are offsets, 9 significant digits.
std::string write_coefficients_csv(const CoefficientTable& table, const BandGeometry& geometry);
std::string write_coefficients_json(const CoefficientTable& table, const BandGeometry& geometry,
                                    std::optional<double> oracle_max_deviation = std::nullopt);

struct ReportContext {
  const WindRose* rose = nullptr;
  CoefficientSource source = CoefficientSource::kDerived;
  double half_width_kmph = 25.0;
  Numbering numbering = Numbering::kStandard;
  std::optional<PairResult> pair;
  PairMode pair_mode = PairMode::kNone;
};

inline constexpr int kReportSchemaVersion = 1;

/// JSON report, numbers with 6 decimal places, fixed key order.
std::string write_report_json(const CoverageReport& report, const ReportContext& ctx);
/// Human-readable result table.
std::string write_report_text(const CoverageReport& report, const ReportContext& ctx);

std::string read_file(const std::string& path);  // "-" reads stdin; Error(kIo)
void write_file(const std::string& path, std::string_view content);  // "-" writes stdout

}  // namespace windrose
