#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace windrose {

enum class CoefficientSource { kPaper, kDerived };

std::string_view to_string(CoefficientSource source);
/// Accepts "paper" or "derived"; throws Error(kBadOptions) otherwise.
CoefficientSource parse_coefficient_source(std::string_view text);

/// Overlap fraction per (band, angular offset). Entry [b][k] multiplies the
/// band-b percentage of a class lying k classes away from the runway axis.
struct CoefficientTable {
  CoefficientSource source = CoefficientSource::kDerived;
  double half_width_kmph = 25.0;
  std::vector<std::vector<double>> rows;

  std::size_t band_count() const { return rows.size(); }
  std::size_t class_count() const { return rows.empty() ? 0 : rows.front().size(); }
  double at(std::size_t band, std::size_t offset) const { return rows.at(band).at(offset); }
};

/// The measured constants of the original tool, valid only for the default
/// rose (rings 6.4/15/30/47, 8 classes, 50 km/h template). The first band has
/// coefficient 1 everywhere.
const CoefficientTable& paper_coefficient_table();

/// Checks entries in [0, 1] and rectangular shape; throws
/// Error(kDimensionMismatch) on failure.
void check_table(const CoefficientTable& table);

}  // namespace windrose
