#include "windrose/coefficients.hpp"

#include <string>

#include "windrose/error.hpp"

namespace windrose {

std::string_view to_string(CoefficientSource source) {
  return source == CoefficientSource::kPaper ? "paper" : "derived";
}

CoefficientSource parse_coefficient_source(std::string_view text) {
  if (text == "paper") return CoefficientSource::kPaper;
  if (text == "derived") return CoefficientSource::kDerived;
  throw Error(ErrorCode::kBadOptions, "unknown coefficient source '" + std::string(text) + "'");
}

const CoefficientTable& paper_coefficient_table() {
  static const CoefficientTable table{
      CoefficientSource::kPaper,
      25.0,
      {
          {1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 0.831353, 0.626081, 0.831353, 1, 1},
          {1, 1, 0.358123, 0, 0, 0, 0.358123, 1},
      },
  };
  return table;
}

void check_table(const CoefficientTable& table) {
  if (table.rows.empty() || table.class_count() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "coefficient table is empty");
  }
  for (const auto& row : table.rows) {
    if (row.size() != table.class_count()) {
      throw Error(ErrorCode::kDimensionMismatch, "coefficient table rows differ in length");
    }
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::kDimensionMismatch, "coefficient outside [0, 1]");
      }
    }
  }
}

}  // namespace windrose
