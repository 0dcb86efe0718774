#pragma once

// Locale-independent number formatting (always '.' as decimal separator).

#include <optional>
#include <string>
#include <string_view>

namespace windrose {

/// Fixed notation with `decimals` digits after the point. Negative zero is
/// printed as zero.
std::string format_fixed(double value, int decimals);

/// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

/// %g-style output with `digits` significant digits.
std::string format_significant(double value, int digits);

/// Parses the whole of `text` (surrounding blanks allowed) as a double.
std::optional<double> parse_double(std::string_view text);

}  // namespace windrose
