#include "windrose/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "windrose/error.hpp"
#include "windrose/format.hpp"

namespace windrose {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  std::size_t number = 1;
  // Skip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto line = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    out.push_back({number++, trim(line)});
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

double number_at(std::string_view field, std::size_t line, const char* name) {
  const auto v = parse_double(field);
  if (!v || !std::isfinite(*v)) parse_error(line, std::string("invalid ") + name + " '" + std::string(field) + "'");
  return *v;
}

}  // namespace

std::vector<RawObservation> parse_observations_csv(std::string_view text) {
  std::vector<RawObservation> obs;
  bool header_seen = false;
  bool has_weight = false;
  for (const auto& [n, line] : lines_of(text)) {
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ',');
    if (!header_seen) {
      if (fields.size() < 2 || fields[0] != "direction_deg" || fields[1] != "speed_kmph" ||
          (fields.size() == 3 && fields[2] != "weight") || fields.size() > 3) {
        parse_error(n, "expected header 'direction_deg,speed_kmph[,weight]'");
      }
      has_weight = fields.size() == 3;
      header_seen = true;
      continue;
    }
    if (fields.size() != (has_weight ? 3u : 2u)) {
      parse_error(n, "expected " + std::to_string(has_weight ? 3 : 2) + " fields, got " +
                         std::to_string(fields.size()));
    }
    RawObservation o;
    o.direction_deg = normalize_azimuth(number_at(fields[0], n, "direction"));
    o.speed_kmph = number_at(fields[1], n, "speed");
    if (o.speed_kmph < 0.0) parse_error(n, "negative speed");
    if (has_weight) {
      o.weight = number_at(fields[2], n, "weight");
      if (o.weight < 0.0) parse_error(n, "negative weight");
    }
    obs.push_back(o);
  }
  if (obs.empty()) throw Error(ErrorCode::kParse, "no observations");
  return obs;
}

std::vector<double> parse_band_list(std::string_view text) {
  std::vector<double> out;
  for (auto f : split(text, ',')) {
    const auto v = parse_double(f);
    if (!v) throw Error(ErrorCode::kBadOptions, "invalid band radius '" + std::string(f) + "'");
    out.push_back(*v);
  }
  return out;
}

InputKind detect_input_kind(std::string_view text) {
  const auto t = trim(text.substr(text.substr(0, 3) == "\xEF\xBB\xBF" ? 3 : 0));
  if (t.starts_with("{")) return InputKind::kBinnedJson;
  if (t.starts_with("# bands=")) return InputKind::kBinnedCsv;
  return InputKind::kRawObservations;
}

WindRose parse_rose_csv(std::string_view text) {
  const auto lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].text.empty()) ++i;
  if (i == lines.size() || !lines[i].text.starts_with("# bands=")) {
    throw Error(ErrorCode::kParse, "line 1: expected '# bands=<r0,r1,...> classes=<n>'");
  }
  const auto header_line = lines[i].number;
  const auto header = lines[i].text.substr(2);
  ++i;

  std::optional<std::vector<double>> rings;
  std::optional<std::size_t> class_count;
  std::istringstream tokens{std::string(header)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) parse_error(header_line, "malformed header token '" + token + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "bands") {
      try {
        rings = parse_band_list(value);
      } catch (const Error& e) {
        parse_error(header_line, e.what());
      }
    } else if (key == "classes") {
      const auto v = parse_double(value);
      if (!v || *v < 2 || *v != std::floor(*v) || *v > 3600) parse_error(header_line, "invalid class count");
      class_count = static_cast<std::size_t>(*v);
    } else {
      parse_error(header_line, "unknown header key '" + key + "'");
    }
  }
  if (!rings || !class_count) parse_error(header_line, "header needs both bands= and classes=");

  BandGeometry geometry;
  try {
    geometry = BandGeometry(*rings);
  } catch (const Error& e) {
    parse_error(header_line, e.what());
  }
  const OrientationClasses classes(*class_count);

  std::vector<double> cells;
  std::optional<double> above_max;
  std::size_t rows = 0;
  for (; i < lines.size(); ++i) {
    const auto& [n, line] = lines[i];
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ',');
    if (fields.front() == "above_max") {
      if (above_max) parse_error(n, "duplicate above_max row");
      if (fields.size() != 2) parse_error(n, "expected 'above_max,<pct>'");
      above_max = number_at(fields[1], n, "percentage");
      continue;
    }
    if (above_max) parse_error(n, "band rows must precede above_max");
    if (rows == geometry.band_count()) parse_error(n, "more band rows than bands");
    if (fields.size() != classes.count()) {
      parse_error(n, "expected " + std::to_string(classes.count()) + " percentages, got " +
                         std::to_string(fields.size()));
    }
    for (auto f : fields) cells.push_back(number_at(f, n, "percentage"));
    ++rows;
  }
  if (rows != geometry.band_count()) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(geometry.band_count()) + " band rows, got " +
                                       std::to_string(rows));
  }
  return WindRose(geometry, classes, std::move(cells), above_max.value_or(0.0));
}

std::string write_rose_csv(const WindRose& rose) {
  std::string out = "# bands=";
  const auto rings = rose.geometry().rings();
  for (std::size_t k = 0; k < rings.size(); ++k) {
    if (k) out += ',';
    out += format_roundtrip(rings[k]);
  }
  out += " classes=" + std::to_string(rose.class_count()) + "\n";
  for (std::size_t b = 0; b < rose.band_count(); ++b) {
    for (std::size_t j = 0; j < rose.class_count(); ++j) {
      if (j) out += ',';
      out += format_roundtrip(rose.cell(b, j));
    }
    out += '\n';
  }
  out += "above_max," + format_roundtrip(rose.above_max()) + "\n";
  return out;
}

std::string write_rose_json(const WindRose& rose) {
  nlohmann::ordered_json j;
  j["bands"] = std::vector<double>(rose.geometry().rings().begin(), rose.geometry().rings().end());
  j["classes"] = rose.class_count();
  auto cells = nlohmann::json::array();
  for (std::size_t b = 0; b < rose.band_count(); ++b) {
    const auto row = rose.band_row(b);
    cells.push_back(std::vector<double>(row.begin(), row.end()));
  }
  j["cells"] = std::move(cells);
  j["above_max"] = rose.above_max();
  j["calm"] = rose.calm();
  return j.dump(2) + "\n";
}

WindRose parse_rose_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto rings = j.at("bands").get<std::vector<double>>();
    const auto class_count = j.at("classes").get<std::size_t>();
    const auto rows = j.at("cells").get<std::vector<std::vector<double>>>();
    BandGeometry geometry(rings);
    OrientationClasses classes(class_count);
    if (rows.size() != geometry.band_count()) {
      throw Error(ErrorCode::kParse, "cells must have one row per band");
    }
    std::vector<double> cells;
    for (const auto& row : rows) {
      if (row.size() != class_count) throw Error(ErrorCode::kParse, "cell row length differs from classes");
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return WindRose(geometry, classes, std::move(cells), j.value("above_max", 0.0));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid rose JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, std::string("invalid rose JSON: ") + e.what());
  }
}

std::string write_coefficients_csv(const CoefficientTable& table, const BandGeometry& geometry) {
  std::string out = "band_kmph";
  for (std::size_t k = 0; k < table.class_count(); ++k) out += ",offset_" + std::to_string(k);
  out += '\n';
  for (std::size_t b = 0; b < table.band_count(); ++b) {
    out += format_roundtrip(geometry.band_lo(b)) + "-" + format_roundtrip(geometry.band_hi(b));
    for (double v : table.rows[b]) out += "," + format_significant(v, 9);
    out += '\n';
  }
  return out;
}

std::string write_coefficients_json(const CoefficientTable& table, const BandGeometry& geometry,
                                    std::optional<double> oracle_max_deviation) {
  nlohmann::ordered_json j;
  j["source"] = std::string(to_string(table.source));
  j["crosswind_half_width_kmph"] = table.half_width_kmph;
  j["bands"] = std::vector<double>(geometry.rings().begin(), geometry.rings().end());
  j["classes"] = table.class_count();
  j["rows"] = table.rows;
  if (oracle_max_deviation) j["oracle_max_abs_deviation"] = *oracle_max_deviation;
  return j.dump(2) + "\n";
}

namespace {

std::string num(double v) { return format_fixed(v, 6); }

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace

std::string write_report_json(const CoverageReport& report, const ReportContext& ctx) {
  const auto& classes = ctx.rose->classes();
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kReportSchemaVersion << ",\n";
  out << "  \"classes\": " << classes.count() << ",\n";
  out << "  \"bands_kmph\": [";
  const auto rings = ctx.rose->geometry().rings();
  for (std::size_t k = 0; k < rings.size(); ++k) out << (k ? ", " : "") << num(rings[k]);
  out << "],\n";
  out << "  \"crosswind_half_width_kmph\": " << num(ctx.half_width_kmph) << ",\n";
  out << "  \"coefficient_source\": " << quoted(to_string(ctx.source)) << ",\n";
  out << "  \"numbering\": " << quoted(to_string(ctx.numbering)) << ",\n";
  out << "  \"calm_pct\": " << num(report.calm_pct) << ",\n";
  out << "  \"above_max_pct\": " << num(report.above_max_pct) << ",\n";
  out << "  \"coverage\": [\n";
  for (std::size_t i = 0; i < report.coverage.size(); ++i) {
    const double az = classes.azimuth_deg(i);
    out << "    {\"class\": " << i << ", \"azimuth_deg\": " << num(az) << ", \"orientation\": "
        << quoted(orientation_name(az)) << ", \"designator\": "
        << quoted(runway_designator(ctx.numbering, az, i, classes.count()).str())
        << ", \"coverage_pct\": " << num(report.coverage[i]) << "}" << (i + 1 < report.coverage.size() ? "," : "")
        << "\n";
  }
  out << "  ],\n";
  out << "  \"best\": {\"class\": " << report.best_class << ", \"azimuth_deg\": " << num(report.best_azimuth_deg)
      << ", \"orientation\": " << quoted(orientation_name(report.best_azimuth_deg))
      << ", \"designator\": " << quoted(report.designator.str()) << ", \"coverage_pct\": "
      << num(report.best_coverage_pct) << "},\n";
  out << "  \"meets_threshold\": " << (report.meets_threshold ? "true" : "false") << ",\n";
  out << "  \"threshold_pct\": " << num(report.threshold_pct);
  if (ctx.pair) {
    const auto& p = *ctx.pair;
    const double az = classes.azimuth_deg(p.partner);
    out << ",\n  \"pair\": {\"mode\": " << quoted(to_string(ctx.pair_mode)) << ", \"primary_class\": " << p.primary
        << ", \"partner_class\": " << p.partner << ", \"partner_azimuth_deg\": " << num(az)
        << ", \"partner_designator\": " << quoted(runway_designator(ctx.numbering, az, p.partner, classes.count()).str())
        << ", \"combined_coverage_pct\": " << num(p.coverage_pct)
        << ", \"combined_meets_threshold\": " << (p.coverage_pct >= report.threshold_pct ? "true" : "false") << "}";
  }
  out << "\n}\n";
  return out.str();
}

std::string write_report_text(const CoverageReport& report, const ReportContext& ctx) {
  const auto& classes = ctx.rose->classes();
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("Orientation", 16) << pad("Runway", 8) << "Coverage (%)\n";
  for (std::size_t i = 0; i < report.coverage.size(); ++i) {
    const double az = classes.azimuth_deg(i);
    out << pad(orientation_name(az), 16) << pad(runway_designator(ctx.numbering, az, i, classes.count()).str(), 8)
        << num(report.coverage[i]) << (i == report.best_class ? "  <- best" : "") << "\n";
  }
  out << "\n";
  out << "Calm (%):            " << num(report.calm_pct) << "\n";
  if (report.above_max_pct > 0.0) out << "Above outer ring (%): " << num(report.above_max_pct) << "\n";
  out << "Coefficients:        " << to_string(ctx.source) << " (crosswind half-width " << num(ctx.half_width_kmph)
      << " km/h)\n";
  out << "Runway orientation:  " << orientation_name(report.best_azimuth_deg) << "\n";
  out << "Runway number:       " << report.designator.str() << "\n";
  out << "Coverage (%):        " << num(report.best_coverage_pct) << "\n";
  out << "Meets " << format_roundtrip(report.threshold_pct) << "%:            " << (report.meets_threshold ? "yes" : "no") << "\n";
  if (!report.meets_threshold) {
    out << "Note: the best single orientation is below the required coverage; add a second runway "
           "orientation (--pair) until the combined coverage reaches it.\n";
  }
  if (ctx.pair) {
    const auto& p = *ctx.pair;
    const double az = classes.azimuth_deg(p.partner);
    out << "Second runway:       " << orientation_name(az) << " ("
        << runway_designator(ctx.numbering, az, p.partner, classes.count()).str() << ", " << to_string(ctx.pair_mode)
        << ")\n";
    out << "Combined coverage:   " << num(p.coverage_pct) << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::kIo, "error writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "error writing '" + path + "'");
}

}  // namespace windrose
