#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace herdscope::plot {

struct Series {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;
  bool connect = false;  // draw a polyline through the points
};

struct Axes {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
};

/// Static SVG chart; output is a pure function of its inputs.
std::string render_svg(const Axes& axes, const std::vector<Series>& series);

/// Minimal CSV reader for the bundle's own files (header + rows, RFC 4180
/// quoting). Throws DataError on ragged rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
  std::vector<double> numbers(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);

struct PlotOutcome {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> errors;  // one per missing or unreadable series
};

/// Renders every known plottable CSV in a report bundle next to it as SVG.
/// A missing or malformed CSV is recorded and the rest still render.
PlotOutcome plot_bundle(const std::filesystem::path& bundle_dir);

}  // namespace herdscope::plot
