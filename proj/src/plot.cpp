#include "herdscope/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope::plot {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;
constexpr int kTicks = 5;

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  auto s = fmt::format("{:.2f}", v);
  if (s == "-0.00") s.erase(0, 1);
  return s;
}

std::string tick_label(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  return fmt::format("{:.4g}", v);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read '{}'", p.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PlotSpec {
  std::string_view csv;
  std::function<std::pair<Axes, std::vector<Series>>(const CsvTable&)> build;
};

std::vector<std::pair<double, double>> zip(const std::vector<double>& xs,
                                           const std::vector<double>& ys) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
  return pts;
}

double max_or(const std::vector<double>& v, double fallback) {
  return v.empty() ? fallback : std::max(fallback, *std::max_element(v.begin(), v.end()));
}

const std::vector<PlotSpec>& plot_specs() {
  static const std::vector<PlotSpec> specs = {
      {"subjectivity_scatter.csv",
       [](const CsvTable& t) {
         auto x = t.numbers("index");
         Axes a{"Subjectivity per tweet", "tweet index", "subjectivity",
                0.0, max_or(x, 1.0), 0.0, 1.0};
         return std::pair{a, std::vector<Series>{
                                 {"subjectivity", "#1f77b4", zip(x, t.numbers("subjectivity"))}}};
       }},
      {"polarity_scatter.csv",
       [](const CsvTable& t) {
         auto x = t.numbers("index");
         Axes a{"Polarity per tweet", "tweet index", "polarity",
                0.0, max_or(x, 1.0), -1.0, 1.0};
         return std::pair{a, std::vector<Series>{
                                 {"polarity", "#d62728", zip(x, t.numbers("polarity"))}}};
       }},
      {"combined_scatter.csv",
       [](const CsvTable& t) {
         auto x = t.numbers("index");
         Axes a{"Subjectivity and polarity per tweet", "tweet index", "score",
                0.0, max_or(x, 1.0), -1.0, 1.0};
         return std::pair{
             a, std::vector<Series>{
                    {"subjectivity", "#1f77b4", zip(x, t.numbers("subjectivity"))},
                    {"polarity", "#d62728", zip(x, t.numbers("polarity"))}}};
       }},
      {"ck_curve.csv",
       [](const CsvTable& t) {
         auto x = t.numbers("degree");
         Axes a{"Clustering coefficient vs node degree", "degree k", "mean C(k)",
                0.0, max_or(x, 1.0), 0.0, 1.0};
         return std::pair{a, std::vector<Series>{{"C(k)", "#2ca02c",
                                                  zip(x, t.numbers("mean_clustering")),
                                                  true}}};
       }},
      {"degree_distribution.csv",
       [](const CsvTable& t) {
         auto x = t.numbers("degree");
         auto y = t.numbers("count");
         Axes a{"Degree distribution", "degree k", "nodes",
                0.0, max_or(x, 1.0), 0.0, max_or(y, 1.0)};
         return std::pair{a, std::vector<Series>{{"nodes", "#9467bd", zip(x, y), true}}};
       }},
  };
  return specs;
}

}  // namespace

std::string render_svg(const Axes& axes, const std::vector<Series>& series) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double xspan = axes.x_max > axes.x_min ? axes.x_max - axes.x_min : 1.0;
  const double yspan = axes.y_max > axes.y_min ? axes.y_max - axes.y_min : 1.0;
  auto px = [&](double x) { return kLeft + (x - axes.x_min) / xspan * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - axes.y_min) / yspan * plot_h; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      "font-size=\"15\">{3}</text>\n",
      coord(kWidth), coord(kHeight), coord(kWidth / 2), xml_escape(axes.title));

  // axes frame
  svg += fmt::format(
      "<g stroke=\"black\" stroke-width=\"1\">\n"
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n"
      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1}\"/>\n"
      "</g>\n",
      coord(kLeft), coord(kTop + plot_h), coord(kLeft + plot_w), coord(kTop));

  svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    double xv = axes.x_min + xspan * i / kTicks;
    double yv = axes.y_min + yspan * i / kTicks;
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text x=\"{0}\" y=\"{3}\" text-anchor=\"middle\">{4}</text>\n",
        coord(px(xv)), coord(kTop + plot_h), coord(kTop + plot_h + 5),
        coord(kTop + plot_h + 18), tick_label(xv));
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text x=\"{3}\" y=\"{4}\" text-anchor=\"end\">{5}</text>\n",
        coord(kLeft - 5), coord(kLeft), coord(py(yv)), coord(kLeft - 8),
        coord(py(yv) + 4), tick_label(yv));
  }
  svg += fmt::format(
      "<text x=\"{0}\" y=\"{1}\" text-anchor=\"middle\">{2}</text>\n"
      "<text x=\"16\" y=\"{3}\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 16 {3})\">{4}</text>\n",
      coord(kLeft + plot_w / 2), coord(kHeight - 14), xml_escape(axes.x_label),
      coord(kTop + plot_h / 2), xml_escape(axes.y_label));
  svg += "</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    svg += fmt::format("<g fill=\"{0}\" stroke=\"{0}\">\n", xml_escape(ser.color));
    if (ser.connect && ser.points.size() > 1) {
      svg += "<polyline fill=\"none\" points=\"";
      for (std::size_t i = 0; i < ser.points.size(); ++i) {
        if (i > 0) svg += ' ';
        svg += coord(px(ser.points[i].first)) + "," + coord(py(ser.points[i].second));
      }
      svg += "\"/>\n";
    }
    for (const auto& [x, y] : ser.points) {
      svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\"/>\n", coord(px(x)),
                         coord(py(y)));
    }
    // legend entry
    double ly = kTop + 6 + 16.0 * static_cast<double>(s);
    svg += fmt::format(
        "<rect x=\"{0}\" y=\"{1}\" width=\"10\" height=\"10\"/>"
        "<text x=\"{2}\" y=\"{3}\" stroke=\"none\" fill=\"black\" "
        "font-family=\"sans-serif\" font-size=\"11\">{4}</text>\n",
        coord(kLeft + plot_w - 110), coord(ly), coord(kLeft + plot_w - 95),
        coord(ly + 9), xml_escape(ser.name));
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::size_t CsvTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw DataError(fmt::format("missing column '{}'", name));
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<double> CsvTable::numbers(std::string_view name) const {
  std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const auto& cell = row[c];
    double v = 0.0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || p != cell.data() + cell.size())
      throw DataError(fmt::format("column '{}': '{}' is not a number", name, cell));
    out.push_back(v);
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(fields));
      fields.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any || !field.empty() || !fields.empty()) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  if (records.empty()) throw DataError("empty CSV");

  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size())
      throw DataError(fmt::format("CSV row {} has {} fields, expected {}", r + 1,
                                  records[r].size(), table.header.size()));
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

PlotOutcome plot_bundle(const std::filesystem::path& bundle_dir) {
  if (!std::filesystem::is_directory(bundle_dir))
    throw IoError(fmt::format("bundle directory '{}' not found", bundle_dir.string()));
  PlotOutcome outcome;
  for (const auto& spec : plot_specs()) {
    auto csv_path = bundle_dir / spec.csv;
    try {
      if (!std::filesystem::exists(csv_path))
        throw IoError(fmt::format("missing {}", spec.csv));
      auto [axes, series] = spec.build(parse_csv(read_file(csv_path)));
      auto svg_path = csv_path;
      svg_path.replace_extension(".svg");
      std::ofstream out(svg_path, std::ios::binary);
      out << render_svg(axes, series);
      if (!out) throw IoError(fmt::format("cannot write '{}'", svg_path.string()));
      outcome.written.push_back(svg_path);
    } catch (const Error& e) {
      outcome.errors.push_back(fmt::format("{}: {}", spec.csv, e.what()));
    }
  }
  return outcome;
}

}  // namespace herdscope::plot
