#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace lejalab::cli {
namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string text(double x, double y, const std::string& body, const char* anchor = "middle") {
  return "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) + "\" text-anchor=\"" + anchor +
         "\">" + escape(body) + "</text>\n";
}

}  // namespace

std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<Series>& series,
                      bool log2_x) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  std::set<double> xs;
  auto xmap = [&](double x) { return log2_x ? std::log2(x) : x; };
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      if (!std::isfinite(y) || (log2_x && !(x > 0))) continue;
      xs.insert(x);
      xmin = std::min(xmin, xmap(x));
      xmax = std::max(xmax, xmap(x));
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xs.empty()) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (xmap(x) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
      "viewBox=\"0 0 640 400\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += text(kLeft + pw / 2, 22, title);
  out += "<path d=\"M" + fmt("%.2f", kLeft) + " " + fmt("%.2f", kTop) + " V" +
         fmt("%.2f", kTop + ph) + " H" + fmt("%.2f", kLeft + pw) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double y = ymin + (ymax - ymin) * i / 4.0;
    out += "<path d=\"M" + fmt("%.2f", kLeft - 4) + " " + fmt("%.2f", py(y)) + " H" +
           fmt("%.2f", kLeft + pw) + "\" stroke=\"#ddd\"/>\n";
    out += text(kLeft - 8, py(y) + 4, fmt("%.4g", y), "end");
  }
  for (double x : xs) {
    out += "<path d=\"M" + fmt("%.2f", px(x)) + " " + fmt("%.2f", kTop + ph) + " v4\" "
           "stroke=\"black\"/>\n";
    out += text(px(x), kTop + ph + 18, fmt("%g", x));
  }
  out += text(kLeft + pw / 2, kHeight - 10, x_label);
  out += "<text x=\"16\" y=\"" + fmt("%.2f", kTop + ph / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + fmt("%.2f", kTop + ph / 2) +
         ")\">" + escape(y_label) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    std::string d;
    for (auto [x, y] : series[i].points) {
      if (!std::isfinite(y) || (log2_x && !(x > 0))) continue;
      d += (d.empty() ? "M" : " L") + fmt("%.2f", px(x)) + " " + fmt("%.2f", py(y));
      out += "<circle cx=\"" + fmt("%.2f", px(x)) + "\" cy=\"" + fmt("%.2f", py(y)) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    if (!d.empty()) {
      out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out += "<path d=\"M" + fmt("%.2f", kLeft + pw + 12) + " " + fmt("%.2f", ly) + " h20\" stroke=\"" +
           color + "\" stroke-width=\"2\"/>\n";
    out += text(kLeft + pw + 38, ly + 4, series[i].name, "start");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lejalab::cli
