#include "fracwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace fracwave {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const double> x, std::span<const double> y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] > 0.0 && y[i] > 0.0) pts.emplace_back(std::log10(x[i]), std::log10(y[i]));
  if (pts.size() < 2) throw std::runtime_error("svg: fewer than two positive samples");

  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (const auto& [px, py] : pts) {
    x0 = std::min(x0, px); x1 = std::max(x1, px);
    y0 = std::min(y0, py); y1 = std::max(y1, py);
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;

  const double W = 640, H = 480, L = 70, R = 20, T = 40, B = 50;
  const auto px = [&](double lx) { return L + (lx - x0) / (x1 - x0) * (W - L - R); };
  const auto py = [&](double ly) { return H - B - (ly - y0) / (y1 - y0) * (H - T - B); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";

  // decade gridlines
  for (int d = static_cast<int>(std::ceil(x0)); d <= static_cast<int>(std::floor(x1)); ++d) {
    out << "<line x1=\"" << fmt(px(d)) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\""
        << fmt(px(d)) << "\" y2=\"" << fmt(py(y1)) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << fmt(px(d)) << "\" y=\"" << H - B + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(y0)); d <= static_cast<int>(std::floor(y1)); ++d) {
    out << "<line x1=\"" << fmt(px(x0)) << "\" y1=\"" << fmt(py(d)) << "\" x2=\""
        << fmt(px(x1)) << "\" y2=\"" << fmt(py(d)) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << L - 6 << "\" y=\"" << fmt(py(d) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">1e" << d << "</text>\n";
  }
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R
      << "\" height=\"" << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (const auto& [lx, ly] : pts) out << fmt(px(lx)) << "," << fmt(py(ly)) << " ";
  out << "\"/>\n";

  out << "<text x=\"" << W / 2 << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << H / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << H / 2 << ")\">" << y_label << "</text>\n";
  out << "</svg>\n";
}

}  // namespace fracwave
