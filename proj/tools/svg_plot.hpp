// SPDX-License-Identifier: Apache-2.0
#pragma once

// Minimal polyline SVG writer for rate-distortion curves: rate (bps) on x,
// PSNR (dB) on y.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "xpcc/error.hpp"
#include "xpcc/metrics.hpp"

namespace xpcc::tool {

inline void write_rd_svg(const std::filesystem::path& path,
                         const std::vector<RdCurve>& curves) {
  constexpr double kWidth = 640, kHeight = 480;
  constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;
  static const char* kColors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad"};

  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  for (const RdCurve& curve : curves) {
    for (const RdPoint& p : curve.points) {
      x_min = std::min(x_min, p.rate);
      x_max = std::max(x_max, p.rate);
      y_min = std::min(y_min, p.psnr);
      y_max = std::max(y_max, p.psnr);
    }
  }
  if (x_min > x_max) fail(Errc::invalid_argument, "no curve points to plot");
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double rate) { return kLeft + (rate - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double psnr) { return kTop + (1.0 - (psnr - y_min) / (y_max - y_min)) * plot_h; };

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    const double fx = x_min + (x_max - x_min) * tick / 5;
    const double fy = y_min + (y_max - y_min) * tick / 5;
    svg << "<line x1=\"" << sx(fx) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << sx(fx)
        << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << sx(fx) << "\" y=\"" << kTop + plot_h + 20
        << "\" font-size=\"11\" text-anchor=\"middle\">" << std::setprecision(0) << fx
        << std::setprecision(2) << "</text>\n"
        << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << kLeft
        << "\" y2=\"" << sy(fy) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(fy) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << fy << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" font-size=\"13\" text-anchor=\"middle\">rate (bps)</text>\n"
      << "<text x=\"15\" y=\"" << kTop + plot_h / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << kTop + plot_h / 2 << ")\">PSNR (dB)</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kColors[c % 4];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const RdPoint& p : curves[c].points) svg << sx(p.rate) << "," << sy(p.psnr) << " ";
    svg << "\"/>\n";
    for (const RdPoint& p : curves[c].points) {
      svg << "<circle cx=\"" << sx(p.rate) << "\" cy=\"" << sy(p.psnr)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w - 8 << "\" y=\"" << kTop + 16 + 16 * static_cast<double>(c)
        << "\" font-size=\"12\" text-anchor=\"end\" fill=\"" << color << "\">"
        << curves[c].label << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
  out << svg.str();
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace xpcc::tool
