// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xpcc/cloud.hpp"

namespace xpcc {

// PSNR reported for zero error so CSV output stays finite.
inline constexpr double kPsnrCap = 999.99;

// Symmetric point-to-point geometry PSNR: per direction the mean squared
// nearest-neighbor distance, symmetrized by max, peak energy 3 * (2^bd - 1)^2.
double geometry_psnr_d1(const PointCloud& reference, const PointCloud& degraded);

struct ColorPsnrResult {
  double r = 0, g = 0, b = 0;
  double average = 0;
};

// Per-channel PSNR of each point's color against its geometric nearest
// neighbor's color, symmetrized by max of the two directional MSEs.
ColorPsnrResult color_psnr(const PointCloud& reference, const PointCloud& degraded);

// Mean absolute difference between two equal-size channel planes.
double temporal_mad(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
double temporal_mad(std::span<const Rgb> a, std::span<const Rgb> b);

struct RdPoint {
  double rate = 0;  // bits per second (or per point; caller keeps the unit)
  double psnr = 0;  // dB

  friend bool operator==(const RdPoint&, const RdPoint&) = default;
};

struct RdCurve {
  std::vector<RdPoint> points;  // >= 4, strictly increasing rate
  std::string label;
};

// Bjontegaard deltas via cubic fits: bd_rate integrates psnr -> log10(rate)
// over the common PSNR interval and returns the average rate change in
// percent (negative = savings); bd_psnr integrates log10(rate) -> psnr over
// the common log-rate interval and returns the average PSNR change in dB.
double bd_rate(const RdCurve& anchor, const RdCurve& test);
double bd_psnr(const RdCurve& anchor, const RdCurve& test);

}  // namespace xpcc
