// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xpcc/projection.hpp"

namespace xpcc {

struct ColoredPoint {
  Vec3i pos;
  Rgb color;

  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

// Inverse of project_section for the captured points: per occupied pixel the
// D0 point is emitted and, when d1 != d0, the D1 point. Throws
// InconsistentMaps when channel sizes disagree or d1 < d0 at an occupied
// pixel.
std::vector<ColoredPoint> unproject(const MapSet& mapset);

struct SectionPoints {
  std::int32_t section_id = 0;
  std::vector<ColoredPoint> points;
};

// Concatenates sections in the given order (callers pass ascending
// section_id). Exact duplicate coordinates collapse keeping the first
// occurrence, so colors resolve to the lowest section_id. With
// dedup_radius > 0, a point within L-inf distance <= dedup_radius of an
// already-kept point from a *different* section is dropped too. Coordinates
// and colors are clamped into the bit_depth / 8-bit range.
PointCloud merge_sections(std::span<const SectionPoints> parts, int dedup_radius, int bit_depth);

}  // namespace xpcc
