// SPDX-License-Identifier: Apache-2.0
#pragma once

// Synthetic clouds shared by unit and acceptance tests. The shell builders
// emit exactly two points per (u, slab) column so every column projects into
// two layers with nothing lost.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "xpcc/cloud.hpp"

namespace xpcc::test {

inline Rgb color_for(std::int32_t x, std::int32_t y, std::int32_t z) {
  return Rgb{static_cast<std::uint8_t>((x * 7 + 13) & 0xff),
             static_cast<std::uint8_t>((y * 11 + 29) & 0xff),
             static_cast<std::uint8_t>((z * 5 + 71) & 0xff)};
}

inline void push_unique(PointCloud& cloud, std::unordered_set<std::uint64_t>& seen, Vec3i p) {
  if (!seen.insert(voxel_key(p)).second) return;
  cloud.points.push_back(p);
  cloud.colors.push_back(color_for(p.x, p.y, p.z));
}

// Elliptic cylinder shell along Y: per slab y and per x crossing the
// ellipse, the two z wall points. radius_u along X, radius_w along Z.
inline void add_shell(PointCloud& cloud, std::unordered_set<std::uint64_t>& seen,
                      std::int32_t cx, std::int32_t cz, double radius_u, double radius_w,
                      std::int32_t y_lo, std::int32_t y_hi) {
  const auto ru = static_cast<std::int32_t>(std::floor(radius_u));
  for (std::int32_t y = y_lo; y <= y_hi; ++y) {
    for (std::int32_t dx = -ru; dx <= ru; ++dx) {
      const double t = 1.0 - static_cast<double>(dx) * dx / (radius_u * radius_u);
      const double h = radius_w * std::sqrt(std::max(0.0, t));
      const auto dz = static_cast<std::int32_t>(std::llround(h));
      push_unique(cloud, seen, Vec3i{cx + dx, y, cz - dz});
      if (dz != 0) push_unique(cloud, seen, Vec3i{cx + dx, y, cz + dz});
    }
  }
}

inline PointCloud make_cylinder_shell(double radius, std::int32_t height,
                                      std::int32_t cx = 512, std::int32_t cz = 512,
                                      std::int32_t y_lo = 100) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  add_shell(cloud, seen, cx, cz, radius, radius, y_lo, y_lo + height - 1);
  return cloud;
}

// Shell of radius r_low stacked under a shell of radius r_high, one shared
// axis, disjoint slab ranges.
inline PointCloud make_stacked_cylinders(double r_low, double r_high, std::int32_t height_each,
                                         std::int32_t cx = 512, std::int32_t cz = 512,
                                         std::int32_t y_lo = 100) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  add_shell(cloud, seen, cx, cz, r_low, r_low, y_lo, y_lo + height_each - 1);
  add_shell(cloud, seen, cx, cz, r_high, r_high, y_lo + height_each,
            y_lo + 2 * height_each - 1);
  return cloud;
}

// Flat plate normal to Z (one layer everywhere).
inline PointCloud make_plate(std::int32_t width, std::int32_t height, std::int32_t z = 300,
                             std::int32_t x0 = 200, std::int32_t y0 = 200) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  for (std::int32_t y = y0; y < y0 + height; ++y)
    for (std::int32_t x = x0; x < x0 + width; ++x) push_unique(cloud, seen, Vec3i{x, y, z});
  return cloud;
}

inline PointCloud make_random_cloud(std::mt19937& rng, std::size_t n, std::int32_t limit = 1023) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  std::uniform_int_distribution<std::int32_t> coord(0, limit);
  while (cloud.points.size() < n) {
    push_unique(cloud, seen, Vec3i{coord(rng), coord(rng), coord(rng)});
  }
  std::uniform_int_distribution<int> byte(0, 255);
  for (Rgb& c : cloud.colors) {
    c = Rgb{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
            static_cast<std::uint8_t>(byte(rng))};
  }
  return cloud;
}

// An elongated random blob: gaussian-ish spread, distinct per-axis extents.
inline PointCloud make_random_blob(std::mt19937& rng, std::size_t n, std::int32_t sx,
                                   std::int32_t sy, std::int32_t sz) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  std::uniform_int_distribution<std::int32_t> dx(0, sx), dy(0, sy), dz(0, sz);
  while (cloud.points.size() < n) {
    push_unique(cloud, seen, Vec3i{300 + dx(rng), 300 + dy(rng), 300 + dz(rng)});
  }
  return cloud;
}

inline bool same_point_set(const PointCloud& a, const PointCloud& b) {
  if (a.size() != b.size()) return false;
  std::unordered_set<std::uint64_t> keys;
  for (const Vec3i& p : a.points) keys.insert(voxel_key(p));
  for (const Vec3i& p : b.points)
    if (!keys.contains(voxel_key(p))) return false;
  return true;
}

// Set equality including colors (coordinates are unique within a cloud).
inline bool same_colored_set(const PointCloud& a, const PointCloud& b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<std::uint64_t, Rgb> keyed;
  for (std::size_t i = 0; i < a.size(); ++i) keyed[voxel_key(a.points[i])] = a.colors[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = keyed.find(voxel_key(b.points[i]));
    if (it == keyed.end() || !(it->second == b.colors[i])) return false;
  }
  return true;
}

}  // namespace xpcc::test
