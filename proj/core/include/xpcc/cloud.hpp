// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "xpcc/geometry.hpp"

namespace xpcc {

// One voxelized frame: integer coordinates in [0, 2^bit_depth) plus one RGB
// sample per point. Treated as immutable once built; safe to share across
// threads.
struct PointCloud {
  std::vector<Vec3i> points;
  std::vector<Rgb> colors;
  int bit_depth = 10;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  std::int32_t coord_limit() const { return (std::int32_t{1} << bit_depth) - 1; }
};

struct Sequence {
  std::vector<PointCloud> frames;
  double frame_rate = 30.0;
};

// Componentwise min/max over all points. Throws EmptyCloud.
Aabb bounds(const PointCloud& cloud);

struct PlyLoadResult {
  PointCloud cloud;
  std::uint64_t duplicates_dropped = 0;
};

// Reads an ascii or binary_little_endian PLY with x/y/z and red/green/blue
// vertex properties. Float coordinates are rounded half away from zero;
// duplicate coordinates are dropped keeping the first occurrence and the
// dropped count is reported. bit_depth must be in [1, 16] and every
// coordinate must land in [0, 2^bit_depth).
PlyLoadResult load_ply(const std::filesystem::path& path, int bit_depth = 10);

// Writes binary little-endian PLY: float x/y/z (exact for integer voxel
// coordinates), uchar red/green/blue. load_ply(save_ply(c)) == c.
void save_ply(const PointCloud& cloud, const std::filesystem::path& path);

}  // namespace xpcc
