// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xpcc/cross_section.hpp"

namespace xpcc {

// Identity and placement of one section's map in voxel space. origin holds
// (u0, w0, depth0): u0/w0 are the minimum in-plane coordinates of the section
// (stored in the two slots orthogonal to the plane axis, ascending order) and
// depth0 is the near-face coordinate along the plane axis (min for +, max
// for -). Pixel (col, row) with depth d maps back to voxel coordinates
// (u0 + col, w0 + row, depth0 +/- d) permuted onto the axes.
struct MapDesc {
  std::int32_t section_id = 0;
  SignedAxis plane = SignedAxis::pos_z;
  Vec3i origin;
  std::int32_t width = 0;
  std::int32_t height = 0;

  std::size_t area() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
};

// One section's projection: occupancy plus near (D0) and far (D1) depth
// layers with their attribute layers. Unoccupied pixels are zero in every
// channel. lost_ids are frame point indices not representable in two layers.
struct MapSet {
  MapDesc desc;
  std::vector<std::uint8_t> occupancy;
  std::vector<std::int32_t> d0;
  std::vector<std::int32_t> d1;
  std::vector<Rgb> a0;
  std::vector<Rgb> a1;
  std::vector<std::uint32_t> lost_ids;
};

struct PlaneChoice {
  SignedAxis plane = SignedAxis::pos_z;
  double unchanged_ratio = 0.0;
  std::uint64_t lost_count = 0;
};

// Projects the section onto the given signed axis-aligned plane. The map is
// tight (origin-shifted to the section's bounding box). Per pixel column,
// sorted by depth: the nearest point lands in D0, the farthest in D1, and
// any points strictly between are appended to lost_ids. Throws EmptySection.
MapSet project_section(const PointCloud& cloud, const CrossSection& section, SignedAxis plane);

// Evaluates project_section per candidate and keeps the plane maximizing the
// unchanged ratio; ties break by fewer lost points, then candidate order.
PlaneChoice choose_plane(const PointCloud& cloud, const CrossSection& section,
                         std::span<const SignedAxis> candidates);

// main_view first, then the remaining signed axes in +x,-x,+y,-y,+z,-z order.
std::vector<SignedAxis> default_plane_candidates(SignedAxis main_view);

// Fraction of section points recoverable exactly from (pixel, layer, depth),
// i.e. captured in D0 or D1.
double unchanged_ratio(const MapSet& mapset, std::size_t section_size);

}  // namespace xpcc
