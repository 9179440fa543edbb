// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xpcc/cloud.hpp"

namespace xpcc {

// Ellipse of a cross-section in the cut plane. (u, w) are the two axes
// orthogonal to the cut axis in ascending order; a is the semi-major and b
// the semi-minor half-extent, a >= b.
struct EllipseParams {
  double center_u = 0.0;
  double center_w = 0.0;
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const EllipseParams&, const EllipseParams&) = default;
};

// A slab of the cloud along the cut axis, treated as an independent point
// cloud downstream. point_ids index into the frame the section was built
// from. Overlap flags mark duplicated boundary rows shared with a neighbor.
struct CrossSection {
  Axis axis = Axis::y;
  std::int32_t slab_lo = 0;
  std::int32_t slab_hi = 0;
  EllipseParams ellipse;
  std::vector<std::uint32_t> point_ids;
  bool overlap_lo = false;
  bool overlap_hi = false;
  std::int32_t section_id = 0;
};

// Per unit slab along the cut axis: the maximum, over pixel columns, of the
// depth-cluster count along the projection direction. Index i corresponds to
// cut coordinate first_slab + i.
struct LayerProfile {
  std::int32_t first_slab = 0;
  std::vector<int> max_layers;
};

struct SegmentationConfig {
  // Manual mode when set (target section count); auto growth otherwise.
  std::optional<int> target_sections;
  double ellipse_tolerance = 2.0;  // voxels
  int overlap_width = 1;           // slabs duplicated on each side of a boundary
  int surface_thickness = 4;       // voxels; depth gap that separates layers
  SignedAxis main_view = SignedAxis::pos_z;

  bool auto_mode() const { return !target_sections.has_value(); }
};

// Cut axis choice: never cut across the main view axis, prefer the longer
// extent, tie-break by smaller mean layer count along the main view, then
// X < Y < Z.
Axis select_axis(const PointCloud& cloud, SignedAxis main_view, int surface_thickness = 4);

// Midpoint of the slab's (u, w) extents. Throws EmptySlab.
std::pair<double, double> section_center(const PointCloud& cloud, Axis cut_axis,
                                         std::int32_t slab_lo, std::int32_t slab_hi);

// Euclidean distance in the cut plane.
double ring_distance(double u, double w, double center_u, double center_w);

// Center from section_center, half extents from the slab's (u, w) spans,
// a >= b enforced by swap. Throws EmptySlab.
EllipseParams fit_ellipse(const PointCloud& cloud, Axis cut_axis, std::int32_t slab_lo,
                          std::int32_t slab_hi);

// True iff b - tolerance <= d <= a + tolerance.
bool ellipse_membership(double d, const EllipseParams& ellipse, double tolerance);

// Per-unit-slab layer counts: for each slab and each pixel column (the axis
// orthogonal to both cut_axis and proj_axis), depths along proj_axis are
// sorted and clustered with gap > surface_thickness starting a new cluster.
LayerProfile layer_profile(const PointCloud& cloud, Axis cut_axis, SignedAxis proj_axis,
                           int surface_thickness);

// Same clustering over a whole slab range treated as one slab: columns are
// the single coordinate orthogonal to both axes, depths collected across the
// range. Returns the maximum cluster count over columns (0 if empty).
int range_layer_count(const PointCloud& cloud, Axis cut_axis, std::int32_t slab_lo,
                      std::int32_t slab_hi, SignedAxis proj_axis, int surface_thickness);

// Partitions the cloud into cross-sections along the selected cut axis, then
// duplicates overlap_width slabs from each side of every interior boundary
// into the neighboring section (membership capped at two sections per
// point). Sections are ordered by slab_lo and numbered from 0.
std::vector<CrossSection> segment(const PointCloud& cloud, const SegmentationConfig& config);

// Splits a section into n_parts contiguous bands along the axis orthogonal
// to both its cut axis and its best projection plane, maximizing the summed
// per-band unchanged ratio over an exhaustive boundary search. Ties prefer
// balanced band widths, then the lexicographically smallest boundaries.
// Bands become sections whose cut axis is the split axis, numbered
// first_section_id, first_section_id + 1, ... (parent id by default).
std::vector<CrossSection> subdivide(const CrossSection& section, const PointCloud& cloud,
                                    int n_parts, std::span<const SignedAxis> candidate_planes,
                                    std::int32_t first_section_id = -1);

}  // namespace xpcc
