// SPDX-License-Identifier: Apache-2.0
#include "xpcc/projection.hpp"

#include <algorithm>
#include <limits>

#include "xpcc/error.hpp"

namespace xpcc {

namespace {

struct PixelEntry {
  std::int64_t pixel;
  std::int32_t depth;
  std::uint32_t id;
};

}  // namespace

MapSet project_section(const PointCloud& cloud, const CrossSection& section, SignedAxis plane) {
  if (section.point_ids.empty()) fail(Errc::empty_section, "project_section on empty section");

  const Axis p_axis = axis_of(plane);
  const auto [u_axis, w_axis] = ortho_axes(p_axis);
  const int sign = sign_of(plane);

  std::int32_t u_min = std::numeric_limits<std::int32_t>::max(), u_max = std::numeric_limits<std::int32_t>::min();
  std::int32_t w_min = u_min, w_max = u_max;
  std::int32_t p_min = u_min, p_max = u_max;
  for (std::uint32_t id : section.point_ids) {
    const Vec3i& pt = cloud.points[id];
    u_min = std::min(u_min, pt[u_axis]);
    u_max = std::max(u_max, pt[u_axis]);
    w_min = std::min(w_min, pt[w_axis]);
    w_max = std::max(w_max, pt[w_axis]);
    p_min = std::min(p_min, pt[p_axis]);
    p_max = std::max(p_max, pt[p_axis]);
  }

  MapSet out;
  out.desc.section_id = section.section_id;
  out.desc.plane = plane;
  out.desc.width = u_max - u_min + 1;
  out.desc.height = w_max - w_min + 1;
  out.desc.origin[u_axis] = u_min;
  out.desc.origin[w_axis] = w_min;
  out.desc.origin[p_axis] = sign > 0 ? p_min : p_max;

  const std::size_t area = out.desc.area();
  out.occupancy.assign(area, 0);
  out.d0.assign(area, 0);
  out.d1.assign(area, 0);
  out.a0.assign(area, Rgb{});
  out.a1.assign(area, Rgb{});

  std::vector<PixelEntry> entries;
  entries.reserve(section.point_ids.size());
  for (std::uint32_t id : section.point_ids) {
    const Vec3i& pt = cloud.points[id];
    const std::int64_t pix =
        static_cast<std::int64_t>(pt[w_axis] - w_min) * out.desc.width + (pt[u_axis] - u_min);
    const std::int32_t depth = sign > 0 ? pt[p_axis] - p_min : p_max - pt[p_axis];
    entries.push_back(PixelEntry{pix, depth, id});
  }
  std::sort(entries.begin(), entries.end(), [](const PixelEntry& a, const PixelEntry& b) {
    return a.pixel != b.pixel ? a.pixel < b.pixel : a.depth < b.depth;
  });

  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].pixel == entries[i].pixel) ++j;
    const std::size_t pix = static_cast<std::size_t>(entries[i].pixel);
    const PixelEntry& near = entries[i];
    const PixelEntry& far = entries[j - 1];
    out.occupancy[pix] = 1;
    out.d0[pix] = near.depth;
    out.a0[pix] = cloud.colors[near.id];
    out.d1[pix] = far.depth;
    out.a1[pix] = cloud.colors[far.id];
    for (std::size_t k = i + 1; k + 1 < j; ++k) out.lost_ids.push_back(entries[k].id);
    i = j;
  }
  return out;
}

std::vector<SignedAxis> default_plane_candidates(SignedAxis main_view) {
  std::vector<SignedAxis> out{main_view};
  for (int i = 0; i < 6; ++i) {
    const auto s = static_cast<SignedAxis>(i);
    if (s != main_view) out.push_back(s);
  }
  return out;
}

double unchanged_ratio(const MapSet& mapset, std::size_t section_size) {
  if (section_size < 1) fail(Errc::invalid_argument, "unchanged_ratio with empty section");
  const std::size_t captured = section_size - mapset.lost_ids.size();
  return static_cast<double>(captured) / static_cast<double>(section_size);
}

PlaneChoice choose_plane(const PointCloud& cloud, const CrossSection& section,
                         std::span<const SignedAxis> candidates) {
  if (candidates.empty()) fail(Errc::invalid_argument, "choose_plane with no candidates");
  PlaneChoice best;
  bool have_best = false;
  for (SignedAxis candidate : candidates) {
    MapSet map = project_section(cloud, section, candidate);
    PlaneChoice choice{candidate, unchanged_ratio(map, section.point_ids.size()),
                       map.lost_ids.size()};
    if (!have_best || choice.unchanged_ratio > best.unchanged_ratio ||
        (choice.unchanged_ratio == best.unchanged_ratio && choice.lost_count < best.lost_count)) {
      best = choice;
      have_best = true;
    }
  }
  return best;
}

}  // namespace xpcc
