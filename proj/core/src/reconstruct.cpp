// SPDX-License-Identifier: Apache-2.0
#include "xpcc/reconstruct.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "xpcc/error.hpp"

namespace xpcc {

std::vector<ColoredPoint> unproject(const MapSet& mapset) {
  const MapDesc& desc = mapset.desc;
  const std::size_t area = desc.area();
  if (mapset.occupancy.size() != area || mapset.d0.size() != area || mapset.d1.size() != area ||
      mapset.a0.size() != area || mapset.a1.size() != area)
    fail(Errc::inconsistent_maps, "map channel sizes disagree with dimensions");

  const Axis p_axis = axis_of(desc.plane);
  const auto [u_axis, w_axis] = ortho_axes(p_axis);
  const int sign = sign_of(desc.plane);

  std::vector<ColoredPoint> out;
  std::size_t i = 0;
  for (std::int32_t row = 0; row < desc.height; ++row) {
    for (std::int32_t col = 0; col < desc.width; ++col, ++i) {
      if (!mapset.occupancy[i]) continue;
      if (mapset.d1[i] < mapset.d0[i])
        fail(Errc::inconsistent_maps, "d1 < d0 at occupied pixel");
      Vec3i pos;
      pos[u_axis] = desc.origin[u_axis] + col;
      pos[w_axis] = desc.origin[w_axis] + row;
      pos[p_axis] = desc.origin[p_axis] + sign * mapset.d0[i];
      out.push_back(ColoredPoint{pos, mapset.a0[i]});
      if (mapset.d1[i] != mapset.d0[i]) {
        pos[p_axis] = desc.origin[p_axis] + sign * mapset.d1[i];
        out.push_back(ColoredPoint{pos, mapset.a1[i]});
      }
    }
  }
  return out;
}

PointCloud merge_sections(std::span<const SectionPoints> parts, int dedup_radius,
                          int bit_depth) {
  if (dedup_radius < 0) fail(Errc::invalid_argument, "dedup_radius must be >= 0");
  if (bit_depth < 1 || bit_depth > 16) fail(Errc::invalid_argument, "bit_depth must be in [1, 16]");

  PointCloud cloud;
  cloud.bit_depth = bit_depth;
  const std::int32_t limit = cloud.coord_limit();

  std::unordered_map<std::uint64_t, std::int32_t> kept;  // voxel -> section_id of keeper
  for (const SectionPoints& part : parts) {
    for (const ColoredPoint& cp : part.points) {
      Vec3i p{std::clamp(cp.pos.x, 0, limit), std::clamp(cp.pos.y, 0, limit),
              std::clamp(cp.pos.z, 0, limit)};
      if (kept.contains(voxel_key(p))) continue;
      if (dedup_radius > 0) {
        bool near_other_section = false;
        for (std::int32_t dx = -dedup_radius; dx <= dedup_radius && !near_other_section; ++dx) {
          for (std::int32_t dy = -dedup_radius; dy <= dedup_radius && !near_other_section; ++dy) {
            for (std::int32_t dz = -dedup_radius; dz <= dedup_radius; ++dz) {
              const Vec3i q{p.x + dx, p.y + dy, p.z + dz};
              if (q.x < 0 || q.y < 0 || q.z < 0 || q.x > limit || q.y > limit || q.z > limit)
                continue;
              auto it = kept.find(voxel_key(q));
              if (it != kept.end() && it->second != part.section_id) {
                near_other_section = true;
                break;
              }
            }
          }
        }
        if (near_other_section) continue;
      }
      kept.emplace(voxel_key(p), part.section_id);
      cloud.points.push_back(p);
      cloud.colors.push_back(cp.color);
    }
  }
  return cloud;
}

}  // namespace xpcc
