// SPDX-License-Identifier: Apache-2.0
#include "xpcc/atlas.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "xpcc/error.hpp"

namespace xpcc {

namespace {

std::int32_t round_up(std::int32_t v, std::int32_t alignment) {
  return (v + alignment - 1) / alignment * alignment;
}

// Skyline as a full per-column height array; atlas widths are small enough
// that the O(width) placement scan is irrelevant next to compositing.
struct Skyline {
  std::vector<std::int32_t> top;

  explicit Skyline(std::int32_t width) : top(static_cast<std::size_t>(width), 0) {}

  std::int32_t height_over(std::int32_t x, std::int32_t w) const {
    std::int32_t h = 0;
    for (std::int32_t i = x; i < x + w; ++i) h = std::max(h, top[static_cast<std::size_t>(i)]);
    return h;
  }

  void place(std::int32_t x, std::int32_t w, std::int32_t new_top) {
    for (std::int32_t i = x; i < x + w; ++i) top[static_cast<std::size_t>(i)] = new_top;
  }
};

struct Candidate {
  std::int32_t x = 0, y = 0;
  bool rotated = false;
  bool valid = false;
};

// For the source map pixel (sx, sy) of a w x h map placed at (u, v):
// unrotated -> atlas (u + sx, v + sy); rotated 90 degrees clockwise ->
// placed dims (h x w), atlas (u + (h - 1 - sy), v + sx).
template <typename T>
void blit(const std::vector<T>& src, std::int32_t w, std::int32_t h, std::vector<T>& dst,
          std::int32_t dst_width, const Placement& at) {
  for (std::int32_t sy = 0; sy < h; ++sy) {
    for (std::int32_t sx = 0; sx < w; ++sx) {
      const T& value = src[static_cast<std::size_t>(sy) * static_cast<std::size_t>(w) + static_cast<std::size_t>(sx)];
      std::int32_t dx, dy;
      if (at.rotated) {
        dx = at.u + (h - 1 - sy);
        dy = at.v + sx;
      } else {
        dx = at.u + sx;
        dy = at.v + sy;
      }
      dst[static_cast<std::size_t>(dy) * static_cast<std::size_t>(dst_width) + static_cast<std::size_t>(dx)] = value;
    }
  }
}

template <typename T>
void extract(const std::vector<T>& src, std::int32_t src_width, std::vector<T>& dst,
             std::int32_t w, std::int32_t h, const Placement& at) {
  dst.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), T{});
  for (std::int32_t sy = 0; sy < h; ++sy) {
    for (std::int32_t sx = 0; sx < w; ++sx) {
      std::int32_t dx, dy;
      if (at.rotated) {
        dx = at.u + (h - 1 - sy);
        dy = at.v + sx;
      } else {
        dx = at.u + sx;
        dy = at.v + sy;
      }
      dst[static_cast<std::size_t>(sy) * static_cast<std::size_t>(w) + static_cast<std::size_t>(sx)] =
          src[static_cast<std::size_t>(dy) * static_cast<std::size_t>(src_width) + static_cast<std::size_t>(dx)];
    }
  }
}

}  // namespace

Atlas composite(std::span<const MapSet> mapsets, std::span<const Placement> placements,
                std::int32_t width, std::int32_t height) {
  Atlas atlas;
  atlas.width = width;
  atlas.height = height;
  const std::size_t area = atlas.area();
  atlas.occupancy.assign(area, 0);
  atlas.d0.assign(area, 0);
  atlas.d1.assign(area, 0);
  atlas.a0.assign(area, Rgb{});
  atlas.a1.assign(area, Rgb{});
  atlas.placements.assign(placements.begin(), placements.end());

  for (const MapSet& map : mapsets) {
    auto it = std::find_if(placements.begin(), placements.end(), [&](const Placement& p) {
      return p.section_id == map.desc.section_id;
    });
    if (it == placements.end())
      fail(Errc::inconsistent_metadata,
           "no placement for section " + std::to_string(map.desc.section_id));
    const Placement& at = *it;
    const std::int32_t pw = at.rotated ? map.desc.height : map.desc.width;
    const std::int32_t ph = at.rotated ? map.desc.width : map.desc.height;
    if (at.u < 0 || at.v < 0 || at.u + pw > width || at.v + ph > height)
      fail(Errc::inconsistent_metadata,
           "placement outside atlas for section " + std::to_string(map.desc.section_id));
    blit(map.occupancy, map.desc.width, map.desc.height, atlas.occupancy, width, at);
    blit(map.d0, map.desc.width, map.desc.height, atlas.d0, width, at);
    blit(map.d1, map.desc.width, map.desc.height, atlas.d1, width, at);
    blit(map.a0, map.desc.width, map.desc.height, atlas.a0, width, at);
    blit(map.a1, map.desc.width, map.desc.height, atlas.a1, width, at);
  }
  return atlas;
}

Atlas pack(std::span<const MapSet> mapsets, std::int32_t atlas_width, std::int32_t alignment) {
  if (atlas_width < 1) fail(Errc::invalid_argument, "atlas_width must be >= 1");
  if (alignment < 1) fail(Errc::invalid_argument, "alignment must be >= 1");

  if (mapsets.empty()) {
    Atlas empty;
    empty.width = round_up(atlas_width, alignment);
    empty.height = 0;
    return empty;
  }

  std::vector<std::size_t> order(mapsets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const MapDesc& da = mapsets[a].desc;
    const MapDesc& db = mapsets[b].desc;
    if (da.height != db.height) return da.height > db.height;
    if (da.width != db.width) return da.width > db.width;
    return da.section_id < db.section_id;
  });

  Skyline skyline(atlas_width);
  std::vector<Placement> placements(mapsets.size());
  std::int32_t max_top = 0;

  for (std::size_t idx : order) {
    const MapDesc& desc = mapsets[idx].desc;
    Candidate best;
    std::int32_t best_top = std::numeric_limits<std::int32_t>::max();
    // lowest resulting top, then leftmost, then unrotated
    for (int rot = 0; rot < 2; ++rot) {
      const std::int32_t w = rot ? desc.height : desc.width;
      const std::int32_t h = rot ? desc.width : desc.height;
      if (w > atlas_width) continue;
      for (std::int32_t x = 0; x + w <= atlas_width; ++x) {
        const std::int32_t y = skyline.height_over(x, w);
        const std::int32_t top = y + h;
        const bool better = !best.valid || top < best_top ||
                            (top == best_top && (x < best.x || (x == best.x && !rot && best.rotated)));
        if (better) {
          best = Candidate{x, y, rot != 0, true};
          best_top = top;
        }
      }
    }
    if (!best.valid)
      fail(Errc::map_too_wide, "map of section " + std::to_string(desc.section_id) +
                                   " wider than atlas in both orientations");
    const std::int32_t pw = best.rotated ? desc.height : desc.width;
    skyline.place(best.x, pw, best_top);
    max_top = std::max(max_top, best_top);
    placements[idx] = Placement{desc.section_id, best.x, best.y, best.rotated};
  }

  return composite(mapsets, placements, round_up(atlas_width, alignment),
                   round_up(max_top, alignment));
}

double occupancy_ratio(const Atlas& atlas) {
  const std::size_t area = atlas.area();
  if (area == 0) fail(Errc::zero_area, "occupancy_ratio of zero-area atlas");
  std::size_t occupied = 0;
  for (std::uint8_t o : atlas.occupancy) occupied += o != 0;
  return static_cast<double>(occupied) / static_cast<double>(area);
}

std::vector<MapSet> unpack(const Atlas& atlas, std::span<const MapDesc> descriptors) {
  std::vector<MapSet> out;
  out.reserve(descriptors.size());
  for (const MapDesc& desc : descriptors) {
    auto it = std::find_if(atlas.placements.begin(), atlas.placements.end(),
                           [&](const Placement& p) { return p.section_id == desc.section_id; });
    if (it == atlas.placements.end())
      fail(Errc::inconsistent_metadata,
           "no placement for section " + std::to_string(desc.section_id));
    const Placement& at = *it;
    const std::int32_t pw = at.rotated ? desc.height : desc.width;
    const std::int32_t ph = at.rotated ? desc.width : desc.height;
    if (at.u < 0 || at.v < 0 || at.u + pw > atlas.width || at.v + ph > atlas.height)
      fail(Errc::inconsistent_metadata,
           "placement outside atlas for section " + std::to_string(desc.section_id));

    MapSet map;
    map.desc = desc;
    extract(atlas.occupancy, atlas.width, map.occupancy, desc.width, desc.height, at);
    extract(atlas.d0, atlas.width, map.d0, desc.width, desc.height, at);
    extract(atlas.d1, atlas.width, map.d1, desc.width, desc.height, at);
    extract(atlas.a0, atlas.width, map.a0, desc.width, desc.height, at);
    extract(atlas.a1, atlas.width, map.a1, desc.width, desc.height, at);
    out.push_back(std::move(map));
  }
  return out;
}

}  // namespace xpcc
