// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xpcc/projection.hpp"

namespace xpcc {

struct Placement {
  std::int32_t section_id = 0;
  std::int32_t u = 0;  // pixel column of the map's left edge
  std::int32_t v = 0;  // pixel row of the map's top edge
  bool rotated = false;  // 90 degrees clockwise

  friend bool operator==(const Placement&, const Placement&) = default;
};

// One packed frame: all sections' maps composited into full-frame channels.
// Unoccupied pixels are zero in every channel.
struct Atlas {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::vector<std::uint8_t> occupancy;
  std::vector<std::int32_t> d0;
  std::vector<std::int32_t> d1;
  std::vector<Rgb> a0;
  std::vector<Rgb> a1;
  std::vector<Placement> placements;

  std::size_t area() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
};

// Deterministic skyline bottom-left packing: maps sorted by decreasing
// height, then decreasing width, then section_id; each map tries both
// orientations and takes the placement with the lowest resulting top edge,
// ties broken leftmost, then unrotated. Final dimensions round up to
// `alignment`. Throws MapTooWide if a map fits in neither orientation.
Atlas pack(std::span<const MapSet> mapsets, std::int32_t atlas_width = 1024,
           std::int32_t alignment = 16);

// Composites mapsets at externally supplied placements (one per mapset,
// matched by section_id) into a width x height frame. Used by pack and by
// layout reuse across frames.
Atlas composite(std::span<const MapSet> mapsets, std::span<const Placement> placements,
                std::int32_t width, std::int32_t height);

// Occupied / total pixels. Throws ZeroArea.
double occupancy_ratio(const Atlas& atlas);

// Exact inverse of compositing: extracts each descriptor's map back out of
// the atlas. Throws InconsistentMetadata when a descriptor has no placement
// or falls outside the frame.
std::vector<MapSet> unpack(const Atlas& atlas, std::span<const MapDesc> descriptors);

}  // namespace xpcc
