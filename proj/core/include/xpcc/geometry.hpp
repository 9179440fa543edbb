// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace xpcc {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

// A projection / viewing direction. The sign encodes which face of the
// bounding box is the near face.
enum class SignedAxis : std::uint8_t { pos_x = 0, neg_x, pos_y, neg_y, pos_z, neg_z };

constexpr Axis axis_of(SignedAxis s) { return static_cast<Axis>(static_cast<int>(s) / 2); }
constexpr int sign_of(SignedAxis s) { return (static_cast<int>(s) % 2) ? -1 : +1; }
constexpr SignedAxis make_signed_axis(Axis a, int sign) {
  return static_cast<SignedAxis>(static_cast<int>(a) * 2 + (sign < 0 ? 1 : 0));
}

// The two axes orthogonal to `a`, always in ascending X < Y < Z order. This
// ordering fixes the (u, w) in-plane frame used everywhere: cut along Y means
// u = X and w = Z.
constexpr std::array<Axis, 2> ortho_axes(Axis a) {
  switch (a) {
    case Axis::x: return {Axis::y, Axis::z};
    case Axis::y: return {Axis::x, Axis::z};
    default: return {Axis::x, Axis::y};
  }
}

constexpr Axis third_axis(Axis a, Axis b) {
  return static_cast<Axis>(3 - static_cast<int>(a) - static_cast<int>(b));
}

struct Vec3i {
  std::int32_t x = 0, y = 0, z = 0;

  constexpr std::int32_t operator[](Axis a) const {
    return a == Axis::x ? x : (a == Axis::y ? y : z);
  }
  constexpr std::int32_t& operator[](Axis a) {
    return a == Axis::x ? x : (a == Axis::y ? y : z);
  }

  friend constexpr bool operator==(const Vec3i&, const Vec3i&) = default;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  constexpr std::uint8_t operator[](int c) const { return c == 0 ? r : (c == 1 ? g : b); }

  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

// Inclusive axis-aligned bounding box.
struct Aabb {
  Vec3i min;
  Vec3i max;

  constexpr std::int32_t extent(Axis a) const { return max[a] - min[a]; }
  constexpr bool contains(const Vec3i& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
           p.z <= max.z;
  }

  friend constexpr bool operator==(const Aabb&, const Aabb&) = default;
};

// Packs voxel coordinates into one key; valid for coordinates < 2^21.
constexpr std::uint64_t voxel_key(const Vec3i& p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 42) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y)) << 21) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.z));
}

std::string to_string(Axis a);
std::string to_string(SignedAxis s);
std::optional<Axis> parse_axis(std::string_view text);
std::optional<SignedAxis> parse_signed_axis(std::string_view text);

}  // namespace xpcc
