// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "xpcc/geometry.hpp"

namespace xpcc {

// Debug dumps for map and atlas channels. PGM picks 8- or 16-bit samples
// from the plane maximum; occupancy scales 0/1 to 0/255.
void write_pgm(const std::filesystem::path& path, std::span<const std::int32_t> plane,
               std::int32_t width, std::int32_t height);
void write_pgm(const std::filesystem::path& path, std::span<const std::uint8_t> bitmap,
               std::int32_t width, std::int32_t height);
void write_ppm(const std::filesystem::path& path, std::span<const Rgb> pixels,
               std::int32_t width, std::int32_t height);

}  // namespace xpcc
