// SPDX-License-Identifier: Apache-2.0
#include "xpcc/image_io.hpp"

#include <algorithm>
#include <fstream>

#include "xpcc/error.hpp"

namespace xpcc {

namespace {

std::ofstream open_binary(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
  return out;
}

void check_dims(std::size_t n, std::int32_t width, std::int32_t height) {
  if (width < 1 || height < 1 ||
      n != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    fail(Errc::dim_mismatch, "pixel count does not match dimensions");
}

}  // namespace

void write_pgm(const std::filesystem::path& path, std::span<const std::int32_t> plane,
               std::int32_t width, std::int32_t height) {
  check_dims(plane.size(), width, height);
  std::int32_t max_value = 1;
  for (std::int32_t v : plane) max_value = std::max(max_value, v);
  if (max_value > 65535) fail(Errc::value_out_of_range, "plane value exceeds 16-bit PGM range");

  auto out = open_binary(path);
  out << "P5\n" << width << " " << height << "\n" << max_value << "\n";
  if (max_value > 255) {
    for (std::int32_t v : plane) {  // 16-bit PGM samples are big-endian
      const auto u = static_cast<std::uint16_t>(std::max(v, 0));
      out.put(static_cast<char>(u >> 8));
      out.put(static_cast<char>(u & 0xff));
    }
  } else {
    for (std::int32_t v : plane) out.put(static_cast<char>(std::max(v, 0)));
  }
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

void write_pgm(const std::filesystem::path& path, std::span<const std::uint8_t> bitmap,
               std::int32_t width, std::int32_t height) {
  check_dims(bitmap.size(), width, height);
  auto out = open_binary(path);
  out << "P5\n" << width << " " << height << "\n255\n";
  for (std::uint8_t v : bitmap) out.put(static_cast<char>(v ? 255 : 0));
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

void write_ppm(const std::filesystem::path& path, std::span<const Rgb> pixels,
               std::int32_t width, std::int32_t height) {
  check_dims(pixels.size(), width, height);
  auto out = open_binary(path);
  out << "P6\n" << width << " " << height << "\n255\n";
  for (const Rgb& p : pixels) {
    out.put(static_cast<char>(p.r));
    out.put(static_cast<char>(p.g));
    out.put(static_cast<char>(p.b));
  }
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace xpcc
