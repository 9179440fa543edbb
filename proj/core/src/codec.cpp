// SPDX-License-Identifier: Apache-2.0
#include "xpcc/codec.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>

#include "bitio.hpp"
#include "xpcc/error.hpp"

namespace xpcc {

using detail::ByteReader;
using detail::ByteWriter;

namespace {

constexpr char kMagic[4] = {'X', 'P', 'C', 'C'};
constexpr std::uint8_t kVersion = 1;
constexpr std::int32_t kMaxDim = 1 << 20;
constexpr std::size_t kMaxArea = std::size_t{1} << 28;

std::vector<std::uint8_t> deflate_raw(std::span<const std::uint8_t> data, int level) {
  level = std::clamp(level, 1, 9);
  z_stream strm{};
  if (deflateInit2(&strm, level, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK)
    fail(Errc::io_failure, "deflateInit2 failed");
  std::vector<std::uint8_t> out(deflateBound(&strm, static_cast<uLong>(data.size())));
  strm.next_in = const_cast<Bytef*>(data.data());
  strm.avail_in = static_cast<uInt>(data.size());
  strm.next_out = out.data();
  strm.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&strm, Z_FINISH);
  if (rc != Z_STREAM_END) {
    deflateEnd(&strm);
    fail(Errc::io_failure, "deflate failed");
  }
  out.resize(out.size() - strm.avail_out);
  deflateEnd(&strm);
  return out;
}

std::vector<std::uint8_t> inflate_raw(std::span<const std::uint8_t> data) {
  z_stream strm{};
  if (inflateInit2(&strm, -15) != Z_OK) fail(Errc::io_failure, "inflateInit2 failed");
  std::vector<std::uint8_t> out;
  out.resize(std::max<std::size_t>(data.size() * 4, 256));
  strm.next_in = const_cast<Bytef*>(data.data());
  strm.avail_in = static_cast<uInt>(data.size());
  std::size_t written = 0;
  while (true) {
    strm.next_out = out.data() + written;
    strm.avail_out = static_cast<uInt>(out.size() - written);
    const int rc = inflate(&strm, Z_NO_FLUSH);
    written = out.size() - strm.avail_out;
    if (rc == Z_STREAM_END) break;
    if (rc == Z_OK || rc == Z_BUF_ERROR) {
      if (strm.avail_out == 0) {
        out.resize(out.size() * 2);
        continue;
      }
      // no more input but the stream never finished
      inflateEnd(&strm);
      fail(Errc::truncated_payload, "deflate stream ended early");
    }
    inflateEnd(&strm);
    fail(Errc::truncated_payload, "corrupt deflate payload");
  }
  inflateEnd(&strm);
  if (strm.avail_in != 0) fail(Errc::trailing_data, "trailing bytes after deflate stream");
  out.resize(written);
  return out;
}

std::uint32_t crc32_ieee(std::span<const std::uint8_t> data) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, data.data(), static_cast<uInt>(data.size())));
}

}  // namespace

std::int32_t quantize(std::int32_t value, int qstep) {
  if (qstep < 1) fail(Errc::invalid_argument, "qstep must be >= 1");
  if (qstep == 1) return value;
  // round half up for non-negative values, symmetric for negatives
  if (value >= 0) return (value + qstep / 2) / qstep;
  return -((-value + qstep / 2) / qstep);
}

std::int32_t dequantize(std::int32_t level, int qstep) {
  if (qstep < 1) fail(Errc::invalid_argument, "qstep must be >= 1");
  return level * qstep;
}

std::vector<std::uint8_t> rle_encode(std::span<const std::uint8_t> bitmap) {
  std::vector<std::uint8_t> out;
  ByteWriter w(out);
  std::uint8_t expect = 0;  // runs alternate starting with a zero-run
  std::size_t i = 0;
  while (i < bitmap.size()) {
    std::size_t run = 0;
    while (i + run < bitmap.size() && (bitmap[i + run] != 0) == (expect != 0)) ++run;
    w.leb128(run);
    i += run;
    expect = expect ? 0 : 1;
  }
  return out;
}

std::vector<std::uint8_t> rle_decode(std::span<const std::uint8_t> bytes, std::size_t area) {
  std::vector<std::uint8_t> out;
  out.reserve(area);
  ByteReader r(bytes);
  std::uint8_t value = 0;
  while (out.size() < area) {
    if (r.done()) fail(Errc::corrupt_runs, "run lengths fall short of bitmap area");
    const std::uint64_t run = r.leb128();
    if (run > area - out.size()) fail(Errc::corrupt_runs, "run lengths exceed bitmap area");
    out.insert(out.end(), static_cast<std::size_t>(run), value);
    value = value ? 0 : 1;
  }
  if (!r.done()) fail(Errc::corrupt_runs, "trailing run data");
  return out;
}

namespace {

// Scan state shared by predict_residual / predict_restore: predictor for
// pixel (x, y) is the nearest occupied value to the left in row y, else the
// nearest occupied value above in column x, else 0.
class Predictor {
 public:
  Predictor(std::int32_t width) : above_(static_cast<std::size_t>(width), 0), has_above_(static_cast<std::size_t>(width), 0) {}

  std::int32_t at(std::int32_t x) const {
    if (has_left_) return left_;
    if (has_above_[static_cast<std::size_t>(x)]) return above_[static_cast<std::size_t>(x)];
    return 0;
  }

  void advance(std::int32_t x, std::int32_t value, bool occupied) {
    if (occupied) {
      left_ = value;
      has_left_ = true;
      above_[static_cast<std::size_t>(x)] = value;
      has_above_[static_cast<std::size_t>(x)] = 1;
    }
  }

  void next_row() { has_left_ = false; }

 private:
  std::vector<std::int32_t> above_;
  std::vector<std::uint8_t> has_above_;
  std::int32_t left_ = 0;
  bool has_left_ = false;
};

void check_plane_dims(std::size_t plane, std::size_t occ, std::int32_t width,
                      std::int32_t height) {
  const std::size_t area = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (plane != area || occ != area) fail(Errc::dim_mismatch, "plane/occupancy size mismatch");
}

}  // namespace

std::vector<std::int32_t> predict_residual(std::span<const std::int32_t> plane,
                                           std::span<const std::uint8_t> occupancy,
                                           std::int32_t width, std::int32_t height) {
  check_plane_dims(plane.size(), occupancy.size(), width, height);
  std::vector<std::int32_t> out(plane.size());
  Predictor pred(width);
  std::size_t i = 0;
  for (std::int32_t y = 0; y < height; ++y) {
    pred.next_row();
    for (std::int32_t x = 0; x < width; ++x, ++i) {
      out[i] = plane[i] - pred.at(x);
      pred.advance(x, plane[i], occupancy[i] != 0);
    }
  }
  return out;
}

std::vector<std::int32_t> predict_restore(std::span<const std::int32_t> residual,
                                          std::span<const std::uint8_t> occupancy,
                                          std::int32_t width, std::int32_t height) {
  check_plane_dims(residual.size(), occupancy.size(), width, height);
  std::vector<std::int32_t> out(residual.size());
  Predictor pred(width);
  std::size_t i = 0;
  for (std::int32_t y = 0; y < height; ++y) {
    pred.next_row();
    for (std::int32_t x = 0; x < width; ++x, ++i) {
      out[i] = residual[i] + pred.at(x);
      pred.advance(x, out[i], occupancy[i] != 0);
    }
  }
  return out;
}

namespace {

// The eight scalar planes behind the four lossy channels, in stream order.
constexpr int kPlaneCount = 8;  // d0, d1, a0.r, a0.g, a0.b, a1.r, a1.g, a1.b

std::vector<std::int32_t> component_plane(const std::vector<Rgb>& rgb, int component) {
  std::vector<std::int32_t> out(rgb.size());
  for (std::size_t i = 0; i < rgb.size(); ++i) out[i] = rgb[i][component];
  return out;
}

struct FrameMeta {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::uint64_t source_points = 0;
  std::vector<SectionMeta> sections;
  std::vector<Placement> placements;
};

struct ParsedHeader {
  int bit_depth = 10;
  CodecParams params;
  std::vector<FrameMeta> frames;
  std::size_t header_bytes = 0;  // bytes covered by the CRC
};

void write_header(ByteWriter& w, std::span<const FrameData> frames, const CodecParams& params,
                  int bit_depth) {
  w.bytes(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(kMagic), 4));
  w.u8(kVersion);
  w.leb128(frames.size());
  w.leb128(static_cast<std::uint64_t>(bit_depth));
  w.leb128(static_cast<std::uint64_t>(params.geometry_qstep));
  w.leb128(static_cast<std::uint64_t>(params.attribute_qstep));
  w.leb128(static_cast<std::uint64_t>(params.inter_period));
  w.leb128(static_cast<std::uint64_t>(params.compressor_level));
  for (const FrameData& frame : frames) {
    w.leb128(static_cast<std::uint64_t>(frame.atlas.width));
    w.leb128(static_cast<std::uint64_t>(frame.atlas.height));
    w.leb128(frame.source_point_count);
    w.leb128(frame.sections.size());
    for (const SectionMeta& s : frame.sections) {
      w.leb128(static_cast<std::uint64_t>(s.section_id));
      w.u8(static_cast<std::uint8_t>(s.cut_axis));
      w.leb128(static_cast<std::uint64_t>(s.slab_lo));
      w.leb128(static_cast<std::uint64_t>(s.slab_hi));
      w.f64le(s.ellipse.center_u);
      w.f64le(s.ellipse.center_w);
      w.f64le(s.ellipse.a);
      w.f64le(s.ellipse.b);
      w.u8(static_cast<std::uint8_t>((s.overlap_lo ? 1 : 0) | (s.overlap_hi ? 2 : 0)));
      w.u8(static_cast<std::uint8_t>(s.plane));
      w.leb128(static_cast<std::uint64_t>(s.origin.x));
      w.leb128(static_cast<std::uint64_t>(s.origin.y));
      w.leb128(static_cast<std::uint64_t>(s.origin.z));
      w.leb128(static_cast<std::uint64_t>(s.map_width));
      w.leb128(static_cast<std::uint64_t>(s.map_height));
    }
    w.leb128(frame.atlas.placements.size());
    for (const Placement& p : frame.atlas.placements) {
      w.leb128(static_cast<std::uint64_t>(p.section_id));
      w.leb128(static_cast<std::uint64_t>(p.u));
      w.leb128(static_cast<std::uint64_t>(p.v));
      w.u8(p.rotated ? 1 : 0);
    }
  }
}

std::int32_t checked_i32(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(kMaxDim)) fail(Errc::malformed_header, std::string(what) + " out of range");
  return static_cast<std::int32_t>(v);
}

ParsedHeader parse_header(ByteReader& r, std::span<const std::uint8_t> all_bytes) {
  const auto magic = r.bytes(4);
  if (std::memcmp(magic.data(), kMagic, 4) != 0) fail(Errc::bad_magic, "not an XPCC stream");
  const std::uint8_t version = r.u8();
  if (version != kVersion)
    fail(Errc::unsupported_format, "stream version " + std::to_string(version));

  ParsedHeader h;
  const std::uint64_t frame_count = r.leb128();
  const std::uint64_t bit_depth = r.leb128();
  if (bit_depth < 1 || bit_depth > 16) fail(Errc::malformed_header, "bit_depth out of range");
  h.bit_depth = static_cast<int>(bit_depth);
  auto read_param = [&](const char* what) {
    const std::uint64_t v = r.leb128();
    if (v < 1 || v > (std::uint64_t{1} << 30)) fail(Errc::malformed_header, std::string(what) + " out of range");
    return static_cast<int>(v);
  };
  h.params.geometry_qstep = read_param("geometry_qstep");
  h.params.attribute_qstep = read_param("attribute_qstep");
  h.params.inter_period = read_param("inter_period");
  h.params.compressor_level = read_param("compressor_level");

  for (std::uint64_t f = 0; f < frame_count; ++f) {
    FrameMeta meta;
    meta.width = checked_i32(r.leb128(), "atlas width");
    meta.height = checked_i32(r.leb128(), "atlas height");
    if (static_cast<std::size_t>(meta.width) * static_cast<std::size_t>(meta.height) > kMaxArea)
      fail(Errc::malformed_header, "atlas area out of range");
    meta.source_points = r.leb128();
    const std::uint64_t section_count = r.leb128();
    for (std::uint64_t s = 0; s < section_count; ++s) {
      SectionMeta sec;
      sec.section_id = checked_i32(r.leb128(), "section_id");
      const std::uint8_t axis = r.u8();
      if (axis > 2) fail(Errc::malformed_header, "bad cut axis");
      sec.cut_axis = static_cast<Axis>(axis);
      sec.slab_lo = checked_i32(r.leb128(), "slab_lo");
      sec.slab_hi = checked_i32(r.leb128(), "slab_hi");
      sec.ellipse.center_u = r.f64le();
      sec.ellipse.center_w = r.f64le();
      sec.ellipse.a = r.f64le();
      sec.ellipse.b = r.f64le();
      const std::uint8_t flags = r.u8();
      if (flags > 3) fail(Errc::malformed_header, "bad overlap flags");
      sec.overlap_lo = flags & 1;
      sec.overlap_hi = flags & 2;
      const std::uint8_t plane = r.u8();
      if (plane > 5) fail(Errc::malformed_header, "bad plane axis");
      sec.plane = static_cast<SignedAxis>(plane);
      sec.origin.x = checked_i32(r.leb128(), "origin.x");
      sec.origin.y = checked_i32(r.leb128(), "origin.y");
      sec.origin.z = checked_i32(r.leb128(), "origin.z");
      sec.map_width = checked_i32(r.leb128(), "map width");
      sec.map_height = checked_i32(r.leb128(), "map height");
      meta.sections.push_back(sec);
    }
    const std::uint64_t placement_count = r.leb128();
    for (std::uint64_t p = 0; p < placement_count; ++p) {
      Placement pl;
      pl.section_id = checked_i32(r.leb128(), "placement section_id");
      pl.u = checked_i32(r.leb128(), "placement u");
      pl.v = checked_i32(r.leb128(), "placement v");
      const std::uint8_t rotated = r.u8();
      if (rotated > 1) fail(Errc::malformed_header, "bad rotation flag");
      pl.rotated = rotated != 0;
      meta.placements.push_back(pl);
    }
    h.frames.push_back(std::move(meta));
  }

  h.header_bytes = r.pos();
  const std::uint32_t stored_crc = r.u32le();
  const std::uint32_t computed = crc32_ieee(all_bytes.first(h.header_bytes));
  if (stored_crc != computed) fail(Errc::crc_mismatch, "header CRC-32 mismatch");
  return h;
}

std::vector<std::uint8_t> encode_plane_residuals(std::span<const std::int32_t> residuals) {
  std::vector<std::uint8_t> out;
  out.reserve(residuals.size());
  ByteWriter w(out);
  for (std::int32_t v : residuals) w.leb128(detail::zigzag(v));
  return out;
}

}  // namespace

Bitstream encode_sequence(std::span<const FrameData> frames, const CodecParams& params,
                          int bit_depth) {
  if (params.geometry_qstep < 1 || params.attribute_qstep < 1 || params.inter_period < 1 ||
      params.compressor_level < 1)
    fail(Errc::invalid_argument, "codec params must be positive");
  if (bit_depth < 1 || bit_depth > 16) fail(Errc::invalid_argument, "bit_depth must be in [1, 16]");

  for (const FrameData& f : frames) {
    const std::size_t area = f.atlas.area();
    if (f.atlas.occupancy.size() != area || f.atlas.d0.size() != area ||
        f.atlas.d1.size() != area || f.atlas.a0.size() != area || f.atlas.a1.size() != area)
      fail(Errc::inconsistent_metadata, "atlas channel sizes disagree with dimensions");
  }

  Bitstream stream;
  ByteWriter w(stream.bytes);
  write_header(w, frames, params, bit_depth);
  w.u32le(crc32_ieee(stream.bytes));

  std::array<std::vector<std::int32_t>, kPlaneCount> prev_levels;
  std::int32_t prev_w = -1, prev_h = -1;

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Atlas& atlas = frames[i].atlas;
    const bool intra = (i % static_cast<std::size_t>(params.inter_period)) == 0 ||
                       atlas.width != prev_w || atlas.height != prev_h;

    // occupancy: always RLE + DEFLATE
    {
      const auto rle = rle_encode(atlas.occupancy);
      const auto packed = deflate_raw(rle, params.compressor_level);
      w.leb128(packed.size());
      w.bytes(packed);
    }

    std::array<std::vector<std::int32_t>, kPlaneCount> levels;
    auto quantize_plane = [](std::vector<std::int32_t> plane, int qstep) {
      for (std::int32_t& v : plane) v = quantize(v, qstep);
      return plane;
    };
    levels[0] = quantize_plane(atlas.d0, params.geometry_qstep);
    levels[1] = quantize_plane(atlas.d1, params.geometry_qstep);
    for (int c = 0; c < 3; ++c) {
      levels[static_cast<std::size_t>(2 + c)] =
          quantize_plane(component_plane(atlas.a0, c), params.attribute_qstep);
      levels[static_cast<std::size_t>(5 + c)] =
          quantize_plane(component_plane(atlas.a1, c), params.attribute_qstep);
    }

    auto plane_residuals = [&](int plane_index) {
      const auto& cur = levels[static_cast<std::size_t>(plane_index)];
      if (intra) return predict_residual(cur, atlas.occupancy, atlas.width, atlas.height);
      const auto& prev = prev_levels[static_cast<std::size_t>(plane_index)];
      std::vector<std::int32_t> diff(cur.size());
      for (std::size_t j = 0; j < cur.size(); ++j) diff[j] = cur[j] - prev[j];
      return diff;
    };

    // d0, d1: one plane per block; a0, a1: three component planes per block
    for (int ch = 0; ch < 4; ++ch) {
      std::vector<std::uint8_t> raw;
      if (ch < 2) {
        raw = encode_plane_residuals(plane_residuals(ch));
      } else {
        const int base = ch == 2 ? 2 : 5;
        for (int c = 0; c < 3; ++c) {
          const auto part = encode_plane_residuals(plane_residuals(base + c));
          raw.insert(raw.end(), part.begin(), part.end());
        }
      }
      const auto packed = deflate_raw(raw, params.compressor_level);
      w.leb128(packed.size());
      w.bytes(packed);
    }

    prev_levels = std::move(levels);
    prev_w = atlas.width;
    prev_h = atlas.height;
  }
  return stream;
}

DecodedSequence decode_sequence(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  const ParsedHeader header = parse_header(r, bytes);

  DecodedSequence out;
  out.bit_depth = header.bit_depth;
  out.params = header.params;

  const std::int32_t depth_limit = (std::int32_t{1} << header.bit_depth) - 1;
  std::array<std::vector<std::int32_t>, kPlaneCount> prev_levels;
  std::int32_t prev_w = -1, prev_h = -1;

  for (std::size_t i = 0; i < header.frames.size(); ++i) {
    const FrameMeta& meta = header.frames[i];
    const std::size_t area =
        static_cast<std::size_t>(meta.width) * static_cast<std::size_t>(meta.height);
    const bool intra = (i % static_cast<std::size_t>(header.params.inter_period)) == 0 ||
                       meta.width != prev_w || meta.height != prev_h;

    FrameData frame;
    frame.sections = meta.sections;
    frame.source_point_count = meta.source_points;
    Atlas& atlas = frame.atlas;
    atlas.width = meta.width;
    atlas.height = meta.height;
    atlas.placements = meta.placements;

    auto read_block = [&]() {
      const std::uint64_t len = r.leb128();
      if (len > r.remaining()) fail(Errc::truncated_payload, "channel block truncated");
      return inflate_raw(r.bytes(static_cast<std::size_t>(len)));
    };

    atlas.occupancy = rle_decode(read_block(), area);

    auto decode_planes = [&](int count) {
      const auto raw = read_block();
      ByteReader pr(raw);
      std::vector<std::vector<std::int32_t>> residuals(static_cast<std::size_t>(count));
      for (auto& plane : residuals) {
        plane.resize(area);
        for (std::size_t j = 0; j < area; ++j)
          plane[j] = static_cast<std::int32_t>(detail::unzigzag(pr.leb128()));
      }
      if (!pr.done()) fail(Errc::trailing_data, "trailing bytes in channel block");
      return residuals;
    };

    std::array<std::vector<std::int32_t>, kPlaneCount> levels;
    auto restore_plane = [&](int plane_index, std::vector<std::int32_t> residual) {
      if (intra) {
        levels[static_cast<std::size_t>(plane_index)] =
            predict_restore(residual, atlas.occupancy, atlas.width, atlas.height);
      } else {
        const auto& prev = prev_levels[static_cast<std::size_t>(plane_index)];
        for (std::size_t j = 0; j < residual.size(); ++j) residual[j] += prev[j];
        levels[static_cast<std::size_t>(plane_index)] = std::move(residual);
      }
    };

    restore_plane(0, std::move(decode_planes(1)[0]));
    restore_plane(1, std::move(decode_planes(1)[0]));
    {
      auto planes = decode_planes(3);
      for (int c = 0; c < 3; ++c) restore_plane(2 + c, std::move(planes[static_cast<std::size_t>(c)]));
    }
    {
      auto planes = decode_planes(3);
      for (int c = 0; c < 3; ++c) restore_plane(5 + c, std::move(planes[static_cast<std::size_t>(c)]));
    }

    auto dequantize_plane = [&](const std::vector<std::int32_t>& lv, int qstep,
                                std::int32_t limit) {
      std::vector<std::int32_t> plane(lv.size());
      for (std::size_t j = 0; j < lv.size(); ++j)
        plane[j] = std::clamp(dequantize(lv[j], qstep), 0, limit);
      return plane;
    };
    atlas.d0 = dequantize_plane(levels[0], header.params.geometry_qstep, depth_limit);
    atlas.d1 = dequantize_plane(levels[1], header.params.geometry_qstep, depth_limit);
    auto assemble_rgb = [&](int base) {
      std::vector<Rgb> rgb(area);
      for (int c = 0; c < 3; ++c) {
        const auto plane =
            dequantize_plane(levels[static_cast<std::size_t>(base + c)], header.params.attribute_qstep, 255);
        for (std::size_t j = 0; j < area; ++j) {
          const auto v = static_cast<std::uint8_t>(plane[j]);
          if (c == 0)
            rgb[j].r = v;
          else if (c == 1)
            rgb[j].g = v;
          else
            rgb[j].b = v;
        }
      }
      return rgb;
    };
    atlas.a0 = assemble_rgb(2);
    atlas.a1 = assemble_rgb(5);

    prev_levels = std::move(levels);
    prev_w = meta.width;
    prev_h = meta.height;
    out.frames.push_back(std::move(frame));
  }

  if (!r.done()) fail(Errc::trailing_data, "trailing bytes after last frame");
  return out;
}

StreamSummary inspect_stream(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  const ParsedHeader header = parse_header(r, bytes);

  StreamSummary summary;
  summary.bit_depth = header.bit_depth;
  summary.params = header.params;
  summary.total_bytes = bytes.size();
  for (const FrameMeta& meta : header.frames) {
    FrameStreamInfo info;
    info.width = meta.width;
    info.height = meta.height;
    info.source_points = meta.source_points;
    info.section_count = meta.sections.size();
    for (int ch = 0; ch < kChannelCount; ++ch) {
      const std::uint64_t len = r.leb128();
      if (len > r.remaining()) fail(Errc::truncated_payload, "channel block truncated");
      r.bytes(static_cast<std::size_t>(len));
      info.channel_bytes[ch] = len;
      info.payload_bytes += len;
    }
    summary.total_source_points += info.source_points;
    summary.frames.push_back(info);
  }
  if (!r.done()) fail(Errc::trailing_data, "trailing bytes after last frame");
  return summary;
}

BitrateInfo bitrate(const Bitstream& stream, double frame_rate) {
  if (frame_rate <= 0) fail(Errc::invalid_argument, "frame_rate must be positive");
  BitrateInfo info;
  if (stream.bytes.empty()) return info;
  const StreamSummary summary = inspect_stream(stream.bytes);
  const double total_bits = static_cast<double>(summary.total_bytes) * 8.0;
  if (!summary.frames.empty())
    info.bits_per_second = total_bits * frame_rate / static_cast<double>(summary.frames.size());
  if (summary.total_source_points > 0)
    info.bits_per_point = total_bits / static_cast<double>(summary.total_source_points);
  return info;
}

void write_stream_file(const Bitstream& stream, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(stream.bytes.data()),
            static_cast<std::streamsize>(stream.bytes.size()));
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

Bitstream read_stream_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) fail(Errc::io_failure, "cannot open " + path.string());
  const std::streamsize size = in.tellg();
  in.seekg(0);
  Bitstream stream;
  stream.bytes.resize(static_cast<std::size_t>(size));
  in.read(reinterpret_cast<char*>(stream.bytes.data()), size);
  if (!in) fail(Errc::io_failure, "read failed for " + path.string());
  return stream;
}

}  // namespace xpcc
