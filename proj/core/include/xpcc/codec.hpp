// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "xpcc/atlas.hpp"

namespace xpcc {

struct CodecParams {
  int geometry_qstep = 1;   // 1 = lossless depth
  int attribute_qstep = 1;  // 1 = lossless color
  int inter_period = 1;     // 1 = all-intra
  int compressor_level = 6;

  friend bool operator==(const CodecParams&, const CodecParams&) = default;
};

// Fixed in-stream channel order.
enum class Channel : std::uint8_t { occupancy = 0, d0, d1, a0, a1 };
inline constexpr int kChannelCount = 5;

// Everything the decoder needs per section: segmentation metadata plus the
// map geometry required to unpack and unproject.
struct SectionMeta {
  std::int32_t section_id = 0;
  Axis cut_axis = Axis::y;
  std::int32_t slab_lo = 0;
  std::int32_t slab_hi = 0;
  EllipseParams ellipse;
  bool overlap_lo = false;
  bool overlap_hi = false;
  SignedAxis plane = SignedAxis::pos_z;
  Vec3i origin;
  std::int32_t map_width = 0;
  std::int32_t map_height = 0;

  MapDesc map_desc() const { return MapDesc{section_id, plane, origin, map_width, map_height}; }

  friend bool operator==(const SectionMeta&, const SectionMeta&) = default;
};

struct FrameData {
  Atlas atlas;
  std::vector<SectionMeta> sections;
  std::uint64_t source_point_count = 0;
};

struct Bitstream {
  std::vector<std::uint8_t> bytes;
};

struct DecodedSequence {
  int bit_depth = 10;
  CodecParams params;
  std::vector<FrameData> frames;
};

// level = round(value / qstep), reconstruction = level * qstep;
// |value - dequantize(quantize(value))| <= qstep / 2.
std::int32_t quantize(std::int32_t value, int qstep);
std::int32_t dequantize(std::int32_t level, int qstep);

// Row-major run-length coding of a 0/1 bitmap: alternating runs starting
// with a zero-run (possibly length 0), LEB128 lengths.
std::vector<std::uint8_t> rle_encode(std::span<const std::uint8_t> bitmap);
std::vector<std::uint8_t> rle_decode(std::span<const std::uint8_t> bytes, std::size_t area);

// residual[p] = value[p] - predictor[p]; the predictor is the value of the
// nearest previously-scanned occupied pixel to the left in the same row,
// else the nearest occupied pixel above in the same column, else 0, in
// row-major scan order. predict_restore is the exact inverse.
std::vector<std::int32_t> predict_residual(std::span<const std::int32_t> plane,
                                           std::span<const std::uint8_t> occupancy,
                                           std::int32_t width, std::int32_t height);
std::vector<std::int32_t> predict_restore(std::span<const std::int32_t> residual,
                                          std::span<const std::uint8_t> occupancy,
                                          std::int32_t width, std::int32_t height);

// Serializes the frames into the XPCC container: header (magic, version,
// frame count, bit depth, params, per-frame metadata), CRC-32 over the
// header, then per frame the five channel blocks (DEFLATE payloads with
// LEB128 length prefixes). Frame i is intra iff i % inter_period == 0 or its
// dimensions differ from frame i-1; inter channels code quantized-domain
// differences against the previous frame.
Bitstream encode_sequence(std::span<const FrameData> frames, const CodecParams& params,
                          int bit_depth);

// Exact inverse at qstep 1; within qstep/2 per channel value otherwise
// (decoded values are clamped to the valid coordinate/color range).
DecodedSequence decode_sequence(std::span<const std::uint8_t> bytes);

struct FrameStreamInfo {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::uint64_t source_points = 0;
  std::size_t section_count = 0;
  std::uint64_t channel_bytes[kChannelCount] = {0, 0, 0, 0, 0};
  std::uint64_t payload_bytes = 0;
};

struct StreamSummary {
  int bit_depth = 10;
  CodecParams params;
  std::uint64_t total_bytes = 0;
  std::uint64_t total_source_points = 0;
  std::vector<FrameStreamInfo> frames;
};

// Header + block-length walk without inflating any payload.
StreamSummary inspect_stream(std::span<const std::uint8_t> bytes);

struct BitrateInfo {
  double bits_per_second = 0.0;
  double bits_per_point = 0.0;
};

BitrateInfo bitrate(const Bitstream& stream, double frame_rate);

void write_stream_file(const Bitstream& stream, const std::filesystem::path& path);
Bitstream read_stream_file(const std::filesystem::path& path);

}  // namespace xpcc
