// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "xpcc/codec.hpp"
#include "xpcc/config.hpp"
#include "xpcc/reconstruct.hpp"

namespace xpcc {

// Segmentation and projection results for one frame, before packing.
struct FrameBuild {
  std::vector<CrossSection> sections;
  std::vector<PlaneChoice> choices;  // one per section
  std::vector<MapSet> maps;          // one per section
};

FrameBuild build_frame_maps(const PointCloud& cloud, const PipelineConfig& config);

struct FrameSummary {
  std::uint64_t points = 0;
  std::size_t sections = 0;
  std::uint64_t lost_points = 0;
  double occupancy_ratio = 0.0;
};

struct EncodeOutput {
  Bitstream stream;
  std::vector<FrameSummary> frames;
};

// Full encoder pipeline: segment, choose planes, project, pack (optionally
// reusing the previous frame's placements when every map keeps its
// dimensions), then serialize. Frame builds run on `threads` workers; the
// output is independent of the thread count.
EncodeOutput encode_clouds(std::span<const PointCloud> clouds, const PipelineConfig& config,
                           int threads = 1);

// Decoder-side frame reconstruction: unpack, unproject, merge.
PointCloud reconstruct_frame(const FrameData& frame, int dedup_radius, int bit_depth);

// decode_sequence + reconstruct_frame per frame. dedup_radius -1 selects 0
// for lossless streams and 1 otherwise.
std::vector<PointCloud> decode_to_clouds(std::span<const std::uint8_t> bytes,
                                         int dedup_radius = -1);

// Runs fn(0..n-1) on up to `threads` workers; exceptions propagate.
void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace xpcc
