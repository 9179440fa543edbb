// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "xpcc/codec.hpp"
#include "xpcc/cross_section.hpp"

namespace xpcc {

// Full pipeline configuration, loadable from a key=value text file. Unknown
// keys are rejected; '#' starts a comment.
struct PipelineConfig {
  SegmentationConfig seg;
  CodecParams codec;
  std::int32_t atlas_width = 1024;
  std::int32_t alignment = 16;
  int bit_depth = 10;
  double frame_rate = 30.0;
  int dedup_radius = -1;  // -1 = automatic: 0 when lossless, 1 when lossy
  bool reuse_layout = false;

  int effective_dedup_radius() const {
    if (dedup_radius >= 0) return dedup_radius;
    return (codec.geometry_qstep == 1 && codec.attribute_qstep == 1) ? 0 : 1;
  }
};

PipelineConfig parse_config_text(std::string_view text);
PipelineConfig load_config_file(const std::filesystem::path& path);
std::string to_config_text(const PipelineConfig& config);

}  // namespace xpcc
