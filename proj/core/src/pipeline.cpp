// SPDX-License-Identifier: Apache-2.0
#include "xpcc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "xpcc/atlas.hpp"
#include "xpcc/error.hpp"

namespace xpcc {

void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const int worker_count = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (worker_count == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

FrameBuild build_frame_maps(const PointCloud& cloud, const PipelineConfig& config) {
  FrameBuild build;
  build.sections = segment(cloud, config.seg);
  const std::vector<SignedAxis> candidates = default_plane_candidates(config.seg.main_view);
  build.choices.reserve(build.sections.size());
  build.maps.reserve(build.sections.size());
  for (const CrossSection& section : build.sections) {
    const PlaneChoice choice = choose_plane(cloud, section, candidates);
    build.choices.push_back(choice);
    build.maps.push_back(project_section(cloud, section, choice.plane));
  }
  return build;
}

namespace {

bool layout_reusable(const std::vector<MapSet>& maps, const FrameData& prev) {
  if (maps.size() != prev.sections.size()) return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const MapDesc& cur = maps[i].desc;
    const SectionMeta& old = prev.sections[i];
    if (cur.section_id != old.section_id || cur.width != old.map_width ||
        cur.height != old.map_height)
      return false;
  }
  return true;
}

FrameData assemble_frame(const PointCloud& cloud, const PipelineConfig& config,
                         FrameBuild&& build, const FrameData* prev) {
  FrameData frame;
  frame.source_point_count = cloud.size();
  if (config.reuse_layout && prev != nullptr && layout_reusable(build.maps, *prev)) {
    frame.atlas = composite(build.maps, prev->atlas.placements, prev->atlas.width,
                            prev->atlas.height);
  } else {
    frame.atlas = pack(build.maps, config.atlas_width, config.alignment);
  }
  frame.sections.reserve(build.sections.size());
  for (std::size_t i = 0; i < build.sections.size(); ++i) {
    const CrossSection& sec = build.sections[i];
    const MapDesc& desc = build.maps[i].desc;
    SectionMeta meta;
    meta.section_id = sec.section_id;
    meta.cut_axis = sec.axis;
    meta.slab_lo = sec.slab_lo;
    meta.slab_hi = sec.slab_hi;
    meta.ellipse = sec.ellipse;
    meta.overlap_lo = sec.overlap_lo;
    meta.overlap_hi = sec.overlap_hi;
    meta.plane = desc.plane;
    meta.origin = desc.origin;
    meta.map_width = desc.width;
    meta.map_height = desc.height;
    frame.sections.push_back(meta);
  }
  return frame;
}

}  // namespace

EncodeOutput encode_clouds(std::span<const PointCloud> clouds, const PipelineConfig& config,
                           int threads) {
  for (const PointCloud& cloud : clouds) {
    if (cloud.empty()) fail(Errc::empty_cloud, "cannot encode an empty frame");
    if (cloud.bit_depth != config.bit_depth)
      fail(Errc::invalid_argument, "frame bit_depth differs from config");
  }

  std::vector<FrameBuild> builds(clouds.size());
  parallel_for_index(clouds.size(), threads,
                     [&](std::size_t i) { builds[i] = build_frame_maps(clouds[i], config); });

  EncodeOutput out;
  std::vector<FrameData> frames;
  frames.reserve(clouds.size());
  for (std::size_t i = 0; i < clouds.size(); ++i) {
    FrameSummary summary;
    summary.points = clouds[i].size();
    summary.sections = builds[i].sections.size();
    for (const MapSet& map : builds[i].maps) summary.lost_points += map.lost_ids.size();

    const FrameData* prev = i > 0 ? &frames[i - 1] : nullptr;
    FrameData frame = assemble_frame(clouds[i], config, std::move(builds[i]), prev);
    summary.occupancy_ratio = frame.atlas.area() > 0 ? occupancy_ratio(frame.atlas) : 0.0;
    out.frames.push_back(summary);
    frames.push_back(std::move(frame));
  }

  out.stream = encode_sequence(frames, config.codec, config.bit_depth);
  return out;
}

PointCloud reconstruct_frame(const FrameData& frame, int dedup_radius, int bit_depth) {
  std::vector<MapDesc> descriptors;
  descriptors.reserve(frame.sections.size());
  for (const SectionMeta& meta : frame.sections) descriptors.push_back(meta.map_desc());
  const std::vector<MapSet> maps = unpack(frame.atlas, descriptors);

  std::vector<SectionPoints> parts;
  parts.reserve(maps.size());
  for (const MapSet& map : maps)
    parts.push_back(SectionPoints{map.desc.section_id, unproject(map)});
  std::sort(parts.begin(), parts.end(), [](const SectionPoints& a, const SectionPoints& b) {
    return a.section_id < b.section_id;
  });
  return merge_sections(parts, dedup_radius, bit_depth);
}

std::vector<PointCloud> decode_to_clouds(std::span<const std::uint8_t> bytes, int dedup_radius) {
  const DecodedSequence decoded = decode_sequence(bytes);
  const int radius =
      dedup_radius >= 0
          ? dedup_radius
          : ((decoded.params.geometry_qstep == 1 && decoded.params.attribute_qstep == 1) ? 0 : 1);
  std::vector<PointCloud> clouds;
  clouds.reserve(decoded.frames.size());
  for (const FrameData& frame : decoded.frames)
    clouds.push_back(reconstruct_frame(frame, radius, decoded.bit_depth));
  return clouds;
}

}  // namespace xpcc
