// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <unordered_set>

#include "xpcc/atlas.hpp"
#include "xpcc/codec.hpp"
#include "xpcc/cross_section.hpp"
#include "xpcc/metrics.hpp"
#include "xpcc/pipeline.hpp"

namespace {

using namespace xpcc;

// Cylinder shell with two points per pixel column; `height` slabs of
// roughly 4 * radius points each.
PointCloud make_shell(double radius, std::int32_t height) {
  PointCloud cloud;
  std::unordered_set<std::uint64_t> seen;
  const auto ru = static_cast<std::int32_t>(radius);
  for (std::int32_t y = 0; y < height; ++y) {
    for (std::int32_t dx = -ru; dx <= ru; ++dx) {
      const double h = radius * std::sqrt(std::max(0.0, 1.0 - dx * dx / (radius * radius)));
      const auto dz = static_cast<std::int32_t>(std::llround(h));
      for (const std::int32_t z : {512 - dz, 512 + dz}) {
        const Vec3i p{512 + dx, 10 + y, z};
        if (seen.insert(voxel_key(p)).second) {
          cloud.points.push_back(p);
          cloud.colors.push_back(Rgb{static_cast<std::uint8_t>(p.x & 0xff),
                                     static_cast<std::uint8_t>(p.y & 0xff),
                                     static_cast<std::uint8_t>(p.z & 0xff)});
        }
      }
    }
  }
  return cloud;
}

void BM_Segment(benchmark::State& state) {
  const PointCloud cloud = make_shell(60.0, static_cast<std::int32_t>(state.range(0)));
  const SegmentationConfig config;
  for (auto _ : state) {
    auto sections = segment(cloud, config);
    benchmark::DoNotOptimize(sections);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(cloud.size()));
}
BENCHMARK(BM_Segment)->Arg(64)->Arg(256)->Arg(1000);

void BM_ProjectSection(benchmark::State& state) {
  const PointCloud cloud = make_shell(60.0, static_cast<std::int32_t>(state.range(0)));
  CrossSection section;
  section.axis = Axis::y;
  section.slab_lo = 10;
  section.slab_hi = 10 + static_cast<std::int32_t>(state.range(0)) - 1;
  for (std::uint32_t i = 0; i < cloud.size(); ++i) section.point_ids.push_back(i);
  for (auto _ : state) {
    MapSet map = project_section(cloud, section, SignedAxis::pos_z);
    benchmark::DoNotOptimize(map);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(cloud.size()));
}
BENCHMARK(BM_ProjectSection)->Arg(64)->Arg(512);

void BM_PackAtlas(benchmark::State& state) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::int32_t> dim(8, 120);
  std::vector<MapSet> maps;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    MapSet map;
    map.desc.section_id = i;
    map.desc.width = dim(rng);
    map.desc.height = dim(rng);
    const std::size_t area = map.desc.area();
    map.occupancy.assign(area, 1);
    map.d0.assign(area, 7);
    map.d1.assign(area, 9);
    map.a0.assign(area, Rgb{1, 2, 3});
    map.a1.assign(area, Rgb{4, 5, 6});
    maps.push_back(std::move(map));
  }
  for (auto _ : state) {
    Atlas atlas = pack(maps, 1024, 16);
    benchmark::DoNotOptimize(atlas);
  }
}
BENCHMARK(BM_PackAtlas)->Arg(8)->Arg(64);

void BM_EncodeFrame(benchmark::State& state) {
  const PointCloud cloud = make_shell(120.0, static_cast<std::int32_t>(state.range(0)));
  const PipelineConfig config;
  for (auto _ : state) {
    EncodeOutput out = encode_clouds({&cloud, 1}, config);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(cloud.size()));
}
BENCHMARK(BM_EncodeFrame)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_GeometryPsnr(benchmark::State& state) {
  const PointCloud a = make_shell(60.0, static_cast<std::int32_t>(state.range(0)));
  PointCloud b = a;
  for (Vec3i& p : b.points) p.x += 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry_psnr_d1(a, b));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(a.size()));
}
BENCHMARK(BM_GeometryPsnr)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
