// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "xpcc/metrics.hpp"
#include "xpcc/pipeline.hpp"

using namespace xpcc;

TEST_SUITE("pipeline") {

TEST_CASE("lossless end-to-end round trip on a two-layer shell") {
  const PointCloud shell = test::make_cylinder_shell(15.0, 40);
  PipelineConfig config;
  const EncodeOutput encoded = encode_clouds({&shell, 1}, config);
  REQUIRE(encoded.frames.size() == 1);
  CHECK(encoded.frames[0].lost_points == 0);
  CHECK(encoded.frames[0].points == shell.size());

  const auto decoded = decode_to_clouds(encoded.stream.bytes);
  REQUIRE(decoded.size() == 1);
  CHECK(test::same_colored_set(decoded[0], shell));
}

TEST_CASE("thread count does not change the bitstream") {
  std::vector<PointCloud> frames;
  for (int i = 0; i < 4; ++i) frames.push_back(test::make_cylinder_shell(12.0 + i, 25));
  PipelineConfig config;
  const auto serial = encode_clouds(frames, config, 1);
  const auto parallel = encode_clouds(frames, config, 3);
  CHECK(serial.stream.bytes == parallel.stream.bytes);
}

TEST_CASE("layout reuse keeps placements for translating content") {
  std::vector<PointCloud> frames;
  for (int i = 0; i < 3; ++i) {
    PointCloud frame = test::make_cylinder_shell(14.0, 30, 300 + 2 * i, 300);
    frames.push_back(std::move(frame));
  }
  PipelineConfig config;
  config.reuse_layout = true;
  const auto encoded = encode_clouds(frames, config);
  const auto decoded = decode_sequence(encoded.stream.bytes);
  REQUIRE(decoded.frames.size() == 3);
  for (std::size_t f = 1; f < 3; ++f) {
    CHECK(decoded.frames[f].atlas.placements == decoded.frames[0].atlas.placements);
    // identical shape content lands on identical pixels (colors differ, depths do not)
    CHECK(temporal_mad(decoded.frames[f].atlas.d0, decoded.frames[0].atlas.d0) ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("lossy decode stays within the quantization bound") {
  const PointCloud shell = test::make_cylinder_shell(18.0, 30);
  PipelineConfig config;
  config.codec.geometry_qstep = 4;
  config.codec.attribute_qstep = 4;
  const auto encoded = encode_clouds({&shell, 1}, config);
  const auto decoded = decode_to_clouds(encoded.stream.bytes);
  REQUIRE(decoded.size() == 1);
  CHECK_FALSE(decoded[0].empty());
  // depth error <= q/2 keeps the point-to-point PSNR high
  CHECK(geometry_psnr_d1(shell, decoded[0]) > 50.0);
}

TEST_CASE("analyze-style frame build reports per-section choices") {
  const PointCloud stacked = test::make_stacked_cylinders(10.0, 30.0, 40);
  PipelineConfig config;
  const FrameBuild build = build_frame_maps(stacked, config);
  CHECK(build.sections.size() == 2);
  REQUIRE(build.choices.size() == build.sections.size());
  REQUIRE(build.maps.size() == build.sections.size());
  for (const PlaneChoice& choice : build.choices) {
    CHECK(choice.unchanged_ratio == doctest::Approx(1.0));
  }
}

}  // TEST_SUITE
