// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "xpcc/config.hpp"
#include "xpcc/error.hpp"

using namespace xpcc;

TEST_SUITE("config") {

TEST_CASE("defaults") {
  const PipelineConfig config = parse_config_text("");
  CHECK(config.seg.auto_mode());
  CHECK(config.seg.ellipse_tolerance == doctest::Approx(2.0));
  CHECK(config.seg.overlap_width == 1);
  CHECK(config.seg.surface_thickness == 4);
  CHECK(config.seg.main_view == SignedAxis::pos_z);
  CHECK(config.codec.geometry_qstep == 1);
  CHECK(config.atlas_width == 1024);
  CHECK(config.alignment == 16);
  CHECK(config.bit_depth == 10);
  CHECK(config.effective_dedup_radius() == 0);
}

TEST_CASE("parse keys, comments and whitespace") {
  const PipelineConfig config = parse_config_text(
      "# comment line\n"
      "sections = 5\n"
      "ellipse_tolerance=1.5\n"
      "overlap_width=2   # trailing comment\n"
      "main_view=-x\n"
      "geometry_qstep=4\n"
      "attribute_qstep=2\n"
      "inter_period=8\n"
      "reuse_layout=true\n"
      "\n");
  REQUIRE(config.seg.target_sections.has_value());
  CHECK(*config.seg.target_sections == 5);
  CHECK(config.seg.ellipse_tolerance == doctest::Approx(1.5));
  CHECK(config.seg.overlap_width == 2);
  CHECK(config.seg.main_view == SignedAxis::neg_x);
  CHECK(config.codec.geometry_qstep == 4);
  CHECK(config.codec.attribute_qstep == 2);
  CHECK(config.codec.inter_period == 8);
  CHECK(config.reuse_layout);
  CHECK(config.effective_dedup_radius() == 1);  // lossy now
}

TEST_CASE("auto resets a previous sections key") {
  const PipelineConfig config = parse_config_text("sections=3\nauto=true\n");
  CHECK(config.seg.auto_mode());
}

TEST_CASE("serialization round trips") {
  PipelineConfig config;
  config.seg.target_sections = 4;
  config.seg.main_view = SignedAxis::neg_y;
  config.codec.geometry_qstep = 8;
  config.dedup_radius = 2;
  config.reuse_layout = true;
  const PipelineConfig reparsed = parse_config_text(to_config_text(config));
  CHECK(reparsed.seg.target_sections == config.seg.target_sections);
  CHECK(reparsed.seg.main_view == config.seg.main_view);
  CHECK(reparsed.codec.geometry_qstep == 8);
  CHECK(reparsed.dedup_radius == 2);
  CHECK(reparsed.reuse_layout);
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS((void)parse_config_text("nonsense\n"), Error);
  CHECK_THROWS_AS((void)parse_config_text("unknown_key=1\n"), Error);
  CHECK_THROWS_AS((void)parse_config_text("sections=abc\n"), Error);
  CHECK_THROWS_AS((void)parse_config_text("main_view=+q\n"), Error);
  CHECK_THROWS_AS((void)parse_config_text("reuse_layout=maybe\n"), Error);
}

}  // TEST_SUITE
