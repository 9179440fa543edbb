// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "xpcc/error.hpp"
#include "xpcc/projection.hpp"

using namespace xpcc;

namespace {

CrossSection whole_cloud_section(const PointCloud& cloud, Axis axis) {
  CrossSection section;
  section.axis = axis;
  const Aabb box = bounds(cloud);
  section.slab_lo = box.min[axis];
  section.slab_hi = box.max[axis];
  for (std::uint32_t i = 0; i < cloud.size(); ++i) section.point_ids.push_back(i);
  return section;
}

std::size_t captured_count(const MapSet& map) {
  std::size_t captured = 0;
  for (std::size_t i = 0; i < map.occupancy.size(); ++i) {
    if (!map.occupancy[i]) continue;
    captured += (map.d1[i] != map.d0[i]) ? 2 : 1;
  }
  return captured;
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("single point maps to a 1x1 map") {
  PointCloud cloud;
  cloud.points = {Vec3i{5, 6, 7}};
  cloud.colors = {Rgb{10, 20, 30}};
  const auto section = whole_cloud_section(cloud, Axis::y);
  const MapSet map = project_section(cloud, section, SignedAxis::pos_z);
  CHECK(map.desc.width == 1);
  CHECK(map.desc.height == 1);
  CHECK(map.desc.origin == Vec3i{5, 6, 7});
  CHECK(map.occupancy == std::vector<std::uint8_t>{1});
  CHECK(map.d0[0] == 0);
  CHECK(map.d1[0] == 0);
  CHECK(map.a0[0] == Rgb{10, 20, 30});
  CHECK(map.a1[0] == Rgb{10, 20, 30});
  CHECK(map.lost_ids.empty());
}

TEST_CASE("two depths in one column become the two layers") {
  PointCloud cloud;
  cloud.points = {Vec3i{4, 9, 3}, Vec3i{4, 9, 9}};
  cloud.colors = {Rgb{1, 0, 0}, Rgb{2, 0, 0}};
  const auto section = whole_cloud_section(cloud, Axis::y);
  const MapSet map = project_section(cloud, section, SignedAxis::pos_z);
  REQUIRE(map.desc.area() == 1);
  CHECK(map.d0[0] == 0);
  CHECK(map.d1[0] == 6);
  CHECK(map.a0[0] == Rgb{1, 0, 0});
  CHECK(map.a1[0] == Rgb{2, 0, 0});
  CHECK(map.lost_ids.empty());

  // negative-facing plane swaps near and far
  const MapSet neg = project_section(cloud, section, SignedAxis::neg_z);
  CHECK(neg.desc.origin.z == 9);
  CHECK(neg.d0[0] == 0);
  CHECK(neg.d1[0] == 6);
  CHECK(neg.a0[0] == Rgb{2, 0, 0});
  CHECK(neg.a1[0] == Rgb{1, 0, 0});
}

TEST_CASE("middle points of deep columns are lost") {
  PointCloud cloud;
  cloud.points = {Vec3i{4, 9, 0}, Vec3i{4, 9, 6}, Vec3i{4, 9, 12}};
  cloud.colors = {Rgb{1, 0, 0}, Rgb{2, 0, 0}, Rgb{3, 0, 0}};
  const auto section = whole_cloud_section(cloud, Axis::y);
  const MapSet map = project_section(cloud, section, SignedAxis::pos_z);
  CHECK(map.d0[0] == 0);
  CHECK(map.d1[0] == 12);
  REQUIRE(map.lost_ids.size() == 1);
  CHECK(map.lost_ids[0] == 1);  // the middle point
}

TEST_CASE("per-column replay on random sections") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const PointCloud cloud = test::make_random_blob(rng, 400, 15, 15, 15);
    const auto section = whole_cloud_section(cloud, Axis::y);
    const auto plane = static_cast<SignedAxis>(trial);
    const MapSet map = project_section(cloud, section, plane);

    // point conservation, d0 <= d1
    CHECK(captured_count(map) + map.lost_ids.size() == section.point_ids.size());
    for (std::size_t i = 0; i < map.occupancy.size(); ++i) {
      if (map.occupancy[i]) CHECK(map.d0[i] <= map.d1[i]);
    }

    // brute per-column replay: nearest kept, farthest kept, middles lost
    const Axis p_axis = axis_of(plane);
    const auto [u_axis, w_axis] = ortho_axes(p_axis);
    std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::int32_t>> columns;
    for (std::uint32_t id : section.point_ids) {
      const Vec3i& p = cloud.points[id];
      columns[{p[u_axis], p[w_axis]}].push_back(p[p_axis]);
    }
    std::size_t expect_lost = 0;
    for (auto& [pix, depths] : columns) expect_lost += depths.size() - std::min<std::size_t>(2, depths.size());
    CHECK(map.lost_ids.size() == expect_lost);
    CHECK(captured_count(map) == test::brute_capture_count(cloud, section.point_ids, plane));

    for (auto& [pix, depths] : columns) {
      std::sort(depths.begin(), depths.end());
      const std::int32_t col = pix.first - map.desc.origin[u_axis];
      const std::int32_t row = pix.second - map.desc.origin[w_axis];
      const std::size_t at = static_cast<std::size_t>(row) * static_cast<std::size_t>(map.desc.width) + static_cast<std::size_t>(col);
      REQUIRE(map.occupancy[at] == 1);
      if (sign_of(plane) > 0) {
        CHECK(map.desc.origin[p_axis] + map.d0[at] == depths.front());
        CHECK(map.desc.origin[p_axis] + map.d1[at] == depths.back());
      } else {
        CHECK(map.desc.origin[p_axis] - map.d0[at] == depths.back());
        CHECK(map.desc.origin[p_axis] - map.d1[at] == depths.front());
      }
    }
  }
}

TEST_CASE("two-layer columns lose nothing") {
  const PointCloud shell = test::make_cylinder_shell(11.0, 25);
  const auto section = whole_cloud_section(shell, Axis::y);
  const MapSet map = project_section(shell, section, SignedAxis::pos_z);
  CHECK(map.lost_ids.empty());
}

TEST_CASE("adding a point to an empty column never increases loss") {
  std::mt19937 rng(67);
  PointCloud cloud = test::make_random_blob(rng, 200, 12, 12, 12);
  auto section = whole_cloud_section(cloud, Axis::y);
  const MapSet before = project_section(cloud, section, SignedAxis::pos_z);

  // fresh (x, y) pixel outside the blob footprint
  cloud.points.push_back(Vec3i{50, 5, 5});
  cloud.colors.push_back(Rgb{});
  section = whole_cloud_section(cloud, Axis::y);
  const MapSet after = project_section(cloud, section, SignedAxis::pos_z);
  CHECK(after.lost_ids.size() <= before.lost_ids.size());
}

TEST_CASE("unchanged_ratio arithmetic") {
  MapSet map;
  CHECK(unchanged_ratio(map, 7) == doctest::Approx(1.0));
  map.lost_ids = {3, 4};
  CHECK(unchanged_ratio(map, 10) == doctest::Approx(0.8));
  CHECK_THROWS_AS((void)unchanged_ratio(map, 0), Error);
}

TEST_CASE("choose_plane prefers the main view on symmetric content") {
  const PointCloud plate = test::make_plate(12, 8);
  const auto section = whole_cloud_section(plate, Axis::y);
  const auto candidates = default_plane_candidates(SignedAxis::pos_z);
  const PlaneChoice choice = choose_plane(plate, section, candidates);
  CHECK(choice.plane == SignedAxis::pos_z);  // +z and -z tie, candidate order wins
  CHECK(choice.unchanged_ratio == doctest::Approx(1.0));
  CHECK(choice.lost_count == 0);
}

TEST_CASE("choose_plane on a single point returns the first candidate") {
  PointCloud cloud;
  cloud.points = {Vec3i{1, 2, 3}};
  cloud.colors = {Rgb{}};
  const auto section = whole_cloud_section(cloud, Axis::y);
  const auto candidates = default_plane_candidates(SignedAxis::neg_x);
  const PlaneChoice choice = choose_plane(cloud, section, candidates);
  CHECK(choice.plane == SignedAxis::neg_x);
  CHECK(choice.unchanged_ratio == doctest::Approx(1.0));
}

TEST_CASE("choose_plane matches capture-count replay") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const PointCloud cloud = test::make_random_blob(rng, 300, 20, 10, 6);
    const auto section = whole_cloud_section(cloud, Axis::y);
    const auto candidates = default_plane_candidates(static_cast<SignedAxis>(trial));
    const PlaneChoice choice = choose_plane(cloud, section, candidates);

    double best_ratio = -1;
    SignedAxis best_plane = candidates[0];
    for (SignedAxis plane : candidates) {
      const double ratio =
          static_cast<double>(test::brute_capture_count(cloud, section.point_ids, plane)) /
          static_cast<double>(section.point_ids.size());
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best_plane = plane;
      }
    }
    CHECK(choice.plane == best_plane);
    CHECK(choice.unchanged_ratio == doctest::Approx(best_ratio));
  }
}

TEST_CASE("empty section fails") {
  PointCloud cloud;
  cloud.points = {Vec3i{1, 2, 3}};
  cloud.colors = {Rgb{}};
  CrossSection section;
  section.axis = Axis::y;
  try {
    (void)project_section(cloud, section, SignedAxis::pos_z);
    FAIL("expected EmptySection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_section);
  }
}

}  // TEST_SUITE
