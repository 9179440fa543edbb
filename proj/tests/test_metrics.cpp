// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "xpcc/error.hpp"
#include "xpcc/metrics.hpp"

using namespace xpcc;

namespace {

RdCurve make_curve(std::vector<RdPoint> points) {
  RdCurve curve;
  curve.points = std::move(points);
  return curve;
}

RdCurve random_monotone_curve(std::mt19937& rng) { return test::make_smooth_rd_curve(rng); }

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("identical clouds hit the PSNR cap") {
  std::mt19937 rng(163);
  const PointCloud cloud = test::make_random_cloud(rng, 100);
  CHECK(geometry_psnr_d1(cloud, cloud) == doctest::Approx(kPsnrCap));
  CHECK(color_psnr(cloud, cloud).average == doctest::Approx(kPsnrCap));
}

TEST_CASE("single point pair evaluates the stated formula") {
  PointCloud a, b;
  a.points = {Vec3i{0, 0, 0}};
  a.colors = {Rgb{0, 0, 0}};
  b.points = {Vec3i{1, 0, 0}};
  b.colors = {Rgb{0, 0, 0}};
  // MSE = 1, PSNR = 10 log10(3 * 1023^2)
  CHECK(geometry_psnr_d1(a, b) == doctest::Approx(64.97).epsilon(0.0002));
}

TEST_CASE("color psnr single point example") {
  PointCloud a, b;
  a.points = {Vec3i{0, 0, 0}};
  a.colors = {Rgb{100, 0, 0}};
  b.points = {Vec3i{0, 0, 0}};
  b.colors = {Rgb{110, 0, 0}};
  const ColorPsnrResult result = color_psnr(a, b);
  CHECK(result.r == doctest::Approx(28.13).epsilon(0.0002));
  CHECK(result.g == doctest::Approx(kPsnrCap));
}

TEST_CASE("geometry psnr matches brute force on random pairs") {
  std::mt19937 rng(167);
  std::uniform_int_distribution<std::size_t> count(1, 500);
  for (int trial = 0; trial < 50; ++trial) {
    const PointCloud a = test::make_random_cloud(rng, count(rng), 255);
    const PointCloud b = test::make_random_cloud(rng, count(rng), 255);
    CHECK(geometry_psnr_d1(a, b) == doctest::Approx(test::brute_geometry_psnr(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("color psnr matches brute force on random pairs") {
  std::mt19937 rng(173);
  std::uniform_int_distribution<std::size_t> count(1, 200);
  for (int trial = 0; trial < 20; ++trial) {
    const PointCloud a = test::make_random_cloud(rng, count(rng), 127);
    const PointCloud b = test::make_random_cloud(rng, count(rng), 127);
    const ColorPsnrResult result = color_psnr(a, b);
    const auto expected = test::brute_color_psnr(a, b);
    CHECK(result.r == doctest::Approx(expected[0]).epsilon(1e-12));
    CHECK(result.g == doctest::Approx(expected[1]).epsilon(1e-12));
    CHECK(result.b == doctest::Approx(expected[2]).epsilon(1e-12));
  }
}

TEST_CASE("metric preconditions") {
  PointCloud empty, ok;
  ok.points = {Vec3i{0, 0, 0}};
  ok.colors = {Rgb{}};
  CHECK_THROWS_AS((void)geometry_psnr_d1(empty, ok), Error);
  PointCloud other = ok;
  other.bit_depth = 12;
  CHECK_THROWS_AS((void)geometry_psnr_d1(ok, other), Error);
}

TEST_CASE("temporal mad") {
  const std::vector<std::int32_t> a(20, 5), b(20, 8);
  CHECK(temporal_mad(a, a) == 0.0);
  CHECK(temporal_mad(a, b) == doctest::Approx(3.0));
  CHECK(temporal_mad(a, b) == temporal_mad(b, a));

  std::mt19937 rng(179);
  std::uniform_int_distribution<std::int32_t> value(0, 255);
  std::vector<std::int32_t> x(64), y(64);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = value(rng);
    y[i] = value(rng);
  }
  double expected = 0;
  for (std::size_t i = 0; i < x.size(); ++i) expected += std::abs(x[i] - y[i]);
  expected /= static_cast<double>(x.size());
  CHECK(temporal_mad(x, y) == doctest::Approx(expected));

  const std::vector<std::int32_t> shorter(10, 0);
  try {
    (void)temporal_mad(x, shorter);
    FAIL("expected DimMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dim_mismatch);
  }
}

TEST_CASE("bd identity is zero") {
  std::mt19937 rng(181);
  const RdCurve curve = random_monotone_curve(rng);
  CHECK(std::abs(bd_rate(curve, curve)) < 1e-9);
  CHECK(std::abs(bd_psnr(curve, curve)) < 1e-9);
}

TEST_CASE("doubled rates give +100 percent") {
  std::mt19937 rng(191);
  const RdCurve anchor = random_monotone_curve(rng);
  RdCurve doubled = anchor;
  for (RdPoint& p : doubled.points) p.rate *= 2.0;
  CHECK(bd_rate(anchor, doubled) == doctest::Approx(100.0).epsilon(0.001));
}

TEST_CASE("one dB up gives bd_psnr of one") {
  std::mt19937 rng(193);
  const RdCurve anchor = random_monotone_curve(rng);
  RdCurve lifted = anchor;
  for (RdPoint& p : lifted.points) p.psnr += 1.0;
  CHECK(bd_psnr(anchor, lifted) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("uniformly cheaper curves report the scale as savings") {
  std::mt19937 rng(197);
  const RdCurve anchor = random_monotone_curve(rng);
  RdCurve cheaper = anchor;
  for (RdPoint& p : cheaper.points) p.rate *= 0.6;
  CHECK(bd_rate(anchor, cheaper) == doctest::Approx(-40.0).epsilon(0.001));
}

TEST_CASE("cubic fit tracks the numeric integration oracle") {
  std::mt19937 rng(199);
  for (int trial = 0; trial < 20; ++trial) {
    const RdCurve anchor = random_monotone_curve(rng);
    RdCurve test_curve = random_monotone_curve(rng);
    const double fit_rate = bd_rate(anchor, test_curve);
    const double oracle_rate = test::numeric_bd_rate(anchor, test_curve);
    CHECK(std::abs(fit_rate - oracle_rate) <= 0.5);
    const double fit_psnr = bd_psnr(anchor, test_curve);
    const double oracle_psnr = test::numeric_bd_psnr(anchor, test_curve);
    CHECK(std::abs(fit_psnr - oracle_psnr) <= 0.05);
  }
}

TEST_CASE("bd error paths") {
  const RdCurve short_curve = make_curve({{1, 30}, {2, 31}, {3, 32}});
  const RdCurve ok = make_curve({{1, 30}, {2, 31}, {3, 32}, {4, 33}});
  try {
    (void)bd_rate(short_curve, ok);
    FAIL("expected InsufficientPoints");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_points);
  }

  const RdCurve disjoint = make_curve({{10, 50}, {20, 51}, {30, 52}, {40, 53}});
  try {
    (void)bd_rate(ok, disjoint);
    FAIL("expected NoOverlap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_overlap);
  }

  const RdCurve unsorted = make_curve({{4, 30}, {2, 31}, {3, 32}, {5, 33}});
  try {
    (void)bd_rate(unsorted, ok);
    FAIL("expected InvalidCurve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_curve);
  }
}

}  // TEST_SUITE
