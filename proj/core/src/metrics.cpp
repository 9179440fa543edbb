// SPDX-License-Identifier: Apache-2.0
#include "xpcc/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "xpcc/error.hpp"

namespace xpcc {

namespace {

// Exact nearest neighbor over integer points; ties resolve to the lowest
// point index so results match a first-wins linear scan.
class NnIndex {
 public:
  explicit NnIndex(const std::vector<Vec3i>& points) : points_(points) {
    ids_.resize(points.size());
    std::iota(ids_.begin(), ids_.end(), 0u);
    if (!points.empty()) root_ = build(0, static_cast<std::uint32_t>(points.size()));
  }

  // Returns (index, squared distance).
  std::pair<std::uint32_t, std::int64_t> nearest(const Vec3i& q) const {
    best_d2_ = std::numeric_limits<std::int64_t>::max();
    best_id_ = 0;
    search(root_, q);
    return {best_id_, best_d2_};
  }

 private:
  struct Node {
    Aabb box;
    std::uint32_t begin = 0, end = 0;
    std::int32_t left = -1, right = -1;
  };

  static constexpr std::uint32_t kLeafSize = 16;

  std::int32_t build(std::uint32_t begin, std::uint32_t end) {
    Node node;
    node.begin = begin;
    node.end = end;
    node.box = Aabb{points_[ids_[begin]], points_[ids_[begin]]};
    for (std::uint32_t i = begin; i < end; ++i) {
      const Vec3i& p = points_[ids_[i]];
      node.box.min.x = std::min(node.box.min.x, p.x);
      node.box.min.y = std::min(node.box.min.y, p.y);
      node.box.min.z = std::min(node.box.min.z, p.z);
      node.box.max.x = std::max(node.box.max.x, p.x);
      node.box.max.y = std::max(node.box.max.y, p.y);
      node.box.max.z = std::max(node.box.max.z, p.z);
    }
    const std::int32_t index = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    if (end - begin > kLeafSize) {
      Axis widest = Axis::x;
      if (node.box.extent(Axis::y) > node.box.extent(widest)) widest = Axis::y;
      if (node.box.extent(Axis::z) > node.box.extent(widest)) widest = Axis::z;
      const std::uint32_t mid = begin + (end - begin) / 2;
      std::nth_element(ids_.begin() + begin, ids_.begin() + mid, ids_.begin() + end,
                       [&](std::uint32_t a, std::uint32_t b) {
                         return points_[a][widest] < points_[b][widest];
                       });
      const std::int32_t left = build(begin, mid);
      const std::int32_t right = build(mid, end);
      nodes_[static_cast<std::size_t>(index)].left = left;
      nodes_[static_cast<std::size_t>(index)].right = right;
    }
    return index;
  }

  static std::int64_t min_d2(const Aabb& box, const Vec3i& q) {
    std::int64_t d2 = 0;
    for (int a = 0; a < 3; ++a) {
      const Axis axis = static_cast<Axis>(a);
      std::int64_t d = 0;
      if (q[axis] < box.min[axis]) d = box.min[axis] - q[axis];
      else if (q[axis] > box.max[axis]) d = q[axis] - box.max[axis];
      d2 += d * d;
    }
    return d2;
  }

  void search(std::int32_t node_index, const Vec3i& q) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_index)];
    // non-strict: equal-distance candidates must still be visited so the
    // lowest index wins ties
    if (min_d2(node.box, q) > best_d2_) return;
    if (node.left < 0) {
      for (std::uint32_t i = node.begin; i < node.end; ++i) {
        const std::uint32_t id = ids_[i];
        const Vec3i& p = points_[id];
        const std::int64_t dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
        const std::int64_t d2 = dx * dx + dy * dy + dz * dz;
        if (d2 < best_d2_ || (d2 == best_d2_ && id < best_id_)) {
          best_d2_ = d2;
          best_id_ = id;
        }
      }
      return;
    }
    const std::int64_t dl = min_d2(nodes_[static_cast<std::size_t>(node.left)].box, q);
    const std::int64_t dr = min_d2(nodes_[static_cast<std::size_t>(node.right)].box, q);
    if (dl <= dr) {
      search(node.left, q);
      search(node.right, q);
    } else {
      search(node.right, q);
      search(node.left, q);
    }
  }

  const std::vector<Vec3i>& points_;
  std::vector<std::uint32_t> ids_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  mutable std::int64_t best_d2_ = 0;
  mutable std::uint32_t best_id_ = 0;
};

double directional_geometry_mse(const PointCloud& from, const NnIndex& to_index) {
  double sum = 0;
  for (const Vec3i& p : from.points) sum += static_cast<double>(to_index.nearest(p).second);
  return sum / static_cast<double>(from.size());
}

std::array<double, 3> directional_color_mse(const PointCloud& from, const PointCloud& to,
                                            const NnIndex& to_index) {
  std::array<double, 3> sum{0, 0, 0};
  for (std::size_t i = 0; i < from.size(); ++i) {
    const std::uint32_t nn = to_index.nearest(from.points[i]).first;
    for (int c = 0; c < 3; ++c) {
      const double d = static_cast<double>(from.colors[i][c]) - to.colors[nn][c];
      sum[static_cast<std::size_t>(c)] += d * d;
    }
  }
  for (double& s : sum) s /= static_cast<double>(from.size());
  return sum;
}

double psnr_from_mse(double peak_energy, double mse) {
  if (mse <= 0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(peak_energy / mse));
}

void check_pair(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty()) fail(Errc::empty_cloud, "metric over empty cloud");
  if (a.bit_depth != b.bit_depth) fail(Errc::invalid_argument, "bit_depth mismatch");
  if (a.colors.size() != a.points.size() || b.colors.size() != b.points.size())
    fail(Errc::invalid_argument, "colors/points length mismatch");
}

}  // namespace

double geometry_psnr_d1(const PointCloud& reference, const PointCloud& degraded) {
  check_pair(reference, degraded);
  const NnIndex ref_index(reference.points);
  const NnIndex deg_index(degraded.points);
  const double mse_ab = directional_geometry_mse(reference, deg_index);
  const double mse_ba = directional_geometry_mse(degraded, ref_index);
  const double mse = std::max(mse_ab, mse_ba);
  const double p = static_cast<double>(reference.coord_limit());
  return psnr_from_mse(3.0 * p * p, mse);
}

ColorPsnrResult color_psnr(const PointCloud& reference, const PointCloud& degraded) {
  check_pair(reference, degraded);
  const NnIndex ref_index(reference.points);
  const NnIndex deg_index(degraded.points);
  const auto mse_ab = directional_color_mse(reference, degraded, deg_index);
  const auto mse_ba = directional_color_mse(degraded, reference, ref_index);
  ColorPsnrResult out;
  const double peak = 255.0 * 255.0;
  out.r = psnr_from_mse(peak, std::max(mse_ab[0], mse_ba[0]));
  out.g = psnr_from_mse(peak, std::max(mse_ab[1], mse_ba[1]));
  out.b = psnr_from_mse(peak, std::max(mse_ab[2], mse_ba[2]));
  out.average = (out.r + out.g + out.b) / 3.0;
  return out;
}

double temporal_mad(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  if (a.size() != b.size()) fail(Errc::dim_mismatch, "temporal_mad over unequal planes");
  if (a.empty()) return 0.0;
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::abs(static_cast<double>(a[i]) - b[i]);
  return sum / static_cast<double>(a.size());
}

double temporal_mad(std::span<const Rgb> a, std::span<const Rgb> b) {
  if (a.size() != b.size()) fail(Errc::dim_mismatch, "temporal_mad over unequal planes");
  if (a.empty()) return 0.0;
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < 3; ++c)
      sum += std::abs(static_cast<double>(a[i][c]) - b[i][c]);
  }
  return sum / (3.0 * static_cast<double>(a.size()));
}

namespace {

struct CubicFit {
  std::array<double, 4> coeff{};  // c0 + c1 x' + c2 x'^2 + c3 x'^3, x' = x - shift
  double shift = 0;

  double integral(double lo, double hi) const {
    auto anti = [&](double x) {
      const double t = x - shift;
      return coeff[0] * t + coeff[1] * t * t / 2 + coeff[2] * t * t * t / 3 +
             coeff[3] * t * t * t * t / 4;
    };
    return anti(hi) - anti(lo);
  }
};

CubicFit fit_cubic(const std::vector<double>& xs, const std::vector<double>& ys) {
  CubicFit fit;
  fit.shift = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());

  double a[4][5] = {};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double x = xs[k] - fit.shift;
    double powers[7];
    powers[0] = 1;
    for (int i = 1; i < 7; ++i) powers[i] = powers[i - 1] * x;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a[i][j] += powers[i + j];
      a[i][4] += powers[i] * ys[k];
    }
  }
  // gaussian elimination with partial pivoting
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    std::swap(a[col], a[pivot]);
    if (std::abs(a[col][col]) < 1e-12) fail(Errc::invalid_curve, "degenerate cubic fit");
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double f = a[row][col] / a[col][col];
      for (int j = col; j < 5; ++j) a[row][j] -= f * a[col][j];
    }
  }
  for (int i = 0; i < 4; ++i) fit.coeff[static_cast<std::size_t>(i)] = a[i][4] / a[i][i];
  return fit;
}

void validate_curve(const RdCurve& curve) {
  if (curve.points.size() < 4)
    fail(Errc::insufficient_points, "RD curve needs at least 4 points");
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (curve.points[i].rate <= 0) fail(Errc::invalid_curve, "rates must be positive");
    if (i > 0 && curve.points[i].rate <= curve.points[i - 1].rate)
      fail(Errc::invalid_curve, "rates must be strictly increasing");
  }
}

struct AxisData {
  std::vector<double> xs, ys;
  double lo = 0, hi = 0;
};

AxisData curve_axis(const RdCurve& curve, bool psnr_as_x) {
  AxisData data;
  for (const RdPoint& p : curve.points) {
    const double x = psnr_as_x ? p.psnr : std::log10(p.rate);
    const double y = psnr_as_x ? std::log10(p.rate) : p.psnr;
    data.xs.push_back(x);
    data.ys.push_back(y);
  }
  data.lo = *std::min_element(data.xs.begin(), data.xs.end());
  data.hi = *std::max_element(data.xs.begin(), data.xs.end());
  return data;
}

double average_delta(const RdCurve& anchor, const RdCurve& test, bool psnr_as_x) {
  validate_curve(anchor);
  validate_curve(test);
  const AxisData a = curve_axis(anchor, psnr_as_x);
  const AxisData t = curve_axis(test, psnr_as_x);
  const double lo = std::max(a.lo, t.lo);
  const double hi = std::min(a.hi, t.hi);
  if (!(hi > lo)) fail(Errc::no_overlap, "curves do not overlap");
  const CubicFit fa = fit_cubic(a.xs, a.ys);
  const CubicFit ft = fit_cubic(t.xs, t.ys);
  return (ft.integral(lo, hi) - fa.integral(lo, hi)) / (hi - lo);
}

}  // namespace

double bd_rate(const RdCurve& anchor, const RdCurve& test) {
  const double delta_log_rate = average_delta(anchor, test, /*psnr_as_x=*/true);
  return (std::pow(10.0, delta_log_rate) - 1.0) * 100.0;
}

double bd_psnr(const RdCurve& anchor, const RdCurve& test) {
  return average_delta(anchor, test, /*psnr_as_x=*/false);
}

}  // namespace xpcc
