// SPDX-License-Identifier: Apache-2.0
#include "xpcc/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "xpcc/error.hpp"
#include "xpcc/projection.hpp"

namespace xpcc {

namespace {

constexpr std::int32_t kI32Max = std::numeric_limits<std::int32_t>::max();
constexpr std::int32_t kI32Min = std::numeric_limits<std::int32_t>::min();

struct Extents {
  std::int32_t u_min = kI32Max, u_max = kI32Min;
  std::int32_t w_min = kI32Max, w_max = kI32Min;

  void add(std::int32_t u, std::int32_t w) {
    u_min = std::min(u_min, u);
    u_max = std::max(u_max, u);
    w_min = std::min(w_min, w);
    w_max = std::max(w_max, w);
  }
  bool empty() const { return u_min > u_max; }

  EllipseParams ellipse() const {
    EllipseParams e;
    e.center_u = (static_cast<double>(u_min) + u_max) / 2.0;
    e.center_w = (static_cast<double>(w_min) + w_max) / 2.0;
    const double hu = (static_cast<double>(u_max) - u_min) / 2.0;
    const double hw = (static_cast<double>(w_max) - w_min) / 2.0;
    e.a = std::max(hu, hw);
    e.b = std::min(hu, hw);
    return e;
  }
};

int count_clusters(const std::vector<std::int32_t>& sorted_depths, int thickness) {
  if (sorted_depths.empty()) return 0;
  int clusters = 1;
  for (std::size_t i = 1; i < sorted_depths.size(); ++i) {
    if (sorted_depths[i] - sorted_depths[i - 1] > thickness) ++clusters;
  }
  return clusters;
}

// Incremental per-column depth clustering for auto-mode growth. Tracks how
// many columns currently exceed two clusters so the <= 2 layer test is O(1).
class ColumnTracker {
 public:
  explicit ColumnTracker(int thickness) : thickness_(thickness) {}

  void clear() {
    columns_.clear();
    overflow_columns_ = 0;
  }

  void insert(std::int32_t col, std::int32_t depth) {
    Column& c = columns_[col];
    const bool was_over = c.clusters > 2;
    auto it = std::lower_bound(c.depths.begin(), c.depths.end(), depth);
    const bool has_prev = it != c.depths.begin();
    const bool has_next = it != c.depths.end();
    c.clusters += neighbor_delta(has_prev, has_prev ? *(it - 1) : 0, has_next,
                                 has_next ? *it : 0, depth);
    c.depths.insert(it, depth);
    update_overflow(was_over, c.clusters > 2);
  }

  void erase(std::int32_t col, std::int32_t depth) {
    Column& c = columns_[col];
    const bool was_over = c.clusters > 2;
    auto it = std::lower_bound(c.depths.begin(), c.depths.end(), depth);
    const bool has_prev = it != c.depths.begin();
    const bool has_next = it + 1 != c.depths.end();
    c.clusters -= neighbor_delta(has_prev, has_prev ? *(it - 1) : 0, has_next,
                                 has_next ? *(it + 1) : 0, depth);
    c.depths.erase(it);
    update_overflow(was_over, c.clusters > 2);
  }

  bool all_within_two_layers() const { return overflow_columns_ == 0; }

 private:
  struct Column {
    std::vector<std::int32_t> depths;  // sorted, duplicates allowed
    int clusters = 0;
  };

  // Cluster-count change from adding `depth` between the given neighbors
  // (negated, the change from removing it again).
  int neighbor_delta(bool has_prev, std::int32_t prev, bool has_next, std::int32_t next,
                     std::int32_t depth) const {
    const bool join_prev = has_prev && depth - prev <= thickness_;
    const bool join_next = has_next && next - depth <= thickness_;
    if (join_prev && join_next) {
      return (next - prev <= thickness_) ? 0 : -1;  // bridges two clusters
    }
    if (join_prev || join_next) return 0;
    return 1;
  }

  void update_overflow(bool was_over, bool is_over) {
    if (was_over != is_over) overflow_columns_ += is_over ? 1 : -1;
  }

  std::unordered_map<std::int32_t, Column> columns_;
  int thickness_;
  int overflow_columns_ = 0;
};

std::vector<std::vector<std::uint32_t>> bucket_by_coord(const PointCloud& cloud, Axis axis,
                                                        std::int32_t lo, std::int32_t hi) {
  std::vector<std::vector<std::uint32_t>> slabs(static_cast<std::size_t>(hi - lo + 1));
  for (std::uint32_t id = 0; id < cloud.points.size(); ++id) {
    slabs[static_cast<std::size_t>(cloud.points[id][axis] - lo)].push_back(id);
  }
  return slabs;
}

void validate_config(const SegmentationConfig& config) {
  if (config.ellipse_tolerance < 0)
    fail(Errc::invalid_argument, "ellipse_tolerance must be >= 0");
  if (config.overlap_width < 0) fail(Errc::invalid_argument, "overlap_width must be >= 0");
  if (config.surface_thickness < 1)
    fail(Errc::invalid_argument, "surface_thickness must be >= 1");
  if (config.target_sections && *config.target_sections < 1)
    fail(Errc::invalid_argument, "target_sections must be >= 1");
}

}  // namespace

std::pair<double, double> section_center(const PointCloud& cloud, Axis cut_axis,
                                         std::int32_t slab_lo, std::int32_t slab_hi) {
  const auto [u_axis, w_axis] = ortho_axes(cut_axis);
  Extents ex;
  for (const Vec3i& p : cloud.points) {
    const std::int32_t c = p[cut_axis];
    if (c >= slab_lo && c <= slab_hi) ex.add(p[u_axis], p[w_axis]);
  }
  if (ex.empty()) fail(Errc::empty_slab, "section_center on empty slab");
  return {(static_cast<double>(ex.u_min) + ex.u_max) / 2.0,
          (static_cast<double>(ex.w_min) + ex.w_max) / 2.0};
}

double ring_distance(double u, double w, double center_u, double center_w) {
  return std::hypot(u - center_u, w - center_w);
}

EllipseParams fit_ellipse(const PointCloud& cloud, Axis cut_axis, std::int32_t slab_lo,
                          std::int32_t slab_hi) {
  const auto [u_axis, w_axis] = ortho_axes(cut_axis);
  Extents ex;
  for (const Vec3i& p : cloud.points) {
    const std::int32_t c = p[cut_axis];
    if (c >= slab_lo && c <= slab_hi) ex.add(p[u_axis], p[w_axis]);
  }
  if (ex.empty()) fail(Errc::empty_slab, "fit_ellipse on empty slab");
  return ex.ellipse();
}

bool ellipse_membership(double d, const EllipseParams& ellipse, double tolerance) {
  if (tolerance < 0) fail(Errc::invalid_argument, "tolerance must be >= 0");
  return ellipse.b - tolerance <= d && d <= ellipse.a + tolerance;
}

LayerProfile layer_profile(const PointCloud& cloud, Axis cut_axis, SignedAxis proj_axis,
                           int surface_thickness) {
  if (axis_of(proj_axis) == cut_axis)
    fail(Errc::invalid_argument, "projection axis must differ from cut axis");
  if (surface_thickness < 1) fail(Errc::invalid_argument, "surface_thickness must be >= 1");
  LayerProfile profile;
  if (cloud.empty()) return profile;

  const Axis p_axis = axis_of(proj_axis);
  const Axis col_axis = third_axis(cut_axis, p_axis);

  struct Cell {
    std::int32_t slab, col, depth;
  };
  std::vector<Cell> cells;
  cells.reserve(cloud.size());
  std::int32_t lo = kI32Max, hi = kI32Min;
  for (const Vec3i& p : cloud.points) {
    cells.push_back(Cell{p[cut_axis], p[col_axis], p[p_axis]});
    lo = std::min(lo, p[cut_axis]);
    hi = std::max(hi, p[cut_axis]);
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.slab != b.slab) return a.slab < b.slab;
    if (a.col != b.col) return a.col < b.col;
    return a.depth < b.depth;
  });

  profile.first_slab = lo;
  profile.max_layers.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    int clusters = 1;
    while (j + 1 < cells.size() && cells[j + 1].slab == cells[i].slab &&
           cells[j + 1].col == cells[i].col) {
      if (cells[j + 1].depth - cells[j].depth > surface_thickness) ++clusters;
      ++j;
    }
    auto& slot = profile.max_layers[static_cast<std::size_t>(cells[i].slab - lo)];
    slot = std::max(slot, clusters);
    i = j + 1;
  }
  return profile;
}

int range_layer_count(const PointCloud& cloud, Axis cut_axis, std::int32_t slab_lo,
                      std::int32_t slab_hi, SignedAxis proj_axis, int surface_thickness) {
  if (axis_of(proj_axis) == cut_axis)
    fail(Errc::invalid_argument, "projection axis must differ from cut axis");
  if (surface_thickness < 1) fail(Errc::invalid_argument, "surface_thickness must be >= 1");
  const Axis p_axis = axis_of(proj_axis);
  const Axis col_axis = third_axis(cut_axis, p_axis);

  std::unordered_map<std::int32_t, std::vector<std::int32_t>> columns;
  for (const Vec3i& p : cloud.points) {
    const std::int32_t c = p[cut_axis];
    if (c >= slab_lo && c <= slab_hi) columns[p[col_axis]].push_back(p[p_axis]);
  }
  int max_layers = 0;
  for (auto& [col, depths] : columns) {
    std::sort(depths.begin(), depths.end());
    max_layers = std::max(max_layers, count_clusters(depths, surface_thickness));
  }
  return max_layers;
}

Axis select_axis(const PointCloud& cloud, SignedAxis main_view, int surface_thickness) {
  if (cloud.empty()) fail(Errc::empty_cloud, "select_axis on empty cloud");
  const Aabb box = bounds(cloud);
  const Axis excluded = axis_of(main_view);

  auto profile_mean = [&](Axis candidate) {
    const LayerProfile prof = layer_profile(cloud, candidate, main_view, surface_thickness);
    if (prof.max_layers.empty()) return 0.0;
    double sum = 0;
    for (int v : prof.max_layers) sum += v;
    return sum / static_cast<double>(prof.max_layers.size());
  };

  bool have_best = false;
  Axis best = Axis::x;
  std::int32_t best_extent = 0;
  double best_mean = 0;
  for (int i = 0; i < 3; ++i) {
    const Axis candidate = static_cast<Axis>(i);
    if (candidate == excluded) continue;
    const std::int32_t extent = box.extent(candidate);
    if (!have_best) {
      best = candidate;
      best_extent = extent;
      best_mean = profile_mean(candidate);
      have_best = true;
      continue;
    }
    if (extent < best_extent) continue;
    if (extent > best_extent) {
      best = candidate;
      best_extent = extent;
      best_mean = profile_mean(candidate);
      continue;
    }
    const double mean = profile_mean(candidate);
    if (mean < best_mean) {  // equal extents: fewer layers wins; else keep X < Y < Z order
      best = candidate;
      best_mean = mean;
    }
  }
  return best;
}

namespace {

struct CoreRange {
  std::int32_t lo, hi;
};

std::vector<CoreRange> manual_cores(const PointCloud& cloud, Axis cut,
                                    const std::vector<std::vector<std::uint32_t>>& slabs,
                                    std::int32_t lo, const SegmentationConfig& config) {
  const auto [u_axis, w_axis] = ortho_axes(cut);
  std::vector<std::int32_t> occupied;
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    if (!slabs[i].empty()) occupied.push_back(lo + static_cast<std::int32_t>(i));
  }
  const int k = *config.target_sections;
  const int m = static_cast<int>(occupied.size());
  if (k > m) fail(Errc::invalid_k, "target_sections exceeds non-empty slab count");

  if (k == 1) return {CoreRange{occupied.front(), occupied.back()}};

  // Per-occupied-slab layer maximum and fitted half-extents, one pass.
  const LayerProfile prof = layer_profile(cloud, cut, config.main_view, config.surface_thickness);
  std::vector<Extents> slab_extents(slabs.size());
  for (const Vec3i& p : cloud.points) {
    slab_extents[static_cast<std::size_t>(p[cut] - lo)].add(p[u_axis], p[w_axis]);
  }

  auto slab_stats = [&](std::int32_t coord) {
    const auto idx = static_cast<std::size_t>(coord - lo);
    const EllipseParams e = slab_extents[idx].ellipse();
    return std::tuple<int, double, double>(prof.max_layers[idx], e.a, e.b);
  };

  struct Gap {
    double score;
    int index;  // gap g sits between occupied[g] and occupied[g + 1]
  };
  std::vector<Gap> gaps;
  gaps.reserve(static_cast<std::size_t>(m - 1));
  for (int g = 0; g + 1 < m; ++g) {
    const auto [l_layers, l_a, l_b] = slab_stats(occupied[static_cast<std::size_t>(g)]);
    const auto [r_layers, r_a, r_b] = slab_stats(occupied[static_cast<std::size_t>(g + 1)]);
    const double score =
        std::abs(r_layers - l_layers) + std::abs(r_a - l_a) + std::abs(r_b - l_b);
    gaps.push_back(Gap{score, g});
  }
  std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) {
    return a.score != b.score ? a.score > b.score : a.index < b.index;
  });
  std::vector<int> chosen;
  for (int i = 0; i < k - 1; ++i) chosen.push_back(gaps[static_cast<std::size_t>(i)].index);
  std::sort(chosen.begin(), chosen.end());

  std::vector<CoreRange> cores;
  int start = 0;
  for (int g : chosen) {
    cores.push_back(CoreRange{occupied[static_cast<std::size_t>(start)],
                              occupied[static_cast<std::size_t>(g)]});
    start = g + 1;
  }
  cores.push_back(
      CoreRange{occupied[static_cast<std::size_t>(start)], occupied.back()});
  return cores;
}

std::vector<CoreRange> auto_cores(const PointCloud& cloud, Axis cut,
                                  const std::vector<std::vector<std::uint32_t>>& slabs,
                                  std::int32_t lo, const SegmentationConfig& config) {
  const auto [u_axis, w_axis] = ortho_axes(cut);
  const Axis p_axis = axis_of(config.main_view);
  const Axis col_axis = third_axis(cut, p_axis);

  ColumnTracker tracker(config.surface_thickness);
  Extents extents;
  std::vector<CoreRange> cores;
  std::int32_t cur_lo = 0, cur_hi = 0;
  bool open = false;

  auto insert_slab = [&](const std::vector<std::uint32_t>& ids) {
    for (std::uint32_t id : ids) {
      const Vec3i& p = cloud.points[id];
      tracker.insert(p[col_axis], p[p_axis]);
    }
  };
  auto erase_slab = [&](const std::vector<std::uint32_t>& ids) {
    for (std::uint32_t id : ids) {
      const Vec3i& p = cloud.points[id];
      tracker.erase(p[col_axis], p[p_axis]);
    }
  };
  auto extend_extents = [&](const std::vector<std::uint32_t>& ids) {
    for (std::uint32_t id : ids) {
      const Vec3i& p = cloud.points[id];
      extents.add(p[u_axis], p[w_axis]);
    }
  };

  for (std::size_t i = 0; i < slabs.size(); ++i) {
    const auto& ids = slabs[i];
    const std::int32_t coord = lo + static_cast<std::int32_t>(i);
    if (!open) {
      if (ids.empty()) continue;
      tracker.clear();
      extents = Extents{};
      insert_slab(ids);
      extend_extents(ids);
      cur_lo = cur_hi = coord;
      open = true;
      continue;
    }
    if (ids.empty()) continue;  // nothing to test; section may still grow past the gap

    // (b) every new point fits the running section's ellipse
    const EllipseParams running = extents.ellipse();
    bool ellipse_ok = true;
    for (std::uint32_t id : ids) {
      const Vec3i& p = cloud.points[id];
      const double d = ring_distance(p[u_axis], p[w_axis], running.center_u, running.center_w);
      if (!ellipse_membership(d, running, config.ellipse_tolerance)) {
        ellipse_ok = false;
        break;
      }
    }
    // (a) grown section stays within two layers along the main view
    insert_slab(ids);
    const bool layers_ok = tracker.all_within_two_layers();

    if (layers_ok || ellipse_ok) {
      extend_extents(ids);
      cur_hi = coord;
    } else {
      erase_slab(ids);
      cores.push_back(CoreRange{cur_lo, cur_hi});
      tracker.clear();
      extents = Extents{};
      insert_slab(ids);
      extend_extents(ids);
      cur_lo = cur_hi = coord;
    }
  }
  if (open) cores.push_back(CoreRange{cur_lo, cur_hi});
  return cores;
}

}  // namespace

std::vector<CrossSection> segment(const PointCloud& cloud, const SegmentationConfig& config) {
  if (cloud.empty()) fail(Errc::empty_cloud, "segment on empty cloud");
  validate_config(config);

  const Axis cut = select_axis(cloud, config.main_view, config.surface_thickness);
  const auto [u_axis, w_axis] = ortho_axes(cut);
  const Aabb box = bounds(cloud);
  const std::int32_t lo = box.min[cut];
  const auto slabs = bucket_by_coord(cloud, cut, lo, box.max[cut]);

  const std::vector<CoreRange> cores = config.auto_mode()
                                           ? auto_cores(cloud, cut, slabs, lo, config)
                                           : manual_cores(cloud, cut, slabs, lo, config);

  std::vector<CrossSection> sections(cores.size());
  for (std::size_t s = 0; s < cores.size(); ++s) {
    CrossSection& sec = sections[s];
    sec.axis = cut;
    sec.section_id = static_cast<std::int32_t>(s);
    sec.slab_lo = cores[s].lo;
    sec.slab_hi = cores[s].hi;
    Extents ex;
    for (std::int32_t c = cores[s].lo; c <= cores[s].hi; ++c) {
      const auto& ids = slabs[static_cast<std::size_t>(c - lo)];
      sec.point_ids.insert(sec.point_ids.end(), ids.begin(), ids.end());
      for (std::uint32_t id : ids) {
        const Vec3i& p = cloud.points[id];
        ex.add(p[u_axis], p[w_axis]);
      }
    }
    // the ellipse describes the section's own shape; overlap rows gained
    // below are duplicated neighbor data and stay out of the fit
    sec.ellipse = ex.ellipse();
  }

  // Overlap rows: every interior boundary shares overlap_width slabs from
  // each side with the neighbor; no point ends up in more than two sections.
  if (config.overlap_width > 0 && sections.size() > 1) {
    std::vector<std::uint8_t> memberships(cloud.size(), 1);
    auto gain = [&](CrossSection& into, std::int32_t from_lo, std::int32_t from_hi,
                    bool at_high_edge) {
      bool gained = false;
      for (std::int32_t c = from_lo; c <= from_hi; ++c) {
        for (std::uint32_t id : slabs[static_cast<std::size_t>(c - lo)]) {
          if (memberships[id] >= 2) continue;
          ++memberships[id];
          into.point_ids.push_back(id);
          gained = true;
        }
      }
      if (gained) {
        if (at_high_edge) {
          into.slab_hi = std::max(into.slab_hi, from_hi);
          into.overlap_hi = true;
        } else {
          into.slab_lo = std::min(into.slab_lo, from_lo);
          into.overlap_lo = true;
        }
      }
    };
    const std::int32_t w = config.overlap_width;
    for (std::size_t s = 0; s + 1 < sections.size(); ++s) {
      const CoreRange& left = cores[s];
      const CoreRange& right = cores[s + 1];
      gain(sections[s], right.lo, std::min(right.lo + w - 1, right.hi), /*at_high_edge=*/true);
      gain(sections[s + 1], std::max(left.hi - w + 1, left.lo), left.hi, /*at_high_edge=*/false);
    }
  }

  for (CrossSection& sec : sections) std::sort(sec.point_ids.begin(), sec.point_ids.end());
  return sections;
}

std::vector<CrossSection> subdivide(const CrossSection& section, const PointCloud& cloud,
                                    int n_parts, std::span<const SignedAxis> candidate_planes,
                                    std::int32_t first_section_id) {
  if (n_parts < 2) fail(Errc::invalid_argument, "n_parts must be >= 2");
  if (section.point_ids.empty()) fail(Errc::empty_section, "subdivide on empty section");
  if (candidate_planes.empty()) fail(Errc::invalid_argument, "no candidate planes");
  if (first_section_id < 0) first_section_id = section.section_id;

  const SignedAxis best_plane = choose_plane(cloud, section, candidate_planes).plane;
  Axis split;
  if (axis_of(best_plane) == section.axis) {
    split = section.axis == Axis::x ? Axis::y : Axis::x;
  } else {
    split = third_axis(section.axis, axis_of(best_plane));
  }

  // Occupied split-axis coordinates, ascending; bands are contiguous runs.
  std::vector<std::pair<std::int32_t, std::uint32_t>> keyed;
  keyed.reserve(section.point_ids.size());
  for (std::uint32_t id : section.point_ids) keyed.emplace_back(cloud.points[id][split], id);
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::int32_t> coords;
  std::vector<std::size_t> group_start;  // index into keyed where each coord begins
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      coords.push_back(keyed[i].first);
      group_start.push_back(i);
    }
  }
  group_start.push_back(keyed.size());
  const int m = static_cast<int>(coords.size());
  if (n_parts > m) fail(Errc::too_many_parts, "n_parts exceeds occupied slabs");

  auto make_band = [&](int ci, int cj) {  // occupied-coord index range, inclusive
    CrossSection band;
    band.axis = split;
    band.slab_lo = coords[static_cast<std::size_t>(ci)];
    band.slab_hi = coords[static_cast<std::size_t>(cj)];
    band.point_ids.reserve(group_start[static_cast<std::size_t>(cj + 1)] -
                           group_start[static_cast<std::size_t>(ci)]);
    for (std::size_t k = group_start[static_cast<std::size_t>(ci)];
         k < group_start[static_cast<std::size_t>(cj + 1)]; ++k)
      band.point_ids.push_back(keyed[k].second);
    std::sort(band.point_ids.begin(), band.point_ids.end());
    return band;
  };

  // Best unchanged ratio per band, memoized over (start, end) coord indices.
  std::vector<std::vector<double>> ratio(static_cast<std::size_t>(m),
                                         std::vector<double>(static_cast<std::size_t>(m), -1.0));
  auto band_ratio = [&](int ci, int cj) {
    double& slot = ratio[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)];
    if (slot < 0) {
      const CrossSection band = make_band(ci, cj);
      slot = choose_plane(cloud, band, candidate_planes).unchanged_ratio;
    }
    return slot;
  };

  // Exhaustive search over boundary placements. A boundary at position b
  // splits between occupied coords b-1 and b.
  std::vector<int> bounds_cur(static_cast<std::size_t>(n_parts - 1));
  for (int i = 0; i < n_parts - 1; ++i) bounds_cur[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> bounds_best;
  double best_score = -1.0;
  int best_spread = 0;

  auto evaluate = [&](const std::vector<int>& b) {
    double score = 0;
    int min_width = m, max_width = 0;
    int start = 0;
    for (std::size_t i = 0; i <= b.size(); ++i) {
      const int end = i < b.size() ? b[i] : m;  // exclusive
      score += band_ratio(start, end - 1);
      min_width = std::min(min_width, end - start);
      max_width = std::max(max_width, end - start);
      start = end;
    }
    const int spread = max_width - min_width;
    if (score > best_score || (score == best_score && spread < best_spread)) {
      best_score = score;
      best_spread = spread;
      bounds_best = b;
    }
    // equal score and spread: earlier lexicographic combination wins, and the
    // enumeration below visits combinations in lexicographic order
  };

  while (true) {
    evaluate(bounds_cur);
    int i = n_parts - 2;
    while (i >= 0 && bounds_cur[static_cast<std::size_t>(i)] == m - (n_parts - 1 - i)) --i;
    if (i < 0) break;
    ++bounds_cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_parts - 1; ++j)
      bounds_cur[static_cast<std::size_t>(j)] = bounds_cur[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::vector<CrossSection> bands;
  int start = 0;
  for (std::size_t i = 0; i <= bounds_best.size(); ++i) {
    const int end = i < bounds_best.size() ? bounds_best[i] : m;
    CrossSection band = make_band(start, end - 1);
    band.section_id = first_section_id + static_cast<std::int32_t>(i);
    Extents ex;
    const auto [u_axis, w_axis] = ortho_axes(split);
    for (std::uint32_t id : band.point_ids) {
      const Vec3i& p = cloud.points[id];
      ex.add(p[u_axis], p[w_axis]);
    }
    band.ellipse = ex.ellipse();
    bands.push_back(std::move(band));
    start = end;
  }
  return bands;
}

}  // namespace xpcc
