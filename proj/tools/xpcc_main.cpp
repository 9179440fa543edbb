// SPDX-License-Identifier: Apache-2.0

// xpcc command line: encode, decode, analyze, evaluate.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "svg_plot.hpp"
#include "xpcc/atlas.hpp"
#include "xpcc/cloud.hpp"
#include "xpcc/codec.hpp"
#include "xpcc/config.hpp"
#include "xpcc/error.hpp"
#include "xpcc/image_io.hpp"
#include "xpcc/metrics.hpp"
#include "xpcc/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace xpcc;

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("XPCC_LOG");
    if (env == nullptr || *env == '\0') return 0;
    const std::string value(env);
    if (value == "debug" || value == "2") return 2;
    if (value == "0" || value == "off" || value == "quiet") return 0;
    return 1;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "[xpcc] " << message << "\n";
}

void log_debug(const std::string& message) {
  if (log_level() >= 2) std::cerr << "[xpcc] " << message << "\n";
}

// path, directory (all *.ply inside), or glob pattern in one directory
std::vector<fs::path> expand_inputs(const std::string& spec) {
  std::vector<fs::path> files;
  const fs::path as_path(spec);
  if (fs::is_directory(as_path)) {
    for (const auto& entry : fs::directory_iterator(as_path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ply")
        files.push_back(entry.path());
    }
  } else if (spec.find('*') != std::string::npos || spec.find('?') != std::string::npos) {
    const fs::path parent = as_path.parent_path().empty() ? fs::path(".") : as_path.parent_path();
    const std::string pattern = as_path.filename().string();
    std::string rx;
    for (char c : pattern) {
      if (c == '*') rx += ".*";
      else if (c == '?') rx += '.';
      else if (std::string("\\^$.|+()[]{}").find(c) != std::string::npos) rx += std::string("\\") + c;
      else rx += c;
    }
    const std::regex matcher(rx);
    if (fs::is_directory(parent)) {
      for (const auto& entry : fs::directory_iterator(parent)) {
        if (entry.is_regular_file() &&
            std::regex_match(entry.path().filename().string(), matcher))
          files.push_back(entry.path());
      }
    }
  } else if (fs::is_regular_file(as_path)) {
    files.push_back(as_path);
  }
  std::sort(files.begin(), files.end());
  return files;
}

// file deletion on error paths
class Cleanup {
 public:
  void track(fs::path path) { paths_.push_back(std::move(path)); }
  void dismiss() { paths_.clear(); }
  ~Cleanup() {
    std::error_code ec;
    for (const fs::path& path : paths_) fs::remove(path, ec);
  }

 private:
  std::vector<fs::path> paths_;
};

// Shared CLI options layered over an optional config file; explicit flags
// override file values.
struct ConfigOptions {
  std::string config_path;
  std::optional<int> sections;
  bool auto_mode = false;
  std::optional<int> qstep_geom, qstep_attr, inter_period;
  std::optional<int> threads, bit_depth, atlas_width, alignment, dedup_radius;
  std::optional<int> overlap_width, surface_thickness;
  std::optional<double> ellipse_tolerance, frame_rate;
  std::string main_view;
  bool reuse_layout = false;

  void register_on(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "key=value config file");
    cmd.add_option("--sections", sections, "manual section count K");
    cmd.add_flag("--auto", auto_mode, "auto section growth (default)");
    cmd.add_option("--qstep-geom", qstep_geom, "geometry quantization step");
    cmd.add_option("--qstep-attr", qstep_attr, "attribute quantization step");
    cmd.add_option("--inter-period", inter_period, "intra frame period (1 = all-intra)");
    cmd.add_option("--threads", threads, "frame-level worker threads");
    cmd.add_flag("--reuse-layout", reuse_layout, "reuse previous frame atlas layout when dims match");
    cmd.add_option("--dedup-radius", dedup_radius, "decoder overlap dedup radius (-1 = auto)");
    cmd.add_option("--bit-depth", bit_depth, "geometry bit depth (default 10)");
    cmd.add_option("--atlas-width", atlas_width, "atlas width in pixels");
    cmd.add_option("--alignment", alignment, "atlas alignment in pixels");
    cmd.add_option("--overlap-width", overlap_width, "overlap rows per boundary side");
    cmd.add_option("--surface-thickness", surface_thickness, "layer-splitting depth gap");
    cmd.add_option("--ellipse-tolerance", ellipse_tolerance, "ellipse membership tolerance");
    cmd.add_option("--main-view", main_view, "main view axis (+x..-z)");
    cmd.add_option("--frame-rate", frame_rate, "sequence frame rate in Hz");
  }

  PipelineConfig resolve() const {
    PipelineConfig config;
    if (!config_path.empty()) config = load_config_file(config_path);
    if (sections) config.seg.target_sections = *sections;
    if (auto_mode) config.seg.target_sections.reset();
    if (qstep_geom) config.codec.geometry_qstep = *qstep_geom;
    if (qstep_attr) config.codec.attribute_qstep = *qstep_attr;
    if (inter_period) config.codec.inter_period = *inter_period;
    if (bit_depth) config.bit_depth = *bit_depth;
    if (atlas_width) config.atlas_width = *atlas_width;
    if (alignment) config.alignment = *alignment;
    if (dedup_radius) config.dedup_radius = *dedup_radius;
    if (overlap_width) config.seg.overlap_width = *overlap_width;
    if (surface_thickness) config.seg.surface_thickness = *surface_thickness;
    if (ellipse_tolerance) config.seg.ellipse_tolerance = *ellipse_tolerance;
    if (frame_rate) config.frame_rate = *frame_rate;
    if (reuse_layout) config.reuse_layout = true;
    if (!main_view.empty()) {
      const auto axis = parse_signed_axis(main_view);
      if (!axis) fail(Errc::invalid_argument, "bad --main-view '" + main_view + "'");
      config.seg.main_view = *axis;
    }
    return config;
  }

  int thread_count() const { return threads.value_or(1); }
};

Sequence load_sequence(const std::vector<fs::path>& files, int bit_depth, double frame_rate,
                       int threads) {
  Sequence sequence;
  sequence.frame_rate = frame_rate;
  sequence.frames.resize(files.size());
  parallel_for_index(files.size(), threads, [&](std::size_t i) {
    PlyLoadResult result = load_ply(files[i], bit_depth);
    if (result.duplicates_dropped > 0)
      log_info(files[i].string() + ": dropped " + std::to_string(result.duplicates_dropped) +
               " duplicate points");
    sequence.frames[i] = std::move(result.cloud);
  });
  return sequence;
}

// ---- encode ----

int cmd_encode(const std::string& input, const std::string& output,
               const ConfigOptions& options) {
  const auto files = expand_inputs(input);
  if (files.empty()) fail(Errc::io_failure, "no input files match '" + input + "'");
  const PipelineConfig config = options.resolve();
  log_info("encoding " + std::to_string(files.size()) + " frame(s)");

  const Sequence sequence = load_sequence(files, config.bit_depth, config.frame_rate, options.thread_count());
  const auto& frames = sequence.frames;
  const EncodeOutput encoded = encode_clouds(frames, config, options.thread_count());

  Cleanup cleanup;
  cleanup.track(output);
  write_stream_file(encoded.stream, output);
  cleanup.dismiss();

  const StreamSummary summary = inspect_stream(encoded.stream.bytes);
  for (std::size_t i = 0; i < encoded.frames.size(); ++i) {
    const FrameSummary& fr = encoded.frames[i];
    std::ostringstream line;
    line << "frame " << i << ": points=" << fr.points << " sections=" << fr.sections
         << " lost=" << fr.lost_points << " occupancy=" << std::fixed << std::setprecision(3)
         << fr.occupancy_ratio << " bytes=" << summary.frames[i].payload_bytes;
    std::cout << line.str() << "\n";
  }
  std::cout << "wrote " << encoded.stream.bytes.size() << " bytes (" << frames.size()
            << " frame(s)) to " << output << "\n";
  return 0;
}

// ---- decode ----

int cmd_decode(const std::string& stream_path, const std::string& output_dir,
               std::optional<int> dedup_radius) {
  const Bitstream stream = read_stream_file(stream_path);
  const auto clouds = decode_to_clouds(stream.bytes, dedup_radius.value_or(-1));
  fs::create_directories(output_dir);
  Cleanup cleanup;
  for (std::size_t i = 0; i < clouds.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%04zu.ply", i);
    const fs::path path = fs::path(output_dir) / name;
    cleanup.track(path);
    save_ply(clouds[i], path);
    std::cout << path.string() << ": " << clouds[i].size() << " points\n";
  }
  cleanup.dismiss();
  return 0;
}

// ---- analyze ----

json section_json(const CrossSection& section, const PlaneChoice& choice, const MapSet& map,
                  const LayerProfile& profile) {
  json out;
  out["section_id"] = section.section_id;
  out["axis"] = to_string(section.axis);
  out["slab"] = {section.slab_lo, section.slab_hi};
  out["ellipse"] = {{"center_u", section.ellipse.center_u},
                    {"center_w", section.ellipse.center_w},
                    {"a", section.ellipse.a},
                    {"b", section.ellipse.b}};
  out["overlap"] = {{"lo", section.overlap_lo}, {"hi", section.overlap_hi}};
  out["points"] = section.point_ids.size();
  out["plane"] = to_string(choice.plane);
  out["unchanged_ratio"] = choice.unchanged_ratio;
  out["lost"] = map.lost_ids.size();
  out["map"] = {{"width", map.desc.width}, {"height", map.desc.height}};
  json layers = json::array();
  for (std::int32_t slab = section.slab_lo; slab <= section.slab_hi; ++slab) {
    const std::int64_t index = slab - profile.first_slab;
    const int value =
        (index >= 0 && index < static_cast<std::int64_t>(profile.max_layers.size()))
            ? profile.max_layers[static_cast<std::size_t>(index)]
            : 0;
    layers.push_back(value);
  }
  out["layer_profile"] = std::move(layers);
  return out;
}

int cmd_analyze(const std::string& input, const std::string& output,
                const std::string& dump_dir, const ConfigOptions& options) {
  const auto files = expand_inputs(input);
  if (files.empty()) fail(Errc::io_failure, "no input files match '" + input + "'");
  const PipelineConfig config = options.resolve();
  const PointCloud cloud = load_ply(files.front(), config.bit_depth).cloud;
  if (cloud.empty()) fail(Errc::empty_cloud, "input cloud is empty");

  const FrameBuild build = build_frame_maps(cloud, config);
  const Atlas atlas = pack(build.maps, config.atlas_width, config.alignment);
  const Axis cut = build.sections.front().axis;
  const LayerProfile profile =
      layer_profile(cloud, cut, config.seg.main_view, config.seg.surface_thickness);
  const auto candidates = default_plane_candidates(config.seg.main_view);

  json out;
  out["input"] = files.front().string();
  out["points"] = cloud.size();
  out["bit_depth"] = cloud.bit_depth;
  out["cut_axis"] = to_string(cut);
  out["main_view"] = to_string(config.seg.main_view);
  out["sections"] = json::array();
  for (std::size_t i = 0; i < build.sections.size(); ++i) {
    json sec = section_json(build.sections[i], build.choices[i], build.maps[i], profile);
    json per_plane = json::array();
    for (SignedAxis candidate : candidates) {
      const MapSet trial = project_section(cloud, build.sections[i], candidate);
      per_plane.push_back(
          {{"plane", to_string(candidate)},
           {"unchanged_ratio", unchanged_ratio(trial, build.sections[i].point_ids.size())},
           {"lost", trial.lost_ids.size()}});
    }
    sec["planes"] = std::move(per_plane);
    out["sections"].push_back(std::move(sec));
  }
  out["atlas"] = {{"width", atlas.width},
                  {"height", atlas.height},
                  {"occupancy_ratio", atlas.area() > 0 ? occupancy_ratio(atlas) : 0.0}};
  json placements = json::array();
  for (const Placement& p : atlas.placements)
    placements.push_back(
        {{"section_id", p.section_id}, {"u", p.u}, {"v", p.v}, {"rotated", p.rotated}});
  out["atlas"]["placements"] = std::move(placements);

  if (!dump_dir.empty()) {
    fs::create_directories(dump_dir);
    for (const MapSet& map : build.maps) {
      const std::string stem = "section_" + std::to_string(map.desc.section_id);
      const fs::path base = fs::path(dump_dir);
      write_pgm(base / (stem + "_occupancy.pgm"), map.occupancy, map.desc.width, map.desc.height);
      write_pgm(base / (stem + "_d0.pgm"), map.d0, map.desc.width, map.desc.height);
      write_pgm(base / (stem + "_d1.pgm"), map.d1, map.desc.width, map.desc.height);
      write_ppm(base / (stem + "_a0.ppm"), map.a0, map.desc.width, map.desc.height);
      write_ppm(base / (stem + "_a1.ppm"), map.a1, map.desc.width, map.desc.height);
    }
    if (atlas.area() > 0) {
      const fs::path base = fs::path(dump_dir);
      write_pgm(base / "atlas_occupancy.pgm", atlas.occupancy, atlas.width, atlas.height);
      write_pgm(base / "atlas_d0.pgm", atlas.d0, atlas.width, atlas.height);
      write_pgm(base / "atlas_d1.pgm", atlas.d1, atlas.width, atlas.height);
      write_ppm(base / "atlas_a0.ppm", atlas.a0, atlas.width, atlas.height);
      write_ppm(base / "atlas_a1.ppm", atlas.a1, atlas.width, atlas.height);
    }
    log_info("map dumps written to " + dump_dir);
  }

  const std::string text = out.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output, std::ios::trunc);
    if (!file) fail(Errc::io_failure, "cannot open " + output + " for writing");
    file << text;
  }
  return 0;
}

// ---- evaluate ----

struct EvalRow {
  std::string sequence;
  std::size_t frame;
  int qstep;
  std::uint64_t geom_bits;
  std::uint64_t attr_bits;
  double d1_psnr;
  double color_psnr_avg;
  double temporal_mad_value;
  double occupancy;
};

void write_csv(const std::string& path, const std::vector<EvalRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot open " + path + " for writing");
  out << "sequence,frame,qstep,geom_bits,attr_bits,d1_psnr,color_psnr,temporal_mad,occupancy_ratio\n";
  out << std::fixed << std::setprecision(4);
  for (const EvalRow& row : rows) {
    out << row.sequence << "," << row.frame << "," << row.qstep << "," << row.geom_bits << ","
        << row.attr_bits << "," << row.d1_psnr << "," << row.color_psnr_avg << ","
        << row.temporal_mad_value << "," << row.occupancy << "\n";
  }
  if (!out) fail(Errc::io_failure, "write failed for " + path);
}

std::vector<EvalRow> evaluate_streams(const std::string& sequence,
                                      const std::vector<PointCloud>& originals,
                                      const Bitstream& stream, int qstep_label) {
  const StreamSummary summary = inspect_stream(stream.bytes);
  const DecodedSequence decoded = decode_sequence(stream.bytes);
  if (decoded.frames.size() != originals.size())
    fail(Errc::dim_mismatch, "frame count mismatch between originals and stream");

  const int radius =
      (decoded.params.geometry_qstep == 1 && decoded.params.attribute_qstep == 1) ? 0 : 1;
  std::vector<EvalRow> rows;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    const PointCloud rec = reconstruct_frame(decoded.frames[i], radius, decoded.bit_depth);
    EvalRow row;
    row.sequence = sequence;
    row.frame = i;
    row.qstep = qstep_label;
    const auto& chan = summary.frames[i].channel_bytes;
    row.geom_bits = 8 * (chan[0] + chan[1] + chan[2]);  // occupancy + d0 + d1
    row.attr_bits = 8 * (chan[3] + chan[4]);
    row.d1_psnr = geometry_psnr_d1(originals[i], rec);
    row.color_psnr_avg = color_psnr(originals[i], rec).average;
    const Atlas& atlas = decoded.frames[i].atlas;
    if (i > 0 && atlas.width == decoded.frames[i - 1].atlas.width &&
        atlas.height == decoded.frames[i - 1].atlas.height) {
      row.temporal_mad_value = temporal_mad(atlas.a0, decoded.frames[i - 1].atlas.a0);
    } else {
      row.temporal_mad_value = 0.0;
    }
    row.occupancy = atlas.area() > 0 ? occupancy_ratio(atlas) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

int cmd_evaluate(const std::string& originals_spec, const std::string& decoded_spec,
                 const std::string& stream_path, const std::string& ladder,
                 const std::string& csv_path, std::string svg_path,
                 const std::string& sequence_name, const ConfigOptions& options) {
  const auto original_files = expand_inputs(originals_spec);
  if (original_files.empty())
    fail(Errc::io_failure, "no original frames match '" + originals_spec + "'");
  const std::string sequence =
      sequence_name.empty() ? original_files.front().stem().string() : sequence_name;

  if (!ladder.empty()) {
    // ladder mode: encode/decode in memory per qstep, emit CSV + SVG curves
    const PipelineConfig base = options.resolve();
    const auto originals = load_sequence(original_files, base.bit_depth, base.frame_rate, options.thread_count()).frames;

    std::vector<int> qsteps;
    std::stringstream parts(ladder);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (!part.empty()) qsteps.push_back(std::stoi(part));
    }
    if (qsteps.empty()) fail(Errc::invalid_argument, "empty --ladder");

    std::vector<EvalRow> rows;
    RdCurve geometry_curve, color_curve;
    geometry_curve.label = "geometry";
    color_curve.label = "color";
    for (int q : qsteps) {
      PipelineConfig config = base;
      config.codec.geometry_qstep = q;
      config.codec.attribute_qstep = q;
      log_info("ladder qstep " + std::to_string(q));
      const EncodeOutput encoded = encode_clouds(originals, config, options.thread_count());
      auto q_rows = evaluate_streams(sequence, originals, encoded.stream, q);

      const StreamSummary summary = inspect_stream(encoded.stream.bytes);
      double geom_bits = 0, attr_bits = 0, d1_sum = 0, color_sum = 0;
      for (const EvalRow& row : q_rows) {
        geom_bits += static_cast<double>(row.geom_bits);
        attr_bits += static_cast<double>(row.attr_bits);
        d1_sum += row.d1_psnr;
        color_sum += row.color_psnr_avg;
      }
      const double n = static_cast<double>(q_rows.size());
      geometry_curve.points.push_back(
          RdPoint{geom_bits * base.frame_rate / n, d1_sum / n});
      color_curve.points.push_back(RdPoint{attr_bits * base.frame_rate / n, color_sum / n});
      log_debug("qstep " + std::to_string(q) + ": " +
                std::to_string(summary.total_bytes) + " bytes");
      rows.insert(rows.end(), q_rows.begin(), q_rows.end());
    }
    write_csv(csv_path, rows);

    // curves plot left to right in increasing rate
    auto sort_curve = [](RdCurve& curve) {
      std::sort(curve.points.begin(), curve.points.end(),
                [](const RdPoint& a, const RdPoint& b) { return a.rate < b.rate; });
    };
    sort_curve(geometry_curve);
    sort_curve(color_curve);
    if (svg_path.empty()) svg_path = fs::path(csv_path).replace_extension(".svg").string();
    tool::write_rd_svg(svg_path, {geometry_curve, color_curve});
    std::cout << "wrote " << csv_path << " and " << svg_path << "\n";
    return 0;
  }

  // compare mode: originals vs decoded frames plus the stream they came from
  if (decoded_spec.empty() || stream_path.empty())
    fail(Errc::invalid_argument, "compare mode needs --decoded and --stream (or use --ladder)");
  const Bitstream stream = read_stream_file(stream_path);
  const StreamSummary summary = inspect_stream(stream.bytes);
  const auto decoded_files = expand_inputs(decoded_spec);
  if (decoded_files.size() != original_files.size())
    fail(Errc::dim_mismatch, "original and decoded frame counts differ");

  const auto originals = load_sequence(original_files, summary.bit_depth, options.frame_rate.value_or(30.0), options.thread_count()).frames;
  const auto decoded = load_sequence(decoded_files, summary.bit_depth, options.frame_rate.value_or(30.0), options.thread_count()).frames;
  const DecodedSequence decoded_stream = decode_sequence(stream.bytes);
  if (decoded_stream.frames.size() != originals.size())
    fail(Errc::dim_mismatch, "stream frame count differs from originals");

  std::vector<EvalRow> rows;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    EvalRow row;
    row.sequence = sequence;
    row.frame = i;
    row.qstep = summary.params.geometry_qstep;
    const auto& chan = summary.frames[i].channel_bytes;
    row.geom_bits = 8 * (chan[0] + chan[1] + chan[2]);
    row.attr_bits = 8 * (chan[3] + chan[4]);
    row.d1_psnr = geometry_psnr_d1(originals[i], decoded[i]);
    row.color_psnr_avg = color_psnr(originals[i], decoded[i]).average;
    const Atlas& atlas = decoded_stream.frames[i].atlas;
    if (i > 0 && atlas.width == decoded_stream.frames[i - 1].atlas.width &&
        atlas.height == decoded_stream.frames[i - 1].atlas.height) {
      row.temporal_mad_value = temporal_mad(atlas.a0, decoded_stream.frames[i - 1].atlas.a0);
    } else {
      row.temporal_mad_value = 0.0;
    }
    row.occupancy = atlas.area() > 0 ? occupancy_ratio(atlas) : 0.0;
    rows.push_back(row);
  }
  write_csv(csv_path, rows);
  std::cout << "wrote " << csv_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xpcc - cross-sectional point cloud codec"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "encode PLY frames into a bitstream");
  std::string encode_input, encode_output;
  ConfigOptions encode_options;
  encode->add_option("input", encode_input, "PLY file, directory, or glob")->required();
  encode->add_option("-o,--output", encode_output, "output bitstream path")->required();
  encode_options.register_on(*encode);

  // decode
  auto* decode = app.add_subcommand("decode", "decode a bitstream to PLY frames");
  std::string decode_stream, decode_output;
  std::optional<int> decode_dedup;
  decode->add_option("stream", decode_stream, "bitstream path")->required();
  decode->add_option("-o,--output", decode_output, "output directory")->required();
  decode->add_option("--dedup-radius", decode_dedup, "overlap dedup radius (-1 = auto)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "segmentation and projection diagnostics");
  std::string analyze_input, analyze_output, analyze_dump;
  ConfigOptions analyze_options;
  analyze->add_option("input", analyze_input, "PLY file")->required();
  analyze->add_option("-o,--output", analyze_output, "JSON output path (default stdout)");
  analyze->add_option("--dump-maps", analyze_dump, "directory for PGM/PPM channel dumps");
  analyze_options.register_on(*analyze);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "metrics, CSV and RD plots");
  std::string eval_originals, eval_decoded, eval_stream, eval_ladder, eval_csv, eval_svg,
      eval_sequence;
  ConfigOptions eval_options;
  evaluate->add_option("originals", eval_originals, "original PLY frames (file/dir/glob)")
      ->required();
  evaluate->add_option("--decoded", eval_decoded, "decoded PLY frames (compare mode)");
  evaluate->add_option("--stream", eval_stream, "bitstream path (compare mode)");
  evaluate->add_option("--ladder", eval_ladder, "qstep ladder, e.g. 1,2,4,8,16");
  evaluate->add_option("--csv", eval_csv, "CSV output path")->required();
  evaluate->add_option("--svg", eval_svg, "SVG plot path (ladder mode)");
  evaluate->add_option("--sequence", eval_sequence, "sequence name for CSV rows");
  eval_options.register_on(*evaluate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) return cmd_encode(encode_input, encode_output, encode_options);
    if (decode->parsed()) return cmd_decode(decode_stream, decode_output, decode_dedup);
    if (analyze->parsed())
      return cmd_analyze(analyze_input, analyze_output, analyze_dump, analyze_options);
    if (evaluate->parsed())
      return cmd_evaluate(eval_originals, eval_decoded, eval_stream, eval_ladder, eval_csv,
                          eval_svg, eval_sequence, eval_options);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
