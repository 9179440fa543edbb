// SPDX-License-Identifier: Apache-2.0
#include "xpcc/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "xpcc/error.hpp"

namespace xpcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view value, const std::string& key) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    fail(Errc::invalid_argument, "config key '" + key + "': bad integer '" + std::string(value) + "'");
  return out;
}

double parse_double(std::string_view value, const std::string& key) {
  try {
    std::size_t consumed = 0;
    const double out = std::stod(std::string(value), &consumed);
    if (consumed != value.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "config key '" + key + "': bad number '" + std::string(value) + "'");
  }
}

bool parse_bool(std::string_view value, const std::string& key) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  fail(Errc::invalid_argument, "config key '" + key + "': bad boolean '" + std::string(value) + "'");
}

}  // namespace

PipelineConfig parse_config_text(std::string_view text) {
  PipelineConfig config;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
    std::string_view line = trim(text.substr(line_start, line_end - line_start));
    line_start = line_end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(Errc::invalid_argument, "config line without '=': '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "sections") {
      config.seg.target_sections = parse_int(value, key);
    } else if (key == "auto") {
      if (parse_bool(value, key)) config.seg.target_sections.reset();
    } else if (key == "ellipse_tolerance") {
      config.seg.ellipse_tolerance = parse_double(value, key);
    } else if (key == "overlap_width") {
      config.seg.overlap_width = parse_int(value, key);
    } else if (key == "surface_thickness") {
      config.seg.surface_thickness = parse_int(value, key);
    } else if (key == "main_view") {
      const auto axis = parse_signed_axis(value);
      if (!axis) fail(Errc::invalid_argument, "config key 'main_view': bad axis '" + std::string(value) + "'");
      config.seg.main_view = *axis;
    } else if (key == "geometry_qstep") {
      config.codec.geometry_qstep = parse_int(value, key);
    } else if (key == "attribute_qstep") {
      config.codec.attribute_qstep = parse_int(value, key);
    } else if (key == "inter_period") {
      config.codec.inter_period = parse_int(value, key);
    } else if (key == "compressor_level") {
      config.codec.compressor_level = parse_int(value, key);
    } else if (key == "atlas_width") {
      config.atlas_width = parse_int(value, key);
    } else if (key == "alignment") {
      config.alignment = parse_int(value, key);
    } else if (key == "bit_depth") {
      config.bit_depth = parse_int(value, key);
    } else if (key == "frame_rate") {
      config.frame_rate = parse_double(value, key);
    } else if (key == "dedup_radius") {
      config.dedup_radius = parse_int(value, key);
    } else if (key == "reuse_layout") {
      config.reuse_layout = parse_bool(value, key);
    } else {
      fail(Errc::invalid_argument, "unknown config key '" + key + "'");
    }
  }
  return config;
}

PipelineConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_failure, "cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::string to_config_text(const PipelineConfig& config) {
  std::ostringstream out;
  if (config.seg.target_sections) {
    out << "sections=" << *config.seg.target_sections << "\n";
  } else {
    out << "auto=true\n";
  }
  out << "ellipse_tolerance=" << config.seg.ellipse_tolerance << "\n"
      << "overlap_width=" << config.seg.overlap_width << "\n"
      << "surface_thickness=" << config.seg.surface_thickness << "\n"
      << "main_view=" << to_string(config.seg.main_view) << "\n"
      << "geometry_qstep=" << config.codec.geometry_qstep << "\n"
      << "attribute_qstep=" << config.codec.attribute_qstep << "\n"
      << "inter_period=" << config.codec.inter_period << "\n"
      << "compressor_level=" << config.codec.compressor_level << "\n"
      << "atlas_width=" << config.atlas_width << "\n"
      << "alignment=" << config.alignment << "\n"
      << "bit_depth=" << config.bit_depth << "\n"
      << "frame_rate=" << config.frame_rate << "\n"
      << "dedup_radius=" << config.dedup_radius << "\n"
      << "reuse_layout=" << (config.reuse_layout ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace xpcc
