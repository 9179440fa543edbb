// SPDX-License-Identifier: Apache-2.0
#include "xpcc/cloud.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "xpcc/error.hpp"

namespace xpcc {

Aabb bounds(const PointCloud& cloud) {
  if (cloud.empty()) fail(Errc::empty_cloud, "bounds of empty cloud");
  Aabb box{cloud.points.front(), cloud.points.front()};
  for (const Vec3i& p : cloud.points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.min.z = std::min(box.min.z, p.z);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
    box.max.z = std::max(box.max.z, p.z);
  }
  return box;
}

namespace {

enum class PlyType { i8, u8, i16, u16, i32, u32, f32, f64 };

std::size_t type_size(PlyType t) {
  switch (t) {
    case PlyType::i8:
    case PlyType::u8: return 1;
    case PlyType::i16:
    case PlyType::u16: return 2;
    case PlyType::i32:
    case PlyType::u32:
    case PlyType::f32: return 4;
    case PlyType::f64: return 8;
  }
  return 0;
}

std::optional<PlyType> parse_type(const std::string& name) {
  if (name == "char" || name == "int8") return PlyType::i8;
  if (name == "uchar" || name == "uint8") return PlyType::u8;
  if (name == "short" || name == "int16") return PlyType::i16;
  if (name == "ushort" || name == "uint16") return PlyType::u16;
  if (name == "int" || name == "int32") return PlyType::i32;
  if (name == "uint" || name == "uint32") return PlyType::u32;
  if (name == "float" || name == "float32") return PlyType::f32;
  if (name == "double" || name == "float64") return PlyType::f64;
  return std::nullopt;
}

struct PlyProperty {
  std::string name;
  PlyType type = PlyType::f32;
  std::size_t offset = 0;  // byte offset within a binary vertex record
};

struct PlyHeader {
  bool binary = false;
  std::uint64_t vertex_count = 0;
  std::vector<PlyProperty> vertex_properties;
  std::size_t vertex_stride = 0;
};

// Parses up to end_header. Only the vertex element is consumed by the body
// reader, so the vertex element must be the first element with data.
PlyHeader parse_header(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) fail(Errc::malformed_header, path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "ply") fail(Errc::malformed_header, path + ": missing ply signature");

  PlyHeader header;
  bool format_seen = false;
  bool in_vertex_element = false;
  bool vertex_seen = false;
  bool other_element_before_vertex = false;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string token;
    ls >> token;
    if (token.empty() || token == "comment" || token == "obj_info") continue;
    if (token == "end_header") {
      if (!format_seen) fail(Errc::malformed_header, path + ": missing format line");
      if (!vertex_seen) fail(Errc::missing_property, path + ": no vertex element");
      return header;
    }
    if (token == "format") {
      std::string encoding;
      ls >> encoding;
      if (encoding == "ascii") {
        header.binary = false;
      } else if (encoding == "binary_little_endian") {
        header.binary = true;
      } else if (encoding == "binary_big_endian") {
        fail(Errc::unsupported_format, path + ": big-endian PLY not supported");
      } else {
        fail(Errc::malformed_header, path + ": unknown format '" + encoding + "'");
      }
      format_seen = true;
    } else if (token == "element") {
      std::string name;
      std::uint64_t count = 0;
      ls >> name >> count;
      if (!ls) fail(Errc::malformed_header, path + ": bad element line");
      if (name == "vertex") {
        if (vertex_seen) fail(Errc::malformed_header, path + ": duplicate vertex element");
        if (other_element_before_vertex)
          fail(Errc::malformed_header, path + ": vertex element must come first");
        header.vertex_count = count;
        in_vertex_element = true;
        vertex_seen = true;
      } else {
        in_vertex_element = false;
        if (!vertex_seen) other_element_before_vertex = true;
      }
    } else if (token == "property") {
      if (!in_vertex_element) continue;  // trailing elements are never read
      std::string type_name;
      ls >> type_name;
      if (type_name == "list")
        fail(Errc::malformed_header, path + ": list property in vertex element");
      auto type = parse_type(type_name);
      std::string prop_name;
      ls >> prop_name;
      if (!type || prop_name.empty())
        fail(Errc::malformed_header, path + ": bad property line '" + line + "'");
      PlyProperty prop;
      prop.name = prop_name;
      prop.type = *type;
      prop.offset = header.vertex_stride;
      header.vertex_stride += type_size(*type);
      header.vertex_properties.push_back(std::move(prop));
    } else {
      fail(Errc::malformed_header, path + ": unexpected token '" + token + "'");
    }
  }
  fail(Errc::malformed_header, path + ": end_header not found");
}

double read_binary_scalar(const unsigned char* p, PlyType t) {
  switch (t) {
    case PlyType::i8: return static_cast<double>(static_cast<std::int8_t>(p[0]));
    case PlyType::u8: return static_cast<double>(p[0]);
    case PlyType::i16: {
      std::int16_t v;
      std::memcpy(&v, p, 2);
      return v;
    }
    case PlyType::u16: {
      std::uint16_t v;
      std::memcpy(&v, p, 2);
      return v;
    }
    case PlyType::i32: {
      std::int32_t v;
      std::memcpy(&v, p, 4);
      return v;
    }
    case PlyType::u32: {
      std::uint32_t v;
      std::memcpy(&v, p, 4);
      return v;
    }
    case PlyType::f32: {
      float v;
      std::memcpy(&v, p, 4);
      return v;
    }
    case PlyType::f64: {
      double v;
      std::memcpy(&v, p, 8);
      return v;
    }
  }
  return 0;
}

std::int32_t round_coordinate(double v, std::int32_t limit, const std::string& path) {
  if (!std::isfinite(v)) fail(Errc::value_out_of_range, path + ": non-finite coordinate");
  // half away from zero
  const double rounded = v < 0 ? std::ceil(v - 0.5) : std::floor(v + 0.5);
  if (rounded < 0 || rounded > static_cast<double>(limit))
    fail(Errc::value_out_of_range,
         path + ": coordinate " + std::to_string(rounded) + " outside [0, " +
             std::to_string(limit) + "]; raise bit_depth?");
  return static_cast<std::int32_t>(rounded);
}

std::uint8_t to_color_byte(double v, const std::string& path) {
  if (v < 0 || v > 255) fail(Errc::value_out_of_range, path + ": color outside [0, 255]");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

PlyLoadResult load_ply(const std::filesystem::path& path, int bit_depth) {
  if (bit_depth < 1 || bit_depth > 16)
    fail(Errc::invalid_argument, "bit_depth must be in [1, 16]");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_failure, "cannot open " + path.string());
  const std::string name = path.string();

  PlyHeader header = parse_header(in, name);

  int prop_index[6] = {-1, -1, -1, -1, -1, -1};  // x y z red green blue
  static const char* wanted[6] = {"x", "y", "z", "red", "green", "blue"};
  for (std::size_t i = 0; i < header.vertex_properties.size(); ++i) {
    for (int k = 0; k < 6; ++k) {
      if (header.vertex_properties[i].name == wanted[k] && prop_index[k] < 0)
        prop_index[k] = static_cast<int>(i);
    }
  }
  for (int k = 0; k < 6; ++k) {
    if (prop_index[k] < 0)
      fail(Errc::missing_property, name + ": vertex property '" + wanted[k] + "' missing");
  }

  PointCloud cloud;
  cloud.bit_depth = bit_depth;
  cloud.points.reserve(header.vertex_count);
  cloud.colors.reserve(header.vertex_count);
  const std::int32_t limit = cloud.coord_limit();

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(header.vertex_count * 2);
  std::uint64_t dropped = 0;

  auto push_vertex = [&](const double* values) {
    Vec3i p{round_coordinate(values[0], limit, name), round_coordinate(values[1], limit, name),
            round_coordinate(values[2], limit, name)};
    if (!seen.insert(voxel_key(p)).second) {
      ++dropped;
      return;
    }
    cloud.points.push_back(p);
    cloud.colors.push_back(
        Rgb{to_color_byte(values[3], name), to_color_byte(values[4], name),
            to_color_byte(values[5], name)});
  };

  if (header.binary) {
    std::vector<unsigned char> record(header.vertex_stride);
    double values[6];
    for (std::uint64_t i = 0; i < header.vertex_count; ++i) {
      in.read(reinterpret_cast<char*>(record.data()), static_cast<std::streamsize>(record.size()));
      if (!in) fail(Errc::io_failure, name + ": bad or truncated vertex data");
      for (int k = 0; k < 6; ++k) {
        const PlyProperty& prop = header.vertex_properties[static_cast<std::size_t>(prop_index[k])];
        values[k] = read_binary_scalar(record.data() + prop.offset, prop.type);
      }
      push_vertex(values);
    }
  } else {
    const std::size_t n_props = header.vertex_properties.size();
    std::vector<double> record(n_props);
    double values[6];
    for (std::uint64_t i = 0; i < header.vertex_count; ++i) {
      for (std::size_t j = 0; j < n_props; ++j) {
        if (!(in >> record[j])) fail(Errc::io_failure, name + ": bad or truncated vertex data");
      }
      for (int k = 0; k < 6; ++k) values[k] = record[static_cast<std::size_t>(prop_index[k])];
      push_vertex(values);
    }
  }

  return PlyLoadResult{std::move(cloud), dropped};
}

void save_ply(const PointCloud& cloud, const std::filesystem::path& path) {
  if (cloud.colors.size() != cloud.points.size())
    fail(Errc::invalid_argument, "colors/points length mismatch");
  const std::int32_t limit = cloud.coord_limit();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");

  out << "ply\n"
      << "format binary_little_endian 1.0\n"
      << "element vertex " << cloud.points.size() << "\n"
      << "property float x\n"
      << "property float y\n"
      << "property float z\n"
      << "property uchar red\n"
      << "property uchar green\n"
      << "property uchar blue\n"
      << "end_header\n";

  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Vec3i& p = cloud.points[i];
    if (p.x < 0 || p.x > limit || p.y < 0 || p.y > limit || p.z < 0 || p.z > limit)
      fail(Errc::value_out_of_range, "point coordinate outside bit_depth range");
    const float xyz[3] = {static_cast<float>(p.x), static_cast<float>(p.y),
                          static_cast<float>(p.z)};
    out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
    const Rgb& c = cloud.colors[i];
    const unsigned char rgb[3] = {c.r, c.g, c.b};
    out.write(reinterpret_cast<const char*>(rgb), sizeof(rgb));
  }
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace xpcc
