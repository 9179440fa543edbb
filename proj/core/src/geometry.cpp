// SPDX-License-Identifier: Apache-2.0
#include "xpcc/geometry.hpp"

namespace xpcc {

std::string to_string(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    default: return "z";
  }
}

std::string to_string(SignedAxis s) {
  return (sign_of(s) > 0 ? "+" : "-") + to_string(axis_of(s));
}

std::optional<Axis> parse_axis(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'x': case 'X': return Axis::x;
    case 'y': case 'Y': return Axis::y;
    case 'z': case 'Z': return Axis::z;
    default: return std::nullopt;
  }
}

std::optional<SignedAxis> parse_signed_axis(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    sign = text[0] == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  auto axis = parse_axis(text);
  if (!axis) return std::nullopt;
  return make_signed_axis(*axis, sign);
}

}  // namespace xpcc
