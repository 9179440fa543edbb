// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace xpcc {

// Every failure the library can raise, one code per named error condition.
enum class Errc {
  io_failure,
  malformed_header,
  missing_property,
  unsupported_format,
  value_out_of_range,
  empty_cloud,
  empty_slab,
  empty_section,
  invalid_k,
  too_many_parts,
  invalid_argument,
  map_too_wide,
  zero_area,
  inconsistent_metadata,
  inconsistent_maps,
  corrupt_runs,
  bad_magic,
  crc_mismatch,
  truncated_payload,
  trailing_data,
  dim_mismatch,
  insufficient_points,
  no_overlap,
  invalid_curve,
};

const char* errc_name(Errc code);

class Error final : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::io_failure: return "IoFailure";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::missing_property: return "MissingProperty";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::empty_cloud: return "EmptyCloud";
    case Errc::empty_slab: return "EmptySlab";
    case Errc::empty_section: return "EmptySection";
    case Errc::invalid_k: return "InvalidK";
    case Errc::too_many_parts: return "TooManyParts";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::map_too_wide: return "MapTooWide";
    case Errc::zero_area: return "ZeroArea";
    case Errc::inconsistent_metadata: return "InconsistentMetadata";
    case Errc::inconsistent_maps: return "InconsistentMaps";
    case Errc::corrupt_runs: return "CorruptRuns";
    case Errc::bad_magic: return "BadMagic";
    case Errc::crc_mismatch: return "CrcMismatch";
    case Errc::truncated_payload: return "TruncatedPayload";
    case Errc::trailing_data: return "TrailingData";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::insufficient_points: return "InsufficientPoints";
    case Errc::no_overlap: return "NoOverlap";
    case Errc::invalid_curve: return "InvalidCurve";
  }
  return "UnknownError";
}

}  // namespace xpcc
