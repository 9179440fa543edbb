// SPDX-License-Identifier: Apache-2.0

// End-to-end smoke test of the xpcc binary: encode -> decode -> evaluate ->
// analyze on generated fixtures, no manual steps. The CLI path comes from
// the XPCC_CLI environment variable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "support/fixtures.hpp"
#include "xpcc/cloud.hpp"

namespace fs = std::filesystem;
using namespace xpcc;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++failures;
  }
}

int run(const std::string& command) {
  return std::system((command + " > /dev/null 2>&1").c_str());
}

}  // namespace

int main() {
  const char* cli = std::getenv("XPCC_CLI");
  if (cli == nullptr || *cli == '\0') {
    std::cerr << "XPCC_CLI is not set\n";
    return 1;
  }
  const std::string xpcc = std::string("'") + cli + "'";
  const fs::path dir = fs::temp_directory_path() / "xpcc_cli_smoke";
  fs::remove_all(dir);
  fs::create_directories(dir);

  for (int f = 0; f < 3; ++f) {
    PointCloud frame = test::make_stacked_cylinders(10.0, 28.0, 40);
    for (Vec3i& p : frame.points) p.x += 2 * f;
    char name[32];
    std::snprintf(name, sizeof(name), "orig_%04d.ply", f);
    save_ply(frame, dir / name);
  }

  const std::string stream = (dir / "seq.xpcc").string();
  const std::string decoded = (dir / "decoded").string();
  const std::string csv = (dir / "eval.csv").string();
  const std::string analysis = (dir / "analysis.json").string();

  check(run(xpcc + " encode '" + (dir / "orig_*.ply").string() + "' -o '" + stream +
            "' --inter-period 3") == 0,
        "encode");
  check(fs::exists(stream) && fs::file_size(stream) > 0, "stream written");

  check(run(xpcc + " decode '" + stream + "' -o '" + decoded + "'") == 0, "decode");
  for (int f = 0; f < 3; ++f) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%04d.ply", f);
    check(fs::exists(fs::path(decoded) / name), std::string("decoded ") + name);
  }

  // lossless round trip, frame by frame
  for (int f = 0; f < 3; ++f) {
    char in_name[32], out_name[32];
    std::snprintf(in_name, sizeof(in_name), "orig_%04d.ply", f);
    std::snprintf(out_name, sizeof(out_name), "frame_%04d.ply", f);
    const PointCloud original = load_ply(dir / in_name).cloud;
    const PointCloud roundtrip = load_ply(fs::path(decoded) / out_name).cloud;
    check(test::same_colored_set(original, roundtrip), "lossless frame content");
  }

  check(run(xpcc + " evaluate '" + (dir / "orig_*.ply").string() + "' --decoded '" +
            (fs::path(decoded) / "frame_*.ply").string() + "' --stream '" + stream +
            "' --csv '" + csv + "'") == 0,
        "evaluate");
  std::ifstream csv_in(csv);
  std::string line;
  int rows = 0;
  bool lossless_cap = true;
  while (std::getline(csv_in, line)) {
    if (rows > 0) lossless_cap &= line.find("999.99") != std::string::npos;
    ++rows;
  }
  check(rows == 4, "CSV has header plus one row per frame");
  check(lossless_cap, "lossless run reports the PSNR cap on every frame");

  // mismatched frame counts must fail
  check(run(xpcc + " evaluate '" + (dir / "orig_0000.ply").string() + "' --decoded '" +
            (fs::path(decoded) / "frame_*.ply").string() + "' --stream '" + stream +
            "' --csv '" + (dir / "bad.csv").string() + "'") != 0,
        "evaluate rejects mismatched frame counts");

  check(run(xpcc + " analyze '" + (dir / "orig_0000.ply").string() + "' -o '" + analysis +
            "'") == 0,
        "analyze");
  check(fs::exists(analysis) && fs::file_size(analysis) > 0, "analysis written");

  // error contracts: missing input exits 1 with no output file
  check(run(xpcc + " encode '" + (dir / "no_such.ply").string() + "' -o '" +
            (dir / "bad.xpcc").string() + "'") != 0,
        "encode of missing input fails");
  check(!fs::exists(dir / "bad.xpcc"), "no partial output on failure");

  std::ofstream(dir / "garbage.xpcc") << "not a stream";
  check(run(xpcc + " decode '" + (dir / "garbage.xpcc").string() + "' -o '" +
            (dir / "garbage_out").string() + "'") != 0,
        "decode of garbage fails");

  if (failures == 0) std::cout << "cli smoke: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
