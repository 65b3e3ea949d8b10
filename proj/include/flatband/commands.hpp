#ifndef FLATBAND_COMMANDS_HPP
#define FLATBAND_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatband/graph_io.hpp"

namespace flatband::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitFlatBand = 10;
inline constexpr int kExitInconsistent = 11;

struct OutputOptions {
  bool json = false;
};

struct AnalyzeOptions {
  std::string file;
  std::uint64_t seed = 0;
  LabelMode labels = LabelMode::kAuto;
};

struct GenericOptions {
  std::string file;
  int trials = 5;
  std::uint64_t seed = 0;
};

struct PolytopeOptions {
  std::string file;
  int trials = 5;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  std::vector<int> dims{1, 2};
  int max_orbits = 4;
  int max_edges = 6;
  int count = 200;
  int trials = 5;
  std::uint64_t seed = 42;
};

struct BandsOptions {
  std::string file;
  int resolution = 16;
  double tol = 1e-8;
  double refute_tol = 1e-3;
  std::string out;
  std::uint64_t seed = 0;
  LabelMode labels = LabelMode::kAuto;
};

/// Each command writes its report to `out`, diagnostics to `err`, and
/// returns the process exit code.
int run_analyze(const AnalyzeOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err);
int run_generic(const GenericOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err);
int run_polytope(const PolytopeOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err);
int run_verify_theorem(const VerifyOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err);
int run_bands(const BandsOptions& opts, const OutputOptions& fmt, std::ostream& out, std::ostream& err);

/// Indented key/value rendering of a report, in insertion order.
void render_text(std::ostream& os, const nlohmann::ordered_json& report);

}  // namespace flatband::cli

#endif
