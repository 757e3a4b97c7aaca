#pragma once

// File formats written and read by the command-line tool.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "varregion/region_core.hpp"
#include "varregion/verify.hpp"

namespace varregion {

/// Shortest-round-trip-safe text for a double: 17 significant digits,
/// '.' separator, independent of the global locale.
std::string format_number(double x, int significant = 17);

/// Parses "re,im" or a bare real. Throws std::invalid_argument.
cplx parse_complex(const std::string& text);

/// Raised when a file cannot be written or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// Resolves a relative output path against OVERRIDE_OUT_DIR when that is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

/// Everything needed to reproduce and render one region.
struct RegionRecord {
  JanowskiParams params;
  EvalPoint point;
  Disk disk;               // in the canonical frame (lambda rotated onto [0, 1))
  bool singleton = false;  // |lambda| = 1 or z0 = 0
  BoundaryCurve boundary;  // one sample when singleton
};

/// Computes the record; complex lambda is handled through canonical_frame.
RegionRecord compute_region(const JanowskiParams& params, const EvalPoint& point, int theta_samples);

nlohmann::ordered_json to_json(const RegionRecord& record);
/// Throws std::invalid_argument on schema violations.
RegionRecord region_from_json(const nlohmann::json& j);

std::string region_csv(const RegionRecord& record);

struct CloudPoint {
  cplx value;
  Verdict verdict;
};

/// Fixed 800x800 SVG: real axis rightward, imaginary axis upward, 5% margin.
std::string region_svg(const RegionRecord& record, const std::vector<CloudPoint>& cloud = {});

nlohmann::ordered_json to_json(const VerificationReport& report);

/// One block of a sweep grid file.
struct GridBlock {
  std::size_t first_line = 0;
  std::map<std::string, double> values;

  /// Canonical "key=value" text, sorted by key; the hash input.
  std::string canonical() const;
};

class GridParseError : public std::runtime_error {
 public:
  GridParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// key=value lines, blocks separated by blank lines, '#' comments.
/// Keys: A, B, lambda_re, lambda_im, z0_re, z0_im.
std::vector<GridBlock> parse_grid(const std::string& text);

/// FNV-1a 64-bit, rendered as 16 lowercase hex digits.
std::string stable_hash(const std::string& text);

}  // namespace varregion
