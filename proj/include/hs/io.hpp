#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hs/boundary.hpp"
#include "hs/solver.hpp"

namespace hs {

// One named compact in a boundary file.
struct BoundaryEntry {
  enum class Kind { points, polygon, segment };
  std::string name;
  Kind kind = Kind::points;
  std::vector<Point2> data;
};

struct BoundaryFile {
  int version = 1;
  std::vector<BoundaryEntry> entries;
};

BoundaryFile parse_boundary_file(const std::string& text);
std::string serialize(const BoundaryFile& file);
Boundary to_boundary(const BoundaryFile& file);
BoundaryEntry to_entry(const Compact& compact, const std::string& name);

// Row-run summary of a raster mask; reconstructs the mask exactly.
struct RasterSummary {
  GridSpec grid;
  std::vector<std::array<int, 3>> rows;  // (iy, ix_first, ix_last)

  static RasterSummary from(const RasterCompact& raster);
  RasterCompact to_raster() const;
  std::size_t count() const;
};

struct ClassEntry {
  double S = 0.0;
  DistanceVector profile;
  RasterSummary maximal;
};

struct ResultFile {
  int version = 1;
  BoundaryFile boundary;
  GridSpec grid;
  int restarts = 0;
  int max_iters = 0;
  double simplex_tol = 0.0;
  std::uint64_t seed = 0;
  int polish_steps = 0;
  double tol_grid = 0.0;
  double verify_tol = 0.0;
  double S = 0.0;
  DistanceVector profile;
  std::vector<Point2> minimal_points;
  RasterSummary maximal;
  std::vector<ClassEntry> classes;
};

ResultFile parse_result_file(const std::string& text);
std::string serialize(const ResultFile& file);

// Re-derives everything checkable from the file alone: profile sums, the
// minimal-in-maximal sandwich, and the profile checks at the recorded
// tolerance. Throws ValidationError listing the failed clauses.
void verify_result(const ResultFile& file);

// 17 significant digits; round-trips exactly through parsing.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hs
