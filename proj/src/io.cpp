#include "hs/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/steiner.hpp"

#include "json.hpp"

namespace hs {

namespace {

using nlohmann::json;

const char* kind_name(BoundaryEntry::Kind kind) {
  switch (kind) {
    case BoundaryEntry::Kind::points: return "points";
    case BoundaryEntry::Kind::polygon: return "polygon";
    case BoundaryEntry::Kind::segment: return "segment";
  }
  return "points";
}

BoundaryEntry::Kind kind_from(const std::string& name) {
  if (name == "points") return BoundaryEntry::Kind::points;
  if (name == "polygon") return BoundaryEntry::Kind::polygon;
  if (name == "segment") return BoundaryEntry::Kind::segment;
  throw ParseError("unknown compact kind '" + name + "'");
}

std::vector<Point2> parse_coords(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) {
    throw ParseError(where + ": data must be a nonempty coordinate array");
  }
  std::vector<Point2> pts;
  pts.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw ParseError(where + ": coordinates must be [x, y] number pairs");
    }
    const Point2 p{item[0].get<double>(), item[1].get<double>()};
    if (!is_finite(p)) {
      throw ParseError(where + ": coordinates must be finite");
    }
    pts.push_back(p);
  }
  return pts;
}

void write_coords(std::ostringstream& out, const std::vector<Point2>& pts) {
  out << "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ", ";
    out << "[" << format_double(pts[i].x) << ", " << format_double(pts[i].y)
        << "]";
  }
  out << "]";
}

void write_vector(std::ostringstream& out, const DistanceVector& v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << format_double(v[i]);
  }
  out << "]";
}

void write_boundary_body(std::ostringstream& out, const BoundaryFile& file,
                         const std::string& indent) {
  out << "{\n" << indent << "  \"version\": " << file.version << ",\n"
      << indent << "  \"compacts\": [\n";
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    const BoundaryEntry& e = file.entries[i];
    out << indent << "    {\"name\": " << json(e.name).dump()
        << ", \"kind\": \"" << kind_name(e.kind) << "\", \"data\": ";
    write_coords(out, e.data);
    out << "}" << (i + 1 < file.entries.size() ? "," : "") << "\n";
  }
  out << indent << "  ]\n" << indent << "}";
}

BoundaryFile boundary_from_json(const json& j) {
  BoundaryFile file;
  if (!j.is_object()) throw ParseError("boundary: expected a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    throw ParseError("boundary: missing integer 'version'");
  }
  file.version = j["version"].get<int>();
  if (file.version != 1) {
    throw ParseError("boundary: unsupported version " +
                     std::to_string(file.version));
  }
  if (!j.contains("compacts") || !j["compacts"].is_array() ||
      j["compacts"].empty()) {
    throw ParseError("boundary: 'compacts' must be a nonempty array");
  }
  for (const auto& item : j["compacts"]) {
    BoundaryEntry entry;
    entry.name = item.value("name", "");
    if (!item.contains("kind") || !item["kind"].is_string()) {
      throw ParseError("boundary: compact without 'kind'");
    }
    entry.kind = kind_from(item["kind"].get<std::string>());
    entry.data = parse_coords(item.at("data"), "compact '" + entry.name + "'");
    if (entry.kind == BoundaryEntry::Kind::segment && entry.data.size() != 2) {
      throw ParseError("segment '" + entry.name + "' needs exactly 2 points");
    }
    if (entry.kind == BoundaryEntry::Kind::polygon && entry.data.size() < 3) {
      throw ParseError("polygon '" + entry.name +
                       "' needs at least 3 vertices (use kind 'segment')");
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

GridSpec grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_corner") || !j.contains("cell") ||
      !j.contains("nx") || !j.contains("ny")) {
    throw ParseError("grid: expected min_corner/cell/nx/ny");
  }
  const auto& mc = j["min_corner"];
  if (!mc.is_array() || mc.size() != 2) {
    throw ParseError("grid: min_corner must be [x, y]");
  }
  try {
    return GridSpec({mc[0].get<double>(), mc[1].get<double>()},
                    j["cell"].get<double>(), j["nx"].get<int>(),
                    j["ny"].get<int>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("grid: ") + e.what());
  }
}

RasterSummary summary_from_json(const json& j) {
  RasterSummary summary;
  summary.grid = grid_from_json(j.at("grid"));
  if (!j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("maximal_cells: missing 'rows'");
  }
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.size() != 3) {
      throw ParseError("maximal_cells: rows must be [iy, ix_first, ix_last]");
    }
    summary.rows.push_back(
        {row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  return summary;
}

void write_summary(std::ostringstream& out, const RasterSummary& s,
                   const std::string& indent) {
  out << "{\n" << indent << "  \"grid\": {\"min_corner\": ["
      << format_double(s.grid.min_corner.x) << ", "
      << format_double(s.grid.min_corner.y)
      << "], \"cell\": " << format_double(s.grid.cell)
      << ", \"nx\": " << s.grid.nx << ", \"ny\": " << s.grid.ny << "},\n"
      << indent << "  \"count\": " << s.count() << ",\n"
      << indent << "  \"rows\": [";
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (i) out << ", ";
    out << "[" << s.rows[i][0] << ", " << s.rows[i][1] << ", " << s.rows[i][2]
        << "]";
  }
  out << "]\n" << indent << "}";
}

DistanceVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(where + ": expected a nonempty number array");
  }
  DistanceVector v;
  for (const auto& item : j) {
    if (!item.is_number()) throw ParseError(where + ": entries must be numbers");
    v.push_back(item.get<double>());
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

BoundaryFile parse_boundary_file(const std::string& text) {
  return boundary_from_json(parse_json(text));
}

std::string serialize(const BoundaryFile& file) {
  std::ostringstream out;
  write_boundary_body(out, file, "");
  out << "\n";
  return out.str();
}

Boundary to_boundary(const BoundaryFile& file) {
  std::vector<Compact> members;
  members.reserve(file.entries.size());
  for (const BoundaryEntry& e : file.entries) {
    try {
      if (e.kind == BoundaryEntry::Kind::points) {
        members.push_back(Compact{FiniteCompact(e.data)});
      } else {
        members.push_back(Compact{Polygon(e.data)});
      }
    } catch (const std::invalid_argument& err) {
      throw ParseError("compact '" + e.name + "': " + err.what());
    }
  }
  return Boundary(std::move(members));
}

BoundaryEntry to_entry(const Compact& compact, const std::string& name) {
  BoundaryEntry entry;
  entry.name = name;
  if (const auto* f = compact.as_finite()) {
    entry.kind = BoundaryEntry::Kind::points;
    entry.data = f->points();
  } else if (const auto* p = compact.as_polygon()) {
    entry.kind = p->is_segment() ? BoundaryEntry::Kind::segment
                                 : BoundaryEntry::Kind::polygon;
    entry.data = p->vertices();
  } else {
    entry.kind = BoundaryEntry::Kind::points;
    entry.data = compact.as_raster()->occupied_centers();
  }
  return entry;
}

RasterSummary RasterSummary::from(const RasterCompact& raster) {
  RasterSummary summary;
  summary.grid = raster.grid;
  for (int iy = 0; iy < raster.grid.ny; ++iy) {
    int run_start = -1;
    for (int ix = 0; ix < raster.grid.nx; ++ix) {
      const bool on = raster.occupied(ix, iy);
      if (on && run_start < 0) run_start = ix;
      if (!on && run_start >= 0) {
        summary.rows.push_back({iy, run_start, ix - 1});
        run_start = -1;
      }
    }
    if (run_start >= 0) {
      summary.rows.push_back({iy, run_start, raster.grid.nx - 1});
    }
  }
  return summary;
}

RasterCompact RasterSummary::to_raster() const {
  std::vector<std::uint8_t> mask(grid.size(), 0);
  for (const auto& row : rows) {
    if (row[0] < 0 || row[0] >= grid.ny || row[1] < 0 || row[2] < row[1] ||
        row[2] >= grid.nx) {
      throw ParseError("maximal_cells: row run out of range");
    }
    for (int ix = row[1]; ix <= row[2]; ++ix) {
      mask[grid.index(ix, row[0])] = 1;
    }
  }
  try {
    return RasterCompact(grid, std::move(mask));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("maximal_cells: ") + e.what());
  }
}

std::size_t RasterSummary::count() const {
  std::size_t n = 0;
  for (const auto& row : rows) {
    n += static_cast<std::size_t>(row[2] - row[1] + 1);
  }
  return n;
}

ResultFile parse_result_file(const std::string& text) {
  const json j = parse_json(text);
  ResultFile file;
  try {
    file.version = j.at("version").get<int>();
    if (file.version != 1) {
      throw ParseError("result: unsupported version");
    }
    file.boundary = boundary_from_json(j.at("boundary"));
    file.grid = grid_from_json(j.at("grid"));
    const json& cfg = j.at("config");
    file.restarts = cfg.at("restarts").get<int>();
    file.max_iters = cfg.at("max_iters").get<int>();
    file.simplex_tol = cfg.at("simplex_tol").get<double>();
    file.seed = cfg.at("seed").get<std::uint64_t>();
    file.polish_steps = cfg.at("polish_steps").get<int>();
    const json& tols = j.at("tolerances");
    file.tol_grid = tols.at("tol_grid").get<double>();
    file.verify_tol = tols.at("verify_tol").get<double>();
    const json& best = j.at("best");
    file.S = best.at("S").get<double>();
    file.profile = vector_from_json(best.at("profile"), "best.profile");
    file.minimal_points = parse_coords(best.at("minimal_points"),
                                       "best.minimal_points");
    file.maximal = summary_from_json(best.at("maximal_cells"));
    for (const auto& cls : j.at("classes")) {
      ClassEntry entry;
      entry.S = cls.at("S").get<double>();
      entry.profile = vector_from_json(cls.at("profile"), "class profile");
      entry.maximal = summary_from_json(cls.at("maximal_cells"));
      file.classes.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("result: ") + e.what());
  }
  return file;
}

std::string serialize(const ResultFile& file) {
  std::ostringstream out;
  out << "{\n  \"version\": " << file.version << ",\n  \"boundary\": ";
  write_boundary_body(out, file.boundary, "  ");
  out << ",\n  \"grid\": {\"min_corner\": ["
      << format_double(file.grid.min_corner.x) << ", "
      << format_double(file.grid.min_corner.y)
      << "], \"cell\": " << format_double(file.grid.cell)
      << ", \"nx\": " << file.grid.nx << ", \"ny\": " << file.grid.ny << "},\n"
      << "  \"config\": {\"restarts\": " << file.restarts
      << ", \"max_iters\": " << file.max_iters
      << ", \"simplex_tol\": " << format_double(file.simplex_tol)
      << ", \"seed\": " << file.seed
      << ", \"polish_steps\": " << file.polish_steps << "},\n"
      << "  \"tolerances\": {\"tol_grid\": " << format_double(file.tol_grid)
      << ", \"verify_tol\": " << format_double(file.verify_tol) << "},\n"
      << "  \"best\": {\n    \"S\": " << format_double(file.S)
      << ",\n    \"profile\": ";
  write_vector(out, file.profile);
  out << ",\n    \"minimal_points\": ";
  write_coords(out, file.minimal_points);
  out << ",\n    \"maximal_cells\": ";
  write_summary(out, file.maximal, "    ");
  out << "\n  },\n  \"classes\": [\n";
  for (std::size_t i = 0; i < file.classes.size(); ++i) {
    const ClassEntry& cls = file.classes[i];
    out << "    {\"S\": " << format_double(cls.S) << ", \"profile\": ";
    write_vector(out, cls.profile);
    out << ", \"maximal_cells\": ";
    write_summary(out, cls.maximal, "    ");
    out << "}" << (i + 1 < file.classes.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void verify_result(const ResultFile& file) {
  std::vector<std::string> failures;

  auto check_sum = [&](const DistanceVector& profile, double S,
                       const std::string& what) {
    double sum = 0.0;
    for (double v : profile) sum += v;
    if (std::abs(sum - S) > 1e-12) {
      std::ostringstream msg;
      msg << what << ": S " << format_double(S) << " != profile sum "
          << format_double(sum);
      failures.push_back(msg.str());
    }
  };

  check_sum(file.profile, file.S, "best");
  for (std::size_t i = 0; i < file.classes.size(); ++i) {
    check_sum(file.classes[i].profile, file.classes[i].S,
              "class " + std::to_string(i));
  }

  try {
    const Boundary boundary =
        normalized(to_boundary(file.boundary), file.grid);
    const FiniteCompact k_min(file.minimal_points);
    const RasterCompact k_max = file.maximal.to_raster();
    const StructureReport report =
        verify_structure(Compact{k_min}, Compact{k_min}, Compact{k_max},
                         boundary, file.profile, file.verify_tol);
    if (!report.pass()) {
      failures.push_back("structure check failed:\n" + report.summary());
    }
    for (std::size_t i = 0; i < file.classes.size(); ++i) {
      const RasterCompact cls = file.classes[i].maximal.to_raster();
      if (!profile_check(boundary, file.classes[i].profile, Compact{cls},
                         file.verify_tol)) {
        failures.push_back("class " + std::to_string(i) +
                           ": maximal compact does not realize its profile");
      }
    }
  } catch (const Error& e) {
    failures.push_back(std::string("reconstruction failed: ") + e.what());
  } catch (const std::invalid_argument& e) {
    failures.push_back(std::string("reconstruction failed: ") + e.what());
  }

  if (!failures.empty()) {
    std::ostringstream msg;
    msg << "result verification failed:";
    for (const std::string& f : failures) msg << "\n  - " << f;
    throw ValidationError(msg.str());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace hs
