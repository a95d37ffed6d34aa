#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "hs/errors.hpp"
#include "hs/io.hpp"
#include "hs/raster_ops.hpp"
#include "hs/solver.hpp"
#include "hs/steiner.hpp"
#include "hs/svg.hpp"
#include "hs/triangle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCoverage = 3;
constexpr int kExitNoSolution = 4;
constexpr int kExitValidation = 5;

hs::Compact load_single_compact(const std::string& path) {
  const hs::BoundaryFile file = hs::parse_boundary_file(hs::read_file(path));
  if (file.entries.size() != 1) {
    throw hs::ParseError(path + ": expected exactly one compact");
  }
  return hs::to_boundary(file)[0];
}

int run_dist(const std::string& path_a, const std::string& path_b, int grid_n) {
  const hs::Compact a = load_single_compact(path_a);
  const hs::Compact b = load_single_compact(path_b);

  if (a.as_finite() && b.as_finite()) {
    const double d = hs::hausdorff_distance(a, b);
    std::cout << "d_H = " << hs::format_double(d) << "\n"
              << "method = exact\n";
    return 0;
  }

  hs::Box2 box = hs::merge(a.bbox(), b.bbox());
  const double extent = std::max(box.width(), box.height());
  box = box.expanded(std::max(extent, 1e-9) * 0.05);
  const hs::GridSpec grid = hs::make_square_grid(box, grid_n);

  auto as_computable = [&](const hs::Compact& c) {
    if (c.as_polygon() != nullptr) return hs::Compact{hs::rasterize(c, grid)};
    return c;
  };
  const double d = hs::hausdorff_distance(as_computable(a), as_computable(b));
  std::cout << "d_H = " << hs::format_double(d) << "\n"
            << "method = raster\n"
            << "tol = " << hs::format_double(grid.tol()) << "\n";
  return 0;
}

struct SolveArgs {
  std::string boundary_path;
  int grid_n = 512;
  int restarts = 30;
  int max_iters = 400;
  std::uint64_t seed = 1;
  int polish_steps = 4000;
  std::string out_path;
  std::string svg_path;
};

int run_solve(const SolveArgs& args) {
  const hs::BoundaryFile boundary_file =
      hs::parse_boundary_file(hs::read_file(args.boundary_path));
  const hs::Boundary boundary = hs::to_boundary(boundary_file);

  const double diameter = hs::boundary_diameter(boundary);
  if (!(diameter > 0.0)) {
    throw hs::ParseError("boundary has zero extent; nothing to solve");
  }
  const hs::Box2 box = boundary.bbox().expanded(1.25 * diameter);
  hs::SolverConfig cfg;
  cfg.grid = hs::make_square_grid(box, args.grid_n);
  cfg.restarts = args.restarts;
  cfg.max_iters = args.max_iters;
  cfg.seed = args.seed;
  cfg.polish_steps = args.polish_steps;

  const hs::Boundary members = hs::normalized(boundary, cfg.grid);
  const hs::SolveResult run = hs::solve_dvector(members, cfg);
  const double tol = cfg.grid.tol();

  const hs::RasterCompact& maximal = *run.best.K.as_raster();
  hs::FiniteCompact minimal(maximal.occupied_centers());
  minimal = hs::minimal_prune(minimal, members, run.best.profile, 1.5 * tol);
  minimal =
      hs::polish_finite(minimal, members, cfg.polish_steps, cfg.grid.cell);

  const hs::ClassEnumeration classes =
      hs::cluster_classes(members, cfg, run, 2.0 * tol);

  hs::ResultFile result;
  result.boundary = boundary_file;
  result.grid = cfg.grid;
  result.restarts = cfg.restarts;
  result.max_iters = cfg.max_iters;
  result.simplex_tol = cfg.simplex_tol;
  result.seed = cfg.seed;
  result.polish_steps = cfg.polish_steps;
  result.tol_grid = tol;
  result.verify_tol = 2.0 * tol;
  result.S = run.best.value;
  result.profile = run.best.profile;
  result.minimal_points = minimal.points();
  result.maximal = hs::RasterSummary::from(maximal);
  for (const hs::SteinerSolution& cls : classes.classes) {
    hs::ClassEntry entry;
    entry.S = cls.value;
    entry.profile = cls.profile;
    entry.maximal = hs::RasterSummary::from(*cls.K.as_raster());
    result.classes.push_back(std::move(entry));
  }

  std::cout << "S = " << hs::format_double(result.S) << "\n";
  std::cout << "profile =";
  for (double v : result.profile) std::cout << " " << hs::format_double(v);
  std::cout << "\n";
  std::cout << "minimal points = " << result.minimal_points.size() << "\n";
  std::cout << "maximal cells = " << result.maximal.count() << "\n";
  std::cout << "classes = " << result.classes.size()
            << (classes.continuum_suspect ? " (continuum suspect)" : "")
            << "\n";
  std::cout << "tol_grid = " << hs::format_double(tol) << "\n";

  if (!args.out_path.empty()) {
    hs::write_file(args.out_path, hs::serialize(result));
    std::cout << "result written to " << args.out_path << "\n";
  }
  if (!args.svg_path.empty()) {
    hs::write_file(args.svg_path, hs::render_solution_svg(result));
    std::cout << "figure written to " << args.svg_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& path) {
  const hs::ResultFile result = hs::parse_result_file(hs::read_file(path));
  hs::verify_result(result);
  std::cout << "verification passed: profile sums and structure hold\n";
  return 0;
}

int run_example_triangle(int grid_n, bool check, int restarts,
                         std::uint64_t seed) {
  const hs::triangle::ClosedFormResult cf = hs::triangle::solve_t0();
  std::cout << "t0     = " << hs::format_double(cf.t0) << "\n"
            << "omega0 = " << hs::format_double(cf.omega0) << "\n"
            << "d3     = " << hs::format_double(cf.d3) << "\n"
            << "S      = " << hs::format_double(cf.S) << "\n"
            << "k_a    = (" << hs::format_double(cf.k_a.x) << ", "
            << hs::format_double(cf.k_a.y) << ")\n"
            << "k_b    = (" << hs::format_double(cf.k_b.x) << ", "
            << hs::format_double(cf.k_b.y) << ")\n";
  for (const hs::DistanceVector& cls : cf.classes) {
    std::cout << "class  =";
    for (double v : cls) std::cout << " " << hs::format_double(v);
    std::cout << "\n";
  }
  if (!check) return 0;

  hs::SolverConfig cfg;
  cfg.grid = hs::triangle::default_grid(grid_n);
  cfg.restarts = restarts;
  cfg.seed = seed;
  const hs::triangle::CrossValidationReport report =
      hs::triangle::cross_validate(cfg);
  std::cout << "cross-validation at " << grid_n << "x" << grid_n << ":\n"
            << report.summary();
  if (!report.pass()) {
    throw hs::ValidationError("cross-validation failed");
  }
  std::cout << "cross-validation passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("HS_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{
      "Hausdorff distances and Fermat-Steiner solves over planar compacts"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  int dist_grid = 512;
  CLI::App* dist = app.add_subcommand(
      "dist", "Hausdorff distance between two compacts from files");
  dist->add_option("fileA", path_a, "first compact file")->required();
  dist->add_option("fileB", path_b, "second compact file")->required();
  dist->add_option("--grid", dist_grid, "raster resolution for non-finite inputs")
      ->check(CLI::PositiveNumber);

  SolveArgs solve_args;
  CLI::App* solve =
      app.add_subcommand("solve", "Solve the Fermat-Steiner problem");
  solve->add_option("boundary", solve_args.boundary_path, "boundary file")
      ->required();
  solve->add_option("--grid", solve_args.grid_n, "grid resolution (default 512)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--restarts", solve_args.restarts, "multistart count")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-iters", solve_args.max_iters,
                    "simplex iterations per restart")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_args.seed, "RNG seed");
  solve->add_option("--polish-steps", solve_args.polish_steps,
                    "refinement budget for the minimal compact");
  solve->add_option("--out", solve_args.out_path, "write the result file here");
  solve->add_option("--svg", solve_args.svg_path, "write an SVG figure here");

  std::string verify_path;
  CLI::App* verify =
      app.add_subcommand("verify", "Re-check a result file from scratch");
  verify->add_option("result", verify_path, "result file")->required();

  CLI::App* example = app.add_subcommand("example", "Bundled worked examples");
  example->require_subcommand(1);
  int tri_grid = 512;
  int tri_restarts = 32;
  std::uint64_t tri_seed = 1;
  bool tri_check = false;
  CLI::App* tri = example->add_subcommand(
      "triangle", "Symmetric two-point boundary with three solution classes");
  tri->add_option("--grid", tri_grid, "grid resolution for --check")
      ->check(CLI::PositiveNumber);
  tri->add_option("--restarts", tri_restarts, "multistart count for --check")
      ->check(CLI::PositiveNumber);
  tri->add_option("--seed", tri_seed, "RNG seed for --check");
  tri->add_flag("--check", tri_check,
                "cross-validate the generic solver against the closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (dist->parsed()) return run_dist(path_a, path_b, dist_grid);
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_path);
    if (example->parsed() && tri->parsed()) {
      return run_example_triangle(tri_grid, tri_check, tri_restarts, tri_seed);
    }
  } catch (const hs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hs::CoverageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCoverage;
  } catch (const hs::NoSolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const hs::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
