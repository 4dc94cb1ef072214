// polybn: exact lattice-polygon toolkit for Newton polygons.
//
// Subcommands:
//   analyze    invariants and an admissibility verdict for one polygon
//   enumerate  equivalence classes by lattice-point or interior count
//   classify   the full classification as report.json + figures.svg
//   selftest   the acceptance suite (prints one line per criterion)

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "polybn/brill_noether.hpp"
#include "polybn/classify.hpp"
#include "polybn/core.hpp"
#include "polybn/enumerate.hpp"
#include "polybn/laurent.hpp"
#include "polybn/polyio.hpp"
#include "polybn/report.hpp"
#include "polybn/selftest.hpp"
#include "polybn/svg.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polybn;

struct AnalyzeArgs {
  std::string laurent;
  std::string polygon;
  bool pretty = false;
};

int run_analyze(const AnalyzeArgs& args) {
  const bool from_laurent = !args.laurent.empty();
  const std::string& text = from_laurent ? args.laurent : args.polygon;
  const Polygon p = from_laurent ? newton_polygon(parse_laurent(text))
                                 : parse_polygon(text);
  if (p.dim() != 2)
    throw degenerate_error("analysis requires a two-dimensional polygon");

  const auto cert = p.lattice_width_certificate();
  const auto dir = *cert.direction();
  const Int genus = p.count_interior_lattice_points();
  const Int cap = gonality_cap_from_width(p);
  const Int simplex = p.standard_simplex_multiple();
  const std::string verdict = analysis_verdict(p);

  if (args.pretty) {
    std::cout << "newton polygon:   " << polygon_text(p) << "\n"
              << "lattice points:   " << p.count_lattice_points() << " ("
              << genus << " interior)\n"
              << "interior polygon: " << polygon_text(p.interior_polygon())
              << "\n"
              << "lattice width:    " << cert.width << " along (" << dir.a
              << ", " << dir.b << ")\n"
              << "genus if smooth:  " << genus << "\n"
              << "gonality cap:     " << cap << "\n";
    if (simplex >= 1) std::cout << "simplex multiple: " << simplex << "\n";
    if (genus >= 3)
      std::cout << "theorem bound:    " << gonality_bound_theorem(genus)
                << "\n";
    std::cout << "verdict:          " << verdict << "\n";
    return 0;
  }

  ordered_json report;
  report["input"] = {{"kind", from_laurent ? "laurent" : "polygon"},
                     {"text", text}};
  report["newton_polygon"] = vertices_json(p);
  report["n_points"] = p.count_lattice_points();
  report["n_interior"] = genus;
  report["interior_polygon"] = vertices_json(p.interior_polygon());
  report["lattice_width"] = cert.width;
  report["width_direction"] = {dir.a, dir.b};
  report["genus_if_smooth"] = genus;
  report["gonality_cap"] = cap;
  report["simplex_multiple"] =
      simplex >= 1 ? ordered_json(simplex) : ordered_json(nullptr);
  report["theorem_bound"] = genus >= 3 ? ordered_json(gonality_bound_theorem(genus))
                                       : ordered_json(nullptr);
  report["verdict"] = verdict;
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct EnumerateArgs {
  Int interior = -1;
  Int points = -1;
  Int limit = -1;
  unsigned threads = 0;
};

int run_enumerate(const EnumerateArgs& args) {
  const bool by_interior = args.interior >= 0;
  const auto classes = by_interior
                           ? enumerate_by_interior_points(args.interior, args.threads)
                           : enumerate_by_lattice_points(args.points, args.threads);
  Int emitted = 0;
  for (const auto& c : classes) {
    if (args.limit >= 0 && emitted >= args.limit) break;
    ordered_json line;
    line["vertices"] = vertices_json(c.representative);
    line["n_points"] = c.n_points;
    line["n_interior"] = c.n_interior;
    line["lw"] = c.lw;
    std::cout << line.dump() << "\n";
    ++emitted;
  }
  return 0;
}

struct ClassifyArgs {
  std::string out = ".";
  Int max_genus = 6;
  unsigned threads = 0;
};

int run_classify(const ClassifyArgs& args) {
  namespace fs = std::filesystem;
  const fs::path dir = args.out;
  fs::create_directories(dir);

  const std::string report = full_report(args.threads, args.max_genus).dump(2) + "\n";
  const std::string sheet = render_classification_sheet(args.threads, args.max_genus);

  const auto write_file = [](const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.flush();
    if (!out.good())
      throw std::ios_base::failure("cannot write " + path.string());
  };
  write_file(dir / "report.json", report);
  write_file(dir / "figures.svg", sheet);
  std::cerr << "wrote " << (dir / "report.json").string() << " and "
            << (dir / "figures.svg").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polygon toolkit: Newton polygons, lattice width, "
               "and Brill-Noether admissibility"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "Invariants and an admissibility verdict for one polygon");
  auto* poly_opt = analyze->add_option("--poly", analyze_args.laurent,
                                       "Laurent polynomial, e.g. \"x^3+y^3+1+x*y\"");
  auto* polygon_opt =
      analyze->add_option("--polygon", analyze_args.polygon,
                          "Vertex list \"x,y x,y ...\" or JSON [[x,y],...]");
  poly_opt->excludes(polygon_opt);
  polygon_opt->excludes(poly_opt);
  analyze->add_flag("--pretty", analyze_args.pretty,
                    "Human-readable output instead of JSON");

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Equivalence classes as JSON lines, one per class");
  auto* interior_opt = enumerate->add_option("--interior", enumerate_args.interior,
                                             "Classes with this many interior points");
  auto* points_opt = enumerate->add_option("--points", enumerate_args.points,
                                           "Classes with this many lattice points");
  interior_opt->excludes(points_opt);
  points_opt->excludes(interior_opt);
  enumerate->add_option("--limit", enumerate_args.limit,
                        "Emit at most this many lines");
  enumerate->add_option("--threads", enumerate_args.threads,
                        "Worker threads (0 = hardware default)")
      ->envname("POLYBN_THREADS");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand(
      "classify", "Write the classification report and figure sheet");
  classify->add_option("--out", classify_args.out, "Output directory");
  classify->add_option("--max-genus", classify_args.max_genus,
                       "Restrict the admissible/excluded sections (1..6)");
  classify->add_option("--threads", classify_args.threads,
                       "Worker threads (0 = hardware default)")
      ->envname("POLYBN_THREADS");

  unsigned selftest_threads = 0;
  auto* selftest =
      app.add_subcommand("selftest", "Run the acceptance suite and report");
  selftest->add_option("--threads", selftest_threads,
                       "Worker threads (0 = hardware default)")
      ->envname("POLYBN_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      if (poly_opt->count() + polygon_opt->count() != 1) {
        std::cerr << "error: provide exactly one of --poly or --polygon\n";
        return 2;
      }
      return run_analyze(analyze_args);
    }
    if (enumerate->parsed()) {
      if (interior_opt->count() + points_opt->count() != 1) {
        std::cerr << "error: provide exactly one of --interior or --points\n";
        return 2;
      }
      return run_enumerate(enumerate_args);
    }
    if (classify->parsed()) return run_classify(classify_args);
    if (selftest->parsed()) {
      std::error_code ec;
      std::filesystem::path self = std::filesystem::canonical(argv[0], ec);
      const std::string cli_path = ec ? std::string(argv[0]) : self.string();
      const auto results = run_acceptance_suite(selftest_threads, cli_path);
      return print_acceptance_report(std::cout, results) == 0 ? 0 : 1;
    }
  } catch (const polybn::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polybn::empty_polynomial_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polybn::degenerate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const polybn::empty_polygon_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const polybn::range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const polybn::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
