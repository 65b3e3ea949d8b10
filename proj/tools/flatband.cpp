#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "flatband/commands.hpp"

namespace cli = flatband::cli;

int main(int argc, char** argv) {
  CLI::App app{"Flat-band detection for periodic graph operators"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::OutputOptions fmt;
  app.add_flag("--json", fmt.json, "Print the report as JSON");

  std::string labels = "auto";
  const std::string label_help = "Labeling: auto (given values, random fill), given, or random";

  cli::AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Floquet matrix, dispersion polynomial and flat bands of one labeling");
  a->add_option("file", analyze.file, "Graph JSON file")->required();
  a->add_option("--seed", analyze.seed, "Seed for randomly drawn labels");
  a->add_option("--labels", labels, label_help);

  cli::GenericOptions generic;
  auto* g = app.add_subcommand("generic", "Decide generic flat bands by unanimity over random labelings");
  g->add_option("file", generic.file, "Graph JSON file")->required();
  g->add_option("--trials", generic.trials, "Number of random labelings")->check(CLI::PositiveNumber);
  g->add_option("--seed", generic.seed, "Seed");

  cli::PolytopeOptions polytope;
  auto* p = app.add_subcommand("polytope", "Generic Newton polytope, vertical faces and facial witnesses");
  p->add_option("file", polytope.file, "Graph JSON file")->required();
  p->add_option("--trials", polytope.trials, "Labelings in the support union")->check(CLI::PositiveNumber);
  p->add_option("--seed", polytope.seed, "Seed");

  cli::VerifyOptions verify;
  auto* v = app.add_subcommand(
      "verify-theorem",
      "Compare combinatorial and algebraic flat-band criteria on random graphs. Graphs start from a "
      "spanning tree of the quotient with probability 3/4, so most but not all are connected; each "
      "graph also draws a zero-offset bias from {0, 0.5, 0.8, 1}");
  v->add_option("--dims", verify.dims, "Comma-separated dimensions (1 and/or 2)")->delimiter(',');
  v->add_option("--max-orbits", verify.max_orbits, "Orbits per graph, at most 4");
  v->add_option("--max-edges", verify.max_edges, "Edge classes per graph, at most 6");
  v->add_option("--count", verify.count, "Number of graphs");
  v->add_option("--trials", verify.trials, "Labelings per graph")->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Seed");

  cli::BandsOptions bands;
  auto* b = app.add_subcommand("bands", "Sample bands on the torus and flag numerically flat ones");
  b->add_option("file", bands.file, "Graph JSON file")->required();
  b->add_option("--resolution", bands.resolution, "Grid points per axis");
  b->add_option("--tol", bands.tol, "Flatness tolerance");
  b->add_option("--refute-tol", bands.refute_tol, "Looser tolerance reported alongside --tol");
  b->add_option("--out", bands.out, "CSV output path");
  b->add_option("--seed", bands.seed, "Seed for randomly drawn labels");
  b->add_option("--labels", labels, label_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  try {
    if (a->parsed()) {
      analyze.labels = flatband::parse_label_mode(labels);
      return cli::run_analyze(analyze, fmt, std::cout, std::cerr);
    }
    if (g->parsed()) return cli::run_generic(generic, fmt, std::cout, std::cerr);
    if (p->parsed()) return cli::run_polytope(polytope, fmt, std::cout, std::cerr);
    if (v->parsed()) return cli::run_verify_theorem(verify, fmt, std::cout, std::cerr);
    if (b->parsed()) {
      bands.labels = flatband::parse_label_mode(labels);
      return cli::run_bands(bands, fmt, std::cout, std::cerr);
    }
  } catch (const flatband::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitInputError;
}
