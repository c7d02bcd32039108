#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace adjfol;
using namespace adjfol::cli;

namespace {

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_flag("--json", cfg.json, "Emit JSON instead of text");
  app->add_option("--max-classical-rank", cfg.max_classical_rank, "Largest classical rank accepted")->capture_default_str();
}

void add_random(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "Master random seed")->capture_default_str();
  app->add_option("--samples", cfg.samples, "Random lines per family")->capture_default_str();
  app->add_option("--height", cfg.height, "Height bound of random rationals")->capture_default_str();
}

void add_source(CLI::App* app, FolSource& src) {
  std::string names;
  for (const auto& s : builtin_names()) names += (names.empty() ? "" : ", ") + s;
  app->add_option("--builtin", src.builtin, "Built-in foliation: " + names);
  app->add_option("--input", src.input, "Form in JSON term-list format");
  app->add_option("--n", src.n, "Dimension n of P^n x P^n for built-ins")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-theoretic cohomology of adjoint varieties and foliation checks on P^n x P^n"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string type;
  int rank = 0, node = 0, k = 2;
  std::string weight;
  bool compare = false;
  FolSource src;
  std::string surface, surface_file;

  auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  roots->add_option("--type", type, "Cartan type A-G")->required();
  roots->add_option("--rank", rank, "Rank")->required();
  add_common(roots, cfg);

  auto* bbw = app.add_subcommand("bbw", "Cohomology of E_lambda on G/P(node) by Bott-Borel-Weil");
  bbw->add_option("--type", type, "Cartan type A-G")->required();
  bbw->add_option("--rank", rank, "Rank")->required();
  bbw->add_option("--node", node, "Marked node (Bourbaki label)")->required();
  bbw->add_option("--weight", weight, "Comma-separated fundamental-weight coordinates")->required()->allow_extra_args(false);
  add_common(bbw, cfg);

  auto* adj = app.add_subcommand("adjoint", "Contact data and wedge^2 D^vee(k) of one adjoint variety");
  adj->add_option("--type", type, "Cartan type B-G")->required();
  adj->add_option("--rank", rank, "Rank")->required();
  adj->add_option("--k", k, "Twist")->capture_default_str();
  add_common(adj, cfg);

  auto* table = app.add_subcommand("adjoint-table", "Per-type table of wedge^2 D^vee(2) and h^0(Omega^2)");
  table->add_flag("--compare-paper,--compare", compare, "Compare with the printed reference weights");
  add_common(table, cfg);

  auto* fol = app.add_subcommand("fol", "Foliations on the hyperplane section of P^n x P^n");
  fol->require_subcommand(1);
  auto* integ = fol->add_subcommand("check-integrable", "Integrability, Euler contractions, divisorial zeros");
  auto* degree = fol->add_subcommand("degree", "Tangency degrees against random lines of both families");
  auto* inv = fol->add_subcommand("invariant", "Invariance of a hypersurface section");
  auto* build = fol->add_subcommand("build", "Print a built-in form as JSON");
  for (auto* sub : {integ, degree, inv, build}) {
    add_source(sub, src);
    add_random(sub, cfg);
    sub->add_flag("--json", cfg.json, "Emit JSON instead of text");
  }
  inv->add_option("--surface", surface, "Named surface: conic-x, conic-y, x0, y0");
  inv->add_option("--surface-input", surface_file, "Surface equation as a JSON term list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*roots) return cmd_roots(type, rank, cfg, std::cout);
    if (*bbw) return cmd_bbw(type, rank, node, weight, cfg, std::cout);
    if (*adj) return cmd_adjoint(type, rank, k, cfg, std::cout, std::cerr);
    if (*table) return cmd_adjoint_table(compare, cfg, std::cout, std::cerr);
    if (*integ) return cmd_fol_check_integrable(src, cfg, std::cout, std::cerr);
    if (*degree) return cmd_fol_degree(src, cfg, std::cout, std::cerr);
    if (*inv) return cmd_fol_invariant(src, surface, surface_file, cfg, std::cout, std::cerr);
    if (*build) return cmd_fol_build(src, cfg, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kBadInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  }
  return kBadInput;
}
