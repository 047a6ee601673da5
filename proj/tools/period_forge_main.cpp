// period-forge: generators, graph polynomials, closed-form and Monte Carlo
// periods, planar duals, and the twist reduction chain, over a stable graph
// JSON format.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pforge/canonical.hpp"
#include "pforge/families.hpp"
#include "pforge/graph_json.hpp"
#include "pforge/kirchhoff.hpp"
#include "pforge/multigraph.hpp"
#include "pforge/period_closed.hpp"
#include "pforge/period_mc.hpp"
#include "pforge/transforms.hpp"

namespace {

using namespace pforge;

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text;
}

int enumeration_cap(int fallback) {
  const char* env = std::getenv("PERIOD_FORGE_MAX_EDGES");
  if (!env) return fallback;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("PERIOD_FORGE_MAX_EDGES is not an integer");
  }
}

std::string estimate_json(const PeriodEstimate& est) {
  std::ostringstream os;
  os << "{\"mean\":" << format_double(est.mean)
     << ",\"stderr\":" << format_double(est.std_error)
     << ",\"samples\":" << est.samples << ",\"seed\":" << est.seed
     << ",\"sampler\":\"" << sampler_name(est.sampler) << "\""
     << ",\"plain_mean\":" << format_double(est.plain_mean)
     << ",\"plain_stderr\":" << format_double(est.plain_std_error) << "}\n";
  return os.str();
}

std::string chain_json(const ChainReport& report) {
  std::ostringstream os;
  os << "{\"params\":{\"k\":" << report.params.k << ",\"l\":" << report.params.l
     << ",\"m\":" << report.params.m << "},\"steps\":[";
  for (size_t i = 0; i < report.steps.size(); ++i) {
    const ChainStep& s = report.steps[i];
    os << (i ? "," : "") << "{\"from\":[" << s.from.k << ',' << s.from.l << ','
       << s.from.m << "],\"to\":[" << s.to.k << ',' << s.to.l << ',' << s.to.m
       << "],\"twisted_matches_next\":" << (s.twisted_matches_next ? "true" : "false")
       << ",\"decompleted_matches_next\":"
       << (s.decompleted_matches_next ? "true" : "false") << '}';
  }
  os << "],\"terminal_matches_zigzag\":"
     << (report.terminal_matches_zigzag ? "true" : "false")
     << ",\"verdict\":" << (report.verdict ? "true" : "false") << "}\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Kirchhoff polynomials, Feynman periods, and the twist reduction "
               "chain for zig-zag and triangle/box ladder graph families"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family graph as JSON");
  std::string gen_kind;
  int gen_n = 0, gen_k = 1, gen_l = 1, gen_m = 1;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "zigzag | zigzag-completed | family | family-dual")
      ->required();
  gen->add_option("--n", gen_n, "loop order for zig-zag kinds");
  gen->add_option("--k", gen_k, "family parameter k");
  gen->add_option("--l", gen_l, "family parameter l");
  gen->add_option("--m", gen_m, "family parameter m");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // psi
  auto* psi = app.add_subcommand("psi", "print the graph polynomial");
  std::string psi_graph, psi_backend = "enumerate";
  psi->add_option("--graph", psi_graph, "graph JSON file")->required();
  psi->add_option("--backend", psi_backend, "enumerate | del-contract");

  // trees
  auto* trees = app.add_subcommand("trees", "print the spanning tree count");
  std::string trees_graph;
  trees->add_option("--graph", trees_graph, "graph JSON file")->required();

  // period
  auto* period = app.add_subcommand("period", "closed-form or Monte Carlo period");
  period->require_subcommand(1);
  auto* closed = period->add_subcommand("closed", "closed-form period");
  int closed_zigzag = 0;
  std::vector<int> closed_family;
  closed->add_option("--zigzag", closed_zigzag, "zig-zag loop order n");
  closed->add_option("--family", closed_family, "family parameters k l m")
      ->expected(3);
  auto* mc = period->add_subcommand("mc", "Monte Carlo period estimate");
  std::string mc_graph, mc_sampler = "simplex", mc_batch_csv;
  McConfig mc_cfg;
  mc->add_option("--graph", mc_graph, "graph JSON file")->required();
  mc->add_option("--samples", mc_cfg.samples, "sample count");
  mc->add_option("--seed", mc_cfg.seed, "RNG seed (default 0)");
  mc->add_option("--workers", mc_cfg.workers, "worker threads");
  mc->add_option("--batches", mc_cfg.batches, "median-of-means batches");
  mc->add_option("--sampler", mc_sampler, "simplex | affine");
  mc->add_option("--batch-csv", mc_batch_csv, "write per-batch means as CSV");

  // twist-chain
  auto* chain = app.add_subcommand("twist-chain",
                                   "verify the reduction to the zig-zag family");
  int chain_k = 1, chain_l = 1, chain_m = 1;
  std::string chain_dir;
  chain->add_option("--k", chain_k, "family parameter k")->required();
  chain->add_option("--l", chain_l, "family parameter l")->required();
  chain->add_option("--m", chain_m, "family parameter m")->required();
  chain->add_option("--emit-intermediates", chain_dir,
                    "directory for intermediate graph JSON files");

  // dual
  auto* dual = app.add_subcommand("dual", "planar dual of an embedded graph");
  std::string dual_graph, dual_out;
  dual->add_option("--graph", dual_graph, "graph JSON file")->required();
  dual->add_option("--out", dual_out, "output file (default stdout)");

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism test for two graph files");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a, "graph JSON file")->required();
  iso->add_option("second", iso_b, "graph JSON file")->required();

  // table
  auto* table = app.add_subcommand("table", "closed-form period table as CSV");
  int table_max_n = 10;
  table->add_option("--max-n", table_max_n, "largest loop order");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    std::optional<Multigraph> g;
    if (gen_kind == "zigzag") {
      g = zigzag(gen_n);
    } else if (gen_kind == "zigzag-completed") {
      g = zigzag_completed(gen_n);
    } else if (gen_kind == "family") {
      g = family_graph(FamilyParams(gen_k, gen_l, gen_m));
    } else if (gen_kind == "family-dual") {
      g = family_dual(FamilyParams(gen_k, gen_l, gen_m));
    } else {
      throw std::invalid_argument("unknown generator '" + gen_kind + "'");
    }
    write_output(to_json(*g), gen_out);
  } else if (psi->parsed()) {
    Multigraph g = load_graph(psi_graph);
    int cap = enumeration_cap(24);
    GraphPolynomial p = psi_backend == "del-contract" ? psi_del_contract(g, cap)
                                                      : psi_enumerate(g, cap);
    std::cout << p.to_string() << "\n";
  } else if (trees->parsed()) {
    std::cout << spanning_tree_count(load_graph(trees_graph)).str() << "\n";
  } else if (closed->parsed()) {
    ClosedFormValue v = closed_family.size() == 3
                            ? family_period(FamilyParams(closed_family[0],
                                                         closed_family[1],
                                                         closed_family[2]))
                            : zigzag_period(closed_zigzag);
    std::cout << coefficient_string(v) << " * zeta(" << v.zeta_argument
              << ") = " << format_double(as_float(v)) << "\n";
  } else if (mc->parsed()) {
    mc_cfg.sampler = sampler_from_name(mc_sampler);
    mc_cfg.max_edges = enumeration_cap(14);
    PeriodEstimate est = estimate_period(load_graph(mc_graph), mc_cfg);
    std::cout << estimate_json(est);
    if (!mc_batch_csv.empty()) {
      std::ofstream csv(mc_batch_csv);
      if (!csv) throw std::invalid_argument("cannot write '" + mc_batch_csv + "'");
      csv << "batch,mean\n";
      for (size_t i = 0; i < est.batch_means.size(); ++i)
        csv << i << ',' << format_double(est.batch_means[i]) << "\n";
    }
  } else if (chain->parsed()) {
    ChainReport report = reduce_to_zigzag(FamilyParams(chain_k, chain_l, chain_m));
    if (!chain_dir.empty()) {
      std::filesystem::create_directories(chain_dir);
      auto emit = [&](const std::string& name, const Multigraph& g) {
        std::ofstream out(std::filesystem::path(chain_dir) / name);
        out << to_json(g);
      };
      for (size_t i = 0; i < report.steps.size(); ++i) {
        char prefix[32];
        std::snprintf(prefix, sizeof(prefix), "step_%02zu_", i);
        emit(std::string(prefix) + "completed.json", report.steps[i].completed);
        emit(std::string(prefix) + "twisted.json", report.steps[i].twisted);
      }
      emit("terminal.json", report.terminal);
      emit("target_zigzag.json", report.target);
    }
    std::cout << chain_json(report);
    if (!report.verdict) return 2;
  } else if (dual->parsed()) {
    write_output(to_json(planar_dual(load_graph(dual_graph))), dual_out);
  } else if (iso->parsed()) {
    auto witness = isomorphism(load_graph(iso_a), load_graph(iso_b));
    if (!witness) {
      std::cout << "false\n";
    } else {
      std::cout << "true\n[";
      for (size_t i = 0; i < witness->size(); ++i)
        std::cout << (i ? "," : "") << '[' << (*witness)[i].first << ','
                  << (*witness)[i].second << ']';
      std::cout << "]\n";
    }
  } else if (table->parsed()) {
    std::cout << "n,zeta_argument,zigzag_coefficient,zigzag_value,"
                 "family_coefficient,family_value\n";
    for (int n = 3; n <= table_max_n; ++n) {
      ClosedFormValue z = zigzag_period(n);
      std::cout << n << ',' << z.zeta_argument << ',' << coefficient_string(z)
                << ',' << format_double(as_float(z));
      if (n >= 6 && n % 2 == 0) {
        ClosedFormValue f = family_period(FamilyParams(1, 1, n / 2 - 2));
        std::cout << ',' << coefficient_string(f) << ','
                  << format_double(as_float(f));
      } else {
        std::cout << ",,";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pforge::invariant_violation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
