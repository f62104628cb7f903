#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cqc/cliques.hpp"
#include "cqc/colorers.hpp"
#include "cqc/decomposition.hpp"
#include "cqc/generators.hpp"
#include "cqc/graph.hpp"
#include "cqc/recognition.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cqc::Graph load_graph(const std::string& path) {
  return cqc::parse_edge_list(read_file(path));
}

// Payload goes to stdout or, when -o was given, to the named file; stderr
// stays reserved for diagnostics.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write file: " + out_path);
  out << payload;
}

// Independent re-validation of a produced coloring; color-producing commands
// never exit 0 without passing it.
void self_check(const cqc::Graph& g, const cqc::VertexColoring& c) {
  auto report = cqc::check_clique_coloring(g, cqc::maximal_cliques(g), c);
  if (!report.valid)
    throw cqc::InternalInconsistencyError("output coloring failed revalidation");
}

struct CommonArgs {
  std::string in_path;
  std::string out_path;
  bool certify = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-coloring toolkit: constructive colorings, recognition, "
               "decomposition, generators and exact oracles"};
  app.require_subcommand(1);

  CommonArgs cliques_a, check_a, color2_a, color3_a, c2tree_a, oddc_a;
  CommonArgs ochrom_a, otrans_a, ocolor2_a, rec_a, dec_a;
  std::string check_coloring_path;
  bool color2_verify = false;
  int ochrom_max_k = 8;
  int rec_max_n = 60, dec_max_n = 60;

  auto* cliques_cmd = app.add_subcommand("cliques", "list the maximal cliques");
  cliques_cmd->add_option("-i", cliques_a.in_path, "input edge-list file")->required();
  cliques_cmd->add_option("-o", cliques_a.out_path, "output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "validate a clique-coloring");
  check_cmd->add_option("-i", check_a.in_path, "input edge-list file")->required();
  check_cmd->add_option("-c", check_coloring_path, "coloring file")->required();
  check_cmd->add_option("-o", check_a.out_path, "output file (default stdout)");

  auto* color2_cmd =
      app.add_subcommand("color2", "2-clique-color a {claw, K5-minor}-free graph");
  color2_cmd->add_option("-i", color2_a.in_path, "input edge-list file")->required();
  color2_cmd->add_option("-o", color2_a.out_path, "output file (default stdout)");
  color2_cmd->add_flag("--verify", color2_verify, "check claw-freeness and K5-minor-freeness first");
  color2_cmd->add_flag("--certify", color2_a.certify, "emit the rule trace");

  auto* color3_cmd = app.add_subcommand(
      "color3max", "3-clique-color an edge-maximal K5-minor-free graph");
  color3_cmd->add_option("-i", color3_a.in_path, "input edge-list file")->required();
  color3_cmd->add_option("-o", color3_a.out_path, "output file (default stdout)");
  color3_cmd->add_flag("--certify", color3_a.certify, "emit the rule trace");

  auto* c2tree_cmd = app.add_subcommand("color-2tree", "2-clique-color a 2-tree");
  c2tree_cmd->add_option("-i", c2tree_a.in_path, "input edge-list file")->required();
  c2tree_cmd->add_option("-o", c2tree_a.out_path, "output file (default stdout)");
  c2tree_cmd->add_flag("--certify", c2tree_a.certify, "emit the rule trace");

  auto* oddc_cmd = app.add_subcommand("color-oddcycle", "3-color an odd cycle");
  oddc_cmd->add_option("-i", oddc_a.in_path, "input edge-list file")->required();
  oddc_cmd->add_option("-o", oddc_a.out_path, "output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground-truth oracles");
  oracle_cmd->require_subcommand(1);
  auto* ochrom_cmd = oracle_cmd->add_subcommand("chromatic", "clique-chromatic number");
  ochrom_cmd->add_option("-i", ochrom_a.in_path, "input edge-list file")->required();
  ochrom_cmd->add_option("-o", ochrom_a.out_path, "output file (default stdout)");
  ochrom_cmd->add_option("--max-k", ochrom_max_k, "largest k to try (default 8)");
  auto* otrans_cmd = oracle_cmd->add_subcommand("transversal", "clique-transversal number");
  otrans_cmd->add_option("-i", otrans_a.in_path, "input edge-list file")->required();
  otrans_cmd->add_option("-o", otrans_a.out_path, "output file (default stdout)");
  auto* ocolor2_cmd = oracle_cmd->add_subcommand("color2", "exact 2-clique-coloring");
  ocolor2_cmd->add_option("-i", ocolor2_a.in_path, "input edge-list file")->required();
  ocolor2_cmd->add_option("-o", ocolor2_a.out_path, "output file (default stdout)");

  auto* rec_cmd = app.add_subcommand("recognize", "class membership report");
  rec_cmd->add_option("-i", rec_a.in_path, "input edge-list file")->required();
  rec_cmd->add_option("-o", rec_a.out_path, "output file (default stdout)");
  rec_cmd->add_option("--max-n", rec_max_n, "minor-search guard (hard cap 60)");

  auto* dec_cmd = app.add_subcommand("decompose", "Wagner decomposition");
  dec_cmd->add_option("-i", dec_a.in_path, "input edge-list file")->required();
  dec_cmd->add_option("-o", dec_a.out_path, "output file (default stdout)");
  dec_cmd->add_option("--max-n", dec_max_n, "per-leaf minor-search guard (hard cap 60)");

  std::string gen_family, gen_out, gen_blueprint_path, gen_base_path;
  int gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph family instance");
  gen_cmd->add_option("family", gen_family, "one of: cycle complete complete_bipartite "
                      "wheel cycle_power wagner two_tree apollonian wagner_sum "
                      "line_graph prism k4free_chi3 l_k6")->required();
  gen_cmd->add_option("-n", gen_n, "primary size parameter");
  gen_cmd->add_option("-k", gen_k, "secondary parameter (power, second side)");
  gen_cmd->add_option("--seed", gen_seed, "PRNG seed for randomized families");
  gen_cmd->add_option("--blueprint", gen_blueprint_path, "blueprint file for wagner_sum");
  gen_cmd->add_option("-i", gen_base_path, "base graph for line_graph");
  gen_cmd->add_option("-o", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (cliques_cmd->parsed()) {
      auto g = load_graph(cliques_a.in_path);
      auto cs = cqc::maximal_cliques(g);
      std::ostringstream out;
      for (const auto& c : cs.cliques) {
        for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << '\n';
      }
      emit(cliques_a.out_path, out.str());
      return 0;
    }
    if (check_cmd->parsed()) {
      auto g = load_graph(check_a.in_path);
      cqc::VertexColoring c;
      try {
        c = cqc::parse_coloring(read_file(check_coloring_path));
        auto report = cqc::check_clique_coloring(g, cqc::maximal_cliques(g), c);
        emit(check_a.out_path, cqc::write_validity(report));
        return report.valid ? 0 : 2;
      } catch (const cqc::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
      }
    }
    if (color2_cmd->parsed()) {
      auto g = load_graph(color2_a.in_path);
      auto cert = cqc::two_clique_color_claw_free(g, color2_verify);
      self_check(g, cert.coloring);
      emit(color2_a.out_path, color2_a.certify ? cqc::write_certificate(cert)
                                               : cqc::write_coloring(cert.coloring));
      return 0;
    }
    if (color3_cmd->parsed()) {
      auto g = load_graph(color3_a.in_path);
      auto cert = cqc::color_maximal_k5_free(g);
      self_check(g, cert.coloring);
      emit(color3_a.out_path, color3_a.certify ? cqc::write_certificate(cert)
                                               : cqc::write_coloring(cert.coloring));
      return 0;
    }
    if (c2tree_cmd->parsed()) {
      auto g = load_graph(c2tree_a.in_path);
      auto cert = cqc::color_2tree(g);
      self_check(g, cert.coloring);
      emit(c2tree_a.out_path, c2tree_a.certify ? cqc::write_certificate(cert)
                                               : cqc::write_coloring(cert.coloring));
      return 0;
    }
    if (oddc_cmd->parsed()) {
      auto g = load_graph(oddc_a.in_path);
      auto c = cqc::color_odd_cycle(g);
      self_check(g, c);
      emit(oddc_a.out_path, cqc::write_coloring(c));
      return 0;
    }
    if (ochrom_cmd->parsed()) {
      auto g = load_graph(ochrom_a.in_path);
      auto k = cqc::oracle_clique_chromatic(g, ochrom_max_k);
      if (!k) {
        emit(ochrom_a.out_path, "exceeds " + std::to_string(ochrom_max_k) + "\n");
        return 2;
      }
      emit(ochrom_a.out_path, std::to_string(*k) + "\n");
      return 0;
    }
    if (otrans_cmd->parsed()) {
      auto g = load_graph(otrans_a.in_path);
      emit(otrans_a.out_path, std::to_string(cqc::oracle_clique_transversal(g)) + "\n");
      return 0;
    }
    if (ocolor2_cmd->parsed()) {
      auto g = load_graph(ocolor2_a.in_path);
      auto c = cqc::exact_two_clique_coloring(g);
      if (!c) {
        emit(ocolor2_a.out_path, "UNSAT\n");
        return 2;
      }
      self_check(g, *c);
      emit(ocolor2_a.out_path, cqc::write_coloring(*c));
      return 0;
    }
    if (rec_cmd->parsed()) {
      if (rec_max_n > 60) {
        std::cerr << "usage error: --max-n exceeds the hard cap of 60\n";
        return 1;
      }
      auto g = load_graph(rec_a.in_path);
      emit(rec_a.out_path, cqc::write_recognition(cqc::recognize(g, rec_max_n)));
      return 0;
    }
    if (dec_cmd->parsed()) {
      if (dec_max_n > 60) {
        std::cerr << "usage error: --max-n exceeds the hard cap of 60\n";
        return 1;
      }
      auto g = load_graph(dec_a.in_path);
      auto d = cqc::wagner_decompose(g, dec_max_n);
      if (!d) {
        std::cerr << "no decomposition: the graph is not an edge-maximal "
                     "K5-minor-free clique-sum\n";
        return 2;
      }
      emit(dec_a.out_path, cqc::write_decomposition(*d));
      return 0;
    }
    if (gen_cmd->parsed()) {
      try {
        auto family = cqc::parse_family(gen_family);
        if (!family) {
          std::cerr << "usage error: unknown family '" << gen_family << "'\n";
          return 1;
        }
        cqc::GenSpec spec;
        spec.family = *family;
        spec.n = gen_n;
        spec.k = gen_k;
        spec.seed = gen_seed;
        if (*family == cqc::Family::WagnerSum) {
          if (gen_blueprint_path.empty()) {
            std::cerr << "usage error: wagner_sum needs --blueprint\n";
            return 1;
          }
          spec.blueprint = cqc::parse_blueprint(read_file(gen_blueprint_path));
        }
        if (*family == cqc::Family::LineGraph) {
          if (gen_base_path.empty()) {
            std::cerr << "usage error: line_graph needs -i <base graph>\n";
            return 1;
          }
          spec.base = load_graph(gen_base_path);
        }
        emit(gen_out, cqc::write_edge_list(cqc::gen(spec)));
        return 0;
      } catch (const cqc::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
      }
    }
    std::cerr << "usage error: no subcommand\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const cqc::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const cqc::SizeGuardError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const cqc::ChromaticExceptionError& e) {
    std::cerr << "not colorable: " << e.what() << '\n';
    return 2;
  } catch (const cqc::ClassViolationError& e) {
    std::cerr << "class violation: " << e.what() << '\n';
    return 3;
  } catch (const cqc::PreconditionError& e) {
    std::cerr << "class violation: " << e.what() << '\n';
    return 3;
  } catch (const cqc::Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
