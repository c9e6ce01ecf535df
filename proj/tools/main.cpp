#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccg/eccentric.hpp"
#include "eccg/families.hpp"
#include "eccg/graph6.hpp"
#include "eccg/isomorphism.hpp"
#include "eccg/metrics.hpp"
#include "eccg/theorems.hpp"
#include "eccg/trees.hpp"

namespace {

using eccg::Graph;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& path, const std::string& fmt) {
  std::string text = slurp(path);
  if (fmt == "graph6") return eccg::parse_graph6(text);
  if (fmt == "edgelist") return eccg::parse_edge_list(text);
  if (fmt.empty()) return eccg::parse_graph_auto(text);
  throw std::runtime_error("dot is an output-only format");
}

void write_graph(const Graph& g, const std::string& fmt) {
  if (fmt == "edgelist")
    std::cout << eccg::emit_edge_list(g);
  else if (fmt == "dot")
    std::cout << eccg::emit_dot(g);
  else
    std::cout << eccg::emit_graph6(g) << "\n";
}

int env_threads() {
  const char* s = std::getenv("ECC_THREADS");
  if (!s) return 0;
  try {
    int v = std::stoi(s);
    return v > 0 ? v : 0;
  } catch (...) {
    return 0;
  }
}

int report_exit(const eccg::VerificationReport& r) {
  std::cout << r.to_json().dump(2) << "\n";
  return r.passed() ? 0 : 1;
}

Graph load_fixture(const std::string& dir, const std::string& name) {
  auto path = std::filesystem::path(dir) / name;
  return eccg::parse_graph_auto(slurp(path.string()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eccentric graph toolkit"};
  app.require_subcommand(1);

  std::string input = "-", input2, fmt, in_fmt;
  std::string fixtures_dir = "fixtures";
  int bound_n = 0, max_param = 30, threads = 0;

  auto add_fmt = [&fmt](CLI::App* cmd) {
    cmd->add_option("--fmt", fmt, "output format")
        ->check(CLI::IsMember({"graph6", "edgelist", "dot"}));
  };
  auto add_in_fmt = [&in_fmt](CLI::App* cmd) {
    cmd->add_option("--in-fmt", in_fmt, "input format (default: detect)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };

  auto* ecc_cmd = app.add_subcommand("ecc", "print the eccentric graph");
  ecc_cmd->add_option("input", input, "graph file or - for stdin");
  add_fmt(ecc_cmd);
  add_in_fmt(ecc_cmd);

  auto* analyze_cmd =
      app.add_subcommand("analyze", "eccentricity profile as JSON");
  analyze_cmd->add_option("input", input, "graph file or - for stdin");
  add_in_fmt(analyze_cmd);

  auto* comp_cmd = app.add_subcommand("complement", "print the complement");
  comp_cmd->add_option("input", input, "graph file or - for stdin");
  add_fmt(comp_cmd);
  add_in_fmt(comp_cmd);

  auto* iso_cmd =
      app.add_subcommand("iso", "test two graphs for isomorphism");
  iso_cmd->add_option("input1", input, "first graph")->required();
  iso_cmd->add_option("input2", input2, "second graph")->required();
  add_in_fmt(iso_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate a named family member");
  std::string family;
  std::vector<int> params;
  gen_cmd->add_option("family", family,
                      "path|cycle|star|complete|complete_bipartite|"
                      "double_star|sstar|grid")
      ->required();
  gen_cmd->add_option("params", params, "family parameters")->expected(-1);
  add_fmt(gen_cmd);

  auto* enum_cmd = app.add_subcommand("enum", "enumerate graphs, one graph6 line each");
  enum_cmd->require_subcommand(1);
  auto* enum_trees = enum_cmd->add_subcommand("trees", "free trees on n vertices");
  enum_trees->add_option("--n", bound_n, "vertex count")->required();
  auto* enum_graphs =
      enum_cmd->add_subcommand("graphs", "labeled connected graphs on n vertices");
  enum_graphs->add_option("--n", bound_n, "vertex count")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->require_subcommand(1);
  auto* v_theorem2 = verify_cmd->add_subcommand(
      "theorem2", "eccentric graph isomorphic to complement iff the corrected condition");
  v_theorem2->add_option("--max-n", bound_n)->default_val(6);
  auto* v_tree = verify_cmd->add_subcommand(
      "tree-diameter", "eccentric graphs of trees have diameter at most 3");
  v_tree->add_option("--max-n", bound_n)->default_val(14);
  auto* v_two = verify_cmd->add_subcommand(
      "two-center", "two-center trees yield the predicted coclique extension");
  v_two->add_option("--max-n", bound_n)->default_val(14);
  v_two->add_option("--fixtures", fixtures_dir, "fixture directory");
  auto* v_lemma5 = verify_cmd->add_subcommand(
      "lemma5", "one-center trees: leaf triple iff 2-self-centered eccentric graph");
  v_lemma5->add_option("--max-n", bound_n)->default_val(14);
  auto* v_table1 = verify_cmd->add_subcommand(
      "table1", "predicted eccentric graphs of the standard families");
  v_table1->add_option("--max-n,--max-param", max_param)->default_val(30);
  auto* v_grid = verify_cmd->add_subcommand(
      "grid", "3x4 grid: eccentric graph diameter 5, matches the transcription");
  v_grid->add_option("--fixtures", fixtures_dir, "fixture directory");

  auto* search_cmd = app.add_subcommand("search", "run a search campaign");
  search_cmd->require_subcommand(1);
  auto* s_gap = search_cmd->add_subcommand(
      "akiyama-gap",
      "graphs isomorphic to their complement's eccentric form that defeat "
      "the common-neighbor condition");
  s_gap->add_option("--max-n", bound_n)->default_val(7);
  auto* s_diam = search_cmd->add_subcommand(
      "same-diameter", "graphs whose eccentric graph keeps the diameter");
  s_diam->add_option("--max-n", bound_n)->default_val(6);
  auto* s_self = search_cmd->add_subcommand(
      "self-ecc", "graphs isomorphic to their own eccentric graph");
  s_self->add_option("--max-n", bound_n)->default_val(6);

  for (CLI::App* c : {v_theorem2, v_tree, v_two, v_lemma5, v_table1, v_grid,
                      s_gap, s_diam, s_self})
    c->add_option("--threads", threads, "worker cap (default: ECC_THREADS or hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  eccg::CampaignOptions opt;
  opt.threads = threads > 0 ? threads : env_threads();

  try {
    if (*ecc_cmd) {
      write_graph(eccg::eccentric_graph(read_graph(input, in_fmt)), fmt);
      return 0;
    }
    if (*analyze_cmd) {
      Graph g = read_graph(input, in_fmt);
      nlohmann::ordered_json j;
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      bool conn = eccg::is_connected(g) && g.vertex_count() >= 1;
      j["connected"] = conn;
      if (!conn) {
        j["components"] = eccg::component_count(g);
      } else {
        auto p = eccg::eccentricity_profile(g);
        j["eccentricities"] = p.eccentricity;
        j["radius"] = p.radius;
        j["diameter"] = p.diameter;
        j["centers"] = p.centers;
        j["diametrical"] = p.diametrical;
        for (const auto& [i, verts] : p.strata)
          j["S_" + std::to_string(i)] = verts;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*comp_cmd) {
      write_graph(eccg::complement(read_graph(input, in_fmt)), fmt);
      return 0;
    }
    if (*iso_cmd) {
      Graph a = read_graph(input, in_fmt);
      Graph b = read_graph(input2, in_fmt);
      auto r = eccg::find_isomorphism(a, b);
      if (!r.isomorphic) {
        std::cout << "not-isomorphic\n";
        return 1;
      }
      std::cout << "isomorphic\n";
      for (std::size_t v = 0; v < r.mapping.size(); ++v)
        std::cout << v << " -> " << r.mapping[v] << "\n";
      return 0;
    }
    if (*gen_cmd) {
      auto f = eccg::family_from_name(family);
      if (!f) throw std::runtime_error("unknown family: " + family);
      write_graph(eccg::generate({*f, params}), fmt);
      return 0;
    }
    if (*enum_trees) {
      eccg::for_each_free_tree(bound_n, [](const Graph& t) {
        std::cout << eccg::emit_graph6(t) << "\n";
      });
      return 0;
    }
    if (*enum_graphs) {
      eccg::for_each_connected_graph(bound_n, [](const Graph& g) {
        std::cout << eccg::emit_graph6(g) << "\n";
      });
      return 0;
    }
    if (*v_theorem2) return report_exit(eccg::verify_theorem2(bound_n, opt));
    if (*v_tree)
      return report_exit(eccg::verify_tree_diameter_bound(bound_n, opt));
    if (*v_two) {
      std::vector<Graph> pinned;
      auto path = std::filesystem::path(fixtures_dir) / "bicentral15.edges";
      if (std::filesystem::exists(path))
        pinned.push_back(load_fixture(fixtures_dir, "bicentral15.edges"));
      return report_exit(
          eccg::verify_two_center_structure(bound_n, pinned, opt));
    }
    if (*v_lemma5) return report_exit(eccg::verify_lemma5(bound_n, opt));
    if (*v_table1) return report_exit(eccg::verify_table1(max_param, opt));
    if (*v_grid)
      return report_exit(eccg::grid_fixture_check(
          load_fixture(fixtures_dir, "grid34_ecc.edges")));
    if (*s_gap) return report_exit(eccg::search_akiyama_gap(bound_n, opt));
    if (*s_diam) return report_exit(eccg::search_problem1(bound_n, opt));
    if (*s_self) return report_exit(eccg::search_problem2(bound_n, opt));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
