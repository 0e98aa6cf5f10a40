// disting: command-line front end.
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error
// (bad flags, malformed input).
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "disting/action.hpp"
#include "disting/catalog.hpp"
#include "disting/consumption.hpp"
#include "disting/graph.hpp"
#include "disting/parallel.hpp"
#include "disting/powers.hpp"
#include "disting/symfun.hpp"
#include "disting/verify.hpp"
#include "json.hpp"

namespace {

using namespace disting;
using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes to stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream first(line);
  int a = 0, b = 0;
  std::string rest;
  return static_cast<bool>(first >> a >> b) && !(first >> rest);
}

// A graph6 string, or a file holding graph6 or an edge list.
Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const auto text = read_file(arg);
    if (looks_like_edge_list(text)) return parse_edge_list(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
    }
    throw UsageError(arg + ": empty graph file");
  }
  return parse_graph6(arg);
}

// {"degree": d, "generators": ["(1 2)", ...], "ground_size": m, "images": [...]};
// without ground_size the group acts on its own points.
GroupAction load_action(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
    const int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Permutation::from_cycles(degree, g.get<std::string>()));
    if (!j.contains("ground_size")) return GroupAction::natural(PermGroup::generate(degree, gens));
    const int ground = j.at("ground_size").get<int>();
    std::vector<Permutation> images;
    for (const auto& g : j.at("images")) images.push_back(Permutation::from_cycles(ground, g.get<std::string>()));
    return GroupAction::from_generators(degree, std::move(gens), ground, std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

SubgroupCatalog catalog_for(int n, bool allow_long, const CatalogCache& cache) {
  if (n == 7 && !allow_long && !cache.contains(7)) {
    throw UsageError("no cached catalog for n = 7; run with --long or `cache build --n 7 --long`");
  }
  CatalogOptions o;
  o.allow_long = allow_long || n < 7 || cache.contains(n);
  o.cache = &cache;
  return subgroup_catalog(n, o);
}

std::string labels_csv(const Labeling& l) { return l.to_string(); }

Json poset_json(const ConsumptionPoset& p, const SubgroupCatalog& cat) {
  Json j;
  j["n"] = p.n;
  Json parts = Json::array();
  for (const auto& lam : p.partitions) parts.push_back(lam.to_string());
  j["partitions"] = parts;
  Json rel = Json::array();
  for (const auto& row : p.geq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rel.push_back(r);
  }
  j["relation"] = rel;
  Json edges = Json::array();
  for (const auto& [a, b] : p.hasse_edges()) edges.push_back({p.partitions[a].to_string(), p.partitions[b].to_string()});
  j["hasse_edges"] = edges;
  Json wit = Json::array();
  for (std::size_t a = 0; a < p.partitions.size(); ++a) {
    for (std::size_t b = 0; b < p.partitions.size(); ++b) {
      if (!p.witness[a][b]) continue;
      Json w;
      w["lambda"] = p.partitions[a].to_string();
      w["mu"] = p.partitions[b].to_string();
      w["group"] = cat.subgroups[*p.witness[a][b]].generators_to_string();
      wit.push_back(w);
    }
  }
  j["witnesses"] = wit;
  return j;
}

Json scan_json(const SchurScanReport& r) {
  Json j;
  j["max_n"] = r.max_n;
  j["graphs_scanned"] = r.graphs_scanned;
  Json ex = Json::array();
  for (const auto& e : r.exceptions) {
    Json x;
    x["n"] = e.n;
    x["graph6"] = e.graph6;
    Json coeffs = Json::object();
    for (auto it = e.dsf_schur.coeffs.rbegin(); it != e.dsf_schur.coeffs.rend(); ++it) coeffs[it->first.to_string()] = it->second;
    x["dsf_schur"] = coeffs;
    Json neg = Json::object();
    for (const auto& [lam, c] : e.negative_terms) neg[lam.to_string()] = c;
    x["negative_terms"] = neg;
    ex.push_back(x);
  }
  j["exceptions"] = ex;
  return j;
}

std::string scan_csv(const SchurScanReport& r) {
  std::string out = "n,graph6,schur\n";
  for (const auto& e : r.exceptions) out += std::to_string(e.n) + "," + e.graph6 + ",\"" + e.dsf_schur.to_string() + "\"\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing numbers of group actions and graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = default_jobs();
  bool long_run = false;
  app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--long", long_run, "allow hours-scale computations (n = 7)");

  // graph
  auto* graph = app.add_subcommand("graph", "distinguishing data of a simple graph");
  std::string graph_mode, graph_input, graph_dot;
  graph->add_option("mode", graph_mode, "dnumber | dpoly | dsf | aut")->required()->check(CLI::IsMember({"dnumber", "dpoly", "dsf", "aut"}));
  graph->add_option("input", graph_input, "graph6 string or graph6/edge-list file")->required();
  graph->add_option("--dot", graph_dot, "write DOT (with a minimal distinguishing labeling) to a file, - for stdout");

  // action
  auto* action = app.add_subcommand("action", "distinguishing data of a group action given as JSON");
  std::string action_mode, action_file;
  int action_k = 1;
  action->add_option("mode", action_mode, "dnumber | algorithm1 | dk")->required()->check(CLI::IsMember({"dnumber", "algorithm1", "dk"}));
  action->add_option("file", action_file, "action JSON")->required();
  action->add_option("--k", action_k, "tuple width for dk")->check(CLI::PositiveNumber);

  // poset
  auto* poset = app.add_subcommand("poset", "consumption order on partitions of n");
  int poset_n = 0;
  std::string poset_dot, poset_json_path;
  poset->add_option("--n", poset_n)->required()->check(CLI::Range(1, 7));
  poset->add_option("--dot", poset_dot, "DOT output path, - for stdout");
  poset->add_option("--json", poset_json_path, "JSON output path, - for stdout");

  // consumes
  auto* cons = app.add_subcommand("consumes", "does a subgroup of S_n consume a partition");
  int cons_n = 0;
  std::string cons_group, cons_lambda;
  cons->add_option("--n", cons_n)->required()->check(CLI::Range(1, 16));
  cons->add_option("--group", cons_group, "generators, e.g. \"(1 2)(3 4),(1 3)(2 4)\"")->required();
  cons->add_option("--lambda", cons_lambda, "partition, e.g. 3,1")->required();

  // density
  auto* dens = app.add_subcommand("density", "least k such that a coloring of [n]^k realizes the group");
  int dens_n = 0;
  std::string dens_group;
  dens->add_option("--n", dens_n)->required()->check(CLI::Range(1, 8));
  dens->add_option("--group", dens_group, "generators in cycle notation")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "scans over all small graphs");
  std::string scan_kind, scan_json_path, scan_csv_path;
  int scan_max_n = 6;
  scan->add_option("kind", scan_kind, "schur")->required()->check(CLI::IsMember({"schur"}));
  scan->add_option("--max-n", scan_max_n)->check(CLI::Range(1, 7));
  scan->add_option("--json", scan_json_path, "JSON output path, - for stdout");
  scan->add_option("--csv", scan_csv_path, "CSV output path, - for stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "run acceptance criteria");
  std::string verify_sel = "all";
  verify->add_option("criterion", verify_sel, "all, or an id such as AC08 / AC08-poset-figures");
  bool verify_list = false;
  verify->add_flag("--list", verify_list, "list criterion ids");

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "subgroup catalog cache");
  cache_cmd->require_subcommand(1);
  auto* cache_build = cache_cmd->add_subcommand("build", "compute and store the catalog of S_n");
  int cache_n = 0;
  cache_build->add_option("--n", cache_n)->required()->check(CLI::Range(1, 7));
  auto* cache_clear = cache_cmd->add_subcommand("clear", "remove all cached catalogs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto cache = CatalogCache::from_environment();
  try {
    if (*graph) {
      const auto g = load_graph(graph_input);
      if (graph_mode == "dnumber") {
        const auto d = graph_distinguishing(g);
        std::cout << d.number << '\n';
        if (!graph_dot.empty()) emit(graph_dot, write_dot(g, &d.witness));
      } else if (graph_mode == "dpoly") {
        const auto p = distinguishing_counts(automorphism_action(g));
        std::cout << "f(x) = " << p.to_string() << '\n';
        std::cout << "D = " << p.first_positive() << '\n';
      } else if (graph_mode == "dsf") {
        const auto m = dsf_monomial(automorphism_action(g));
        const auto s = monomial_to_schur(m);
        std::cout << "monomial: " << m.to_string() << '\n';
        std::cout << "schur: " << s.to_string() << '\n';
        std::cout << "schur-positive: " << (is_schur_positive(s) ? "yes" : "no") << '\n';
      } else {
        const auto aut = automorphism_group(g);
        std::cout << "order " << aut.order() << '\n';
        std::cout << "generators " << aut.generators_to_string() << '\n';
      }
      if (graph_mode != "dnumber" && !graph_dot.empty()) emit(graph_dot, write_dot(g));
    } else if (*action) {
      const auto a = load_action(action_file);
      if (action_mode == "dnumber") {
        const auto d = distinguishing_number(a);
        std::cout << d.number << '\n' << labels_csv(d.witness) << '\n';
      } else if (action_mode == "algorithm1") {
        const auto l = tymoczko_label(a);
        std::cout << l.max_color() << '\n' << labels_csv(l) << '\n';
      } else {
        const auto d = distinguishing_number_k(a, action_k);
        std::cout << d.number << '\n' << labels_csv(d.witness) << '\n';
      }
    } else if (*poset) {
      const auto cat = catalog_for(poset_n, long_run, cache);
      const auto p = consumption_poset(cat);
      if (!poset_dot.empty()) emit(poset_dot, poset_to_dot(p));
      if (!poset_json_path.empty()) emit(poset_json_path, poset_json(p, cat).dump(2) + "\n");
      if (poset_dot.empty() && poset_json_path.empty()) {
        for (const auto& [i, j] : p.hasse_edges()) {
          std::cout << p.partitions[i].to_string() << " > " << p.partitions[j].to_string() << '\n';
        }
      }
    } else if (*cons) {
      const auto h = PermGroup::parse(cons_n, cons_group);
      const auto lam = IntegerPartition::parse(cons_lambda);
      if (lam.size() != cons_n) throw UsageError("lambda must be a partition of n");
      const auto sp = consuming_partition(h, lam);
      if (sp) std::cout << "yes " << sp->to_string() << '\n';
      else std::cout << "no\n";
    } else if (*dens) {
      std::cout << density(PermGroup::parse(dens_n, dens_group)) << '\n';
    } else if (*scan) {
      const auto r = scan_graphs_schur(scan_max_n, jobs);
      if (!scan_json_path.empty()) emit(scan_json_path, scan_json(r).dump(2) + "\n");
      if (!scan_csv_path.empty()) emit(scan_csv_path, scan_csv(r));
      if (scan_json_path.empty() && scan_csv_path.empty()) {
        std::cout << r.graphs_scanned << " graphs scanned, " << r.exceptions.size() << " not Schur-positive\n";
        for (const auto& e : r.exceptions) std::cout << e.n << ' ' << e.graph6 << ' ' << e.dsf_schur.to_string() << '\n';
      }
    } else if (*verify) {
      if (verify_list) {
        for (const auto& c : criteria()) std::cout << c.id << (c.long_run ? " [long]" : "") << "  " << c.title << '\n';
        return 0;
      }
      VerifyOptions o;
      o.jobs = jobs;
      o.cache = &cache;
      o.long_run = long_run;
      o.progress = &std::cerr;
      int failed = 0;
      for (const auto& r : run_criteria(verify_sel, o)) {
        std::cout << format_result(r) << '\n';
        failed += !r.passed;
      }
      return failed ? 1 : 0;
    } else if (*cache_cmd) {
      if (*cache_build) {
        CatalogOptions o;
        o.allow_long = long_run;
        o.cache = &cache;
        if (cache_n == 7 && !long_run) throw UsageError("n = 7 needs --long");
        const auto cat = subgroup_catalog(cache_n, o);
        std::cout << cat.subgroups.size() << " subgroups, " << cat.conjugacy_reps.size() << " classes -> "
                  << cache.file_for(cache_n).string() << '\n';
      } else if (*cache_clear) {
        std::cout << "removed " << cache.clear() << " file(s) from " << cache.dir().string() << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "disting: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "disting: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "disting: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
