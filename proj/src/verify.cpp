#include "disting/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "disting/action.hpp"
#include "disting/consumption.hpp"
#include "disting/graph.hpp"
#include "disting/powers.hpp"
#include "disting/symfun.hpp"

namespace disting {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Context {
 public:
  explicit Context(const VerifyOptions& o) : options(o) {}

  const SubgroupCatalog& catalog(int n) {
    auto it = catalogs_.find(n);
    if (it != catalogs_.end()) return it->second;
    note("building subgroup catalog of S_" + std::to_string(n));
    CatalogOptions co;
    co.allow_long = options.long_run;
    co.cache = options.cache;
    return catalogs_.emplace(n, subgroup_catalog(n, co)).first->second;
  }

  const ConsumptionPoset& poset(int n) {
    auto it = posets_.find(n);
    if (it != posets_.end()) return it->second;
    return posets_.emplace(n, consumption_poset(catalog(n))).first->second;
  }

  void note(const std::string& line) const {
    if (options.progress) *options.progress << "  .. " << line << '\n' << std::flush;
  }

  const VerifyOptions& options;

 private:
  std::map<int, SubgroupCatalog> catalogs_;
  std::map<int, ConsumptionPoset> posets_;
};

// Integer least r with r^k >= n.
int integer_root_ceil(int n, int k) {
  int r = 1;
  for (;;) {
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= r;
    if (p >= n) return r;
    ++r;
  }
}

// Naive oracle: a labeling distinguishes iff no non-identity image keeps every color.
bool oracle_distinguishes(const GroupAction& a, const std::vector<int>& colors) {
  const int m = a.ground_size();
  for (const auto& g : a.images()) {
    if (g.is_identity()) continue;
    bool keeps = true;
    for (int x = 0; x < m && keeps; ++x) keeps = colors[static_cast<std::size_t>(g(x))] == colors[static_cast<std::size_t>(x)];
    if (keeps) return false;
  }
  return true;
}

// Number of distinguishing labelings X -> [r], by enumerating all r^|X|.
long long oracle_count(const GroupAction& a, int r) {
  const int m = a.ground_size();
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  long long count = 0;
  for (;;) {
    if (oracle_distinguishes(a, colors)) ++count;
    int i = 0;
    while (i < m && ++colors[static_cast<std::size_t>(i)] == r) colors[static_cast<std::size_t>(i++)] = 0;
    if (i == m) break;
  }
  return count;
}

int oracle_distinguishing_number(const GroupAction& a) {
  for (int r = 1;; ++r) {
    if (oracle_count(a, r) > 0) return r;
  }
}

// Every permutation of [n] preserving all multiplicities.
PermGroup oracle_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> kept;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = 0; v < n && ok; ++v) ok = g.at(u, v) == g.at(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)]);
    }
    if (ok) kept.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(n, std::move(kept));
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

Outcome check_cycles(Context&) {
  std::vector<std::string> got;
  bool ok = true;
  for (int n = 3; n <= 10; ++n) {
    const int d = graph_distinguishing_number(Graph::cycle(n));
    const int want = n <= 5 ? 3 : 2;
    ok = ok && d == want;
    got.push_back("C" + std::to_string(n) + "=" + std::to_string(d));
  }
  return {ok, join(got, " ")};
}

Outcome check_complete(Context&) {
  std::vector<std::string> got;
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    const int d = graph_distinguishing_number(Graph::complete(n));
    ok = ok && d == n;
    got.push_back("K" + std::to_string(n) + "=" + std::to_string(d));
  }
  return {ok, join(got, " ")};
}

Outcome check_complement(Context&) {
  const auto graphs = enumerate_graphs(6);
  int bad = 0;
  std::string first;
  for (const auto& g : graphs) {
    if (graph_distinguishing_number(g) != graph_distinguishing_number(complement(g))) {
      if (!bad++) first = write_graph6(g);
    }
  }
  std::string detail = std::to_string(graphs.size()) + " classes, " + std::to_string(bad) + " mismatches";
  if (bad) detail += ", first " + first;
  return {graphs.size() == 156 && bad == 0, detail};
}

Outcome check_sn_action(Context&) {
  std::vector<std::string> got;
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    const auto a = sn_action_n_minus_1(n);
    const int d = distinguishing_number(a).number;
    ok = ok && d == n - 1 && a.ground_size() == n + 2 && a.group().order() == PermGroup::symmetric(n).order();
    got.push_back("n=" + std::to_string(n) + ":D=" + std::to_string(d));
  }
  return {ok, join(got, " ")};
}

Outcome check_label_bound(Context& ctx) {
  const auto& cat = ctx.catalog(4);
  int worst_slack = 99;
  bool ok = cat.subgroups.size() == 30;
  for (const auto& h : cat.subgroups) {
    const auto labeling = tymoczko_label(GroupAction::natural(h));
    int k = 1;
    for (long long f = 1; f < static_cast<long long>(h.order()); f *= ++k) {
    }
    const int used = labeling.max_color();
    ok = ok && used <= k && is_distinguishing(GroupAction::natural(h), labeling);
    worst_slack = std::min(worst_slack, k - used);
  }
  return {ok, std::to_string(cat.subgroups.size()) + " subgroups, min slack " + std::to_string(worst_slack)};
}

Outcome check_power_actions(Context&) {
  bool ok = true;
  std::vector<std::string> bad;
  for (int n = 1; n <= 8; ++n) {
    const auto a = GroupAction::natural(PermGroup::symmetric(n));
    for (int k = 1; k <= 3; ++k) {
      const auto res = distinguishing_number_k(a, k);
      const int want = integer_root_ceil(n, k);
      if (res.number != want || res.witness.width != k || !is_distinguishing(a, res.witness)) {
        ok = false;
        bad.push_back("n=" + std::to_string(n) + ",k=" + std::to_string(k) + ":" + std::to_string(res.number));
      }
    }
  }
  return {ok, ok ? "24 (n,k) pairs match the integer k-th root" : "mismatches " + join(bad)};
}

Outcome check_abelian_subgroups(Context& ctx) {
  std::mt19937 rng(20240601);
  int done = 0;
  std::vector<std::string> bad;
  while (done < 20) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto& cat = ctx.catalog(n);
    std::vector<const PermGroup*> abelian;
    for (const auto& g : cat.subgroups) {
      if (g.is_abelian()) abelian.push_back(&g);
    }
    const auto& gamma = *abelian[std::uniform_int_distribution<std::size_t>(0, abelian.size() - 1)(rng)];
    std::vector<const PermGroup*> subs;
    for (const auto& h : cat.subgroups) {
      if (h.order() <= gamma.order() && h.is_subgroup_of(gamma)) subs.push_back(&h);
    }
    const auto& h = *subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
    const auto a = GroupAction::natural(gamma);
    const auto labeling = abelian_subgroup_labeling(a, h);
    if (!(label_stabilizer(a, labeling) == h) || labeling.max_color() > 2) {
      bad.push_back("S" + std::to_string(n) + " " + gamma.generators_to_string() + " / " + h.generators_to_string());
    }
    ++done;
  }
  return {bad.empty(), bad.empty() ? "20 pairs, stabilizer equals the target each time" : join(bad, "; ")};
}

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_set(const ConsumptionPoset& p) {
  EdgeSet out;
  for (const auto& [i, j] : p.hasse_edges()) out.emplace(p.partitions[i].compact(), p.partitions[j].compact());
  return out;
}

std::string describe_difference(const EdgeSet& got, const EdgeSet& want) {
  std::vector<std::string> extra, missing;
  for (const auto& e : got) {
    if (!want.count(e)) extra.push_back(e.first + "-" + e.second);
  }
  for (const auto& e : want) {
    if (!got.count(e)) missing.push_back(e.first + "-" + e.second);
  }
  std::string s;
  if (!extra.empty()) s += " extra {" + join(extra) + "}";
  if (!missing.empty()) s += " missing {" + join(missing) + "}";
  return s;
}

Outcome check_poset_figures(Context& ctx) {
  const EdgeSet want4{{"4", "31"}, {"4", "22"}, {"31", "211"}, {"22", "211"}, {"211", "1111"}};
  const EdgeSet want6{{"6", "51"},      {"51", "42"},     {"42", "411"},    {"411", "321"},
                      {"321", "3111"},  {"3111", "2211"}, {"2211", "21111"}, {"21111", "111111"},
                      {"51", "33"},     {"33", "222"},    {"222", "2211"},  {"411", "222"}};
  const auto got4 = edge_set(ctx.poset(4));
  const auto got6 = edge_set(ctx.poset(6));
  std::string detail = "n=4: " + std::to_string(got4.size()) + " edges" + (got4 == want4 ? " match" : describe_difference(got4, want4));
  detail += "; n=6: " + std::to_string(got6.size()) + " edges" + (got6 == want6 ? " match" : describe_difference(got6, want6));
  return {got4 == want4 && got6 == want6, detail};
}

Outcome check_consumption_examples(Context& ctx) {
  const auto klein = PermGroup::parse(4, "(1 2)(3 4),(1 3)(2 4)");
  const auto p31 = IntegerPartition::parse("31");
  const auto p22 = IntegerPartition::parse("22");
  const auto a = consumption_geq(p31, p22, ctx.catalog(4));
  const bool klein_ok = consumes(klein, p31) && !consumes(klein, p22);
  const auto b = consumption_geq(IntegerPartition::parse("32"), IntegerPartition::parse("311"), ctx.catalog(5));
  const auto c = consumption_geq(IntegerPartition::parse("411"), IntegerPartition::parse("222"), ctx.catalog(6));
  const auto c_rev = consumption_geq(IntegerPartition::parse("222"), IntegerPartition::parse("411"), ctx.catalog(6));
  std::ostringstream d;
  d << "(3,1)>=(2,2): " << (a.holds ? "yes" : "no");
  if (a.counterexample) d << " [witness " << a.counterexample->generators_to_string() << "]";
  d << ", Klein four " << (klein_ok ? "consumes (3,1) only" : "WRONG");
  d << "; (3,2)>=(3,1,1): " << (b.holds ? "yes" : "no");
  d << "; (4,1,1)>(2,2,2): " << (c.holds && !c_rev.holds ? "yes" : "no");
  return {!a.holds && a.counterexample && klein_ok && b.holds && c.holds && !c_rev.holds, d.str()};
}

Outcome check_poset_order(Context& ctx) {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const auto& p = ctx.poset(n);
    const auto dom = dominance_matrix(n);
    const std::size_t s = p.partitions.size();
    bool anti = true, trans = true, inside = true, refl = true;
    for (std::size_t i = 0; i < s; ++i) {
      refl = refl && p.geq[i][i];
      for (std::size_t j = 0; j < s; ++j) {
        if (i != j && p.geq[i][j] && p.geq[j][i]) anti = false;
        if (p.geq[i][j] && !dom[i][j]) inside = false;
        for (std::size_t k = 0; k < s; ++k) {
          if (p.geq[i][j] && p.geq[j][k] && !p.geq[i][k]) trans = false;
        }
      }
    }
    ok = ok && anti && trans && inside && refl;
    parts.push_back("n=" + std::to_string(n) + (anti && trans && inside && refl ? " ok" : " FAIL"));
  }
  return {ok, join(parts)};
}

Outcome dominance_comparison(Context& ctx, const std::vector<int>& equal, const std::vector<int>& unequal) {
  bool ok = true;
  std::vector<std::string> parts;
  auto relation_equal = [&](int n) { return ctx.poset(n).geq == dominance_matrix(n); };
  for (int n : equal) {
    const bool same = relation_equal(n);
    ok = ok && same;
    parts.push_back("n=" + std::to_string(n) + (same ? " equal" : " differ"));
  }
  for (int n : unequal) {
    const bool same = relation_equal(n);
    ok = ok && !same;
    parts.push_back("n=" + std::to_string(n) + (same ? " equal" : " differ"));
  }
  return {ok, join(parts)};
}

Outcome check_dominance(Context& ctx) { return dominance_comparison(ctx, {2, 3, 5}, {4, 6}); }
Outcome check_dominance_long(Context& ctx) { return dominance_comparison(ctx, {7}, {}); }

Outcome check_critical(Context& ctx) {
  int critical = 0, scanned = 0, lemma_checks = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 6; ++n) {
    ctx.note("critical graphs on " + std::to_string(n) + " vertices");
    for (const auto& g : enumerate_graphs(n)) {
      ++scanned;
      const int d = graph_distinguishing_number(g);
      if (is_distinguishing_critical(g)) {
        ++critical;
        if (!automorphism_group(g).is_transitive() || !g.is_regular()) bad.push_back("critical " + write_graph6(g));
      }
      if (n < 2) continue;
      for (int v = 0; v < n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < n; ++u) {
          if (u != v) keep.push_back(u);
        }
        ++lemma_checks;
        if (graph_distinguishing_number(induced_subgraph(g, keep)) < d - 1) {
          bad.push_back("deletion " + write_graph6(g) + " v" + std::to_string(v + 1));
        }
      }
    }
  }
  std::string detail = std::to_string(scanned) + " graphs, " + std::to_string(critical) + " critical, " +
                       std::to_string(lemma_checks) + " deletions";
  if (!bad.empty()) detail += "; failures: " + join(bad);
  return {bad.empty(), detail};
}

Outcome check_pair_labelings(Context& ctx) {
  int checked = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 5; ++n) {
    ctx.note("pair labelings on " + std::to_string(n) + " vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    // Every multigraph with edge multiplicities 0..2.
    std::vector<int> mult(pairs.size(), 0);
    for (;;) {
      const bool simple = std::all_of(mult.begin(), mult.end(), [](int m) { return m <= 1; });
      Graph g(n, simple ? GraphKind::simple : GraphKind::multigraph);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mult[e]) g.set(pairs[e].first, pairs[e].second, mult[e]);
      }
      const auto oracle = oracle_automorphisms(g);
      if (!(realized_subgroup(sym2_labeling(g)) == oracle) || !(automorphism_group(g) == oracle)) {
        bad.push_back("n=" + std::to_string(n) + " multigraph");
      }
      ++checked;
      std::size_t i = 0;
      while (i < mult.size() && ++mult[i] == 3) mult[i++] = 0;
      if (i == mult.size()) break;
    }
  }
  std::mt19937 rng(7771);
  for (int t = 0; t < 50; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    Graph g(n, GraphKind::digraph);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) g.set(u, v, 1);
      }
    }
    const auto oracle = oracle_automorphisms(g);
    if (!(realized_subgroup(tensor2_labeling(g)) == oracle) || !(automorphism_group(g) == oracle)) {
      bad.push_back("random digraph " + std::to_string(t));
    }
  }
  std::string detail = std::to_string(checked) + " (multi)graphs and 50 digraphs";
  if (!bad.empty()) detail += "; failures: " + join(bad);
  return {bad.empty(), detail};
}

Outcome check_density(Context& ctx) {
  const auto& cat = ctx.catalog(5);
  int closed = 0;
  for (const auto& h : cat.subgroups) {
    if (k_closure(h, 4) == h) ++closed;
  }
  const int d_alt = density(PermGroup::alternating(4));
  const int d_cyc = density(PermGroup::parse(4, "(1 2 3 4)"));
  std::ostringstream d;
  d << closed << "/" << cat.subgroups.size() << " subgroups of S_5 closed at k=4; density(A_4)=" << d_alt
    << ", density(<(1 2 3 4)>)=" << d_cyc;
  return {cat.subgroups.size() == 156 && closed == 156 && d_alt == 3 && d_cyc == 2, d.str()};
}

// Monomial m_lam evaluated at r ones: the number of distinct arrangements of
// lam padded with zeros to length r.
long long monomial_at_ones(const IntegerPartition& lam, int r) {
  if (lam.length() > r) return 0;
  long long v = 1;
  for (int i = r - lam.length() + 1; i <= r; ++i) v *= i;
  for (int m : lam.multiplicities()) {
    for (int i = 2; i <= m; ++i) v /= i;
  }
  return v;
}

Outcome check_polynomial(Context& ctx) {
  const auto& cat = ctx.catalog(4);
  int bad = 0;
  for (const auto& h : cat.subgroups) {
    const auto a = GroupAction::natural(h);
    const auto poly = distinguishing_counts(a);
    const auto dsf = dsf_monomial(a);
    if (poly.first_positive() != distinguishing_number(a).number || poly.first_positive() != oracle_distinguishing_number(a)) ++bad;
    for (int r = 1; r <= 4; ++r) {
      long long at_ones = 0;
      for (const auto& [lam, c] : dsf.coeffs) at_ones += c * monomial_at_ones(lam, r);
      if (at_ones != poly.evaluate(r) || at_ones != oracle_count(a, r)) ++bad;
    }
  }
  return {bad == 0, std::to_string(cat.subgroups.size()) + " subgroups, " + std::to_string(bad) + " mismatches"};
}

Outcome check_schur_scan(Context& ctx) {
  const std::vector<std::string> frozen{"EBj?", "EBj_", "EJeg", "ELv_"};
  const auto report = scan_graphs_schur(7, ctx.options.jobs);
  std::vector<std::string> found;
  bool all_six = true;
  for (const auto& e : report.exceptions) {
    found.push_back(e.graph6);
    all_six = all_six && e.n == 6;
  }
  const std::string detail = std::to_string(report.graphs_scanned) + " graphs, " + std::to_string(found.size()) +
                             " not Schur-positive: " + join(found, " ");
  return {found.size() == 4 && all_six && found == frozen, detail};
}

Outcome check_oracle(Context& ctx) {
  std::mt19937 rng(424242);
  std::vector<std::string> bad;
  for (int t = 0; t < 25; ++t) {
    GroupAction a = GroupAction::natural(PermGroup::trivial(1));
    if (t % 5 == 4) {
      // A coset action of a subgroup of S_4.
      const auto& cat = ctx.catalog(4);
      for (;;) {
        const auto& g = cat.subgroups[std::uniform_int_distribution<std::size_t>(1, cat.subgroups.size() - 1)(rng)];
        const auto& h = cat.subgroups[std::uniform_int_distribution<std::size_t>(0, cat.subgroups.size() - 1)(rng)];
        if (!h.is_subgroup_of(g) || g.order() / h.order() > 6) continue;
        try {
          a = coset_action(g, h);
          break;
        } catch (const std::invalid_argument&) {
          // not faithful
        }
      }
    } else {
      const int m = std::uniform_int_distribution<int>(1, 6)(rng);
      const int gens = std::uniform_int_distribution<int>(1, 2)(rng);
      std::vector<Permutation> gs;
      std::vector<int> img(static_cast<std::size_t>(m));
      for (int i = 0; i < gens; ++i) {
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        gs.push_back(Permutation::from_images(img));
      }
      a = GroupAction::natural(PermGroup::generate(m, gs));
    }
    const int fast = distinguishing_number(a).number;
    const int naive = oracle_distinguishing_number(a);
    if (fast != naive) bad.push_back("action " + std::to_string(t) + ": " + std::to_string(fast) + " vs " + std::to_string(naive));
  }
  return {bad.empty(), bad.empty() ? "25 random actions agree with the r^|X| enumeration" : join(bad, "; ")};
}

struct Entry {
  CriterionInfo info;
  std::function<Outcome(Context&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"AC01-cycles", "cycle graphs need 3 colors up to 5 vertices, 2 from 6 to 10"}, check_cycles},
      {{"AC02-complete", "complete graphs K_n need n colors, n <= 7"}, check_complete},
      {{"AC03-complement", "complements have equal distinguishing number on 6 vertices"}, check_complement},
      {{"AC04-sn-action", "S_n on n+2 points has distinguishing number n-1, n = 3..6"}, check_sn_action},
      {{"AC05-label-bound", "label-and-stabilize uses at most k labels when |H| <= k!, H <= S_4"}, check_label_bound},
      {{"AC06-power-actions", "tuple labelings of S_n need the ceiling k-th root of n, n <= 8, k <= 3"}, check_power_actions},
      {{"AC07-abelian-subgroups", "two-color labelings realize every subgroup of an abelian group"}, check_abelian_subgroups},
      {{"AC08-poset-figures", "consumption Hasse diagrams for n = 4 and n = 6"}, check_poset_figures},
      {{"AC09-consumption-examples", "Klein four witness, (3,2) >= (3,1,1), (4,1,1) > (2,2,2)"}, check_consumption_examples},
      {{"AC10-poset-order", "consumption is a partial order inside dominance, n = 2..6"}, check_poset_order},
      {{"AC11-dominance", "consumption equals dominance for n = 2, 3, 5 and differs for n = 4, 6"}, check_dominance},
      {{"AC11L-dominance-n7", "consumption equals dominance for n = 7", true}, check_dominance_long},
      {{"AC12-critical", "critical graphs are vertex-transitive; deleting a vertex lowers D by at most 1"}, check_critical},
      {{"AC13-pair-labelings", "pair labelings realize exactly the automorphism group"}, check_pair_labelings},
      {{"AC14-density", "(n-1)-closure of subgroups of S_5; densities of A_4 and C_4"}, check_density},
      {{"AC15-polynomial", "distinguishing polynomial and symmetric function agree, H <= S_4"}, check_polynomial},
      {{"AC16-schur-scan", "exactly four graphs on <= 7 vertices are not Schur-positive"}, check_schur_scan},
      {{"AC17-oracle", "set-partition search agrees with brute force on random actions"}, check_oracle},
  };
  return entries;
}

bool selected(const std::string& selector, const std::string& id) {
  if (selector == id) return true;
  const auto dash = id.find('-');
  return selector == id.substr(0, dash);
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<CriterionResult> run_criteria(const std::string& selector, const VerifyOptions& options) {
  std::vector<const Entry*> chosen;
  for (const auto& e : registry()) {
    if (selector == "all") {
      if (!e.info.long_run || options.long_run) chosen.push_back(&e);
    } else if (selected(selector, e.info.id)) {
      if (e.info.long_run && !options.long_run) throw std::invalid_argument(e.info.id + " needs --long");
      chosen.push_back(&e);
    }
  }
  if (chosen.empty()) throw std::invalid_argument("unknown criterion: " + selector);
  Context ctx(options);
  std::vector<CriterionResult> results;
  for (const auto* e : chosen) {
    if (options.progress) *options.progress << "running " << e->info.id << '\n' << std::flush;
    CriterionResult r;
    r.id = e->info.id;
    r.title = e->info.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto o = e->run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "PASS " : "FAIL ") + r.id + "  " + r.title + " (" + secs + "s): " + r.detail;
}

}  // namespace disting
