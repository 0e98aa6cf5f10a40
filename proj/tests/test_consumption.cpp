#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "disting/action.hpp"
#include "disting/catalog.hpp"
#include "disting/consumption.hpp"
#include "doctest.h"

using namespace disting;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edges_of(const ConsumptionPoset& p) {
  EdgeSet out;
  for (const auto& [i, j] : p.hasse_edges()) out.emplace(p.partitions[i].compact(), p.partitions[j].compact());
  return out;
}

const SubgroupCatalog& catalog(int n) {
  static std::map<int, SubgroupCatalog> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, subgroup_catalog(n)).first;
  return it->second;
}

const ConsumptionPoset& poset(int n) {
  static std::map<int, ConsumptionPoset> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, consumption_poset(catalog(n))).first;
  return it->second;
}

// Every labeling of [n] by block indices of the given sizes, checked directly.
bool naive_consumes(const PermGroup& h, const IntegerPartition& lam) {
  const int n = lam.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> room(lam.parts());
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) {
      for (const auto& g : h.elements()) {
        if (g.is_identity()) continue;
        bool keeps = true;
        for (int y = 0; y < n && keeps; ++y) keeps = label[static_cast<std::size_t>(g(y))] == label[static_cast<std::size_t>(y)];
        if (keeps) return false;
      }
      return true;
    }
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] == 0) continue;
      --room[b];
      label[static_cast<std::size_t>(x)] = static_cast<int>(b);
      const bool ok = rec(x + 1);
      ++room[b];
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

// Partitions obtained by splitting one part of lam into two.
std::vector<IntegerPartition> one_block_splits(const IntegerPartition& lam) {
  std::vector<IntegerPartition> out;
  for (std::size_t i = 0; i < lam.parts().size(); ++i) {
    for (int a = 1; a < lam[i]; ++a) {
      std::vector<int> parts(lam.parts());
      parts[i] = a;
      parts.push_back(lam[i] - a);
      std::sort(parts.rbegin(), parts.rend());
      out.emplace_back(parts);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("consuming partitions") {
  const auto klein = PermGroup::parse(4, "(1 2)(3 4),(1 3)(2 4)");
  const auto w = consuming_partition(klein, IntegerPartition::parse("31"));
  REQUIRE(w.has_value());
  CHECK(w->weight() == IntegerPartition({3, 1}));
  CHECK_FALSE(consumes(klein, IntegerPartition::parse("22")));
  CHECK(consumes(PermGroup::symmetric(4), IntegerPartition::parse("1111")));
  CHECK_FALSE(consumes(PermGroup::symmetric(4), IntegerPartition::parse("211")));
  CHECK(consumes(PermGroup::trivial(4), IntegerPartition::parse("4")));
  CHECK_FALSE(consumes(PermGroup::cyclic(4), IntegerPartition::parse("4")));

  for (const auto& h : catalog(4).subgroups) {
    for (const auto& lam : partitions_of(4)) {
      const auto part = consuming_partition(h, lam);
      CHECK(part.has_value() == naive_consumes(h, lam));
      if (part) {
        CHECK(part->weight() == lam);
        CHECK(label_stabilizer(GroupAction::natural(h), Labeling::scalar(part->labels())).is_trivial());
      }
    }
  }
}

TEST_CASE("consumption comparisons") {
  const auto& c4 = catalog(4);
  const auto a = consumption_geq(IntegerPartition::parse("31"), IntegerPartition::parse("22"), c4);
  CHECK_FALSE(a.holds);
  REQUIRE(a.counterexample.has_value());
  CHECK(consumes(*a.counterexample, IntegerPartition::parse("31")));
  CHECK_FALSE(consumes(*a.counterexample, IntegerPartition::parse("22")));
  CHECK(consumption_geq(IntegerPartition::parse("32"), IntegerPartition::parse("311"), catalog(5)).holds);
  const auto& c6 = catalog(6);
  CHECK(consumption_geq(IntegerPartition::parse("411"), IntegerPartition::parse("222"), c6).holds);
  CHECK_FALSE(consumption_geq(IntegerPartition::parse("222"), IntegerPartition::parse("411"), c6).holds);
  CHECK(consumption_geq(IntegerPartition::parse("33"), IntegerPartition::parse("321"), c6).holds);
  CHECK_FALSE(consumption_geq(IntegerPartition::parse("42"), IntegerPartition::parse("33"), c6).holds);
}

TEST_CASE("small Hasse diagrams") {
  CHECK(edges_of(poset(2)) == EdgeSet{{"2", "11"}});
  CHECK(edges_of(poset(3)) == EdgeSet{{"3", "21"}, {"21", "111"}});
  const EdgeSet want4{{"4", "31"}, {"4", "22"}, {"31", "211"}, {"22", "211"}, {"211", "1111"}};
  CHECK(edges_of(poset(4)) == want4);
}

TEST_CASE("Hasse diagram for n = 6") {
  const EdgeSet drawn{{"6", "51"},      {"51", "42"},     {"42", "411"},     {"411", "321"},
                      {"321", "3111"},  {"3111", "2211"}, {"2211", "21111"}, {"21111", "111111"},
                      {"51", "33"},     {"33", "222"},    {"222", "2211"},   {"411", "222"}};
  auto got = edges_of(poset(6));
  CHECK(got.size() == 13);
  CHECK(got.count({"33", "321"}) == 1);
  got.erase({"33", "321"});
  CHECK(got == drawn);
}

TEST_CASE("splitting a block preserves consumption") {
  const auto& cat = catalog(6);
  for (const auto& h : cat.subgroups) {
    for (const auto& lam : partitions_of(6)) {
      if (!consumes(h, lam)) continue;
      for (const auto& mu : one_block_splits(lam)) CHECK(consumes(h, mu));
    }
  }
}

TEST_CASE("consumption is invariant under conjugation") {
  for (int n = 2; n <= 5; ++n) {
    const auto& cat = catalog(n);
    for (std::size_t i = 0; i < cat.subgroups.size(); ++i) {
      const auto& rep = cat.subgroups[cat.conjugacy_reps[cat.class_of[i]]];
      for (const auto& lam : partitions_of(n)) CHECK(consumes(cat.subgroups[i], lam) == consumes(rep, lam));
    }
  }
}

TEST_CASE("poset shape") {
  for (int n = 2; n <= 6; ++n) {
    const auto& p = poset(n);
    const auto top = p.index_of(IntegerPartition({n}));
    const auto bottom = p.index_of(IntegerPartition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    const auto dom = dominance_matrix(n);
    for (std::size_t i = 0; i < p.partitions.size(); ++i) {
      CHECK(p.geq[top][i]);
      CHECK(p.geq[i][bottom]);
      for (std::size_t j = 0; j < p.partitions.size(); ++j) {
        if (p.geq[i][j]) CHECK(dom[i][j]);
        if (!p.geq[i][j]) {
          REQUIRE(p.witness[i][j].has_value());
          const auto& h = catalog(n).subgroups[*p.witness[i][j]];
          CHECK(consumes(h, p.partitions[i]));
          CHECK_FALSE(consumes(h, p.partitions[j]));
        }
      }
    }
  }
  CHECK(poset(5).geq == dominance_matrix(5));
  CHECK_FALSE(poset(4).geq == dominance_matrix(4));
  CHECK_THROWS_AS(poset(4).index_of(IntegerPartition({3})), std::invalid_argument);
}

TEST_CASE("distinguishing number is the shortest consumed partition") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& h : catalog(n).subgroups) {
      int shortest = n + 1;
      for (const auto& lam : partitions_of(n)) {
        if (consumes(h, lam)) shortest = std::min(shortest, lam.length());
      }
      CHECK(shortest == distinguishing_number(GroupAction::natural(h)).number);
    }
  }
}

TEST_CASE("poset dot output") {
  for (int n = 2; n <= 5; ++n) {
    const auto& p = poset(n);
    const auto dot = poset_to_dot(p);
    CHECK(dot.find("digraph consumption_" + std::to_string(n) + " {") == 0);
    CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '[')) == p.partitions.size());
    std::size_t arrows = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
    CHECK(arrows == p.hasse_edges().size());
  }
  CHECK(poset_to_dot(poset(4)).find("p31 -> p211;") != std::string::npos);
}
