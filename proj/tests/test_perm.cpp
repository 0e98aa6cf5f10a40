#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "disting/catalog.hpp"
#include "disting/partition.hpp"
#include "disting/perm.hpp"
#include "doctest.h"

using namespace disting;

namespace {

Permutation cyc(int n, const char* text) { return Permutation::from_cycles(n, text); }

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Every subset of S_n containing the identity and closed under products,
// found by include/exclude backtracking over the elements.
std::set<std::vector<Permutation>> closed_subsets(int n) {
  const auto elems = all_perms(n);
  const std::size_t m = elems.size();
  std::vector<std::vector<std::size_t>> prod(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      prod[a][b] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), elems[a] * elems[b]) - elems.begin());
    }
  }
  std::vector<int> state(m, -1);  // -1 undecided, 0 out, 1 in
  std::set<std::vector<Permutation>> found;
  auto consistent = [&] {
    for (std::size_t a = 0; a < m; ++a) {
      if (state[a] != 1) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (state[b] == 1 && state[prod[a][b]] == 0) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (!consistent()) return;
    if (i == m) {
      std::vector<Permutation> s;
      for (std::size_t a = 0; a < m; ++a) {
        if (state[a] == 1) s.push_back(elems[a]);
      }
      found.insert(s);
      return;
    }
    for (int choice : {1, 0}) {
      if (i == 0 && choice == 0) continue;  // identity is first in lex order
      state[i] = choice;
      rec(i + 1);
    }
    state[i] = -1;
  };
  rec(0);
  return found;
}

// Class count by the least conjugate element set of each subgroup.
std::size_t conjugacy_class_count(const SubgroupCatalog& cat) {
  const auto sn = all_perms(cat.n);
  std::set<std::vector<Permutation>> keys;
  for (const auto& h : cat.subgroups) {
    std::vector<Permutation> best;
    for (const auto& g : sn) {
      auto c = h.conjugate(g).elements();
      if (best.empty() || c < best) best = std::move(c);
    }
    keys.insert(best);
  }
  return keys.size();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("disting-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("cycle notation and composition") {
  const auto p = cyc(4, "(1 2 3)");
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK(p.to_cycles() == "(1 2 3)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
  // (p*q)(x) = p(q(x))
  const auto q = cyc(4, "(1 2)");
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * q).to_cycles() == "(1 3)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(cyc(6, "(1 2)(3 4 5)").order() == 6);
  CHECK(p.is_even());
  CHECK_FALSE(q.is_even());
  CHECK(Permutation::from_cycles(5, cyc(5, "(1 5)(2 4 3)").to_cycles()) == cyc(5, "(1 5)(2 4 3)"));
  CHECK_THROWS_AS(cyc(3, "(1 4)"), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, "(1 2 1)"), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, "(1 2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images(std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(3);
  const auto s5 = all_perms(5);
  for (int t = 0; t < 200; ++t) {
    const auto& a = s5[rng() % s5.size()];
    const auto& b = s5[rng() % s5.size()];
    const auto& c = s5[rng() % s5.size()];
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("group generation") {
  CHECK(PermGroup::generate(3, {cyc(3, "(1 2 3)")}).order() == 3);
  const auto klein = PermGroup::generate(4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  CHECK(klein.order() == 4);
  CHECK(PermGroup::generate(4, {cyc(4, "(1 2)"), cyc(4, "(1 2 3 4)")}).order() == 24);
  CHECK(PermGroup::parse(4, "(1 2)(3 4),(1 3)(2 4)") == klein);
  CHECK_THROWS_AS(PermGroup::generate(4, {cyc(3, "(1 2)")}), std::invalid_argument);

  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::cyclic(6).order() == 6);
  CHECK(PermGroup::dihedral(5).order() == 10);
  CHECK(PermGroup::dihedral(4).is_transitive());
  CHECK(PermGroup::alternating(4).is_two_transitive());
  CHECK_FALSE(PermGroup::dihedral(5).is_two_transitive());
  CHECK(klein.is_abelian());
  CHECK_FALSE(PermGroup::symmetric(3).is_abelian());
}

TEST_CASE("closure idempotence and Lagrange") {
  const auto cat = subgroup_catalog(4);
  for (const auto& g : cat.subgroups) {
    CHECK(PermGroup::generate(4, g.elements()) == g);
    CHECK(PermGroup::from_elements(4, g.elements()) == g);
    CHECK(24 % g.order() == 0);
    for (const auto& gen : g.generators()) CHECK(g.contains(gen));
  }
  for (const auto& g : cat.subgroups) {
    for (const auto& h : cat.subgroups) {
      if (h.is_subgroup_of(g)) CHECK(g.order() % h.order() == 0);
    }
  }
  CHECK_THROWS_AS(PermGroup::from_elements(3, {Permutation::identity(3), cyc(3, "(1 2 3)")}), std::invalid_argument);
}

TEST_CASE("normality") {
  const auto s4 = PermGroup::symmetric(4);
  CHECK(is_normal(PermGroup::alternating(4), s4));
  CHECK_FALSE(is_normal(PermGroup::parse(3, "(1 2)"), PermGroup::symmetric(3)));
  CHECK(is_normal(PermGroup::parse(4, "(1 2)(3 4),(1 3)(2 4)"), s4));
  CHECK_THROWS_AS(is_normal(PermGroup::parse(4, "(1 2)"), PermGroup::alternating(4)), std::invalid_argument);
}

TEST_CASE("orbits and stabilizers") {
  const auto g = PermGroup::parse(5, "(1 2),(3 4 5)");
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  const std::vector<int> pts{2};
  CHECK(g.pointwise_stabilizer(pts).order() == 2);
  CHECK(PermGroup::symmetric(4).pointwise_stabilizer(std::vector<int>{0, 1}).order() == 2);
}

TEST_CASE("subgroup catalog counts") {
  const std::vector<std::size_t> subgroups{1, 2, 6, 30, 156, 1455};
  const std::vector<std::size_t> classes{1, 2, 4, 11, 19, 56};
  for (int n = 1; n <= 6; ++n) {
    const auto cat = subgroup_catalog(n);
    CHECK(cat.subgroups.size() == subgroups[static_cast<std::size_t>(n - 1)]);
    CHECK(cat.conjugacy_reps.size() == classes[static_cast<std::size_t>(n - 1)]);
    CHECK(cat.subgroups.front().is_trivial());
    CHECK(cat.subgroups.back().order() == PermGroup::symmetric(n).order());
    std::set<std::vector<Permutation>> distinct;
    for (const auto& h : cat.subgroups) distinct.insert(h.elements());
    CHECK(distinct.size() == cat.subgroups.size());
  }
}

TEST_CASE("catalog matches subset-closure enumeration") {
  for (int n = 1; n <= 4; ++n) {
    const auto oracle = closed_subsets(n);
    std::set<std::vector<Permutation>> computed;
    for (const auto& h : subgroup_catalog(n).subgroups) computed.insert(h.elements());
    CHECK(computed == oracle);
  }
}

TEST_CASE("conjugacy classes match an independent count") {
  for (int n = 1; n <= 5; ++n) {
    const auto cat = subgroup_catalog(n);
    CHECK(conjugacy_class_count(cat) == cat.conjugacy_reps.size());
    CHECK(conjugacy_reps(cat).size() == cat.conjugacy_reps.size());
    for (std::size_t i = 0; i < cat.subgroups.size(); ++i) {
      const auto rep = cat.conjugacy_reps[cat.class_of[i]];
      CHECK(rep <= i);
      CHECK(cat.subgroups[rep].order() == cat.subgroups[i].order());
    }
  }
}

TEST_CASE("catalog is closed under conjugation") {
  for (int n = 2; n <= 4; ++n) {
    const auto cat = subgroup_catalog(n);
    std::set<std::vector<Permutation>> all;
    for (const auto& h : cat.subgroups) all.insert(h.elements());
    for (const auto& h : cat.subgroups) {
      for (const auto& g : all_perms(n)) CHECK(all.count(h.conjugate(g).elements()) == 1);
    }
  }
}

TEST_CASE("catalog range and long-run gate") {
  CHECK_THROWS_AS(subgroup_catalog(0), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_catalog(8), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_catalog(7), std::invalid_argument);
}

TEST_CASE("catalog cache round trip and corruption") {
  TempDir dir;
  const CatalogCache cache(dir.path);
  CHECK_FALSE(cache.contains(4));
  CatalogOptions o;
  o.cache = &cache;
  const auto first = subgroup_catalog(4, o);
  CHECK(cache.contains(4));
  const auto second = subgroup_catalog(4, o);
  CHECK(second.subgroups.size() == first.subgroups.size());
  for (std::size_t i = 0; i < first.subgroups.size(); ++i) CHECK(first.subgroups[i] == second.subgroups[i]);
  CHECK(second.conjugacy_reps == first.conjugacy_reps);

  // Flip a digit in the body: the checksum rejects the file and it is rebuilt.
  const auto file = cache.file_for(4);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find_first_of("123456789", text.find('\n', text.find("count")) + 1);
  REQUIRE(pos != std::string::npos);
  text[pos] = text[pos] == '9' ? '8' : static_cast<char>(text[pos] + 1);
  {
    std::ofstream out(file);
    out << text;
  }
  CHECK_FALSE(cache.load(4).has_value());
  const auto third = subgroup_catalog(4, o);
  CHECK(third.subgroups.size() == 30);
  CHECK(cache.contains(4));
  CHECK(cache.clear() == 1);
  CHECK_FALSE(cache.contains(4));
}

TEST_CASE("cache directory from the environment") {
  setenv("DISTING_CACHE_DIR", "/tmp/disting-env-check", 1);
  CHECK(CatalogCache::from_environment().dir() == std::filesystem::path("/tmp/disting-env-check"));
}

TEST_CASE("integer partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(7).size() == 15);
  REQUIRE(partitions_of(0).size() == 1);
  CHECK(partitions_of(0).front().length() == 0);
  const auto p4 = partitions_of(4);
  CHECK(p4.front().to_string() == "(4)");
  CHECK(p4[1].to_string() == "(3,1)");
  CHECK(p4.back().to_string() == "(1,1,1,1)");
  CHECK(IntegerPartition::parse("1,3") == IntegerPartition({3, 1}));
  CHECK(IntegerPartition::parse("3 1 1") == IntegerPartition::parse("311"));
  CHECK(IntegerPartition::parse("311").compact() == "311");
  CHECK_THROWS_AS(IntegerPartition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerPartition::parse("3,x"), std::invalid_argument);
  CHECK(IntegerPartition({3, 1, 1}).multiplicities() == std::vector<int>{0, 2, 0, 1});
}

TEST_CASE("dominance") {
  const auto p = [](const char* s) { return IntegerPartition::parse(s); };
  CHECK(dominance_geq(p("31"), p("22")));
  CHECK_FALSE(dominance_geq(p("22"), p("31")));
  for (const auto& mu : partitions_of(6)) CHECK(dominance_geq(p("6"), mu));
  CHECK_FALSE(dominance_geq(p("411"), p("33")));
  CHECK_FALSE(dominance_geq(p("33"), p("411")));
  CHECK_THROWS_AS(dominance_geq(p("3"), p("22")), std::invalid_argument);
}

TEST_CASE("set partitions") {
  const auto p = [](const char* s) { return IntegerPartition::parse(s); };
  const auto twos = set_partitions_of_type(4, p("22"));
  REQUIRE(twos.size() == 3);
  CHECK(twos[0].to_string() == "{1,2|3,4}");
  CHECK(twos[1].to_string() == "{1,3|2,4}");
  CHECK(twos[2].to_string() == "{1,4|2,3}");
  CHECK(set_partitions_of_type(4, p("4")).size() == 1);
  CHECK(set_partitions_of_type(4, p("1111")).size() == 1);
  CHECK(set_partitions_of_type(6, p("222")).size() == 15);
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(6, 3) == 90);
  long long bell = 0;
  for_each_rgs(6, 6, [&](const std::vector<int>&) {
    ++bell;
    return true;
  });
  CHECK(bell == 203);
  const auto sp = SetPartition::from_labels({7, 3, 7, 5});
  CHECK(sp.rgs() == std::vector<int>{0, 1, 0, 2});
  CHECK(sp.weight() == p("211"));
  CHECK(sp.labels() == std::vector<int>{1, 2, 1, 3});
}
