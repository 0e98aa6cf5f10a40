#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "disting/graph.hpp"
#include "doctest.h"

using namespace disting;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1U) g.set(u, v);
    }
  }
  return g;
}

Graph from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (mask >> bit & 1U) g.set(u, v);
    }
  }
  return g;
}

std::uint32_t to_mask(const Graph& g) {
  std::uint32_t mask = 0;
  int bit = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.adjacent(u, v)) mask |= 1U << bit;
    }
  }
  return mask;
}

// Number of isomorphism classes by minimizing over every relabeling.
std::size_t naive_class_count(int n) {
  const auto perms = all_perms(n);
  std::set<std::uint32_t> seen;
  const int bits = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
    const Graph g = from_mask(n, mask);
    std::uint32_t best = mask;
    for (const auto& p : perms) best = std::min(best, to_mask(g.relabeled(p)));
    seen.insert(best);
  }
  return seen.size();
}

std::size_t naive_aut_order(const Graph& g) {
  std::size_t count = 0;
  for (const auto& p : all_perms(g.order())) count += g.relabeled(p) == g;
  return count;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.set(i, (i + 1) % 5);
    g.set(i, i + 5);
    g.set(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST_CASE("graph6 input and output") {
  const auto k4 = parse_graph6("C~");
  CHECK(k4 == Graph::complete(4));
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
  const auto p3 = parse_graph6("Bg");
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(1) == 2);
  CHECK(write_graph6(Graph::complete(4)) == "C~");
  CHECK(write_graph6(Graph::cycle(5)) == "Dhc");
  CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("C\x01"), std::invalid_argument);

  std::mt19937 rng(5);
  for (int n = 0; n <= 10; ++n) {
    const auto g = random_graph(n, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("edge lists") {
  const auto c5 = parse_edge_list("5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  CHECK(c5 == Graph::cycle(5));
  CHECK(parse_edge_list(write_edge_list(c5)) == c5);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 2\n2 3\n"), std::invalid_argument);
}

TEST_CASE("dot output") {
  const auto dot = write_dot(Graph::path(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("v1 -- v2") != std::string::npos);
  CHECK(dot.find("v2 -- v3") != std::string::npos);
  const auto l = Labeling::scalar({1, 2, 1});
  CHECK(write_dot(Graph::path(3), &l).find("v2 [label=\"2:2\"]") != std::string::npos);
  Graph d(2, GraphKind::digraph);
  d.set(0, 1);
  CHECK(write_dot(d).find("digraph G {") == 0);
  CHECK(write_dot(d).find("v1 -> v2") != std::string::npos);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(Graph::complete(4)).order() == 24);
  CHECK(automorphism_group(Graph::cycle(5)).order() == 10);
  CHECK(automorphism_group(Graph::path(3)).order() == 2);
  CHECK(automorphism_group(petersen()).order() == 120);
  Graph d(4, GraphKind::digraph);
  for (int i = 0; i < 4; ++i) d.set(i, (i + 1) % 4);
  CHECK(automorphism_group(d) == PermGroup::cyclic(4));
  Graph m(3, GraphKind::multigraph);
  m.set(0, 1, 2);
  m.set(1, 2, 1);
  CHECK(automorphism_group(m).is_trivial());

  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(1 + t % 6, rng);
    const auto aut = automorphism_group(g);
    CHECK(aut.order() == naive_aut_order(g));
    for (const auto& p : aut.elements()) CHECK(g.relabeled(p) == g);
  }
}

TEST_CASE("canonical forms are relabeling invariant") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 8;
    const auto g = random_graph(n, rng);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const auto h = g.relabeled(Permutation::from_images(img));
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(canonical_form(g) == canonical_form(h));
    if (n <= 6) CHECK(naive_aut_order(g) == naive_aut_order(canonical_form(g)));
  }
  CHECK(canonical_graph6(Graph::path(3)) != canonical_graph6(Graph::complete(3)));
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_graphs(n).size() == naive_class_count(n));
  std::set<std::string> codes;
  for (const auto& g : enumerate_graphs(6)) codes.insert(canonical_graph6(g));
  CHECK(codes.size() == 156);
}

TEST_CASE("distinguishing numbers of graphs") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(graph_distinguishing_number(Graph::complete(n)) == n);
    CHECK(graph_distinguishing_number(Graph(n)) == n);
  }
  for (int n = 3; n <= 5; ++n) CHECK(graph_distinguishing_number(Graph::cycle(n)) == 3);
  for (int n = 6; n <= 10; ++n) CHECK(graph_distinguishing_number(Graph::cycle(n)) == 2);
  for (int n = 2; n <= 8; ++n) CHECK(graph_distinguishing_number(Graph::path(n)) == 2);
  CHECK(graph_distinguishing_number(petersen()) == 3);
  const auto res = graph_distinguishing(Graph::cycle(5));
  CHECK(is_distinguishing(automorphism_action(Graph::cycle(5)), res.witness));
}

TEST_CASE("complements share the distinguishing number") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      CHECK(graph_distinguishing_number(g) == graph_distinguishing_number(complement(g)));
    }
  }
  CHECK(complement(Graph::complete(4)) == Graph(4));
  CHECK(canonical_graph6(complement(Graph::cycle(5))) == canonical_graph6(Graph::cycle(5)));
}

TEST_CASE("deleting a vertex lowers the distinguishing number by at most one") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const int d = graph_distinguishing_number(g);
      for (int v = 0; v < n; ++v) {
        std::vector<int> rest;
        for (int u = 0; u < n; ++u) {
          if (u != v) rest.push_back(u);
        }
        CHECK(graph_distinguishing_number(induced_subgraph(g, rest)) >= d - 1);
      }
    }
  }
}

TEST_CASE("induced subgraphs") {
  const auto sub = induced_subgraph(Graph::cycle(5), std::vector<int>{0, 1, 2});
  CHECK(sub == Graph::path(3));
  CHECK_THROWS_AS(induced_subgraph(Graph::cycle(5), std::vector<int>{0, 0}), std::invalid_argument);
  // K_6 plus a vertex joined to three of its vertices.
  Graph g(7);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) g.set(u, v);
  }
  for (int u = 0; u < 3; ++u) g.set(u, 6);
  CHECK(graph_distinguishing_number(g) == 3);
  std::vector<int> k6{0, 1, 2, 3, 4, 5};
  CHECK(graph_distinguishing_number(induced_subgraph(g, k6)) == 6);
}

TEST_CASE("distinguishing-critical graphs") {
  CHECK(is_distinguishing_critical(Graph::complete(2)));
  CHECK(is_distinguishing_critical(Graph::complete(1)));
  CHECK_FALSE(is_distinguishing_critical(Graph::path(3)));
  CHECK(is_distinguishing_critical(Graph::complete(4)));
  CHECK(is_distinguishing_critical(Graph::cycle(5)));
  CHECK_FALSE(is_distinguishing_critical(Graph::cycle(6)));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (!is_distinguishing_critical(g)) continue;
      CHECK(automorphism_group(g).is_transitive());
      CHECK(g.is_regular());
    }
  }
}

TEST_CASE("two-transitive automorphism groups") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (!automorphism_group(g).is_two_transitive()) continue;
      CHECK((g.edge_count() == 0 || g == Graph::complete(n)));
    }
  }
}
