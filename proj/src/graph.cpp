#include "disting/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace disting {

Graph::Graph(int n, GraphKind kind) : n_(n), kind_(kind) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n * n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set(u, v, 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set(u, v);
  }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int u = 0; u < n && n >= 3; ++u) g.set(u, (u + 1) % n);
  if (n == 2) g.set(0, 1);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.set(u, u + 1);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::set(int u, int v, int multiplicity) {
  check_vertex(u);
  check_vertex(v);
  if (multiplicity < 0 || multiplicity > 255) throw std::invalid_argument("edge multiplicity out of range");
  if (kind_ != GraphKind::digraph && u == v && multiplicity != 0) {
    throw std::invalid_argument("loops are only allowed in digraphs");
  }
  if (kind_ == GraphKind::simple && multiplicity > 1) throw std::invalid_argument("simple graphs have multiplicity <= 1");
  adj_[static_cast<std::size_t>(u * n_ + v)] = static_cast<std::uint8_t>(multiplicity);
  if (kind_ != GraphKind::digraph) adj_[static_cast<std::size_t>(v * n_ + u)] = static_cast<std::uint8_t>(multiplicity);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += at(v, u);
  return d;
}

int Graph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (kind_ == GraphKind::digraph || u < v) m += at(u, v);
    }
  }
  return m;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

Graph Graph::relabeled(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("relabeling degree differs from graph order");
  Graph h(n_, kind_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) h.adj_[static_cast<std::size_t>(p(u) * n_ + p(v))] = adj_[static_cast<std::size_t>(u * n_ + v)];
  }
  return h;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text) {
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126) {
      throw std::invalid_argument("graph6: character outside 63..126");
    }
  }
  const int size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == 126) throw std::invalid_argument("graph6: graphs with more than 62 vertices are not supported");
  const int n = size_byte - 63;
  if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: more than 10 vertices");
  const int bits = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - 1 != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                                ", got " + std::to_string(text.size() - 1));
  }
  Graph g(n);
  int k = 0;
  auto bit = [&](int index) {
    const int byte = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + index / 6)]) - 63;
    return (byte >> (5 - index % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit(k++)) g.set(i, j);
    }
  }
  for (int index = bits; index < static_cast<int>(expected) * 6; ++index) {
    if (bit(index)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.kind() != GraphKind::simple) throw std::invalid_argument("graph6 encodes simple graphs only");
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, count = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++count == 6) {
        out += static_cast<char>(63 + acc);
        acc = count = 0;
      }
    }
  }
  if (count) out += static_cast<char>(63 + (acc << (6 - count)));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: expected header \"n m\"");
  Graph g(n);
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    if (u < 1 || v < 1 || u > n || v > n || u == v) throw std::invalid_argument("edge list: bad edge");
    g.set(u - 1, v - 1);
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("edge list: trailing data");
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) out << u + 1 << ' ' << v + 1 << '\n';
    }
  }
  return out.str();
}

std::string write_dot(const Graph& g, const Labeling* labeling) {
  std::ostringstream out;
  const bool directed = g.kind() == GraphKind::digraph;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  v" << v + 1 << " [label=\"" << v + 1;
    if (labeling) out << ':' << labeling->color(v);
    out << "\"];\n";
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = directed ? 0 : u + 1; v < g.order(); ++v) {
      for (int k = 0; k < g.at(u, v); ++k) out << "  v" << u + 1 << (directed ? " -> " : " -- ") << 'v' << v + 1 << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

PermGroup automorphism_group(const Graph& g) {
  const int n = g.order();
  struct Signature {
    int out, in, loop;
    bool operator==(const Signature&) const = default;
  };
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int in = 0;
    for (int u = 0; u < n; ++u) in += g.at(u, v);
    sig[static_cast<std::size_t>(v)] = {g.degree(v), in, g.at(v, v)};
  }
  std::vector<Permutation> autos;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      autos.push_back(Permutation::from_images(image));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || !(sig[static_cast<std::size_t>(c)] == sig[static_cast<std::size_t>(i)])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int pj = image[static_cast<std::size_t>(j)];
        ok = g.at(i, j) == g.at(c, pj) && g.at(j, i) == g.at(pj, c);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(c)] = true;
      image[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  rec(0);
  return PermGroup::from_elements(n, std::move(autos));
}

namespace {

// Minimal graph6 bit string over all relabelings, returned with the
// permutation sigma (canonical position -> original vertex) achieving it.
std::vector<int> canonical_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> sigma(static_cast<std::size_t>(n)), best_sigma;
  std::vector<std::uint32_t> columns(static_cast<std::size_t>(n), 0), best(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool have_best = false;
  // -1, 0, 1 as columns[0..j] is below, equal to, or above the same prefix of best.
  auto compare_prefix = [&](int j) {
    for (int i = 0; i <= j; ++i) {
      const auto a = columns[static_cast<std::size_t>(i)], b = best[static_cast<std::size_t>(i)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  };
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      if (!have_best || compare_prefix(n - 1) < 0) {
        best = columns;
        best_sigma = sigma;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | (g.adjacent(sigma[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      columns[static_cast<std::size_t>(j)] = col;
      if (have_best && compare_prefix(j) > 0) continue;
      used[static_cast<std::size_t>(v)] = true;
      sigma[static_cast<std::size_t>(j)] = v;
      rec(j + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(0);
  return best_sigma;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.kind() != GraphKind::simple) throw std::invalid_argument("canonical_form: simple graphs only");
  if (g.order() > 8) throw std::invalid_argument("canonical_form: at most 8 vertices");
  const auto sigma = canonical_order(g);
  // Vertex sigma[a] of g becomes vertex a.
  std::vector<int> to_canonical(sigma.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) to_canonical[static_cast<std::size_t>(sigma[a])] = static_cast<int>(a);
  return g.relabeled(Permutation::from_images(to_canonical));
}

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_form(g)); }

namespace {

std::uint64_t bit_code(const Graph& g) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("enumerate_graphs supports 0 <= n <= 7");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 0) {
    result.emplace_back(0);
  } else {
    // Every graph on n vertices is a graph on n - 1 vertices plus a vertex
    // with some neighborhood, so extending each class representative suffices.
    std::map<std::uint64_t, Graph> classes;
    for (const auto& base : enumerate_graphs(n - 1)) {
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        Graph g(n);
        for (int u = 0; u < n - 1; ++u) {
          for (int v = u + 1; v < n - 1; ++v) {
            if (base.adjacent(u, v)) g.set(u, v);
          }
          if (mask >> u & 1U) g.set(u, n - 1);
        }
        Graph c = canonical_form(g);
        classes.emplace(bit_code(c), std::move(c));
      }
    }
    for (auto& [_, g] : classes) result.push_back(std::move(g));
  }
  std::lock_guard lock(mutex);
  memo.emplace(n, result);
  return result;
}

Graph complement(const Graph& g) {
  if (g.kind() != GraphKind::simple) throw std::invalid_argument("complement: simple graphs only");
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.set(u, v);
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced_subgraph: empty vertex subset");
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw std::invalid_argument("induced_subgraph: repeated vertex");
  const int k = static_cast<int>(vs.size());
  Graph h(k, g.kind());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int m = g.at(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]);
      if (m && (g.kind() == GraphKind::digraph || a < b)) h.set(a, b, m);
    }
  }
  return h;
}

GroupAction automorphism_action(const Graph& g) { return GroupAction::natural(automorphism_group(g)); }

DistinguishingResult graph_distinguishing(const Graph& g) { return distinguishing_number(automorphism_action(g)); }

int graph_distinguishing_number(const Graph& g) { return graph_distinguishing(g).number; }

bool is_distinguishing_critical(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 7) throw std::invalid_argument("is_distinguishing_critical supports 1 <= n <= 7");
  const int d = graph_distinguishing_number(g);
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) vs.push_back(v);
    }
    if (graph_distinguishing_number(induced_subgraph(g, vs)) == d) return false;
  }
  return true;
}

}  // namespace disting
