#include "disting/powers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace disting {

std::size_t tuple_count(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("tuple_count: need n >= 1 and k >= 0");
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) {
    c *= static_cast<std::size_t>(n);
    if (c > kTupleBudget) throw std::length_error("[n]^k exceeds the tuple budget");
  }
  return c;
}

PowerLabeling::PowerLabeling(int n_, int k_, bool symmetric_, std::vector<int> colors_)
    : n(n_), k(k_), symmetric(symmetric_), colors(std::move(colors_)) {
  if (colors.size() != disting::tuple_count(n, k)) throw std::invalid_argument("power labeling: wrong number of colors");
  for (int c : colors) {
    if (c < 1) throw std::invalid_argument("power labeling: colors must be positive");
  }
  if (symmetric) {
    for (std::size_t r = 0; r < colors.size(); ++r) {
      auto t = tuple(r);
      std::sort(t.begin(), t.end());
      if (color(t) != colors[r]) throw std::invalid_argument("power labeling: colors are not symmetric");
    }
  }
}

std::vector<int> PowerLabeling::tuple(std::size_t r) const {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::size_t>(n));
    r /= static_cast<std::size_t>(n);
  }
  return t;
}

std::size_t PowerLabeling::rank(const std::vector<int>& t) const {
  std::size_t r = 0;
  for (int x : t) r = r * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return r;
}

std::size_t act_on_rank(const Permutation& g, std::size_t rank, int n, int k) {
  std::size_t out = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    const auto digit = static_cast<int>(rank % static_cast<std::size_t>(n));
    rank /= static_cast<std::size_t>(n);
    out += scale * static_cast<std::size_t>(g(digit));
    scale *= static_cast<std::size_t>(n);
  }
  return out;
}

PermGroup realized_subgroup(const PowerLabeling& labeling) {
  const int n = labeling.n;
  const int k = labeling.k;
  std::vector<Permutation> kept;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  const std::size_t count = labeling.tuple_count();
  do {
    const auto g = Permutation::from_images(img);
    bool ok = true;
    for (std::size_t r = 0; r < count && ok; ++r) {
      ok = labeling.colors[act_on_rank(g, r, n, k)] == labeling.colors[r];
    }
    if (ok) kept.push_back(g);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(n, std::move(kept));
}

PowerLabeling orbit_labeling(const PermGroup& h, int k) {
  const int n = h.degree();
  const std::size_t count = tuple_count(n, k);
  std::vector<int> colors(count, 0);
  int next = 0;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < count; ++start) {
    if (colors[start]) continue;
    colors[start] = ++next;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : h.generators()) {
        const auto r = act_on_rank(g, queue[i], n, k);
        if (!colors[r]) {
          colors[r] = next;
          queue.push_back(r);
        }
      }
    }
  }
  return PowerLabeling(n, k, false, std::move(colors));
}

PermGroup k_closure(const PermGroup& h, int k) { return realized_subgroup(orbit_labeling(h, k)); }

int density(const PermGroup& h) {
  const int n = h.degree();
  const int max_k = std::max(1, n - 1);
  for (int k = 1; k <= max_k; ++k) {
    if (k_closure(h, k) == h) return k;
  }
  throw std::logic_error("density: no power up to n-1 realizes the group");
}

PowerLabeling theorem_part_labeling(const PermGroup& h) {
  const int n = h.degree();
  if (n < 2) throw std::invalid_argument("theorem_part_labeling requires n >= 2");
  const int k = n - 1;
  std::vector<int> colors(tuple_count(n, k), 2);
  std::size_t base = 0;
  for (int i = 0; i < k; ++i) base = base * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  for (const auto& g : h.elements()) colors[act_on_rank(g, base, n, k)] = 1;
  return PowerLabeling(n, k, false, std::move(colors));
}

PowerLabeling sym2_labeling(const Graph& g) {
  if (g.kind() == GraphKind::digraph) throw std::invalid_argument("sym2_labeling: undirected graphs only");
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n * n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(u * n + v)] = g.at(u, v) + 1;
  }
  return PowerLabeling(n, 2, true, std::move(colors));
}

PowerLabeling tensor2_labeling(const Graph& g) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n * n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(u * n + v)] = g.at(u, v) + 1;
  }
  return PowerLabeling(n, 2, false, std::move(colors));
}

}  // namespace disting
