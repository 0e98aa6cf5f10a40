#pragma once

#include <cstddef>
#include <vector>

#include "disting/graph.hpp"
#include "disting/perm.hpp"

namespace disting {

/// A coloring of [n]^k. Tuples are ranked in mixed radix, first entry most
/// significant: rank(t) = sum_i t_i * n^(k-1-i).
///
/// The realized subgroup of a labeling is every g in S_n with
/// colors(g.t) = colors(t) for all t, g acting on each entry. For a subgroup H
/// the partition of [n]^k into H-orbits is the finest H-invariant one, and any
/// H-invariant coloring is constant on those orbits; so whatever H-invariant
/// coloring is chosen, its realized subgroup contains the one realized by the
/// orbit partition. That is why the closures below decide density.
struct PowerLabeling {
  int n = 0;
  int k = 0;
  /// Colors are invariant under reordering the tuple entries.
  bool symmetric = false;
  std::vector<int> colors;

  /// Throws std::invalid_argument on wrong size, non-positive colors, or a
  /// symmetric flag the colors do not satisfy.
  PowerLabeling(int n, int k, bool symmetric, std::vector<int> colors);

  std::size_t tuple_count() const { return colors.size(); }
  std::vector<int> tuple(std::size_t rank) const;
  std::size_t rank(const std::vector<int>& tuple) const;
  int color(const std::vector<int>& tuple) const { return colors[rank(tuple)]; }
};

/// Maximum n^k handled by the tuple-based operations.
inline constexpr std::size_t kTupleBudget = std::size_t{1} << 20;

std::size_t tuple_count(int n, int k);
/// Rank of g applied entrywise to the tuple with rank `rank`.
std::size_t act_on_rank(const Permutation& g, std::size_t rank, int n, int k);

PermGroup realized_subgroup(const PowerLabeling& labeling);
/// Orbit coloring of [n]^k under h (orbit ids in order of least rank, from 1).
PowerLabeling orbit_labeling(const PermGroup& h, int k);
/// Realized subgroup of the orbit partition of [n]^k; contains h and shrinks as k grows.
PermGroup k_closure(const PermGroup& h, int k);
/// Least k >= 1 with k_closure(h, k) = h; at most max(1, n - 1).
int density(const PermGroup& h);

/// Two colors on [n]^(n-1): the h-orbit of (1, 2, ..., n-1) gets 1, the rest 2.
/// Its realized subgroup is exactly h. Requires n >= 2.
PowerLabeling theorem_part_labeling(const PermGroup& h);

/// Unordered pairs colored by edge multiplicity plus one.
PowerLabeling sym2_labeling(const Graph& g);
/// Ordered pairs colored by directed edge multiplicity plus one.
PowerLabeling tensor2_labeling(const Graph& g);

}  // namespace disting
