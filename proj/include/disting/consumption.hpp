#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disting/catalog.hpp"
#include "disting/partition.hpp"
#include "disting/perm.hpp"

namespace disting {

/// A set partition of [n] of type lam that h distinguishes (only the identity
/// of h preserves every block setwise), or nullopt if h does not consume lam.
std::optional<SetPartition> consuming_partition(const PermGroup& h, const IntegerPartition& lam);
inline bool consumes(const PermGroup& h, const IntegerPartition& lam) {
  return consuming_partition(h, lam).has_value();
}

struct ConsumptionAnswer {
  bool holds = false;
  /// First conjugacy representative consuming lam but not mu, when !holds.
  std::optional<PermGroup> counterexample;
};

/// lam >=_c mu: every subgroup of S_n consuming lam also consumes mu.
/// Consumption is invariant under conjugation, so only one representative
/// per conjugacy class is scanned.
ConsumptionAnswer consumption_geq(const IntegerPartition& lam, const IntegerPartition& mu,
                                  const SubgroupCatalog& catalog);

struct ConsumptionPoset {
  int n = 0;
  std::vector<IntegerPartition> partitions;  // reverse-lexicographic
  /// geq[i][j]: partitions[i] >=_c partitions[j].
  std::vector<std::vector<bool>> geq;
  /// For each pair with !geq[i][j], the catalog index of the first
  /// conjugacy representative consuming partitions[i] but not partitions[j].
  std::vector<std::vector<std::optional<std::size_t>>> witness;
  /// consumed[r][i]: conjugacy representative r consumes partitions[i].
  std::vector<std::vector<bool>> consumed;

  /// Cover relations (i above j) of the transitive reduction, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  std::size_t index_of(const IntegerPartition& lam) const;
};

/// The consumption order on partitions of catalog.n.
ConsumptionPoset consumption_poset(const SubgroupCatalog& catalog);

/// Hasse diagram as a DOT digraph, edges pointing downward.
std::string poset_to_dot(const ConsumptionPoset& p);

/// Relation as a boolean matrix over partitions_of(n) for the dominance order.
std::vector<std::vector<bool>> dominance_matrix(int n);

}  // namespace disting
