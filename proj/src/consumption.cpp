#include "disting/consumption.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace disting {

std::optional<SetPartition> consuming_partition(const PermGroup& h, const IntegerPartition& lam) {
  if (lam.size() != h.degree()) throw std::invalid_argument("consumes: |lambda| differs from the group degree");
  const int n = h.degree();
  for (auto& sp : set_partitions_of_type(n, lam)) {
    const bool distinguishes = std::all_of(h.elements().begin(), h.elements().end(), [&](const Permutation& g) {
      if (g.is_identity()) return true;
      for (int x = 0; x < n; ++x) {
        if (sp.block_of(g(x)) != sp.block_of(x)) return true;
      }
      return false;
    });
    if (distinguishes) return std::move(sp);
  }
  return std::nullopt;
}

ConsumptionAnswer consumption_geq(const IntegerPartition& lam, const IntegerPartition& mu,
                                  const SubgroupCatalog& catalog) {
  if (lam.size() != catalog.n || mu.size() != catalog.n) {
    throw std::invalid_argument("consumption_geq: partitions must have size " + std::to_string(catalog.n));
  }
  for (auto idx : catalog.conjugacy_reps) {
    const auto& h = catalog.subgroups[idx];
    if (consumes(h, lam) && !consumes(h, mu)) return {false, h};
  }
  return {true, std::nullopt};
}

ConsumptionPoset consumption_poset(const SubgroupCatalog& catalog) {
  ConsumptionPoset p;
  p.n = catalog.n;
  p.partitions = partitions_of(catalog.n);
  const std::size_t k = p.partitions.size();
  for (auto idx : catalog.conjugacy_reps) {
    std::vector<bool> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = consumes(catalog.subgroups[idx], p.partitions[i]);
    p.consumed.push_back(std::move(row));
  }
  p.geq.assign(k, std::vector<bool>(k, true));
  p.witness.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t r = 0; r < p.consumed.size(); ++r) {
        if (p.consumed[r][i] && !p.consumed[r][j]) {
          p.geq[i][j] = false;
          p.witness[i][j] = catalog.conjugacy_reps[r];
          break;
        }
      }
    }
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> ConsumptionPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = partitions.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !geq[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k && cover; ++m) {
        if (m != i && m != j && geq[i][m] && geq[m][j]) cover = false;
      }
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::size_t ConsumptionPoset::index_of(const IntegerPartition& lam) const {
  auto it = std::find(partitions.begin(), partitions.end(), lam);
  if (it == partitions.end()) throw std::invalid_argument("partition " + lam.to_string() + " not in poset");
  return static_cast<std::size_t>(it - partitions.begin());
}

std::string poset_to_dot(const ConsumptionPoset& p) {
  std::ostringstream out;
  out << "digraph consumption_" << p.n << " {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t i = 0; i < p.partitions.size(); ++i) {
    out << "  p" << p.partitions[i].compact() << " [label=\"" << p.partitions[i].to_string() << "\"];\n";
  }
  for (auto [i, j] : p.hasse_edges()) {
    out << "  p" << p.partitions[i].compact() << " -> p" << p.partitions[j].compact() << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::vector<bool>> dominance_matrix(int n) {
  const auto parts = partitions_of(n);
  std::vector<std::vector<bool>> m(parts.size(), std::vector<bool>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) m[i][j] = dominance_geq(parts[i], parts[j]);
  }
  return m;
}

}  // namespace disting
