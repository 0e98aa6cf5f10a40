#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "disting/perm.hpp"

namespace disting {

/// S_n with elements in lexicographic order, a full multiplication table and
/// inverse table. Element i is the i-th permutation of [n] in lex order, so the
/// index of a permutation is its Lehmer rank.
class SymmetricTable {
 public:
  explicit SymmetricTable(int n);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint32_t index_of(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * elements_.size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint32_t> inverse_;
};

/// Every subgroup of S_n, n <= 7.
///
/// Subgroups are ordered by order, then lexicographically by their sorted
/// element-index lists, so index 0 is the trivial group and the last entry is S_n.
struct SubgroupCatalog {
  int n = 0;
  std::vector<PermGroup> subgroups;
  /// Indices into `subgroups`, one per conjugacy class (the least index in the class).
  std::vector<std::size_t> conjugacy_reps;
  /// class_of[i] is the position in conjugacy_reps of subgroup i's class.
  std::vector<std::size_t> class_of;
};

/// Directory-backed store of catalogs, one file per degree.
class CatalogCache {
 public:
  explicit CatalogCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $DISTING_CACHE_DIR, else $XDG_CACHE_HOME/disting, else ~/.cache/disting.
  static CatalogCache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(int n) const;

  /// The stored element-index lists, or nullopt if absent, unreadable, or
  /// failing its checksum.
  std::optional<std::vector<std::vector<std::uint32_t>>> load(int n) const;
  /// Write-temp-then-rename, so concurrent readers never see a partial file.
  void store(int n, const std::vector<std::vector<std::uint32_t>>& subgroups) const;
  bool contains(int n) const { return load(n).has_value(); }
  /// Removes every catalog file; returns how many were deleted.
  int clear() const;

 private:
  std::filesystem::path dir_;
};

struct CatalogOptions {
  /// n = 7 takes a long time and is refused unless this is set.
  bool allow_long = false;
  /// When set, computed catalogs are persisted and cached ones reused.
  const CatalogCache* cache = nullptr;
};

/// All subgroups of S_n: cyclic subgroups seed the list, which is then closed
/// under joins with cyclic subgroups of prime-power order until no new group
/// appears. Throws std::invalid_argument for n outside [1, 7] (or n = 7
/// without allow_long).
SubgroupCatalog subgroup_catalog(int n, const CatalogOptions& options = {});

/// One representative per conjugacy class, in catalog order.
std::vector<PermGroup> conjugacy_reps(const SubgroupCatalog& catalog);

}  // namespace disting
