#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace disting {

/// lambda |- n: parts weakly decreasing, all positive.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Sorts `parts` descending; throws std::invalid_argument on a non-positive part.
  explicit IntegerPartition(std::vector<int> parts);
  /// "3,1,1", "3 1 1" or "311" (single-digit parts only in the compact form).
  static IntegerPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Multiplicity of each part size, index = part size.
  std::vector<int> multiplicities() const;

  /// "(3,1,1)"; "()" for the empty partition.
  std::string to_string() const;
  /// "311" style, used for compact node names.
  std::string compact() const;

  auto operator<=>(const IntegerPartition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const IntegerPartition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<IntegerPartition> partitions_of(int n);

/// lam >= mu in dominance order. Throws std::invalid_argument if sizes differ.
bool dominance_geq(const IntegerPartition& lam, const IntegerPartition& mu);

/// A set partition of [n] as a canonical restricted-growth string:
/// block ids are 0-based in memory, first occurrences appear in increasing order.
class SetPartition {
 public:
  SetPartition() = default;
  /// Canonicalizes arbitrary block labels into restricted-growth form.
  static SetPartition from_labels(std::vector<int> labels);

  int ground_size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int point) const { return block_of_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& rgs() const { return block_of_; }
  std::vector<std::vector<int>> blocks() const;
  IntegerPartition weight() const;
  /// 1-based labels, the block id of each point plus one.
  std::vector<int> labels() const;
  std::string to_string() const;  // "{1,2|3,4}" style

  bool operator==(const SetPartition&) const = default;

 private:
  std::vector<int> block_of_;
  int blocks_ = 0;
};

/// Visits every restricted-growth string of length n with at most `max_blocks`
/// blocks in lexicographic order. The visitor returns false to stop early.
/// Returns false if stopped.
bool for_each_rgs(int n, int max_blocks, const std::function<bool(const std::vector<int>&)>& visit);

/// Every set partition of [n] whose block sizes form `lam`, each once, in
/// lexicographic RGS order.
std::vector<SetPartition> set_partitions_of_type(int n, const IntegerPartition& lam);

/// Stirling numbers of the second kind S(n, k).
long long stirling2(int n, int k);

}  // namespace disting
