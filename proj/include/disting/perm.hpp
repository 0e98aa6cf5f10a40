#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace disting {

/// A bijection of {0, ..., n-1}. Points are 0-indexed in memory and
/// 1-indexed in every textual form (cycle notation, reports).
///
/// Ordering is lexicographic on the image array, which is the element
/// order used everywhere for deduplication and deterministic output.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  Permutation() = default;

  static Permutation identity(int n);
  /// Throws std::invalid_argument unless `images` is a bijection of [n].
  static Permutation from_images(std::span<const int> images);
  /// Parses "(1 2 3)(4 5)", "(1,2,3)" or "()" on n points.
  static Permutation from_cycles(int n, std::string_view text);

  int degree() const { return degree_; }
  int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }

  /// (*this * other)(x) = (*this)(other(x)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const { return g * *this * g.inverse(); }

  bool is_identity() const;
  bool is_even() const;
  int order() const;
  std::vector<int> images() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::size_t hash() const;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

/// A finite permutation group materialized as its sorted element list.
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of `generators` under composition; the identity is always included.
  static PermGroup generate(int degree, std::vector<Permutation> generators);
  /// Wraps an element set already known to be a group. The set is validated
  /// for closure; a small generating set is derived from it.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);
  /// Parses a comma-separated generator list in cycle notation, e.g.
  /// "(1 2)(3 4),(1 3)(2 4)". Empty text gives the trivial group.
  static PermGroup parse(int degree, std::string_view text);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup alternating(int degree);
  static PermGroup cyclic(int degree);   // <(1 2 ... n)>
  static PermGroup dihedral(int degree); // symmetries of the n-cycle

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const;
  /// Position of `p` in elements(), or -1.
  std::ptrdiff_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_abelian() const;
  bool is_transitive() const;
  /// Transitive on ordered pairs of distinct points (vacuously true for degree <= 1).
  bool is_two_transitive() const;

  /// Orbits of the natural action, each sorted, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  /// Elements fixing every point of `points`.
  PermGroup pointwise_stabilizer(std::span<const int> points) const;
  /// Subgroup of elements satisfying `keep`; `keep` must select a subgroup.
  PermGroup filter(const std::function<bool(const Permutation&)>& keep) const;
  PermGroup conjugate(const Permutation& g) const;

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

  std::string generators_to_string() const;

 private:
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// h is normal in g. Throws std::invalid_argument if h is not a subgroup of g.
bool is_normal(const PermGroup& h, const PermGroup& g);

/// Greedy generating set: scan elements in order, keep those not yet generated.
std::vector<Permutation> generating_set(int degree, std::span<const Permutation> elements);

}  // namespace disting
