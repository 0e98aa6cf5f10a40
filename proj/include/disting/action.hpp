#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disting/partition.hpp"
#include "disting/perm.hpp"

namespace disting {

/// Colors on a ground set X. Scalar labelings have width 1; a width-k
/// labeling assigns each point a k-tuple, stored row-major in `colors`.
/// Color ids are 1-based.
struct Labeling {
  int width = 1;
  std::vector<int> colors;

  static Labeling scalar(std::vector<int> colors) { return Labeling{1, std::move(colors)}; }

  int ground_size() const { return width ? static_cast<int>(colors.size()) / width : 0; }
  int color(int point, int component = 0) const {
    return colors[static_cast<std::size_t>(point * width + component)];
  }
  /// True when points x and y carry the same color (tuple).
  bool same(int x, int y) const;
  /// Number of distinct colors (tuples) in use.
  int color_count() const;
  /// Largest color id used in any component.
  int max_color() const;
  /// Weight of the color classes; for width > 1 each distinct tuple is a class.
  IntegerPartition type() const;
  std::string to_string() const;
};

/// A faithful action of a finite permutation group on X = {0, ..., |X|-1}.
/// The abstract group is realized as a permutation group on its own points;
/// `image(i)` is the permutation of X induced by `group().elements()[i]`.
class GroupAction {
 public:
  /// Builds the action from generator images. Throws std::invalid_argument
  /// when the assignment is not a homomorphism or is not faithful.
  static GroupAction from_generators(int group_degree, std::vector<Permutation> generators, int ground_size,
                                     std::vector<Permutation> generator_images);
  /// A permutation group acting on its own points.
  static GroupAction natural(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  int ground_size() const { return ground_size_; }
  const Permutation& image(std::size_t element) const { return images_[element]; }
  const std::vector<Permutation>& images() const { return images_; }
  const std::vector<Permutation>& generator_images() const { return generator_images_; }
  /// Image of the group in Sym(X).
  PermGroup image_group() const;

 private:
  GroupAction(PermGroup group, int ground, std::vector<Permutation> images, std::vector<Permutation> generator_images)
      : group_(std::move(group)), ground_size_(ground), images_(std::move(images)),
        generator_images_(std::move(generator_images)) {}

  PermGroup group_;
  int ground_size_ = 0;
  std::vector<Permutation> images_;
  std::vector<Permutation> generator_images_;
};

/// The action of the image group on an invariant subset, points renumbered
/// in increasing order. Throws if `subset` is not invariant.
GroupAction restrict_action(const GroupAction& a, std::span<const int> subset);

/// Orbits of the action on X as a set partition.
SetPartition orbits(const GroupAction& a);
PermGroup pointwise_stabilizer(const GroupAction& a, std::span<const int> points);
/// Elements of the group whose image preserves every color (componentwise for tuples).
PermGroup label_stabilizer(const GroupAction& a, const Labeling& labeling);
bool is_distinguishing(const GroupAction& a, const Labeling& labeling);

struct DistinguishingResult {
  int number = 0;
  /// Lexicographically least restricted-growth witness using `number` colors.
  Labeling witness;
};

/// Minimal number of colors admitting a distinguishing labeling, found by a
/// restricted-growth search over set partitions of X with at most r blocks.
DistinguishingResult distinguishing_number(const GroupAction& a);

/// Minimal r admitting a distinguishing labeling X -> [r]^k.
DistinguishingResult distinguishing_number_k(const GroupAction& a, int k);

/// Calls `visit` for each restricted-growth string of X with at most
/// `max_blocks` blocks whose stabilizer is trivial, in lexicographic order.
/// Subtrees in which some non-identity element is already certain to survive
/// are skipped. `visit` returns false to stop.
void for_each_distinguishing_rgs(const GroupAction& a, int max_blocks,
                                 const std::function<bool(const std::vector<int>&)>& visit);

/// The label-and-stabilize procedure: start with every point labeled 1; while
/// the current group moves some point, give the least point of each
/// nontrivial orbit the next label and pass to the pointwise stabilizer of
/// those points. Uses at most k labels whenever |group| <= k!.
Labeling tymoczko_label(const GroupAction& a);

struct DepthFirstLabeling {
  Labeling labeling;
  /// Size of the orbit containing each newly labeled point, at the moment it was labeled.
  std::vector<int> orbit_sizes;
};

/// Depth-first variant: orbits of the action are finished one at a time, in
/// `orbit_order` (indices into orbits(a).blocks()); empty means decreasing
/// orbit size. Within an orbit, each step labels the least point of the
/// largest nontrivial orbit of the current stabilizer inside the region still
/// being refined, then narrows the region to that orbit minus the labeled point.
DepthFirstLabeling dfs_variant_label(const GroupAction& a, std::vector<int> orbit_order = {});

/// S_n on n + 2 points: natural on the first n, and swapping the last two
/// exactly for odd permutations. Its distinguishing number is n - 1. n >= 3.
GroupAction sn_action_n_minus_1(int n);

/// The action of g on the left cosets of h, cosets numbered by least element.
/// Throws std::invalid_argument if h is not a subgroup or the action is not faithful.
GroupAction coset_action(const PermGroup& g, const PermGroup& h);

/// Two-color labeling whose stabilizer is exactly h, for an abelian group:
/// the h-orbit of each orbit's least point gets color 1, everything else 2.
/// Throws std::invalid_argument if the group is not abelian or h is not a subgroup.
Labeling abelian_subgroup_labeling(const GroupAction& a, const PermGroup& h);

/// Whether some labeling of `w` with type `lam` is preserved only by the
/// identity, where an element preserves it iff it maps w onto w and keeps colors.
bool is_lambda_fixing_set(const GroupAction& a, std::span<const int> w, const IntegerPartition& lam);

}  // namespace disting
