#include "disting/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace disting {

bool Labeling::same(int x, int y) const {
  for (int j = 0; j < width; ++j) {
    if (color(x, j) != color(y, j)) return false;
  }
  return true;
}

int Labeling::color_count() const {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < ground_size(); ++x) {
    seen.emplace(colors.begin() + x * width, colors.begin() + (x + 1) * width);
  }
  return static_cast<int>(seen.size());
}

int Labeling::max_color() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()); }

IntegerPartition Labeling::type() const {
  std::map<std::vector<int>, int> count;
  for (int x = 0; x < ground_size(); ++x) {
    ++count[std::vector<int>(colors.begin() + x * width, colors.begin() + (x + 1) * width)];
  }
  std::vector<int> parts;
  for (const auto& [_, c] : count) parts.push_back(c);
  return IntegerPartition(std::move(parts));
}

std::string Labeling::to_string() const {
  std::string s = "(";
  for (int x = 0; x < ground_size(); ++x) {
    if (x) s += ',';
    if (width > 1) s += '(';
    for (int j = 0; j < width; ++j) {
      if (j) s += ',';
      s += std::to_string(color(x, j));
    }
    if (width > 1) s += ')';
  }
  return s + ")";
}

GroupAction GroupAction::from_generators(int group_degree, std::vector<Permutation> generators, int ground_size,
                                         std::vector<Permutation> generator_images) {
  if (generators.size() != generator_images.size()) {
    throw std::invalid_argument("action: generator and image counts differ");
  }
  for (const auto& img : generator_images) {
    if (img.degree() != ground_size) throw std::invalid_argument("action: image degree differs from ground size");
  }
  for (const auto& g : generators) {
    if (g.degree() != group_degree) throw std::invalid_argument("action: generator degree mismatch");
  }
  // Breadth-first closure over (element, image) pairs; a repeated element with
  // a different image means the generator assignment does not extend to a homomorphism.
  std::vector<Permutation> elems{Permutation::identity(group_degree)};
  std::vector<Permutation> imgs{Permutation::identity(ground_size)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation e = elems[i] * generators[s];
      Permutation m = imgs[i] * generator_images[s];
      auto [it, inserted] = seen.emplace(e, elems.size());
      if (inserted) {
        elems.push_back(e);
        imgs.push_back(m);
      } else if (imgs[it->second] != m) {
        throw std::invalid_argument("action: generator images do not define a homomorphism");
      }
    }
  }
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  std::vector<Permutation> sorted_imgs;
  sorted_imgs.reserve(order.size());
  for (auto i : order) sorted_imgs.push_back(imgs[i]);
  for (std::size_t i = 1; i < sorted_imgs.size(); ++i) {
    if (sorted_imgs[i].is_identity()) throw std::invalid_argument("action is not faithful");
  }
  PermGroup group = PermGroup::generate(group_degree, std::move(generators));
  return GroupAction(std::move(group), ground_size, std::move(sorted_imgs), std::move(generator_images));
}

GroupAction GroupAction::natural(const PermGroup& group) {
  return GroupAction(group, group.degree(), group.elements(), group.generators());
}

PermGroup GroupAction::image_group() const { return PermGroup::generate(ground_size_, generator_images_); }

GroupAction restrict_action(const GroupAction& a, std::span<const int> subset) {
  std::vector<int> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  std::vector<int> position(static_cast<std::size_t>(a.ground_size()), -1);
  for (std::size_t i = 0; i < points.size(); ++i) position[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  std::set<Permutation> restricted;
  for (const auto& img : a.images()) {
    std::vector<int> r(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int y = position[static_cast<std::size_t>(img(points[i]))];
      if (y < 0) throw std::invalid_argument("restrict_action: subset is not invariant");
      r[i] = y;
    }
    restricted.insert(Permutation::from_images(r));
  }
  return GroupAction::natural(
      PermGroup::from_elements(static_cast<int>(points.size()), {restricted.begin(), restricted.end()}));
}

SetPartition orbits(const GroupAction& a) {
  std::vector<int> parent(static_cast<std::size_t>(a.ground_size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& g : a.generator_images()) {
    for (int x = 0; x < a.ground_size(); ++x) {
      const int rx = find(x), ry = find(g(x));
      if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(a.ground_size()));
  for (int x = 0; x < a.ground_size(); ++x) labels[static_cast<std::size_t>(x)] = find(x);
  return SetPartition::from_labels(std::move(labels));
}

namespace {

PermGroup select(const GroupAction& a, const std::function<bool(const Permutation&)>& keep_image) {
  const auto& elems = a.group().elements();
  std::vector<Permutation> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (keep_image(a.image(i))) kept.push_back(elems[i]);
  }
  auto gens = generating_set(a.group().degree(), kept);
  return PermGroup::generate(a.group().degree(), std::move(gens));
}

bool preserves(const Permutation& g, const Labeling& l) {
  for (int x = 0; x < l.ground_size(); ++x) {
    if (!l.same(g(x), x)) return false;
  }
  return true;
}

}  // namespace

PermGroup pointwise_stabilizer(const GroupAction& a, std::span<const int> points) {
  return select(a, [&](const Permutation& g) {
    return std::all_of(points.begin(), points.end(), [&](int x) { return g(x) == x; });
  });
}

PermGroup label_stabilizer(const GroupAction& a, const Labeling& labeling) {
  if (labeling.ground_size() != a.ground_size()) throw std::invalid_argument("labeling size differs from ground size");
  return select(a, [&](const Permutation& g) { return preserves(g, labeling); });
}

bool is_distinguishing(const GroupAction& a, const Labeling& labeling) {
  if (labeling.ground_size() != a.ground_size()) throw std::invalid_argument("labeling size differs from ground size");
  for (const auto& g : a.images()) {
    if (!g.is_identity() && preserves(g, labeling)) return false;
  }
  return true;
}

void for_each_distinguishing_rgs(const GroupAction& a, int max_blocks,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = a.ground_size();
  struct Moving {
    Permutation g;
    Permutation g_inv;
    int last_moved;
  };
  std::vector<Moving> moving;
  for (const auto& g : a.images()) {
    if (g.is_identity()) continue;
    int last = 0;
    for (int x = 0; x < m; ++x) {
      if (g(x) != x) last = x;
    }
    moving.push_back({g, g.inverse(), last});
  }
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  if (m == 0) {
    if (moving.empty()) visit(rgs);
    return;
  }
  std::vector<std::vector<std::uint32_t>> survivors(static_cast<std::size_t>(m) + 1);
  survivors[0].resize(moving.size());
  std::iota(survivors[0].begin(), survivors[0].end(), 0U);

  std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
    const auto& current = survivors[static_cast<std::size_t>(pos)];
    if (pos == m) return current.empty() ? visit(rgs) : true;
    auto& next = survivors[static_cast<std::size_t>(pos) + 1];
    const int limit = std::min(used + 1, max_blocks);
    for (int b = 0; b < limit; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      next.clear();
      bool doomed = false;
      for (auto idx : current) {
        const auto& mv = moving[idx];
        const int q = mv.g(pos);
        const int r = mv.g_inv(pos);
        if (q <= pos && rgs[static_cast<std::size_t>(q)] != b) continue;
        if (r <= pos && rgs[static_cast<std::size_t>(r)] != b) continue;
        if (mv.last_moved <= pos) {
          // Every moved point is colored and consistent: this element survives the whole subtree.
          doomed = true;
          break;
        }
        next.push_back(idx);
      }
      if (doomed) continue;
      if (!rec(pos + 1, std::max(used, b + 1))) return false;
    }
    return true;
  };
  rec(0, 0);
}

DistinguishingResult distinguishing_number(const GroupAction& a) {
  const int m = a.ground_size();
  for (int r = 1; r <= std::max(m, 1); ++r) {
    std::optional<std::vector<int>> found;
    for_each_distinguishing_rgs(a, r, [&](const std::vector<int>& rgs) {
      found = rgs;
      return false;
    });
    if (found) {
      auto labels = SetPartition::from_labels(*found).labels();
      return {r, Labeling::scalar(std::move(labels))};
    }
  }
  throw std::logic_error("distinguishing_number: action is not faithful");
}

DistinguishingResult distinguishing_number_k(const GroupAction& a, int k) {
  if (k < 1) throw std::invalid_argument("distinguishing_number_k: width must be >= 1");
  // A tuple labeling over [r]^k is a scalar labeling with r^k available colors.
  const auto scalar = distinguishing_number(a);
  int r = 1;
  auto capacity = [&](int base) {
    long long c = 1;
    for (int i = 0; i < k && c < scalar.number; ++i) c *= base;
    return c;
  };
  while (capacity(r) < scalar.number) ++r;
  Labeling tuples{k, std::vector<int>(static_cast<std::size_t>(a.ground_size() * k))};
  for (int x = 0; x < a.ground_size(); ++x) {
    int code = scalar.witness.color(x) - 1;
    for (int j = k - 1; j >= 0; --j) {
      tuples.colors[static_cast<std::size_t>(x * k + j)] = code % r + 1;
      code /= r;
    }
  }
  return {r, std::move(tuples)};
}

Labeling tymoczko_label(const GroupAction& a) {
  const int m = a.ground_size();
  std::vector<int> colors(static_cast<std::size_t>(m), 1);
  std::vector<std::size_t> current(a.images().size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  int label = 1;
  for (;;) {
    // Orbits of the current group; the current group fixes every labeled point.
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (auto i : current) {
      const auto& g = a.image(i);
      for (int x = 0; x < m; ++x) {
        const int rx = find(x), ry = find(g(x));
        if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
      }
    }
    std::vector<int> chosen;
    std::vector<int> size(static_cast<std::size_t>(m), 0);
    for (int x = 0; x < m; ++x) ++size[static_cast<std::size_t>(find(x))];
    for (int x = 0; x < m; ++x) {
      if (find(x) == x && size[static_cast<std::size_t>(x)] >= 2) chosen.push_back(x);
    }
    if (chosen.empty()) break;
    ++label;
    for (int x : chosen) colors[static_cast<std::size_t>(x)] = label;
    std::vector<std::size_t> next;
    for (auto i : current) {
      const auto& g = a.image(i);
      if (std::all_of(chosen.begin(), chosen.end(), [&](int x) { return g(x) == x; })) next.push_back(i);
    }
    current = std::move(next);
  }
  return Labeling::scalar(std::move(colors));
}

DepthFirstLabeling dfs_variant_label(const GroupAction& a, std::vector<int> orbit_order) {
  const int m = a.ground_size();
  const auto orbit_blocks = orbits(a).blocks();
  if (orbit_order.empty()) {
    orbit_order.resize(orbit_blocks.size());
    std::iota(orbit_order.begin(), orbit_order.end(), 0);
    std::stable_sort(orbit_order.begin(), orbit_order.end(), [&](int x, int y) {
      return orbit_blocks[static_cast<std::size_t>(x)].size() > orbit_blocks[static_cast<std::size_t>(y)].size();
    });
  }
  {
    auto sorted = orbit_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(orbit_blocks.size());
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw std::invalid_argument("dfs_variant_label: orbit_order must permute the orbit indices");
  }

  DepthFirstLabeling out;
  out.labeling = Labeling::scalar(std::vector<int>(static_cast<std::size_t>(m), 1));
  std::vector<std::size_t> current(a.images().size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  int label = 1;

  // Orbits of the current group restricted to `region`, which is invariant.
  auto orbits_in = [&](const std::vector<int>& region) {
    std::vector<std::vector<int>> result;
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    for (int x : region) {
      if (done[static_cast<std::size_t>(x)]) continue;
      std::set<int> orb;
      for (auto i : current) orb.insert(a.image(i)(x));
      for (int y : orb) done[static_cast<std::size_t>(y)] = true;
      result.emplace_back(orb.begin(), orb.end());
    }
    return result;
  };

  for (int oi : orbit_order) {
    const auto& orbit = orbit_blocks[static_cast<std::size_t>(oi)];
    for (;;) {
      // One depth-first pass, starting from the unlabeled part of the orbit.
      std::vector<int> region;
      for (int x : orbit) {
        if (out.labeling.colors[static_cast<std::size_t>(x)] == 1) region.push_back(x);
      }
      bool progressed = false;
      for (;;) {
        auto parts = orbits_in(region);
        const std::vector<int>* best = nullptr;
        for (const auto& p : parts) {
          if (p.size() >= 2 && (!best || p.size() > best->size())) best = &p;
        }
        if (!best) break;
        const int x = best->front();
        out.orbit_sizes.push_back(static_cast<int>(best->size()));
        out.labeling.colors[static_cast<std::size_t>(x)] = ++label;
        std::vector<std::size_t> next;
        for (auto i : current) {
          if (a.image(i)(x) == x) next.push_back(i);
        }
        current = std::move(next);
        region.assign(best->begin() + 1, best->end());
        progressed = true;
      }
      if (!progressed) break;
    }
  }
  return out;
}

GroupAction sn_action_n_minus_1(int n) {
  if (n < 3) throw std::invalid_argument("sn_action_n_minus_1 requires n >= 3");
  if (n + 2 > Permutation::kMaxDegree) throw std::invalid_argument("sn_action_n_minus_1: n too large");
  std::vector<int> transposition(static_cast<std::size_t>(n));
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  const auto t = Permutation::from_images(transposition);
  const auto c = Permutation::from_images(cycle);

  auto extend = [n](const Permutation& p) {
    auto img = p.images();
    img.push_back(n);
    img.push_back(n + 1);
    if (!p.is_even()) std::swap(img[static_cast<std::size_t>(n)], img[static_cast<std::size_t>(n + 1)]);
    return Permutation::from_images(img);
  };
  return GroupAction::from_generators(n, {t, c}, n + 2, {extend(t), extend(c)});
}

GroupAction coset_action(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("coset_action: h is not a subgroup of g");
  // Left coset xH keyed by its least element.
  std::map<Permutation, int> coset_id;
  std::vector<Permutation> reps;
  for (const auto& x : g.elements()) {
    Permutation least = x * h.elements().front();
    for (const auto& y : h.elements()) least = std::min(least, x * y);
    if (!coset_id.count(least)) {
      coset_id.emplace(least, 0);
      reps.push_back(least);
    }
  }
  std::sort(reps.begin(), reps.end());
  for (std::size_t i = 0; i < reps.size(); ++i) coset_id[reps[i]] = static_cast<int>(i);
  auto coset_of = [&](const Permutation& x) {
    Permutation least = x * h.elements().front();
    for (const auto& y : h.elements()) least = std::min(least, x * y);
    return coset_id.at(least);
  };
  std::vector<Permutation> images;
  for (const auto& s : g.generators()) {
    std::vector<int> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) img[i] = coset_of(s * reps[i]);
    images.push_back(Permutation::from_images(img));
  }
  return GroupAction::from_generators(g.degree(), g.generators(), static_cast<int>(reps.size()), std::move(images));
}

Labeling abelian_subgroup_labeling(const GroupAction& a, const PermGroup& h) {
  if (!a.group().is_abelian()) throw std::invalid_argument("abelian_subgroup_labeling: group is not abelian");
  if (!h.is_subgroup_of(a.group())) throw std::invalid_argument("abelian_subgroup_labeling: h is not a subgroup");
  std::vector<int> colors(static_cast<std::size_t>(a.ground_size()), 2);
  for (const auto& orbit : orbits(a).blocks()) {
    const int rep = orbit.front();
    for (const auto& e : h.elements()) {
      const auto idx = a.group().index_of(e);
      colors[static_cast<std::size_t>(a.image(static_cast<std::size_t>(idx))(rep))] = 1;
    }
  }
  return Labeling::scalar(std::move(colors));
}

bool is_lambda_fixing_set(const GroupAction& a, std::span<const int> w, const IntegerPartition& lam) {
  const int size = static_cast<int>(w.size());
  if (lam.size() != size) throw std::invalid_argument("is_lambda_fixing_set: |w| differs from |lambda|");
  std::vector<int> pos(static_cast<std::size_t>(a.ground_size()), -1);
  for (int i = 0; i < size; ++i) {
    const int x = w[static_cast<std::size_t>(i)];
    if (x < 0 || x >= a.ground_size() || pos[static_cast<std::size_t>(x)] >= 0) {
      throw std::invalid_argument("is_lambda_fixing_set: w must be a set of ground points");
    }
    pos[static_cast<std::size_t>(x)] = i;
  }
  // Non-identity elements that stabilize w setwise; the rest never preserve a labeling of w.
  std::vector<std::vector<int>> candidates;
  for (const auto& g : a.images()) {
    if (g.is_identity()) continue;
    std::vector<int> on_w(static_cast<std::size_t>(size));
    bool stabilizes = true;
    for (int i = 0; i < size && stabilizes; ++i) {
      const int j = pos[static_cast<std::size_t>(g(w[static_cast<std::size_t>(i)]))];
      stabilizes = j >= 0;
      on_w[static_cast<std::size_t>(i)] = j;
    }
    if (stabilizes) candidates.push_back(std::move(on_w));
  }
  for (const auto& sp : set_partitions_of_type(size, lam)) {
    const bool fixed = std::none_of(candidates.begin(), candidates.end(), [&](const std::vector<int>& g) {
      for (int i = 0; i < size; ++i) {
        if (sp.block_of(g[static_cast<std::size_t>(i)]) != sp.block_of(i)) return false;
      }
      return true;
    });
    if (fixed) return true;
  }
  return false;
}

}  // namespace disting
