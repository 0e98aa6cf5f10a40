#include "disting/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace disting {

Permutation Permutation::identity(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument("permutation degree out of range: " + std::to_string(n));
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p = identity(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        throw std::invalid_argument("cycle notation: unexpected character '" + std::string(1, text[i]) + "'");
      }
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > n) throw std::invalid_argument("cycle notation: point " + std::to_string(v) + " out of range");
      if (used[static_cast<std::size_t>(v - 1)]) {
        throw std::invalid_argument("cycle notation: point " + std::to_string(v) + " repeated");
      }
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return from_images(img);
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("composing permutations of different degree");
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) r.image_[i] = image_[other.image_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::array<bool, kMaxDegree> seen{};
  int transpositions = 0;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

int Permutation::order() const {
  std::array<bool, kMaxDegree> seen{};
  int result = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(image_.begin(), image_.begin() + degree_);
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::array<bool, kMaxDegree> seen{};
  bool any = false;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || image_[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ degree_;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= image_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::vector<Permutation> closure(int degree, std::span<const Permutation> generators) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator " + g.to_cycles() + " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
    }
    if (!g.is_identity()) gens.push_back(g);
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = elements[i] * g;
      if (seen.insert(p).second) elements.push_back(p);
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace

std::vector<Permutation> generating_set(int degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = closure(degree, gens);
  }
  return gens;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators) {
  auto elements = closure(degree, generators);
  return PermGroup(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& e : elements) {
    if (e.degree() != degree) throw std::invalid_argument("element degree mismatch");
  }
  auto gens = generating_set(degree, elements);
  if (closure(degree, gens) != elements) {
    throw std::invalid_argument("element set is not closed under composition");
  }
  return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::parse(int degree, std::string_view text) {
  std::vector<Permutation> gens;
  // Split on commas that sit between cycles, i.e. follow a ')'.
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      const auto first = piece.find_first_not_of(" \t");
      if (first != std::string_view::npos) gens.push_back(Permutation::from_cycles(degree, piece.substr(first)));
      start = i + 1;
    }
  }
  return generate(degree, std::move(gens));
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> elements;
  do {
    elements.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> cyc(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % degree;
    gens.push_back(Permutation::from_cycles(degree, "(1 2)"));
    if (degree > 2) gens.push_back(Permutation::from_images(cyc));
  }
  return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::alternating(int degree) {
  auto s = symmetric(degree);
  return s.filter([](const Permutation& p) { return p.is_even(); });
}

PermGroup PermGroup::cyclic(int degree) {
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % degree;
  return generate(degree, {Permutation::from_images(cyc)});
}

PermGroup PermGroup::dihedral(int degree) {
  if (degree < 3) return symmetric(degree);
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  std::vector<int> refl(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    cyc[static_cast<std::size_t>(i)] = (i + 1) % degree;
    refl[static_cast<std::size_t>(i)] = (degree - i) % degree;
  }
  return generate(degree, {Permutation::from_images(cyc), Permutation::from_images(refl)});
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::ptrdiff_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return it - elements_.begin();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> orbit_of(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < degree_; ++start) {
    if (orbit_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<int> orbit{start};
    orbit_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : generators_) {
        const int y = g(orbit[i]);
        if (orbit_of[static_cast<std::size_t>(y)] < 0) {
          orbit_of[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

bool PermGroup::is_two_transitive() const {
  if (degree_ <= 1) return true;
  if (!is_transitive()) return false;
  // Transitive and the point stabilizer of 0 is transitive on the remaining points.
  const std::array<int, 1> zero{0};
  const auto stab = pointwise_stabilizer(zero);
  for (const auto& orbit : stab.orbits()) {
    if (orbit.front() == 0) continue;
    return static_cast<int>(orbit.size()) == degree_ - 1;
  }
  return false;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  return filter([&](const Permutation& g) {
    return std::all_of(points.begin(), points.end(), [&](int x) { return g(x) == x; });
  });
}

PermGroup PermGroup::filter(const std::function<bool(const Permutation&)>& keep) const {
  std::vector<Permutation> kept;
  for (const auto& e : elements_) {
    if (keep(e)) kept.push_back(e);
  }
  auto gens = generating_set(degree_, kept);
  return PermGroup(degree_, std::move(gens), std::move(kept));
}

PermGroup PermGroup::conjugate(const Permutation& g) const {
  std::vector<Permutation> gens;
  for (const auto& s : generators_) gens.push_back(s.conjugate_by(g));
  std::vector<Permutation> elements;
  elements.reserve(elements_.size());
  for (const auto& e : elements_) elements.push_back(e.conjugate_by(g));
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree_, std::move(gens), std::move(elements));
}

std::string PermGroup::generators_to_string() const {
  std::string out;
  for (const auto& g : generators_) {
    if (!out.empty()) out += ',';
    out += g.to_cycles();
  }
  return out.empty() ? "()" : out;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("is_normal: h is not a subgroup of g");
  for (const auto& x : g.generators()) {
    for (const auto& s : h.generators()) {
      if (!h.contains(s.conjugate_by(x))) return false;
    }
  }
  return true;
}

}  // namespace disting
