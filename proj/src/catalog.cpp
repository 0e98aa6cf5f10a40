#include "disting/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace disting {

SymmetricTable::SymmetricTable(int n) : n_(n) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric table degree must be in [1, 7]");
  elements_ = PermGroup::symmetric(n).elements();
  const std::size_t size = elements_.size();
  table_.resize(size * size);
  inverse_.resize(size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) table_[a * size + b] = static_cast<std::uint16_t>(index_of(elements_[a] * elements_[b]));
    inverse_[a] = index_of(elements_[a].inverse());
  }
}

std::uint32_t SymmetricTable::index_of(const Permutation& p) const {
  // Lehmer rank.
  std::uint32_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j) smaller += p(j) < p(i) ? 1 : 0;
    rank = rank * static_cast<std::uint32_t>(n_ - i) + static_cast<std::uint32_t>(smaller);
  }
  return rank;
}

namespace {

constexpr const char* kCacheMagic = "disting-subgroup-catalog";
constexpr int kCacheVersion = 1;

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : b) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test_bit(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set_bit(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Seed {
  Bits members;
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> gens;
};

class SubgroupSearch {
 public:
  explicit SubgroupSearch(const SymmetricTable& table) : table_(table), words_((table.size() + 63) / 64) {}

  Seed close(std::vector<std::uint32_t> gens) const {
    Seed s;
    s.members.assign(words_, 0);
    s.elements.push_back(0);  // identity has rank 0
    set_bit(s.members, 0);
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
      for (auto g : gens) {
        const auto p = table_.mul(s.elements[i], g);
        if (!test_bit(s.members, p)) {
          set_bit(s.members, p);
          s.elements.push_back(p);
        }
      }
    }
    s.gens = std::move(gens);
    return s;
  }

  std::vector<Seed> run() {
    const auto size = static_cast<std::uint32_t>(table_.size());
    std::vector<std::uint32_t> prime_power_gens;
    for (std::uint32_t e = 0; e < size; ++e) {
      auto seed = close({e});
      const auto order = seed.elements.size();
      if (add(std::move(seed)) && is_prime_power(order)) prime_power_gens.push_back(e);
    }
    for (std::size_t i = 0; i < found_.size(); ++i) {
      for (auto c : prime_power_gens) {
        if (test_bit(found_[i].members, c)) continue;
        auto gens = found_[i].gens;
        gens.push_back(c);
        add(close(std::move(gens)));
      }
    }
    return std::move(found_);
  }

 private:
  static bool is_prime_power(std::size_t m) {
    if (m < 2) return false;
    std::size_t p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) m /= p;
    return m == 1;
  }

  bool add(Seed seed) {
    if (index_.count(seed.members)) return false;
    index_.emplace(seed.members, found_.size());
    found_.push_back(std::move(seed));
    return true;
  }

  const SymmetricTable& table_;
  std::size_t words_;
  std::vector<Seed> found_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

std::vector<std::vector<std::uint32_t>> compute_subgroups(const SymmetricTable& table) {
  SubgroupSearch search(table);
  auto seeds = search.run();
  std::vector<std::vector<std::uint32_t>> lists;
  lists.reserve(seeds.size());
  for (auto& s : seeds) {
    std::sort(s.elements.begin(), s.elements.end());
    lists.push_back(std::move(s.elements));
  }
  return lists;
}

void sort_canonically(std::vector<std::vector<std::uint32_t>>& lists) {
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

CatalogCache CatalogCache::from_environment() {
  if (const char* dir = std::getenv("DISTING_CACHE_DIR"); dir && *dir) return CatalogCache(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return CatalogCache(std::filesystem::path(xdg) / "disting");
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return CatalogCache(std::filesystem::path(home) / ".cache" / "disting");
  }
  return CatalogCache(std::filesystem::temp_directory_path() / "disting-cache");
}

std::filesystem::path CatalogCache::file_for(int n) const {
  return dir_ / ("subgroups-s" + std::to_string(n) + ".txt");
}

std::optional<std::vector<std::vector<std::uint32_t>>> CatalogCache::load(int n) const {
  std::ifstream in(file_for(n), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto tail = text.rfind("checksum ");
  if (tail == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, tail);
  std::istringstream footer(text.substr(tail + 9));
  std::uint64_t stored = 0;
  if (!(footer >> std::hex >> stored) || stored != fnv1a(body)) return std::nullopt;

  std::istringstream lines(body);
  std::string magic, key;
  int version = 0, degree = 0;
  std::size_t count = 0;
  if (!(lines >> magic >> version) || magic != kCacheMagic || version != kCacheVersion) return std::nullopt;
  if (!(lines >> key >> degree) || key != "n" || degree != n) return std::nullopt;
  if (!(lines >> key >> count) || key != "count") return std::nullopt;
  std::uint32_t group_order = 1;
  for (int i = 2; i <= n; ++i) group_order *= static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> result(count);
  for (auto& list : result) {
    std::size_t size = 0;
    if (!(lines >> size) || size == 0 || size > group_order) return std::nullopt;
    list.resize(size);
    for (auto& v : list) {
      if (!(lines >> v) || v >= group_order) return std::nullopt;
    }
  }
  return result;
}

void CatalogCache::store(int n, const std::vector<std::vector<std::uint32_t>>& subgroups) const {
  std::filesystem::create_directories(dir_);
  std::ostringstream body;
  body << kCacheMagic << ' ' << kCacheVersion << '\n' << "n " << n << '\n' << "count " << subgroups.size() << '\n';
  for (const auto& list : subgroups) {
    body << list.size();
    for (auto v : list) body << ' ' << v;
    body << '\n';
  }
  const std::string text = body.str();
  std::ostringstream out;
  out << text << "checksum " << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text) << '\n';

  std::random_device rd;
  const auto target = file_for(n);
  auto temp = target;
  temp += ".tmp." + std::to_string(rd());
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write cache file " + temp.string());
    f << out.str();
    if (!f.flush()) throw std::runtime_error("failed writing cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

int CatalogCache::clear() const {
  int removed = 0;
  std::error_code ec;
  if (!std::filesystem::exists(dir_, ec)) return 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("subgroups-s", 0) == 0) {
      std::filesystem::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

SubgroupCatalog subgroup_catalog(int n, const CatalogOptions& options) {
  if (n < 1 || n > 7) throw std::invalid_argument("subgroup catalog supports 1 <= n <= 7, got " + std::to_string(n));
  if (n == 7 && !options.allow_long) {
    const bool cached = options.cache && options.cache->contains(7);
    if (!cached) throw std::invalid_argument("the S_7 subgroup catalog is a long-running computation; pass --long");
  }
  const SymmetricTable table(n);

  std::vector<std::vector<std::uint32_t>> lists;
  if (options.cache) {
    if (auto loaded = options.cache->load(n)) lists = std::move(*loaded);
  }
  if (lists.empty()) {
    lists = compute_subgroups(table);
    sort_canonically(lists);
    if (options.cache) options.cache->store(n, lists);
  } else {
    sort_canonically(lists);
  }

  SubgroupCatalog catalog;
  catalog.n = n;
  catalog.subgroups.reserve(lists.size());
  for (const auto& list : lists) {
    std::vector<Permutation> elements;
    elements.reserve(list.size());
    for (auto idx : list) elements.push_back(table.elements()[idx]);
    catalog.subgroups.push_back(PermGroup::from_elements(n, std::move(elements)));
  }

  // Conjugacy classes: conjugate each unclassified subgroup by all of S_n.
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  const std::size_t words = (table.size() + 63) / 64;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    Bits b(words, 0);
    for (auto v : lists[i]) set_bit(b, v);
    index.emplace(std::move(b), i);
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  catalog.class_of.assign(lists.size(), kUnassigned);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (catalog.class_of[i] != kUnassigned) continue;
    const std::size_t cls = catalog.conjugacy_reps.size();
    catalog.conjugacy_reps.push_back(i);
    for (std::uint32_t g = 0; g < table.size(); ++g) {
      Bits b(words, 0);
      const auto g_inv = table.inv(g);
      for (auto h : lists[i]) set_bit(b, table.mul(table.mul(g, h), g_inv));
      const auto it = index.find(b);
      if (it == index.end()) throw std::logic_error("subgroup catalog is not closed under conjugation");
      catalog.class_of[it->second] = cls;
    }
  }
  return catalog;
}

std::vector<PermGroup> conjugacy_reps(const SubgroupCatalog& catalog) {
  std::vector<PermGroup> reps;
  reps.reserve(catalog.conjugacy_reps.size());
  for (auto i : catalog.conjugacy_reps) reps.push_back(catalog.subgroups[i]);
  return reps;
}

}  // namespace disting
