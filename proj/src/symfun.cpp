#include "disting/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "disting/parallel.hpp"

namespace disting {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t binomial(int r, int i) {
  if (i < 0 || i > r) return 0;
  std::int64_t b = 1;
  for (int j = 1; j <= i; ++j) b = b * (r - i + j) / j;
  return b;
}

// Number of distinguishing set partitions per type, and per block count.
struct PartitionTally {
  std::map<IntegerPartition, std::int64_t> by_type;
  std::vector<std::int64_t> by_blocks;
};

PartitionTally tally(const GroupAction& a) {
  PartitionTally t;
  const int m = a.ground_size();
  t.by_blocks.assign(static_cast<std::size_t>(m + 1), 0);
  std::vector<int> sizes;
  for_each_distinguishing_rgs(a, std::max(m, 1), [&](const std::vector<int>& rgs) {
    sizes.assign(static_cast<std::size_t>(m), 0);
    int blocks = 0;
    for (int b : rgs) {
      ++sizes[static_cast<std::size_t>(b)];
      blocks = std::max(blocks, b + 1);
    }
    sizes.resize(static_cast<std::size_t>(blocks));
    ++t.by_type[IntegerPartition(sizes)];
    ++t.by_blocks[static_cast<std::size_t>(blocks)];
    return true;
  });
  return t;
}

std::string term_list(const std::map<IntegerPartition, std::int64_t>& coeffs, const char* symbol) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print largest partitions first.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto c = it->second;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << '*';
    out << symbol << it->first.to_string();
  }
  return out.str();
}

using KostkaMatrix = std::vector<std::vector<std::int64_t>>;

// Kostka matrix over partitions_of(n), memoized per n.
const KostkaMatrix& kostka_matrix(int n) {
  static std::mutex mutex;
  static std::map<int, KostkaMatrix> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  const auto parts = partitions_of(n);
  KostkaMatrix k(parts.size(), std::vector<std::int64_t>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) k[i][j] = kostka(parts[i], parts[j]);
  }
  return memo.emplace(n, std::move(k)).first->second;
}

}  // namespace

std::int64_t DistPolynomial::evaluate(int r) const {
  std::int64_t f = 0;
  for (int i = 1; i <= n; ++i) f += a[static_cast<std::size_t>(i)] * binomial(r, i);
  return f;
}

int DistPolynomial::first_positive() const {
  for (int i = 1; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i)] > 0) return i;
  }
  return 0;
}

std::string DistPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    const auto c = a[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!first) out << " + ";
    first = false;
    out << c << "*C(x," << i << ')';
  }
  if (first) out << '0';
  return out.str();
}

std::int64_t SymFunc::coefficient(const IntegerPartition& lam) const {
  auto it = coeffs.find(lam);
  return it == coeffs.end() ? 0 : it->second;
}

std::string SymFunc::to_string() const { return term_list(coeffs, basis == SymBasis::monomial ? "m" : "s"); }

DistPolynomial distinguishing_counts(const GroupAction& a) {
  const int m = a.ground_size();
  if (m > 8) throw std::invalid_argument("distinguishing_counts supports |X| <= 8");
  const auto t = tally(a);
  DistPolynomial p;
  p.n = m;
  p.a.assign(static_cast<std::size_t>(m + 1), 0);
  for (int i = 1; i <= m; ++i) p.a[static_cast<std::size_t>(i)] = factorial(i) * t.by_blocks[static_cast<std::size_t>(i)];
  return p;
}

SymFunc dsf_monomial(const GroupAction& a) {
  const int m = a.ground_size();
  if (m > 7) throw std::invalid_argument("dsf_monomial supports |X| <= 7");
  SymFunc f;
  f.n = m;
  f.basis = SymBasis::monomial;
  for (const auto& [lam, count] : tally(a).by_type) {
    std::int64_t arrangements = 1;
    for (int mult : lam.multiplicities()) arrangements *= factorial(mult);
    f.coeffs[lam] = count * arrangements;
  }
  return f;
}

std::int64_t kostka(const IntegerPartition& lam, const IntegerPartition& mu) {
  if (lam.size() != mu.size()) throw std::invalid_argument("kostka: partitions of different sizes");
  const auto& shape = lam.parts();
  const auto& content = mu.parts();
  // Place the entries 1, 2, ... as successive horizontal strips.
  std::function<std::int64_t(std::vector<int>&, std::size_t)> fill = [&](std::vector<int>& rows, std::size_t entry) -> std::int64_t {
    if (entry == content.size()) return rows == shape ? 1 : 0;
    const std::vector<int> before = rows;
    std::int64_t total = 0;
    std::function<void(std::size_t, int)> strip = [&](std::size_t row, int remaining) {
      if (remaining == 0) {
        total += fill(rows, entry + 1);
        return;
      }
      if (row >= shape.size()) return;
      const int cap = std::min(shape[row], row == 0 ? shape[0] : before[row - 1]);
      for (int add = std::min(remaining, cap - before[row]); add >= 0; --add) {
        rows[row] = before[row] + add;
        strip(row + 1, remaining - add);
      }
      rows[row] = before[row];
    };
    strip(0, content[entry]);
    rows = before;
    return total;
  };
  std::vector<int> rows(shape.size(), 0);
  return fill(rows, 0);
}

SymFunc monomial_to_schur(const SymFunc& f) {
  if (f.basis != SymBasis::monomial) throw std::invalid_argument("monomial_to_schur: input must be in the monomial basis");
  const auto parts = partitions_of(f.n);
  const auto& k = kostka_matrix(f.n);
  SymFunc s;
  s.n = f.n;
  s.basis = SymBasis::schur;
  // Reverse-lex order extends dominance, so K is unitriangular in this order.
  std::vector<std::int64_t> c(parts.size(), 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::int64_t value = f.coefficient(parts[j]);
    for (std::size_t i = 0; i < j; ++i) value -= c[i] * k[i][j];
    c[j] = value;
    if (value) s.coeffs[parts[j]] = value;
  }
  return s;
}

SymFunc schur_to_monomial(const SymFunc& f) {
  if (f.basis != SymBasis::schur) throw std::invalid_argument("schur_to_monomial: input must be in the Schur basis");
  const auto parts = partitions_of(f.n);
  const auto& k = kostka_matrix(f.n);
  SymFunc m;
  m.n = f.n;
  m.basis = SymBasis::monomial;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) value += f.coefficient(parts[i]) * k[i][j];
    if (value) m.coeffs[parts[j]] = value;
  }
  return m;
}

bool is_schur_positive(const SymFunc& f) {
  if (f.basis != SymBasis::schur) throw std::invalid_argument("is_schur_positive: convert to the Schur basis first");
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

SchurScanReport scan_graphs_schur(int max_n, int jobs) {
  if (max_n < 1 || max_n > 7) throw std::invalid_argument("scan_graphs_schur supports 1 <= max_n <= 7");
  SchurScanReport report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    kostka_matrix(n);
    const auto graphs = enumerate_graphs(n);
    report.graphs_scanned += graphs.size();
    auto results = parallel_map(graphs.size(), jobs, [&](std::size_t i) {
      return monomial_to_schur(dsf_monomial(automorphism_action(graphs[i])));
    });
    std::vector<SchurScanEntry> found;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (is_schur_positive(results[i])) continue;
      SchurScanEntry e;
      e.graph6 = write_graph6(graphs[i]);
      e.n = n;
      for (const auto& [lam, c] : results[i].coeffs) {
        if (c < 0) e.negative_terms[lam] = c;
      }
      e.dsf_schur = std::move(results[i]);
      found.push_back(std::move(e));
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.graph6 < y.graph6; });
    for (auto& e : found) report.exceptions.push_back(std::move(e));
  }
  return report;
}

}  // namespace disting
