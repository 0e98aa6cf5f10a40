#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "disting/action.hpp"
#include "disting/graph.hpp"
#include "disting/partition.hpp"

namespace disting {

/// f(r) = sum_i a[i] * C(r, i): a[i] counts distinguishing labelings using
/// exactly i colors drawn from a fixed set of i colors.
struct DistPolynomial {
  int n = 0;
  /// a[0] is unused and zero; a[i] for i = 1..n.
  std::vector<std::int64_t> a;

  /// Number of distinguishing labelings with colors in [r].
  std::int64_t evaluate(int r) const;
  /// Least i with a[i] > 0.
  int first_positive() const;
  std::string to_string() const;
};

enum class SymBasis { monomial, schur };

/// Homogeneous symmetric function with exact integer coefficients; zero
/// coefficients are not stored.
struct SymFunc {
  int n = 0;
  SymBasis basis = SymBasis::monomial;
  std::map<IntegerPartition, std::int64_t> coeffs;

  std::int64_t coefficient(const IntegerPartition& lam) const;
  std::string to_string() const;
  bool operator==(const SymFunc&) const = default;
};

/// a[i] = i! * (number of distinguishing set partitions of X into i blocks). |X| <= 8.
DistPolynomial distinguishing_counts(const GroupAction& a);

/// Coefficient of m_lam is the number of distinguishing labelings in which
/// color j is used lam_j times. |X| <= 7.
SymFunc dsf_monomial(const GroupAction& a);

/// Semistandard tableaux of shape lam and content mu.
std::int64_t kostka(const IntegerPartition& lam, const IntegerPartition& mu);

SymFunc monomial_to_schur(const SymFunc& f);
SymFunc schur_to_monomial(const SymFunc& f);

bool is_schur_positive(const SymFunc& f);

struct SchurScanEntry {
  std::string graph6;
  int n = 0;
  SymFunc dsf_schur;
  std::map<IntegerPartition, std::int64_t> negative_terms;
};

struct SchurScanReport {
  int max_n = 0;
  std::size_t graphs_scanned = 0;
  /// Graphs whose distinguishing symmetric function is not Schur-positive,
  /// sorted by (n, canonical graph6).
  std::vector<SchurScanEntry> exceptions;
};

/// Scans every isomorphism class on 1..max_n vertices (max_n <= 7).
SchurScanReport scan_graphs_schur(int max_n, int jobs = 1);

}  // namespace disting
