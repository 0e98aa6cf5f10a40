#include "disting/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace disting {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
  std::vector<int> parts;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  int current = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      if (separated) {
        current = (current < 0 ? 0 : current * 10) + (c - '0');
      } else {
        parts.push_back(c - '0');
      }
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      if (current >= 0) parts.push_back(current);
      current = -1;
    } else {
      throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
    }
  }
  if (current >= 0) parts.push_back(current);
  return IntegerPartition(std::move(parts));
}

std::vector<int> IntegerPartition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string IntegerPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string IntegerPartition::compact() const {
  std::string s;
  for (int p : parts_) {
    if (p >= 10 && !s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

std::vector<IntegerPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominance_geq(const IntegerPartition& lam, const IntegerPartition& mu) {
  if (lam.size() != mu.size()) throw std::invalid_argument("dominance: partitions of different sizes");
  int a = 0, b = 0;
  const int len = std::max(lam.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    a += i < lam.length() ? lam[static_cast<std::size_t>(i)] : 0;
    b += i < mu.length() ? mu[static_cast<std::size_t>(i)] : 0;
    if (a < b) return false;
  }
  return true;
}

SetPartition SetPartition::from_labels(std::vector<int> labels) {
  SetPartition sp;
  std::vector<std::pair<int, int>> seen;
  for (int& l : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& pr) { return pr.first == l; });
    if (it == seen.end()) {
      seen.emplace_back(l, static_cast<int>(seen.size()));
      l = seen.back().second;
    } else {
      l = it->second;
    }
  }
  sp.block_of_ = std::move(labels);
  sp.blocks_ = static_cast<int>(seen.size());
  return sp;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (std::size_t x = 0; x < block_of_.size(); ++x) out[static_cast<std::size_t>(block_of_[x])].push_back(static_cast<int>(x));
  return out;
}

IntegerPartition SetPartition::weight() const {
  std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
  for (int b : block_of_) ++sizes[static_cast<std::size_t>(b)];
  return IntegerPartition(std::move(sizes));
}

std::vector<int> SetPartition::labels() const {
  std::vector<int> out(block_of_);
  for (int& l : out) ++l;
  return out;
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) s += '|';
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(block[i] + 1);
    }
  }
  return s + "}";
}

bool for_each_rgs(int n, int max_blocks, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  if (n == 0) return visit(rgs);
  if (max_blocks < 1) return true;
  std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
    if (pos == n) return visit(rgs);
    const int limit = std::min(used + 1, max_blocks);
    for (int b = 0; b < limit; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      if (!rec(pos + 1, std::max(used, b + 1))) return false;
    }
    return true;
  };
  return rec(0, 0);
}

std::vector<SetPartition> set_partitions_of_type(int n, const IntegerPartition& lam) {
  if (lam.size() != n) throw std::invalid_argument("set_partitions_of_type: lambda is not a partition of n");
  std::vector<SetPartition> out;
  const int max_part = lam.length() ? lam[0] : 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> sizes;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      std::vector<int> sorted(sizes);
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (sorted == lam.parts()) {
        SetPartition sp = SetPartition::from_labels(rgs);
        out.push_back(std::move(sp));
      }
      return;
    }
    const int used = static_cast<int>(sizes.size());
    for (int b = 0; b <= used && b < lam.length(); ++b) {
      if (b == used) sizes.push_back(0);
      if (sizes[static_cast<std::size_t>(b)] < max_part) {
        ++sizes[static_cast<std::size_t>(b)];
        rgs[static_cast<std::size_t>(pos)] = b;
        rec(pos + 1);
        --sizes[static_cast<std::size_t>(b)];
      }
      if (b == used) sizes.pop_back();
    }
  };
  rec(0);
  return out;
}

long long stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(std::max(n, k) + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return k <= n ? s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : 0;
}

}  // namespace disting
