#include "cmred/subset.hpp"

#include <cmred/error.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace cmred {

Subset subset_from_indices(std::span<const int> indices) {
  Subset s = 0;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(kMaxSubsetPoints)) {
      throw UnsupportedParameter("subset index " + std::to_string(i) + " out of range");
    }
    s |= Subset{1} << i;
  }
  return s;
}

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

bool subset_lex_less(Subset a, Subset b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  // One list is a prefix of the other.
  return !a && b;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (n > kMaxSubsetPoints) {
    throw SubsetCapExceeded("subsets of more than 64 points are not supported");
  }
  const std::uint64_t total = binomial(n, k);
  if (total > cap) {
    throw SubsetCapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") exceeds subset cap " + std::to_string(cap));
  }
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(total);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (std::size_t i : idx) s |= Subset{1} << i;
    out.push_back(s);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t colex_rank(Subset s) {
  std::uint64_t r = 0;
  std::size_t k = 1;
  while (s) {
    r += binomial(static_cast<std::size_t>(std::countr_zero(s)), k++);
    s &= s - 1;
  }
  return r;
}

}  // namespace cmred
