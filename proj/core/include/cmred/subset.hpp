#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cmred {

/// A subset of {0, ..., n-1} for n <= 64, bit i set iff i is a member.
using Subset = std::uint64_t;
inline constexpr std::size_t kMaxSubsetPoints = 64;

inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }
inline bool subset_contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline Subset full_subset(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline Subset subset_complement(Subset s, std::size_t n) { return full_subset(n) & ~s; }

Subset subset_from_indices(std::span<const int> indices);
std::vector<int> subset_indices(Subset s);

/// Lexicographic order of the sorted member lists.
bool subset_lex_less(Subset a, Subset b);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} in lexicographic order. Throws SubsetCapExceeded
/// when there are more than `cap` of them.
std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t k, std::uint64_t cap);

/// Rank of a k-subset in colexicographic order, in [0, C(n, k)).
std::uint64_t colex_rank(Subset s);

}  // namespace cmred
