#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cmred {

/// Point of a permutation domain. Degrees up to 256 are supported.
using Point = std::uint8_t;
inline constexpr std::size_t kMaxDegree = 256;

/// A bijection of {0, ..., degree-1} stored as its image array.
///
/// Products compose right to left: (a * b)(i) = a(b(i)), so that
/// permutations act on points from the left.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds from arbitrary integers; throws InvalidPermutation on out-of-range
  /// entries or repeats.
  static Permutation from_images(std::span<const int> images);
  static Permutation identity(std::size_t degree);
  /// Cycle notation, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace cmred
