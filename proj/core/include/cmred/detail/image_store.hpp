#pragma once

#include <cmred/permutation.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cmred::detail {

/// Flat storage of fixed-length image arrays with an open-addressing index.
class ImageStore {
 public:
  explicit ImageStore(std::size_t degree = 0) : degree_(degree) { rehash(64); }

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ == 0 ? count_ : flat_.size() / degree_; }

  std::span<const Point> images(std::uint32_t id) const {
    return {flat_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }

  std::optional<std::uint32_t> find(std::span<const Point> images) const;

  /// Returns the id of `images` and whether it was newly added.
  std::pair<std::uint32_t, bool> insert(std::span<const Point> images);

  /// Reorders the ids in [begin, begin + order.size()): position begin + k
  /// receives the entry previously stored under id order[k].
  void permute_block(std::size_t begin, std::span<const std::uint32_t> order);

  void reserve(std::size_t n) { flat_.reserve(n * degree_); }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  std::size_t probe(std::span<const Point> images) const;
  void rehash(std::size_t capacity);

  std::size_t degree_;
  std::size_t count_ = 0;  // only used for degree 0
  std::vector<Point> flat_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace cmred::detail
