#include "cmred/detail/image_store.hpp"

#include <cstring>

namespace cmred::detail {

namespace {

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ images.size();
  std::size_t i = 0;
  for (; i + 8 <= images.size(); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, images.data() + i, 8);
    h = (h ^ w) * 0xFF51AFD7ED558CCDULL;
    h ^= h >> 32;
  }
  std::uint64_t w = 0;
  std::memcpy(&w, images.data() + i, images.size() - i);
  h = (h ^ w) * 0xC4CEB9FE1A85EC53ULL;
  h ^= h >> 29;
  return h;
}

}  // namespace

std::size_t ImageStore::probe(std::span<const Point> images) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(images) & mask;
  while (true) {
    const std::uint32_t id = slots_[s];
    if (id == kEmpty) return s;
    if (std::memcmp(flat_.data() + static_cast<std::size_t>(id) * degree_, images.data(),
                    degree_) == 0) {
      return s;
    }
    s = (s + 1) & mask;
  }
}

std::optional<std::uint32_t> ImageStore::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  const std::uint32_t id = slots_[probe(images)];
  if (id == kEmpty) return std::nullopt;
  return id;
}

std::pair<std::uint32_t, bool> ImageStore::insert(std::span<const Point> images) {
  if (degree_ == 0) {
    // Only the empty permutation exists.
    if (count_ == 0) {
      count_ = 1;
      return {0, true};
    }
    return {0, false};
  }
  std::size_t s = probe(images);
  if (slots_[s] != kEmpty) return {slots_[s], false};
  const auto id = static_cast<std::uint32_t>(size());
  flat_.insert(flat_.end(), images.begin(), images.end());
  slots_[s] = id;
  if (2 * size() > slots_.size()) rehash(slots_.size() * 2);
  return {id, true};
}

void ImageStore::permute_block(std::size_t begin, std::span<const std::uint32_t> order) {
  if (degree_ == 0 || order.empty()) return;
  std::vector<std::size_t> slot_of(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    slot_of[k] = probe(images(order[k]));
  }
  std::vector<Point> block(order.size() * degree_);
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::memcpy(block.data() + k * degree_, images(order[k]).data(), degree_);
  }
  std::memcpy(flat_.data() + begin * degree_, block.data(), block.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    slots_[slot_of[k]] = static_cast<std::uint32_t>(begin + k);
  }
}

void ImageStore::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmpty);
  if (degree_ == 0) return;
  const std::size_t n = size();
  for (std::uint32_t id = 0; id < n; ++id) {
    slots_[probe(images(id))] = id;
  }
}

}  // namespace cmred::detail
