#pragma once

#include <cmred/detail/image_store.hpp>
#include <cmred/permutation.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cmred {

/// Index of an element in a FiniteGroup's element list.
using ElementId = std::uint32_t;

struct GroupLimits {
  std::size_t element_cap = 2'000'000;
  /// A dense multiplication table is cached only up to this order.
  std::size_t table_cap = 4096;
};

/// A permutation group enumerated element by element.
///
/// Elements are stored in breadth-first order from the generators: level k
/// holds the elements first reached by words of length k, and each level is
/// sorted by image array. Element 0 is the identity. Every element k > 0
/// records the word step that reached it, element(k) = gen * element(parent),
/// which lets callers extend generator images to homomorphisms in one pass.
///
/// Immutable after construction.
class FiniteGroup {
 public:
  /// Throws ElementCapExceeded when the group outgrows `limits.element_cap`
  /// and InvalidPermutation on a degree mismatch.
  static FiniteGroup close_generators(std::size_t degree, std::span<const Permutation> gens,
                                      const GroupLimits& limits = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return parent_.size(); }

  std::span<const Point> images(ElementId id) const { return store_.images(id); }
  Permutation element(ElementId id) const;

  std::optional<ElementId> find(std::span<const Point> images) const;
  std::optional<ElementId> find(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  /// a * b, i.e. apply b first.
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  /// x * g * x^-1
  ElementId conjugate(ElementId x, ElementId g) const;

  /// Allocation-free variants for hot loops; `scratch` is resized as needed.
  ElementId multiply(ElementId a, ElementId b, std::vector<Point>& scratch) const;
  ElementId conjugate(ElementId x, ElementId g, std::vector<Point>& scratch) const;

  /// Element ids of the generators, in the order they were supplied.
  std::span<const ElementId> generators() const { return generators_; }

  ElementId word_parent(ElementId id) const { return parent_[id]; }
  /// Position in generators() of the last generator applied to reach `id`.
  std::size_t word_generator(ElementId id) const { return word_gen_[id]; }

  bool has_table() const { return !table_.empty(); }

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  detail::ImageStore store_;
  std::vector<ElementId> parent_;
  std::vector<std::uint32_t> word_gen_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> table_;
};

/// Picks a subset of `candidates` generating the same group, scanning in
/// order and keeping a candidate only when it is not yet generated.
std::vector<Permutation> greedy_generators(std::size_t degree,
                                           std::span<const Permutation> candidates,
                                           const GroupLimits& limits = {});

}  // namespace cmred
