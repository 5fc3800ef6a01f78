#pragma once

#include <cmred/cosets.hpp>
#include <cmred/finite_group.hpp>
#include <cmred/subset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cmred {

inline constexpr std::uint64_t kDefaultSubsetCap = 5'000'000;

/// The permutation of {0..points-1} induced by every element of a group,
/// stored row by row, together with the ids of the group's generators.
class ActionTable {
 public:
  ActionTable(std::size_t points, std::vector<Point> table, std::vector<ElementId> generators);

  /// G acting on its own degree points.
  static ActionTable natural(const FiniteGroup& G);

  std::size_t points() const { return points_; }
  std::size_t elements() const { return points_ == 0 ? 0 : table_.size() / points_; }

  Point image(ElementId g, std::size_t p) const { return table_[static_cast<std::size_t>(g) * points_ + p]; }
  std::span<const Point> row(ElementId g) const {
    return {table_.data() + static_cast<std::size_t>(g) * points_, points_};
  }
  std::span<const ElementId> generators() const { return generators_; }

  Subset apply(ElementId g, Subset s) const;

 private:
  std::size_t points_;
  std::vector<Point> table_;
  std::vector<ElementId> generators_;
};

/// Row g is the permutation i -> coset containing g * rep_i.
ActionTable coset_action(const FiniteGroup& G, const CosetSpace& C);

struct TransitivityResult {
  bool transitive = false;
  /// Number of orbits on ordered k-tuples of distinct points.
  std::size_t orbit_count = 0;
  /// Size of the orbit of (0, 1, ..., k-1).
  std::uint64_t first_orbit_size = 0;
};

/// Requires 1 <= k <= points (otherwise reports not transitive with zero orbits).
TransitivityResult is_k_transitive(const ActionTable& action, std::size_t k);

struct SubsetOrbit {
  Subset representative;       // lexicographically smallest member
  std::vector<Subset> members; // lexicographic order
};

/// Orbits of the acting group on eps-subsets, ordered by representative.
/// With `include_complement`, complementation is added to the group; it only
/// changes the stratum when 2 * eps == points.
std::vector<SubsetOrbit> orbits_on_subsets(const ActionTable& action, std::size_t eps,
                                           std::uint64_t cap = kDefaultSubsetCap,
                                           bool include_complement = false);

}  // namespace cmred
