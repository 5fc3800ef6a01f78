#pragma once

#include <cmred/finite_group.hpp>

#include <span>
#include <vector>

namespace cmred {

/// Left cosets gH of a subgroup H of G.
///
/// Coset 0 is H itself with the identity as representative; the remaining
/// cosets are ordered by their smallest element id, which is also their
/// representative.
struct CosetSpace {
  std::vector<ElementId> subgroup;              // sorted ids of H
  std::vector<std::vector<ElementId>> cosets;   // each sorted
  std::vector<ElementId> reps;
  std::vector<std::uint32_t> coset_of;          // element id -> coset index

  std::size_t index() const { return cosets.size(); }
  std::size_t subgroup_order() const { return subgroup.size(); }
};

/// Throws SubgroupNotContained if some generator is not an element of G.
CosetSpace left_cosets(const FiniteGroup& G, std::span<const Permutation> subgroup_gens);

/// Closure of `gens` inside G, as sorted element ids.
std::vector<ElementId> subgroup_elements(const FiniteGroup& G, std::span<const Permutation> gens);

}  // namespace cmred
