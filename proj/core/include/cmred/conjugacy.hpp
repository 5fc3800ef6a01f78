#pragma once

#include <cmred/finite_group.hpp>

#include <vector>

namespace cmred {

/// Conjugacy classes of G. Classes are numbered by their smallest element id,
/// which is also the class representative; class 0 is the identity.
struct ConjugacyPartition {
  std::vector<std::uint32_t> class_of;  // element id -> class index
  std::vector<ElementId> class_reps;
  std::vector<std::size_t> class_sizes;

  std::size_t count() const { return class_reps.size(); }
};

/// Brute force: the class of g is {x g x^-1 : x in G}.
ConjugacyPartition conjugacy_classes(const FiniteGroup& G);

}  // namespace cmred
