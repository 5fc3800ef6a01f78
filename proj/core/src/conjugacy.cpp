#include "cmred/conjugacy.hpp"

namespace cmred {

ConjugacyPartition conjugacy_classes(const FiniteGroup& G) {
  ConjugacyPartition P;
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  P.class_of.assign(G.order(), kUnassigned);
  std::vector<Point> scratch;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (P.class_of[g] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(P.class_reps.size());
    std::size_t size = 0;
    for (ElementId x = 0; x < G.order(); ++x) {
      const ElementId y = G.conjugate(x, g, scratch);
      if (P.class_of[y] == kUnassigned) {
        P.class_of[y] = c;
        ++size;
      }
    }
    P.class_reps.push_back(g);
    P.class_sizes.push_back(size);
  }
  return P;
}

}  // namespace cmred
