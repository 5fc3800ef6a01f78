#include "cmred/cosets.hpp"

#include <cmred/error.hpp>

#include <algorithm>

namespace cmred {

std::vector<ElementId> subgroup_elements(const FiniteGroup& G, std::span<const Permutation> gens) {
  std::vector<ElementId> gen_ids;
  for (const auto& g : gens) {
    auto id = G.find(g);
    if (!id) {
      throw SubgroupNotContained("subgroup generator " + g.to_string() + " is not in G");
    }
    gen_ids.push_back(*id);
  }
  std::vector<bool> in(G.order(), false);
  std::vector<ElementId> elems{0};
  in[0] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (ElementId s : gen_ids) {
      const ElementId p = G.multiply(s, elems[k]);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

CosetSpace left_cosets(const FiniteGroup& G, std::span<const Permutation> subgroup_gens) {
  CosetSpace C;
  C.subgroup = subgroup_elements(G, subgroup_gens);
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  C.coset_of.assign(G.order(), kUnassigned);
  std::vector<Point> scratch;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (C.coset_of[g] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(C.cosets.size());
    std::vector<ElementId> members;
    members.reserve(C.subgroup.size());
    for (ElementId h : C.subgroup) {
      const ElementId gh = G.multiply(g, h, scratch);
      C.coset_of[gh] = c;
      members.push_back(gh);
    }
    std::sort(members.begin(), members.end());
    C.cosets.push_back(std::move(members));
    C.reps.push_back(g);
  }
  return C;
}

}  // namespace cmred
