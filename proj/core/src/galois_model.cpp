#include "cmred/galois_model.hpp"

#include <cmred/error.hpp>

#include <string>

namespace cmred {

namespace {

CosetSpace checked_cosets(const FiniteGroup& G, std::span<const Permutation> gens) {
  CosetSpace C = left_cosets(G, gens);
  if (C.index() > kMaxSubsetPoints) {
    throw UnsupportedParameter("index [G:H] = " + std::to_string(C.index()) +
                               " exceeds the supported maximum of 64");
  }
  return C;
}

}  // namespace

UnitaryGaloisModel::UnitaryGaloisModel(FiniteGroup G, std::span<const Permutation> subgroup_gens)
    : group_(std::make_shared<const FiniteGroup>(std::move(G))),
      cosets_(checked_cosets(*group_, subgroup_gens)),
      action_(cmred::coset_action(*group_, cosets_)),
      classes_(std::make_shared<const ConjugacyPartition>(conjugacy_classes(*group_))) {}

UnitaryGaloisModel build_model(FiniteGroup G, std::span<const Permutation> subgroup_gens) {
  return UnitaryGaloisModel(std::move(G), subgroup_gens);
}

std::pair<std::size_t, std::size_t> signature(const CMType& phi, const UnitaryGaloisModel& model) {
  return {model.n() - phi.eps(), phi.eps()};
}

CMType act(GammaElement x, const CMType& phi, const UnitaryGaloisModel& model) {
  Subset s = model.coset_action().apply(x.g, phi.S);
  if (x.b) s = subset_complement(s, model.n());
  return {s};
}

std::vector<CMType> enumerate_cm_types(const UnitaryGaloisModel& model, std::size_t eps,
                                       std::uint64_t cap) {
  if (eps > model.n()) throw UnsupportedParameter("eps exceeds n");
  std::vector<CMType> out;
  for (Subset s : enumerate_subsets(model.n(), eps, cap)) out.push_back({s});
  return out;
}

}  // namespace cmred
