#pragma once

#include <cmred/action.hpp>
#include <cmred/conjugacy.hpp>
#include <cmred/cosets.hpp>
#include <cmred/finite_group.hpp>
#include <cmred/group_algebra.hpp>
#include <cmred/subset.hpp>

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace cmred {

/// The group data behind a unitary CM field E = kF: G = Gal(F^c/Q), the
/// subgroup H fixing F, the n = [G:H] cosets identified with the embeddings
/// of F, conjugacy classes of G, and Gamma = G x Z/2 with rho = (e, 1).
class UnitaryGaloisModel {
 public:
  /// Throws SubgroupNotContained, or UnsupportedParameter when n > 64.
  UnitaryGaloisModel(FiniteGroup G, std::span<const Permutation> subgroup_gens);

  const FiniteGroup& group() const { return *group_; }
  const CosetSpace& cosets() const { return cosets_; }
  const ActionTable& coset_action() const { return action_; }
  const ConjugacyPartition& classes() const { return *classes_; }
  std::shared_ptr<const ConjugacyPartition> shared_classes() const { return classes_; }

  std::size_t n() const { return cosets_.index(); }
  std::size_t h() const { return cosets_.subgroup_order(); }
  std::size_t gamma_order() const { return 2 * group_->order(); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  CosetSpace cosets_;
  ActionTable action_;
  std::shared_ptr<const ConjugacyPartition> classes_;
};

UnitaryGaloisModel build_model(FiniteGroup G, std::span<const Permutation> subgroup_gens);

/// CM type Phi_S: the embeddings sigma_i with i in S are twisted by rho.
struct CMType {
  Subset S = 0;

  std::size_t eps() const { return subset_size(S); }
  friend bool operator==(const CMType&, const CMType&) = default;
};

/// (n - eps, eps)
std::pair<std::size_t, std::size_t> signature(const CMType& phi, const UnitaryGaloisModel& model);

/// (g, 0) permutes S through the coset action; (g, 1) also complements.
CMType act(GammaElement x, const CMType& phi, const UnitaryGaloisModel& model);

/// All CM types of signature (n - eps, eps), S in lexicographic order.
std::vector<CMType> enumerate_cm_types(const UnitaryGaloisModel& model, std::size_t eps,
                                       std::uint64_t cap = kDefaultSubsetCap);

}  // namespace cmred
