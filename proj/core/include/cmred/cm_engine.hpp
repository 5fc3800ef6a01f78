#pragma once

#include <cmred/galois_model.hpp>
#include <cmred/group_algebra.hpp>
#include <cmred/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmred {

/// Largest |G x Z/2| for which the definition-level path (full convolution)
/// is run.
inline constexpr std::size_t kDefaultBruteCap = 8192;

/// Where two sides of an identity first disagree.
struct Witness {
  std::optional<Subset> cm_type;  // the S being checked, when relevant
  std::size_t class_index = 0;
  int bit = 0;
  Rational lhs;
  Rational rhs;

  std::string describe() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct IdentityReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;  // present iff status == Fail
  std::uint64_t cases = 0;         // number of instances checked
  std::string note;                // e.g. "skipped: cap"

  bool passed() const { return status == CheckStatus::Pass; }
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Compares two class functions class by class (bit 0 before bit 1) and
/// reports the first difference.
IdentityReport compare_class_functions(std::string name, const ClassFunction& lhs,
                                       const ClassFunction& rhs,
                                       std::optional<Subset> cm_type = std::nullopt);

// --- definition-level path ---------------------------------------------------

/// sum over g in G of (g, 0)
AlgebraElement trace_element(const UnitaryGaloisModel& model);

/// Characteristic function of Phi_S^c: (g, 1) for g in a coset sigma_i H with
/// i in S, (g, 0) otherwise.
AlgebraElement phi_c(const CMType& phi, const UnitaryGaloisModel& model);

/// (1 / 2hn) Phi^c * reflex(Phi^c). Throws BruteCapExceeded when
/// |G x Z/2| > brute_cap.
AlgebraElement a_phi(const CMType& phi, const UnitaryGaloisModel& model,
                     std::size_t brute_cap = kDefaultBruteCap);

ClassFunction a_phi0_brute(const CMType& phi, const UnitaryGaloisModel& model,
                           std::size_t brute_cap = kDefaultBruteCap);

// --- closed form -------------------------------------------------------------

/// Number of cosets fixed by each class, on bit 0; zero on bit 1.
ClassFunction perm_char(const UnitaryGaloisModel& model);

/// g -> #{x in G : g in x H x^-1} by a direct double loop, on bit 0.
ClassFunction conj_subgroup_sum(const UnitaryGaloisModel& model);

/// conj_subgroup_sum == h * perm_char
IdentityReport check_conj_sum(const UnitaryGaloisModel& model);

/// Closed-form evaluation of A^0_{Phi_S}:
///
///   1/2 tr - (eps/n)(1-rho) tr + (eps/n^2)(1-rho) chi
///          + 1/(h n^2) (1-rho) sum_g g (sum_{i != j in S} sigma_i H sigma_j^-1) g^-1
///
/// where chi is the permutation character of G on the cosets. The last sum
/// is a class function whose value at y is |C_G(y)| times the number of
/// elements of the class of y lying in the multiset union of the
/// sigma_i H sigma_j^-1. Since sigma_i H sigma_j^-1 = {g : g sigma_j H =
/// sigma_i H}, those class counts are tabulated once per model from the
/// coset action, after which each S costs O(eps^2 * classes).
class ClosedForm {
 public:
  explicit ClosedForm(const UnitaryGaloisModel& model);

  const UnitaryGaloisModel& model() const { return *model_; }
  const ClassFunction& permutation_character() const { return chi_; }

  ClassFunction a_phi0(const CMType& phi) const;

  /// Class counts of sigma_i H sigma_j^-1 (ordered pair, i and j coset indices).
  std::uint64_t pair_class_count(std::size_t i, std::size_t j, std::size_t cls) const {
    return pair_mass_[(i * model_->n() + j) * model_->classes().count() + cls];
  }

 private:
  const UnitaryGaloisModel* model_;
  ClassFunction chi_;
  std::vector<std::uint64_t> pair_mass_;
};

ClassFunction a_phi0_closed(const CMType& phi, const UnitaryGaloisModel& model);

// --- checks ------------------------------------------------------------------

/// Which CM types of a stratum are examined: all of them when there are at
/// most `exhaustive_limit`, otherwise `samples_per_eps` distinct ones drawn
/// from a generator seeded by (seed, eps).
struct SamplingPolicy {
  std::uint64_t exhaustive_limit = 500;
  std::size_t samples_per_eps = 100;
  std::uint64_t seed = 0;
};

std::vector<CMType> select_cm_types(const UnitaryGaloisModel& model, std::size_t eps,
                                    const SamplingPolicy& policy);

enum class A0Path { Closed, Brute };

ClassFunction a_phi0(const ClosedForm& closed, const CMType& phi, A0Path path,
                     std::size_t brute_cap = kDefaultBruteCap);

/// Brute force against closed form for every selected S with |S| <= eps_max.
/// Skipped (not failed) when |G x Z/2| > brute_cap.
IdentityReport check_closed_form(const ClosedForm& closed, std::size_t eps_max,
                           const SamplingPolicy& policy = {},
                           std::size_t brute_cap = kDefaultBruteCap);

/// Residual A^0_S - [sum_{i<j in S} A^0_{ij} - (eps-2) sum_{i in S} A^0_i
///                   + (eps-1)(eps-2)/2 A^0_empty], required to vanish.
IdentityReport check_reduction(const ClosedForm& closed, const CMType& phi,
                            A0Path path = A0Path::Closed,
                            std::size_t brute_cap = kDefaultBruteCap);

/// check_reduction over every selected S with |S| <= eps_max, closed form.
IdentityReport check_reduction_all(const ClosedForm& closed, std::size_t eps_max,
                                const SamplingPolicy& policy = {});

struct Cm0Result {
  std::optional<Rational> constant;  // c with f(g) + f(rho g) = c for all g
  std::optional<Witness> witness;    // first class where the sum deviates
};

Cm0Result check_cm0(const ClassFunction& f);

/// check_cm0 on A^0 of every selected S with |S| <= eps_max, requiring the
/// constant 1/2.
IdentityReport check_cm0_all(const ClosedForm& closed, std::size_t eps_max,
                             const SamplingPolicy& policy = {});

/// A^0(act(x, S)) == A^0(S) for `pairs` seeded draws of x in G x Z/2 and S.
IdentityReport check_galois_invariance(const ClosedForm& closed, std::size_t pairs,
                                       std::uint64_t seed, A0Path path = A0Path::Closed,
                                       std::size_t brute_cap = kDefaultBruteCap);

}  // namespace cmred
