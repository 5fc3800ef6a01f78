#pragma once

#include <cmred/action.hpp>
#include <cmred/galois_model.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cmred {

struct OrbitSummary {
  std::vector<int> representative;  // sorted 0-based coset indices
  std::uint64_t size = 0;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

/// Orbits of CM types of signature (n - eps, eps), under Gal(E^c/k) (bit 0)
/// and under all of G x Z/2. The full orbits are restricted to the stratum,
/// so both lists partition the C(n, eps) types.
struct OrbitStratum {
  std::size_t eps = 0;
  bool skipped = false;  // too many subsets for the configured cap
  std::vector<OrbitSummary> bit0;
  std::vector<OrbitSummary> full;

  friend bool operator==(const OrbitStratum&, const OrbitStratum&) = default;
};

struct OrbitTable {
  std::size_t n = 0;
  std::vector<OrbitStratum> strata;  // eps = 0 .. eps_max

  friend bool operator==(const OrbitTable&, const OrbitTable&) = default;
};

/// Strata whose C(n, eps) exceeds `subset_cap` are marked skipped.
OrbitTable orbit_table(const UnitaryGaloisModel& model, std::size_t eps_max,
                       std::uint64_t subset_cap = kDefaultSubsetCap);

struct TransitivityCertificate {
  bool two_transitive = false;
  std::size_t pair_orbit_count = 0;             // orbits on ordered pairs of distinct cosets
  std::vector<std::size_t> orbit_counts;        // bit-0 orbit counts for eps = 0, 1, 2
  bool criterion_met = false;
  std::string statement;

  friend bool operator==(const TransitivityCertificate&, const TransitivityCertificate&) = default;
};

/// Tests whether G acts 2-transitively on G/H. The statement only records
/// whether the group-theoretic hypothesis holds.
TransitivityCertificate certify(const UnitaryGaloisModel& model);

}  // namespace cmred
