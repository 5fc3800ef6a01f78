#include "cmred/certifier.hpp"

#include <cmred/error.hpp>

#include <algorithm>

namespace cmred {

namespace {

std::vector<OrbitSummary> summarize(const std::vector<SubsetOrbit>& orbits) {
  std::vector<OrbitSummary> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back({subset_indices(o.representative), o.members.size()});
  return out;
}

}  // namespace

OrbitTable orbit_table(const UnitaryGaloisModel& model, std::size_t eps_max,
                       std::uint64_t subset_cap) {
  OrbitTable t;
  t.n = model.n();
  for (std::size_t eps = 0; eps <= std::min(eps_max, model.n()); ++eps) {
    OrbitStratum s;
    s.eps = eps;
    if (binomial(model.n(), eps) > subset_cap) {
      s.skipped = true;
    } else {
      s.bit0 = summarize(orbits_on_subsets(model.coset_action(), eps, subset_cap, false));
      if (2 * eps == model.n()) {
        s.full = summarize(orbits_on_subsets(model.coset_action(), eps, subset_cap, true));
      } else {
        s.full = s.bit0;
      }
    }
    t.strata.push_back(std::move(s));
  }
  return t;
}

TransitivityCertificate certify(const UnitaryGaloisModel& model) {
  TransitivityCertificate cert;
  const TransitivityResult tr = is_k_transitive(model.coset_action(), 2);
  cert.two_transitive = tr.transitive;
  cert.pair_orbit_count = tr.orbit_count;
  for (std::size_t eps = 0; eps <= std::min<std::size_t>(2, model.n()); ++eps) {
    cert.orbit_counts.push_back(orbits_on_subsets(model.coset_action(), eps).size());
  }
  cert.criterion_met = cert.two_transitive;
  if (cert.criterion_met) {
    cert.statement =
        "G acts 2-transitively on G/H, so the double-transitivity hypothesis holds for (G,H). "
        "Each signature (n-eps,eps) with eps <= 2 forms a single Galois orbit of CM types. "
        "Only this group-theoretic hypothesis is certified.";
  } else {
    cert.statement =
        "G does not act 2-transitively on G/H, so the double-transitivity hypothesis fails for "
        "(G,H). No conclusion is drawn.";
  }
  return cert;
}

}  // namespace cmred
