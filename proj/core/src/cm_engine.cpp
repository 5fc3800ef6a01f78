#include "cmred/cm_engine.hpp"

#include <cmred/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace cmred {

namespace {

std::string subset_string(Subset s) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int i : subset_indices(s)) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << ']';
  return os.str();
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + stream);
}

Subset random_subset(std::mt19937_64& rng, std::size_t n, std::size_t eps) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  Subset s = 0;
  for (std::size_t i = 0; i < eps; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pts[i], pts[j]);
    s |= Subset{1} << pts[i];
  }
  return s;
}

IdentityReport merge(std::string name, const std::vector<IdentityReport>& parts) {
  IdentityReport r;
  r.name = std::move(name);
  for (const auto& p : parts) {
    r.cases += p.cases;
    if (p.status == CheckStatus::Fail && r.status != CheckStatus::Fail) {
      r.status = CheckStatus::Fail;
      r.witness = p.witness;
    }
  }
  return r;
}

}  // namespace

std::string Witness::describe() const {
  std::ostringstream os;
  if (cm_type) os << "S=" << subset_string(*cm_type) << ' ';
  os << "class " << class_index << " bit " << bit << ": " << lhs << " != " << rhs;
  return os.str();
}

IdentityReport compare_class_functions(std::string name, const ClassFunction& lhs,
                                       const ClassFunction& rhs, std::optional<Subset> cm_type) {
  IdentityReport r;
  r.name = std::move(name);
  r.cases = 1;
  if (lhs.class_count() != rhs.class_count()) {
    throw std::invalid_argument("class functions live on different groups");
  }
  for (std::size_t c = 0; c < lhs.class_count(); ++c) {
    for (int b = 0; b < 2; ++b) {
      if (lhs.value(c, b) != rhs.value(c, b)) {
        r.status = CheckStatus::Fail;
        r.witness = Witness{cm_type, c, b, lhs.value(c, b), rhs.value(c, b)};
        return r;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Definition-level path

AlgebraElement trace_element(const UnitaryGaloisModel& model) {
  AlgebraElement tr(model.group().order());
  for (ElementId g = 0; g < model.group().order(); ++g) tr.set({g, 0}, Rational(1));
  return tr;
}

AlgebraElement phi_c(const CMType& phi, const UnitaryGaloisModel& model) {
  AlgebraElement out(model.group().order());
  const auto& coset_of = model.cosets().coset_of;
  for (ElementId g = 0; g < model.group().order(); ++g) {
    const std::uint8_t b = subset_contains(phi.S, coset_of[g]) ? 1 : 0;
    out.set({g, b}, Rational(1));
  }
  return out;
}

AlgebraElement a_phi(const CMType& phi, const UnitaryGaloisModel& model, std::size_t brute_cap) {
  if (model.gamma_order() > brute_cap) {
    throw BruteCapExceeded("|G x Z/2| = " + std::to_string(model.gamma_order()) +
                           " exceeds brute-force cap " + std::to_string(brute_cap));
  }
  const AlgebraElement p = phi_c(phi, model);
  AlgebraElement a = convolve(p, reflex(p, model.group()), model.group());
  a *= Rational(1, static_cast<long>(model.gamma_order()));
  return a;
}

ClassFunction a_phi0_brute(const CMType& phi, const UnitaryGaloisModel& model,
                           std::size_t brute_cap) {
  return class_project(a_phi(phi, model, brute_cap), model.shared_classes());
}

// ---------------------------------------------------------------------------
// Permutation character and conjugate-subgroup sums

ClassFunction perm_char(const UnitaryGaloisModel& model) {
  ClassFunction chi(model.shared_classes());
  const auto& P = model.classes();
  for (std::size_t c = 0; c < P.count(); ++c) {
    auto row = model.coset_action().row(P.class_reps[c]);
    long fixed = 0;
    for (std::size_t i = 0; i < row.size(); ++i) fixed += row[i] == i ? 1 : 0;
    chi.set(c, 0, Rational(fixed));
  }
  return chi;
}

ClassFunction conj_subgroup_sum(const UnitaryGaloisModel& model) {
  ClassFunction f(model.shared_classes());
  const auto& G = model.group();
  const auto& P = model.classes();
  const auto& coset_of = model.cosets().coset_of;
  std::vector<Point> scratch;
  for (std::size_t c = 0; c < P.count(); ++c) {
    const ElementId g = P.class_reps[c];
    long count = 0;
    // g in x H x^-1  <=>  x^-1 g x in H
    for (ElementId x = 0; x < G.order(); ++x) {
      if (coset_of[G.conjugate(G.inverse(x), g, scratch)] == 0) ++count;
    }
    f.set(c, 0, Rational(count));
  }
  return f;
}

IdentityReport check_conj_sum(const UnitaryGaloisModel& model) {
  ClassFunction rhs = perm_char(model);
  rhs *= Rational(static_cast<long>(model.h()));
  return compare_class_functions("conj-sum", conj_subgroup_sum(model), rhs);
}

// ---------------------------------------------------------------------------
// Closed form

ClosedForm::ClosedForm(const UnitaryGaloisModel& model)
    : model_(&model), chi_(perm_char(model)) {
  const std::size_t n = model.n();
  const std::size_t k = model.classes().count();
  pair_mass_.assign(n * n * k, 0);
  const auto& action = model.coset_action();
  const auto& class_of = model.classes().class_of;
  for (ElementId g = 0; g < model.group().order(); ++g) {
    auto row = action.row(g);
    const std::size_t c = class_of[g];
    // g lies in sigma_i H sigma_j^-1 exactly when g maps coset j to coset i.
    for (std::size_t j = 0; j < n; ++j) ++pair_mass_[(row[j] * n + j) * k + c];
  }
}

ClassFunction ClosedForm::a_phi0(const CMType& phi) const {
  const auto& P = model_->classes();
  const std::size_t n = model_->n();
  const std::size_t k = P.count();
  const long eps = static_cast<long>(phi.eps());
  const std::vector<int> members = subset_indices(phi.S);

  std::vector<std::uint64_t> offdiag(k, 0);
  for (int i : members) {
    for (int j : members) {
      if (i == j) continue;
      const std::uint64_t* m = pair_mass_.data() + (static_cast<std::size_t>(i) * n + j) * k;
      for (std::size_t c = 0; c < k; ++c) offdiag[c] += m[c];
    }
  }

  const long nl = static_cast<long>(n);
  const Rational half(1, 2);
  const Rational eps_over_n(eps, nl);
  const Rational eps_over_n2(eps, nl * nl);
  ClassFunction f(model_->shared_classes());
  for (std::size_t c = 0; c < k; ++c) {
    // (1-rho)-part: value on bit 0, its negative on bit 1.
    Rational twisted = -eps_over_n + eps_over_n2 * chi_.value(c, 0);
    twisted += Rational(mpz_class(static_cast<unsigned long>(offdiag[c])),
                        mpz_class(static_cast<unsigned long>(n * P.class_sizes[c])));
    f.set(c, 0, half + twisted);
    f.set(c, 1, -twisted);
  }
  return f;
}

ClassFunction a_phi0_closed(const CMType& phi, const UnitaryGaloisModel& model) {
  return ClosedForm(model).a_phi0(phi);
}

// ---------------------------------------------------------------------------
// Checks

std::vector<CMType> select_cm_types(const UnitaryGaloisModel& model, std::size_t eps,
                                    const SamplingPolicy& policy) {
  const std::size_t n = model.n();
  if (eps > n) return {};
  if (binomial(n, eps) <= policy.exhaustive_limit) {
    return enumerate_cm_types(model, eps, policy.exhaustive_limit);
  }
  auto rng = seeded_rng(policy.seed, eps);
  std::set<Subset> picked;
  while (picked.size() < policy.samples_per_eps) picked.insert(random_subset(rng, n, eps));
  std::vector<Subset> sorted(picked.begin(), picked.end());
  std::sort(sorted.begin(), sorted.end(), subset_lex_less);
  std::vector<CMType> out;
  for (Subset s : sorted) out.push_back({s});
  return out;
}

ClassFunction a_phi0(const ClosedForm& closed, const CMType& phi, A0Path path,
                     std::size_t brute_cap) {
  return path == A0Path::Closed ? closed.a_phi0(phi)
                                : a_phi0_brute(phi, closed.model(), brute_cap);
}

IdentityReport check_closed_form(const ClosedForm& closed, std::size_t eps_max,
                           const SamplingPolicy& policy, std::size_t brute_cap) {
  const auto& model = closed.model();
  if (model.gamma_order() > brute_cap) {
    IdentityReport r;
    r.name = "closed-form";
    r.status = CheckStatus::Skipped;
    r.note = "skipped: cap";
    return r;
  }
  std::vector<IdentityReport> parts;
  for (std::size_t eps = 0; eps <= std::min(eps_max, model.n()); ++eps) {
    for (const CMType& phi : select_cm_types(model, eps, policy)) {
      parts.push_back(compare_class_functions("closed-form", a_phi0_brute(phi, model, brute_cap),
                                              closed.a_phi0(phi), phi.S));
      if (!parts.back().passed()) return merge("closed-form", parts);
    }
  }
  return merge("closed-form", parts);
}

IdentityReport check_reduction(const ClosedForm& closed, const CMType& phi, A0Path path,
                            std::size_t brute_cap) {
  const std::vector<int> members = subset_indices(phi.S);
  const long eps = static_cast<long>(members.size());
  auto a0 = [&](Subset s) { return a_phi0(closed, CMType{s}, path, brute_cap); };

  ClassFunction rhs(closed.model().shared_classes());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      rhs += a0((Subset{1} << members[a]) | (Subset{1} << members[b]));
    }
  }
  for (int i : members) rhs -= Rational(eps - 2) * a0(Subset{1} << i);
  rhs += Rational((eps - 1) * (eps - 2), 2) * a0(0);
  return compare_class_functions("reduction", a0(phi.S), rhs, phi.S);
}

IdentityReport check_reduction_all(const ClosedForm& closed, std::size_t eps_max,
                                const SamplingPolicy& policy) {
  const auto& model = closed.model();
  const std::size_t n = model.n();
  // Every right-hand side is assembled from these.
  const ClassFunction empty = closed.a_phi0({0});
  std::vector<ClassFunction> single;
  for (std::size_t i = 0; i < n; ++i) single.push_back(closed.a_phi0({Subset{1} << i}));
  std::map<std::pair<int, int>, ClassFunction> pair;

  std::vector<IdentityReport> parts;
  for (std::size_t e = 0; e <= std::min(eps_max, n); ++e) {
    const long eps = static_cast<long>(e);
    for (const CMType& phi : select_cm_types(model, e, policy)) {
      const std::vector<int> members = subset_indices(phi.S);
      ClassFunction rhs(model.shared_classes());
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const auto key = std::make_pair(members[a], members[b]);
          auto it = pair.find(key);
          if (it == pair.end()) {
            it = pair.emplace(key, closed.a_phi0({(Subset{1} << key.first) |
                                                  (Subset{1} << key.second)})).first;
          }
          rhs += it->second;
        }
      }
      ClassFunction singles(model.shared_classes());
      for (int i : members) singles += single[i];
      rhs -= Rational(eps - 2) * singles;
      rhs += Rational((eps - 1) * (eps - 2), 2) * empty;
      parts.push_back(compare_class_functions("reduction", closed.a_phi0(phi), rhs, phi.S));
      if (!parts.back().passed()) return merge("reduction", parts);
    }
  }
  return merge("reduction", parts);
}

Cm0Result check_cm0(const ClassFunction& f) {
  Cm0Result r;
  if (f.class_count() == 0) return r;
  const Rational c = f.value(0, 0) + f.value(0, 1);
  for (std::size_t k = 1; k < f.class_count(); ++k) {
    const Rational s = f.value(k, 0) + f.value(k, 1);
    if (s != c) {
      r.witness = Witness{std::nullopt, k, 0, s, c};
      return r;
    }
  }
  r.constant = c;
  return r;
}

IdentityReport check_cm0_all(const ClosedForm& closed, std::size_t eps_max,
                             const SamplingPolicy& policy) {
  IdentityReport r;
  r.name = "cm0";
  const Rational half(1, 2);
  for (std::size_t e = 0; e <= std::min(eps_max, closed.model().n()); ++e) {
    for (const CMType& phi : select_cm_types(closed.model(), e, policy)) {
      ++r.cases;
      const Cm0Result res = check_cm0(closed.a_phi0(phi));
      if (!res.constant || *res.constant != half) {
        r.status = CheckStatus::Fail;
        if (res.witness) {
          r.witness = *res.witness;
        } else {
          r.witness = Witness{std::nullopt, 0, 0, *res.constant, half};
        }
        r.witness->cm_type = phi.S;
        return r;
      }
    }
  }
  return r;
}

IdentityReport check_galois_invariance(const ClosedForm& closed, std::size_t pairs,
                                       std::uint64_t seed, A0Path path, std::size_t brute_cap) {
  const auto& model = closed.model();
  auto rng = seeded_rng(seed, 0x6761'6c6fULL);
  std::vector<IdentityReport> parts;
  for (std::size_t p = 0; p < pairs; ++p) {
    const GammaElement x{static_cast<ElementId>(rng() % model.group().order()),
                         static_cast<std::uint8_t>(rng() % 2)};
    const std::size_t eps = static_cast<std::size_t>(rng() % (model.n() + 1));
    const CMType phi{random_subset(rng, model.n(), eps)};
    parts.push_back(compare_class_functions(
        "galois-invariance", a_phi0(closed, act(x, phi, model), path, brute_cap),
        a_phi0(closed, phi, path, brute_cap), phi.S));
    if (!parts.back().passed()) break;
  }
  return merge("galois-invariance", parts);
}

}  // namespace cmred
