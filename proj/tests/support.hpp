#pragma once

// Independent reference computations for the unit tests. They work on
// Permutation values and plain containers so that they share as little as
// possible with the library code they check.

#include <cmred/cm_engine.hpp>
#include <cmred/galois_model.hpp>
#include <cmred/zoo.hpp>

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace cmred::testing {

inline UnitaryGaloisModel zoo_model(const char* spec, bool large = false) {
  ZooOptions o;
  o.allow_large = large;
  ZooGroup z = build_zoo_group(parse_zoo_spec(spec), o);
  return build_model(std::move(z.group), z.subgroup_gens);
}

inline UnitaryGaloisModel model_from(std::size_t degree, std::vector<Permutation> gens,
                                     std::vector<Permutation> sub) {
  return build_model(FiniteGroup::close_generators(degree, gens), sub);
}

/// Every product of the generators, by naive set closure.
inline std::set<Permutation> closure_oracle(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Conjugacy classes as sets of permutations.
inline std::set<std::set<Permutation>> classes_oracle(const std::set<Permutation>& G) {
  std::set<std::set<Permutation>> out;
  for (const auto& g : G) {
    std::set<Permutation> cls;
    for (const auto& x : G) cls.insert(x * g * x.inverse());
    out.insert(std::move(cls));
  }
  return out;
}

using GammaPerm = std::pair<Permutation, int>;
using NaiveElement = std::map<GammaPerm, Rational>;

inline NaiveElement naive_from(const AlgebraElement& a, const FiniteGroup& G) {
  NaiveElement out;
  a.for_each([&](GammaElement x, const Rational& v) { out[{G.element(x.g), x.b}] = v; });
  return out;
}

/// (a * b)(x) = sum_y a(y) b(y^-1 x), with the product taken on (perm, bit)
/// pairs directly.
inline NaiveElement naive_convolve(const NaiveElement& a, const NaiveElement& b) {
  NaiveElement out;
  for (const auto& [y, ay] : a)
    for (const auto& [z, bz] : b) {
      GammaPerm x{y.first * z.first, y.second ^ z.second};
      out[x] += ay * bz;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Phi_S^c as a predicate: (g, b) is in it iff b == [g lies in some sigma_i H
/// with i in S], with membership decided by sigma_i^-1 g in H.
inline bool in_phi_c(const UnitaryGaloisModel& m, Subset S, ElementId g, int b) {
  const FiniteGroup& G = m.group();
  const std::set<ElementId> H(m.cosets().subgroup.begin(), m.cosets().subgroup.end());
  int twisted = 0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (!subset_contains(S, i)) continue;
    const ElementId t = G.multiply(G.inverse(m.cosets().reps[i]), g);
    if (H.count(t)) twisted = 1;
  }
  return b == twisted;
}

/// A_Phi^0 straight from the definitions: the unnormalized double sum over
/// Gamma, then an average over all conjugators.
inline std::map<GammaPerm, Rational> a_phi0_definition(const UnitaryGaloisModel& m, Subset S) {
  const FiniteGroup& G = m.group();
  const std::size_t N = G.order();
  std::vector<std::vector<bool>> phi(2, std::vector<bool>(N));
  for (ElementId g = 0; g < N; ++g)
    for (int b = 0; b < 2; ++b) phi[b][g] = in_phi_c(m, S, g, b);
  // A(x) = 1/|Gamma| sum_sigma Phi(sigma) Phi~(sigma^-1 x), Phi~(y) = Phi(y^-1)
  std::vector<std::vector<Rational>> A(2, std::vector<Rational>(N));
  const Rational inv_gamma(1, static_cast<long>(2 * N));
  for (ElementId x = 0; x < N; ++x)
    for (int bx = 0; bx < 2; ++bx) {
      long count = 0;
      for (ElementId s = 0; s < N; ++s)
        for (int bs = 0; bs < 2; ++bs) {
          if (!phi[bs][s]) continue;
          const ElementId y = G.multiply(G.inverse(s), x);  // sigma^-1 x
          if (phi[bs ^ bx][G.inverse(y)]) ++count;
        }
      A[bx][x] = Rational(count) * inv_gamma;
    }
  std::map<GammaPerm, Rational> out;
  for (ElementId g = 0; g < N; ++g)
    for (int b = 0; b < 2; ++b) {
      Rational sum;
      for (ElementId h = 0; h < N; ++h) sum += A[b][G.conjugate(h, g)];
      out[{G.element(g), b}] = sum * Rational(1, static_cast<long>(N));
    }
  return out;
}

/// The four-term closed form assembled as an element of the group algebra,
/// with the double-coset term materialized element by element and
/// conjugated by every g, then projected onto classes.
inline ClassFunction closed_form_materialized(const UnitaryGaloisModel& m, Subset S) {
  const FiniteGroup& G = m.group();
  const std::size_t N = G.order();
  const std::size_t n = m.n();
  const std::size_t h = m.h();
  const long eps = static_cast<long>(subset_size(S));
  const auto& reps = m.cosets().reps;
  const auto& H = m.cosets().subgroup;

  AlgebraElement A(N);
  auto add_one_minus_rho = [&](ElementId g, const Rational& c) {
    A.add({g, 0}, c);
    A.add({g, 1}, -c);
  };
  // 1/2 tr - (eps/n)(1 - rho) tr
  for (ElementId g = 0; g < N; ++g) {
    A.add({g, 0}, Rational(1, 2));
    add_one_minus_rho(g, -Rational(eps, static_cast<long>(n)));
  }
  // (eps/n^2)(1 - rho) chi, chi(g) = #{i : sigma_i^-1 g sigma_i in H}
  const std::set<ElementId> Hs(H.begin(), H.end());
  for (ElementId g = 0; g < N; ++g) {
    long fixed = 0;
    for (std::size_t i = 0; i < n; ++i)
      fixed += Hs.count(G.multiply(G.inverse(reps[i]), G.multiply(g, reps[i])));
    add_one_minus_rho(g, Rational(eps * fixed, static_cast<long>(n * n)));
  }
  // 1/(h n^2) (1 - rho) sum_g g (sum_{i != j in S} sigma_i H sigma_j^-1) g^-1
  const Rational c(1, static_cast<long>(h * n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !subset_contains(S, i) || !subset_contains(S, j)) continue;
      for (ElementId x : H) {
        const ElementId y = G.multiply(reps[i], G.multiply(x, G.inverse(reps[j])));
        for (ElementId g = 0; g < N; ++g) add_one_minus_rho(G.conjugate(g, y), c);
      }
    }
  return class_project(A, m.shared_classes());
}

inline ClassFunction from_map(const UnitaryGaloisModel& m,
                              const std::map<GammaPerm, Rational>& values) {
  ClassFunction f(m.shared_classes());
  for (std::size_t c = 0; c < m.classes().count(); ++c)
    for (int b = 0; b < 2; ++b)
      f.set(c, b, values.at({m.group().element(m.classes().class_reps[c]), b}));
  return f;
}

inline Subset random_subset(std::size_t n, std::mt19937_64& rng) {
  return n == 0 ? 0 : (rng() & full_subset(n));
}

}  // namespace cmred::testing
