#include "support.hpp"

#include <cmred/action.hpp>
#include <cmred/conjugacy.hpp>
#include <cmred/cosets.hpp>
#include <cmred/error.hpp>
#include <cmred/finite_group.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace cmred {
namespace {

using testing::closure_oracle;

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<int>> c) {
  return Permutation::from_cycles(n, c);
}

FiniteGroup s3() { return FiniteGroup::close_generators(3, std::vector{cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }
FiniteGroup z(std::size_t n) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
  return FiniteGroup::close_generators(n, std::vector{Permutation::from_images(img)});
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images(std::vector{0, 0, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_images(std::vector{0, 3, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_images(std::vector{-1, 0, 1}), InvalidPermutation);
  EXPECT_NO_THROW(Permutation::from_images(std::vector{2, 0, 1}));
}

TEST(Permutation, ComposesRightToLeft) {
  const Permutation a = cyc(3, {{0, 1}});
  const Permutation b = cyc(3, {{1, 2}});
  // (a*b)(1) = a(b(1)) = a(2) = 2
  EXPECT_EQ((a * b)[1], 2);
  EXPECT_EQ((a * b)[2], 0);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.to_string(), "[1,0,2]");
}

TEST(Permutation, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> a(7), b(7), c(7);
    std::iota(a.begin(), a.end(), 0);
    b = a;
    c = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    const auto A = Permutation::from_images(a), B = Permutation::from_images(b),
               C = Permutation::from_images(c);
    EXPECT_EQ((A * B) * C, A * (B * C));
  }
}

TEST(FiniteGroup, SmallOrders) {
  EXPECT_EQ(s3().order(), 6u);
  EXPECT_EQ(FiniteGroup::close_generators(4, std::vector<Permutation>{}).order(), 1u);
  EXPECT_EQ(z(3).order(), 3u);
}

TEST(FiniteGroup, IdentityFirstAndDeterministic) {
  const FiniteGroup a = s3();
  const FiniteGroup b = s3();
  EXPECT_TRUE(a.element(0).is_identity());
  for (ElementId i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(i), b.element(i));
}

TEST(FiniteGroup, MatchesNaiveClosureOnZooGroups) {
  for (const char* spec : {"sym:5", "alt:5", "dihedral:7", "psl2:7", "sp4f2:-", "psu3:2"}) {
    ZooGroup zg = build_zoo_group(parse_zoo_spec(spec));
    const FiniteGroup& G = zg.group;
    std::vector<Permutation> gens;
    for (ElementId g : G.generators()) gens.push_back(G.element(g));
    const auto oracle = closure_oracle(G.degree(), gens);
    ASSERT_EQ(oracle.size(), G.order()) << spec;
    for (const auto& p : oracle) EXPECT_TRUE(G.contains(p)) << spec;
  }
}

TEST(FiniteGroup, ClosedUnderProductsAndInverses) {
  ZooGroup zg = build_zoo_group(parse_zoo_spec("pgl2:5"));
  const FiniteGroup& G = zg.group;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto a = static_cast<ElementId>(rng() % G.order());
    const auto b = static_cast<ElementId>(rng() % G.order());
    const auto ab = G.find(G.element(a) * G.element(b));
    ASSERT_TRUE(ab.has_value());
    EXPECT_EQ(*ab, G.multiply(a, b));
    EXPECT_EQ(G.element(G.inverse(a)), G.element(a).inverse());
    EXPECT_EQ(G.element(G.conjugate(a, b)), G.element(a) * G.element(b) * G.element(a).inverse());
  }
}

TEST(FiniteGroup, WordsReproduceElements) {
  const FiniteGroup G = build_zoo_group(parse_zoo_spec("sym:5")).group;
  for (ElementId k = 1; k < G.order(); ++k) {
    const Permutation gen = G.element(G.generators()[G.word_generator(k)]);
    EXPECT_EQ(gen * G.element(G.word_parent(k)), G.element(k));
  }
}

TEST(FiniteGroup, ElementCap) {
  GroupLimits small;
  small.element_cap = 100;
  std::vector gens{cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})};
  EXPECT_THROW(FiniteGroup::close_generators(6, gens, small), ElementCapExceeded);
  EXPECT_THROW(FiniteGroup::close_generators(5, gens), InvalidPermutation);
}

TEST(FiniteGroup, LargeGroupWithoutTableAgreesWithPermutations) {
  const FiniteGroup G = build_zoo_group(parse_zoo_spec("sym:7")).group;
  ASSERT_FALSE(G.has_table());
  std::mt19937_64 rng(5);
  std::vector<Point> scratch;
  for (int t = 0; t < 200; ++t) {
    const auto a = static_cast<ElementId>(rng() % G.order());
    const auto b = static_cast<ElementId>(rng() % G.order());
    EXPECT_EQ(G.element(G.multiply(a, b, scratch)), G.element(a) * G.element(b));
    EXPECT_EQ(G.conjugate(a, b, scratch), G.conjugate(a, b));
  }
}

TEST(Cosets, Examples) {
  const FiniteGroup G = s3();
  const CosetSpace C = left_cosets(G, std::vector{cyc(3, {{1, 2}})});
  EXPECT_EQ(C.index(), 3u);
  EXPECT_EQ(C.subgroup_order(), 2u);
  EXPECT_EQ(C.reps[0], 0u);

  const FiniteGroup Z6 = z(6);
  const Permutation r3 = Z6.element(0) * Permutation::from_images(std::vector{3, 4, 5, 0, 1, 2});
  EXPECT_EQ(left_cosets(Z6, std::vector{r3}).index(), 3u);

  ZooGroup sp = build_zoo_group(parse_zoo_spec("sp4f2:-"));
  EXPECT_EQ(left_cosets(sp.group, sp.subgroup_gens).index(), 6u);
}

TEST(Cosets, PartitionAndWellDefined) {
  ZooGroup zg = build_zoo_group(parse_zoo_spec("psl2:5"));
  const FiniteGroup& G = zg.group;
  const CosetSpace C = left_cosets(G, zg.subgroup_gens);
  EXPECT_EQ(C.index() * C.subgroup_order(), G.order());
  std::vector<int> seen(G.order(), 0);
  for (std::size_t c = 0; c < C.index(); ++c) {
    EXPECT_EQ(C.cosets[c].size(), C.subgroup_order());
    for (ElementId g : C.cosets[c]) {
      ++seen[g];
      EXPECT_EQ(C.coset_of[g], c);
    }
    if (c > 0) {
      EXPECT_EQ(C.reps[c], C.cosets[c].front());
    }
    if (c > 1) {
      EXPECT_LT(C.cosets[c - 1].front(), C.cosets[c].front());
    }
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  // a and b share a left coset iff a^-1 b lies in H.
  const std::set<ElementId> H(C.subgroup.begin(), C.subgroup.end());
  for (ElementId a = 0; a < G.order(); a += 7)
    for (ElementId b = 0; b < G.order(); ++b)
      EXPECT_EQ(C.coset_of[a] == C.coset_of[b], H.count(G.multiply(G.inverse(a), b)) == 1);
}

TEST(Cosets, RejectsForeignSubgroup) {
  const FiniteGroup G = z(4);
  EXPECT_THROW(left_cosets(G, std::vector{cyc(4, {{0, 1}})}), SubgroupNotContained);
}

TEST(Conjugacy, Examples) {
  const ConjugacyPartition P = conjugacy_classes(s3());
  std::vector<std::size_t> sizes = P.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(P.class_sizes[0], 1u);
  EXPECT_EQ(conjugacy_classes(z(4)).count(), 4u);
}

TEST(Conjugacy, MatchesOracle) {
  for (const char* spec : {"sp4f2:+", "psl3:2", "dihedral:8", "psu3:2"}) {
    ZooGroup zg = build_zoo_group(parse_zoo_spec(spec));
    const FiniteGroup& G = zg.group;
    const ConjugacyPartition P = conjugacy_classes(G);
    std::set<Permutation> all;
    for (ElementId g = 0; g < G.order(); ++g) all.insert(G.element(g));
    const auto oracle = testing::classes_oracle(all);
    ASSERT_EQ(oracle.size(), P.count()) << spec;
    for (const auto& cls : oracle) {
      const auto first = *G.find(*cls.begin());
      for (const auto& p : cls) EXPECT_EQ(P.class_of[*G.find(p)], P.class_of[first]);
      EXPECT_EQ(P.class_sizes[P.class_of[first]], cls.size());
    }
  }
}

TEST(CosetAction, Examples) {
  const FiniteGroup G = s3();
  const CosetSpace C = left_cosets(G, std::vector{cyc(3, {{1, 2}})});
  const ActionTable A = coset_action(G, C);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(A.image(0, i), i);
  // Natural S3 up to relabeling: fixed point counts per element agree.
  for (ElementId g = 0; g < G.order(); ++g) {
    int fixed_cosets = 0, fixed_points = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      fixed_cosets += A.image(g, i) == i;
      fixed_points += G.images(g)[i] == i;
    }
    EXPECT_EQ(fixed_cosets, fixed_points);
  }
  const FiniteGroup Z4 = z(4);
  const ActionTable R = coset_action(Z4, left_cosets(Z4, std::vector<Permutation>{}));
  for (ElementId g = 1; g < 4; ++g)
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NE(R.image(g, i), i);
}

TEST(CosetAction, IsHomomorphism) {
  for (const char* spec : {"sym:4", "psl2:5", "dihedral:6"}) {
    ZooGroup zg = build_zoo_group(parse_zoo_spec(spec));
    const FiniteGroup& G = zg.group;
    const CosetSpace C = left_cosets(G, zg.subgroup_gens);
    const ActionTable A = coset_action(G, C);
    for (ElementId a = 0; a < G.order(); ++a)
      for (ElementId b = 0; b < G.order(); ++b) {
        const ElementId ab = G.multiply(a, b);
        for (std::size_t i = 0; i < C.index(); ++i)
          ASSERT_EQ(A.image(ab, i), A.image(a, A.image(b, i))) << spec;
      }
    // Row g sends i to the coset of g * rep_i.
    for (ElementId g = 0; g < G.order(); ++g)
      for (std::size_t i = 0; i < C.index(); ++i)
        EXPECT_EQ(A.image(g, i), C.coset_of[G.multiply(g, C.reps[i])]);
  }
}

TEST(Transitivity, Examples) {
  const FiniteGroup G = s3();
  EXPECT_TRUE(is_k_transitive(ActionTable::natural(G), 2).transitive);
  const FiniteGroup Z4 = z(4);
  const auto r = is_k_transitive(ActionTable::natural(Z4), 2);
  EXPECT_FALSE(r.transitive);
  EXPECT_EQ(r.orbit_count, 3u);

  ZooGroup p = build_zoo_group(parse_zoo_spec("psl2:5"));
  const auto t = is_k_transitive(ActionTable::natural(p.group), 2);
  EXPECT_TRUE(t.transitive);
  EXPECT_EQ(t.first_orbit_size, 30u);
  EXPECT_EQ(t.orbit_count, 1u);
}

TEST(Transitivity, DownwardClosed) {
  for (const char* spec : {"sym:5", "alt:5", "psl2:7", "pgl2:5", "dihedral:5", "psl3:2"}) {
    ZooGroup zg = build_zoo_group(parse_zoo_spec(spec));
    const ActionTable A = ActionTable::natural(zg.group);
    bool prev = true;
    for (std::size_t k = 1; k <= 4; ++k) {
      const bool t = is_k_transitive(A, k).transitive;
      if (!prev) {
        EXPECT_FALSE(t) << spec << " k=" << k;
      }
      prev = t;
    }
  }
  // S5 is 5-transitive, A5 exactly 3-transitive.
  const ActionTable S5 = ActionTable::natural(build_zoo_group(parse_zoo_spec("sym:5")).group);
  EXPECT_TRUE(is_k_transitive(S5, 5).transitive);
  const ActionTable A5 = ActionTable::natural(build_zoo_group(parse_zoo_spec("alt:5")).group);
  EXPECT_TRUE(is_k_transitive(A5, 3).transitive);
  EXPECT_FALSE(is_k_transitive(A5, 4).transitive);
  EXPECT_FALSE(is_k_transitive(A5, 0).transitive);
  EXPECT_FALSE(is_k_transitive(A5, 6).transitive);
}

TEST(SubsetOrbits, Examples) {
  const ActionTable S4 = ActionTable::natural(build_zoo_group(parse_zoo_spec("sym:4")).group);
  const auto o = orbits_on_subsets(S4, 2);
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].members.size(), 6u);

  const ActionTable Z4 = ActionTable::natural(z(4));
  const auto r = orbits_on_subsets(Z4, 2);
  ASSERT_EQ(r.size(), 2u);
  std::vector<std::size_t> sizes{r[0].members.size(), r[1].members.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4}));

  const auto e = orbits_on_subsets(Z4, 0);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].representative, 0u);
}

TEST(SubsetOrbits, PartitionAllSubsets) {
  for (const char* spec : {"dihedral:7", "psl2:7", "cyclic:8", "alt:6"}) {
    const ActionTable A = ActionTable::natural(build_zoo_group(parse_zoo_spec(spec)).group);
    const std::size_t n = A.points();
    for (std::size_t eps = 0; eps <= n; ++eps) {
      const auto orbits = orbits_on_subsets(A, eps);
      std::set<Subset> all;
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        const auto& o = orbits[k];
        EXPECT_EQ(o.representative, o.members.front());
        EXPECT_TRUE(std::is_sorted(o.members.begin(), o.members.end(), subset_lex_less));
        if (k > 0) {
          EXPECT_TRUE(subset_lex_less(orbits[k - 1].representative, o.representative));
        }
        for (Subset s : o.members) {
          EXPECT_EQ(subset_size(s), eps);
          EXPECT_TRUE(all.insert(s).second);
        }
        // Closed under the generators.
        const std::set<Subset> mem(o.members.begin(), o.members.end());
        for (ElementId g : A.generators())
          for (Subset s : o.members) EXPECT_TRUE(mem.count(A.apply(g, s)));
      }
      EXPECT_EQ(all.size(), binomial(n, eps));
    }
  }
}

TEST(SubsetOrbits, Cap) {
  const ActionTable A = ActionTable::natural(build_zoo_group(parse_zoo_spec("cyclic:30")).group);
  EXPECT_THROW(orbits_on_subsets(A, 15, 1000), SubsetCapExceeded);
}

TEST(Subsets, Helpers) {
  EXPECT_EQ(binomial(10, 2), 45u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534u);
  EXPECT_EQ(binomial(3, 5), 0u);
  const auto s = enumerate_subsets(4, 2, 100);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(subset_indices(s.front()), (std::vector<int>{0, 1}));
  EXPECT_EQ(subset_indices(s.back()), (std::vector<int>{2, 3}));
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), subset_lex_less));
  EXPECT_THROW(enumerate_subsets(30, 15, 1000), SubsetCapExceeded);
  EXPECT_EQ(subset_complement(subset_from_indices(std::vector{1}), 3),
            subset_from_indices(std::vector{0, 2}));
}

}  // namespace
}  // namespace cmred
