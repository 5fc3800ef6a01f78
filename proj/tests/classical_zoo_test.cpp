#include "support.hpp"

#include <cmred/action.hpp>
#include <cmred/classical.hpp>
#include <cmred/error.hpp>
#include <cmred/small_field.hpp>
#include <cmred/zoo.hpp>

#include <gtest/gtest.h>

namespace cmred {
namespace {

using namespace classical;

TEST(SmallField, PrimeFieldsAreModularArithmetic) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    const SmallField F(p);
    EXPECT_EQ(F.characteristic(), p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        EXPECT_EQ(F.add(a, b), (a + b) % p);
        EXPECT_EQ(F.mul(a, b), (a * b) % p);
      }
  }
}

TEST(SmallField, ExtensionFields) {
  const SmallField F4(4);
  EXPECT_EQ(F4.mul(2, 2), 3);  // x^2 = x + 1
  const SmallField F8(8);
  EXPECT_EQ(F8.pow(2, 3), 3);  // x^3 = x + 1
  EXPECT_EQ(F8.pow(2, 7), 1);
  const SmallField F9(9);
  EXPECT_EQ(F9.mul(3, 3), F9.neg(1));  // x^2 = -1
  for (int q : {4, 8, 9}) {
    const SmallField F(q);
    for (int a = 1; a < q; ++a) {
      EXPECT_EQ(F.mul(a, F.inv(a)), 1);
      EXPECT_EQ(F.pow(a, q - 1), 1);
    }
    EXPECT_THROW(F.inv(0), std::domain_error);
  }
}

TEST(SmallField, UnsupportedOrders) {
  for (int q : {0, 1, 6, 10, 16, 25}) {
    EXPECT_FALSE(SmallField::supported(q));
    EXPECT_THROW(SmallField{q}, UnsupportedParameter);
  }
}

TEST(PointSet, ProjectiveSpaces) {
  const SmallField F3(3), F2(2);
  const PointSet p1 = projective_space(F3, 2);
  EXPECT_EQ(p1.size(), 4u);
  EXPECT_EQ(p1.point(0), (Vec{1, 0}));
  EXPECT_EQ(p1.index_of(Vec{2, 2}), p1.index_of(Vec{1, 1}));
  EXPECT_EQ(p1.index_of(Vec{0, 0}), PointSet::npos);
  const PointSet p2 = projective_space(F2, 3);
  EXPECT_EQ(p2.size(), 7u);
  EXPECT_EQ(p2.point(0), (Vec{1, 0, 0}));
  for (std::size_t i = 0; i < p2.size(); ++i) EXPECT_EQ(p2.index_of(p2.point(i)), i);
}

TEST(PointSet, PermutationOfIsAHomomorphism) {
  const SmallField F(5);
  const PointSet P = projective_space(F, 2);
  const auto mats = all_matrices(F, 2, [&](const Matrix& A) { return determinant(F, A) != 0; });
  EXPECT_EQ(mats.size(), 480u);
  for (std::size_t a = 0; a < mats.size(); a += 37)
    for (std::size_t b = 0; b < mats.size(); b += 41)
      EXPECT_EQ(P.permutation_of(multiply(F, mats[a], mats[b])),
                P.permutation_of(mats[a]) * P.permutation_of(mats[b]));
  const PermutationImage img = permutation_image(P, mats);
  EXPECT_EQ(img.kernel_size, 4u);
  EXPECT_EQ(img.distinct.size(), 120u);
}

TEST(Zoo, StabilizerContainsUpperTriangularMatrices) {
  for (int q : {2, 3, 4}) {
    const ZooGroup z = build_zoo_group(parse_zoo_spec("pgl3:" + std::to_string(q)));
    const FiniteGroup H = FiniteGroup::close_generators(z.group.degree(), z.subgroup_gens);
    const SmallField F(q);
    const PointSet P = projective_space(F, 3);
    const auto upper = all_matrices(F, 3, [&](const Matrix& A) {
      return A.at(1, 0) == 0 && A.at(2, 0) == 0 && A.at(2, 1) == 0 && determinant(F, A) != 0;
    });
    for (std::size_t k = 0; k < upper.size(); k += 1 + upper.size() / 200)
      EXPECT_TRUE(H.contains(P.permutation_of(upper[k]))) << q;
  }
}

TEST(Symplectic, PolarizingFormsSplitByType) {
  for (int m : {2, 3}) {
    const SymplecticSpace V(m);
    const auto forms = V.polarizing_forms();
    EXPECT_EQ(forms.size(), std::size_t{1} << (2 * m));
    const auto trans = V.transvections();
    EXPECT_EQ(trans.size(), V.vector_count() - 1);
    const FormTable plus = V.table_of([&](BitVec v) { return V.q_plus(v); });
    const FormTable minus = V.table_of([&](BitVec v) { return V.q_minus(v); });
    const auto op = V.form_orbit(plus, trans);
    const auto om = V.form_orbit(minus, trans);
    const std::size_t two_m1 = std::size_t{1} << (m - 1), two_m = std::size_t{1} << m;
    EXPECT_EQ(op.size(), two_m1 * (two_m + 1));
    EXPECT_EQ(om.size(), two_m1 * (two_m - 1));
    EXPECT_EQ(op.front(), plus);
    EXPECT_EQ(om.front(), minus);
    for (FormTable f : forms) EXPECT_TRUE(V.polarizes_to_psi(f));
    EXPECT_EQ(V.act(V.identity(), plus), plus);
    EXPECT_TRUE(V.preserves(V.identity(), minus));
  }
  EXPECT_THROW(SymplecticSpace{4}, UnsupportedParameter);
}

TEST(Symplectic, Sp4ByBruteForce) {
  const SymplecticSpace V(2);
  std::uint64_t brute = 0;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    BitMatrix x(4);
    for (int c = 0; c < 4; ++c) x[static_cast<std::size_t>(c)] = (code >> (4 * c)) & 0xF;
    brute += V.is_symplectic(x);
  }
  EXPECT_EQ(brute, 720u);
  EXPECT_EQ(V.count_symplectic(), 720u);
  const auto all = V.matrix_closure(V.transvections());
  EXPECT_EQ(all.size(), 720u);
  for (const auto& x : all) EXPECT_TRUE(V.is_symplectic(x));
}

TEST(Symplectic, OrthogonalStabilizers) {
  const SymplecticSpace V(2);
  const auto all = V.matrix_closure(V.transvections());
  const FormTable plus = V.table_of([&](BitVec v) { return V.q_plus(v); });
  const FormTable minus = V.table_of([&](BitVec v) { return V.q_minus(v); });
  std::size_t gp = 0, gm = 0;
  for (const auto& x : all) {
    EXPECT_EQ(V.preserves(x, plus), V.act(x, plus) == plus);
    gp += V.preserves(x, plus);
    gm += V.preserves(x, minus);
  }
  EXPECT_EQ(gp, 72u);
  EXPECT_EQ(gm, 120u);
  // The zoo subgroups act as these stabilizers.
  for (const char* spec : {"sp4f2:+", "sp4f2:-"}) {
    const ZooGroup z = build_zoo_group(parse_zoo_spec(spec));
    const FiniteGroup H = FiniteGroup::close_generators(z.group.degree(), z.subgroup_gens);
    EXPECT_EQ(H.order(), spec[6] == '+' ? 72u : 120u);
  }
  EXPECT_EQ(SymplecticSpace(3).count_symplectic(), 1451520u);
}

TEST(Unitary, GroupOrdersAndForm) {
  for (int q : {2, 3}) {
    const SmallField F(q * q);
    const auto gu = unitary_group(F, q);
    EXPECT_EQ(gu.size(), q == 2 ? 648u : 24192u);
    const PointSet iso = isotropic_points(F, q);
    EXPECT_EQ(iso.size(), static_cast<std::size_t>(q * q * q + 1));
    EXPECT_EQ(hermitian(F, q, Vec{1, 0, 0}, Vec{1, 0, 0}), 0);
    EXPECT_EQ(hermitian(F, q, Vec{1, 0, 0}, Vec{0, 0, 1}), 1);
    EXPECT_EQ(hermitian(F, q, Vec{0, 1, 0}, Vec{0, 1, 0}), 1);
    for (std::size_t k = 0; k < gu.size(); k += gu.size() / 40) {
      for (std::size_t a = 0; a < iso.size(); ++a)
        for (std::size_t b = 0; b < iso.size(); b += 3)
          EXPECT_EQ(hermitian(F, q, apply(F, gu[k], iso.point(a)), apply(F, gu[k], iso.point(b))),
                    hermitian(F, q, iso.point(a), iso.point(b)));
      EXPECT_NO_THROW(iso.permutation_of(gu[k]));
    }
  }
}

TEST(Zoo, OrdersAndDegrees) {
  struct Row {
    const char* spec;
    std::uint64_t order;
    std::size_t degree;
  };
  for (const Row r : {Row{"sym:5", 120, 5}, Row{"alt:5", 60, 5}, Row{"cyclic:7", 7, 7},
                      Row{"dihedral:6", 12, 6}, Row{"psl2:7", 168, 8}, Row{"pgl2:7", 336, 8},
                      Row{"psl2:8", 504, 9}, Row{"psl3:2", 168, 7}, Row{"pgl3:3", 5616, 13},
                      Row{"sp4f2:+", 720, 10}, Row{"sp4f2:-", 720, 6}, Row{"psu3:2", 72, 9},
                      Row{"pgu3:2", 216, 9}, Row{"psu3:3", 6048, 28}}) {
    const ZooGroup z = build_zoo_group(parse_zoo_spec(r.spec));
    EXPECT_EQ(z.group.order(), r.order) << r.spec;
    EXPECT_EQ(z.independent_order, r.order) << r.spec;
    EXPECT_EQ(z.group.degree(), r.degree) << r.spec;
    EXPECT_FALSE(z.description.empty());
  }
}

TEST(Zoo, SubgroupIsPointStabilizer) {
  for (const char* spec : {"sym:6", "dihedral:9", "psl2:9", "psl3:3", "sp4f2:+", "psu3:2", "cyclic:12"}) {
    const ZooGroup z = build_zoo_group(parse_zoo_spec(spec));
    const FiniteGroup H = FiniteGroup::close_generators(z.group.degree(), z.subgroup_gens);
    for (const auto& g : z.subgroup_gens) {
      EXPECT_EQ(g[0], 0u) << spec;
      EXPECT_TRUE(z.group.contains(g));
    }
    std::size_t fixing = 0;
    for (ElementId g = 0; g < z.group.order(); ++g) fixing += z.group.images(g)[0] == 0;
    EXPECT_EQ(H.order(), fixing) << spec;
  }
}

TEST(Zoo, Psl2IsTwoTransitive) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    for (const char* fam : {"psl2:", "pgl2:"}) {
      const auto m = testing::zoo_model((fam + std::to_string(q)).c_str());
      EXPECT_EQ(m.n(), static_cast<std::size_t>(q + 1));
      EXPECT_TRUE(is_k_transitive(m.coset_action(), 2).transitive) << fam << q;
    }
  }
}

TEST(Zoo, ParseSpecs) {
  EXPECT_EQ(parse_zoo_spec("sym:4"), (ZooSpec{ZooFamily::Sym, 4}));
  EXPECT_EQ(parse_zoo_spec("sp4f2:+"), (ZooSpec{ZooFamily::Sp4f2, 1}));
  EXPECT_EQ(parse_zoo_spec("sp6f2:-"), (ZooSpec{ZooFamily::Sp6f2, -1}));
  EXPECT_EQ(parse_zoo_spec("sp4f2:\xE2\x88\x92"), (ZooSpec{ZooFamily::Sp4f2, -1}));
  for (const char* s : {"sym:4", "psu3:3", "sp4f2:-", "pgl2:13", "cyclic:64"})
    EXPECT_EQ(parse_zoo_spec(s).to_string(), s);
}

TEST(Zoo, ParseErrorsCarryPositions) {
  struct Bad {
    const char* text;
    std::size_t position;
  };
  for (const Bad b : {Bad{"bogus:3", 0}, Bad{"sym:x", 4}, Bad{"sym", 3}, Bad{"sym:10", 4},
                      Bad{"psl2:6", 5}, Bad{"sp4f2:3", 6}, Bad{"sym:4x", 4}, Bad{"", 0}}) {
    try {
      parse_zoo_spec(b.text);
      ADD_FAILURE() << b.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), b.position) << b.text;
    }
  }
}

TEST(Zoo, LargeGroupsAreGated) {
  EXPECT_THROW(build_zoo_group(parse_zoo_spec("sp6f2:+")), UnsupportedParameter);
  EXPECT_THROW(build_zoo_group(ZooSpec{ZooFamily::Sym, 42}), UnsupportedParameter);
  const auto cat = zoo_catalog();
  EXPECT_EQ(cat.size(), 14u);
  std::size_t large = 0;
  for (const auto& e : cat) large += e.large;
  EXPECT_EQ(large, 2u);
}

}  // namespace
}  // namespace cmred
