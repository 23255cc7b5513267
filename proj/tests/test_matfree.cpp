#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "arrkit/error.hpp"
#include "arrkit/matfree/mat.hpp"
#include "arrkit/rootsys/root_system.hpp"
#include "support.hpp"

using namespace arrkit;
using namespace arrkit::testing;

namespace {

RootSystem rs(const char* s) { return RootSystem(RootSystemType::parse(s)); }

MatCertificate weyl_certificate(const RootSystem& r, const Ideal& I) {
  return certify_partition(ideal_arrangement(r, I), root_height_partition(r, I));
}

Exponents sorted(Exponents e) {
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST(VerifyMatStep, FromEmpty) {
  const auto rec = verify_mat_step(Arrangement(2, Field::rational()), {0, 0}, {qvec({1, 0}), qvec({0, 1})});
  EXPECT_TRUE(rec.ok());
  EXPECT_EQ(rec.exponents_after, (Exponents{1, 1}));
}

TEST(VerifyMatStep, HighestRootOfA2) {
  const auto base = from_int_rows(3, {{1, -1, 0}, {0, 1, -1}});
  const auto rec = verify_mat_step(base, {0, 1, 1}, {qvec({1, 0, -1})});
  EXPECT_TRUE(rec.ok());
  EXPECT_EQ(rec.counts, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(rec.exponents_after, (Exponents{0, 1, 2}));
}

TEST(VerifyMatStep, GenericFourthHyperplaneFailsCount) {
  // ker x1 meets the three braid planes in three distinct lines: drop 0, e = 2.
  const auto rec = verify_mat_step(braid(3), {0, 1, 2}, {qvec({1, 0, 0})});
  EXPECT_EQ(rec.violated, 3);
  EXPECT_EQ(rec.counts, (std::vector<std::int64_t>{0}));
}

TEST(VerifyMatStep, DependentAndCovering) {
  EXPECT_EQ(verify_mat_step(Arrangement(3, Field::rational()), {0, 0, 0}, {qvec({1, -1, 0}), qvec({0, 1, -1}), qvec({1, 0, -1})}).violated, 1);
  // The base plane x1 - x3 contains the intersection of the added planes.
  const auto base = from_int_rows(3, {{1, 0, -1}});
  EXPECT_EQ(verify_mat_step(base, {0, 0, 1}, {qvec({1, -1, 0}), qvec({0, 1, -1})}).violated, 2);
}

TEST(CertifyPartition, WeylA2AndG2) {
  const auto a2 = rs("A2");
  const auto c = weyl_certificate(a2, full_ideal(a2));
  EXPECT_TRUE(c.valid());
  EXPECT_EQ(c.exponents, (Exponents{0, 1, 2}));
  const auto g2 = rs("G2");
  const auto g = weyl_certificate(g2, full_ideal(g2));
  EXPECT_TRUE(g.valid());
  EXPECT_EQ(g.exponents, (Exponents{1, 5}));
}

TEST(CertifyPartition, SingleBlockBraidFailsRank) {
  const auto c = certify_partition(braid(3), {{0, 1, 2}});
  EXPECT_FALSE(c.valid());
  ASSERT_NE(c.violation(), nullptr);
  EXPECT_EQ(c.violation()->violated, 1);
  EXPECT_EQ(c.violation()->rank, 2u);
}

TEST(CertifyPartition, RejectsNonPartition) {
  EXPECT_THROW(certify_partition(braid(3), {{0, 1}}), InvalidInput);
  EXPECT_THROW(certify_partition(braid(3), {{0, 1}, {1, 2}}), InvalidInput);
}

TEST(CertifyFromFreeBase, EmptyBaseMatchesPlainCertificate) {
  const auto a2 = rs("A2");
  const auto I = full_ideal(a2);
  const auto arr = ideal_arrangement(a2, I);
  std::vector<std::vector<Vec>> blocks;
  for (const auto& b : root_height_partition(a2, I)) {
    blocks.emplace_back();
    for (auto h : b) blocks.back().push_back(arr.normal(h));
  }
  const auto c = certify_from_free_base(Arrangement(3, Field::rational()), {0, 0, 0}, "empty", blocks);
  EXPECT_TRUE(c.valid());
  EXPECT_EQ(c.exponents, certify_partition(arr, root_height_partition(a2, I)).exponents);
}

TEST(CertifyFromFreeBase, WrongBaseExponentsCaught) {
  // Four planes through a common line: valid with the true exponents (0,1,2).
  const std::vector<std::vector<Vec>> blocks = {{qvec({1, 1, -2})}};
  const auto good = certify_from_free_base(braid(3), {0, 1, 2}, "braid", blocks);
  EXPECT_TRUE(good.valid());
  EXPECT_EQ(good.exponents, (Exponents{0, 1, 3}));
  const auto bad = certify_from_free_base(braid(3), {1, 1, 1}, "deliberately wrong", blocks);
  EXPECT_FALSE(bad.valid());
  EXPECT_EQ(bad.violation()->violated, 3);
}

TEST(DualPartition, Examples) {
  EXPECT_EQ(dual_partition_exponents({2, 1}, 3), (Exponents{0, 1, 2}));
  EXPECT_EQ(dual_partition_exponents({2, 1, 1, 1, 1}, 2), (Exponents{1, 5}));
}

TEST(AccuracyWitnesses, A2AndG2) {
  const auto a2 = rs("A2");
  const auto c = weyl_certificate(a2, full_ideal(a2));
  const auto w = accuracy_witnesses(c);
  // (k, q): (1,1), (1,2), (2,0), (2,1).
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0].q, 1u);
  EXPECT_EQ(w[0].hyperplanes, (std::vector<std::size_t>{0}));
  EXPECT_EQ(w[0].exponents, (Exponents{0, 1}));
  EXPECT_EQ(w[2].q, 0u);
  EXPECT_EQ(w[2].exponents, (Exponents{0, 1, 2}));
  EXPECT_EQ(w[2].flat.rank(), 0u);

  const auto g2 = rs("G2");
  const auto wg = accuracy_witnesses(weyl_certificate(g2, full_ideal(g2)));
  const auto top = std::find_if(wg.begin(), wg.end(), [](const Witness& x) { return x.block == 5 && x.q == 1; });
  ASSERT_NE(top, wg.end());
  EXPECT_EQ(top->hyperplanes, (std::vector<std::size_t>{5}));
  EXPECT_EQ(top->exponents, (Exponents{1}));
}

TEST(SearchMatPartition, HintAndExhaustive) {
  const auto b2 = rs("B2");
  const auto I = full_ideal(b2);
  const auto hinted = search_mat_partition(ideal_arrangement(b2, I), root_height_partition(b2, I));
  ASSERT_TRUE(hinted.partition);
  EXPECT_EQ(*hinted.partition, root_height_partition(b2, I));

  const auto boolean = search_mat_partition(boolean_arrangement(2), std::nullopt);
  ASSERT_TRUE(boolean.partition);
  EXPECT_EQ(*boolean.partition, (std::vector<std::vector<std::size_t>>{{0, 1}}));

  // Exhaustive search recovers a partition for B2 and A3 too.
  for (const char* t : {"B2", "A3", "B3"}) {
    const auto r = rs(t);
    const auto arr = weyl_arrangement(r);
    const auto found = search_mat_partition(arr, std::nullopt);
    ASSERT_TRUE(found.partition) << t;
    EXPECT_TRUE(certify_partition(arr, *found.partition).valid()) << t;
  }

  // Generic 4 planes in rank 3: chi does not split.
  const auto generic = search_mat_partition(from_int_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), std::nullopt);
  EXPECT_FALSE(generic.partition);
  EXPECT_TRUE(generic.conclusive);
}

TEST(MatProperties, IdealsOfSmallTypesAreCertifiedByHeights) {
  int cases = 0;
  for (const char* t : {"A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4", "B4", "C4", "F4"}) {
    const auto r = rs(t);
    for (const auto& I : enumerate_ideals(r)) {
      const auto arr = ideal_arrangement(r, I);
      const auto c = certify_partition(arr, root_height_partition(r, I));
      ASSERT_TRUE(c.valid()) << t;
      std::int64_t sum = 0;
      for (auto e : c.exponents) sum += e;
      EXPECT_EQ(sum, static_cast<std::int64_t>(arr.size()));
      ++cases;
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(MatProperties, FactorizationAndBlockPermutation) {
  std::mt19937 rng(17);
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    const auto r = rs(t);
    for (const auto& I : enumerate_ideals(r)) {
      const auto arr = ideal_arrangement(r, I);
      auto blocks = root_height_partition(r, I);
      const auto c = certify_partition(arr, blocks);
      EXPECT_EQ(characteristic_polynomial(arr), IntPoly::from_roots(c.exponents)) << t;
      for (auto& b : blocks) std::shuffle(b.begin(), b.end(), rng);
      const auto p = certify_partition(arr, blocks);
      EXPECT_TRUE(p.valid());
      EXPECT_EQ(p.exponents, c.exponents);
    }
  }
}

TEST(MatProperties, NoncoverEqualsSingleHyperplaneTest) {
  // Subspace X = ker(x1) ∩ ker(x2) in Q^4 against a union of planes: it lies
  // in the union only if it lies in one of them.
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vec> base;
    for (int i = 0; i < 3; ++i) {
      Vec v = qvec({d(rng), d(rng), d(rng), d(rng)});
      // Keep the added planes ker x1 and ker x2 themselves out of the base.
      if (v[2].is_zero() && v[3].is_zero() && (v[0].is_zero() || v[1].is_zero())) v = qvec({1, 1, 0, 0});
      base.push_back(v);
    }
    const auto b = Arrangement::from_forms(4, Field::rational(), base);
    const auto rec = verify_mat_step(b, sorted({0, 0, 0, static_cast<std::int64_t>(b.size())}), {qvec({1, 0, 0, 0}), qvec({0, 1, 0, 0})});
    bool some_contains = false;
    for (const auto& n : b.normals()) some_contains |= n[2].is_zero() && n[3].is_zero();
    EXPECT_EQ(rec.noncover_ok, !some_contains);
  }
}
