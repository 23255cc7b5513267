#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "arrkit/arrangement/isomorphism.hpp"
#include "arrkit/error.hpp"
#include "arrkit/intermediate/intermediate.hpp"
#include "support.hpp"

using namespace arrkit;
using namespace arrkit::testing;

namespace {

IntermediateLabel L(int l, int r, int k) { return {l, r, k}; }

// Every label with l <= 4, r <= 4.
std::vector<IntermediateLabel> grid() {
  std::vector<IntermediateLabel> out;
  for (int l = 2; l <= 4; ++l)
    for (int r = 2; r <= 4; ++r)
      for (int k = 0; k <= l; ++k) out.push_back(L(l, r, k));
  return out;
}

std::set<Exponents> hyperplane_restriction_exponents(const Arrangement& a) {
  std::set<Exponents> out;
  for (std::size_t h = 0; h < a.size(); ++h)
    out.insert(*restriction_exponent_candidates(a, make_flat(a, {a.normal(h)})));
  return out;
}

}  // namespace

TEST(BuildIntermediate, Examples) {
  const auto a = build_intermediate(L(2, 2, 0));
  EXPECT_EQ(a.size(), 2u);
  // zeta = -1: x1 - x2 and x1 + x2.
  EXPECT_TRUE(a.same_hyperplanes(Arrangement::from_forms(
      2, a.field(), {Vec{Scalar::one(a.field()), Scalar::integer(-1, a.field())},
                     Vec{Scalar::one(a.field()), Scalar::one(a.field())}})));
  EXPECT_EQ(build_intermediate(L(5, 3, 1)).size(), 31u);
  EXPECT_EQ(build_intermediate(L(3, 2, 3)).size(), 9u);
  EXPECT_THROW(build_intermediate(L(5, 3, 1), 30), CapExceeded);
  EXPECT_THROW(build_intermediate(L(1, 2, 0)), InvalidInput);
  EXPECT_THROW(build_intermediate(L(3, 1, 0)), InvalidInput);
  EXPECT_THROW(build_intermediate(L(3, 2, 4)), InvalidInput);
}

TEST(IntermediateExponents, Examples) {
  EXPECT_EQ(intermediate_exponents(L(5, 3, 1)), (Exponents{1, 4, 7, 9, 10}));
  EXPECT_EQ(intermediate_exponents(L(4, 3, 0)), (Exponents{1, 4, 6, 7}));
  EXPECT_EQ(intermediate_exponents(L(2, 2, 1)), (Exponents{1, 2}));
}

TEST(Table2, Examples) {
  auto results = [](const IntermediateLabel& x) {
    std::vector<IntermediateLabel> out;
    for (const auto& row : table2_restriction_types(x)) out.push_back(row.result);
    return out;
  };
  EXPECT_EQ(results(L(4, 3, 0)), (std::vector<IntermediateLabel>{L(3, 3, 1)}));
  EXPECT_EQ(table2_restriction_types(L(4, 3, 0))[0].cls, HyperplaneClass::Any);
  EXPECT_EQ(results(L(4, 3, 4)), (std::vector<IntermediateLabel>{L(3, 3, 3)}));
  EXPECT_EQ(results(L(5, 3, 1)), (std::vector<IntermediateLabel>{L(4, 3, 1), L(4, 3, 2), L(4, 3, 4)}));
  EXPECT_EQ(results(L(5, 3, 3)), (std::vector<IntermediateLabel>{L(4, 3, 2), L(4, 3, 3), L(4, 3, 4), L(4, 3, 4)}));
  // The k+1 row needs two indices above k.
  EXPECT_EQ(results(L(4, 3, 3)), (std::vector<IntermediateLabel>{L(3, 3, 2), L(3, 3, 3), L(3, 3, 3)}));
}

TEST(Table2, ClassifyHyperplane) {
  const auto x = L(5, 3, 2);
  const auto a = build_intermediate(x);
  std::map<HyperplaneClass, std::size_t> count;
  for (const auto& n : a.normals()) ++count[classify_hyperplane(x, n)];
  EXPECT_EQ(count[HyperplaneClass::Coordinate], 2u);
  EXPECT_EQ(count[HyperplaneClass::DiffLow], 3u);     // (1,2)
  EXPECT_EQ(count[HyperplaneClass::DiffMixed], 18u);  // 2 x 3 pairs
  EXPECT_EQ(count[HyperplaneClass::DiffHigh], 9u);    // (3,4), (3,5), (4,5)
}

TEST(SymbolicAccuracy, Examples) {
  EXPECT_EQ(symbolic_accuracy(L(5, 3, 1)), Verdict::NotAccurate);
  EXPECT_EQ(symbolic_accuracy(L(5, 2, 1)), Verdict::Accurate);
  EXPECT_EQ(symbolic_accuracy(L(4, 3, 1)), Verdict::Accurate);
  EXPECT_FALSE(closed_form_accuracy(L(5, 3, 1)));
  EXPECT_TRUE(closed_form_accuracy(L(5, 2, 1)));
  EXPECT_TRUE(closed_form_accuracy(L(4, 3, 1)));
}

TEST(SymbolicAccuracy, MatchesClosedForm) {
  for (int l = 2; l <= 12; ++l)
    for (int r = 2; r <= 12; ++r)
      for (int k = 0; k <= l; ++k) {
        const auto x = L(l, r, k);
        EXPECT_EQ(symbolic_accuracy(x) == Verdict::Accurate, closed_form_accuracy(x)) << x.to_string();
      }
}

TEST(BruteForce, Examples) {
  const auto a033 = bruteforce_cross_check(L(3, 3, 0));
  EXPECT_EQ(a033.exponents, (Exponents{1, 4, 4}));
  EXPECT_EQ(a033.verdict, Verdict::NotAccurate);
  EXPECT_EQ(a033.failing_dimension(), std::optional<std::size_t>(2));
  // Every hyperplane restricts to A^1_2(3), exponents (1,3).
  EXPECT_EQ(hyperplane_restriction_exponents(build_intermediate(L(3, 3, 0))), (std::set<Exponents>{{1, 3}}));
  EXPECT_EQ(bruteforce_cross_check(L(3, 3, 2)).verdict, Verdict::Accurate);
  EXPECT_EQ(bruteforce_cross_check(L(3, 2, 1)).verdict, Verdict::Accurate);
  EXPECT_THROW(bruteforce_cross_check(L(5, 3, 1)), CapExceeded);
}

TEST(BruteForce, HyperplaneRestrictionsOfA15_3) {
  // Exponents of every hyperplane restriction, read off the table and the
  // formula, then computed on the built arrangement.
  std::set<Exponents> symbolic;
  for (const auto& row : table2_restriction_types(L(5, 3, 1))) symbolic.insert(intermediate_exponents(row.result));
  const std::set<Exponents> want = {{1, 4, 7, 7}, {1, 4, 7, 8}, {1, 4, 7, 10}};
  EXPECT_EQ(symbolic, want);
  const auto a = build_intermediate(L(5, 3, 1));
  std::set<Exponents> computed;
  for (std::size_t h = 0; h < a.size(); ++h)
    computed.insert(*restriction_exponent_candidates(a, make_flat(a, {a.normal(h)})));
  EXPECT_EQ(computed, want);
}

TEST(Localization, Fixture) {
  for (int r : {3, 4}) {
    const auto rep = localization_fixture_check(4, r);
    EXPECT_TRUE(rep.isomorphic) << r;
    EXPECT_EQ(rep.localization_size, static_cast<std::size_t>(3 * r));
    EXPECT_EQ(rep.whole_report.verdict, Verdict::Accurate) << r;
    EXPECT_EQ(rep.local_report.verdict, Verdict::NotAccurate) << r;
    EXPECT_TRUE(rep.holds());
  }
  EXPECT_THROW(localization_fixture_check(3, 3), InvalidInput);
  EXPECT_THROW(localization_fixture_check(5, 3), InvalidInput);
}

TEST(IntermediateProperties, CountsAndCharpoly) {
  for (const auto& x : grid()) {
    const auto a = build_intermediate(x);
    const auto e = intermediate_exponents(x);
    EXPECT_EQ(a.size(), static_cast<std::size_t>(x.k + x.r * x.l * (x.l - 1) / 2)) << x.to_string();
    std::int64_t sum = 0;
    for (auto v : e) sum += v;
    EXPECT_EQ(sum, static_cast<std::int64_t>(a.size())) << x.to_string();
    EXPECT_EQ(characteristic_polynomial(a), IntPoly::from_roots(e)) << x.to_string();
    if (x.l <= 3 && x.r <= 3) EXPECT_EQ(characteristic_polynomial(a), whitney_chi(a)) << x.to_string();
  }
}

TEST(IntermediateProperties, RestrictionsFollowTable2) {
  for (const auto& x : grid()) {
    const auto a = build_intermediate(x);
    const auto table = table2_restriction_types(x);
    std::set<HyperplaneClass> seen;
    for (std::size_t h = 0; h < a.size(); ++h) {
      const auto cls = classify_hyperplane(x, a.normal(h));
      seen.insert(cls);
      const auto row = std::find_if(table.begin(), table.end(), [&](const RestrictionRow& t) { return t.cls == cls; });
      ASSERT_NE(row, table.end()) << x.to_string() << " " << to_string(cls);
      const auto res = restriction(a, make_flat(a, {a.normal(h)}));
      const auto& y = row->result;
      EXPECT_EQ(res.size(), static_cast<std::size_t>(y.k + y.r * y.l * (y.l - 1) / 2)) << x.to_string();
      if (y.l >= 2) {
        EXPECT_EQ(characteristic_polynomial(res), IntPoly::from_roots(intermediate_exponents(y))) << x.to_string();
        if (x.l <= 3) EXPECT_TRUE(lattice_isomorphic(res, build_intermediate(y))) << x.to_string();
      }
    }
    EXPECT_EQ(seen.size(), table.size()) << x.to_string();
  }
}

TEST(IntermediateProperties, SymbolicMatchesBruteForce) {
  for (const auto& x : grid()) {
    const auto rep = bruteforce_cross_check(x);
    ASSERT_NE(rep.verdict, Verdict::Inconclusive) << x.to_string();
    EXPECT_EQ(rep.verdict, symbolic_accuracy(x)) << x.to_string();
    EXPECT_EQ(rep.verdict == Verdict::Accurate, closed_form_accuracy(x)) << x.to_string();
  }
}
