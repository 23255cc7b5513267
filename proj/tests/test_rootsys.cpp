#include <gtest/gtest.h>

#include <algorithm>

#include "arrkit/arrangement/lattice.hpp"
#include "arrkit/error.hpp"
#include "arrkit/rootsys/root_system.hpp"

using namespace arrkit;

namespace {

std::vector<int> heights(const RootSystem& rs) {
  std::vector<int> h;
  for (const auto& r : rs.positive_roots()) h.push_back(r.height);
  return h;
}

RootSystem rs(const char* s) { return RootSystem(RootSystemType::parse(s)); }

// Classical exponent table, used only as an oracle.
std::vector<int> classical_exponents(const RootSystemType& t) {
  const int n = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case 'A': for (int i = 1; i <= n; ++i) e.push_back(i); break;
    case 'B':
    case 'C': for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1); break;
    case 'D':
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case 'E':
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4",
                           "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST(BuildRootSystem, Examples) {
  EXPECT_EQ(heights(rs("A2")), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(heights(rs("G2")), (std::vector<int>{1, 1, 2, 3, 4, 5}));
  EXPECT_EQ(heights(rs("B2")), (std::vector<int>{1, 1, 2, 3}));
  EXPECT_THROW(RootSystemType::parse("B1"), InvalidInput);
  EXPECT_THROW(RootSystemType::parse("E9"), InvalidInput);
  EXPECT_EQ(RootSystemType::parse("D3"), RootSystemType::parse("A3"));
}

TEST(BuildRootSystem, B2InStandardCoordinates) {
  // e1-e2, e2, e1, e1+e2 in height order.
  const auto b2 = rs("B2");
  std::vector<Vec> expect = {{Scalar(1L), Scalar(-1L)}, {Scalar(0L), Scalar(1L)}, {Scalar(1L), Scalar(0L)}, {Scalar(1L), Scalar(1L)}};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(b2.root(i).coords, expect[i]);
}

TEST(RootPoset, Order) {
  const auto a2 = rs("A2");
  EXPECT_TRUE(a2.leq(0, 0));
  EXPECT_TRUE(a2.leq(0, 2));
  EXPECT_FALSE(a2.leq(0, 1));
}

TEST(Ideals, Counts) {
  EXPECT_EQ(enumerate_ideals(rs("A1")).size(), 2u);
  EXPECT_EQ(enumerate_ideals(rs("A2")).size(), 5u);
  EXPECT_EQ(enumerate_ideals(rs("A3")).size(), 14u);
  // Catalan numbers of types B3 and G2.
  EXPECT_EQ(enumerate_ideals(rs("B3")).size(), 20u);
  EXPECT_EQ(enumerate_ideals(rs("G2")).size(), 8u);
  EXPECT_THROW(enumerate_ideals(rs("A3"), 3), CapExceeded);
}

TEST(Ideals, DownwardClosedAndGenerated) {
  for (const char* t : {"A3", "B3", "C3", "G2", "D4"}) {
    const auto r = rs(t);
    for (const auto& I : enumerate_ideals(r)) {
      EXPECT_TRUE(is_ideal(r, I.roots)) << t;
      EXPECT_EQ(ideal_from_generators(r, I.generators).roots, I.roots) << t;
    }
  }
}

TEST(HighestRoot, Examples) {
  EXPECT_EQ(rs("A2").root(rs("A2").highest_root()).simple_coeffs, (std::vector<int>{1, 1}));
  EXPECT_EQ(rs("A3").root(rs("A3").highest_root()).height, 3);
  EXPECT_EQ(rs("G2").root(rs("G2").highest_root()).height, 5);
  EXPECT_EQ(rs("A2").coxeter_number(), 3);
  EXPECT_EQ(rs("B2").coxeter_number(), 4);
  EXPECT_EQ(rs("G2").coxeter_number(), 6);
}

TEST(IdealArrangement, Examples) {
  const auto a2 = rs("A2");
  EXPECT_TRUE(ideal_arrangement(a2, ideal_from_generators(a2, {})).empty());
  EXPECT_EQ(ideal_arrangement(a2, ideal_from_generators(a2, {0, 1})).size(), 2u);
  EXPECT_EQ(weyl_arrangement(rs("G2")).size(), 6u);
}

TEST(RootHeightPartition, Examples) {
  auto sizes = [](const std::vector<std::vector<std::size_t>>& p) {
    std::vector<std::size_t> s;
    for (const auto& b : p) s.push_back(b.size());
    return s;
  };
  const auto a2 = rs("A2");
  EXPECT_EQ(sizes(root_height_partition(a2, full_ideal(a2))), (std::vector<std::size_t>{2, 1}));
  const auto g2 = rs("G2");
  EXPECT_EQ(sizes(root_height_partition(g2, full_ideal(g2))), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(sizes(root_height_partition(a2, ideal_from_generators(a2, {0}))), (std::vector<std::size_t>{1}));
}

TEST(RootSystemProperties, AllTypes) {
  for (const char* t : kAllTypes) {
    const auto r = rs(t);
    const auto ty = r.type();
    EXPECT_EQ(2 * r.size(), r.rank() * static_cast<std::size_t>(r.coxeter_number())) << t;
    const auto blocks = root_height_partition(r, full_ideal(r));
    EXPECT_EQ(blocks[0].size(), r.rank()) << t;
    for (std::size_t i = 0; i < r.rank(); ++i) EXPECT_EQ(r.root(i).height, 1);
    std::size_t total = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      total += blocks[k].size();
      if (k == 1) EXPECT_GT(blocks[0].size(), blocks[1].size()) << t;
      if (k > 1) EXPECT_GE(blocks[k - 1].size(), blocks[k].size()) << t;
    }
    EXPECT_EQ(total, r.size());
    // The dual partition of the height blocks is the classical exponent list.
    std::vector<int> dual;
    for (std::size_t i = 1; i <= r.rank(); ++i) {
      int c = 0;
      for (const auto& b : blocks) c += b.size() >= r.rank() - i + 1;
      dual.push_back(c);
    }
    EXPECT_EQ(dual, classical_exponents(ty)) << t;
    // coords = sum of coefficients times simple roots, checked through rank.
    EXPECT_EQ(weyl_arrangement(r).rank(), r.rank()) << t;
  }
}

TEST(RootSystemProperties, WeylCharacteristicPolynomialSmall) {
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    const auto r = rs(t);
    std::vector<std::int64_t> roots(r.ambient_dim() - r.rank(), 0);
    for (int e : classical_exponents(r.type())) roots.push_back(e);
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(characteristic_polynomial(weyl_arrangement(r)), IntPoly::from_roots(roots)) << t;
  }
}
