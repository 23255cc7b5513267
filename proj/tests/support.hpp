#pragma once

// Small builders and brute-force oracles shared by the unit tests. Nothing in
// here goes through the lattice code.

#include <cstdint>
#include <random>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/exactmath/int_poly.hpp"

namespace arrkit::testing {

inline Vec qvec(const std::vector<long>& v) {
  Vec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline Arrangement from_int_rows(std::size_t dim, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> forms;
  for (const auto& r : rows) forms.push_back(qvec(r));
  return Arrangement::from_forms(dim, Field::rational(), forms);
}

inline Arrangement boolean_arrangement(std::size_t n) {
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> r(n, 0);
    r[i] = 1;
    rows.push_back(r);
  }
  return from_int_rows(n, rows);
}

// x_i - x_j for i < j in n coordinates.
inline Arrangement braid(std::size_t n) {
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<long> r(n, 0);
      r[i] = 1;
      r[j] = -1;
      rows.push_back(r);
    }
  return from_int_rows(n, rows);
}

inline std::size_t subset_rank(const Arrangement& a, std::uint64_t mask) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask >> i & 1) rows.push_back(a.normal(i));
  if (rows.empty()) return 0;
  return matrix_rank(Matrix::from_rows(a.field(), a.dim(), rows));
}

// Whitney: chi(t) = sum over subsets S of (-1)^|S| t^(dim - rank S).
inline IntPoly whitney_chi(const Arrangement& a) {
  std::vector<std::int64_t> c(a.dim() + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
    const auto sign = (__builtin_popcountll(m) % 2) ? -1 : 1;
    c[a.dim() - subset_rank(a, m)] += sign;
  }
  return IntPoly(std::move(c));
}

// Random central arrangement with small integer normals.
inline Arrangement random_arrangement(std::mt19937& rng, std::size_t dim, std::size_t max_planes, long bound = 2) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_int_distribution<std::size_t> count(1, max_planes);
  const std::size_t n = count(rng);
  std::vector<Vec> forms;
  while (forms.size() < n) {
    Vec v;
    bool nonzero = false;
    for (std::size_t c = 0; c < dim; ++c) {
      long x = coeff(rng);
      nonzero |= x != 0;
      v.emplace_back(x);
    }
    if (nonzero) forms.push_back(v);
  }
  return Arrangement::from_forms(dim, Field::rational(), forms);
}

}  // namespace arrkit::testing

namespace arrkit::testing {

// The 21-hyperplane rank-5 free arrangement with exponents (1,5,5,5,5) that
// is accurate but not divisionally free, typed in from its defining
// polynomial.
inline Arrangement arrangement_d() {
  return from_int_rows(5, {{0, 1, 0, 0, 0},  {1, 0, 1, 0, -1}, {2, 1, 1, 0, 0},  {2, 1, 2, 1, -1}, {0, 0, 0, 0, 1},
                           {1, 0, 1, 0, 0},  {0, 1, 0, 0, 1},  {2, 1, 2, 1, 0},  {2, 0, 1, 0, -1}, {2, 2, 2, 1, 0},
                           {0, 1, 1, 1, 0},  {1, 1, 1, 1, 0},  {0, 0, 1, 1, 0},  {1, 1, 1, 0, 0},  {1, 0, 0, 0, 0},
                           {1, 0, 1, 1, 0},  {2, 1, 1, 0, -1}, {0, 1, 1, 1, 1},  {1, 0, 0, 0, -1}, {1, 0, 0, -1, -1},
                           {0, 0, 0, 1, 0}});
}

}  // namespace arrkit::testing

namespace arrkit::testing {

// A × B on the direct sum of the ambient spaces.
inline Arrangement product(const Arrangement& a, const Arrangement& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Vec> forms;
  for (const auto& v : a.normals()) {
    Vec w(n, Scalar::zero(a.field()));
    std::copy(v.begin(), v.end(), w.begin());
    forms.push_back(w);
  }
  for (const auto& v : b.normals()) {
    Vec w(n, Scalar::zero(a.field()));
    std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(a.dim()));
    forms.push_back(w);
  }
  return Arrangement::from_forms(n, a.field(), forms);
}

}  // namespace arrkit::testing
