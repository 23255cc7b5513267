#include "arrkit/exactmath/matrix.hpp"

#include <algorithm>

#include "arrkit/error.hpp"

namespace arrkit {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw FieldMismatch("matrix entry outside the declared field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Clears denominators row by row; the row space is unchanged.
IntMatrix integer_rows(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& den = m(r, c).coefficient(0).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c).coefficient(0);
      out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

struct BareissResult {
  IntMatrix echelon;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free forward elimination; rows [0, rank) end up in echelon form.
BareissResult bareiss(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  BigInt prev = 1;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

}  // namespace

std::size_t matrix_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().kind == Field::Kind::rational) return bareiss(integer_rows(m)).pivot_cols.size();
  EchelonBasis basis(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

Matrix row_space_canonical_basis(const Matrix& m) {
  if (m.field().kind != Field::Kind::rational || m.rows() == 0 || m.cols() == 0) {
    EchelonBasis basis(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.to_matrix();
  }
  auto [ech, pivots] = bareiss(integer_rows(m));
  const std::size_t rank = pivots.size();
  std::vector<Vec> rows(rank, Vec(m.cols()));
  for (std::size_t r = 0; r < rank; ++r) {
    const Rational lead(ech[r][pivots[r]]);
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = Scalar(Rational(ech[r][c]) / lead);
  }
  // Back substitution clears entries above each pivot.
  for (std::size_t r = rank; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      const Scalar f = rows[above][pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[r]; c < m.cols(); ++c) rows[above][c].sub_mul(f, rows[r][c]);
    }
  }
  return Matrix::from_rows(m.field(), m.cols(), rows);
}

Vec EchelonBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw InvalidInput("vector length does not match basis width");
  Vec out(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = out[pivots_[i]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[i];
    for (std::size_t c = pivots_[i]; c < cols_; ++c) {
      if (!row[c].is_zero()) out[c].sub_mul(f, row[c]);
    }
  }
  return out;
}

bool EchelonBasis::contains(std::span<const Scalar> v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool EchelonBasis::insert(std::span<const Scalar> v) {
  Vec r = reduce(v);
  if (std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); })) return false;
  insert_reduced(std::move(r));
  return true;
}

void EchelonBasis::insert_reduced(Vec reduced) {
  auto normalized = normalize_leading_one(std::move(reduced));
  if (!normalized) throw InvalidInput("cannot insert the zero vector");
  Vec& row = *normalized;
  std::size_t pivot = 0;
  while (row[pivot].is_zero()) ++pivot;
  for (auto& other : rows_) {
    const Scalar f = other[pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = pivot; c < cols_; ++c) {
      if (!row[c].is_zero()) other[c].sub_mul(f, row[c]);
    }
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + idx, std::move(row));
}

Matrix EchelonBasis::to_matrix() const { return Matrix::from_rows(field_, cols_, rows_); }

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::optional<Vec> normalize_leading_one(Vec v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) return std::nullopt;
  if (v[lead].is_one()) return v;
  const Scalar inv = v[lead].inverse();
  for (std::size_t c = lead; c < v.size(); ++c) {
    if (!v[c].is_zero()) v[c] *= inv;
  }
  return v;
}

}  // namespace arrkit
