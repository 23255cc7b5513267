#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrkit/exactmath/scalar.hpp"

namespace arrkit {

// Dense row-major matrix over one declared field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vector(std::size_t r) const { return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)}; }
  std::vector<Vec> row_vectors() const;

  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Rank over the declared field. Rationals go through fraction-free (Bareiss)
// elimination on an integer-scaled copy; cyclotomic entries use plain exact
// Gaussian elimination.
std::size_t matrix_rank(const Matrix& m);

// Reduced row-echelon basis of the row space (leading entries 1, zero rows
// dropped). Identical for any two inputs spanning the same row space.
Matrix row_space_canonical_basis(const Matrix& m);

// Incrementally maintained reduced row-echelon basis of a subspace of K^n.
// Rows are kept sorted by pivot column.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(const Field& field, std::size_t cols) : field_(field), cols_(cols) {}

  const Field& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection onto the basis along pivot coordinates; zero iff v
  // lies in the span.
  Vec reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  // Adds v to the span; returns false if it was already contained.
  bool insert(std::span<const Scalar> v);
  // Adds a vector already reduced against this basis (nonzero).
  void insert_reduced(Vec reduced);

  Matrix to_matrix() const;
  // Non-pivot columns in ascending order.
  std::vector<std::size_t> free_columns() const;

 private:
  Field field_;
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Scales v so its first nonzero coordinate is 1. Returns nullopt for v = 0.
std::optional<Vec> normalize_leading_one(Vec v);

}  // namespace arrkit
