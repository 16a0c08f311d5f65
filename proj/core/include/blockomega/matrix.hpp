#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockomega/field.hpp"

namespace blockomega {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over GF(2^m). Arithmetic takes the field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Scalar> flat() const noexcept { return data_; }
  std::span<Scalar> flat() noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix multiply(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scaled(const FieldCtx& f, Scalar s, Matrix a);
Matrix transpose(const Matrix& a);
Vector vec_mat(const FieldCtx& f, std::span<const Scalar> v, const Matrix& a);

// Reduced row echelon form of the rows of `a`; `rref` keeps only nonzero rows.
struct RowReduction {
  Matrix rref;
  std::vector<std::size_t> pivots;
};
RowReduction row_reduce(const FieldCtx& f, Matrix a);

std::size_t rank(const FieldCtx& f, const Matrix& a);

// Rows form a basis (in reduced echelon form) of {x : a x = 0}.
Matrix nullspace(const FieldCtx& f, const Matrix& a);

// One solution x of a x = b. Throws Inconsistent or DimensionMismatch.
Matrix solve(const FieldCtx& f, const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const FieldCtx& f, const Matrix& a);

// Incrementally built echelon basis of row vectors of fixed width.
//
// Rows are kept so that row k vanishes at the pivots of rows 0..k-1, and each
// row is normalised to 1 at its own pivot. With tracking enabled every stored
// row remembers how it was formed from the inserted vectors, so reductions
// report coefficients relative to the original insertions.
class EchelonBasis {
 public:
  EchelonBasis(const FieldCtx& f, std::size_t width, bool track = false);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  std::size_t inserted() const noexcept { return inserted_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  struct Reduction {
    Vector residual;
    // v = residual + sum_j coefficients[j] * (j-th inserted vector); tracked only.
    Vector coefficients;
    bool in_span() const noexcept;
  };
  Reduction reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;

  // Returns false (and stores nothing) when v lies in the current span.
  // Tracked bases count every call, dependent or not, as an insertion.
  bool insert(std::span<const Scalar> v);

  // Coordinates relative to the stored echelon rows; nullopt outside the span.
  std::optional<Vector> row_coordinates(std::span<const Scalar> v) const;

 private:
  const FieldCtx* field_;
  std::size_t width_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
};

}  // namespace blockomega
