#pragma once

// Dense row-major matrices over F_q with exact row reduction.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qsun/gf.hpp"
#include "qsun/poly.hpp"

namespace qsun {

class Matrix {
 public:
  /// rows x cols zero matrix. Empty shapes are allowed.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Rows given as element codes; all rows must have length `cols`.
  Matrix(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

  static Matrix identity(const Field& field, std::size_t n);
  /// Convenience for literals over a prime field: entries reduced mod p.
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<int>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::vector<std::vector<Elem>> to_rows() const;

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  Matrix scaled(Elem s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Shape first, then entries row-major by element code. Field must match.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

struct Rref {
  /// Canonical reduced row echelon form, zero rows removed.
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Pivot on the leftmost nonzero column, topmost nonzero entry, scaled to 1.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix hstack(std::span<const Matrix> blocks);
Matrix hstack(std::initializer_list<Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);
Matrix vstack(std::initializer_list<Matrix> blocks);

/// Companion matrix of a monic f of degree k >= 1: ones on the
/// superdiagonal, last row -f_0, ..., -f_{k-1}. Satisfies f(A) = 0.
Matrix companion(const Poly& f);

/// f(A) for square A, by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& a);

/// The leading column as a cols x 1 matrix. Throws on zero-column input.
Matrix first_column(const Matrix& a);

/// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& a);

}  // namespace qsun
