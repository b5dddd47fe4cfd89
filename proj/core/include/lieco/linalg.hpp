#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieco/rational.hpp"

namespace lieco {

using Vec = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form with leftmost pivots chosen in row order.
struct Echelon {
  Matrix reduced;                   // rank nonzero rows first
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);

// Rank by fraction-free (Bareiss) elimination on integer-scaled rows; an
// independent route to rref(m).rank().
std::size_t bareiss_rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column (in column order) with a
// 1 in that column.
std::vector<Vec> nullspace(const Matrix& m);

// Coordinates c with sum_i c_i rows[i] = target, if target lies in the span of
// the (linearly independent) rows.
std::optional<Vec> solve_in_span(const std::vector<Vec>& rows,
                                 const Vec& target);

// Extends the span of `base` by vectors from `candidates` (kept in order,
// skipped when dependent), returning only the newly accepted candidates.
std::vector<Vec> extend_basis(const std::vector<Vec>& base,
                              const std::vector<Vec>& candidates);

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Vec unit_vector(std::size_t dim, std::size_t i);

}  // namespace lieco
