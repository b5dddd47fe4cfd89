#include "lieco/linalg.hpp"

#include <stdexcept>

namespace lieco {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("Matrix: shape");
  }
  Matrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    m.data_[i] = a.data_[i] - b.data_[i];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        std::swap(m.at(pivot, k), m.at(lead_row, k));
      }
    }
    const Rational inv = Rational(1) / m.at(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m.at(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c).is_zero()) continue;
      const Rational factor = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m.at(r, k) -= factor * m.at(lead_row, k);
      }
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row, then eliminate over the integers.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& q = m.at(r, c).raw();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<Vec> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      v[e.pivots[r]] = -e.reduced.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& rows,
                                 const Vec& target) {
  const std::size_t k = rows.size();
  if (k == 0) {
    if (is_zero(target)) return Vec{};
    return std::nullopt;
  }
  // Columns are the given vectors; augmented with the target.
  const std::size_t dim = target.size();
  Matrix a(dim, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != dim) {
      throw std::invalid_argument("solve_in_span: size mismatch");
    }
    for (std::size_t i = 0; i < dim; ++i) a.at(i, j) = rows[j][i];
  }
  for (std::size_t i = 0; i < dim; ++i) a.at(i, k) = target[i];
  const Echelon e = rref(std::move(a));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.rank() != k) {
    throw std::invalid_argument("solve_in_span: vectors are dependent");
  }
  Vec c(k);
  for (std::size_t r = 0; r < e.rank(); ++r) c[e.pivots[r]] = e.reduced.at(r, k);
  return c;
}

std::vector<Vec> extend_basis(const std::vector<Vec>& base,
                              const std::vector<Vec>& candidates) {
  std::vector<Vec> all = base;
  std::vector<Vec> added;
  if (candidates.empty()) return added;
  const std::size_t dim = candidates.front().size();
  std::size_t rank = all.empty() ? 0 : rref(Matrix::from_rows(all, dim)).rank();
  for (const auto& v : candidates) {
    all.push_back(v);
    const std::size_t r = rref(Matrix::from_rows(all, dim)).rank();
    if (r > rank) {
      rank = r;
      added.push_back(v);
    } else {
      all.pop_back();
    }
  }
  return added;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec: size");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec: size");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Vec unit_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v.at(i) = 1;
  return v;
}

}  // namespace lieco
