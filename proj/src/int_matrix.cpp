#include "siegelmult/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <utility>

#include "siegelmult/errors.hpp"

namespace siegelmult {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0)) {
  if (rows < 0 || cols < 0) throw PreconditionError("IntMatrix: negative dimension");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0 || data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw PreconditionError("IntMatrix: entry count does not match dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& diag) {
  const int n = static_cast<int>(diag.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(int row0, int col0, int rows, int cols) const {
  if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_)
    throw PreconditionError("IntMatrix::block out of range");
  IntMatrix b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

BigInt IntMatrix::max_abs() const {
  BigInt best = 0;
  for (const auto& v : data_) {
    BigInt a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

BigInt IntMatrix::determinant() const {
  if (!square()) throw PreconditionError("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt prev = 1;
  int swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return swaps % 2 == 0 ? det : BigInt(-det);
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw PreconditionError("IntMatrix product: dimension mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (int i = 0; i < lhs.rows_; ++i)
    for (int k = 0; k < lhs.cols_; ++k) {
      const BigInt& a = lhs(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw PreconditionError("IntMatrix sum: dimension mismatch");
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    throw PreconditionError("IntMatrix difference: dimension mismatch");
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

namespace {

GaussianInt cofactor_det(const std::vector<std::vector<GaussianInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  GaussianInt det{0, 0};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<GaussianInt>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<GaussianInt> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    GaussianInt term = m[0][col] * cofactor_det(minor);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

GaussianInt gaussian_determinant(const IntMatrix& imag_part, const IntMatrix& real_part) {
  if (!imag_part.square() || !(imag_part.rows() == real_part.rows() && imag_part.cols() == real_part.cols()))
    throw PreconditionError("gaussian_determinant: shape mismatch");
  const int n = imag_part.rows();
  if (n == 0) return {1, 0};
  if (n > 6) throw PreconditionError("gaussian_determinant: dimension above 6");
  std::vector<std::vector<GaussianInt>> m(static_cast<std::size_t>(n), std::vector<GaussianInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {real_part(i, j), imag_part(i, j)};
  return cofactor_det(m);
}

int sign(const BigInt& x) { return sgn(x); }

}  // namespace siegelmult
