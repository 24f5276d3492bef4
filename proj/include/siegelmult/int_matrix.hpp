#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace siegelmult {

using BigInt = mpz_class;

// Dense row-major matrix of arbitrary-precision integers. Used for the g x g
// blocks of symplectic matrices and for exact intermediate products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(const std::vector<BigInt>& diag);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const BigInt& operator()(int i, int j) const { return data_[index(i, j)]; }
  BigInt& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<BigInt>& entries() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix block(int row0, int col0, int rows, int cols) const;
  bool is_symmetric() const;
  bool is_zero() const;
  BigInt trace() const;
  BigInt max_abs() const;

  // Exact determinant (fraction-free Bareiss elimination).
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& m);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& m);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// Gaussian integer re + i*im with exact parts.
struct GaussianInt {
  BigInt re;
  BigInt im;

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }
};

// det(i*C + D) computed exactly over the Gaussian integers (cofactor expansion; n <= 4).
GaussianInt gaussian_determinant(const IntMatrix& imag_part, const IntMatrix& real_part);

int sign(const BigInt& x);

}  // namespace siegelmult
