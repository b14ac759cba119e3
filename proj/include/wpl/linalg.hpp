#pragma once
// Exact dense linear algebra over Z and Q (GMP backed).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wpl {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);  // "p", "p/q", "-p/q"

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix column_vector(const std::vector<Rational>& v);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& o) const;

  RatMatrix transpose() const;
  RatMatrix column(std::size_t j) const;
  std::vector<Rational> column_values(std::size_t j) const;
  RatMatrix columns(const std::vector<std::size_t>& idx) const;
  RatMatrix rows_block(std::size_t r0, std::size_t count) const;
  bool is_zero() const;

  // vertical / horizontal concatenation; dimensions must agree
  static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);
  static RatMatrix vcat(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

std::vector<Rational> mul(const RatMatrix& m, const std::vector<Rational>& v);

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_inplace(RatMatrix& m);
std::size_t rank(const RatMatrix& m);
// columns form a basis of the null space
RatMatrix kernel_basis(const RatMatrix& m);
// a subset of the columns of m forming a basis of its column space
std::vector<std::size_t> independent_columns(const RatMatrix& m);
// Standard basis vectors e_k completing the column space of m to the whole space.
std::vector<std::size_t> complement_coordinates(const RatMatrix& m);
// Solve A X = B; nullopt if inconsistent. Free variables set to zero.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(RatMatrix m);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transpose() const;
  IntMatrix pow(unsigned long e) const;
  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  RatMatrix to_rational() const;
  // nullopt unless every entry is integral
  static std::optional<IntMatrix> from_rational(const RatMatrix& m);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

Integer determinant(const IntMatrix& m);  // Bareiss
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m);

// x^T M y
Integer bilinear(const std::vector<Integer>& x, const IntMatrix& m, const std::vector<Integer>& y);

}  // namespace wpl
