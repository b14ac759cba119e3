#pragma once
// Univariate integer polynomials, enough for Coxeter data.

#include <string>
#include <vector>

#include "wpl/linalg.hpp"

namespace wpl {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);  // low degree first
  static IntPoly monomial(const Integer& c, std::size_t deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Integer& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // x^deg * p(1/x) for the given formal degree
  IntPoly reversed(std::size_t deg) const;
  // shift down by one power of x; caller guarantees zero constant term
  IntPoly divided_by_x() const;
  // exact division; throws unless the quotient has integer coefficients and zero remainder
  IntPoly exact_div(const IntPoly& d) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// det(I - x M)
IntPoly det_one_minus_xm(const IntMatrix& m);
// det(x I - M)
IntPoly characteristic_polynomial(const IntMatrix& m);

}  // namespace wpl
