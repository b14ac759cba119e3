#include "wpl/linalg.hpp"

#include <cctype>
#include <stdexcept>

namespace wpl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
      throw std::invalid_argument("bad rational: " + s);
  Rational q;
  try {
    std::string t = s[0] == '+' ? s.substr(1) : s;
    q.set_str(t, 10);
  } catch (...) {
    throw std::invalid_argument("bad rational: " + s);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::column_vector(const std::vector<Rational>& v) {
  RatMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (c_ != o.r_) throw std::logic_error("matrix shape mismatch in product");
  RatMatrix p(r_, o.c_);
  Rational t;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) {
        const Rational& y = o(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        p(i, j) += t;
      }
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix shape mismatch in sum");
  RatMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix shape mismatch in difference");
  RatMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::column(std::size_t j) const {
  RatMatrix m(r_, 1);
  for (std::size_t i = 0; i < r_; ++i) m(i, 0) = (*this)(i, j);
  return m;
}

std::vector<Rational> RatMatrix::column_values(std::size_t j) const {
  std::vector<Rational> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::columns(const std::vector<std::size_t>& idx) const {
  RatMatrix m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

RatMatrix RatMatrix::rows_block(std::size_t r0, std::size_t count) const {
  RatMatrix m(count, c_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(r0 + i, j);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

RatMatrix RatMatrix::hcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.c_ == 0) return b;
  if (b.c_ == 0) return a;
  if (a.r_ != b.r_) throw std::logic_error("hcat row mismatch");
  RatMatrix m(a.r_, a.c_ + b.c_);
  for (std::size_t i = 0; i < a.r_; ++i) {
    for (std::size_t j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.c_; ++j) m(i, a.c_ + j) = b(i, j);
  }
  return m;
}

RatMatrix RatMatrix::vcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.r_ == 0 && a.c_ == 0) return b;
  if (b.r_ == 0 && b.c_ == 0) return a;
  if (a.c_ != b.c_) throw std::logic_error("vcat column mismatch");
  RatMatrix m(a.r_ + b.r_, a.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) m(a.r_ + i, j) = b(i, j);
  return m;
}

std::vector<Rational> mul(const RatMatrix& m, const std::vector<Rational>& v) {
  if (m.cols() != v.size()) throw std::logic_error("matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0 && sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
  return out;
}

std::vector<std::size_t> rref_inplace(RatMatrix& m) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  const std::size_t R = m.rows(), C = m.cols();
  Rational f;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && sgn(m(p, col)) == 0) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < C; ++j)
      if (sgn(m(row, j)) != 0) m(row, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      f = m(i, col);
      for (std::size_t j = col; j < C; ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix t = m;
  return rref_inplace(t).size();
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  auto piv = rref_inplace(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  RatMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -r(i, free[f]);
  }
  return k;
}

std::vector<std::size_t> independent_columns(const RatMatrix& m) {
  RatMatrix r = m;
  return rref_inplace(r);
}

std::vector<std::size_t> complement_coordinates(const RatMatrix& m) {
  // pivots of [m | I] beyond m's columns
  RatMatrix aug = RatMatrix::hcat(m, RatMatrix::identity(m.rows()));
  auto piv = rref_inplace(aug);
  std::vector<std::size_t> out;
  for (auto p : piv)
    if (p >= m.cols()) out.push_back(p - m.cols());
  return out;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::logic_error("solve shape mismatch");
  RatMatrix aug = RatMatrix::hcat(a, b);
  if (a.cols() == 0) {
    if (!b.is_zero()) return std::nullopt;
    return RatMatrix(0, b.cols());
  }
  auto piv = rref_inplace(aug);
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RatMatrix aug = RatMatrix::hcat(m, RatMatrix::identity(m.rows()));
  auto piv = rref_inplace(aug);
  if (piv.size() < m.rows() || (m.rows() > 0 && piv[m.rows() - 1] >= m.cols())) return std::nullopt;
  RatMatrix inv(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv(i, j) = aug(i, m.cols() + j);
  return inv;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---- integer matrices ----

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t n) {
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::logic_error("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::logic_error("matrix shape mismatch in product");
  IntMatrix p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Integer& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix s = *this;
  for (auto& x : s.a_) x = -x;
  return s;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  IntMatrix result = identity(r_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != c_) throw std::logic_error("matrix-vector shape mismatch");
  std::vector<Integer> out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix m(r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = Rational((*this)(i, j));
  return m;
}

std::optional<IntMatrix> IntMatrix::from_rational(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

Integer determinant(const IntMatrix& src) {
  const std::size_t n = src.rows();
  if (n != src.cols()) throw std::logic_error("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = src;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m) {
  auto inv = inverse(m.to_rational());
  if (!inv) return std::nullopt;
  return IntMatrix::from_rational(*inv);
}

Integer bilinear(const std::vector<Integer>& x, const IntMatrix& m, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

}  // namespace wpl
