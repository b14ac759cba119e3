#include "wpl/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace wpl {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t deg) {
  std::vector<Integer> v(deg + 1);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Integer> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& s) const {
  std::vector<Integer> v = c_;
  for (auto& x : v) x *= s;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed(std::size_t deg) const {
  if (degree() > static_cast<int>(deg)) throw std::logic_error("reversal degree too small");
  std::vector<Integer> v(deg + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[deg - i] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divided_by_x() const {
  if (is_zero()) return {};
  if (sgn(c_[0]) != 0) throw std::logic_error("polynomial not divisible by x");
  return IntPoly(std::vector<Integer>(c_.begin() + 1, c_.end()));
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  std::vector<Integer> r = c_;
  const int dd = d.degree();
  if (degree() < dd) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> q(degree() - dd + 1);
  const Integer& lead = d.c_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    Integer num = r[k + dd];
    if (sgn(num) == 0) continue;
    if (num % lead != 0) throw std::domain_error("inexact polynomial division");
    Integer qk = num / lead;
    q[k] = qk;
    for (int j = 0; j <= dd; ++j) r[k + j] -= qk * d.c_[j];
  }
  for (const auto& x : r)
    if (sgn(x) != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& a = c_[k];
    if (sgn(a) == 0) continue;
    Integer mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier; all divisions are exact over Z
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    IntMatrix prod = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    Integer k_ = static_cast<unsigned long>(k);
    if (tr % k_ != 0) throw std::logic_error("non-integral characteristic polynomial step");
    c[n - k] = -tr / k_;
  }
  return IntPoly(std::move(c));
}

IntPoly det_one_minus_xm(const IntMatrix& m) {
  return characteristic_polynomial(m).reversed(m.rows());
}

}  // namespace wpl
