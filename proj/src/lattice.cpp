#include "wpl/lattice.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace wpl {

std::string to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::Domestic: return "domestic";
    case CurvatureClass::Tubular: return "tubular";
    case CurvatureClass::Wild: return "wild";
  }
  return "?";
}

namespace {
long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
long mod_pos(long a, long b) { return a - b * floor_div(a, b); }
}  // namespace

WeightDescriptor::WeightDescriptor(std::vector<int> weights, std::vector<Rational> lambdas)
    : p_(std::move(weights)) {
  for (int p : p_)
    if (p < 2) throw DescriptorError("weight < 2: " + std::to_string(p));
  const int t = static_cast<int>(p_.size());
  const std::size_t need = t > 2 ? static_cast<std::size_t>(t - 2) : 0;
  if (lambdas.empty()) {
    for (std::size_t k = 0; k < need; ++k) lambdas.emplace_back(static_cast<long>(k + 1));
  }
  if (lambdas.size() != need)
    throw DescriptorError("lambda list has length " + std::to_string(lambdas.size()) + ", expected " +
                          std::to_string(need));
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (sgn(lambdas[k]) == 0) throw DescriptorError("lambda must be nonzero");
    for (std::size_t j = 0; j < k; ++j)
      if (lambdas[j] == lambdas[k]) throw DescriptorError("lambdas must be pairwise distinct");
  }
  if (!lambdas.empty() && lambdas[0] != 1) throw DescriptorError("lambda_3 must be normalized to 1");
  lambda_ = std::move(lambdas);

  pbar_ = 1;
  for (int p : p_) pbar_ = std::lcm(pbar_, static_cast<long>(p));
  n_ = 2;
  for (int p : p_) n_ += p - 1;
  delta_omega_ = static_cast<long>(t - 2) * pbar_;
  for (int p : p_) delta_omega_ -= pbar_ / p;
}

Rational WeightDescriptor::euler_characteristic() const {
  Rational chi = 2;
  for (int p : p_) chi -= Rational(p - 1, p);
  return chi;
}

CurvatureClass WeightDescriptor::curvature() const {
  if (delta_omega_ < 0) return CurvatureClass::Domestic;
  if (delta_omega_ == 0) return CurvatureClass::Tubular;
  return CurvatureClass::Wild;
}

Integer WeightDescriptor::gorenstein_index() const {
  Rational v = euler_characteristic();
  for (int p : p_) v *= p;
  v = abs(v);
  if (v.get_den() != 1) throw std::logic_error("non-integral Gorenstein index");
  return v.get_num();
}

std::string WeightDescriptor::label() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
  os << ")";
  return os.str();
}

LVector WeightDescriptor::zero() const { return LVector{std::vector<int>(p_.size(), 0), 0}; }

LVector WeightDescriptor::x(int i) const {
  if (i < 0 || i >= t()) throw std::out_of_range("no generator x" + std::to_string(i + 1));
  LVector v = zero();
  v.arm[i] = 1;  // every p_i >= 2
  return v;
}

LVector WeightDescriptor::c() const {
  LVector v = zero();
  v.central = 1;
  return v;
}

LVector WeightDescriptor::omega() const {
  std::vector<long> a(p_.size(), -1);
  return normal_form(a, t() - 2);
}

LVector WeightDescriptor::normal_form(const std::vector<long>& a, long m) const {
  if (a.size() != p_.size()) throw std::invalid_argument("arm length mismatch");
  LVector v;
  v.arm.resize(p_.size());
  v.central = m;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    v.arm[i] = static_cast<int>(mod_pos(a[i], p_[i]));
    v.central += floor_div(a[i], p_[i]);
  }
  return v;
}

LVector WeightDescriptor::add(const LVector& a, const LVector& b) const {
  std::vector<long> s(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) s[i] = static_cast<long>(a.arm[i]) + b.arm[i];
  return normal_form(s, a.central + b.central);
}

LVector WeightDescriptor::neg(const LVector& a) const {
  std::vector<long> s(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) s[i] = -static_cast<long>(a.arm[i]);
  return normal_form(s, -a.central);
}

LVector WeightDescriptor::sub(const LVector& a, const LVector& b) const { return add(a, neg(b)); }

LVector WeightDescriptor::scale(const LVector& a, long k) const {
  std::vector<long> s(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) s[i] = k * a.arm[i];
  return normal_form(s, k * a.central);
}

long WeightDescriptor::delta(const LVector& a) const {
  long d = a.central * pbar_;
  for (std::size_t i = 0; i < p_.size(); ++i) d += a.arm[i] * (pbar_ / p_[i]);
  return d;
}

bool WeightDescriptor::is_valid(const LVector& a) const {
  if (a.arm.size() != p_.size()) return false;
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (a.arm[i] < 0 || a.arm[i] >= p_[i]) return false;
  return true;
}

Order WeightDescriptor::compare(const LVector& a, const LVector& b) const {
  if (a == b) return Order::Equal;
  if (leq(a, b)) return Order::Less;
  if (leq(b, a)) return Order::Greater;
  return Order::Incomparable;
}

WeightDescriptor::LinePair WeightDescriptor::line_pair_dims(const LVector& a, const LVector& b) const {
  return {graded_dim(sub(b, a)), graded_dim(sub(add(a, omega()), b))};
}

std::vector<LVector> WeightDescriptor::window() const {
  std::vector<LVector> w{zero()};
  for (int i = 0; i < t(); ++i)
    for (int a = 1; a < p_[i]; ++a) {
      LVector v = zero();
      v.arm[i] = a;
      w.push_back(v);
    }
  w.push_back(c());
  return w;
}

int WeightDescriptor::window_index(const LVector& y) const {
  if (!is_valid(y)) return -1;
  int nonzero = -1, count = 0;
  for (int i = 0; i < t(); ++i)
    if (y.arm[i] != 0) {
      nonzero = i;
      ++count;
    }
  if (count == 0) {
    if (y.central == 0) return 0;
    if (y.central == 1) return n_ - 1;
    return -1;
  }
  if (count > 1 || y.central != 0) return -1;
  int idx = 1;
  for (int i = 0; i < nonzero; ++i) idx += p_[i] - 1;
  return idx + y.arm[nonzero] - 1;
}

std::string WeightDescriptor::str(const LVector& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < t(); ++i) {
    if (a.arm[i] == 0) continue;
    if (!first) os << "+";
    if (a.arm[i] != 1) os << a.arm[i];
    os << "x" << (i + 1);
    first = false;
  }
  if (a.central != 0 || first) {
    if (first) {
      if (a.central == 0) return "0";
      if (a.central == 1) return "c";
      if (a.central == -1) return "-c";
      os << a.central << "c";
    } else {
      os << (a.central > 0 ? "+" : "-");
      long m = a.central > 0 ? a.central : -a.central;
      if (m != 1) os << m;
      os << "c";
    }
  }
  return os.str();
}

// ---- monomials ----

LVector monomial_degree(const WeightDescriptor& d, const Exponents& e) {
  std::vector<long> a(d.t(), 0);
  long m = 0;
  for (int i = 0; i < d.variables(); ++i) {
    if (i < d.t())
      a[i] = e[i];
    else
      m += e[i];  // padded variable of weight 1 has degree c
  }
  return d.normal_form(a, m);
}

MonomialBasis monomial_basis(const WeightDescriptor& d, const LVector& x) {
  MonomialBasis b;
  b.degree = x;
  if (x.central < 0) return b;
  const int v = d.variables();
  const long p1 = d.var_weight(0), p2 = d.var_weight(1);
  for (long j = 0; j <= x.central; ++j) {
    Exponents e(v, 0);
    e[0] = (d.t() > 0 ? x.arm[0] : 0) + j * p1;
    e[1] = (d.t() > 1 ? x.arm[1] : 0) + (x.central - j) * p2;
    for (int i = 2; i < d.t(); ++i) e[i] = x.arm[i];
    b.monomials.push_back(std::move(e));
  }
  return b;
}

SparsePoly multiply(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly h;
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) {
      Exponents e = ef;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
      h[e] += cf * cg;
    }
  for (auto it = h.begin(); it != h.end();)
    it = sgn(it->second) == 0 ? h.erase(it) : std::next(it);
  return h;
}

SparsePoly reduce(const WeightDescriptor& d, SparsePoly f) {
  // each step lowers the total exponent in x3..xt, so this terminates
  for (;;) {
    bool changed = false;
    SparsePoly g;
    for (const auto& [e, coef] : f) {
      int hit = -1;
      for (int i = 2; i < d.t(); ++i)
        if (e[i] >= d.weights()[i]) {
          hit = i;
          break;
        }
      if (hit < 0) {
        g[e] += coef;
        continue;
      }
      changed = true;
      const Rational& lam = d.lambdas()[hit - 2];
      Exponents a = e, b = e;
      a[hit] -= d.weights()[hit];
      b[hit] -= d.weights()[hit];
      a[1] += d.var_weight(1);
      b[0] += d.var_weight(0);
      g[a] += coef;
      g[b] -= lam * coef;
    }
    for (auto it = g.begin(); it != g.end();)
      it = sgn(it->second) == 0 ? g.erase(it) : std::next(it);
    f = std::move(g);
    if (!changed) return f;
  }
}

RatMatrix multiplication_matrix(const WeightDescriptor& d, const LVector& x, const Exponents& m) {
  const LVector target = d.add(x, monomial_degree(d, m));
  MonomialBasis src = monomial_basis(d, x), dst = monomial_basis(d, target);
  std::map<Exponents, std::size_t> pos;
  for (std::size_t k = 0; k < dst.monomials.size(); ++k) pos[dst.monomials[k]] = k;
  RatMatrix a(dst.monomials.size(), src.monomials.size());
  for (std::size_t j = 0; j < src.monomials.size(); ++j) {
    SparsePoly f{{src.monomials[j], Rational(1)}};
    SparsePoly g{{m, Rational(1)}};
    SparsePoly h = reduce(d, multiply(f, g));
    for (const auto& [e, coef] : h) {
      auto it = pos.find(e);
      if (it == pos.end()) throw std::logic_error("reduced monomial outside the basis");
      a(it->second, j) += coef;
    }
  }
  return a;
}

RatMatrix multiplication_matrix(const WeightDescriptor& d, const LVector& x, int i) {
  Exponents m(d.variables(), 0);
  m.at(i) = 1;
  return multiplication_matrix(d, x, m);
}

}  // namespace wpl
