#include "wpl/k0.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wpl {

K0Class operator+(const K0Class& a, const K0Class& b) {
  if (a.size() != b.size()) throw std::invalid_argument("class length mismatch");
  K0Class s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

K0Class operator-(const K0Class& a, const K0Class& b) {
  if (a.size() != b.size()) throw std::invalid_argument("class length mismatch");
  K0Class s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
  return s;
}

K0Class operator-(const K0Class& a) {
  K0Class s = a;
  for (auto& x : s) x = -x;
  return s;
}

K0Class operator*(const Integer& f, const K0Class& a) {
  K0Class s = a;
  for (auto& x : s) x *= f;
  return s;
}

int TiltingDatum::position(int label) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].label == label) return static_cast<int>(i);
  return -1;
}

std::optional<Rational> Numerics::slope() const {
  if (sgn(rank) == 0) {
    if (sgn(degree) == 0) throw std::domain_error("slope of the zero class");
    return std::nullopt;
  }
  Rational q(degree, rank);
  q.canonicalize();
  return q;
}

K0::K0(WeightDescriptor d) : d_(std::move(d)), window_(d_.window()) {
  const int n = d_.rank();
  cartan_ = IntMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cartan_(a, b) = d_.graded_dim(d_.sub(window_[b], window_[a]));
  auto inv = inverse_unimodular(cartan_);
  if (!inv) throw std::logic_error("Cartan matrix not unimodular");
  coxeter_ = -((*inv) * cartan_.transpose());
}

Integer K0::euler(const K0Class& a, const K0Class& b) const {
  if (a.size() != static_cast<std::size_t>(n()) || b.size() != static_cast<std::size_t>(n()))
    throw std::invalid_argument("class length mismatch");
  return bilinear(a, cartan_, b);
}

K0Class K0::basis(int k) const {
  K0Class e(n());
  e.at(k) = 1;
  return e;
}

K0Class K0::w() const { return basis(n() - 1) - basis(0); }

K0Class K0::line_bundle(const LVector& z) const {
  // [O(z)] = [O] + sum_i ([O(l_i x_i)] - [O]) + l w: the tube-simple recurrence, telescoped
  if (!d_.is_valid(z)) throw std::invalid_argument("LVector not in normal form");
  K0Class cls = basis(0);
  for (int i = 0; i < d_.t(); ++i) {
    if (z.arm[i] == 0) continue;
    LVector y = d_.zero();
    y.arm[i] = z.arm[i];
    cls = cls + basis(d_.window_index(y)) - basis(0);
  }
  return cls + Integer(z.central) * w();
}

K0Class K0::tube_simple(int i, long a) const {
  const long p = d_.weights().at(i);
  a = ((a % p) + p) % p;
  auto at = [&](long k) {
    LVector y = d_.zero();
    y.arm[i] = static_cast<int>(k);
    return basis(d_.window_index(y));
  };
  if (a == 0) return basis(n() - 1) - at(p - 1);
  return at(a) - at(a - 1);
}

Integer K0::rank_of(const K0Class& cls) const { return euler(cls, w()); }

Integer K0::degree_of(const K0Class& cls) const {
  Integer deg = 0;
  for (int k = 0; k < n(); ++k) deg += cls[k] * d_.delta(window_[k]);
  return deg;
}

Numerics K0::numerics(const K0Class& cls) const { return {rank_of(cls), degree_of(cls)}; }

std::optional<LVector> K0::locate_line_bundle(const K0Class& cls) const {
  if (rank_of(cls) != 1) return std::nullopt;
  const Integer deg = degree_of(cls);
  const int t = d_.t();
  std::vector<int> arm(t, 0);
  // enumerate arm tuples; the central part is then forced by the degree
  for (;;) {
    long ad = 0;
    for (int i = 0; i < t; ++i) ad += arm[i] * (d_.pbar() / d_.weights()[i]);
    Integer rest = deg - ad;
    if (rest % d_.pbar() == 0) {
      Integer l = rest / d_.pbar();
      if (l.fits_slong_p()) {
        LVector z{arm, l.get_si()};
        if (line_bundle(z) == cls) return z;
      }
    }
    int i = 0;
    while (i < t && ++arm[i] == d_.weights()[i]) arm[i++] = 0;
    if (i == t) break;
  }
  return std::nullopt;
}

IntMatrix K0::twist_matrix(const LVector& x) const {
  std::vector<K0Class> cols;
  for (const auto& y : window_) cols.push_back(line_bundle(d_.add(y, x)));
  return IntMatrix::from_columns(cols, n());
}

IntPoly K0::coxeter_polynomial() const { return characteristic_polynomial(coxeter_); }

// ---- standard data ----

StandardKind parse_standard_kind(const std::string& s) {
  if (s == "canonical") return StandardKind::Canonical;
  if (s == "squid") return StandardKind::Squid;
  if (s == "coxeter_dynkin" || s == "coxeter-dynkin") return StandardKind::CoxeterDynkin;
  throw std::invalid_argument("unknown standard tilting kind: " + s);
}

std::string to_string(StandardKind k) {
  switch (k) {
    case StandardKind::Canonical: return "canonical";
    case StandardKind::Squid: return "squid";
    case StandardKind::CoxeterDynkin: return "coxeter_dynkin";
  }
  return "?";
}

namespace {

void add_arrows(std::vector<QuiverArrowCount>& q, int from, int to, int count) {
  for (auto& a : q)
    if (a.from == from && a.to == to) {
      a.count += count;
      return;
    }
  q.push_back({from, to, count});
}

}  // namespace

TiltingDatum standard_tilting_data(const K0& k0, StandardKind kind) {
  const auto& d = k0.descriptor();
  const int n = k0.n();
  TiltingDatum t;
  switch (kind) {
    case StandardKind::Canonical: {
      for (int k = 0; k < n; ++k) t.summands.push_back({k + 1, k0.basis(k)});
      std::vector<QuiverArrowCount> q;
      int label = 2;
      for (int i = 0; i < d.variables(); ++i) {
        const int p = d.var_weight(i);
        if (p == 1) {
          add_arrows(q, 1, n, 1);
          continue;
        }
        add_arrows(q, 1, label, 1);
        for (int a = 1; a + 1 < p; ++a) add_arrows(q, label + a - 1, label + a, 1);
        add_arrows(q, label + p - 2, n, 1);
        label += p - 1;
      }
      t.quiver = q;
      std::vector<QuiverArrowCount> rel;
      if (d.t() > 2) rel.push_back({1, n, d.t() - 2});
      t.relations = rel;
      break;
    }
    case StandardKind::Squid: {
      // O, O(c), then the chains S_i^[j] of length j with top S_{i,0}
      t.summands.push_back({1, k0.basis(0)});
      t.summands.push_back({2, k0.basis(n - 1)});
      int label = 3;
      for (int i = 0; i < d.t(); ++i)
        for (int j = d.weights()[i] - 1; j >= 1; --j) {
          K0Class cls = k0.zero();
          for (int a = 0; a < j; ++a) cls = cls + k0.tube_simple(i, -a);
          t.summands.push_back({label++, cls});
        }
      break;
    }
    case StandardKind::CoxeterDynkin: {
      if (d.t() < 2) throw std::domain_error("Coxeter-Dynkin configuration needs t >= 2");
      t.summands.push_back({1, k0.basis(n - 1)});
      int label = 2;
      for (int i = 0; i < d.t(); ++i)
        for (int j = d.weights()[i] - 1; j >= 1; --j) {
          K0Class cls = k0.zero();
          for (int a = 0; a < j; ++a) cls = cls + k0.tube_simple(i, -a);
          t.summands.push_back({label++, cls});
        }
      t.summands.push_back({label, -k0.line_bundle(d.neg(d.omega()))});
      break;
    }
  }
  if (!is_unimodular(k0, t)) throw std::logic_error("standard datum not unimodular");
  return t;
}

TiltingDatum two_weight_cycle_datum(const K0& k0) {
  const auto& d = k0.descriptor();
  if (d.t() != 2) throw std::domain_error("two-weight datum needs exactly two weights");
  int i1 = 0, i2 = 1;
  if (d.weights()[0] > d.weights()[1]) std::swap(i1, i2);
  const int p1 = d.weights()[i1], p2 = d.weights()[i2];
  const LVector x1 = d.x(i1), x2 = d.x(i2);

  std::vector<LVector> verts{d.zero()};
  std::vector<QuiverArrowCount> q;
  auto index_of = [&](const LVector& y) {
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (verts[k] == y) return static_cast<int>(k) + 1;
    verts.push_back(y);
    return static_cast<int>(verts.size());
  };
  LVector cur = d.zero();
  for (int k = 0; k < p1; ++k) {
    LVector up = d.add(cur, x1);
    LVector down = d.sub(up, x2);
    int a = index_of(cur), b = index_of(up), c = index_of(down);
    add_arrows(q, a, b, 1);
    add_arrows(q, c, b, 1);
    cur = down;
  }
  LVector top = d.zero();
  for (int k = 0; k < p2 - p1; ++k) {
    LVector next = d.add(top, x2);
    add_arrows(q, index_of(top), index_of(next), 1);
    top = next;
  }
  if (top != cur) throw std::logic_error("two-weight cycle does not close");
  TiltingDatum t;
  for (std::size_t k = 0; k < verts.size(); ++k)
    t.summands.push_back({static_cast<int>(k) + 1, k0.line_bundle(verts[k])});
  t.quiver = q;
  if (static_cast<int>(t.size()) != k0.n()) throw std::logic_error("two-weight cycle has wrong size");
  return t;
}

IntMatrix gram_matrix(const K0& k0, const TiltingDatum& t) {
  const std::size_t m = t.size();
  IntMatrix h(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) h(a, b) = k0.euler(t.summands[a].cls, t.summands[b].cls);
  return h;
}

namespace {
IntMatrix class_matrix(const K0& k0, const TiltingDatum& t) {
  std::vector<K0Class> cols;
  for (const auto& s : t.summands) cols.push_back(s.cls);
  return IntMatrix::from_columns(cols, k0.n());
}
}  // namespace

bool is_unimodular(const K0& k0, const TiltingDatum& t) {
  if (static_cast<int>(t.size()) != k0.n()) return false;
  Integer det = determinant(class_matrix(k0, t));
  return det == 1 || det == -1;
}

TiltingNumericReport tilting_numeric_report(const K0& k0, const TiltingDatum& t) {
  if (!is_unimodular(k0, t)) throw std::invalid_argument("tilting datum is not unimodular");
  const int n = k0.n();
  TiltingNumericReport r;
  IntMatrix g = class_matrix(k0, t);
  // <T_i, S_j> = delta_ij  <=>  G^T C S = I
  auto inv = inverse_unimodular(g.transpose() * k0.cartan());
  if (!inv) throw std::logic_error("Euler pairing on the datum not unimodular");
  for (int j = 0; j < n; ++j) r.dual.push_back(inv->column(j));

  r.hom_matrix = gram_matrix(k0, t);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (sgn(r.hom_matrix(a, b)) < 0) r.hom_nonnegative = false;

  K0Class rank_sum = k0.zero(), dual_sum = k0.zero();
  bool all_positive = true;
  std::optional<Rational> lo, hi;
  for (int i = 0; i < n; ++i) {
    Numerics nt = k0.numerics(t.summands[i].cls), ns = k0.numerics(r.dual[i]);
    r.summand_numerics.push_back(nt);
    r.dual_numerics.push_back(ns);
    if (sgn(ns.rank) == 0) ++r.central_simples;
    rank_sum = rank_sum + nt.rank * r.dual[i];
    dual_sum = dual_sum + ns.rank * t.summands[i].cls;
    if (sgn(nt.rank) <= 0) {
      all_positive = false;
      continue;
    }
    Rational mu = *nt.slope();
    if (!lo || mu < *lo) lo = mu;
    if (!hi || mu > *hi) hi = mu;
  }
  if (all_positive && lo) r.width = *hi - *lo;
  r.huebner_rank_identity = rank_sum == k0.w();
  r.huebner_dual_identity = dual_sum == -k0.w();

  // canonicity: all line bundles and a twist carrying them onto the window
  const auto& d = k0.descriptor();
  std::vector<LVector> located;
  for (const auto& s : t.summands) {
    auto z = k0.locate_line_bundle(s.cls);
    if (!z) break;
    located.push_back(*z);
  }
  if (located.size() == t.size()) {
    std::set<LVector> win(k0.window().begin(), k0.window().end());
    for (const auto& shift : located) {
      std::set<LVector> moved;
      for (const auto& z : located) moved.insert(d.sub(z, shift));
      if (moved == win) {
        r.canonical = true;
        r.canonical_twist = shift;
        break;
      }
    }
  }

  if (t.quiver) {
    std::map<std::pair<int, int>, int> arrows;
    for (const auto& a : *t.quiver) arrows[{a.from, a.to}] += a.count;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        int lu = t.summands[u].label, lv = t.summands[v].label;
        Integer rr = k0.euler(r.dual[v], r.dual[u]) + arrows[{lu, lv}];
        if (sgn(rr) != 0) r.relation_counts.push_back({lu, lv, static_cast<int>(rr.get_si())});
      }
  }
  return r;
}

SpectralData spectral_report(const K0& k0, const TiltingDatum& t) {
  if (!is_unimodular(k0, t)) throw std::invalid_argument("tilting datum is not unimodular");
  const int n = k0.n();
  SpectralData s;
  s.coxeter_matrix = k0.coxeter_matrix();
  s.coxeter_polynomial = k0.coxeter_polynomial();
  s.denominator = det_one_minus_xm(s.coxeter_matrix);
  s.self_reciprocal = s.coxeter_polynomial == s.coxeter_polynomial.reversed(n) ||
                      s.coxeter_polynomial == s.coxeter_polynomial.reversed(n) * Integer(-1);
  const IntPoly& psi = s.coxeter_polynomial;
  const IntPoly& den = s.denominator;
  const long pbar = k0.descriptor().pbar();
  const std::size_t terms = std::max<std::size_t>(2 * n + 2, pbar + 1);
  for (const auto& summand : t.summands) {
    SummandSpectrum ss;
    ss.label = summand.label;
    std::vector<Integer> alpha;
    K0Class v = summand.cls;
    for (std::size_t k = 0; k < terms; ++k) {
      alpha.push_back(k0.euler(summand.cls, v));
      v = s.coxeter_matrix.apply(v);
    }
    IntPoly series(alpha);
    IntPoly prod = series * den;
    std::vector<Integer> num;
    for (int k = 0; k < n; ++k) num.push_back(prod.coeff(k));
    for (std::size_t k = n; k < terms; ++k)
      if (sgn(prod.coeff(k)) != 0) throw std::logic_error("Hilbert-Poincare numerator check failed");
    ss.numerator = IntPoly(num);
    IntPoly psi_p = (psi * ss.numerator).exact_div(den);  // psi * P as a polynomial
    ss.psi_prime = (psi - psi_p).divided_by_x();
    ss.psi_bar = psi * IntPoly({Integer(0), Integer(1)}) + psi_p;
    ss.alpha.assign(alpha.begin(), alpha.begin() + pbar + 1);
    s.summands.push_back(std::move(ss));
  }
  s.homogeneous = true;
  for (const auto& ss : s.summands)
    if (!(ss.psi_prime == s.summands.front().psi_prime) || !(ss.psi_bar == s.summands.front().psi_bar))
      s.homogeneous = false;
  return s;
}

std::string to_string(ArrowVerdict v) {
  switch (v) {
    case ArrowVerdict::Bijective: return "bijective";
    case ArrowVerdict::InjectiveOnly: return "injective-only";
    case ArrowVerdict::SurjectiveOnly: return "surjective-only";
  }
  return "?";
}

std::vector<ArrowProfile> bijection_profile(const K0& k0, const TiltingDatum& t) {
  if (!t.quiver) throw std::invalid_argument("bijection profile needs a quiver");
  std::vector<ArrowProfile> out;
  for (const auto& a : *t.quiver) {
    int u = t.position(a.from), v = t.position(a.to);
    if (u < 0 || v < 0) throw std::invalid_argument("quiver refers to an unknown label");
    Integer ru = k0.rank_of(t.summands[u].cls), rv = k0.rank_of(t.summands[v].cls);
    // G_alpha : G_v -> G_u has dimensions rk T_v -> rk T_u
    ArrowVerdict verdict = ru == rv   ? ArrowVerdict::Bijective
                           : rv < ru ? ArrowVerdict::InjectiveOnly
                                     : ArrowVerdict::SurjectiveOnly;
    out.push_back({a.from, a.to, a.count, verdict});
  }
  return out;
}

Integer average_form(const K0& k0, const K0Class& a, const K0Class& b) {
  Integer s = 0;
  K0Class v = b;
  for (long j = 0; j < k0.descriptor().pbar(); ++j) {
    s += k0.euler(a, v);
    v = k0.coxeter_matrix().apply(v);
  }
  return s;
}

TubularTools tubular_tools(const K0& k0) {
  const auto& d = k0.descriptor();
  if (d.delta_omega() != 0) throw std::domain_error("tubular tools need a tubular weight type");
  const int n = k0.n();
  TubularTools tt;
  int deg1 = -1;
  for (int i = 0; i < d.t(); ++i)
    if (d.pbar() / d.weights()[i] == 1) deg1 = i;
  if (deg1 < 0) throw std::logic_error("no generator of degree one");
  tt.sigma = k0.twist_matrix(d.x(deg1));

  // rho(y) = y - sum_j <y, Phi^j o> Phi^j o
  std::vector<K0Class> orbit;
  K0Class o = k0.basis(0);
  for (long j = 0; j < d.pbar(); ++j) {
    orbit.push_back(o);
    o = k0.coxeter_matrix().apply(o);
  }
  std::vector<K0Class> cols;
  for (int b = 0; b < n; ++b) {
    K0Class y = k0.basis(b), img = y;
    for (const auto& u : orbit) img = img - k0.euler(y, u) * u;
    cols.push_back(img);
  }
  tt.rho = IntMatrix::from_columns(cols, n);
  auto inv = inverse_unimodular(tt.rho);
  if (!inv) throw std::logic_error("rho matrix not invertible over Z");
  tt.rho_inv = *inv;
  auto sigma_inv = inverse_unimodular(tt.sigma);
  tt.z = sigma_inv->apply(tt.rho.apply(k0.w()));
  return tt;
}

}  // namespace wpl
