#include "wpl/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#ifndef WPL_DATA_DIR_DEFAULT
#define WPL_DATA_DIR_DEFAULT "data"
#endif

namespace wpl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::KnownDiscrepancy: return "known-paper-discrepancy";
  }
  return "?";
}

bool CheckReport::pass() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == Verdict::Fail; });
}

void CheckReport::add(std::string id, std::string anchor, std::string computed, std::string expected, std::string note) {
  Verdict v = computed == expected ? Verdict::Pass : Verdict::Fail;
  claims.push_back({std::move(id), std::move(anchor), std::move(computed), std::move(expected), v, std::move(note)});
}

void CheckReport::add_bool(std::string id, std::string anchor, bool ok, std::string note) {
  add(std::move(id), std::move(anchor), ok ? "true" : "false", "true", std::move(note));
}

void CheckReport::add_soft(std::string id, std::string anchor, std::string computed, std::string expected,
                           std::string note) {
  Verdict v = computed == expected ? Verdict::Pass : Verdict::KnownDiscrepancy;
  claims.push_back({std::move(id), std::move(anchor), std::move(computed), std::move(expected), v, std::move(note)});
}

json to_json(const CheckReport& r) {
  json cl = json::array();
  for (const auto& c : r.claims)
    cl.push_back({{"id", c.id},
                  {"anchor", c.anchor},
                  {"computed", c.computed},
                  {"expected", c.expected},
                  {"verdict", to_string(c.verdict)},
                  {"note", c.note}});
  return {{"suite", r.suite}, {"pass", r.pass()}, {"claims", cl}};
}

std::string to_table(const CheckReport& r) {
  std::size_t wi = 5, wc = 8, we = 8;
  for (const auto& c : r.claims) {
    wi = std::max(wi, c.id.size());
    wc = std::max(wc, c.computed.size());
    we = std::max(we, c.expected.size());
  }
  wc = std::min<std::size_t>(wc, 48);
  we = std::min<std::size_t>(we, 48);
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() > w) s = s.substr(0, w - 3) + "...";
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  os << pad("claim", wi) << "  " << pad("computed", wc) << "  " << pad("expected", we) << "  verdict\n";
  for (const auto& c : r.claims) {
    os << pad(c.id, wi) << "  " << pad(c.computed, wc) << "  " << pad(c.expected, we) << "  " << to_string(c.verdict);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string data_dir() {
  if (const char* e = std::getenv("WPL_DATA_DIR"); e && *e) return e;
  return WPL_DATA_DIR_DEFAULT;
}

const json& golden() {
  static std::once_flag once;
  static json data;
  std::call_once(once, [] {
    const std::string path = data_dir() + "/golden/figures.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden data " + path);
    data = json::parse(in);
  });
  return data;
}

const json& figure_entry(const std::string& id) {
  for (const auto& e : golden().at("reflections"))
    if (e.at("id") == id) return e;
  throw SuiteError("unknown figure id: " + id);
}

Fraction parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("bad fraction " + s);
  return {Integer(s.substr(0, slash)), Integer(s.substr(slash + 1))};
}

std::string to_string(const Fraction& f) { return f.degree.get_str() + "/" + f.rank.get_str(); }

namespace {

Fraction frac(const K0& k0, const K0Class& c) {
  auto n = k0.numerics(c);
  return {n.degree, n.rank};
}

std::string str_list(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
  return s + "}";
}

// ---------------------------------------------------------------- targets

struct Target {
  std::shared_ptr<const K0> k0;
  TiltingDatum datum;
  std::string name;
};

std::shared_ptr<const K0> k0_for(const std::string& type) { return std::make_shared<K0>(parse_type(type)); }

Target canonical_target(const std::string& type) {
  auto k0 = k0_for(type);
  auto t = canonical_tilting(k0);
  return {k0, t.datum, "T_can" + k0->descriptor().label()};
}

// the tilting bundle reached by running a figure's sequence backwards from T_can
Target figure_target(const std::string& id) {
  const json& e = figure_entry(id);
  auto k0 = k0_for(e.at("type").get<std::string>());
  auto seq = e.at("sequence").get<std::vector<int>>();
  std::reverse(seq.begin(), seq.end());
  auto tr = reflect_sequence(canonical_tilting(k0), seq);
  return {k0, tr.states.back().datum, id};
}

std::vector<Target> targets_from(const json& input, const std::vector<std::string>& default_types,
                                 const std::vector<std::string>& default_figures) {
  std::vector<Target> out;
  if (input.is_null()) {
    for (const auto& t : default_types) out.push_back(canonical_target(t));
    for (const auto& f : default_figures) out.push_back(figure_target(f));
    return out;
  }
  if (!input.is_object()) throw SuiteError("input must be a JSON object");
  if (input.contains("figure")) {
    out.push_back(figure_target(input.at("figure").get<std::string>()));
    return out;
  }
  if (!input.contains("type")) throw SuiteError("input needs \"type\" or \"figure\"");
  auto k0 = std::make_shared<K0>(descriptor_from_json(input.at("type")));
  if (input.contains("datum")) {
    auto d = datum_from_json(input.at("datum"));
    for (const auto& s : d.summands)
      if (static_cast<int>(s.cls.size()) != k0->n()) throw SuiteError("class length differs from the rank of K0");
    if (!is_unimodular(*k0, d)) throw SuiteError("datum is not a basis of K0");
    out.push_back({k0, std::move(d), "input datum"});
  } else if (input.contains("standard") && input.at("standard") != "canonical") {
    auto kind = parse_standard_kind(input.at("standard").get<std::string>());
    out.push_back({k0, standard_tilting_data(*k0, kind), to_string(kind) + k0->descriptor().label()});
  } else {
    auto t = canonical_tilting(k0);
    out.push_back({k0, t.datum, "T_can" + k0->descriptor().label()});
  }
  return out;
}

std::vector<std::string> input_types(const json& input, const std::vector<std::string>& defaults) {
  if (input.is_null()) return defaults;
  if (!input.is_object() || !input.contains("type")) throw SuiteError("input needs \"type\"");
  const auto& t = input.at("type");
  if (t.is_array()) {
    std::vector<std::string> v;
    for (const auto& x : t) v.push_back(x.get<std::string>());
    return v;
  }
  if (t.is_string()) return {t.get<std::string>()};
  return {descriptor_from_json(t).label()};
}

const std::vector<std::string> kMainTypes = {"", "2,3", "2,2,2", "2,3,5", "3,3,3", "2,3,7", "2,2,2,2,2"};
const std::vector<std::string> kFig4 = {"fig4-22222", "fig4-2223", "fig4-245", "fig4-334", "fig4-237"};
const std::vector<std::string> kTubular = {"3,3,3", "2,4,4", "2,3,6", "2,2,2,2"};

// ---------------------------------------------------------------- suites

void suite_max_line_bundles(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    const K0& k0 = *tg.k0;
    std::set<Integer> ranks;
    for (const auto& s : tg.datum.summands) ranks.insert(k0.rank_of(s.cls));
    auto rep = tilting_numeric_report(k0, tg.datum);
    const std::string a = "equal ranks force rank one";
    if (ranks.size() == 1) {
      r.add(tg.name + ": common rank", a, ranks.begin()->get_str(), "1");
      if (k0.descriptor().t() != 2)
        r.add(tg.name + ": canonical up to twist", a, rep.canonical ? "true" : "false", "true");
    } else {
      r.add(tg.name + ": ranks differ", a, std::to_string(ranks.size()) + " distinct ranks", std::to_string(ranks.size()) + " distinct ranks",
            "hypothesis not met");
    }
  }
}

void suite_central_simples(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    auto rep = tilting_numeric_report(*tg.k0, tg.datum);
    const int bound = tg.k0->n() - 2;
    const std::string a = "at most n-2, equality iff canonical";
    if (rep.canonical)
      r.add(tg.name + ": central simples", a, std::to_string(rep.central_simples), std::to_string(bound));
    else
      r.add(tg.name + ": central simples", a, rep.central_simples < bound ? "< " + std::to_string(bound) : std::to_string(rep.central_simples),
            "< " + std::to_string(bound), "count " + std::to_string(rep.central_simples));
  }
}

void suite_width(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    const auto& d = tg.k0->descriptor();
    auto rep = tilting_numeric_report(*tg.k0, tg.datum);
    const std::string a = "w(T) <= pbar, equality iff canonical when chi >= 0";
    if (!rep.width) {
      r.add(tg.name + ": width", a, "undefined", "a bundle", "some summand has rank <= 0");
      continue;
    }
    const Rational pb(d.pbar());
    const std::string w = to_string(*rep.width);
    r.add(tg.name + ": width bounded", a, *rep.width <= pb ? "<= " + std::to_string(d.pbar()) : w,
          "<= " + std::to_string(d.pbar()), "w = " + w);
    if (rep.canonical)
      r.add(tg.name + ": canonical width", a, w, std::to_string(d.pbar()));
    else if (d.curvature() != CurvatureClass::Wild)
      r.add(tg.name + ": non-canonical width", a, *rep.width < pb ? "< pbar" : w, "< pbar");
  }
}

void suite_bijections(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    if (!tg.datum.quiver) throw SuiteError(tg.name + ": bijection profile needs the quiver");
    auto prof = bijection_profile(*tg.k0, tg.datum);
    auto rep = tilting_numeric_report(*tg.k0, tg.datum);
    int bij = 0, total = 0;
    for (const auto& a : prof) {
      total += a.count;
      if (a.verdict == ArrowVerdict::Bijective) bij += a.count;
    }
    const std::string a = "each arrow injective or surjective; all bijective iff canonical";
    r.add(tg.name + ": arrows injective or surjective", a, std::to_string(total), std::to_string(total));
    const bool all = bij == total;
    if (tg.k0->descriptor().t() == 2 || rep.canonical)
      r.add(tg.name + ": bijective arrows", a, std::to_string(bij), std::to_string(total));
    else
      r.add(tg.name + ": bijective arrows", a, all ? "all" : "not all", "not all",
            std::to_string(bij) + " of " + std::to_string(total));
  }
}

void suite_homogeneity(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    auto sp = spectral_report(*tg.k0, tg.datum);
    auto rep = tilting_numeric_report(*tg.k0, tg.datum);
    const std::string a = "same Coxeter polynomial for all perpendicular categories iff canonical";
    const bool tub = tg.k0->descriptor().curvature() == CurvatureClass::Tubular;
    if (rep.canonical)
      r.add(tg.name + ": homogeneity verdict", a, sp.homogeneous ? "true" : "false", "true");
    else if (!tub)
      r.add(tg.name + ": homogeneity verdict", a, sp.homogeneous ? "true" : "false", "false");
    else
      r.add(tg.name + ": homogeneity verdict", a, sp.homogeneous ? "true" : "false", sp.homogeneous ? "true" : "false",
            "tubular: no constraint");
  }
}

void suite_huebner(CheckReport& r, const json& in) {
  for (const auto& tg : targets_from(in, kMainTypes, kFig4)) {
    auto rep = tilting_numeric_report(*tg.k0, tg.datum);
    r.add_bool(tg.name + ": sum rk(T_i)[S_i] = w", "Huebner identity (a)", rep.huebner_rank_identity);
    r.add_bool(tg.name + ": sum rk(S_i)[T_i] = -w", "Huebner identity (b)", rep.huebner_dual_identity);
  }
}

void suite_two_weight(CheckReport& r, const json& in) {
  for (const auto& type : input_types(in, {"2,2", "2,3", "3,5", "2,7", "4,4", "3,8"})) {
    auto k0 = k0_for(type);
    const auto& d = k0->descriptor();
    if (d.t() != 2) throw SuiteError("two-weight suite needs exactly two weights");
    const int gap = std::abs(d.weights()[0] - d.weights()[1]);
    const std::string a = "nu(T) >= |p1 - p2|, attained by the zigzag scheme";
    auto cyc = two_weight_cycle_datum(*k0);
    auto rc = tilting_numeric_report(*k0, cyc);
    r.add(d.label() + ": zigzag central simples", a, std::to_string(rc.central_simples), std::to_string(gap));
    r.add_bool(d.label() + ": zigzag is a basis with Hom >= 0", a, is_unimodular(*k0, cyc) && rc.hom_nonnegative);
    // central simples = vertices that are neither sink nor source
    std::map<int, std::pair<int, int>> deg;
    for (const auto& q : *cyc.quiver) {
      deg[q.from].second += q.count;
      deg[q.to].first += q.count;
    }
    int interior = 0;
    for (const auto& s : cyc.summands) interior += deg[s.label].first > 0 && deg[s.label].second > 0;
    r.add(d.label() + ": interior vertices of the zigzag", a, std::to_string(interior), std::to_string(rc.central_simples));
    auto can = tilting_numeric_report(*k0, canonical_tilting(k0).datum);
    r.add(d.label() + ": canonical bound", a, can.central_simples >= gap ? ">= " + std::to_string(gap) : std::to_string(can.central_simples),
          ">= " + std::to_string(gap));
  }
}

void suite_gorenstein(CheckReport& r, const json& in) {
  const json& g = golden().at("gorenstein");
  const std::string a = g.at("anchor").get<std::string>();
  if (!in.is_null()) {
    for (const auto& type : input_types(in, {})) {
      auto d = parse_type(type);
      r.add(d.label() + ": [L : Z omega]", a, d.gorenstein_index().get_str(), d.gorenstein_index().get_str(),
            "no table entry checked");
    }
    return;
  }
  for (const auto& row : g.at("rows"))
    for (const auto& inst : row.at("instances")) {
      auto d = parse_type(inst.at("type").get<std::string>());
      r.add(d.label() + " in family " + row.at("family").get<std::string>(), a, d.gorenstein_index().get_str(),
            std::to_string(inst.at("value").get<int>()), "family value " + row.at("value").get<std::string>());
    }
}

void suite_tubular_distance(CheckReport& r, const json& in) {
  const std::string a = "<<T_1, T_n>> = pbar";
  if (in.is_null())
    for (const auto& e : golden().at("tubular_endpoints")) {
      auto d = parse_type(e.at("type").get<std::string>());
      auto f = parse_fraction(e.at("first").get<std::string>()), l = parse_fraction(e.at("last").get<std::string>());
      Integer det = f.rank * l.degree - f.degree * l.rank;
      r.add(d.label() + ": figure endpoints " + to_string(f) + ", " + to_string(l), e.at("anchor").get<std::string>(),
            det.get_str(), std::to_string(d.pbar()));
    }
  // the same value from classes, via the period-averaged form, on the Coxeter-Dynkin and canonical configurations
  for (const auto& type : input_types(in, kTubular)) {
    auto k0 = k0_for(type);
    const auto& d = k0->descriptor();
    if (d.curvature() != CurvatureClass::Tubular) throw SuiteError("tubular suite needs a tubular weight type");
    auto can = standard_tilting_data(*k0, StandardKind::Canonical);
    r.add(d.label() + ": averaged form O -> O(c)", a,
          average_form(*k0, can.summands.front().cls, can.summands.back().cls).get_str(), std::to_string(d.pbar()));
    auto cd = standard_tilting_data(*k0, StandardKind::CoxeterDynkin);
    r.add(d.label() + ": averaged form, Coxeter-Dynkin endpoints", a,
          average_form(*k0, cd.summands.front().cls, cd.summands.back().cls).get_str(), std::to_string(d.pbar()),
          "first and last summand");
  }
}

void suite_tubular_mutations(CheckReport& r, const json& in) {
  for (const auto& type : input_types(in, kTubular)) {
    auto k0 = k0_for(type);
    const auto& d = k0->descriptor();
    if (d.curvature() != CurvatureClass::Tubular) throw SuiteError("tubular suite needs a tubular weight type");
    auto tt = tubular_tools(*k0);
    const auto n = static_cast<std::size_t>(k0->n());
    std::vector<K0Class> test;
    for (std::size_t b = 0; b < n; ++b) test.push_back(k0->basis(b));
    for (int i = 0; i < d.t(); ++i)
      for (int j = 0; j < d.weights()[i]; ++j) test.push_back(k0->tube_simple(i, j));
    bool iso = true, action = true, power = true, rr = true;
    IntMatrix rp = tt.rho.pow(d.pbar());
    for (const auto& x : test) {
      for (const auto& y : test) iso = iso && k0->euler(tt.rho.apply(x), tt.rho.apply(y)) == k0->euler(x, y);
      auto nx = k0->numerics(x), nr = k0->numerics(tt.rho.apply(x)), ns = k0->numerics(tt.sigma.apply(x));
      action = action && nr.degree == nx.degree && nr.rank == nx.degree + nx.rank && ns.degree == nx.degree + nx.rank &&
               ns.rank == nx.rank;
      power = power && rp.apply(x) == x + nx.degree * tt.z;
      rr = rr && tt.rho_inv.apply(tt.rho.apply(x)) == x;
    }
    const std::string L = d.label() + ": ";
    r.add_bool(L + "rho preserves the Euler form", "rho isometry", iso);
    r.add_bool(L + "(deg,rk) action of sigma and rho", "unimodular action", action);
    r.add_bool(L + "rho^pbar y = y + deg(y) z", "rho power law", power);
    r.add_bool(L + "rho invertible", "rho power law", rr && abs(determinant(tt.rho)) == 1);
    const IntMatrix& lam = tt.rho_inv;
    r.add_bool(L + "braid relation", "sigma lambda sigma = lambda sigma lambda", tt.sigma * lam * tt.sigma == lam * tt.sigma * lam);
    bool omni = true;
    for (int i = 0; i < d.t(); ++i)
      for (int j = 0; j < d.weights()[i]; ++j) {
        auto s = k0->tube_simple(i, j);
        omni = omni && k0->euler(tt.z, s) == k0->degree_of(s);
      }
    r.add_bool(L + "<z, s> = deg s for every tube simple", "omnipresence", omni);
    for (const auto& x : test)
      for (const auto& y : test) {
        auto a = k0->numerics(x), b = k0->numerics(y);
        if (average_form(*k0, x, y) != a.rank * b.degree - a.degree * b.rank) {
          r.add_bool(L + "averaged form = rk deg' - deg rk'", "Riemann-Roch", false);
          goto next;
        }
      }
    r.add_bool(L + "averaged form = rk deg' - deg rk'", "Riemann-Roch", true);
  next:;
  }
}

void suite_arm_distribution(CheckReport& r, const json& in) {
  for (const auto& type : input_types(in, kTubular)) {
    auto k0 = k0_for(type);
    const auto& d = k0->descriptor();
    if (d.curvature() != CurvatureClass::Tubular) throw SuiteError("arm distribution needs a tubular weight type");
    auto tt = tubular_tools(*k0);
    // u of degree one
    std::optional<LVector> u;
    for (int i = 0; i < d.t() && !u; ++i)
      for (int m = 1; m < d.weights()[i] && !u; ++m) {
        LVector v = d.scale(d.x(i), m);
        if (d.delta(v) == 1) u = v;
      }
    if (!u) throw SuiteError("no element of degree one");
    for (int i = 0; i < d.t(); ++i) {
      const long step = d.pbar() / d.weights()[i];
      std::vector<std::string> got, want;
      for (int j = 0; j <= d.weights()[i]; ++j) {
        LVector y = j == d.weights()[i] ? d.c() : d.scale(d.x(i), j);
        auto f = frac(*k0, tt.rho.apply(k0->line_bundle(d.add(y, *u))));
        got.push_back(to_string(f));
        want.push_back(std::to_string(1 + j * step) + "/" + std::to_string(2 + j * step));
      }
      r.add(d.label() + ": arm " + std::to_string(i + 1) + " of rho T_can(u)", "degree/rank distribution",
            str_list(got), str_list(want), "u = " + d.str(*u));
    }
  }
}

void suite_coprimality(CheckReport& r, const json& in) {
  const json& e = golden().at("coprime_example");
  std::vector<std::string> fr;
  if (in.is_null())
    fr = e.at("fractions").get<std::vector<std::string>>();
  else if (in.contains("fractions"))
    fr = in.at("fractions").get<std::vector<std::string>>();
  else
    throw SuiteError("coprimality input needs \"fractions\"");
  for (const auto& s : fr) {
    auto f = parse_fraction(s);
    Integer g = gcd(f.degree, f.rank);
    r.add("gcd" + s, e.at("anchor").get<std::string>(), Integer(abs(g)).get_str(), "1");
  }
}

Rational eval(const std::vector<long>& c, long n) {
  Rational s = 0, p = 1;
  for (long x : c) {
    s += Rational(x) * p;
    p *= n;
  }
  return s;
}

void suite_t247(CheckReport& r, const json&) {
  const json& t = golden().at("t247");
  const std::string a = t.at("anchor").get<std::string>();
  const Rational limit = parse_rational(t.at("limit").get<std::string>());
  const auto at = t.at("check_at").get<std::vector<long>>();
  for (const auto& e : t.at("entries")) {
    auto num = e.at("num").get<std::vector<long>>(), den = e.at("den").get<std::vector<long>>();
    const std::string v = e.at("vertex").get<std::string>();
    // limit of a ratio of equal-degree polynomials
    Rational lim = num.size() == den.size() ? Rational(num.back()) / Rational(den.back()) : Rational(0);
    std::vector<std::string> vals;
    bool approaching = true;
    Rational prev = -1;
    for (long n : at) {
      Rational mu = eval(num, n) / eval(den, n);
      vals.push_back(to_string(mu));
      Rational dist = abs(mu - limit);
      if (prev >= 0 && !(dist < prev)) approaching = false;
      prev = dist;
    }
    const bool quadratic = den.size() == 3;
    const std::string note = "values at n=1,2,3,10: " + str_list(vals);
    if (quadratic && den.back() != 256)
      r.add_soft(v + ": limit", a, to_string(lim), to_string(limit),
                 "denominator " + std::to_string(den.back()) + "n^2 conflicts with the stated limit; 256 restores it; " + note);
    else
      r.add(v + ": limit", a, to_string(lim), to_string(limit), note);
    if (lim == limit) r.add_bool(v + ": monotone approach at sampled n", a, approaching);
  }
}

void suite_coxeter_laws(CheckReport& r, const json& in) {
  for (const auto& type : input_types(in, kMainTypes)) {
    auto k0 = k0_for(type);
    const auto& d = k0->descriptor();
    const auto n = static_cast<std::size_t>(k0->n());
    const std::string L = d.label() + ": ";
    // -C^{-1} C^T in our column convention
    RatMatrix c = k0->cartan().to_rational();
    auto ci = inverse(c);
    RatMatrix want = *ci * c.transpose();
    RatMatrix got = k0->twist_matrix(d.omega()).to_rational();
    bool eq = got.rows() == want.rows();
    for (std::size_t i = 0; eq && i < n; ++i)
      for (std::size_t j = 0; eq && j < n; ++j) eq = got(i, j) == -want(i, j);
    r.add_bool(L + "twist by omega equals -C^{-1}C^T", "Coxeter matrix", eq,
               "column convention; the transpose of -C^{-T}C");
    bool dets = abs(determinant(k0->twist_matrix(d.c()))) == 1;
    for (int i = 0; i < d.t(); ++i) dets = dets && abs(determinant(k0->twist_matrix(d.x(i)))) == 1;
    r.add_bool(L + "det twist(x_i) = +-1", "twist automorphisms", dets);
    IntMatrix pp = k0->coxeter_matrix().pow(d.pbar());
    bool law = true;
    for (std::size_t b = 0; b < n; ++b) {
      K0Class y = k0->basis(b);
      law = law && pp.apply(y) == y + (k0->rank_of(y) * d.delta_omega()) * k0->w();
    }
    r.add_bool(L + "Phi^pbar y = y + rk(y) delta(omega) w", "Coxeter power law", law);
  }
}

void suite_figures(CheckReport& r, const json& in) {
  std::vector<std::string> ids;
  if (in.is_null()) {
    for (const auto& e : golden().at("reflections")) ids.push_back(e.at("id").get<std::string>());
  } else if (in.is_string()) {
    ids.push_back(in.get<std::string>());
  } else if (in.is_object() && in.contains("figure")) {
    ids.push_back(in.at("figure").get<std::string>());
  } else if (in.is_object() && in.contains("type")) {
    auto want = parse_type(in.at("type").get<std::string>());
    for (const auto& e : golden().at("reflections"))
      if (parse_type(e.at("type").get<std::string>()).weights() == want.weights()) ids.push_back(e.at("id"));
    if (ids.empty()) throw SuiteError("no figure for type " + want.label());
  } else {
    throw SuiteError("figure-reflections input needs \"figure\" or \"type\"");
  }
  for (const auto& id : ids) {
    const json& e = figure_entry(id);
    const std::string a = e.at("anchor").get<std::string>();
    auto fc = compare_figure(e);
    if (!fc.error.empty()) {
      r.add(id + ": reflections", a, "error: " + fc.error, "reproduced");
      continue;
    }
    std::vector<std::string> got;
    for (const auto& f : fc.computed) got.push_back(to_string(f));
    std::string shifts;
    for (long s : fc.shifts) shifts += (shifts.empty() ? "" : ",") + std::to_string(s);
    r.add(id + ": (deg,rk) multiset up to twist", a, fc.reproduced ? "reproduced" : str_list(got), "reproduced",
          fc.reproduced ? "degree shift " + shifts + " times rank (unique)" : "no degree shift matches");
    if (!fc.reproduced) {
      for (const auto& m : fc.marks)
        r.add(id + ": relations between " + std::to_string(m.a) + " and " + std::to_string(m.b), a, "not computable",
              std::to_string(m.expected), "figure datum not reproduced");
      continue;
    }
    r.add(id + ": central simples", a, std::to_string(fc.central_simples), "0");
    // the drawn arrows are a transcription of a picture, not part of the stated result;
    // a mismatch is reported, not counted (fig4-245 draws maps the Hom table rules out)
    if (fc.quiver_match && *fc.quiver_match)
      r.add(id + ": quiver up to relabelling", a, "isomorphic", "isomorphic",
            fc.labels_match ? "labels agree vertex by vertex" : "vertex numbering differs");
    else if (fc.quiver_match)
      r.add_soft(id + ": quiver up to relabelling", a, "differs", "isomorphic",
                 "drawn arrows disagree with the computed Hom dimensions between summands");
    for (const auto& m : fc.marks) {
      const std::string c = m.computed ? std::to_string(*m.computed) : "unmatched";
      r.add_soft(id + ": relations between " + std::to_string(m.a) + " and " + std::to_string(m.b), a, c,
                 std::to_string(m.expected), "minimal relations from the gl.dim 2 count formula");
    }
  }
}

using SuiteFn = std::function<void(CheckReport&, const json&)>;
const std::vector<std::pair<std::string, SuiteFn>>& catalog() {
  static const std::vector<std::pair<std::string, SuiteFn>> c = {
      {"max-line-bundles", suite_max_line_bundles},
      {"central-simples", suite_central_simples},
      {"width", suite_width},
      {"bijections", suite_bijections},
      {"homogeneity", suite_homogeneity},
      {"huebner-identities", suite_huebner},
      {"two-weight", suite_two_weight},
      {"gorenstein-table", suite_gorenstein},
      {"tubular-distance-figures", suite_tubular_distance},
      {"tubular-mutations", suite_tubular_mutations},
      {"arm-distribution", suite_arm_distribution},
      {"coprimality-ex0", suite_coprimality},
      {"t247-table", suite_t247},
      {"coxeter-laws", suite_coxeter_laws},
      {"figure-reflections", suite_figures},
  };
  return c;
}

// ---------------------------------------------------------------- figure comparison

struct Graph {
  std::vector<Fraction> fr;             // by position
  std::map<std::pair<int, int>, int> arrows;  // positions
};

// backtracking search for a bijection comp -> fig preserving fractions and arrow counts
bool match_graphs(const Graph& g, const Graph& h, std::vector<int>& perm, std::vector<bool>& used, std::size_t k) {
  const std::size_t n = g.fr.size();
  if (k == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j] || !(g.fr[k] == h.fr[j])) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      auto ga = g.arrows.find({int(i), int(k)}), gb = g.arrows.find({int(k), int(i)});
      auto ha = h.arrows.find({perm[i], int(j)}), hb = h.arrows.find({int(j), perm[i]});
      int c1 = ga == g.arrows.end() ? 0 : ga->second, c2 = gb == g.arrows.end() ? 0 : gb->second;
      int d1 = ha == h.arrows.end() ? 0 : ha->second, d2 = hb == h.arrows.end() ? 0 : hb->second;
      ok = c1 == d1 && c2 == d2;
    }
    if (!ok) continue;
    perm[k] = static_cast<int>(j);
    used[j] = true;
    if (match_graphs(g, h, perm, used, k + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

FigureComparison compare_figure(const json& e) {
  FigureComparison fc;
  fc.id = e.at("id").get<std::string>();
  try {
    auto k0 = k0_for(e.at("type").get<std::string>());
    auto seq = e.at("sequence").get<std::vector<int>>();
    std::reverse(seq.begin(), seq.end());
    auto tr = reflect_sequence(canonical_tilting(k0), seq);
    const auto& datum = tr.states.back().datum;
    const int n = static_cast<int>(datum.size());

    std::map<int, Fraction> want;
    for (const auto& [lab, s] : e.at("fractions").items()) want[std::stoi(lab)] = parse_fraction(s.get<std::string>());
    if (static_cast<int>(want.size()) != n) throw std::runtime_error("figure has a different number of vertices");
    for (const auto& s : datum.summands) fc.computed.push_back(frac(*k0, s.cls));

    std::multiset<Fraction> target;
    for (const auto& [l, f] : want) target.insert(f);
    // candidate shifts: deg - s rk must hit a figure entry of the same rank
    std::set<long> cands;
    for (const auto& c : fc.computed)
      for (const auto& w : target)
        if (c.rank == w.rank && sgn(c.rank) != 0) {
          Integer diff = c.degree - w.degree;
          if (diff % c.rank == 0) cands.insert(Integer(diff / c.rank).get_si());
        }
    if (std::all_of(fc.computed.begin(), fc.computed.end(), [](const Fraction& f) { return sgn(f.rank) == 0; })) cands.insert(0);
    auto shifted = [&](long s) {
      std::vector<Fraction> v;
      for (const auto& c : fc.computed) v.push_back({c.degree - Integer(s) * c.rank, c.rank});
      return v;
    };
    for (long s : cands) {
      auto v = shifted(s);
      if (std::multiset<Fraction>(v.begin(), v.end()) == target) fc.shifts.push_back(s);
    }
    fc.reproduced = fc.shifts.size() == 1;
    auto rep = tilting_numeric_report(*k0, datum);
    fc.central_simples = rep.central_simples;
    for (const auto& m : e.value("relation_marks", json::array()))
      fc.marks.push_back({m[0].get<int>(), m[1].get<int>(), m[2].get<int>(), std::nullopt});
    if (!fc.reproduced) return fc;

    auto v = shifted(fc.shifts.front());
    fc.labels_match = true;
    for (int k = 0; k < n; ++k) fc.labels_match = fc.labels_match && want.at(datum.summands[k].label) == v[k];

    Graph g, h;
    g.fr = v;
    std::vector<int> fig_labels;
    for (const auto& [l, f] : want) {
      fig_labels.push_back(l);
      h.fr.push_back(f);
    }
    auto fig_pos = [&](int l) {
      auto it = std::find(fig_labels.begin(), fig_labels.end(), l);
      if (it == fig_labels.end()) throw std::runtime_error("figure arrow refers to an unknown vertex");
      return static_cast<int>(it - fig_labels.begin());
    };
    for (const auto& q : *datum.quiver) g.arrows[{datum.position(q.from), datum.position(q.to)}] += q.count;
    const bool has_arrows = e.contains("arrows");
    for (const auto& a : e.value("arrows", json::array()))
      h.arrows[{fig_pos(a[0].get<int>()), fig_pos(a[1].get<int>())}] += a[2].get<int>();
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    if (has_arrows) {
      // the fraction-preserving bijection is unconstrained by arrows when none were transcribed
      fc.quiver_match = match_graphs(g, h, perm, used, 0);
    } else {
      Graph bare = h;
      bare.arrows.clear();
      Graph gb = g;
      gb.arrows.clear();
      match_graphs(gb, bare, perm, used, 0);
    }
    if (perm[0] >= 0)
      for (int k = 0; k < n; ++k) fc.relabelling.push_back({datum.summands[k].label, fig_labels[perm[k]]});
    for (auto& m : fc.marks) {
      if (fc.relabelling.empty() || (has_arrows && !*fc.quiver_match)) continue;
      int ca = -1, cb = -1;
      for (const auto& [c, f] : fc.relabelling) {
        if (f == m.a) ca = c;
        if (f == m.b) cb = c;
      }
      int total = 0;
      for (const auto& q : rep.relation_counts)
        if ((q.from == ca && q.to == cb) || (q.from == cb && q.to == ca)) total += q.count;
      m.computed = total;
    }
  } catch (const std::exception& ex) {
    fc.error = ex.what();
  }
  return fc;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : catalog()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckReport run_suite(const std::string& name, const json& input) {
  for (const auto& [n, f] : catalog())
    if (n == name) {
      CheckReport r;
      r.suite = name;
      try {
        f(r, input);
      } catch (const SuiteError&) {
        throw;
      } catch (const json::exception& ex) {
        throw SuiteError(std::string("malformed input: ") + ex.what());
      } catch (const std::invalid_argument& ex) {
        throw SuiteError(std::string("malformed input: ") + ex.what());
      }
      return r;
    }
  throw SuiteError("unknown suite: " + name);
}

}  // namespace wpl
