#include "wpl/json_io.hpp"

#include <sstream>

namespace wpl {

namespace {
std::string istr(const Integer& z) { return z.get_str(); }
Integer iparse(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  return Integer(j.get<std::string>());
}
std::string trim(std::string s) {
  const char* ws = " \t()[]";
  s.erase(0, s.find_first_not_of(ws));
  auto e = s.find_last_not_of(ws);
  s.erase(e == std::string::npos ? 0 : e + 1);
  return s;
}
}  // namespace

std::vector<int> parse_int_list(const std::string& s0) {
  std::vector<int> out;
  std::string s = trim(s0);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

WeightDescriptor parse_type(const std::string& s) {
  auto semi = s.find(';');
  std::vector<int> w = parse_int_list(s.substr(0, semi));
  std::vector<Rational> lam;
  if (semi != std::string::npos) {
    std::stringstream ss(trim(s.substr(semi + 1)));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) lam.push_back(parse_rational(item));
    }
    const int t = static_cast<int>(w.size());
    // the value of the third point is fixed to 1 and may be omitted
    if (t >= 3 && static_cast<int>(lam.size()) == t - 3) lam.insert(lam.begin(), Rational(1));
  }
  return WeightDescriptor(w, lam);
}

json to_json(const WeightDescriptor& d) {
  json lam = json::array();
  for (const auto& l : d.lambdas()) lam.push_back(to_string(l));
  return {{"weights", d.weights()},
          {"lambdas", lam},
          {"label", d.label()},
          {"t", d.t()},
          {"n", d.rank()},
          {"pbar", std::to_string(d.pbar())},
          {"delta_omega", std::to_string(d.delta_omega())},
          {"euler_characteristic", to_string(d.euler_characteristic())},
          {"curvature", to_string(d.curvature())},
          {"gorenstein_index", d.gorenstein_index().get_str()}};
}

WeightDescriptor descriptor_from_json(const json& j) {
  if (j.is_string()) return parse_type(j.get<std::string>());
  if (!j.is_object() || !j.contains("weights")) throw std::invalid_argument("descriptor needs \"weights\"");
  std::vector<int> w = j.at("weights").get<std::vector<int>>();
  std::vector<Rational> lam;
  if (j.contains("lambdas"))
    for (const auto& l : j.at("lambdas")) lam.push_back(l.is_string() ? parse_rational(l.get<std::string>()) : Rational(l.get<long>()));
  return WeightDescriptor(w, lam);
}

json to_json(const WeightDescriptor& d, const LVector& v) {
  return {{"arm", v.arm}, {"central", std::to_string(v.central)}, {"text", d.str(v)}};
}

json to_json(const K0Class& c) {
  json a = json::array();
  for (const auto& z : c) a.push_back(istr(z));
  return a;
}

K0Class class_from_json(const json& j) {
  K0Class c;
  for (const auto& z : j) c.push_back(iparse(z));
  return c;
}

json to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& z : p.coeffs()) a.push_back(istr(z));
  return a;
}

std::string fraction(const Numerics& n) { return istr(n.degree) + "/" + istr(n.rank); }

json to_json(const Numerics& n) {
  json j{{"degree", istr(n.degree)}, {"rank", istr(n.rank)}, {"fraction", fraction(n)}};
  auto s = n.slope();
  j["slope"] = s ? to_string(*s) : "inf";
  return j;
}

json to_json(const K0& k0, const TiltingDatum& t) {
  json s = json::array();
  for (const auto& x : t.summands) {
    json e = to_json(k0.numerics(x.cls));
    e["label"] = x.label;
    e["class"] = to_json(x.cls);
    s.push_back(e);
  }
  json j{{"summands", s}};
  auto counts = [](const std::vector<QuiverArrowCount>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back({{"from", q.from}, {"to", q.to}, {"count", q.count}});
    return a;
  };
  if (t.quiver) j["quiver"] = counts(*t.quiver);
  if (t.relations) j["relations"] = counts(*t.relations);
  return j;
}

TiltingDatum datum_from_json(const json& j) {
  TiltingDatum t;
  if (!j.contains("summands")) throw std::invalid_argument("tilting datum needs \"summands\"");
  int next = 1;
  for (const auto& s : j.at("summands")) {
    TiltingDatum::Summand x;
    x.label = s.contains("label") ? s.at("label").get<int>() : next;
    next = x.label + 1;
    x.cls = class_from_json(s.at("class"));
    t.summands.push_back(std::move(x));
  }
  auto counts = [](const json& a) {
    std::vector<QuiverArrowCount> v;
    for (const auto& q : a) v.push_back({q.at("from").get<int>(), q.at("to").get<int>(), q.at("count").get<int>()});
    return v;
  };
  if (j.contains("quiver")) t.quiver = counts(j.at("quiver"));
  if (j.contains("relations")) t.relations = counts(j.at("relations"));
  return t;
}

json to_json(const Quiver& q, const Representation& r) {
  json arrows = json::array();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    json m = json::array();
    for (std::size_t i = 0; i < r.maps[a].rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < r.maps[a].cols(); ++k) row.push_back(to_string(r.maps[a](i, k)));
      m.push_back(row);
    }
    arrows.push_back({{"from", q.arrows[a].from}, {"to", q.arrows[a].to}, {"matrix", m}});
  }
  return {{"dims", r.dims}, {"arrows", arrows}};
}

Representation representation_from_json(const json& j) {
  Representation r;
  r.dims = j.at("dims").get<std::vector<int>>();
  for (const auto& a : j.at("arrows")) {
    const int f = a.at("from").get<int>(), t = a.at("to").get<int>();
    if (f < 0 || t < 0 || f >= static_cast<int>(r.dims.size()) || t >= static_cast<int>(r.dims.size()))
      throw std::invalid_argument("arrow endpoint out of range");
    RatMatrix m(r.dims[f], r.dims[t]);
    const auto& rows = a.at("matrix");
    if (static_cast<int>(rows.size()) != r.dims[f]) throw std::invalid_argument("matrix row count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != r.dims[t]) throw std::invalid_argument("matrix column count mismatch");
      for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = parse_rational(rows[i][k].get<std::string>());
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

json to_json(const Attempt& a) { return {{"model", a.model}, {"ok", a.ok}, {"detail", a.detail}}; }

json to_json(const StepReport& s) {
  json approx = json::array();
  for (const auto& [l, c] : s.approximation) approx.push_back({{"label", l}, {"count", c}});
  json trace = json::array();
  for (const auto& a : s.trace) trace.push_back(to_json(a));
  return {{"label", s.label},
          {"polarity", to_string(s.polarity)},
          {"approximation", approx},
          {"old", to_json(s.old_numerics)},
          {"new", to_json(s.new_numerics)},
          {"old_class", to_json(s.old_class)},
          {"new_class", to_json(s.new_class)},
          {"dims", s.dims},
          {"model", s.model},
          {"end_dim", std::to_string(s.end_dim)},
          {"ext1_forward", std::to_string(s.ext_forward)},
          {"ext1_backward", std::to_string(s.ext_backward)},
          {"class_identity", s.class_identity},
          {"dims_match", s.dims_match},
          {"others_ext_vanish", s.others_ext_vanish},
          {"euler_consistent", s.euler_consistent},
          {"trace", trace}};
}

json state_json(const ConcreteTilting& t) {
  json j = to_json(*t.k0, t.datum);
  j["descriptor"] = to_json(t.k0->descriptor());
  auto rep = tilting_numeric_report(*t.k0, t.datum);
  for (std::size_t k = 0; k < t.datum.size(); ++k) {
    const auto& nm = rep.dual_numerics[k];
    const bool src = sgn(nm.rank) > 0 || (sgn(nm.rank) == 0 && sgn(nm.degree) > 0);
    j["summands"][k]["polarity"] = src ? "source" : "sink";
    j["summands"][k]["dims"] = t.cat->object(static_cast<int>(k)).rep().dims;
  }
  j["reference"] = t.reference_name;
  j["model"] = to_string(t.cat->variance());
  return j;
}

}  // namespace wpl
