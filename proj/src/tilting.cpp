#include "wpl/tilting.hpp"

#include <algorithm>
#include <sstream>

namespace wpl {

std::string to_string(Variance v) { return v == Variance::Covariant ? "covariant" : "contravariant"; }
std::string to_string(Polarity p) { return p == Polarity::Source ? "source" : "sink"; }

// ---- object categories ----

ObjectCategory::ObjectCategory(std::shared_ptr<const BasicAlgebra> a, Variance v,
                               std::vector<std::shared_ptr<const Module>> objects)
    : alg_(std::move(a)), var_(v), obj_(std::move(objects)) {
  for (const auto& m : obj_)
    if (m->algebra_ptr() != alg_) throw std::invalid_argument("object over a different algebra");
}

const HomSpace& ObjectCategory::hom(int a, int b) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = hom_cache_.find({a, b});
    if (it != hom_cache_.end()) return it->second;
  }
  HomSpace h = var_ == Variance::Covariant ? hom_space(*obj_[a], obj_[b]->rep(), false)
                                           : hom_space(*obj_[b], obj_[a]->rep(), false);
  std::lock_guard<std::mutex> lk(mu_);
  return hom_cache_.emplace(std::make_pair(a, b), std::move(h)).first->second;
}

ExtDims ObjectCategory::ext(int a, int b) const {
  return var_ == Variance::Covariant ? ext_dims(*obj_[a], obj_[b]->rep()) : ext_dims(*obj_[b], obj_[a]->rep());
}

RatMatrix ObjectCategory::compose_all(int a, int c, int b, const RatMatrix& g, const RatMatrix& f) const {
  const std::size_t ng = g.cols(), nf = f.cols();
  if (var_ == Variance::Covariant) {
    const std::size_t len = obj_[a]->image_length(obj_[b]->rep());
    RatMatrix out(len, ng * nf);
    for (std::size_t k = 0; k < ng; ++k) {
      RatMatrix block = obj_[c]->compose_after(*obj_[a], obj_[b]->rep(), g.column_values(k), f);
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < nf; ++j) out(i, k * nf + j) = block(i, j);
    }
    return out;
  }
  // g o f is realized by N(f) after N(g) : N_b -> N_c -> N_a
  const std::size_t len = obj_[b]->image_length(obj_[a]->rep());
  RatMatrix out(len, ng * nf);
  for (std::size_t j = 0; j < nf; ++j) {
    RatMatrix block = obj_[c]->compose_after(*obj_[b], obj_[a]->rep(), f.column_values(j), g);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t k = 0; k < ng; ++k) out(i, k * nf + j) = block(i, k);
  }
  return out;
}

ModuleMap ObjectCategory::module_map(int a, int b, const std::vector<Rational>& images) const {
  return var_ == Variance::Covariant ? obj_[a]->map_from_images(obj_[b]->rep(), images)
                                     : obj_[b]->map_from_images(obj_[a]->rep(), images);
}

std::vector<Rational> ObjectCategory::identity_images(int a) const {
  std::vector<Rational> out;
  for (const auto& g : obj_[a]->generators()) out.insert(out.end(), g.vec.begin(), g.vec.end());
  return out;
}

std::vector<EndoArrow> arrows_between(const ObjectCategory& cat, const std::vector<int>& objs, int a, int b) {
  if (a == b) return {};
  const HomSpace& h = cat.hom(objs[a], objs[b]);
  if (h.dim() == 0) return {};
  RatMatrix rad2(h.images.rows(), 0);
  for (std::size_t c = 0; c < objs.size(); ++c) {
    if (static_cast<int>(c) == a || static_cast<int>(c) == b) continue;
    const HomSpace& f = cat.hom(objs[a], objs[c]);
    const HomSpace& g = cat.hom(objs[c], objs[b]);
    if (f.dim() == 0 || g.dim() == 0) continue;
    rad2 = RatMatrix::hcat(rad2, cat.compose_all(objs[a], objs[c], objs[b], g.images, f.images));
  }
  std::vector<std::size_t> pick;
  if (rad2.cols() == 0) {
    for (std::size_t k = 0; k < h.dim(); ++k) pick.push_back(k);
  } else {
    auto x = solve(h.images, rad2);
    if (!x) throw std::logic_error("composite outside the hom space");
    pick = complement_coordinates(*x);
  }
  std::vector<EndoArrow> out;
  for (auto k : pick) out.push_back({a, b, h.images.column_values(k)});
  return out;
}

std::vector<EndoArrow> endo_arrows(const ObjectCategory& cat, const std::vector<int>& objs) {
  std::vector<EndoArrow> out;
  const int n = static_cast<int>(objs.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto ab = arrows_between(cat, objs, a, b);
      out.insert(out.end(), ab.begin(), ab.end());
    }
  return out;
}

Polarity formal_polarity(const K0& k0, const TiltingDatum& t, int label) {
  const int pos = t.position(label);
  if (pos < 0) throw std::out_of_range("no summand labelled " + std::to_string(label));
  auto rep = tilting_numeric_report(k0, t);
  const auto& nm = rep.dual_numerics[pos];
  auto sheaf = [](const Integer& rk, const Integer& deg) { return sgn(rk) > 0 || (sgn(rk) == 0 && sgn(deg) > 0); };
  if (sheaf(nm.rank, nm.degree)) return Polarity::Source;
  if (sheaf(-nm.rank, -nm.degree)) return Polarity::Sink;
  throw std::logic_error("dual class of vertex " + std::to_string(label) + " is zero");
}

// ---- concrete tilting objects ----

std::vector<long> ConcreteTilting::predicted_dims(const K0Class& cls) const {
  std::vector<long> out;
  for (const auto& r : reference)
    out.push_back((cat->variance() == Variance::Covariant ? k0->euler(r, cls) : k0->euler(cls, r)).get_si());
  return out;
}

namespace {

void finalize_datum(ConcreteTilting& t) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& a : t.arrows) ++counts[{t.datum.summands[a.from].label, t.datum.summands[a.to].label}];
  std::vector<QuiverArrowCount> q;
  for (const auto& [k, c] : counts) q.push_back({k.first, k.second, c});
  t.datum.quiver = q;
  t.datum.relations = tilting_numeric_report(*t.k0, t.datum).relation_counts;
}

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  return v;
}

std::vector<EndoArrow> algebra_arrows(const BasicAlgebra& a) {
  std::vector<EndoArrow> out;
  for (std::size_t k = 0; k < a.quiver().arrows.size(); ++k) {
    const auto& ar = a.quiver().arrows[k];
    out.push_back({ar.from, ar.to, a.arrow_element(static_cast<int>(k))});
  }
  return out;
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}
std::string vec_str(const std::vector<long>& v) {
  std::vector<int> w(v.begin(), v.end());
  return vec_str(w);
}

struct Retilted {
  std::shared_ptr<const BasicAlgebra> alg;
  std::vector<Representation> reps;
};

// End(ref) as a basic algebra, and each target as the module Hom(ref, target)
Retilted retilt_core(const ObjectCategory& cat, const std::vector<int>& ref, const std::vector<EndoArrow>& arrows,
                     const std::vector<int>& targets, const std::vector<std::string>& labels) {
  const int m = static_cast<int>(ref.size());
  Quiver q;
  q.vertices = m;
  q.labels = labels;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    q.arrows.push_back({arrows[k].from, arrows[k].to, "a" + std::to_string(k + 1)});

  auto module_of = [&](int f) {
    Representation r;
    for (int u = 0; u < m; ++u) r.dims.push_back(static_cast<int>(cat.hom(ref[u], f).dim()));
    for (const auto& ar : arrows) {
      const int u = ar.from, w = ar.to;
      RatMatrix mat(r.dims[u], r.dims[w]);
      if (r.dims[u] > 0 && r.dims[w] > 0) {
        const HomSpace& hw = cat.hom(ref[w], f);
        const HomSpace& hu = cat.hom(ref[u], f);
        RatMatrix comp = cat.compose_all(ref[u], ref[w], f, hw.images, RatMatrix::column_vector(ar.images));
        auto x = solve(hu.images, comp);
        if (!x) throw std::logic_error("precomposition leaves the hom space");
        mat = std::move(*x);
      }
      r.maps.push_back(std::move(mat));
    }
    return r;
  };

  std::vector<Representation> proj;
  std::vector<std::vector<Rational>> gens;
  for (int v = 0; v < m; ++v) {
    proj.push_back(module_of(ref[v]));
    const HomSpace& hv = cat.hom(ref[v], ref[v]);
    if (hv.dim() != 1) throw ReflectionError(ReflectionError::Kind::Validation, "reference summand is not exceptional");
    auto x = solve(hv.images, RatMatrix::column_vector(cat.identity_images(ref[v])));
    if (!x) throw std::logic_error("identity outside the endomorphism space");
    gens.push_back(x->column_values(0));
  }
  Retilted out;
  out.alg = std::make_shared<BasicAlgebra>(std::move(q), proj, std::move(gens));
  for (int f : targets) {
    auto it = std::find(ref.begin(), ref.end(), f);
    out.reps.push_back(it != ref.end() ? proj[it - ref.begin()] : module_of(f));
  }
  return out;
}

std::vector<std::string> label_strings(const TiltingDatum& d) {
  std::vector<std::string> out;
  for (const auto& s : d.summands) out.push_back(std::to_string(s.label));
  return out;
}

// the tilting object modelled over its own endomorphism algebra, given objects in some model
ConcreteTilting rebased_state(std::shared_ptr<const K0> k0, const ObjectCategory& cat, const std::vector<int>& objs,
                              const std::vector<EndoArrow>& arrows, TiltingDatum datum) {
  auto r = retilt_core(cat, objs, arrows, objs, label_strings(datum));
  std::vector<std::shared_ptr<const Module>> mods;
  for (int v = 0; v < r.alg->vertices(); ++v) mods.push_back(std::make_shared<Module>(r.alg, r.alg->projective(v)));
  ConcreteTilting t;
  t.k0 = std::move(k0);
  t.cat = std::make_shared<ObjectCategory>(r.alg, Variance::Covariant, std::move(mods));
  for (const auto& s : datum.summands) t.reference.push_back(s.cls);
  t.reference_name = "T";
  t.projective_model = true;
  t.datum = std::move(datum);
  t.arrows = algebra_arrows(*r.alg);
  finalize_datum(t);
  return t;
}

std::shared_ptr<const ObjectCategory> dual_projective_category(const ObjectCategory& cat) {
  auto op = cat.algebra()->opposite();
  std::vector<std::shared_ptr<const Module>> mods;
  for (int v = 0; v < op->vertices(); ++v) mods.push_back(std::make_shared<Module>(op, op->projective(v)));
  Variance v = cat.variance() == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
  return std::make_shared<ObjectCategory>(op, v, std::move(mods));
}

struct StepOutcome {
  bool ok = false;
  std::string detail;
  std::shared_ptr<const ObjectCategory> cat;
  std::vector<int> objs;  // tilting after the step, as indices into cat
  K0Class cls;
  std::vector<std::pair<int, int>> approx;  // (position, multiplicity)
  std::vector<int> dims;
  long end = 0, fwd = 0, bwd = 0;
  bool others_ok = true, euler_ok = true;
};

StepOutcome try_step(const std::shared_ptr<const ObjectCategory>& cat, const std::vector<int>& objs,
                     const std::vector<K0Class>& classes, const std::vector<K0Class>& ref, const K0& k0, int pos,
                     Polarity pol, const std::vector<EndoArrow>* known) {
  StepOutcome out;
  const int n = static_cast<int>(objs.size());
  std::vector<EndoArrow> arrows;
  if (known) {
    for (const auto& a : *known)
      if ((pol == Polarity::Source && a.from == pos) || (pol == Polarity::Sink && a.to == pos)) arrows.push_back(a);
  } else {
    for (int j = 0; j < n; ++j) {
      auto ab = pol == Polarity::Source ? arrows_between(*cat, objs, pos, j) : arrows_between(*cat, objs, j, pos);
      arrows.insert(arrows.end(), ab.begin(), ab.end());
    }
  }
  if (arrows.empty()) {
    out.detail = "empty approximation";
    return out;
  }
  const Quiver& q = cat->algebra()->quiver();
  const Representation& mi = cat->object(objs[pos]).rep();
  std::vector<const Representation*> parts;
  std::vector<ModuleMap> maps;
  std::map<int, int> mult;
  K0Class cls = -classes[pos];
  for (const auto& a : arrows) {
    const int j = pol == Polarity::Source ? a.to : a.from;
    ++mult[j];
    cls = cls + classes[j];
    parts.push_back(&cat->object(objs[j]).rep());
    maps.push_back(cat->module_map(objs[a.from], objs[a.to], a.images));
  }
  for (const auto& [j, c] : mult) out.approx.push_back({j, c});
  out.cls = cls;
  Representation sum = direct_sum(parts);
  // module direction: from the summand into the sum (stack) or from the sum onto the summand
  const bool stack = (pol == Polarity::Source) == (cat->variance() == Variance::Covariant);
  ModuleMap u;
  for (int v = 0; v < q.vertices; ++v) {
    RatMatrix c = stack ? RatMatrix(sum.dims[v], mi.dims[v]) : RatMatrix(mi.dims[v], sum.dims[v]);
    std::size_t off = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const RatMatrix& b = maps[k].comps[v];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) {
          if (stack)
            c(off + r, s) = b(r, s);
          else
            c(r, off + s) = b(r, s);
        }
      off += stack ? b.rows() : b.cols();
    }
    u.comps.push_back(std::move(c));
  }
  SubRep res;
  if (stack) {
    if (!is_injective(u)) {
      out.detail = "approximation is not injective in this model";
      return out;
    }
    res = cokernel(q, sum, u);
  } else {
    if (!is_surjective(u)) {
      out.detail = "approximation is not surjective in this model";
      return out;
    }
    res = kernel(q, sum, u);
  }
  out.dims = res.rep.dims;
  std::vector<long> want;
  for (const auto& r : ref)
    want.push_back((cat->variance() == Variance::Covariant ? k0.euler(r, cls) : k0.euler(cls, r)).get_si());
  std::vector<long> got(res.rep.dims.begin(), res.rep.dims.end());
  if (got != want) {
    out.detail = "dimension vector " + vec_str(got) + " differs from the Euler prediction " + vec_str(want) +
                 ": the new summand leaves the module window";
    return out;
  }
  auto mod = std::make_shared<Module>(cat->algebra(), std::move(res.rep));
  auto objects = cat->objects();
  objects.push_back(mod);
  auto ncat = std::make_shared<ObjectCategory>(cat->algebra(), cat->variance(), std::move(objects));
  const int nw = ncat->size() - 1;
  out.cat = ncat;
  out.objs = objs;
  out.objs[pos] = nw;
  out.end = static_cast<long>(ncat->hom(nw, nw).dim());
  auto euler_ok = [&](int, int, const K0Class& ca, const K0Class& cb, const ExtDims& e) {
    return e.hom - e.ext1 + e.ext2 == k0.euler(ca, cb).get_si();
  };
  ExtDims f = ncat->ext(objs[pos], nw), b = ncat->ext(nw, objs[pos]);
  out.fwd = f.ext1;
  out.bwd = b.ext1;
  out.euler_ok = euler_ok(objs[pos], nw, classes[pos], cls, f) && euler_ok(nw, objs[pos], cls, classes[pos], b);
  for (int j = 0; j < n; ++j) {
    if (j == pos) continue;
    ExtDims x = ncat->ext(nw, objs[j]), y = ncat->ext(objs[j], nw);
    if (x.ext1 != 0 || y.ext1 != 0) out.others_ok = false;
    if (!euler_ok(nw, objs[j], cls, classes[j], x) || !euler_ok(objs[j], nw, classes[j], cls, y)) out.euler_ok = false;
  }
  out.ok = true;
  return out;
}

std::vector<K0Class> classes_of(const TiltingDatum& d) {
  std::vector<K0Class> out;
  for (const auto& s : d.summands) out.push_back(s.cls);
  return out;
}

std::string model_name(const ObjectCategory& cat, const std::string& ref) {
  return to_string(cat.variance()) + " model over End(" + ref + ")";
}

struct StepRun {
  StepOutcome outcome;
  std::vector<K0Class> ref;
  std::string model;
  std::vector<Attempt> trace;
};

// native model first; then the dual model of the current tilting object
StepRun run_step(const ConcreteTilting& t, int pos, Polarity pol) {
  StepRun run;
  const auto classes = classes_of(t.datum);
  auto objs = iota(t.n());
  auto attempt = [&](const std::shared_ptr<const ObjectCategory>& cat, const std::vector<K0Class>& ref,
                     const std::string& ref_name, const std::vector<EndoArrow>* known) {
    auto o = try_step(cat, objs, classes, ref, *t.k0, pos, pol, known);
    std::string name = model_name(*cat, ref_name);
    run.trace.push_back({name, o.ok, o.ok ? "ok" : o.detail});
    if (o.ok) {
      run.outcome = std::move(o);
      run.ref = ref;
      run.model = name;
    }
    return run.outcome.ok;
  };
  if (attempt(t.cat, t.reference, t.reference_name, t.projective_model ? &t.arrows : nullptr)) return run;
  ConcreteTilting base = t;
  if (!t.projective_model) {
    base = rebase(t);
    run.trace.push_back({"re-tilt onto the current tilting object", true, "ok"});
    if (attempt(base.cat, base.reference, base.reference_name, &base.arrows)) return run;
  }
  auto dual = dual_projective_category(*base.cat);
  attempt(dual, base.reference, base.reference_name, &base.arrows);
  return run;
}

}  // namespace

ConcreteTilting canonical_tilting(std::shared_ptr<const K0> k0, const LVector& twist) {
  const auto& d = k0->descriptor();
  auto alg = canonical_algebra(d);
  auto pres = canonical_presentation(d);
  const bool plain = twist == d.zero();
  ConcreteTilting t;
  t.k0 = k0;
  std::vector<std::shared_ptr<const Module>> mods;
  int label = 1;
  for (const auto& y : d.window()) {
    LVector z = d.add(y, twist);
    if (plain)
      mods.push_back(std::make_shared<Module>(alg, alg->projective(label - 1)));
    else
      mods.push_back(std::make_shared<Module>(alg, line_bundle_module(d, pres, z)));
    t.reference.push_back(k0->line_bundle(y));
    t.datum.summands.push_back({label++, k0->line_bundle(z)});
  }
  t.cat = std::make_shared<ObjectCategory>(alg, Variance::Covariant, std::move(mods));
  t.reference_name = "T_can";
  t.projective_model = plain;
  t.arrows = plain ? algebra_arrows(*alg) : endo_arrows(*t.cat, iota(t.n()));
  finalize_datum(t);
  return t;
}

ConcreteTilting canonical_tilting(std::shared_ptr<const K0> k0) {
  LVector z = k0->descriptor().zero();
  return canonical_tilting(std::move(k0), z);
}

TiltingValidation validate(const ConcreteTilting& t, bool check_ext) {
  TiltingValidation v;
  const int n = t.n();
  for (int a = 0; a < n; ++a) {
    const auto& cls = t.datum.summands[a].cls;
    const auto& dims = t.cat->object(a).rep().dims;
    std::vector<long> got(dims.begin(), dims.end());
    if (got != t.predicted_dims(cls)) {
      v.dims_match = false;
      v.problems.push_back("summand " + std::to_string(t.datum.summands[a].label) + ": dimension vector " +
                           vec_str(got) + " differs from the Euler prediction " + vec_str(t.predicted_dims(cls)));
    }
    if (t.cat->hom(a, a).dim() != 1) {
      v.endo_trivial = false;
      v.problems.push_back("summand " + std::to_string(t.datum.summands[a].label) + " is not exceptional");
    }
  }
  if (check_ext)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ExtDims e = t.cat->ext(a, b);
        if (e.ext1 != 0) {
          v.ext_vanish = false;
          v.problems.push_back("Ext^1 between summands " + std::to_string(t.datum.summands[a].label) + " and " +
                               std::to_string(t.datum.summands[b].label) + " is nonzero");
        }
        if (e.hom - e.ext1 + e.ext2 != t.k0->euler(t.datum.summands[a].cls, t.datum.summands[b].cls).get_si()) {
          v.euler_consistent = false;
          v.problems.push_back("Euler form mismatch for a summand pair");
        }
      }
  return v;
}

Reflection huebner_reflect(const ConcreteTilting& t, int label, const ReflectOptions& opt) {
  const int pos = t.datum.position(label);
  if (pos < 0) throw ReflectionError(ReflectionError::Kind::InvalidVertex, "no vertex labelled " + std::to_string(label));
  const Polarity pol = formal_polarity(*t.k0, t.datum, label);
  StepRun run = run_step(t, pos, pol);
  if (!run.outcome.ok)
    throw ReflectionError(ReflectionError::Kind::WindowExhausted,
                          "reflection at " + std::to_string(label) + " failed in every available model", run.trace);
  const StepOutcome& o = run.outcome;

  StepReport rep;
  rep.label = label;
  rep.polarity = pol;
  for (const auto& [j, c] : o.approx) rep.approximation.push_back({t.datum.summands[j].label, c});
  rep.old_class = t.datum.summands[pos].cls;
  rep.new_class = o.cls;
  rep.old_numerics = t.k0->numerics(rep.old_class);
  rep.new_numerics = t.k0->numerics(rep.new_class);
  rep.dims = o.dims;
  rep.model = run.model;
  rep.end_dim = o.end;
  rep.ext_forward = o.fwd;
  rep.ext_backward = o.bwd;
  K0Class sum = t.k0->zero();
  for (const auto& [j, c] : o.approx) sum = sum + Integer(c) * t.datum.summands[j].cls;
  rep.class_identity = rep.old_class + rep.new_class == sum;
  rep.dims_match = true;  // enforced by try_step
  rep.others_ext_vanish = o.others_ok;
  rep.euler_consistent = o.euler_ok;
  rep.trace = run.trace;

  const bool ext_ok = pol == Polarity::Sink ? (o.fwd == 1 && o.bwd == 0) : (o.fwd == 0 && o.bwd == 1);
  if (!rep.class_identity || o.end != 1 || !ext_ok || !o.others_ok || !o.euler_ok) {
    std::ostringstream os;
    os << "reflection at " << label << " failed validation: End=" << o.end << " Ext1(T_i,T_i*)=" << o.fwd
       << " Ext1(T_i*,T_i)=" << o.bwd << (o.others_ok ? "" : " Ext1 with other summands") << (o.euler_ok ? "" : " Euler");
    throw ReflectionError(ReflectionError::Kind::Validation, os.str(), run.trace);
  }

  TiltingDatum datum;
  datum.summands = t.datum.summands;
  datum.summands[pos].cls = o.cls;
  ConcreteTilting next;
  if (opt.rebase) {
    auto arrows = endo_arrows(*o.cat, o.objs);
    next = rebased_state(t.k0, *o.cat, o.objs, arrows, std::move(datum));
  } else {
    std::vector<std::shared_ptr<const Module>> mods;
    for (int k : o.objs) mods.push_back(o.cat->object_ptr(k));
    next.k0 = t.k0;
    next.cat = std::make_shared<ObjectCategory>(o.cat->algebra(), o.cat->variance(), std::move(mods));
    next.reference = run.ref;
    next.reference_name = run.model.find("End(T_can)") != std::string::npos ? "T_can" : "T'";
    next.projective_model = false;
    next.datum = std::move(datum);
    next.arrows = endo_arrows(*next.cat, iota(next.n()));
    finalize_datum(next);
  }
  return {std::move(next), std::move(rep)};
}

Trajectory reflect_sequence(const ConcreteTilting& t, const std::vector<int>& labels, const ReflectOptions& opt) {
  Trajectory tr;
  tr.states.push_back(t);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    try {
      auto r = huebner_reflect(tr.states.back(), labels[k], opt);
      tr.states.push_back(std::move(r.state));
      tr.steps.push_back(std::move(r.report));
    } catch (const ReflectionError& e) {
      throw ReflectionError(e.kind, "step " + std::to_string(k + 1) + ": " + e.what(), e.trace);
    }
  }
  return tr;
}

ConcreteTilting rebase(const ConcreteTilting& t) {
  if (t.projective_model) return t;
  return rebased_state(t.k0, *t.cat, iota(t.n()), t.arrows, t.datum);
}

namespace {
// equal presentations; separately built copies of one algebra count as the same model
bool same_algebra(const BasicAlgebra& a, const BasicAlgebra& b) {
  if (&a == &b) return true;
  if (a.vertices() != b.vertices() || a.quiver().arrows.size() != b.quiver().arrows.size()) return false;
  for (std::size_t k = 0; k < a.quiver().arrows.size(); ++k)
    if (a.quiver().arrows[k].from != b.quiver().arrows[k].from || a.quiver().arrows[k].to != b.quiver().arrows[k].to)
      return false;
  for (int v = 0; v < a.vertices(); ++v)
    if (!(a.projective(v) == b.projective(v)) || a.generator(v) != b.generator(v)) return false;
  return true;
}
}  // namespace

ConcreteTilting retilt_reference(const ConcreteTilting& t, const ConcreteTilting& r) {
  if (!same_algebra(*t.cat->algebra(), *r.cat->algebra()) || t.cat->variance() != r.cat->variance())
    throw std::invalid_argument("re-tilting needs both objects in the same model");
  auto objects = t.cat->objects();
  const int n = t.n();
  for (const auto& m : r.cat->objects())
    objects.push_back(r.cat->algebra() == t.cat->algebra() ? m : std::make_shared<const Module>(t.cat->algebra(), m->rep()));
  ObjectCategory merged(t.cat->algebra(), t.cat->variance(), std::move(objects));
  std::vector<int> ref, targets = iota(n);
  for (int k = 0; k < r.n(); ++k) ref.push_back(n + k);
  auto rt = retilt_core(merged, ref, r.arrows, targets, label_strings(r.datum));
  ConcreteTilting out;
  out.k0 = t.k0;
  std::vector<std::shared_ptr<const Module>> mods;
  for (auto& rep : rt.reps) mods.push_back(std::make_shared<Module>(rt.alg, std::move(rep)));
  out.cat = std::make_shared<ObjectCategory>(rt.alg, Variance::Covariant, std::move(mods));
  out.reference = classes_of(r.datum);
  out.reference_name = r.reference_name;
  out.datum = t.datum;
  auto v = validate(out, false);
  if (!v.dims_match)
    throw ReflectionError(ReflectionError::Kind::Validation, "re-tilting failed: " + v.problems.front());
  out.projective_model = false;
  out.arrows = endo_arrows(*out.cat, iota(n));
  finalize_datum(out);
  return out;
}

bool involution_check(const ConcreteTilting& t, int label) {
  const int pos = t.datum.position(label);
  if (pos < 0) return false;
  const Polarity pol = formal_polarity(*t.k0, t.datum, label);
  StepRun first = run_step(t, pos, pol);
  if (!first.outcome.ok) return false;
  const StepOutcome& o = first.outcome;
  auto classes = classes_of(t.datum);
  TiltingDatum mid = t.datum;
  mid.summands[pos].cls = o.cls;
  classes[pos] = o.cls;
  const Polarity back = formal_polarity(*t.k0, mid, label);
  if (back == pol) return false;
  auto second = try_step(o.cat, o.objs, classes, first.ref, *t.k0, pos, back, nullptr);
  if (!second.ok || second.cls != t.datum.summands[pos].cls) return false;
  const auto& again = second.cat->object(second.objs[pos]);
  // the original summand in the model where both steps ran
  // every model used keeps the original summands at indices 0..n-1
  return isomorphic(again, second.cat->object(pos).rep());
}

}  // namespace wpl
