#include "wpl/representation.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wpl {

int Representation::total() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

std::string check_representation(const Quiver& q, const Representation& m) {
  if (static_cast<int>(m.dims.size()) != q.vertices) return "dimension vector has wrong length";
  if (m.maps.size() != q.arrows.size()) return "wrong number of arrow matrices";
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (m.maps[a].rows() != static_cast<std::size_t>(m.dims[ar.from]) ||
        m.maps[a].cols() != static_cast<std::size_t>(m.dims[ar.to])) {
      std::ostringstream os;
      os << "arrow " << a << " matrix has shape " << m.maps[a].rows() << "x" << m.maps[a].cols() << ", expected "
         << m.dims[ar.from] << "x" << m.dims[ar.to];
      return os.str();
    }
  }
  return "";
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

bool is_module_map(const Quiver& q, const Representation& m, const Representation& n, const ModuleMap& f) {
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (!(f.comps[ar.from] * m.maps[a] == n.maps[a] * f.comps[ar.to])) return false;
  }
  return true;
}

bool is_zero(const ModuleMap& f) {
  for (const auto& c : f.comps)
    if (!c.is_zero()) return false;
  return true;
}

Representation direct_sum(const std::vector<const Representation*>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  const std::size_t nv = parts[0]->dims.size(), na = parts[0]->maps.size();
  Representation s;
  s.dims.assign(nv, 0);
  for (const auto* p : parts)
    for (std::size_t v = 0; v < nv; ++v) s.dims[v] += p->dims[v];
  for (std::size_t a = 0; a < na; ++a) {
    std::size_t rows = 0, cols = 0;
    for (const auto* p : parts) {
      rows += p->maps[a].rows();
      cols += p->maps[a].cols();
    }
    RatMatrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto* p : parts) {
      const auto& b = p->maps[a];
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
      r0 += b.rows();
      c0 += b.cols();
    }
    s.maps.push_back(std::move(m));
  }
  return s;
}

std::vector<Rational> apply_word(const Quiver& q, const Representation& m, const Word& w, std::vector<Rational> v) {
  for (int a : w) {
    (void)q;
    v = mul(m.maps[a], v);
  }
  return v;
}

RatMatrix word_matrix(const Quiver& q, const Representation& m, int start, const Word& w) {
  RatMatrix acc = RatMatrix::identity(m.dims[start]);
  int cur = start;
  for (int a : w) {
    if (q.arrows[a].to != cur) throw std::logic_error("word does not compose");
    acc = m.maps[a] * acc;
    cur = q.arrows[a].from;
  }
  return acc;
}

namespace {

// incremental row echelon set for independence tests
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}
  bool add(const std::vector<Rational>& v0) {
    std::vector<Rational> v = v0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = v[piv_[k]];
      if (sgn(f) == 0) continue;
      Rational ff = f;
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(rows_[k][j]) != 0) v[j] -= ff * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> piv_;
};

RatMatrix columns_to_matrix(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

// memoized word actions on one representation
class WordCache {
 public:
  WordCache(const Quiver& q, const Representation& n) : q_(q), n_(n) {}
  const RatMatrix& get(int start, const Word& w) {
    auto key = std::make_pair(start, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    RatMatrix m;
    if (w.empty()) {
      m = RatMatrix::identity(n_.dims[start]);
    } else {
      Word prefix(w.begin(), w.end() - 1);
      m = n_.maps[w.back()] * get(start, prefix);
    }
    return cache_.emplace(key, std::move(m)).first->second;
  }

 private:
  const Quiver& q_;
  const Representation& n_;
  std::map<std::pair<int, Word>, RatMatrix> cache_;
};

}  // namespace

PathBasis path_basis(const Quiver& q, const Representation& m, const std::vector<Generator>& gens) {
  const int nv = q.vertices;
  std::vector<Echelon> ech;
  for (int v = 0; v < nv; ++v) ech.emplace_back(m.dims[v]);
  std::vector<std::vector<std::vector<Rational>>> vecs(nv);
  PathBasis pb;
  pb.entries.resize(nv);
  struct Item {
    int vertex, gen;
    Word word;
    std::vector<Rational> vec;
  };
  std::deque<Item> queue;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& gen = gens[g];
    if (ech[gen.vertex].add(gen.vec)) {
      pb.entries[gen.vertex].push_back({static_cast<int>(g), {}});
      vecs[gen.vertex].push_back(gen.vec);
      queue.push_back({gen.vertex, static_cast<int>(g), {}, gen.vec});
    }
  }
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].to != it.vertex) continue;
      const int u = q.arrows[a].from;
      if (m.dims[u] == 0) continue;
      std::vector<Rational> nv2 = mul(m.maps[a], it.vec);
      if (!ech[u].add(nv2)) continue;
      Word w = it.word;
      w.push_back(static_cast<int>(a));
      pb.entries[u].push_back({it.gen, w});
      vecs[u].push_back(nv2);
      queue.push_back({u, it.gen, std::move(w), std::move(nv2)});
    }
  }
  pb.inv.resize(nv);
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(vecs[v].size()) != m.dims[v])
      throw std::logic_error("generators do not generate the module at vertex " + std::to_string(v));
    auto inv = inverse(columns_to_matrix(vecs[v], m.dims[v]));
    if (!inv) throw std::logic_error("path basis not invertible");
    pb.inv[v] = std::move(*inv);
  }
  return pb;
}

std::vector<Generator> top_generators(const Quiver& q, const Representation& m) {
  std::vector<Generator> gens;
  for (int v = 0; v < q.vertices; ++v) {
    if (m.dims[v] == 0) continue;
    RatMatrix rad(m.dims[v], 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].from == v && m.dims[q.arrows[a].to] > 0) rad = RatMatrix::hcat(rad, m.maps[a]);
    for (auto k : complement_coordinates(rad)) {
      Generator g{v, std::vector<Rational>(m.dims[v])};
      g.vec[k] = 1;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

SubRep kernel(const Quiver& q, const Representation& m, const ModuleMap& f) {
  SubRep k;
  const int nv = q.vertices;
  std::vector<RatMatrix> basis(nv);
  for (int v = 0; v < nv; ++v) {
    basis[v] = m.dims[v] ? kernel_basis(f.comps[v]) : RatMatrix(0, 0);
    if (m.dims[v] == 0) basis[v] = RatMatrix(0, 0);
    k.rep.dims.push_back(static_cast<int>(basis[v].cols()));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    const int df = k.rep.dims[ar.from], dt = k.rep.dims[ar.to];
    if (df == 0 || dt == 0) {
      k.rep.maps.emplace_back(df, dt);
      continue;
    }
    auto x = solve(basis[ar.from], m.maps[a] * basis[ar.to]);
    if (!x) throw std::logic_error("kernel is not a subrepresentation");
    k.rep.maps.push_back(std::move(*x));
  }
  for (int v = 0; v < nv; ++v) {
    if (k.rep.dims[v] == 0)
      k.map.comps.emplace_back(m.dims[v], 0);
    else
      k.map.comps.push_back(basis[v]);
  }
  return k;
}

SubRep cokernel(const Quiver& q, const Representation& n, const ModuleMap& f) {
  SubRep c;
  const int nv = q.vertices;
  std::vector<RatMatrix> section(nv), proj(nv);
  for (int v = 0; v < nv; ++v) {
    const int dn = n.dims[v];
    if (dn == 0) {
      c.rep.dims.push_back(0);
      section[v] = RatMatrix(0, 0);
      proj[v] = RatMatrix(0, 0);
      continue;
    }
    const RatMatrix& fv = f.comps[v];
    RatMatrix img = fv.cols() ? fv.columns(independent_columns(fv)) : RatMatrix(dn, 0);
    auto comp = complement_coordinates(img);
    RatMatrix sec(dn, comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) sec(comp[j], j) = 1;
    auto full = inverse(RatMatrix::hcat(img, sec));
    if (!full) throw std::logic_error("cokernel basis not invertible");
    proj[v] = full->rows_block(img.cols(), comp.size());
    section[v] = sec;
    c.rep.dims.push_back(static_cast<int>(comp.size()));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    const int df = c.rep.dims[ar.from], dt = c.rep.dims[ar.to];
    if (df == 0 || dt == 0) {
      c.rep.maps.emplace_back(df, dt);
      continue;
    }
    c.rep.maps.push_back(proj[ar.from] * n.maps[a] * section[ar.to]);
  }
  for (int v = 0; v < nv; ++v) {
    if (c.rep.dims[v] == 0)
      c.map.comps.emplace_back(0, n.dims[v]);
    else
      c.map.comps.push_back(proj[v]);
  }
  return c;
}

bool is_injective(const ModuleMap& f) {
  for (const auto& c : f.comps)
    if (c.cols() && rank(c) != c.cols()) return false;
  return true;
}

bool is_surjective(const ModuleMap& f) {
  for (const auto& c : f.comps)
    if (c.rows() && rank(c) != c.rows()) return false;
  return true;
}

// ---- basic algebras ----

BasicAlgebra::BasicAlgebra(Quiver q, std::vector<Representation> projectives,
                           std::vector<std::vector<Rational>> generators)
    : q_(std::move(q)), proj_(std::move(projectives)), gen_(std::move(generators)) {
  if (static_cast<int>(proj_.size()) != q_.vertices || gen_.size() != proj_.size())
    throw std::invalid_argument("one projective and generator per vertex required");
  for (int v = 0; v < q_.vertices; ++v) {
    auto err = check_representation(q_, proj_[v]);
    if (!err.empty()) throw std::invalid_argument("projective " + std::to_string(v) + ": " + err);
    basis_.push_back(path_basis(q_, proj_[v], {Generator{v, gen_[v]}}));
  }
}

RatMatrix BasicAlgebra::action(int v, int u, const std::vector<Rational>& x, const Representation& n) const {
  const auto& pb = basis_[v];
  RatMatrix out(n.dims[u], n.dims[v]);
  if (x.empty() || n.dims[u] == 0 || n.dims[v] == 0) return out;
  std::vector<Rational> c = mul(pb.inv[u], x);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    out = out + word_matrix(q_, n, v, pb.entries[u][k].word).scaled(c[k]);
  }
  return out;
}

ModuleMap BasicAlgebra::yoneda(int v, const Representation& n, const std::vector<Rational>& x) const {
  const auto& pb = basis_[v];
  ModuleMap f;
  for (int u = 0; u < q_.vertices; ++u) {
    const int dp = proj_[v].dims[u];
    RatMatrix w(n.dims[u], dp);
    for (int k = 0; k < dp; ++k) {
      auto y = apply_word(q_, n, pb.entries[u][k].word, x);
      for (int i = 0; i < n.dims[u]; ++i) w(i, k) = y[i];
    }
    f.comps.push_back(dp ? w * pb.inv[u] : RatMatrix(n.dims[u], 0));
  }
  return f;
}

std::vector<Rational> BasicAlgebra::arrow_element(int arrow) const {
  const auto& ar = q_.arrows[arrow];
  return mul(proj_[ar.to].maps[arrow], gen_[ar.to]);
}

std::shared_ptr<const BasicAlgebra> BasicAlgebra::opposite() const {
  Quiver q;
  q.vertices = q_.vertices;
  q.labels = q_.labels;
  for (const auto& a : q_.arrows) q.arrows.push_back({a.to, a.from, a.name + "'"});
  // left multiplication by each arrow, as Yoneda maps P_from -> P_to
  std::vector<ModuleMap> left;
  for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
    const auto& ar = q_.arrows[a];
    left.push_back(yoneda(ar.from, proj_[ar.to], arrow_element(static_cast<int>(a))));
  }
  std::vector<Representation> qs;
  for (int v = 0; v < q_.vertices; ++v) {
    Representation r;
    for (int u = 0; u < q_.vertices; ++u) r.dims.push_back(proj_[u].dims[v]);
    for (std::size_t a = 0; a < q_.arrows.size(); ++a) r.maps.push_back(left[a].comps[v]);
    qs.push_back(std::move(r));
  }
  return std::make_shared<BasicAlgebra>(std::move(q), std::move(qs), gen_);
}

// ---- modules ----

namespace {
Representation sum_of_projectives(const BasicAlgebra& a, const std::vector<int>& verts) {
  std::vector<const Representation*> parts;
  for (int v : verts) parts.push_back(&a.projective(v));
  if (parts.empty()) {
    Representation z;
    z.dims.assign(a.vertices(), 0);
    for (const auto& ar : a.quiver().arrows) {
      (void)ar;
      z.maps.emplace_back(0, 0);
    }
    return z;
  }
  return direct_sum(parts);
}

// module map from a sum of projectives sending generator k to elements[k]
ModuleMap map_from_projectives(const BasicAlgebra& a, const std::vector<int>& verts,
                               const std::vector<std::vector<Rational>>& elements, const Representation& target) {
  ModuleMap f;
  for (int u = 0; u < a.vertices(); ++u) f.comps.emplace_back(target.dims[u], 0);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    ModuleMap y = a.yoneda(verts[k], target, elements[k]);
    for (int u = 0; u < a.vertices(); ++u) f.comps[u] = RatMatrix::hcat(f.comps[u], y.comps[u]);
  }
  for (int u = 0; u < a.vertices(); ++u)
    if (f.comps[u].cols() == 0) f.comps[u] = RatMatrix(target.dims[u], 0);
  return f;
}

// split a vector of a sum of projectives at vertex u into its summands
std::vector<std::vector<Rational>> split(const BasicAlgebra& a, const std::vector<int>& verts, int u,
                                         const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> out;
  std::size_t off = 0;
  for (int v : verts) {
    const int d = a.projective(v).dims[u];
    out.emplace_back(x.begin() + off, x.begin() + off + d);
    off += d;
  }
  return out;
}

std::vector<Module::Relation> syzygy_generators(const BasicAlgebra& a, const std::vector<int>& verts,
                                                const Representation& sum, const ModuleMap& onto,
                                                Representation* kernel_rep) {
  SubRep k = kernel(a.quiver(), sum, onto);
  std::vector<Module::Relation> rels;
  for (const auto& g : top_generators(a.quiver(), k.rep)) {
    std::vector<Rational> x = mul(k.map.comps[g.vertex], g.vec);
    rels.push_back({g.vertex, split(a, verts, g.vertex, x)});
  }
  if (kernel_rep) *kernel_rep = std::move(k.rep);
  return rels;
}
}  // namespace

Module::Module(std::shared_ptr<const BasicAlgebra> a, Representation rep) : alg_(std::move(a)), rep_(std::move(rep)) {
  auto err = check_representation(alg_->quiver(), rep_);
  if (!err.empty()) throw std::invalid_argument(err);
  gens_ = top_generators(alg_->quiver(), rep_);
  basis_ = path_basis(alg_->quiver(), rep_, gens_);
  std::vector<int> verts;
  std::vector<std::vector<Rational>> elems;
  for (const auto& g : gens_) {
    verts.push_back(g.vertex);
    elems.push_back(g.vec);
  }
  p0_ = sum_of_projectives(*alg_, verts);
  ModuleMap pi = map_from_projectives(*alg_, verts, elems, rep_);
  rels_ = syzygy_generators(*alg_, verts, p0_, pi, nullptr);
}

const std::vector<Module::Relation>& Module::second_syzygy() const {
  if (syz_) return *syz_;
  const auto& a = *alg_;
  std::vector<int> g_verts, r_verts;
  for (const auto& g : gens_) g_verts.push_back(g.vertex);
  std::vector<std::vector<Rational>> r_elems;
  for (const auto& r : rels_) {
    r_verts.push_back(r.vertex);
    std::vector<Rational> full;
    for (const auto& c : r.comp) full.insert(full.end(), c.begin(), c.end());
    r_elems.push_back(std::move(full));
  }
  Representation p1 = sum_of_projectives(a, r_verts);
  ModuleMap d1 = map_from_projectives(a, r_verts, r_elems, p0_);
  Representation k2;
  auto syz = syzygy_generators(a, r_verts, p1, d1, &k2);
  // the cover of the second syzygy must be an isomorphism
  int cover_dim = 0;
  for (const auto& s : syz) cover_dim += a.projective(s.vertex).total();
  if (cover_dim != k2.total())
    throw std::logic_error("projective resolution does not stop after two steps");
  syz_ = std::move(syz);
  return *syz_;
}

std::size_t Module::image_length(const Representation& n) const {
  std::size_t len = 0;
  for (const auto& g : gens_) len += n.dims[g.vertex];
  return len;
}

RatMatrix Module::component(const Representation& n, const std::vector<Rational>& images, int u) const {
  const int dm = rep_.dims[u];
  if (dm == 0) return RatMatrix(n.dims[u], 0);
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& g : gens_) {
    off.push_back(o);
    o += n.dims[g.vertex];
  }
  const auto& q = alg_->quiver();
  RatMatrix w(n.dims[u], dm);
  for (int k = 0; k < dm; ++k) {
    const auto& e = basis_.entries[u][k];
    const int gv = gens_[e.gen].vertex;
    std::vector<Rational> x(images.begin() + off[e.gen], images.begin() + off[e.gen] + n.dims[gv]);
    auto y = apply_word(q, n, e.word, std::move(x));
    for (int i = 0; i < n.dims[u]; ++i) w(i, k) = y[i];
  }
  return w * basis_.inv[u];
}

ModuleMap Module::map_from_images(const Representation& n, const std::vector<Rational>& images) const {
  ModuleMap f;
  for (int u = 0; u < alg_->vertices(); ++u) f.comps.push_back(component(n, images, u));
  return f;
}

RatMatrix Module::compose_after(const Module& src, const Representation& n, const std::vector<Rational>& h,
                                const RatMatrix& f_images) const {
  RatMatrix out(src.image_length(n), f_images.cols());
  std::size_t in_off = 0, out_off = 0;
  std::map<int, RatMatrix> comps;
  for (const auto& g : src.generators()) {
    const int v = g.vertex;
    auto it = comps.find(v);
    if (it == comps.end()) it = comps.emplace(v, component(n, h, v)).first;
    const int din = rep_.dims[v], dout = n.dims[v];
    if (din > 0 && dout > 0 && f_images.cols() > 0) {
      RatMatrix block = it->second * f_images.rows_block(in_off, din);
      for (int i = 0; i < dout; ++i)
        for (std::size_t j = 0; j < f_images.cols(); ++j) out(out_off + i, j) = block(i, j);
    }
    in_off += din;
    out_off += dout;
  }
  return out;
}

std::vector<Rational> Module::images_of(const ModuleMap& f) const {
  std::vector<Rational> out;
  for (const auto& g : gens_) {
    auto y = mul(f.comps[g.vertex], g.vec);
    out.insert(out.end(), y.begin(), y.end());
  }
  return out;
}

namespace {
// block matrix of the relations' action on n: rows over relations, columns over sources
RatMatrix relation_matrix(const BasicAlgebra& a, const std::vector<Module::Relation>& rels,
                          const std::vector<int>& src_verts, const Representation& n, WordCache& cache) {
  std::size_t rows = 0, cols = 0;
  for (const auto& r : rels) rows += n.dims[r.vertex];
  std::vector<std::size_t> col_off;
  for (int v : src_verts) {
    col_off.push_back(cols);
    cols += n.dims[v];
  }
  RatMatrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& r : rels) {
    const int dr = n.dims[r.vertex];
    if (dr == 0) continue;
    for (std::size_t g = 0; g < src_verts.size(); ++g) {
      const int v = src_verts[g];
      if (n.dims[v] == 0 || r.comp[g].empty()) continue;
      const auto& pb = a.projective_basis(v);
      std::vector<Rational> c = mul(pb.inv[r.vertex], r.comp[g]);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        const RatMatrix& wm = cache.get(v, pb.entries[r.vertex][k].word);
        for (int i = 0; i < dr; ++i)
          for (int j = 0; j < n.dims[v]; ++j)
            if (sgn(wm(i, j)) != 0) m(r0 + i, col_off[g] + j) += c[k] * wm(i, j);
      }
    }
    r0 += dr;
  }
  return m;
}
}  // namespace

std::vector<Rational> HomSpace::coords(const std::vector<Rational>& img) const {
  auto x = solve(images, RatMatrix::column_vector(img));
  if (!x) throw std::logic_error("morphism not in the hom space");
  return x->column_values(0);
}

HomSpace hom_space(const Module& m, const Representation& n, bool with_maps) {
  WordCache cache(m.algebra().quiver(), n);
  std::vector<int> gv;
  for (const auto& g : m.generators()) gv.push_back(g.vertex);
  RatMatrix a = relation_matrix(m.algebra(), m.relations(), gv, n, cache);
  const std::size_t len = m.image_length(n);
  RatMatrix k = a.rows() ? kernel_basis(a) : RatMatrix::identity(len);
  if (a.rows() && a.cols() == 0) k = RatMatrix(0, 0);
  HomSpace h;
  h.images = len ? k : RatMatrix(0, 0);
  if (with_maps)
    for (std::size_t j = 0; j < h.images.cols(); ++j) h.basis.push_back(m.map_from_images(n, h.images.column_values(j)));
  return h;
}

ExtDims ext_dims(const Module& m, const Representation& n) {
  WordCache cache(m.algebra().quiver(), n);
  std::vector<int> gv, rv;
  for (const auto& g : m.generators()) gv.push_back(g.vertex);
  for (const auto& r : m.relations()) rv.push_back(r.vertex);
  const auto& syz = m.second_syzygy();
  RatMatrix a = relation_matrix(m.algebra(), m.relations(), gv, n, cache);
  RatMatrix b = relation_matrix(m.algebra(), syz, rv, n, cache);
  const long c0 = static_cast<long>(a.cols()), c1 = static_cast<long>(a.rows());
  long c2 = 0;
  for (const auto& s : syz) c2 += n.dims[s.vertex];
  const long ra = (a.rows() && a.cols()) ? static_cast<long>(rank(a)) : 0;
  const long rb = (b.rows() && b.cols()) ? static_cast<long>(rank(b)) : 0;
  return {c0 - ra, (c1 - rb) - ra, c2 - rb};
}

bool isomorphic(const Module& m, const Representation& n, unsigned seed) {
  if (m.rep().dims != n.dims) return false;
  HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return m.rep().total() == 0;
  auto invertible = [&](const ModuleMap& f) {
    for (const auto& c : f.comps)
      if (c.rows() && rank(c) != c.rows()) return false;
    return true;
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ModuleMap f;
    for (const auto& c : h.basis[0].comps) f.comps.emplace_back(c.rows(), c.cols());
    for (const auto& b : h.basis) {
      Rational s = coef(rng);
      for (std::size_t v = 0; v < f.comps.size(); ++v) f.comps[v] = f.comps[v] + b.comps[v].scaled(s);
    }
    if (invertible(f)) return true;
  }
  for (const auto& b : h.basis)
    if (invertible(b)) return true;
  return false;
}

}  // namespace wpl
