#include <doctest.h>

#include "wpl/canonical.hpp"
#include "wpl/k0.hpp"

using namespace wpl;

namespace {
// line bundles whose modules exist: Ext^1(T_can, O(z)) = 0, with delta in [lo, hi]
std::vector<LVector> module_window(const WeightDescriptor& d, long lo, long hi) {
  std::vector<LVector> out;
  std::vector<int> arm(d.t(), 0);
  auto win = d.window();
  for (;;) {
    for (long m = lo / d.pbar() - 2; m <= hi / d.pbar() + 1; ++m) {
      LVector v{arm, m};
      long dl = d.delta(v);
      if (dl < lo || dl > hi) continue;
      bool ok = true;
      for (const auto& y : win) ok = ok && d.line_pair_dims(y, v).ext == 0;
      if (ok) out.push_back(v);
    }
    int i = 0;
    while (i < d.t() && ++arm[i] == d.weights()[i]) arm[i++] = 0;
    if (i == d.t()) break;
  }
  return out;
}

Representation conjugate(const Quiver& q, const Representation& m, unsigned seed) {
  // change basis at every vertex by a unipotent upper triangular matrix
  Representation r = m;
  std::vector<RatMatrix> g;
  for (int v = 0; v < q.vertices; ++v) {
    RatMatrix a = RatMatrix::identity(m.dims[v]);
    for (int i = 0; i < m.dims[v]; ++i)
      for (int j = i + 1; j < m.dims[v]; ++j) a(i, j) = Rational(static_cast<long>((seed * 7 + i * 3 + j) % 5) - 2);
    g.push_back(a);
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    r.maps[a] = g[ar.from] * m.maps[a] * *inverse(g[ar.to]);
  }
  return r;
}
}  // namespace

TEST_CASE("canonical presentation") {
  WeightDescriptor d({2, 3, 7});
  auto p = canonical_presentation(d);
  CHECK(p.quiver.vertices == 11);
  CHECK(p.quiver.arrows.size() == 12);
  CHECK(p.relations.size() == 1);

  WeightDescriptor e({});
  auto pe = canonical_presentation(e);
  CHECK(pe.quiver.vertices == 2);
  CHECK(pe.quiver.arrows.size() == 2);  // Kronecker
  CHECK(pe.relations.empty());
}

TEST_CASE("line bundle modules") {
  WeightDescriptor e({2, 3});
  auto p = canonical_presentation(e);
  auto m = line_bundle_module(e, p, e.c());
  CHECK(m.dims == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(check_representation(p.quiver, m).empty());
  auto z = line_bundle_module(e, p, e.zero());
  CHECK(z.dims == std::vector<int>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(line_bundle_module(e, p, e.neg(e.x(0))), WindowError);

  for (auto d : {WeightDescriptor({2, 3, 7}), WeightDescriptor({2, 2, 2, 3}, {Rational(1), Rational(2)}),
                 WeightDescriptor({2, 2, 2, 2, 2})}) {
    auto pd = canonical_presentation(d);
    for (const auto& x : module_window(d, 0, 2 * d.pbar())) {
      auto r = line_bundle_module(d, pd, x);
      REQUIRE(check_representation(pd.quiver, r).empty());
      for (const auto& rel : pd.relations) CHECK(evaluate_relation(pd.quiver, r, rel).is_zero());
    }
  }
}

TEST_CASE("projectives of the canonical algebra") {
  WeightDescriptor d({2, 3, 7});
  auto a = canonical_algebra(d);
  K0 k0(d);
  for (int v = 0; v < a->vertices(); ++v) {
    Module pv(a, a->projective(v));
    CHECK(pv.generators().size() == 1);
    CHECK(pv.generators()[0].vertex == v);
    CHECK(pv.relations().empty());
  }
}

TEST_CASE("hom dimensions equal Cartan entries on window pairs") {
  for (auto d : {WeightDescriptor({2, 3}), WeightDescriptor({2, 3, 7}), WeightDescriptor({2, 2, 2, 2, 2}),
                 WeightDescriptor({3, 3, 3})}) {
    auto a = canonical_algebra(d);
    K0 k0(d);
    for (int u = 0; u < a->vertices(); ++u) {
      Module pu(a, a->projective(u));
      for (int v = 0; v < a->vertices(); ++v) {
        auto h = hom_space(pu, a->projective(v));
        CHECK(static_cast<long>(h.dim()) == k0.cartan()(u, v).get_si());
        for (const auto& f : h.basis) CHECK(is_module_map(a->quiver(), pu.rep(), a->projective(v), f));
        auto e = ext_dims(pu, a->projective(v));
        CHECK(e.ext1 == 0);
        CHECK(e.ext2 == 0);
      }
    }
  }
}

TEST_CASE("hom and ext between line bundle modules") {
  for (auto d : {WeightDescriptor({2, 3}), WeightDescriptor({2, 3, 7}), WeightDescriptor({2, 2, 2, 3})}) {
    auto a = canonical_algebra(d);
    auto p = canonical_presentation(d);
    K0 k0(d);
    auto xs = module_window(d, 0, d.pbar() + d.pbar() / 2);
    for (std::size_t i = 0; i < xs.size(); i += 3) {
      Module mi(a, line_bundle_module(d, p, xs[i]));
      for (std::size_t j = 0; j < xs.size(); j += 2) {
        auto nj = line_bundle_module(d, p, xs[j]);
        auto e = ext_dims(mi, nj);
        auto want = d.line_pair_dims(xs[i], xs[j]);
        CHECK_MESSAGE(e.hom == want.hom, d.label() << " " << d.str(xs[i]) << " -> " << d.str(xs[j]));
        CHECK(e.ext1 == want.ext);
        CHECK(e.ext2 == 0);
        CHECK(e.hom - e.ext1 + e.ext2 ==
              k0.euler(k0.line_bundle(xs[i]), k0.line_bundle(xs[j])).get_si());
      }
    }
  }
}

TEST_CASE("kernel and cokernel") {
  WeightDescriptor e({2, 3});
  auto a = canonical_algebra(e);
  auto p = canonical_presentation(e);
  // O -> O(x1): injective with cokernel a tube simple concentrated in the arm
  Module m0(a, a->projective(0));
  auto h = hom_space(m0, a->projective(1));
  REQUIRE(h.dim() == 1);
  CHECK(is_injective(h.basis[0]));
  auto c = cokernel(a->quiver(), a->projective(1), h.basis[0]);
  CHECK(c.rep.total() == a->projective(1).total() - a->projective(0).total());
  CHECK(check_representation(a->quiver(), c.rep).empty());
  CHECK(is_module_map(a->quiver(), a->projective(1), c.rep, c.map));
  auto k = kernel(a->quiver(), a->projective(0), h.basis[0]);
  CHECK(k.rep.total() == 0);

  // O(x1) ⊕ O(x2) -> O(c)... use the two arrows into c from the arms
  auto pc = line_bundle_module(e, p, e.c());
  Module mc(a, pc);
  CHECK(mc.generators().size() == 1);
}

TEST_CASE("isomorphism test") {
  WeightDescriptor d({2, 3, 7});
  auto a = canonical_algebra(d);
  auto p = canonical_presentation(d);
  auto x = d.add(d.x(0), d.x(2));
  auto m = line_bundle_module(d, p, x);
  Module mm(a, m);
  CHECK(isomorphic(mm, conjugate(a->quiver(), m, 3)));
  auto other = line_bundle_module(d, p, d.add(d.x(1), d.x(2)));
  CHECK(!isomorphic(mm, other));
}

TEST_CASE("opposite algebra") {
  WeightDescriptor d({2, 3, 5});
  auto a = canonical_algebra(d);
  auto op = a->opposite();
  K0 k0(d);
  for (int v = 0; v < a->vertices(); ++v)
    for (int u = 0; u < a->vertices(); ++u) CHECK(op->projective(v).dims[u] == a->projective(u).dims[v]);
  // Hom over the opposite algebra between its projectives is the transpose Cartan
  for (int u = 0; u < a->vertices(); ++u) {
    Module qu(op, op->projective(u));
    for (int v = 0; v < a->vertices(); ++v)
      CHECK(static_cast<long>(hom_space(qu, op->projective(v), false).dim()) == k0.cartan()(v, u).get_si());
  }
}
