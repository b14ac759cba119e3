#include <doctest.h>

#include <algorithm>

#include "wpl/json_io.hpp"
#include "wpl/tilting.hpp"

using namespace wpl;

namespace {
std::shared_ptr<const K0> k0_of(std::vector<int> p, std::vector<Rational> lam = {}) {
  return std::make_shared<K0>(WeightDescriptor(std::move(p), std::move(lam)));
}

int count(const TiltingDatum& t, int from, int to) {
  for (const auto& a : *t.quiver)
    if (a.from == from && a.to == to) return a.count;
  return 0;
}

void check_step(const StepReport& r) {
  CHECK(r.end_dim == 1);
  CHECK(r.class_identity);
  CHECK(r.dims_match);
  CHECK(r.others_ext_vanish);
  CHECK(r.euler_consistent);
  if (r.polarity == Polarity::Sink) {
    CHECK(r.ext_forward == 1);
    CHECK(r.ext_backward == 0);
  } else {
    CHECK(r.ext_forward == 0);
    CHECK(r.ext_backward == 1);
  }
}
}  // namespace

TEST_CASE("canonical tilting state") {
  auto k0 = k0_of({2, 3, 7});
  auto t = canonical_tilting(k0);
  CHECK(t.n() == 11);
  CHECK(t.projective_model);
  CHECK(validate(t).ok());
  // endo quiver = canonical quiver, one relation
  REQUIRE(t.datum.quiver);
  int arrows = 0;
  for (const auto& a : *t.datum.quiver) arrows += a.count;
  CHECK(arrows == 12);
  REQUIRE(t.datum.relations);
  CHECK(t.datum.relations->size() == 1);
  CHECK(formal_polarity(*k0, t.datum, 1) == Polarity::Source);
  CHECK(formal_polarity(*k0, t.datum, 11) == Polarity::Sink);

  // a twisted canonical bundle has the same quiver
  auto tw = canonical_tilting(k0, k0->descriptor().x(1));
  CHECK(validate(tw).ok());
  CHECK(*tw.datum.quiver == *t.datum.quiver);
}

TEST_CASE("reflection at the sink, five weights 2") {
  auto k0 = k0_of({2, 2, 2, 2, 2});
  auto t = canonical_tilting(k0);
  auto r = huebner_reflect(t, 7);
  CHECK(r.report.polarity == Polarity::Sink);
  CHECK(r.report.new_numerics.degree == 3);
  CHECK(r.report.new_numerics.rank == 4);
  check_step(r.report);
  CHECK(validate(r.state).ok());
  CHECK(count(r.state.datum, 1, 7) == 3);
  for (int corner = 2; corner <= 6; ++corner) {
    CHECK(count(r.state.datum, 7, corner) == 1);
    CHECK(count(r.state.datum, 1, corner) == 0);
  }
  CHECK(involution_check(t, 7));
  // reflecting back returns T_can's class
  auto back = huebner_reflect(r.state, 7);
  CHECK(back.report.polarity == Polarity::Source);
  CHECK(back.report.new_class == t.datum.summands[6].cls);
  check_step(back.report);
}

TEST_CASE("sink reflection on two weights") {
  auto k0 = k0_of({2, 3});
  auto t = canonical_tilting(k0);
  auto r = huebner_reflect(t, 5);
  check_step(r.report);
  auto lb = k0->locate_line_bundle(r.report.new_class);
  REQUIRE(lb);
  const auto& d = k0->descriptor();
  CHECK(*lb == d.sub(d.x(0), d.x(1)));
  CHECK(r.report.new_numerics.degree == 1);
  CHECK(r.report.new_numerics.rank == 1);
  CHECK(involution_check(t, 5));
}

TEST_CASE("source reflection and invalid vertices") {
  auto k0 = k0_of({2, 3, 5});
  auto t = canonical_tilting(k0);
  auto r = huebner_reflect(t, 1);
  CHECK(r.report.polarity == Polarity::Source);
  check_step(r.report);
  CHECK(validate(r.state).ok());
  CHECK(involution_check(t, 1));
  CHECK_THROWS_AS(huebner_reflect(t, 0), ReflectionError);
  try {
    huebner_reflect(t, 99);
  } catch (const ReflectionError& e) {
    CHECK(e.kind == ReflectionError::Kind::InvalidVertex);
  }
}

TEST_CASE("every step of a long sequence validates") {
  auto k0 = k0_of({2, 2, 2, 3}, {Rational(1), Rational(2)});
  auto t = canonical_tilting(k0);
  auto tr = reflect_sequence(t, {7, 2, 3, 4, 6});
  REQUIRE(tr.steps.size() == 5);
  for (const auto& s : tr.steps) check_step(s);
  for (const auto& s : tr.states) CHECK(validate(s).ok());
  for (const auto& s : tr.states) {
    auto rep = tilting_numeric_report(*k0, s.datum);
    CHECK(rep.huebner_rank_identity);
    CHECK(rep.huebner_dual_identity);
    CHECK(is_unimodular(*k0, s.datum));
  }
  CHECK(tilting_numeric_report(*k0, tr.states.back().datum).central_simples == 0);
  CHECK_THROWS_WITH_AS(reflect_sequence(t, {7, 42}), doctest::Contains("step 2"), ReflectionError);
}

TEST_CASE("models without rebasing agree with rebased ones") {
  auto k0 = k0_of({2, 3, 4});
  auto t = canonical_tilting(k0);
  ReflectOptions keep{false};
  auto a = reflect_sequence(t, {8, 1, 4}, keep);
  auto b = reflect_sequence(t, {8, 1, 4});
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    for (std::size_t s = 0; s < a.states[k].datum.size(); ++s)
      CHECK(a.states[k].datum.summands[s].cls == b.states[k].datum.summands[s].cls);
    CHECK(*a.states[k].datum.quiver == *b.states[k].datum.quiver);
  }
}

TEST_CASE("re-tilting onto a twisted canonical bundle") {
  auto k0 = k0_of({2, 3, 5});
  const auto& d = k0->descriptor();
  auto t = canonical_tilting(k0, d.add(d.x(0), d.x(2)));
  auto r = canonical_tilting(k0, d.zero());
  auto twisted_ref = canonical_tilting(k0, d.x(2));
  auto moved = retilt_reference(t, twisted_ref);
  CHECK(validate(moved).ok());
  for (int a = 0; a < t.n(); ++a)
    for (int b = 0; b < t.n(); ++b) CHECK(moved.cat->hom(a, b).dim() == t.cat->hom(a, b).dim());
  CHECK(*moved.datum.quiver == *t.datum.quiver);
  // T_can(x3) is outside the window of T_can(x1+x3)
  CHECK_THROWS_AS(retilt_reference(twisted_ref, canonical_tilting(k0, d.add(d.x(0), d.x(2)))), ReflectionError);
  auto based = rebase(t);
  CHECK(based.projective_model);
  CHECK(*based.datum.quiver == *r.datum.quiver);
}

TEST_CASE("state json") {
  auto k0 = k0_of({2, 2, 2, 2, 2});
  auto t = canonical_tilting(k0);
  auto j = state_json(t);
  CHECK(j["summands"].size() == 7);
  CHECK(j["summands"][6]["fraction"] == "2/1");
  CHECK(j["summands"][6]["polarity"] == "sink");
  CHECK(j["summands"][0]["polarity"] == "source");
  auto back = datum_from_json(j);
  CHECK(back.size() == 7);
  CHECK(back.summands[3].cls == t.datum.summands[3].cls);
  CHECK(*back.quiver == *t.datum.quiver);
  CHECK(state_json(t).dump() == j.dump());
  auto d = parse_type("2,2,2,3;2");
  CHECK(d.lambdas() == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(parse_type("(2,3,7)").label() == "(2,3,7)");
  CHECK(parse_type("").t() == 0);
}
