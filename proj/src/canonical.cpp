#include "wpl/canonical.hpp"

#include <sstream>

namespace wpl {

namespace {
// arrows of arm i, listed from O towards c
std::vector<int> arm_arrows(const WeightDescriptor& d, const Quiver& q, int i) {
  std::vector<int> out;
  const std::string name = "x" + std::to_string(i + 1);
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (q.arrows[a].name == name) out.push_back(static_cast<int>(a));
  (void)d;
  return out;
}

// word M_c -> M_O running down arm i
Word arm_word(const WeightDescriptor& d, const Quiver& q, int i) {
  auto arr = arm_arrows(d, q, i);
  return Word(arr.rbegin(), arr.rend());
}
}  // namespace

QuiverPresentation canonical_presentation(const WeightDescriptor& d) {
  QuiverPresentation p;
  auto win = d.window();
  Quiver& q = p.quiver;
  q.vertices = static_cast<int>(win.size());
  for (const auto& y : win) q.labels.push_back(d.str(y));
  const int top = q.vertices - 1;
  for (int i = 0; i < d.variables(); ++i) {
    const std::string name = "x" + std::to_string(i + 1);
    int prev = 0;
    for (int a = 1; a < d.var_weight(i); ++a) {
      LVector y = d.zero();
      y.arm[i] = a;
      int cur = d.window_index(y);
      q.arrows.push_back({prev, cur, name});
      prev = cur;
    }
    q.arrows.push_back({prev, top, name});
  }
  for (int i = 2; i < d.t(); ++i) {
    const Rational& lam = d.lambdas()[i - 2];
    p.relations.push_back({{Rational(1), arm_word(d, q, i)},
                           {Rational(-1), arm_word(d, q, 1)},
                           {lam, arm_word(d, q, 0)}});
    std::ostringstream os;
    os << "x" << i + 1 << "^" << d.weights()[i] << " = x2^" << d.weights()[1] << " - " << to_string(lam) << " x1^"
       << d.weights()[0];
    p.relation_text.push_back(os.str());
  }
  return p;
}

Representation line_bundle_module(const WeightDescriptor& d, const QuiverPresentation& p, const LVector& z) {
  auto win = d.window();
  for (std::size_t u = 0; u < win.size(); ++u) {
    if (d.line_pair_dims(win[u], z).ext != 0)
      throw WindowError("O(" + d.str(z) + ") is outside the module window: Ext^1 from vertex " +
                        p.quiver.labels[u] + " is nonzero");
  }
  Representation m;
  for (const auto& y : win) m.dims.push_back(static_cast<int>(d.graded_dim(d.sub(z, y))));
  for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
    const auto& ar = p.quiver.arrows[a];
    const int var = std::stoi(ar.name.substr(1)) - 1;
    if (m.dims[ar.from] == 0 || m.dims[ar.to] == 0) {
      m.maps.emplace_back(m.dims[ar.from], m.dims[ar.to]);
      continue;
    }
    m.maps.push_back(multiplication_matrix(d, d.sub(z, win[ar.to]), var));
  }
  return m;
}

RatMatrix evaluate_relation(const Quiver& q, const Representation& m, const std::vector<QuiverPresentation::Term>& r) {
  const int top = q.vertices - 1;
  RatMatrix acc(m.dims[0], m.dims[top]);
  for (const auto& t : r) acc = acc + word_matrix(q, m, top, t.word).scaled(t.coeff);
  return acc;
}

std::shared_ptr<const BasicAlgebra> canonical_algebra(const WeightDescriptor& d) {
  auto p = canonical_presentation(d);
  std::vector<Representation> proj;
  std::vector<std::vector<Rational>> gens;
  for (const auto& y : d.window()) {
    proj.push_back(line_bundle_module(d, p, y));
    gens.push_back({Rational(1)});
  }
  return std::make_shared<BasicAlgebra>(p.quiver, std::move(proj), std::move(gens));
}

}  // namespace wpl
