#pragma once
// The canonical algebra as a concrete quiver with relations, and line bundles
// O(z) as right modules Hom(T_can, O(z)).

#include <memory>
#include <stdexcept>
#include <string>

#include "wpl/k0.hpp"
#include "wpl/representation.hpp"

namespace wpl {

struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuiverPresentation {
  Quiver quiver;
  // each relation: a linear combination of paths from O to c, as (coefficient, word)
  struct Term {
    Rational coeff;
    Word word;
  };
  std::vector<std::vector<Term>> relations;
  std::vector<std::string> relation_text;
};

// arms in weight order; padded weight-one arms give direct arrows O -> c
QuiverPresentation canonical_presentation(const WeightDescriptor& d);

// vertex space at y is S_{z-y}; throws WindowError when Ext^1(T_can, O(z)) != 0
Representation line_bundle_module(const WeightDescriptor& d, const QuiverPresentation& p, const LVector& z);

// evaluates a path combination on a representation (matrix M_c -> M_O)
RatMatrix evaluate_relation(const Quiver& q, const Representation& m, const std::vector<QuiverPresentation::Term>& r);

std::shared_ptr<const BasicAlgebra> canonical_algebra(const WeightDescriptor& d);

}  // namespace wpl
