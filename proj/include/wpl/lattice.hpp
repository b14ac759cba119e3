#pragma once
// Grading group L(p), degree map and the monomial model of S(p, lambda).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpl/linalg.hpp"

namespace wpl {

struct DescriptorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class CurvatureClass { Domestic, Tubular, Wild };
std::string to_string(CurvatureClass c);

// x = sum arm[i] x_i + central c, 0 <= arm[i] < p_i
struct LVector {
  std::vector<int> arm;
  long central = 0;
  bool operator==(const LVector&) const = default;
  auto operator<=>(const LVector&) const = default;  // lexicographic, only for containers
};

enum class Order { Less, Greater, Equal, Incomparable };

class WeightDescriptor {
 public:
  // empty lambdas: default 1, 2, 3, ...
  WeightDescriptor(std::vector<int> weights, std::vector<Rational> lambdas = {});

  const std::vector<int>& weights() const { return p_; }
  const std::vector<Rational>& lambdas() const { return lambda_; }  // lambda_3 .. lambda_t
  int t() const { return static_cast<int>(p_.size()); }
  long pbar() const { return pbar_; }
  int rank() const { return n_; }  // number of summands of a tilting object
  long delta_omega() const { return delta_omega_; }
  Rational euler_characteristic() const;  // chi = 2 - sum (1 - 1/p_i)
  CurvatureClass curvature() const;
  // |p1...pt chi|; 0 means infinite index (tubular)
  Integer gorenstein_index() const;
  std::string label() const;  // "(2,3,7)"

  // group operations
  LVector zero() const;
  LVector x(int i) const;  // generator x_{i+1}, 0-based index
  LVector c() const;
  LVector omega() const;
  LVector normal_form(const std::vector<long>& a, long m) const;
  LVector add(const LVector& a, const LVector& b) const;
  LVector sub(const LVector& a, const LVector& b) const;
  LVector neg(const LVector& a) const;
  LVector scale(const LVector& a, long k) const;
  long delta(const LVector& a) const;
  bool is_valid(const LVector& a) const;

  bool geq_zero(const LVector& a) const { return a.central >= 0; }
  bool leq(const LVector& a, const LVector& b) const { return sub(b, a).central >= 0; }
  Order compare(const LVector& a, const LVector& b) const;

  // dim S_x
  long graded_dim(const LVector& a) const { return a.central >= 0 ? a.central + 1 : 0; }
  struct LinePair {
    long hom, ext;
  };
  // dims of Hom and Ext^1 from O(a) to O(b)
  LinePair line_pair_dims(const LVector& a, const LVector& b) const;

  // 0 <= y <= c in order O, x1, 2x1, ..., x2, ..., c
  std::vector<LVector> window() const;
  int window_index(const LVector& y) const;  // -1 if outside

  std::string str(const LVector& a) const;  // e.g. "x1+2x3-c"

  // p_i padded with 1's so that the two distinguished variables exist
  int variables() const { return std::max(t(), 2); }
  int var_weight(int i) const { return i < t() ? p_[i] : 1; }
  bool operator==(const WeightDescriptor& o) const { return p_ == o.p_ && lambda_ == o.lambda_; }

 private:
  std::vector<int> p_;
  std::vector<Rational> lambda_;
  long pbar_ = 1;
  int n_ = 2;
  long delta_omega_ = -2;
};

// ---- graded coordinate algebra ----

using Exponents = std::vector<long>;  // one entry per variable

// sparse polynomial in the variables, coefficients exact
using SparsePoly = std::map<Exponents, Rational>;

struct MonomialBasis {
  LVector degree;
  std::vector<Exponents> monomials;  // ordered by j = 0..l
};

// L-degree of a monomial
LVector monomial_degree(const WeightDescriptor& d, const Exponents& e);
MonomialBasis monomial_basis(const WeightDescriptor& d, const LVector& x);
// rewrite x_i^{p_i} -> x2^{p2} - lambda_i x1^{p1} (i >= 3) until reduced
SparsePoly reduce(const WeightDescriptor& d, SparsePoly f);
SparsePoly multiply(const SparsePoly& f, const SparsePoly& g);
// matrix of multiplication by x_i : S_x -> S_{x + x_i}, columns indexed by basis of S_x
RatMatrix multiplication_matrix(const WeightDescriptor& d, const LVector& x, int i);
// multiplication by a single monomial S_x -> S_{x + deg m}
RatMatrix multiplication_matrix(const WeightDescriptor& d, const LVector& x, const Exponents& m);

}  // namespace wpl
