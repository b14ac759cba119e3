#pragma once
// Tilting bundles modelled by modules over the endomorphism algebra of a
// reference tilting object, and Hübner reflections between them.
//
// A model is an algebra A = End(R) together with a variance.  Covariant: an
// object X is the right A-module Hom(R, X).  Contravariant: X is the right
// A^op-module Hom(X, R), and a morphism X -> Y is stored as the module map
// N_Y -> N_X.  Morphisms are kept as generator images (see HomSpace).

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpl/canonical.hpp"
#include "wpl/k0.hpp"
#include "wpl/representation.hpp"

namespace wpl {

enum class Variance { Covariant, Contravariant };
std::string to_string(Variance v);

class ObjectCategory {
 public:
  ObjectCategory(std::shared_ptr<const BasicAlgebra> a, Variance v, std::vector<std::shared_ptr<const Module>> objects);

  const std::shared_ptr<const BasicAlgebra>& algebra() const { return alg_; }
  Variance variance() const { return var_; }
  int size() const { return static_cast<int>(obj_.size()); }
  const Module& object(int k) const { return *obj_[k]; }
  const std::shared_ptr<const Module>& object_ptr(int k) const { return obj_[k]; }
  const std::vector<std::shared_ptr<const Module>>& objects() const { return obj_; }

  // morphisms X_a -> X_b (images only, cached)
  const HomSpace& hom(int a, int b) const;
  // Ext^k(X_a, X_b) of the modelled objects
  ExtDims ext(int a, int b) const;
  // images in hom(a, b) of g o f for every column g of G (in hom(c, b)) and f of F (in hom(a, c)),
  // ordered g-major
  RatMatrix compose_all(int a, int c, int b, const RatMatrix& g, const RatMatrix& f) const;
  // the module map realizing a morphism a -> b
  ModuleMap module_map(int a, int b, const std::vector<Rational>& images) const;
  // images of the identity of X_a
  std::vector<Rational> identity_images(int a) const;

 private:
  std::shared_ptr<const BasicAlgebra> alg_;
  Variance var_;
  std::vector<std::shared_ptr<const Module>> obj_;
  mutable std::map<std::pair<int, int>, HomSpace> hom_cache_;
  mutable std::mutex mu_;
};

// an irreducible morphism chosen as a lift of a basis vector of rad/rad^2
struct EndoArrow {
  int from, to;  // indices into the object list passed in
  std::vector<Rational> images;
};
// arrows between objs[a] and objs[b]; rad^2 is the span of composites through the other objects
std::vector<EndoArrow> arrows_between(const ObjectCategory& cat, const std::vector<int>& objs, int a, int b);
std::vector<EndoArrow> endo_arrows(const ObjectCategory& cat, const std::vector<int>& objs);

enum class Polarity { Source, Sink };
std::string to_string(Polarity p);
// formal source iff the dual class [S_i] is the class of a sheaf, formal sink iff -[S_i] is
Polarity formal_polarity(const K0& k0, const TiltingDatum& t, int label);

struct ConcreteTilting {
  std::shared_ptr<const K0> k0;
  std::shared_ptr<const ObjectCategory> cat;  // objects 0..n-1 are the summands, in datum order
  std::vector<K0Class> reference;             // classes of the reference summands (algebra vertices)
  std::string reference_name;
  bool projective_model = false;              // summand k is the k-th indecomposable projective
  TiltingDatum datum;                         // with quiver and relation counts
  std::vector<EndoArrow> arrows;              // arrow representatives, positions as indices

  int n() const { return static_cast<int>(datum.size()); }
  // dimension vector predicted by the Euler form
  std::vector<long> predicted_dims(const K0Class& cls) const;
};

// T_can(twist) modelled over the canonical algebra
ConcreteTilting canonical_tilting(std::shared_ptr<const K0> k0, const LVector& twist);
ConcreteTilting canonical_tilting(std::shared_ptr<const K0> k0);

struct TiltingValidation {
  bool dims_match = true, endo_trivial = true, ext_vanish = true, euler_consistent = true;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
// dimension vectors, End = k and pairwise Ext^1 = 0 in the concrete model
TiltingValidation validate(const ConcreteTilting& t, bool check_ext = true);

struct Attempt {
  std::string model;
  bool ok = false;
  std::string detail;
};

struct StepReport {
  int label = 0;
  Polarity polarity = Polarity::Source;
  std::vector<std::pair<int, int>> approximation;  // (label, multiplicity)
  K0Class old_class, new_class;
  Numerics old_numerics, new_numerics;
  std::vector<int> dims;  // of the new summand in the model where it was built
  std::string model;
  long end_dim = 0;
  long ext_forward = 0;   // Ext^1(T_i, T_i*)
  long ext_backward = 0;  // Ext^1(T_i*, T_i)
  bool class_identity = false, dims_match = false, others_ext_vanish = false, euler_consistent = false;
  std::vector<Attempt> trace;
};

struct ReflectionError : std::runtime_error {
  enum class Kind { InvalidVertex, WindowExhausted, Validation };
  Kind kind;
  std::vector<Attempt> trace;
  ReflectionError(Kind k, const std::string& what, std::vector<Attempt> tr = {})
      : std::runtime_error(what), kind(k), trace(std::move(tr)) {}
};

struct ReflectOptions {
  bool rebase = true;  // re-tilt onto the new tilting object after the step
};

struct Reflection {
  ConcreteTilting state;
  StepReport report;
};
Reflection huebner_reflect(const ConcreteTilting& t, int label, const ReflectOptions& opt = {});

struct Trajectory {
  std::vector<ConcreteTilting> states;  // states[0] is the input
  std::vector<StepReport> steps;
};
// throws ReflectionError whose message carries the failing step index
Trajectory reflect_sequence(const ConcreteTilting& t, const std::vector<int>& labels, const ReflectOptions& opt = {});

// re-express every summand of t as a module over End(r); t and r must live in the same model
ConcreteTilting retilt_reference(const ConcreteTilting& t, const ConcreteTilting& r);
// model t over its own endomorphism algebra (summands become projectives)
ConcreteTilting rebase(const ConcreteTilting& t);

// reflect twice at label in a common model and test the result against the original summand
bool involution_check(const ConcreteTilting& t, int label);

}  // namespace wpl
