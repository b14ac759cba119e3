#pragma once
// Quiver representations over Q and modules over a basic algebra given by its
// indecomposable projectives.
//
// Orientation: an arrow a : u -> w stands for a morphism between the objects at
// u and w; on a right module it acts as a linear map M_w -> M_u.  So the matrix
// stored for a has shape dims[from] x dims[to].

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wpl/linalg.hpp"

namespace wpl {

struct Arrow {
  int from = 0, to = 0;
  std::string name;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
};

struct Representation {
  std::vector<int> dims;
  std::vector<RatMatrix> maps;
  int total() const;
  bool operator==(const Representation& o) const { return dims == o.dims && maps == o.maps; }
};

std::string check_representation(const Quiver& q, const Representation& m);  // "" when consistent

// componentwise linear maps M_v -> N_v
struct ModuleMap {
  std::vector<RatMatrix> comps;
};
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool is_module_map(const Quiver& q, const Representation& m, const Representation& n, const ModuleMap& f);
bool is_zero(const ModuleMap& f);

Representation direct_sum(const std::vector<const Representation*>& parts);

using Word = std::vector<int>;  // arrows applied left to right, each ending where the previous started
std::vector<Rational> apply_word(const Quiver& q, const Representation& m, const Word& w,
                                 std::vector<Rational> v);
RatMatrix word_matrix(const Quiver& q, const Representation& m, int start, const Word& w);

struct Generator {
  int vertex = 0;
  std::vector<Rational> vec;
};

// basis of each M_u by words applied to generators
struct PathBasis {
  struct Entry {
    int gen;
    Word word;
  };
  std::vector<std::vector<Entry>> entries;  // per vertex
  std::vector<RatMatrix> inv;               // coordinates of M_u in that basis
};
PathBasis path_basis(const Quiver& q, const Representation& m, const std::vector<Generator>& gens);
std::vector<Generator> top_generators(const Quiver& q, const Representation& m);

// kernel / cokernel representations together with inclusion / projection
struct SubRep {
  Representation rep;
  ModuleMap map;
};
SubRep kernel(const Quiver& q, const Representation& m, const ModuleMap& f);
SubRep cokernel(const Quiver& q, const Representation& n, const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

class BasicAlgebra {
 public:
  BasicAlgebra(Quiver q, std::vector<Representation> projectives, std::vector<std::vector<Rational>> generators);

  const Quiver& quiver() const { return q_; }
  int vertices() const { return q_.vertices; }
  const Representation& projective(int v) const { return proj_[v]; }
  const std::vector<Rational>& generator(int v) const { return gen_[v]; }
  const PathBasis& projective_basis(int v) const { return basis_[v]; }

  // matrix of x in (P_v)_u acting N_v -> N_u
  RatMatrix action(int v, int u, const std::vector<Rational>& x, const Representation& n) const;
  // module map P_v -> n sending the generator to x in n_v
  ModuleMap yoneda(int v, const Representation& n, const std::vector<Rational>& x) const;
  // the element of (P_to)_from given by an arrow
  std::vector<Rational> arrow_element(int arrow) const;
  // reversed quiver with projectives Q_v, (Q_v)_u = (P_u)_v
  std::shared_ptr<const BasicAlgebra> opposite() const;

 private:
  Quiver q_;
  std::vector<Representation> proj_;
  std::vector<std::vector<Rational>> gen_;
  std::vector<PathBasis> basis_;
};

// A module with its minimal projective presentation and (lazily) second syzygy.
class Module {
 public:
  Module(std::shared_ptr<const BasicAlgebra> a, Representation rep);

  const Representation& rep() const { return rep_; }
  const BasicAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const BasicAlgebra>& algebra_ptr() const { return alg_; }
  const std::vector<Generator>& generators() const { return gens_; }

  // map from generator images (concatenated n_{v_g}) to a module map
  ModuleMap map_from_images(const Representation& n, const std::vector<Rational>& images) const;
  // images of the generators under f, concatenated
  std::vector<Rational> images_of(const ModuleMap& f) const;
  // component at vertex v of the map to n given by generator images
  RatMatrix component(const Representation& n, const std::vector<Rational>& images, int v) const;
  // images of (h after f) for every column f of f_images (images of src generators in this module)
  RatMatrix compose_after(const Module& src, const Representation& n, const std::vector<Rational>& h,
                          const RatMatrix& f_images) const;
  std::size_t image_length(const Representation& n) const;

  struct Relation {
    int vertex;
    std::vector<std::vector<Rational>> comp;  // one vector per generator, in (P_{v_g})_{vertex}
  };
  const std::vector<Relation>& relations() const { return rels_; }
  // second syzygy generators as components over the relations; throws if the
  // resolution does not stop after two steps
  const std::vector<Relation>& second_syzygy() const;

 private:
  std::shared_ptr<const BasicAlgebra> alg_;
  Representation rep_;
  std::vector<Generator> gens_;
  PathBasis basis_;
  std::vector<Relation> rels_;
  Representation p0_;
  mutable std::optional<std::vector<Relation>> syz_;
};

struct HomSpace {
  std::vector<ModuleMap> basis;
  RatMatrix images;  // column k = generator images of basis[k]
  std::size_t dim() const { return images.cols(); }
  // coordinates of f (given by generator images) in the basis; throws if f is not in the span
  std::vector<Rational> coords(const std::vector<Rational>& img) const;
};
HomSpace hom_space(const Module& m, const Representation& n, bool with_maps = true);

struct ExtDims {
  long hom = 0, ext1 = 0, ext2 = 0;
};
ExtDims ext_dims(const Module& m, const Representation& n);

// dimension equality plus an invertible intertwiner found by seeded random combinations
bool isomorphic(const Module& m, const Representation& n, unsigned seed = 12345);

}  // namespace wpl
