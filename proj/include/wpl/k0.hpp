#pragma once
// Grothendieck group in the basis of line bundles O(y), 0 <= y <= c.

#include <optional>
#include <string>
#include <vector>

#include "wpl/lattice.hpp"
#include "wpl/polynomial.hpp"

namespace wpl {

using K0Class = std::vector<Integer>;

K0Class operator+(const K0Class& a, const K0Class& b);
K0Class operator-(const K0Class& a, const K0Class& b);
K0Class operator-(const K0Class& a);
K0Class operator*(const Integer& s, const K0Class& a);

struct QuiverArrowCount {
  int from, to, count;  // labels
  bool operator==(const QuiverArrowCount&) const = default;
};

struct TiltingDatum {
  struct Summand {
    int label;
    K0Class cls;
  };
  std::vector<Summand> summands;
  std::optional<std::vector<QuiverArrowCount>> quiver;
  std::optional<std::vector<QuiverArrowCount>> relations;

  std::size_t size() const { return summands.size(); }
  int position(int label) const;  // -1 if absent
};

struct Numerics {
  Integer rank, degree;
  // slope deg/rk; nullopt means infinity (rank 0)
  std::optional<Rational> slope() const;
};

class K0 {
 public:
  explicit K0(WeightDescriptor d);

  const WeightDescriptor& descriptor() const { return d_; }
  int n() const { return d_.rank(); }
  const std::vector<LVector>& window() const { return window_; }

  const IntMatrix& cartan() const { return cartan_; }
  Integer euler(const K0Class& a, const K0Class& b) const;
  K0Class basis(int k) const;
  K0Class w() const;  // [O(c)] - [O]
  K0Class zero() const { return K0Class(n()); }

  K0Class line_bundle(const LVector& z) const;
  std::optional<LVector> locate_line_bundle(const K0Class& cls) const;
  // S_{i,a}, a taken mod p_i; i is 0-based
  K0Class tube_simple(int i, long a) const;

  Numerics numerics(const K0Class& cls) const;
  Integer rank_of(const K0Class& cls) const;
  Integer degree_of(const K0Class& cls) const;

  IntMatrix twist_matrix(const LVector& x) const;
  // -C^{-1} C^T, the matrix of Serre's translation in column convention
  const IntMatrix& coxeter_matrix() const { return coxeter_; }
  IntPoly coxeter_polynomial() const;

 private:
  WeightDescriptor d_;
  std::vector<LVector> window_;
  IntMatrix cartan_, coxeter_;
};

enum class StandardKind { Canonical, Squid, CoxeterDynkin };
StandardKind parse_standard_kind(const std::string& s);
std::string to_string(StandardKind k);
TiltingDatum standard_tilting_data(const K0& k0, StandardKind kind);
// line bundles around a cycle: p1 zigzag pairs x1 / -x2 closed by (p2 - p1) x2 steps
TiltingDatum two_weight_cycle_datum(const K0& k0);

IntMatrix gram_matrix(const K0& k0, const TiltingDatum& t);  // H_ab = <T_a, T_b>
bool is_unimodular(const K0& k0, const TiltingDatum& t);

struct TiltingNumericReport {
  std::vector<K0Class> dual;  // [S_i] with <T_i, S_j> = delta_ij
  std::vector<Numerics> summand_numerics, dual_numerics;
  int central_simples = 0;
  std::optional<Rational> width;  // nullopt if some summand has rank 0
  IntMatrix hom_matrix;
  bool hom_nonnegative = true;
  bool huebner_rank_identity = false;    // sum rk(T_i) [S_i] = w
  bool huebner_dual_identity = false;    // sum rk(S_i) [T_i] = -w
  bool canonical = false;
  std::optional<LVector> canonical_twist;  // T = T_can(x) when canonical
  // minimal relations for a gl.dim <= 2 endomorphism algebra: r_ab from arrows and the form on duals
  std::vector<QuiverArrowCount> relation_counts;
};
TiltingNumericReport tilting_numeric_report(const K0& k0, const TiltingDatum& t);

struct SummandSpectrum {
  int label;
  IntPoly numerator;     // P = numerator / det(I - x Phi)
  IntPoly psi_prime;     // (psi - psi P)/x
  IntPoly psi_bar;       // x psi + psi P
  std::vector<Integer> alpha;  // alpha_0 .. alpha_pbar
};
struct SpectralData {
  IntMatrix coxeter_matrix;
  IntPoly coxeter_polynomial;      // det(x I - Phi)
  IntPoly denominator;             // det(I - x Phi)
  std::vector<SummandSpectrum> summands;
  bool homogeneous = false;
  bool self_reciprocal = false;
};
SpectralData spectral_report(const K0& k0, const TiltingDatum& t);

enum class ArrowVerdict { Bijective, InjectiveOnly, SurjectiveOnly };
std::string to_string(ArrowVerdict v);
struct ArrowProfile {
  int from, to, count;
  ArrowVerdict verdict;
};
std::vector<ArrowProfile> bijection_profile(const K0& k0, const TiltingDatum& t);

// sum over j in Z_pbar of <a, Phi^j b>
Integer average_form(const K0& k0, const K0Class& a, const K0Class& b);

struct TubularTools {
  IntMatrix sigma, rho, rho_inv;
  K0Class z;  // sigma^{-1} rho (w)
};
// throws std::domain_error unless delta(omega) = 0
TubularTools tubular_tools(const K0& k0);

}  // namespace wpl
