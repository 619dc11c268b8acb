#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpl/admissible_hom.hpp"
#include "wpl/exact_field.hpp"

namespace wpl {

// Coefficient backends: FieldElem (exact) and Complex (floating, tolerance
// float_tolerance()).
bool coeff_is_zero(const FieldElem& x);
bool coeff_is_zero(const Complex& x);
std::string coeff_to_string(const FieldElem& x);
std::string coeff_to_string(const Complex& x);
template <class C>
C coeff_from(const FieldElem& x);

// Principal n-th root. The exact backend handles n a power of 2 through
// iterated square roots and throws NotExact otherwise.
template <class C>
C nth_root(const C& x, Int n);
// exp(2 pi i k / n); exact only for n a power of 2.
template <class C>
C root_of_unity(Int n, Int k);

using Exponents = std::vector<Int>;

// S(q; mu). Weights shorter than 2 are padded with 1s so that z1, z2 exist.
// mu[k] is the parameter of generator k + 3; mu[0] = 1 when s >= 3.
template <class C>
struct Algebra {
  WeightSeq q;
  std::vector<C> mu;
};

// Validates the normalization and pairwise distinctness (DegenerateParameter).
template <class C>
Algebra<C> make_algebra(const WeightSeq& q, std::vector<C> mu);

WeightSeq pad_weights(const WeightSeq& q);

// L(q)-degree of a monomial.
GroupElement monomial_degree(const WeightSeq& q, const Exponents& e);

template <class C>
class GradedPoly {
 public:
  GradedPoly(WeightSeq q, GroupElement degree);
  static GradedPoly monomial(const WeightSeq& q, const Exponents& e, const C& coeff);

  const WeightSeq& weights() const { return q_; }
  const GroupElement& degree() const { return degree_; }
  const std::map<Exponents, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws InvalidArgument if the monomial has a different degree.
  void add_term(const Exponents& e, const C& c);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly scaled(const C& c) const;

  // "-nu*z1^2+z2^2" style, coefficients in exact_field literal syntax.
  std::string to_string() const;

 private:
  WeightSeq q_;
  GroupElement degree_;
  std::map<Exponents, C> terms_;
};

template <class C>
GradedPoly<C> operator*(const GradedPoly<C>& a, const GradedPoly<C>& b);
template <class C>
GradedPoly<C> pow(const GradedPoly<C>& a, Int k);

// Rewrites z_i^{q_i} -> z_2^{q_2} - mu_i z_1^{q_1} (i >= 3) until every
// exponent e_i (i >= 3) is below q_i.
template <class C>
GradedPoly<C> reduce(const GradedPoly<C>& f, const Algebra<C>& a);

Int graded_dim(const WeightSeq& p, const GroupElement& x);
// x_1^{a p_1 + l_1} x_2^{b p_2 + l_2} x_3^{l_3} ... with a + b = l. Vectors
// have length max(t, 2).
std::vector<Exponents> monomial_basis(const WeightSeq& p, const GroupElement& x);

// phi: S(p; lambda) -> S(q; mu) given on generators, compatible with pi.
// pi maps into L(codomain.q), weight-1 generators kept.
template <class C>
struct CompatibleHom {
  StringHom pi;
  Algebra<C> codomain;
  std::vector<GradedPoly<C>> images;
};

template <class C>
bool check_compatible(const CompatibleHom<C>& ch);
template <class C>
bool check_relations(const CompatibleHom<C>& ch, const Algebra<C>& domain);
// Throws PreconditionViolation unless ker pi is cyclic or Klein.
template <class C>
bool check_surjective_small_degree(const CompatibleHom<C>& ch);

// phi applied to a domain monomial, reduced.
template <class C>
GradedPoly<C> apply_phi(const CompatibleHom<C>& ch, const Exponents& e);

// phi2 after phi1 (pi2 after pi1).
template <class C>
CompatibleHom<C> compose(const CompatibleHom<C>& ch2, const CompatibleHom<C>& ch1);

template <class C>
CompatibleHom<C> identity_phi(const Algebra<C>& a);

// Transposition (i, j) of generators, 1 <= i < j <= t, t >= 3. The codomain
// has weights p with p_i and p_j exchanged.
template <class C>
CompatibleHom<C> permute_parameters(const Algebra<C>& domain, std::size_t i, std::size_t j);

// phi for a cyclic kernel H. Kernels off {1, 2} are first moved there by
// transpositions. Weight (2,2,2,2) with n = 2 uses the explicit nu-formula;
// t <= 2 uses the fixed table; everything else the product-of-roots
// construction into the raw codomain.
template <class C>
CompatibleHom<C> construct_cyclic_phi(const Algebra<C>& domain, const FiniteSubgroup& h);

template <class C>
CompatibleHom<C> to_numeric(const CompatibleHom<FieldElem>& ch);
Algebra<Complex> to_numeric(const Algebra<FieldElem>& a);

// Exact when possible, floating otherwise.
struct PhiResult {
  bool exact = false;
  std::optional<CompatibleHom<FieldElem>> exact_hom;
  CompatibleHom<Complex> numeric_hom;
  Algebra<Complex> numeric_domain;
};
PhiResult construct_cyclic_phi_auto(const Algebra<FieldElem>& domain, const FiniteSubgroup& h);

// The six kernel-zero homs of (2,2,2,2; lambda) by target parameter
// lambda, 1/lambda, 1-lambda, 1/(1-lambda), lambda/(lambda-1), (lambda-1)/lambda.
struct PermutationRow {
  std::string label;
  FieldElem mu;
  CompatibleHom<FieldElem> hom;
};
std::vector<PermutationRow> permutation_rows_2222(const FieldElem& lambda);

// (2,2,2,2; lambda) -> (2,2,2,2; nu^2) with kernel <x1 - x2>,
// nu = (sqrt(lambda) + 1) / (sqrt(lambda) - 1).
CompatibleHom<FieldElem> phi_2222_x1_x2(const FieldElem& lambda);
// Kernel <z3 - z4> on (2,2,2,2; -1), target (2,2,2,2; -1).
CompatibleHom<FieldElem> phi_2222_minus_one_34();

// Polynomial text parser: "2*sqrt(2)*z1*z2 - z3^2", "(1-sqrt(-3))/2*z1".
GradedPoly<FieldElem> parse_poly(const WeightSeq& q, const std::string& text);

}  // namespace wpl
