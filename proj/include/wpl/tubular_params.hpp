#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wpl/exact_field.hpp"
#include "wpl/subgroup_lattice.hpp"

namespace wpl {

// Gamma(lambda) = {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}, kept in that order.
// The representative is the principal_less-minimal member.
struct ParamOrbit {
  FieldElem representative;
  std::array<FieldElem, 6> members;

  // Members sorted by principal embedding, as literal strings.
  std::vector<std::string> sorted_literals() const;
};

// Throws DegenerateParameter for lambda in {0, 1}.
ParamOrbit gamma(const FieldElem& lambda);
std::array<Complex, 6> gamma(const Complex& lambda);

// Multiset equality Gamma(a) == Gamma(b). A floating comparison runs first;
// equal-looking multisets are then confirmed exactly, falling back to the
// floating answer if the common tower would pass the depth cap.
bool gamma_eq(const FieldElem& a, const FieldElem& b);
bool gamma_eq(const Complex& a, const Complex& b);
bool same_orbit(const ParamOrbit& a, const ParamOrbit& b);

// b is a member of Gamma(a).
bool orbit_contains(const FieldElem& a, const FieldElem& b);

// g(x) = (x+1)/(x-1), f(x) = g(x)^2. DivisionByZero at x = 1.
FieldElem g_eval(const FieldElem& x);
FieldElem f_eval(const FieldElem& x);
Complex g_eval(const Complex& x);
Complex f_eval(const Complex& x);

// f(s) for the principal root s of lambda.
FieldElem f_sqrt(const FieldElem& lambda);
Complex f_sqrt(const Complex& lambda);

// Gamma(f(sqrt(lambda))); either root gives the same orbit.
ParamOrbit f_sqrt_orbit(const FieldElem& lambda);

// The distinct orbits Gamma(f(sqrt(l'))) for l' in Gamma(lambda), in order of
// first appearance over the members of Gamma(lambda). Members whose root
// would pass the tower cap are skipped and reported in *skipped.
std::vector<ParamOrbit> f_sqrt_targets(const FieldElem& lambda,
                                       std::vector<std::string>* skipped = nullptr);

// The parameter condition attached to (p; lambda) --H--> (q; mu) for tubular
// p and q. Parameters must be present exactly when the weight type is
// (2,2,2,2). Returns false when q is not the codomain determined by H.
bool tubular_edge_check(const WeightSeq& p, const std::optional<FieldElem>& lambda,
                        const FiniteSubgroup& h, const WeightSeq& q,
                        const std::optional<FieldElem>& mu);

// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
FieldElem j_invariant(const FieldElem& lambda);
Complex j_invariant(const Complex& lambda);

// (1 + sqrt(-3)) / 2
FieldElem omega();

// True for (2,2,2,2) up to order and weight-1 entries.
bool is_2222(const WeightSeq& p);

}  // namespace wpl
