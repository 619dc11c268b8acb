#pragma once

// Independent reference data and brute-force checks. Nothing here calls the
// library routine it is meant to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wpl/admissible_hom.hpp"
#include "wpl/coordinate_algebra.hpp"
#include "wpl/tubular_params.hpp"

namespace oracle {

using wpl::Int;

// A table row instantiated on a concrete domain. sigma[k] is the 1-based
// index of the domain generator sitting at row position k.
struct RowInstance {
  std::string family;
  std::vector<std::size_t> sigma;
  wpl::WeightSeq p_row;  // p permuted into row order
  wpl::WeightSeq q_raw;  // row codomain, weight-1 entries possibly present
  std::string kernel;    // generators in row coordinates
  std::string images;    // images in row coordinates, "d,z2+z3,z1"
};

// Rows of the domestic table that apply to p, over all index permutations.
std::vector<RowInstance> domestic_rows(const wpl::WeightSeq& p);
// Rows of the tubular table that apply to p.
std::vector<RowInstance> tubular_rows(const wpl::WeightSeq& p);

// Number of rows in the tubular table (rows with two listed kernels count once).
constexpr int kTubularRowCount = 9;

// r and the row agree after moving r to row coordinates: same kernel, and
// images equal up to a weight-preserving codomain permutation.
bool record_matches(const wpl::AdmissibleRecord& r, const RowInstance& row);

// Example data for p = (4,6,7,10).
struct ExampleCase {
  std::string kernel;
  std::vector<Int> codomain;
  std::string images;
};
std::vector<std::string> example_torsion();
std::vector<ExampleCase> example_cases();

// Normal form computed from scratch: residues l_i mod p_i, shift gathers the
// quotients.
struct RawNormal {
  std::vector<Int> residues;
  Int shift;
};
RawNormal normal_form(const std::vector<Int>& p, std::vector<Int> coeffs, Int shift);

// Graded dimension of S(p; mu) at x: every monomial of degree x is reduced
// and the rank of the results is taken over Q.
Int brute_mult(const std::vector<Int>& p, const std::vector<Int>& residues, Int shift);

// prod p_i / lcm(p_i).
Int torsion_order(const std::vector<Int>& p);

// j-invariant of the cross-ratio orbit, floating.
wpl::Complex j_numeric(const wpl::Complex& l);

// Parameter condition of a tubular table row decided through j-invariants
// in floating point. Rows are keyed by the canonical source and target types.
bool tubular_condition(const std::vector<Int>& p_sorted, const wpl::Complex& lambda,
                       const std::string& kernel_kind, const std::vector<Int>& q_sorted,
                       const wpl::Complex& mu);

wpl::FieldElem random_rational(std::mt19937_64& rng, Int num_bound = 40, Int den_bound = 12);
// Avoids 0 and 1.
wpl::FieldElem random_parameter(std::mt19937_64& rng);

// The six kernel-zero rows and the <x1-x2> example as literal formulas,
// with L standing for lambda.
struct LiteralPhi {
  std::string mu;
  std::string pi;
  std::vector<std::string> phi;
};
std::vector<LiteralPhi> literal_permutation_rows();
LiteralPhi literal_x1_x2_example();
std::string substitute(std::string text, const std::string& symbol, const std::string& value);
wpl::CompatibleHom<wpl::FieldElem> build_literal(const LiteralPhi& row, const std::string& lambda);

}  // namespace oracle
