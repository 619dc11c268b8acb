#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wpl/coordinate_algebra.hpp"

using namespace wpl;

namespace {

using Poly = GradedPoly<FieldElem>;

const WeightSeq k2222{2, 2, 2, 2};

Algebra<FieldElem> alg2222(const FieldElem& l) { return make_algebra<FieldElem>(k2222, {FieldElem(1), l}); }

bool all_checks(const CompatibleHom<FieldElem>& ch, const Algebra<FieldElem>& dom) {
  return check_compatible(ch) && check_relations(ch, dom) && check_surjective_small_degree(ch);
}

// The x1-x2 example with the images overridden.
CompatibleHom<FieldElem> example_with(const std::string& lambda, std::size_t slot, const std::string& image) {
  oracle::LiteralPhi row = oracle::literal_x1_x2_example();
  row.phi[slot] = image;
  return oracle::build_literal(row, lambda);
}

}  // namespace

TEST(GradedDim, Examples) {
  WeightSeq p{2, 3, 4};
  EXPECT_EQ(graded_dim(p, canonical_c(p)), 2);
  EXPECT_EQ(graded_dim(p, dualizing_omega(p)), 0);
  EXPECT_EQ(graded_dim(p, generator(p, 1) + generator(p, 2)), 1);
}

TEST(MonomialBasis, Examples) {
  auto b = monomial_basis(k2222, canonical_c(k2222));
  EXPECT_EQ(b, (std::vector<Exponents>{{2, 0, 0, 0}, {0, 2, 0, 0}}));
  EXPECT_TRUE(monomial_basis(k2222, dualizing_omega(k2222)).empty());
  EXPECT_EQ(monomial_basis(k2222, generator(k2222, 1)), (std::vector<Exponents>{{1, 0, 0, 0}}));
}

TEST(Reduce, Examples) {
  FieldElem mu(7);
  auto a = alg2222(mu);
  auto r3 = reduce(Poly::monomial(k2222, {0, 0, 2, 0}, FieldElem(1)), a);
  EXPECT_EQ(r3.to_string(), parse_poly(k2222, "z2^2-z1^2").to_string());
  auto r4 = reduce(Poly::monomial(k2222, {0, 0, 0, 2}, FieldElem(1)), a);
  EXPECT_EQ(r4.to_string(), parse_poly(k2222, "z2^2-7*z1^2").to_string());
  auto m = Poly::monomial(k2222, {1, 1, 0, 0}, FieldElem(1));
  EXPECT_EQ(reduce(m, a).to_string(), m.to_string());
}

TEST(MakeAlgebra, RejectsDegenerateParameters) {
  for (const FieldElem& bad : {FieldElem(0), FieldElem(1)}) {
    try {
      alg2222(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateParameter);
    }
  }
}

TEST(CheckCompatible, Examples) {
  const std::string l = "3";
  EXPECT_TRUE(check_compatible(oracle::build_literal(oracle::literal_x1_x2_example(), l)));
  EXPECT_FALSE(check_compatible(example_with(l, 2, "z1*z3")));
  EXPECT_TRUE(check_compatible(identity_phi(alg2222(FieldElem(3)))));
}

TEST(CheckRelations, Examples) {
  FieldElem l(3);
  auto dom = alg2222(l);
  EXPECT_TRUE(check_relations(oracle::build_literal(oracle::literal_x1_x2_example(), "3"), dom));
  auto rows = oracle::literal_permutation_rows();
  EXPECT_TRUE(check_relations(oracle::build_literal(rows[1], "3"), dom));
  auto weakened = example_with("3", 2, "sqrt(((sqrt(3)+1)/(sqrt(3)-1)))*z1*z2");
  EXPECT_TRUE(check_compatible(weakened));
  EXPECT_FALSE(check_relations(weakened, dom));
}

TEST(CheckSurjective, Examples) {
  EXPECT_TRUE(check_surjective_small_degree(oracle::build_literal(oracle::literal_x1_x2_example(), "3")));
  auto rank1 = example_with("3", 1, "-((sqrt(3)+1)/(sqrt(3)-1))*z1^2+z2^2");
  EXPECT_FALSE(check_surjective_small_degree(rank1));
  // A trivial kernel counts as cyclic of order 1.
  EXPECT_TRUE(check_surjective_small_degree(identity_phi(alg2222(FieldElem(3)))));
}

TEST(ConstructCyclicPhi, NN) {
  WeightSeq p{3, 3};
  auto dom = make_algebra<FieldElem>(p, {});
  auto ch = construct_cyclic_phi(dom, FiniteSubgroup::cyclic(p, 1, 2, 3));
  EXPECT_EQ(canonicalize(ch.codomain.q).weights.size(), 0u);
  EXPECT_EQ(ch.images[0].to_string(), parse_poly(ch.codomain.q, "z1+z2").to_string());
  EXPECT_EQ(ch.images[1].to_string(), parse_poly(ch.codomain.q, "z1-z2").to_string());
  EXPECT_TRUE(all_checks(ch, dom));
}

TEST(ConstructCyclicPhi, Example2222) {
  FieldElem l(3);
  auto dom = alg2222(l);
  auto ch = construct_cyclic_phi(dom, FiniteSubgroup::cyclic(k2222, 1, 2, 2));
  FieldElem s = sqrt(l);
  FieldElem nu = (s + FieldElem(1)) / (s - FieldElem(1));
  ASSERT_EQ(ch.codomain.mu.size(), 2u);
  EXPECT_EQ(ch.codomain.mu[1], nu * nu);
  EXPECT_TRUE(all_checks(ch, dom));
}

TEST(ConstructCyclicPhi, GenericBranch) {
  for (Int p3 = 2; p3 <= 4; ++p3) {
    WeightSeq p{2, 2, 2 * p3};
    auto dom = make_algebra<FieldElem>(p, {FieldElem(1)});
    auto ch = construct_cyclic_phi(dom, parse_subgroup(p, p3 == 1 ? "x2-x3" : "x2-" + std::to_string(p3) + "x3"));
    EXPECT_EQ(canonicalize(ch.pi.codomain()).weights.sorted_desc(), (WeightSeq{2, 2, p3}).sorted_desc());
    EXPECT_TRUE(all_checks(ch, dom)) << p.to_string();
  }
}

TEST(ConstructCyclicPhi, NumericRootsBeyondSquareRoots) {
  // (6,6,3,3; l): C3 kernel on the first pair needs cube roots of l.
  WeightSeq p{6, 6, 3, 3};
  auto dom = make_algebra<FieldElem>(p, {FieldElem(1), FieldElem(5)});
  PhiResult r = construct_cyclic_phi_auto(dom, FiniteSubgroup::cyclic(p, 1, 2, 3));
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(check_compatible(r.numeric_hom));
  EXPECT_TRUE(check_relations(r.numeric_hom, r.numeric_domain));
  EXPECT_TRUE(check_surjective_small_degree(r.numeric_hom));
}

TEST(PermuteParameters, Examples) {
  FieldElem l = FieldElem::from_rational(-5, 7);
  auto dom = alg2222(l);
  auto s12 = permute_parameters(dom, 1, 2);
  EXPECT_EQ(s12.codomain.mu[1], l.inverse());
  auto s34 = permute_parameters(dom, 3, 4);
  EXPECT_EQ(s34.codomain.mu[1], l.inverse());
  auto s23 = permute_parameters(dom, 2, 3);
  for (const auto& ch : {s12, s34, s23}) {
    EXPECT_TRUE(check_compatible(ch));
    EXPECT_TRUE(check_relations(ch, dom));
  }
  // Case (3) with i = 3: mu~_4 = l - 1, mu~_3 = -1, renormalized to (1 - l).
  EXPECT_EQ(s23.codomain.mu[1], FieldElem(1) - l);
}

TEST(ParsePoly, RoundTrip) {
  for (const char* s : {"2*sqrt(2)*z1^2-z3^2", "(1-sqrt(-3))/2*z1^2+z2^2", "z4*z3"}) {
    Poly f = parse_poly(k2222, s);
    EXPECT_EQ(parse_poly(k2222, f.to_string()).to_string(), f.to_string()) << s;
  }
  EXPECT_THROW(parse_poly(k2222, "z1+z1^2"), Error);  // mixed degrees
}

// Properties.

TEST(CoordinateAlgebraProperty, BasisSizeIsMultAndMatchesRank) {
  std::mt19937_64 rng(501);
  for (int k = 0; k < 300; ++k) {
    std::vector<Int> pv(rng() % 5);
    for (auto& v : pv) v = 2 + static_cast<Int>(rng() % 5);
    WeightSeq p(pv);
    std::vector<Int> res(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) res[i] = static_cast<Int>(rng() % static_cast<std::uint64_t>(pv[i]));
    Int shift = static_cast<Int>(rng() % 7) - 2;
    GroupElement x(p, res, shift);
    auto basis = monomial_basis(p, x);
    EXPECT_EQ(static_cast<Int>(basis.size()), mult(x));
    EXPECT_EQ(graded_dim(p, x), mult(x));
    for (const auto& e : basis) EXPECT_EQ(monomial_degree(pad_weights(p), e).shift(), x.shift());
    if (shift <= 3) EXPECT_EQ(oracle::brute_mult(pv, res, shift), mult(x)) << p.to_string();
  }
}

TEST(CoordinateAlgebraProperty, ReduceIsIdempotentLinearAndLandsInBasis) {
  std::mt19937_64 rng(502);
  WeightSeq q{2, 3, 3, 4};
  auto a = make_algebra<FieldElem>(q, {FieldElem(1), FieldElem(-2)});
  for (int k = 0; k < 100; ++k) {
    // Monomials of the common degree 12c: exponent e with sum e_i * 12/q_i = 12*l.
    Int l = 1 + static_cast<Int>(rng() % 2);
    std::vector<Exponents> mons;
    for (Int e1 = 0; e1 <= 2 * l; ++e1)
      for (Int e2 = 0; e2 <= 3 * l; ++e2)
        for (Int e3 = 0; e3 <= 3 * l; ++e3)
          for (Int e4 = 0; e4 <= 4 * l; ++e4)
            if (6 * e1 + 4 * e2 + 4 * e3 + 3 * e4 == 12 * l) mons.push_back({e1, e2, e3, e4});
    const Exponents& m1 = mons[rng() % mons.size()];
    // Equal delta-degree is not enough; keep monomials of the same degree in L.
    std::vector<Exponents> same;
    for (const auto& m : mons) {
      if (monomial_degree(q, m) == monomial_degree(q, m1)) same.push_back(m);
    }
    const Exponents& m2 = same[rng() % same.size()];
    FieldElem c1 = oracle::random_rational(rng), c2 = oracle::random_rational(rng);
    Poly f = Poly::monomial(q, m1, c1);
    Poly g = Poly::monomial(q, m2, c2);
    Poly sum = f;
    sum += g;
    Poly rf = reduce(f, a), rg = reduce(g, a), rs = reduce(sum, a);
    EXPECT_EQ(reduce(rf, a).to_string(), rf.to_string());
    Poly lin = rf;
    lin += rg;
    EXPECT_EQ(rs.to_string(), lin.to_string());
    EXPECT_EQ(rf.degree(), f.degree());
    auto basis = monomial_basis(q, f.degree());
    for (const auto& [e, c] : rs.terms()) {
      EXPECT_NE(std::find(basis.begin(), basis.end(), e), basis.end());
    }
  }
}

TEST(CoordinateAlgebraProperty, PermutationRowsAndExampleForRandomLambda) {
  std::mt19937_64 rng(503);
  for (int k = 0; k < 20; ++k) {
    FieldElem l = oracle::random_parameter(rng);
    auto dom = alg2222(l);
    std::string lit = "(" + l.to_string() + ")";
    for (const auto& row : oracle::literal_permutation_rows()) {
      auto ch = oracle::build_literal(row, lit);
      EXPECT_TRUE(check_compatible(ch));
      EXPECT_TRUE(check_relations(ch, dom)) << row.mu << " at " << lit;
    }
    for (const auto& row : permutation_rows_2222(l)) {
      EXPECT_TRUE(check_compatible(row.hom));
      EXPECT_TRUE(check_relations(row.hom, dom)) << row.label;
    }
    auto ex = oracle::build_literal(oracle::literal_x1_x2_example(), lit);
    EXPECT_TRUE(all_checks(ex, dom));
    EXPECT_TRUE(all_checks(phi_2222_x1_x2(l), dom));
    EXPECT_TRUE(is_admissible_window(ex.pi));
  }
}

TEST(CoordinateAlgebraProperty, ConstructedPhiAreCertified) {
  std::mt19937_64 rng(504);
  for (int k = 0; k < 15; ++k) {
    FieldElem l = oracle::random_parameter(rng);
    auto dom = alg2222(l);
    for (const auto& h : enumerate_kernel_candidates(k2222)) {
      if (h.kind() != SubgroupKind::Cyclic) continue;
      auto ch = construct_cyclic_phi(dom, h);
      EXPECT_TRUE(all_checks(ch, dom)) << h.spec_string();
      EXPECT_TRUE(is_admissible_window(ch.pi));
    }
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = i + 1; j <= 4; ++j) {
        auto ch = permute_parameters(dom, i, j);
        EXPECT_TRUE(check_compatible(ch));
        EXPECT_TRUE(check_relations(ch, dom)) << i << j;
      }
    }
  }
}
