#include "wpl/tubular_params.hpp"

#include <algorithm>

#include "wpl/admissible_hom.hpp"

namespace wpl {

namespace {

std::array<FieldElem, 6> six_maps(const FieldElem& l) {
  const FieldElem one(1);
  return {l, one / l, one - l, one / (one - l), l / (l - one), (l - one) / l};
}

void require_nondegenerate(const FieldElem& l) {
  if (l.is_zero() || l == FieldElem(1)) {
    throw Error(ErrorKind::DegenerateParameter, "parameter must avoid 0 and 1");
  }
}

void require_nondegenerate(const Complex& l) {
  if (approx_zero(l) || approx_zero(l - Complex(1))) {
    throw Error(ErrorKind::DegenerateParameter, "parameter must avoid 0 and 1");
  }
}

// Greedy tolerance matching; sizes are 6 so quadratic is fine.
bool numeric_multiset_eq(const std::array<Complex, 6>& a, const std::array<Complex, 6>& b) {
  std::array<bool, 6> used{};
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t k = 0; k < 6; ++k) {
      if (!used[k] && approx_zero(x - b[k])) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool exact_multiset_eq(const std::array<FieldElem, 6>& a, const std::array<FieldElem, 6>& b) {
  std::array<bool, 6> used{};
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t k = 0; k < 6; ++k) {
      if (!used[k] && x == b[k]) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::array<Complex, 6> approx_all(const std::array<FieldElem, 6>& m) {
  std::array<Complex, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = approx(m[k]);
  return out;
}

enum class Tubular { T2222, T333, T442, T632 };

Tubular tubular_kind(const WeightSeq& p) {
  std::vector<Int> w = canonicalize(p).weights.sorted_desc();
  if (w == std::vector<Int>{2, 2, 2, 2}) return Tubular::T2222;
  if (w == std::vector<Int>{3, 3, 3}) return Tubular::T333;
  if (w == std::vector<Int>{4, 4, 2}) return Tubular::T442;
  if (w == std::vector<Int>{6, 3, 2}) return Tubular::T632;
  throw Error(ErrorKind::NonTubular, p.to_string() + " is not a tubular weight type");
}

}  // namespace

std::vector<std::string> ParamOrbit::sorted_literals() const {
  std::vector<FieldElem> v(members.begin(), members.end());
  std::stable_sort(v.begin(), v.end(), principal_less);
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

ParamOrbit gamma(const FieldElem& lambda) {
  require_nondegenerate(lambda);
  ParamOrbit o{lambda, six_maps(lambda)};
  o.representative = *std::min_element(o.members.begin(), o.members.end(), principal_less);
  return o;
}

std::array<Complex, 6> gamma(const Complex& l) {
  require_nondegenerate(l);
  const Complex one(1);
  return {l, one / l, one - l, one / (one - l), l / (l - one), (l - one) / l};
}

bool same_orbit(const ParamOrbit& a, const ParamOrbit& b) {
  if (!numeric_multiset_eq(approx_all(a.members), approx_all(b.members))) return false;
  try {
    return exact_multiset_eq(a.members, b.members);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TowerDepthExceeded) throw;
    return true;
  }
}

bool gamma_eq(const FieldElem& a, const FieldElem& b) { return same_orbit(gamma(a), gamma(b)); }

bool gamma_eq(const Complex& a, const Complex& b) {
  return numeric_multiset_eq(gamma(a), gamma(b));
}

bool orbit_contains(const FieldElem& a, const FieldElem& b) {
  require_nondegenerate(b);
  for (const auto& m : gamma(a).members) {
    if (m == b) return true;
  }
  return false;
}

FieldElem g_eval(const FieldElem& x) {
  if (x == FieldElem(1)) throw Error(ErrorKind::DivisionByZero, "g has a pole at 1");
  return (x + FieldElem(1)) / (x - FieldElem(1));
}

FieldElem f_eval(const FieldElem& x) {
  FieldElem g = g_eval(x);
  return g * g;
}

Complex g_eval(const Complex& x) {
  if (approx_zero(x - Complex(1))) throw Error(ErrorKind::DivisionByZero, "g has a pole at 1");
  return (x + Complex(1)) / (x - Complex(1));
}

Complex f_eval(const Complex& x) {
  Complex g = g_eval(x);
  return g * g;
}

FieldElem f_sqrt(const FieldElem& lambda) {
  require_nondegenerate(lambda);
  return f_eval(sqrt(lambda));
}

Complex f_sqrt(const Complex& lambda) {
  require_nondegenerate(lambda);
  Complex s = sqrt(lambda);
  // Keep the principal branch convention of exact_field.
  if (s.real() < 0 || (approx_zero(Complex(s.real())) && s.imag() < 0)) s = -s;
  return f_eval(s);
}

ParamOrbit f_sqrt_orbit(const FieldElem& lambda) { return gamma(f_sqrt(lambda)); }

std::vector<ParamOrbit> f_sqrt_targets(const FieldElem& lambda, std::vector<std::string>* skipped) {
  std::vector<ParamOrbit> out;
  for (const auto& m : gamma(lambda).members) {
    std::optional<ParamOrbit> o;
    try {
      o = f_sqrt_orbit(m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TowerDepthExceeded) throw;
      if (skipped) skipped->push_back(m.to_string());
      continue;
    }
    bool seen = false;
    for (const auto& prev : out) {
      if (same_orbit(prev, *o)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(*o);
  }
  return out;
}

bool tubular_edge_check(const WeightSeq& p, const std::optional<FieldElem>& lambda,
                        const FiniteSubgroup& h, const WeightSeq& q,
                        const std::optional<FieldElem>& mu) {
  const Tubular tp = tubular_kind(p);
  const Tubular tq = tubular_kind(q);
  if ((tp == Tubular::T2222) != lambda.has_value()) {
    throw Error(ErrorKind::InvalidArgument, "source parameter present iff weight type is (2,2,2,2)");
  }
  if ((tq == Tubular::T2222) != mu.has_value()) {
    throw Error(ErrorKind::InvalidArgument, "target parameter present iff weight type is (2,2,2,2)");
  }
  if (h.parent() != p) throw Error(ErrorKind::MalformedSubgroup, "subgroup lives in another group");
  if (h.kind() == SubgroupKind::Other) {
    throw Error(ErrorKind::MalformedSubgroup, "kernel must be trivial, cyclic or Klein");
  }
  if (lambda) require_nondegenerate(*lambda);
  if (mu) require_nondegenerate(*mu);

  if (!derive_codomain(p, h).same_up_to_permutation(canonicalize(q).weights)) return false;

  if (tq != Tubular::T2222) return true;
  switch (tp) {
    case Tubular::T2222:
      if (h.kind() == SubgroupKind::Cyclic) {
        ParamOrbit target = gamma(*mu);
        std::vector<std::string> skipped;
        for (const auto& o : f_sqrt_targets(*lambda, &skipped)) {
          if (same_orbit(o, target)) return true;
        }
        if (skipped.empty()) return false;
        // Roots past the tower cap: decide those members in floating point.
        Complex m = approx(*mu);
        for (const auto& l : gamma(approx(*lambda))) {
          if (gamma_eq(f_sqrt(l), m)) return true;
        }
        return false;
      }
      // Trivial and Klein kernels keep the orbit.
      return gamma_eq(*mu, *lambda);
    case Tubular::T442:
      return gamma_eq(*mu, FieldElem(-1));
    case Tubular::T632:
      return gamma_eq(*mu, omega());
    case Tubular::T333:
      return false;
  }
  return false;
}

FieldElem j_invariant(const FieldElem& l) {
  require_nondegenerate(l);
  FieldElem a = l * l - l + FieldElem(1);
  FieldElem b = l * (l - FieldElem(1));
  return FieldElem(256) * a * a * a / (b * b);
}

Complex j_invariant(const Complex& l) {
  require_nondegenerate(l);
  Complex a = l * l - l + Complex(1);
  Complex b = l * (l - Complex(1));
  return Complex(256) * a * a * a / (b * b);
}

FieldElem omega() { return (FieldElem(1) + sqrt(FieldElem(-3))) / FieldElem(2); }

bool is_2222(const WeightSeq& p) {
  return canonicalize(p).weights.sorted_desc() == std::vector<Int>{2, 2, 2, 2};
}

}  // namespace wpl
