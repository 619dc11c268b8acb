#include "wpl/coordinate_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace wpl {

bool coeff_is_zero(const FieldElem& x) { return x.is_zero(); }
bool coeff_is_zero(const Complex& x) { return approx_zero(x); }

std::string coeff_to_string(const FieldElem& x) { return x.to_string(); }
std::string coeff_to_string(const Complex& x) { return to_string(x, 20); }

template <>
FieldElem coeff_from<FieldElem>(const FieldElem& x) {
  return x;
}
template <>
Complex coeff_from<Complex>(const FieldElem& x) {
  return approx(x);
}

namespace {

bool is_power_of_two(Int n) { return n > 0 && (n & (n - 1)) == 0; }

// Positive rational n-th root of a positive rational, if it exists.
std::optional<Rational> rational_root(const Rational& x, Int n) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt rn, rd;
  const auto k = static_cast<unsigned long>(n);
  if (mpz_root(rn.backend().data(), num.backend().data(), k) == 0) return std::nullopt;
  if (mpz_root(rd.backend().data(), den.backend().data(), k) == 0) return std::nullopt;
  return Rational(rn, rd);
}

bool less_principal(const FieldElem& a, const FieldElem& b) { return principal_less(a, b); }

bool less_principal(const Complex& a, const Complex& b) {
  const Real& tol = float_tolerance();
  if (a.real() < b.real() - tol) return true;
  if (a.real() > b.real() + tol) return false;
  return a.imag() < b.imag() - tol;
}

}  // namespace

template <>
FieldElem nth_root<FieldElem>(const FieldElem& x, Int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  if (x.is_rational() && x.rational_value() > 0) {
    if (auto r = rational_root(x.rational_value(), n)) return FieldElem(*r);
  }
  if (!is_power_of_two(n)) {
    throw Error(ErrorKind::NotExact, std::to_string(n) + "-th root outside the quadratic tower");
  }
  FieldElem r = x;
  for (Int m = n; m > 1; m /= 2) r = sqrt(r);
  return r;
}

template <>
Complex nth_root<Complex>(const Complex& x, Int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  if (n == 1 || approx_zero(x)) return x;
  return exp(log(x) / Complex(n));
}

template <>
FieldElem root_of_unity<FieldElem>(Int n, Int k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order");
  if (n == 1) return FieldElem(1);
  if (!is_power_of_two(n)) {
    throw Error(ErrorKind::NotExact, "primitive " + std::to_string(n) + "-th root of unity");
  }
  FieldElem zeta = nth_root<FieldElem>(FieldElem(-1), n / 2);
  return pow(zeta, mod_floor(k, n));
}

template <>
Complex root_of_unity<Complex>(Int n, Int k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order");
  const Real pi = boost::math::constants::pi<Real>();
  return exp(Complex(Real(0), 2 * pi * Real(mod_floor(k, n)) / Real(n)));
}

WeightSeq pad_weights(const WeightSeq& q) {
  if (q.size() >= 2) return q;
  std::vector<Int> w = q.weights();
  while (w.size() < 2) w.push_back(1);
  return WeightSeq(std::move(w));
}

template <class C>
Algebra<C> make_algebra(const WeightSeq& q, std::vector<C> mu) {
  WeightSeq qp = pad_weights(q);
  const std::size_t s = qp.size();
  if (mu.size() != s - 2) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(s - 2) + " parameters for " +
                                               qp.to_string());
  }
  if (!mu.empty() && !coeff_is_zero(C(mu[0] - C(1)))) {
    throw Error(ErrorKind::DegenerateParameter, "third parameter must be normalized to 1");
  }
  for (std::size_t a = 0; a < mu.size(); ++a) {
    if (coeff_is_zero(mu[a])) throw Error(ErrorKind::DegenerateParameter, "parameter 0");
    for (std::size_t b = a + 1; b < mu.size(); ++b) {
      if (coeff_is_zero(C(mu[a] - mu[b]))) {
        throw Error(ErrorKind::DegenerateParameter, "parameters must be pairwise distinct");
      }
    }
  }
  return Algebra<C>{qp, std::move(mu)};
}

GroupElement monomial_degree(const WeightSeq& q, const Exponents& e) {
  return element_from_raw(q, e, 0);
}

template <class C>
GradedPoly<C>::GradedPoly(WeightSeq q, GroupElement degree)
    : q_(std::move(q)), degree_(std::move(degree)) {
  if (degree_.parent() != q_) throw Error(ErrorKind::ParentMismatch, "polynomial degree");
}

template <class C>
GradedPoly<C> GradedPoly<C>::monomial(const WeightSeq& q, const Exponents& e, const C& coeff) {
  GradedPoly out(q, monomial_degree(q, e));
  out.add_term(e, coeff);
  return out;
}

template <class C>
void GradedPoly<C>::add_term(const Exponents& e, const C& c) {
  if (coeff_is_zero(c)) return;
  if (monomial_degree(q_, e) != degree_) {
    throw Error(ErrorKind::InvalidArgument, "monomial degree differs from " + degree_.to_string('z', 'd'));
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (coeff_is_zero(it->second)) terms_.erase(it);
}

template <class C>
GradedPoly<C>& GradedPoly<C>::operator+=(const GradedPoly& o) {
  if (o.q_ != q_) throw Error(ErrorKind::ParentMismatch, "polynomial algebras differ");
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class C>
GradedPoly<C>& GradedPoly<C>::operator-=(const GradedPoly& o) {
  return *this += o.scaled(C(-1));
}

template <class C>
GradedPoly<C> GradedPoly<C>::scaled(const C& c) const {
  GradedPoly out(q_, degree_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

namespace {

bool plain_rational(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  return s.find_first_of("+-*()", start) == std::string::npos &&
         s.find("sqrt") == std::string::npos;
}

}  // namespace

template <class C>
std::string GradedPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = coeff_to_string(c);
    bool negative = false;
    if (plain_rational(cs) && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (!plain_rational(cs)) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out;
}

template <class C>
GradedPoly<C> operator*(const GradedPoly<C>& a, const GradedPoly<C>& b) {
  if (a.weights() != b.weights()) throw Error(ErrorKind::ParentMismatch, "polynomial algebras differ");
  GradedPoly<C> out(a.weights(), a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

template <class C>
GradedPoly<C> pow(const GradedPoly<C>& a, Int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
  GradedPoly<C> out =
      GradedPoly<C>::monomial(a.weights(), Exponents(a.weights().size(), 0), C(1));
  for (Int i = 0; i < k; ++i) out = out * a;
  if (out.is_zero()) return GradedPoly<C>(a.weights(), scalar_mul(k, a.degree()));
  return out;
}

template <class C>
GradedPoly<C> reduce(const GradedPoly<C>& f, const Algebra<C>& a) {
  const WeightSeq& q = a.q;
  if (f.weights() != q) throw Error(ErrorKind::ParentMismatch, "reduce: algebra differs");
  GradedPoly<C> out(q, f.degree());
  std::map<Exponents, C> pending = f.terms();
  while (!pending.empty()) {
    auto it = pending.begin();
    Exponents e = it->first;
    C c = it->second;
    pending.erase(it);
    if (coeff_is_zero(c)) continue;
    std::size_t i = 2;
    while (i < q.size() && e[i] < q[i]) ++i;
    if (i == q.size()) {
      out.add_term(e, c);
      continue;
    }
    e[i] -= q[i];
    Exponents e2 = e;
    e2[1] += q[1];
    Exponents e1 = e;
    e1[0] += q[0];
    auto push = [&](const Exponents& key, const C& v) {
      auto [pos, inserted] = pending.emplace(key, v);
      if (!inserted) pos->second += v;
    };
    push(e2, c);
    push(e1, C(-(c * a.mu[i - 2])));
  }
  return out;
}

Int graded_dim(const WeightSeq& p, const GroupElement& x) {
  if (x.parent() != p) throw Error(ErrorKind::ParentMismatch, "graded_dim");
  return mult(x);
}

std::vector<Exponents> monomial_basis(const WeightSeq& p, const GroupElement& x) {
  if (x.parent() != p) throw Error(ErrorKind::ParentMismatch, "monomial_basis");
  WeightSeq P = pad_weights(p);
  std::vector<Exponents> out;
  const Int l = x.shift();
  for (Int a = l; a >= 0; --a) {
    Exponents e(P.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) e[i] = x.residues()[i];
    e[0] += a * P[0];
    e[1] += (l - a) * P[1];
    out.push_back(std::move(e));
  }
  return out;
}

template <class C>
bool check_compatible(const CompatibleHom<C>& ch) {
  const WeightSeq& p = ch.pi.domain();
  const WeightSeq& q = ch.codomain.q;
  if (ch.pi.codomain() != q || ch.images.size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const GradedPoly<C>& f = ch.images[i];
    if (f.weights() != q) return false;
    const GroupElement target = ch.pi.image(i + 1);
    if (f.degree() != target) return false;
    for (const auto& term : f.terms()) {
      if (monomial_degree(q, term.first) != target) return false;
    }
  }
  return true;
}

template <class C>
bool check_relations(const CompatibleHom<C>& ch, const Algebra<C>& domain) {
  const WeightSeq& p = ch.pi.domain();
  if (pad_weights(p) != domain.q) {
    throw Error(ErrorKind::DomainMismatch, "parameters belong to " + domain.q.to_string());
  }
  if (p.size() < 3) return true;
  GradedPoly<C> x1 = pow(ch.images[0], p[0]);
  GradedPoly<C> x2 = pow(ch.images[1], p[1]);
  for (std::size_t i = 2; i < p.size(); ++i) {
    GradedPoly<C> r = pow(ch.images[i], p[i]);
    r -= x2;
    r += x1.scaled(domain.mu[i - 2]);
    if (!reduce(r, ch.codomain).is_zero()) return false;
  }
  return true;
}

template <class C>
GradedPoly<C> apply_phi(const CompatibleHom<C>& ch, const Exponents& e) {
  const WeightSeq& q = ch.codomain.q;
  if (e.size() != ch.images.size()) throw Error(ErrorKind::LengthMismatch, "domain monomial");
  GradedPoly<C> out = GradedPoly<C>::monomial(q, Exponents(q.size(), 0), C(1));
  GroupElement deg = zero_element(q);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out = out * pow(ch.images[i], e[i]);
    deg = deg + scalar_mul(e[i], ch.images[i].degree());
  }
  if (out.is_zero()) return GradedPoly<C>(q, deg);
  return reduce(out, ch.codomain);
}

namespace {

// Rank by Gaussian elimination with the backend's zero test.
template <class C>
std::size_t rank_of(std::vector<std::vector<C>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && coeff_is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || coeff_is_zero(rows[r][col])) continue;
      C factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

template <class C>
bool check_surjective_small_degree(const CompatibleHom<C>& ch) {
  FiniteSubgroup K = kernel(ch.pi);
  Int factor = 1;
  switch (K.kind()) {
    case SubgroupKind::Trivial:
    case SubgroupKind::Cyclic:
      factor = 1;
      break;
    case SubgroupKind::Klein:
      factor = 2;
      break;
    case SubgroupKind::Other:
      throw Error(ErrorKind::PreconditionViolation, "kernel is neither cyclic nor Klein type");
  }
  const WeightSeq& p = ch.pi.domain();
  const WeightSeq& q = ch.codomain.q;
  const GroupElement target = scalar_mul(factor, canonical_c(q));
  std::vector<Exponents> basis = monomial_basis(q, target);
  std::vector<std::vector<C>> rows;
  for (const auto& x : preimages(ch.pi, target)) {
    for (const auto& e : monomial_basis(p, x)) {
      GradedPoly<C> img = apply_phi(ch, e);
      std::vector<C> row(basis.size(), C(0));
      for (const auto& [m, c] : img.terms()) {
        auto pos = std::find(basis.begin(), basis.end(), m);
        if (pos == basis.end()) return false;
        row[static_cast<std::size_t>(pos - basis.begin())] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_of(std::move(rows)) == basis.size();
}

template <class C>
CompatibleHom<C> compose(const CompatibleHom<C>& ch2, const CompatibleHom<C>& ch1) {
  if (ch1.codomain.q != ch2.pi.domain()) {
    throw Error(ErrorKind::DomainMismatch, "phi composition: " + ch1.codomain.q.to_string() +
                                               " vs " + ch2.pi.domain().to_string());
  }
  StringHom pi = compose(ch2.pi, ch1.pi);
  std::vector<GradedPoly<C>> images;
  for (const auto& f : ch1.images) {
    GradedPoly<C> g(ch2.codomain.q, eval(ch2.pi, f.degree()));
    for (const auto& [e, c] : f.terms()) g += apply_phi(ch2, e).scaled(c);
    images.push_back(std::move(g));
  }
  return CompatibleHom<C>{pi, ch2.codomain, std::move(images)};
}

namespace {

template <class C>
GradedPoly<C> var(const WeightSeq& q, std::size_t i, const C& coeff = C(1)) {
  Exponents e(q.size(), 0);
  e[i - 1] = 1;
  return GradedPoly<C>::monomial(q, e, coeff);
}

template <class C>
GradedPoly<C> var_product(const WeightSeq& q, const std::vector<std::size_t>& idx,
                          const C& coeff = C(1)) {
  Exponents e(q.size(), 0);
  for (std::size_t i : idx) e[i - 1] += 1;
  return GradedPoly<C>::monomial(q, e, coeff);
}

template <class C>
C sqrt_c(const C& x) {
  return nth_root<C>(x, 2);
}

}  // namespace

template <class C>
CompatibleHom<C> identity_phi(const Algebra<C>& a) {
  std::vector<GradedPoly<C>> images;
  for (std::size_t i = 1; i <= a.q.size(); ++i) images.push_back(var<C>(a.q, i));
  return CompatibleHom<C>{identity_hom(a.q), a, std::move(images)};
}

template <class C>
CompatibleHom<C> permute_parameters(const Algebra<C>& domain, std::size_t i, std::size_t j) {
  const WeightSeq& p = domain.q;
  const std::size_t t = p.size();
  if (t < 3) throw Error(ErrorKind::PreconditionViolation, "transpositions need t >= 3");
  if (!(1 <= i && i < j && j <= t)) {
    throw Error(ErrorKind::IndexOutOfRange, "transposition needs 1 <= i < j <= t");
  }
  std::vector<Int> w = p.weights();
  std::swap(w[i - 1], w[j - 1]);
  WeightSeq q(w);
  auto lam = [&](std::size_t k) { return domain.mu[k - 3]; };

  // sigma swaps i and j; coeff[k] scales the image of x_k.
  std::vector<std::size_t> sigma(t + 1);
  for (std::size_t k = 1; k <= t; ++k) sigma[k] = k;
  std::swap(sigma[i], sigma[j]);
  std::vector<C> coeff(t + 1, C(1));
  std::vector<C> mu_tilde(t + 1, C(0));
  for (std::size_t k = 3; k <= t; ++k) mu_tilde[k] = lam(k);

  if (i >= 3) {
    mu_tilde[i] = lam(j);
    mu_tilde[j] = lam(i);
  } else if (i == 1 && j == 2) {
    for (std::size_t k = 3; k <= t; ++k) {
      mu_tilde[k] = C(1) / lam(k);
      coeff[k] = nth_root<C>(C(-lam(k)), p[k - 1]);
    }
  } else if (i == 2) {
    const std::size_t m = j;
    for (std::size_t k = 3; k <= t; ++k) mu_tilde[k] = (k == m) ? C(-lam(m)) : C(lam(k) - lam(m));
  } else {
    const std::size_t m = j;
    const C lm = lam(m);
    coeff[1] = C(1) / nth_root<C>(lm, p[0]);
    coeff[m] = nth_root<C>(lm, p[m - 1]);
    for (std::size_t k = 3; k <= t; ++k) {
      if (k == m) continue;
      mu_tilde[k] = lam(k) * lm / (lam(k) - lm);
      coeff[k] = nth_root<C>(C((lm - lam(k)) / lm), p[k - 1]);
    }
  }
  // Renormalize so that the third parameter is 1, rescaling z1.
  const C r = mu_tilde[3];
  std::vector<C> mu;
  for (std::size_t k = 3; k <= t; ++k) mu.push_back(mu_tilde[k] / r);
  const C z1_scale = C(1) / nth_root<C>(r, q[0]);
  Algebra<C> codomain = make_algebra<C>(q, std::move(mu));

  std::vector<GroupElement> pi_images;
  std::vector<GradedPoly<C>> images;
  for (std::size_t k = 1; k <= t; ++k) {
    const std::size_t target = sigma[k];
    C c = coeff[k];
    if (target == 1) c *= z1_scale;
    pi_images.push_back(generator(q, target));
    images.push_back(var<C>(q, target, c));
  }
  StringHom pi(p, q, std::move(pi_images), canonical_c(q));
  return CompatibleHom<C>{pi, codomain, std::move(images)};
}

namespace {

template <class C>
CompatibleHom<C> phi_2222_example(const Algebra<C>& domain) {
  const WeightSeq& p = domain.q;
  const C lambda = domain.mu[1];
  const C s = sqrt_c(lambda);
  const C nu = (s + C(1)) / (s - C(1));
  Algebra<C> codomain = make_algebra<C>(p, {C(1), C(nu * nu)});
  StringHom pi = canonical_hom(p, FiniteSubgroup::cyclic(p, 1, 2, 2));
  std::vector<GradedPoly<C>> images;
  GradedPoly<C> a = var_product<C>(p, {1, 1}, C(-nu));
  a += var_product<C>(p, {2, 2});
  GradedPoly<C> b = var_product<C>(p, {1, 1}, nu);
  b += var_product<C>(p, {2, 2});
  images.push_back(a);
  images.push_back(b);
  images.push_back(var_product<C>(p, {1, 2}, C(C(2) * sqrt_c(nu))));
  images.push_back(var_product<C>(p, {3, 4}, sqrt_c(C(C(1) - lambda))));
  return CompatibleHom<C>{pi, codomain, std::move(images)};
}

// Kernel <(p1/n)x1 - (p2/n)x2>, t >= 3: x1 -> z_{1_1}, x2 -> z_{2_1},
// x_i -> prod_j z_{i_j} with mu_{i_j} the n-th roots of lambda_i.
template <class C>
CompatibleHom<C> phi_generic(const Algebra<C>& domain, const FiniteSubgroup& h) {
  const WeightSeq& p = domain.q;
  const Int n = h.n();
  const std::size_t t = p.size();
  StringHom pi = canonical_hom_raw(p, h);
  const WeightSeq& q = pi.codomain();
  std::vector<C> mu;
  for (std::size_t i = 3; i <= t; ++i) {
    const C r = nth_root<C>(domain.mu[i - 3], n);
    std::vector<C> roots;
    for (Int k = 0; k < n; ++k) roots.push_back(r * root_of_unity<C>(n, k));
    std::sort(roots.begin(), roots.end(),
              [](const C& a, const C& b) { return less_principal(a, b); });
    if (i == 3) {
      auto one = std::find_if(roots.begin(), roots.end(),
                              [](const C& x) { return coeff_is_zero(C(x - C(1))); });
      std::rotate(roots.begin(), one, one + 1);
    }
    mu.insert(mu.end(), roots.begin(), roots.end());
  }
  Algebra<C> codomain = make_algebra<C>(q, std::move(mu));
  std::vector<GradedPoly<C>> images;
  images.push_back(var<C>(q, 1));
  images.push_back(var<C>(q, 2));
  std::size_t next = 3;
  for (std::size_t i = 3; i <= t; ++i) {
    std::vector<std::size_t> idx;
    for (Int k = 0; k < n; ++k) idx.push_back(next++);
    images.push_back(var_product<C>(q, idx));
  }
  return CompatibleHom<C>{pi, codomain, std::move(images)};
}

template <class C>
CompatibleHom<C> phi_rank_two(const Algebra<C>& domain, const FiniteSubgroup& h) {
  StringHom pi = canonical_hom_raw(domain.q, h);
  const WeightSeq& q = pi.codomain();
  Algebra<C> codomain = make_algebra<C>(q, {});
  std::vector<GradedPoly<C>> images;
  if (q[0] == 1 && q[1] == 1) {
    GradedPoly<C> a = var<C>(q, 1);
    a += var<C>(q, 2);
    GradedPoly<C> b = var<C>(q, 1);
    b -= var<C>(q, 2);
    images.push_back(a);
    images.push_back(b);
  } else {
    images.push_back(var<C>(q, 1));
    images.push_back(var<C>(q, 2));
  }
  return CompatibleHom<C>{pi, codomain, std::move(images)};
}

}  // namespace

template <class C>
CompatibleHom<C> construct_cyclic_phi(const Algebra<C>& domain, const FiniteSubgroup& h) {
  if (h.kind() != SubgroupKind::Cyclic) {
    throw Error(ErrorKind::PreconditionViolation, "construct_cyclic_phi needs a cyclic kernel");
  }
  if (h.parent() != domain.q) throw Error(ErrorKind::ParentMismatch, "kernel parent");
  const WeightSeq& p = domain.q;
  if (p.size() == 2) return phi_rank_two(domain, h);
  if (h.i() == 1 && h.j() == 2) {
    if (p == WeightSeq{2, 2, 2, 2}) return phi_2222_example(domain);
    return phi_generic(domain, h);
  }
  // Move the kernel indices to positions 1 and 2 with as few transpositions
  // as possible.
  CompatibleHom<C> moved = identity_phi(domain);
  const std::size_t a = h.i();
  const std::size_t b = h.j();
  auto apply = [&](std::size_t x, std::size_t y) {
    moved = compose(permute_parameters(moved.codomain, x, y), moved);
  };
  if (a == 1) {
    apply(2, b);
  } else if (a == 2) {
    apply(1, b);
  } else {
    apply(1, a);
    apply(2, b);
  }
  const WeightSeq& r = moved.codomain.q;
  CompatibleHom<C> rest = construct_cyclic_phi(moved.codomain, FiniteSubgroup::cyclic(r, 1, 2, h.n()));
  return compose(rest, moved);
}

Algebra<Complex> to_numeric(const Algebra<FieldElem>& a) {
  std::vector<Complex> mu;
  for (const auto& m : a.mu) mu.push_back(approx(m));
  return Algebra<Complex>{a.q, std::move(mu)};
}

template <>
CompatibleHom<Complex> to_numeric<Complex>(const CompatibleHom<FieldElem>& ch) {
  std::vector<GradedPoly<Complex>> images;
  for (const auto& f : ch.images) {
    GradedPoly<Complex> g(f.weights(), f.degree());
    for (const auto& [e, c] : f.terms()) g.add_term(e, approx(c));
    images.push_back(std::move(g));
  }
  return CompatibleHom<Complex>{ch.pi, to_numeric(ch.codomain), std::move(images)};
}

PhiResult construct_cyclic_phi_auto(const Algebra<FieldElem>& domain, const FiniteSubgroup& h) {
  Algebra<Complex> nd = to_numeric(domain);
  try {
    CompatibleHom<FieldElem> ex = construct_cyclic_phi(domain, h);
    CompatibleHom<Complex> num = to_numeric<Complex>(ex);
    return PhiResult{true, std::move(ex), std::move(num), std::move(nd)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotExact && e.kind() != ErrorKind::TowerDepthExceeded) throw;
  }
  CompatibleHom<Complex> num = construct_cyclic_phi(nd, h);
  return PhiResult{false, std::nullopt, std::move(num), std::move(nd)};
}

std::vector<PermutationRow> permutation_rows_2222(const FieldElem& lambda) {
  const WeightSeq p{2, 2, 2, 2};
  const FieldElem one(1);
  auto row = [&](const std::string& label, const FieldElem& mu, std::vector<std::size_t> target,
                 std::vector<FieldElem> coeffs) {
    Algebra<FieldElem> codomain = make_algebra<FieldElem>(p, {one, mu});
    std::vector<GroupElement> pi_images;
    std::vector<GradedPoly<FieldElem>> images;
    for (std::size_t k = 0; k < 4; ++k) {
      pi_images.push_back(generator(p, target[k]));
      images.push_back(var<FieldElem>(p, target[k], coeffs[k]));
    }
    StringHom pi(p, p, std::move(pi_images), canonical_c(p));
    return PermutationRow{label, mu, CompatibleHom<FieldElem>{pi, codomain, std::move(images)}};
  };
  const FieldElem& l = lambda;
  std::vector<PermutationRow> rows;
  rows.push_back(row("lambda", l, {1, 2, 3, 4}, {one, one, one, one}));
  rows.push_back(row("1/lambda", one / l, {2, 1, 3, 4}, {one, one, sqrt(FieldElem(-1)), sqrt(-l)}));
  rows.push_back(row("1-lambda", one - l, {4, 2, 3, 1},
                     {one, sqrt(l), sqrt(l - one), sqrt(l * (one - l))}));
  rows.push_back(row("1/(1-lambda)", one / (one - l), {2, 3, 1, 4},
                     {one, one, sqrt(FieldElem(-1)), sqrt(one - l)}));
  rows.push_back(row("lambda/(lambda-1)", l / (l - one), {3, 2, 1, 4}, {one, one, one, sqrt(one - l)}));
  rows.push_back(row("(lambda-1)/lambda", (l - one) / l, {2, 4, 3, 1},
                     {one, sqrt(l), sqrt(l - one), sqrt(one - l)}));
  return rows;
}

CompatibleHom<FieldElem> phi_2222_x1_x2(const FieldElem& lambda) {
  const WeightSeq p{2, 2, 2, 2};
  return phi_2222_example(make_algebra<FieldElem>(p, {FieldElem(1), lambda}));
}

CompatibleHom<FieldElem> phi_2222_minus_one_34() {
  const WeightSeq p{2, 2, 2, 2};
  const FieldElem i = sqrt(FieldElem(-1));
  Algebra<FieldElem> codomain = make_algebra<FieldElem>(p, {FieldElem(1), FieldElem(-1)});
  StringHom pi = canonical_hom(p, FiniteSubgroup::cyclic(p, 3, 4, 2));
  std::vector<GradedPoly<FieldElem>> images;
  images.push_back(var_product<FieldElem>(p, {1, 2}, FieldElem(1) - i));
  images.push_back(var_product<FieldElem>(p, {3, 4}, i));
  GradedPoly<FieldElem> c = var_product<FieldElem>(p, {1, 1});
  c += var_product<FieldElem>(p, {2, 2}, i);
  GradedPoly<FieldElem> d = var_product<FieldElem>(p, {1, 1});
  d += var_product<FieldElem>(p, {2, 2}, -i);
  images.push_back(c);
  images.push_back(d);
  return CompatibleHom<FieldElem>{pi, codomain, std::move(images)};
}

namespace {

// Ungraded polynomial used while parsing.
using RawPoly = std::map<Exponents, FieldElem>;

class PolyParser {
 public:
  PolyParser(const WeightSeq& q, const std::string& text) : q_(q), text_(text) {}

  RawPoly parse() {
    RawPoly v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::ParseError, "polynomial '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  RawPoly constant(const FieldElem& c) {
    RawPoly r;
    if (!c.is_zero()) r[Exponents(q_.size(), 0)] = c;
    return r;
  }
  static void accumulate(RawPoly& into, const Exponents& e, const FieldElem& c) {
    auto [it, inserted] = into.emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
  static RawPoly add(RawPoly a, const RawPoly& b, int sign) {
    for (const auto& [e, c] : b) accumulate(a, e, sign > 0 ? c : -c);
    return a;
  }
  static RawPoly mul(const RawPoly& a, const RawPoly& b) {
    RawPoly out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        accumulate(out, e, ca * cb);
      }
    }
    return out;
  }
  FieldElem as_constant(const RawPoly& r) {
    if (r.empty()) return FieldElem();
    if (r.size() != 1 || std::any_of(r.begin()->first.begin(), r.begin()->first.end(),
                                     [](Int x) { return x != 0; })) {
      fail("expected a constant");
    }
    return r.begin()->second;
  }
  RawPoly expr() {
    RawPoly v = term();
    while (true) {
      if (eat('+')) {
        v = add(v, term(), 1);
      } else if (eat('-')) {
        v = add(v, term(), -1);
      } else {
        return v;
      }
    }
  }
  RawPoly term() {
    RawPoly v = unary();
    while (true) {
      if (eat('*')) {
        v = mul(v, unary());
      } else if (eat('/')) {
        FieldElem d = as_constant(unary());
        if (d.is_zero()) fail("division by zero");
        v = mul(v, constant(d.inverse()));
      } else {
        return v;
      }
    }
  }
  RawPoly unary() {
    if (eat('-')) return add(RawPoly{}, unary(), -1);
    if (eat('+')) return unary();
    RawPoly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 4) fail("expected a small exponent");
      int e = std::stoi(text_.substr(start, pos_ - start));
      RawPoly out = constant(FieldElem(1));
      for (int k = 0; k < e; ++k) out = mul(out, base);
      return out;
    }
    return base;
  }
  RawPoly primary() {
    skip();
    if (eat('(')) {
      RawPoly v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected ( after sqrt");
      FieldElem v = as_constant(expr());
      if (!eat(')')) fail("expected )");
      return constant(sqrt(v));
    }
    if (pos_ < text_.size() && text_[pos_] == 'z') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 4) fail("expected generator index");
      std::size_t idx = std::stoul(text_.substr(start, pos_ - start));
      if (idx < 1 || idx > q_.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "z" + std::to_string(idx) + " not in " + q_.to_string());
      }
      Exponents e(q_.size(), 0);
      e[idx - 1] = 1;
      return RawPoly{{e, FieldElem(1)}};
    }
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return constant(sqrt(FieldElem(-1)));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("unexpected character");
    return constant(parse_field(text_.substr(start, pos_ - start)));
  }

  const WeightSeq& q_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly<FieldElem> parse_poly(const WeightSeq& q, const std::string& text) {
  RawPoly raw = PolyParser(q, text).parse();
  if (raw.empty()) {
    throw Error(ErrorKind::ParseError, "polynomial '" + text + "' is zero; its degree is undetermined");
  }
  GradedPoly<FieldElem> out(q, monomial_degree(q, raw.begin()->first));
  for (const auto& [e, c] : raw) {
    if (monomial_degree(q, e) != out.degree()) {
      throw Error(ErrorKind::ParseError, "polynomial '" + text + "' is not homogeneous");
    }
    out.add_term(e, c);
  }
  return out;
}

#define WPL_INSTANTIATE(C)                                                                   \
  template Algebra<C> make_algebra<C>(const WeightSeq&, std::vector<C>);                    \
  template class GradedPoly<C>;                                                              \
  template GradedPoly<C> operator*(const GradedPoly<C>&, const GradedPoly<C>&);              \
  template GradedPoly<C> pow(const GradedPoly<C>&, Int);                                     \
  template GradedPoly<C> reduce(const GradedPoly<C>&, const Algebra<C>&);                   \
  template bool check_compatible(const CompatibleHom<C>&);                                   \
  template bool check_relations(const CompatibleHom<C>&, const Algebra<C>&);                \
  template bool check_surjective_small_degree(const CompatibleHom<C>&);                      \
  template GradedPoly<C> apply_phi(const CompatibleHom<C>&, const Exponents&);               \
  template CompatibleHom<C> compose(const CompatibleHom<C>&, const CompatibleHom<C>&);       \
  template CompatibleHom<C> identity_phi(const Algebra<C>&);                                 \
  template CompatibleHom<C> permute_parameters(const Algebra<C>&, std::size_t, std::size_t); \
  template CompatibleHom<C> construct_cyclic_phi(const Algebra<C>&, const FiniteSubgroup&);

WPL_INSTANTIATE(FieldElem)
WPL_INSTANTIATE(Complex)

#undef WPL_INSTANTIATE

}  // namespace wpl
