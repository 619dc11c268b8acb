#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace oracle {

using wpl::Complex;
using wpl::FieldElem;
using wpl::WeightSeq;

namespace {

std::vector<std::vector<std::size_t>> permutations(std::size_t t) {
  std::vector<std::size_t> s(t);
  std::iota(s.begin(), s.end(), 1);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::string coeff_gen(Int a, int k) {
  return (a == 1 ? "" : std::to_string(a)) + "x" + std::to_string(k);
}

using Rows = std::vector<RowInstance>;

void add(Rows& out, const std::string& family, const std::vector<std::size_t>& sigma,
         const std::vector<Int>& row, std::vector<Int> q, std::string kernel,
         std::string images) {
  out.push_back(RowInstance{family, sigma, WeightSeq(row), WeightSeq(std::move(q)),
                            std::move(kernel), std::move(images)});
}

std::vector<Int> permuted(const WeightSeq& p, const std::vector<std::size_t>& sigma) {
  std::vector<Int> row;
  for (auto s : sigma) row.push_back(p[s - 1]);
  return row;
}

// Tiny parser for "x1-2x3,2x1-x2" in row coordinates.
std::vector<std::vector<Int>> parse_gens(const std::string& text, std::size_t t) {
  std::vector<std::vector<Int>> out;
  std::stringstream ss(text);
  std::string g;
  while (std::getline(ss, g, ',')) {
    std::vector<Int> c(t, 0);
    std::size_t k = 0;
    while (k < g.size()) {
      Int sign = 1;
      if (g[k] == '+' || g[k] == '-') {
        sign = g[k] == '-' ? -1 : 1;
        ++k;
      }
      Int a = 0;
      bool digits = false;
      while (k < g.size() && std::isdigit(static_cast<unsigned char>(g[k]))) {
        a = 10 * a + (g[k] - '0');
        ++k;
        digits = true;
      }
      if (!digits) a = 1;
      ++k;  // 'x'
      std::size_t idx = 0;
      while (k < g.size() && std::isdigit(static_cast<unsigned char>(g[k]))) {
        idx = 10 * idx + static_cast<std::size_t>(g[k] - '0');
        ++k;
      }
      c[idx - 1] += sign * a;
    }
    out.push_back(c);
  }
  return out;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

using Key = std::pair<std::vector<Int>, Int>;

Key add_keys(const std::vector<Int>& p, const Key& a, const Key& b) {
  std::vector<Int> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = a.first[i] + b.first[i];
  RawNormal n = normal_form(p, c, a.second + b.second);
  return {n.residues, n.shift};
}

// Closure of finitely many generators; bounded by |torsion|.
std::set<Key> closure(const std::vector<Int>& p, const std::vector<std::vector<Int>>& gens) {
  std::set<Key> seen;
  Key zero{std::vector<Int>(p.size(), 0), 0};
  seen.insert(zero);
  std::vector<Key> frontier{zero};
  std::vector<Key> g;
  for (const auto& c : gens) {
    RawNormal n = normal_form(p, c, 0);
    g.push_back({n.residues, n.shift});
  }
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& x : frontier) {
      for (const auto& y : g) {
        Key z = add_keys(p, x, y);
        if (seen.insert(z).second) next.push_back(z);
      }
    }
    frontier = std::move(next);
    if (seen.size() > 100000) break;
  }
  return seen;
}

// Image of a raw element under a hom given by normal-form rows.
Key apply(const wpl::StringHom& h, const std::vector<Int>& coeffs, Int shift) {
  const auto& q = h.codomain().weights();
  std::vector<Int> c(q.size(), 0);
  Int l = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& img = h.image(i + 1);
    for (std::size_t j = 0; j < q.size(); ++j) c[j] += coeffs[i] * img.residues()[j];
    l += coeffs[i] * img.shift();
  }
  for (std::size_t j = 0; j < q.size(); ++j) c[j] += shift * h.c_image().residues()[j];
  l += shift * h.c_image().shift();
  RawNormal n = normal_form(q, c, l);
  return {n.residues, n.shift};
}

// Weight-preserving column permutation from a onto b, by sorted columns.
bool same_up_to_columns(const wpl::StringHom& a, const wpl::StringHom& b) {
  if (a.domain().weights() != b.domain().weights()) return false;
  const auto& qa = a.codomain().weights();
  const auto& qb = b.codomain().weights();
  if (qa.size() != qb.size()) return false;
  auto ma = a.matrix();
  auto mb = b.matrix();
  const std::size_t t = ma.size();
  auto columns = [t](const std::vector<std::vector<Int>>& m, const std::vector<Int>& q) {
    std::vector<std::pair<Int, std::vector<Int>>> cols;
    for (std::size_t j = 0; j < q.size(); ++j) {
      std::vector<Int> col;
      for (std::size_t i = 0; i < t; ++i) col.push_back(m[i][j]);
      cols.push_back({q[j], col});
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  if (columns(ma, qa) != columns(mb, qb)) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (ma[i].back() != mb[i].back()) return false;
  }
  return true;
}

}  // namespace

std::vector<RowInstance> domestic_rows(const WeightSeq& p) {
  Rows out;
  const std::size_t t = p.size();
  for (const auto& sigma : permutations(t)) {
    auto r = permuted(p, sigma);
    if (t == 3) {
      if (r == std::vector<Int>{2, 3, 4}) add(out, "(2,3,4)", sigma, r, {2, 3, 3}, "x1-2x3", "d,z2+z3,z1");
      if (r == std::vector<Int>{2, 3, 3}) add(out, "(2,3,3)", sigma, r, {2, 2, 2}, "x2-x3", "z1+z2+z3,d,d");
      if (r[0] == 2 && r[1] == 2) {
        Int m = r[2];
        if (m % 2 == 0) {
          Int p3 = m / 2;
          add(out, "(2,2,2p3)>(2,2,p3)", sigma, r, {2, 2, p3}, "x2-" + coeff_gen(p3, 3), "z1+z2,d,z3");
          add(out, "(2,2,2p3)>(p3,p3)", sigma, r, {p3, p3}, "x1-x2,x1-" + coeff_gen(p3, 3),
              "2d,2d,z1+z2");
        }
        add(out, "(2,2,p3)>(p3,p3)", sigma, r, {m, m}, "x1-x2", "d,d,z1+z2");
      }
    }
    if (t == 2) {
      const Int a = r[0], b = r[1];
      for (Int n = 2; n <= std::min(a, b); ++n) {
        if (a % n || b % n) continue;
        add(out, "(nq1,nq2)", sigma, r, {a / n, b / n},
            coeff_gen(a / n, 1) + "-" + coeff_gen(b / n, 2), "z1,z2");
      }
      if (b >= 2 && a % b == 0) add(out, "(nq,n)", sigma, r, {a / b}, coeff_gen(a / b, 1) + "-x2", "z1,d");
      if (a == b && a >= 2) add(out, "(n,n)", sigma, r, {}, "x1-x2", "d,d");
    }
  }
  return out;
}

std::vector<RowInstance> tubular_rows(const WeightSeq& p) {
  Rows out;
  for (const auto& sigma : permutations(p.size())) {
    auto r = permuted(p, sigma);
    if (r == std::vector<Int>{2, 2, 2, 2}) {
      add(out, "2222/C2", sigma, r, {2, 2, 2, 2}, "x1-x2", "d,d,z1+z2,z3+z4");
      add(out, "2222/Klein", sigma, r, {2, 2, 2, 2}, "x1-x2,x1-x3", "2d,2d,2d,z1+z2+z3+z4");
    }
    if (r == std::vector<Int>{4, 4, 2}) {
      add(out, "442/442", sigma, r, {4, 4, 2}, "2x1-x3", "z3,z1+z2,d");
      add(out, "442/442", sigma, r, {4, 4, 2}, "2x2-x3", "z1+z2,z3,d");
      add(out, "442/C4", sigma, r, {2, 2, 2, 2}, "x1-x2", "d,d,z1+z2+z3+z4");
      add(out, "442/C2", sigma, r, {2, 2, 2, 2}, "2x1-2x2", "z1,z2,z3+z4");
      add(out, "442/Klein", sigma, r, {2, 2, 2, 2}, "2x1-2x2,2x1-x3", "z1+z2,z3+z4,2d");
    }
    if (r == std::vector<Int>{3, 3, 3}) add(out, "333/333", sigma, r, {3, 3, 3}, "x1-x2", "d,d,z1+z2+z3");
    if (r == std::vector<Int>{6, 3, 2}) {
      add(out, "632/333", sigma, r, {3, 3, 3}, "3x1-x3", "z1,z2+z3,d");
      add(out, "632/2222", sigma, r, {2, 2, 2, 2}, "2x1-x2", "z1,d,z2+z3+z4");
    }
  }
  return out;
}

bool record_matches(const wpl::AdmissibleRecord& r, const RowInstance& row) {
  std::vector<wpl::GroupElement> imgs;
  for (auto s : row.sigma) imgs.push_back(r.hom.image(s));
  wpl::StringHom moved = wpl::StringHom::from_images(row.p_row, r.hom.codomain(), imgs);
  wpl::StringHom table =
      wpl::drop_unit_weights(wpl::parse_hom_images(row.p_row, row.q_raw, row.images));
  if (!same_up_to_columns(moved, table)) return false;

  // Kernel: the row generators close up to a subgroup killed by the hom,
  // of the same order as the record's kernel.
  const auto& pw = row.p_row.weights();
  auto gens = parse_gens(row.kernel, pw.size());
  auto sub = closure(pw, gens);
  for (const auto& g : gens) {
    Key img = apply(moved, g, 0);
    if (std::any_of(img.first.begin(), img.first.end(), [](Int v) { return v != 0; }) ||
        img.second != 0) {
      return false;
    }
  }
  return static_cast<Int>(sub.size()) == r.kernel.order();
}

std::vector<std::string> example_torsion() {
  return {"0", "2x1-3x2", "2x1-5x4", "3x2-5x4"};
}

std::vector<ExampleCase> example_cases() {
  return {
      {"2x1-3x2", {2, 3, 7, 7, 10, 10}, "z1,z2,z3+z4,z5+z6"},
      {"2x1-5x4", {2, 6, 6, 7, 7, 5}, "z1,z2+z3,z4+z5,z6"},
      {"3x2-5x4", {4, 4, 3, 7, 7, 5}, "z1+z2,z3,z4+z5,z6"},
      {"2x1-3x2,2x1-5x4", {2, 2, 3, 3, 7, 7, 7, 7, 5, 5}, "z1+z2,z3+z4,z5+z6+z7+z8,z9+z10"},
  };
}

RawNormal normal_form(const std::vector<Int>& p, std::vector<Int> coeffs, Int shift) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int q = floor_div(coeffs[i], p[i]);
    coeffs[i] -= q * p[i];
    shift += q;
  }
  return {coeffs, shift};
}

Int brute_mult(const std::vector<Int>& p, const std::vector<Int>& residues, Int shift) {
  // Monomials prod x_i^{e_i} of degree x are e_i = l_i + k_i p_i with
  // sum k_i = shift. Reduce every one of them in S(p; mu) and take the rank.
  if (shift < 0) return 0;
  WeightSeq w(p);
  WeightSeq q = wpl::pad_weights(w);
  std::vector<FieldElem> mu;
  for (std::size_t k = 2; k < q.size(); ++k) mu.push_back(FieldElem(static_cast<long long>(k * k + 1)));
  if (!mu.empty()) mu[0] = FieldElem(1);
  auto alg = wpl::make_algebra<FieldElem>(q, mu);

  std::vector<std::vector<Int>> ks;
  std::vector<Int> k(q.size(), 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i + 1 == q.size()) {
      k[i] = left;
      ks.push_back(k);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, shift);

  std::vector<std::map<wpl::Exponents, wpl::Rational>> rows;
  for (const auto& kk : ks) {
    wpl::Exponents e(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) e[i] = (i < residues.size() ? residues[i] : 0) + kk[i] * q[i];
    auto m = wpl::GradedPoly<FieldElem>::monomial(q, e, FieldElem(1));
    auto red = wpl::reduce(m, alg);
    std::map<wpl::Exponents, wpl::Rational> row;
    for (const auto& [ex, c] : red.terms()) row[ex] = c.rational_value();
    rows.push_back(row);
  }
  // Rank by elimination over Q.
  Int rank = 0;
  std::vector<std::map<wpl::Exponents, wpl::Rational>> basis;
  for (auto row : rows) {
    for (const auto& b : basis) {
      const auto& pivot = b.begin()->first;
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      wpl::Rational f = it->second / b.begin()->second;
      for (const auto& [ex, c] : b) {
        row[ex] -= f * c;
        if (row[ex] == 0) row.erase(ex);
      }
    }
    if (row.empty()) continue;
    // Keep the pivot as the first key; eliminate it from existing rows lazily.
    basis.push_back(row);
    std::sort(basis.begin(), basis.end(),
              [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
    ++rank;
  }
  return rank;
}

Int torsion_order(const std::vector<Int>& p) {
  Int prod = 1, l = 1;
  for (Int v : p) {
    prod *= v;
    l = std::lcm(l, v);
  }
  return prod / l;
}

Complex j_numeric(const Complex& l) {
  Complex a = l * l - l + Complex(1);
  Complex b = l * (l - Complex(1));
  return Complex(256) * a * a * a / (b * b);
}

namespace {

bool close(const Complex& a, const Complex& b) {
  using boost::multiprecision::abs;
  wpl::Real scale = 1 + abs(a) + abs(b);
  return abs(a - b) < wpl::Real(1e-20) * scale;
}

}  // namespace

bool tubular_condition(const std::vector<Int>& p, const Complex& lambda, const std::string& kind,
                       const std::vector<Int>& q, const Complex& mu) {
  const std::vector<Int> t2222{2, 2, 2, 2};
  if (q != t2222) return true;
  Complex jm = j_numeric(mu);
  if (p == t2222) {
    if (kind == "klein" || kind == "trivial") return close(jm, j_numeric(lambda));
    const Complex one(1);
    for (const Complex& l : {lambda, one / lambda, one - lambda, one / (one - lambda),
                             lambda / (lambda - one), (lambda - one) / lambda}) {
      Complex s = sqrt(l);
      Complex g = (s + one) / (s - one);
      if (close(jm, j_numeric(g * g))) return true;
    }
    return false;
  }
  if (p == std::vector<Int>{4, 4, 2}) return close(jm, Complex(1728));
  if (p == std::vector<Int>{6, 3, 2}) return close(jm, Complex(0));
  return false;
}

FieldElem random_rational(std::mt19937_64& rng, Int num_bound, Int den_bound) {
  std::uniform_int_distribution<Int> num(-num_bound, num_bound);
  std::uniform_int_distribution<Int> den(1, den_bound);
  return FieldElem(wpl::Rational(num(rng), den(rng)));
}

FieldElem random_parameter(std::mt19937_64& rng) {
  for (;;) {
    FieldElem x = random_rational(rng);
    if (!x.is_zero() && x != FieldElem(1)) return x;
  }
}

std::vector<LiteralPhi> literal_permutation_rows() {
  return {
      {"L", "z1,z2,z3,z4", {"z1", "z2", "z3", "z4"}},
      {"1/(L)", "z2,z1,z3,z4", {"z2", "z1", "sqrt(-1)*z3", "sqrt(-(L))*z4"}},
      {"1-(L)", "z4,z2,z3,z1", {"z4", "sqrt(L)*z2", "sqrt((L)-1)*z3", "sqrt((L)*(1-(L)))*z1"}},
      {"1/(1-(L))", "z2,z3,z1,z4", {"z2", "z3", "sqrt(-1)*z1", "sqrt(1-(L))*z4"}},
      {"(L)/((L)-1)", "z3,z2,z1,z4", {"z3", "z2", "z1", "sqrt(1-(L))*z4"}},
      {"((L)-1)/(L)", "z2,z4,z3,z1", {"z2", "sqrt(L)*z4", "sqrt((L)-1)*z3", "sqrt(1-(L))*z1"}},
  };
}

LiteralPhi literal_x1_x2_example() {
  const std::string nu = "((sqrt(L)+1)/(sqrt(L)-1))";
  return {"(" + nu + ")^2",
          "d,d,z1+z2,z3+z4",
          {"-" + nu + "*z1^2+z2^2", nu + "*z1^2+z2^2", "2*sqrt(" + nu + ")*z1*z2",
           "sqrt(1-(L))*z3*z4"}};
}

std::string substitute(std::string text, const std::string& symbol, const std::string& value) {
  std::size_t k = 0;
  while ((k = text.find(symbol, k)) != std::string::npos) {
    text.replace(k, symbol.size(), value);
    k += value.size();
  }
  return text;
}

wpl::CompatibleHom<FieldElem> build_literal(const LiteralPhi& row, const std::string& lambda) {
  WeightSeq p{2, 2, 2, 2};
  FieldElem mu = wpl::parse_field(substitute(row.mu, "L", lambda));
  auto cod = wpl::make_algebra<FieldElem>(p, {FieldElem(1), mu});
  std::vector<wpl::GradedPoly<FieldElem>> images;
  for (const auto& f : row.phi) images.push_back(wpl::parse_poly(p, substitute(f, "L", lambda)));
  return {wpl::parse_hom_images(p, p, row.pi), cod, images};
}

}  // namespace oracle
