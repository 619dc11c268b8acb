#include "wpl/exact_field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

namespace wpl {

using Vec = std::vector<Rational>;

const Real& float_tolerance() {
  static const Real tol = boost::multiprecision::ldexp(Real(1), -40);
  return tol;
}

bool approx_zero(const Complex& z) { return abs(z) < float_tolerance(); }

Complex to_complex(const Rational& q) {
  Real num = static_cast<Real>(boost::multiprecision::numerator(q));
  Real den = static_cast<Real>(boost::multiprecision::denominator(q));
  return Complex(num / den, Real(0));
}

std::size_t tower_depth_cap() {
  const char* env = std::getenv("WPL_TOWER_DEPTH");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
  }
  return 4;
}

namespace {

bool all_zero(const Rational* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

// Chain of tower levels from the bottom: levels[k] adjoins the (k+1)-th root.
std::vector<const Tower*> levels_of(const TowerPtr& t) {
  std::vector<const Tower*> out;
  for (const Tower* p = t.get(); p; p = p->parent.get()) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

Vec mul_rec(const std::vector<const Tower*>& lv, std::size_t k, const Rational* x, const Rational* y) {
  if (k == 0) return Vec{x[0] * y[0]};
  const std::size_t h = std::size_t{1} << (k - 1);
  Vec out(2 * h);
  const bool bx = all_zero(x + h, h);
  const bool by = all_zero(y + h, h);
  Vec ac = mul_rec(lv, k - 1, x, y);
  std::copy(ac.begin(), ac.end(), out.begin());
  if (!bx && !by) {
    Vec be = mul_rec(lv, k - 1, x + h, y + h);
    Vec bed = mul_rec(lv, k - 1, be.data(), lv[k - 1]->radicand.data());
    for (std::size_t i = 0; i < h; ++i) out[i] += bed[i];
  }
  if (!by) {
    Vec ae = mul_rec(lv, k - 1, x, y + h);
    for (std::size_t i = 0; i < h; ++i) out[h + i] += ae[i];
  }
  if (!bx) {
    Vec bc = mul_rec(lv, k - 1, x + h, y);
    for (std::size_t i = 0; i < h; ++i) out[h + i] += bc[i];
  }
  return out;
}

Vec inv_rec(const std::vector<const Tower*>& lv, std::size_t k, const Rational* x) {
  if (k == 0) {
    if (x[0] == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return Vec{1 / x[0]};
  }
  const std::size_t h = std::size_t{1} << (k - 1);
  // (a + b r)^-1 = (a - b r) / (a^2 - b^2 d)
  Vec a2 = mul_rec(lv, k - 1, x, x);
  Vec b2 = mul_rec(lv, k - 1, x + h, x + h);
  Vec b2d = mul_rec(lv, k - 1, b2.data(), lv[k - 1]->radicand.data());
  for (std::size_t i = 0; i < h; ++i) a2[i] -= b2d[i];
  Vec ninv = inv_rec(lv, k - 1, a2.data());
  Vec lo = mul_rec(lv, k - 1, x, ninv.data());
  Vec hi = mul_rec(lv, k - 1, x + h, ninv.data());
  Vec out(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = lo[i];
    out[h + i] = -hi[i];
  }
  return out;
}

bool rational_square_root(const Rational& q, Rational& out) {
  if (q < 0) return false;
  if (q == 0) {
    out = 0;
    return true;
  }
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt rn = boost::multiprecision::sqrt(n);
  BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  return true;
}

std::optional<Vec> sqrt_rec(const std::vector<const Tower*>& lv, std::size_t k, const Rational* e) {
  if (k == 0) {
    Rational r;
    if (rational_square_root(e[0], r)) return Vec{r};
    return std::nullopt;
  }
  const std::size_t h = std::size_t{1} << (k - 1);
  const Rational* a = e;
  const Rational* b = e + h;
  const Vec& d = lv[k - 1]->radicand;
  Vec out(2 * h);
  if (all_zero(b, h)) {
    if (auto r = sqrt_rec(lv, k - 1, a)) {
      std::copy(r->begin(), r->end(), out.begin());
      return out;
    }
    // (y r)^2 = y^2 d, so look for a root of a/d.
    Vec dinv = inv_rec(lv, k - 1, d.data());
    Vec ad = mul_rec(lv, k - 1, a, dinv.data());
    if (auto r = sqrt_rec(lv, k - 1, ad.data())) {
      std::copy(r->begin(), r->end(), out.begin() + static_cast<std::ptrdiff_t>(h));
      return out;
    }
    return std::nullopt;
  }
  // (x + y r)^2 = a + b r with b != 0: x^2 = (a +- sqrt(a^2 - b^2 d)) / 2, y = b / 2x.
  Vec a2 = mul_rec(lv, k - 1, a, a);
  Vec b2 = mul_rec(lv, k - 1, b, b);
  Vec b2d = mul_rec(lv, k - 1, b2.data(), d.data());
  for (std::size_t i = 0; i < h; ++i) a2[i] -= b2d[i];
  auto s = sqrt_rec(lv, k - 1, a2.data());
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    Vec x2(h);
    for (std::size_t i = 0; i < h; ++i) x2[i] = (a[i] + sign * (*s)[i]) / 2;
    if (all_zero(x2.data(), h)) continue;
    auto x = sqrt_rec(lv, k - 1, x2.data());
    if (!x) continue;
    Vec xinv = inv_rec(lv, k - 1, x->data());
    Vec y = mul_rec(lv, k - 1, b, xinv.data());
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = (*x)[i];
      out[h + i] = y[i] / 2;
    }
    return out;
  }
  return std::nullopt;
}

bool same_tower(const Tower* a, const Tower* b) {
  while (a && b) {
    if (a == b) return true;
    if (a->depth != b->depth || a->radicand != b->radicand) return false;
    a = a->parent.get();
    b = b->parent.get();
  }
  return a == b;
}

Complex principal_sqrt(Complex z) {
  // Values on the negative real axis get the root with positive imaginary part.
  if (boost::multiprecision::abs(z.imag()) <= float_tolerance() * float_tolerance() *
                                                   (1 + boost::multiprecision::abs(z.real())) &&
      z.real() < 0) {
    z = Complex(z.real(), Real(0));
  }
  return boost::multiprecision::sqrt(z);
}

Complex approx_coords(const std::vector<const Tower*>& lv, const Vec& c) {
  Complex sum(0);
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    Complex term = to_complex(c[m]);
    for (std::size_t k = 0; k < lv.size(); ++k) {
      if (m & (std::size_t{1} << k)) term *= lv[k]->root;
    }
    sum += term;
  }
  return sum;
}

// Squarefree kernel of a nonzero integer by trial division; any cofactor left
// beyond the search bound is kept whole unless it is a perfect square.
BigInt squarefree_part(const BigInt& n, BigInt& square_root_of_rest) {
  BigInt m = boost::multiprecision::abs(n);
  BigInt sf = 1;
  square_root_of_rest = 1;
  for (long p = 2; p <= 100000; ++p) {
    BigInt pp = p;
    if (pp * pp > m) break;
    int e = 0;
    while (m % pp == 0) {
      m /= pp;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_root_of_rest *= pp;
    if (e % 2) sf *= pp;
  }
  BigInt r = boost::multiprecision::sqrt(m);
  if (r * r == m) {
    square_root_of_rest *= r;
  } else {
    sf *= m;
  }
  return n < 0 ? BigInt(-sf) : sf;
}

Vec pad(const Vec& c, std::size_t depth) {
  Vec out(std::size_t{1} << depth, Rational(0));
  std::copy(c.begin(), c.end(), out.begin());
  return out;
}

FieldElem choose_branch(const FieldElem& r) {
  Complex z = approx(r);
  const Real& tol = float_tolerance();
  if (z.real() > tol) return r;
  if (z.real() < -tol) return -r;
  return z.imag() >= 0 ? r : -r;
}

// Root of x searched in base, where the tower of x is a prefix of base.
std::optional<FieldElem> sqrt_within(const FieldElem& x, const TowerPtr& base) {
  if (x.is_zero()) return FieldElem();
  auto lv = levels_of(base);
  Vec c = pad(x.coords(), lv.size());
  auto r = sqrt_rec(lv, lv.size(), c.data());
  if (!r) return std::nullopt;
  FieldElem root(base, std::move(*r));
  if (root * root != x) throw Error(ErrorKind::InvalidArgument, "internal: square root check failed");
  return choose_branch(root);
}

FieldElem sqrt_over(const FieldElem& x, const TowerPtr& base);

// x = a + b r over the top level of base. When a^2 - b^2 d is a square N^2
// below the top, sqrt(x) = sqrt(u) + b r / (2 sqrt(u)) with u = (a +- N) / 2,
// so only sqrt(u) is adjoined. Keeps sqrt((1+sqrt(-3))/2) inside Q(sqrt(-3), sqrt(3)).
std::optional<FieldElem> denest(const FieldElem& x, const TowerPtr& base) {
  if (!base) return std::nullopt;
  auto lv = levels_of(base);
  const std::size_t k = lv.size();
  const std::size_t h = std::size_t{1} << (k - 1);
  Vec c = pad(x.coords(), k);
  if (all_zero(c.data() + h, h)) return std::nullopt;
  const Vec& d = lv[k - 1]->radicand;
  Vec a(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(h));
  Vec b(c.begin() + static_cast<std::ptrdiff_t>(h), c.end());
  Vec n = mul_rec(lv, k - 1, a.data(), a.data());
  Vec b2d = mul_rec(lv, k - 1, mul_rec(lv, k - 1, b.data(), b.data()).data(), d.data());
  for (std::size_t i = 0; i < h; ++i) n[i] -= b2d[i];
  auto s = sqrt_rec(lv, k - 1, n.data());
  if (!s) return std::nullopt;
  const TowerPtr& below = base->parent;
  for (int sign : {1, -1}) {
    Vec u(h);
    for (std::size_t i = 0; i < h; ++i) u[i] = (a[i] + sign * (*s)[i]) / 2;
    if (all_zero(u.data(), h)) continue;
    FieldElem su = sqrt_over(FieldElem(below, u), base);
    Vec rc(2 * h, Rational(0));
    rc[h] = 1;
    FieldElem root = su + FieldElem(below, b) * FieldElem(base, rc) / (FieldElem(2) * su);
    if (root * root != x) continue;
    return choose_branch(root);
  }
  return std::nullopt;
}

// Principal root of x, adjoining a level on top of base when base has none.
FieldElem sqrt_over(const FieldElem& x, const TowerPtr& base) {
  if (auto r = sqrt_within(x, base)) return *r;
  if (auto r = denest(x, base)) return *r;
  const std::size_t depth = base ? base->depth : 0;
  const std::size_t cap = tower_depth_cap();
  if (depth + 1 > cap) {
    throw Error(ErrorKind::TowerDepthExceeded,
                "sqrt(" + x.to_string() + ") needs depth " + std::to_string(depth + 1) +
                    " > cap " + std::to_string(cap));
  }
  auto tower = std::make_shared<Tower>();
  tower->parent = base;
  tower->depth = depth + 1;
  FieldElem scale(1);
  if (x.is_rational()) {
    // sqrt(a/b) = (k/b) sqrt(s) with a*b = k^2 s, s squarefree.
    Rational q = x.rational_value();
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt k;
    BigInt s = squarefree_part(n * d, k);
    tower->radicand = pad({Rational(s)}, depth);
    tower->root = principal_sqrt(to_complex(Rational(s)));
    scale = FieldElem(Rational(k, d));
  } else {
    tower->radicand = pad(x.coords(), depth);
    tower->root = principal_sqrt(approx(x));
  }
  Vec coords(std::size_t{1} << tower->depth, Rational(0));
  coords[std::size_t{1} << depth] = 1;
  return scale * FieldElem(tower, std::move(coords));
}

std::mutex merge_mutex;

struct MergeResult {
  TowerPtr tower;
  // Images of the generators of the second tower.
  std::vector<FieldElem> gens;
};

// Cache of merges keyed by tower pointers (held alive by the cache).
std::map<std::pair<const Tower*, const Tower*>, std::pair<std::pair<TowerPtr, TowerPtr>, MergeResult>>&
merge_cache() {
  static std::map<std::pair<const Tower*, const Tower*>,
                  std::pair<std::pair<TowerPtr, TowerPtr>, MergeResult>>
      cache;
  return cache;
}


FieldElem evaluate_in(const std::vector<Rational>& coords, const std::vector<FieldElem>& gens) {
  FieldElem sum;
  for (std::size_t m = 0; m < coords.size(); ++m) {
    if (coords[m] == 0) continue;
    FieldElem term(coords[m]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (m & (std::size_t{1} << k)) term *= gens[k];
    }
    sum += term;
  }
  return sum;
}

MergeResult merge_towers(const TowerPtr& a, const TowerPtr& b) {
  {
    std::lock_guard<std::mutex> lock(merge_mutex);
    auto it = merge_cache().find({a.get(), b.get()});
    if (it != merge_cache().end()) return it->second.second;
  }
  auto la = levels_of(a);
  auto lb = levels_of(b);
  std::size_t common = 0;
  while (common < la.size() && common < lb.size() && la[common]->radicand == lb[common]->radicand) {
    ++common;
  }
  MergeResult res;
  TowerPtr top = a;
  for (std::size_t k = 0; k < common; ++k) {
    Vec coords(std::size_t{1} << la.size(), Rational(0));
    coords[std::size_t{1} << k] = 1;
    res.gens.emplace_back(a, coords);
  }
  for (std::size_t k = common; k < lb.size(); ++k) {
    FieldElem d = evaluate_in(lb[k]->radicand, res.gens);
    FieldElem r = sqrt_over(d, top);
    if (r.tower() && r.tower()->depth > (top ? top->depth : 0)) top = r.tower();
    res.gens.push_back(r);
  }
  res.tower = top;
  {
    std::lock_guard<std::mutex> lock(merge_mutex);
    if (merge_cache().size() > 4096) merge_cache().clear();
    merge_cache()[{a.get(), b.get()}] = {{a, b}, res};
  }
  return res;
}

// Rewrites x and y over a common tower.
std::pair<Vec, Vec> unify(const FieldElem& x, const FieldElem& y, TowerPtr& out_tower);

bool is_prefix(const Tower* small, const Tower* big) {
  if (!small) return true;
  while (big && big->depth > small->depth) big = big->parent.get();
  return big && same_tower(small, big);
}

std::pair<Vec, Vec> unify(const FieldElem& x, const FieldElem& y, TowerPtr& out_tower) {
  const Tower* tx = x.tower().get();
  const Tower* ty = y.tower().get();
  if (tx == ty || is_prefix(ty, tx)) {
    out_tower = x.tower();
    return {x.coords(), pad(y.coords(), x.depth())};
  }
  if (is_prefix(tx, ty)) {
    out_tower = y.tower();
    return {pad(x.coords(), y.depth()), y.coords()};
  }
  MergeResult m = merge_towers(x.tower(), y.tower());
  FieldElem ym = evaluate_in(y.coords(), m.gens);
  FieldElem xm = x;
  // Both now live in prefixes of the merged chain; one more prefix pass.
  const Tower* txm = xm.tower().get();
  const Tower* tym = ym.tower().get();
  if (is_prefix(txm, tym)) {
    out_tower = ym.tower();
    return {pad(xm.coords(), ym.depth()), ym.coords()};
  }
  if (is_prefix(tym, txm)) {
    out_tower = xm.tower();
    return {xm.coords(), pad(ym.coords(), xm.depth())};
  }
  throw Error(ErrorKind::InvalidArgument, "tower merge failed");
}

}  // namespace

FieldElem::FieldElem() : c_{Rational(0)} {}
FieldElem::FieldElem(long long n) : c_{Rational(n)} {}
FieldElem::FieldElem(const Rational& q) : c_{q} {}

FieldElem::FieldElem(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), c_(std::move(coords)) {
  if (c_.size() != (std::size_t{1} << depth())) {
    throw Error(ErrorKind::LengthMismatch, "coordinate count must be 2^depth");
  }
  trim();
}

FieldElem FieldElem::from_rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return FieldElem(Rational(num, den));
}

void FieldElem::trim() {
  while (tower_) {
    const std::size_t h = c_.size() / 2;
    if (!all_zero(c_.data() + h, h)) break;
    c_.resize(h);
    tower_ = tower_->parent;
  }
}

bool FieldElem::is_zero() const { return is_rational() && c_[0] == 0; }

Rational FieldElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::NotExact, "value is not rational: " + to_string());
  return c_[0];
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  TowerPtr t;
  auto [a, b] = unify(*this, o, t);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = FieldElem(t, std::move(a));
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  TowerPtr t;
  auto [a, b] = unify(*this, o, t);
  auto lv = levels_of(t);
  *this = FieldElem(t, mul_rec(lv, lv.size(), a.data(), b.data()));
  return *this;
}

FieldElem FieldElem::inverse() const {
  auto lv = levels_of(tower_);
  return FieldElem(tower_, inv_rec(lv, lv.size(), c_.data()));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }

FieldElem pow(const FieldElem& x, long long e) {
  if (e < 0) return pow(x.inverse(), -e);
  FieldElem result(1);
  FieldElem base = x;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<FieldElem> sqrt_in_tower(const FieldElem& x) { return sqrt_within(x, x.tower()); }

FieldElem sqrt(const FieldElem& x) { return sqrt_over(x, x.tower()); }

Complex approx(const FieldElem& x, unsigned precision_bits) {
  if (precision_bits > 160) {
    throw Error(ErrorKind::InvalidArgument, "approx supports at most 160 bits");
  }
  return approx_coords(levels_of(x.tower()), x.coords());
}

bool principal_less(const FieldElem& a, const FieldElem& b) {
  Complex za = approx(a);
  Complex zb = approx(b);
  const Real& tol = float_tolerance();
  if (za.real() < zb.real() - tol) return true;
  if (za.real() > zb.real() + tol) return false;
  return za.imag() < zb.imag() - tol;
}

namespace {

std::string rational_text(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

}  // namespace

std::string FieldElem::to_string() const {
  if (is_rational()) return rational_text(c_[0]);
  auto lv = levels_of(tower_);
  std::vector<std::string> roots;
  for (const Tower* t : lv) {
    roots.push_back("sqrt(" + FieldElem(t->parent, t->radicand).to_string() + ")");
  }
  std::string s;
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m] == 0) continue;
    std::string factors;
    for (std::size_t k = 0; k < lv.size(); ++k) {
      if (m & (std::size_t{1} << k)) factors += (factors.empty() ? "" : "*") + roots[k];
    }
    Rational coeff = c_[m];
    bool negative = coeff < 0;
    if (negative) coeff = -coeff;
    std::string term;
    if (factors.empty()) {
      term = rational_text(coeff);
    } else if (coeff == 1) {
      term = factors;
    } else {
      term = rational_text(coeff) + "*" + factors;
    }
    if (s.empty()) {
      s = (negative ? "-" : "") + term;
    } else {
      s += (negative ? "-" : "+") + term;
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::ParseError, "'" + text_ + "' at " + std::to_string(pos_) + ": " + why);
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
  FieldElem expr() {
    FieldElem v = term();
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  FieldElem term() {
    FieldElem v = unary();
    while (true) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  FieldElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    FieldElem base = primary();
    if (eat('^')) {
      bool negative = eat('-');
      skip();
      long long e = integer_literal();
      if (negative && base.is_zero()) fail("0 to a negative power");
      base = pow(base, negative ? -e : e);
    }
    return base;
  }
  long long integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stoll(text_.substr(start, pos_ - start));
  }
  FieldElem primary() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected ( after sqrt");
      FieldElem v = expr();
      if (!eat(')')) fail("expected )");
      return sqrt(v);
    }
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return sqrt(FieldElem(-1));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, sqrt(...) or (");
    BigInt n(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string frac = text_.substr(fs, pos_ - fs);
      BigInt scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
      return FieldElem(Rational(n * scale + f, scale));
    }
    return FieldElem(Rational(n));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_field(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Complex& z, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << z.real();
  if (z.imag() >= 0) os << "+";
  os << std::setprecision(digits) << z.imag() << "i";
  return os.str();
}

}  // namespace wpl
