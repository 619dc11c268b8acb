#include "wpl/string_group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace wpl {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

Int lcm_int(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

WeightSeq::WeightSeq() : w_(std::make_shared<const std::vector<Int>>()) {}

WeightSeq::WeightSeq(std::vector<Int> weights) {
  for (Int w : weights) {
    if (w < 1) throw Error(ErrorKind::InvalidArgument, "weights must be >= 1");
  }
  Int l = 1;
  for (Int w : weights) l = lcm_int(l, w);
  lcm_ = l;
  w_ = std::make_shared<const std::vector<Int>>(std::move(weights));
}

WeightSeq::WeightSeq(std::initializer_list<Int> weights)
    : WeightSeq(std::vector<Int>(weights)) {}

Int WeightSeq::product() const {
  Int prod = 1;
  for (Int w : *w_) {
    if (prod > std::numeric_limits<Int>::max() / w) return std::numeric_limits<Int>::max();
    prod *= w;
  }
  return prod;
}

bool WeightSeq::is_canonical() const {
  return std::all_of(w_->begin(), w_->end(), [](Int w) { return w >= 2; });
}

std::vector<Int> WeightSeq::sorted_desc() const {
  std::vector<Int> out;
  for (Int w : *w_) {
    if (w >= 2) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool WeightSeq::same_up_to_permutation(const WeightSeq& other) const {
  return sorted_desc() == other.sorted_desc();
}

std::string WeightSeq::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < w_->size(); ++k) {
    if (k) s += ",";
    s += std::to_string((*w_)[k]);
  }
  return s + ")";
}

Canonicalized canonicalize(const WeightSeq& p) {
  Canonicalized out;
  std::vector<Int> kept_weights;
  out.raw_to_canonical.assign(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= 2) {
      out.raw_to_canonical[i] = static_cast<std::ptrdiff_t>(kept_weights.size());
      out.kept.push_back(i);
      kept_weights.push_back(p[i]);
    }
  }
  out.weights = WeightSeq(std::move(kept_weights));
  return out;
}

GroupElement::GroupElement(WeightSeq parent, std::vector<Int> residues, Int shift)
    : parent_(std::move(parent)), residues_(std::move(residues)), shift_(shift) {
  if (residues_.size() != parent_.size()) {
    throw Error(ErrorKind::LengthMismatch, "residue vector length differs from t");
  }
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] < 0 || residues_[i] >= parent_[i]) {
      throw Error(ErrorKind::InvalidArgument, "residue out of range; use element_from_raw");
    }
  }
}

bool GroupElement::is_zero() const {
  return shift_ == 0 &&
         std::all_of(residues_.begin(), residues_.end(), [](Int r) { return r == 0; });
}

std::string GroupElement::to_string(char gen, char unit) const {
  std::string s;
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    Int r = residues_[i];
    if (r == 0) continue;
    if (!s.empty()) s += "+";
    if (r != 1) s += std::to_string(r);
    s += gen + std::to_string(i + 1);
  }
  if (shift_ != 0) {
    if (shift_ > 0 && !s.empty()) s += "+";
    if (shift_ < 0) s += "-";
    Int a = shift_ < 0 ? -shift_ : shift_;
    if (a != 1) s += std::to_string(a);
    s += unit;
  }
  return s.empty() ? "0" : s;
}

bool GroupElement::operator==(const GroupElement& other) const {
  return shift_ == other.shift_ && residues_ == other.residues_ && parent_ == other.parent_;
}

bool GroupElement::operator<(const GroupElement& other) const {
  if (residues_ != other.residues_) return residues_ < other.residues_;
  return shift_ < other.shift_;
}

GroupElement element_from_raw(const WeightSeq& p, const std::vector<Int>& coeffs, Int shift) {
  if (coeffs.size() != p.size()) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(p.size()) +
                                               " coefficients, got " +
                                               std::to_string(coeffs.size()));
  }
  std::vector<Int> res(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    shift += floor_div(coeffs[i], p[i]);
    res[i] = mod_floor(coeffs[i], p[i]);
  }
  return GroupElement(p, std::move(res), shift);
}

GroupElement zero_element(const WeightSeq& p) {
  return GroupElement(p, std::vector<Int>(p.size(), 0), 0);
}

GroupElement generator(const WeightSeq& p, std::size_t i) {
  if (i < 1 || i > p.size()) throw Error(ErrorKind::IndexOutOfRange, "generator index");
  std::vector<Int> coeffs(p.size(), 0);
  coeffs[i - 1] = 1;
  return element_from_raw(p, coeffs, 0);
}

GroupElement canonical_c(const WeightSeq& p) {
  return GroupElement(p, std::vector<Int>(p.size(), 0), 1);
}

GroupElement dualizing_omega(const WeightSeq& p) {
  Int t = static_cast<Int>(p.size());
  return element_from_raw(p, std::vector<Int>(p.size(), -1), t - 2);
}

static void require_same_parent(const GroupElement& x, const GroupElement& y) {
  if (x.parent() != y.parent()) {
    throw Error(ErrorKind::ParentMismatch,
                x.parent().to_string() + " vs " + y.parent().to_string());
  }
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
  require_same_parent(x, y);
  std::vector<Int> c(x.residues().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.residues()[i] + y.residues()[i];
  return element_from_raw(x.parent(), c, x.shift() + y.shift());
}

GroupElement neg(const GroupElement& x) { return scalar_mul(-1, x); }

GroupElement sub(const GroupElement& x, const GroupElement& y) { return add(x, neg(y)); }

GroupElement scalar_mul(Int k, const GroupElement& x) {
  std::vector<Int> c(x.residues().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * x.residues()[i];
  return element_from_raw(x.parent(), c, k * x.shift());
}

Int delta(const GroupElement& x) {
  const WeightSeq& p = x.parent();
  Int l = p.lcm();
  Int d = x.shift() * l;
  for (std::size_t i = 0; i < p.size(); ++i) d += x.residues()[i] * (l / p[i]);
  return d;
}

Int mult(const GroupElement& x) { return std::max<Int>(x.shift() + 1, 0); }

Int mu(const GroupElement& x) {
  return static_cast<Int>(std::count_if(x.residues().begin(), x.residues().end(),
                                        [](Int r) { return r != 0; }));
}

Int project_component(const GroupElement& x, std::size_t i) {
  if (i < 1 || i > x.parent().size()) {
    throw Error(ErrorKind::IndexOutOfRange, "component index " + std::to_string(i));
  }
  return mod_floor(x.residues()[i - 1], x.parent()[i - 1]);
}

std::vector<GroupElement> torsion_subgroup(const WeightSeq& p, Int cap) {
  Int total = p.product();
  if (total > cap) {
    throw Error(ErrorKind::TorsionCapExceeded,
                "prod(p) = " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }
  const Int l = p.lcm();
  std::vector<GroupElement> out;
  std::vector<Int> res(p.size(), 0);
  for (Int n = 0; n < total; ++n) {
    Int d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) d += res[i] * (l / p[i]);
    if (d % l == 0) out.emplace_back(p, res, -d / l);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (++res[i] < p[i]) break;
      res[i] = 0;
    }
  }
  return out;
}

GroupType classify_type(const WeightSeq& p) {
  Int d = delta(dualizing_omega(p));
  if (d < 0) return GroupType::Domestic;
  if (d == 0) return GroupType::Tubular;
  return GroupType::Wild;
}

const char* to_string(GroupType type) {
  switch (type) {
    case GroupType::Domestic: return "domestic";
    case GroupType::Tubular: return "tubular";
    case GroupType::Wild: return "wild";
  }
  return "unknown";
}

GroupElement parse_element(const WeightSeq& p, const std::string& text) {
  std::vector<Int> coeffs(p.size(), 0);
  Int shift = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> GroupElement {
    throw Error(ErrorKind::ParseError, "element '" + text + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    Int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      return fail("expected + or -");
    }
    first = false;
    Int coeff = 1;
    bool has_digits = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = coeff * 10 + (text[pos] - '0');
        ++pos;
        has_digits = true;
      }
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'z')) {
      ++pos;
      std::size_t idx = 0;
      bool any = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        idx = idx * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) return fail("missing generator index");
      if (idx < 1 || idx > p.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "generator x" + std::to_string(idx) +
                                                    " not in L" + p.to_string());
      }
      coeffs[idx - 1] += sign * coeff;
    } else if (pos < text.size() && (text[pos] == 'c' || text[pos] == 'd')) {
      ++pos;
      shift += sign * coeff;
    } else if (has_digits) {
      if (coeff != 0) return fail("bare integer must be 0");
    } else {
      return fail("unexpected character");
    }
  }
  return element_from_raw(p, coeffs, shift);
}

WeightSeq parse_weights(const std::string& text) {
  std::vector<Int> w;
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') trimmed += ch;
  }
  if (trimmed.empty()) return WeightSeq();
  std::stringstream ss(trimmed);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw Error(ErrorKind::ParseError, "weight list '" + text + "'");
    }
    if (item.size() > 9) throw Error(ErrorKind::ParseError, "weight too large");
    Int v = std::stoll(item);
    if (v < 1) throw Error(ErrorKind::ParseError, "weights must be >= 1");
    w.push_back(v);
  }
  return WeightSeq(std::move(w));
}

}  // namespace wpl
