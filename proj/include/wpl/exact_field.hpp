#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "wpl/errors.hpp"

namespace wpl {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<160, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<160, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

// Zero threshold for the floating oracle.
const Real& float_tolerance();
bool approx_zero(const Complex& z);

// One level of a tower of quadratic extensions over Q. The level adjoins
// sqrt(radicand), radicand given by coordinates over the parent tower.
struct Tower {
  std::shared_ptr<const Tower> parent;
  std::vector<Rational> radicand;
  // Principal value of the adjoined root (positive real part, ties broken by
  // positive imaginary part).
  Complex root;
  std::size_t depth = 1;
};
using TowerPtr = std::shared_ptr<const Tower>;

// Element of a multiquadratic tower. Coordinates are indexed by bit masks:
// bit k set means the basis product contains the root adjoined at level k+1.
// Values are stored in the smallest prefix of their tower.
class FieldElem {
 public:
  FieldElem();
  FieldElem(long long n);  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& q);  // NOLINT(google-explicit-constructor)
  FieldElem(TowerPtr tower, std::vector<Rational> coords);

  static FieldElem from_rational(long long num, long long den);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return c_; }
  std::size_t depth() const { return tower_ ? tower_->depth : 0; }

  bool is_zero() const;
  bool is_rational() const { return depth() == 0; }
  Rational rational_value() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  FieldElem inverse() const;

  // Literal text accepted by parse_field, e.g. "1/2+1/2*sqrt(-3)".
  std::string to_string() const;

 private:
  void trim();
  TowerPtr tower_;
  std::vector<Rational> c_;
};

FieldElem operator+(FieldElem a, const FieldElem& b);
FieldElem operator-(FieldElem a, const FieldElem& b);
FieldElem operator*(FieldElem a, const FieldElem& b);
FieldElem operator/(FieldElem a, const FieldElem& b);
bool operator==(const FieldElem& a, const FieldElem& b);
inline bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

FieldElem pow(const FieldElem& x, long long e);

// Square root with the principal branch. Adjoins a new level only when the
// value has no root in its own tower. Throws TowerDepthExceeded past the cap.
FieldElem sqrt(const FieldElem& x);
// Root inside the tower of x, if any (principal branch).
std::optional<FieldElem> sqrt_in_tower(const FieldElem& x);

// Depth cap: WPL_TOWER_DEPTH if set, else 4.
std::size_t tower_depth_cap();

// Floating embedding under the principal root assignment. Computed at 160
// bits; precision requests above that are rejected.
Complex approx(const FieldElem& x, unsigned precision_bits = 160);
Complex to_complex(const Rational& q);

// Order by (real part, imaginary part) of the principal embedding.
bool principal_less(const FieldElem& a, const FieldElem& b);

// Parses rationals, sqrt(...), + - * / ^ and parentheses, e.g. "(1+sqrt(-3))/2".
FieldElem parse_field(const std::string& text);

std::string to_string(const Complex& z, int digits = 20);

}  // namespace wpl
