#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "wpl/errors.hpp"

namespace wpl {

using Int = std::int64_t;

Int floor_div(Int a, Int b);
Int mod_floor(Int a, Int b);
Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);

// Weight type p = (p1, ..., pt). Entries equal to 1 are allowed; the
// canonical form strips them. Copies share storage.
class WeightSeq {
 public:
  WeightSeq();
  explicit WeightSeq(std::vector<Int> weights);
  WeightSeq(std::initializer_list<Int> weights);

  std::size_t size() const { return w_->size(); }
  Int operator[](std::size_t k) const { return (*w_)[k]; }
  const std::vector<Int>& weights() const { return *w_; }

  // lcm of the weights; 1 for the empty sequence.
  Int lcm() const { return lcm_; }
  // Product of the weights, saturating at INT64_MAX.
  Int product() const;

  bool is_canonical() const;
  std::vector<Int> sorted_desc() const;
  bool same_up_to_permutation(const WeightSeq& other) const;

  // "(2,3,4)"
  std::string to_string() const;

  bool operator==(const WeightSeq& other) const {
    return w_ == other.w_ || *w_ == *other.w_;
  }
  bool operator!=(const WeightSeq& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<Int>> w_;
  Int lcm_ = 1;
};

struct Canonicalized {
  WeightSeq weights;
  // kept[k] is the raw index of canonical generator k.
  std::vector<std::size_t> kept;
  // raw_to_canonical[i] is the canonical index of raw generator i, or -1 if stripped.
  std::vector<std::ptrdiff_t> raw_to_canonical;
};

Canonicalized canonicalize(const WeightSeq& p);

// Element of L(p) in normal form sum l_i x_i + l c with 0 <= l_i < p_i.
class GroupElement {
 public:
  // Requires residues already reduced; throws InvalidArgument otherwise.
  GroupElement(WeightSeq parent, std::vector<Int> residues, Int shift);

  const WeightSeq& parent() const { return parent_; }
  const std::vector<Int>& residues() const { return residues_; }
  Int shift() const { return shift_; }
  bool is_zero() const;

  // Normal form text, e.g. "x1+2x3-c"; "0" for zero. Codomain elements are
  // usually printed with letters 'z' and 'd'.
  std::string to_string(char gen = 'x', char unit = 'c') const;

  bool operator==(const GroupElement& other) const;
  bool operator!=(const GroupElement& other) const { return !(*this == other); }
  // Lexicographic on (residues, shift); parents must match.
  bool operator<(const GroupElement& other) const;

 private:
  WeightSeq parent_;
  std::vector<Int> residues_;
  Int shift_ = 0;
};

GroupElement element_from_raw(const WeightSeq& p, const std::vector<Int>& coeffs, Int shift);
GroupElement zero_element(const WeightSeq& p);
// Generator x_i, 1-based.
GroupElement generator(const WeightSeq& p, std::size_t i);
GroupElement canonical_c(const WeightSeq& p);
GroupElement dualizing_omega(const WeightSeq& p);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement sub(const GroupElement& x, const GroupElement& y);
GroupElement scalar_mul(Int k, const GroupElement& x);

inline GroupElement operator+(const GroupElement& x, const GroupElement& y) { return add(x, y); }
inline GroupElement operator-(const GroupElement& x, const GroupElement& y) { return sub(x, y); }
inline GroupElement operator-(const GroupElement& x) { return neg(x); }
inline GroupElement operator*(Int k, const GroupElement& x) { return scalar_mul(k, x); }

Int delta(const GroupElement& x);
Int mult(const GroupElement& x);
Int mu(const GroupElement& x);

// pi_i(x) = l_i mod p_i, i is 1-based.
Int project_component(const GroupElement& x, std::size_t i);

constexpr Int kDefaultTorsionCap = 1000000;

// All elements with delta = 0, ordered by residue vector (mixed radix, first
// index fastest). Throws TorsionCapExceeded if prod(p) > cap.
std::vector<GroupElement> torsion_subgroup(const WeightSeq& p, Int cap = kDefaultTorsionCap);

enum class GroupType { Domestic, Tubular, Wild };

GroupType classify_type(const WeightSeq& p);
const char* to_string(GroupType type);

// Parses "x1-2x3", "3x2+c", "-x1", "0". Coefficients are arbitrary integers
// and the result is normalized.
GroupElement parse_element(const WeightSeq& p, const std::string& text);

// Parses "2,3,4" (empty string gives the empty sequence).
WeightSeq parse_weights(const std::string& text);

}  // namespace wpl
