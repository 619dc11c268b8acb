#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpl/string_group.hpp"

namespace wpl {

enum class SubgroupKind { Trivial, Cyclic, Klein, Other };

const char* to_string(SubgroupKind kind);

// Finite subgroup of L(p). Indices i, j, k are 1-based and increasing.
// Cyclic{i,j,n} is generated by (p_i/n)x_i - (p_j/n)x_j; Klein{i,j,k}
// additionally contains (p_i/2)x_i - (p_k/2)x_k.
class FiniteSubgroup {
 public:
  static FiniteSubgroup trivial(const WeightSeq& p);
  static FiniteSubgroup cyclic(const WeightSeq& p, std::size_t i, std::size_t j, Int n);
  static FiniteSubgroup klein(const WeightSeq& p, std::size_t i, std::size_t j, std::size_t k);

  const WeightSeq& parent() const { return parent_; }
  SubgroupKind kind() const { return kind_; }
  // Sorted element list, 0 included.
  const std::vector<GroupElement>& elements() const { return elements_; }
  Int order() const { return static_cast<Int>(elements_.size()); }

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  Int n() const { return n_; }

  bool contains(const GroupElement& x) const;
  // Extensional equality (same parent, same element set).
  bool same_elements(const FiniteSubgroup& other) const;

  // Canonical generators: none, one, or two elements.
  std::vector<GroupElement> generators() const;
  // Raw generator text, e.g. "x1-2x3" or "2x1-2x2,2x1-x3"; "0" for trivial.
  std::string generator_string() const;
  // "C_n", "C2xC2", "0" or "other".
  std::string label() const;
  // "cyclic:1,3,2", "klein:1,2,4", "trivial", "other".
  std::string spec_string() const;

 private:
  friend FiniteSubgroup subgroup_generated(const WeightSeq&, const std::vector<GroupElement>&);
  FiniteSubgroup(WeightSeq p, SubgroupKind kind, std::vector<GroupElement> elements)
      : parent_(std::move(p)), kind_(kind), elements_(std::move(elements)) {}

  WeightSeq parent_;
  SubgroupKind kind_;
  std::vector<GroupElement> elements_;
  std::size_t i_ = 0, j_ = 0, k_ = 0;
  Int n_ = 1;
};

// Trivial first, then Cyclic by (i, j, n) ascending, then Klein by (i, j, k).
std::vector<FiniteSubgroup> enumerate_kernel_candidates(const WeightSeq& p);

// Closure of the generators; throws InfiniteSubgroup if some generator has
// nonzero degree. The kind is recognized by comparing element sets.
FiniteSubgroup subgroup_generated(const WeightSeq& p, const std::vector<GroupElement>& gens);

std::optional<std::pair<FiniteSubgroup, FiniteSubgroup>> product_split(const FiniteSubgroup& h);

// Parses "cyclic:i,j,n", "klein:i,j,k", "trivial" or a comma separated list
// of generator strings such as "x1-x2,x1-x3".
FiniteSubgroup parse_subgroup(const WeightSeq& p, const std::string& text);

}  // namespace wpl
