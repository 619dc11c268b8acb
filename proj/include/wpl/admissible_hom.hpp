#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpl/string_group.hpp"
#include "wpl/subgroup_lattice.hpp"

namespace wpl {

// Homomorphism pi: L(p) -> L(q) stored by its associated matrix: row i holds
// the normal form of pi(x_i) as (a_i1, ..., a_is, a_i,s+1). The image of c
// is kept as well so that t = 0 domains are representable.
class StringHom {
 public:
  // Rows may be unreduced; they are normalized. Requires t >= 1 and checks
  // that p_i * row_i agree (NotWellDefined otherwise).
  StringHom(WeightSeq domain, WeightSeq codomain, const std::vector<std::vector<Int>>& matrix);
  // General form; for t >= 1 c_image must equal p_i * pi(x_i).
  StringHom(WeightSeq domain, WeightSeq codomain, std::vector<GroupElement> images,
            GroupElement c_image);
  static StringHom from_images(WeightSeq domain, WeightSeq codomain,
                               std::vector<GroupElement> images);

  const WeightSeq& domain() const { return domain_; }
  const WeightSeq& codomain() const { return codomain_; }
  // pi(x_i), 1-based.
  const GroupElement& image(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<GroupElement>& images() const { return images_; }
  const GroupElement& c_image() const { return c_image_; }
  std::vector<std::vector<Int>> matrix() const;

  // "(d, z2+z3, z1)"
  std::string to_string() const;

  bool operator==(const StringHom& other) const;

 private:
  WeightSeq domain_;
  WeightSeq codomain_;
  std::vector<GroupElement> images_;
  GroupElement c_image_;
};

StringHom identity_hom(const WeightSeq& p);

GroupElement eval(const StringHom& h, const GroupElement& x);

// Throws InfiniteKernel when pi(c) has degree 0.
FiniteSubgroup kernel(const StringHom& h);

bool is_effective(const StringHom& h);

// Checks the multiplicity condition on a finite window of shifts; see the
// comment at the definition for why the window suffices.
bool is_admissible_window(const StringHom& h);

// Checks that the kernel is trivial, cyclic or Klein and that h equals the
// canonical homomorphism for that kernel up to a weight-preserving
// permutation of the codomain generators.
bool is_admissible_structural(const StringHom& h);

// Codomain with weight-1 entries kept, ordered as: kernel indices first (each
// split into its parts), then the copies of the remaining weights in index order.
WeightSeq derive_codomain_raw(const WeightSeq& p, const FiniteSubgroup& h);
WeightSeq derive_codomain(const WeightSeq& p, const FiniteSubgroup& h);
// Explicit admissible hom with kernel h into derive_codomain(p, h).
StringHom canonical_hom(const WeightSeq& p, const FiniteSubgroup& h);
// The same hom into derive_codomain_raw(p, h), weight-1 generators kept.
StringHom canonical_hom_raw(const WeightSeq& p, const FiniteSubgroup& h);
// Projects away weight-1 codomain generators.
StringHom drop_unit_weights(const StringHom& h);

// Same domain, equal after dropping weight-1 codomain generators and
// permuting the remaining ones within equal weights.
bool equal_up_to_codomain_permutation(const StringHom& a, const StringHom& b);

// h2 after h1.
StringHom compose(const StringHom& h2, const StringHom& h1);

// |ker h2| * |ker h1| == |ker(h2 h1)|.
bool kernel_orders_multiply(const StringHom& h2, const StringHom& h1);

struct Decomposition {
  WeightSeq r;
  StringHom h1;
  StringHom h2;
};

Decomposition decompose(const WeightSeq& p, const FiniteSubgroup& h);

struct AdmissibleRecord {
  FiniteSubgroup kernel;
  WeightSeq codomain;
  StringHom hom;
};

std::vector<AdmissibleRecord> enumerate_admissible(const WeightSeq& p);

GroupElement image_of_omega(const StringHom& h);

// All x in L(p) with pi(x) = z. Requires a finite kernel.
std::vector<GroupElement> preimages(const StringHom& h, const GroupElement& z);

// Parses "d,z2+z3,z1" (one image per domain generator) into a hom.
StringHom parse_hom_images(const WeightSeq& p, const WeightSeq& q, const std::string& images);

}  // namespace wpl
