#include "wpl/admissible_hom.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace wpl {

namespace {

GroupElement row_to_element(const WeightSeq& q, const std::vector<Int>& row) {
  if (row.size() != q.size() + 1) {
    throw Error(ErrorKind::LengthMismatch, "matrix row needs s+1 entries");
  }
  std::vector<Int> coeffs(row.begin(), row.end() - 1);
  return element_from_raw(q, coeffs, row.back());
}

// Domain residue vectors in mixed radix, first index fastest.
template <typename F>
void for_each_residue_vector(const WeightSeq& p, F&& f) {
  Int total = p.product();
  if (total > kDefaultTorsionCap) {
    throw Error(ErrorKind::TorsionCapExceeded, "domain too large for exhaustive scan");
  }
  std::vector<Int> res(p.size(), 0);
  for (Int n = 0; n < total; ++n) {
    f(res);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (++res[i] < p[i]) break;
      res[i] = 0;
    }
  }
}

}  // namespace

StringHom::StringHom(WeightSeq domain, WeightSeq codomain,
                     const std::vector<std::vector<Int>>& matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), c_image_(zero_element(codomain_)) {
  if (matrix.size() != domain_.size()) {
    throw Error(ErrorKind::LengthMismatch, "matrix needs one row per domain generator");
  }
  if (domain_.size() == 0) {
    throw Error(ErrorKind::InvalidArgument, "t = 0 domain needs an explicit image of c");
  }
  for (const auto& row : matrix) images_.push_back(row_to_element(codomain_, row));
  c_image_ = scalar_mul(domain_[0], images_[0]);
  for (std::size_t i = 1; i < images_.size(); ++i) {
    if (scalar_mul(domain_[i], images_[i]) != c_image_) {
      throw Error(ErrorKind::NotWellDefined,
                  "p_1*pi(x_1) != p_" + std::to_string(i + 1) + "*pi(x_" + std::to_string(i + 1) + ")");
    }
  }
}

StringHom::StringHom(WeightSeq domain, WeightSeq codomain, std::vector<GroupElement> images,
                     GroupElement c_image)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      c_image_(std::move(c_image)) {
  if (images_.size() != domain_.size()) {
    throw Error(ErrorKind::LengthMismatch, "one image per domain generator");
  }
  if (c_image_.parent() != codomain_) throw Error(ErrorKind::ParentMismatch, "image of c");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].parent() != codomain_) throw Error(ErrorKind::ParentMismatch, "image parent");
    if (scalar_mul(domain_[i], images_[i]) != c_image_) {
      throw Error(ErrorKind::NotWellDefined,
                  "p_" + std::to_string(i + 1) + "*pi(x_" + std::to_string(i + 1) + ") != pi(c)");
    }
  }
}

StringHom StringHom::from_images(WeightSeq domain, WeightSeq codomain,
                                 std::vector<GroupElement> images) {
  if (domain.size() == 0) {
    throw Error(ErrorKind::InvalidArgument, "t = 0 domain needs an explicit image of c");
  }
  if (images.size() != domain.size()) {
    throw Error(ErrorKind::LengthMismatch, "one image per domain generator");
  }
  GroupElement c = scalar_mul(domain[0], images[0]);
  return StringHom(std::move(domain), std::move(codomain), std::move(images), std::move(c));
}

std::vector<std::vector<Int>> StringHom::matrix() const {
  std::vector<std::vector<Int>> m;
  for (const auto& img : images_) {
    std::vector<Int> row = img.residues();
    row.push_back(img.shift());
    m.push_back(std::move(row));
  }
  return m;
}

std::string StringHom::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ", ";
    s += images_[i].to_string('z', 'd');
  }
  return s + ")";
}

bool StringHom::operator==(const StringHom& other) const {
  return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_ &&
         c_image_ == other.c_image_;
}

StringHom identity_hom(const WeightSeq& p) {
  std::vector<GroupElement> imgs;
  for (std::size_t i = 1; i <= p.size(); ++i) imgs.push_back(generator(p, i));
  return StringHom(p, p, std::move(imgs), canonical_c(p));
}

GroupElement eval(const StringHom& h, const GroupElement& x) {
  if (x.parent() != h.domain()) throw Error(ErrorKind::ParentMismatch, "eval argument");
  const WeightSeq& q = h.codomain();
  std::vector<Int> coeffs(q.size(), 0);
  Int shift = 0;
  auto accumulate = [&](Int k, const GroupElement& img) {
    if (k == 0) return;
    for (std::size_t j = 0; j < q.size(); ++j) coeffs[j] += k * img.residues()[j];
    shift += k * img.shift();
  };
  for (std::size_t i = 0; i < x.residues().size(); ++i) accumulate(x.residues()[i], h.images()[i]);
  accumulate(x.shift(), h.c_image());
  return element_from_raw(q, coeffs, shift);
}

FiniteSubgroup kernel(const StringHom& h) {
  if (delta(h.c_image()) == 0) {
    throw Error(ErrorKind::InfiniteKernel, "pi(c) = " + h.c_image().to_string('z', 'd') +
                                               " has degree 0");
  }
  // pi(c) has infinite order, so the kernel meets Zc trivially and lies in
  // the torsion subgroup.
  std::vector<GroupElement> gens;
  for (const auto& y : torsion_subgroup(h.domain())) {
    if (!y.is_zero() && eval(h, y).is_zero()) gens.push_back(y);
  }
  return subgroup_generated(h.domain(), gens);
}

bool is_effective(const StringHom& h) {
  const WeightSeq& q = h.codomain();
  for (std::size_t j = 0; j < q.size(); ++j) {
    Int g = q[j];
    for (const auto& img : h.images()) g = gcd_int(g, img.residues()[j]);
    if (h.domain().size() == 0) g = gcd_int(g, h.c_image().residues()[j]);
    if (g != 1) return false;
  }
  return true;
}

// Window certificate. Fix a residue vector x0 of L(p) and walk the line
// x0 + l c. The left side sum_{h in K} mult(x0 + l c + h) equals
// sum_h max(l + s_h + 1, 0) with s_h the shift of x0 + h, and -t <= s_h <= t.
// The right side is mult(pi(x0) + l pi(c)); its shift is
//   (delta'(pi(x0)) + l delta'(pi(c)) - sum_j r_j(l) q/q_j) / q
// where r_j(l) are residues, periodic in l with period dividing q = lcm(q).
// Equal asymptotic slopes force delta'(pi(c)) = |K| q, checked exactly.
// Then delta'(pi(x0)) lies in [0, |K| q t], so both sides vanish for l < -t-1
// and neither is clamped for l > t + s. Past that point their difference is
// periodic with period dividing q, so [-B, max(B, t + s + 2) + 2q] with
// B = sum p_i + |K| + 2 decides every l.
bool is_admissible_window(const StringHom& h) {
  FiniteSubgroup K = FiniteSubgroup::trivial(h.domain());
  try {
    K = kernel(h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfiniteKernel) return false;
    throw;
  }
  if (!is_effective(h)) return false;
  const WeightSeq& p = h.domain();
  const WeightSeq& q = h.codomain();
  const Int order = K.order();
  const Int qlcm = q.lcm();
  if (delta(h.c_image()) != order * qlcm) return false;

  Int B = order + 2;
  for (Int w : p.weights()) B += w;
  const Int lo = -B;
  const Int settle = std::max<Int>(B, static_cast<Int>(p.size() + q.size()) + 2);
  const Int hi = settle + 2 * qlcm;
  const GroupElement& ec = h.c_image();
  bool ok = true;
  std::vector<Int> shifts(K.elements().size());
  for_each_residue_vector(p, [&](const std::vector<Int>& res) {
    if (!ok) return;
    GroupElement x0(p, res, 0);
    for (std::size_t k = 0; k < K.elements().size(); ++k) {
      shifts[k] = add(x0, K.elements()[k]).shift();
    }
    GroupElement e0 = eval(h, x0);
    for (Int l = lo; l <= hi; ++l) {
      Int lhs = 0;
      for (Int s : shifts) lhs += std::max<Int>(s + l + 1, 0);
      Int shift = e0.shift() + l * ec.shift();
      for (std::size_t j = 0; j < q.size(); ++j) {
        shift += floor_div(e0.residues()[j] + l * ec.residues()[j], q[j]);
      }
      Int rhs = std::max<Int>(shift + 1, 0);
      if (lhs != rhs) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

WeightSeq derive_codomain_raw(const WeightSeq& p, const FiniteSubgroup& h) {
  std::vector<Int> q;
  const std::size_t t = p.size();
  switch (h.kind()) {
    case SubgroupKind::Trivial:
      return p;
    case SubgroupKind::Cyclic: {
      const Int n = h.n();
      q.push_back(p[h.i() - 1] / n);
      q.push_back(p[h.j() - 1] / n);
      for (std::size_t k = 1; k <= t; ++k) {
        if (k == h.i() || k == h.j()) continue;
        for (Int c = 0; c < n; ++c) q.push_back(p[k - 1]);
      }
      break;
    }
    case SubgroupKind::Klein: {
      for (std::size_t idx : {h.i(), h.j(), h.k()}) {
        q.push_back(p[idx - 1] / 2);
        q.push_back(p[idx - 1] / 2);
      }
      for (std::size_t k = 1; k <= t; ++k) {
        if (k == h.i() || k == h.j() || k == h.k()) continue;
        for (int c = 0; c < 4; ++c) q.push_back(p[k - 1]);
      }
      break;
    }
    case SubgroupKind::Other:
      throw Error(ErrorKind::UnsupportedKernel, "kernel is neither cyclic nor Klein type");
  }
  return WeightSeq(std::move(q));
}

WeightSeq derive_codomain(const WeightSeq& p, const FiniteSubgroup& h) {
  return canonicalize(derive_codomain_raw(p, h)).weights;
}

StringHom canonical_hom_raw(const WeightSeq& p, const FiniteSubgroup& h) {
  if (h.parent() != p) throw Error(ErrorKind::ParentMismatch, "subgroup parent");
  if (h.kind() == SubgroupKind::Other) {
    throw Error(ErrorKind::UnsupportedKernel, "kernel is neither cyclic nor Klein type");
  }
  if (h.kind() == SubgroupKind::Trivial) return identity_hom(p);
  const WeightSeq raw = derive_codomain_raw(p, h);
  const std::size_t t = p.size();
  // slots[k] lists the raw codomain generators attached to domain index k.
  std::vector<std::vector<std::size_t>> slots(t);
  std::size_t next = 0;
  if (h.kind() == SubgroupKind::Cyclic) {
    slots[h.i() - 1] = {next++};
    slots[h.j() - 1] = {next++};
    for (std::size_t k = 1; k <= t; ++k) {
      if (k == h.i() || k == h.j()) continue;
      for (Int c = 0; c < h.n(); ++c) slots[k - 1].push_back(next++);
    }
  } else {
    for (std::size_t idx : {h.i(), h.j(), h.k()}) {
      slots[idx - 1] = {next, next + 1};
      next += 2;
    }
    for (std::size_t k = 1; k <= t; ++k) {
      if (k == h.i() || k == h.j() || k == h.k()) continue;
      for (int c = 0; c < 4; ++c) slots[k - 1].push_back(next++);
    }
  }
  // A weight-1 generator of the raw codomain equals d.
  std::vector<GroupElement> images;
  for (std::size_t k = 0; k < t; ++k) {
    std::vector<Int> coeffs(raw.size(), 0);
    for (std::size_t j : slots[k]) coeffs[j] += 1;
    images.push_back(element_from_raw(raw, coeffs, 0));
  }
  return StringHom::from_images(p, raw, std::move(images));
}

StringHom drop_unit_weights(const StringHom& h) {
  Canonicalized canon = canonicalize(h.codomain());
  // Residues at weight-1 coordinates are always 0.
  auto project = [&](const GroupElement& x) {
    std::vector<Int> res;
    for (std::size_t j : canon.kept) res.push_back(x.residues()[j]);
    return GroupElement(canon.weights, std::move(res), x.shift());
  };
  std::vector<GroupElement> images;
  for (const auto& img : h.images()) images.push_back(project(img));
  return StringHom(h.domain(), canon.weights, std::move(images), project(h.c_image()));
}

StringHom canonical_hom(const WeightSeq& p, const FiniteSubgroup& h) {
  return drop_unit_weights(canonical_hom_raw(p, h));
}

bool equal_up_to_codomain_permutation(const StringHom& a, const StringHom& b) {
  if (a.domain() != b.domain()) return false;
  if (a.c_image().shift() != b.c_image().shift()) return false;
  // Columns are compared as (weight, column entries) multisets; a column
  // permutation preserving weights exists exactly when these agree.
  auto columns = [](const StringHom& h) {
    std::vector<std::vector<Int>> cols;
    const WeightSeq& q = h.codomain();
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 1) continue;
      std::vector<Int> col{q[j]};
      for (const auto& img : h.images()) col.push_back(img.residues()[j]);
      col.push_back(h.c_image().residues()[j]);
      cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  for (std::size_t i = 0; i < a.images().size(); ++i) {
    if (a.images()[i].shift() != b.images()[i].shift()) return false;
  }
  return columns(a) == columns(b);
}

bool is_admissible_structural(const StringHom& h) {
  const WeightSeq& p = h.domain();
  if (!p.is_canonical()) {
    // x_i = c when p_i = 1, so the hom is determined by the remaining rows.
    Canonicalized canon = canonicalize(p);
    std::vector<GroupElement> imgs;
    for (std::size_t i : canon.kept) imgs.push_back(h.images()[i]);
    return is_admissible_structural(
        StringHom(canon.weights, h.codomain(), std::move(imgs), h.c_image()));
  }
  FiniteSubgroup K = FiniteSubgroup::trivial(p);
  try {
    K = kernel(h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfiniteKernel) return false;
    throw;
  }
  if (K.kind() == SubgroupKind::Other) return false;
  if (derive_codomain(p, K).sorted_desc() != h.codomain().sorted_desc()) return false;
  return equal_up_to_codomain_permutation(h, canonical_hom(p, K));
}

StringHom compose(const StringHom& h2, const StringHom& h1) {
  if (h1.codomain() != h2.domain()) {
    throw Error(ErrorKind::DomainMismatch, "codomain " + h1.codomain().to_string() +
                                               " != domain " + h2.domain().to_string());
  }
  std::vector<GroupElement> imgs;
  for (const auto& img : h1.images()) imgs.push_back(eval(h2, img));
  return StringHom(h1.domain(), h2.codomain(), std::move(imgs), eval(h2, h1.c_image()));
}

bool kernel_orders_multiply(const StringHom& h2, const StringHom& h1) {
  StringHom comp = compose(h2, h1);
  return kernel(h2).order() * kernel(h1).order() == kernel(comp).order();
}

Decomposition decompose(const WeightSeq& p, const FiniteSubgroup& h) {
  auto split = product_split(h);
  if (!split) throw Error(ErrorKind::NoSplit, "subgroup " + h.spec_string() + " has no coprime split");
  const FiniteSubgroup& h1 = split->first;
  const FiniteSubgroup& h2 = split->second;
  StringHom pi1 = canonical_hom(p, h1);
  std::vector<GroupElement> image_gens;
  for (const auto& g : h2.generators()) image_gens.push_back(eval(pi1, g));
  FiniteSubgroup image = subgroup_generated(pi1.codomain(), image_gens);
  StringHom pi2 = canonical_hom(pi1.codomain(), image);
  return Decomposition{pi1.codomain(), pi1, pi2};
}

std::vector<AdmissibleRecord> enumerate_admissible(const WeightSeq& p) {
  std::vector<AdmissibleRecord> out;
  for (const auto& h : enumerate_kernel_candidates(p)) {
    StringHom hom = canonical_hom(p, h);
    out.push_back(AdmissibleRecord{h, hom.codomain(), hom});
  }
  return out;
}

GroupElement image_of_omega(const StringHom& h) { return eval(h, dualizing_omega(h.domain())); }

std::vector<GroupElement> preimages(const StringHom& h, const GroupElement& z) {
  if (z.parent() != h.codomain()) throw Error(ErrorKind::ParentMismatch, "preimage target");
  const Int dc = delta(h.c_image());
  if (dc == 0) throw Error(ErrorKind::InfiniteKernel, "preimages of an infinite-kernel hom");
  // delta' o pi = (dc / lcm p) * delta, so delta(x) is forced.
  const WeightSeq& p = h.domain();
  const Int num = delta(z) * p.lcm();
  if (num % dc != 0) return {};
  const Int target = num / dc;
  std::vector<GroupElement> out;
  for_each_residue_vector(p, [&](const std::vector<Int>& res) {
    Int d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) d += res[i] * (p.lcm() / p[i]);
    if ((target - d) % p.lcm() != 0) return;
    GroupElement x(p, res, (target - d) / p.lcm());
    if (eval(h, x) == z) out.push_back(x);
  });
  return out;
}

StringHom parse_hom_images(const WeightSeq& p, const WeightSeq& q, const std::string& images) {
  std::vector<GroupElement> imgs;
  std::size_t pos = 0;
  while (pos <= images.size()) {
    std::size_t comma = images.find(',', pos);
    std::string item = images.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    imgs.push_back(parse_element(q, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return StringHom::from_images(p, q, std::move(imgs));
}

}  // namespace wpl
