#include "wpl/subgroup_lattice.hpp"

#include <algorithm>
#include <set>

namespace wpl {

const char* to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::Cyclic: return "cyclic";
    case SubgroupKind::Klein: return "klein";
    case SubgroupKind::Other: return "other";
  }
  return "unknown";
}

namespace {

std::vector<GroupElement> closure(const WeightSeq& p, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{zero_element(p)};
  std::vector<GroupElement> frontier{zero_element(p)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = x + g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

GroupElement pair_difference(const WeightSeq& p, std::size_t i, std::size_t j, Int n) {
  std::vector<Int> coeffs(p.size(), 0);
  coeffs[i - 1] = p[i - 1] / n;
  coeffs[j - 1] = -(p[j - 1] / n);
  return element_from_raw(p, coeffs, 0);
}

std::string raw_difference(const WeightSeq& p, std::size_t i, std::size_t j, Int n) {
  auto term = [](Int c, std::size_t idx) {
    return (c == 1 ? std::string() : std::to_string(c)) + "x" + std::to_string(idx);
  };
  return term(p[i - 1] / n, i) + "-" + term(p[j - 1] / n, j);
}

}  // namespace

FiniteSubgroup FiniteSubgroup::trivial(const WeightSeq& p) {
  return FiniteSubgroup(p, SubgroupKind::Trivial, {zero_element(p)});
}

FiniteSubgroup FiniteSubgroup::cyclic(const WeightSeq& p, std::size_t i, std::size_t j, Int n) {
  if (!(1 <= i && i < j && j <= p.size())) {
    throw Error(ErrorKind::MalformedSubgroup, "cyclic needs 1 <= i < j <= t");
  }
  if (n < 2 || p[i - 1] % n != 0 || p[j - 1] % n != 0) {
    throw Error(ErrorKind::MalformedSubgroup, "cyclic order must be >= 2 and divide both weights");
  }
  FiniteSubgroup h(p, SubgroupKind::Cyclic, closure(p, {pair_difference(p, i, j, n)}));
  h.i_ = i;
  h.j_ = j;
  h.n_ = n;
  return h;
}

FiniteSubgroup FiniteSubgroup::klein(const WeightSeq& p, std::size_t i, std::size_t j,
                                     std::size_t k) {
  if (!(1 <= i && i < j && j < k && k <= p.size())) {
    throw Error(ErrorKind::MalformedSubgroup, "klein needs 1 <= i < j < k <= t");
  }
  if (p[i - 1] % 2 || p[j - 1] % 2 || p[k - 1] % 2) {
    throw Error(ErrorKind::MalformedSubgroup, "klein needs three even weights");
  }
  FiniteSubgroup h(p, SubgroupKind::Klein,
                   closure(p, {pair_difference(p, i, j, 2), pair_difference(p, i, k, 2)}));
  h.i_ = i;
  h.j_ = j;
  h.k_ = k;
  h.n_ = 2;
  return h;
}

bool FiniteSubgroup::contains(const GroupElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool FiniteSubgroup::same_elements(const FiniteSubgroup& other) const {
  return parent_ == other.parent_ && elements_ == other.elements_;
}

std::vector<GroupElement> FiniteSubgroup::generators() const {
  switch (kind_) {
    case SubgroupKind::Trivial: return {};
    case SubgroupKind::Cyclic: return {pair_difference(parent_, i_, j_, n_)};
    case SubgroupKind::Klein:
      return {pair_difference(parent_, i_, j_, 2), pair_difference(parent_, i_, k_, 2)};
    case SubgroupKind::Other: break;
  }
  std::vector<GroupElement> out;
  for (const auto& e : elements_) {
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

std::string FiniteSubgroup::generator_string() const {
  switch (kind_) {
    case SubgroupKind::Trivial: return "0";
    case SubgroupKind::Cyclic: return raw_difference(parent_, i_, j_, n_);
    case SubgroupKind::Klein:
      return raw_difference(parent_, i_, j_, 2) + "," + raw_difference(parent_, i_, k_, 2);
    case SubgroupKind::Other: break;
  }
  std::string s;
  for (const auto& g : generators()) s += (s.empty() ? "" : ",") + g.to_string();
  return s;
}

std::string FiniteSubgroup::label() const {
  switch (kind_) {
    case SubgroupKind::Trivial: return "0";
    case SubgroupKind::Cyclic: return "C" + std::to_string(n_);
    case SubgroupKind::Klein: return "C2xC2";
    case SubgroupKind::Other: return "other";
  }
  return "other";
}

std::string FiniteSubgroup::spec_string() const {
  switch (kind_) {
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::Cyclic:
      return "cyclic:" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(n_);
    case SubgroupKind::Klein:
      return "klein:" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(k_);
    case SubgroupKind::Other: return "other";
  }
  return "other";
}

std::vector<FiniteSubgroup> enumerate_kernel_candidates(const WeightSeq& p) {
  std::vector<FiniteSubgroup> out{FiniteSubgroup::trivial(p)};
  const std::size_t t = p.size();
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t j = i + 1; j <= t; ++j) {
      Int g = gcd_int(p[i - 1], p[j - 1]);
      for (Int n = 2; n <= g; ++n) {
        if (g % n == 0) out.push_back(FiniteSubgroup::cyclic(p, i, j, n));
      }
    }
  }
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t j = i + 1; j <= t; ++j) {
      for (std::size_t k = j + 1; k <= t; ++k) {
        if (p[i - 1] % 2 == 0 && p[j - 1] % 2 == 0 && p[k - 1] % 2 == 0) {
          out.push_back(FiniteSubgroup::klein(p, i, j, k));
        }
      }
    }
  }
  return out;
}

FiniteSubgroup subgroup_generated(const WeightSeq& p, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens) {
    if (g.parent() != p) throw Error(ErrorKind::ParentMismatch, "generator parent");
    if (delta(g) != 0) {
      throw Error(ErrorKind::InfiniteSubgroup, "generator " + g.to_string() + " has infinite order");
    }
  }
  std::vector<GroupElement> elems = closure(p, gens);
  if (elems.size() == 1) return FiniteSubgroup::trivial(p);
  // Candidates are recognized by order before comparing element sets.
  const Int order = static_cast<Int>(elems.size());
  const std::size_t t = p.size();
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t j = i + 1; j <= t; ++j) {
      Int g = gcd_int(p[i - 1], p[j - 1]);
      if (order >= 2 && g % order == 0) {
        FiniteSubgroup h = FiniteSubgroup::cyclic(p, i, j, order);
        if (h.elements() == elems) return h;
      }
    }
  }
  if (order == 4) {
    for (std::size_t i = 1; i <= t; ++i) {
      for (std::size_t j = i + 1; j <= t; ++j) {
        for (std::size_t k = j + 1; k <= t; ++k) {
          if (p[i - 1] % 2 || p[j - 1] % 2 || p[k - 1] % 2) continue;
          FiniteSubgroup h = FiniteSubgroup::klein(p, i, j, k);
          if (h.elements() == elems) return h;
        }
      }
    }
  }
  return FiniteSubgroup(p, SubgroupKind::Other, std::move(elems));
}

std::optional<std::pair<FiniteSubgroup, FiniteSubgroup>> product_split(const FiniteSubgroup& h) {
  const WeightSeq& p = h.parent();
  if (h.kind() == SubgroupKind::Klein) {
    return std::make_pair(FiniteSubgroup::cyclic(p, h.i(), h.j(), 2),
                          FiniteSubgroup::cyclic(p, h.i(), h.k(), 2));
  }
  if (h.kind() != SubgroupKind::Cyclic) return std::nullopt;
  const Int n = h.n();
  // Smallest prime factor's full power gives n1; the rest is n2.
  Int q = 2;
  while (n % q) ++q;
  Int n1 = 1;
  Int rest = n;
  while (rest % q == 0) {
    n1 *= q;
    rest /= q;
  }
  if (rest == 1) return std::nullopt;
  return std::make_pair(FiniteSubgroup::cyclic(p, h.i(), h.j(), n1),
                        FiniteSubgroup::cyclic(p, h.i(), h.j(), rest));
}

FiniteSubgroup parse_subgroup(const WeightSeq& p, const std::string& text) {
  auto parse_ints = [&](const std::string& body) {
    std::vector<Int> v;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty() || item.size() > 9 ||
          !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw Error(ErrorKind::ParseError, "subgroup '" + text + "'");
      }
      v.push_back(std::stoll(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return v;
  };
  if (text == "trivial" || text == "0") return FiniteSubgroup::trivial(p);
  if (text.rfind("cyclic:", 0) == 0) {
    auto v = parse_ints(text.substr(7));
    if (v.size() != 3) throw Error(ErrorKind::ParseError, "cyclic:i,j,n");
    return FiniteSubgroup::cyclic(p, static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), v[2]);
  }
  if (text.rfind("klein:", 0) == 0) {
    auto v = parse_ints(text.substr(6));
    if (v.size() != 3) throw Error(ErrorKind::ParseError, "klein:i,j,k");
    return FiniteSubgroup::klein(p, static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]),
                                 static_cast<std::size_t>(v[2]));
  }
  std::vector<GroupElement> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    gens.push_back(parse_element(p, text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                                 : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return subgroup_generated(p, gens);
}

}  // namespace wpl
