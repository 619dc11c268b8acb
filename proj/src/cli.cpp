#include "wpl/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "wpl/relations_graph.hpp"
#include "wpl/subgroup_lattice.hpp"
#include "wpl/tubular_params.hpp"

namespace wpl {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "wpl-equiv/1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  for (const auto& part : split_top_level(text)) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw UsageError("not an integer: " + part);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: " + part);
    }
  }
  return out;
}

json weights_json(const WeightSeq& p) { return p.weights(); }

json element_json(const GroupElement& x) {
  return {{"normal_form", x.to_string()},
          {"residues", x.residues()},
          {"shift", x.shift()},
          {"delta", delta(x)},
          {"mult", mult(x)},
          {"mu", mu(x)}};
}

json subgroup_json(const FiniteSubgroup& h) {
  json elems = json::array();
  for (const auto& e : h.elements()) elems.push_back(e.to_string());
  return {{"kind", to_string(h.kind())},
          {"spec", h.spec_string()},
          {"generators", h.generator_string()},
          {"label", h.label()},
          {"order", h.order()},
          {"elements", elems}};
}

json record_json(const AdmissibleRecord& r) {
  json j = hom_to_json(r.hom);
  j["kernel"] = r.kernel.generator_string();
  j["kernel_spec"] = r.kernel.spec_string();
  j["label"] = r.kernel.label();
  return j;
}

// "2,2,2,2;-1" -> weights and optional parameter.
std::pair<WeightSeq, std::optional<FieldElem>> parse_typed(const std::string& text) {
  auto semi = text.find(';');
  WeightSeq w = parse_weights(text.substr(0, semi));
  std::optional<FieldElem> lam;
  if (semi != std::string::npos) lam = parse_field(text.substr(semi + 1));
  return {w, lam};
}

json parse_json_arg(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

json finish(const std::string& command, json body) {
  json out{{"schema", kSchema}, {"command", command}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

std::vector<FieldElem> parse_params(const std::string& text) {
  std::vector<FieldElem> out;
  if (text.empty()) return out;
  for (const auto& part : split_top_level(text)) out.push_back(parse_field(part));
  return out;
}

// Accepts either the full parameter list (leading 1 included) or the
// parameters from generator 4 on.
std::vector<FieldElem> domain_params(const WeightSeq& p, std::vector<FieldElem> given) {
  const std::size_t s = pad_weights(p).size();
  const std::size_t full = s >= 3 ? s - 2 : 0;
  if (full > 0 && given.size() + 1 == full) given.insert(given.begin(), FieldElem(1));
  if (given.size() != full) {
    throw UsageError("expected " + std::to_string(full) + " parameters for " + p.to_string());
  }
  return given;
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

json hom_to_json(const StringHom& h) {
  json images = json::array();
  for (const auto& x : h.images()) images.push_back(x.to_string('z', 'd'));
  return {{"domain", weights_json(h.domain())},
          {"codomain", weights_json(h.codomain())},
          {"images", images},
          {"matrix", h.matrix()}};
}

StringHom hom_from_json(const json& j) {
  try {
    WeightSeq p(j.at("domain").get<std::vector<Int>>());
    WeightSeq q(j.at("codomain").get<std::vector<Int>>());
    if (j.contains("matrix")) {
      return StringHom(p, q, j.at("matrix").get<std::vector<std::vector<Int>>>());
    }
    std::string images;
    for (const auto& s : j.at("images")) {
      if (!images.empty()) images += ",";
      images += s.get<std::string>();
    }
    return parse_hom_images(p, q, images);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed hom JSON: ") + e.what());
  }
}

json phi_to_json(const CompatibleHom<FieldElem>& ch) {
  json j = hom_to_json(ch.pi);
  json mu = json::array();
  for (const auto& m : ch.codomain.mu) mu.push_back(m.to_string());
  json phi = json::array();
  for (const auto& f : ch.images) phi.push_back(f.to_string());
  j["algebra_weights"] = ch.codomain.q.weights();
  j["mu"] = mu;
  j["phi"] = phi;
  return j;
}

CompatibleHom<FieldElem> phi_from_json(const json& j) {
  StringHom pi = hom_from_json(j);
  try {
    WeightSeq q = j.contains("algebra_weights")
                      ? WeightSeq(j.at("algebra_weights").get<std::vector<Int>>())
                      : pad_weights(pi.codomain());
    std::vector<FieldElem> mu;
    for (const auto& m : j.at("mu")) mu.push_back(parse_field(m.get<std::string>()));
    Algebra<FieldElem> a = make_algebra(q, mu);
    std::vector<GradedPoly<FieldElem>> images;
    for (const auto& f : j.at("phi")) images.push_back(parse_poly(q, f.get<std::string>()));
    return CompatibleHom<FieldElem>{pi, a, images};
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed phi JSON: ") + e.what());
  }
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Admissible homomorphisms and equivariant relations of weighted projective lines",
               "wpl-equiv"};
  app.require_subcommand(1);

  std::string weights, coeffs, kernel_text, hom_text, hom2_text, phi_text, lambda_text;
  std::string src_text, dst_text, seeds_path, format = "json", expansion = "exhaustive";
  Int shift = 0;
  std::size_t param_depth = 2;

  auto add_p = [&](CLI::App* sub) {
    sub->add_option("-p,--weights", weights, "weight sequence, e.g. 2,3,4")->required();
  };

  auto* nf = app.add_subcommand("normal-form", "normal form of sum a_i x_i + l c");
  add_p(nf);
  nf->add_option("--coeffs", coeffs, "coefficients a_1,...,a_t")->required();
  nf->add_option("--shift", shift, "multiple of c");

  auto* tor = app.add_subcommand("torsion", "torsion subgroup");
  add_p(tor);
  auto* cls = app.add_subcommand("classify", "domestic, tubular or wild");
  add_p(cls);
  auto* sgs = app.add_subcommand("subgroups", "trivial, cyclic and Klein kernel candidates");
  add_p(sgs);

  auto* der = app.add_subcommand("derive", "codomain and canonical hom for a kernel");
  add_p(der);
  der->add_option("--kernel", kernel_text, "cyclic:i,j,n | klein:i,j,k | generators")->required();

  auto* chk = app.add_subcommand("check-admissible", "run the window and structural checkers");
  chk->add_option("--hom", hom_text, "hom JSON")->required();

  auto* enu = app.add_subcommand("enumerate", "all admissible homs up to codomain permutation");
  add_p(enu);

  auto* cmp = app.add_subcommand("compose", "hom2 after hom1");
  cmp->add_option("--hom1", hom_text, "first hom JSON")->required();
  cmp->add_option("--hom2", hom2_text, "second hom JSON")->required();

  auto* dec = app.add_subcommand("decompose", "split an admissible hom along a product kernel");
  add_p(dec);
  dec->add_option("--kernel", kernel_text, "kernel")->required();

  auto* cphi = app.add_subcommand("check-phi", "verify a compatible algebra homomorphism");
  cphi->add_option("--phi", phi_text, "phi JSON")->required();
  cphi->add_option("--lambda", lambda_text, "domain parameters, comma separated");

  auto* mphi = app.add_subcommand("construct-phi", "algebra homomorphism for a cyclic kernel");
  add_p(mphi);
  mphi->add_option("--lambda", lambda_text, "domain parameters, comma separated");
  mphi->add_option("--kernel", kernel_text, "cyclic kernel")->required();

  auto* tub = app.add_subcommand("tubular", "parameter orbits");
  tub->require_subcommand(1);
  auto* tg = tub->add_subcommand("gamma", "the orbit Gamma(lambda)");
  tg->add_option("--lambda", lambda_text, "parameter literal")->required();
  auto* te = tub->add_subcommand("edge", "parameter condition for a tubular relation");
  te->add_option("--src", src_text, "source, e.g. 2,2,2,2;-1")->required();
  te->add_option("--kernel", kernel_text, "kernel")->required();
  te->add_option("--dst", dst_text, "target")->required();

  auto* gr = app.add_subcommand("graph", "equivariant relations graph");
  gr->add_option("--seeds", seeds_path, "seed file")->required();
  gr->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  gr->add_option("--expansion", expansion, "exhaustive or chain")
      ->check(CLI::IsMember({"exhaustive", "chain"}));
  gr->add_option("--param-depth", param_depth, "(2,2,2,2) expansion budget");

  CommandResult res;
  auto usage = [&](const std::string& msg) {
    res = CommandResult{};
    res.status = CommandStatus::Error;
    res.exit_code = 2;
    res.diagnostics.push_back("usage: " + msg);
    return res;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.text = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (*nf) {
      WeightSeq p = parse_weights(weights);
      auto c = parse_int_list(coeffs);
      res.payload = finish("normal-form", element_json(element_from_raw(p, c, shift)));
    } else if (*tor) {
      WeightSeq p = parse_weights(weights);
      json elems = json::array();
      auto t = torsion_subgroup(p);
      for (const auto& e : t) elems.push_back(e.to_string());
      res.payload = finish("torsion", {{"weights", weights_json(p)},
                                       {"order", t.size()},
                                       {"elements", elems}});
    } else if (*cls) {
      WeightSeq p = parse_weights(weights);
      res.payload = finish("classify", {{"weights", weights_json(p)},
                                        {"type", to_string(classify_type(p))},
                                        {"delta_omega", delta(dualizing_omega(p))}});
    } else if (*sgs) {
      WeightSeq p = parse_weights(weights);
      json list = json::array();
      for (const auto& h : enumerate_kernel_candidates(p)) list.push_back(subgroup_json(h));
      res.payload = finish("subgroups", {{"weights", weights_json(p)}, {"subgroups", list}});
    } else if (*der) {
      WeightSeq p = parse_weights(weights);
      FiniteSubgroup h = parse_subgroup(p, kernel_text);
      res.payload = finish("derive", {{"kernel", subgroup_json(h)},
                                      {"codomain", weights_json(derive_codomain(p, h))},
                                      {"raw_codomain", weights_json(derive_codomain_raw(p, h))},
                                      {"hom", hom_to_json(canonical_hom(p, h))}});
    } else if (*chk) {
      StringHom h = hom_from_json(parse_json_arg(hom_text));
      json body{{"hom", hom_to_json(h)}};
      try {
        body["kernel"] = subgroup_json(kernel(h));
      } catch (const Error& e) {
        body["kernel"] = error_name(e.kind());
      }
      body["effective"] = is_effective(h);
      body["window"] = is_admissible_window(h);
      body["structural"] = is_admissible_structural(h);
      body["agree"] = body["window"] == body["structural"];
      res.payload = finish("check-admissible", body);
    } else if (*enu) {
      WeightSeq p = parse_weights(weights);
      json list = json::array();
      std::size_t nontrivial = 0;
      for (const auto& r : enumerate_admissible(p)) {
        if (r.kernel.kind() != SubgroupKind::Trivial) ++nontrivial;
        list.push_back(record_json(r));
      }
      res.payload = finish("enumerate", {{"weights", weights_json(p)},
                                         {"type", to_string(classify_type(p))},
                                         {"nontrivial", nontrivial},
                                         {"records", list}});
    } else if (*cmp) {
      StringHom h1 = hom_from_json(parse_json_arg(hom_text));
      StringHom h2 = hom_from_json(parse_json_arg(hom2_text));
      StringHom c = compose(h2, h1);
      res.payload = finish("compose", {{"hom", hom_to_json(c)},
                                       {"window", is_admissible_window(c)},
                                       {"structural", is_admissible_structural(c)},
                                       {"kernel_orders_multiply", kernel_orders_multiply(h2, h1)}});
    } else if (*dec) {
      WeightSeq p = parse_weights(weights);
      FiniteSubgroup h = parse_subgroup(p, kernel_text);
      Decomposition d = decompose(p, h);
      StringHom c = compose(d.h2, d.h1);
      res.payload =
          finish("decompose", {{"r", weights_json(d.r)},
                               {"h1", hom_to_json(d.h1)},
                               {"h1_kernel", kernel(d.h1).label()},
                               {"h2", hom_to_json(d.h2)},
                               {"h2_kernel", kernel(d.h2).label()},
                               {"composite", hom_to_json(c)},
                               {"matches_canonical",
                                equal_up_to_codomain_permutation(c, canonical_hom(p, h))}});
    } else if (*cphi) {
      CompatibleHom<FieldElem> ch = phi_from_json(parse_json_arg(phi_text));
      Algebra<FieldElem> dom =
          make_algebra(pad_weights(ch.pi.domain()),
                       domain_params(ch.pi.domain(), parse_params(lambda_text)));
      json body{{"compatible", check_compatible(ch)}, {"relations", check_relations(ch, dom)}};
      try {
        body["surjective_small_degree"] = check_surjective_small_degree(ch);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionViolation) throw;
        body["surjective_small_degree"] = nullptr;
        res.diagnostics.push_back(e.what());
      }
      res.payload = finish("check-phi", body);
    } else if (*mphi) {
      WeightSeq p = parse_weights(weights);
      Algebra<FieldElem> dom =
          make_algebra(pad_weights(p), domain_params(p, parse_params(lambda_text)));
      FiniteSubgroup h = parse_subgroup(p, kernel_text);
      PhiResult r = construct_cyclic_phi_auto(dom, h);
      json body{{"exact", r.exact}};
      if (r.exact) {
        body["phi"] = phi_to_json(*r.exact_hom);
      } else {
        json mu = json::array();
        for (const auto& m : r.numeric_hom.codomain.mu) mu.push_back(to_string(m));
        json images = json::array();
        for (const auto& f : r.numeric_hom.images) images.push_back(f.to_string());
        json phi = hom_to_json(r.numeric_hom.pi);
        phi["mu"] = mu;
        phi["phi"] = images;
        body["phi"] = phi;
      }
      res.payload = finish("construct-phi", body);
    } else if (*tg) {
      ParamOrbit o = gamma(parse_field(lambda_text));
      res.payload = finish("tubular gamma", {{"lambda", o.members[0].to_string()},
                                             {"representative", o.representative.to_string()},
                                             {"orbit", o.sorted_literals()},
                                             {"j", j_invariant(o.members[0]).to_string()}});
    } else if (*te) {
      auto [p, lam] = parse_typed(src_text);
      auto [q, mu] = parse_typed(dst_text);
      FiniteSubgroup h = parse_subgroup(p, kernel_text);
      res.payload = finish("tubular edge", {{"source", src_text},
                                            {"target", dst_text},
                                            {"kernel", subgroup_json(h)},
                                            {"holds", tubular_edge_check(p, lam, h, q, mu)}});
    } else if (*gr) {
      std::ifstream in(seeds_path);
      if (!in) throw UsageError("cannot read seed file " + seeds_path);
      std::stringstream ss;
      ss << in.rdbuf();
      GraphOptions opt;
      opt.expansion = expansion == "chain" ? OrbitExpansion::Chain : OrbitExpansion::Exhaustive;
      opt.param_depth = param_depth;
      RelationGraph g = build_graph(parse_seeds(ss.str()), opt);
      if (format == "dot") {
        res.text = to_dot(g);
        res.payload = nullptr;
      } else {
        res.payload = finish("graph", to_json(g));
      }
      for (const auto& n : g.notes) res.diagnostics.push_back(n);
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    res = CommandResult{};
    res.status = CommandStatus::Error;
    res.exit_code = e.kind() == ErrorKind::ParseError ? 2 : 1;
    res.diagnostics.push_back(e.what());
  }
  return res;
}

}  // namespace wpl
