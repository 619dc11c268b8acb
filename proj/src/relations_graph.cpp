#include "wpl/relations_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace wpl {

namespace {

std::string join(const std::vector<Int>& w, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(w[k]);
  }
  return out;
}

WeightSeq sorted_type(const WeightSeq& p) { return WeightSeq(canonicalize(p).weights.sorted_desc()); }

// Fixed parameter of the (2,2,2,2) target reached from (4,4,2) or (6,3,2).
std::optional<FieldElem> tubular_target_parameter(const WeightSeq& p) {
  if (classify_type(p) != GroupType::Tubular) return std::nullopt;
  const std::vector<Int> w = canonicalize(p).weights.sorted_desc();
  if (w == std::vector<Int>{4, 4, 2}) return FieldElem(-1);
  if (w == std::vector<Int>{6, 3, 2}) return omega();
  return std::nullopt;
}

class Builder {
 public:
  explicit Builder(const GraphOptions& opt) : opt_(opt) {}

  void seed(const Seed& s) {
    WeightSeq w = sorted_type(s.weights);
    std::optional<FieldElem> lam;
    if (s.lambda && is_2222(w)) lam = s.lambda;
    find_or_add(w, lam, 0);
  }

  void run() {
    while (!queue_.empty()) {
      std::size_t i = queue_.front();
      queue_.pop_front();
      expand(i);
    }
  }

  RelationGraph finish() {
    RelationGraph g;
    std::vector<std::size_t> order(nodes_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return nodes_[a].id() < nodes_[b].id(); });
    std::vector<std::size_t> rank(nodes_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      rank[order[k]] = k;
      g.nodes.push_back(nodes_[order[k]]);
    }
    for (auto e : edges_) {
      e.source = rank[e.source];
      e.target = rank[e.target];
      g.edges.push_back(std::move(e));
    }
    std::sort(g.edges.begin(), g.edges.end(), [&](const RelationEdge& a, const RelationEdge& b) {
      return std::make_tuple(g.nodes[a.source].id(), g.nodes[a.target].id(), a.label) <
             std::make_tuple(g.nodes[b.source].id(), g.nodes[b.target].id(), b.label);
    });
    g.notes = notes_;
    return g;
  }

 private:
  std::optional<std::size_t> find_or_add(const WeightSeq& w, const std::optional<FieldElem>& lam,
                                         std::size_t chain_index) {
    std::optional<ParamOrbit> orbit;
    if (lam) orbit = gamma(*lam);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const RelationNode& n = nodes_[k];
      if (n.weights != w || n.orbit.has_value() != orbit.has_value()) continue;
      if (!orbit || same_orbit(*n.orbit, *orbit)) return k;
    }
    if (nodes_.size() >= opt_.max_nodes) {
      notes_.push_back("node budget reached, dropped " + RelationNode{w, orbit, chain_index}.label());
      return std::nullopt;
    }
    nodes_.push_back(RelationNode{w, orbit, chain_index});
    values_.push_back(lam);
    queue_.push_back(nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  void add_edge(std::size_t s, std::size_t t, const AdmissibleRecord& rec) {
    const std::string label = rec.kernel.label();
    for (const auto& e : edges_) {
      if (e.source == s && e.target == t && e.label == label) return;
    }
    edges_.push_back(RelationEdge{s, t, label, rec});
  }

  // C2 targets of a (2,2,2,2) node as parameter values.
  std::vector<FieldElem> c2_targets(std::size_t i) {
    const FieldElem& v = *values_[i];
    std::vector<FieldElem> out;
    try {
      if (opt_.expansion == OrbitExpansion::Chain) {
        out.push_back(f_sqrt(v));
      } else {
        std::vector<std::string> skipped;
        for (const auto& o : f_sqrt_targets(v, &skipped)) out.push_back(o.members[0]);
        for (const auto& s : skipped) {
          notes_.push_back("sqrt(" + s + ") exceeds the tower cap; C2 target skipped");
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TowerDepthExceeded) throw;
      notes_.push_back("sqrt(" + v.to_string() + ") exceeds the tower cap; C2 target skipped");
    }
    return out;
  }

  void expand(std::size_t i) {
    const RelationNode node = nodes_[i];
    const bool parametrized = node.orbit.has_value();
    if (parametrized && node.chain_index >= opt_.param_depth) {
      notes_.push_back(node.id() + " not expanded (parameter depth)");
      return;
    }
    std::optional<std::vector<FieldElem>> targets;
    for (const auto& rec : enumerate_admissible(node.weights)) {
      if (rec.kernel.kind() == SubgroupKind::Trivial) continue;
      if (parametrized) {
        if (rec.kernel.kind() == SubgroupKind::Klein) {
          if (opt_.expansion == OrbitExpansion::Exhaustive ||
              node.chain_index + 2 <= opt_.param_depth) {
            add_edge(i, i, rec);
          }
          continue;
        }
        if (!targets) targets = c2_targets(i);
        for (const auto& t : *targets) {
          if (auto j = find_or_add(node.weights, t, node.chain_index + 1)) add_edge(i, *j, rec);
        }
        continue;
      }
      WeightSeq q = sorted_type(rec.codomain);
      std::optional<FieldElem> mu;
      if (is_2222(q)) mu = tubular_target_parameter(node.weights);
      if (auto j = find_or_add(q, mu, 0)) add_edge(i, *j, rec);
    }
  }

  GraphOptions opt_;
  std::vector<RelationNode> nodes_;
  // Value each (2,2,2,2) node was first reached with.
  std::vector<std::optional<FieldElem>> values_;
  std::vector<RelationEdge> edges_;
  std::vector<std::string> notes_;
  std::deque<std::size_t> queue_;
};

}  // namespace

std::string RelationNode::id() const {
  std::string out = "w" + join(weights.weights(), "_");
  if (orbit) out += "_lam_" + orbit->representative.to_string();
  return out;
}

std::string RelationNode::label() const {
  std::string out = "(" + join(weights.weights(), ",");
  if (orbit) out += ";" + orbit->representative.to_string();
  return out + ")";
}

RelationGraph build_graph(const std::vector<Seed>& seeds, const GraphOptions& options) {
  Builder b(options);
  for (const auto& s : seeds) b.seed(s);
  b.run();
  return b.finish();
}

std::string to_dot(const RelationGraph& g) {
  std::ostringstream os;
  os << "digraph relations {\n";
  for (const auto& n : g.nodes) {
    os << "  \"" << n.id() << "\" [label=\"" << n.label() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  \"" << g.nodes[e.source].id() << "\" -> \"" << g.nodes[e.target].id()
       << "\" [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const RelationGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : g.nodes) {
    nlohmann::json j{{"id", n.id()}, {"weights", n.weights.weights()}};
    if (n.orbit) {
      j["representative"] = n.orbit->representative.to_string();
      j["orbit"] = n.orbit->sorted_literals();
    }
    nodes.push_back(std::move(j));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    const StringHom& h = e.witness.hom;
    edges.push_back({{"source", g.nodes[e.source].id()},
                     {"target", g.nodes[e.target].id()},
                     {"label", e.label},
                     {"kernel", e.witness.kernel.generator_string()},
                     {"domain", h.domain().weights()},
                     {"codomain", h.codomain().weights()},
                     {"matrix", h.matrix()}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"notes", g.notes}};
}

std::vector<Seed> parse_seeds(const std::string& text) {
  std::vector<Seed> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    Seed s;
    auto semi = line.find(';');
    s.weights = parse_weights(line.substr(0, semi));
    if (semi != std::string::npos) {
      if (!is_2222(s.weights)) {
        throw Error(ErrorKind::ParseError, "a parameter is only allowed on (2,2,2,2): " + line);
      }
      s.lambda = parse_field(line.substr(semi + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wpl
