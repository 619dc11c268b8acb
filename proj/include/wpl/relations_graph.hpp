#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpl/admissible_hom.hpp"
#include "wpl/tubular_params.hpp"

namespace wpl {

// A weight type, plus its Gamma-orbit when the type is (2,2,2,2) and a
// parameter is known.
struct RelationNode {
  WeightSeq weights;  // canonical, sorted descending
  std::optional<ParamOrbit> orbit;
  // Number of (2,2,2,2) -> (2,2,2,2) steps since the last other node or seed.
  std::size_t chain_index = 0;

  // "w4_4_2", "w2_2_2_2_lam_-1", "w" for the empty type.
  std::string id() const;
  // "(4,4,2)", "(2,2,2,2;-1)".
  std::string label() const;
};

struct RelationEdge {
  std::size_t source;
  std::size_t target;
  std::string label;  // "C2", "C4", "C2xC2"
  AdmissibleRecord witness;
};

struct RelationGraph {
  std::vector<RelationNode> nodes;  // sorted by id
  std::vector<RelationEdge> edges;  // sorted by (source id, target id, label)
  // Expansions cut by a budget or by the tower cap.
  std::vector<std::string> notes;
};

// How (2,2,2,2; lambda) nodes expand along C2 kernels. Exhaustive follows
// every orbit Gamma(f(sqrt(l'))), l' in Gamma(lambda); Chain follows only
// f(sqrt(v)) for the value v the node was reached with.
enum class OrbitExpansion { Exhaustive, Chain };

struct GraphOptions {
  OrbitExpansion expansion = OrbitExpansion::Exhaustive;
  // (2,2,2,2) nodes with chain_index >= param_depth are created but not
  // expanded. In Chain mode a Klein self-loop is added only where two further
  // C2 steps fit in the budget.
  std::size_t param_depth = 2;
  std::size_t max_nodes = 256;
};

struct Seed {
  WeightSeq weights;
  std::optional<FieldElem> lambda;
};

RelationGraph build_graph(const std::vector<Seed>& seeds, const GraphOptions& options = {});

std::string to_dot(const RelationGraph& g);
nlohmann::json to_json(const RelationGraph& g);

// One seed per line: "2,3,4" or "2,2,2,2;(1+sqrt(-3))/2". Blank lines and
// lines starting with '#' are skipped.
std::vector<Seed> parse_seeds(const std::string& text);

}  // namespace wpl
