#pragma once

#include <string>

#include "json.hpp"

#include "fatgraph/contraction.hpp"
#include "fatgraph/cubewiring.hpp"
#include "fatgraph/geometry.hpp"
#include "fatgraph/minor.hpp"
#include "fatgraph/separator.hpp"
#include "fatgraph/solvers.hpp"
#include "fatgraph/treedecomp.hpp"

namespace fatgraph {

using Json = nlohmann::json;

// Rationals travel as integers or "p/q" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json instance_to_json(const ObjectSet& objs);
ObjectSet instance_from_json(const Json& j);

Json graph_to_json(const IntersectionGraph& g);
IntersectionGraph graph_from_json(const Json& j);

Json separator_to_json(const CliqueSeparator& sep);
CliqueSeparator separator_from_json(const Json& j);

// Partitions carry their graph so downstream stages can run graph-only.
Json partition_to_json(const KappaPartition& part, const IntersectionGraph& g);
struct PartitionFile {
  KappaPartition part;
  IntersectionGraph graph;
  std::string gamma = "log";
};
PartitionFile partition_from_json(const Json& j);

Json decomposition_to_json(const WeightedTreeDecomposition& wtd);
WeightedTreeDecomposition decomposition_from_json(const Json& j);

Json result_to_json(const SolveResult& res, const std::string& problem);

Json wiring_instance_to_json(const WiringInstance& inst);
WiringInstance wiring_instance_from_json(const Json& j);

Json wiring_to_json(const Wiring& w);
Wiring wiring_from_json(const Json& j);

Json minor_embedding_to_json(const MinorEmbedding& emb);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fatgraph
