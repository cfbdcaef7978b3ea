#include "doctest.h"

#include "fatgraph/errors.hpp"
#include "fatgraph/minor.hpp"
#include "helpers.hpp"

using namespace fatgraph;
using namespace fatgraph::testing;

namespace {

IntersectionGraph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return IntersectionGraph::from_edges(n, edges);
}

void check_embedding(const IntersectionGraph& g, unsigned d) {
  MinorEmbedding emb = embed_minor(g, d);
  auto violations = verify_minor_embedding(emb);
  for (const auto& v : violations) FAIL_CHECK(v);
  IntersectionGraph quotient = contract_embedding(emb);
  CHECK(isomorphic_small(quotient, g));
}

}  // namespace

TEST_CASE("single edge embeds and contracts back to K2") { check_embedding(complete(2), 3); }

TEST_CASE("K4 embeds in three dimensions") { check_embedding(complete(4), 3); }

TEST_CASE("bipartite K33 embeds") {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
  check_embedding(IntersectionGraph::from_edges(6, edges), 3);
}

TEST_CASE("paths and cycles embed in four dimensions") {
  IntersectionGraph c5 = IntersectionGraph::from_edges(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  check_embedding(c5, 4);
}

TEST_CASE("rejects isolated vertices and low dimension") {
  IntersectionGraph lonely = IntersectionGraph::from_edges(3, {{0, 1}});
  CHECK_THROWS_AS(embed_minor(lonely, 3), std::invalid_argument);
  CHECK_THROWS_AS(embed_minor(complete(3), 2), unsupported_error);
}

TEST_CASE("canonical form identifies relabeled graphs") {
  IntersectionGraph a = IntersectionGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  IntersectionGraph b = IntersectionGraph::from_edges(5, {{4, 2}, {2, 0}, {0, 1}, {1, 3}});
  CHECK(isomorphic_small(a, b));  // both are paths on five vertices
  IntersectionGraph c = IntersectionGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(isomorphic_small(a, c));
}
