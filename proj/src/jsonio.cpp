#include "fatgraph/jsonio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fatgraph {

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return Json(q.get_num().get_si());
  return Json(format_rational(q));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

namespace {

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coords) arr.push_back(rational_to_json(c));
  return arr;
}

Point point_from_json(const Json& j) {
  Point p;
  for (const Json& c : j) p.coords.push_back(rational_from_json(c));
  return p;
}

}  // namespace

Json instance_to_json(const ObjectSet& objs) {
  Json out;
  out["dimension"] = objs.dimension;
  Json arr = Json::array();
  for (const FatObject& o : objs.objects) {
    Json jo;
    jo["id"] = o.id;
    if (const Ball* b = std::get_if<Ball>(&o.shape)) {
      jo["ball"] = Json{{"center", point_to_json(b->center)},
                        {"radius", rational_to_json(b->radius)}};
    } else {
      const Box& box = std::get<Box>(o.shape);
      Json sides = Json::array();
      for (const Rational& s : box.sides) sides.push_back(rational_to_json(s));
      jo["box"] = Json{{"min", point_to_json(box.min_corner)}, {"sides", sides}};
    }
    arr.push_back(std::move(jo));
  }
  out["objects"] = std::move(arr);
  return out;
}

ObjectSet instance_from_json(const Json& j) {
  ObjectSet out;
  out.dimension = j.at("dimension").get<unsigned>();
  for (const Json& jo : j.at("objects")) {
    FatObject o;
    o.id = jo.at("id").get<int>();
    if (jo.contains("ball")) {
      Ball b;
      b.center = point_from_json(jo.at("ball").at("center"));
      b.radius = rational_from_json(jo.at("ball").at("radius"));
      o.shape = std::move(b);
    } else if (jo.contains("box")) {
      Box b;
      b.min_corner = point_from_json(jo.at("box").at("min"));
      for (const Json& s : jo.at("box").at("sides")) b.sides.push_back(rational_from_json(s));
      o.shape = std::move(b);
    } else {
      throw std::invalid_argument("object needs a ball or a box shape");
    }
    out.objects.push_back(std::move(o));
  }
  out.validate();
  return out;
}

Json graph_to_json(const IntersectionGraph& g) {
  Json out;
  out["n"] = g.n;
  Json edges = Json::array();
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (w > v) edges.push_back(Json::array({v, w}));
  out["edges"] = std::move(edges);
  if (!g.object_ids.empty()) out["object_ids"] = g.object_ids;
  return out;
}

IntersectionGraph graph_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  IntersectionGraph g = IntersectionGraph::from_edges(n, edges);
  if (j.contains("object_ids")) g.object_ids = j.at("object_ids").get<std::vector<int>>();
  return g;
}

Json separator_to_json(const CliqueSeparator& sep) {
  Json out;
  out["cliques"] = sep.cliques;
  out["side_a"] = sep.side_a;
  out["side_b"] = sep.side_b;
  out["weight"] = rational_to_json(sep.weight);
  out["weight_approx"] = sep.weight.get_d();
  out["balance"] = rational_to_json(sep.balance);
  out["balance_approx"] = sep.balance.get_d();
  out["shell_index"] = sep.shell_index;
  out["item_count"] = sep.item_count;
  return out;
}

CliqueSeparator separator_from_json(const Json& j) {
  CliqueSeparator sep;
  sep.cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
  sep.side_a = j.at("side_a").get<std::vector<int>>();
  sep.side_b = j.at("side_b").get<std::vector<int>>();
  sep.weight = rational_from_json(j.at("weight"));
  sep.balance = rational_from_json(j.at("balance"));
  sep.shell_index = j.at("shell_index").get<int>();
  sep.item_count = j.at("item_count").get<int>();
  return sep;
}

Json partition_to_json(const KappaPartition& part, const IntersectionGraph& g) {
  Json out;
  out["graph"] = graph_to_json(g);
  out["classes"] = part.classes;
  out["clique_covers"] = part.clique_covers;
  out["kappa_hat"] = part.kappa_hat;
  out["delta_hat"] = part.delta_hat;
  Json weights = Json::array();
  for (const Rational& w : part.contracted.node_weights) weights.push_back(rational_to_json(w));
  out["contracted"] = Json{{"edges", graph_to_json(part.contracted.graph)["edges"]},
                           {"n", part.contracted.graph.n},
                           {"class_sizes", part.contracted.class_sizes},
                           {"node_weights", weights}};
  return out;
}

PartitionFile partition_from_json(const Json& j) {
  PartitionFile out;
  out.graph = graph_from_json(j.at("graph"));
  out.part.classes = j.at("classes").get<std::vector<std::vector<int>>>();
  out.part.clique_covers =
      j.at("clique_covers").get<std::vector<std::vector<std::vector<int>>>>();
  out.part.kappa_hat = j.at("kappa_hat").get<int>();
  out.part.delta_hat = j.at("delta_hat").get<int>();
  out.part.class_of.assign(out.graph.n, -1);
  for (int c = 0; c < static_cast<int>(out.part.classes.size()); ++c)
    for (int v : out.part.classes[c]) out.part.class_of[v] = c;
  const Json& cj = j.at("contracted");
  Json graph_json;
  graph_json["n"] = cj.at("n");
  graph_json["edges"] = cj.at("edges");
  out.part.contracted.graph = graph_from_json(graph_json);
  out.part.contracted.class_sizes = cj.at("class_sizes").get<std::vector<long>>();
  for (const Json& w : cj.at("node_weights"))
    out.part.contracted.node_weights.push_back(rational_from_json(w));
  return out;
}

Json decomposition_to_json(const WeightedTreeDecomposition& wtd) {
  Json out;
  out["bags"] = wtd.bags;
  Json edges = Json::array();
  for (auto [a, b] : wtd.tree_edges) edges.push_back(Json::array({a, b}));
  out["tree_edges"] = std::move(edges);
  out["weighted_width"] = rational_to_json(wtd.weighted_width);
  out["weighted_width_approx"] = wtd.weighted_width.get_d();
  return out;
}

WeightedTreeDecomposition decomposition_from_json(const Json& j) {
  WeightedTreeDecomposition wtd;
  wtd.bags = j.at("bags").get<std::vector<std::vector<int>>>();
  for (const Json& e : j.at("tree_edges"))
    wtd.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  wtd.weighted_width = rational_from_json(j.at("weighted_width"));
  return wtd;
}

Json result_to_json(const SolveResult& res, const std::string& problem) {
  Json out;
  out["problem"] = problem;
  out["feasible"] = res.feasible;
  if (res.feasible) {
    out["optimum"] = res.optimum;
    out["witness"] = res.witness;
  }
  out["stats"] = Json{{"weighted_width", res.stats.weighted_width},
                      {"kappa_hat", res.stats.kappa_hat},
                      {"delta_hat", res.stats.delta_hat},
                      {"prune_cap", res.stats.prune_cap},
                      {"peak_states", res.stats.peak_states},
                      {"wall_seconds", res.stats.wall_seconds},
                      {"method", res.stats.method}};
  return out;
}

Json wiring_instance_to_json(const WiringInstance& inst) {
  Json out;
  out["d"] = inst.d;
  out["n"] = inst.n;
  Json pairs = Json::array();
  for (const auto& [p, q] : inst.matching) pairs.push_back(Json::array({p, q}));
  out["pairs"] = std::move(pairs);
  return out;
}

WiringInstance wiring_instance_from_json(const Json& j) {
  WiringInstance inst;
  inst.d = j.at("d").get<unsigned>();
  inst.n = j.at("n").get<std::vector<int>>();
  for (const Json& e : j.at("pairs"))
    inst.matching.emplace_back(e.at(0).get<GridPoint>(), e.at(1).get<GridPoint>());
  inst.validate();
  return inst;
}

Json wiring_to_json(const Wiring& w) {
  Json out;
  out["d"] = w.d;
  out["n"] = w.n;
  out["box"] = w.box;
  out["height"] = w.height;
  out["wire_length_bound"] = w.wire_length_bound;
  Json wires = Json::array();
  for (const Wire& wire : w.wires)
    wires.push_back(Json{{"from", wire.from}, {"to", wire.to}, {"points", wire.points}});
  out["wires"] = std::move(wires);
  return out;
}

Wiring wiring_from_json(const Json& j) {
  Wiring w;
  w.d = j.at("d").get<unsigned>();
  w.n = j.at("n").get<std::vector<int>>();
  w.box = j.at("box").get<std::vector<int>>();
  w.height = j.at("height").get<int>();
  w.wire_length_bound = j.at("wire_length_bound").get<long>();
  for (const Json& jw : j.at("wires")) {
    Wire wire;
    wire.from = jw.at("from").get<GridPoint>();
    wire.to = jw.at("to").get<GridPoint>();
    wire.points = jw.at("points").get<std::vector<GridPoint>>();
    w.wires.push_back(std::move(wire));
  }
  return w;
}

Json minor_embedding_to_json(const MinorEmbedding& emb) {
  Json out;
  out["d"] = emb.d;
  out["box"] = emb.box;
  out["branch_sets"] = emb.branch_sets;
  Json connectors = Json::array();
  for (const auto& [a, b] : emb.connectors) connectors.push_back(Json::array({a, b}));
  out["connectors"] = std::move(connectors);
  Json edges = Json::array();
  for (const auto& [u, v] : emb.edges) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace fatgraph
