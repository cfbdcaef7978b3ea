#include "fatgraph.h"

#include <cmath>
#include <cstring>
#include <functional>
#include <memory>
#include <random>
#include <string>

#include "fatgraph/errors.hpp"
#include "fatgraph/jsonio.hpp"
#include "fatgraph/oracle.hpp"
#include "fatgraph/rankbased.hpp"

using namespace fatgraph;

struct fg_instance {
  ObjectSet objs;
};
struct fg_graph {
  IntersectionGraph g;
};
struct fg_separator {
  CliqueSeparator sep;
  unsigned dimension = 0;
};
struct fg_partition {
  KappaPartition part;
  IntersectionGraph graph;
};
struct fg_decomposition {
  WeightedTreeDecomposition wtd;
  std::string method;
};
struct fg_solution {
  SolveResult res;
  std::string problem;
};
struct fg_wiring {
  Wiring w;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
fg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const unsupported_error& e) {
    g_last_error = e.what();
    return FG_UNSUPPORTED;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FG_INVALID_INPUT;
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return FG_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FG_INTERNAL_ERROR;
  }
}

WeightFunction gamma_from(const Json& j) {
  return WeightFunction::from_name(j.value("gamma", std::string("log")));
}

Json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return Json::object();
  return Json::parse(options_json);
}

SolveOptions solve_options_from(const Json& j, const fg_instance* geometry) {
  SolveOptions opts;
  opts.gamma = gamma_from(j);
  opts.disable_pruning = j.value("no_prune", false);
  opts.base_c = j.value("c", 4.0);
  opts.sep.gamma = opts.gamma;
  opts.sep.exact_h0 = j.value("exact_h0", false);
  if (j.value("method", std::string("blowup")) == "separator") {
    if (!geometry) throw unsupported_error("separator decomposition needs geometry");
    opts.use_separator_decomposition = true;
    opts.geometry = &geometry->objs;
  }
  return opts;
}

ProblemInstance problem_from(const Json& j, const IntersectionGraph& g) {
  ProblemInstance inst;
  inst.graph = g;
  inst.problem = problem_from_name(j.at("problem").get<std::string>());
  inst.r = j.value("r", 1);
  if (j.contains("terminals")) inst.terminals = j.at("terminals").get<std::vector<int>>();
  inst.budget = j.value("budget", static_cast<long>(-1));
  return inst;
}

}  // namespace

extern "C" {

const char* fg_last_error(void) { return g_last_error.c_str(); }
void fg_string_free(char* s) { delete[] s; }

void fg_instance_free(fg_instance* h) { delete h; }
void fg_graph_free(fg_graph* h) { delete h; }
void fg_separator_free(fg_separator* h) { delete h; }
void fg_partition_free(fg_partition* h) { delete h; }
void fg_decomposition_free(fg_decomposition* h) { delete h; }
void fg_solution_free(fg_solution* h) { delete h; }
void fg_wiring_free(fg_wiring* h) { delete h; }

fg_status fg_instance_from_json(const char* json, fg_instance** out) {
  return guarded([&] {
    auto h = std::make_unique<fg_instance>();
    h->objs = instance_from_json(Json::parse(json));
    *out = h.release();
    return FG_OK;
  });
}

fg_status fg_instance_generate(const char* config_json, fg_instance** out) {
  return guarded([&] {
    Json j = parse_options(config_json);
    GeneratorConfig cfg;
    cfg.d = j.value("d", 2u);
    cfg.n = j.value("n", 10);
    cfg.box_fraction = j.value("box_fraction", 0.0);
    cfg.size_ratio = j.value("size_ratio", 1.5);
    cfg.region_side = j.value("region_side", 10.0);
    cfg.seed = j.value("seed", 1ull);
    auto h = std::make_unique<fg_instance>();
    h->objs = gen_instance(cfg);
    *out = h.release();
    return FG_OK;
  });
}

fg_status fg_instance_to_json(const fg_instance* h, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(instance_to_json(h->objs).dump(2));
    return FG_OK;
  });
}

fg_status fg_instance_size(const fg_instance* h, int* out_n) {
  return guarded([&] {
    *out_n = h->objs.size();
    return FG_OK;
  });
}

fg_status fg_graph_build(const fg_instance* h, fg_graph** out) {
  return guarded([&] {
    auto g = std::make_unique<fg_graph>();
    g->g = build_intersection_graph(h->objs);
    *out = g.release();
    return FG_OK;
  });
}

fg_status fg_graph_from_json(const char* json, fg_graph** out) {
  return guarded([&] {
    auto g = std::make_unique<fg_graph>();
    g->g = graph_from_json(Json::parse(json));
    *out = g.release();
    return FG_OK;
  });
}

fg_status fg_graph_to_json(const fg_graph* h, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(graph_to_json(h->g).dump(2));
    return FG_OK;
  });
}

fg_status fg_separate(const fg_instance* h, const char* options_json, fg_separator** out) {
  return guarded([&] {
    Json j = parse_options(options_json);
    SeparatorOptions opts;
    opts.gamma = gamma_from(j);
    opts.exact_h0 = j.value("exact_h0", false);
    auto s = std::make_unique<fg_separator>();
    s->sep = build_separator(h->objs, opts);
    s->dimension = h->objs.dimension;
    *out = s.release();
    return FG_OK;
  });
}

fg_status fg_separator_from_json(const char* json, fg_separator** out) {
  return guarded([&] {
    Json j = Json::parse(json);
    auto s = std::make_unique<fg_separator>();
    s->sep = separator_from_json(j);
    s->dimension = j.value("dimension", 2u);
    *out = s.release();
    return FG_OK;
  });
}

fg_status fg_separator_to_json(const fg_separator* h, char** out_json) {
  return guarded([&] {
    Json j = separator_to_json(h->sep);
    j["dimension"] = h->dimension;
    *out_json = dup_string(j.dump(2));
    return FG_OK;
  });
}

fg_status fg_separator_validate(const fg_separator* h, const fg_graph* g, int dimension,
                                char** out_report_json) {
  return guarded([&] {
    std::vector<std::string> violations =
        validate_separator(h->sep, g->g, static_cast<unsigned>(dimension));
    Json j;
    j["valid"] = violations.empty();
    j["violations"] = violations;
    *out_report_json = dup_string(j.dump(2));
    return violations.empty() ? FG_OK : FG_VERIFY_FAILED;
  });
}

fg_status fg_partition_build(const fg_graph* g, const char* options_json, fg_partition** out) {
  return guarded([&] {
    Json j = parse_options(options_json);
    auto p = std::make_unique<fg_partition>();
    p->part = build_kappa_partition(g->g, gamma_from(j));
    p->graph = g->g;
    *out = p.release();
    return FG_OK;
  });
}

fg_status fg_partition_from_json(const char* json, fg_partition** out) {
  return guarded([&] {
    PartitionFile file = partition_from_json(Json::parse(json));
    auto p = std::make_unique<fg_partition>();
    p->part = std::move(file.part);
    p->graph = std::move(file.graph);
    *out = p.release();
    return FG_OK;
  });
}

fg_status fg_partition_to_json(const fg_partition* h, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(partition_to_json(h->part, h->graph).dump(2));
    return FG_OK;
  });
}

fg_status fg_decompose(const fg_partition* h, const fg_instance* geometry,
                       const char* options_json, fg_decomposition** out) {
  return guarded([&] {
    Json j = parse_options(options_json);
    auto d = std::make_unique<fg_decomposition>();
    std::string method = j.value("method", std::string("blowup"));
    if (method == "separator") {
      if (!geometry) throw unsupported_error("separator decomposition needs geometry");
      SeparatorOptions sopts;
      sopts.gamma = gamma_from(j);
      sopts.exact_h0 = j.value("exact_h0", false);
      double c = j.value("c", 4.0);
      unsigned dim = geometry->objs.dimension;
      double exponent = 1.0 - 1.0 / static_cast<double>(dim);
      Rational base(c * std::pow(static_cast<double>(h->graph.n), exponent));
      d->wtd = decompose_by_separator(
          h->part.contracted, geometric_separator_callback(h->part, geometry->objs, sopts),
          base);
    } else if (method == "blowup") {
      d->wtd = decompose_by_blowup(h->part.contracted);
    } else {
      throw std::invalid_argument("unknown decomposition method: " + method);
    }
    d->method = method;
    *out = d.release();
    return FG_OK;
  });
}

fg_status fg_decomposition_to_json(const fg_decomposition* h, char** out_json) {
  return guarded([&] {
    Json j = decomposition_to_json(h->wtd);
    j["method"] = h->method;
    *out_json = dup_string(j.dump(2));
    return FG_OK;
  });
}

fg_status fg_decomposition_validate(const fg_decomposition* h, const fg_partition* p,
                                    char** out_report_json) {
  return guarded([&] {
    std::vector<std::string> violations = validate_decomposition(h->wtd, p->part.contracted);
    Json j;
    j["valid"] = violations.empty();
    j["violations"] = violations;
    *out_report_json = dup_string(j.dump(2));
    return violations.empty() ? FG_OK : FG_VERIFY_FAILED;
  });
}

fg_status fg_solve(const fg_graph* g, const fg_instance* geometry, const char* problem_json,
                   fg_solution** out) {
  return guarded([&] {
    Json j = Json::parse(problem_json);
    ProblemInstance inst = problem_from(j, g->g);
    SolveOptions opts = solve_options_from(j, geometry);
    auto s = std::make_unique<fg_solution>();
    s->res = solve(inst, opts);
    s->problem = problem_name(inst.problem);
    *out = s.release();
    return FG_OK;
  });
}

fg_status fg_solve_separator_recursion_is(const fg_instance* h, const char* options_json,
                                          fg_solution** out) {
  return guarded([&] {
    Json j = parse_options(options_json);
    SeparatorOptions opts;
    opts.gamma = gamma_from(j);
    opts.exact_h0 = j.value("exact_h0", false);
    auto s = std::make_unique<fg_solution>();
    s->res = solve_separator_recursion_is(h->objs, opts);
    s->problem = "is";
    *out = s.release();
    return FG_OK;
  });
}

fg_status fg_oracle_solve(const fg_graph* g, const char* problem_json, fg_solution** out) {
  return guarded([&] {
    Json j = Json::parse(problem_json);
    ProblemInstance inst = problem_from(j, g->g);
    auto s = std::make_unique<fg_solution>();
    s->res = brute_force(inst);
    s->problem = problem_name(inst.problem);
    *out = s.release();
    return FG_OK;
  });
}

fg_status fg_solution_to_json(const fg_solution* h, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(result_to_json(h->res, h->problem).dump(2));
    return FG_OK;
  });
}

fg_status fg_solution_feasible(const fg_solution* h, int* out_feasible) {
  return guarded([&] {
    *out_feasible = h->res.feasible ? 1 : 0;
    return FG_OK;
  });
}

fg_status fg_wire(const char* instance_json, fg_wiring** out) {
  return guarded([&] {
    WiringInstance inst = wiring_instance_from_json(Json::parse(instance_json));
    auto w = std::make_unique<fg_wiring>();
    w->w = wire_matching(inst);
    *out = w.release();
    return FG_OK;
  });
}

fg_status fg_wiring_to_json(const fg_wiring* h, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(wiring_to_json(h->w).dump());
    return FG_OK;
  });
}

fg_status fg_wiring_from_json(const char* json, fg_wiring** out) {
  return guarded([&] {
    auto w = std::make_unique<fg_wiring>();
    w->w = wiring_from_json(Json::parse(json));
    *out = w.release();
    return FG_OK;
  });
}

fg_status fg_wiring_verify(const fg_wiring* h, const char* instance_json,
                           char** out_report_json) {
  return guarded([&] {
    WiringInstance inst = wiring_instance_from_json(Json::parse(instance_json));
    std::vector<std::string> violations = verify_wiring(h->w, inst);
    Json j;
    j["valid"] = violations.empty();
    j["violations"] = violations;
    double sum_n = 0;
    for (int s : inst.n) sum_n += s;
    long max_len = 0;
    for (const Wire& wire : h->w.wires)
      max_len = std::max(max_len, static_cast<long>(wire.points.size()) - 1);
    j["height"] = h->w.height;
    j["height_per_sum_n"] = sum_n > 0 ? h->w.height / sum_n : 0.0;
    j["max_wire_length"] = max_len;
    j["length_per_d_sum_n"] = sum_n > 0 ? max_len / (h->w.d * sum_n) : 0.0;
    *out_report_json = dup_string(j.dump(2));
    return violations.empty() ? FG_OK : FG_VERIFY_FAILED;
  });
}

fg_status fg_embed_minor(const fg_graph* g, int dimension, char** out_report_json) {
  return guarded([&] {
    MinorEmbedding emb = embed_minor(g->g, static_cast<unsigned>(dimension));
    std::vector<std::string> violations = verify_minor_embedding(emb);
    IntersectionGraph quotient = contract_embedding(emb);
    bool iso = g->g.n <= 12 && isomorphic_small(quotient, g->g);
    Json j = minor_embedding_to_json(emb);
    j["valid"] = violations.empty();
    j["violations"] = violations;
    j["isomorphic"] = iso;
    *out_report_json = dup_string(j.dump());
    if (!violations.empty() || !iso) return FG_VERIFY_FAILED;
    return FG_OK;
  });
}

fg_status fg_reduce_selftest(int sets, int max_universe, unsigned long seed,
                             char** out_report_json) {
  return guarded([&] {
    if (max_universe < 1 || max_universe > 8)
      throw std::invalid_argument("selftest universe must be 1..8");
    std::mt19937_64 rng(seed);
    long checked = 0, failures = 0;
    for (int it = 0; it < sets; ++it) {
      unsigned u = 2 + static_cast<unsigned>(rng() % (max_universe - 1));
      // Random weighted partition set.
      WeightedPartitionSet a;
      for (unsigned e = 0; e < u; ++e) a.universe.push_back(static_cast<int>(e));
      int count = 1 + static_cast<int>(rng() % 12);
      for (int c = 0; c < count; ++c) {
        std::vector<int> block_of(u);
        for (unsigned e = 0; e < u; ++e) block_of[e] = static_cast<int>(rng() % u);
        a.insert_min(canonical_partition(block_of), static_cast<long>(rng() % 50));
      }
      WeightedPartitionSet reduced = reduce(a);
      if (reduced.entries.size() > (size_t{1} << (u - 1))) ++failures;
      // Representation property against every completion.
      std::vector<SetPartition> all;
      std::vector<int> block_of(u, 0);
      std::function<void(unsigned, int)> gen = [&](unsigned pos, int max_label) {
        if (pos == u) {
          all.push_back(canonical_partition(block_of));
          return;
        }
        for (int b = 0; b <= max_label; ++b) {
          block_of[pos] = b;
          gen(pos + 1, std::max(max_label, b + 1));
        }
      };
      gen(0, 0);
      for (const SetPartition& q : all) {
        long best_full = -1, best_red = -1;
        for (const auto& [p, wgt] : a.entries)
          if (join(p, q).is_top() && (best_full < 0 || wgt < best_full)) best_full = wgt;
        for (const auto& [p, wgt] : reduced.entries)
          if (join(p, q).is_top() && (best_red < 0 || wgt < best_red)) best_red = wgt;
        ++checked;
        if (best_full != best_red) ++failures;
      }
      // Idempotence.
      WeightedPartitionSet twice = reduce(reduced);
      if (twice.entries.size() != reduced.entries.size()) ++failures;
    }
    Json j;
    j["sets"] = sets;
    j["completions_checked"] = checked;
    j["failures"] = failures;
    j["valid"] = failures == 0;
    *out_report_json = dup_string(j.dump(2));
    return failures == 0 ? FG_OK : FG_VERIFY_FAILED;
  });
}

}  // extern "C"
