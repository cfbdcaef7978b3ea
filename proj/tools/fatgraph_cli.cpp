// Command-line front end for the fatgraph shared library. All algorithmic
// work goes through the C API in fatgraph.h; this binary only handles files,
// flags, benchmark sweeps and SVG rendering.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fatgraph.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerify = 4;

[[noreturn]] void die(fg_status status) {
  std::cerr << "error: " << fg_last_error() << "\n";
  switch (status) {
    case FG_INVALID_INPUT:
      std::exit(kExitInvalid);
    case FG_VERIFY_FAILED:
      std::exit(kExitVerify);
    case FG_UNSUPPORTED:
      std::exit(kExitInvalid);
    default:
      std::exit(1);
  }
}

void check(fg_status status) {
  if (status != FG_OK) die(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitInvalid);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(kExitInvalid);
  }
  out << content;
}

std::string take_string(char* owned) {
  std::string s(owned);
  fg_string_free(owned);
  return s;
}

// RAII helpers around the opaque handles.
template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { Free(ptr); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) : ptr(o.ptr) { o.ptr = nullptr; }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};
using InstanceH = Handle<fg_instance, fg_instance_free>;
using GraphH = Handle<fg_graph, fg_graph_free>;
using SeparatorH = Handle<fg_separator, fg_separator_free>;
using PartitionH = Handle<fg_partition, fg_partition_free>;
using DecompositionH = Handle<fg_decomposition, fg_decomposition_free>;
using SolutionH = Handle<fg_solution, fg_solution_free>;
using WiringH = Handle<fg_wiring, fg_wiring_free>;

InstanceH load_instance(const std::string& path) {
  InstanceH h;
  check(fg_instance_from_json(slurp(path).c_str(), h.out()));
  return h;
}

// Accepts either an instance file (geometry) or a plain graph file.
GraphH load_graph_any(const std::string& path, InstanceH* instance_out = nullptr) {
  std::string text = slurp(path);
  Json j = Json::parse(text, nullptr, false);
  GraphH g;
  if (!j.is_discarded() && j.contains("objects")) {
    InstanceH inst;
    check(fg_instance_from_json(text.c_str(), inst.out()));
    check(fg_graph_build(inst.get(), g.out()));
    if (instance_out) *instance_out = std::move(inst);
  } else {
    check(fg_graph_from_json(text.c_str(), g.out()));
  }
  return g;
}

double rational_as_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

// ---------------------------------------------------------------------------
// SVG rendering (d = 2 instances and single wiring layers)
// ---------------------------------------------------------------------------

std::string svg_separator(const Json& inst, const Json& sep) {
  const double scale = 40.0;
  double min_x = 1e18, min_y = 1e18, max_x = -1e18, max_y = -1e18;
  struct Obj {
    bool ball;
    double x, y, r, w, h;
  };
  std::vector<Obj> objs;
  for (const Json& jo : inst.at("objects")) {
    Obj o{};
    if (jo.contains("ball")) {
      o.ball = true;
      o.x = rational_as_double(jo["ball"]["center"][0]);
      o.y = rational_as_double(jo["ball"]["center"][1]);
      o.r = rational_as_double(jo["ball"]["radius"]);
      min_x = std::min(min_x, o.x - o.r);
      max_x = std::max(max_x, o.x + o.r);
      min_y = std::min(min_y, o.y - o.r);
      max_y = std::max(max_y, o.y + o.r);
    } else {
      o.ball = false;
      o.x = rational_as_double(jo["box"]["min"][0]);
      o.y = rational_as_double(jo["box"]["min"][1]);
      o.w = rational_as_double(jo["box"]["sides"][0]);
      o.h = rational_as_double(jo["box"]["sides"][1]);
      min_x = std::min(min_x, o.x);
      max_x = std::max(max_x, o.x + o.w);
      min_y = std::min(min_y, o.y);
      max_y = std::max(max_y, o.y + o.h);
    }
    objs.push_back(o);
  }
  std::vector<std::string> fill(objs.size(), "#cccccc");
  std::vector<std::string> stroke(objs.size(), "#555555");
  for (const Json& v : sep.at("side_a")) fill[v.get<int>()] = "#9ecae1";
  for (const Json& v : sep.at("side_b")) fill[v.get<int>()] = "#a1d99b";
  const char* palette[] = {"#e41a1c", "#ff7f00", "#984ea3", "#f781bf", "#a65628"};
  int ci = 0;
  for (const Json& clique : sep.at("cliques")) {
    for (const Json& v : clique) {
      fill[v.get<int>()] = "#fdd0a2";
      stroke[v.get<int>()] = palette[ci % 5];
    }
    ++ci;
  }
  double w = (max_x - min_x) * scale + 20, h = (max_y - min_y) * scale + 20;
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
  auto tx = [&](double x) { return (x - min_x) * scale + 10; };
  auto ty = [&](double y) { return (max_y - y) * scale + 10; };
  for (size_t i = 0; i < objs.size(); ++i) {
    const Obj& o = objs[i];
    if (o.ball)
      svg << "<circle cx='" << tx(o.x) << "' cy='" << ty(o.y) << "' r='" << o.r * scale
          << "' fill='" << fill[i] << "' fill-opacity='0.6' stroke='" << stroke[i]
          << "' stroke-width='2'/>\n";
    else
      svg << "<rect x='" << tx(o.x) << "' y='" << ty(o.y + o.h) << "' width='" << o.w * scale
          << "' height='" << o.h * scale << "' fill='" << fill[i]
          << "' fill-opacity='0.6' stroke='" << stroke[i] << "' stroke-width='2'/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string svg_wiring_layer(const Json& wiring, int layer) {
  const double scale = 12.0;
  Json box = wiring.at("box");
  double w = box[0].get<double>() * scale + 20;
  double h = box[1].get<double>() * scale + 20;
  const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                           "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
  int wi = 0;
  for (const Json& wire : wiring.at("wires")) {
    const char* color = palette[wi++ % 8];
    const Json& pts = wire.at("points");
    for (size_t s = 1; s < pts.size(); ++s) {
      if (pts[s - 1][2].get<int>() != layer || pts[s][2].get<int>() != layer) continue;
      svg << "<line x1='" << pts[s - 1][0].get<double>() * scale << "' y1='"
          << pts[s - 1][1].get<double>() * scale << "' x2='" << pts[s][0].get<double>() * scale
          << "' y2='" << pts[s][1].get<double>() * scale << "' stroke='" << color
          << "' stroke-width='3'/>\n";
    }
    for (const Json& p : pts)
      if (p[2].get<int>() == layer)
        svg << "<circle cx='" << p[0].get<double>() * scale << "' cy='"
            << p[1].get<double>() * scale << "' r='2' fill='" << color << "'/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ---------------------------------------------------------------------------
// Benchmark sweeps
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string suite;
  int d = 2;
  int n = 0;
  uint64_t seed = 0;
  double value = 0;   // suite metric
  double seconds = 0;
  bool ok = true;
};

Json problem_spec(const std::string& problem, int r) {
  Json j;
  j["problem"] = problem == "rds" ? "ds" : problem;
  j["r"] = r;
  return j;
}

BenchRow bench_solver(const std::string& problem, int d, int n, uint64_t seed) {
  BenchRow row{"solve-" + problem, d, n, seed, 0, 0, true};
  Json cfg{{"d", d}, {"n", n}, {"seed", seed}, {"region_side", 4.0 + std::sqrt(n)}};
  InstanceH inst;
  check(fg_instance_generate(cfg.dump().c_str(), inst.out()));
  GraphH g;
  check(fg_graph_build(inst.get(), g.out()));
  Json spec = problem_spec(problem, problem == "rds" ? 2 : 1);
  SolutionH sol;
  auto t0 = std::chrono::steady_clock::now();
  check(fg_solve(g.get(), inst.get(), spec.dump().c_str(), sol.out()));
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char* out = nullptr;
  check(fg_solution_to_json(sol.get(), &out));
  Json result = Json::parse(take_string(out));
  row.value = result.value("optimum", -1);
  if (n <= 16) {
    SolutionH oracle;
    check(fg_oracle_solve(g.get(), spec.dump().c_str(), oracle.out()));
    char* ojson = nullptr;
    check(fg_solution_to_json(oracle.get(), &ojson));
    Json oresult = Json::parse(take_string(ojson));
    row.ok = oresult.value("optimum", -2) == result.value("optimum", -1) ||
             (oresult["feasible"] == false && result["feasible"] == false);
  }
  return row;
}

BenchRow bench_separator(int d, int n, uint64_t seed) {
  BenchRow row{"separator", d, n, seed, 0, 0, true};
  double region = 10.0 * std::sqrt(n / 100.0);
  Json cfg{{"d", d},           {"n", n},           {"seed", seed},
           {"size_ratio", 1.5}, {"region_side", region}};
  InstanceH inst;
  check(fg_instance_generate(cfg.dump().c_str(), inst.out()));
  auto t0 = std::chrono::steady_clock::now();
  SeparatorH sep;
  check(fg_separate(inst.get(), "{}", sep.out()));
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char* out = nullptr;
  check(fg_separator_to_json(sep.get(), &out));
  Json j = Json::parse(take_string(out));
  double exponent = 1.0 - 1.0 / d;
  row.value = j["weight_approx"].get<double>() / std::pow(n, exponent);
  GraphH g;
  check(fg_graph_build(inst.get(), g.out()));
  char* report = nullptr;
  fg_status st = fg_separator_validate(sep.get(), g.get(), d, &report);
  fg_string_free(report);
  row.ok = st == FG_OK;
  return row;
}

BenchRow bench_wiring(int d, int side, uint64_t seed) {
  BenchRow row{"wiring", d, side, seed, 0, 0, true};
  std::vector<std::vector<int>> points;
  std::vector<int> sizes(d - 1, side);
  std::vector<int> cursor(d - 1, 1);
  while (true) {
    points.push_back(cursor);
    int a = 0;
    while (a < d - 1 && cursor[a] == sizes[a]) cursor[a++] = 1;
    if (a == d - 1) break;
    ++cursor[a];
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> dst = points;
  for (size_t i = dst.size(); i > 1; --i) std::swap(dst[i - 1], dst[rng() % i]);
  Json inst;
  inst["d"] = d;
  inst["n"] = sizes;
  Json pairs = Json::array();
  for (size_t i = 0; i < points.size(); ++i) pairs.push_back(Json::array({points[i], dst[i]}));
  inst["pairs"] = pairs;
  auto t0 = std::chrono::steady_clock::now();
  WiringH w;
  check(fg_wire(inst.dump().c_str(), w.out()));
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char* report = nullptr;
  fg_status st = fg_wiring_verify(w.get(), inst.dump().c_str(), &report);
  Json j = Json::parse(take_string(report));
  row.ok = st == FG_OK;
  row.value = j["height_per_sum_n"].get<double>();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and grid wiring for intersection graphs of fat objects"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a random geometric instance");
  int gen_d = 2, gen_n = 10;
  double gen_sigma = 1.5, gen_region = 10.0, gen_boxes = 0.0;
  uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("--d", gen_d, "dimension");
  gen->add_option("--n", gen_n, "object count");
  gen->add_option("--sigma", gen_sigma, "size ratio");
  gen->add_option("--region", gen_region, "region side");
  gen->add_option("--boxes", gen_boxes, "fraction of boxes");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // --- graph -------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "build the exact intersection graph");
  std::string graph_in, graph_out = "-";
  graph->add_option("--input", graph_in, "instance JSON")->required();
  graph->add_option("--out", graph_out, "output file");

  // --- separate ----------------------------------------------------------
  auto* separate = app.add_subcommand("separate", "balanced clique separator");
  std::string sep_in, sep_out = "-", sep_gamma = "log", sep_svg;
  bool sep_exact_h0 = false;
  separate->add_option("--input", sep_in, "instance JSON")->required();
  separate->add_option("--gamma", sep_gamma, "weight function: log|unit|linear");
  separate->add_flag("--exact-h0", sep_exact_h0, "enumerate base-hypercube candidates");
  separate->add_option("--out", sep_out, "output file");
  separate->add_option("--svg", sep_svg, "render the instance and separator (d=2)");

  // --- partition -----------------------------------------------------------
  auto* partition = app.add_subcommand("partition", "kappa-partition of a graph");
  std::string part_in, part_out = "-", part_gamma = "log";
  partition->add_option("--input", part_in, "graph or instance JSON")->required();
  partition->add_option("--gamma", part_gamma, "weight function");
  partition->add_option("--out", part_out, "output file");

  // --- decompose -----------------------------------------------------------
  auto* decompose = app.add_subcommand("decompose", "weighted tree decomposition");
  std::string dec_in, dec_out = "-", dec_method = "blowup", dec_instance;
  double dec_c = 4.0;
  decompose->add_option("--input", dec_in, "partition JSON")->required();
  decompose->add_option("--method", dec_method, "separator|blowup");
  decompose->add_option("--c", dec_c, "base-case constant of the separator recursion");
  decompose->add_option("--instance", dec_instance, "geometry (separator method)");
  decompose->add_option("--out", dec_out, "output file");

  // --- solve / oracle ------------------------------------------------------
  auto add_solver_flags = [](CLI::App* cmd, std::string& in, std::string& out,
                             std::string& problem, int& r, std::string& terminals,
                             long& budget) {
    cmd->add_option("--input", in, "instance or graph JSON")->required();
    cmd->add_option("--problem", problem, "is|vc|ds|rds|steiner|mif|fvs|cvc")->required();
    cmd->add_option("--r", r, "domination radius");
    cmd->add_option("--terminals", terminals, "comma-separated terminal ids");
    cmd->add_option("--budget", budget, "steiner budget");
    cmd->add_option("--out", out, "output file");
  };
  auto* solve_cmd = app.add_subcommand("solve", "exact solve via tree-decomposition DP");
  std::string sol_in, sol_out = "-", sol_problem, sol_terminals, sol_method = "blowup";
  int sol_r = 1;
  long sol_budget = -1;
  bool sol_noprune = false;
  add_solver_flags(solve_cmd, sol_in, sol_out, sol_problem, sol_r, sol_terminals, sol_budget);
  solve_cmd->add_option("--method", sol_method, "decomposition: blowup|separator");
  solve_cmd->add_flag("--no-prune", sol_noprune, "disable class-cap pruning");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solver");
  std::string ora_in, ora_out = "-", ora_problem, ora_terminals;
  int ora_r = 1;
  long ora_budget = -1;
  add_solver_flags(oracle_cmd, ora_in, ora_out, ora_problem, ora_r, ora_terminals, ora_budget);

  // --- wire ----------------------------------------------------------------
  auto* wire = app.add_subcommand("wire", "route a matching in the grid");
  std::string wire_matching_file, wire_out = "-", wire_svg;
  int wire_d = 3, wire_svg_layer = -1;
  std::string wire_n = "8,8";
  wire->add_option("--d", wire_d, "dimension (>= 3)");
  wire->add_option("--n", wire_n, "floor box sizes, comma separated");
  wire->add_option("--matching", wire_matching_file, "matching JSON (omit wire verify)");
  wire->add_option("--out", wire_out, "output file");
  wire->add_option("--svg-layer", wire_svg_layer, "render one layer slice (d=3)");
  wire->add_option("--svg", wire_svg, "SVG output file");
  auto* wire_verify = wire->add_subcommand("verify", "check a wiring file");
  std::string wire_verify_file;
  wire_verify->add_option("file", wire_verify_file, "wiring JSON")->required();

  // --- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "validate artifacts");
  std::string ver_wiring, ver_sep, ver_graph, ver_decomp, ver_part;
  verify->add_option("--wiring", ver_wiring, "wiring JSON");
  verify->add_option("--separator", ver_sep, "separator JSON (needs --graph)");
  verify->add_option("--graph", ver_graph, "graph or instance JSON");
  verify->add_option("--decomposition", ver_decomp, "decomposition JSON (needs --partition)");
  verify->add_option("--partition", ver_part, "partition JSON");

  // --- bench -----------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "metric sweeps with fixed seeds");
  std::string bench_suite = "separator", bench_out = "bench.csv";
  int bench_seeds = 5, bench_threads = 1;
  double bench_limit = 5.0;
  bench->add_option("--suite", bench_suite, "separator|solvers|wiring|scaling");
  bench->add_option("--seeds", bench_seeds, "seeds per configuration");
  bench->add_option("--threads", bench_threads, "worker threads");
  bench->add_option("--time-limit", bench_limit, "per-run growth cutoff (scaling suite)");
  bench->add_option("--out", bench_out, "CSV output (a .json twin is written too)");

  // --- reduce-selftest (hidden) ----------------------------------------------
  auto* selftest = app.add_subcommand("reduce-selftest");
  selftest->group("");  // hidden
  int st_sets = 500;
  uint64_t st_seed = 1;
  selftest->add_option("--sets", st_sets);
  selftest->add_option("--seed", st_seed);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    Json cfg{{"d", gen_d},          {"n", gen_n},           {"box_fraction", gen_boxes},
             {"size_ratio", gen_sigma}, {"region_side", gen_region}, {"seed", gen_seed}};
    InstanceH inst;
    check(fg_instance_generate(cfg.dump().c_str(), inst.out()));
    char* out = nullptr;
    check(fg_instance_to_json(inst.get(), &out));
    spill(gen_out, take_string(out));
    return kExitOk;
  }

  if (graph->parsed()) {
    GraphH g = load_graph_any(graph_in);
    char* out = nullptr;
    check(fg_graph_to_json(g.get(), &out));
    spill(graph_out, take_string(out));
    return kExitOk;
  }

  if (separate->parsed()) {
    InstanceH inst = load_instance(sep_in);
    Json opts{{"gamma", sep_gamma}, {"exact_h0", sep_exact_h0}};
    SeparatorH sep;
    check(fg_separate(inst.get(), opts.dump().c_str(), sep.out()));
    char* out = nullptr;
    check(fg_separator_to_json(sep.get(), &out));
    std::string sep_json = take_string(out);
    spill(sep_out, sep_json);
    if (!sep_svg.empty()) {
      char* inst_json = nullptr;
      check(fg_instance_to_json(inst.get(), &inst_json));
      spill(sep_svg, svg_separator(Json::parse(take_string(inst_json)), Json::parse(sep_json)));
    }
    return kExitOk;
  }

  if (partition->parsed()) {
    GraphH g = load_graph_any(part_in);
    Json opts{{"gamma", part_gamma}};
    PartitionH part;
    check(fg_partition_build(g.get(), opts.dump().c_str(), part.out()));
    char* out = nullptr;
    check(fg_partition_to_json(part.get(), &out));
    spill(part_out, take_string(out));
    return kExitOk;
  }

  if (decompose->parsed()) {
    PartitionH part;
    check(fg_partition_from_json(slurp(dec_in).c_str(), part.out()));
    InstanceH inst;
    if (!dec_instance.empty()) inst = load_instance(dec_instance);
    Json opts{{"method", dec_method}, {"c", dec_c}};
    DecompositionH dec;
    check(fg_decompose(part.get(), inst.get(), opts.dump().c_str(), dec.out()));
    char* report = nullptr;
    fg_status vs = fg_decomposition_validate(dec.get(), part.get(), &report);
    fg_string_free(report);
    if (vs != FG_OK) die(vs);
    char* out = nullptr;
    check(fg_decomposition_to_json(dec.get(), &out));
    spill(dec_out, take_string(out));
    return kExitOk;
  }

  auto parse_terminals = [](const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(std::stoi(item));
    return out;
  };

  if (solve_cmd->parsed() || oracle_cmd->parsed()) {
    bool is_oracle = oracle_cmd->parsed();
    const std::string& in = is_oracle ? ora_in : sol_in;
    const std::string& problem = is_oracle ? ora_problem : sol_problem;
    const std::string& terms = is_oracle ? ora_terminals : sol_terminals;
    const std::string& out_path = is_oracle ? ora_out : sol_out;
    int r = is_oracle ? ora_r : sol_r;
    long budget = is_oracle ? ora_budget : sol_budget;

    InstanceH inst;
    GraphH g = load_graph_any(in, &inst);
    Json spec;
    spec["problem"] = problem == "rds" ? "ds" : problem;
    if (problem == "rds" && r < 2) r = 2;
    spec["r"] = r;
    spec["terminals"] = parse_terminals(terms);
    spec["budget"] = budget;
    SolutionH sol;
    if (is_oracle) {
      check(fg_oracle_solve(g.get(), spec.dump().c_str(), sol.out()));
    } else {
      spec["method"] = sol_method;
      spec["no_prune"] = sol_noprune;
      check(fg_solve(g.get(), inst.get(), spec.dump().c_str(), sol.out()));
    }
    char* out = nullptr;
    check(fg_solution_to_json(sol.get(), &out));
    spill(out_path, take_string(out));
    int feasible = 1;
    check(fg_solution_feasible(sol.get(), &feasible));
    return feasible ? kExitOk : kExitInfeasible;
  }

  if (wire->parsed()) {
    if (wire_verify->parsed()) {
      Json wj = Json::parse(slurp(wire_verify_file));
      Json inst;
      inst["d"] = wj["d"];
      inst["n"] = wj["n"];
      Json pairs = Json::array();
      for (const Json& w : wj["wires"]) pairs.push_back(Json::array({w["from"], w["to"]}));
      inst["pairs"] = pairs;
      WiringH w;
      check(fg_wiring_from_json(wj.dump().c_str(), w.out()));
      char* report = nullptr;
      fg_status st = fg_wiring_verify(w.get(), inst.dump().c_str(), &report);
      std::cout << take_string(report) << "\n";
      return st == FG_OK ? kExitOk : kExitVerify;
    }
    if (wire_matching_file.empty()) {
      std::cerr << "error: --matching is required\n";
      return kExitInvalid;
    }
    Json matching = Json::parse(slurp(wire_matching_file));
    Json inst;
    if (matching.contains("pairs")) {
      inst = matching;
    } else {
      inst["pairs"] = matching;
      inst["d"] = wire_d;
      std::vector<int> sizes;
      std::stringstream ss(wire_n);
      std::string item;
      while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
      inst["n"] = sizes;
    }
    WiringH w;
    check(fg_wire(inst.dump().c_str(), w.out()));
    char* report = nullptr;
    fg_status vs = fg_wiring_verify(w.get(), inst.dump().c_str(), &report);
    fg_string_free(report);
    if (vs != FG_OK) die(vs);
    char* out = nullptr;
    check(fg_wiring_to_json(w.get(), &out));
    std::string wiring_json = take_string(out);
    spill(wire_out, wiring_json);
    if (!wire_svg.empty() && wire_svg_layer >= 1)
      spill(wire_svg, svg_wiring_layer(Json::parse(wiring_json), wire_svg_layer));
    return kExitOk;
  }

  if (verify->parsed()) {
    bool all_ok = true;
    if (!ver_wiring.empty()) {
      Json wj = Json::parse(slurp(ver_wiring));
      Json inst;
      inst["d"] = wj["d"];
      inst["n"] = wj["n"];
      Json pairs = Json::array();
      for (const Json& w : wj["wires"]) pairs.push_back(Json::array({w["from"], w["to"]}));
      inst["pairs"] = pairs;
      WiringH w;
      check(fg_wiring_from_json(wj.dump().c_str(), w.out()));
      char* report = nullptr;
      all_ok &= fg_wiring_verify(w.get(), inst.dump().c_str(), &report) == FG_OK;
      std::cout << take_string(report) << "\n";
    }
    if (!ver_sep.empty()) {
      if (ver_graph.empty()) {
        std::cerr << "error: --separator needs --graph\n";
        return kExitInvalid;
      }
      Json sj = Json::parse(slurp(ver_sep));
      GraphH g = load_graph_any(ver_graph);
      SeparatorH sep;
      check(fg_separator_from_json(sj.dump().c_str(), sep.out()));
      char* report = nullptr;
      all_ok &= fg_separator_validate(sep.get(), g.get(), sj.value("dimension", 2),
                                      &report) == FG_OK;
      std::cout << take_string(report) << "\n";
    }
    if (!ver_decomp.empty()) {
      if (ver_part.empty()) {
        std::cerr << "error: --decomposition needs --partition\n";
        return kExitInvalid;
      }
      PartitionH part;
      check(fg_partition_from_json(slurp(ver_part).c_str(), part.out()));
      InstanceH none;
      DecompositionH dec;
      // Rebuild from the stored method so the validation runs on fresh state.
      Json dj = Json::parse(slurp(ver_decomp));
      Json opts{{"method", dj.value("method", "blowup")}};
      check(fg_decompose(part.get(), none.get(), opts.dump().c_str(), dec.out()));
      char* report = nullptr;
      all_ok &= fg_decomposition_validate(dec.get(), part.get(), &report) == FG_OK;
      std::cout << take_string(report) << "\n";
    }
    return all_ok ? kExitOk : kExitVerify;
  }

  if (bench->parsed()) {
    std::vector<BenchRow> rows;
    auto run_batch = [&](const std::vector<std::function<BenchRow()>>& jobs) {
      size_t next = 0;
      while (next < jobs.size()) {
        size_t batch = std::min<size_t>(bench_threads, jobs.size() - next);
        std::vector<std::future<BenchRow>> futures;
        for (size_t i = 0; i < batch; ++i)
          futures.push_back(std::async(std::launch::async, jobs[next + i]));
        for (auto& f : futures) rows.push_back(f.get());
        next += batch;
      }
    };

    std::vector<std::function<BenchRow()>> jobs;
    if (bench_suite == "separator") {
      for (int n : {100, 200, 400, 800, 1600, 3200})
        for (int s = 1; s <= bench_seeds; ++s)
          jobs.push_back([n, s] { return bench_separator(2, n, s); });
    } else if (bench_suite == "solvers") {
      for (const char* p : {"is", "vc", "ds", "rds", "mif", "fvs"})
        for (int n : {8, 10, 12, 14, 16})
          for (int s = 1; s <= bench_seeds; ++s)
            jobs.push_back([p, n, s] { return bench_solver(p, 2, n, s); });
    } else if (bench_suite == "wiring") {
      for (int side : {2, 4, 8})
        for (int s = 1; s <= bench_seeds; ++s)
          jobs.push_back([side, s] { return bench_wiring(3, side, s); });
    } else if (bench_suite == "scaling") {
      // Runtime-scaling monitor: grow n until a run passes the time limit.
      for (const char* p : {"is", "ds"}) {
        double last = 0;
        for (int n = 20; n <= 3200 && last < bench_limit; n *= 2) {
          for (int s = 1; s <= bench_seeds; ++s) {
            BenchRow row = bench_solver(p, 2, n, s);
            last = std::max(last, row.seconds);
            rows.push_back(row);
          }
        }
      }
    } else {
      std::cerr << "error: unknown suite " << bench_suite << "\n";
      return kExitInvalid;
    }
    run_batch(jobs);

    std::ostringstream csv;
    csv << "suite,d,n,seed,value,seconds,ok\n";
    Json jrows = Json::array();
    for (const BenchRow& r : rows) {
      csv << r.suite << ',' << r.d << ',' << r.n << ',' << r.seed << ',' << r.value << ','
          << r.seconds << ',' << (r.ok ? 1 : 0) << "\n";
      jrows.push_back(Json{{"suite", r.suite},
                           {"d", r.d},
                           {"n", r.n},
                           {"seed", r.seed},
                           {"value", r.value},
                           {"seconds", r.seconds},
                           {"ok", r.ok}});
    }
    spill(bench_out, csv.str());
    if (bench_out != "-") {
      std::string json_path = bench_out;
      auto dot = json_path.rfind('.');
      json_path = (dot == std::string::npos ? json_path : json_path.substr(0, dot)) + ".json";
      spill(json_path, jrows.dump(2));
    }
    bool all_ok = true;
    for (const BenchRow& r : rows) all_ok &= r.ok;
    return all_ok ? kExitOk : kExitVerify;
  }

  if (selftest->parsed()) {
    char* report = nullptr;
    fg_status st = fg_reduce_selftest(st_sets, 6, st_seed, &report);
    std::cout << take_string(report) << "\n";
    return st == FG_OK ? kExitOk : kExitVerify;
  }

  return kExitOk;
}
