#include "doctest.h"

#include "fatgraph/geometry.hpp"
#include "fatgraph/oracle.hpp"
#include "helpers.hpp"

using namespace fatgraph;
using namespace fatgraph::testing;

TEST_CASE("pairwise intersection decisions are exact and closed") {
  FatObject b0 = ball(0, {0, 0}, 1);
  CHECK(intersects(b0, ball(1, {1.5, 0}, 1)));
  CHECK_FALSE(intersects(b0, ball(1, {3, 0}, 1)));
  // Tangency counts: distance exactly 2.
  CHECK(intersects(b0, ball(1, {2, 0}, 1)));
  // Box vs ball: clamp distance exactly the radius.
  CHECK(intersects(box(0, {0, 0}, {1, 1}), ball(1, {2, 0.5}, 1)));
  CHECK_FALSE(intersects(box(0, {0, 0}, {1, 1}), ball(1, {2.25, 0.5}, 1)));
  // Boxes touching along an edge.
  CHECK(intersects(box(0, {0, 0}, {1, 1}), box(1, {1, 0}, {1, 1})));
  CHECK_FALSE(intersects(box(0, {0, 0}, {1, 1}), box(1, {1.125, 0}, {1, 1})));

  FatObject d3 = ball(0, {0, 0, 0}, 1);
  CHECK_THROWS_AS(intersects(b0, d3), std::invalid_argument);
}

TEST_CASE("intersection is symmetric on random objects") {
  GeneratorConfig cfg;
  cfg.n = 24;
  cfg.box_fraction = 0.5;
  cfg.region_side = 6;
  cfg.seed = 9;
  ObjectSet objs = gen_instance(cfg);
  for (int i = 0; i < objs.size(); ++i)
    for (int j = i + 1; j < objs.size(); ++j)
      CHECK(intersects(objs.objects[i], objs.objects[j]) ==
            intersects(objs.objects[j], objs.objects[i]));
}

TEST_CASE("diameters") {
  CHECK(ball(0, {0, 0}, 1).diameter_sq() == 4);  // diameter 2
  CHECK(box(0, {0, 0}, {1, 1}).diameter_sq() == 2);
  CHECK(box(0, {0, 0}, {3, 4}).diameter_sq() == 25);  // diameter 5
  CHECK(box(0, {0, 0}, {3, 4}).diameter() == doctest::Approx(5.0));
}

TEST_CASE("fatness lower bound sits in (0, 1]") {
  CHECK(ball(0, {0, 0}, 2).fatness_lower() == 1);
  Rational a = box(0, {0, 0}, {1, 1}).fatness_lower();
  CHECK(a > 0);
  CHECK(a <= 1);
  // min side / diagonal for a 1x1 box is 1/sqrt(2).
  CHECK(a.get_d() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
  Rational thin = box(0, {0, 0}, {1, 100}).fatness_lower();
  CHECK(thin.get_d() < 0.011);
}

TEST_CASE("graph construction on trivial layouts") {
  ObjectSet two = make_set(2, {ball(0, {0, 0}, 1), ball(1, {5, 5}, 1)});
  IntersectionGraph g2 = build_intersection_graph(two);
  CHECK(g2.n == 2);
  CHECK(g2.edge_count() == 0);

  ObjectSet tri = make_set(2, {ball(0, {0, 0}, 1), ball(1, {2, 0}, 1), ball(2, {1, 1.7}, 1)});
  // mutual distances 2 (tangent) and sqrt(1 + 1.7^2) = sqrt(3.89) < 2
  IntersectionGraph g3 = build_intersection_graph(tri);
  CHECK(g3.edge_count() == 3);
}

TEST_CASE("bucketed graph equals the all-pairs construction") {
  // 1000 random instances across d in {2,3}, n up to 64.
  int checked = 0;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    for (unsigned d : {2u, 3u}) {
      GeneratorConfig cfg;
      cfg.d = d;
      cfg.n = 4 + static_cast<int>(seed % 61);
      cfg.box_fraction = (seed % 3) * 0.4;
      cfg.size_ratio = 1.0 + (seed % 5) * 0.5;
      cfg.region_side = 4.0 + (seed % 7);
      cfg.seed = seed * 977 + d;
      ObjectSet objs = gen_instance(cfg);
      IntersectionGraph fast = build_intersection_graph(objs);
      IntersectionGraph naive = build_intersection_graph_naive(objs);
      REQUIRE(fast.n == naive.n);
      CHECK(fast.adj == naive.adj);
      ++checked;
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("object set validation") {
  ObjectSet bad = make_set(2, {ball(1, {0, 0}, 1)});  // id not starting at 0
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ObjectSet neg = make_set(2, {ball(0, {0, 0}, -1)});
  CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
  ObjectSet sigma = make_set(2, {ball(0, {0, 0}, 1), ball(1, {4, 4}, 2)});
  CHECK(sigma.size_ratio() == doctest::Approx(2.0).epsilon(1e-5));
}
