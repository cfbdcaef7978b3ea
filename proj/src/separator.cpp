#include "fatgraph/separator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fatgraph {

Rational balance_bound(unsigned d) {
  Integer p = 1;
  for (unsigned i = 0; i < d; ++i) p *= 6;
  Integer q = p + 1;
  return Rational(p, q);
}

namespace {

// ---------------------------------------------------------------------------
// Base-hypercube search. All coordinates are scaled to a common denominator
// so the search runs on exact integers; the minimum side is found by binary
// search on the side length with a weighted box-depth decision.
// ---------------------------------------------------------------------------

struct IntBox {
  std::vector<Integer> lo, hi;  // per axis; valid iff lo <= hi on every axis
  long mult = 1;
};

struct DepthEvent {
  Integer coord;
  int type;  // 0 = enter, 1 = exit
  int box;
  bool operator<(const DepthEvent& o) const {
    int c = cmp(coord, o.coord);
    if (c != 0) return c < 0;
    return type < o.type;
  }
};

long max_depth_1d(const std::vector<const IntBox*>& boxes, unsigned axis) {
  std::vector<DepthEvent> ev;
  ev.reserve(boxes.size() * 2);
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    ev.push_back({boxes[i]->lo[axis], 0, i});
    ev.push_back({boxes[i]->hi[axis], 1, i});
  }
  std::sort(ev.begin(), ev.end());
  long depth = 0, best = 0;
  for (const DepthEvent& e : ev) {
    if (e.type == 0) {
      depth += boxes[e.box]->mult;
      best = std::max(best, depth);
    } else {
      depth -= boxes[e.box]->mult;
    }
  }
  return best;
}

// Max-plus segment tree with lazy range add.
class MaxAddTree {
 public:
  explicit MaxAddTree(int n) : n_(n), max_(4 * n, 0), lazy_(4 * n, 0) {}
  void add(int l, int r, long v) { add(1, 0, n_ - 1, l, r, v); }
  long max() const { return max_[1]; }

 private:
  void add(int node, int lo, int hi, int l, int r, long v) {
    if (r < lo || hi < l) return;
    if (l <= lo && hi <= r) {
      max_[node] += v;
      lazy_[node] += v;
      return;
    }
    int mid = (lo + hi) / 2;
    add(2 * node, lo, mid, l, r, v);
    add(2 * node + 1, mid + 1, hi, l, r, v);
    max_[node] = std::max(max_[2 * node], max_[2 * node + 1]) + lazy_[node];
  }
  int n_;
  std::vector<long> max_, lazy_;
};

long max_depth_2d(const std::vector<const IntBox*>& boxes, unsigned axis0, unsigned axis1) {
  std::vector<Integer> ys;
  ys.reserve(boxes.size() * 2);
  for (const IntBox* b : boxes) {
    ys.push_back(b->lo[axis1]);
    ys.push_back(b->hi[axis1]);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto index_of = [&](const Integer& v) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
  };

  std::vector<DepthEvent> ev;
  ev.reserve(boxes.size() * 2);
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    ev.push_back({boxes[i]->lo[axis0], 0, i});
    ev.push_back({boxes[i]->hi[axis0], 1, i});
  }
  std::sort(ev.begin(), ev.end());

  MaxAddTree tree(static_cast<int>(ys.size()));
  long best = 0;
  for (const DepthEvent& e : ev) {
    const IntBox* b = boxes[e.box];
    int l = index_of(b->lo[axis1]);
    int r = index_of(b->hi[axis1]);
    if (e.type == 0) {
      tree.add(l, r, b->mult);
      best = std::max(best, tree.max());
    } else {
      tree.add(l, r, -b->mult);
    }
  }
  return best;
}

long max_depth(const std::vector<const IntBox*>& boxes, const std::vector<unsigned>& axes);

long max_depth_sweep(const std::vector<const IntBox*>& boxes, const std::vector<unsigned>& axes) {
  unsigned a0 = axes[0];
  std::vector<unsigned> rest(axes.begin() + 1, axes.end());
  std::vector<DepthEvent> ev;
  ev.reserve(boxes.size() * 2);
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    ev.push_back({boxes[i]->lo[a0], 0, i});
    ev.push_back({boxes[i]->hi[a0], 1, i});
  }
  std::sort(ev.begin(), ev.end());
  std::vector<char> active(boxes.size(), 0);
  long best = 0;
  size_t i = 0;
  while (i < ev.size()) {
    size_t j = i;
    bool entered = false;
    while (j < ev.size() && ev[j].coord == ev[i].coord && ev[j].type == 0) {
      active[ev[j].box] = 1;
      entered = true;
      ++j;
    }
    if (entered) {
      std::vector<const IntBox*> act;
      for (int b = 0; b < static_cast<int>(boxes.size()); ++b)
        if (active[b]) act.push_back(boxes[b]);
      best = std::max(best, max_depth(act, rest));
    }
    while (j < ev.size() && ev[j].coord == ev[i].coord) {
      active[ev[j].box] = 0;
      ++j;
    }
    i = j;
  }
  return best;
}

long max_depth(const std::vector<const IntBox*>& boxes, const std::vector<unsigned>& axes) {
  if (boxes.empty()) return 0;
  if (axes.size() == 1) return max_depth_1d(boxes, axes[0]);
  if (axes.size() == 2) return max_depth_2d(boxes, axes[0], axes[1]);
  return max_depth_sweep(boxes, axes);
}

// Boxes of lower corners that place a side-L hypercube over item i.
std::vector<IntBox> coverable_boxes(const std::vector<IntBox>& items, const Integer& side) {
  std::vector<IntBox> out;
  for (const IntBox& it : items) {
    IntBox b;
    b.mult = it.mult;
    bool ok = true;
    for (unsigned a = 0; a < it.lo.size(); ++a) {
      Integer lo = it.hi[a] - side;
      if (lo > it.lo[a]) {
        ok = false;
        break;
      }
      b.lo.push_back(lo);
      b.hi.push_back(it.lo[a]);
    }
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

bool depth_reaches(const std::vector<IntBox>& boxes, long k, unsigned d) {
  std::vector<const IntBox*> ptrs;
  ptrs.reserve(boxes.size());
  for (const IntBox& b : boxes) ptrs.push_back(&b);
  std::vector<unsigned> axes(d);
  for (unsigned a = 0; a < d; ++a) axes[a] = a;
  return max_depth(ptrs, axes) >= k;
}

// Lexicographically smallest corner with depth >= k; boxes must admit one.
std::vector<Integer> lex_min_corner(std::vector<const IntBox*> boxes, long k,
                                    std::vector<unsigned> axes) {
  std::vector<Integer> corner;
  while (!axes.empty()) {
    unsigned a0 = axes[0];
    std::vector<unsigned> rest(axes.begin() + 1, axes.end());
    std::vector<DepthEvent> ev;
    for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
      ev.push_back({boxes[i]->lo[a0], 0, i});
      ev.push_back({boxes[i]->hi[a0], 1, i});
    }
    std::sort(ev.begin(), ev.end());
    std::vector<char> active(boxes.size(), 0);
    bool found = false;
    size_t i = 0;
    while (i < ev.size() && !found) {
      size_t j = i;
      bool entered = false;
      while (j < ev.size() && ev[j].coord == ev[i].coord && ev[j].type == 0) {
        active[ev[j].box] = 1;
        entered = true;
        ++j;
      }
      if (entered) {
        std::vector<const IntBox*> act;
        for (int b = 0; b < static_cast<int>(boxes.size()); ++b)
          if (active[b]) act.push_back(boxes[b]);
        long depth = rest.empty()
                         ? [&] {
                             long s = 0;
                             for (const IntBox* p : act) s += p->mult;
                             return s;
                           }()
                         : max_depth(act, rest);
        if (depth >= k) {
          corner.push_back(ev[i].coord);
          boxes = std::move(act);
          found = true;
          break;
        }
      }
      while (j < ev.size() && ev[j].coord == ev[i].coord) {
        active[ev[j].box] = 0;
        ++j;
      }
      i = j;
    }
    if (!found) throw std::logic_error("depth witness disappeared");
    axes = rest;
  }
  return corner;
}

struct H0Result {
  std::vector<Rational> corner;
  Rational side;
};

std::vector<IntBox> scale_items(const std::vector<Bounds>& bounds,
                                const std::vector<long>& mults, Integer* denom_out) {
  Integer denom = 1;
  for (const Bounds& b : bounds) {
    for (const Rational& q : b.lo) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
    for (const Rational& q : b.hi) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<IntBox> items(bounds.size());
  for (size_t i = 0; i < bounds.size(); ++i) {
    items[i].mult = mults[i];
    for (size_t a = 0; a < bounds[i].lo.size(); ++a) {
      Rational lo = bounds[i].lo[a] * denom;
      Rational hi = bounds[i].hi[a] * denom;
      items[i].lo.push_back(lo.get_num());
      items[i].hi.push_back(hi.get_num());
    }
  }
  *denom_out = denom;
  return items;
}

H0Result find_h0_sweep(const std::vector<Bounds>& bounds, const std::vector<long>& mults,
                       unsigned d, long k) {
  Integer denom;
  std::vector<IntBox> items = scale_items(bounds, mults, &denom);

  Integer lo = 0, hi = 0;
  for (unsigned a = 0; a < d; ++a) {
    Integer mn = items[0].lo[a], mx = items[0].hi[a];
    for (const IntBox& it : items) {
      mn = std::min(mn, it.lo[a]);
      mx = std::max(mx, it.hi[a]);
    }
    Integer spread = mx - mn;
    hi = std::max(hi, spread);
  }
  // Smallest integer side (in scaled units) admitting depth >= k; the proof
  // candidates (bounding-coordinate differences) are integers here, and the
  // decision flips exactly at one of them.
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (depth_reaches(coverable_boxes(items, mid), k, d))
      hi = mid;
    else
      lo = mid + 1;
  }

  std::vector<IntBox> boxes = coverable_boxes(items, lo);
  std::vector<const IntBox*> ptrs;
  for (const IntBox& b : boxes) ptrs.push_back(&b);
  std::vector<unsigned> axes(d);
  for (unsigned a = 0; a < d; ++a) axes[a] = a;
  std::vector<Integer> corner = lex_min_corner(ptrs, k, axes);

  H0Result res;
  res.side = Rational(lo, denom);
  res.side.canonicalize();
  for (unsigned a = 0; a < d; ++a) {
    Rational c(corner[a], denom);
    c.canonicalize();
    res.corner.push_back(c);
  }
  return res;
}

H0Result find_h0_enumerate(const std::vector<Bounds>& bounds, const std::vector<long>& mults,
                           unsigned d, long k) {
  int n = static_cast<int>(bounds.size());
  std::optional<H0Result> best;

  std::vector<Rational> corner(d);
  std::vector<int> pick(d, 0);
  while (true) {
    for (unsigned a = 0; a < d; ++a) corner[a] = bounds[pick[a]].lo[a];
    for (int s = 0; s < n; ++s) {
      Rational side = bounds[s].hi[0] - corner[0];
      if (side < 0) continue;
      long count = 0;
      for (int i = 0; i < n; ++i) {
        bool inside = true;
        for (unsigned a = 0; a < d; ++a) {
          if (bounds[i].lo[a] < corner[a] || bounds[i].hi[a] > corner[a] + side) {
            inside = false;
            break;
          }
        }
        if (inside) count += mults[i];
      }
      if (count >= k) {
        bool better = !best || side < best->side ||
                      (side == best->side && corner < best->corner);
        if (better) best = H0Result{corner, side};
      }
    }
    unsigned a = 0;
    while (a < d && pick[a] == n - 1) pick[a++] = 0;
    if (a == d) break;
    ++pick[a];
  }
  if (!best) throw std::logic_error("enumeration found no hypercube");
  return *best;
}

H0Result find_h0(const std::vector<Bounds>& bounds, const std::vector<long>& mults, unsigned d,
                 long k, bool exact_enumeration) {
  if (exact_enumeration) return find_h0_enumerate(bounds, mults, d, k);
  return find_h0_sweep(bounds, mults, d, k);
}

long ceil_threshold(long total, unsigned d) {
  Integer p = 1;
  for (unsigned i = 0; i < d; ++i) p *= 6;
  Integer denom = p + 1;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), Integer(total).get_mpz_t(), denom.get_mpz_t());
  return k.get_si();
}

// ---------------------------------------------------------------------------
// Stabbing grids
// ---------------------------------------------------------------------------

// Lexicographically smallest point of spacing * Z^d inside the closed ball,
// returned in grid units. Throws when the ball holds no grid point.
std::vector<Integer> lex_min_grid_point(const Ball& ball, const Rational& spacing) {
  unsigned d = ball.center.dimension();
  std::vector<Rational> c(d);
  for (unsigned a = 0; a < d; ++a) c[a] = ball.center.coords[a] / spacing;
  Rational budget = (ball.radius / spacing) * (ball.radius / spacing);

  // Per-axis squared offset to the nearest integer; completing any prefix by
  // nearest integers is optimal, which makes level budgets independent.
  std::vector<Rational> near_off_sq(d);
  for (unsigned a = 0; a < d; ++a) {
    Integer nearest = floor_rational(c[a] + Rational(1, 2));
    Rational off = c[a] - Rational(nearest);
    near_off_sq[a] = off * off;
  }
  std::vector<Rational> suffix(d + 1, Rational(0));
  for (int a = static_cast<int>(d) - 1; a >= 0; --a)
    suffix[a] = suffix[a + 1] + near_off_sq[a];
  if (suffix[0] > budget)
    throw std::logic_error("stabbing grid too coarse for inner ball");

  std::vector<Integer> out;
  for (unsigned a = 0; a < d; ++a) {
    Rational slack = budget - suffix[a + 1];  // allowed (z - c_a)^2
    Rational root_ub = sqrt_upper(slack, 48);
    Integer z = ceil_rational(c[a] - root_ub);
    auto fits = [&](const Integer& zz) {
      Rational off = c[a] - Rational(zz);
      return off * off <= slack;
    };
    while (!fits(z)) ++z;
    while (fits(z - 1)) --z;
    Rational off = c[a] - Rational(z);
    budget -= off * off;
    out.push_back(z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared shell construction
// ---------------------------------------------------------------------------

enum class ItemKind { Interior, Exterior, Large, Tiny, Sized };

struct SepItem {
  std::vector<FatObject> members;  // normalized coordinates
  Bounds bb;
  Rational diam_sq;  // exact for single objects, bbox-diagonal bound for unions
  Ball inner;
  long mult = 1;
  Rational node_weight = 0;

  ItemKind kind = ItemKind::Sized;
  int size_class = -1;
  int clique_id = -1;
};

FatObject normalize_object(const FatObject& o, const std::vector<Rational>& center,
                           const Rational& side) {
  FatObject out = o;
  if (Ball* b = std::get_if<Ball>(&out.shape)) {
    for (unsigned a = 0; a < b->center.dimension(); ++a)
      b->center.coords[a] = (b->center.coords[a] - center[a]) / side;
    b->radius /= side;
  } else {
    Box& box = std::get<Box>(out.shape);
    for (unsigned a = 0; a < box.min_corner.dimension(); ++a) {
      box.min_corner.coords[a] = (box.min_corner.coords[a] - center[a]) / side;
      box.sides[a] /= side;
    }
  }
  return out;
}

std::vector<Rational> box_lo(unsigned d, const Rational& half) {
  std::vector<Rational> v(d, -half);
  return v;
}
std::vector<Rational> box_hi(unsigned d, const Rational& half) {
  std::vector<Rational> v(d, half);
  return v;
}

bool item_intersects_hbox(const SepItem& it, unsigned d, const Rational& half) {
  for (unsigned a = 0; a < d; ++a)
    if (it.bb.lo[a] > half || it.bb.hi[a] < -half) return false;
  std::vector<Rational> lo = box_lo(d, half), hi = box_hi(d, half);
  for (const FatObject& o : it.members)
    if (intersects_box(o, lo, hi)) return true;
  return false;
}

bool item_strictly_inside_hbox(const SepItem& it, unsigned d, const Rational& half) {
  for (unsigned a = 0; a < d; ++a)
    if (!(it.bb.lo[a] > -half && it.bb.hi[a] < half)) return false;
  return true;
}

long shell_count(long n, unsigned d) {
  Integer root;
  Integer nn(n);
  int exact = mpz_root(root.get_mpz_t(), nn.get_mpz_t(), d);
  if (!exact) root += 1;
  return std::max(1L, root.get_si());
}

int max_size_class(long n, unsigned d) {
  // ceil((1 - 1/d) * log2(n)) - 2: smallest t with 2^(t*d) >= n^(d-1).
  Integer target = 1;
  for (unsigned i = 0; i + 1 < d; ++i) target *= n;
  int t = 0;
  Integer pow2 = 1;
  while (pow2 < target) {
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), d);
    ++t;
  }
  return t - 2;
}

int classify_size(const Rational& diam_sq, long n, unsigned d, int s_max) {
  if (compare_diam_to_scaled(diam_sq, Rational(1), Integer(n), d) < 0) return 0;
  for (int s = 1; s <= s_max; ++s) {
    Rational t(Integer(1) << s);
    if (compare_diam_to_scaled(diam_sq, t, Integer(n), d) < 0) return s;
  }
  throw std::logic_error("object escaped the size classes");
}

struct CoreResult {
  CliqueSeparator sep;
};

CliqueSeparator build_separator_core(std::vector<SepItem> items, unsigned d,
                                     const SeparatorOptions& opts, bool weight_by_nodes,
                                     bool exact_h0) {
  const long n = static_cast<long>(items.size());
  long total_mult = 0;
  for (const SepItem& it : items) total_mult += it.mult;
  long k = ceil_threshold(total_mult, d);

  // Base hypercube over the raw bounds, then normalize every member so the
  // winning hypercube is the unit cube at the origin.
  std::vector<Bounds> raw_bounds;
  std::vector<long> mults;
  for (SepItem& it : items) {
    Bounds b = it.members[0].bounds();
    for (size_t m = 1; m < it.members.size(); ++m) b.merge(it.members[m].bounds());
    raw_bounds.push_back(b);
    mults.push_back(it.mult);
  }
  H0Result h0 = find_h0(raw_bounds, mults, d, k, exact_h0);
  std::vector<Rational> h0_center(d);
  for (unsigned a = 0; a < d; ++a) h0_center[a] = h0.corner[a] + h0.side / 2;

  for (SepItem& it : items) {
    for (FatObject& o : it.members) o = normalize_object(o, h0_center, h0.side);
    it.bb = it.members[0].bounds();
    for (size_t m = 1; m < it.members.size(); ++m) it.bb.merge(it.members[m].bounds());
    if (it.members.size() == 1) {
      it.diam_sq = it.members[0].diameter_sq();
      it.inner = it.members[0].inner_ball();
    } else {
      Rational ds = 0;
      for (unsigned a = 0; a < d; ++a) {
        Rational ext = it.bb.hi[a] - it.bb.lo[a];
        ds += ext * ext;
      }
      it.diam_sq = ds;
      // Largest member inner ball (ties: first member).
      it.inner = it.members[0].inner_ball();
      for (size_t m = 1; m < it.members.size(); ++m) {
        Ball cand = it.members[m].inner_ball();
        if (cand.radius > it.inner.radius) it.inner = cand;
      }
    }
  }

  // Effective fatness over the items: 2 r_in / diam upper bound.
  Rational alpha_sq_min;
  bool first = true;
  for (const SepItem& it : items) {
    Rational a_sq = (4 * it.inner.radius * it.inner.radius) / it.diam_sq;
    if (first || a_sq < alpha_sq_min) alpha_sq_min = a_sq;
    first = false;
  }
  Rational alpha_lb = sqrt_lower(alpha_sq_min, 24);
  if (alpha_lb <= 0) alpha_lb = sqrt_lower(alpha_sq_min, 64);
  if (alpha_lb <= 0) throw std::logic_error("vanishing fatness bound");

  const long m = shell_count(n, d);
  const int s_max = max_size_class(n, d);
  const Rational quarter_sq(1, 16);
  const Rational sqrt_d_ub = sqrt_upper(Rational(d), 16);
  const Rational nroot_ub = nth_root_upper(Integer(n), d, 16);

  // Classify items and assign clique keys via per-class stabbing grids.
  std::map<std::pair<long, std::vector<Integer>>, int> clique_of_key;
  std::vector<std::vector<int>> clique_members;
  auto clique_for = [&](long tag, std::vector<Integer> key, int item) {
    auto [it, inserted] = clique_of_key.try_emplace({tag, std::move(key)}, -1);
    if (inserted) {
      it->second = static_cast<int>(clique_members.size());
      clique_members.emplace_back();
    }
    clique_members[it->second].push_back(item);
    return it->second;
  };

  const Rational g_large = alpha_lb / (4 * sqrt_d_ub);
  for (int i = 0; i < n; ++i) {
    SepItem& it = items[i];
    if (it.diam_sq >= quarter_sq) {
      if (item_intersects_hbox(it, d, Rational(3, 2))) {
        it.kind = ItemKind::Large;
        it.clique_id = clique_for(-1, lex_min_grid_point(it.inner, g_large), i);
      } else {
        it.kind = ItemKind::Exterior;
      }
      continue;
    }
    if (item_strictly_inside_hbox(it, d, Rational(1, 2))) {
      it.kind = ItemKind::Interior;
      continue;
    }
    if (!item_intersects_hbox(it, d, Rational(3, 2))) {
      it.kind = ItemKind::Exterior;
      continue;
    }
    int s = classify_size(it.diam_sq, n, d, s_max);
    it.size_class = s;
    if (s == 0) {
      it.kind = ItemKind::Tiny;
      it.clique_id = clique_for(-2 - i, {}, i);  // singleton clique
    } else {
      it.kind = ItemKind::Sized;
      Rational g_s = alpha_lb * Rational(Integer(1) << s) / 4 / (sqrt_d_ub * nroot_ub);
      it.clique_id = clique_for(s, lex_min_grid_point(it.inner, g_s), i);
    }
  }

  // Shell membership: an item is on the boundary of H_i when it meets the
  // closed cube but is not strictly inside it.
  std::vector<Rational> halves(m + 1);  // half side of H_s: (1 + 2s/m) / 2
  for (long s = 1; s <= m; ++s) {
    halves[s] = Rational(1, 2) + Rational(Integer(s), Integer(m)) / 2;
    halves[s].canonicalize();
  }
  std::vector<std::vector<int>> boundary(m + 1);
  std::vector<int> large_items;
  for (int i = 0; i < n; ++i) {
    const SepItem& it = items[i];
    if (it.kind == ItemKind::Large) large_items.push_back(i);
    if (it.kind == ItemKind::Interior || it.kind == ItemKind::Exterior) continue;
    for (long s = 1; s <= m; ++s) {
      if (item_strictly_inside_hbox(it, d, halves[s])) continue;
      if (item_intersects_hbox(it, d, halves[s])) boundary[s].push_back(i);
    }
  }

  // Evaluate all candidates; keep exact weights.
  const WeightFunction& gamma = opts.gamma;
  Rational large_weight = 0;
  if (weight_by_nodes) {
    for (int i : large_items) large_weight += items[i].node_weight;
  } else {
    std::map<int, long> sizes;
    for (int i : large_items) sizes[items[i].clique_id] += 1;
    for (const auto& [cid, cnt] : sizes) large_weight += gamma(cnt);
  }

  int best_shell = -1;
  Rational best_weight;
  std::vector<Rational> candidate_weights(m + 1, Rational(0));
  for (long s = 1; s <= m; ++s) {
    Rational w = large_weight;
    if (weight_by_nodes) {
      for (int i : boundary[s])
        if (items[i].kind != ItemKind::Large) w += items[i].node_weight;
    } else {
      std::map<int, long> sizes;
      for (int i : boundary[s])
        if (items[i].kind != ItemKind::Large) sizes[items[i].clique_id] += 1;
      for (const auto& [cid, cnt] : sizes) w += gamma(cnt);
    }
    candidate_weights[s] = w;
    if (best_shell < 0 || w < best_weight) {
      best_shell = static_cast<int>(s);
      best_weight = w;
    }
  }

  // Materialize the winning candidate.
  std::vector<char> in_sep(n, 0);
  for (int i : large_items) in_sep[i] = 1;
  for (int i : boundary[best_shell]) in_sep[i] = 1;

  CliqueSeparator sep;
  sep.item_count = static_cast<int>(n);
  sep.shell_index = best_shell;
  sep.weight = best_weight;
  sep.candidate_weights = std::move(candidate_weights);

  std::map<int, std::vector<int>> groups;
  const Rational& half_best = halves[best_shell];
  long mult_a = 0, mult_b = 0;
  for (int i = 0; i < n; ++i) {
    if (in_sep[i]) {
      groups[items[i].clique_id].push_back(i);
      continue;
    }
    if (item_strictly_inside_hbox(items[i], d, half_best)) {
      sep.side_a.push_back(i);
      mult_a += items[i].mult;
    } else {
      sep.side_b.push_back(i);
      mult_b += items[i].mult;
    }
  }
  for (auto& [cid, members] : groups) sep.cliques.push_back(members);
  std::sort(sep.cliques.begin(), sep.cliques.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  sep.balance = total_mult > 0 ? Rational(Integer(std::max(mult_a, mult_b)), Integer(total_mult)) : Rational(0);
  sep.balance.canonicalize();
  return sep;
}

}  // namespace

Hypercube find_base_hypercube(const ObjectSet& objs, bool exact_enumeration) {
  objs.validate();
  if (objs.objects.empty()) throw std::invalid_argument("empty object set");
  std::vector<Bounds> bounds;
  std::vector<long> mults(objs.size(), 1);
  for (const FatObject& o : objs.objects) bounds.push_back(o.bounds());
  long k = ceil_threshold(objs.size(), objs.dimension);
  H0Result h0 = find_h0(bounds, mults, objs.dimension, k, exact_enumeration);
  Hypercube cube;
  cube.side = h0.side;
  for (unsigned a = 0; a < objs.dimension; ++a)
    cube.center.coords.push_back(h0.corner[a] + h0.side / 2);
  return cube;
}

Hypercube find_base_hypercube_enumerate(const ObjectSet& objs) {
  return find_base_hypercube(objs, true);
}

std::vector<Hypercube> build_candidate_shells(const Hypercube& h0, long n, unsigned d) {
  (void)d;
  long m = shell_count(n, d);
  std::vector<Hypercube> shells;
  for (long i = 1; i <= m; ++i) {
    Hypercube h;
    h.center = h0.center;
    h.side = h0.side * (Rational(1) + Rational(Integer(2 * i), Integer(m)));
    h.side.canonicalize();
    shells.push_back(h);
  }
  return shells;
}

std::vector<std::vector<int>> clique_cover_size_class(const std::vector<FatObject>& objs,
                                                      int s, long n) {
  if (objs.empty()) return {};
  unsigned d = objs[0].dimension();
  if (s < 1) throw std::invalid_argument("size class index must be >= 1");
  Rational alpha_sq_min;
  bool first = true;
  for (const FatObject& o : objs) {
    Rational diam_sq = o.diameter_sq();
    if (compare_diam_to_scaled(diam_sq, Rational(Integer(1) << (s - 1)), Integer(n), d) < 0 ||
        compare_diam_to_scaled(diam_sq, Rational(Integer(1) << s), Integer(n), d) >= 0)
      throw std::invalid_argument("object outside declared size class");
    Ball inner = o.inner_ball();
    Rational a_sq = (4 * inner.radius * inner.radius) / diam_sq;
    if (first || a_sq < alpha_sq_min) alpha_sq_min = a_sq;
    first = false;
  }
  Rational alpha_lb = sqrt_lower(alpha_sq_min, 24);
  Rational g = (alpha_lb * Rational(Integer(1) << s) / 4) /
               (sqrt_upper(Rational(d), 16) * nth_root_upper(Integer(n), d, 16));

  std::map<std::vector<Integer>, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    groups[lex_min_grid_point(objs[i].inner_ball(), g)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

CliqueSeparator build_separator(const ObjectSet& objs, const SeparatorOptions& opts) {
  objs.validate();
  if (objs.size() < 2) throw std::invalid_argument("build_separator requires |F| >= 2");
  std::vector<SepItem> items(objs.size());
  for (int i = 0; i < objs.size(); ++i) {
    items[i].members = {objs.objects[i]};
    items[i].mult = 1;
  }
  return build_separator_core(std::move(items), objs.dimension, opts, false, opts.exact_h0);
}

CliqueSeparator separator_for_contraction(const KappaPartition& part, const ObjectSet& objs,
                                          const SeparatorOptions& opts) {
  objs.validate();
  if (static_cast<int>(part.class_of.size()) != objs.size())
    throw unsupported_error("separator_for_contraction requires geometry for every vertex");
  std::vector<SepItem> items(part.class_count());
  for (int c = 0; c < part.class_count(); ++c) {
    for (int v : part.classes[c]) items[c].members.push_back(objs.objects[v]);
    items[c].mult = static_cast<long>(part.classes[c].size());
    items[c].node_weight = part.contracted.node_weights[c];
  }
  return build_separator_core(std::move(items), objs.dimension, opts, true, opts.exact_h0);
}

std::vector<std::string> validate_separator(const CliqueSeparator& sep,
                                            const IntersectionGraph& g, unsigned d,
                                            const std::vector<long>* multiplicity) {
  std::vector<std::string> violations;
  int n = sep.item_count;
  if (g.n != n) {
    violations.push_back("graph size does not match separator item count");
    return violations;
  }
  std::vector<int> seen(n, 0);
  for (const auto& c : sep.cliques)
    for (int v : c) {
      if (v < 0 || v >= n) violations.push_back("clique member out of range");
      else ++seen[v];
    }
  for (int v : sep.side_a) ++seen[v];
  for (int v : sep.side_b) ++seen[v];
  for (int v = 0; v < n; ++v)
    if (seen[v] != 1) {
      violations.push_back("cliques and sides do not partition the vertices");
      break;
    }
  for (const auto& c : sep.cliques)
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) {
          violations.push_back("clique is not complete in the graph");
          i = c.size();
          break;
        }
  std::vector<char> in_b(n, 0);
  for (int v : sep.side_b) in_b[v] = 1;
  for (int v : sep.side_a)
    for (int w : g.adj[v])
      if (in_b[w]) {
        violations.push_back("edge crosses side_a x side_b");
        break;
      }
  long total = 0, ma = 0, mb = 0;
  auto mult_of = [&](int v) { return multiplicity ? (*multiplicity)[v] : 1L; };
  for (int v = 0; v < n; ++v) total += mult_of(v);
  for (int v : sep.side_a) ma += mult_of(v);
  for (int v : sep.side_b) mb += mult_of(v);
  Rational bound = balance_bound(d);
  if (Rational(std::max(ma, mb)) > bound * Rational(total))
    violations.push_back("balance bound violated");
  return violations;
}

}  // namespace fatgraph
