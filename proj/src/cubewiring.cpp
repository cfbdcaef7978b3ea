#include "fatgraph/cubewiring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fatgraph/errors.hpp"

namespace fatgraph {

void WiringInstance::validate() const {
  if (d < 3) throw unsupported_error("cube wiring needs dimension >= 3");
  if (n.size() != d - 1) throw std::invalid_argument("floor box needs d-1 sizes");
  for (int s : n)
    if (s < 1) throw std::invalid_argument("box sizes must be >= 1");
  std::set<GridPoint> origins, dests;
  for (const auto& [p, q] : matching) {
    if (p.size() != d - 1 || q.size() != d - 1)
      throw std::invalid_argument("matched point has wrong dimension");
    for (unsigned a = 0; a < d - 1; ++a)
      if (p[a] < 1 || p[a] > n[a] || q[a] < 1 || q[a] > n[a])
        throw std::invalid_argument("matched point outside the box");
    if (!origins.insert(p).second) throw std::invalid_argument("duplicate origin");
    if (!dests.insert(q).second) throw std::invalid_argument("duplicate destination");
  }
}

namespace {

GridPoint emb(const GridPoint& floor, int h) {
  GridPoint p = floor;
  p.push_back(h);
  return p;
}

GridPoint floor_part(const GridPoint& full) {
  return GridPoint(full.begin(), full.end() - 1);
}

// Unit steps moving coordinate `axis` of the path head to `target`.
void walk_axis(std::vector<GridPoint>& path, unsigned axis, int target) {
  while (path.back()[axis] != target) {
    GridPoint p = path.back();
    p[axis] += target > p[axis] ? 1 : -1;
    path.push_back(std::move(p));
  }
}

void lift_path(std::vector<GridPoint>& path, int target_h) {
  walk_axis(path, static_cast<unsigned>(path.back().size()) - 1, target_h);
}

int cell_of(int x, int k) { return (x - 1) / k; }  // 0-based

}  // namespace

WireFragment local_movement(const std::vector<std::pair<GridPoint, GridPoint>>& pairs, int k) {
  if (k < 1) throw std::invalid_argument("cell size must be >= 1");
  std::set<std::vector<int>> used_cells;
  WireFragment frag;
  frag.top = 3;
  for (const auto& [p, q] : pairs) {
    if (p.size() != q.size()) throw std::invalid_argument("endpoint dimension mismatch");
    std::vector<int> cell;
    for (size_t a = 0; a < p.size(); ++a) {
      if (cell_of(p[a], k) != cell_of(q[a], k))
        throw std::invalid_argument("pair endpoints are not in a common cell");
      cell.push_back(cell_of(p[a], k));
    }
    if (!used_cells.insert(cell).second)
      throw std::invalid_argument("points are not quasi-spaced: two pairs in one cell");
    std::vector<GridPoint> path{emb(p, 1)};
    lift_path(path, 2);
    for (unsigned a = 0; a < p.size(); ++a) walk_axis(path, a, q[a]);
    lift_path(path, 3);
    frag.paths.push_back(std::move(path));
  }
  return frag;
}

WireFragment global_movement(const std::vector<GridPoint>& points, unsigned axis, int shift,
                             int axis_size) {
  if (shift < 0) throw std::invalid_argument("shift must be >= 0");
  for (const GridPoint& p : points)
    if (p[axis] < 1 || p[axis] > axis_size)
      throw std::invalid_argument("point outside the declared axis range");

  WireFragment frag;
  frag.top = axis_size + 2;
  for (const GridPoint& p : points) {
    // Lower rows rise higher before sliding, so rows never cross.
    std::vector<GridPoint> path{emb(p, 1)};
    lift_path(path, frag.top - p[axis]);
    walk_axis(path, axis, p[axis] + shift);
    lift_path(path, frag.top);
    frag.paths.push_back(std::move(path));
  }
  return frag;
}

namespace {

// One compression phase along `axis`: every head moves from its k-spaced
// coordinate to its 0-based cell index plus cell_base, on a private layer
// per cell. Other coordinates stay fixed, which keeps parallel groups
// disjoint. Returns the new top height.
int compress_phase(std::vector<std::vector<GridPoint>>& paths, unsigned axis, int k,
                   int cell_base, int h0) {
  int max_cell = 0;
  for (const auto& path : paths) max_cell = std::max(max_cell, cell_of(path.back()[axis], k));
  int top = h0 + max_cell + 2;
  for (auto& path : paths) {
    int cell = cell_of(path.back()[axis], k);
    lift_path(path, h0 + cell + 1);
    walk_axis(path, axis, cell + cell_base);
    lift_path(path, top);
  }
  return top;
}

}  // namespace

WireFragment compress(const std::vector<GridPoint>& points, int k, int cell_base) {
  if (k < 1) throw std::invalid_argument("cell size must be >= 1");
  if (points.empty()) return {};
  size_t df = points[0].size();
  int residue = ((points[0][0] % k) + k) % k;
  for (const GridPoint& p : points)
    for (int x : p)
      if (((x % k) + k) % k != residue)
        throw std::invalid_argument("point set is not k-spaced");

  WireFragment frag;
  for (const GridPoint& p : points) frag.paths.push_back({emb(p, 1)});
  int h = 1;
  for (unsigned a = 0; a < df; ++a) h = compress_phase(frag.paths, a, k, cell_base, h);
  frag.top = h;
  return frag;
}

WireFragment expand(const std::vector<GridPoint>& points, int k, int cell_base) {
  WireFragment down = compress(points, k, cell_base);
  WireFragment up;
  up.top = down.top;
  for (auto& path : down.paths) {
    std::reverse(path.begin(), path.end());
    for (GridPoint& p : path) p.back() = down.top + 1 - p.back();
    up.paths.push_back(std::move(path));
  }
  return up;
}

namespace {

// Lexicographic-matching wiring with axes sorted by decreasing box size;
// paths[i] wires the i-th smallest point of P to the i-th smallest of Q.
WireFragment push_pull_sorted(std::vector<GridPoint> P, std::vector<GridPoint> Q,
                              const std::vector<int>& n) {
  WireFragment frag;
  if (P.empty()) {
    frag.top = 1;
    return frag;
  }
  std::sort(P.begin(), P.end());
  std::sort(Q.begin(), Q.end());
  size_t df = n.size();
  int n1 = n[0];
  int count = static_cast<int>(P.size());

  if (df == 1) {
    WireFragment glob = global_movement(P, 0, 5 * n1, n1);
    int level = glob.top;
    frag.paths = std::move(glob.paths);
    for (int i = 0; i < count; ++i) {
      auto& path = frag.paths[i];
      lift_path(path, level + i + 1);
      walk_axis(path, 0, Q[i][0]);
    }
    frag.top = level + count + 1;
    for (auto& path : frag.paths) lift_path(path, frag.top);
    return frag;
  }

  // Runs with constant first coordinate on both sides.
  std::vector<int> class_of(count);
  int classes = 0;
  for (int i = 0; i < count; ++i) {
    if (i > 0 && (P[i][0] != P[i - 1][0] || Q[i][0] != Q[i - 1][0])) ++classes;
    class_of[i] = classes;
  }
  ++classes;

  WireFragment glob = global_movement(P, 0, 5 * n1, n1);
  int level = glob.top;
  frag.paths = std::move(glob.paths);
  frag.top = level + classes + 1;

  std::vector<int> sub_n(n.begin() + 1, n.end());
  for (int j = 0; j < classes; ++j) {
    std::vector<int> members;
    for (int i = 0; i < count; ++i)
      if (class_of[i] == j) members.push_back(i);
    int c_j = P[members[0]][0];
    int layer = level + j + 1;

    std::vector<GridPoint> subP, subQ;
    for (int i : members) {
      subP.emplace_back(P[i].begin() + 1, P[i].end());
      subQ.emplace_back(Q[i].begin() + 1, Q[i].end());
    }
    WireFragment sub = push_pull_sorted(subP, subQ, sub_n);
    std::map<GridPoint, int> sub_index;
    for (int s = 0; s < static_cast<int>(sub.paths.size()); ++s)
      sub_index[floor_part(sub.paths[s].front())] = s;

    // The sub-wiring's height axis becomes a decreasing first coordinate
    // inside our private layer; its floor axes map to axes 1..df-1.
    for (int i : members) {
      auto& path = frag.paths[i];
      lift_path(path, layer);
      GridPoint key(P[i].begin() + 1, P[i].end());
      const auto& sub_path = sub.paths[sub_index.at(key)];
      for (size_t s = 0; s < sub_path.size(); ++s) {
        GridPoint real(df + 1);
        real[0] = 5 * n1 + c_j - sub_path[s].back();
        for (size_t a = 0; a + 1 < sub_path[s].size(); ++a) real[a + 1] = sub_path[s][a];
        real[df] = layer;
        if (real != path.back()) path.push_back(std::move(real));
      }
      walk_axis(path, 0, Q[i][0]);
      lift_path(path, frag.top);
    }
  }
  return frag;
}

}  // namespace

WireFragment push_pull(const std::vector<GridPoint>& P, const std::vector<GridPoint>& Q,
                       const std::vector<int>& n) {
  if (P.size() != Q.size()) throw std::invalid_argument("push_pull needs |P| == |Q|");
  size_t df = n.size();
  for (const GridPoint& p : P)
    if (p.size() != df) throw std::invalid_argument("point dimension mismatch");
  for (const GridPoint& q : Q)
    if (q.size() != df) throw std::invalid_argument("point dimension mismatch");

  std::vector<unsigned> perm(df);
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(), [&](unsigned a, unsigned b) { return n[a] > n[b]; });
  auto apply_perm = [&](const GridPoint& p) {
    GridPoint out(df);
    for (size_t a = 0; a < df; ++a) out[a] = p[perm[a]];
    return out;
  };
  std::vector<GridPoint> Pp, Qp;
  std::vector<int> np(df);
  for (size_t a = 0; a < df; ++a) np[a] = n[perm[a]];
  for (const GridPoint& p : P) Pp.push_back(apply_perm(p));
  for (const GridPoint& q : Q) Qp.push_back(apply_perm(q));

  WireFragment sorted = push_pull_sorted(Pp, Qp, np);
  for (auto& path : sorted.paths)
    for (GridPoint& pt : path) {
      GridPoint orig(df + 1);
      for (size_t a = 0; a < df; ++a) orig[perm[a]] = pt[a];
      orig[df] = pt[df];
      pt = std::move(orig);
    }
  return sorted;
}

// ---------------------------------------------------------------------------
// Full matching router
// ---------------------------------------------------------------------------

namespace {

struct Track {
  std::vector<GridPoint> points;
  GridPoint cur;   // frame-local cell; head floor = off + 3*cur between phases
  GridPoint dest;  // frame-local destination
  bool real = false;
  int height = 1;
};

struct Router {
  size_t df = 0;
  std::vector<Track> tracks;

  void lift(Track& t, int h) {
    if (h > t.height) {
      lift_path(t.points, h);
      t.height = h;
    }
  }

  // Extends the chosen tracks with fragment paths whose relative height 1
  // sits at absolute height h0; heads must land on distinct path starts.
  void apply(const WireFragment& frag, const std::vector<int>& idxs, int h0) {
    std::map<GridPoint, int> start_of;
    for (int i = 0; i < static_cast<int>(frag.paths.size()); ++i)
      start_of[frag.paths[i].front()] = i;
    for (int idx : idxs) {
      Track& t = tracks[idx];
      GridPoint rel = t.points.back();
      rel.back() = rel.back() - h0 + 1;
      auto it = start_of.find(rel);
      if (it == start_of.end()) throw std::logic_error("track head misses its fragment start");
      const auto& path = frag.paths[it->second];
      for (size_t s = 1; s < path.size(); ++s) {
        GridPoint p = path[s];
        p.back() += h0 - 1;
        t.points.push_back(std::move(p));
      }
      t.height = h0 + frag.top - 1;
    }
  }
};

GridPoint scale3(const GridPoint& cur, const GridPoint& off, int sub) {
  GridPoint p(cur.size());
  for (size_t a = 0; a < cur.size(); ++a) p[a] = off[a] + 3 * cur[a] - sub;
  return p;
}

// Routes the listed tracks from heads off + 3*cur at common height h to heads
// off + 18*dest at the returned common height, inside the frame
// [off+1, off+18*n] per floor axis.
int route(Router& router, const std::vector<int>& idxs, const std::vector<int>& n,
          const GridPoint& off, int h) {
  if (idxs.empty()) return h;
  size_t df = router.df;
  bool base = true;
  for (int s : n)
    if (s > 1) base = false;

  if (base) {
    std::vector<std::pair<GridPoint, GridPoint>> pairs;
    for (int idx : idxs) {
      Track& t = router.tracks[idx];
      GridPoint to(df);
      for (size_t a = 0; a < df; ++a) to[a] = off[a] + 18 * t.dest[a];
      pairs.emplace_back(scale3(t.cur, off, 0), to);
    }
    router.apply(local_movement(pairs, 18), idxs, h);
    return h + 2;
  }

  unsigned axis = 0;
  for (size_t a = 1; a < df; ++a)
    if (n[a] > n[axis]) axis = static_cast<unsigned>(a);
  int half = n[axis] / 2;

  std::vector<int> pushes, pulls, stays;
  for (int idx : idxs) {
    Track& t = router.tracks[idx];
    bool cur_hi = t.cur[axis] > half, dest_hi = t.dest[axis] > half;
    if (!cur_hi && dest_hi)
      pushes.push_back(idx);
    else if (cur_hi && !dest_hi)
      pulls.push_back(idx);
    else
      stays.push_back(idx);
  }

  // Spread the three classes into disjoint residue subgrids.
  {
    std::vector<std::pair<GridPoint, GridPoint>> pairs;
    auto add = [&](const std::vector<int>& group, int sub) {
      for (int idx : group)
        pairs.emplace_back(scale3(router.tracks[idx].cur, off, 0),
                           scale3(router.tracks[idx].cur, off, sub));
    };
    add(pushes, 2);
    add(pulls, 1);
    add(stays, 0);
    router.apply(local_movement(pairs, 3), idxs, h);
  }
  for (int idx : pushes) router.lift(router.tracks[idx], h + 3);
  for (int idx : pulls) router.lift(router.tracks[idx], h + 4);

  // Swap pushes and pulls: each side runs the lexicographic rearrangement in
  // its residue subgrid, every virtual step expanded to three unit steps.
  auto run_phase = [&](const std::vector<int>& side, const std::vector<int>& other, int sub,
                       int entry) {
    if (side.empty()) return entry;
    std::vector<GridPoint> vp, vq;
    for (int idx : side) vp.push_back(router.tracks[idx].cur);
    for (int idx : other) vq.push_back(router.tracks[idx].cur);
    WireFragment frag = push_pull(vp, vq, n);
    std::map<GridPoint, int> start_of;
    for (int i = 0; i < static_cast<int>(frag.paths.size()); ++i)
      start_of[floor_part(frag.paths[i].front())] = i;
    int top = entry + 3 * (frag.top - 1);
    for (int idx : side) {
      Track& t = router.tracks[idx];
      const auto& vpath = frag.paths.at(start_of.at(t.cur));
      for (size_t s = 1; s < vpath.size(); ++s) {
        const GridPoint& from = vpath[s - 1];
        const GridPoint& to = vpath[s];
        for (int rep = 1; rep <= 3; ++rep) {
          GridPoint p(df + 1);
          for (size_t a = 0; a < df; ++a)
            p[a] = off[a] + 3 * from[a] - sub + (to[a] - from[a]) * rep;
          p[df] = entry + 3 * (from.back() - 1) + (to.back() - from.back()) * rep;
          t.points.push_back(std::move(p));
        }
      }
      t.cur = floor_part(vpath.back());
      t.height = top;
    }
    return top;
  };

  int push_top = run_phase(pushes, pulls, 2, h + 3);
  int pull_top = run_phase(pulls, pushes, 1, h + 4);
  int h2 = std::max({h + 2, push_top, pull_top});
  for (int idx : idxs) router.lift(router.tracks[idx], h2);

  // Back onto the residue-0 grid.
  {
    std::vector<std::pair<GridPoint, GridPoint>> pairs;
    for (int idx : idxs) {
      Track& t = router.tracks[idx];
      pairs.emplace_back(floor_part(t.points.back()), scale3(t.cur, off, 0));
    }
    router.apply(local_movement(pairs, 3), idxs, h2);
  }
  int h3 = h2 + 2;

  // Shift the upper half into its own frame.
  std::vector<int> uppers, lowers;
  for (int idx : idxs) {
    if (router.tracks[idx].cur[axis] > half)
      uppers.push_back(idx);
    else
      lowers.push_back(idx);
  }
  int h4 = h3;
  if (!uppers.empty()) {
    std::vector<GridPoint> pts;
    for (int idx : uppers) pts.push_back(scale3(router.tracks[idx].cur, off, 0));
    WireFragment frag = global_movement(pts, axis, 15 * n[axis] / 2, 3 * n[axis]);
    router.apply(frag, uppers, h3);
    h4 = h3 + frag.top - 1;
  }
  for (int idx : idxs) router.lift(router.tracks[idx], h4);

  // Recurse on the halves in disjoint sub-frames over a shared height range.
  std::vector<int> sub_sizes = n;
  sub_sizes[axis] = half;
  GridPoint off_hi = off;
  off_hi[axis] += 9 * n[axis];
  for (int idx : uppers) {
    router.tracks[idx].cur[axis] -= half;
    router.tracks[idx].dest[axis] -= half;
  }
  int h_lo = route(router, lowers, sub_sizes, off, h4);
  int h_hi = route(router, uppers, sub_sizes, off_hi, h4);
  int h5 = std::max(h_lo, h_hi);
  for (int idx : idxs) router.lift(router.tracks[idx], h5);
  for (int idx : uppers) router.tracks[idx].dest[axis] += half;  // back to frame-global
  return h5;
}

int next_pow2(int v) {
  int p = 1;
  while (p < v) p *= 2;
  return p;
}

}  // namespace

Wiring wire_matching(const WiringInstance& inst) {
  inst.validate();
  size_t df = inst.d - 1;
  std::vector<int> np(df);
  for (size_t a = 0; a < df; ++a) np[a] = next_pow2(inst.n[a]);

  // Dummy pairs pad the matching until P = Q = Box(np).
  std::set<GridPoint> used_p, used_q;
  for (const auto& [p, q] : inst.matching) {
    used_p.insert(p);
    used_q.insert(q);
  }
  std::vector<GridPoint> free_p, free_q;
  {
    GridPoint cursor(df, 1);
    while (true) {
      if (!used_p.count(cursor)) free_p.push_back(cursor);
      if (!used_q.count(cursor)) free_q.push_back(cursor);
      size_t a = 0;
      while (a < df && cursor[a] == np[a]) cursor[a++] = 1;
      if (a == df) break;
      ++cursor[a];
    }
  }

  Router router;
  router.df = df;
  auto add_track = [&](const GridPoint& p, const GridPoint& q, bool real) {
    Track t;
    t.cur = p;
    t.dest = q;
    t.real = real;
    t.points = {emb(p, 1)};
    router.tracks.push_back(std::move(t));
  };
  for (const auto& [p, q] : inst.matching) add_track(p, q, true);
  for (size_t i = 0; i < free_p.size(); ++i) add_track(free_p[i], free_q[i], false);

  std::vector<int> all(router.tracks.size());
  std::iota(all.begin(), all.end(), 0);

  {
    std::vector<GridPoint> magnified;
    for (const Track& t : router.tracks) {
      GridPoint m(df);
      for (size_t a = 0; a < df; ++a) m[a] = 3 * t.cur[a];
      magnified.push_back(std::move(m));
    }
    router.apply(expand(magnified, 3, 1), all, 1);
  }
  GridPoint off(df, 0);
  int h_mid = route(router, all, np, off, router.tracks.empty() ? 1 : router.tracks[0].height);
  {
    std::vector<GridPoint> magnified;
    for (const Track& t : router.tracks) {
      GridPoint m(df);
      for (size_t a = 0; a < df; ++a) m[a] = 18 * t.dest[a];
      magnified.push_back(std::move(m));
    }
    router.apply(compress(magnified, 18, 1), all, h_mid);
  }

  Wiring out;
  out.d = inst.d;
  out.n = inst.n;
  for (size_t a = 0; a < df; ++a) out.box.push_back(36 * inst.n[a]);
  out.height = router.tracks.empty() ? 1 : router.tracks[0].height;
  long longest = 0;
  for (const Track& t : router.tracks)
    longest = std::max(longest, static_cast<long>(t.points.size()) - 1);
  out.wire_length_bound = longest;
  for (size_t i = 0; i < inst.matching.size(); ++i) {
    Wire w;
    w.from = inst.matching[i].first;
    w.to = inst.matching[i].second;
    w.points = std::move(router.tracks[i].points);
    out.wires.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> verify_wiring(const Wiring& w, const WiringInstance& inst) {
  std::vector<std::string> violations;
  if (w.wires.size() != inst.matching.size()) {
    violations.push_back("wire count does not match the matching");
    return violations;
  }
  std::set<GridPoint> seen;
  for (size_t i = 0; i < w.wires.size(); ++i) {
    const Wire& wire = w.wires[i];
    const auto& [p, q] = inst.matching[i];
    if (wire.points.empty()) {
      violations.push_back("wire " + std::to_string(i) + " is empty");
      continue;
    }
    if (wire.points.front() != emb(p, 1))
      violations.push_back("wire " + std::to_string(i) + " does not start at its origin");
    if (wire.points.back() != emb(q, w.height))
      violations.push_back("wire " + std::to_string(i) + " does not end at its destination");
    if (static_cast<long>(wire.points.size()) - 1 > w.wire_length_bound)
      violations.push_back("wire " + std::to_string(i) + " exceeds the length bound");
    bool box_ok = true, steps_ok = true;
    for (size_t s = 0; s < wire.points.size(); ++s) {
      const GridPoint& pt = wire.points[s];
      if (pt.size() != w.d) {
        violations.push_back("point with wrong dimension on wire " + std::to_string(i));
        break;
      }
      for (size_t a = 0; a + 1 < pt.size(); ++a)
        if (pt[a] < 1 || pt[a] > w.box[a]) box_ok = false;
      if (pt.back() < 1 || pt.back() > w.height) box_ok = false;
      if (!seen.insert(pt).second)
        violations.push_back("wires share the point on wire " + std::to_string(i));
      if (s > 0 && steps_ok) {
        long dist = 0;
        for (size_t a = 0; a < pt.size(); ++a)
          dist += std::abs(pt[a] - wire.points[s - 1][a]);
        if (dist != 1) steps_ok = false;
      }
    }
    if (!box_ok) violations.push_back("wire " + std::to_string(i) + " leaves the box");
    if (!steps_ok) violations.push_back("non-unit step on wire " + std::to_string(i));
  }
  return violations;
}

}  // namespace fatgraph
