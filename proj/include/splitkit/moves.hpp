#pragma once

#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "splitkit/diagram.hpp"

namespace splitkit {

// A complementary region of the diagram.  corners[k] is the state "arrived at
// this crossing slot"; the region's boundary continues along the arc at the
// next slot counterclockwise.
struct Face {
  std::vector<Endpoint> corners;
};

inline std::vector<Face> faces(const Diagram& d) {
  auto eps = d.arc_endpoints();
  std::vector<Face> out;
  std::vector<std::array<char, 4>> seen(d.crossing_count(), {0, 0, 0, 0});
  for (int ci = 0; ci < d.crossing_count(); ++ci)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[ci][s0]) continue;
      Face f;
      Endpoint cur{ci, s0};
      do {
        f.corners.push_back(cur);
        seen[cur.crossing][cur.slot] = 1;
        Endpoint leave{cur.crossing, (cur.slot + 1) % 4};
        int a = d.xs[leave.crossing].arcs[leave.slot];
        cur = Diagram::other_end(eps[a], leave);
      } while (!(cur == Endpoint{ci, s0}));
      out.push_back(std::move(f));
    }
  return out;
}

// Euler-characteristic check.  Each connected piece of a valid planar
// rotation system satisfies F = V + 2, and face orbits never cross pieces.
inline bool is_planar(const Diagram& d) {
  if (d.crossing_count() == 0) return true;
  int F = static_cast<int>(faces(d).size());
  return F == d.crossing_count() + 2 * d.piece_count();
}

struct Move {
  enum class Kind { R1Down, R2Down, R3, R1Up, R2Up };
  Kind kind{};
  int c1 = -1, c2 = -1;  // R1Down: c1; R2Down: the two crossings
  int arc = -1;          // R3: the sliding edge; R1Up: the kinked arc
  int c3 = -1;           // R3: the crossing the edge slides across
  int variant = 0;       // R1Up: 0..3; R2Up: 0 = first arc on top
  int face = -1, i = -1, j = -1;  // R2Up: face index and two boundary steps

  friend bool operator==(const Move&, const Move&) = default;

  bool is_reducing() const {
    return kind == Kind::R1Down || kind == Kind::R2Down;
  }

  std::string str() const {
    switch (kind) {
      case Kind::R1Down:
        return "R1-@" + std::to_string(c1);
      case Kind::R2Down:
        return "R2-@(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      case Kind::R3:
        return "R3@(a" + std::to_string(arc) + ",c" + std::to_string(c3) + ")";
      case Kind::R1Up:
        return "R1+@(a" + std::to_string(arc) + ",v" + std::to_string(variant) +
               ")";
      case Kind::R2Up:
        return "R2+@(f" + std::to_string(face) + "," + std::to_string(i) + "," +
               std::to_string(j) + ",v" + std::to_string(variant) + ")";
    }
    return "?";
  }
};

namespace detail {

// Remove the flagged crossings, splicing the strands that ran through them.
// Strand chains whose every crossing is removed become free loops.
inline Diagram splice_out(const Diagram& d, const std::vector<char>& removed) {
  Diagram nd;
  nd.free_loop_comp = d.free_loop_comp;
  std::vector<int> cmap(d.crossing_count(), -1);
  for (int ci = 0; ci < d.crossing_count(); ++ci)
    if (!removed[ci]) {
      cmap[ci] = static_cast<int>(nd.xs.size());
      nd.xs.push_back(d.xs[ci]);
    }
  auto eps = d.arc_endpoints();
  std::vector<char> used(d.narcs, 0);
  std::vector<std::array<char, 4>> epdone(d.crossing_count(), {0, 0, 0, 0});
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    if (removed[ci]) continue;
    for (int s = 0; s < 4; ++s) {
      if (epdone[ci][s]) continue;
      int a = d.xs[ci].arcs[s];
      int comp = d.arc_comp[a];
      Endpoint cur{ci, s};
      Endpoint far;
      while (true) {
        used[a] = 1;
        Endpoint o = Diagram::other_end(eps[a], cur);
        if (!removed[o.crossing]) {
          far = o;
          break;
        }
        Endpoint t = d.through(o);
        a = d.xs[t.crossing].arcs[t.slot];
        cur = t;
      }
      int nid = nd.narcs++;
      nd.arc_comp.push_back(comp);
      nd.xs[cmap[ci]].arcs[s] = nid;
      nd.xs[cmap[far.crossing]].arcs[far.slot] = nid;
      epdone[ci][s] = 1;
      epdone[far.crossing][far.slot] = 1;
    }
  }
  for (int a0 = 0; a0 < d.narcs; ++a0) {
    if (used[a0]) continue;
    int comp = d.arc_comp[a0];
    int a = a0;
    Endpoint tail = eps[a0][0];
    do {
      used[a] = 1;
      Endpoint o = Diagram::other_end(eps[a], tail);
      Endpoint t = d.through(o);
      a = d.xs[t.crossing].arcs[t.slot];
      tail = t;
    } while (a != a0);
    nd.free_loop_comp.push_back(comp);
  }
  return nd;
}

inline bool arc_level_consistent(const Diagram& d,
                                 const std::array<Endpoint, 2>& e) {
  bool u0 = d.xs[e[0].crossing].slot_is_under(e[0].slot);
  bool u1 = d.xs[e[1].crossing].slot_is_under(e[1].slot);
  return u0 == u1;
}

}  // namespace detail

inline std::vector<Move> enumerate_moves(const Diagram& d, int max_crossings) {
  std::vector<Move> out;
  if (d.crossing_count() == 0) return out;
  auto fs = faces(d);
  auto eps = d.arc_endpoints();

  std::set<int> r1_sites;
  std::set<std::pair<int, int>> r2_sites;
  std::set<std::pair<int, int>> r3_sites;
  for (const Face& f : fs) {
    if (f.corners.size() == 1) {
      r1_sites.insert(f.corners[0].crossing);
    } else if (f.corners.size() == 2) {
      int c1 = f.corners[0].crossing, c2 = f.corners[1].crossing;
      if (c1 == c2) continue;
      int a = d.xs[c1].arcs[(f.corners[0].slot + 1) % 4];
      int b = d.xs[c2].arcs[(f.corners[1].slot + 1) % 4];
      if (detail::arc_level_consistent(d, eps[a]) &&
          detail::arc_level_consistent(d, eps[b]))
        r2_sites.insert({std::min(c1, c2), std::max(c1, c2)});
    } else if (f.corners.size() == 3) {
      int ca = f.corners[0].crossing, cb = f.corners[1].crossing,
          cc = f.corners[2].crossing;
      if (ca == cb || cb == cc || ca == cc) continue;
      for (int k = 0; k < 3; ++k) {
        int e = d.xs[f.corners[k].crossing].arcs[(f.corners[k].slot + 1) % 4];
        if (detail::arc_level_consistent(d, eps[e]))
          r3_sites.insert({e, f.corners[(k + 2) % 3].crossing});
      }
    }
  }
  for (int c : r1_sites)
    out.push_back(Move{.kind = Move::Kind::R1Down, .c1 = c});
  for (auto [a, b] : r2_sites)
    out.push_back(Move{.kind = Move::Kind::R2Down, .c1 = a, .c2 = b});
  for (auto [a, c] : r3_sites)
    out.push_back(Move{.kind = Move::Kind::R3, .arc = a, .c3 = c});

  if (d.crossing_count() + 1 <= max_crossings)
    for (int a = 0; a < d.narcs; ++a)
      for (int v = 0; v < 4; ++v)
        out.push_back(Move{.kind = Move::Kind::R1Up, .arc = a, .variant = v});
  if (d.crossing_count() + 2 <= max_crossings)
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
      int n = static_cast<int>(fs[fi].corners.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Face& f = fs[fi];
          int a = d.xs[f.corners[i].crossing].arcs[(f.corners[i].slot + 1) % 4];
          int b = d.xs[f.corners[j].crossing].arcs[(f.corners[j].slot + 1) % 4];
          if (a == b) continue;
          for (int v = 0; v < 2; ++v)
            out.push_back(Move{.kind = Move::Kind::R2Up,
                               .variant = v,
                               .face = fi,
                               .i = i,
                               .j = j});
        }
    }
  return out;
}

inline Diagram apply_move(const Diagram& d, const Move& m) {
  switch (m.kind) {
    case Move::Kind::R1Down: {
      if (m.c1 < 0 || m.c1 >= d.crossing_count())
        throw DiagramError("R1-: crossing out of range");
      auto eps = d.arc_endpoints();
      bool found = false;
      for (int s = 0; s < 4 && !found; ++s) {
        int a = d.xs[m.c1].arcs[s];
        found = eps[a][0].crossing == m.c1 && eps[a][1].crossing == m.c1 &&
                ((eps[a][0].slot + 1) % 4 == eps[a][1].slot ||
                 (eps[a][1].slot + 1) % 4 == eps[a][0].slot);
      }
      if (!found) throw DiagramError("R1-: no monogon at crossing");
      std::vector<char> removed(d.crossing_count(), 0);
      removed[m.c1] = 1;
      return detail::splice_out(d, removed);
    }

    case Move::Kind::R2Down: {
      if (m.c1 < 0 || m.c2 < 0 || m.c1 >= d.crossing_count() ||
          m.c2 >= d.crossing_count() || m.c1 == m.c2)
        throw DiagramError("R2-: bad crossing pair");
      auto eps = d.arc_endpoints();
      bool ok = false;
      for (const Face& f : faces(d)) {
        if (f.corners.size() != 2) continue;
        int ca = f.corners[0].crossing, cb = f.corners[1].crossing;
        if (std::min(ca, cb) != std::min(m.c1, m.c2) ||
            std::max(ca, cb) != std::max(m.c1, m.c2))
          continue;
        int a = d.xs[ca].arcs[(f.corners[0].slot + 1) % 4];
        int b = d.xs[cb].arcs[(f.corners[1].slot + 1) % 4];
        if (detail::arc_level_consistent(d, eps[a]) &&
            detail::arc_level_consistent(d, eps[b]))
          ok = true;
      }
      if (!ok) throw DiagramError("R2-: no removable bigon between crossings");
      std::vector<char> removed(d.crossing_count(), 0);
      removed[m.c1] = 1;
      removed[m.c2] = 1;
      return detail::splice_out(d, removed);
    }

    case Move::Kind::R3: {
      auto eps = d.arc_endpoints();
      for (const Face& f : faces(d)) {
        if (f.corners.size() != 3) continue;
        int ca = f.corners[0].crossing, cb = f.corners[1].crossing,
            cc = f.corners[2].crossing;
        if (ca == cb || cb == cc || ca == cc) continue;
        for (int k = 0; k < 3; ++k) {
          const Endpoint& pk = f.corners[k];
          const Endpoint& pk1 = f.corners[(k + 1) % 3];
          const Endpoint& pk2 = f.corners[(k + 2) % 3];
          int edge = d.xs[pk.crossing].arcs[(pk.slot + 1) % 4];
          if (edge != m.arc || pk2.crossing != m.c3) continue;
          if (!detail::arc_level_consistent(d, eps[edge]))
            throw DiagramError("R3: sliding edge not level");
          // edge k+2 joins c3 to c1, edge k+1 joins c2 to c3.  The edge
          // strand slides across c3; both crossed strands and the edge
          // strand's outer arcs shift one arc along.
          int c1 = pk.crossing, c2 = pk1.crossing, c3 = pk2.crossing;
          int x1 = pk.slot, px1 = (x1 + 2) % 4;
          int y1 = (pk2.slot + 1) % 4, py1 = (y1 + 2) % 4;
          int x2 = (pk1.slot + 1) % 4, px2 = (x2 + 2) % 4;
          int y2 = pk2.slot, py2 = (y2 + 2) % 4;
          int a12 = edge;
          int a31 = d.xs[c3].arcs[y1];
          int a23 = d.xs[c3].arcs[y2];
          int u1 = d.xs[c1].arcs[px1], w1 = d.xs[c3].arcs[py1];
          int u2 = d.xs[c2].arcs[px2], w2 = d.xs[c3].arcs[py2];
          int t1 = d.xs[c1].arcs[(x1 + 3) % 4];  // edge strand beyond c1
          int t2 = d.xs[c2].arcs[(pk1.slot + 2) % 4];  // beyond c2
          Diagram nd = d;
          nd.xs[c1].arcs[x1] = w1;
          nd.xs[c1].arcs[px1] = a31;
          nd.xs[c1].arcs[(x1 + 1) % 4] = t2;
          nd.xs[c1].arcs[(x1 + 3) % 4] = a12;
          nd.xs[c2].arcs[x2] = w2;
          nd.xs[c2].arcs[px2] = a23;
          nd.xs[c2].arcs[pk1.slot] = t1;
          nd.xs[c2].arcs[(pk1.slot + 2) % 4] = a12;
          nd.xs[c3].arcs[y1] = u1;
          nd.xs[c3].arcs[py1] = a31;
          nd.xs[c3].arcs[y2] = u2;
          nd.xs[c3].arcs[py2] = a23;
          return nd;
        }
      }
      throw DiagramError("R3: no matching triangle");
    }

    case Move::Kind::R1Up: {
      if (m.arc < 0 || m.arc >= d.narcs)
        throw DiagramError("R1+: arc out of range");
      auto eps = d.arc_endpoints();
      Endpoint e0 = eps[m.arc][0], e1 = eps[m.arc][1];
      Endpoint origin = d.endpoint_is_out(e0) ? e0 : e1;
      Endpoint dest = d.endpoint_is_out(e0) ? e1 : e0;
      (void)origin;
      Diagram nd = d;
      int loop = nd.narcs++;
      int a2 = nd.narcs++;
      int comp = d.arc_comp[m.arc];
      nd.arc_comp.push_back(comp);
      nd.arc_comp.push_back(comp);
      nd.xs[dest.crossing].arcs[dest.slot] = a2;
      Crossing c;
      switch (m.variant) {
        case 0:
          c.arcs = {m.arc, a2, loop, loop};
          c.under_in = 0;
          c.over_in = 3;
          break;
        case 1:
          c.arcs = {m.arc, loop, loop, a2};
          c.under_in = 0;
          c.over_in = 1;
          break;
        case 2:
          c.arcs = {loop, m.arc, a2, loop};
          c.under_in = 0;
          c.over_in = 1;
          break;
        case 3:
          c.arcs = {a2, m.arc, loop, loop};
          c.under_in = 2;
          c.over_in = 1;
          break;
        default:
          throw DiagramError("R1+: bad variant");
      }
      nd.xs.push_back(c);
      return nd;
    }

    case Move::Kind::R2Up: {
      auto fs = faces(d);
      if (m.face < 0 || m.face >= static_cast<int>(fs.size()))
        throw DiagramError("R2+: face out of range");
      const Face& f = fs[m.face];
      int n = static_cast<int>(f.corners.size());
      if (m.i < 0 || m.j < 0 || m.i >= n || m.j >= n || m.i == m.j)
        throw DiagramError("R2+: bad boundary steps");
      Endpoint Li{f.corners[m.i].crossing, (f.corners[m.i].slot + 1) % 4};
      Endpoint Ri = f.corners[(m.i + 1) % n];
      Endpoint Lj{f.corners[m.j].crossing, (f.corners[m.j].slot + 1) % 4};
      Endpoint Rj = f.corners[(m.j + 1) % n];
      int a = d.xs[Li.crossing].arcs[Li.slot];
      int b = d.xs[Lj.crossing].arcs[Lj.slot];
      if (a == b) throw DiagramError("R2+: steps lie on the same arc");
      bool a_fwd = d.endpoint_is_out(Li);
      bool b_fwd = d.endpoint_is_out(Lj);
      bool a_over = m.variant == 0;

      Diagram nd = d;
      int a_mid = nd.narcs++, a_tail = nd.narcs++;
      int b_mid = nd.narcs++, b_tail = nd.narcs++;
      nd.arc_comp.push_back(d.arc_comp[a]);
      nd.arc_comp.push_back(d.arc_comp[a]);
      nd.arc_comp.push_back(d.arc_comp[b]);
      nd.arc_comp.push_back(d.arc_comp[b]);
      nd.xs[Ri.crossing].arcs[Ri.slot] = a_tail;
      nd.xs[Rj.crossing].arcs[Rj.slot] = b_tail;
      // The chirality of the new crossing pair depends on which way the face
      // orbit winds at this site; build the orientation that closes up to a
      // sphere.  Exactly one of the two mirror layouts does.
      for (int mirror = 0; mirror < 2; ++mirror) {
        Crossing cL, cR;
        if (!mirror) {
          cL.arcs = {b_mid, a_mid, b_tail, a};
          cR.arcs = {b, a_mid, b_mid, a_tail};
          // at cL: a arrives slot 3, leaves 1; b arrives 0, leaves 2
          // at cR: a arrives slot 1, leaves 3; b arrives 0, leaves 2
          if (a_over) {
            cL.under_in = b_fwd ? 0 : 2;
            cL.over_in = a_fwd ? 3 : 1;
            cR.under_in = b_fwd ? 0 : 2;
            cR.over_in = a_fwd ? 1 : 3;
          } else {
            cL.under_in = a_fwd ? 3 : 1;
            cL.over_in = b_fwd ? 0 : 2;
            cR.under_in = a_fwd ? 1 : 3;
            cR.over_in = b_fwd ? 0 : 2;
          }
        } else {
          cL.arcs = {b_mid, a, b_tail, a_mid};
          cR.arcs = {b, a_tail, b_mid, a_mid};
          // at cL: a arrives slot 1, leaves 3; b arrives 0, leaves 2
          // at cR: a arrives slot 3, leaves 1; b arrives 0, leaves 2
          if (a_over) {
            cL.under_in = b_fwd ? 0 : 2;
            cL.over_in = a_fwd ? 1 : 3;
            cR.under_in = b_fwd ? 0 : 2;
            cR.over_in = a_fwd ? 3 : 1;
          } else {
            cL.under_in = a_fwd ? 1 : 3;
            cL.over_in = b_fwd ? 0 : 2;
            cR.under_in = a_fwd ? 3 : 1;
            cR.over_in = b_fwd ? 0 : 2;
          }
        }
        Diagram cand = nd;
        cand.xs.push_back(cL);
        cand.xs.push_back(cR);
        if (is_planar(cand)) return cand;
      }
      throw DiagramError("R2+: no planar layout at site");
    }
  }
  throw DiagramError("unknown move kind");
}

// ---- canonical form ------------------------------------------------------

// Lexicographically minimal encoding over all traversal-order arc labelings.
// Arcs are relabeled by walking each strand along its orientation; every arc
// is tried as the starting point, and the continuation rule after closing a
// component depends only on labels assigned so far, so the result is a true
// relabeling invariant.
inline std::string canonical_code(const Diagram& d) {
  std::string suffix = "|O" + std::to_string(d.free_loops());
  if (d.crossing_count() == 0) return suffix;
  auto eps = d.arc_endpoints();
  std::string best;
  std::vector<int> lbl(d.narcs);
  for (int start = 0; start < d.narcs; ++start) {
    std::fill(lbl.begin(), lbl.end(), -1);
    int next = 0;
    auto walk = [&](int a0) {
      int a = a0;
      Endpoint out = d.endpoint_is_out(eps[a][0]) ? eps[a][0] : eps[a][1];
      while (lbl[a] == -1) {
        lbl[a] = next++;
        Endpoint in = Diagram::other_end(eps[a], out);
        Endpoint t = d.through(in);
        a = d.xs[t.crossing].arcs[t.slot];
        out = t;
      }
    };
    walk(start);
    while (next < d.narcs) {
      // choose the unlabeled arc with the smallest label-derived key
      int pick = -1;
      std::array<int, 5> pickkey{};
      for (int a = 0; a < d.narcs; ++a) {
        if (lbl[a] != -1) continue;
        for (Endpoint e : eps[a]) {
          const Crossing& c = d.xs[e.crossing];
          std::array<int, 5> key{};
          for (int k = 0; k < 4; ++k) {
            int v = lbl[c.arcs[(c.under_in + k) % 4]];
            key[k] = v == -1 ? d.narcs : v;
          }
          key[4] = (e.slot - c.under_in + 4) % 4;
          if (pick == -1 || key < pickkey) {
            pick = a;
            pickkey = key;
          }
        }
      }
      walk(pick);
    }
    std::string code;
    std::vector<std::array<int, 5>> tuples;
    for (const Crossing& c : d.xs) {
      std::array<int, 5> t{};
      for (int k = 0; k < 4; ++k) t[k] = lbl[c.arcs[(c.under_in + k) % 4]];
      t[4] = (c.over_in - c.under_in + 4) % 4;
      tuples.push_back(t);
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      for (int v : t) {
        code += std::to_string(v);
        code += ',';
      }
      code += ';';
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best + suffix;
}

// ---- neighborhood search -------------------------------------------------

struct Budget {
  int max_crossings = 8;
  int max_moves = 6;        // maximum move-sequence length
  long max_diagrams = 50000;  // safety valve on distinct diagrams visited
};

struct SearchNode {
  Diagram diagram;
  std::vector<Move> path;
};

// Breadth-first stream over the Reidemeister neighborhood, deduplicated by
// canonical code; the input diagram is always delivered first.  The visitor
// returns false to stop early.
inline void for_each_reachable(
    const Diagram& d, const Budget& b,
    const std::function<bool(const SearchNode&)>& visit) {
  std::set<std::string> seen;
  seen.insert(canonical_code(d));
  std::queue<SearchNode> q;
  q.push(SearchNode{d, {}});
  long emitted = 1;
  if (!visit(q.front())) return;
  while (!q.empty()) {
    SearchNode node = std::move(q.front());
    q.pop();
    if (static_cast<int>(node.path.size()) >= b.max_moves) continue;
    for (const Move& m : enumerate_moves(node.diagram, b.max_crossings)) {
      Diagram nd = apply_move(node.diagram, m);
      std::string code = canonical_code(nd);
      if (!seen.insert(code).second) continue;
      if (++emitted > b.max_diagrams) return;
      SearchNode child{std::move(nd), node.path};
      child.path.push_back(m);
      if (!visit(child)) return;
      q.push(std::move(child));
    }
  }
}

// Apply reducing moves greedily until none remain.  Deterministic: always the
// first reducing move in enumeration order.
inline Diagram reduce_greedy(const Diagram& d, std::vector<Move>* trail = nullptr) {
  Diagram cur = d;
  while (true) {
    bool reduced = false;
    for (const Move& m : enumerate_moves(cur, cur.crossing_count())) {
      if (!m.is_reducing()) continue;
      cur = apply_move(cur, m);
      if (trail) trail->push_back(m);
      reduced = true;
      break;
    }
    if (!reduced) return cur;
  }
}

// Minimal-crossing diagram in the budgeted neighborhood; never returns a
// diagram with more crossings than the input.
inline Diagram simplify(const Diagram& d, const Budget& b,
                        std::vector<Move>* witness = nullptr) {
  Diagram best = d;
  std::vector<Move> best_path;
  for_each_reachable(d, b, [&](const SearchNode& node) {
    if (node.diagram.crossing_count() < best.crossing_count()) {
      best = node.diagram;
      best_path = node.path;
    }
    return best.crossing_count() > 0;
  });
  if (witness) *witness = best_path;
  return best;
}

}  // namespace splitkit
