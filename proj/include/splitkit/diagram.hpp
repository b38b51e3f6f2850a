#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitkit {

struct Endpoint {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// One crossing of a planar diagram.  arcs[] lists the four incident arc ids
// counterclockwise; slots of equal parity form the two strand passages.
// under_in / over_in are the slots where the under and over strand enter
// (they always have opposite parity).  In emitted PD text the tuple is
// rotated so that slot 0 is the incoming under-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  int under_in = 0;
  int over_in = 3;

  int under_out() const { return (under_in + 2) % 4; }
  int over_out() const { return (over_in + 2) % 4; }

  // +1 when rotating the over direction counterclockwise by a quarter turn
  // gives the under direction.
  int sign() const { return (over_in + 1) % 4 == under_in ? 1 : -1; }

  bool slot_is_under(int s) const { return (s % 2) == (under_in % 2); }

  // slot where the strand through s enters the crossing
  int in_slot_of(int s) const { return slot_is_under(s) ? under_in : over_in; }
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Diagram {
 public:
  std::vector<Crossing> xs;
  int narcs = 0;
  std::vector<int> arc_comp;       // component id per arc
  std::vector<int> free_loop_comp; // component ids of crossing-free loops

  Diagram() = default;

  int crossing_count() const { return static_cast<int>(xs.size()); }
  int free_loops() const { return static_cast<int>(free_loop_comp.size()); }
  bool empty() const { return xs.empty() && free_loop_comp.empty(); }

  int component_count() const {
    int m = -1;
    for (int c : arc_comp) m = std::max(m, c);
    for (int c : free_loop_comp) m = std::max(m, c);
    return m + 1;
  }

  // Both endpoints of every arc, in scan order.
  std::vector<std::array<Endpoint, 2>> arc_endpoints() const {
    std::vector<std::array<Endpoint, 2>> eps(narcs, {Endpoint{}, Endpoint{}});
    std::vector<int> seen(narcs, 0);
    for (int ci = 0; ci < crossing_count(); ++ci)
      for (int s = 0; s < 4; ++s) {
        int a = xs[ci].arcs[s];
        if (a < 0 || a >= narcs)
          throw DiagramError("arc id out of range at crossing " +
                             std::to_string(ci));
        if (seen[a] >= 2)
          throw DiagramError("arc " + std::to_string(a + 1) +
                             " appears more than twice");
        eps[a][seen[a]++] = Endpoint{ci, s};
      }
    for (int a = 0; a < narcs; ++a)
      if (seen[a] != 2)
        throw DiagramError("arc " + std::to_string(a + 1) +
                           " appears " + std::to_string(seen[a]) +
                           " times (expected 2)");
    return eps;
  }

  static Endpoint other_end(const std::array<Endpoint, 2>& e, Endpoint from) {
    return e[0] == from ? e[1] : e[0];
  }

  // The arc leaving endpoint (ci,s) continues through the passage to the arc
  // at the opposite slot.
  Endpoint through(Endpoint e) const {
    return Endpoint{e.crossing, (e.slot + 2) % 4};
  }

  bool endpoint_is_out(Endpoint e) const {
    const Crossing& c = xs[e.crossing];
    return e.slot == (c.in_slot_of(e.slot) + 2) % 4;
  }

  // ---- construction ------------------------------------------------------

  // Assign component ids and over_in flags by strand tracing.  Requires
  // under_in flags already set (slot-0 convention at parse time).
  void trace_orientations() {
    auto eps = arc_endpoints();
    arc_comp.assign(narcs, -1);
    for (auto& c : xs) c.over_in = -1;
    int comp = 0;
    for (int a0 = 0; a0 < narcs; ++a0) {
      if (arc_comp[a0] != -1) continue;
      // prefer to start the walk just after an under passage so the
      // direction is pinned; otherwise the component only ever passes over
      // and either direction is fine.
      Endpoint start{-1, -1};
      {
        std::vector<int> stack{a0};
        std::vector<char> mark(narcs, 0);
        mark[a0] = 1;
        while (!stack.empty() && start.crossing < 0) {
          int a = stack.back();
          stack.pop_back();
          for (Endpoint e : eps[a]) {
            const Crossing& c = xs[e.crossing];
            if (c.slot_is_under(e.slot) && e.slot == c.under_out())
              start = e;
            Endpoint t = through(e);
            int b = xs[t.crossing].arcs[t.slot];
            if (!mark[b]) {
              mark[b] = 1;
              stack.push_back(b);
            }
          }
        }
      }
      int a = a0;
      Endpoint out;
      if (start.crossing >= 0) {
        a = xs[start.crossing].arcs[start.slot];
        out = start;
      } else {
        out = eps[a0][0];
      }
      int first = a;
      do {
        if (arc_comp[a] != -1) {
          if (arc_comp[a] != comp)
            throw DiagramError("component tracing inconsistency");
          break;
        }
        arc_comp[a] = comp;
        Endpoint in = other_end(eps[a], out);
        Crossing& c = xs[in.crossing];
        if (c.slot_is_under(in.slot)) {
          if (in.slot != c.under_in)
            throw DiagramError(
                "orientation conflict: strand enters an outgoing under slot "
                "at crossing " + std::to_string(in.crossing + 1));
        } else {
          if (c.over_in != -1 && c.over_in != in.slot)
            throw DiagramError("orientation conflict at crossing " +
                               std::to_string(in.crossing + 1));
          c.over_in = in.slot;
        }
        out = through(in);
        a = xs[out.crossing].arcs[out.slot];
      } while (a != first);
      ++comp;
    }
    for (auto& c : xs)
      if (c.over_in == -1) c.over_in = (c.under_in % 2 == 0) ? 3 : 0;
    for (int i = 0; i < static_cast<int>(free_loop_comp.size()); ++i)
      free_loop_comp[i] = comp + i;
  }

  void validate() const {
    auto eps = arc_endpoints();
    (void)eps;
    for (const auto& c : xs) {
      if (c.under_in < 0 || c.under_in > 3 || c.over_in < 0 || c.over_in > 3 ||
          (c.under_in % 2) == (c.over_in % 2))
        throw DiagramError("invalid orientation flags");
    }
    if (static_cast<int>(arc_comp.size()) != narcs)
      throw DiagramError("missing component data");
  }

  // ---- invariants --------------------------------------------------------

  int component_of_slot(int ci, int s) const {
    return arc_comp[xs[ci].arcs[s]];
  }

  bool crossing_is_self(int ci) const {
    return component_of_slot(ci, xs[ci].under_in) ==
           component_of_slot(ci, xs[ci].over_in);
  }

  // Symmetric matrix of pairwise linking numbers, zero diagonal.
  std::vector<std::vector<std::int64_t>> linking_matrix() const {
    int n = component_count();
    std::vector<std::vector<std::int64_t>> lk(
        n, std::vector<std::int64_t>(n, 0));
    for (int ci = 0; ci < crossing_count(); ++ci) {
      int cu = component_of_slot(ci, xs[ci].under_in);
      int co = component_of_slot(ci, xs[ci].over_in);
      if (cu != co) {
        lk[cu][co] += xs[ci].sign();
        lk[co][cu] += xs[ci].sign();
      }
    }
    for (auto& row : lk)
      for (auto& v : row) v /= 2;
    return lk;
  }

  // Every arc passes over at one end and under at the other.
  bool is_alternating() const {
    if (xs.empty()) return false;
    auto eps = arc_endpoints();
    for (int a = 0; a < narcs; ++a) {
      bool u0 = xs[eps[a][0].crossing].slot_is_under(eps[a][0].slot);
      bool u1 = xs[eps[a][1].crossing].slot_is_under(eps[a][1].slot);
      if (u0 == u1) return false;
    }
    return true;
  }

  // ---- elementary operations --------------------------------------------

  Diagram with_changed_crossing(int ci) const {
    if (ci < 0 || ci >= crossing_count())
      throw DiagramError("crossing index out of range");
    Diagram d = *this;
    std::swap(d.xs[ci].under_in, d.xs[ci].over_in);
    return d;
  }

  Diagram with_reversed_component(int comp) const {
    Diagram d = *this;
    for (int ci = 0; ci < crossing_count(); ++ci) {
      Crossing& c = d.xs[ci];
      if (arc_comp[c.arcs[c.under_in]] == comp) c.under_in = c.under_out();
      if (arc_comp[c.arcs[c.over_in]] == comp) c.over_in = c.over_out();
    }
    return d;
  }

  // Connected pieces of the crossing-incidence graph (arcs shared between
  // crossings).  Returns one piece id per crossing.
  std::vector<int> crossing_pieces() const {
    int n = crossing_count();
    std::vector<int> piece(n, -1);
    auto eps = arc_endpoints();
    int np = 0;
    for (int start = 0; start < n; ++start) {
      if (piece[start] != -1) continue;
      std::vector<int> stack{start};
      piece[start] = np;
      while (!stack.empty()) {
        int ci = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          int a = xs[ci].arcs[s];
          for (Endpoint e : eps[a])
            if (piece[e.crossing] == -1) {
              piece[e.crossing] = np;
              stack.push_back(e.crossing);
            }
        }
      }
      ++np;
    }
    return piece;
  }

  int piece_count() const {
    auto p = crossing_pieces();
    int m = 0;
    for (int v : p) m = std::max(m, v + 1);
    return m;
  }

  // A diagram is disconnected when the crossing graph has several pieces or
  // free loops sit beside other material.
  bool is_disconnected() const {
    int parts = piece_count() + free_loops();
    return parts >= 2;
  }

  // Extract one crossing-graph piece as a standalone diagram (components and
  // arcs renumbered, component ids preserved via old_comp_of).
  Diagram extract_piece(const std::vector<int>& piece, int which,
                        std::vector<int>* old_comp_of = nullptr) const {
    Diagram d;
    std::vector<int> cmap(crossing_count(), -1), amap(narcs, -1);
    std::map<int, int> compmap;
    for (int ci = 0; ci < crossing_count(); ++ci) {
      if (piece[ci] != which) continue;
      cmap[ci] = static_cast<int>(d.xs.size());
      d.xs.push_back(xs[ci]);
    }
    for (auto& c : d.xs)
      for (int s = 0; s < 4; ++s) {
        int a = c.arcs[s];
        if (amap[a] == -1) {
          amap[a] = d.narcs++;
          int oc = arc_comp[a];
          if (!compmap.count(oc)) {
            int nc = static_cast<int>(compmap.size());
            compmap[oc] = nc;
            if (old_comp_of) old_comp_of->push_back(oc);
          }
          d.arc_comp.push_back(compmap[oc]);
        }
        c.arcs[s] = amap[a];
      }
    return d;
  }

  // ---- text form ---------------------------------------------------------

  static Diagram parse(std::string_view text) {
    Diagram d;
    std::map<std::int64_t, int> label_to_arc;
    std::size_t i = 0;
    auto err = [&](const std::string& msg) {
      throw DiagramError(msg + " (at offset " + std::to_string(i) + ")");
    };
    auto skip_ws = [&] {
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    };
    auto read_int = [&]() -> std::int64_t {
      skip_ws();
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      std::size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
        ++k;
      if (k == j) err("expected integer");
      std::int64_t v = std::stoll(std::string(text.substr(i, k - i)));
      i = k;
      return v;
    };
    int nfree = 0;
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] == 'X') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '[') err("expected '[' after X");
        ++i;
        Crossing c;
        for (int s = 0; s < 4; ++s) {
          std::int64_t lbl = read_int();
          auto it = label_to_arc.find(lbl);
          if (it == label_to_arc.end())
            it = label_to_arc.emplace(lbl, d.narcs++).first;
          c.arcs[s] = it->second;
          skip_ws();
          if (s < 3) {
            if (i >= text.size() || text[i] != ',') err("expected ',' in tuple");
            ++i;
          }
        }
        skip_ws();
        if (i >= text.size() || text[i] != ']') err("malformed tuple arity");
        ++i;
        c.under_in = 0;
        d.xs.push_back(c);
      } else if (text[i] == 'O') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '*') err("expected '*' after O");
        ++i;
        std::int64_t n = read_int();
        if (n < 0) err("negative free-loop count");
        nfree += static_cast<int>(n);
      } else {
        err(std::string("unexpected character '") + text[i] + "'");
      }
    }
    d.free_loop_comp.assign(nfree, 0);
    d.trace_orientations();  // validates arity/danglers via arc_endpoints
    return d;
  }

  std::string emit() const {
    std::string out;
    for (const auto& c : xs) {
      out += "X[";
      for (int s = 0; s < 4; ++s) {
        if (s) out += ",";
        out += std::to_string(c.arcs[(c.under_in + s) % 4] + 1);
      }
      out += "] ";
    }
    if (free_loops() > 0) out += "O*" + std::to_string(free_loops()) + " ";
    if (!out.empty()) out.pop_back();
    return out;
  }
};

// Tetrahedron count of the triangulation built from a c-crossing diagram.
inline std::int64_t triangulation_bound(std::int64_t c) {
  if (c < 0) throw std::invalid_argument("crossing count must be >= 0");
  return 24 * c;
}

// The finiteness bound, rendered symbolically; the universal constant is
// never evaluated.
inline std::string bound_report(std::int64_t c, std::string_view k_symbol = "k") {
  return std::string(k_symbol) + "^" + std::to_string(triangulation_bound(c));
}

}  // namespace splitkit
