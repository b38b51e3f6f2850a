#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitkit/diagram.hpp"
#include "splitkit/fixtures.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/search.hpp"
#include "splitkit/slope.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

// A framed crossing circle C_n with a +-1 surgery coefficient; the crossing
// field anchors the circle at a diagram crossing when one is in play.
struct CrossingCircleSpec {
  int crossing = -1;
  std::int64_t framing = 0;
  int surgery_sign = 1;
};

// +-1 surgery on C_n realizes the tangle of slope n +- 1/2.
inline Slope surgery_slope(std::int64_t n, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("surgery sign must be +1 or -1");
  return Slope(2 * n + sign, 2);
}

// The two circles whose surgery realizes a crossing-change slope (2m+-1)/2.
inline std::pair<CrossingCircleSpec, CrossingCircleSpec>
circles_for_replacement(const Slope& target) {
  if (target.q != 2)
    throw std::invalid_argument(
        "target must be a half-integer crossing-change slope");
  return {CrossingCircleSpec{-1, (target.p - 1) / 2, 1},
          CrossingCircleSpec{-1, (target.p + 1) / 2, -1}};
}

// lk(C, L_i): each of the two strands through the crossing disc contributes
// +-1 to its component.  The two circles of a crossing sit in the two local
// channels; the +1-surgery circle separates slots {0,1} from {2,3}, the
// -1-surgery circle slots {1,2} from {3,0}.  Independent of the framing.
inline std::vector<std::int64_t> circle_linking_profile(
    const Diagram& d, const CrossingCircleSpec& spec) {
  if (spec.crossing < 0 || spec.crossing >= d.crossing_count())
    throw DiagramError("circle site out of range");
  const Crossing& c = d.xs[spec.crossing];
  bool chan_a = spec.surgery_sign > 0;
  auto dir = [&](int in_slot) {
    bool positive = chan_a ? (in_slot == 0 || in_slot == 1)
                           : (in_slot == 1 || in_slot == 2);
    return positive ? 1 : -1;
  };
  std::vector<std::int64_t> prof(d.component_count(), 0);
  prof[d.arc_comp[c.arcs[c.under_in]]] += dir(c.under_in);
  prof[d.arc_comp[c.arcs[c.over_in]]] += dir(c.over_in);
  return prof;
}

struct CircleClass {
  CrossingCircleSpec representative;
  std::vector<std::int64_t> profile;  // sign-normalized, indexed by component
  int size = 1;
};

namespace detail {

inline std::vector<std::int64_t> normalize_profile(
    std::vector<std::int64_t> p) {
  for (std::int64_t v : p) {
    if (v > 0) break;
    if (v < 0) {
      for (auto& x : p) x = -x;
      break;
    }
  }
  return p;
}

inline std::vector<CircleClass> dedupe_profiles(
    const std::vector<std::pair<CrossingCircleSpec, std::vector<std::int64_t>>>&
        circles) {
  std::vector<CircleClass> classes;
  for (const auto& [spec, raw] : circles) {
    auto prof = normalize_profile(raw);
    bool merged = false;
    for (CircleClass& cl : classes)
      if (cl.profile == prof) {
        ++cl.size;
        merged = true;
        break;
      }
    if (!merged) classes.push_back(CircleClass{spec, prof, 1});
  }
  return classes;
}

}  // namespace detail

// Group circles by linking profile.  Identical profiles only mean the
// invariants fail to distinguish the circles, so the class count is a lower
// bound for the true number of equivalence classes.
inline std::vector<CircleClass> dedupe_by_invariants(
    const std::vector<CrossingCircleSpec>& specs, const Diagram& d) {
  std::vector<std::pair<CrossingCircleSpec, std::vector<std::int64_t>>> circles;
  for (const CrossingCircleSpec& s : specs)
    circles.emplace_back(s, circle_linking_profile(d, s));
  return detail::dedupe_profiles(circles);
}

// The crossing-change slope realized at a diagram crossing: +1/2 for a
// positive crossing, -1/2 for a negative one.
inline Slope crossing_change_slope(const Diagram& d, int crossing) {
  return Slope(d.xs[crossing].sign(), 2);
}

struct CensusWitness {
  std::vector<Move> path;  // from the fixture to the diagram carrying the arc
  Diagram diagram;
  int crossing = -1;
  int component = -1;  // component carrying the splitting self-crossing
  SplitVerdict verdict;
};

struct CensusReport {
  int candidates = 0;
  int splitting_arcs = 0;
  int circle_classes = 0;
  std::vector<CensusWitness> witnesses;
  std::vector<CircleClass> classes;
  long diagrams_scanned = 0;
};

// Census of splitting crossing arcs and crossing circles for the Whitehead
// fixture.  A single crossing change can only split the link at a
// self-crossing (a change between the components would make lk = +-1), and
// splitting arcs are classed by the component carrying them.  Arcs are
// collected from minimal alternating presentations in the Reidemeister
// neighborhood: the fixture itself carries one splitting self-crossing, the
// flyped presentation carries the other.
inline CensusReport whitehead_census(
    const Budget& neighborhood = Budget{7, 4, 50000},
    const Budget& certify = Budget{7, 10, 20000}) {
  Diagram d = fixture("whitehead-l5a1");
  CensusReport rep;
  rep.candidates =
      static_cast<int>(enumerate_crossing_changes(d, ChangeMode::Any).size());
  std::map<int, CensusWitness> by_comp;
  int ncomp = d.component_count();
  for_each_reachable(d, neighborhood, [&](const SearchNode& n) {
    ++rep.diagrams_scanned;
    const Diagram& g = n.diagram;
    if (g.crossing_count() != d.crossing_count() || !g.is_alternating())
      return true;
    for (int ci = 0; ci < g.crossing_count(); ++ci) {
      if (!g.crossing_is_self(ci)) continue;
      int comp = g.arc_comp[g.xs[ci].arcs[0]];
      if (by_comp.count(comp)) continue;
      SplitVerdict v = certify_split(g.with_changed_crossing(ci), certify);
      if (v.is_split())
        by_comp.emplace(comp, CensusWitness{n.path, g, ci, comp, v});
    }
    return static_cast<int>(by_comp.size()) < ncomp;
  });
  rep.splitting_arcs = static_cast<int>(by_comp.size());
  std::vector<std::pair<CrossingCircleSpec, std::vector<std::int64_t>>> circles;
  for (auto& [comp, w] : by_comp) {
    auto [c1, c2] =
        circles_for_replacement(crossing_change_slope(w.diagram, w.crossing));
    c1.crossing = c2.crossing = w.crossing;
    circles.emplace_back(c1, circle_linking_profile(w.diagram, c1));
    circles.emplace_back(c2, circle_linking_profile(w.diagram, c2));
    rep.witnesses.push_back(std::move(w));
  }
  rep.classes = detail::dedupe_profiles(circles);
  rep.circle_classes = static_cast<int>(rep.classes.size());
  return rep;
}

}  // namespace splitkit
