#pragma once

#include <json.hpp>

#include "splitkit/circle.hpp"
#include "splitkit/diagram.hpp"
#include "splitkit/homology.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/search.hpp"
#include "splitkit/slope.hpp"
#include "splitkit/split.hpp"
#include "splitkit/tangle.hpp"

namespace splitkit {

using nlohmann::json;

inline void to_json(json& j, const Slope& s) { j = s.str(); }

inline void to_json(json& j, const ReplacementSolution& s) {
  j = json{{"a", s.a},
           {"b", s.b},
           {"sign_num", s.sign_num},
           {"sign_den", s.sign_den},
           {"central_twist", s.central_twist},
           {"expansion", s.expansion},
           {"slope", cf_eval(s.expansion).str()}};
}

inline void to_json(json& j, const Diagram& d) {
  j = json{{"pd", d.emit()},
           {"crossings", d.crossing_count()},
           {"components", d.component_count()},
           {"free_loops", d.free_loops()},
           {"alternating", d.is_alternating()}};
}

inline void to_json(json& j, const Move& m) {
  j = json{{"move", m.str()}};
}

inline void to_json(json& j, const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < m.rows; ++i) {
    rows.emplace_back();
    for (int k = 0; k < m.cols; ++k) rows.back().push_back(m.at(i, k));
  }
  j = json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline void to_json(json& j, const AbelianGroup& g) {
  j = json{{"torsion", g.torsion}, {"rank", g.rank}, {"pretty", g.str()}};
}

inline void to_json(json& j, const H2Rule& r) {
  j = json{{"holds", r.holds},
           {"case", r.case_tag},
           {"explanation", r.explanation}};
}

inline void to_json(json& j, const SplitVerdict& v) {
  j = json{{"kind", SplitVerdict::kind_str(v.kind)},
           {"partition", v.partition},
           {"witness", v.witness},
           {"diagrams_examined", v.diagrams_examined}};
  if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
}

inline void to_json(json& j, const SearchWitness& w) {
  j = json{{"path", w.path},
           {"crossing", w.crossing},
           {"diagram", w.diagram},
           {"verdict", w.verdict}};
}

inline void to_json(json& j, const SearchReport& r) {
  j = json{{"question", question_str(r.question)},
           {"answer", SearchReport::answer_str(r.answer)},
           {"candidates_examined", r.candidates_examined}};
  if (r.witness) j["witness"] = *r.witness;
  if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
}

inline void to_json(json& j, const CrossingCircleSpec& s) {
  j = json{{"framing", s.framing},
           {"surgery_sign", s.surgery_sign},
           {"slope", surgery_slope(s.framing, s.surgery_sign).str()}};
  if (s.crossing >= 0) j["crossing"] = s.crossing;
}

inline void to_json(json& j, const CircleClass& c) {
  j = json{{"representative", c.representative},
           {"profile", c.profile},
           {"size", c.size}};
}

inline void to_json(json& j, const CensusWitness& w) {
  j = json{{"path", w.path},
           {"diagram", w.diagram},
           {"crossing", w.crossing},
           {"component", w.component},
           {"verdict", w.verdict}};
}

inline void to_json(json& j, const CensusReport& r) {
  j = json{{"candidates", r.candidates},
           {"splitting_arcs", r.splitting_arcs},
           {"circle_classes", r.circle_classes},
           {"witnesses", r.witnesses},
           {"classes", r.classes},
           {"diagrams_scanned", r.diagrams_scanned}};
}

}  // namespace splitkit
