#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitkit/diagram.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/split.hpp"

namespace splitkit {

// The five "= 1" questions: unlinking number, splitting number,
// splitting via inter-component changes only, and the totally-split variants.
enum class Question { U, S, Sd, Ts, Tsd };

inline std::string question_str(Question q) {
  switch (q) {
    case Question::U: return "u";
    case Question::S: return "s";
    case Question::Sd: return "sd";
    case Question::Ts: return "ts";
    default: return "tsd";
  }
}

inline Question parse_question(const std::string& s) {
  if (s == "u") return Question::U;
  if (s == "s") return Question::S;
  if (s == "sd") return Question::Sd;
  if (s == "ts") return Question::Ts;
  if (s == "tsd") return Question::Tsd;
  throw std::invalid_argument("unknown question: " + s);
}

inline bool question_needs_link(Question q) { return q != Question::U; }
inline bool question_inter_only(Question q) {
  return q == Question::Sd || q == Question::Tsd;
}
// totally-split questions and u demand all linking numbers zero afterwards
inline bool question_needs_all_zero(Question q) {
  return q == Question::U || q == Question::Ts || q == Question::Tsd;
}

enum class ChangeMode { Any, DistinctComponents };

struct CrossingRef {
  int crossing = -1;
  bool self = false;
  int comp_under = -1, comp_over = -1;
};

inline std::vector<CrossingRef> enumerate_crossing_changes(const Diagram& d,
                                                           ChangeMode mode) {
  std::vector<CrossingRef> out;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const Crossing& c = d.xs[ci];
    CrossingRef r;
    r.crossing = ci;
    r.comp_under = d.arc_comp[c.arcs[c.under_in]];
    r.comp_over = d.arc_comp[c.arcs[c.over_in]];
    r.self = r.comp_under == r.comp_over;
    if (mode == ChangeMode::DistinctComponents && r.self) continue;
    out.push_back(r);
  }
  return out;
}

namespace detail {

// Does the matrix satisfy the question's end state: all-zero linking, or (for
// plain splitting) a disconnected nonzero-lk graph?
inline bool lk_goal_met(const std::vector<std::vector<std::int64_t>>& lk,
                        Question q) {
  if (question_needs_all_zero(q)) {
    for (const auto& row : lk)
      for (std::int64_t v : row)
        if (v != 0) return false;
    return true;
  }
  return !obstruct_split(lk).obstruction.has_value();
}

}  // namespace detail

// Necessary condition from linking numbers alone: one crossing change leaves
// every lk entry fixed (self change) or shifts a single pair by +-1 (change
// between two components).  Returns the obstruction text when no single
// change can reach the question's required linking state.
inline std::optional<std::string> lk_feasibility(
    const std::vector<std::vector<std::int64_t>>& lk, Question q) {
  int n = static_cast<int>(lk.size());
  if (n < 2) throw std::invalid_argument("lk_feasibility needs >= 2 components");
  if (!question_inter_only(q) && detail::lk_goal_met(lk, q)) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int delta : {1, -1}) {
        auto m = lk;
        m[i][j] += delta;
        m[j][i] += delta;
        if (detail::lk_goal_met(m, q)) return std::nullopt;
      }
  if (question_needs_all_zero(q))
    return "no single crossing change can cancel all linking numbers";
  return "no single crossing change can disconnect the linking graph";
}

struct SearchWitness {
  std::vector<Move> path;  // moves from the input diagram
  int crossing = -1;       // crossing changed in the resulting diagram
  Diagram diagram;         // the diagram the change is applied to
  SplitVerdict verdict;    // certification of the changed diagram
};

struct SearchReport {
  Question question = Question::U;
  enum class Answer { Yes, No, UnknownAtBudget };
  Answer answer = Answer::UnknownAtBudget;
  std::optional<SearchWitness> witness;
  std::string obstruction;
  long candidates_examined = 0;

  static std::string answer_str(Answer a) {
    switch (a) {
      case Answer::Yes: return "yes";
      case Answer::No: return "no";
      default: return "unknown-at-budget";
    }
  }
};

struct SearchBudgets {
  Budget neighborhood{6, 2, 500};  // diagrams the change is tried on
  Budget certify{8, 10, 20000};    // certification of each changed diagram
  int jobs = 1;
};

namespace detail {

inline bool verdict_matches(const SplitVerdict& v, Question q) {
  switch (q) {
    case Question::U: return v.kind == SplitVerdict::Kind::Unlink;
    case Question::S:
    case Question::Sd: return v.is_split();
    default:
      return v.kind == SplitVerdict::Kind::TotallySplit ||
             v.kind == SplitVerdict::Kind::Unlink;
  }
}

inline SplitVerdict certify_candidate(const Diagram& d, int crossing,
                                      Question q, const Budget& cb) {
  Diagram changed = d.with_changed_crossing(crossing);
  if (changed.component_count() >= 2 &&
      !lk_goal_met(changed.linking_matrix(), q)) {
    SplitVerdict v;
    v.kind = SplitVerdict::Kind::NotSplit;
    v.obstruction = "linking numbers rule the changed diagram out";
    return v;
  }
  Budget b = cb;
  b.max_crossings = std::min(b.max_crossings, changed.crossing_count() + 2);
  return certify_split(changed, b);
}

}  // namespace detail

// Desk-scale decision for "is <question>(L) = 1": try every crossing change
// on every diagram in a budgeted Reidemeister neighborhood and certify the
// result.  Never answers an uncertified No without a linking obstruction.
inline SearchReport question_is_one(const Diagram& d, Question q,
                                    const SearchBudgets& budgets = {}) {
  SearchReport rep;
  rep.question = q;
  if (question_needs_link(q) && d.component_count() < 2)
    throw std::invalid_argument("question " + question_str(q) +
                                " needs a link with >= 2 components");
  if (d.component_count() >= 2) {
    if (auto obs = lk_feasibility(d.linking_matrix(), q)) {
      rep.answer = SearchReport::Answer::No;
      rep.obstruction = *obs;
      return rep;
    }
  }
  // value 0 check: if the goal already holds, one change is not the answer
  Budget b0 = budgets.certify;
  b0.max_crossings = std::min(b0.max_crossings, d.crossing_count() + 2);
  SplitVerdict v0 = certify_split(d, b0);
  if (detail::verdict_matches(v0, q)) {
    rep.answer = SearchReport::Answer::No;
    rep.obstruction = "the diagram already certifies " +
                      SplitVerdict::kind_str(v0.kind) + " without any change";
    return rep;
  }

  ChangeMode mode = question_inter_only(q) ? ChangeMode::DistinctComponents
                                           : ChangeMode::Any;
  bool done = false;
  for_each_reachable(d, budgets.neighborhood, [&](const SearchNode& node) {
    auto cands = enumerate_crossing_changes(node.diagram, mode);
    int jobs = std::max(1, budgets.jobs);
    for (std::size_t base = 0; base < cands.size() && !done;
         base += static_cast<std::size_t>(jobs)) {
      std::size_t hi = std::min(cands.size(), base + jobs);
      std::vector<std::future<SplitVerdict>> batch;
      for (std::size_t k = base; k < hi; ++k)
        batch.push_back(std::async(
            jobs > 1 ? std::launch::async : std::launch::deferred,
            detail::certify_candidate, node.diagram, cands[k].crossing, q,
            budgets.certify));
      for (std::size_t k = base; k < hi; ++k) {
        SplitVerdict v = batch[k - base].get();
        if (done) continue;  // keep the count independent of batch width
        ++rep.candidates_examined;
        if (detail::verdict_matches(v, q)) {
          rep.answer = SearchReport::Answer::Yes;
          rep.witness = SearchWitness{node.path, cands[k].crossing,
                                      node.diagram, std::move(v)};
          done = true;
        }
      }
    }
    return !done;
  });
  return rep;
}

}  // namespace splitkit
