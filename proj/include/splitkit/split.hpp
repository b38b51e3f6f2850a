#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splitkit/diagram.hpp"
#include "splitkit/moves.hpp"

namespace splitkit {

struct SplitObstruction {
  std::string text;
  std::vector<std::pair<int, int>> edges;  // component pairs with lk != 0
};

// Connected components of the graph on link components with edges where
// lk != 0.  A connected graph obstructs splitness; otherwise the groups are
// the candidate partition for the search layer.
struct LinkingPartition {
  std::optional<SplitObstruction> obstruction;
  std::vector<std::vector<int>> groups;
};

inline LinkingPartition obstruct_split(
    const std::vector<std::vector<std::int64_t>>& lk) {
  int n = static_cast<int>(lk.size());
  if (n < 2)
    throw std::invalid_argument("obstruct_split needs at least 2 components");
  std::vector<int> group(n, -1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lk[i][j] != 0) edges.emplace_back(i, j);
  int ng = 0;
  for (int s = 0; s < n; ++s) {
    if (group[s] != -1) continue;
    std::vector<int> stack{s};
    group[s] = ng;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (lk[i][j] != 0 && group[j] == -1) {
          group[j] = ng;
          stack.push_back(j);
        }
    }
    ++ng;
  }
  LinkingPartition out;
  out.groups.resize(ng);
  for (int i = 0; i < n; ++i) out.groups[group[i]].push_back(i);
  if (ng == 1)
    out.obstruction = SplitObstruction{
        "nonzero linking numbers connect all components", edges};
  return out;
}

struct SplitVerdict {
  enum class Kind { Split, TotallySplit, Unlink, NotSplit, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::vector<int>> partition;  // component ids per split part
  std::vector<Move> witness;  // moves from the input to a disconnected diagram
  std::string obstruction;
  long diagrams_examined = 0;

  bool is_split() const {
    return kind == Kind::Split || kind == Kind::TotallySplit ||
           kind == Kind::Unlink;
  }

  static std::string kind_str(Kind k) {
    switch (k) {
      case Kind::Split: return "split";
      case Kind::TotallySplit: return "totally-split";
      case Kind::Unlink: return "unlink";
      case Kind::NotSplit: return "not-split";
      default: return "unknown";
    }
  }
};

// Layered certification: scan the Reidemeister neighborhood for a
// disconnected diagram, recurse on its pieces to upgrade Split to
// TotallySplit/Unlink, fall back to the linking obstruction, else Unknown.
inline SplitVerdict certify_split(const Diagram& d, const Budget& b) {
  SplitVerdict v;
  std::optional<SearchNode> hit;
  // cheap pass first: the non-growing search space is tiny and resolves most
  // diagrams that merely need untangling
  {
    std::vector<Move> wit;
    Budget shrink{d.crossing_count(), b.max_moves, b.max_diagrams};
    Diagram simp = simplify(d, shrink, &wit);
    if (simp.crossing_count() == 0 || simp.is_disconnected())
      hit = SearchNode{std::move(simp), std::move(wit)};
  }
  if (!hit)
    for_each_reachable(d, b, [&](const SearchNode& n) {
      ++v.diagrams_examined;
      if (n.diagram.crossing_count() == 0 || n.diagram.is_disconnected()) {
        hit = n;
        return false;
      }
      return true;
    });
  if (!hit) {
    if (d.component_count() >= 2) {
      auto lp = obstruct_split(d.linking_matrix());
      if (lp.obstruction) {
        v.kind = SplitVerdict::Kind::NotSplit;
        v.obstruction = lp.obstruction->text;
        return v;
      }
    }
    v.kind = SplitVerdict::Kind::Unknown;
    return v;
  }

  const Diagram& found = hit->diagram;
  v.witness = hit->path;
  if (found.crossing_count() == 0) {
    // every component is a free loop: split unknots
    v.kind = SplitVerdict::Kind::Unlink;
    for (int c : found.free_loop_comp) v.partition.push_back({c});
    return v;
  }

  // free loops are finished parts; recurse on each crossing piece
  bool all_unlink = true, all_single = true;
  for (int c : found.free_loop_comp) v.partition.push_back({c});
  auto piece_of = found.crossing_pieces();
  int npieces = found.piece_count();
  for (int pi = 0; pi < npieces; ++pi) {
    std::vector<int> old_comp;
    Diagram piece = found.extract_piece(piece_of, pi, &old_comp);
    SplitVerdict sub = certify_split(piece, b);
    v.diagrams_examined += sub.diagrams_examined;
    if (sub.is_split()) {
      for (const auto& g : sub.partition) {
        std::vector<int> mapped;
        for (int c : g) mapped.push_back(old_comp[c]);
        v.partition.push_back(std::move(mapped));
      }
    } else {
      std::vector<int> whole = old_comp;
      v.partition.push_back(std::move(whole));
    }
    if (sub.kind != SplitVerdict::Kind::Unlink) all_unlink = false;
    if (sub.kind != SplitVerdict::Kind::Unlink &&
        sub.kind != SplitVerdict::Kind::TotallySplit &&
        piece.component_count() > 1)
      all_single = false;
    if (piece.component_count() == 1 &&
        sub.kind != SplitVerdict::Kind::Unlink)
      all_unlink = false;
  }
  if (v.partition.size() < 2 && d.component_count() >= 2) {
    // a single part means nothing actually split (single-piece knot diagram)
    v.kind = SplitVerdict::Kind::Unknown;
    return v;
  }
  if (all_unlink)
    v.kind = SplitVerdict::Kind::Unlink;
  else if (all_single)
    v.kind = SplitVerdict::Kind::TotallySplit;
  else
    v.kind = SplitVerdict::Kind::Split;
  if (d.component_count() < 2 && v.kind != SplitVerdict::Kind::Unlink)
    v.kind = SplitVerdict::Kind::Unknown;
  return v;
}

struct UnlinkAnswer {
  enum class Value { Yes, No, Unknown };
  Value value = Value::Unknown;
  SplitVerdict verdict;

  static std::string value_str(Value v) {
    switch (v) {
      case Value::Yes: return "yes";
      case Value::No: return "no";
      default: return "unknown";
    }
  }
};

inline UnlinkAnswer is_unlink(const Diagram& d, const Budget& b) {
  UnlinkAnswer a;
  a.verdict = certify_split(d, b);
  if (a.verdict.kind == SplitVerdict::Kind::Unlink)
    a.value = UnlinkAnswer::Value::Yes;
  else if (a.verdict.kind == SplitVerdict::Kind::NotSplit)
    a.value = UnlinkAnswer::Value::No;  // a non-split link is never an unlink
  else
    a.value = UnlinkAnswer::Value::Unknown;
  return a;
}

}  // namespace splitkit
