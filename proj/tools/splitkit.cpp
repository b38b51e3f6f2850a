#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "splitkit/json_io.hpp"

using namespace splitkit;
using nlohmann::json;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

struct Options {
  bool pretty = false;
  std::uint64_t seed = 0;  // reserved; all search orderings are deterministic
  int jobs = 1;
};

void emit(const json& j, const Options& o) {
  if (o.pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

// A diagram argument names a fixture, a file, "-" for stdin, or is PD text.
Diagram load_diagram(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return Diagram::parse(ss.str());
  }
  if (builtin_fixtures().count(arg)) return fixture(arg);
  std::ifstream in(arg);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return Diagram::parse(ss.str());
  }
  return Diagram::parse(arg);
}

// CLI11 splits "[3,2,1]" into bare numbers; accept that and plain lists
TwistVector parse_twists(const std::vector<std::string>& words) {
  std::string joined;
  for (const auto& w : words) {
    if (!joined.empty()) joined += ",";
    joined += w;
  }
  if (joined.empty() || joined.front() != '[') joined = "[" + joined + "]";
  return parse_twist_vector(joined);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitkit: tangle slopes, link diagrams and splitting searches"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "indent JSON output");
  app.add_option("--seed", opt.seed, "seed for randomized orderings");
  app.add_option("--jobs", opt.jobs, "worker threads for search subcommands")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;
  json out;

  // ---- slope -------------------------------------------------------------
  auto* slope_cmd = app.add_subcommand("slope", "projective slope calculus");
  slope_cmd->require_subcommand(1);
  std::string slope_a, slope_b;
  auto* slope_dist = slope_cmd->add_subcommand("dist", "distance of two slopes");
  slope_dist->add_option("first", slope_a)->required();
  slope_dist->add_option("second", slope_b)->required();
  slope_dist->callback([&] {
    out = json{{"distance",
                distance(Slope::parse(slope_a), Slope::parse(slope_b))}};
  });
  std::vector<std::string> twist_words;
  auto* slope_eval =
      slope_cmd->add_subcommand("eval", "continued-fraction value");
  slope_eval->add_option("twists", twist_words, "twist vector, e.g. [3,2,1]")
      ->required();
  slope_eval->callback([&] {
    out = json{{"slope", cf_eval(parse_twists(twist_words)).str()}};
  });
  auto* slope_expand =
      slope_cmd->add_subcommand("expand", "continued-fraction expansion");
  slope_expand->add_option("slope", slope_a)->required();
  slope_expand->callback([&] {
    auto v = cf_expand(Slope::parse(slope_a));
    out = json{{"twists", v}, {"pretty", twist_vector_str(v)}};
  });

  // ---- tangle ------------------------------------------------------------
  auto* tangle_cmd = app.add_subcommand("tangle", "trivial tangle replacements");
  tangle_cmd->require_subcommand(1);
  std::int64_t ta = 1, tb = 0, td = 2, tt = 2;
  auto* tangle_classify = tangle_cmd->add_subcommand(
      "classify", "identity-family solutions for a target slope");
  tangle_classify->add_option("slope", slope_a)->required();
  tangle_classify->add_option("-d,--distance", td, "replacement distance");
  tangle_classify->callback([&] {
    out = json{{"slope", slope_a},
               {"distance", td},
               {"solutions",
                enumerate_twisted_solutions(Slope::parse(slope_a), td)}};
  });
  auto* tangle_expand =
      tangle_cmd->add_subcommand("expand", "symmetric expansion of a/b");
  tangle_expand->add_option("a", ta)->required();
  tangle_expand->add_option("b", tb)->required();
  tangle_expand->callback([&] {
    auto v = symmetric_expansion(ta, tb);
    out = json{{"twists", v},
               {"pretty", twist_vector_str(v)},
               {"slope", cf_eval(v).str()}};
  });
  auto* tangle_insert = tangle_cmd->add_subcommand(
      "insert", "insert central twists into a symmetric expansion");
  tangle_insert->add_option("twists", twist_words)->required();
  tangle_insert->add_option("-t,--twist", tt, "central twist (|t| >= 2)");
  tangle_insert->callback([&] {
    auto r = insert_central_twists(parse_twists(twist_words), tt);
    out = json{{"twists", r.vector},
               {"pretty", twist_vector_str(r.vector)},
               {"slope", r.slope.str()}};
  });

  // ---- diagram -----------------------------------------------------------
  auto* diagram_cmd = app.add_subcommand("diagram", "PD-code operations");
  diagram_cmd->require_subcommand(1);
  std::string pd;
  int crossing = 0;
  Budget budget;
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-crossings", budget.max_crossings);
    c->add_option("--max-moves", budget.max_moves);
    c->add_option("--max-diagrams", budget.max_diagrams);
  };
  auto* diagram_parse = diagram_cmd->add_subcommand("parse", "parse and echo");
  diagram_parse->add_option("pd", pd)->required();
  diagram_parse->callback([&] { out = load_diagram(pd); });
  auto* diagram_lk = diagram_cmd->add_subcommand("lk", "linking matrix");
  diagram_lk->add_option("pd", pd)->required();
  diagram_lk->callback([&] {
    out = json{{"matrix", load_diagram(pd).linking_matrix()}};
  });
  auto* diagram_change =
      diagram_cmd->add_subcommand("change", "change one crossing");
  diagram_change->add_option("pd", pd)->required();
  diagram_change->add_option("-c,--crossing", crossing)->required();
  diagram_change->callback([&] {
    out = load_diagram(pd).with_changed_crossing(crossing);
  });
  auto* diagram_simplify =
      diagram_cmd->add_subcommand("simplify", "budgeted simplification");
  diagram_simplify->add_option("pd", pd)->required();
  add_budget(diagram_simplify);
  diagram_simplify->callback([&] {
    Diagram d = load_diagram(pd);
    Budget b = budget;
    b.max_crossings = std::max(b.max_crossings, d.crossing_count());
    std::vector<Move> wit;
    Diagram s = simplify(d, b, &wit);
    out = json{{"diagram", s}, {"witness", wit}};
  });
  std::int64_t crossings = 0;
  auto* diagram_bound =
      diagram_cmd->add_subcommand("bound", "triangulation accounting");
  diagram_bound->add_option("--crossings", crossings)->required();
  diagram_bound->callback([&] {
    out = json{{"tetrahedra", triangulation_bound(crossings)},
               {"count_bound", bound_report(crossings)}};
  });

  // ---- split -------------------------------------------------------------
  auto* split_cmd = app.add_subcommand("split", "splitness certification");
  split_cmd->require_subcommand(1);
  auto* split_certify = split_cmd->add_subcommand("certify", "layered verdict");
  split_certify->add_option("pd", pd)->required();
  add_budget(split_certify);
  split_certify->callback([&] {
    SplitVerdict v = certify_split(load_diagram(pd), budget);
    out = v;
    if (v.kind == SplitVerdict::Kind::Unknown) exit_code = kExitBudget;
  });

  // ---- search ------------------------------------------------------------
  auto* search_cmd = app.add_subcommand("search", "splitting-number questions");
  search_cmd->require_subcommand(1);
  std::string question = "s";
  SearchBudgets sb;
  auto* search_one =
      search_cmd->add_subcommand("one", "is <question>(L) equal to one");
  search_one->add_option("pd", pd)->required();
  search_one->add_option("--question", question)
      ->required()
      ->check(CLI::IsMember({"u", "s", "sd", "ts", "tsd"}));
  search_one->add_option("--max-crossings", sb.certify.max_crossings);
  search_one->add_option("--max-moves", sb.certify.max_moves);
  search_one->add_option("--max-diagrams", sb.certify.max_diagrams);
  search_one->add_option("--nbhd-crossings", sb.neighborhood.max_crossings);
  search_one->add_option("--nbhd-moves", sb.neighborhood.max_moves);
  search_one->add_option("--nbhd-diagrams", sb.neighborhood.max_diagrams);
  search_one->callback([&] {
    sb.jobs = opt.jobs;
    SearchReport r =
        question_is_one(load_diagram(pd), parse_question(question), sb);
    out = r;
    if (r.answer == SearchReport::Answer::UnknownAtBudget)
      exit_code = kExitBudget;
  });

  // ---- circle ------------------------------------------------------------
  auto* circle_cmd = app.add_subcommand("circle", "crossing circles");
  circle_cmd->require_subcommand(1);
  std::int64_t framing = 0;
  int surgery = 1;
  auto* circle_for = circle_cmd->add_subcommand(
      "for-slope", "the two circles realizing a crossing-change slope");
  circle_for->add_option("slope", slope_a)->required();
  circle_for->callback([&] {
    auto [a, b] = circles_for_replacement(Slope::parse(slope_a));
    out = json{{"circles", {a, b}}};
  });
  auto* circle_profile =
      circle_cmd->add_subcommand("profile", "linking profile of a circle");
  circle_profile->add_option("pd", pd)->required();
  circle_profile->add_option("-c,--crossing", crossing)->required();
  circle_profile->add_option("--sign", surgery)->check(CLI::IsMember({1, -1}));
  circle_profile->add_option("--framing", framing);
  circle_profile->callback([&] {
    Diagram d = load_diagram(pd);
    CrossingCircleSpec spec{crossing, framing, surgery};
    out = json{{"spec", spec},
               {"profile", circle_linking_profile(d, spec)}};
  });
  auto* circle_census =
      circle_cmd->add_subcommand("census", "Whitehead fixture census");
  circle_census->callback([&] { out = whitehead_census(); });

  // ---- homology ----------------------------------------------------------
  auto* hom_cmd = app.add_subcommand("homology", "double branched cover data");
  hom_cmd->require_subcommand(1);
  auto* hom_goeritz = hom_cmd->add_subcommand("goeritz", "Goeritz matrix");
  hom_goeritz->add_option("pd", pd)->required();
  hom_goeritz->callback([&] { out = goeritz_matrix(load_diagram(pd)); });
  auto* hom_h1 = hom_cmd->add_subcommand("h1", "H1 of the double cover");
  hom_h1->add_option("pd", pd)->required();
  hom_h1->callback([&] { out = branched_cover_h1(load_diagram(pd)); });
  auto* hom_det = hom_cmd->add_subcommand("det", "link determinant");
  hom_det->add_option("pd", pd)->required();
  hom_det->callback([&] {
    out = json{{"determinant", determinant(load_diagram(pd))}};
  });
  std::vector<int> sublink;
  auto* hom_h2 = hom_cmd->add_subcommand("h2rule", "relative-H2 case rule");
  hom_h2->add_option("pd", pd)->required();
  hom_h2->add_option("--sublink", sublink,
                     "components met by the crossing disc")
      ->required();
  hom_h2->callback([&] {
    Diagram d = load_diagram(pd);
    out = h2_nonzero_rule(d.component_count(),
                          static_cast<int>(sublink.size()),
                          d.linking_matrix(), sublink);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kExitMalformed;
  } catch (const DiagramError& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kExitMalformed;
  }
  emit(out, opt);
  return exit_code;
}
