#include <catch_amalgamated.hpp>

#include "diagrams_for_tests.hpp"
#include "splitkit/fixtures.hpp"
#include "splitkit/search.hpp"

using namespace splitkit;

namespace {

SearchBudgets small_budgets(int jobs = 1) {
  SearchBudgets b;
  b.neighborhood = Budget{6, 2, 300};
  b.certify = Budget{6, 8, 5000};
  b.jobs = jobs;
  return b;
}

// the spec'd consistency between a Yes witness and linking numbers
void check_witness_consistency(const Diagram& d, const SearchReport& rep) {
  if (rep.answer != SearchReport::Answer::Yes || d.component_count() != 2)
    return;
  const SearchWitness& w = *rep.witness;
  auto refs = enumerate_crossing_changes(w.diagram, ChangeMode::Any);
  std::int64_t lk = d.linking_matrix()[0][1];
  for (const CrossingRef& r : refs)
    if (r.crossing == w.crossing) {
      if (r.self)
        CHECK(lk == 0);
      else
        CHECK(std::abs(lk) == 1);
    }
}

}  // namespace

TEST_CASE("crossing change enumeration") {
  Diagram wh = fixture("whitehead-l5a1");
  CHECK(enumerate_crossing_changes(wh, ChangeMode::Any).size() == 5);
  CHECK(enumerate_crossing_changes(wh, ChangeMode::DistinctComponents).size() ==
        4);
  CHECK(enumerate_crossing_changes(fixture("trefoil"),
                                   ChangeMode::DistinctComponents)
            .empty());
}

TEST_CASE("linking feasibility") {
  std::vector<std::vector<std::int64_t>> lk0{{0, 0}, {0, 0}};
  std::vector<std::vector<std::int64_t>> lk1{{0, 1}, {1, 0}};
  std::vector<std::vector<std::int64_t>> lk3{{0, 3}, {3, 0}};

  CHECK_FALSE(lk_feasibility(lk0, Question::S).has_value());
  CHECK_FALSE(lk_feasibility(lk1, Question::S).has_value());
  CHECK(lk_feasibility(lk3, Question::S).has_value());
  CHECK(lk_feasibility(lk3, Question::U).has_value());
  CHECK_FALSE(lk_feasibility(lk1, Question::U).has_value());
  // distinct-component changes must shift one pair, so lk = 0 cannot split
  CHECK(lk_feasibility(lk0, Question::Sd).has_value());
  CHECK_FALSE(lk_feasibility(lk1, Question::Sd).has_value());
  CHECK_THROWS_AS(lk_feasibility({{0}}, Question::S), std::invalid_argument);
}

TEST_CASE("hopf answers") {
  Diagram hopf = fixture("hopf");
  for (Question q : {Question::U, Question::S, Question::Sd}) {
    auto rep = question_is_one(hopf, q, small_budgets());
    INFO("question " << question_str(q));
    REQUIRE(rep.answer == SearchReport::Answer::Yes);
    check_witness_consistency(hopf, rep);
  }
}

TEST_CASE("whitehead answers") {
  Diagram wh = fixture("whitehead-l5a1");
  auto s = question_is_one(wh, Question::S, small_budgets());
  REQUIRE(s.answer == SearchReport::Answer::Yes);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->path.empty());  // found on the input diagram itself
  CHECK(wh.crossing_is_self(s.witness->crossing));
  check_witness_consistency(wh, s);

  auto ts = question_is_one(wh, Question::Ts, small_budgets());
  CHECK(ts.answer == SearchReport::Answer::Yes);

  // inter-component-only variants are hopeless at lk = 0
  for (Question q : {Question::Sd, Question::Tsd}) {
    auto rep = question_is_one(wh, q, small_budgets());
    CHECK(rep.answer == SearchReport::Answer::No);
    CHECK(rep.candidates_examined == 0);
  }
}

TEST_CASE("lk = 3 torus link is refused without search") {
  Diagram torus = fixture("torus-2-6");
  for (Question q : {Question::U, Question::S, Question::Ts}) {
    auto rep = question_is_one(torus, q, small_budgets());
    CHECK(rep.answer == SearchReport::Answer::No);
    CHECK(rep.candidates_examined == 0);
    CHECK_FALSE(rep.obstruction.empty());
  }
}

TEST_CASE("knot inputs") {
  Diagram tref = fixture("trefoil");
  auto rep = question_is_one(tref, Question::U, small_budgets());
  CHECK(rep.answer == SearchReport::Answer::Yes);
  for (Question q :
       {Question::S, Question::Sd, Question::Ts, Question::Tsd})
    CHECK_THROWS_AS(question_is_one(tref, q, small_budgets()),
                    std::invalid_argument);
}

TEST_CASE("answers are relabeling invariant and deterministic across jobs") {
  Diagram a = Diagram::parse("X[1,4,2,3] X[3,2,4,1]");
  Diagram b = Diagram::parse("X[7,20,9,14] X[14,9,20,7]");
  auto ra = question_is_one(a, Question::U, small_budgets());
  auto rb = question_is_one(b, Question::U, small_budgets());
  CHECK(ra.answer == rb.answer);

  auto r1 = question_is_one(a, Question::S, small_budgets(1));
  auto r2 = question_is_one(a, Question::S, small_budgets(2));
  REQUIRE(r1.answer == r2.answer);
  REQUIRE(r1.witness.has_value());
  REQUIRE(r2.witness.has_value());
  CHECK(r1.witness->crossing == r2.witness->crossing);
  CHECK(r1.candidates_examined == r2.candidates_examined);
}

TEST_CASE("already-split inputs answer no") {
  auto rep = question_is_one(fixture("clasp-unlink"), Question::S,
                             small_budgets());
  CHECK(rep.answer == SearchReport::Answer::No);
  CHECK_FALSE(rep.obstruction.empty());
}
