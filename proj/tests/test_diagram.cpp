#include <catch_amalgamated.hpp>

#include "diagrams_for_tests.hpp"
#include "splitkit/diagram.hpp"

using namespace splitkit;

TEST_CASE("parse basics") {
  Diagram hopf = Diagram::parse(testpd::kHopf);
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.narcs == 4);
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.free_loops() == 0);

  Diagram empty = Diagram::parse("");
  CHECK(empty.empty());
  CHECK(empty.component_count() == 0);

  Diagram loops = Diagram::parse("O*3");
  CHECK(loops.crossing_count() == 0);
  CHECK(loops.free_loops() == 3);
  CHECK(loops.component_count() == 3);

  Diagram mix = Diagram::parse("X[1,2,2,1] O*1");
  CHECK(mix.component_count() == 2);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Diagram::parse("X[1,2,3]"), DiagramError);
  CHECK_THROWS_AS(Diagram::parse("X[1,1,1,2] X[2,3,3,4]"), DiagramError);
  CHECK_THROWS_AS(Diagram::parse("X[1,4,2,3]"), DiagramError);  // dangling arcs
  CHECK_THROWS_AS(Diagram::parse("Y[1,2,3,4]"), DiagramError);
  CHECK_THROWS_WITH(Diagram::parse("X[1,2"), Catch::Matchers::ContainsSubstring("offset"));
}

TEST_CASE("emit/parse round trip") {
  for (std::string text :
       {std::string(testpd::kHopf), std::string(testpd::kTrefoil),
        std::string(testpd::kWhitehead), testpd::torus2(6),
        std::string("X[1,2,2,1] O*2")}) {
    Diagram d = Diagram::parse(text);
    Diagram d2 = Diagram::parse(d.emit());
    CHECK(d2.crossing_count() == d.crossing_count());
    CHECK(d2.component_count() == d.component_count());
    CHECK(d2.free_loops() == d.free_loops());
    CHECK(d2.emit() == d.emit());
  }
}

TEST_CASE("linking matrices of fixtures") {
  Diagram hopf = Diagram::parse(testpd::kHopf);
  auto lk = hopf.linking_matrix();
  CHECK(lk[0][0] == 0);
  CHECK(lk[1][1] == 0);
  CHECK((lk[0][1] == 1 || lk[0][1] == -1));
  CHECK(lk[0][1] == lk[1][0]);

  Diagram wh = Diagram::parse(testpd::kWhitehead);
  auto wlk = wh.linking_matrix();
  CHECK(wh.component_count() == 2);
  CHECK(wlk[0][1] == 0);

  Diagram t6 = Diagram::parse(testpd::torus2(6));
  auto tlk = t6.linking_matrix();
  CHECK(t6.component_count() == 2);
  CHECK(std::abs(tlk[0][1]) == 3);

  Diagram tref = Diagram::parse(testpd::kTrefoil);
  CHECK(tref.component_count() == 1);
  CHECK(tref.linking_matrix() ==
        std::vector<std::vector<std::int64_t>>{{0}});
}

TEST_CASE("alternating recognition") {
  CHECK(Diagram::parse(testpd::kHopf).is_alternating());
  CHECK(Diagram::parse(testpd::kTrefoil).is_alternating());
  CHECK(Diagram::parse(testpd::kWhitehead).is_alternating());
  CHECK_FALSE(Diagram::parse(testpd::kHopf).with_changed_crossing(0)
                  .is_alternating());
}

TEST_CASE("self vs inter crossings") {
  Diagram wh = Diagram::parse(testpd::kWhitehead);
  int self = 0;
  for (int i = 0; i < wh.crossing_count(); ++i)
    if (wh.crossing_is_self(i)) ++self;
  CHECK(self == 1);
  Diagram tref = Diagram::parse(testpd::kTrefoil);
  for (int i = 0; i < tref.crossing_count(); ++i)
    CHECK(tref.crossing_is_self(i));
}

TEST_CASE("change_crossing involution and lk shift") {
  Diagram hopf = Diagram::parse(testpd::kHopf);
  Diagram once = hopf.with_changed_crossing(0);
  Diagram twice = once.with_changed_crossing(0);
  CHECK(twice.emit() == hopf.emit());
  auto before = hopf.linking_matrix();
  auto after = once.linking_matrix();
  CHECK(std::abs(before[0][1] - after[0][1]) == 1);
  CHECK_THROWS_AS(hopf.with_changed_crossing(9), DiagramError);
}

TEST_CASE("component reversal flips inter-component linking") {
  Diagram t6 = Diagram::parse(testpd::torus2(6));
  auto lk = t6.linking_matrix();
  Diagram rev = t6.with_reversed_component(0);
  auto rlk = rev.linking_matrix();
  CHECK(rlk[0][1] == -lk[0][1]);
}

TEST_CASE("piece decomposition") {
  Diagram two = Diagram::parse("X[1,2,2,1] X[3,4,4,3]");
  CHECK(two.piece_count() == 2);
  CHECK(two.is_disconnected());
  auto piece = two.crossing_pieces();
  std::vector<int> oldcomp;
  Diagram p0 = two.extract_piece(piece, 0, &oldcomp);
  CHECK(p0.crossing_count() == 1);
  CHECK(oldcomp.size() == 1);
  Diagram hopf = Diagram::parse(testpd::kHopf);
  CHECK_FALSE(hopf.is_disconnected());
  CHECK(Diagram::parse("X[1,2,2,1] O*1").is_disconnected());
}

TEST_CASE("triangulation accounting") {
  CHECK(triangulation_bound(0) == 0);
  CHECK(triangulation_bound(1) == 24);
  CHECK(triangulation_bound(5) == 120);
  CHECK(bound_report(5) == "k^120");
  CHECK_THROWS_AS(triangulation_bound(-1), std::invalid_argument);
}
