#include <catch_amalgamated.hpp>

#include <random>

#include "diagrams_for_tests.hpp"
#include "splitkit/homology.hpp"

using namespace splitkit;

namespace {
IntMatrix from_rows(std::vector<std::vector<std::int64_t>> rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}
}  // namespace

TEST_CASE("smith normal form basics") {
  CHECK(smith_normal_form(from_rows({{2}})) ==
        AbelianGroup{.torsion = {2}, .rank = 0});
  CHECK(smith_normal_form(from_rows({{2, 1}, {1, 2}})) ==
        AbelianGroup{.torsion = {3}, .rank = 0});
  CHECK(smith_normal_form(from_rows({{0}})) ==
        AbelianGroup{.torsion = {}, .rank = 1});
  CHECK(smith_normal_form(IntMatrix(0, 0)) == AbelianGroup{});
  auto g = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
  CHECK(g.torsion == std::vector<std::int64_t>{2, 4});
  auto h = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(h.torsion == std::vector<std::int64_t>{6});
}

TEST_CASE("goeritz matrices of fixtures") {
  CHECK(goeritz_matrix(Diagram::parse("O*1")).rows == 0);
  auto hopf = goeritz_matrix(Diagram::parse(testpd::kHopf));
  REQUIRE(hopf.rows == 1);
  CHECK(std::abs(hopf.at(0, 0)) == 2);
  auto wh = goeritz_matrix(Diagram::parse(testpd::kWhitehead));
  CHECK((wh.rows == 2 || wh.rows == 3));
  CHECK_THROWS_AS(goeritz_matrix(Diagram::parse("X[1,2,2,1] O*1")),
                  DiagramError);
}

TEST_CASE("determinant and H1 of fixtures") {
  CHECK(determinant(Diagram::parse("O*1")) == 1);
  CHECK(branched_cover_h1(Diagram::parse("O*1")).trivial());
  CHECK(determinant(Diagram::parse(testpd::kHopf)) == 2);
  CHECK(branched_cover_h1(Diagram::parse(testpd::kHopf)) ==
        AbelianGroup{.torsion = {2}, .rank = 0});
  CHECK(determinant(Diagram::parse(testpd::kTrefoil)) == 3);
  CHECK(branched_cover_h1(Diagram::parse(testpd::kTrefoil)) ==
        AbelianGroup{.torsion = {3}, .rank = 0});
  CHECK(determinant(Diagram::parse(testpd::kWhitehead)) == 8);
  CHECK(branched_cover_h1(Diagram::parse(testpd::kWhitehead)) ==
        AbelianGroup{.torsion = {8}, .rank = 0});
  // 2-component unlink via a changed hopf: det 0 (H1 has free rank)
  Diagram clasp = Diagram::parse(testpd::kHopf).with_changed_crossing(0);
  CHECK(determinant(clasp) == 0);
  CHECK(branched_cover_h1(clasp).rank == 1);
  // (2,6) torus link: H1 = Z/6
  CHECK(determinant(Diagram::parse(testpd::torus2(6))) == 6);
}

TEST_CASE("determinant invariant under Reidemeister perturbations") {
  std::mt19937_64 rng(99);
  for (const char* text : {testpd::kHopf, testpd::kTrefoil, testpd::kWhitehead,
                           testpd::kKink}) {
    Diagram base = Diagram::parse(text);
    std::int64_t det0 = determinant(base);
    AbelianGroup h0 = branched_cover_h1(base);
    for (int it = 0; it < 100; ++it) {
      Diagram p = testpd::random_perturb(base, rng, 4, 9);
      if (p.piece_count() + p.free_loops() != 1) continue;
      REQUIRE(determinant(p) == det0);
      REQUIRE(branched_cover_h1(p) == h0);
    }
  }
}

TEST_CASE("property: SNF invariant under unimodular multiplication") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<std::int64_t> entry(-6, 6);
  std::uniform_int_distribution<int> shear(-3, 3);
  for (int it = 0; it < 1000; ++it) {
    int r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (auto& v : m.a) v = entry(rng);
    IntMatrix u = m;
    // random unimodular row/column shears and swaps
    for (int k = 0; k < 6; ++k) {
      int i = std::uniform_int_distribution<int>(0, r - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, r - 1)(rng);
      std::int64_t s = shear(rng);
      if (i != j)
        for (int t = 0; t < c; ++t) u.at(i, t) += s * u.at(j, t);
      int p = std::uniform_int_distribution<int>(0, c - 1)(rng);
      int q = std::uniform_int_distribution<int>(0, c - 1)(rng);
      std::int64_t s2 = shear(rng);
      if (p != q)
        for (int t = 0; t < r; ++t) u.at(t, p) += s2 * u.at(t, q);
    }
    REQUIRE(smith_normal_form(u) == smith_normal_form(m));
  }
}

TEST_CASE("h2 rule table") {
  std::vector<std::vector<std::int64_t>> lk2{{0, 0}, {0, 0}};
  std::vector<std::vector<std::int64_t>> lk2nz{{0, 3}, {3, 0}};
  std::vector<std::vector<std::int64_t>> lk4(4, std::vector<std::int64_t>(4, 0));
  std::vector<std::vector<std::int64_t>> lk3(3, std::vector<std::int64_t>(3, 0));

  auto r4 = h2_nonzero_rule(4, 1, lk4, {0});
  CHECK(r4.holds);
  CHECK(r4.case_tag == "boundary-count");

  auto r2 = h2_nonzero_rule(2, 1, lk2, {0});
  CHECK(r2.holds);
  CHECK(r2.case_tag == "two-component-zero-lk");
  CHECK_FALSE(h2_nonzero_rule(2, 1, lk2nz, {1}).holds);

  auto r3 = h2_nonzero_rule(3, 2, lk3, {0, 1});
  CHECK(r3.holds);
  CHECK(r3.case_tag == "seifert-surface");

  CHECK_THROWS_AS(h2_nonzero_rule(2, 2, lk2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(h2_nonzero_rule(1, 1, lk2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(h2_nonzero_rule(3, 3, lk3, {0, 1, 2}), std::invalid_argument);
}
