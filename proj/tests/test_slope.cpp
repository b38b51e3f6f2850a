#include <catch_amalgamated.hpp>

#include <random>

#include "splitkit/slope.hpp"

using namespace splitkit;

TEST_CASE("slope normalization") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(-2, -4) == Slope(1, 2));
  CHECK(Slope(2, -4) == Slope(-1, 2));
  CHECK(Slope(3, 0) == Slope::infinity());
  CHECK(Slope(-5, 0) == Slope::infinity());
  CHECK(Slope(0, -7) == Slope(0, 1));
  CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
}

TEST_CASE("slope text form") {
  CHECK(Slope(5, 2).str() == "5/2");
  CHECK(Slope(-1, 2).str() == "-1/2");
  CHECK(Slope::infinity().str() == "inf");
  CHECK(Slope::parse("inf") == Slope::infinity());
  CHECK(Slope::parse("1/0") == Slope::infinity());
  CHECK(Slope::parse("5/2") == Slope(5, 2));
  CHECK(Slope::parse("-3") == Slope(-3, 1));
  CHECK(Slope::parse("6/-4") == Slope(-3, 2));
  CHECK_THROWS_AS(Slope::parse("x/y"), std::invalid_argument);
}

TEST_CASE("distance examples") {
  CHECK(distance(Slope(0, 1), Slope::infinity()) == 1);
  CHECK(distance(Slope(5, 2), Slope(5, 2)) == 0);
  for (std::int64_t n = -20; n <= 20; ++n)
    CHECK(distance(Slope::infinity(), Slope(2 * n + 1, 2)) == 2);
}

TEST_CASE("cf_eval examples") {
  for (std::int64_t c = -5; c <= 5; ++c)
    CHECK(cf_eval({c}) == Slope(c, 1));
  CHECK(cf_eval({}) == Slope(0, 1));
  CHECK(cf_eval({0, 0}) == Slope::infinity());
  CHECK(cf_eval({2, 2}) == Slope(5, 2));
  // F([c1..cn]) = c1 + 1/F(rest)
  CHECK(cf_eval({3, 2, 1}) == Slope(10, 3));
  CHECK(cf_eval({2, 0}) == Slope::infinity());
  CHECK(cf_eval({0, 2}) == Slope(1, 2));
}

TEST_CASE("cf_expand examples") {
  CHECK(cf_expand(Slope(0, 1)) == TwistVector{0});
  CHECK(cf_expand(Slope::infinity()) == TwistVector({0, 0}));
  CHECK(cf_eval(cf_expand(Slope(5, 2))) == Slope(5, 2));
}

TEST_CASE("twist vector text form") {
  CHECK(twist_vector_str({0, 1, 0, -1}) == "[0,1,0,-1]");
  CHECK(twist_vector_str({}) == "[]");
  CHECK(parse_twist_vector("[0, 1, 0, -1]") == TwistVector({0, 1, 0, -1}));
  CHECK(parse_twist_vector("[]") == TwistVector{});
  CHECK_THROWS_AS(parse_twist_vector("0,1"), std::invalid_argument);
}

TEST_CASE("property: round trip over full grid |p|,|q| <= 100") {
  for (std::int64_t p = -100; p <= 100; ++p)
    for (std::int64_t q = 0; q <= 100; ++q) {
      if (p == 0 && q == 0) continue;
      Slope s(p, q);
      REQUIRE(cf_eval(cf_expand(s)) == s);
    }
}

TEST_CASE("property: randomized round trips") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> coef(-100, 100);
  int cases = 0;
  while (cases < 1200) {
    std::int64_t p = coef(rng), q = coef(rng);
    if (p == 0 && q == 0) continue;
    ++cases;
    Slope s(p, q);
    REQUIRE(cf_eval(cf_expand(s)) == s);
  }
}

TEST_CASE("property: distance under determinant-+-1 basis change") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-40, 40);
  std::uniform_int_distribution<std::int64_t> mat(-4, 4);
  for (int it = 0; it < 1000; ++it) {
    std::int64_t p1 = coef(rng), q1 = coef(rng), p2 = coef(rng), q2 = coef(rng);
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
    Slope a(p1, q1), b(p2, q2);
    REQUIRE(distance(a, b) == distance(b, a));
    REQUIRE((distance(a, b) == 0) == (a == b));
    // random unimodular matrix via shears
    std::int64_t m[2][2] = {{1, 0}, {0, 1}};
    for (int k = 0; k < 3; ++k) {
      std::int64_t s = mat(rng);
      std::int64_t n0[2][2] = {{m[0][0] + s * m[1][0], m[0][1] + s * m[1][1]},
                               {m[1][0], m[1][1]}};
      std::int64_t t = mat(rng);
      m[0][0] = n0[0][0];
      m[0][1] = n0[0][1];
      m[1][0] = n0[1][0] + t * n0[0][0];
      m[1][1] = n0[1][1] + t * n0[0][1];
    }
    Slope a2(m[0][0] * a.p + m[0][1] * a.q, m[1][0] * a.p + m[1][1] * a.q);
    Slope b2(m[0][0] * b.p + m[0][1] * b.q, m[1][0] * b.p + m[1][1] * b.q);
    REQUIRE(distance(a2, b2) == distance(a, b));
  }
}

TEST_CASE("property: appending identity-composing suffix preserves cf_eval") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  std::uniform_int_distribution<int> len(0, 12);
  for (int it = 0; it < 1000; ++it) {
    TwistVector tv;
    int n = len(rng);
    if (n == 0) continue;  // [] is the single seed-value exception
    for (int k = 0; k < n; ++k) tv.push_back(coef(rng));
    Slope base = cf_eval(tv);
    // a trailing [0,0] composes to the identity Moebius map
    TwistVector ext = tv;
    ext.push_back(0);
    ext.push_back(0);
    REQUIRE(cf_eval(ext) == base);
  }
}
