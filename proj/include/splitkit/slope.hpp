#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitkit {

// Slope p/q on the torus double cover of the tangle boundary sphere.
// Canonical form: gcd(|p|,|q|) = 1, q >= 0, and q == 0 only as 1/0 (infinity).
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Slope() = default;

  Slope(std::int64_t num, std::int64_t den) : p(num), q(den) {
    if (p == 0 && q == 0)
      throw std::invalid_argument("slope 0/0 is not a slope");
    std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (q == 0) p = 1;
  }

  static Slope infinity() { return Slope(1, 0); }

  bool is_infinity() const { return q == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;

  std::string str() const {
    if (q == 0) return "inf";
    return std::to_string(p) + "/" + std::to_string(q);
  }

  static Slope parse(std::string_view s) {
    if (s == "inf" || s == "1/0" || s == "-1/0") return infinity();
    auto bar = s.find('/');
    try {
      if (bar == std::string_view::npos)
        return Slope(std::stoll(std::string(s)), 1);
      std::int64_t num = std::stoll(std::string(s.substr(0, bar)));
      std::int64_t den = std::stoll(std::string(s.substr(bar + 1)));
      return Slope(num, den);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse slope: " + std::string(s));
    }
  }
};

// Distance between two slopes: half the minimal intersection number of the
// lifted curves, which works out to |p1 q2 - p2 q1|.
inline std::int64_t distance(const Slope& a, const Slope& b) {
  std::int64_t d = a.p * b.q - b.p * a.q;
  return d < 0 ? -d : d;
}

// Twist vector [c1, ..., cn] describing a trivial-tangle diagram as a row of
// twist regions.  Any integers are allowed, including interior zeros.
using TwistVector = std::vector<std::int64_t>;

// Evaluate a twist vector to its slope:
//   F([c1..cn]) = c1 + 1/F([c2..cn]),   F([c]) = c,   F([]) = 0.
// Computed projectively via 2x2 integer matrices so that intermediate
// infinities are exact: starting from 1/0, each step maps p/q to c + q/p.
inline Slope cf_eval(const TwistVector& tv) {
  if (tv.empty()) return Slope(0, 1);
  std::int64_t p = 1, q = 0;
  for (auto it = tv.rbegin(); it != tv.rend(); ++it) {
    std::int64_t np = *it * p + q;
    std::int64_t nq = p;
    p = np;
    q = nq;
  }
  return Slope(p, q);
}

// Expand a slope to a twist vector with cf_eval(cf_expand(r)) == r.
// Infinity expands to [0,0]; finite slopes use the Euclidean expansion.
inline TwistVector cf_expand(const Slope& r) {
  if (r.is_infinity()) return {0, 0};
  TwistVector out;
  std::int64_t p = r.p, q = r.q;
  while (q != 1) {
    // floor division; remainder in [1, q-1]
    std::int64_t c = p / q;
    if (p % q != 0 && (p < 0) != (q < 0)) --c;
    out.push_back(c);
    std::int64_t np = q, nq = p - c * q;
    p = np;
    q = nq;
  }
  out.push_back(p);
  return out;
}

inline std::string twist_vector_str(const TwistVector& tv) {
  std::string s = "[";
  for (std::size_t i = 0; i < tv.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tv[i]);
  }
  return s + "]";
}

inline TwistVector parse_twist_vector(std::string_view s) {
  TwistVector tv;
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
  skip();
  if (i >= s.size() || s[i] != '[')
    throw std::invalid_argument("twist vector must start with '['");
  ++i;
  skip();
  if (i < s.size() && s[i] == ']') return tv;
  while (true) {
    skip();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad twist vector entry");
    tv.push_back(std::stoll(std::string(s.substr(i, j - i))));
    i = j;
    skip();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') return tv;
    throw std::invalid_argument("expected ',' or ']' in twist vector");
  }
}

}  // namespace splitkit
