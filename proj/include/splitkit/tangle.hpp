#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "splitkit/slope.hpp"

namespace splitkit {

// A trivial 2-string tangle, determined up to isotopy by its slope.
struct TrivialTangle {
  Slope slope;
  friend bool operator==(const TrivialTangle&, const TrivialTangle&) = default;
};

struct ReplacementResult {
  TrivialTangle tangle;
  std::int64_t dist;
};

// Replace a trivial tangle by the one with the given slope; the distance of
// the replacement is the slope distance.
inline ReplacementResult replacement(const TrivialTangle& old_tangle,
                                     const Slope& new_slope) {
  return {TrivialTangle{new_slope}, distance(old_tangle.slope, new_slope)};
}

// One solution of the distance-d replacement classifier: the slope is
// (1 + sign_num*d*a*b) / (sign_den*d*a^2) and the replacement is realised by
// inserting central_twist crossings into the symmetric expansion.
struct ReplacementSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int sign_num = 1;
  int sign_den = 1;
  std::int64_t central_twist = 0;
  TwistVector expansion;
};

// [0, c1, ..., cn, 0, -cn, ..., -c1] where [c1..cn] = cf_expand(a/b).
// Evaluates to infinity: the palindrome composes to the identity on slopes.
inline TwistVector symmetric_expansion(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("symmetric_expansion: (a,b) = (0,0)");
  if (std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) != 1)
    throw std::invalid_argument("symmetric_expansion: a, b must be coprime");
  TwistVector cf = cf_expand(Slope(a, b));
  TwistVector out;
  out.push_back(0);
  for (std::int64_t c : cf) out.push_back(c);
  out.push_back(0);
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) out.push_back(-*it);
  return out;
}

inline bool is_symmetric_expansion(const TwistVector& sv) {
  if (sv.size() < 2 || sv.size() % 2 != 0) return false;
  std::size_t n = sv.size() / 2 - 1;
  if (sv[0] != 0 || sv[n + 1] != 0) return false;
  for (std::size_t k = 1; k <= n; ++k)
    if (sv[n + 1 + k] != -sv[n + 1 - k]) return false;
  return true;
}

struct InsertionResult {
  TwistVector vector;
  Slope slope;
};

// Replace the central 0 of a symmetric expansion by t (|t| >= 2) and evaluate.
inline InsertionResult insert_central_twists(const TwistVector& sv,
                                             std::int64_t t) {
  if (!is_symmetric_expansion(sv))
    throw std::invalid_argument(
        "insert_central_twists: not a symmetric expansion");
  if (t > -2 && t < 2)
    throw std::invalid_argument("insert_central_twists: |t| must be >= 2");
  TwistVector out = sv;
  out[out.size() / 2] = t;
  return {out, cf_eval(out)};
}

// All twisted solutions (conclusion (ii) of the distance-d classifier) that
// realise p/q from the tangle of slope infinity.  Each candidate (a, b, t) is
// verified through insert_central_twists, so the sign conventions are
// calibrated against the constructive oracle rather than assumed.  The
// core-arc case (conclusion (i)) is never excluded by this enumeration and is
// reported separately by callers.
inline std::vector<ReplacementSolution> enumerate_twisted_solutions(
    const Slope& pq, std::int64_t d) {
  if (d < 2)
    throw std::invalid_argument(
        "enumerate_twisted_solutions: classifier requires d >= 2");
  std::vector<ReplacementSolution> out;
  if (pq.is_infinity()) return out;
  // q = d a^2 for a positive integer a
  if (pq.q % d != 0) return out;
  std::int64_t a2 = pq.q / d;
  std::int64_t a = 0;
  while (a * a < a2) ++a;
  if (a * a != a2 || a == 0) return out;

  std::vector<std::int64_t> candidates;
  auto add_candidate = [&](std::int64_t num) {
    if (num % (d * a) == 0) {
      std::int64_t b = num / (d * a);
      for (std::int64_t s : {b, -b}) {
        bool seen = false;
        for (std::int64_t c : candidates) seen = seen || c == s;
        if (!seen) candidates.push_back(s);
      }
    }
  };
  add_candidate(pq.p - 1);   // (1 + e1 d a b) / (d a^2) with e1 b = (p-1)/(da)
  add_candidate(-pq.p - 1);  // -(1 + e1 d a b) / (d a^2)

  for (std::int64_t b : candidates) {
    if (std::gcd(a, b < 0 ? -b : b) != 1) continue;
    TwistVector sv = symmetric_expansion(a, b);
    for (std::int64_t t : {d, -d}) {
      InsertionResult ir = insert_central_twists(sv, t);
      if (!(ir.slope == pq)) continue;
      ReplacementSolution sol;
      sol.a = a;
      sol.b = b;
      sol.central_twist = t;
      sol.expansion = sv;
      // record which +- pair of the formula this instance realises
      bool tagged = false;
      for (int e1 : {1, -1}) {
        for (int e2 : {1, -1}) {
          if (tagged) continue;
          std::int64_t num = 1 + e1 * d * a * b;
          std::int64_t den = e2 * d * a * a;
          if (Slope(num, den) == pq) {
            sol.sign_num = e1;
            sol.sign_den = e2;
            tagged = true;
          }
        }
      }
      out.push_back(sol);
    }
  }
  return out;
}

}  // namespace splitkit
