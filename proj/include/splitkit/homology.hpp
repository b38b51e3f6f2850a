#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitkit/diagram.hpp"
#include "splitkit/moves.hpp"

namespace splitkit {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Finitely generated abelian group: torsion d1 | d2 | ... (each >= 2) + rank.
struct AbelianGroup {
  std::vector<std::int64_t> torsion;
  int rank = 0;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  bool trivial() const { return torsion.empty() && rank == 0; }

  std::string str() const {
    if (trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (!s.empty()) s += " + ";
      s += "Z/" + std::to_string(torsion[i]);
    }
    for (int i = 0; i < rank; ++i) {
      if (!s.empty()) s += " + ";
      s += "Z";
    }
    return s;
  }
};

// Diagonalize by unimodular row/column operations; returns the diagonal
// entries (absolute values, divisibility chain) padded with zeros.
inline std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  int n = std::min(m.rows, m.cols);
  std::vector<std::int64_t> diag(n, 0);
  int t = 0;
  while (t < n) {
    // minimal-absolute-value nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi == -1 || std::abs(m.at(i, j)) < std::abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        std::int64_t q = m.at(i, t) / m.at(t, t);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {  // remainder smaller than pivot: swap up
          for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          clean = false;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        std::int64_t q = m.at(t, j) / m.at(t, t);
        for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
    }
    diag[t] = std::abs(m.at(t, t));
    ++t;
  }
  // enforce d1 | d2 | ... via gcd/lcm exchanges
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (diag[i] == 0 && diag[j] != 0) std::swap(diag[i], diag[j]);
      if (diag[i] == 0 || diag[j] == 0) continue;
      if (diag[j] % diag[i] != 0) {
        std::int64_t g = std::gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
      }
    }
  return diag;
}

// Cokernel Z^rows / column-span(m).
inline AbelianGroup smith_normal_form(const IntMatrix& m) {
  auto diag = smith_diagonal(m);
  AbelianGroup g;
  int nonzero = 0;
  for (std::int64_t d : diag)
    if (d != 0) {
      ++nonzero;
      if (d >= 2) g.torsion.push_back(d);
    }
  g.rank = m.rows - nonzero;
  return g;
}

// ---- Goeritz matrix ------------------------------------------------------

namespace detail {

// 2-color the complementary regions so adjacent regions differ; corner k of a
// crossing lies between slots k and k+1.  Returns one color bit per face.
inline std::vector<int> face_coloring(const Diagram& d,
                                      const std::vector<Face>& fs) {
  std::vector<std::vector<int>> corner_face(
      d.crossing_count(), std::vector<int>(4, -1));
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
    for (const Endpoint& e : fs[fi].corners) corner_face[e.crossing][e.slot] = fi;
  std::vector<int> col(fs.size(), -1);
  if (!fs.empty()) col[0] = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int ci = 0; ci < d.crossing_count(); ++ci)
      for (int k = 0; k < 4; ++k) {
        int f1 = corner_face[ci][k], f2 = corner_face[ci][(k + 1) % 4];
        for (int rep = 0; rep < 2; ++rep) {
          if (col[f1] != -1 && col[f2] == -1) {
            col[f2] = 1 - col[f1];
            progress = true;
          }
          std::swap(f1, f2);
        }
        if (col[f1] != -1 && col[f2] != -1 && col[f1] == col[f2])
          throw DiagramError("diagram is not checkerboard colorable");
      }
  }
  return col;
}

}  // namespace detail

// Standard Goeritz matrix of a connected diagram: index the white regions,
// accumulate crossing signs between adjacent white pairs, delete one region.
// Any coloring/deletion choice yields the same cokernel.
inline IntMatrix goeritz_matrix(const Diagram& d) {
  if (d.crossing_count() == 0 && d.free_loops() <= 1) return IntMatrix(0, 0);
  if (d.piece_count() + d.free_loops() != 1)
    throw DiagramError("goeritz_matrix requires a connected diagram");
  auto fs = faces(d);
  auto col = detail::face_coloring(d, fs);
  std::vector<std::vector<int>> corner_face(
      d.crossing_count(), std::vector<int>(4, -1));
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
    for (const Endpoint& e : fs[fi].corners) corner_face[e.crossing][e.slot] = fi;
  std::vector<int> white;
  std::vector<int> widx(fs.size(), -1);
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
    if (col[fi] == 0) {
      widx[fi] = static_cast<int>(white.size());
      white.push_back(fi);
    }
  int mfull = static_cast<int>(white.size());
  IntMatrix G(mfull, mfull);
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const Crossing& c = d.xs[ci];
    int k0 = col[corner_face[ci][0]] == 0 ? 0 : 1;  // white corner pair
    int i = widx[corner_face[ci][k0]];
    int j = widx[corner_face[ci][(k0 + 2) % 4]];
    // crossing type relative to the under-strand entry
    int eta = (k0 % 2) == (c.under_in % 2) ? 1 : -1;
    if (i != j) {
      G.at(i, j) -= eta;
      G.at(j, i) -= eta;
    }
  }
  for (int i = 0; i < mfull; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < mfull; ++j)
      if (j != i) s += G.at(i, j);
    G.at(i, i) = -s;
  }
  IntMatrix H(mfull - 1, mfull - 1);  // delete the last white region
  for (int i = 0; i + 1 < mfull; ++i)
    for (int j = 0; j + 1 < mfull; ++j) H.at(i, j) = G.at(i, j);
  return H;
}

// H1 of the double cover of S^3 branched over the link.
inline AbelianGroup branched_cover_h1(const Diagram& d) {
  return smith_normal_form(goeritz_matrix(d));
}

// |det G|: the link determinant.
inline std::int64_t determinant(const Diagram& d) {
  auto diag = smith_diagonal(goeritz_matrix(d));
  std::int64_t p = 1;
  for (std::int64_t v : diag) p *= v;
  return p < 0 ? -p : p;
}

// ---- second-homology rule ------------------------------------------------

struct H2Rule {
  bool holds = false;
  std::string case_tag;
  std::string explanation;
};

// Case analysis for H_2(M - int N(K), bdry M) != 0, where L' is the sublink
// meeting the crossing disc.
inline H2Rule h2_nonzero_rule(int num_components, int sublink_size,
                              const std::vector<std::vector<std::int64_t>>& lk,
                              const std::vector<int>& sublink_choice) {
  if (num_components < 2)
    throw std::invalid_argument("h2_nonzero_rule needs at least 2 components");
  if (sublink_size != 1 && sublink_size != 2)
    throw std::invalid_argument("sublink size must be 1 or 2");
  if (static_cast<int>(sublink_choice.size()) != sublink_size)
    throw std::invalid_argument("sublink choice inconsistent with size");
  for (int c : sublink_choice)
    if (c < 0 || c >= num_components)
      throw std::invalid_argument("sublink component out of range");
  if (num_components >= 4)
    return {true, "boundary-count",
            "with |L| >= 4 the manifold has at least two boundary tori, so "
            "half-lives-half-dies forces nonzero relative H2"};
  if (num_components == 3)
    return {true, "seifert-surface",
            "a Seifert surface for the third component gives a nonzero "
            "relative class; assumes the standing hypotheses (hyperbolic, "
            "2-string prime) which are not verified here"};
  // |L| == 2
  if (sublink_size == 2)
    throw std::invalid_argument(
        "with |L| = 2 the crossing disc meets a single component");
  int s = sublink_choice[0];
  std::int64_t l = lk.at(s).at(1 - s);
  if (l == 0)
    return {true, "two-component-zero-lk",
            "lk(L', L - L') = 0, so the longitude of the spanning surface is "
            "null-homologous in the complement"};
  return {false, "two-component-zero-lk",
          "lk(L', L - L') = " + std::to_string(l) + " is nonzero"};
}

}  // namespace splitkit
