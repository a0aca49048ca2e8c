#pragma once

// Reference implementations for the test suite. Deliberately naive: box
// odometers with direct quadratic checks, Leibniz determinants, hand
// expansions of the classes. Nothing here calls the slice enumerator, the
// HNF or the residual helpers.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using I = std::int64_t;
using Vec = std::vector<I>;
using Mat = std::vector<Vec>;

inline I dot(const Vec& a, const Vec& b) {
  I s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec mul(const Mat& g, const Vec& x) {
  Vec y(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) y[i] = dot(g[i], x);
  return y;
}

inline I form(const Mat& g, const Vec& x, const Vec& y) { return dot(x, mul(g, y)); }

/// Permutation-sum determinant; fine up to n = 10.
inline I leibniz_det(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  I total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    I term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Calls visit(x, Gx) for every x in [-r, r]^n, updating Gx incrementally.
inline void box_walk(const Mat& g, I r, const std::function<void(const Vec&, const Vec&)>& visit) {
  const std::size_t n = g.size();
  Vec x(n, -r);
  Vec gx = mul(g, x);
  for (;;) {
    visit(x, gx);
    std::size_t i = 0;
    while (i < n && x[i] == r) {
      for (std::size_t k = 0; k < n; ++k) gx[k] -= 2 * r * g[k][i];
      x[i] = -r;
      ++i;
    }
    if (i == n) return;
    ++x[i];
    for (std::size_t k = 0; k < n; ++k) gx[k] += g[k][i];
  }
}

/// Every x in the box with (x - h)^2 = (x - 2h)^2 = target, checked on the
/// two squares as written (no reduction to a linear plus a quadratic condition).
inline std::vector<Vec> witness_box(const Mat& g, const Vec& h, I r, I target) {
  const Vec gh = mul(g, h);
  const I h2 = dot(h, gh);
  std::vector<Vec> out;
  box_walk(g, r, [&](const Vec& x, const Vec& gx) {
    const I x2 = dot(x, gx);
    const I xh = dot(x, gh);
    if (x2 - 2 * xh + h2 == target && x2 - 4 * xh + 4 * h2 == target) out.push_back(x);
  });
  return out;
}

/// (S, T, U, V) over doubled values in [-r, r]^4 solving the two square
/// conditions directly. With H = alpha L - sum beta_k F_k and
/// M = alpha' L - sum beta'_k F_k, beta' = beta + s, alpha' = sum beta'_k:
/// (M - H)^2 = (M - 2H)^2 = -4, where L^2 = 4, F_k^2 = -8 and the F_k are
/// orthogonal to L and to each other. Admissible: beta' keeps
/// beta'_1 + beta'_2 and beta'_3 + beta'_4 integral.
inline std::vector<std::array<I, 4>> stuv_box(const std::array<I, 4>& beta_doubled, I r) {
  std::vector<std::array<I, 4>> out;
  const I A = beta_doubled[0] + beta_doubled[1] + beta_doubled[2] + beta_doubled[3];
  // 4 X^2 for X = (l/2) L - sum (f_k/2) F_k.
  auto square4 = [](I l, const std::array<I, 4>& f) {
    I s = 4 * l * l;
    for (I v : f) s -= 8 * v * v;
    return s;
  };
  std::array<I, 4> s{};
  for (s[0] = -r; s[0] <= r; ++s[0])
    for (s[1] = -r; s[1] <= r; ++s[1])
      for (s[2] = -r; s[2] <= r; ++s[2])
        for (s[3] = -r; s[3] <= r; ++s[3]) {
          const I a = s[0] + s[1] + s[2] + s[3];
          std::array<I, 4> m2h{};
          for (int k = 0; k < 4; ++k) m2h[k] = s[k] - beta_doubled[k];
          if (square4(a, s) != -16) continue;
          if (square4(a - A, m2h) != -16) continue;
          if ((beta_doubled[0] + s[0] + beta_doubled[1] + s[1]) % 2 != 0) continue;
          if ((beta_doubled[2] + s[2] + beta_doubled[3] + s[3]) % 2 != 0) continue;
          out.push_back(s);
        }
  return out;
}

/// Deterministic generator shared by the property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'b0a1u);
  return gen;
}

inline I uniform(I lo, I hi) { return std::uniform_int_distribution<I>(lo, hi)(rng()); }

}  // namespace oracle
