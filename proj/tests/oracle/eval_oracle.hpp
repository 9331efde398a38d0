#pragma once

// Exact-rational evaluation oracle. Everything here works on numbers t0 in Q,
// computed straight from the scalar matrix formulas; it shares no arithmetic
// with the Laurent/rational-function engine it is used to check.

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "wq/algebras.hpp"
#include "wq/monomial.hpp"

namespace oracle {

using Num = mpq_class;
using Mat = std::vector<std::vector<Num>>;

inline Num pw(const Num& t, int k) {
  Num r = 1;
  const Num base = k >= 0 ? t : Num(1 / t);
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}
inline Num sm(const Num& t, int a) { return pw(t, a) - pw(t, -a); }
inline Num sp(const Num& t, int a) { return pw(t, a) + pw(t, -a); }

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Num>(n, Num(0))); }

inline Mat m_dn(int n, const Num& t) {
  Mat m = zeros(static_cast<std::size_t>(n));
  auto set = [&](int i, int j, const Num& v) {
    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
  };
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; j <= n - 2; ++j) {
      const int lo = std::min(i, j), hi = std::max(i, j);
      set(i, j, sm(t, lo) * sp(t, n - 1 - hi) / sp(t, n - 1));
    }
  for (int i = 1; i <= n - 2; ++i) {
    set(n, i, sm(t, i) / sp(t, n - 1));
    set(n - 1, i, sm(t, i) / sp(t, n - 1));
  }
  set(n, n - 1, sm(t, n - 2) / (sp(t, 1) * sp(t, n - 1)));
  set(n - 1, n - 1, sm(t, n) / (sp(t, 1) * sp(t, n - 1)));
  set(n, n, sm(t, n) / (sp(t, 1) * sp(t, n - 1)));
  return m;
}

inline Mat m_e6(const Num& t) {
  Mat m = zeros(6);
  auto set = [&](int i, int j, const Num& v) {
    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
  };
  const Num d = sp(t, 6);
  const Num de = sp(t, 6) * sm(t, 3);
  for (auto [i, j] : {std::pair{1, 1}, {5, 5}}) set(i, j, sm(t, 1) * sm(t, 8) / de);
  for (auto [i, j] : {std::pair{1, 2}, {4, 5}}) set(i, j, sm(t, 1) * sm(t, 5) * sp(t, 2) / de);
  for (auto [i, j] : {std::pair{2, 2}, {4, 4}}) set(i, j, sm(t, 4) * sm(t, 5) / de);
  for (auto [i, j] : {std::pair{1, 3}, {2, 6}, {4, 6}, {3, 5}}) set(i, j, sm(t, 4) / d);
  for (auto [i, j] : {std::pair{2, 3}, {3, 4}}) set(i, j, sm(t, 4) * sp(t, 1) / d);
  set(3, 3, sm(t, 3) * sp(t, 1) * sp(t, 2) / d);
  for (auto [i, j] : {std::pair{1, 6}, {5, 6}}) set(i, j, sm(t, 1) * sp(t, 2) / d);
  set(3, 6, sm(t, 3) * sp(t, 2) / d);
  set(6, 6, sm(t, 4) * sp(t, 3) / (sp(t, 1) * d));
  for (auto [i, j] : {std::pair{1, 4}, {2, 5}}) set(i, j, sm(t, 2) * sm(t, 4) / de);
  set(2, 4, sm(t, 2) * sm(t, 4) * sp(t, 1) / de);
  set(1, 5, sm(t, 1) * sm(t, 4) / de);
  return m;
}

inline Mat m_g2(const Num& t) {
  const Num d = sp(t, 6);
  const Num m11 = sp(t, 3) * sm(t, 1) * sp(t, 2) / d;
  const Num m12 = sm(t, 3) * sp(t, 2) / d;
  const Num m22 = sm(t, 3) * sp(t, 1) * sp(t, 2) / d;
  return {{m11, m12}, {m12, m22}};
}

inline Mat m_of(const wq::AlgebraId& id, const Num& t) {
  switch (id.kind) {
    case wq::AlgebraKind::Dn: return m_dn(id.n, t);
    case wq::AlgebraKind::E6: return m_e6(t);
    case wq::AlgebraKind::G2: return m_g2(t);
  }
  throw std::logic_error("unreachable");
}

inline std::vector<int> d_degrees_of(const wq::AlgebraId& id) {
  switch (id.kind) {
    case wq::AlgebraKind::Dn: return std::vector<int>(static_cast<std::size_t>(id.n), 1);
    case wq::AlgebraKind::E6: return std::vector<int>(6, 1);
    case wq::AlgebraKind::G2: return {1, 3};
  }
  throw std::logic_error("unreachable");
}

inline Mat d_of(const wq::AlgebraId& id, const Num& t) {
  const auto deg = d_degrees_of(id);
  Mat d = zeros(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) d[i][i] = sm(t, deg[i]);
  return d;
}

/// The printed deformed Cartan matrices, as numbers.
inline Mat mtilde_of(const wq::AlgebraId& id, const Num& t) {
  if (id.kind == wq::AlgebraKind::G2) return {{sm(t, 2), -sm(t, 3)}, {-sm(t, 3), sm(t, 6)}};
  std::vector<std::pair<int, int>> edges;
  int n = 6;
  if (id.kind == wq::AlgebraKind::Dn) {
    n = id.n;
    for (int i = 1; i + 1 <= n - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 2, n);
  } else {
    edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
  }
  Mat m = zeros(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = sm(t, 2);
  for (auto [a, b] : edges) {
    m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -sm(t, 1);
    m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -sm(t, 1);
  }
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Gauss-Jordan over Q; throws on singular input.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv = zeros(n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("oracle: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Num s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Num f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline Num determinant(Mat a) {
  const std::size_t n = a.size();
  Num det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Num f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Value at t of the bracket symbol of two Y-monomials, term by term.
inline Num symbol(const wq::YMonomial& a, const wq::YMonomial& b, const Mat& m, const Num& t) {
  Num s = 0;
  for (const auto& fa : a.factors())
    for (const auto& fb : b.factors())
      s += Num(fa.exponent * fb.exponent) *
           m[static_cast<std::size_t>(fa.node - 1)][static_cast<std::size_t>(fb.node - 1)] *
           pw(t, fb.shift - fa.shift);
  return s;
}

}  // namespace oracle
