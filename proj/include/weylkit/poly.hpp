#pragma once

#include "weylkit/bigint.hpp"
#include "weylkit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace weylkit {

// Dense integer polynomial, coeffs[i] = coefficient of x^i, no trailing
// zeros; empty vector is the zero polynomial.
using ZPoly = std::vector<Int>;

inline void poly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

inline ZPoly poly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline ZPoly poly_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

inline ZPoly poly_scale(const ZPoly& a, const Int& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

// Division by a monic divisor; exact over the integers.
inline void poly_divmod_monic(const ZPoly& a, const ZPoly& d, ZPoly& q,
                              ZPoly& r) {
  assert(!d.empty() && d.back() == 1);
  r = a;
  q.assign(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, Int(0));
  while (r.size() >= d.size()) {
    Int c = r.back();
    size_t shift = r.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r.pop_back();  // leading term cancels exactly
    poly_trim(r);
  }
  poly_trim(q);
}

// Divides a by d when the division is exact; nullopt otherwise.
inline std::optional<ZPoly> poly_exact_div(const ZPoly& a, const ZPoly& d) {
  if (d.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (d.back() == 1) {
    ZPoly q, r;
    poly_divmod_monic(a, d, q, r);
    if (r.empty()) return q;
    return std::nullopt;
  }
  // Non-monic: pseudo-division would scale; only monic divisors are used.
  return std::nullopt;
}

template <class Num>
Num poly_eval(const ZPoly& p, const Num& x) {
  Num acc = Num(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Num(p[i]);
  return acc;
}

inline Int euler_phi(long n) {
  Int result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  if (m > 1) result -= result / m;
  return result;
}

// Cyclotomic polynomial via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline const ZPoly& cyclotomic(long n) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly num(static_cast<size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) {
      auto q = poly_exact_div(num, cyclotomic(d));
      assert(q);
      num = *q;
    }
  return cache.emplace(n, std::move(num)).first->second;
}

// If p (monic, p(0) != 0) is a product of cyclotomic polynomials, returns
// lcm of their indices (so the roots are exactly L-th roots of unity);
// nullopt when some factor is not cyclotomic.
inline std::optional<long> cyclotomic_order(ZPoly p) {
  poly_trim(p);
  if (p.empty() || p.back() != 1) return std::nullopt;
  int n = poly_deg(p);
  long l = 1;
  // phi(k) <= n forces k <= 2*n^2 + 6 comfortably at desk scale.
  long kmax = 2L * n * n + 6;
  for (long k = 1; k <= kmax && poly_deg(p) > 0; ++k) {
    if (euler_phi(k) > n) continue;
    const ZPoly& phi = cyclotomic(k);
    while (true) {
      auto q = poly_exact_div(p, phi);
      if (!q) break;
      p = *q;
      l = std::lcm(l, k);
    }
  }
  if (poly_is_one(p)) return l;
  return std::nullopt;
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; all divisions
// are exact over the integers.
inline ZPoly char_poly(const IMat& a) {
  const Eigen::Index n = a.rows();
  ZPoly c(static_cast<size_t>(n) + 1, Int(0));
  c[static_cast<size_t>(n)] = 1;
  IMat m = a;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k > 1) m = IMat(a * m);
    Int tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    Int ck = -tr / k;
    assert(-tr % k == 0);
    c[static_cast<size_t>(n - k)] = ck;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

// Fraction-free (Bareiss) determinant; input by value.
inline Int bareiss_det(IMat m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Exact rank over the rationals of an integer matrix. Plain rational
// Gaussian elimination: matrices here are tiny (rank of w^{2k} - I).
inline int exact_rank(const IMat& im) {
  const Eigen::Index rows = im.rows(), cols = im.cols();
  std::vector<std::vector<Rat>> m(static_cast<size_t>(rows),
                                  std::vector<Rat>(static_cast<size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(im(i, j));
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < static_cast<size_t>(cols) && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < static_cast<size_t>(cols); ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace weylkit
