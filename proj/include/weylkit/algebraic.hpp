#pragma once

#include "weylkit/bigint.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/poly.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

namespace weylkit {

// Exact arithmetic in Z[c], c = 2*cos(pi/M), for the geometric
// representation of non-crystallographic Coxeter systems. Elements are
// polynomials in c reduced modulo the minimal polynomial psi of c; psi is
// extracted from the palindromic cyclotomic polynomial Phi_{2M} via the
// substitution z^k + z^{-k} = P_k(z + z^{-1}).
struct AlgebraicContext {
  long m = 2;  // c = 2 cos(pi/m); even by construction
  ZPoly psi;   // minimal polynomial of c, monic over Z
  int deg = 1;
  long double capprox = 0.0L;
  Rat lo, hi;  // isolating interval: c is the unique root of psi inside

  // P_k with P_k(2 cos t) = 2 cos(k t); P_0 = 2, P_1 = x.
  static ZPoly chebyshev_like(long k) {
    ZPoly pprev{Int(2)};
    if (k == 0) return pprev;
    ZPoly p{Int(0), Int(1)};
    for (long i = 1; i < k; ++i) {
      ZPoly nxt = poly_sub(poly_mul(ZPoly{Int(0), Int(1)}, p), pprev);
      pprev = std::move(p);
      p = std::move(nxt);
    }
    return p;
  }

  static std::shared_ptr<const AlgebraicContext> make(long m_lcm) {
    if (m_lcm > 1000)
      throw PrecisionExceeded(
          "finite Coxeter exponents above 1000 are not supported");
    auto ctx = std::make_shared<AlgebraicContext>();
    ctx->m = m_lcm;
    const long n2 = 2 * m_lcm;
    const ZPoly& phi = cyclotomic(n2);
    const int d = poly_deg(phi);
    // Phi_{2M} is palindromic of even degree for M >= 2.
    const int half = d / 2;
    ZPoly psi{phi[static_cast<size_t>(half)]};
    for (int j = 1; j <= half; ++j)
      psi = poly_add(psi, poly_scale(chebyshev_like(j),
                                     phi[static_cast<size_t>(half - j)]));
    poly_trim(psi);
    ctx->psi = psi;
    ctx->deg = poly_deg(psi);
    ctx->capprox = 2.0L * std::cos(static_cast<long double>(M_PI) /
                                   static_cast<long double>(m_lcm));
    // c is the largest root of psi; psi > 0 beyond it and psi(2) > 0.
    ctx->hi = Rat(2);
    Rat step(1, 1 << 20);
    Rat lo(static_cast<long long>(ctx->capprox * (1 << 20)) - 2, 1 << 20);
    int guard = 0;
    while (poly_eval<Rat>(psi, lo) >= 0) {
      lo -= step;
      if (++guard > 64)
        throw PrecisionExceeded("could not isolate 2cos(pi/m)");
    }
    ctx->lo = lo;
    return ctx;
  }

  // Value of 2 cos(k*pi/m) as a reduced coefficient vector.
  std::vector<Int> two_cos(long k) const {
    ZPoly p = chebyshev_like(k);
    ZPoly q, r;
    poly_divmod_monic(p, psi, q, r);
    return r;
  }
};

// Scalar in Z[c]. A null context marks rational-integer constants (needed so
// Eigen can make Scalar(0)/Scalar(1) without a context); contexts unify on
// the first binary operation. Coefficient vectors are trimmed, so equality
// is plain vector equality.
class Alg {
 public:
  Alg() = default;
  explicit Alg(long v) { set_const(Int(v)); }
  explicit Alg(int v) { set_const(Int(v)); }
  explicit Alg(const Int& v) { set_const(v); }
  Alg(const AlgebraicContext* ctx, ZPoly coeffs) : ctx_(ctx) {
    c_ = std::move(coeffs);
    reduce();
  }
  // The owner of the shared_ptr (the Coxeter system) outlives every scalar.
  Alg(const std::shared_ptr<const AlgebraicContext>& ctx, ZPoly coeffs)
      : Alg(ctx.get(), std::move(coeffs)) {}

  const ZPoly& coeffs() const { return c_; }
  const AlgebraicContext* ctx() const { return ctx_; }

  bool is_zero() const { return c_.empty(); }

  friend Alg operator+(const Alg& a, const Alg& b) {
    return Alg(unify(a, b), poly_add(a.c_, b.c_));
  }
  friend Alg operator-(const Alg& a, const Alg& b) {
    return Alg(unify(a, b), poly_sub(a.c_, b.c_));
  }
  friend Alg operator-(const Alg& a) { return Alg(a.ctx_, poly_scale(a.c_, Int(-1))); }
  friend Alg operator*(const Alg& a, const Alg& b) {
    return Alg(unify(a, b), poly_mul(a.c_, b.c_));
  }
  Alg& operator+=(const Alg& o) { return *this = *this + o; }
  Alg& operator-=(const Alg& o) { return *this = *this - o; }
  Alg& operator*=(const Alg& o) { return *this = *this * o; }
  friend bool operator==(const Alg& a, const Alg& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }

  // Exact sign: -1, 0, +1. Long-double screen first, rational interval
  // bisection on the isolating interval of c when the screen is ambiguous.
  int sign() const {
    if (c_.empty()) return 0;
    if (c_.size() == 1) return c_[0] < 0 ? -1 : (c_[0] > 0 ? 1 : 0);
    // non-constant value requires a context
    if (!ctx_) throw PrecisionExceeded("algebraic value without context");
    long double acc = 0.0L, mag = 0.0L;
    for (size_t i = c_.size(); i-- > 0;) {
      long double co = static_cast<long double>(c_[i]);
      acc = acc * ctx_->capprox + co;
      mag = mag * std::abs(ctx_->capprox) + std::abs(co);
    }
    long double err =
        mag * static_cast<long double>(c_.size() + 2) * 1e-17L;
    if (std::abs(acc) > err) return acc > 0 ? 1 : -1;
    // Exact fallback. psi is irreducible, so a nonzero reduced value cannot
    // vanish at c; bisection terminates.
    Rat lo = ctx_->lo, hi = ctx_->hi;
    for (int it = 0; it < 4096; ++it) {
      Rat flo, fhi;
      interval_eval(lo, hi, flo, fhi);
      if (flo > 0) return 1;
      if (fhi < 0) return -1;
      Rat mid = (lo + hi) / 2;
      if (poly_eval<Rat>(ctx_->psi, mid) < 0)
        lo = mid;
      else
        hi = mid;
    }
    throw PrecisionExceeded("sign bisection did not converge");
  }

  std::string key() const {
    std::string k;
    for (const auto& x : c_) {
      k += x.str();
      k += '.';
    }
    return k;
  }

 private:
  static const AlgebraicContext* unify(const Alg& a, const Alg& b) {
    return a.ctx_ ? a.ctx_ : b.ctx_;
  }

  void set_const(const Int& v) {
    c_.clear();
    if (v != 0) c_.push_back(v);
  }

  void reduce() {
    poly_trim(c_);
    if (ctx_ && poly_deg(c_) >= ctx_->deg) {
      ZPoly q, r;
      poly_divmod_monic(c_, ctx_->psi, q, r);
      c_ = std::move(r);
    }
  }

  // Horner over the interval [lo, hi] containing c > 0.
  void interval_eval(const Rat& lo, const Rat& hi, Rat& out_lo,
                     Rat& out_hi) const {
    Rat a(0), b(0);
    for (size_t i = c_.size(); i-- > 0;) {
      Rat cands[4] = {a * lo, a * hi, b * lo, b * hi};
      Rat mn = cands[0], mx = cands[0];
      for (int t = 1; t < 4; ++t) {
        if (cands[t] < mn) mn = cands[t];
        if (cands[t] > mx) mx = cands[t];
      }
      a = mn + Rat(c_[i]);
      b = mx + Rat(c_[i]);
    }
    out_lo = a;
    out_hi = b;
  }

  const AlgebraicContext* ctx_ = nullptr;
  ZPoly c_;
};

}  // namespace weylkit

// Must precede the first mention of Matrix<Alg> below.
namespace Eigen {
template <>
struct NumTraits<weylkit::Alg> {
  using Self = weylkit::Alg;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline Self epsilon() { return Self(0); }
  static inline Self dummy_precision() { return Self(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace weylkit {

using AMat = Eigen::Matrix<Alg, Eigen::Dynamic, Eigen::Dynamic>;
using AVec = Eigen::Matrix<Alg, Eigen::Dynamic, 1>;

inline std::string amat_key(const AMat& a) {
  std::string k;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      k += a(i, j).key();
      k += ';';
    }
  return k;
}

inline AMat amat_identity(const AlgebraicContext* ctx, Eigen::Index n) {
  AMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = Alg(ctx, i == j ? ZPoly{Int(1)} : ZPoly{});
  return m;
}

inline AMat amat_identity(const std::shared_ptr<const AlgebraicContext>& ctx,
                          Eigen::Index n) {
  return amat_identity(ctx.get(), n);
}

inline bool amat_equal(const AMat& a, const AMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace weylkit
