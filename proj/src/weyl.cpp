#include "weylkit/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "weylkit/errors.hpp"
#include "weylkit/poly.hpp"

namespace weylkit::weyl {

namespace {

void check_square(const Eigen::MatrixXi& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw InvalidDocument(std::string(what) + " must be square and nonempty");
}

long lcm_long(long a, long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

CoxeterSystem CoxeterSystem::from_gcm(const Eigen::MatrixXi& a) {
  gcm::GeneralizedCartanMatrix g = gcm::validate_gcm(a);
  CoxeterSystem sys;
  sys.n = g.n;
  sys.gcm = a;
  sys.cox = gcm::coxeter_matrix_of(g);
  sys.crystallographic = true;
  sys.srefl.reserve(sys.n);
  sys.scorefl.reserve(sys.n);
  for (int i = 0; i < sys.n; ++i) {
    IMat s = imat_identity(sys.n);
    IMat t = imat_identity(sys.n);
    for (int j = 0; j < sys.n; ++j) {
      s(i, j) -= Int(a(i, j));
      t(i, j) -= Int(a(j, i));
    }
    sys.srefl.push_back(std::move(s));
    sys.scorefl.push_back(std::move(t));
  }
  return sys;
}

CoxeterSystem CoxeterSystem::from_coxeter_matrix(const Eigen::MatrixXi& m) {
  check_square(m, "coxeter matrix");
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 1)
      throw InvalidDocument("coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i))
        throw InvalidDocument("coxeter matrix must be symmetric");
      if (i != j && m(i, j) != 0 && m(i, j) < 2)
        throw InvalidDocument("off-diagonal coxeter entries are 0 or >= 2");
    }
  }
  bool cryst = true;
  for (int i = 0; i < n && cryst; ++i)
    for (int j = i + 1; j < n && cryst; ++j) {
      int v = m(i, j);
      cryst = v == 0 || v == 2 || v == 3 || v == 4 || v == 6;
    }
  if (cryst) {
    CoxeterSystem sys = from_gcm(gcm::canonical_gcm_of(m));
    sys.cox = m;
    return sys;
  }

  CoxeterSystem sys;
  sys.n = n;
  sys.cox = m;
  sys.crystallographic = false;
  long big = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) > 2) big = lcm_long(big, m(i, j));
  sys.actx = AlgebraicContext::make(big);
  // Gram-style matrix B(i,j) = -2cos(pi/m_ij); infinite bonds use -2.
  AMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b(i, j) = Alg(sys.actx, {Int(2)});
      } else if (m(i, j) == 0) {
        b(i, j) = Alg(sys.actx, {Int(-2)});
      } else {
        Alg c(sys.actx, sys.actx->two_cos(big / m(i, j)));
        b(i, j) = Alg(sys.actx, {Int(0)}) - c;
      }
    }
  sys.arefl.reserve(n);
  for (int i = 0; i < n; ++i) {
    AMat s = amat_identity(sys.actx, n);
    for (int j = 0; j < n; ++j) s(i, j) = s(i, j) - b(i, j);
    sys.arefl.push_back(std::move(s));
  }
  return sys;
}

WeylElement identity_element(const CoxeterSystem& sys) {
  WeylElement e;
  e.integral = sys.crystallographic;
  if (sys.crystallographic)
    e.im = imat_identity(sys.n);
  else
    e.am = amat_identity(sys.actx, sys.n);
  return e;
}

WeylElement element_of_word(const CoxeterSystem& sys,
                            const std::vector<int>& word) {
  WeylElement w = identity_element(sys);
  for (int g : word) {
    if (g < 0 || g >= sys.n)
      throw BadGenerator("generator index " + std::to_string(g + 1) +
                         " out of range 1.." + std::to_string(sys.n));
    if (w.integral)
      w.im = (w.im * sys.srefl[g]).eval();
    else
      w.am = (w.am * sys.arefl[g]).eval();
  }
  return w;
}

WeylElement multiply(const CoxeterSystem& sys, const WeylElement& a,
                     const WeylElement& b) {
  (void)sys;
  WeylElement r;
  r.integral = a.integral;
  if (a.integral)
    r.im = (a.im * b.im).eval();
  else
    r.am = (a.am * b.am).eval();
  return r;
}

WeylElement power(const CoxeterSystem& sys, const WeylElement& a, long e) {
  WeylElement r = identity_element(sys);
  WeylElement base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = multiply(sys, r, base);
    base = multiply(sys, base, base);
  }
  return r;
}

bool equal(const WeylElement& a, const WeylElement& b) {
  if (a.integral != b.integral) return false;
  return a.integral ? imat_equal(a.im, b.im) : amat_equal(a.am, b.am);
}

bool is_identity(const CoxeterSystem& sys, const WeylElement& a) {
  return equal(a, identity_element(sys));
}

std::string element_key(const WeylElement& a) {
  return a.integral ? imat_key(a.im) : amat_key(a.am);
}

namespace {

// Least i whose column is nonpositive, -1 if none (then w = identity).
int descent_index(const CoxeterSystem& sys, const WeylElement& w) {
  for (int i = 0; i < sys.n; ++i) {
    bool neg = true;
    for (int r = 0; r < sys.n && neg; ++r) {
      if (w.integral)
        neg = w.im(r, i) <= 0;
      else
        neg = w.am(r, i).sign() <= 0;
    }
    if (neg) return i;
  }
  return -1;
}

}  // namespace

LengthWord length_and_reduced_word(const CoxeterSystem& sys,
                                   const WeylElement& w) {
  LengthWord out;
  WeylElement cur = w;
  std::vector<int> picked;
  while (true) {
    int i = descent_index(sys, cur);
    if (i < 0) {
      if (!is_identity(sys, cur))
        throw ArithmeticOverflow("descent failed on a non-identity matrix");
      break;
    }
    picked.push_back(i);
    if (cur.integral)
      cur.im = (cur.im * sys.srefl[i]).eval();
    else
      cur.am = (cur.am * sys.arefl[i]).eval();
  }
  out.length = static_cast<long>(picked.size());
  out.word.assign(picked.rbegin(), picked.rend());
  return out;
}

long length_of(const CoxeterSystem& sys, const WeylElement& w) {
  return length_and_reduced_word(sys, w).length;
}

namespace {

constexpr std::int64_t kCoordLimit = std::int64_t(1) << 60;

// x_i' = x_i - sum_j A(i,j) x_j, the i-th simple reflection on root
// coordinates. Throws rather than wrap on adversarial depth/rank input.
I64Vec reflect_coords(const Eigen::MatrixXi& a, int i, const I64Vec& x,
                      bool transpose) {
  __int128 acc = 0;
  const int n = static_cast<int>(x.size());
  for (int j = 0; j < n; ++j) {
    int c = transpose ? a(j, i) : a(i, j);
    acc += static_cast<__int128>(c) * x[j];
  }
  __int128 nv = static_cast<__int128>(x[i]) - acc;
  if (nv > kCoordLimit || nv < -kCoordLimit)
    throw ArithmeticOverflow("root coordinates exceed 2^60; lower the depth");
  I64Vec y = x;
  y[i] = static_cast<std::int64_t>(nv);
  return y;
}

std::string coord_key(const I64Vec& x) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < x.size(); ++i) os << x[i] << ',';
  return os.str();
}

bool all_nonneg(const I64Vec& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < 0) return false;
  return true;
}

std::int64_t height_of(const I64Vec& x) {
  std::int64_t h = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) h += x[i];
  return h;
}

bool coord_lex_less(const I64Vec& a, const I64Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<Root> enumerate_roots(const CoxeterSystem& sys, int depth,
                                  long cap) {
  if (!sys.crystallographic)
    throw NotCrystallographic("root enumeration needs an integral system");
  if (depth < 0) throw UsageError("depth must be nonnegative");
  const int n = sys.n;
  std::vector<Root> all;
  std::set<std::string> seen;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.x = I64Vec::Zero(n);
    r.y = I64Vec::Zero(n);
    r.x[i] = 1;
    r.y[i] = 1;
    r.layer = 0;
    seen.insert(coord_key(r.x));
    all.push_back(r);
    layer.push_back(std::move(r));
  }
  const int last_layer = std::max(0, depth - 1);
  for (int t = 1; t <= last_layer; ++t) {
    std::vector<Root> next;
    for (const Root& r : layer) {
      for (int i = 0; i < n; ++i) {
        I64Vec x = reflect_coords(sys.gcm, i, r.x, false);
        if (!all_nonneg(x)) continue;  // only -alpha_i maps negative
        std::string key = coord_key(x);
        if (!seen.insert(key).second) continue;
        Root nr;
        nr.x = std::move(x);
        nr.y = reflect_coords(sys.gcm, i, r.y, true);
        nr.layer = t;
        all.push_back(nr);
        next.push_back(std::move(nr));
        if (static_cast<long>(all.size()) > cap)
          throw SearchBudgetExceeded("root enumeration exceeded cap " +
                                     std::to_string(cap));
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;  // closed (finite root system)
  }
  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
    std::int64_t ha = height_of(a.x), hb = height_of(b.x);
    if (ha != hb) return ha < hb;
    return coord_lex_less(a.x, b.x);
  });
  return all;
}

namespace {

// <alpha, beta^v> = y_b^T A x_a, exact in 128-bit.
__int128 pairing(const Eigen::MatrixXi& a, const I64Vec& xa,
                 const I64Vec& yb) {
  __int128 acc = 0;
  const int n = static_cast<int>(xa.size());
  for (int i = 0; i < n; ++i) {
    if (yb[i] == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < n; ++j)
      row += static_cast<__int128>(a(i, j)) * xa[j];
    acc += static_cast<__int128>(yb[i]) * row;
  }
  return acc;
}

bool same_coords(const I64Vec& a, const I64Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool opposite_coords(const I64Vec& a, const I64Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

}  // namespace

bool walls_cross(const CoxeterSystem& sys, const Root& a, const Root& b) {
  if (!sys.crystallographic)
    throw NotCrystallographic("wall crossing needs an integral system");
  if (same_coords(a.x, b.x) || opposite_coords(a.x, b.x))
    throw SameWall("the two roots span the same wall");
  __int128 p1 = pairing(sys.gcm, a.x, b.y);
  __int128 p2 = pairing(sys.gcm, b.x, a.y);
  // The reflections generate a finite dihedral group iff the product of the
  // two pairings lies in {0,1,2,3} (rotation trace p-2 stays below 2).
  if (p1 == 0 || p2 == 0) return true;
  bool big1 = p1 >= 2 || p1 <= -2;
  bool big2 = p2 >= 2 || p2 <= -2;
  if (big1 && big2) return false;
  __int128 p = p1 * p2;
  return p >= 0 && p <= 3;
}

std::optional<std::pair<Root, Root>> find_separated_wall_pair(
    const CoxeterSystem& sys, int depth, long cap) {
  if (!sys.crystallographic)
    throw NotCrystallographic("wall search needs an integral system");
  gcm::MatrixType ty = gcm::classify_type(gcm::validate_gcm(sys.gcm));
  if (ty != gcm::MatrixType::Indefinite)
    throw WrongType("separated walls exist only in indefinite type");
  std::vector<Root> roots = enumerate_roots(sys, depth, cap);
  const std::size_t r = roots.size();
  const std::size_t words = (r + 63) / 64;
  // crossing relation as bitset rows; row i bit j set iff walls i and j cross
  std::vector<std::vector<std::uint64_t>> cross(
      r, std::vector<std::uint64_t>(words, 0));
  std::vector<I64Vec> ax(r);  // A * x, so pairings become plain dots
  for (std::size_t i = 0; i < r; ++i) {
    I64Vec v = I64Vec::Zero(sys.n);
    for (int p = 0; p < sys.n; ++p) {
      __int128 acc = 0;
      for (int q = 0; q < sys.n; ++q)
        acc += static_cast<__int128>(sys.gcm(p, q)) * roots[i].x[q];
      if (acc > kCoordLimit || acc < -kCoordLimit)
        throw ArithmeticOverflow("pairing overflow; lower the depth");
      v[p] = static_cast<std::int64_t>(acc);
    }
    ax[i] = std::move(v);
  }
  auto dot = [&](const I64Vec& a, const I64Vec& b) -> __int128 {
    __int128 acc = 0;
    for (Eigen::Index k = 0; k < a.size(); ++k)
      acc += static_cast<__int128>(a[k]) * b[k];
    return acc;
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      __int128 p1 = dot(ax[i], roots[j].y);
      __int128 p2 = dot(ax[j], roots[i].y);
      bool crossing;
      if (p1 == 0 || p2 == 0) {
        crossing = true;
      } else if ((p1 >= 2 || p1 <= -2) && (p2 >= 2 || p2 <= -2)) {
        crossing = false;
      } else {
        __int128 p = p1 * p2;
        crossing = p >= 0 && p <= 3;
      }
      if (crossing) {
        cross[i][j / 64] |= std::uint64_t(1) << (j % 64);
        cross[j][i / 64] |= std::uint64_t(1) << (i % 64);
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (cross[i][j / 64] >> (j % 64) & 1) continue;
      bool witness = false;
      for (std::size_t wdx = 0; wdx < words && !witness; ++wdx)
        witness = (cross[i][wdx] & cross[j][wdx]) != 0;
      if (!witness) return std::make_pair(roots[i], roots[j]);
    }
  }
  return std::nullopt;
}

std::vector<long> power_lengths(const CoxeterSystem& sys, const WeylElement& w,
                                int n) {
  std::vector<long> out;
  WeylElement cur = identity_element(sys);
  long base = -1;
  for (int i = 1; i <= n; ++i) {
    cur = multiply(sys, cur, w);
    long l = length_of(sys, cur);
    out.push_back(l);
    if (base < 0) base = l;
    if (l != base * i) break;
  }
  return out;
}

bool is_straight_up_to(const CoxeterSystem& sys, const WeylElement& w, int n) {
  std::vector<long> ls = power_lengths(sys, w, n);
  if (static_cast<int>(ls.size()) < n) return false;
  long base = ls.empty() ? 0 : ls[0];
  for (int i = 1; i <= n; ++i)
    if (ls[i - 1] != base * i) return false;
  return true;
}

MinConj min_length_conjugate(const CoxeterSystem& sys, const WeylElement& w,
                             long budget) {
  struct Entry {
    WeylElement elt;
    long length;
  };
  std::map<std::string, Entry> seen;
  std::queue<std::string> todo;
  std::string k0 = element_key(w);
  seen.emplace(k0, Entry{w, length_of(sys, w)});
  todo.push(k0);
  while (!todo.empty()) {
    Entry cur = seen.at(todo.front());
    todo.pop();
    for (int i = 0; i < sys.n; ++i) {
      WeylElement v = w;
      if (cur.elt.integral)
        v.im = (sys.srefl[i] * cur.elt.im * sys.srefl[i]).eval();
      else
        v.am = (sys.arefl[i] * cur.elt.am * sys.arefl[i]).eval();
      v.integral = cur.elt.integral;
      std::string key = element_key(v);
      if (seen.count(key)) continue;
      long l = length_of(sys, v);
      if (l > cur.length) continue;
      if (static_cast<long>(seen.size()) >= budget)
        throw SearchBudgetExceeded("conjugacy closure exceeded budget " +
                                   std::to_string(budget));
      seen.emplace(key, Entry{v, l});
      todo.push(key);
    }
  }
  long best = -1;
  for (const auto& [key, e] : seen)
    if (best < 0 || e.length < best) best = e.length;
  MinConj mc;
  mc.length = best;
  mc.explored = static_cast<long>(seen.size());
  bool have = false;
  for (const auto& [key, e] : seen) {
    if (e.length != best) continue;
    std::vector<int> word = length_and_reduced_word(sys, e.elt).word;
    if (!have || std::lexicographical_compare(word.begin(), word.end(),
                                              mc.word.begin(),
                                              mc.word.end())) {
      mc.elt = e.elt;
      mc.word = std::move(word);
      have = true;
    }
  }
  return mc;
}

const char* reg_verdict_name(RegVerdict v) {
  switch (v) {
    case RegVerdict::CertifiedCoxeterElement:
      return "CertifiedCoxeterElement";
    case RegVerdict::CertifiedByFixedSpaceSearch:
      return "CertifiedByFixedSpaceSearch";
    case RegVerdict::NotHyperbolic:
      return "NotHyperbolic";
    default:
      return "Inconclusive";
  }
}

const char* straight_verdict_name(StraightVerdict v) {
  switch (v) {
    case StraightVerdict::CertifiedStraight:
      return "CertifiedStraight";
    case StraightVerdict::CertifiedNotStraight:
      return "CertifiedNotStraight";
    default:
      return "Inconclusive";
  }
}

namespace {

// Torsion bound for the power loop: twice the largest finite bond order
// times the rank covers every finite-parabolic element order we meet.
long torsion_loop_bound(const CoxeterSystem& sys) {
  long m = 2;
  for (int i = 0; i < sys.n; ++i)
    for (int j = i + 1; j < sys.n; ++j)
      if (sys.cox(i, j) > m) m = sys.cox(i, j);
  return 2 * m * sys.n;
}

// Exact matrix order given that w^big = I.
long exact_order(const CoxeterSystem& sys, const WeylElement& w, long big) {
  for (long d = 1; d <= big; ++d) {
    if (big % d != 0) continue;
    if (is_identity(sys, power(sys, w, d))) return d;
  }
  return big;
}

}  // namespace

RegularityCertificate certify_regular(const CoxeterSystem& sys,
                                      const WeylElement& w, long k_bound,
                                      int root_depth, long root_cap,
                                      long conj_budget) {
  RegularityCertificate cert;
  cert.root_depth = root_depth;

  // Torsion first: a finite-order element is elliptic, never rank-one.
  long loop = torsion_loop_bound(sys);
  WeylElement cur = identity_element(sys);
  for (long j = 1; j <= loop; ++j) {
    cur = multiply(sys, cur, w);
    if (is_identity(sys, cur)) {
      cert.verdict = RegVerdict::NotHyperbolic;
      cert.torsion_branch = "power-loop";
      cert.torsion_order = j;
      return cert;
    }
  }
  if (sys.crystallographic) {
    ZPoly cp = char_poly(w.im);
    std::optional<long> co = cyclotomic_order(cp);
    if (co) {
      WeylElement wl = power(sys, w, *co);
      if (is_identity(sys, wl)) {
        cert.verdict = RegVerdict::NotHyperbolic;
        cert.torsion_branch = "charpoly";
        cert.torsion_order = exact_order(sys, w, *co);
        return cert;
      }
      // all eigenvalues are roots of unity yet w is not torsion
      cert.torsion_branch = "quasi-unipotent";
    } else {
      cert.torsion_branch = "infinite-order";
    }
  } else {
    cert.torsion_branch = "skipped";
    cert.note = "regularity search needs an integral system";
    return cert;  // Inconclusive; the power loop above still ran
  }

  long base_len = length_of(sys, w);
  if (k_bound <= 0) k_bound = 2 * std::max<long>(base_len, 1);
  cert.k_bound = k_bound;

  // Shortcut: in indefinite indecomposable type every Coxeter element is
  // regular, so a minimal conjugate using each generator exactly once
  // certifies on its own.
  bool indefinite = false;
  try {
    indefinite = gcm::classify_type(gcm::validate_gcm(sys.gcm)) ==
                 gcm::MatrixType::Indefinite;
  } catch (const Decomposable&) {
  }
  if (indefinite) {
    MinConj mc = min_length_conjugate(sys, w, conj_budget);
    if (mc.length == sys.n) {
      std::vector<int> sorted = mc.word;
      std::sort(sorted.begin(), sorted.end());
      bool full = static_cast<int>(sorted.size()) == sys.n;
      for (int i = 0; full && i < sys.n; ++i) full = sorted[i] == i;
      if (full) {
        cert.verdict = RegVerdict::CertifiedCoxeterElement;
        cert.coxeter_word = mc.word;
        return cert;
      }
    }
  }

  std::vector<Root> roots = enumerate_roots(sys, root_depth, root_cap);
  cert.root_count = static_cast<long>(roots.size());
  WeylElement wk = identity_element(sys);
  for (long k = 1; k <= k_bound; ++k) {
    wk = multiply(sys, wk, w);
    FixedSpaceRecord rec;
    rec.k = k;
    WeylElement w2k = multiply(sys, wk, wk);
    IMat shifted = w2k.im;
    for (int i = 0; i < sys.n; ++i) shifted(i, i) -= 1;
    rec.fixed_dim = sys.n - exact_rank(shifted);
    for (const Root& r : roots) {
      IVec x(sys.n);
      for (int i = 0; i < sys.n; ++i) x[i] = Int(r.x[i]);
      IVec img = wk.im * x;
      bool plus = true, minus = true;
      for (int i = 0; i < sys.n && (plus || minus); ++i) {
        if (img[i] != x[i]) plus = false;
        if (img[i] != -x[i]) minus = false;
      }
      if (plus || minus) ++rec.orbit_hits;
      IVec ker = shifted * x;
      bool zero = true;
      for (int i = 0; i < sys.n && zero; ++i) zero = ker[i] == 0;
      if (zero) ++rec.kernel_hits;
    }
    cert.fixed_space.push_back(rec);
    if (rec.orbit_hits > 0 || rec.kernel_hits > 0) {
      cert.note = "power " + std::to_string(k) + " stabilizes a wall";
      return cert;  // Inconclusive
    }
  }
  cert.verdict = RegVerdict::CertifiedByFixedSpaceSearch;
  return cert;
}

StraightnessCertificate certify_straight(const CoxeterSystem& sys,
                                         const WeylElement& w, int n_straight,
                                         long k_bound, int root_depth,
                                         long root_cap, long conj_budget) {
  StraightnessCertificate cert;
  cert.n_checked = n_straight;
  cert.base_length = length_of(sys, w);
  if (cert.base_length == 0) {
    cert.verdict = StraightVerdict::CertifiedStraight;
    cert.note = "identity";
    return cert;
  }
  cert.lengths = power_lengths(sys, w, n_straight);
  for (std::size_t i = 0; i < cert.lengths.size(); ++i) {
    if (cert.lengths[i] != cert.base_length * static_cast<long>(i + 1)) {
      cert.verdict = StraightVerdict::CertifiedNotStraight;
      cert.note = "length of power " + std::to_string(i + 1) + " is " +
                  std::to_string(cert.lengths[i]) + ", not " +
                  std::to_string(cert.base_length * static_cast<long>(i + 1));
      return cert;
    }
  }
  RegularityCertificate reg =
      certify_regular(sys, w, k_bound, root_depth, root_cap, conj_budget);
  cert.regularity = reg;
  if (reg.verdict == RegVerdict::NotHyperbolic) {
    // torsion with positive length: w^order = e kills the linear growth
    cert.verdict = StraightVerdict::CertifiedNotStraight;
    cert.note = "torsion of order " +
                std::to_string(reg.torsion_order.value_or(0));
    return cert;
  }
  MinConj mc = min_length_conjugate(sys, w, conj_budget);
  cert.min_conj = mc;
  if ((reg.verdict == RegVerdict::CertifiedCoxeterElement ||
       reg.verdict == RegVerdict::CertifiedByFixedSpaceSearch) &&
      mc.length == cert.base_length) {
    cert.verdict = StraightVerdict::CertifiedStraight;
    return cert;
  }
  cert.note = cert.note.empty() ? "regularity or minimality not certified"
                                : cert.note;
  return cert;
}

}  // namespace weylkit::weyl
