#include "weylkit/gprod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "weylkit/errors.hpp"

namespace weylkit::gprod {

long long VertexGroup::mul(long long a, long long b) const {
  if (!is_cyclic()) return table(static_cast<int>(a), static_cast<int>(b));
  if (order == 0) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
      throw ArithmeticOverflow("infinite cyclic exponent overflow");
    return r;
  }
  return (a + b) % order;
}

long long VertexGroup::inv(long long a) const {
  if (!is_cyclic()) {
    for (int b = 0; b < order; ++b)
      if (table(static_cast<int>(a), b) == 0) return b;
    throw InvalidDocument("table row without an inverse");
  }
  if (order == 0) return -a;
  return (order - a) % order;
}

void VertexGroup::check_element(long long g) const {
  if (order == 0) return;
  if (g < 0 || g >= order)
    throw BadSyllable("element " + std::to_string(g) +
                      " outside 0.." + std::to_string(order - 1));
}

void VertexGroup::validate() const {
  if (is_cyclic()) {
    if (order < 0 || order == 1)
      throw InvalidDocument("cyclic order must be 0 (infinite) or >= 2");
    return;
  }
  const int n = static_cast<int>(table.rows());
  if (n < 2 || table.cols() != n)
    throw InvalidDocument("multiplication table must be square, order >= 2");
  if (order != n) throw InvalidDocument("table size disagrees with order");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table(i, j) < 0 || table(i, j) >= n)
        throw InvalidDocument("table entry out of range");
  for (int j = 0; j < n; ++j)
    if (table(0, j) != j || table(j, 0) != j)
      throw InvalidDocument("element 0 must be the identity");
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      row[table(i, j)] = 1;
      col[table(j, i)] = 1;
    }
    for (int j = 0; j < n; ++j)
      if (!row[j] || !col[j])
        throw InvalidDocument("table is not a Latin square");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table(table(i, j), k) != table(i, table(j, k)))
          throw InvalidDocument("table is not associative");
}

int GraphProductSpec::vertex_index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names[i] == name) return i;
  throw BadSyllable("unknown vertex '" + name + "'");
}

void GraphProductSpec::validate() const {
  const int k = n();
  if (k == 0) throw InvalidDocument("graph product needs at least one vertex");
  std::set<std::string> uniq(names.begin(), names.end());
  if (static_cast<int>(uniq.size()) != k)
    throw InvalidDocument("vertex names must be distinct");
  for (const std::string& s : names)
    if (s.empty()) throw InvalidDocument("vertex names must be nonempty");
  if (static_cast<int>(groups.size()) != k ||
      static_cast<int>(adj.size()) != k ||
      static_cast<int>(distinguished.size()) != k)
    throw InvalidDocument("vertex data arrays disagree in size");
  for (const VertexGroup& g : groups) g.validate();
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(adj[i].size()) != k)
      throw InvalidDocument("adjacency rows disagree in size");
    if (adj[i][i]) throw InvalidDocument("graph has a loop");
    for (int j = 0; j < k; ++j)
      if (adj[i][j] != adj[j][i])
        throw InvalidDocument("adjacency must be symmetric");
  }
  for (int i = 0; i < k; ++i) {
    groups[i].check_element(distinguished[i]);
    if (distinguished[i] == 0)
      throw InvalidDocument("distinguished element of '" + names[i] +
                            "' must not be the identity");
  }
}

namespace {

// One left-to-right pass of the stack rewriting. A syllable merges with the
// nearest same-vertex syllable reachable through commuting ones, otherwise
// it lands at the end. A merge to the identity erases a syllable, which can
// expose merges across the gap, hence the fixpoint loop in normal_form.
Word reduce_pass(const GraphProductSpec& spec, const Word& in, bool* erased) {
  Word out;
  out.reserve(in.size());
  for (const Syllable& s : in) {
    if (s.g == 0) continue;
    bool placed = false;
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
      if (out[i].v == s.v) {
        long long g = spec.groups[s.v].mul(out[i].g, s.g);
        if (g == 0) {
          out.erase(out.begin() + i);
          *erased = true;
        } else {
          out[i].g = g;
        }
        placed = true;
        break;
      }
      if (!spec.commute(out[i].v, s.v)) break;
    }
    if (!placed) out.push_back(s);
  }
  return out;
}

}  // namespace

Word normal_form(const GraphProductSpec& spec, Word w) {
  for (const Syllable& s : w) {
    if (s.v < 0 || s.v >= spec.n())
      throw BadSyllable("vertex index " + std::to_string(s.v) +
                        " out of range");
    spec.groups[s.v].check_element(s.g);
  }
  bool erased = true;
  while (erased) {
    erased = false;
    w = reduce_pass(spec, w, &erased);
  }
  // canonical shuffle: emit the least front-movable vertex first
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q)
        movable = spec.commute(w[q].v, w[p].v);
      if (movable && (best == w.size() || w[p].v < w[best].v)) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

Word gp_inverse(const GraphProductSpec& spec, const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back({it->v, spec.groups[it->v].inv(it->g)});
  return normal_form(spec, r);
}

Word gp_mul(const GraphProductSpec& spec, const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return normal_form(spec, r);
}

Word gp_pow(const GraphProductSpec& spec, const Word& a, long e) {
  if (e < 0) return gp_pow(spec, gp_inverse(spec, a), -e);
  Word r;
  Word base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = gp_mul(spec, r, base);
    base = gp_mul(spec, base, base);
  }
  return r;
}

std::string word_key(const Word& w) {
  std::ostringstream os;
  for (const Syllable& s : w) os << s.v << ':' << s.g << ' ';
  return os.str();
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v != b[i].v) return a[i].v < b[i].v;
    if (a[i].g != b[i].g) return a[i].g < b[i].g;
  }
  return false;
}

std::string word_str(const GraphProductSpec& spec, const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << spec.names[w[i].v] << ':' << w[i].g;
  }
  return os.str();
}

Word parse_word(const GraphProductSpec& spec, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::size_t c = tok.rfind(':');
    if (c == std::string::npos || c == 0 || c + 1 == tok.size())
      throw InvalidDocument("syllable '" + tok + "' is not name:element");
    int v = spec.vertex_index(tok.substr(0, c));
    long long g = 0;
    try {
      std::size_t used = 0;
      g = std::stoll(tok.substr(c + 1), &used);
      if (used != tok.size() - c - 1) throw std::invalid_argument("trail");
    } catch (const std::exception&) {
      throw InvalidDocument("bad element in syllable '" + tok + "'");
    }
    w.push_back({v, g});
  }
  return normal_form(spec, w);
}

long gallery_distance(const GraphProductSpec& spec, const Word& a,
                      const Word& b) {
  return static_cast<long>(gp_mul(spec, gp_inverse(spec, a), b).size());
}

std::vector<int> weyl_distance(const GraphProductSpec& spec, const Word& a,
                               const Word& b) {
  Word d = gp_mul(spec, gp_inverse(spec, a), b);
  std::vector<int> out;
  out.reserve(d.size());
  for (const Syllable& s : d) out.push_back(s.v);
  return out;
}

std::vector<Word> adjacent_chambers(const GraphProductSpec& spec,
                                    const Word& c, int v) {
  if (v < 0 || v >= spec.n())
    throw BadSyllable("vertex index " + std::to_string(v) + " out of range");
  const VertexGroup& gr = spec.groups[v];
  if (!gr.is_finite())
    throw InfiniteVertexGroup("panel of '" + spec.names[v] + "' is infinite");
  std::vector<Word> out;
  for (long long g = 1; g < gr.order; ++g)
    out.push_back(gp_mul(spec, c, Word{{v, g}}));
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

namespace {

void require_finite(const GraphProductSpec& spec, const char* what) {
  for (int v = 0; v < spec.n(); ++v)
    if (!spec.groups[v].is_finite())
      throw InfiniteVertexGroup(std::string(what) +
                                " needs finite vertex groups");
}

}  // namespace

std::vector<Word> ball(const GraphProductSpec& spec, int radius, long cap) {
  if (radius < 0) throw UsageError("radius must be nonnegative");
  if (radius > 0) require_finite(spec, "ball enumeration");
  std::map<std::string, Word> seen;
  std::vector<Word> frontier{Word{}};
  seen.emplace(word_key(Word{}), Word{});
  for (int step = 1; step <= radius && !frontier.empty(); ++step) {
    std::vector<Word> next;
    for (const Word& c : frontier) {
      for (int v = 0; v < spec.n(); ++v) {
        for (long long g = 1; g < spec.groups[v].order; ++g) {
          Word c2 = gp_mul(spec, c, Word{{v, g}});
          std::string key = word_key(c2);
          if (seen.count(key)) continue;
          if (static_cast<long>(seen.size()) >= cap)
            throw SearchBudgetExceeded("ball exceeded cap " +
                                       std::to_string(cap));
          seen.emplace(std::move(key), c2);
          next.push_back(std::move(c2));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<Word> interval(const GraphProductSpec& spec, const Word& a,
                           const Word& b, long cap) {
  Word u = gp_mul(spec, gp_inverse(spec, a), b);
  const long total = static_cast<long>(u.size());
  if (total > 0) require_finite(spec, "interval enumeration");
  std::vector<Word> layer{Word{}};
  std::vector<Word> members{Word{}};
  for (long step = 1; step <= total; ++step) {
    std::vector<Word> next;
    std::set<std::string> layer_seen;
    for (const Word& c : layer) {
      for (int v = 0; v < spec.n(); ++v) {
        for (long long g = 1; g < spec.groups[v].order; ++g) {
          Word c2 = gp_mul(spec, c, Word{{v, g}});
          if (static_cast<long>(c2.size()) != step) continue;
          if (static_cast<long>(
                  gp_mul(spec, gp_inverse(spec, c2), u).size()) !=
              total - step)
            continue;
          if (!layer_seen.insert(word_key(c2)).second) continue;
          if (static_cast<long>(members.size() + next.size()) >= cap)
            throw SearchBudgetExceeded("interval exceeded cap " +
                                       std::to_string(cap));
          next.push_back(std::move(c2));
        }
      }
    }
    members.insert(members.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(members.size());
  for (const Word& c : members) out.push_back(gp_mul(spec, a, c));
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

HullResult combinatorial_hull(const GraphProductSpec& spec,
                              const std::vector<Word>& seeds, long cap) {
  HullResult res;
  std::map<std::string, Word> all;
  std::vector<Word> batch;
  for (const Word& s : seeds) {
    Word c = normal_form(spec, s);
    if (all.emplace(word_key(c), c).second) batch.push_back(c);
  }
  std::vector<Word> settled;
  // intervals only depend on a^-1 b, so cache them by that key
  std::map<std::string, std::vector<Word>> diff_cache;
  while (!batch.empty()) {
    std::vector<Word> added;
    for (std::size_t bi = 0; bi < batch.size(); ++bi) {
      std::vector<const Word*> others;
      for (const Word& s : settled) others.push_back(&s);
      for (std::size_t bj = 0; bj < bi; ++bj) others.push_back(&batch[bj]);
      for (const Word* o : others) {
        Word diff = gp_mul(spec, gp_inverse(spec, *o), batch[bi]);
        auto it = diff_cache.find(word_key(diff));
        if (it == diff_cache.end()) {
          it = diff_cache
                   .emplace(word_key(diff),
                            interval(spec, Word{}, diff, cap))
                   .first;
        }
        for (const Word& m : it->second) {
          Word c = gp_mul(spec, *o, m);
          std::string key = word_key(c);
          if (all.count(key)) continue;
          if (static_cast<long>(all.size()) >= cap)
            throw SearchBudgetExceeded("hull exceeded cap " +
                                       std::to_string(cap));
          all.emplace(std::move(key), c);
          added.push_back(std::move(c));
        }
      }
    }
    settled.insert(settled.end(), batch.begin(), batch.end());
    if (!added.empty()) ++res.rounds;
    batch = std::move(added);
  }
  res.chambers.reserve(all.size());
  for (auto& [k, w] : all) res.chambers.push_back(std::move(w));
  std::sort(res.chambers.begin(), res.chambers.end(), word_less);
  return res;
}

Word apartment_section(const GraphProductSpec& spec,
                       const std::vector<int>& wword) {
  GraphProductSpec shadow = spec;
  for (int v = 0; v < spec.n(); ++v) {
    shadow.groups[v] = VertexGroup{2, {}};
    shadow.distinguished[v] = 1;
  }
  Word sh;
  Word lift;
  for (int v : wword) {
    if (v < 0 || v >= spec.n())
      throw BadGenerator("generator index " + std::to_string(v + 1) +
                         " out of range 1.." + std::to_string(spec.n()));
    sh.push_back({v, 1});
    lift.push_back({v, spec.distinguished[v]});
  }
  if (normal_form(shadow, sh).size() != wword.size())
    throw WordNotReduced("word is not reduced in the right-angled group");
  return normal_form(spec, lift);
}

bool is_irreducible_graph(const GraphProductSpec& spec) {
  const int k = spec.n();
  if (k == 1) return true;
  std::vector<int> seen(k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < k; ++v) {
      if (seen[v] || v == u || spec.adj[u][v]) continue;
      seen[v] = 1;
      ++count;
      stack.push_back(v);
    }
  }
  return count == k;
}

WpdResult brute_force_wpd_check(const GraphProductSpec& spec, const Word& h,
                                const Word& x, int d, long m, long radius,
                                long cap) {
  if (d < 1) throw UsageError("separation bound must be at least 1");
  if (m < 0) throw UsageError("power must be nonnegative");
  WpdResult res;
  res.degenerate = m == 0;
  Word xa = normal_form(spec, x);
  Word xb = gp_mul(spec, gp_pow(spec, h, m), xa);
  long sa = static_cast<long>(xa.size());
  long sb = static_cast<long>(xb.size());
  res.radius_bound = 2 * std::min(sa, sb) + d - 1;
  if (radius < 0) radius = res.radius_bound;
  res.complete = radius >= res.radius_bound;
  const Word& base = sa <= sb ? xa : xb;
  Word base_inv = gp_inverse(spec, base);
  Word xa_inv = gp_inverse(spec, xa);
  Word xb_inv = gp_inverse(spec, xb);
  std::set<std::string> seen;
  for (const Word& z : ball(spec, d - 1, cap)) {
    Word g = gp_mul(spec, gp_mul(spec, base, z), base_inv);
    if (static_cast<long>(g.size()) > radius) continue;
    if (!seen.insert(word_key(g)).second) continue;
    if (static_cast<long>(gp_mul(spec, gp_mul(spec, xa_inv, g), xa).size()) >=
        d)
      continue;
    if (static_cast<long>(gp_mul(spec, gp_mul(spec, xb_inv, g), xb).size()) >=
        d)
      continue;
    res.p.push_back(std::move(g));
  }
  std::sort(res.p.begin(), res.p.end(), word_less);
  return res;
}

}  // namespace weylkit::gprod
