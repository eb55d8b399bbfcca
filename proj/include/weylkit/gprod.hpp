#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace weylkit::gprod {

// Vertex group: order 0 is infinite cyclic, otherwise a finite cyclic group
// or an explicit multiplication table with element 0 as the identity.
struct VertexGroup {
  long long order = 0;
  Eigen::MatrixXi table;  // empty for cyclic groups

  bool is_cyclic() const { return table.size() == 0; }
  bool is_finite() const { return order != 0; }
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  void check_element(long long g) const;
  void validate() const;
};

struct GraphProductSpec {
  std::vector<std::string> names;
  std::vector<VertexGroup> groups;
  std::vector<std::vector<char>> adj;  // adjacency = the two factors commute
  std::vector<long long> distinguished;

  int n() const { return static_cast<int>(names.size()); }
  int vertex_index(const std::string& name) const;
  bool commute(int u, int v) const { return u != v && adj[u][v]; }
  void validate() const;
};

struct Syllable {
  int v = 0;
  long long g = 0;
};

inline bool operator==(const Syllable& a, const Syllable& b) {
  return a.v == b.v && a.g == b.g;
}

// Group elements are normal-form words: no two same-vertex syllables can be
// brought together by shuffles, and the vertex sequence is the
// lexicographically least one reachable by shuffles.
using Word = std::vector<Syllable>;

Word normal_form(const GraphProductSpec& spec, Word w);
Word gp_inverse(const GraphProductSpec& spec, const Word& w);
Word gp_mul(const GraphProductSpec& spec, const Word& a, const Word& b);
Word gp_pow(const GraphProductSpec& spec, const Word& a, long e);
std::string word_key(const Word& w);
bool word_less(const Word& a, const Word& b);  // (syllables, then (v,g) lex)
std::string word_str(const GraphProductSpec& spec, const Word& w);
Word parse_word(const GraphProductSpec& spec, const std::string& text);

// Gallery (chamber) distance is the syllable count of a^-1 b; the Weyl
// distance is its vertex sequence, a reduced word in the right-angled
// Coxeter group of the graph.
long gallery_distance(const GraphProductSpec& spec, const Word& a,
                      const Word& b);
std::vector<int> weyl_distance(const GraphProductSpec& spec, const Word& a,
                               const Word& b);

// All chambers sharing the v-panel of c, canonically ordered. Throws for
// infinite cyclic factors.
std::vector<Word> adjacent_chambers(const GraphProductSpec& spec,
                                    const Word& c, int v);

std::vector<Word> ball(const GraphProductSpec& spec, int radius,
                       long cap = 5000000);

// Chambers on minimal galleries from a to b.
std::vector<Word> interval(const GraphProductSpec& spec, const Word& a,
                           const Word& b, long cap = 5000000);

struct HullResult {
  std::vector<Word> chambers;
  int rounds = 0;  // passes that added a chamber before the closure pass
};

// Least interval-closed set of chambers containing the seeds.
HullResult combinatorial_hull(const GraphProductSpec& spec,
                              const std::vector<Word>& seeds,
                              long cap = 5000000);

// Lift s_{i1}..s_{ik} to t_{i1}..t_{ik} using the distinguished elements.
// The input must be reduced in the right-angled Coxeter group.
Word apartment_section(const GraphProductSpec& spec,
                       const std::vector<int>& wword);

// The defining graph is irreducible when its complement is connected.
bool is_irreducible_graph(const GraphProductSpec& spec);

struct WpdResult {
  std::vector<Word> p;  // elements moving both x and h^m x less than d
  bool complete = false;
  bool degenerate = false;  // m = 0 collapses the two conditions
  long radius_bound = 0;    // radius needed for a complete search
};

// Enumerates {g : d(x,gx) < d and d(h^m x, g h^m x) < d} among elements of
// syllable length <= radius; complete once radius reaches
// 2 min(|x|,|h^m x|) + d - 1, since any solution is b z b^-1 with b the
// shorter of the two base points and |z| <= d - 1. A negative radius asks
// for exactly that bound.
WpdResult brute_force_wpd_check(const GraphProductSpec& spec, const Word& h,
                                const Word& x, int d, long m, long radius,
                                long cap = 5000000);

}  // namespace weylkit::gprod
