#pragma once

#include "weylkit/algebraic.hpp"
#include "weylkit/bigint.hpp"
#include "weylkit/gcm.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylkit::weyl {

// Exact reflection representation on the root lattice. Crystallographic
// systems act by integer matrices (columns = images of the simple roots,
// s_i(a_j) = a_j - A(i,j) a_i). Non-crystallographic Coxeter matrices get
// the geometric representation over Z[2cos(pi/M)]; only length/word-level
// operations are available on that path.
struct CoxeterSystem {
  int n = 0;
  Eigen::MatrixXi cox;  // Coxeter matrix, 0 encodes infinity
  bool crystallographic = false;
  Eigen::MatrixXi gcm;      // valid iff crystallographic
  std::vector<IMat> srefl;  // simple reflections on root coordinates
  std::vector<IMat> scorefl;  // same on coroot coordinates
  std::shared_ptr<const AlgebraicContext> actx;  // general path only
  std::vector<AMat> arefl;

  static CoxeterSystem from_gcm(const Eigen::MatrixXi& a);
  // Crystallographic Coxeter matrices are lifted to the canonical GCM and
  // run on the integral path.
  static CoxeterSystem from_coxeter_matrix(const Eigen::MatrixXi& m);
};

// Group element. Exactly one representation is populated, matching the
// system that built it.
struct WeylElement {
  IMat im;
  AMat am;
  bool integral = true;
};

// Words are 0-based generator index sequences throughout the library; the
// JSON/CLI layer speaks 1-based.
WeylElement identity_element(const CoxeterSystem& sys);
WeylElement element_of_word(const CoxeterSystem& sys,
                            const std::vector<int>& word);
WeylElement multiply(const CoxeterSystem& sys, const WeylElement& a,
                     const WeylElement& b);
WeylElement power(const CoxeterSystem& sys, const WeylElement& a, long e);
bool equal(const WeylElement& a, const WeylElement& b);
bool is_identity(const CoxeterSystem& sys, const WeylElement& a);
std::string element_key(const WeylElement& a);

struct LengthWord {
  long length = 0;
  std::vector<int> word;
};

// Greedy descent: repeatedly strip the least generator sent negative.
LengthWord length_and_reduced_word(const CoxeterSystem& sys,
                                   const WeylElement& w);
long length_of(const CoxeterSystem& sys, const WeylElement& w);

// Positive real root with both root (x) and coroot (y) coordinates; layer is
// the number of simple reflections used to reach it from a simple root.
struct Root {
  I64Vec x;
  I64Vec y;
  int layer = 0;
};

// Closure layers 0..max(0, depth-1) of the simple roots under simple
// reflections, positives only, ordered by (height, lex). Depth 0 and 1 both
// give the simple roots; output at depth d is a subset of depth d+1.
std::vector<Root> enumerate_roots(const CoxeterSystem& sys, int depth,
                                  long cap = 100000);

// True iff the reflections in the two walls generate a finite dihedral
// group: pairing product <a,b^v><b,a^v> in {0,1,2,3}.
bool walls_cross(const CoxeterSystem& sys, const Root& a, const Root& b);

// First (canonical root order) non-crossing pair such that no enumerated
// root crosses both. Requires indefinite indecomposable type.
std::optional<std::pair<Root, Root>> find_separated_wall_pair(
    const CoxeterSystem& sys, int depth, long cap = 100000);

// Lengths of w, w^2, ..., w^N (stops early once the straightness identity
// fails; the returned vector may be shorter than N).
std::vector<long> power_lengths(const CoxeterSystem& sys, const WeylElement& w,
                                int n);
bool is_straight_up_to(const CoxeterSystem& sys, const WeylElement& w, int n);

struct MinConj {
  WeylElement elt;
  std::vector<int> word;  // canonical reduced word of the representative
  long length = 0;
  long explored = 0;  // closure set size
};

// Closure of {w} under length-non-increasing conjugation by generators;
// returns the (least length, lex-least word) representative.
MinConj min_length_conjugate(const CoxeterSystem& sys, const WeylElement& w,
                             long budget = 100000);

enum class RegVerdict {
  CertifiedCoxeterElement,
  CertifiedByFixedSpaceSearch,
  Inconclusive,
  NotHyperbolic
};

const char* reg_verdict_name(RegVerdict v);

struct FixedSpaceRecord {
  long k = 0;
  int fixed_dim = 0;   // dim ker(w^{2k} - I)
  long orbit_hits = 0; // enumerated roots with w^k a = +-a
  long kernel_hits = 0;
};

struct RegularityCertificate {
  RegVerdict verdict = RegVerdict::Inconclusive;
  long k_bound = 0;
  int root_depth = 0;
  long root_count = 0;
  std::string torsion_branch;  // power-loop | charpoly | quasi-unipotent |
                               // infinite-order | skipped
  std::optional<long> torsion_order;
  std::optional<std::vector<int>> coxeter_word;  // set for the shortcut
  std::vector<FixedSpaceRecord> fixed_space;
  std::string note;
};

// K <= 0 means the default bound 2*length(w).
RegularityCertificate certify_regular(const CoxeterSystem& sys,
                                      const WeylElement& w, long k_bound,
                                      int root_depth, long root_cap = 100000,
                                      long conj_budget = 100000);

enum class StraightVerdict {
  CertifiedStraight,
  CertifiedNotStraight,
  Inconclusive
};

const char* straight_verdict_name(StraightVerdict v);

struct StraightnessCertificate {
  StraightVerdict verdict = StraightVerdict::Inconclusive;
  int n_checked = 0;
  long base_length = 0;
  std::vector<long> lengths;  // of w^1..w^N as far as computed
  std::optional<MinConj> min_conj;
  std::optional<RegularityCertificate> regularity;
  std::string note;
};

StraightnessCertificate certify_straight(const CoxeterSystem& sys,
                                         const WeylElement& w, int n_straight,
                                         long k_bound, int root_depth,
                                         long root_cap = 100000,
                                         long conj_budget = 100000);

}  // namespace weylkit::weyl
