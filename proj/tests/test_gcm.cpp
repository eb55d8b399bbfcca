#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/gcm.hpp"

using namespace weylkit;

namespace {

Eigen::MatrixXi mat(std::initializer_list<std::initializer_list<int>> rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXi a(n, static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

gcm::MatrixType classify(const Eigen::MatrixXi& a) {
  return gcm::classify_type(gcm::validate_gcm(a));
}

// Trichotomy straight from the definition: check the sign of every
// principal minor with the cofactor oracle.
gcm::MatrixType classify_by_minors(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  bool all_positive = true;
  bool proper_positive = true;
  Int full = oracle::naive_det(a);
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) rows.push_back(i);
    Eigen::MatrixXi sub(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        sub(static_cast<int>(i), static_cast<int>(j)) = a(rows[i], rows[j]);
    Int d = oracle::naive_det(sub);
    if (d <= 0) all_positive = false;
    if (d <= 0 && static_cast<int>(rows.size()) < n) proper_positive = false;
  }
  if (all_positive) return gcm::MatrixType::Spherical;
  if (full == 0 && proper_positive) return gcm::MatrixType::Affine;
  return gcm::MatrixType::Indefinite;
}

}  // namespace

TEST_CASE("spherical golden set") {
  CHECK(classify(mat({{2}})) == gcm::MatrixType::Spherical);
  CHECK(classify(mat({{2, -1}, {-1, 2}})) == gcm::MatrixType::Spherical);
  CHECK(classify(mat({{2, -1}, {-2, 2}})) == gcm::MatrixType::Spherical);
  CHECK(classify(mat({{2, -1}, {-3, 2}})) == gcm::MatrixType::Spherical);
  // A3, B3, C3
  CHECK(classify(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) ==
        gcm::MatrixType::Spherical);
  CHECK(classify(mat({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})) ==
        gcm::MatrixType::Spherical);
  CHECK(classify(mat({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})) ==
        gcm::MatrixType::Spherical);
  // D4: node 1 central
  CHECK(classify(mat({{2, -1, -1, -1},
                      {-1, 2, 0, 0},
                      {-1, 0, 2, 0},
                      {-1, 0, 0, 2}})) == gcm::MatrixType::Spherical);
  // F4
  CHECK(classify(mat({{2, -1, 0, 0},
                      {-1, 2, -2, 0},
                      {0, -1, 2, -1},
                      {0, 0, -1, 2}})) == gcm::MatrixType::Spherical);
}

TEST_CASE("affine golden set") {
  CHECK(classify(mat({{2, -2}, {-2, 2}})) == gcm::MatrixType::Affine);
  CHECK(classify(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})) ==
        gcm::MatrixType::Affine);
  CHECK(classify(mat({{2, -1, 0, -1},
                      {-1, 2, -1, 0},
                      {0, -1, 2, -1},
                      {-1, 0, -1, 2}})) == gcm::MatrixType::Affine);
  // C2 affine: 4-4 chain
  CHECK(classify(mat({{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}})) ==
        gcm::MatrixType::Affine);
  // G2 affine
  CHECK(classify(mat({{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}})) ==
        gcm::MatrixType::Affine);
}

TEST_CASE("indefinite examples") {
  CHECK(classify(mat({{2, -3}, {-3, 2}})) == gcm::MatrixType::Indefinite);
  CHECK(classify(mat({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}})) ==
        gcm::MatrixType::Indefinite);
  CHECK(classify(mat({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}})) ==
        gcm::MatrixType::Indefinite);
  // right-angled path on 4 vertices
  CHECK(classify(mat({{2, 0, -2, -2},
                      {0, 2, 0, -2},
                      {-2, 0, 2, 0},
                      {-2, -2, 0, 2}})) == gcm::MatrixType::Indefinite);
}

TEST_CASE("validation rejects malformed input") {
  CHECK_THROWS_AS((void)gcm::validate_gcm(mat({{1, -1}, {-1, 2}})),
                  BadDiagonal);
  CHECK_THROWS_AS((void)gcm::validate_gcm(mat({{2, 1}, {-1, 2}})), BadSign);
  CHECK_THROWS_AS((void)gcm::validate_gcm(mat({{2, 0}, {-1, 2}})),
                  AsymmetricZero);
  Eigen::MatrixXi rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS((void)gcm::validate_gcm(rect), InvalidDocument);
}

TEST_CASE("decomposable input") {
  Eigen::MatrixXi a = mat({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
  gcm::GeneralizedCartanMatrix g = gcm::validate_gcm(a);
  CHECK(!gcm::is_indecomposable(g));
  CHECK_THROWS_AS((void)gcm::classify_type(g), Decomposable);
  auto comp = gcm::components(g);
  REQUIRE(comp.size() == 2);
  CHECK(comp[0] == std::vector<int>{0, 1});
  CHECK(comp[1] == std::vector<int>{2});
  CHECK(gcm::classify_type(gcm::submatrix(g, comp[0])) ==
        gcm::MatrixType::Spherical);
}

TEST_CASE("classification agrees with the principal minor oracle") {
  std::mt19937 rng(20260821);
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<int> rank(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = rank(rng);
    Eigen::MatrixXi a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = i == j ? 2 : -entry(rng);
    // repair the zero pairing
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a(i, j) == 0 || a(j, i) == 0) {
          a(i, j) = 0;
          a(j, i) = 0;
        }
    gcm::GeneralizedCartanMatrix g = gcm::validate_gcm(a);
    if (!gcm::is_indecomposable(g)) continue;
    CHECK(gcm::classify_type(g) == classify_by_minors(a));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("coxeter matrix extraction") {
  Eigen::MatrixXi a = mat({{2, -1, -2, -2}, {-1, 2, 0, 0}, {-1, 0, 2, -1},
                           {-2, 0, -3, 2}});
  Eigen::MatrixXi m = gcm::coxeter_matrix_of(gcm::validate_gcm(a));
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 3);  // product 1
  CHECK(m(0, 2) == 4);  // product 2
  CHECK(m(2, 3) == 6);  // product 3
  CHECK(m(0, 3) == 0);  // product 4 and beyond is infinite
  CHECK(m(1, 2) == 2);
  CHECK(m == m.transpose().eval());
  CHECK(gcm::is_crystallographic(m));
}

TEST_CASE("canonical lift inverts coxeter extraction") {
  // every crystallographic bond type
  Eigen::MatrixXi m(5, 5);
  m.setConstant(2);
  for (int i = 0; i < 5; ++i) m(i, i) = 1;
  m(0, 1) = m(1, 0) = 3;
  m(1, 2) = m(2, 1) = 4;
  m(2, 3) = m(3, 2) = 6;
  m(3, 4) = m(4, 3) = 0;
  Eigen::MatrixXi a = gcm::canonical_gcm_of(m);
  Eigen::MatrixXi back = gcm::coxeter_matrix_of(gcm::validate_gcm(a));
  CHECK(back == m);
  CHECK(!gcm::is_crystallographic(mat({{1, 5}, {5, 1}})));
}
