#pragma once

#include "weylkit/bigint.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace weylkit::gcm {

// Integer matrix with 2s on the diagonal, non-positive off-diagonal entries
// and symmetrically paired zeros.
struct GeneralizedCartanMatrix {
  Eigen::MatrixXi a;
  int n = 0;
};

enum class MatrixType { Spherical, Affine, Indefinite };

const char* type_name(MatrixType t);

// Throws BadDiagonal / BadSign / AsymmetricZero; the input must be square
// (InvalidDocument otherwise).
GeneralizedCartanMatrix validate_gcm(const Eigen::MatrixXi& raw);

// Support graph {i,j : a(i,j) != 0} connected?
bool is_indecomposable(const GeneralizedCartanMatrix& a);

// Connected components of the support graph, each sorted, in order of their
// least member.
std::vector<std::vector<int>> components(const GeneralizedCartanMatrix& a);

// Principal-minor trichotomy, exact integer arithmetic. Throws Decomposable
// for decomposable input.
MatrixType classify_type(const GeneralizedCartanMatrix& a);

// Principal submatrix on sorted index set `rows`.
GeneralizedCartanMatrix submatrix(const GeneralizedCartanMatrix& a,
                                  const std::vector<int>& rows);

// Coxeter matrix; entry 0 encodes infinity, diagonal is 1.
Eigen::MatrixXi coxeter_matrix_of(const GeneralizedCartanMatrix& a);

// All off-diagonal entries in {2,3,4,6,inf}?
bool is_crystallographic(const Eigen::MatrixXi& cox);

// Canonical GCM for a crystallographic Coxeter matrix:
// m=2 -> (0,0), 3 -> (-1,-1), 4 -> (-1,-2), 6 -> (-1,-3), inf -> (-2,-2).
Eigen::MatrixXi canonical_gcm_of(const Eigen::MatrixXi& cox);

}  // namespace weylkit::gcm
