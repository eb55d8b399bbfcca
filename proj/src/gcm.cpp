#include "weylkit/gcm.hpp"

#include "weylkit/errors.hpp"
#include "weylkit/poly.hpp"

#include <numeric>
#include <string>

namespace weylkit::gcm {

const char* type_name(MatrixType t) {
  switch (t) {
    case MatrixType::Spherical:
      return "spherical";
    case MatrixType::Affine:
      return "affine";
    default:
      return "indefinite";
  }
}

GeneralizedCartanMatrix validate_gcm(const Eigen::MatrixXi& raw) {
  if (raw.rows() != raw.cols() || raw.rows() == 0)
    throw InvalidDocument("gcm must be a non-empty square matrix");
  const int n = static_cast<int>(raw.rows());
  for (int i = 0; i < n; ++i) {
    if (raw(i, i) != 2)
      throw BadDiagonal("gcm diagonal entry at index " + std::to_string(i + 1) +
                        " is " + std::to_string(raw(i, i)) + ", expected 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (raw(i, j) > 0)
        throw BadSign("gcm off-diagonal entry (" + std::to_string(i + 1) +
                      "," + std::to_string(j + 1) + ") is positive");
      if ((raw(i, j) == 0) != (raw(j, i) == 0))
        throw AsymmetricZero("gcm zero at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) +
                             ") is not paired symmetrically");
    }
  }
  return GeneralizedCartanMatrix{raw, n};
}

std::vector<std::vector<int>> components(const GeneralizedCartanMatrix& a) {
  const int n = a.n;
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (j != v && a.a(v, j) != 0 && comp[static_cast<size_t>(j)] < 0) {
          comp[static_cast<size_t>(j)] = nc;
          stack.push_back(j);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(nc));
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(comp[static_cast<size_t>(i)])].push_back(i);
  return out;
}

bool is_indecomposable(const GeneralizedCartanMatrix& a) {
  return components(a).size() == 1;
}

GeneralizedCartanMatrix submatrix(const GeneralizedCartanMatrix& a,
                                  const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  Eigen::MatrixXi s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s(i, j) = a.a(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]);
  return GeneralizedCartanMatrix{s, k};
}

namespace {

Int principal_minor(const GeneralizedCartanMatrix& a,
                    const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  IMat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m(i, j) =
          Int(a.a(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]));
  return bareiss_det(std::move(m));
}

}  // namespace

MatrixType classify_type(const GeneralizedCartanMatrix& a) {
  if (!is_indecomposable(a))
    throw Decomposable("type classification requires an indecomposable gcm");
  const int n = a.n;
  if (n > 20)
    throw SearchBudgetExceeded("principal-minor trichotomy capped at rank 20");
  // All principal minors, exact. 2^n - 1 subsets; inputs are desk scale.
  bool proper_positive = true;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    if (principal_minor(a, rows) <= 0) {
      proper_positive = false;
      break;
    }
  }
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  Int det = principal_minor(a, all);
  if (proper_positive && det > 0) return MatrixType::Spherical;
  if (proper_positive && det == 0) return MatrixType::Affine;
  return MatrixType::Indefinite;
}

Eigen::MatrixXi coxeter_matrix_of(const GeneralizedCartanMatrix& a) {
  const int n = a.n;
  Eigen::MatrixXi m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
    for (int j = i + 1; j < n; ++j) {
      long long p = static_cast<long long>(a.a(i, j)) * a.a(j, i);
      int v;
      if (p == 0)
        v = 2;
      else if (p == 1)
        v = 3;
      else if (p == 2)
        v = 4;
      else if (p == 3)
        v = 6;
      else
        v = 0;  // infinity
      m(i, j) = m(j, i) = v;
    }
  }
  return m;
}

bool is_crystallographic(const Eigen::MatrixXi& cox) {
  for (Eigen::Index i = 0; i < cox.rows(); ++i)
    for (Eigen::Index j = 0; j < cox.cols(); ++j) {
      if (i == j) continue;
      int m = cox(i, j);
      if (m != 0 && m != 2 && m != 3 && m != 4 && m != 6) return false;
    }
  return true;
}

Eigen::MatrixXi canonical_gcm_of(const Eigen::MatrixXi& cox) {
  const int n = static_cast<int>(cox.rows());
  Eigen::MatrixXi a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    for (int j = i + 1; j < n; ++j) {
      int m = cox(i, j);
      int lo, hi;
      switch (m) {
        case 2:
          lo = hi = 0;
          break;
        case 3:
          lo = hi = -1;
          break;
        case 4:
          lo = -1;
          hi = -2;
          break;
        case 6:
          lo = -1;
          hi = -3;
          break;
        case 0:
          lo = hi = -2;
          break;
        default:
          throw NotCrystallographic("coxeter entry m=" + std::to_string(m) +
                                    " has no integral cartan lift");
      }
      a(i, j) = lo;
      a(j, i) = hi;
    }
  }
  return a;
}

}  // namespace weylkit::gcm
