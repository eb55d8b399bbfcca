#pragma once

#include <iterator>
#include <type_traits>

#include <boost/type_traits/integral_constant.hpp>

// Boost 1.74's byte-container probe reads iterator_traits<C::const_iterator>
// in a non-SFINAE position. Eigen matrices expose const_iterator = void, so
// any is_convertible<Matrix, cpp_int> query (Eigen does these during operator
// overload resolution) becomes a hard error under C++20. Pre-empt the header
// with a detection-idiom equivalent; upstream fixed this after 1.74.
#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP
namespace boost {
namespace multiprecision {
namespace detail {

template <class C, class = void>
struct is_byte_container : public boost::false_type {};

template <class C>
struct is_byte_container<
    C, typename std::enable_if<std::is_integral<typename std::iterator_traits<
           typename C::const_iterator>::value_type>::value>::type>
    : public boost::integral_constant<
          bool, sizeof(typename std::iterator_traits<
                       typename C::const_iterator>::value_type) == 1> {};

}  // namespace detail
}  // namespace multiprecision
}  // namespace boost
#endif

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace weylkit {

// Exact integer scalar used for everything on the crystallographic path.
// Matrix powers in regularity checks blow far past 64 bits, and a single
// scalar type keeps the whole path overflow-free.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using I64Vec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline IMat imat_identity(Eigen::Index n) {
  IMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Int(i == j ? 1 : 0);
  return m;
}

inline IMat imat_from_int(const Eigen::MatrixXi& a) {
  IMat m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = Int(a(i, j));
  return m;
}

inline bool imat_equal(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Stable hash/dedup key; column-major entry order.
inline std::string imat_key(const IMat& a) {
  std::string k;
  k.reserve(static_cast<size_t>(a.size()) * 4);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      k += a(i, j).str();
      k += ',';
    }
  return k;
}

inline IMat imat_pow(const IMat& a, unsigned long e) {
  IMat base = a;
  IMat acc = imat_identity(a.rows());
  while (e) {
    if (e & 1) acc = IMat(acc * base);
    e >>= 1;
    if (e) base = IMat(base * base);
  }
  return acc;
}

}  // namespace weylkit
