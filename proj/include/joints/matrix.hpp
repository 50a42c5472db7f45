#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "joints/rational.hpp"

namespace joints {

using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Lexicographic order on equal-length vectors; shorter vectors sort first.
template <typename DerivedA, typename DerivedB>
int lex_compare(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (b(i) < a(i)) return 1;
  }
  return 0;
}

struct LexLess {
  template <typename DerivedA, typename DerivedB>
  bool operator()(const Eigen::MatrixBase<DerivedA>& a,
                  const Eigen::MatrixBase<DerivedB>& b) const {
    return lex_compare(a, b) < 0;
  }
};

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  return lex_compare(a, b) == 0;
}

/// Exact dot product. Eigen's dot() routes through conj(), so spell it out.
template <typename DerivedA, typename DerivedB>
Rational dot(const Eigen::MatrixBase<DerivedA>& a,
             const Eigen::MatrixBase<DerivedB>& b) {
  Rational acc(0);
  for (Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
  return acc;
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

RatVector make_vector(std::initializer_list<Rational> entries);
RatVector zero_vector(Index n);
RatMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows);

/// Strings in the "p/q" form, one per entry.
std::vector<std::string> to_strings(const RatVector& v);
RatVector parse_vector(const std::vector<std::string>& entries);

/// "(a, b, c)" for human-readable output.
std::string format_point(const RatVector& v);

}  // namespace joints
