#pragma once

// Exact rank and nullspace over Q via fraction-free (Bareiss) elimination.
//
// Rows are first scaled to integers (clearing denominators changes neither
// rank nor nullspace). Bareiss then keeps every intermediate entry an integer
// minor of the scaled matrix; each division by the previous pivot is exact.
//
// Pivot rule: columns left to right, first nonzero entry top to bottom among
// the rows not yet used. No magnitude pivoting; the result is deterministic.

#include <optional>
#include <vector>

#include "joints/error.hpp"
#include "joints/matrix.hpp"

namespace joints {

struct EchelonForm {
  RatMatrix reduced;              // row echelon form, integer entries
  std::vector<Index> pivot_cols;  // pivot column of echelon row r

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

namespace detail {

inline void scale_row_to_integers(RatMatrix& m, Index row) {
  Integer lcm(1);
  for (Index j = 0; j < m.cols(); ++j) {
    const Integer d = m(row, j).den();
    if (d != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (lcm == 1) return;
  const Rational factor(lcm);
  for (Index j = 0; j < m.cols(); ++j) m(row, j) *= factor;
}

}  // namespace detail

template <typename Derived>
EchelonForm bareiss_echelon(const Eigen::MatrixBase<Derived>& input) {
  EchelonForm out;
  out.reduced = input;
  RatMatrix& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  for (Index i = 0; i < rows; ++i) detail::scale_row_to_integers(a, i);

  Rational prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot_row = -1;
    for (Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) a.row(r).swap(a.row(pivot_row));

    const Rational pivot = a(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Rational lead = a(i, c);
      for (Index j = c + 1; j < cols; ++j) {
        Rational v = (pivot * a(i, j) - lead * a(r, j)) / prev;
        if (!v.is_integer()) {
          throw InvariantViolation("bareiss: inexact division by pivot");
        }
        a(i, j) = std::move(v);
      }
      a(i, c) = Rational(0);
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

/// Exact rank over Q. Empty matrices have rank 0.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_echelon(m).rank();
}

/// Solves the echelon system for the nullspace vector whose free
/// coordinates are all 0 except `chosen_free`, which is 1.
inline RatVector back_substitute(const EchelonForm& ef, Index chosen_free) {
  const Index cols = ef.reduced.cols();
  RatVector x = zero_vector(cols);
  x(chosen_free) = Rational(1);
  for (Index r = ef.rank() - 1; r >= 0; --r) {
    const Index pc = ef.pivot_cols[static_cast<std::size_t>(r)];
    Rational acc(0);
    for (Index j = pc + 1; j < cols; ++j) {
      if (!x(j).is_zero()) acc += ef.reduced(r, j) * x(j);
    }
    x(pc) = -acc / ef.reduced(r, pc);
  }
  return x;
}

/// One nonzero x with M x = 0, or nullopt when the nullspace is trivial.
/// Selection rule: the highest-index free column is set to 1, every other
/// free column to 0.
template <typename Derived>
std::optional<RatVector> nullspace_vector(const Eigen::MatrixBase<Derived>& m) {
  const Index cols = m.cols();
  if (cols == 0) return std::nullopt;
  EchelonForm ef = m.rows() == 0 ? EchelonForm{RatMatrix(0, cols), {}}
                                 : bareiss_echelon(m);
  if (ef.rank() == cols) return std::nullopt;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index pc : ef.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
  Index chosen = cols - 1;
  while (is_pivot[static_cast<std::size_t>(chosen)]) --chosen;

  RatVector x = back_substitute(ef, chosen);
  for (Index i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (Index j = 0; j < cols; ++j) acc += m(i, j) * x(j);
    if (!acc.is_zero()) {
      throw InvariantViolation("nullspace_vector: M x != 0");
    }
  }
  return x;
}

}  // namespace joints
