#pragma once

#include <vector>

#include "joints/polynomial.hpp"

namespace joints {

/// C(n, k) exactly.
Integer binomial(long n, long k);

/// All multi-indices of total degree <= b in ascending graded-lex order;
/// there are C(b + d, d) of them.
std::vector<MultiIndex> monomial_basis(int d, int b);

/// Smallest b with C(b + d, d) > m: the degree at which an interpolating
/// polynomial through m points is guaranteed to exist.
int min_fit_degree(long m, int d);

/// Smallest integer b_c with b_c^d >= d! * m, the integer form of
/// ceil((d! m)^(1/d)).
long degree_ceiling(long m, int d);

/// Row i holds the basis monomials evaluated at points[i].
RatMatrix evaluation_matrix(const std::vector<RatVector>& points,
                            const std::vector<MultiIndex>& basis);

/// Nonzero polynomial of degree <= min_fit_degree(m, d) vanishing on every
/// input point. Rows follow the sorted point order, columns the graded-lex
/// basis, and the nullspace selection rule makes the result reproducible.
Polynomial fit_vanishing(std::vector<RatVector> points, int d);

/// Smallest degree admitting a nonzero vanishing polynomial (0 for no points).
int minimal_vanishing_degree(const std::vector<RatVector>& points, int d);

}  // namespace joints
