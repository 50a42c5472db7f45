#pragma once

// Independent reference routines for tests. None of these call into the
// elimination, intersection or incidence code they are used to check.

#include <optional>
#include <random>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/matrix.hpp"
#include "joints/polynomial.hpp"

namespace joints::oracle {

/// Reduced row echelon form by plain rational Gauss-Jordan; same pivot rule
/// (leftmost column, topmost nonzero row).
struct Rref {
  RatMatrix m;
  std::vector<Index> pivots;
};

inline Rref naive_rref(RatMatrix a) {
  Rref out;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < a.rows(); ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    for (Index j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const Rational inv = Rational(1) / a(r, c);
    for (Index j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

inline Index naive_rank(const RatMatrix& a) {
  return static_cast<Index>(naive_rref(a).pivots.size());
}

/// Nullspace vector under the same selection rule (last free column = 1).
inline std::optional<RatVector> naive_nullspace(const RatMatrix& a) {
  const Rref rr = naive_rref(a);
  const Index cols = a.cols();
  std::vector<bool> piv(static_cast<std::size_t>(cols), false);
  for (Index c : rr.pivots) piv[static_cast<std::size_t>(c)] = true;
  Index chosen = -1;
  for (Index c = cols - 1; c >= 0; --c) {
    if (!piv[static_cast<std::size_t>(c)]) {
      chosen = c;
      break;
    }
  }
  if (chosen < 0) return std::nullopt;
  RatVector x = zero_vector(cols);
  x(chosen) = Rational(1);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    x(rr.pivots[r]) = -rr.m(static_cast<Index>(r), chosen);
  }
  return x;
}

inline RatMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols,
                               int lo = -9, int hi = 9) {
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = Rational(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)));
    }
  }
  return m;
}

/// (p - b) parallel to v, via all 2x2 cross products.
inline bool incident(const Line& l, const RatVector& p) {
  const Index d = l.dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      if ((p(i) - l.base()(i)) * l.dir()(j) != (p(j) - l.base()(j)) * l.dir()(i)) {
        return false;
      }
    }
  }
  return true;
}

/// Intersection point from the RREF of [v1, -v2 | b2 - b1].
inline std::optional<RatVector> intersection(const Line& a, const Line& b) {
  const Index d = a.dim();
  RatMatrix aug(d, 3);
  for (Index i = 0; i < d; ++i) {
    aug(i, 0) = a.dir()(i);
    aug(i, 1) = -b.dir()(i);
    aug(i, 2) = b.base()(i) - a.base()(i);
  }
  const Rref rr = naive_rref(aug);
  if (rr.pivots.size() != 2 || rr.pivots[1] != 1) return std::nullopt;
  const Rational t = rr.m(0, 2);
  RatVector p(d);
  for (Index i = 0; i < d; ++i) p(i) = a.base()(i) + t * a.dir()(i);
  return p;
}

inline Index direction_rank(const std::vector<Line>& lines, Index d) {
  RatMatrix m(static_cast<Index>(lines.size()), d);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (Index j = 0; j < d; ++j) m(static_cast<Index>(i), j) = lines[i].dir()(j);
  }
  return naive_rank(m);
}

/// Brute-force joint enumeration over all line pairs.
inline std::vector<RatVector> joints(const Configuration& c, int s = -1) {
  const int need = s < 0 ? c.dim() : s;
  std::vector<RatVector> found;
  const auto& ls = c.lines();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      auto p = oracle::intersection(ls[i], ls[j]);
      if (!p) continue;
      bool dup = false;
      for (const auto& q : found) dup = dup || exactly_equal(q, *p);
      if (dup) continue;
      std::vector<Line> inc;
      for (const auto& l : ls) {
        if (oracle::incident(l, *p)) inc.push_back(l);
      }
      const bool ok = s < 0 ? static_cast<int>(inc.size()) >= c.dim() &&
                                  oracle::direction_rank(inc, c.dim()) == c.dim()
                            : inc.size() >= 2 && direction_rank(inc, c.dim()) >= need;
      if (ok) found.push_back(*p);
    }
  }
  return found;
}

/// C(n, k) by Pascal's rule.
inline long binomial(int n, int k) {
  std::vector<std::vector<long>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[i].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : t[n][k];
}

/// Number of exponent vectors in [0, b]^d with sum <= b, by enumeration.
inline long count_monomials(int d, int b) {
  long count = 0;
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  while (true) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum <= b) ++count;
    int i = 0;
    while (i < d && e[i] == b) e[i++] = 0;
    if (i == d) return count;
    ++e[i];
  }
}

/// Direct evaluation of p(base + t dir) for several t, then Lagrange-free
/// check: the degree-<=D restriction is zero iff it vanishes at D+1 points.
inline std::vector<Rational> samples_on_line(const Polynomial& p, const Line& l,
                                             int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) out.push_back(evaluate(p, l.point_at(Rational(k))));
  return out;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int d, int max_deg,
                                    int terms) {
  Polynomial p(d);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    while (budget-- > 0) ++e[rng() % static_cast<unsigned>(d)];
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 4);
    p.add_term(MultiIndex(e), Rational(Integer(num), Integer(den)));
  }
  return p;
}

inline RatVector random_vector(std::mt19937_64& rng, int d, int lo = -5,
                               int hi = 5, int max_den = 3) {
  RatVector v(d);
  for (int i = 0; i < d; ++i) {
    const long num = lo + static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1));
    const long den = 1 + static_cast<long>(rng() % static_cast<unsigned>(max_den));
    v(i) = Rational(Integer(num), Integer(den));
  }
  return v;
}

inline RatVector random_nonzero_vector(std::mt19937_64& rng, int d) {
  while (true) {
    RatVector v = random_vector(rng, d);
    if (!is_zero_vector(v)) return v;
  }
}

}  // namespace joints::oracle
