#include "joints/vanishing.hpp"

#include <algorithm>

#include "joints/elimination.hpp"
#include "joints/error.hpp"

namespace joints {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::vector<MultiIndex> monomial_basis(int d, int b) {
  if (d < 1 || b < 0) throw PreconditionError("monomial_basis: d >= 1, b >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  // Exponent vectors of each total degree in ascending lex order: recurse
  // over coordinates, giving the first coordinate the smallest value first.
  auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == d - 1) {
      e[static_cast<std::size_t>(i)] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  for (int deg = 0; deg <= b; ++deg) fill(fill, 0, deg);
  return out;
}

int min_fit_degree(long m, int d) {
  if (m < 0 || d < 1) throw PreconditionError("min_fit_degree: m >= 0, d >= 1");
  int b = 0;
  while (binomial(b + d, d) <= m) ++b;
  return b;
}

long degree_ceiling(long m, int d) {
  Integer target;
  mpz_fac_ui(target.get_mpz_t(), static_cast<unsigned long>(d));
  target *= m;
  long bc = 0;
  Integer p;
  while (true) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(bc),
                  static_cast<unsigned long>(d));
    if (p >= target) return bc;
    ++bc;
  }
}

RatMatrix evaluation_matrix(const std::vector<RatVector>& points,
                            const std::vector<MultiIndex>& basis) {
  RatMatrix m(static_cast<Index>(points.size()),
              static_cast<Index>(basis.size()));
  for (std::size_t r = 0; r < points.size(); ++r) {
    const RatVector& x = points[r];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const MultiIndex& mono = basis[c];
      if (mono.dim() != x.size()) {
        throw DimensionMismatch("evaluation_matrix: point dimension mismatch");
      }
      Rational v(1);
      for (int i = 0; i < mono.dim(); ++i) {
        for (int k = 0; k < mono[i]; ++k) v *= x(i);
      }
      m(static_cast<Index>(r), static_cast<Index>(c)) = std::move(v);
    }
  }
  return m;
}

Polynomial fit_vanishing(std::vector<RatVector> points, int d) {
  if (points.empty()) throw PreconditionError("fit_vanishing: no points");
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatVector& a, const RatVector& b) {
                             return exactly_equal(a, b);
                           }),
               points.end());
  const int b = min_fit_degree(static_cast<long>(points.size()), d);
  const auto basis = monomial_basis(d, b);
  const auto x = nullspace_vector(evaluation_matrix(points, basis));
  if (!x) {
    throw InvariantViolation(
        "fit_vanishing: underdetermined system has trivial nullspace");
  }
  Polynomial p(d);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    p.add_term(basis[c], (*x)(static_cast<Index>(c)));
  }
  if (p.is_zero() || p.degree() > b) {
    throw InvariantViolation("fit_vanishing: bad fitted polynomial");
  }
  for (const auto& pt : points) {
    if (!evaluate(p, pt).is_zero()) {
      throw InvariantViolation("fit_vanishing: fitted polynomial misses a point");
    }
  }
  return p;
}

int minimal_vanishing_degree(const std::vector<RatVector>& points, int d) {
  if (points.empty()) return 0;
  for (int b = 0;; ++b) {
    const auto basis = monomial_basis(d, b);
    if (rank(evaluation_matrix(points, basis)) <
        static_cast<Index>(basis.size())) {
      return b;
    }
  }
}

}  // namespace joints
