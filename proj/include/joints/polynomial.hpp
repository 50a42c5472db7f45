#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/matrix.hpp"

namespace joints {

/// Exponent vector of a monomial. Ordered graded-lexicographically: by total
/// degree first, then by the exponent vector compared entrywise, so that in
/// degree one x_d < ... < x_2 < x_1.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }
  static MultiIndex unit(int dim, int axis);

  int dim() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// True when every exponent is at least the corresponding one of `other`.
  bool dominates(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Dense univariate polynomial in t, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// a + b t
  static UniPoly linear(const Rational& a, const Rational& b) {
    return UniPoly({a, b});
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of t^k, zero beyond the degree.
  Rational coeff(int k) const;
  Rational leading() const { return c_.back(); }

  Rational evaluate(const Rational& t) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder with deg(remainder) < deg(divisor).
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);
  /// Number of distinct real roots, by Sturm's theorem.
  int distinct_real_roots() const;

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Sparse d-variate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit Polynomial(int dim) : dim_(dim) {}
  static Polynomial constant(int dim, const Rational& c);
  /// x_{axis+1}
  static Polynomial variable(int dim, int axis);
  static Polynomial monomial(const MultiIndex& m, const Rational& c);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const MultiIndex& m) const;

  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;
  /// Parses the text form, e.g. "x1^2 - 3/2*x1*x3 + 1". Throws ParseError.
  static Polynomial parse(std::string_view text, int dim);
  /// Dimension inferred from the largest variable index (at least 1).
  static Polynomial parse(std::string_view text);

 private:
  int dim_;
  Terms terms_;
};

Rational evaluate(const Polynomial& p, const RatVector& x);
/// d/dx_{axis+1}; axis is 0-based.
Polynomial partial_derivative(const Polynomial& p, int axis);
/// Mixed partial derivative of multi-order `order`.
Polynomial derivative(const Polynomial& p, const MultiIndex& order);
RatVector gradient(const Polynomial& p, const RatVector& x);

/// q(t) = p(base + t dir).
UniPoly restrict_to_line(const Polynomial& p, const Line& l);
bool vanishes_on_line(const Polynomial& p, const Line& l);
/// Cross-check: p vanishes at deg(p) + 1 distinct points of l.
bool vanishes_on_line_by_sampling(const Polynomial& p, const Line& l);

}  // namespace joints
