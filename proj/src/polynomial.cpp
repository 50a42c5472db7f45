#include "joints/polynomial.hpp"

#include <cctype>
#include <numeric>

#include "joints/error.hpp"

namespace joints {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<int> exponents)
    : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent");
    degree_ += e;
  }
}

MultiIndex MultiIndex::unit(int dim, int axis) {
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(axis)] = 1;
  return MultiIndex(std::move(e));
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

// ------------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  }
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a,
                                            const UniPoly& b) {
  if (b.is_zero()) throw Error("UniPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = da; k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -=
          f * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

int UniPoly::distinct_real_roots() const {
  if (is_zero()) throw Error("distinct_real_roots of the zero polynomial");
  if (degree() == 0) return 0;
  std::vector<UniPoly> chain{*this, derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  auto sign_changes = [&](bool at_plus_infinity) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
      int s = p.leading().sign();
      if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  };
  return sign_changes(false) - sign_changes(true);
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = std::string(var);
    if (k >= 2) mono += "^" + std::to_string(k);
    if (k == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(MultiIndex::zero(dim), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int axis) {
  Polynomial p(dim);
  p.add_term(MultiIndex::unit(dim, axis), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p(m.dim());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const MultiIndex& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  if (m.dim() != dim_) throw DimensionMismatch("monomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("polynomial dimension mismatch");
  Polynomial out(a.dim_);
  std::vector<int> e(static_cast<std::size_t>(a.dim_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.dim_; ++i) {
        e[static_cast<std::size_t>(i)] = ma[i] + mb[i];
      }
      out.add_term(MultiIndex(e), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(Polynomial a, const Rational& s) {
  if (s.is_zero()) return Polynomial(a.dim_);
  for (auto& [m, c] : a.terms_) c *= s;
  return a;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const Rational mag = abs(c);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int dim) : s_(text), dim_(dim) {}

  Polynomial parse() {
    Polynomial p(dim_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = term();
      p.add_term(m, sign < 0 ? -c : c);
      first = false;
    }
    return p;
  }

  /// Largest variable index appearing in the text.
  static int max_variable(std::string_view text) {
    int best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != 'x') continue;
      int v = 0;
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + (text[j] - '0');
        ++j;
      }
      best = std::max(best, v);
    }
    return best;
  }

 private:
  std::pair<MultiIndex, Rational> term() {
    std::vector<int> e(static_cast<std::size_t>(dim_), 0);
    Rational coeff(1);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (any) {
        if (peek() != '*') break;
        ++pos_;
        skip_ws();
      }
      if (at_end()) fail("dangling '*'");
      if (peek() == 'x') {
        ++pos_;
        const long idx = integer();
        if (idx < 1 || idx > dim_) {
          fail("variable x" + std::to_string(idx) + " outside dimension " +
               std::to_string(dim_));
        }
        long power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = integer();
        }
        e[static_cast<std::size_t>(idx - 1)] += static_cast<int>(power);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      any = true;
    }
    if (!any) fail("missing term");
    return {MultiIndex(std::move(e)), coeff};
  }

  Rational number() {
    const std::size_t start = pos_;
    integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      integer();
    }
    std::string lit;
    for (char ch : s_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) lit += ch;
    }
    try {
      return Rational::parse(lit);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  long integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected digits");
    }
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int dim) {
  return PolyParser(text, dim).parse();
}

Polynomial Polynomial::parse(std::string_view text) {
  return parse(text, std::max(1, PolyParser::max_variable(text)));
}

// ---------------------------------------------------------------- operations

Rational evaluate(const Polynomial& p, const RatVector& x) {
  if (x.size() != p.dim()) {
    throw DimensionMismatch("evaluate: point dimension " +
                            std::to_string(x.size()) + " != " +
                            std::to_string(p.dim()));
  }
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (int i = 0; i < p.dim(); ++i) {
      for (int k = 0; k < m[i]; ++k) v *= x(i);
    }
    acc += v;
  }
  return acc;
}

Polynomial partial_derivative(const Polynomial& p, int axis) {
  if (axis < 0 || axis >= p.dim()) {
    throw PreconditionError("partial_derivative: axis out of range");
  }
  return derivative(p, MultiIndex::unit(p.dim(), axis));
}

Polynomial derivative(const Polynomial& p, const MultiIndex& order) {
  if (order.dim() != p.dim()) {
    throw DimensionMismatch("derivative order dimension mismatch");
  }
  Polynomial out(p.dim());
  std::vector<int> e(static_cast<std::size_t>(p.dim()));
  for (const auto& [m, c] : p.terms()) {
    if (!m.dominates(order)) continue;
    Rational f = c;
    for (int i = 0; i < p.dim(); ++i) {
      for (int k = 0; k < order[i]; ++k) f *= Rational(m[i] - k);
      e[static_cast<std::size_t>(i)] = m[i] - order[i];
    }
    out.add_term(MultiIndex(e), f);
  }
  return out;
}

RatVector gradient(const Polynomial& p, const RatVector& x) {
  RatVector g(p.dim());
  for (int i = 0; i < p.dim(); ++i) g(i) = evaluate(partial_derivative(p, i), x);
  return g;
}

UniPoly restrict_to_line(const Polynomial& p, const Line& l) {
  if (l.dim() != p.dim()) {
    throw DimensionMismatch("restrict_to_line: dimensions differ");
  }
  const int d = p.dim();
  const int deg = std::max(p.degree(), 0);
  // powers[i][k] = (base_i + t dir_i)^k
  std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& row = powers[static_cast<std::size_t>(i)];
    row.push_back(UniPoly::constant(Rational(1)));
    const UniPoly factor = UniPoly::linear(l.base()(i), l.dir()(i));
    for (int k = 1; k <= deg; ++k) row.push_back(row.back() * factor);
  }
  UniPoly q;
  for (const auto& [m, c] : p.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (int i = 0; i < d; ++i) {
      if (m[i] > 0) {
        t = t * powers[static_cast<std::size_t>(i)]
                      [static_cast<std::size_t>(m[i])];
      }
    }
    q += t;
  }
  return q;
}

bool vanishes_on_line(const Polynomial& p, const Line& l) {
  return restrict_to_line(p, l).is_zero();
}

bool vanishes_on_line_by_sampling(const Polynomial& p, const Line& l) {
  const int samples = std::max(p.degree(), 0) + 1;
  for (int k = 0; k < samples; ++k) {
    if (!evaluate(p, l.point_at(Rational(k))).is_zero()) return false;
  }
  return true;
}

}  // namespace joints
