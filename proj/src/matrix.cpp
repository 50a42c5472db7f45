#include "joints/matrix.hpp"

namespace joints {

RatVector make_vector(std::initializer_list<Rational> entries) {
  RatVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

RatVector zero_vector(Index n) {
  RatVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational(0);
  return v;
}

RatMatrix make_matrix(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RatMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

std::vector<std::string> to_strings(const RatVector& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

RatVector parse_vector(const std::vector<std::string>& entries) {
  RatVector v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    v(static_cast<Index>(i)) = Rational::parse(entries[i]);
  }
  return v;
}

std::string format_point(const RatVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).str();
  }
  return s + ")";
}

}  // namespace joints
