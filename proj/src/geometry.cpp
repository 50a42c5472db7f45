#include "joints/geometry.hpp"

#include <algorithm>
#include <set>

#include "joints/elimination.hpp"
#include "joints/error.hpp"
#include "joints/random.hpp"

namespace joints {

RatVector primitive_direction(const RatVector& v) {
  Integer lcm(1);
  for (Index i = 0; i < v.size(); ++i) {
    const Integer d = v(i).den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> ints(static_cast<std::size_t>(v.size()));
  Integer g(0);
  int lead_sign = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Integer n = v(i).num() * (lcm / v(i).den());
    if (lead_sign == 0 && n != 0) lead_sign = sgn(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints[static_cast<std::size_t>(i)] = std::move(n);
  }
  if (g == 0) throw PreconditionError("zero direction vector");
  if (lead_sign < 0) g = -g;
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    out(i) = Rational(Integer(ints[static_cast<std::size_t>(i)] / g));
  }
  return out;
}

Line Line::through(const RatVector& point, const RatVector& direction) {
  if (point.size() != direction.size()) {
    throw PreconditionError("line base and direction differ in length");
  }
  RatVector dir = primitive_direction(direction);
  const Rational t = dot(point, dir) / dot(dir, dir);
  RatVector base(point.size());
  for (Index i = 0; i < point.size(); ++i) base(i) = point(i) - t * dir(i);
  return Line(std::move(base), std::move(dir));
}

RatVector Line::point_at(const Rational& t) const {
  RatVector p(dim());
  for (Index i = 0; i < dim(); ++i) p(i) = base_(i) + t * dir_(i);
  return p;
}

int Line::compare(const Line& a, const Line& b) {
  const int c = lex_compare(a.dir_, b.dir_);
  return c != 0 ? c : lex_compare(a.base_, b.base_);
}

Configuration::Configuration(int dim, std::vector<Line> lines) : dim_(dim) {
  for (const auto& l : lines) {
    if (l.dim() != dim) {
      throw DimensionMismatch("line of dimension " + std::to_string(l.dim()) +
                              " in a configuration of dimension " +
                              std::to_string(dim));
    }
  }
  const std::size_t before = lines.size();
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  duplicates_removed_ = before - lines.size();
  lines_ = std::move(lines);
}

bool Configuration::contains(const Line& l) const {
  return std::binary_search(lines_.begin(), lines_.end(), l);
}

void JointSet::insert(RatVector point, std::vector<Line> incident_lines) {
  std::sort(incident_lines.begin(), incident_lines.end());
  incidence_[std::move(point)] = std::move(incident_lines);
}

const std::vector<Line>& JointSet::lines_at(const RatVector& p) const {
  const auto it = incidence_.find(p);
  if (it == incidence_.end()) throw PreconditionError("point not in joint set");
  return it->second;
}

std::vector<RatVector> JointSet::points() const {
  std::vector<RatVector> out;
  out.reserve(incidence_.size());
  for (const auto& [p, _] : incidence_) out.push_back(p);
  return out;
}

bool incident(const Line& line, const RatVector& point) {
  if (point.size() != line.dim()) {
    throw DimensionMismatch("incident: point and line dimensions differ");
  }
  const RatVector& b = line.base();
  const RatVector& v = line.dir();
  Index lead = 0;
  while (v(lead).is_zero()) ++lead;
  const Rational t = (point(lead) - b(lead)) / v(lead);
  for (Index i = 0; i < point.size(); ++i) {
    if (point(i) - b(i) != t * v(i)) return false;
  }
  return true;
}

std::optional<RatVector> line_line_intersection(const Line& l1,
                                                const Line& l2) {
  if (l1.dim() != l2.dim()) {
    throw DimensionMismatch("line_line_intersection: dimensions differ");
  }
  if (l1 == l2) throw IdenticalLines();
  // t * v1 - s * v2 = b2 - b1, d equations in two unknowns.
  const RatVector& v1 = l1.dir();
  const RatVector& v2 = l2.dir();
  const Index d = l1.dim();
  RatVector rhs(d);
  for (Index i = 0; i < d; ++i) rhs(i) = l2.base()(i) - l1.base()(i);

  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      // Cramer on rows i, j of [v1, -v2].
      const Rational det = -v1(i) * v2(j) + v2(i) * v1(j);
      if (det.is_zero()) continue;
      const Rational t = (-rhs(i) * v2(j) + v2(i) * rhs(j)) / det;
      const Rational s = (v1(i) * rhs(j) - rhs(i) * v1(j)) / det;
      for (Index k = 0; k < d; ++k) {
        if (t * v1(k) - s * v2(k) != rhs(k)) return std::nullopt;
      }
      return l1.point_at(t);
    }
  }
  return std::nullopt;  // parallel
}

Index direction_rank(const std::vector<Line>& lines) {
  if (lines.empty()) return 0;
  RatMatrix m(static_cast<Index>(lines.size()), lines.front().dim());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    m.row(static_cast<Index>(i)) = lines[i].dir().transpose();
  }
  return rank(m);
}

std::vector<Line> incident_lines(const Configuration& config,
                                 const RatVector& point) {
  std::vector<Line> out;
  for (const auto& l : config.lines()) {
    if (incident(l, point)) out.push_back(l);
  }
  return out;
}

bool is_joint(const Configuration& config, const RatVector& point) {
  const auto s = incident_lines(config, point);
  return static_cast<int>(s.size()) >= config.dim() &&
         direction_rank(s) == config.dim();
}

bool is_s_joint(const Configuration& config, const RatVector& point, int s) {
  if (s < 2 || s > config.dim()) {
    throw PreconditionError("is_s_joint requires 2 <= s <= d");
  }
  return direction_rank(incident_lines(config, point)) >= s;
}

namespace {

std::set<RatVector, LexLess> intersection_candidates(
    const Configuration& config) {
  std::set<RatVector, LexLess> candidates;
  const auto& lines = config.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto p = line_line_intersection(lines[i], lines[j])) {
        candidates.insert(std::move(*p));
      }
    }
  }
  return candidates;
}

}  // namespace

JointSet find_joints(const Configuration& config) {
  JointSet out;
  for (const auto& p : intersection_candidates(config)) {
    auto s = incident_lines(config, p);
    if (static_cast<int>(s.size()) >= config.dim() &&
        direction_rank(s) == config.dim()) {
      out.insert(p, std::move(s));
    }
  }
  return out;
}

JointSet find_s_joints(const Configuration& config, int s) {
  if (s < 2 || s > config.dim()) {
    throw PreconditionError("find_s_joints requires 2 <= s <= d");
  }
  JointSet out;
  for (const auto& p : intersection_candidates(config)) {
    auto inc = incident_lines(config, p);
    if (inc.size() >= 2 && direction_rank(inc) >= s) {
      out.insert(p, std::move(inc));
    }
  }
  return out;
}

namespace {

RatVector apply(const RatMatrix& m, const RatVector& x) {
  RatVector y(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (Index j = 0; j < m.cols(); ++j) acc += m(i, j) * x(j);
    y(i) = std::move(acc);
  }
  return y;
}

}  // namespace

Projection project_to_generic_flat(const Configuration& config, int s,
                                   std::uint64_t seed) {
  const int d = config.dim();
  if (s < 2 || s >= d) {
    throw PreconditionError("project_to_generic_flat requires 2 <= s < d");
  }
  const auto s_joints = find_s_joints(config, s);

  for (int attempt = 0; attempt < kProjectionAttempts; ++attempt) {
    SeededRng rng(attempt == 0 ? seed
                               : splitmix64(seed + static_cast<std::uint64_t>(
                                                       attempt)));
    RatMatrix m(s, d);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < d; ++j) {
        m(i, j) = Rational(rng.uniform(-kProjectionBound, kProjectionBound));
      }
    }

    bool ok = true;
    std::vector<Line> images;
    images.reserve(config.size());
    for (const auto& l : config.lines()) {
      const RatVector dir = apply(m, l.dir());
      if (is_zero_vector(dir)) {
        ok = false;
        break;
      }
      images.push_back(Line::through(apply(m, l.base()), dir));
    }
    if (!ok) continue;
    Configuration image(s, std::move(images));
    if (image.duplicates_removed() != 0) continue;

    std::set<RatVector, LexLess> joint_images;
    for (const auto& [p, _] : s_joints) {
      if (!joint_images.insert(apply(m, p)).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return Projection{std::move(m), std::move(image), attempt + 1};
  }
  throw GenericityFailure("no generic projection found in " +
                          std::to_string(kProjectionAttempts) + " attempts");
}

}  // namespace joints
