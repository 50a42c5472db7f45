#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "joints/matrix.hpp"

namespace joints {

/// A line {base + t * dir} in canonical form: dir is a primitive integer
/// vector whose first nonzero entry is positive, and base is the foot of the
/// perpendicular from the origin. Equal lines have identical representations.
class Line {
 public:
  /// Canonicalizes an arbitrary (point, direction) pair; throws
  /// PreconditionError for a zero direction or mismatched lengths.
  static Line through(const RatVector& point, const RatVector& direction);

  const RatVector& base() const { return base_; }
  const RatVector& dir() const { return dir_; }
  Index dim() const { return dir_.size(); }

  RatVector point_at(const Rational& t) const;

  friend bool operator==(const Line& a, const Line& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Line& a, const Line& b) {
    return compare(a, b) < 0;
  }
  /// Orders by (dir, base) lexicographically.
  static int compare(const Line& a, const Line& b);

 private:
  Line(RatVector base, RatVector dir)
      : base_(std::move(base)), dir_(std::move(dir)) {}

  RatVector base_;
  RatVector dir_;
};

/// Scales a nonzero rational vector to a primitive integer vector with a
/// positive leading entry.
RatVector primitive_direction(const RatVector& v);

/// A dimension plus a duplicate-free, sorted set of lines.
class Configuration {
 public:
  explicit Configuration(int dim) : dim_(dim) {}
  Configuration(int dim, std::vector<Line> lines);

  int dim() const { return dim_; }
  const std::vector<Line>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  /// Number of input lines dropped as duplicates of earlier ones.
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  bool contains(const Line& l) const;

 private:
  int dim_;
  std::vector<Line> lines_;
  std::size_t duplicates_removed_ = 0;
};

/// Points together with the lines through them, keyed in lex order.
class JointSet {
 public:
  using Map = std::map<RatVector, std::vector<Line>, LexLess>;

  void insert(RatVector point, std::vector<Line> incident_lines);
  void erase(const RatVector& point) { incidence_.erase(point); }

  std::size_t size() const { return incidence_.size(); }
  bool empty() const { return incidence_.empty(); }
  bool contains(const RatVector& p) const { return incidence_.count(p) > 0; }
  const std::vector<Line>& lines_at(const RatVector& p) const;
  std::vector<RatVector> points() const;

  Map::const_iterator begin() const { return incidence_.begin(); }
  Map::const_iterator end() const { return incidence_.end(); }

 private:
  Map incidence_;
};

bool incident(const Line& line, const RatVector& point);

/// Unique common point of two distinct lines, nullopt when parallel or skew.
/// Throws IdenticalLines when l1 == l2.
std::optional<RatVector> line_line_intersection(const Line& l1, const Line& l2);

Index direction_rank(const std::vector<Line>& lines);

std::vector<Line> incident_lines(const Configuration& config,
                                 const RatVector& point);

bool is_joint(const Configuration& config, const RatVector& point);
bool is_s_joint(const Configuration& config, const RatVector& point, int s);

/// Every point incident to at least d lines whose directions span R^d.
/// Candidates are the pairwise intersections, which is complete.
JointSet find_joints(const Configuration& config);
/// Points on at least two lines whose directions span >= s dimensions.
JointSet find_s_joints(const Configuration& config, int s);

struct Projection {
  RatMatrix map;  // s x d, integer entries in [-1000, 1000]
  Configuration image;
  int attempts = 0;
};

/// Projects onto R^s with a seeded random integer matrix, redrawing until
/// directions stay nonzero, distinct lines stay distinct, and distinct
/// s-joints keep distinct images. Throws GenericityFailure after 16 draws.
Projection project_to_generic_flat(const Configuration& config, int s,
                                   std::uint64_t seed);

inline constexpr int kProjectionBound = 1000;
inline constexpr int kProjectionAttempts = 16;

}  // namespace joints
