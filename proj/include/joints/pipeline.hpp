#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/polynomial.hpp"

namespace joints {

struct PruneResult {
  Configuration surviving{3};
  JointSet survivors;
  std::vector<Line> removed_lines;  // in removal order
  std::vector<RatVector> removed_points;
  Rational threshold;  // m / (2n), fixed for the whole run
  long initial_m = 0;
  long initial_n = 0;
};

/// Repeatedly removes the first line (canonical order) carrying fewer than
/// m/(2n) surviving points, together with its points, until none is left.
/// Requires a nonempty configuration; `joints` may be any subset of the
/// configuration's joints.
PruneResult prune(const Configuration& config, const JointSet& joints);

struct BoundCheck {
  bool holds = false;
  Integer lhs;  // m^(d-1)
  Integer rhs;  // 2^(d+1) * d! * n^d
};

/// m <= A n^(d/(d-1)) with A = (2^(d+1) d!)^(1/(d-1)), decided in integers.
/// Accepts d >= 2 so projected planar instances can be checked too.
BoundCheck bound_check(long n, long m, int d);

/// (2^(d+1) d!)^(1/(d-1)) as a double, for display only.
double bound_constant(int d);

/// Largest r such that every partial derivative of order <= r vanishes
/// identically on every line; -1 when p itself does not.
int cascade(const Polynomial& p, const std::vector<Line>& lines);

enum class GradientStatus {
  kNotApplicable,  // p does not vanish on some incident line
  kZero,           // hypothesis holds and the gradient is exactly zero
  kViolation,      // hypothesis holds but the gradient is nonzero (a bug)
};

struct GradientEntry {
  RatVector point;
  GradientStatus status;
  RatVector gradient;
};

struct GradientReport {
  std::vector<GradientEntry> entries;
  std::size_t count(GradientStatus s) const;
};

/// For each joint whose incident lines all carry p identically, checks that
/// the gradient of p vanishes there. Throws ZeroPolynomial for p = 0.
GradientReport gradient_at_joints_check(const Polynomial& p,
                                        const JointSet& joints);

enum class Outcome {
  kBoundHolds,
  kAllPruned,
  kDegreeNotDominated,
  kContradictionBug,
};

std::string to_string(Outcome o);

struct TraceStep {
  std::string step;
  std::string verdict;
  std::string detail;
};

struct ProofTrace {
  Outcome outcome = Outcome::kBoundHolds;
  int dim = 0;
  long n = 0;
  long m = 0;
  BoundCheck bound;
  long surviving_lines = 0;
  long surviving_joints = 0;
  Rational threshold;
  int b = 0;  // min_fit_degree of the surviving joint count
  std::vector<std::pair<Line, long>> per_line_joint_counts;
  std::optional<Polynomial> fitted;
  std::optional<int> cascade_order;
  long lines_carrying_p = 0;
  std::vector<TraceStep> narrative;
};

/// Runs the counting argument on a concrete configuration, recording each
/// step. The outcome is the first decisive step; the remaining steps still
/// run so the narrative is complete. Requires dim >= 3.
ProofTrace trace(const Configuration& config);

nlohmann::json trace_to_json(const ProofTrace& t);
std::string format_trace(const ProofTrace& t);

}  // namespace joints
