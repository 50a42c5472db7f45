#pragma once

// Joints of polynomially parametrized curves t -> (x_1(t), ..., x_d(t)).
// General algebraic curves would need implicitization; polynomial
// parametrizations cover lines and moment-type curves, and for them the
// Bezout step reduces to the univariate root bound.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "joints/geometry.hpp"
#include "joints/polynomial.hpp"

namespace joints {

class ParamCurve {
 public:
  /// Throws PreconditionError if every coordinate is constant.
  explicit ParamCurve(std::vector<UniPoly> coords);
  static ParamCurve from_line(const Line& l);

  int dim() const { return static_cast<int>(coords_.size()); }
  /// Maximum coordinate degree, at least 1.
  int degree() const { return degree_; }
  const std::vector<UniPoly>& coords() const { return coords_; }

  RatVector at(const Rational& t) const;

 private:
  std::vector<UniPoly> coords_;
  int degree_ = 0;
};

struct CurveConfiguration {
  int dim = 3;
  std::vector<ParamCurve> curves;

  /// n = sum of curve degrees.
  long total_degree() const;
};

/// (x_1'(t0), ..., x_d'(t0)), or nullopt at a singular parameter.
std::optional<RatVector> tangent_at(const ParamCurve& c, const Rational& t0);

/// The curves pass through one common point at the given parameters, there
/// are at least d of them, and their tangents span R^d.
bool curve_joint(const std::vector<std::pair<ParamCurve, Rational>>& at);

/// True iff some real parameter maps to `point`: the gcd of the
/// x_i(t) - point_i has a real root (Sturm count).
bool on_curve(const ParamCurve& c, const RatVector& point);

/// q(t) = p(x_1(t), ..., x_d(t)); deg q <= deg(p) * c.degree().
UniPoly restrict_to_curve(const Polynomial& p, const ParamCurve& c);
/// Cross-check: p vanishes at deg(p) * c.degree() + 1 parameter values.
bool vanishes_on_curve_by_bezout(const Polynomial& p, const ParamCurve& c);

struct CurveIncidence {
  std::size_t curve;
  Rational t;
};

/// A joint handed in as (curve, parameter) pairs.
struct CurveJoint {
  RatVector point;
  std::vector<CurveIncidence> incidences;
};

/// Evaluates the incidences, checks they agree, and tests curve_joint.
bool is_curve_joint(const CurveConfiguration& cfg, const CurveJoint& j);

struct CurvePruneResult {
  std::vector<std::size_t> surviving_curves;
  std::vector<std::size_t> removed_curves;  // in removal order
  std::vector<RatVector> survivors;
  std::vector<RatVector> removed_points;
  std::vector<Rational> thresholds;  // m * n_i / (2n), per curve
  long initial_m = 0;
};

/// Removes the lowest-index curve passing through fewer than m n_i / (2n)
/// surviving joints, together with the joints on it, until none is left.
CurvePruneResult curve_prune(const CurveConfiguration& cfg,
                             const std::vector<CurveJoint>& joints);

/// {"dim": d, "curves": [{"coords": [[c0, c1, ...], ...]}],
///  "joints": [{"incidences": [{"curve": i, "t": "p/q"}]}]}; "joints" is
/// optional and the joint points are recomputed from the incidences.
struct CurveFile {
  CurveConfiguration config;
  std::vector<CurveJoint> joints;
};

CurveFile curve_file_from_json(const nlohmann::json& j);
nlohmann::json curve_file_to_json(const CurveFile& f);
CurveFile read_curve_file(const std::string& path);

}  // namespace joints
