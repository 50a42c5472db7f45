#include "joints/curves.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "joints/config_io.hpp"
#include "joints/elimination.hpp"
#include "joints/error.hpp"

namespace joints {

ParamCurve::ParamCurve(std::vector<UniPoly> coords) : coords_(std::move(coords)) {
  for (const auto& x : coords_) degree_ = std::max(degree_, x.degree());
  if (degree_ < 1) throw PreconditionError("curve with all coordinates constant");
}

ParamCurve ParamCurve::from_line(const Line& l) {
  std::vector<UniPoly> coords;
  for (Index i = 0; i < l.dim(); ++i) {
    coords.push_back(UniPoly::linear(l.base()(i), l.dir()(i)));
  }
  return ParamCurve(std::move(coords));
}

RatVector ParamCurve::at(const Rational& t) const {
  RatVector p(dim());
  for (int i = 0; i < dim(); ++i) {
    p(i) = coords_[static_cast<std::size_t>(i)].evaluate(t);
  }
  return p;
}

long CurveConfiguration::total_degree() const {
  long n = 0;
  for (const auto& c : curves) n += c.degree();
  return n;
}

std::optional<RatVector> tangent_at(const ParamCurve& c, const Rational& t0) {
  RatVector v(c.dim());
  for (int i = 0; i < c.dim(); ++i) {
    v(i) = c.coords()[static_cast<std::size_t>(i)].derivative().evaluate(t0);
  }
  if (is_zero_vector(v)) return std::nullopt;
  return v;
}

bool curve_joint(const std::vector<std::pair<ParamCurve, Rational>>& at) {
  if (at.empty()) return false;
  const int d = at.front().first.dim();
  if (static_cast<int>(at.size()) < d) return false;
  const RatVector a = at.front().first.at(at.front().second);
  std::vector<RatVector> tangents;
  for (const auto& [c, t] : at) {
    if (c.dim() != d) throw DimensionMismatch("curve_joint: mixed dimensions");
    if (!exactly_equal(c.at(t), a)) return false;
    if (auto v = tangent_at(c, t)) tangents.push_back(std::move(*v));
  }
  if (static_cast<int>(tangents.size()) < d) return false;
  RatMatrix m(static_cast<Index>(tangents.size()), d);
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    m.row(static_cast<Index>(i)) = tangents[i].transpose();
  }
  return rank(m) == d;
}

bool on_curve(const ParamCurve& c, const RatVector& point) {
  if (point.size() != c.dim()) throw DimensionMismatch("on_curve: dimensions");
  UniPoly g;
  for (int i = 0; i < c.dim(); ++i) {
    const UniPoly shifted =
        c.coords()[static_cast<std::size_t>(i)] - UniPoly::constant(point(i));
    g = UniPoly::gcd(g, shifted);
  }
  // g = 0 means every coordinate is constant and equal to the point, which
  // the constructor rules out.
  if (g.is_zero()) return true;
  return g.distinct_real_roots() > 0;
}

UniPoly restrict_to_curve(const Polynomial& p, const ParamCurve& c) {
  if (p.dim() != c.dim()) throw DimensionMismatch("restrict_to_curve: dims");
  const int deg = std::max(p.degree(), 0);
  std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(c.dim()));
  for (int i = 0; i < c.dim(); ++i) {
    auto& row = powers[static_cast<std::size_t>(i)];
    row.push_back(UniPoly::constant(Rational(1)));
    for (int k = 1; k <= deg; ++k) {
      row.push_back(row.back() * c.coords()[static_cast<std::size_t>(i)]);
    }
  }
  UniPoly q;
  for (const auto& [m, coeff] : p.terms()) {
    UniPoly t = UniPoly::constant(coeff);
    for (int i = 0; i < c.dim(); ++i) {
      if (m[i] > 0) {
        t = t * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(m[i])];
      }
    }
    q += t;
  }
  return q;
}

bool vanishes_on_curve_by_bezout(const Polynomial& p, const ParamCurve& c) {
  const long samples = static_cast<long>(std::max(p.degree(), 0)) * c.degree() + 1;
  for (long k = 0; k < samples; ++k) {
    if (!evaluate(p, c.at(Rational(k))).is_zero()) return false;
  }
  return true;
}

bool is_curve_joint(const CurveConfiguration& cfg, const CurveJoint& j) {
  std::vector<std::pair<ParamCurve, Rational>> at;
  for (const auto& inc : j.incidences) {
    if (inc.curve >= cfg.curves.size()) {
      throw PreconditionError("curve joint references curve " +
                              std::to_string(inc.curve));
    }
    at.emplace_back(cfg.curves[inc.curve], inc.t);
  }
  return curve_joint(at) && exactly_equal(at.front().first.at(at.front().second),
                                          j.point);
}

CurvePruneResult curve_prune(const CurveConfiguration& cfg,
                             const std::vector<CurveJoint>& joints) {
  CurvePruneResult out;
  const long n = cfg.total_degree();
  if (n == 0) throw PreconditionError("curve_prune: no curves");

  std::set<RatVector, LexLess> alive;
  for (const auto& j : joints) alive.insert(j.point);
  out.initial_m = static_cast<long>(alive.size());
  const long m = out.initial_m;
  for (const auto& c : cfg.curves) {
    out.thresholds.emplace_back(Integer(m * c.degree()), Integer(2 * n));
  }

  const std::size_t k = cfg.curves.size();
  std::vector<std::vector<RatVector>> on(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& p : alive) {
      if (on_curve(cfg.curves[i], p)) on[i].push_back(p);
    }
  }
  std::vector<bool> removed(k, false);
  while (true) {
    std::size_t victim = k;
    for (std::size_t i = 0; i < k && victim == k; ++i) {
      if (removed[i]) continue;
      const long cnt = std::count_if(on[i].begin(), on[i].end(),
                                     [&](const RatVector& p) {
                                       return alive.count(p) > 0;
                                     });
      if (Rational(cnt) < out.thresholds[i]) victim = i;
    }
    if (victim == k) break;
    removed[victim] = true;
    out.removed_curves.push_back(victim);
    for (const auto& p : on[victim]) {
      if (alive.erase(p)) out.removed_points.push_back(p);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!removed[i]) out.surviving_curves.push_back(i);
  }
  out.survivors.assign(alive.begin(), alive.end());

  const long lost = static_cast<long>(out.removed_points.size());
  if (m > 0 ? !(2 * lost < m) : lost != 0) {
    throw InvariantViolation("curve_prune: lost " + std::to_string(lost) +
                             " of " + std::to_string(m) + " joints");
  }
  return out;
}

CurveFile curve_file_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("curve file: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("dim: missing or not an integer");
  }
  CurveFile f;
  f.config.dim = j["dim"].get<int>();
  if (f.config.dim < 2) throw ParseError("dim: must be >= 2");
  if (!j.contains("curves") || !j["curves"].is_array()) {
    throw ParseError("curves: missing or not an array");
  }
  const auto& curves = j["curves"];
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "].coords";
    if (!curves[i].is_object() || !curves[i].contains("coords") ||
        !curves[i]["coords"].is_array()) {
      throw ParseError(where + ": missing or not an array");
    }
    const auto& coords = curves[i]["coords"];
    if (static_cast<int>(coords.size()) != f.config.dim) {
      throw ParseError(where + ": expected " + std::to_string(f.config.dim) +
                       " coordinate polynomials");
    }
    std::vector<UniPoly> polys;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const RatVector v =
          vector_from_json(coords[c], where + "[" + std::to_string(c) + "]");
      polys.emplace_back(std::vector<Rational>(v.begin(), v.end()));
    }
    try {
      f.config.curves.emplace_back(std::move(polys));
    } catch (const PreconditionError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.contains("joints")) {
    const auto& js = j["joints"];
    if (!js.is_array()) throw ParseError("joints: not an array");
    for (std::size_t i = 0; i < js.size(); ++i) {
      const std::string where = "joints[" + std::to_string(i) + "]";
      if (!js[i].is_object() || !js[i].contains("incidences") ||
          !js[i]["incidences"].is_array() || js[i]["incidences"].empty()) {
        throw ParseError(where + ".incidences: missing or empty");
      }
      CurveJoint cj;
      for (const auto& inc : js[i]["incidences"]) {
        if (!inc.contains("curve") || !inc["curve"].is_number_unsigned() ||
            !inc.contains("t") || !inc["t"].is_string()) {
          throw ParseError(where + ": incidence needs \"curve\" and \"t\"");
        }
        const auto idx = inc["curve"].get<std::size_t>();
        if (idx >= f.config.curves.size()) {
          throw ParseError(where + ": curve index out of range");
        }
        Rational t;
        try {
          t = Rational::parse(inc["t"].get<std::string>());
        } catch (const ParseError& e) {
          throw ParseError(where + ".t: " + e.what());
        }
        cj.incidences.push_back({idx, t});
      }
      const auto& first = cj.incidences.front();
      cj.point = f.config.curves[first.curve].at(first.t);
      f.joints.push_back(std::move(cj));
    }
  }
  return f;
}

nlohmann::json curve_file_to_json(const CurveFile& f) {
  nlohmann::json j;
  j["dim"] = f.config.dim;
  auto curves = nlohmann::json::array();
  for (const auto& c : f.config.curves) {
    auto coords = nlohmann::json::array();
    for (const auto& x : c.coords()) {
      auto arr = nlohmann::json::array();
      if (x.is_zero()) arr.push_back("0");
      for (const auto& coeff : x.coefficients()) arr.push_back(coeff.str());
      coords.push_back(std::move(arr));
    }
    curves.push_back({{"coords", std::move(coords)}});
  }
  j["curves"] = std::move(curves);
  if (!f.joints.empty()) {
    auto js = nlohmann::json::array();
    for (const auto& cj : f.joints) {
      auto incs = nlohmann::json::array();
      for (const auto& inc : cj.incidences) {
        incs.push_back({{"curve", inc.curve}, {"t", inc.t.str()}});
      }
      js.push_back({{"incidences", std::move(incs)}});
    }
    j["joints"] = std::move(js);
  }
  return j;
}

CurveFile read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
    return curve_file_from_json(j);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace joints
