#include "joints/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "joints/config_io.hpp"
#include "joints/error.hpp"
#include "joints/vanishing.hpp"

namespace joints {

// --------------------------------------------------------------------- prune

PruneResult prune(const Configuration& config, const JointSet& joints) {
  if (config.size() == 0) throw PreconditionError("prune: no lines");
  PruneResult out;
  out.initial_n = static_cast<long>(config.size());
  out.initial_m = static_cast<long>(joints.size());
  out.threshold = Rational(Integer(out.initial_m), Integer(2 * out.initial_n));

  std::map<Line, long> counts;
  for (const auto& l : config.lines()) counts[l] = 0;
  for (const auto& [p, lines] : joints) {
    for (const auto& l : lines) {
      const auto it = counts.find(l);
      if (it == counts.end()) {
        throw PreconditionError("prune: joint references a line not in the "
                                "configuration");
      }
      ++it->second;
    }
  }
  JointSet alive = joints;

  while (true) {
    auto victim = std::find_if(counts.begin(), counts.end(), [&](const auto& e) {
      return Rational(e.second) < out.threshold;
    });
    if (victim == counts.end()) break;
    const Line line = victim->first;
    counts.erase(victim);
    out.removed_lines.push_back(line);
    std::vector<RatVector> doomed;
    for (const auto& [p, lines] : alive) {
      if (std::binary_search(lines.begin(), lines.end(), line)) {
        doomed.push_back(p);
      }
    }
    for (const auto& p : doomed) {
      for (const auto& l : alive.lines_at(p)) {
        if (auto it = counts.find(l); it != counts.end()) --it->second;
      }
      alive.erase(p);
      out.removed_points.push_back(p);
    }
  }

  std::vector<Line> kept;
  for (const auto& [l, c] : counts) kept.push_back(l);
  out.surviving = Configuration(config.dim(), std::move(kept));
  out.survivors = std::move(alive);

  // Checks: removal never strands a survivor, and the loss is under m/2.
  const long removed = static_cast<long>(out.removed_points.size());
  if (out.initial_m > 0 ? !(2 * removed < out.initial_m) : removed != 0) {
    throw InvariantViolation("prune: removed " + std::to_string(removed) +
                             " of " + std::to_string(out.initial_m) +
                             " points, not < m/2");
  }
  for (const auto& [p, lines] : out.survivors) {
    for (const auto& l : lines) {
      if (!out.surviving.contains(l)) {
        throw InvariantViolation("prune: survivor references removed line");
      }
    }
  }
  for (const auto& [l, c] : counts) {
    if (Rational(c) < out.threshold) {
      throw InvariantViolation("prune: surviving line below threshold");
    }
  }
  return out;
}

// --------------------------------------------------------------------- bound

BoundCheck bound_check(long n, long m, int d) {
  if (n < 1 || m < 0 || d < 2) {
    throw PreconditionError("bound_check requires n >= 1, m >= 0, d >= 2");
  }
  BoundCheck out;
  mpz_ui_pow_ui(out.lhs.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(d - 1));
  Integer fact, nd, two;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(d));
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(d + 1));
  out.rhs = two * fact * nd;
  out.holds = out.lhs <= out.rhs;
  return out;
}

double bound_constant(int d) {
  double c = std::pow(2.0, d + 1);
  for (int i = 2; i <= d; ++i) c *= i;
  return std::pow(c, 1.0 / (d - 1));
}

// ------------------------------------------------------------------- cascade

int cascade(const Polynomial& p, const std::vector<Line>& lines) {
  if (p.is_zero()) throw ZeroPolynomial("cascade: zero polynomial");
  int r = -1;
  for (int order = 0; order <= p.degree(); ++order) {
    for (const auto& alpha : monomial_basis(p.dim(), order)) {
      if (alpha.degree() != order) continue;
      const Polynomial q = derivative(p, alpha);
      for (const auto& l : lines) {
        if (!vanishes_on_line(q, l)) return r;
      }
    }
    r = order;
  }
  return r;
}

// ------------------------------------------------------------------ gradient

std::size_t GradientReport::count(GradientStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [s](const GradientEntry& e) { return e.status == s; }));
}

GradientReport gradient_at_joints_check(const Polynomial& p,
                                        const JointSet& joints) {
  if (p.is_zero()) throw ZeroPolynomial("gradient_at_joints_check: p = 0");
  GradientReport report;
  for (const auto& [a, lines] : joints) {
    GradientEntry e{a, GradientStatus::kNotApplicable, zero_vector(p.dim())};
    const bool hypothesis =
        direction_rank(lines) == p.dim() &&
        std::all_of(lines.begin(), lines.end(),
                    [&](const Line& l) { return vanishes_on_line(p, l); });
    if (hypothesis) {
      e.gradient = gradient(p, a);
      e.status = is_zero_vector(e.gradient) ? GradientStatus::kZero
                                            : GradientStatus::kViolation;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// --------------------------------------------------------------------- trace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kBoundHolds: return "BOUND_HOLDS";
    case Outcome::kAllPruned: return "ALL_PRUNED";
    case Outcome::kDegreeNotDominated: return "DEGREE_NOT_DOMINATED";
    case Outcome::kContradictionBug: return "CONTRADICTION_BUG";
  }
  return "UNKNOWN";
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

ProofTrace trace(const Configuration& config) {
  const int d = config.dim();
  if (d < 3) throw PreconditionError("trace requires dim >= 3");
  ProofTrace t;
  t.dim = d;
  std::optional<Outcome> decided;
  auto decide = [&](Outcome o) {
    if (!decided) decided = o;
  };
  auto record = [&](std::string step, std::string verdict, std::string detail) {
    t.narrative.push_back({std::move(step), std::move(verdict), std::move(detail)});
  };

  const JointSet joints = find_joints(config);
  t.n = static_cast<long>(config.size());
  t.m = static_cast<long>(joints.size());
  record("joints", "found",
         "m = " + std::to_string(t.m) + " joints among n = " +
             std::to_string(t.n) + " lines in R^" + std::to_string(d));

  if (t.n == 0) {
    t.bound = BoundCheck{true, Integer(0), Integer(0)};
    record("bound", "holds", "no lines, no joints");
    decide(Outcome::kBoundHolds);
    record("prune", "skipped", "nothing to prune");
    t.outcome = *decided;
    return t;
  }

  t.bound = bound_check(t.n, t.m, d);
  record("bound", t.bound.holds ? "holds" : "violated",
         "m^(d-1) = " + t.bound.lhs.get_str() +
             (t.bound.holds ? " <= " : " > ") + "2^(d+1) d! n^d = " +
             t.bound.rhs.get_str() + "; A(" + std::to_string(d) + ") ~ " +
             fmt_double(bound_constant(d)) +
             (t.bound.holds
                  ? ", so the assumption m > A n^(d/(d-1)) is unsatisfiable"
                  : ""));
  if (t.bound.holds) decide(Outcome::kBoundHolds);

  const PruneResult pr = prune(config, joints);
  t.threshold = pr.threshold;
  t.surviving_lines = static_cast<long>(pr.surviving.size());
  t.surviving_joints = static_cast<long>(pr.survivors.size());
  record("prune", pr.survivors.empty() ? "all pruned" : "survivors remain",
         "threshold m/(2n) = " + pr.threshold.str() + "; lines removed: " +
             std::to_string(pr.removed_lines.size()) + ", points removed: " +
             std::to_string(pr.removed_points.size()) + "; " +
             std::to_string(t.surviving_lines) + " lines and " +
             std::to_string(t.surviving_joints) + " joints survive");
  if (pr.survivors.empty()) {
    decide(Outcome::kAllPruned);
    record("degree", "skipped", "no surviving joints");
    t.outcome = *decided;
    return t;
  }

  const long ms = t.surviving_joints;
  t.b = min_fit_degree(ms, d);
  if (!(binomial(t.b + d, d) > ms) ||
      (t.b > 0 && binomial(t.b - 1 + d, d) > ms)) {
    throw InvariantViolation("trace: min_fit_degree disagrees with binomials");
  }
  std::map<Line, long> counts;
  for (const auto& l : pr.surviving.lines()) counts[l] = 0;
  for (const auto& [p, lines] : pr.survivors) {
    for (const auto& l : lines) ++counts[l];
  }
  long lo = -1, hi = -1;
  for (const auto& [l, c] : counts) {
    t.per_line_joint_counts.emplace_back(l, c);
    lo = lo < 0 ? c : std::min(lo, c);
    hi = std::max(hi, c);
  }
  const bool dominated = lo > t.b;
  record("degree", dominated ? "dominated" : "not dominated",
         "b = " + std::to_string(t.b) + " (C(b+d,d) = " +
             binomial(t.b + d, d).get_str() + " > " + std::to_string(ms) +
             ", ceiling " + std::to_string(degree_ceiling(ms, d)) +
             "); surviving lines carry " + std::to_string(lo) + ".." +
             std::to_string(hi) + " joints; " +
             (dominated ? "every line carries more than b"
                        : "a line carrying <= b joints need not lie in the "
                          "zero set of p"));
  if (!dominated) decide(Outcome::kDegreeNotDominated);

  Polynomial p = fit_vanishing(pr.survivors.points(), d);
  for (const auto& l : pr.surviving.lines()) {
    const bool exact = vanishes_on_line(p, l);
    if (exact != vanishes_on_line_by_sampling(p, l)) {
      throw InvariantViolation("trace: restriction and sampling disagree");
    }
    if (exact) ++t.lines_carrying_p;
  }
  record("vanishing", "fitted",
         "p = " + p.str() + " (degree " + std::to_string(p.degree()) +
             ") vanishes on all " + std::to_string(ms) +
             " surviving joints and identically on " +
             std::to_string(t.lines_carrying_p) + " of " +
             std::to_string(t.surviving_lines) + " surviving lines");

  const GradientReport gr = gradient_at_joints_check(p, pr.survivors);
  if (gr.count(GradientStatus::kViolation) != 0) {
    throw InvariantViolation("trace: nonzero gradient at a joint whose lines "
                             "all lie in the zero set of p");
  }
  record("gradient", "checked",
         std::to_string(gr.count(GradientStatus::kZero)) +
             " joints have all incident lines in Z(p) and gradient exactly 0; " +
             std::to_string(gr.count(GradientStatus::kNotApplicable)) +
             " joints do not meet the hypothesis");

  const int r = cascade(p, pr.surviving.lines());
  t.cascade_order = r;
  const bool exhausted = r >= p.degree();
  record("cascade", exhausted ? "exhausted" : "stopped",
         exhausted ? "every derivative of every order vanishes on every "
                     "surviving line, impossible for a nonzero polynomial"
                   : "derivatives vanish identically on all surviving lines "
                     "up to order " + std::to_string(r) +
                         (r < 0 ? " (p itself does not)" : ""));
  if (exhausted) decided = Outcome::kContradictionBug;

  t.fitted = std::move(p);
  t.outcome = decided.value_or(Outcome::kBoundHolds);
  return t;
}

nlohmann::json trace_to_json(const ProofTrace& t) {
  nlohmann::json j;
  j["outcome"] = to_string(t.outcome);
  j["dim"] = std::to_string(t.dim);
  j["n"] = std::to_string(t.n);
  j["m"] = std::to_string(t.m);
  j["bound"] = {{"holds", t.bound.holds},
                {"lhs", t.bound.lhs.get_str()},
                {"rhs", t.bound.rhs.get_str()}};
  j["threshold"] = t.threshold.str();
  j["surviving_lines"] = std::to_string(t.surviving_lines);
  j["surviving_joints"] = std::to_string(t.surviving_joints);
  j["b"] = std::to_string(t.b);
  auto counts = nlohmann::json::array();
  for (const auto& [l, c] : t.per_line_joint_counts) {
    counts.push_back({{"base", vector_to_json(l.base())},
                      {"dir", vector_to_json(l.dir())},
                      {"count", std::to_string(c)}});
  }
  j["per_line_joint_counts"] = std::move(counts);
  j["fitted"] = t.fitted ? nlohmann::json(t.fitted->str()) : nlohmann::json();
  j["cascade_order"] = t.cascade_order
                           ? nlohmann::json(std::to_string(*t.cascade_order))
                           : nlohmann::json();
  j["lines_carrying_p"] = std::to_string(t.lines_carrying_p);
  auto steps = nlohmann::json::array();
  for (const auto& s : t.narrative) {
    steps.push_back(
        {{"step", s.step}, {"verdict", s.verdict}, {"detail", s.detail}});
  }
  j["narrative"] = std::move(steps);
  return j;
}

std::string format_trace(const ProofTrace& t) {
  std::ostringstream os;
  int i = 1;
  for (const auto& s : t.narrative) {
    os << i++ << ". [" << s.step << "] " << s.verdict << ": " << s.detail
       << "\n";
  }
  os << "outcome: " << to_string(t.outcome) << "\n";
  return os.str();
}

}  // namespace joints
