#include <doctest.h>

#include <random>

#include "joints/constructions.hpp"
#include "joints/error.hpp"
#include "joints/pipeline.hpp"
#include "joints/vanishing.hpp"
#include "oracles.hpp"

using namespace joints;

namespace {

Polynomial P(const char* text, int d = 3) { return Polynomial::parse(text, d); }

Polynomial cube_product() {
  return P("x1^2 - x1") * P("x2^2 - x2") * P("x3^2 - x3");
}

void check_prune_invariants(const Configuration& c, const PruneResult& r) {
  const long m = r.initial_m;
  const long removed = static_cast<long>(r.removed_points.size());
  if (m > 0) {
    CHECK(2 * removed < m);
  } else {
    CHECK(removed == 0);
  }
  CHECK(r.removed_lines.size() + r.surviving.size() == c.size());
  for (const auto& [p, lines] : r.survivors) {
    CHECK(is_joint(r.surviving, p));
    for (const auto& l : lines) CHECK(r.surviving.contains(l));
  }
  for (const auto& l : r.surviving.lines()) {
    long cnt = 0;
    for (const auto& p : r.survivors.points()) cnt += oracle::incident(l, p) ? 1 : 0;
    CHECK(Rational(cnt) >= r.threshold);
  }
}

}  // namespace

TEST_CASE("prune on grid(3,2) removes nothing") {
  const Configuration g = grid(3, 2);
  const PruneResult r = prune(g, find_joints(g));
  CHECK(r.threshold == Rational(Integer(1), Integer(3)));
  CHECK(r.removed_lines.empty());
  CHECK(r.survivors.size() == 8);
  check_prune_invariants(g, r);
}

TEST_CASE("prune removes exactly the orphan") {
  for (auto [d, k] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    const Configuration c = grid_plus_orphan(d, k);
    const PruneResult r = prune(c, find_joints(c));
    REQUIRE(r.removed_lines.size() == 1);
    CHECK(r.removed_lines[0] == orphan_line(d));
    CHECK(r.removed_points.empty());
    CHECK(r.survivors.size() == find_joints(grid(d, k)).size());
    check_prune_invariants(c, r);
  }
}

TEST_CASE("prune with m = 0 removes nothing") {
  const Configuration c = planar_bundle(3, 5);
  const PruneResult r = prune(c, find_joints(c));
  CHECK(r.threshold.is_zero());
  CHECK(r.removed_lines.empty());
  CHECK(r.survivors.empty());
  CHECK_THROWS_AS(prune(Configuration(3), JointSet{}), PreconditionError);
}

TEST_CASE("prune cascades on a sparse subset") {
  // Keep only two grid joints: threshold 2/24, so every line with no kept
  // joint goes, and the kept joints survive on their own lines.
  const Configuration g = grid(3, 2);
  const JointSet all = find_joints(g);
  JointSet some;
  some.insert(make_vector({0, 0, 0}), all.lines_at(make_vector({0, 0, 0})));
  some.insert(make_vector({1, 1, 1}), all.lines_at(make_vector({1, 1, 1})));
  const PruneResult r = prune(g, some);
  CHECK(r.surviving.size() == 6);
  CHECK(r.survivors.size() == 2);
  check_prune_invariants(g, r);
}

TEST_CASE("prune invariants on perturbed grids") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Line> ls = grid(3, 3).lines();
    // Drop a few lines, add a few random ones.
    for (int drop = 0; drop < 6; ++drop) ls.erase(ls.begin() + static_cast<long>(rng() % ls.size()));
    for (int add = 0; add < 3; ++add) {
      ls.push_back(Line::through(oracle::random_vector(rng, 3, 0, 2, 1),
                                 oracle::random_nonzero_vector(rng, 3)));
    }
    const Configuration c(3, ls);
    const JointSet js = find_joints(c);
    const PruneResult r = prune(c, js);
    check_prune_invariants(c, r);
    CHECK(bound_check(static_cast<long>(c.size()), static_cast<long>(js.size()), 3).holds);
  }
}

TEST_CASE("bound_check") {
  const BoundCheck a = bound_check(48, 64, 3);
  CHECK(a.lhs == 4096);
  CHECK(a.rhs == Integer("10616832"));
  CHECK(a.holds);
  CHECK(bound_check(1, 0, 3).holds);
  CHECK(bound_check(1, 0, 3).rhs == 96);
  const BoundCheck c = bound_check(32, 16, 4);
  CHECK(c.lhs == 4096);
  CHECK(c.rhs == Integer("805306368"));
  CHECK(c.holds);
  CHECK_FALSE(bound_check(1, 10, 3).holds);  // 100 > 96
  CHECK(bound_check(1, 9, 3).holds);
  CHECK(bound_constant(3) == doctest::Approx(9.797958971));
  CHECK(bound_check(3, 144, 2).holds);  // 144 <= 16 * 9
  CHECK_FALSE(bound_check(3, 145, 2).holds);
}

TEST_CASE("cascade") {
  CHECK(cascade(cube_product(), grid(3, 2).lines()) == 1);
  const Line x_axis = Line::through(make_vector({0, 0, 0}), make_vector({1, 0, 0}));
  CHECK(cascade(P("x1"), {x_axis}) == -1);
  CHECK(cascade(P("x2"), {x_axis}) == 0);
  CHECK(cascade(P("5"), {x_axis}) == -1);
  CHECK_THROWS_AS(cascade(Polynomial(3), {x_axis}), ZeroPolynomial);
  // The second mixed partial is (2x1-1)(2x2-1)(x3^2-x3), nonzero on z-lines.
  const Polynomial d12 = derivative(cube_product(), MultiIndex({1, 1, 0}));
  const Line z_line = Line::through(make_vector({0, 1, 0}), make_vector({0, 0, 1}));
  CHECK(restrict_to_line(d12, z_line) == UniPoly({0, 1, -1}));
}

TEST_CASE("gradient_at_joints_check") {
  const JointSet js = find_joints(grid(3, 2));
  const GradientReport ok = gradient_at_joints_check(cube_product(), js);
  CHECK(ok.count(GradientStatus::kZero) == 8);
  const GradientReport na = gradient_at_joints_check(P("x1^2 - x1"), js);
  CHECK(na.count(GradientStatus::kNotApplicable) == 8);
  CHECK_THROWS_AS(gradient_at_joints_check(Polynomial(3), js), ZeroPolynomial);
}

TEST_CASE("gradient lemma on random products vanishing on the grid lines") {
  // Every grid(3,2) line fixes two coordinates in {0,1}, so each of these
  // products kills every line.
  std::mt19937_64 rng(12);
  const Configuration g = grid(3, 2);
  const JointSet js = find_joints(g);
  const Polynomial f1 = P("x1^2 - x1"), f2 = P("x2^2 - x2"), f3 = P("x3^2 - x3");
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = f1 * f2 * oracle::random_polynomial(rng, 3, 2, 3) +
                         f1 * f3 * oracle::random_polynomial(rng, 3, 2, 3) +
                         f2 * f3 * oracle::random_polynomial(rng, 3, 2, 3);
    if (p.is_zero()) continue;
    for (const auto& l : g.lines()) CHECK(vanishes_on_line(p, l));
    const GradientReport r = gradient_at_joints_check(p, js);
    CHECK(r.count(GradientStatus::kZero) == 8);
    CHECK(r.count(GradientStatus::kViolation) == 0);
  }
}

TEST_CASE("trace examples") {
  const ProofTrace t34 = trace(grid(3, 4));
  CHECK(t34.outcome == Outcome::kBoundHolds);
  CHECK(t34.m == 64);
  CHECK(t34.b == 6);
  REQUIRE(t34.per_line_joint_counts.size() == 48);
  for (const auto& [l, c] : t34.per_line_joint_counts) CHECK(c == 4);

  const ProofTrace tp = trace(planar_bundle(3, 5));
  CHECK(tp.m == 0);
  CHECK(tp.bound.holds);
  // The bound is decided first; the pruning verdict is still recorded.
  CHECK(tp.outcome == Outcome::kBoundHolds);
  CHECK(tp.narrative.at(2).verdict == "all pruned");

  const ProofTrace t32 = trace(grid(3, 2));
  CHECK(t32.outcome == Outcome::kBoundHolds);
  CHECK(t32.b == 2);
  for (const auto& [l, c] : t32.per_line_joint_counts) CHECK(c == 2);
  CHECK(t32.narrative.at(3).verdict == "not dominated");
  REQUIRE(t32.fitted);
  CHECK(t32.fitted->str() == "x1^2 - x1");
  REQUIRE(t32.cascade_order);
  CHECK(*t32.cascade_order == -1);

  CHECK_THROWS_AS(trace(Configuration(2)), PreconditionError);
  CHECK(trace(Configuration(3)).outcome == Outcome::kBoundHolds);
}

TEST_CASE("trace JSON") {
  const auto j = trace_to_json(trace(grid_plus_orphan(3, 2)));
  CHECK(j["outcome"] == "BOUND_HOLDS");
  CHECK(j["n"] == "13");
  CHECK(j["m"] == "8");
  CHECK(j["b"] == "2");
  CHECK(j["threshold"] == "4/13");
  CHECK(j["fitted"] == "x1^2 - x1");
  CHECK(j["cascade_order"] == "-1");
  CHECK(j["per_line_joint_counts"].size() == 12);
  CHECK(j["per_line_joint_counts"][0]["count"] == "2");
  CHECK(j["narrative"].size() == 7);
  CHECK(j["narrative"][2]["step"] == "prune");
  const auto empty = trace_to_json(trace(planar_bundle(3, 2)));
  CHECK(empty["fitted"].is_null());
  CHECK(empty["cascade_order"].is_null());
}
