#include <doctest.h>

#include <random>

#include "joints/curves.hpp"
#include "joints/error.hpp"
#include "oracles.hpp"

using namespace joints;

namespace {

ParamCurve moment() {
  return ParamCurve({UniPoly({0, 1}), UniPoly({0, 0, 1}), UniPoly({0, 0, 0, 1})});
}

ParamCurve line_curve(std::initializer_list<Rational> base,
                      std::initializer_list<Rational> dir) {
  return ParamCurve::from_line(Line::through(make_vector(base), make_vector(dir)));
}

Polynomial P(const char* text) { return Polynomial::parse(text, 3); }

}  // namespace

TEST_CASE("tangent_at") {
  auto v = tangent_at(moment(), Rational(1));
  REQUIRE(v);
  CHECK(exactly_equal(*v, make_vector({1, 2, 3})));
  const ParamCurve l = line_curve({0, 0, 0}, {2, 3, 5});
  for (int t : {-2, 0, 7}) CHECK(exactly_equal(*tangent_at(l, Rational(t)), make_vector({2, 3, 5})));
  const ParamCurve cusp({UniPoly({0, 0, 1}), UniPoly({0, 0, 0, 1}), UniPoly({0, 0, 0, 0, 1})});
  CHECK_FALSE(tangent_at(cusp, Rational(0)));
  CHECK(cusp.degree() == 4);
  CHECK_THROWS_AS(ParamCurve({UniPoly({1}), UniPoly({2}), UniPoly()}), PreconditionError);
}

TEST_CASE("curve_joint") {
  const ParamCurve ax = line_curve({0, 0, 0}, {1, 0, 0});
  const ParamCurve ay = line_curve({0, 0, 0}, {0, 1, 0});
  const ParamCurve az = line_curve({0, 0, 0}, {0, 0, 1});
  CHECK(curve_joint({{ax, Rational(0)}, {ay, Rational(0)}, {az, Rational(0)}}));
  CHECK_FALSE(curve_joint({{ax, Rational(0)}, {ay, Rational(0)}}));
  CHECK_FALSE(curve_joint({{ax, Rational(0)}, {ay, Rational(1)}, {az, Rational(0)}}));

  // Moment curve at t = 1 passes through (1,1,1) with tangent (1,2,3).
  const ParamCurve l1 = ParamCurve({UniPoly({1, 1}), UniPoly({1}), UniPoly({1})});
  const ParamCurve l2 = ParamCurve({UniPoly({1}), UniPoly({1, 1}), UniPoly({1})});
  CHECK(curve_joint({{moment(), Rational(1)}, {l1, Rational(0)}, {l2, Rational(0)}}));
  // Tangents (1,2,3), (1,2,3)-parallel line, and e1 span only a plane.
  const ParamCurve l3 = ParamCurve({UniPoly({1, 1}), UniPoly({1, 2}), UniPoly({1, 3})});
  CHECK_FALSE(curve_joint({{moment(), Rational(1)}, {l1, Rational(0)}, {l3, Rational(0)}}));
}

TEST_CASE("restrict_to_curve") {
  CHECK(restrict_to_curve(P("x3 - x1*x2"), moment()).is_zero());
  CHECK(restrict_to_curve(P("x1"), moment()) == UniPoly({0, 1}));
  const UniPoly q = restrict_to_curve(P("x2^2 - x1*x3"), moment());
  CHECK(q.is_zero());
  CHECK(vanishes_on_curve_by_bezout(P("x2^2 - x1*x3"), moment()));
  CHECK_FALSE(vanishes_on_curve_by_bezout(P("x1"), moment()));
}

TEST_CASE("restriction along line-as-curve matches restrict_to_line") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, 3, 4, 5);
    const Line l = Line::through(oracle::random_vector(rng, 3),
                                 oracle::random_nonzero_vector(rng, 3));
    CHECK(restrict_to_curve(p, ParamCurve::from_line(l)) == restrict_to_line(p, l));
  }
}

TEST_CASE("restriction degree respects the Bezout bound") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, 3, 3, 4);
    std::vector<UniPoly> coords;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> c;
      const int deg = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng() % 7) - 3);
      coords.emplace_back(c);
    }
    bool degenerate = true;
    for (const auto& x : coords) degenerate = degenerate && x.degree() < 1;
    if (degenerate) continue;
    const ParamCurve c(coords);
    const UniPoly q = restrict_to_curve(p, c);
    CHECK(q.degree() <= std::max(p.degree(), 0) * c.degree());
    CHECK(q.is_zero() == vanishes_on_curve_by_bezout(p, c));
  }
}

TEST_CASE("on_curve") {
  CHECK(on_curve(moment(), make_vector({2, 4, 8})));
  CHECK_FALSE(on_curve(moment(), make_vector({2, 4, 9})));
  // Reached only at the irrational parameter t = sqrt 2.
  const ParamCurve even({UniPoly({0, 0, 1}), UniPoly({0, 0, 0, 0, 1}), UniPoly()});
  CHECK(on_curve(even, make_vector({2, 4, 0})));
  CHECK_FALSE(on_curve(even, make_vector({-2, 4, 0})));
}

TEST_CASE("curve_prune") {
  CurveConfiguration cfg;
  cfg.dim = 3;
  cfg.curves = {ParamCurve({UniPoly({0, 1}), UniPoly(), UniPoly()}),
                ParamCurve({UniPoly(), UniPoly({0, 1}), UniPoly()}),
                ParamCurve({UniPoly(), UniPoly(), UniPoly({0, 1})}),
                ParamCurve({UniPoly({5, 1}), UniPoly({7}), UniPoly({11})})};
  const CurveJoint origin{make_vector({0, 0, 0}), {{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}};
  CHECK(is_curve_joint(cfg, origin));
  const CurvePruneResult r = curve_prune(cfg, {origin});
  REQUIRE(r.removed_curves.size() == 1);
  CHECK(r.removed_curves[0] == 3);
  CHECK(r.survivors.size() == 1);
  CHECK(r.thresholds[0] == Rational(Integer(1), Integer(8)));
  CHECK(2 * static_cast<long>(r.removed_points.size()) < r.initial_m);

  const CurvePruneResult none = curve_prune(cfg, {});
  CHECK(none.removed_curves.empty());
  CHECK(none.initial_m == 0);
}

TEST_CASE("curve_prune thresholds are exact") {
  // Ten curves of total degree 12 with one of degree 2, and 6 joints.
  CurveConfiguration cfg;
  cfg.dim = 3;
  cfg.curves.push_back(moment());  // degree 3
  for (int i = 0; i < 9; ++i) {
    cfg.curves.push_back(ParamCurve({UniPoly({Rational(i), 1}), UniPoly({Rational(i)}), UniPoly({1})}));
  }
  CHECK(cfg.total_degree() == 12);
  cfg.curves[0] = ParamCurve({UniPoly({0, 1}), UniPoly({0, 0, 1}), UniPoly({0})});  // degree 2
  cfg.curves.push_back(ParamCurve({UniPoly({0, 1}), UniPoly({0}), UniPoly({0})}));
  CHECK(cfg.total_degree() == 12);
  std::vector<CurveJoint> js;
  for (int i = 0; i < 6; ++i) js.push_back({make_vector({i, i * i, 0}), {{0, Rational(i)}}});
  const CurvePruneResult r = curve_prune(cfg, js);
  CHECK(r.thresholds[0] == Rational(Integer(1), Integer(2)));
  CHECK(2 * static_cast<long>(r.removed_points.size()) < 6);
}

TEST_CASE("curve_prune loses fewer than half on random curve families") {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    // Lines through lattice points of a small box, as degree-1 curves, plus
    // a moment curve; joints handed in are the lattice points where at least
    // three axis lines meet.
    CurveConfiguration cfg;
    cfg.dim = 3;
    std::vector<CurveJoint> js;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        cfg.curves.push_back(ParamCurve({UniPoly({Rational(x)}), UniPoly({Rational(y)}), UniPoly({0, 1})}));
        cfg.curves.push_back(ParamCurve({UniPoly({Rational(x)}), UniPoly({0, 1}), UniPoly({Rational(y)})}));
        cfg.curves.push_back(ParamCurve({UniPoly({0, 1}), UniPoly({Rational(x)}), UniPoly({Rational(y)})}));
      }
    }
    for (int extra = 0; extra < 3; ++extra) {
      cfg.curves.push_back(ParamCurve({UniPoly({static_cast<long>(rng() % 5), 1, 1}),
                                       UniPoly({static_cast<long>(rng() % 5), 0, 1}),
                                       UniPoly({static_cast<long>(rng() % 5), 2})}));
    }
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) js.push_back({make_vector({x, y, z}), {}});
    const CurvePruneResult r = curve_prune(cfg, js);
    CHECK(2 * static_cast<long>(r.removed_points.size()) < r.initial_m);
    CHECK(r.removed_curves.size() + r.surviving_curves.size() == cfg.curves.size());
  }
}

TEST_CASE("curve file format") {
  const auto j = nlohmann::json::parse(R"({
    "dim": 3,
    "curves": [{"coords": [["0","1"],["0","0","1"],["0","0","0","1"]]},
               {"coords": [["1","1"],["1"],["1"]]}],
    "joints": [{"incidences": [{"curve": 0, "t": "1"}, {"curve": 1, "t": "0"}]}]})");
  const CurveFile f = curve_file_from_json(j);
  REQUIRE(f.config.curves.size() == 2);
  CHECK(f.config.curves[0].degree() == 3);
  CHECK(f.config.total_degree() == 4);
  REQUIRE(f.joints.size() == 1);
  CHECK(exactly_equal(f.joints[0].point, make_vector({1, 1, 1})));
  CHECK_FALSE(is_curve_joint(f.config, f.joints[0]));
  const CurveFile back = curve_file_from_json(curve_file_to_json(f));
  CHECK(back.config.curves[0].coords() == f.config.curves[0].coords());

  auto message = [](const char* text) {
    try {
      curve_file_from_json(nlohmann::json::parse(text));
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"dim": 3, "curves": [{"coords": [["0","1"],["0"]]}]})")
            .find("curves[0].coords") != std::string::npos);
  CHECK(message(R"({"dim": 3, "curves": [{"coords": [["0","1"],["0"],["q"]]}]})")
            .find("curves[0].coords[2][0]") != std::string::npos);
  CHECK(message(R"({"dim": 3, "curves": [{"coords": [["1"],["0"],["2"]]}]})")
            .find("constant") != std::string::npos);
}
