#include "joints/constructions.hpp"

#include <set>

#include "joints/error.hpp"
#include "joints/random.hpp"

namespace joints {

Configuration grid(int d, int k) {
  if (d < 3 || k < 2) throw PreconditionError("grid requires d >= 3, k >= 2");
  std::vector<Line> lines;
  long cells = 1;
  for (int i = 0; i < d - 1; ++i) cells *= k;
  for (int axis = 0; axis < d; ++axis) {
    RatVector dir = zero_vector(d);
    dir(axis) = Rational(1);
    for (long cell = 0; cell < cells; ++cell) {
      RatVector base = zero_vector(d);
      long rest = cell;
      for (int i = 0; i < d; ++i) {
        if (i == axis) continue;
        base(i) = Rational(rest % k);
        rest /= k;
      }
      lines.push_back(Line::through(base, dir));
    }
  }
  return Configuration(d, std::move(lines));
}

Configuration random_config(int d, int n, std::uint64_t seed,
                            int coord_bound) {
  if (n < 1) throw PreconditionError("random_config requires n >= 1");
  if (d < 2) throw PreconditionError("random_config requires d >= 2");
  if (coord_bound < 1) {
    throw PreconditionError("random_config requires coord_bound >= 1");
  }
  SeededRng rng(seed);
  std::set<Line> lines;
  while (static_cast<int>(lines.size()) < n) {
    RatVector base(d), dir(d);
    for (int i = 0; i < d; ++i) {
      base(i) = Rational(rng.uniform(-coord_bound, coord_bound));
    }
    for (int i = 0; i < d; ++i) {
      dir(i) = Rational(rng.uniform(-coord_bound, coord_bound));
    }
    if (is_zero_vector(dir)) continue;
    lines.insert(Line::through(base, dir));
  }
  return Configuration(d, {lines.begin(), lines.end()});
}

Configuration planar_bundle(int d, int n) {
  if (d < 2 || n < 1) {
    throw PreconditionError("planar_bundle requires d >= 2, n >= 1");
  }
  std::vector<Line> lines;
  const RatVector origin = zero_vector(d);
  for (int j = 0; j < n; ++j) {
    RatVector dir = zero_vector(d);
    dir(0) = Rational(1);
    dir(1) = Rational(j);
    lines.push_back(Line::through(origin, dir));
  }
  return Configuration(d, std::move(lines));
}

Line orphan_line(int d) {
  // Coordinates of an orphan point have pairwise distinct fractional parts
  // 1/2, 1/3, ..., so at most one is an integer. Grid-line points have d-1
  // integer coordinates, hence the orphan meets no grid line when d >= 3.
  RatVector base(d), dir(d);
  for (int i = 0; i < d; ++i) {
    base(i) = Rational(Integer(1), Integer(i + 2));
    dir(i) = Rational(1);
  }
  return Line::through(base, dir);
}

Configuration grid_plus_orphan(int d, int k) {
  Configuration g = grid(d, k);
  const Line orphan = orphan_line(d);
  for (const auto& l : g.lines()) {
    if (l == orphan || line_line_intersection(l, orphan)) {
      throw InvariantViolation("grid_plus_orphan: orphan meets the grid");
    }
  }
  std::vector<Line> lines = g.lines();
  lines.push_back(orphan);
  return Configuration(d, std::move(lines));
}

}  // namespace joints
