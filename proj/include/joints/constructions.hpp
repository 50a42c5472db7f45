#pragma once

#include <cstdint>

#include "joints/geometry.hpp"

namespace joints {

/// Axis-parallel lines through the integer grid {0..k-1}^d: d * k^(d-1) lines
/// whose joints are exactly the k^d grid points. Requires d >= 3, k >= 2.
Configuration grid(int d, int k);

/// n distinct lines with integer base and direction entries drawn from
/// [-coord_bound, coord_bound]. Deterministic in the seed.
Configuration random_config(int d, int n, std::uint64_t seed, int coord_bound);

/// n lines through the origin inside span(e1, e2); joint-free for d >= 3.
Configuration planar_bundle(int d, int n);

/// grid(d, k) plus one line meeting no grid line.
Configuration grid_plus_orphan(int d, int k);

/// The line grid_plus_orphan adds.
Line orphan_line(int d);

}  // namespace joints
