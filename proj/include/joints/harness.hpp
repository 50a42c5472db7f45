#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "joints/rational.hpp"

namespace joints {

struct SweepRecord {
  int d = 3;
  long k_or_n = 0;
  std::optional<std::uint64_t> seed;  // empty for grid rows
  long n = 0;
  long m = 0;
  Integer lhs;  // m^(d-1)
  Integer rhs;  // 2^(d+1) d! n^d
  bool holds = false;
  double ratio = 0;  // m / n^(d/(d-1)), rounded to 6 significant digits

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

using SweepTable = std::vector<SweepRecord>;

/// Instances whose n^2 candidate pairs exceed this are refused without force.
inline constexpr long kMaxCandidatePairs = 1000000;

/// One row per k in [k_min, k_max] for grid(d, k). Throws InvariantViolation
/// if any row breaks the bound; PreconditionError past the runtime guard.
SweepTable sweep_grids(int d, int k_min, int k_max, bool force = false);

/// One row per (n, seed) for random_config(d, n, seed, coord_bound).
SweepTable sweep_random(int d, const std::vector<long>& n_list,
                        const std::vector<std::uint64_t>& seeds,
                        int coord_bound = 10, bool force = false);

/// m / n^(d/(d-1)) rounded to 6 significant digits.
double growth_ratio(long n, long m, int d);

/// Header "d,k_or_n,seed,n,m,lhs,rhs,holds,ratio" then one line per row.
std::string to_csv(const SweepTable& table);
SweepTable from_csv(const std::string& text);

}  // namespace joints
