#include "joints/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "joints/constructions.hpp"
#include "joints/error.hpp"
#include "joints/geometry.hpp"
#include "joints/pipeline.hpp"

namespace joints {

namespace {

constexpr const char* kHeader = "d,k_or_n,seed,n,m,lhs,rhs,holds,ratio";

std::string format_ratio(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r);
  return buf;
}

void guard(long n, bool force) {
  if (!force && n * n > kMaxCandidatePairs) {
    throw PreconditionError("instance with n = " + std::to_string(n) +
                            " exceeds the candidate-pair guard; use --force");
  }
}

SweepRecord make_record(int d, long k_or_n, std::optional<std::uint64_t> seed,
                        const Configuration& config) {
  SweepRecord r;
  r.d = d;
  r.k_or_n = k_or_n;
  r.seed = seed;
  r.n = static_cast<long>(config.size());
  r.m = static_cast<long>(find_joints(config).size());
  const BoundCheck bc = bound_check(r.n, r.m, d);
  r.lhs = bc.lhs;
  r.rhs = bc.rhs;
  r.holds = bc.holds;
  r.ratio = growth_ratio(r.n, r.m, d);
  if (!r.holds) {
    throw InvariantViolation("sweep: bound violated at n = " +
                             std::to_string(r.n) + ", m = " +
                             std::to_string(r.m));
  }
  return r;
}

}  // namespace

double growth_ratio(long n, long m, int d) {
  const long double e = static_cast<long double>(d) / (d - 1);
  const long double r = static_cast<long double>(m) /
                        std::pow(static_cast<long double>(n), e);
  return std::stod(format_ratio(static_cast<double>(r)));
}

SweepTable sweep_grids(int d, int k_min, int k_max, bool force) {
  SweepTable out;
  for (int k = k_min; k <= k_max; ++k) {
    long n = d;
    for (int i = 0; i < d - 1; ++i) n *= k;
    guard(n, force);
    out.push_back(make_record(d, k, std::nullopt, grid(d, k)));
  }
  return out;
}

SweepTable sweep_random(int d, const std::vector<long>& n_list,
                        const std::vector<std::uint64_t>& seeds,
                        int coord_bound, bool force) {
  SweepTable out;
  for (long n : n_list) {
    guard(n, force);
    for (auto seed : seeds) {
      out.push_back(make_record(
          d, n, seed,
          random_config(d, static_cast<int>(n), seed, coord_bound)));
    }
  }
  return out;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  os << kHeader << "\n";
  for (const auto& r : table) {
    os << r.d << "," << r.k_or_n << ","
       << (r.seed ? std::to_string(*r.seed) : std::string()) << "," << r.n
       << "," << r.m << "," << r.lhs.get_str() << "," << r.rhs.get_str() << ","
       << (r.holds ? "true" : "false") << "," << format_ratio(r.ratio) << "\n";
  }
  return os.str();
}

SweepTable from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw ParseError("csv: missing or wrong header");
  }
  SweepTable out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 9) {
      throw ParseError("csv line " + std::to_string(lineno) + ": expected 9 fields");
    }
    try {
      SweepRecord r;
      r.d = std::stoi(f[0]);
      r.k_or_n = std::stol(f[1]);
      if (!f[2].empty()) r.seed = std::stoull(f[2]);
      r.n = std::stol(f[3]);
      r.m = std::stol(f[4]);
      r.lhs = Integer(f[5]);
      r.rhs = Integer(f[6]);
      if (f[7] != "true" && f[7] != "false") throw ParseError("holds");
      r.holds = f[7] == "true";
      r.ratio = std::stod(f[8]);
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError("csv line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace joints
