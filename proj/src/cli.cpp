#include "joints/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "joints/config_io.hpp"
#include "joints/constructions.hpp"
#include "joints/curves.hpp"
#include "joints/error.hpp"
#include "joints/harness.hpp"
#include "joints/pipeline.hpp"
#include "joints/vanishing.hpp"

namespace joints::cli {

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + text + "', expected A..B");
  }
}

/// "10,20,30" or "1..5".
std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  if (text.find("..") != std::string::npos) {
    const auto [lo, hi] = parse_range(text);
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stol(cell));
    } catch (const std::exception&) {
      throw ParseError("bad list entry '" + cell + "'");
    }
  }
  return out;
}

Configuration load(const std::string& path, std::ostream& err) {
  Configuration c = read_config(path);
  if (c.duplicates_removed() > 0) {
    err << "warning: " << c.duplicates_removed()
        << " duplicate line(s) removed from " << path << "\n";
  }
  return c;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

CurveIncidence parse_incidence(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("bad --at '" + text + "', expected CURVE:T");
  }
  try {
    return {static_cast<std::size_t>(std::stoul(text.substr(0, colon))),
            Rational::parse(text.substr(colon + 1))};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad curve index in '" + text + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact joints toolkit: line configurations, joints, vanishing "
               "polynomials and the counting argument, in rational arithmetic",
               "joints"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // gen
  auto* gen = app.add_subcommand("gen", "write a configuration file");
  gen->require_subcommand(1);
  int dim = 3, k = 2, n = 1, coord_bound = 10, s = 2;
  std::uint64_t seed = 1;
  std::string output, file;

  auto* gen_grid = gen->add_subcommand("grid", "axis-parallel grid lines");
  gen_grid->add_option("--dim", dim)->required();
  gen_grid->add_option("--k", k)->required();
  gen_grid->add_option("-o,--output", output)->required();
  gen_grid->callback([&] { write_config(grid(dim, k), output); });

  auto* gen_random = gen->add_subcommand("random", "random integer lines");
  gen_random->add_option("--dim", dim)->required();
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--seed", seed)->required();
  gen_random->add_option("--bound", coord_bound, "coordinate bound")
      ->capture_default_str();
  gen_random->add_option("-o,--output", output)->required();
  gen_random->callback([&] {
    write_config(random_config(dim, n, seed, coord_bound), output);
  });

  auto* gen_planar = gen->add_subcommand("planar", "concurrent lines in a 2-flat");
  gen_planar->add_option("--dim", dim)->required();
  gen_planar->add_option("--n", n)->required();
  gen_planar->add_option("-o,--output", output)->required();
  gen_planar->callback([&] { write_config(planar_bundle(dim, n), output); });

  auto* gen_orphan = gen->add_subcommand("grid-orphan", "grid plus one orphan line");
  gen_orphan->add_option("--dim", dim)->required();
  gen_orphan->add_option("--k", k)->required();
  gen_orphan->add_option("-o,--output", output)->required();
  gen_orphan->callback([&] { write_config(grid_plus_orphan(dim, k), output); });

  // joints
  std::optional<int> s_opt;
  auto* joints_cmd = app.add_subcommand("joints", "count and list joints");
  joints_cmd->add_option("file", file)->required();
  joints_cmd->add_option("--s", s_opt, "count s-joints instead");
  joints_cmd->callback([&] {
    const Configuration c = load(file, err);
    const JointSet js = s_opt ? find_s_joints(c, *s_opt) : find_joints(c);
    out << (s_opt ? "s-joints: " : "joints: ") << js.size() << "\n";
    out << "lines: " << c.size() << "\n";
    for (const auto& [p, lines] : js) {
      out << format_point(p) << " on " << lines.size() << " lines\n";
    }
  });

  // fit
  bool minimal = false;
  auto* fit = app.add_subcommand("fit", "fit a vanishing polynomial on the joints");
  fit->add_option("file", file)->required();
  fit->add_flag("--minimal", minimal, "also report the minimal vanishing degree");
  fit->callback([&] {
    const Configuration c = load(file, err);
    const auto points = find_joints(c).points();
    const long m = static_cast<long>(points.size());
    out << "joints: " << m << "\n";
    out << "degree bound: " << min_fit_degree(m, c.dim())
        << " (smallest b with C(b+d,d) > m)\n";
    out << "ceiling: " << degree_ceiling(m, c.dim())
        << " (smallest b_c with b_c^d >= d! m)\n";
    if (m == 0) {
      out << "polynomial: 1\n";
      out << "degree: 0\n";
    } else {
      const Polynomial p = fit_vanishing(points, c.dim());
      out << "polynomial: " << p.str() << "\n";
      out << "degree: " << p.degree() << "\n";
    }
    if (minimal) {
      out << "minimal degree: " << minimal_vanishing_degree(points, c.dim())
          << "\n";
    }
  });

  // trace
  std::string json_out;
  auto* trace_cmd = app.add_subcommand("trace", "run the counting argument");
  trace_cmd->add_option("file", file)->required();
  trace_cmd->add_option("--json", json_out, "write the trace as JSON");
  trace_cmd->callback([&] {
    const ProofTrace t = trace(load(file, err));
    out << format_trace(t);
    if (!json_out.empty()) write_text(json_out, trace_to_json(t).dump(2) + "\n");
    if (t.outcome == Outcome::kContradictionBug) exit_code = kInternalError;
  });

  // bound
  auto* bound = app.add_subcommand("bound", "exact check of m^(d-1) <= 2^(d+1) d! n^d");
  bound->add_option("file", file)->required();
  bound->callback([&] {
    const Configuration c = load(file, err);
    const long m = static_cast<long>(find_joints(c).size());
    const long lines = static_cast<long>(c.size());
    if (lines == 0) {
      out << "n: 0\nm: 0\nholds: true\n";
      return;
    }
    const BoundCheck bc = bound_check(lines, m, c.dim());
    out << "n: " << lines << "\nm: " << m << "\n";
    out << "lhs: " << bc.lhs.get_str() << "\nrhs: " << bc.rhs.get_str() << "\n";
    out << "holds: " << (bc.holds ? "true" : "false") << "\n";
    if (!bc.holds) exit_code = kBoundViolated;
  });

  // project
  auto* project = app.add_subcommand("project", "generic projection to R^s");
  project->add_option("file", file)->required();
  project->add_option("--s", s)->required();
  project->add_option("--seed", seed)->required();
  project->add_option("-o,--output", output)->required();
  project->callback([&] {
    const Projection pr = project_to_generic_flat(load(file, err), s, seed);
    write_config(pr.image, output);
    out << "attempts: " << pr.attempts << "\n";
    out << "lines: " << pr.image.size() << "\n";
    out << "joints: " << find_joints(pr.image).size() << "\n";
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "bound sweeps, CSV output");
  sweep->require_subcommand(1);
  std::string k_range, n_list = "10,20", seed_list = "1..5", csv;
  bool force = false;
  auto* sweep_grid = sweep->add_subcommand("grid", "grid family");
  sweep_grid->add_option("--dim", dim)->required();
  sweep_grid->add_option("--k", k_range, "A..B")->required();
  sweep_grid->add_option("--csv", csv);
  sweep_grid->add_flag("--force", force);
  sweep_grid->callback([&] {
    const auto [lo, hi] = parse_range(k_range);
    const std::string text = to_csv(
        sweep_grids(dim, static_cast<int>(lo), static_cast<int>(hi), force));
    out << text;
    if (!csv.empty()) write_text(csv, text);
  });
  auto* sweep_rand = sweep->add_subcommand("random", "random configurations");
  sweep_rand->add_option("--dim", dim)->required();
  sweep_rand->add_option("--n", n_list, "list like 10,20 or range A..B")
      ->capture_default_str();
  sweep_rand->add_option("--seeds", seed_list)->capture_default_str();
  sweep_rand->add_option("--bound", coord_bound)->capture_default_str();
  sweep_rand->add_option("--csv", csv);
  sweep_rand->add_flag("--force", force);
  sweep_rand->callback([&] {
    std::vector<std::uint64_t> seeds;
    for (long v : parse_list(seed_list)) seeds.push_back(static_cast<std::uint64_t>(v));
    const std::string text =
        to_csv(sweep_random(dim, parse_list(n_list), seeds, coord_bound, force));
    out << text;
    if (!csv.empty()) write_text(csv, text);
  });

  // curve
  auto* curve = app.add_subcommand("curve", "polynomially parametrized curves");
  curve->require_subcommand(1);
  std::string poly_text;
  std::vector<std::string> at;
  auto* curve_restrict = curve->add_subcommand("restrict", "restrict a polynomial");
  curve_restrict->add_option("file", file)->required();
  curve_restrict->add_option("--poly", poly_text)->required();
  curve_restrict->callback([&] {
    const CurveFile f = read_curve_file(file);
    const Polynomial p = Polynomial::parse(poly_text, f.config.dim);
    for (std::size_t i = 0; i < f.config.curves.size(); ++i) {
      const UniPoly q = restrict_to_curve(p, f.config.curves[i]);
      out << "curve " << i << ": q(t) = " << q.str() << " (identically zero: "
          << (q.is_zero() ? "yes" : "no") << ")\n";
    }
  });
  auto* curve_joint_cmd = curve->add_subcommand("joint", "check curve joints");
  curve_joint_cmd->add_option("file", file)->required();
  curve_joint_cmd->add_option("--at", at, "CURVE:T pairs; default: file joints");
  curve_joint_cmd->callback([&] {
    const CurveFile f = read_curve_file(file);
    std::vector<CurveJoint> js = f.joints;
    if (!at.empty()) {
      CurveJoint cj;
      for (const auto& a : at) cj.incidences.push_back(parse_incidence(a));
      const auto& first = cj.incidences.front();
      if (first.curve >= f.config.curves.size()) {
        throw ParseError("--at: curve index out of range");
      }
      cj.point = f.config.curves[first.curve].at(first.t);
      js = {cj};
    }
    for (const auto& cj : js) {
      out << format_point(cj.point) << ": "
          << (is_curve_joint(f.config, cj) ? "joint" : "not a joint") << "\n";
    }
  });
  auto* curve_prune_cmd = curve->add_subcommand("prune", "curve-weighted pruning");
  curve_prune_cmd->add_option("file", file)->required();
  curve_prune_cmd->callback([&] {
    const CurveFile f = read_curve_file(file);
    const CurvePruneResult r = curve_prune(f.config, f.joints);
    out << "m: " << r.initial_m << "\nn: " << f.config.total_degree() << "\n";
    out << "removed curves:";
    for (auto i : r.removed_curves) out << " " << i;
    out << "\nremoved joints: " << r.removed_points.size() << "\n";
    out << "surviving joints: " << r.survivors.size() << "\n";
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}

}  // namespace joints::cli
