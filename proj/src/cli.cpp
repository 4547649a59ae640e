// CLI front end: argument parsing, body resolution, and artifact output for
// the connect/path/bound/components/walk/oracle/validate subcommands.
//
// Every run is a deterministic function of its argument vector: the library
// serializers are timestamp-free, numbers print as %.12g everywhere, and
// file writes go through a temp-file-plus-rename so an interrupted run never
// leaves a half-written artifact behind.

#include "udg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udg/components.hpp"
#include "udg/convex.hpp"
#include "udg/oracle.hpp"
#include "udg/path.hpp"
#include "udg/walk.hpp"

namespace udg {
namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << content;
    f.flush();
    if (!f) {
      throw std::runtime_error("write failed: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed: " + path);
  }
}

// Empty out path means stdout.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    atomic_write(out_path, content);
  }
}

std::vector<double> parse_doubles(const std::string& flag,
                                  const std::string& arg) {
  std::vector<double> vals;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw std::invalid_argument("bad " + flag + " value: '" + item + "'");
    }
    vals.push_back(v);
  }
  if (vals.empty()) {
    throw std::invalid_argument("empty " + flag + " list");
  }
  return vals;
}

std::vector<std::size_t> parse_sizes(const std::string& flag,
                                     const std::string& arg) {
  std::vector<std::size_t> vals;
  for (double v : parse_doubles(flag, arg)) {
    if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw std::invalid_argument("bad " + flag + " index: " + fmt(v));
    }
    vals.push_back(static_cast<std::size_t>(v));
  }
  return vals;
}

Point parse_point(const std::string& flag, const std::string& arg) {
  return Point(parse_doubles(flag, arg));
}

// --body takes inline JSON (first non-space character '{') or a file path;
// --l gives an axis-aligned box directly, with --dim replicating a single
// side length into a d-cube.
ConvexBody resolve_body(const std::string& body_arg, const std::string& l_arg,
                        std::size_t dim) {
  if (!body_arg.empty()) {
    const std::size_t first = body_arg.find_first_not_of(" \t\r\n");
    const bool inline_json = first != std::string::npos && body_arg[first] == '{';
    return parse_body(inline_json ? body_arg : slurp(body_arg));
  }
  if (!l_arg.empty()) {
    std::vector<double> sides = parse_doubles("--l", l_arg);
    if (dim > 0) {
      if (sides.size() == 1) {
        sides.assign(dim, sides[0]);
      } else if (sides.size() != dim) {
        throw std::invalid_argument("--dim disagrees with the --l list length");
      }
    }
    return ConvexBody(Hyperrectangle{std::move(sides)});
  }
  throw std::invalid_argument("missing --body (or the --l/--dim box shorthand)");
}

StepPath path_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  StepPath p;
  for (const auto& pt : j.at("points")) {
    p.points.emplace_back(pt.get<std::vector<double>>());
  }
  if (p.points.empty()) {
    throw std::invalid_argument("path has no points");
  }
  if (j.contains("labels")) {
    p.labels = j.at("labels").get<std::vector<std::string>>();
    if (p.labels.size() != p.points.size() - 1) {
      throw std::invalid_argument("path label count disagrees with step count");
    }
  } else {
    p.labels.assign(p.points.size() - 1, "unlabeled");
  }
  return p;
}

// ---- subcommand handlers ----------------------------------------------------

int do_connect(const ConvexBody& body, const std::string& out) {
  emit(out, verdict_to_json(is_connected(body)) + "\n");
  return 0;
}

int do_path(const ConvexBody& body, const Point& u, const Point& v, double tol,
            const std::string& out) {
  const ConnectivityVerdict verdict = is_connected(body);
  if (!verdict.connected) {
    std::cerr << "error: the unit-distance graph is disconnected ("
              << to_string(verdict.reason) << "); no path exists\n";
    return 1;
  }
  StepPath p;
  try {
    p = find_path(body, u, v);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: path construction failed: " << e.what() << "\n";
    return 1;
  }
  const ValidationReport rep = validate_path(body, p, tol);
  if (!rep.ok) {
    const PathViolation& w = rep.violations.front();
    std::cerr << "error: constructed path failed validation: index " << w.index
              << " " << w.kind << " off by " << fmt(w.magnitude) << "\n";
    return 1;
  }
  emit(out, path_to_json(p) + "\n");
  return 0;
}

int do_bound(const ConvexBody& body, const std::string& split_arg,
             const std::string& out) {
  const Hyperrectangle* box = body.as_hyperrectangle();
  if (box == nullptr) {
    std::cerr << "error: closed-form diameter bounds cover boxes only\n";
    return 2;
  }
  const std::vector<double>& l = box->side_lengths;
  if (l.size() < 2) {
    std::cerr << "error: closed-form diameter bounds need dimension >= 2\n";
    return 2;
  }
  DiameterBound b;
  if (l.size() == 2) {
    if (!split_arg.empty()) {
      throw std::invalid_argument("--split needs dimension >= 3");
    }
    const double hi = std::max(l[0], l[1]);
    const double lo = std::min(l[0], l[1]);
    if (std::hypot(hi, lo) < 2.0 - 1e-7) {
      b.formula_id = "rectangle2d-diam";  // diagonal below two: disconnected
    } else {
      b = rectangle2d_bound(hi, lo);
    }
  } else {
    const std::vector<std::size_t> split =
        split_arg.empty() ? best_diagonal_split(l)
                          : parse_sizes("--split", split_arg);
    b = hyperrectangle_bound(l, split);
  }
  emit(out, bound_to_json(b) + "\n");
  return 0;
}

int do_components(double l, const std::string& point_arg, std::size_t grid_n,
                  const std::string& svg_path, const std::string& out) {
  if (!(l > 0.0) || !(l < std::sqrt(2.0))) {
    std::cerr << "error: component classification covers side lengths in"
                 " (0, sqrt(2))\n";
    return 2;
  }
  if (!svg_path.empty()) {
    atomic_write(svg_path, emit_region_svg(l));
  }
  if (!point_arg.empty()) {
    const std::vector<double> xy = parse_doubles("--point", point_arg);
    if (xy.size() != 2) {
      throw std::invalid_argument("--point needs exactly two coordinates");
    }
    const ComponentLabel lab = classify_point(l, Point{xy[0], xy[1]});
    emit(out, "{\"l\":" + fmt(l) + ",\"point\":[" + fmt(xy[0]) + "," +
                  fmt(xy[1]) + "],\"regime\":\"" + to_string(lab.regime) +
                  "\",\"component\":\"" + to_string(lab) + "\"}\n");
  } else if (grid_n > 0) {
    emit(out, component_grid_csv(l, grid_n));
  } else if (svg_path.empty()) {
    // Summary mode: the regime plus the critical side lengths. The square
    // center is in-square for every valid l, so it carries the regime.
    const ComponentLabel lab = classify_point(l, Point{l / 2.0, l / 2.0});
    std::string j = "{\"l\":" + fmt(l) + ",\"regime\":\"" +
                    to_string(lab.regime) + "\",\"critical_lengths\":[";
    bool first = true;
    for (const CriticalLength& c : critical_lengths()) {
      if (!first) {
        j += ",";
      }
      first = false;
      j += "{\"value\":" + fmt(c.value) + ",\"name\":\"" + c.name +
           "\",\"component_transition\":" +
           (c.component_transition ? "true" : "false") + "}";
    }
    j += "]}\n";
    emit(out, j);
  }
  return 0;
}

int do_walk(const ConvexBody& body, const Point& start, std::size_t steps,
            std::size_t runs, std::uint64_t seed, bool trajectories,
            std::size_t bins, const std::string& hist_path,
            const std::string& out) {
  WalkConfig cfg;
  cfg.body = body;
  cfg.start = start;
  cfg.steps = steps;
  cfg.runs = runs;
  cfg.seed = seed;
  cfg.record_trajectories = trajectories;
  const WalkEnsemble ens = run_ensemble(cfg);
  emit(out, walk_ensemble_csv(ens));
  if (bins > 0) {
    atomic_write(hist_path, histogram_csv(histogram2d(ens, bins)));
  }
  return 0;
}

int do_oracle(const ConvexBody& body, double h, double delta,
              std::size_t pairs, std::uint64_t seed, const std::string& out) {
  if (delta <= 0.0) {
    delta = 2.0 * h;  // module default
  }
  const GridGraph g = build_grid_graph(body, h, delta);
  emit(out, oracle_report_csv(make_oracle_report(g, pairs, seed)));
  return 0;
}

int do_validate(const ConvexBody& body, const std::string& path_file,
                double tol, const std::string& out) {
  const StepPath p = path_from_json(slurp(path_file));
  const ValidationReport rep = validate_path(body, p, tol);
  std::string j = std::string("{\"ok\":") + (rep.ok ? "true" : "false") +
                  ",\"violations\":[";
  bool first = true;
  for (const PathViolation& w : rep.violations) {
    if (!first) {
      j += ",";
    }
    first = false;
    j += "{\"index\":" + std::to_string(w.index) + ",\"kind\":\"" + w.kind +
         "\",\"magnitude\":" + fmt(w.magnitude) + "}";
  }
  j += "]}\n";
  emit(out, j);
  return rep.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{
      "unit-distance graph toolkit: connectivity verdicts, explicit "
      "unit-step paths, diameter bounds, square component maps, random "
      "walks, and a brute-force grid oracle",
      "udg"};
  app.require_subcommand(1);

  // Shared storage; exactly one subcommand parses per run.
  std::string body_arg, l_arg, out_path;
  std::size_t dim = 0;

  const auto add_body_flags = [&](CLI::App* sub) {
    sub->add_option("--body", body_arg,
                    "Body descriptor: inline JSON or a file path");
    sub->add_option("--l", l_arg,
                    "Box shorthand: comma-separated side lengths");
    sub->add_option("--dim", dim,
                    "With a single --l value: replicate it into a d-cube");
  };
  const auto add_out_flag = [&](CLI::App* sub) {
    sub->add_option("--out", out_path,
                    "Output file (atomic write); stdout when omitted");
  };

  CLI::App* c_connect = app.add_subcommand(
      "connect", "Decide connectivity of the unit-distance graph");
  add_body_flags(c_connect);
  add_out_flag(c_connect);

  std::string u_arg, v_arg;
  double path_tol = 1e-9;
  CLI::App* c_path = app.add_subcommand(
      "path", "Construct an explicit unit-step path between two points");
  add_body_flags(c_path);
  add_out_flag(c_path);
  c_path->add_option("--u", u_arg, "Start point, comma-separated")->required();
  c_path->add_option("--v", v_arg, "End point, comma-separated")->required();
  c_path->add_option("--tol", path_tol,
                     "Validation tolerance for step lengths and containment "
                     "(module default 1e-9)")
      ->capture_default_str();

  std::string split_arg;
  CLI::App* c_bound = app.add_subcommand(
      "bound", "Closed-form diameter bound for a box");
  add_body_flags(c_bound);
  add_out_flag(c_bound);
  c_bound->add_option("--split", split_arg,
                      "Diagonal index split for d >= 3, comma-separated "
                      "(default: best split)");

  double side = 0.0;
  std::string point_arg, svg_path;
  std::size_t grid_n = 0;
  CLI::App* c_components = app.add_subcommand(
      "components", "Classify components of the square C^2(l), l < sqrt(2)");
  add_out_flag(c_components);
  c_components->add_option("--l", side, "Square side length")->required();
  CLI::Option* o_point = c_components->add_option(
      "--point", point_arg, "Classify a single point x,y");
  CLI::Option* o_grid = c_components->add_option(
      "--grid", grid_n, "Emit an n-by-n grid of labels as CSV");
  o_point->excludes(o_grid);
  c_components->add_option("--svg", svg_path,
                           "Write a region map SVG to this path");

  std::string start_arg;
  std::size_t steps = 0, runs = 1, bins = 0;
  std::uint64_t seed = 0;
  bool trajectories = false;
  std::string hist_path;
  CLI::App* c_walk = app.add_subcommand(
      "walk", "Simulate fixed-unit-step random walks");
  add_body_flags(c_walk);
  add_out_flag(c_walk);
  c_walk->add_option("--start", start_arg, "Start point, comma-separated")
      ->required();
  c_walk->add_option("--steps", steps, "Steps per run")->required();
  c_walk->add_option("--runs", runs, "Independent runs")->capture_default_str();
  c_walk->add_option("--seed", seed, "Ensemble seed")->capture_default_str();
  c_walk->add_flag("--trajectories", trajectories,
                   "Emit every visited point instead of final positions");
  CLI::Option* o_bins = c_walk->add_option(
      "--bins", bins, "Histogram resolution (2D final positions)");
  CLI::Option* o_hist = c_walk->add_option(
      "--hist", hist_path, "Histogram CSV output path");
  o_bins->needs(o_hist);
  o_hist->needs(o_bins);

  double grid_h = 0.0, edge_delta = 0.0;
  std::size_t pairs = 10;
  std::uint64_t oracle_seed = 0;
  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "Brute-force grid-graph report: components and sampled pairs");
  add_body_flags(c_oracle);
  add_out_flag(c_oracle);
  c_oracle->add_option("--grid-h", grid_h, "Lattice spacing")->required();
  c_oracle->add_option("--edge-delta", edge_delta,
                       "Edge slack; 0 means the module default 2*grid-h")
      ->capture_default_str();
  c_oracle->add_option("--pairs", pairs, "Sampled point pairs")
      ->capture_default_str();
  c_oracle->add_option("--seed", oracle_seed, "Sampling seed")
      ->capture_default_str();

  std::string path_file;
  double validate_tol = 1e-9;
  CLI::App* c_validate = app.add_subcommand(
      "validate", "Check a path JSON against a body");
  add_body_flags(c_validate);
  add_out_flag(c_validate);
  c_validate->add_option("--path", path_file, "StepPath JSON file")
      ->required();
  c_validate->add_option("--tol", validate_tol,
                         "Step and containment tolerance (module default "
                         "1e-9)")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (*c_connect) {
      return do_connect(resolve_body(body_arg, l_arg, dim), out_path);
    }
    if (*c_path) {
      return do_path(resolve_body(body_arg, l_arg, dim),
                     parse_point("--u", u_arg), parse_point("--v", v_arg),
                     path_tol, out_path);
    }
    if (*c_bound) {
      return do_bound(resolve_body(body_arg, l_arg, dim), split_arg, out_path);
    }
    if (*c_components) {
      return do_components(side, point_arg, grid_n, svg_path, out_path);
    }
    if (*c_walk) {
      return do_walk(resolve_body(body_arg, l_arg, dim),
                     parse_point("--start", start_arg), steps, runs, seed,
                     trajectories, bins, hist_path, out_path);
    }
    if (*c_oracle) {
      return do_oracle(resolve_body(body_arg, l_arg, dim), grid_h, edge_delta,
                       pairs, oracle_seed, out_path);
    }
    if (*c_validate) {
      return do_validate(resolve_body(body_arg, l_arg, dim), path_file,
                         validate_tol, out_path);
    }
    return 2;  // unreachable with require_subcommand(1)
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run(args);
}

}  // namespace udg
