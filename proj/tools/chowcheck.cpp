#include "chowcheck/delzant.hpp"
#include "chowcheck/ehrhart.hpp"
#include "chowcheck/generators.hpp"
#include "chowcheck/git_weights.hpp"
#include "chowcheck/hilbert.hpp"
#include "chowcheck/json_io.hpp"
#include "chowcheck/lattice_points.hpp"
#include "chowcheck/measure.hpp"
#include "chowcheck/obstruction.hpp"
#include "render.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace chowcheck;

namespace {

enum class Format { Text, Json };

struct Common {
  std::vector<std::string> gen;
  std::string file;
  Format format = Format::Text;
  unsigned jobs = 1;
};

// Exit code 1: anything the user can fix by changing the command or input.
struct CliUsage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
  const char* env = std::getenv("CHOWCHECK_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  unsigned v = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw CliUsage("CHOWCHECK_JOBS must be a nonnegative integer");
  return v;
}

unsigned resolve_jobs(unsigned jobs) { return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs; }

void add_common(CLI::App* cmd, Common& c, bool polytope_input = true) {
  if (polytope_input) {
    auto* g = cmd->add_option("--gen", c.gen, "generator: hirzebruch K | simplex N | cube N | cross N | "
                                              "cross-polytope N | nill-paffenholz | segment A B")
                  ->expected(1, 3)
                  ->allow_extra_args();
    auto* f = cmd->add_option("--file", c.file, "polytope JSON file ('-' for stdin)");
    g->excludes(f);
  }
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  cmd->add_option("--format", c.format, "output format: text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = all cores; default $CHOWCHECK_JOBS or 1)");
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CliUsage("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

struct Loaded {
  LatticePolytope polytope;
  std::string id;
};

Loaded load(const Common& c) {
  if (!c.gen.empty()) {
    const std::vector<std::string> args(c.gen.begin() + 1, c.gen.end());
    return {generate(c.gen.front(), args), generator_id(c.gen.front(), args)};
  }
  if (!c.file.empty()) return {polytope_from_json(parse_json(read_source(c.file), c.file)), c.file};
  throw CliUsage("need --gen NAME [ARGS] or --file PATH");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void run_check(const Common& c, long i_max) {
  if (i_max < 0) throw CliUsage("--i-max must be at least 1");
  const auto [p, id] = load(c);
  const auto r = verdict(p, {i_max, c.jobs, id});
  if (c.format == Format::Json) emit(to_json(r));
  else render::report(std::cout, r);
}

void run_ehrhart(const Common& c, long extra_levels, bool reciprocity) {
  if (extra_levels < 0) throw CliUsage("--extra-levels must be nonnegative");
  const auto [p, id] = load(c);
  std::vector<long> levels;
  for (long i = 1; i <= static_cast<long>(p.dim()) + 1; ++i) levels.push_back(i);
  const auto data = count_and_sum_levels(p, levels, c.jobs);
  const auto e = ehrhart_from_data(p.dim(), data);
  const auto s = sum_from_data(p.dim(), data);
  const auto m = measure(p);
  std::optional<ValidationReport> validation;
  if (extra_levels > 0) validation = validate(e, s, p, extra_levels, c.jobs);
  std::optional<bool> recip;
  if (reciprocity) recip = reciprocity_holds(e, p);
  if (c.format == Format::Json) {
    Json j{{"polytope", id}, {"ehrhart", to_json(e)}, {"sum_polynomial", to_json(s)}, {"measure", to_json(m)}};
    if (validation) {
      Json mism = Json::array();
      for (const auto& x : validation->mismatches) {
        mism.push_back({{"level", x.level},
                        {"count_residual", to_json(x.count_residual)},
                        {"sum_residual", to_json(x.sum_residual)}});
      }
      j["validation"] = {{"extra_levels", extra_levels}, {"ok", validation->ok()}, {"mismatches", mism}};
    }
    if (recip) j["reciprocity"] = *recip;
    emit(j);
  } else {
    render::ehrhart(std::cout, e, s, m, validation, recip);
  }
  if (validation && !validation->ok()) throw InternalError("interpolated polynomials disagree with enumeration");
}

void run_measure(const Common& c) {
  const auto [p, id] = load(c);
  const auto m = measure(p);
  if (c.format == Format::Json) {
    Json j = to_json(m);
    j["polytope"] = id;
    emit(j);
  } else {
    render::measure(std::cout, m);
  }
}

void run_hilbert(const Common& c, long order) {
  const auto [p, id] = load(c);
  if (order == 0) order = static_cast<long>(p.dim()) + 1;
  if (order < 0) throw CliUsage("--order must be at least 1");
  const auto t = derivative_series(p, order, c.jobs);
  const auto check = semistable_series_check(t, measure(p), is_reflexive(p));
  if (c.format == Format::Json) {
    Json j = to_json(t, check);
    j["polytope"] = id;
    emit(j);
  } else {
    render::hilbert(std::cout, t, check);
  }
}

void run_delzant(const Common& c) {
  const auto [p, id] = load(c);
  const auto v = is_delzant(p);
  if (c.format == Format::Json) {
    Json j = to_json(v);
    j["polytope"] = id;
    emit(j);
  } else {
    render::delzant(std::cout, p, v);
  }
}

void run_reflexive(const Common& c) {
  const auto [p, id] = load(c);
  const bool reflexive = is_reflexive(p);
  const Integer interior = interior_point_count(p);
  if (c.format == Format::Json) {
    emit({{"polytope", id}, {"reflexive", reflexive}, {"interior_points", to_json(interior)}});
  } else {
    std::cout << "reflexive: " << (reflexive ? "yes" : "no") << "\n";
    std::cout << "interior lattice points: " << interior.get_str() << "\n";
  }
}

void run_points(const Common& c, long level, long limit) {
  if (level < 1) throw CliUsage("--level must be at least 1");
  if (limit < 0) throw CliUsage("--dump-points must be nonnegative");
  const auto [p, id] = load(c);
  const auto d = count_and_sum(p, level, c.jobs);
  const bool dump = d.count <= limit;
  if (c.format == Format::Json) {
    Json j = to_json(d);
    j["polytope"] = id;
    if (dump) {
      Json pts = Json::array();
      for (const auto& a : enumerate(p, level)) pts.push_back(to_json(a));
      j["points"] = pts;
    }
    emit(j);
    return;
  }
  std::cout << "# level " << level << ": " << d.count.get_str() << " points, sum " << render::vec(d.coordinate_sum)
            << "\n";
  if (!dump) {
    std::cout << "# more than " << limit << " points; raise --dump-points to list them\n";
    return;
  }
  LatticePointEnumerator(p, CoordinateOrder::Natural).for_each_point(level, [](const IntVector& a) {
    std::cout << to_json(a).dump() << "\n";
  });
}

void run_weights(const Common& c, const std::string& inline_json) {
  if (c.file.empty() == inline_json.empty()) throw CliUsage("need exactly one of --file PATH or --weights JSON");
  const std::string text = inline_json.empty() ? read_source(c.file) : inline_json;
  const WeightSet w = weights_from_json(parse_json(text, inline_json.empty() ? c.file : "--weights"));
  const bool semistable = is_torus_semistable(w);
  std::optional<WeightSet> projected;
  if (w.ambient_dim() >= 2) projected = project_to_subtorus(w);
  const auto d = diagonal_in_affine_hull(w);
  if (c.format == Format::Json) {
    Json j{{"weights", to_json(w)}, {"semistable", semistable}, {"diagonal", to_json(d)}};
    if (projected) j["projected"] = {{"weights", to_json(*projected)}, {"semistable", is_torus_semistable(*projected)}};
    emit(j);
  } else {
    render::weights(std::cout, w, semistable, projected, d);
  }
}

void run_polytope(const Common& c) {
  const auto [p, id] = load(c);
  emit(to_json(p));
}

int fail(int code, const std::string& msg) {
  std::cerr << "chowcheck: " << (code == 2 ? "internal error: " : "error: ") << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chow-semistability obstruction for lattice polytopes"};
  app.require_subcommand(1);

  Common common;
  long i_max = 0, extra_levels = 0, order = 0, level = 1, limit = 10000;
  bool reciprocity = false;
  std::string weights_json;

  auto* check = app.add_subcommand("check", "obstruction report and verdict");
  add_common(check, common);
  check->add_option("--i-max", i_max, "check levels 1..max(N, dim+1)");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart and sum polynomials");
  add_common(ehrhart, common);
  ehrhart->add_option("--extra-levels", extra_levels, "re-check the polynomials at this many further levels");
  ehrhart->add_flag("--reciprocity", reciprocity, "check Ehrhart reciprocity against interior points");

  auto* meas = app.add_subcommand("measure", "volume, moment and barycenter");
  add_common(meas, common);

  auto* hilb = app.add_subcommand("hilbert", "derivative series of the Hilbert series");
  add_common(hilb, common);
  hilb->add_option("--order", order, "truncation order (default dim+1)");

  auto* delz = app.add_subcommand("delzant", "smoothness check");
  add_common(delz, common);

  auto* refl = app.add_subcommand("reflexive", "reflexivity check");
  add_common(refl, common);

  auto* pts = app.add_subcommand("points", "lattice points of a dilate, as JSON lines");
  add_common(pts, common);
  pts->add_option("--level", level, "dilation factor i");
  pts->add_option("--dump-points", limit, "list the points only when there are at most this many");

  auto* wts = app.add_subcommand("weights", "torus weight semistability");
  add_common(wts, common, false);
  wts->add_option("--file", common.file, "weights JSON file ('-' for stdin)");
  wts->add_option("--weights", weights_json, "weights as inline JSON, e.g. [[1,0],[-1,0]]");

  auto* poly = app.add_subcommand("polytope", "print the polytope as JSON");
  add_common(poly, common);

  try {
    common.jobs = default_jobs();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CliUsage& e) {
    return fail(1, e.what());
  }

  try {
    common.jobs = resolve_jobs(common.jobs);
    if (check->parsed()) run_check(common, i_max);
    else if (ehrhart->parsed()) run_ehrhart(common, extra_levels, reciprocity);
    else if (meas->parsed()) run_measure(common);
    else if (hilb->parsed()) run_hilbert(common, order);
    else if (delz->parsed()) run_delzant(common);
    else if (refl->parsed()) run_reflexive(common);
    else if (pts->parsed()) run_points(common, level, limit);
    else if (wts->parsed()) run_weights(common, weights_json);
    else if (poly->parsed()) run_polytope(common);
  } catch (const InternalError& e) {
    return fail(2, e.what());
  } catch (const std::invalid_argument& e) {
    // Every library input error derives from invalid_argument.
    return fail(1, e.what());
  } catch (const CliUsage& e) {
    return fail(1, e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }
  return 0;
}
