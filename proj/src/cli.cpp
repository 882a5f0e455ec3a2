#include "cct/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cct/census.hpp"
#include "cct/conditions.hpp"
#include "cct/errors.hpp"
#include "cct/generators.hpp"
#include "cct/json_io.hpp"
#include "cct/linprog.hpp"
#include "cct/pivot.hpp"
#include "cct/planar.hpp"
#include "cct/solver.hpp"
#include "cct/stats.hpp"

namespace cct {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json stats_json(Clock::time_point start) {
  const auto snap = stats::snapshot();
  const double elapsed =
      std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
  return json{{"lp_calls", snap.lp_calls}, {"pivot_steps", snap.pivot_steps},
              {"elapsed", elapsed}};
}

json certificate_json(const HullCertificate& certificate) {
  json coefficients = json::array();
  for (const auto& c : certificate.coefficients) coefficients.push_back(to_string(c));
  return coefficients;
}

json point_json(const Point& point) {
  json coords = json::array();
  for (const auto& c : point) coords.push_back(to_string(c));
  return coords;
}

json transversal_json(const Transversal& transversal) {
  json entries = json::array();
  for (const auto& entry : transversal.entries)
    entries.push_back(json{{"colour", entry.colour},
                           {"point_index", entry.point_index},
                           {"point", point_json(entry.point)}});
  return json{{"missing_colour", transversal.missing_colour}, {"entries", std::move(entries)}};
}

json simplex_json(const ColourfulSimplex& simplex) {
  return json{{"point_indices", simplex.point_indices},
              {"certificate", certificate_json(simplex.certificate)}};
}

json verdict_json(const ConditionVerdict& verdict) {
  json out{{"holds", verdict.holds}};
  if (verdict.hull_counterexample)
    out["hull_counterexample"] = json{{"colour", *verdict.hull_counterexample}};
  if (verdict.pairwise_counterexample)
    out["pairwise_counterexample"] =
        json{{"i", verdict.pairwise_counterexample->first},
             {"j", verdict.pairwise_counterexample->second}};
  if (!verdict.ray_witness.empty()) {
    json witness = json::array();
    for (const auto& choice : verdict.ray_witness)
      witness.push_back(json{{"i", choice.i}, {"j", choice.j}, {"k", choice.k}});
    out["ray_witness"] = std::move(witness);
  }
  if (verdict.ray_counterexample) {
    json failures = json::array();
    for (const auto& f : verdict.ray_counterexample->failures)
      failures.push_back(json{{"k", f.k}, {"point_index", f.point_index}});
    out["ray_counterexample"] = json{{"i", verdict.ray_counterexample->i},
                                     {"j", verdict.ray_counterexample->j},
                                     {"failures", std::move(failures)}};
  }
  if (verdict.transversal_counterexample)
    out["transversal_counterexample"] =
        json{{"transversal", transversal_json(verdict.transversal_counterexample->transversal)},
             {"colour", verdict.transversal_counterexample->colour}};
  if (verdict.line_counterexample)
    out["line_counterexample"] = json{{"i", verdict.line_counterexample->i},
                                      {"j", verdict.line_counterexample->j},
                                      {"k", verdict.line_counterexample->k},
                                      {"point_index", verdict.line_counterexample->point_index}};
  if (!verdict.warnings.empty()) out["warnings"] = verdict.warnings;
  return out;
}

void emit(std::ostream& out, json report) { out << report.dump(2) << "\n"; }

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> indices;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t pos = 0;
      const unsigned long long value = std::stoull(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      indices.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw InputError(what + ": expected a comma-separated list of indices, got \"" + text +
                       "\"");
    }
  }
  if (indices.empty()) throw InputError(what + ": empty index list");
  return indices;
}

int run_check(std::ostream& out, Clock::time_point start, const std::string& file,
              const std::string& condition) {
  Configuration config = parse_config(read_file(file));
  ConditionVerdict verdict;
  if (condition == "barany") verdict = check_barany(config);
  else if (condition == "pairwise") verdict = check_pairwise(config);
  else if (condition == "thm1") verdict = check_thm1(config);
  else if (condition == "thm2") verdict = check_thm2(config);
  else verdict = check_thm2d(config);
  emit(out, json{{"command", "check"},
                 {"condition", condition},
                 {"verdict", verdict_json(verdict)},
                 {"stats", stats_json(start)}});
  return verdict.holds ? 0 : 1;
}

int run_solve(std::ostream& out, std::ostream& err, Clock::time_point start,
              const std::string& file, std::uint64_t seed, bool trace) {
  Configuration config = parse_config(read_file(file));
  StepObserver observer;
  if (trace)
    observer = [&err](const StepRecord& record) {
      err << json{{"iteration", record.iteration},
                  {"action", record.action},
                  {"sigma_param", to_string(record.sigma_param)},
                  {"missing_colour", record.missing_colour}}
                 .dump()
          << "\n";
    };
  SolveResult result = find_colourful_simplex(config, seed, observer);
  json body;
  int code = 0;
  switch (result.kind) {
    case SolveKind::Simplex:
      body = simplex_json(*result.simplex);
      body["kind"] = "simplex";
      code = 0;
      break;
    case SolveKind::Refutation:
      body = json{{"kind", "refutation"},
                  {"transversal", transversal_json(result.refutation->transversal)},
                  {"colour", result.refutation->colour}};
      code = 1;
      break;
    case SolveKind::Degenerate:
      body = json{{"kind", "degenerate"}, {"message", result.degenerate->message}};
      code = 3;
      break;
  }
  emit(out, json{{"command", "solve"}, {"result", std::move(body)}, {"stats", stats_json(start)}});
  return code;
}

int run_planar(std::ostream& out, Clock::time_point start, const std::string& file) {
  Configuration config = parse_config(read_file(file));
  try {
    ColourfulSimplex triangle = find_triangle_2d(config);
    json body = simplex_json(triangle);
    body["kind"] = "simplex";
    emit(out, json{{"command", "planar"}, {"result", std::move(body)},
                   {"stats", stats_json(start)}});
    return 0;
  } catch (const ConditionViolated& e) {
    emit(out, json{{"command", "planar"},
                   {"result", json{{"kind", "refuted"}, {"message", e.what()}}},
                   {"stats", stats_json(start)}});
    return 1;
  }
}

int run_census(std::ostream& out, Clock::time_point start, const std::string& file,
               std::size_t bound, int jobs) {
  Configuration config = parse_config(read_file(file));
  auto simplices = enumerate_containing(config, bound, jobs);
  json list = json::array();
  for (const auto& simplex : simplices) list.push_back(simplex_json(simplex));
  emit(out, json{{"command", "census"},
                 {"count", simplices.size()},
                 {"simplices", std::move(list)},
                 {"stats", stats_json(start)}});
  return simplices.empty() ? 1 : 0;
}

int run_second(std::ostream& out, Clock::time_point start, const std::string& file,
               const std::string& start_ids) {
  Configuration config = parse_config(read_file(file));
  DoubledConfig doubled = configuration_to_doubled(config);
  validate_doubled(doubled);
  auto result = second_simplex(doubled, parse_index_list(start_ids, "--start"));
  emit(out, json{{"command", "second"},
                 {"result", json{{"simplex", result.simplex},
                                 {"certificate", certificate_json(result.certificate)},
                                 {"path_length", result.path_length}}},
                 {"stats", stats_json(start)}});
  return 0;
}

int run_gen(std::ostream& out, Clock::time_point start, const std::string& kind, int dim,
            std::size_t per_colour, const std::string& radius, std::uint64_t seed,
            const std::string& output) {
  Configuration config;
  if (kind == "cluster")
    config = gen_simplex_cluster(dim, per_colour, parse_rational(radius), seed);
  else if (kind == "barany")
    config = gen_random_barany(dim, per_colour, seed);
  else
    config = gen_doubled(dim, seed).as_configuration();
  const std::string text = serialize_config(config);
  if (output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw InputError("cannot write file: " + output);
  file << text;
  emit(out, json{{"command", "gen"}, {"kind", kind}, {"written", output},
                 {"stats", stats_json(start)}});
  return 0;
}

int run_octahedron(std::ostream& out, Clock::time_point start, const std::string& file,
                   const std::string& pair, std::uint64_t seed, std::size_t bound) {
  Configuration config = parse_config(read_file(file));
  if (pair.empty()) {
    auto found = find_covering_octahedron(config, seed, bound);
    json body{{"found", found.has_value()}};
    if (found) {
      body["pair"] = json{{"first", transversal_json(found->first)},
                          {"second", transversal_json(found->second)}};
    }
    emit(out, json{{"command", "octahedron"}, {"result", std::move(body)},
                   {"stats", stats_json(start)}});
    return found ? 0 : 1;
  }
  // --pair "j;a0,a1,...;b0,b1,..." with per-colour indices in colour order
  const auto first_sep = pair.find(';');
  const auto second_sep = pair.find(';', first_sep + 1);
  if (first_sep == std::string::npos || second_sep == std::string::npos)
    throw InputError("--pair: expected \"missing;indices;indices\"");
  int missing = 0;
  try {
    std::size_t pos = 0;
    missing = std::stoi(pair.substr(0, first_sep), &pos);
    if (pos != first_sep) throw std::invalid_argument(pair);
  } catch (const std::exception&) {
    throw InputError("--pair: bad missing colour in \"" + pair + "\"");
  }
  auto first = make_transversal(
      config, missing,
      parse_index_list(pair.substr(first_sep + 1, second_sep - first_sep - 1), "--pair"));
  auto second =
      make_transversal(config, missing, parse_index_list(pair.substr(second_sep + 1), "--pair"));
  const bool covers = octahedron_covers(first, second, seed);
  emit(out, json{{"command", "octahedron"},
                 {"result", json{{"covers", covers},
                                 {"first", transversal_json(first)},
                                 {"second", transversal_json(second)}}},
                 {"stats", stats_json(start)}});
  return covers ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  stats::reset();
  const auto start = Clock::now();

  CLI::App app{"exact colourful Caratheodory toolkit"};
  app.name("cct");
  app.require_subcommand(1);
  int exit_code = 0;

  auto* check = app.add_subcommand("check", "evaluate a containment condition");
  std::string check_file;
  std::string condition;
  check->add_option("file", check_file, "configuration JSON")->required();
  check->add_option("--condition", condition, "condition name")
      ->required()
      ->check(CLI::IsMember({"barany", "pairwise", "thm1", "thm2", "thm2d"}));
  check->callback([&] { exit_code = run_check(out, start, check_file, condition); });

  auto* solve = app.add_subcommand("solve", "find a colourful simplex containing the origin");
  std::string solve_file;
  std::uint64_t solve_seed = 0;
  bool trace = false;
  solve->add_option("file", solve_file, "configuration JSON")->required();
  solve->add_option("--seed", solve_seed, "ray retry seed");
  solve->add_flag("--trace", trace, "stream one JSON line per pivot step to stderr");
  solve->callback(
      [&] { exit_code = run_solve(out, err, start, solve_file, solve_seed, trace); });

  auto* planar = app.add_subcommand("planar", "planar circuit search (d = 2)");
  std::string planar_file;
  planar->add_option("file", planar_file, "configuration JSON")->required();
  planar->callback([&] { exit_code = run_planar(out, start, planar_file); });

  auto* census = app.add_subcommand("census", "list every colourful simplex containing 0");
  std::string census_file;
  std::size_t bound = kDefaultCensusBound;
  int jobs = 1;
  census->add_option("file", census_file, "configuration JSON")->required();
  census->add_option("--bound", bound, "maximum number of colourful systems");
  census->add_option("--jobs", jobs, "parallel enumeration threads")
      ->check(CLI::PositiveNumber);
  census->callback([&] { exit_code = run_census(out, start, census_file, bound, jobs); });

  auto* second = app.add_subcommand("second", "walk from one containing simplex to another");
  std::string second_file;
  std::string start_ids;
  second->add_option("file", second_file, "doubled configuration JSON (2 points per colour)")
      ->required();
  second->add_option("--start", start_ids, "comma-separated point ids (id = 2*colour + slot)")
      ->required();
  second->callback([&] { exit_code = run_second(out, start, second_file, start_ids); });

  auto* gen = app.add_subcommand("gen", "generate a configuration");
  std::string kind;
  int dim = 2;
  std::size_t per_colour = 1;
  std::string radius = "1/100";
  std::uint64_t gen_seed = 0;
  std::string output;
  gen->add_option("--kind", kind, "generator family")
      ->required()
      ->check(CLI::IsMember({"cluster", "barany", "doubled"}));
  gen->add_option("--dim", dim, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--per-colour", per_colour, "points per colour (cluster, barany)");
  gen->add_option("--radius", radius, "cluster radius as a rational");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", output, "write the configuration here instead of stdout");
  gen->callback([&] {
    exit_code = run_gen(out, start, kind, dim, per_colour, radius, gen_seed, output);
  });

  auto* octahedron = app.add_subcommand("octahedron", "covering test for transversal pairs");
  std::string octahedron_file;
  std::string pair;
  std::uint64_t octahedron_seed = 0;
  std::size_t octahedron_bound = kDefaultCensusBound;
  octahedron->add_option("file", octahedron_file, "configuration JSON")->required();
  octahedron->add_option("--pair", pair,
                         "\"missing;first indices;second indices\" (omit to search)");
  octahedron->add_option("--seed", octahedron_seed, "generic-direction retry seed");
  octahedron->add_option("--bound", octahedron_bound, "search bound on transversal pairs");
  octahedron->callback([&] {
    exit_code = run_octahedron(out, start, octahedron_file, pair, octahedron_seed,
                               octahedron_bound);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return exit_code;
}

}  // namespace cct
