#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cct/census.hpp"
#include "cct/conditions.hpp"
#include "cct/errors.hpp"
#include "cct/generators.hpp"
#include "cct/json_io.hpp"
#include "cct/pivot.hpp"
#include "cct/planar.hpp"
#include "cct/rational.hpp"
#include "cct/solver.hpp"

namespace py = pybind11;
using namespace cct;

namespace {

py::list rationals(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_string(v));
  return out;
}

py::dict transversal_dict(const Transversal& transversal) {
  py::list entries;
  for (const auto& entry : transversal.entries) {
    py::dict e;
    e["colour"] = entry.colour;
    e["point_index"] = entry.point_index;
    e["point"] = rationals(entry.point);
    entries.append(e);
  }
  py::dict out;
  out["missing_colour"] = transversal.missing_colour;
  out["entries"] = entries;
  return out;
}

py::dict simplex_dict(const ColourfulSimplex& simplex) {
  py::dict out;
  out["point_indices"] = simplex.point_indices;
  out["certificate"] = rationals(simplex.certificate.coefficients);
  return out;
}

py::dict verdict_dict(const ConditionVerdict& verdict) {
  py::dict out;
  out["holds"] = verdict.holds;
  if (verdict.hull_counterexample) {
    py::dict c;
    c["colour"] = *verdict.hull_counterexample;
    out["hull_counterexample"] = c;
  }
  if (verdict.pairwise_counterexample) {
    py::dict c;
    c["i"] = verdict.pairwise_counterexample->first;
    c["j"] = verdict.pairwise_counterexample->second;
    out["pairwise_counterexample"] = c;
  }
  if (!verdict.ray_witness.empty()) {
    py::list witness;
    for (const auto& choice : verdict.ray_witness) {
      py::dict w;
      w["i"] = choice.i;
      w["j"] = choice.j;
      w["k"] = choice.k;
      witness.append(w);
    }
    out["ray_witness"] = witness;
  }
  if (verdict.ray_counterexample) {
    py::dict c;
    c["i"] = verdict.ray_counterexample->i;
    c["j"] = verdict.ray_counterexample->j;
    py::list failures;
    for (const auto& f : verdict.ray_counterexample->failures) {
      py::dict d;
      d["k"] = f.k;
      d["point_index"] = f.point_index;
      failures.append(d);
    }
    c["failures"] = failures;
    out["ray_counterexample"] = c;
  }
  if (verdict.transversal_counterexample) {
    py::dict c;
    c["transversal"] = transversal_dict(verdict.transversal_counterexample->transversal);
    c["colour"] = verdict.transversal_counterexample->colour;
    out["transversal_counterexample"] = c;
  }
  if (verdict.line_counterexample) {
    py::dict c;
    c["i"] = verdict.line_counterexample->i;
    c["j"] = verdict.line_counterexample->j;
    c["k"] = verdict.line_counterexample->k;
    c["point_index"] = verdict.line_counterexample->point_index;
    out["line_counterexample"] = c;
  }
  if (!verdict.warnings.empty()) out["warnings"] = verdict.warnings;
  return out;
}

ConditionVerdict dispatch_check(const Configuration& config, const std::string& condition) {
  if (condition == "barany") return check_barany(config);
  if (condition == "pairwise") return check_pairwise(config);
  if (condition == "thm1") return check_thm1(config);
  if (condition == "thm2") return check_thm2(config);
  if (condition == "thm2d") return check_thm2d(config);
  throw InputError("unknown condition: " + condition);
}

}  // namespace

PYBIND11_MODULE(cct, m) {
  m.doc() = "exact colourful Caratheodory toolkit";

  py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError");

  py::class_<Configuration>(m, "Configuration")
      .def_readonly("dimension", &Configuration::dimension)
      .def_property_readonly("sizes",
                             [](const Configuration& config) {
                               std::vector<std::size_t> sizes;
                               for (const auto& colour : config.colours)
                                 sizes.push_back(colour.size());
                               return sizes;
                             })
      .def("to_json", &serialize_config)
      .def("__repr__", [](const Configuration& config) {
        return "<cct.Configuration d=" + std::to_string(config.dimension) + ">";
      });

  m.def("load_config", &parse_config, py::arg("text"),
        "Parse a configuration from its JSON text. Coordinates are integers "
        "or exact rational strings (\"p/q\", decimals).");
  m.def("dump_config", &serialize_config, py::arg("config"));

  m.def(
      "generate",
      [](const std::string& kind, int dim, std::size_t per_colour, const std::string& radius,
         std::uint64_t seed) {
        if (kind == "cluster") return gen_simplex_cluster(dim, per_colour, parse_rational(radius), seed);
        if (kind == "barany") return gen_random_barany(dim, per_colour, seed);
        if (kind == "doubled") return gen_doubled(dim, seed).as_configuration();
        throw InputError("unknown generator kind: " + kind);
      },
      py::arg("kind"), py::arg("dim"), py::arg("per_colour") = 1, py::arg("radius") = "1/100",
      py::arg("seed") = 0, "Seeded configuration generator: cluster, barany or doubled.");

  m.def(
      "check",
      [](const Configuration& config, const std::string& condition) {
        return verdict_dict(dispatch_check(config, condition));
      },
      py::arg("config"), py::arg("condition"),
      "Evaluate barany, pairwise, thm1, thm2 or thm2d on a configuration.");

  m.def(
      "solve",
      [](const Configuration& config, std::uint64_t seed) {
        SolveResult result = find_colourful_simplex(config, seed);
        py::dict out;
        switch (result.kind) {
          case SolveKind::Simplex:
            out = simplex_dict(*result.simplex);
            out["kind"] = "simplex";
            break;
          case SolveKind::Refutation:
            out["kind"] = "refutation";
            out["transversal"] = transversal_dict(result.refutation->transversal);
            out["colour"] = result.refutation->colour;
            break;
          case SolveKind::Degenerate:
            out["kind"] = "degenerate";
            out["message"] = result.degenerate->message;
            break;
        }
        return out;
      },
      py::arg("config"), py::arg("seed") = 0,
      "Pivoting search for a colourful simplex containing the origin; returns "
      "a simplex, a separating-transversal refutation, or a degenerate report.");

  m.def(
      "planar_triangle",
      [](const Configuration& config) {
        py::dict out;
        try {
          ColourfulSimplex triangle = find_triangle_2d(config);
          out = simplex_dict(triangle);
          out["kind"] = "simplex";
        } catch (const ConditionViolated& e) {
          out["kind"] = "refuted";
          out["message"] = e.what();
        }
        return out;
      },
      py::arg("config"), "Digraph circuit search for a containing triangle (d = 2 only).");

  m.def(
      "census",
      [](const Configuration& config, std::size_t bound, int jobs) {
        py::list out;
        for (const auto& simplex : enumerate_containing(config, bound, jobs))
          out.append(simplex_dict(simplex));
        return out;
      },
      py::arg("config"), py::arg("bound") = kDefaultCensusBound, py::arg("jobs") = 1,
      "Every colourful simplex whose hull contains the origin, with certificates.");

  m.def(
      "second_simplex",
      [](const Configuration& config, const std::vector<std::size_t>& start) {
        DoubledConfig doubled = configuration_to_doubled(config);
        validate_doubled(doubled);
        SecondSimplexResult result = second_simplex(doubled, start);
        py::dict out;
        out["simplex"] = result.simplex;
        out["certificate"] = rationals(result.certificate.coefficients);
        out["path_length"] = result.path_length;
        return out;
      },
      py::arg("config"), py::arg("start"),
      "Walk from one containing colourful simplex of a doubled configuration "
      "(point ids 2*colour + slot) to a different one.");

  m.def(
      "octahedron_covers",
      [](const Configuration& config, int missing, const std::vector<std::size_t>& first,
         const std::vector<std::size_t>& second, std::uint64_t seed) {
        return octahedron_covers(make_transversal(config, missing, first),
                                 make_transversal(config, missing, second), seed);
      },
      py::arg("config"), py::arg("missing"), py::arg("first"), py::arg("second"),
      py::arg("seed") = 0,
      "Whether the octahedron spanned by two disjoint transversals covers all directions.");

  m.def(
      "find_covering_octahedron",
      [](const Configuration& config, std::uint64_t seed,
         std::size_t bound) -> std::optional<py::dict> {
        auto found = find_covering_octahedron(config, seed, bound);
        if (!found) return std::nullopt;
        py::dict out;
        out["first"] = transversal_dict(found->first);
        out["second"] = transversal_dict(found->second);
        return out;
      },
      py::arg("config"), py::arg("seed") = 0, py::arg("bound") = kDefaultCensusBound);
}
