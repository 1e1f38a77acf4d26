#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusbb/cli.hpp"
#include "torusbb/errors.hpp"
#include "torusbb/graded_algebra.hpp"
#include "torusbb/hilb_cells.hpp"
#include "torusbb/json_io.hpp"
#include "torusbb/parser.hpp"

namespace py = pybind11;
using namespace torusbb;
using json_io::Json;

namespace {

py::object to_py(const Integer& z) {
  const std::string s = z.get_str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list out;
  for (const auto& row : m) out.append(to_py(row));
  return out;
}

Integer from_py(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw Error(ErrorCode::InvalidInput, "expected an integer");
  return Integer(py::str(h).cast<std::string>());
}

IntVector vector_from_py(const py::handle& h) {
  IntVector v;
  for (const auto& item : h) v.push_back(from_py(item));
  return v;
}

// Dicts in the CLI's JSON schema; Python ints are passed through as strings.
Json json_from_py(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return py::str(h).cast<std::string>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (const auto& [k, v] : h.cast<py::dict>()) out[py::str(k).cast<std::string>()] = json_from_py(v);
    return out;
  }
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    Json out = Json::array();
    for (const auto& item : h) out.push_back(json_from_py(item));
    return out;
  }
  throw Error(ErrorCode::InvalidInput, "unsupported value of type " + py::str(py::type::of(h)).cast<std::string>());
}

AffineMonoid monoid_from_py(const py::handle& generators, std::size_t rank) {
  IntMatrix gens;
  for (const auto& g : generators) gens.push_back(vector_from_py(g));
  return cone_from_generators(gens, rank);
}

py::dict to_py(const VariableWeighting& w) {
  py::dict out;
  out["torus_rank"] = w.torus_rank();
  py::list vars;
  for (const auto& v : w.variables()) {
    py::dict var;
    var["name"] = v.name;
    var["weight"] = to_py(v.weight);
    vars.append(var);
  }
  out["variables"] = vars;
  return out;
}

py::dict to_py(const GradedPresentation& p) {
  py::dict out = to_py(p.weighting());
  py::list rels;
  for (const auto& r : p.relations()) rels.append(format_polynomial(r, p.weighting()));
  out["relations"] = rels;
  return out;
}

py::dict to_py(const AffineMonoid& s) {
  py::dict out;
  out["rank"] = s.rank();
  out["generators"] = to_py(s.generators());
  out["facet_normals"] = to_py(s.facet_normals());
  out["lineality_basis"] = to_py(s.lineality_basis());
  return out;
}

py::tuple to_py(const hilb::Partition& p) {
  py::tuple out(p.parts().size());
  for (std::size_t i = 0; i < p.parts().size(); ++i) out[i] = p.parts()[i];
  return out;
}

py::dict to_py(const hilb::BigradedCharacter& c) {
  py::dict out;
  for (const auto& [w, mult] : c.entries()) out[py::make_tuple(w[0], w[1])] = mult;
  return out;
}

hilb::MonomialIdealPlane ideal(const std::vector<int>& parts) {
  return hilb::ideal_from_partition(hilb::Partition(parts));
}

hilb::WeightVector2 weight2(const std::pair<std::int64_t, std::int64_t>& w) {
  return hilb::WeightVector2(w.first, w.second);
}

}  // namespace

PYBIND11_MODULE(_torusbb, m) {
  m.doc() = "Exact torus-action computations on affine semigroups, graded algebras and Hilbert schemes of points.";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(error_code_name(e.code()), std::string(e.what()), e.location());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const auto r = cli::dispatch(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");

  // monoids
  m.def(
      "analyze_monoid",
      [](const py::object& generators, std::size_t rank) {
        const auto s = monoid_from_py(generators, rank);
        py::dict out = to_py(s);
        out["units"] = to_py(units(s));
        out["has_zero"] = has_zero(s);
        out["kempf_vector"] = has_zero(s) ? py::object(to_py(kempf_vector(s).w)) : py::object(py::none());
        return out;
      },
      py::arg("generators"), py::arg("rank"));
  m.def(
      "contains",
      [](const py::object& generators, std::size_t rank, const py::object& point) {
        return contains(monoid_from_py(generators, rank), vector_from_py(point));
      },
      py::arg("generators"), py::arg("rank"), py::arg("point"));
  m.def(
      "reduce_to_zero",
      [](const py::object& generators, std::size_t rank) {
        const auto proj = reduce_to_zero(monoid_from_py(generators, rank));
        py::dict out;
        out["source_rank"] = proj.source_rank();
        out["target_rank"] = proj.target_rank();
        out["matrix"] = to_py(proj.matrix());
        out["image_monoid"] = to_py(proj.image_monoid());
        return out;
      },
      py::arg("generators"), py::arg("rank"));

  // graded algebras
  m.def(
      "bb_plus",
      [](const py::object& presentation, const py::object& monoid) {
        return to_py(bb_plus(json_io::read_presentation(json_from_py(presentation)),
                             json_io::read_monoid(json_from_py(monoid))));
      },
      py::arg("presentation"), py::arg("monoid"));
  m.def(
      "fixed_locus",
      [](const py::object& presentation) {
        return to_py(fixed_locus(json_io::read_presentation(json_from_py(presentation))));
      },
      py::arg("presentation"));
  m.def(
      "outsider_variables",
      [](const py::object& presentation, const py::object& monoid) {
        return outsider_variables(json_io::read_presentation(json_from_py(presentation)),
                                  json_io::read_monoid(json_from_py(monoid)));
      },
      py::arg("presentation"), py::arg("monoid"));
  m.def(
      "open_immersion_check",
      [](const py::object& presentation, const py::object& monoid) {
        return open_immersion_check(json_io::read_presentation(json_from_py(presentation)),
                                    json_io::read_monoid(json_from_py(monoid)));
      },
      py::arg("presentation"), py::arg("monoid"));
  m.def(
      "truncate",
      [](const py::object& quotient, const py::object& monoid, std::uint64_t level) {
        py::dict out;
        for (const auto& [weight, dim] :
             truncate(json_io::read_quotient(json_from_py(quotient)), json_io::read_monoid(json_from_py(monoid)), level))
          out[py::tuple(to_py(weight))] = dim;
        return out;
      },
      py::arg("quotient"), py::arg("monoid"), py::arg("level"));
  m.def(
      "graded_dimension",
      [](const py::object& quotient, const py::object& monoid, const py::object& weight) {
        return graded_dimension(json_io::read_quotient(json_from_py(quotient)),
                                json_io::read_monoid(json_from_py(monoid)), vector_from_py(weight));
      },
      py::arg("quotient"), py::arg("monoid"), py::arg("weight"));
  m.def(
      "stabilization_check",
      [](const py::object& quotient, const py::object& monoid, const py::object& weight, std::uint64_t max_level) {
        const auto r = stabilization_check(json_io::read_quotient(json_from_py(quotient)),
                                           json_io::read_monoid(json_from_py(monoid)), vector_from_py(weight),
                                           max_level);
        py::dict out;
        out["weight"] = to_py(r.weight);
        out["stable_level"] = r.stable_level;
        out["dimensions"] = r.dimensions;
        out["limit_dimension"] = r.limit_dimension;
        out["monotone"] = r.monotone;
        out["stable"] = r.stable;
        out["matches_limit"] = r.matches_limit;
        return out;
      },
      py::arg("quotient"), py::arg("monoid"), py::arg("weight"), py::arg("max_level"));
  m.def(
      "algebraize_check",
      [](const py::object& quotient, const py::object& monoid, std::uint64_t bound) {
        return algebraize_check(json_io::read_quotient(json_from_py(quotient)),
                                json_io::read_monoid(json_from_py(monoid)), bound);
      },
      py::arg("quotient"), py::arg("monoid"), py::arg("bound"));

  // Hilbert schemes of points in the plane
  m.def(
      "partitions",
      [](int d) {
        py::list out;
        for (const auto& p : hilb::partitions(d)) out.append(to_py(p));
        return out;
      },
      py::arg("d"));
  m.def(
      "tangent_character",
      [](const std::vector<int>& partition, const std::string& method) {
        const auto m = ideal(partition);
        if (method == "linalg") return to_py(hilb::tangent_character_linalg(m));
        if (method == "armleg") return to_py(hilb::tangent_character_armleg(m));
        throw Error(ErrorCode::InvalidArgument, "method must be 'linalg' or 'armleg'", method);
      },
      py::arg("partition"), py::arg("method") = "linalg");
  m.def(
      "cell_dimension",
      [](const std::vector<int>& partition, const std::pair<std::int64_t, std::int64_t>& w) {
        return hilb::cell_dimension(ideal(partition), weight2(w));
      },
      py::arg("partition"), py::arg("weight"));
  m.def(
      "intersection_dimension",
      [](const std::vector<int>& partition, const std::pair<std::int64_t, std::int64_t>& w1,
         const std::pair<std::int64_t, std::int64_t>& w2) {
        return hilb::intersection_dimension(ideal(partition), weight2(w1), weight2(w2));
      },
      py::arg("partition"), py::arg("w1"), py::arg("w2"));
  m.def(
      "poincare_polynomial",
      [](int d, const std::optional<std::pair<std::int64_t, std::int64_t>>& w) {
        py::dict out;
        for (const auto& [dim, count] :
             hilb::poincare_polynomial(d, w ? weight2(*w) : hilb::default_generic_weight(d)))
          out[py::int_(dim)] = count;
        return out;
      },
      py::arg("d"), py::arg("weight") = py::none());
}
