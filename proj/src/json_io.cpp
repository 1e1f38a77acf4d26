#include "torusbb/json_io.hpp"

#include "torusbb/errors.hpp"
#include "torusbb/parser.hpp"

namespace torusbb::json_io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Integer read_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer value;
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos ||
        value.set_str(s, 10) != 0)
      bad(std::string(what) + ": \"" + s + "\" is not a decimal integer");
    return value;
  }
  bad(std::string(what) + " must be an integer or a decimal string");
}

std::size_t read_size(const Json& j, const char* what) {
  const Integer v = read_integer(j, what);
  if (v < 0 || !v.fits_ulong_p()) bad(std::string(what) + " must be a nonnegative integer");
  return v.get_ui();
}

IntVector read_vector(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  IntVector v;
  for (const auto& e : j) v.push_back(read_integer(e, what));
  return v;
}

Json write(const Integer& value) { return value.get_str(); }
Json write(std::uint64_t value) { return std::to_string(value); }

Json write(const IntVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(write(e));
  return out;
}

Json write(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(write(row));
  return out;
}

AffineMonoid read_monoid(const Json& j) {
  const std::size_t rank = read_size(field(j, "rank"), "rank");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  IntMatrix generators;
  for (const auto& g : gens) generators.push_back(read_vector(g, "generator"));
  return cone_from_generators(generators, rank);
}

Json write(const AffineMonoid& s) {
  Json out;
  out["rank"] = write(std::uint64_t{s.rank()});
  out["generators"] = write(s.generators());
  out["facet_normals"] = write(s.facet_normals());
  out["lineality_basis"] = write(s.lineality_basis());
  return out;
}

Json write(const LatticeProjection& p) {
  Json out;
  out["source_rank"] = write(std::uint64_t{p.source_rank()});
  out["target_rank"] = write(std::uint64_t{p.target_rank()});
  out["matrix"] = write(p.matrix());
  out["image_monoid"] = write(p.image_monoid());
  return out;
}

VariableWeighting read_weighting(const Json& j) {
  const std::size_t rank = read_size(field(j, "torus_rank"), "torus_rank");
  const Json& vars = field(j, "variables");
  if (!vars.is_array()) bad("variables must be an array");
  std::vector<Variable> variables;
  for (const auto& v : vars) {
    const Json& name = field(v, "name");
    if (!name.is_string()) bad("variable name must be a string");
    variables.push_back({name.get<std::string>(), read_vector(field(v, "weight"), "weight")});
  }
  return VariableWeighting(rank, std::move(variables));
}

void write_weighting(Json& out, const VariableWeighting& w) {
  out["torus_rank"] = write(std::uint64_t{w.torus_rank()});
  out["variables"] = Json::array();
  for (const auto& v : w.variables()) {
    Json entry;
    entry["name"] = v.name;
    entry["weight"] = write(v.weight);
    out["variables"].push_back(std::move(entry));
  }
}

GradedPresentation read_presentation(const Json& j) {
  VariableWeighting w = read_weighting(j);
  std::vector<GradedPolynomial> relations;
  if (j.contains("relations")) {
    const Json& rels = j.at("relations");
    if (!rels.is_array()) bad("relations must be an array");
    for (const auto& r : rels) {
      if (!r.is_string()) bad("relations must be strings");
      relations.push_back(parse_polynomial(r.get<std::string>(), w));
    }
  }
  return GradedPresentation(std::move(w), std::move(relations));
}

Json write(const GradedPresentation& p) {
  Json out;
  write_weighting(out, p.weighting());
  out["relations"] = Json::array();
  for (const auto& r : p.relations()) out["relations"].push_back(format_polynomial(r, p.weighting()));
  return out;
}

MonomialQuotient read_quotient(const Json& j) {
  VariableWeighting w = read_weighting(j);
  std::vector<Monomial> generators;
  if (j.contains("monomial_generators")) {
    const Json& gens = j.at("monomial_generators");
    if (!gens.is_array()) bad("monomial_generators must be an array");
    for (const auto& g : gens) {
      if (!g.is_string()) bad("monomial generators must be strings");
      generators.push_back(parse_monomial(g.get<std::string>(), w));
    }
  }
  return MonomialQuotient(std::move(w), std::move(generators));
}

Json write(const MonomialQuotient& q) {
  Json out;
  write_weighting(out, q.weighting());
  out["monomial_generators"] = Json::array();
  for (const auto& g : q.minimal_generators())
    out["monomial_generators"].push_back(format_monomial(g, q.weighting()));
  return out;
}

Json write(const hilb::BigradedCharacter& c) {
  Json out = Json::array();
  for (const auto& [w, m] : c.entries())
    out.push_back(Json::array({std::to_string(w[0]), std::to_string(w[1]), std::to_string(m)}));
  return out;
}

Json write(const hilb::Partition& p) {
  Json out = Json::array();
  for (int part : p.parts()) out.push_back(std::to_string(part));
  return out;
}

}  // namespace torusbb::json_io
