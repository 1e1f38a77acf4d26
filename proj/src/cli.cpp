#include "torusbb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "torusbb/errors.hpp"
#include "torusbb/parser.hpp"

namespace torusbb::cli {
namespace {

using json_io::Json;
using json_io::write;

struct Options {
  std::string input;
  std::string monoid;
  int d = 0;
  std::vector<std::string> weights;
  long long level = -1;
  long long bound = -1;
  bool json = false;
};

struct UsageError {
  std::string message;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'", path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "malformed JSON in '" + path + "': " + e.what(), path);
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) parts.push_back(current);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

bool is_decimal(const std::string& s) {
  const std::size_t from = (!s.empty() && s[0] == '-') ? 1 : 0;
  return s.size() > from && s.find_first_not_of("0123456789", from) == std::string::npos;
}

IntVector parse_weight_list(const std::string& text) {
  IntVector v;
  for (const auto& part : split_commas(text)) {
    if (!is_decimal(part)) throw UsageError{"invalid weight '" + text + "'"};
    v.emplace_back(part);
  }
  return v;
}

hilb::WeightVector2 parse_weight2(const std::string& text) {
  const IntVector v = parse_weight_list(text);
  if (v.size() != 2) throw UsageError{"weight '" + text + "' must have two entries a,b"};
  for (const auto& e : v)
    if (!e.fits_slong_p() || abs(e) > (Integer(1) << 31))
      throw UsageError{"weight entry out of range in '" + text + "'"};
  return hilb::WeightVector2(v[0].get_si(), v[1].get_si());
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string show(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::vector<std::string> items;
    for (const auto& e : j) items.push_back(show(e));
    return "(" + join(items, ",") + ")";
  }
  return j.dump();
}

std::string show_list(const Json& j) {
  std::vector<std::string> items;
  for (const auto& e : j) items.push_back(show(e));
  return items.empty() ? "none" : join(items, " ");
}

std::string presentation_table(const Json& p) {
  std::vector<std::string> vars;
  for (const auto& v : p["variables"]) vars.push_back(v["name"].get<std::string>() + ":" + show(v["weight"]));
  std::vector<std::string> rels;
  for (const auto& r : p["relations"]) rels.push_back(r.get<std::string>());
  return "variables  " + (vars.empty() ? std::string("none") : join(vars, " ")) + "\n" +
         "relations  " + (rels.empty() ? std::string("none") : join(rels, ", ")) + "\n";
}

struct Outcome {
  Json payload;
  std::string table;
};

// ---- monoid ----------------------------------------------------------------

Outcome monoid_analyze(const Options& o) {
  const AffineMonoid s = json_io::read_monoid(load_json(o.input));
  Json out = write(s);
  out["units"] = write(units(s));
  out["has_zero"] = has_zero(s);
  out["kempf_vector"] = has_zero(s) ? write(kempf_vector(s).w) : Json();
  std::string t;
  t += "rank            " + show(out["rank"]) + "\n";
  t += "generators      " + show_list(out["generators"]) + "\n";
  t += "facet normals   " + show_list(out["facet_normals"]) + "\n";
  t += "units           " + show_list(out["units"]) + "\n";
  t += "has zero        " + show(out["has_zero"]) + "\n";
  t += "kempf vector    " + show(out["kempf_vector"]) + "\n";
  return {out, t};
}

Outcome monoid_reduce(const Options& o) {
  const AffineMonoid s = json_io::read_monoid(load_json(o.input));
  const LatticeProjection p = reduce_to_zero(s);
  Json out = write(p);
  std::string t;
  t += "projection      Z^" + show(out["source_rank"]) + " -> Z^" + show(out["target_rank"]) + "\n";
  t += "matrix rows     " + show_list(out["matrix"]) + "\n";
  t += "image gens      " + show_list(out["image_monoid"]["generators"]) + "\n";
  t += "image facets    " + show_list(out["image_monoid"]["facet_normals"]) + "\n";
  return {out, t};
}

// ---- algebra ---------------------------------------------------------------

Outcome algebra_bbplus(const Options& o) {
  const GradedPresentation p = json_io::read_presentation(load_json(o.input));
  const AffineMonoid s = json_io::read_monoid(load_json(o.monoid));
  Json out = write(bb_plus(p, s));
  return {out, "outsiders  " + join(outsider_variables(p, s), " ") + "\n" + presentation_table(out)};
}

Outcome algebra_fixed(const Options& o) {
  const GradedPresentation p = json_io::read_presentation(load_json(o.input));
  Json out = write(fixed_locus(p));
  return {out, presentation_table(out)};
}

Outcome algebra_check(const Options& o) {
  const GradedPresentation p = json_io::read_presentation(load_json(o.input));
  const AffineMonoid s = json_io::read_monoid(load_json(o.monoid));
  const bool open = open_immersion_check(p, s);
  Json out;
  out["open_immersion"] = open;
  out["outsider_variables"] = outsider_variables(p, s);
  return {out, std::string("open immersion at origin  ") + (open ? "yes" : "no") + "\n" +
                   "outsider variables        " + show_list(out["outsider_variables"]) + "\n"};
}

Outcome algebra_truncate(const Options& o) {
  if (o.level < 0) throw UsageError{"truncate requires -n LEVEL"};
  const MonomialQuotient q = json_io::read_quotient(load_json(o.input));
  const AffineMonoid s = json_io::read_monoid(load_json(o.monoid));
  const auto dims = truncate(q, s, static_cast<std::uint64_t>(o.level));
  Json out;
  out["level"] = write(static_cast<std::uint64_t>(o.level));
  out["kempf_vector"] = write(kempf_vector(s).w);
  out["components"] = Json::array();
  std::string t = "level " + std::to_string(o.level) + "\nweight        dimension\n";
  for (const auto& [weight, dim] : dims) {
    Json row;
    row["weight"] = write(weight);
    row["dimension"] = write(dim);
    t += show(row["weight"]) + std::string(std::max<std::size_t>(1, 14 - show(row["weight"]).size()), ' ') +
         std::to_string(dim) + "\n";
    out["components"].push_back(std::move(row));
  }
  return {out, t};
}

Outcome algebra_stabilize(const Options& o) {
  if (o.level < 0) throw UsageError{"stabilize requires -n MAX_LEVEL"};
  if (o.weights.size() != 1) throw UsageError{"stabilize requires exactly one -w weight"};
  const MonomialQuotient q = json_io::read_quotient(load_json(o.input));
  const AffineMonoid s = json_io::read_monoid(load_json(o.monoid));
  const StabilizationReport r =
      stabilization_check(q, s, parse_weight_list(o.weights[0]), static_cast<std::uint64_t>(o.level));
  Json out;
  out["weight"] = write(r.weight);
  out["stable_level"] = write(r.stable_level);
  out["dimensions"] = Json::array();
  for (auto d : r.dimensions) out["dimensions"].push_back(write(d));
  out["limit_dimension"] = write(r.limit_dimension);
  out["monotone"] = r.monotone;
  out["stable"] = r.stable;
  out["matches_limit"] = r.matches_limit;
  std::string t;
  t += "weight           " + show(out["weight"]) + "\n";
  t += "stable level     " + show(out["stable_level"]) + "\n";
  t += "dimensions       " + show_list(out["dimensions"]) + "\n";
  t += "limit dimension  " + show(out["limit_dimension"]) + "\n";
  t += "monotone         " + show(out["monotone"]) + "\n";
  t += "stable           " + show(out["stable"]) + "\n";
  t += "matches limit    " + show(out["matches_limit"]) + "\n";
  return {out, t};
}

Outcome algebra_algebraize(const Options& o) {
  if (o.bound < 0) throw UsageError{"algebraize requires --bound N"};
  const MonomialQuotient q = json_io::read_quotient(load_json(o.input));
  const AffineMonoid s = json_io::read_monoid(load_json(o.monoid));
  const auto entries = algebraize_report(q, s, static_cast<std::uint64_t>(o.bound));
  bool holds = true;
  Json out;
  out["bound"] = write(static_cast<std::uint64_t>(o.bound));
  out["components"] = Json::array();
  std::string t = "weight        level  truncated  limit\n";
  for (const auto& e : entries) {
    holds = holds && e.truncated_dimension == e.limit_dimension;
    Json row;
    row["weight"] = write(e.weight);
    row["stable_level"] = write(e.stable_level);
    row["truncated_dimension"] = write(e.truncated_dimension);
    row["limit_dimension"] = write(e.limit_dimension);
    const std::string w = show(row["weight"]);
    t += w + std::string(std::max<std::size_t>(1, 14 - w.size()), ' ') + std::to_string(e.stable_level) +
         "      " + std::to_string(e.truncated_dimension) + "          " +
         std::to_string(e.limit_dimension) + "\n";
    out["components"].push_back(std::move(row));
  }
  out["holds"] = holds;
  t += std::string("algebraization ") + (holds ? "holds" : "FAILS") + "\n";
  return {out, t};
}

// ---- hilb ------------------------------------------------------------------

void require_d(const Options& o) {
  if (o.d < 0) throw UsageError{"-d must be nonnegative"};
}

Json header(const Options& o) {
  Json out;
  out["d"] = write(static_cast<std::uint64_t>(o.d));
  return out;
}

Outcome hilb_fixed_points(const Options& o) {
  require_d(o);
  Json out = header(o);
  out["fixed_points"] = Json::array();
  std::string t;
  for (const auto& p : hilb::partitions(o.d)) {
    const auto m = hilb::ideal_from_partition(p);
    Json gens = Json::array();
    std::vector<std::string> names;
    for (const auto& g : m.minimal_generators) {
      gens.push_back(Json::array({std::to_string(g[0]), std::to_string(g[1])}));
      std::string name;
      if (g[0]) name += g[0] == 1 ? "x" : "x^" + std::to_string(g[0]);
      if (g[1]) name += (name.empty() ? "" : "*") + (g[1] == 1 ? std::string("y") : "y^" + std::to_string(g[1]));
      names.push_back(name.empty() ? "1" : name);
    }
    Json entry;
    entry["partition"] = write(p);
    entry["minimal_generators"] = std::move(gens);
    t += show(entry["partition"]) + "  (" + join(names, ", ") + ")\n";
    out["fixed_points"].push_back(std::move(entry));
  }
  return {out, t};
}

Outcome hilb_tangent(const Options& o) {
  require_d(o);
  Json out = header(o);
  out["tangent"] = Json::array();
  std::string t;
  for (const auto& p : hilb::partitions(o.d)) {
    const auto m = hilb::ideal_from_partition(p);
    const auto chi = hilb::tangent_character_linalg(m);
    if (!(chi == hilb::tangent_character_armleg(m)))
      throw Error(ErrorCode::InvalidArgument, "tangent character methods disagree", show(write(p)));
    Json entry;
    entry["partition"] = write(p);
    entry["character"] = write(chi);
    std::vector<std::string> weights;
    for (const auto& [w, mult] : chi.entries())
      weights.push_back("(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + ")" +
                        (mult > 1 ? "^" + std::to_string(mult) : ""));
    t += show(entry["partition"]) + "  " + join(weights, " ") + "\n";
    out["tangent"].push_back(std::move(entry));
  }
  return {out, t};
}

Json weight_json(const hilb::WeightVector2& w) {
  return Json::array({std::to_string(w.value()[0]), std::to_string(w.value()[1])});
}

Outcome hilb_cells(const Options& o) {
  require_d(o);
  if (o.weights.size() != 1) throw UsageError{"cells requires exactly one -w a,b"};
  const auto w = parse_weight2(o.weights[0]);
  Json out = header(o);
  out["weight"] = weight_json(w);
  out["cells"] = Json::array();
  std::string t = "partition        dimension\n";
  for (const auto& p : hilb::partitions(o.d)) {
    const auto chi = hilb::tangent_character_linalg(hilb::ideal_from_partition(p));
    Json entry;
    entry["partition"] = write(p);
    entry["dimension"] = write(hilb::cell_dimension(chi, w));
    const bool generic = hilb::is_generic(chi, w);
    if (!generic) entry["warning"] = "non-generic weight";
    const std::string name = show(entry["partition"]);
    t += name + std::string(std::max<std::size_t>(1, 17 - name.size()), ' ') +
         show(entry["dimension"]) + (generic ? "" : "  (non-generic)") + "\n";
    out["cells"].push_back(std::move(entry));
  }
  return {out, t};
}

Outcome hilb_intersect(const Options& o) {
  require_d(o);
  if (o.weights.size() != 2) throw UsageError{"intersect requires two -w a,b options"};
  const auto w1 = parse_weight2(o.weights[0]);
  const auto w2 = parse_weight2(o.weights[1]);
  Json out = header(o);
  out["weights"] = Json::array({weight_json(w1), weight_json(w2)});
  out["cells"] = Json::array();
  std::string t = "partition        dim Z1  dim Z2  dim Z1∩Z2\n";
  for (const auto& p : hilb::partitions(o.d)) {
    const auto chi = hilb::tangent_character_linalg(hilb::ideal_from_partition(p));
    Json entry;
    entry["partition"] = write(p);
    entry["dimension"] = write(hilb::intersection_dimension(chi, w1, w2));
    const std::string name = show(entry["partition"]);
    t += name + std::string(std::max<std::size_t>(1, 17 - name.size()), ' ') +
         std::to_string(hilb::cell_dimension(chi, w1)) + "       " +
         std::to_string(hilb::cell_dimension(chi, w2)) + "       " + show(entry["dimension"]) + "\n";
    out["cells"].push_back(std::move(entry));
  }
  return {out, t};
}

Outcome hilb_poincare(const Options& o) {
  require_d(o);
  if (o.weights.size() > 1) throw UsageError{"poincare takes at most one -w a,b"};
  const auto w = o.weights.empty() ? hilb::default_generic_weight(o.d) : parse_weight2(o.weights[0]);
  Json out = header(o);
  out["weight"] = weight_json(w);
  out["histogram"] = Json::array();
  std::string t = "dimension  cells\n";
  std::vector<std::string> poly;
  for (const auto& [dim, count] : hilb::poincare_polynomial(o.d, w)) {
    out["histogram"].push_back(Json::array({std::to_string(dim), std::to_string(count)}));
    t += std::to_string(dim) + std::string(std::max<std::size_t>(1, 11 - std::to_string(dim).size()), ' ') +
         std::to_string(count) + "\n";
  }
  return {out, t};
}

struct Leaf {
  std::string group;
  std::string name;
  std::string description;
  std::function<Outcome(const Options&)> run;
  bool input = false;
  bool monoid = false;
  bool d = false;
  bool weights = false;
  bool level = false;
  bool bound = false;
};

std::vector<Leaf> leaves() {
  return {
      {"monoid", "analyze", "facets, units, zero criterion and Kempf vector", monoid_analyze, true},
      {"monoid", "reduce", "projection onto a monoid with zero", monoid_reduce, true},
      {"algebra", "bbplus", "presentation of the BB-plus scheme", algebra_bbplus, true, true},
      {"algebra", "fixed", "presentation of the fixed locus", algebra_fixed, true},
      {"algebra", "check", "open-immersion criterion at the origin", algebra_check, true, true},
      {"algebra", "truncate", "graded dimensions of A/J^(n+1)", algebra_truncate, true, true, false, false, true},
      {"algebra", "stabilize", "stabilization of one graded component", algebra_stabilize, true, true, false, true, true},
      {"algebra", "algebraize", "compare stabilized truncations with A", algebra_algebraize, true, true, false, false, false, true},
      {"hilb", "fixed-points", "monomial ideals of colength d", hilb_fixed_points, false, false, true},
      {"hilb", "tangent", "tangent characters at the fixed points", hilb_tangent, false, false, true},
      {"hilb", "cells", "BB cell dimensions for one weight", hilb_cells, false, false, true, true},
      {"hilb", "intersect", "dimensions of intersections of two cells", hilb_intersect, false, false, true, true},
      {"hilb", "poincare", "histogram of cell dimensions", hilb_poincare, false, false, true, true},
  };
}

CommandResult failure(const Error& e, bool json) {
  CommandResult r;
  r.exit_code = kDomainError;
  Json err;
  err["code"] = std::string(error_code_name(e.code()));
  err["message"] = e.what();
  err["location"] = e.location();
  r.payload["error"] = err;
  r.table = "error[" + std::string(error_code_name(e.code())) + "]: " + e.what() +
            (e.location().empty() ? "" : " (at " + e.location() + ")") + "\n";
  if (json) r.out = r.payload.dump(2) + "\n";
  else r.err = r.table;
  return r;
}

CommandResult usage(const std::string& message, const std::string& help) {
  CommandResult r;
  r.exit_code = kUsageError;
  r.err = "usage error: " + message + "\n" + help;
  return r;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Bialynicki-Birula decompositions for torus actions on affine schemes", "torusbb"};
  app.require_subcommand(1);
  Options o;
  const auto table = leaves();
  std::vector<CLI::App*> commands;
  std::map<std::string, CLI::App*> groups;
  for (const auto& leaf : table) {
    auto*& group = groups[leaf.group];
    if (!group) {
      group = app.add_subcommand(leaf.group, leaf.group + " operations");
      group->require_subcommand(1);
    }
    CLI::App* cmd = group->add_subcommand(leaf.name, leaf.description);
    if (leaf.input) cmd->add_option("-i,--input", o.input, "input JSON file")->required();
    if (leaf.monoid) cmd->add_option("-m,--monoid", o.monoid, "monoid JSON file")->required();
    if (leaf.d) cmd->add_option("-d", o.d, "number of points")->required();
    if (leaf.weights) cmd->add_option("-w", o.weights, "weight a,b (repeatable)")->allow_extra_args(false);
    if (leaf.level) cmd->add_option("-n", o.level, "truncation level");
    if (leaf.bound) cmd->add_option("--bound", o.bound, "Kempf degree bound");
    cmd->add_flag("--json", o.json, "write JSON to stdout");
    commands.push_back(cmd);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    const CLI::App* target = &app;
    for (auto* c : commands)
      if (c->parsed()) target = c;
    r.out = target->help();
    return r;
  } catch (const CLI::ParseError& e) {
    return usage(e.what(), app.help());
  }

  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!commands[i]->parsed()) continue;
    try {
      Outcome outcome = table[i].run(o);
      CommandResult r;
      r.payload = std::move(outcome.payload);
      r.table = std::move(outcome.table);
      r.out = o.json ? r.payload.dump(2) + "\n" : r.table;
      return r;
    } catch (const UsageError& e) {
      return usage(e.message, commands[i]->help());
    } catch (const Error& e) {
      return failure(e, o.json);
    }
  }
  return usage("no command given", app.help());
}

}  // namespace torusbb::cli
