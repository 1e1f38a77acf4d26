#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torusbb/cli.hpp"

using torusbb::cli::dispatch;
using torusbb::json_io::Json;

namespace {

const std::string golden_dir = TORUSBB_GOLDEN_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> with_paths(std::vector<std::string> args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "-i" || args[i] == "-m") args[i + 1] = golden_dir + "/" + args[i + 1];
  return args;
}

bool has_json_number(const Json& j) {
  if (j.is_number()) return true;
  if (j.is_structured())
    for (const auto& item : j)
      if (has_json_number(item)) return true;
  return false;
}

}  // namespace

TEST_CASE("golden outputs are reproduced byte for byte") {
  const Json cases = Json::parse(slurp(golden_dir + "/cases.json"));
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    const std::string name = c["name"].get<std::string>();
    CAPTURE(name);
    const auto args = with_paths(c["args"].get<std::vector<std::string>>());
    const auto result = dispatch(args);
    CHECK(result.exit_code == c["exit"].get<int>());
    CHECK(result.out == slurp(golden_dir + "/expected/" + name + ".json"));
  }
}

TEST_CASE("repeated runs are identical") {
  const auto args = with_paths({"monoid", "analyze", "-i", "monoid_cone12.json", "--json"});
  const auto a = dispatch(args);
  const auto b = dispatch(args);
  CHECK(a.out == b.out);
  CHECK(a.table == b.table);
  const auto p = dispatch({"hilb", "poincare", "-d", "5"});
  CHECK(p.out == dispatch({"hilb", "poincare", "-d", "5"}).out);
}

TEST_CASE("integers are serialized as strings") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"monoid", "analyze", "-i", "monoid_cone12.json", "--json"},
           {"monoid", "reduce", "-i", "monoid_diag.json", "--json"},
           {"algebra", "truncate", "-i", "quot_free12.json", "-m", "monoid_N.json", "-n", "4", "--json"},
           {"hilb", "tangent", "-d", "3", "--json"},
           {"hilb", "poincare", "-d", "4", "--json"}}) {
    const auto r = dispatch(with_paths(args));
    REQUIRE(r.exit_code == 0);
    CHECK_FALSE(has_json_number(r.payload));
    CHECK(Json::parse(r.out) == r.payload);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(dispatch({}).exit_code == 2);
  CHECK(dispatch({"frobnicate"}).exit_code == 2);
  CHECK(dispatch({"hilb", "cells"}).exit_code == 2);
  CHECK(dispatch({"hilb", "cells", "-d", "3", "-w", "1,x"}).exit_code == 2);
  CHECK(dispatch({"hilb", "cells", "-d", "3", "-w", "1,2,3"}).exit_code == 2);
  CHECK(dispatch({"monoid", "analyze"}).exit_code == 2);
  const auto r = dispatch({"algebra", "truncate", "-i", "x.json"});
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("domain errors are structured and exit with 1") {
  const auto missing = dispatch({"monoid", "analyze", "-i", golden_dir + "/no_such_file.json", "--json"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.payload["error"]["code"] == "InvalidInput");

  const auto units = dispatch(with_paths({"algebra", "bbplus", "-i", "pres_xy.json", "-m", "monoid_Z.json", "--json"}));
  CHECK(units.exit_code == 1);
  CHECK(units.payload["error"]["code"] == "MonoidHasUnits");
  CHECK(units.payload["error"].contains("message"));
  CHECK(units.payload["error"].contains("location"));

  const auto nongeneric = dispatch({"hilb", "poincare", "-d", "2", "-w", "1,1", "--json"});
  CHECK(nongeneric.exit_code == 1);
  CHECK(nongeneric.payload["error"]["code"] == "NonGenericWeight");
}

TEST_CASE("non-generic cells carry a warning") {
  const auto r = dispatch({"hilb", "cells", "-d", "2", "-w", "1,1", "--json"});
  CHECK(r.exit_code == 0);
  for (const auto& cell : r.payload["cells"]) CHECK(cell.contains("warning"));
  for (const auto& cell : dispatch({"hilb", "cells", "-d", "3", "-w", "1,4", "--json"}).payload["cells"])
    CHECK_FALSE(cell.contains("warning"));
}

TEST_CASE("text mode prints a table") {
  const auto r = dispatch({"hilb", "poincare", "-d", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == r.table);
  CHECK_FALSE(r.out.empty());
  CHECK(r.out.front() != '{');
}
