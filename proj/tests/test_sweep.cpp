#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "arthrosim/errors.hpp"
#include "arthrosim/sweep.hpp"

using namespace arthro;

namespace {

SweepResult small_sweep() {
  SweepResult s;
  s.module = "demo";
  s.config_hash = "00ff00ff00ff00ff";
  s.abscissa = {"theta_deg", "deg", {0.0, 0.5, 1.0}};
  s.series.push_back({"f_n", "n", {1.0, 2.5, std::numeric_limits<double>::quiet_NaN()}});
  s.notes.push_back("flavor: test");
  return s;
}

std::string render(const SweepResult& s) {
  std::ostringstream os;
  write_csv(s, os);
  return os.str();
}

}  // namespace

TEST_CASE("write_csv emits the documented dialect byte for byte") {
  CHECK(render(small_sweep()) ==
        "# module: demo\n"
        "# config_fnv1a: 00ff00ff00ff00ff\n"
        "# flavor: test\n"
        "# units: deg,n\n"
        "theta_deg,f_n\n"
        "0,1\n"
        "0.5,2.5\n"
        "1,\n");
}

TEST_CASE("format_value uses 9 significant digits") {
  CHECK(format_value(0.1) == "0.1");
  CHECK(format_value(-11.25) == "-11.25");
  CHECK(format_value(1.0 / 3.0) == "0.333333333");
  CHECK(format_value(1234567891.0) == "1.23456789e+09");
  CHECK(format_value(0.0) == "0");
}

TEST_CASE("validate rejects ragged columns and non-monotone abscissae") {
  SweepResult s = small_sweep();
  s.series[0].values.pop_back();
  CHECK_THROWS_AS(s.validate(), NumericError);

  SweepResult t = small_sweep();
  t.abscissa.values = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(t.validate(), NumericError);

  SweepResult ok = small_sweep();
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("read_csv_file recovers names, units, comments, and NaN cells") {
  const std::string path = "sweep_roundtrip_test.csv";
  write_csv_file(small_sweep(), path);
  const CsvTable t = read_csv_file(path);
  std::remove(path.c_str());

  REQUIRE(t.column_names.size() == 2);
  CHECK(t.column_names[0] == "theta_deg");
  CHECK(t.column_names[1] == "f_n");
  REQUIRE(t.column_units.size() == 2);
  CHECK(t.column_units[0] == "deg");
  CHECK(t.column_units[1] == "n");
  REQUIRE(t.columns[0].size() == 3);
  CHECK(t.columns[0][1] == 0.5);
  CHECK(t.columns[1][1] == 2.5);
  CHECK(std::isnan(t.columns[1][2]));
  REQUIRE(t.comments.size() >= 3);  // module, hash, note
}

TEST_CASE("fnv1a_hex matches the published test vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}
