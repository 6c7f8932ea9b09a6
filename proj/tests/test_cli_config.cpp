#include <sstream>

#include "config.hpp"
#include "doctest.h"

using isingctl::Config;
using isingctl::ConfigError;

namespace {

Config parse(const std::string& text) {
  std::istringstream in(text);
  return Config::parse(in);
}

}  // namespace

TEST_CASE("config values and section fallback") {
  Config c = parse("seed = 7\nbeta = 0.5\n[coupling-scan]\nbeta = 0.05, 0.1\nn = 250,500\nrecords = yes\n");
  c.use_section("coupling-scan");
  CHECK(c.get_seed("seed", 0) == 7);
  CHECK(c.get_doubles("beta", {}) == std::vector<double>{0.05, 0.1});
  CHECK(c.get_ints("n", {}) == std::vector<long long>{250, 500});
  CHECK(c.get_bool("records", false));
  CHECK(c.get_int("cap", 99) == 99);
  CHECK(c.has("seed"));
  CHECK(!c.has("cap"));
  CHECK(c.unused_keys().empty());

  Config top = parse("seed = 7\nbeta = 0.5\n[coupling-scan]\nbeta = 0.05\n");
  top.use_section("verify");
  CHECK(top.get_double("beta", 1.0) == 0.5);
}

TEST_CASE("unused keys are reported") {
  Config c = parse("seed = 1\ntypo = 3\n[sample]\nL = 4\nbogus = x\n[other]\nignored = 1\n");
  c.use_section("sample");
  c.get_seed("seed", 0);
  c.get_int("L", 0);
  CHECK(c.unused_keys() == std::vector<std::string>{"bogus", "typo"});
}

TEST_CASE("bad values raise config errors") {
  Config c = parse("beta = abc\nn = 1.5\nflag = maybe\nlist = 1,,2\n");
  CHECK_THROWS_AS(c.get_double("beta", 0), ConfigError);
  CHECK_THROWS_AS(c.get_int("n", 0), ConfigError);
  CHECK_THROWS_AS(c.get_bool("flag", false), ConfigError);
  CHECK_THROWS_AS(c.get_ints("list", {}), ConfigError);
  CHECK_THROWS_AS(Config::load("/nonexistent/config.ini"), ConfigError);
  CHECK_THROWS_AS(parse("[unterminated\n"), ConfigError);
}

TEST_CASE("echoed config reproduces the effective values") {
  Config c = parse("[decay-scan]\nbeta = 0.1\nradii = 2,3,4\n");
  c.use_section("decay-scan");
  const double beta = c.get_double("beta", 0);
  const auto radii = c.get_ints("radii", {});
  const double d = c.get_double("d", 2.0);
  const std::string source = c.get_string("source", "erdos-renyi");

  std::ostringstream echo;
  c.echo(echo, "# ");
  std::string stripped;
  std::istringstream lines(echo.str());
  for (std::string line; std::getline(lines, line);) {
    REQUIRE(line.rfind("# ", 0) == 0);
    stripped += line.substr(2) + "\n";
  }
  Config again = parse(stripped);
  again.use_section("decay-scan");
  CHECK(again.get_double("beta", -1) == beta);
  CHECK(again.get_ints("radii", {}) == radii);
  CHECK(again.get_double("d", -1) == d);
  CHECK(again.get_string("source", "") == source);
  CHECK(again.effective() == c.effective());
}

TEST_CASE("inline comments are stripped") {
  Config c = parse("; header\n[gw-stats]\ntrees = 100   # note\ndepths = 4, 6 ; more\nlabel = a#b\n");
  c.use_section("gw-stats");
  CHECK(c.get_int("trees", 0) == 100);
  CHECK(c.get_ints("depths", {}) == std::vector<long long>{4, 6});
  CHECK(c.get_string("label", "") == "a#b");
}
