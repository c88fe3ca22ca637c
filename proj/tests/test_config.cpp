#include <doctest.h>

#include <sstream>

#include "orlicz/config.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/error.hpp"

using namespace orlicz;

TEST_CASE("kind descriptors") {
  const KindSpec z = parse_kind_spec("zygmund:p=2, a=1");
  CHECK(z.kind == "zygmund");
  CHECK(z.number("p", 0) == 2.0);
  CHECK(z.number("a", 0) == 1.0);
  CHECK(!z.number("b").has_value());
  const KindSpec f = parse_kind_spec("file:data/w.grid,ap=3");
  CHECK(f.kind == "file");
  CHECK(f.path == "data/w.grid");
  CHECK(f.integer("ap", 2) == 3);
  CHECK(parse_kind_spec("const").params.empty());
  CHECK_THROWS_AS(parse_kind_spec("power:p"), InvalidArgument);
  CHECK_THROWS_AS(parse_kind_spec("power:p=1,p=2"), InvalidArgument);
  CHECK_THROWS_AS(parse_kind_spec("file:"), InvalidArgument);
  CHECK_THROWS_AS(parse_kind_spec("power:p=abc").number("p", 0), InvalidArgument);
}

TEST_CASE("config files") {
  const ConfigFile c = ConfigFile::parse(
      "# comment\n"
      "young = zygmund:p=2,a=1   # trailing\n"
      "\n"
      "out = \"a # b.csv\"\n"
      "J=10\n");
  CHECK(c.keys() == std::vector<std::string>{"young", "out", "J"});
  CHECK(*c.get("young") == "zygmund:p=2,a=1");
  CHECK(*c.get("out") == "a # b.csv");
  CHECK(c.line_of("J") == 5);
  CHECK(!c.has("M"));

  auto line_of_error = [](const std::string& text) {
    try {
      ConfigFile::parse(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of_error("J = 1\nJ = 2\n") == 2);
  CHECK(line_of_error("a = 1\n\nno equals sign\n") == 3);
  CHECK(line_of_error("x = \"open\n") == 1);
  CHECK(line_of_error(" = 4\n") == 1);
  CHECK(line_of_error("x = a\"b\n") == 1);
  CHECK_THROWS_AS(ConfigFile::load("/nonexistent/config.cfg"), ConfigError);
}

TEST_CASE("number parsing") {
  CHECK(parse_double(" 1.5e-3 ", "x") == 1.5e-3);
  CHECK(parse_long("42", "n") == 42);
  CHECK_THROWS_AS(parse_double("1.5x", "x"), InvalidArgument);
  CHECK_THROWS_AS(parse_long("4.2", "n"), InvalidArgument);
  CHECK_THROWS_AS(parse_long("", "n"), InvalidArgument);
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
  CHECK(trim("  x y \t") == "x y");
}

TEST_CASE("CSV output") {
  CsvTable t({"N", "name", "value"});
  t.add({1LL, std::string("plain"), 0.1});
  t.add({2LL, std::string("with,comma \"q\""), 1.0 / 3.0});
  std::ostringstream os;
  t.write(os);
  CHECK(os.str() ==
        "N,name,value\n"
        "1,plain,0.10000000000000001\n"
        "2,\"with,comma \"\"q\"\"\",0.33333333333333331\n");
  CHECK_THROWS_AS(t.add({1LL}), InvalidArgument);
  CHECK(format_number(2.0) == "2");
  const std::string py = plot_script("out/x.csv", {"N", "v"}, true);
  CHECK(py.find("\"out/x.csv\"") != std::string::npos);
  CHECK(py.find("set_xscale") != std::string::npos);
}
