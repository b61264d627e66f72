#include <doctest.h>

#include "ffcount/table.hpp"

#include <sstream>

using namespace ffc;

TEST_CASE("csv output quotes when needed") {
  Table t{{"D", "value"}, {}};
  t.add({"T^2+1", "3/2"});
  t.add({"a,b", "say \"x\""});
  std::ostringstream os;
  t.write(os, "csv");
  CHECK(os.str() == "D,value\nT^2+1,3/2\n\"a,b\",\"say \"\"x\"\"\"\n");
}

TEST_CASE("json output keeps column order") {
  Table t{{"z", "a"}, {}};
  t.add({"1", "2"});
  std::ostringstream os;
  t.write(os, "json");
  CHECK(os.str() == "[\n  {\n    \"z\": \"1\",\n    \"a\": \"2\"\n  }\n]\n");
}

TEST_CASE("bad input") {
  Table t{{"a"}, {}};
  CHECK_THROWS(t.add({"1", "2"}));
  std::ostringstream os;
  CHECK_THROWS(t.write(os, "xml"));
}
