#include "doctest.h"
#include "zk/error.hpp"
#include "zk_tools/report.hpp"

using namespace zk;

TEST_CASE("weight parsing") {
  CHECK(report::parse_weight("2,1,1") == Weight{2, 1, 1});
  CHECK(report::parse_weight("2,1;1") == Weight{2, 1, 1});
  CHECK(report::parse_weight("(3, 0, -2)") == Weight{3, 0, -2});
  CHECK_THROWS_AS(report::parse_weight("2,,1"), InvalidInput);
  CHECK_THROWS_AS(report::parse_weight("2;1;1"), InvalidInput);
  CHECK_THROWS_AS(report::parse_weight("2,x"), InvalidInput);
  try {
    report::parse_weight("2,x");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("column 3") != std::string::npos);
  }
}

TEST_CASE("integers beyond 64 bits are emitted as strings") {
  CHECK(report::to_json(Int(42)) == 42);
  CHECK(report::to_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("homology JSON") {
  HomologyResult h;
  h.degree = 2;
  h.total = {3, {2, 6}};
  const auto j = report::to_json(h);
  CHECK(j["degree"] == 2);
  CHECK(j["free_rank"] == 3);
  CHECK(j["torsion"].size() == 2);
}
