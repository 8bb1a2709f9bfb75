#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ofm/closed_form.hpp"
#include "ofm/orbifold.hpp"
#include "ofm/table.hpp"

using namespace ofm;

TEST_CASE("rows carry both countings straight from the formulas") {
  const auto rows = table_rows(1, 15);
  REQUIRE(rows.size() == 15);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].genus == i + 1);
    CHECK(rows[i].labelled == eps4_rooted(i + 1));
    CHECK(rows[i].unlabelled == eps4_unrooted(i + 1));
  }
  CHECK(rows[4].unlabelled == BigInt("120644422"));
  CHECK(rows[14].labelled == BigInt("38405528861348447169764191835301345796340625000"));
  CHECK(rows[14].unlabelled == BigInt("331082145356452130774665205463914398071175024"));
}

TEST_CASE("bad ranges are rejected") {
  CHECK_THROWS_AS(table_rows(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(table_rows(4, 2), std::invalid_argument);
}

TEST_CASE("csv output is exact and round-trips") {
  const auto rows = table_rows(1, 8);
  const std::string csv = render_table(rows, TableFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "genus,labelled,unlabelled");
  for (const TableRow& row : rows) {
    REQUIRE(std::getline(in, line));
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 != std::string::npos);
    CHECK(line.substr(0, c1) == std::to_string(row.genus));
    CHECK(BigInt(line.substr(c1 + 1, c2 - c1 - 1)) == row.labelled);
    CHECK(BigInt(line.substr(c2 + 1)) == row.unlabelled);
  }
  CHECK_FALSE(std::getline(in, line));

  CHECK(render_table(table_rows(1, 2), TableFormat::kCsv) ==
        "genus,labelled,unlabelled\n1,1,1\n2,45,6\n");
}

TEST_CASE("json output is exact, uses decimal strings, and round-trips") {
  CHECK(render_table(table_rows(1, 1), TableFormat::kJson) ==
        "[{\"genus\":1,\"labelled\":\"1\",\"unlabelled\":\"1\"}]\n");

  const auto rows = table_rows(1, 12);
  const auto parsed = nlohmann::json::parse(render_table(rows, TableFormat::kJson));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i]["genus"].get<unsigned long>() == rows[i].genus);
    // decimal strings, not JSON numbers: g >= 8 would overflow doubles
    REQUIRE(parsed[i]["labelled"].is_string());
    REQUIRE(parsed[i]["unlabelled"].is_string());
    CHECK(BigInt(parsed[i]["labelled"].get<std::string>()) == rows[i].labelled);
    CHECK(BigInt(parsed[i]["unlabelled"].get<std::string>()) == rows[i].unlabelled);
  }
}

TEST_CASE("markdown shows one row per genus with exact digits") {
  const std::string md = render_table(table_rows(1, 3), TableFormat::kMarkdown);
  CHECK(md.find("| genus") == 0);
  CHECK(md.find("labelled") != std::string::npos);
  CHECK(md.find("unlabelled") != std::string::npos);
  CHECK(md.find(" 9450 ") != std::string::npos);
  CHECK(md.find(" 510 ") != std::string::npos);
  // column separators line up: every line has the same length
  std::istringstream in(md);
  std::string line;
  std::size_t len = 0;
  while (std::getline(in, line)) {
    if (len == 0) len = line.size();
    CHECK(line.size() == len);
  }
}
