#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "treecount/oeis.hpp"

using namespace treecount;

TEST_CASE("id validation") {
  CHECK(valid_oeis_id("A071207"));
  CHECK(valid_oeis_id("A232006"));
  CHECK_FALSE(valid_oeis_id("A00000"));
  CHECK_FALSE(valid_oeis_id("A00"));
  CHECK_FALSE(valid_oeis_id("B071207"));
  CHECK_FALSE(valid_oeis_id("A07120x"));
}

TEST_CASE("parse_bfile") {
  auto b = parse_bfile("0 1\n1 1\n");
  REQUIRE(b.values.size() == 2);
  CHECK(b.first_index == 0);
  CHECK(b.values[0] == 1);

  b = parse_bfile("# comment\n5 120\n6 720\n");
  REQUIRE(b.values.size() == 2);
  CHECK(b.first_index == 5);
  CHECK(b.values[1] == 720);

  b = parse_bfile("  1 -3 \n\n 2 99\n");
  CHECK(b.values[0] == -3);

  CHECK_THROWS_AS(parse_bfile("0 1\n2 5\n"), std::invalid_argument);  // index gap
  CHECK_THROWS_AS(parse_bfile("0 abc\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile("0 1 junk\n"), std::invalid_argument);
}

TEST_CASE("parse round-trips the fixture text") {
  auto b = parse_bfile(fixtures::kA071207);
  CHECK(b.values.size() == 66);
  CHECK(b.values[10] == 256);
  std::ostringstream os;
  for (size_t j = 0; j < b.values.size(); ++j)
    os << (b.first_index + static_cast<long>(j)) << " " << b.values[j].get_str() << "\n";
  auto again = parse_bfile(os.str());
  CHECK(again.values == b.values);
  CHECK(again.first_index == b.first_index);
}

TEST_CASE("offline fetch falls back to the bundled fixture") {
  auto b = fetch_bfile("A071207", "", true);
  CHECK(b.id == "A071207");
  CHECK(b.values.size() == 66);
  CHECK_THROWS_AS(fetch_bfile("A000001", "", true), FetchError);
  CHECK_THROWS_AS(fetch_bfile("A00", "", true), std::invalid_argument);
}

TEST_CASE("warm cache wins over the fixture") {
  auto dir = std::filesystem::temp_directory_path() / "treecount_oeis_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream os(dir / "A071207.txt");
    os << "0 7\n1 8\n";
  }
  auto b = fetch_bfile("A071207", dir.string(), true);
  REQUIRE(b.values.size() == 2);
  CHECK(b.values[0] == 7);
  std::filesystem::remove_all(dir);
}

TEST_CASE("crosscheck passes on the bundled fixtures") {
  for (const char* id : {"A071207", "A232006"}) {
    auto rep = crosscheck(id, 8, "", true);
    CHECK(rep.pass);
    CHECK(rep.matched_rows >= 8);
    CHECK(rep.start_row == 0);
    CHECK_FALSE(rep.skipped_column);
  }
}

TEST_CASE("crosscheck aligns a b-file that starts at a later row") {
  // simulate a live file whose offset drops the first triangle row
  std::ostringstream os;
  long idx = 1;
  for (long r = 1; r <= 9; ++r)
    for (const auto& v : triangle_row("A071207", r)) os << idx++ << " " << v.get_str() << "\n";
  auto rep = crosscheck("A071207", 8, parse_bfile(os.str()));
  CHECK(rep.pass);
  CHECK(rep.start_row == 1);
}

TEST_CASE("crosscheck aligns the column-dropped layout") {
  std::ostringstream os;
  long idx = 0;
  for (long r = 1; r <= 10; ++r) {
    auto row = triangle_row("A232006", r);
    for (size_t c = 1; c < row.size(); ++c) os << idx++ << " " << row[c].get_str() << "\n";
  }
  auto rep = crosscheck("A232006", 8, parse_bfile(os.str()));
  CHECK(rep.pass);
  CHECK(rep.skipped_column);
}

TEST_CASE("crosscheck fails on corrupted data with a mismatch position") {
  auto b = parse_bfile(fixtures::kA071207);
  b.values[7] += 1;  // corrupt inside row 3
  auto rep = crosscheck("A071207", 5, b);
  CHECK_FALSE(rep.pass);
  CHECK(rep.matched_terms == 7);
  CHECK(rep.message.find("mismatch") != std::string::npos);
}

TEST_CASE("crosscheck reports no alignment for unrelated data") {
  auto rep = crosscheck("A071207", 3, parse_bfile("0 999\n1 998\n"));
  CHECK_FALSE(rep.pass);
  CHECK(rep.matched_terms == 0);
}
