#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli_runner.hpp"

TEST_CASE("stats emits the full record for the worked example") {
  const cli::Result r = cli::run("stats 5243716");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "word=5243716\n"
        "n=7\n"
        "ascents=3\n"
        "weak_excedances=4\n"
        "maj=9\n"
        "q_position=5\n"
        "cycles=(2)(43)(7615)\n"
        "f=2437615\n"
        "f_inverse=6453271\n"
        "g=3645172\n");
}

TEST_CASE("stats reports the complement map") {
  const cli::Result r = cli::run("stats 53214");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("g=13452\n") != std::string::npos);
}

TEST_CASE("stats of the one-letter word") {
  const cli::Result r = cli::run("stats 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "word=1\n"
        "n=1\n"
        "ascents=0\n"
        "weak_excedances=1\n"
        "maj=0\n"
        "q_position=1\n"
        "cycles=(1)\n"
        "f=1\n"
        "f_inverse=1\n"
        "g=1\n");
}

TEST_CASE("tables") {
  CHECK(cli::run("table --kind eulerian --n 3").output == "1,4,1\n");
  CHECK(cli::run("table --kind general --n 2 --k 1 --a 1 --d 2").output == "6\n");
  CHECK(cli::run("table --kind cnk --n 3 --k 1").output == "4,4,2,1\n");
  CHECK(cli::run("table --kind eulerian --max-n 4").output == "1\n1,1\n1,4,1\n1,11,11,1\n");
}

TEST_CASE("csv and json tables carry identical values") {
  const cli::Result csv = cli::run("table --kind cnk --n 4 --format csv");
  const cli::Result json = cli::run("table --kind cnk --n 4 --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(json.exit_code == 0);
  std::vector<std::vector<std::string>> csv_rows;
  std::istringstream lines(csv.output);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string field;
    while (std::getline(cells, field, ',')) fields.push_back(field);
    csv_rows.push_back(fields);
  }
  const auto doc = nlohmann::json::parse(json.output);
  REQUIRE(doc["rows"].size() == csv_rows.size());
  for (std::size_t i = 0; i < csv_rows.size(); ++i)
    for (std::size_t f = 0; f < csv_rows[i].size(); ++f)
      CHECK(doc["rows"][i][f].get<std::string>() == csv_rows[i][f]);
}

TEST_CASE("bijection listing reproduces the published construction") {
  const cli::Result r = cli::run("bijection --side B --n 4 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "source=231 class=BW(3,2) pos=1 image=4312 case=d.1\n"
        "source=231 class=BW(3,2) pos=2 image=4321 case=d.2\n"
        "source=312 class=BW(3,1) pos=1 image=4132 case=c.5\n"
        "source=312 class=BW(3,1) pos=2 image=3421 case=c.2\n"
        "source=312 class=BW(3,1) pos=3 image=3142 case=c.6\n"
        "source=321 class=BW(3,2) pos=1 image=4213 case=d.1\n"
        "source=321 class=BW(3,2) pos=2 image=3412 case=c.1\n");
  // byte-identical on a repeat run
  CHECK(cli::run("bijection --side B --n 4 --k 2").output == r.output);
  // smallest class on the A side is empty
  const cli::Result empty = cli::run("bijection --side A --n 2 --k 1");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());
}

TEST_CASE("verify runs suites and signals through the exit code") {
  CHECK(cli::run("verify --suite row-sum --max-n 12").exit_code == 0);
  CHECK(cli::run("verify --suite main-theorem --max-n 1").exit_code == 0);
  const cli::Result all = cli::run("verify --suite all --max-n 3");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("FAIL") == std::string::npos);
  CHECK(all.output.find("passed ") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli::run("stats 1,1,2").exit_code == 2);
  CHECK(cli::run("stats notaword").exit_code == 2);
  CHECK(cli::run("table --kind bogus --n 3").exit_code == 2);
  CHECK(cli::run("table --kind eulerian").exit_code == 2);
  CHECK(cli::run("bijection --side C --n 4 --k 2").exit_code == 2);
  CHECK(cli::run("nonsense").exit_code == 2);
}

TEST_CASE("enumeration caps exit with 3 and can be overridden") {
  CHECK(cli::run("verify --suite census --max-n 13").exit_code == 3);
  CHECK(cli::run("verify --suite census --max-n 6 --max-enum 5").exit_code == 3);
  CHECK(cli::run("verify --suite census --max-n 6 --max-enum 6").exit_code == 0);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "cli_out_test.tmp";
  const cli::Result direct = cli::run("table --kind eulerian --n 5");
  const cli::Result redirected = cli::run("table --kind eulerian --n 5 --out " + path);
  REQUIRE(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}
