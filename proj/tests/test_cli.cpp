#include <catch2/catch_amalgamated.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "../tools/selftest.hpp"

using namespace cheb;
using namespace cheb::cli;

namespace {

std::vector<std::string> count_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = line.find(',', pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return fields;
}

double reparse(const std::string& field) {
  double v = 0;
  std::from_chars(field.data(), field.data() + field.size(), v);
  return v;
}

}  // namespace

TEST_CASE("parsing the full table invocation") {
  const RunConfig config = parse_args(
      {"table", "--algos", "I,II,III,IV", "--degrees",
       "8,16,32,64,128,256,512,1024", "--interval", "-1,1", "--step", "0.01"});
  CHECK(config.command == Command::table);
  REQUIRE(config.algorithms.size() == 4);
  CHECK(config.algorithms[0] == Algorithm::recurrence);
  CHECK(config.algorithms[3] == Algorithm::horner);
  REQUIRE(config.degrees.size() == 8);
  CHECK(config.degrees.front() == 8);
  CHECK(config.degrees.back() == 1024);
  CHECK(config.a == -1.0);
  CHECK(config.b == 1.0);
  REQUIRE(config.step.has_value());
  CHECK(*config.step == 0.01);
  CHECK(!config.points.has_value());
  CHECK(config.format == OutputFormat::markdown);  // table default
}

TEST_CASE("parsing a minimal sweep") {
  const RunConfig config =
      parse_args({"sweep", "--algos", "I", "--degrees", "2", "--points", "3"});
  CHECK(config.command == Command::sweep);
  CHECK(config.algorithms == std::vector<Algorithm>{Algorithm::recurrence});
  CHECK(config.degrees == std::vector<int>{2});
  CHECK(config.a == -1.0);
  CHECK(config.b == 1.0);
  REQUIRE(config.points.has_value());
  CHECK(*config.points == 3);
  CHECK(config.format == OutputFormat::csv);  // sweep default
}

TEST_CASE("degree notation") {
  const RunConfig powers = parse_args(
      {"sweep", "--algos", "I", "--degrees", "2^3..2^10", "--points", "3"});
  CHECK(powers.degrees ==
        std::vector<int>{8, 16, 32, 64, 128, 256, 512, 1024});

  const RunConfig single = parse_args(
      {"sweep", "--algos", "I", "--degrees", "2^5", "--points", "3"});
  CHECK(single.degrees == std::vector<int>{32});

  const RunConfig mixed = parse_args(
      {"sweep", "--algos", "I", "--degrees", "7,2^3,8,7", "--points", "3"});
  CHECK(mixed.degrees == std::vector<int>{7, 8});  // deduplicated
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse_args({"sweep", "--algos", "I", "--degrees", "4",
                              "--points", "3", "--bogus"}),
                  UsageError);

  SECTION("all violations are reported together") {
    try {
      parse_args({"sweep", "--interval", "1,-1"});
      FAIL("expected UsageError");
    } catch (const UsageError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("missing --algos") != std::string::npos);
      CHECK(msg.find("missing --degrees") != std::string::npos);
      CHECK(msg.find("interval requires a < b") != std::string::npos);
      CHECK(msg.find("exactly one of --points and --step") !=
            std::string::npos);
    }
  }

  const auto expect_usage = [](std::vector<std::string> args,
                               const std::string& needle) {
    try {
      parse_args(args);
      FAIL("expected UsageError for " + needle);
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_usage({"sweep", "--algos", "V", "--degrees", "4", "--points", "3"},
               "unknown algorithm 'V'");
  expect_usage({"sweep", "--algos", "I", "--degrees", "0", "--points", "3"},
               "degrees must be integers");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4", "--points", "1"},
               "--points must be at least 2");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4", "--step", "-0.5"},
               "--step must be positive");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4", "--points", "3",
                "--step", "0.5"},
               "exactly one of --points and --step");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4", "--points", "3",
                "--interval", "-2,1"},
               "inside [-1, 1]");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4", "--points", "3",
                "--format", "yaml"},
               "unknown format");
  expect_usage({"sweep", "--algos", "I", "--degrees", "4..8", "--points", "3"},
               "bad degree range");

  // DOUBLING at a non-power-of-two degree: rejected for sweep and certify,
  // tolerated (as a skipped cell) for table.
  expect_usage({"sweep", "--algos", "II", "--degrees", "12", "--points", "3"},
               "power-of-two");
  expect_usage({"certify", "--algos", "II", "--degrees", "12", "--points", "3"},
               "power-of-two");
  CHECK_NOTHROW(parse_args(
      {"table", "--algos", "II", "--degrees", "12", "--points", "3"}));
}

TEST_CASE("help is not an error") {
  CHECK_THROWS_AS(parse_args({"--help"}), UsageHelp);
  try {
    parse_args({"sweep", "--help"});
    FAIL("expected UsageHelp");
  } catch (const UsageHelp& h) {
    CHECK(std::string(h.what()).find("--algos") != std::string::npos);
  }
}

TEST_CASE("double formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-1.0) == "-1");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");

  const double third = 1.0 / 3.0;
  CHECK(reparse(format_double(third)) == third);
}

TEST_CASE("csv output") {
  const Algorithm algos[] = {Algorithm::recurrence, Algorithm::doubling};
  const int degrees[] = {2, 3};
  const sweep::TableReport table = sweep::compare_table(
      algos, degrees, sweep::GridSpec::with_points(-1, 1, 5));

  std::ostringstream os;
  emit_csv(table, os);
  std::istringstream is(os.str());
  std::string line;

  REQUIRE(std::getline(is, line));
  CHECK(line == csv_header);

  int rows = 0;
  bool saw_skipped = false;
  while (std::getline(is, line)) {
    const auto fields = count_fields(line);
    REQUIRE(fields.size() == 12);
    ++rows;
    if (fields[0] == "II" && fields[1] == "3") {
      saw_skipped = true;
      for (std::size_t i = 2; i < fields.size(); ++i) {
        CHECK(fields[i].empty());
      }
    } else {
      // Numeric columns re-parse to the exact doubles in the report.
      const auto& cell = *table.cell(fields[1] == "3" ? 1 : 0,
                                     fields[0] == "I" ? 0 : 1);
      CHECK(reparse(fields[2]) == cell.grid.a);
      CHECK(reparse(fields[3]) == cell.grid.b);
      CHECK(reparse(fields[4]) == cell.grid.resolved_step());
      CHECK(fields[5] == "5");
      CHECK(reparse(fields[6]) == cell.e_n);
      CHECK(reparse(fields[7]) == cell.worst_x);
      CHECK(fields[8] == "0");
      CHECK(reparse(fields[9]) == cell.certificate.l_observed);
      CHECK(reparse(fields[10]) == *cell.certificate.l_theoretical);
      CHECK(fields[11] == "true");
    }
  }
  CHECK(rows == 4);
  CHECK(saw_skipped);
}

TEST_CASE("markdown output") {
  const Algorithm algos[] = {Algorithm::recurrence, Algorithm::trig};
  const int degrees[] = {4, 8};
  const sweep::TableReport table = sweep::compare_table(
      algos, degrees, sweep::GridSpec::with_points(-1, 1, 9));

  std::ostringstream os;
  emit_markdown(table, os);
  const std::string text = os.str();
  CHECK(text.find("| N | I | III |") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header+rule+2 rows

  std::ostringstream cs;
  emit_certify_markdown(table, cs);
  CHECK(cs.str().find(" / ") != std::string::npos);  // observed / bound cells
}

TEST_CASE("run writes reports and reflects certificate failures") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "chebeval_cli_test.csv").string();

  RunConfig config = parse_args({"sweep", "--algos", "I,III", "--degrees",
                                 "4,9", "--points", "11", "--output", path});
  CHECK(run(config) == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == csv_header);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
  }
  CHECK(rows == 4);
  std::filesystem::remove(path);

  RunConfig bad = config;
  bad.output_path = "/nonexistent-dir/cheb.csv";
  CHECK_THROWS_AS(run(bad), std::runtime_error);
}

TEST_CASE("fast selftest suites pass") {
  const SuiteResult pell = suite_pell_identity();
  CHECK(pell.passed);
  CHECK(pell.name == "pell-identity");

  const SuiteResult comp = suite_composition();
  CHECK(comp.passed);

  const SuiteResult agree = suite_exact_agreement();
  CHECK(agree.passed);
}
