#pragma once

#include <cheb/sweep.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheb::cli {

/// Invalid invocation; the message lists every violated constraint.
/// The driver maps this to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { sweep, table, certify, selftest };
enum class OutputFormat { csv, markdown };

struct RunConfig {
  Command command = Command::sweep;
  std::vector<Algorithm> algorithms;
  std::vector<int> degrees;
  double a = -1.0;
  double b = 1.0;
  std::optional<int> points;
  std::optional<double> step;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::csv;

  sweep::GridSpec grid() const;
};

/// Parses everything after argv[0].  Throws UsageError with the full list of
/// violations; --help output is delivered through UsageHelp below.
RunConfig parse_args(const std::vector<std::string>& args);

/// Raised when the user asked for --help; what() is the help text.
struct UsageHelp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes the parsed command, writing to the configured destination
/// (stdout by default).  Returns the process exit code: 0 when every
/// certificate with a theoretical bound passed, 1 otherwise.
int run(const RunConfig& config);

/// Shortest decimal string that parses back to the same double; "inf",
/// "-inf", "nan" for the non-finite values.
std::string format_double(double v);

/// Fixed column schema, one row per (degree, algorithm) cell; cells the
/// scheme cannot evaluate keep only the first two columns.
void emit_csv(const sweep::TableReport& table, std::ostream& os);

/// e_N grid: one row per degree, one column per algorithm.
void emit_markdown(const sweep::TableReport& table, std::ostream& os);

/// L_observed grid with failure markers, same layout.
void emit_certify_markdown(const sweep::TableReport& table, std::ostream& os);

inline constexpr const char* csv_header =
    "algorithm,degree,a,b,h,points,e_N,worst_x,nonfinite_count,"
    "L_observed,L_theoretical,passed";

}  // namespace cheb::cli
