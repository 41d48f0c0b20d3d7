#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "selftest.hpp"

namespace cheb::cli {

namespace {

constexpr int kMaxDegree = 1 << 20;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return out;
}

std::optional<long> parse_long(std::string_view s) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

// A degree token: a plain integer, 2^K, or a doubling range 2^A..2^B.
void parse_degree_token(const std::string& token, std::vector<int>& degrees,
                        std::vector<std::string>& violations) {
  const auto push_power = [&](long k) -> bool {
    if (k < 0 || (1L << std::min(k, 30L)) > kMaxDegree) {
      violations.push_back("degree 2^" + std::to_string(k) +
                           " is outside [1, 2^20]");
      return false;
    }
    degrees.push_back(static_cast<int>(1L << k));
    return true;
  };
  const auto parse_power = [&](std::string_view s) -> std::optional<long> {
    if (s.substr(0, 2) != "2^") {
      return std::nullopt;
    }
    return parse_long(s.substr(2));
  };

  if (const auto dots = token.find(".."); dots != std::string::npos) {
    const auto lo = parse_power(std::string_view(token).substr(0, dots));
    const auto hi = parse_power(std::string_view(token).substr(dots + 2));
    if (!lo || !hi || *lo > *hi) {
      violations.push_back("bad degree range '" + token +
                           "' (expected 2^A..2^B with A <= B)");
      return;
    }
    for (long k = *lo; k <= *hi; ++k) {
      if (!push_power(k)) {
        return;
      }
    }
    return;
  }
  if (const auto k = parse_power(token)) {
    push_power(*k);
    return;
  }
  const auto n = parse_long(token);
  if (!n || *n < 1 || *n > kMaxDegree) {
    violations.push_back("degrees must be integers in [1, 2^20] (got '" +
                         token + "')");
    return;
  }
  degrees.push_back(static_cast<int>(*n));
}

void parse_degrees(const std::string& text, RunConfig& config,
                   std::vector<std::string>& violations) {
  std::vector<int> degrees;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) {
      violations.push_back("empty degree token in '" + text + "'");
      continue;
    }
    parse_degree_token(token, degrees, violations);
  }
  for (int d : degrees) {  // dedupe, keeping first occurrence
    if (std::find(config.degrees.begin(), config.degrees.end(), d) ==
        config.degrees.end()) {
      config.degrees.push_back(d);
    }
  }
}

void parse_algorithms(const std::string& text, RunConfig& config,
                      std::vector<std::string>& violations) {
  for (const std::string& token : split(text, ',')) {
    const auto alg = algorithm_from_token(token);
    if (!alg) {
      violations.push_back("unknown algorithm '" + token +
                           "' (expected I..IV or "
                           "recurrence/doubling/trig/horner)");
      continue;
    }
    if (std::find(config.algorithms.begin(), config.algorithms.end(), *alg) ==
        config.algorithms.end()) {
      config.algorithms.push_back(*alg);
    }
  }
}

void parse_interval(const std::string& text, RunConfig& config,
                    std::vector<std::string>& violations) {
  const auto parts = split(text, ',');
  std::optional<double> a, b;
  if (parts.size() == 2) {
    a = parse_number(parts[0]);
    b = parse_number(parts[1]);
  }
  if (!a || !b) {
    violations.push_back("interval must be 'a,b' with numeric endpoints (got '" +
                         text + "')");
    return;
  }
  if (!(*a >= -1.0) || !(*b <= 1.0)) {
    violations.push_back("interval must lie inside [-1, 1]");
  } else if (!(*a < *b)) {
    violations.push_back("interval requires a < b");
  }
  config.a = *a;
  config.b = *b;
}

std::string format_cell(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  const auto r =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, r.ptr);
}

void emit_markdown_grid(const sweep::TableReport& table, std::ostream& os,
                        bool certificate_view) {
  os << "| N |";
  for (Algorithm alg : table.algorithms) {
    os << ' ' << label(alg) << " |";
  }
  os << "\n|---:|";
  for (std::size_t i = 0; i < table.algorithms.size(); ++i) {
    os << "---:|";
  }
  os << '\n';
  for (std::size_t r = 0; r < table.degrees.size(); ++r) {
    os << "| " << table.degrees[r] << " |";
    for (std::size_t c = 0; c < table.algorithms.size(); ++c) {
      const auto& cell = table.cell(r, c);
      if (!cell) {
        os << "  |";
        continue;
      }
      if (!certificate_view) {
        os << ' ' << format_cell(cell->e_n) << " |";
        continue;
      }
      const auto& cert = cell->certificate;
      os << ' ' << format_cell(cert.l_observed) << " / "
         << (cert.l_theoretical ? format_cell(*cert.l_theoretical) : "-");
      if (!cert.passed) {
        os << " FAIL";
      }
      os << " |";
    }
    os << '\n';
  }
}

}  // namespace

sweep::GridSpec RunConfig::grid() const {
  sweep::GridSpec g;
  g.a = a;
  g.b = b;
  g.point_count = points;
  g.step = step;
  return g;
}

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void emit_csv(const sweep::TableReport& table, std::ostream& os) {
  os << csv_header << '\n';
  for (std::size_t r = 0; r < table.degrees.size(); ++r) {
    for (std::size_t c = 0; c < table.algorithms.size(); ++c) {
      const auto& cell = table.cell(r, c);
      os << label(table.algorithms[c]) << ',' << table.degrees[r];
      if (!cell) {
        os << ",,,,,,,,,,\n";
        continue;
      }
      const auto& cert = cell->certificate;
      os << ',' << format_double(cell->grid.a) << ','
         << format_double(cell->grid.b) << ','
         << format_double(cell->grid.resolved_step()) << ','
         << cell->grid.resolved_point_count() << ','
         << format_double(cell->e_n) << ',' << format_double(cell->worst_x)
         << ',' << cell->nonfinite_count << ','
         << format_double(cert.l_observed) << ','
         << (cert.l_theoretical ? format_double(*cert.l_theoretical) : "")
         << ',' << (cert.passed ? "true" : "false") << '\n';
    }
  }
}

void emit_markdown(const sweep::TableReport& table, std::ostream& os) {
  emit_markdown_grid(table, os, false);
}

void emit_certify_markdown(const sweep::TableReport& table, std::ostream& os) {
  emit_markdown_grid(table, os, true);
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Accuracy and stability harness for Chebyshev evaluation "
               "schemes"};
  app.name("chebeval");
  app.require_subcommand(0, 1);

  struct Raw {
    std::string algos;
    std::string degrees;
    std::string interval = "-1,1";
    std::string format;
    std::string output;
    std::optional<int> points;
    std::optional<double> step;
  } raw;

  const auto add_common = [&raw](CLI::App* cmd) {
    cmd->add_option("--algos", raw.algos,
                    "Comma-separated schemes: I..IV or names");
    cmd->add_option("--degrees", raw.degrees,
                    "Comma-separated degrees; 2^K and 2^A..2^B accepted");
    cmd->add_option("--interval", raw.interval, "Evaluation interval 'a,b'")
        ->capture_default_str();
    cmd->add_option("--points", raw.points, "Number of grid points (>= 2)");
    cmd->add_option("--step", raw.step, "Grid step h > 0");
    cmd->add_option("--output", raw.output, "Write the report to this file");
    cmd->add_option("--format", raw.format, "csv or markdown");
  };

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Maximum forward error per (scheme, degree) over a grid");
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Cross table of e_N, schemes across, degrees down");
  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "Backward-constant certificates against the a-priori bounds");
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Exact identity, condition-bound and conversion suites");
  add_common(sweep_cmd);
  add_common(table_cmd);
  add_common(certify_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("chebeval");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::string help;
    for (CLI::App* sub : {sweep_cmd, table_cmd, certify_cmd, selftest_cmd}) {
      if (sub->parsed()) {
        help = sub->help();
      }
    }
    throw UsageHelp(help.empty() ? app.help() : help);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  std::vector<std::string> violations;

  if (sweep_cmd->parsed()) {
    config.command = Command::sweep;
  } else if (table_cmd->parsed()) {
    config.command = Command::table;
  } else if (certify_cmd->parsed()) {
    config.command = Command::certify;
  } else if (selftest_cmd->parsed()) {
    config.command = Command::selftest;
  } else {
    throw UsageError("missing command (sweep, table, certify or selftest); "
                     "see --help");
  }

  if (config.command == Command::selftest) {
    return config;
  }

  if (raw.algos.empty()) {
    violations.push_back("missing --algos");
  } else {
    parse_algorithms(raw.algos, config, violations);
  }
  if (raw.degrees.empty()) {
    violations.push_back("missing --degrees");
  } else {
    parse_degrees(raw.degrees, config, violations);
  }
  parse_interval(raw.interval, config, violations);

  if (raw.points.has_value() == raw.step.has_value()) {
    violations.push_back("give exactly one of --points and --step");
  } else if (raw.points) {
    if (*raw.points < 2) {
      violations.push_back("--points must be at least 2");
    }
    config.points = raw.points;
  } else {
    if (!(*raw.step > 0.0)) {
      violations.push_back("--step must be positive");
    }
    config.step = raw.step;
  }

  // sweep and certify run exactly what was asked, so an impossible pair is a
  // usage error; table treats such cells as skipped.
  if (config.command != Command::table) {
    const bool doubling =
        std::find(config.algorithms.begin(), config.algorithms.end(),
                  Algorithm::doubling) != config.algorithms.end();
    if (doubling) {
      for (int d : config.degrees) {
        if (!is_power_of_two(d)) {
          violations.push_back("DOUBLING evaluates only power-of-two degrees; "
                               "got " + std::to_string(d));
          break;
        }
      }
    }
  }

  if (!raw.format.empty()) {
    if (raw.format == "csv") {
      config.format = OutputFormat::csv;
    } else if (raw.format == "markdown") {
      config.format = OutputFormat::markdown;
    } else {
      violations.push_back("unknown format '" + raw.format +
                           "' (csv or markdown)");
    }
  } else {
    config.format = config.command == Command::table ? OutputFormat::markdown
                                                     : OutputFormat::csv;
  }
  if (!raw.output.empty()) {
    config.output_path = raw.output;
  }

  if (!violations.empty()) {
    std::string joined;
    for (const std::string& v : violations) {
      joined += (joined.empty() ? "" : "\n") + v;
    }
    throw UsageError(joined);
  }
  return config;
}

int run(const RunConfig& config) {
  if (config.command == Command::selftest) {
    const auto results = run_selftest();
    bool all = true;
    for (const SuiteResult& r : results) {
      std::printf("%-24s %-4s (%s)\n", r.name.c_str(),
                  r.passed ? "ok" : "FAIL", r.detail.c_str());
      all = all && r.passed;
    }
    std::printf("selftest: %zu/%zu suites passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const SuiteResult& r) { return r.passed; })),
                results.size());
    return all ? 0 : 1;
  }

  const sweep::TableReport table =
      sweep::compare_table(config.algorithms, config.degrees, config.grid());

  std::ostringstream body;
  if (config.format == OutputFormat::csv) {
    emit_csv(table, body);
  } else if (config.command == Command::certify) {
    emit_certify_markdown(table, body);
  } else {
    emit_markdown(table, body);
  }

  if (config.output_path) {
    std::ofstream out(*config.output_path);
    if (!out) {
      throw std::runtime_error("cannot open '" + *config.output_path +
                               "' for writing");
    }
    out << body.str();
    if (!out.flush()) {
      throw std::runtime_error("write to '" + *config.output_path +
                               "' failed");
    }
  } else {
    std::cout << body.str();
  }

  for (const auto& cell : table.cells) {
    if (cell && cell->certificate.l_theoretical && !cell->certificate.passed) {
      return 1;
    }
  }
  return 0;
}

}  // namespace cheb::cli
