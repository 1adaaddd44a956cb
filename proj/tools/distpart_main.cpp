#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <distpart/commands.hpp>

namespace {

// "start:stop:step" -> three longs.
bool parse_grid(const std::string& text, distpart::RunConfig& config) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) return false;
  try {
    config.grid_start = std::stol(text.substr(0, first));
    config.grid_stop = std::stol(text.substr(first + 1, second - first - 1));
    config.grid_step = std::stol(text.substr(second + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "distpart: exact and asymptotic statistics of integer partitions "
      "into distinct parts (harmonically trapped ideal Fermi gas)"};
  app.require_subcommand(1);

  distpart::RunConfig config;
  std::string format = "csv";
  std::string grid;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--out", config.out, "output file ('-' = stdout)");
    cmd->add_option("--digits", config.digits,
                    "printed significant digits (30..50)");
    if (with_format)
      cmd->add_option("--format", format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* table = app.add_subcommand(
      "table", "tabulate m_max(E) and the distinct-partition totals");
  table->add_option("--E", config.energies, "energy (row range is 1..E)")
      ->required();
  add_common(table, true);

  CLI::App* dist = app.add_subcommand(
      "dist", "exact distribution of the number of parts at one energy");
  dist->add_option("--E", config.energies, "energy")->required();
  add_common(dist, true);

  CLI::App* cumulants = app.add_subcommand(
      "cumulants",
      "exact, saddle-point and closed-form cumulants with deviations");
  cumulants->add_option("--E,--E-list", config.energies,
                        "one or more energies")
      ->required();
  add_common(cumulants, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "self-verification suite (exit 0 iff everything passes)");
  verify->add_option("--b", config.b,
                     "extra inverse-temperature point for the identity grid");
  verify->add_option("--k", config.k, "restrict identity grid to one order")
      ->check(CLI::Range(0, 4));
  verify->add_flag("--inject-fault", config.inject_fault,
                   "corrupt one table cell first (must then fail)");
  add_common(verify, false);

  CLI::App* figure1 = app.add_subcommand(
      "figure1", "distributions at E = 1000, 2000, 3000, 4500 in one CSV");
  add_common(figure1, false);

  CLI::App* figure2 = app.add_subcommand(
      "figure2", "skewness/excess vs energy, exact and asymptotic");
  figure2->add_option("--grid", grid, "E grid as start:stop:step")
      ->default_str("200:4500:100");
  add_common(figure2, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : distpart::exit_bad_args;
  }

  if (table->parsed()) config.command = distpart::Command::table;
  if (dist->parsed()) config.command = distpart::Command::dist;
  if (cumulants->parsed()) {
    config.command = distpart::Command::cumulants;
    format = "json";
  }
  if (verify->parsed()) config.command = distpart::Command::verify;
  if (figure1->parsed()) config.command = distpart::Command::figure1;
  if (figure2->parsed()) config.command = distpart::Command::figure2;

  config.format = (format == "json") ? distpart::OutputFormat::json
                                     : distpart::OutputFormat::csv;
  if (!grid.empty() && !parse_grid(grid, config)) {
    std::cerr << "error: --grid expects start:stop:step\n";
    return distpart::exit_bad_args;
  }

  return distpart::run_command(config, std::cerr);
}
