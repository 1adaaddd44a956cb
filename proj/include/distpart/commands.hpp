#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <distpart/partition_table.hpp>
#include <distpart/types.hpp>

namespace distpart {

enum class Command { table, dist, cumulants, verify, figure1, figure2 };
enum class OutputFormat { csv, json };

// Process exit codes shared by the CLI and run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_bad_args = 2;
inline constexpr int exit_io_error = 3;

struct RunConfig {
  Command command = Command::verify;
  std::vector<long> energies;       // --E / --E-list
  std::string out;                  // output path; empty or "-" = stdout
  OutputFormat format = OutputFormat::csv;
  int digits = 50;                  // printed significant digits, 30..50
  long grid_start = 200;            // --grid start:stop:step (figure2)
  long grid_stop = 4500;
  long grid_step = 100;
  double b = 0;                     // verify: extra identity grid point
  int k = -1;                       // verify: restrict identity to one k
  bool inject_fault = false;        // verify: corrupt the table (testing)
};

/// Execute one command; returns a process exit code. All diagnostics go
/// to `err`.
int run_command(const RunConfig& config, std::ostream& err);

// Stream writers behind the commands. Output is deterministic: fixed
// column order, fixed row order, fixed decimal formatting.
void write_table_csv(std::ostream& os, const PartitionTable& table,
                     long e_max);
void write_table_json(std::ostream& os, const PartitionTable& table,
                      long e_max);
void write_dist_csv(std::ostream& os, const PartitionTable& table, long E);
void write_dist_json(std::ostream& os, const PartitionTable& table, long E);
void write_cumulants_json(std::ostream& os, const PartitionTable& table,
                          const std::vector<long>& energies, int digits);
void write_figure2_csv(std::ostream& os, const PartitionTable& table,
                       long start, long stop, long step);

}  // namespace distpart
