#include <distpart/commands.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <distpart/canonical.hpp>
#include <distpart/distribution.hpp>
#include <distpart/saddle.hpp>
#include <distpart/verify.hpp>

namespace distpart {

namespace {

using ordered_json = nlohmann::ordered_json;

// 17 significant digits reproduce the value exactly when read back as a
// binary64 double.
std::string prob_str(const Real& value) {
  return value.str(17, std::ios_base::scientific);
}

std::string real_str(const Real& value, int digits) {
  return value.str(digits);
}

void dist_rows(std::ostream& os, const PartitionTable& table, long E) {
  const MicroDistribution dist = micro_distribution(table, E);
  for (long M = 1; M < static_cast<long>(dist.counts.size()); ++M) {
    const Real p = Real(dist.counts[M]) / Real(dist.total);
    os << E << ',' << M << ',' << dist.counts[M].str() << ','
       << prob_str(p) << '\n';
  }
}

ordered_json cumulant_fields(const CumulantSet& c, int digits) {
  ordered_json j;
  j["kappa1"] = real_str(c.kappa1, digits);
  j["kappa2"] = real_str(c.kappa2, digits);
  j["kappa3"] = real_str(c.kappa3, digits);
  j["kappa4"] = real_str(c.kappa4, digits);
  j["gamma1"] = real_str(c.gamma1, digits);
  j["gamma2"] = real_str(c.gamma2, digits);
  return j;
}

ordered_json null_cumulant_fields() {
  ordered_json j;
  for (const char* key :
       {"kappa1", "kappa2", "kappa3", "kappa4", "gamma1", "gamma2"})
    j[key] = nullptr;
  return j;
}

Real rel_dev(const Real& value, const Real& reference) {
  return (value - reference) / abs(reference);
}

}  // namespace

void write_table_csv(std::ostream& os, const PartitionTable& table,
                     long e_max) {
  os << "E,m_max,omega\n";
  for (long E = 1; E <= e_max; ++E)
    os << E << ',' << m_max(E) << ',' << omega_distinct(table, E).str()
       << '\n';
}

void write_table_json(std::ostream& os, const PartitionTable& table,
                      long e_max) {
  ordered_json arr = ordered_json::array();
  for (long E = 1; E <= e_max; ++E) {
    ordered_json row;
    row["E"] = E;
    row["m_max"] = m_max(E);
    row["omega"] = omega_distinct(table, E).str();
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << '\n';
}

void write_dist_csv(std::ostream& os, const PartitionTable& table, long E) {
  os << "E,M,count,probability\n";
  dist_rows(os, table, E);
}

void write_dist_json(std::ostream& os, const PartitionTable& table, long E) {
  const MicroDistribution dist = micro_distribution(table, E);
  ordered_json arr = ordered_json::array();
  for (long M = 1; M < static_cast<long>(dist.counts.size()); ++M) {
    ordered_json row;
    row["E"] = E;
    row["M"] = M;
    row["count"] = dist.counts[M].str();
    row["probability"] = prob_str(Real(dist.counts[M]) / Real(dist.total));
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << '\n';
}

void write_cumulants_json(std::ostream& os, const PartitionTable& table,
                          const std::vector<long>& energies, int digits) {
  struct Entry {
    ordered_json json;
    std::string error;
  };
  std::vector<Entry> entries(energies.size());

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(energies.size()); ++i) {
    const long E = energies[i];
    try {
      const CumulantSet exact = exact_cumulants(micro_distribution(table, E));
      ordered_json j;
      j["E"] = E;
      j["exact"] = cumulant_fields(exact, digits);

      ordered_json deviations;
      if (E >= 100) {
        const std::array<Real, 4> mc = mc_cumulants_saddle(E);
        CumulantSet sad;
        sad.kappa1 = mc[0];
        sad.kappa2 = mc[1];
        sad.kappa3 = mc[2];
        sad.kappa4 = mc[3];
        sad.gamma1 = sad.kappa3 / pow(sad.kappa2, Real(3) / 2);
        sad.gamma2 = sad.kappa4 / (sad.kappa2 * sad.kappa2);
        j["saddle"] = cumulant_fields(sad, digits);

        const AsymptoticCumulants asym = asymptotic_cumulants(E);
        CumulantSet asy;
        asy.kappa1 = asym.kappa1;
        asy.kappa2 = asym.kappa2;
        asy.kappa3 = asym.kappa3;
        asy.kappa4 = asym.kappa4;
        asy.gamma1 = asym.gamma1;
        asy.gamma2 = asym.gamma2;
        j["asymptotic"] = cumulant_fields(asy, digits);

        deviations["saddle_kappa1"] =
            real_str(rel_dev(sad.kappa1, exact.kappa1), 6);
        deviations["saddle_kappa2"] =
            real_str(rel_dev(sad.kappa2, exact.kappa2), 6);
        deviations["saddle_kappa3"] =
            real_str(rel_dev(sad.kappa3, exact.kappa3), 6);
        deviations["saddle_kappa4"] =
            real_str(rel_dev(sad.kappa4, exact.kappa4), 6);
        deviations["asymptotic_kappa1"] =
            real_str(rel_dev(asy.kappa1, exact.kappa1), 6);
        deviations["asymptotic_kappa2"] =
            real_str(rel_dev(asy.kappa2, exact.kappa2), 6);
        deviations["asymptotic_kappa3"] =
            real_str(rel_dev(asy.kappa3, exact.kappa3), 6);
        deviations["asymptotic_kappa4"] =
            real_str(rel_dev(asy.kappa4, exact.kappa4), 6);
      } else {
        j["saddle"] = null_cumulant_fields();
        j["asymptotic"] = null_cumulant_fields();
      }

      const auto [g1_law, g2_law] = gamma_asymptotic(E);
      ordered_json laws;
      laws["gamma1"] = real_str(g1_law, digits);
      laws["gamma2"] = real_str(g2_law, digits);
      j["gamma_power_law"] = laws;
      deviations["gamma1_vs_power_law"] =
          real_str(rel_dev(exact.gamma1, g1_law), 6);
      deviations["gamma2_vs_power_law"] =
          real_str(rel_dev(exact.gamma2, g2_law), 6);
      j["relative_deviation"] = deviations;
      entries[i].json = std::move(j);
    } catch (const std::exception& ex) {
      entries[i].error = ex.what();
    }
  }

  ordered_json arr = ordered_json::array();
  for (auto& e : entries) {
    if (!e.error.empty())
      throw std::invalid_argument("cumulants: " + e.error);
    arr.push_back(std::move(e.json));
  }
  os << arr.dump(2) << '\n';
}

void write_figure2_csv(std::ostream& os, const PartitionTable& table,
                       long start, long stop, long step) {
  std::vector<long> grid;
  for (long E = start; E <= stop; E += step) grid.push_back(E);
  std::vector<std::string> rows(grid.size());

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
    const long E = grid[i];
    const CumulantSet exact = exact_cumulants(micro_distribution(table, E));
    const auto [g1_law, g2_law] = gamma_asymptotic(E);
    std::ostringstream row;
    row << E << ',' << prob_str(exact.gamma1) << ',' << prob_str(g1_law)
        << ',' << prob_str(exact.gamma2) << ',' << prob_str(g2_law) << '\n';
    rows[i] = row.str();
  }

  os << "E,gamma1_exact,gamma1_asym,gamma2_exact,gamma2_asym\n";
  for (const std::string& row : rows) os << row;
}

namespace {

int write_output(const RunConfig& config, std::ostream& err,
                 const std::function<void(std::ostream&)>& writer) {
  if (config.out.empty() || config.out == "-") {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) {
      err << "error: write to stdout failed\n";
      return exit_io_error;
    }
    return exit_ok;
  }
  std::ofstream os(config.out, std::ios::binary);
  if (!os) {
    err << "error: cannot open '" << config.out << "' for writing\n";
    return exit_io_error;
  }
  writer(os);
  os.flush();
  if (!os) {
    err << "error: write to '" << config.out << "' failed\n";
    return exit_io_error;
  }
  return exit_ok;
}

long single_energy(const RunConfig& config) {
  if (config.energies.size() != 1)
    throw std::invalid_argument("exactly one --E value expected");
  return config.energies.front();
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& err) {
  try {
    if (config.digits < 30 || config.digits > real_decimal_digits)
      throw std::invalid_argument("--digits must lie in 30..50");
    for (long E : config.energies)
      if (E < 1) throw std::invalid_argument("energies must be >= 1");

    switch (config.command) {
      case Command::table: {
        const long E = single_energy(config);
        const PartitionTable table = build_table(E);
        return write_output(config, err, [&](std::ostream& os) {
          config.format == OutputFormat::csv
              ? write_table_csv(os, table, E)
              : write_table_json(os, table, E);
        });
      }
      case Command::dist: {
        const long E = single_energy(config);
        const PartitionTable table = build_table(E);
        return write_output(config, err, [&](std::ostream& os) {
          config.format == OutputFormat::csv ? write_dist_csv(os, table, E)
                                             : write_dist_json(os, table, E);
        });
      }
      case Command::cumulants: {
        if (config.energies.empty())
          throw std::invalid_argument("cumulants needs --E or --E-list");
        if (config.format != OutputFormat::json)
          throw std::invalid_argument("cumulants output is JSON only");
        long top = 0;
        for (long E : config.energies) top = std::max(top, E);
        const PartitionTable table = build_table(top);
        return write_output(config, err, [&](std::ostream& os) {
          write_cumulants_json(os, table, config.energies, config.digits);
        });
      }
      case Command::figure1: {
        const std::vector<long> energies = {1000, 2000, 3000, 4500};
        const PartitionTable table = build_table(energies.back());
        return write_output(config, err, [&](std::ostream& os) {
          os << "E,M,count,probability\n";
          for (long E : energies) dist_rows(os, table, E);
        });
      }
      case Command::figure2: {
        if (config.grid_start < 3 || config.grid_step < 1 ||
            config.grid_stop < config.grid_start)
          throw std::invalid_argument("--grid must be start:stop:step with "
                                      "start >= 3, step >= 1");
        const PartitionTable table = build_table(config.grid_stop);
        return write_output(config, err, [&](std::ostream& os) {
          write_figure2_csv(os, table, config.grid_start, config.grid_stop,
                            config.grid_step);
        });
      }
      case Command::verify: {
        VerifyOptions options;
        options.extra_b = config.b;
        options.only_k = config.k;
        options.inject_table_fault = config.inject_fault;
        const VerificationReport report = run_verification(options);
        const int rc = write_output(config, err, [&](std::ostream& os) {
          print_report(os, report);
        });
        if (rc != exit_ok) return rc;
        return report.all_passed() ? exit_ok : exit_verify_failed;
      }
    }
    throw std::invalid_argument("unknown command");
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_bad_args;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_bad_args;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_bad_args;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_verify_failed;
  }
}

}  // namespace distpart
