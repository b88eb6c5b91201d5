#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shiftarg {

struct LedgerRow {
  std::string id;
  std::string claim;  // stable slug of the property being tested
  bool pass = false;
  double millis = 0.0;
  std::string detail;
};

struct Ledger {
  std::vector<LedgerRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

/// Runs a battery of verification cases described by a JSON config
/// {"cases": [{"id", "claim", "check", ...params}, ...]}. Cases fan out
/// over `jobs` threads; failures are collected, not fail-fast, and the
/// ledger keeps the config order.
Ledger run_battery(const std::string& config_json, unsigned jobs,
                   uint64_t seed);

/// The default battery: the full small-rank verification set
/// (commutativity matrices, graded comparisons, diagram golden case,
/// generator counts, degree law, limits, GT algebras, oracle
/// equivalences).
std::string default_battery_config();

std::string ledger_to_json(const Ledger& ledger);
std::string ledger_to_table(const Ledger& ledger);

}  // namespace shiftarg
