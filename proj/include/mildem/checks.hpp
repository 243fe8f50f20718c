#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mildem/arith.hpp"

namespace mildem {

inline constexpr int kReportSchemaVersion = 1;

struct CheckSpec {
  std::string id;
  std::size_t trials = 300;
  std::uint64_t seed = 42;
  /// Largest simplicial degree D.
  Int degree = 3;
  /// Largest value in exhaustive pools of finite injections.
  Int entry_bound = 8;
  /// Largest period of generated sets and maps.
  Int period_bound = 12;
};

enum class CheckMode { Exhaustive, Randomized };
/// Serial reference loop or the OpenMP loop; reports are identical.
enum class Exec { Serial, Parallel };

struct CheckReport {
  std::string id;
  std::string statement;
  CheckMode mode = CheckMode::Randomized;
  CheckSpec spec;
  /// Number of items run (trials, pool elements or cases).
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  /// The first failures, as replayable literals.
  std::vector<std::string> failures;
  /// How many items fell into each named case.
  std::vector<std::pair<std::string, std::size_t>> cases;
  std::vector<std::pair<std::string, std::string>> notes;
  std::optional<double> elapsed_ms;

  bool passed() const { return failure_count == 0; }
};

/// Registry ids in run order.
const std::vector<std::string>& check_ids();
/// What the check asserts. Throws UnknownCheck.
std::string check_statement(const std::string& id);

/// Throws UnknownCheck for ids outside the registry and PreconditionFailed for
/// unusable bounds. Failures inside an item are recorded, never thrown.
CheckReport run_check(const CheckSpec& spec, Exec exec = Exec::Parallel, bool timing = false);
/// Every registry entry with the bounds of `defaults` (its id is ignored).
std::vector<CheckReport> run_all(const CheckSpec& defaults, Exec exec = Exec::Parallel, bool timing = false);

nlohmann::ordered_json to_json(const CheckReport& r);
std::string to_string(CheckMode m);
/// One line: id, verdict, counts.
std::string summary_line(const CheckReport& r);

}  // namespace mildem
