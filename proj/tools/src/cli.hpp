#pragma once

// Batch driver: expands job specs into independent tasks, runs them on a
// small thread pool, and emits one report row per (target, check) in a fixed
// order that does not depend on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tpart::cli {

enum class Format { Csv, Json };

struct JobSpec {
  std::string command;  // verify-sylvester, verify-gordon, verify-rr, verify-modp, verify-qsum, count
  std::int64_t d = 0;
  std::vector<std::string> targets;
  std::optional<std::int64_t> trace_max;
  std::vector<int> k;
  std::vector<int> i;
  std::vector<std::string> classes;  // for count
  std::optional<std::string> bound;  // q-sum truncation: element text, or an integer for classical checks
  std::string qsum_kind;             // cauchy, leveque, gordon-gf, sylvester-gf
  std::vector<int> caps;             // marker caps for q-sum checks
};

struct RunOptions {
  Format format = Format::Csv;
  int jobs = 1;
  bool timing = false;
};

struct Row {
  std::string field;
  std::string target;
  std::string check;
  std::string lhs;
  std::string rhs;
  std::string verdict;  // equal, unequal, differs, holds, skipped, error
  std::string reason;
  std::optional<long long> millis;
};

// Throws tpart::Error on an invalid spec (unknown command, bad target, ...).
std::vector<Row> run_jobs(const std::vector<JobSpec>& jobs, const RunOptions& options);

// 0 when every row is equal, differs, holds or skipped; 1 otherwise.
int exit_code(const std::vector<Row>& rows);

std::string format_rows(const std::vector<Row>& rows, const RunOptions& options);

Format parse_format(const std::string& text);

// {"format": "csv", "jobs": 2, "tasks": [{"command": "verify-gordon", "d": 2, "trace_max": 8, "k": [2], "i": [1, 2]}]}
// Options already set on the command line take precedence over the file.
std::vector<JobSpec> parse_batch_config(const nlohmann::json& config, RunOptions& options);

}  // namespace tpart::cli
