#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "tpart/classes.hpp"
#include "tpart/counting.hpp"
#include "tpart/error.hpp"
#include "tpart/text.hpp"

namespace {

using tpart::cli::JobSpec;
using tpart::cli::RunOptions;

struct Common {
  JobSpec job;
  std::string format = "csv";
  int jobs = 1;
  bool timing = false;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--d", c.job.d, "Field radicand (squarefree, >= 2)");
  sub->add_option("--target", c.job.targets, "Target element, e.g. 21+7*w@3 (repeatable)");
  sub->add_option("--trace-max", c.job.trace_max, "All totally positive targets with trace <= T");
  sub->add_option("--k", c.job.k, "Parameter k (repeatable)");
  sub->add_option("--i", c.job.i, "Parameter i (repeatable)");
  sub->add_option("--bound", c.job.bound, "Truncation bound: element text, or an integer for classical checks");
  sub->add_option("--class", c.job.classes, "Class spec, e.g. sylA:k=3 or modp:shape=1 (repeatable)");
  sub->add_option("--cap", c.job.caps, "Marker degree caps, in marker order (repeatable)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_flag("--timing", c.timing, "Fill the millis column (output is then not reproducible)");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw tpart::Error(tpart::ErrorCode::InvalidParameter, "cannot write " + out);
  file << text;
}

RunOptions options_of(const Common& c) { return RunOptions{tpart::cli::parse_format(c.format), c.jobs, c.timing}; }

int run_table(const std::vector<JobSpec>& jobs, const RunOptions& options, const std::string& out) {
  const auto rows = tpart::cli::run_jobs(jobs, options);
  emit(tpart::cli::format_rows(rows, options), out);
  return tpart::cli::exit_code(rows);
}

std::string list_output(const std::vector<std::string>& items, const std::string& format) {
  if (format == "json") return nlohmann::json(items).dump(2) + "\n";
  std::string text;
  for (const std::string& item : items) text += item + "\n";
  return text;
}

tpart::QuadInt single_target(const Common& c) {
  if (c.job.d <= 0 || c.job.targets.size() != 1) {
    throw tpart::Error(tpart::ErrorCode::InvalidParameter, "needs --d and exactly one --target");
  }
  return tpart::parse_element(c.job.targets.front(), tpart::Field::make(c.job.d));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions of totally positive integers in real quadratic fields"};
  app.require_subcommand(1);

  Common c;
  std::string qsum_kind;
  std::string config_path;

  auto* downset_cmd = app.add_subcommand("downset", "List the totally positive elements below a target");
  auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of a target in a class");
  auto* count_cmd = app.add_subcommand("count", "Count class members directly and through sections");
  auto* syl_cmd = app.add_subcommand("verify-sylvester", "Compare the two Sylvester classes");
  auto* gor_cmd = app.add_subcommand("verify-gordon", "Compare the two Gordon classes");
  auto* rr_cmd = app.add_subcommand("verify-rr", "Rogers-Ramanujan: the Gordon classes with k = 2");
  auto* modp_cmd = app.add_subcommand("verify-modp", "Compare the residue classes modulo a prime above 5");
  auto* qsum_cmd = app.add_subcommand("verify-qsum", "Truncated q-sum identity checks");
  auto* batch_cmd = app.add_subcommand("batch", "Run the tasks of a JSON config file");

  for (auto* sub : {downset_cmd, partitions_cmd, count_cmd, syl_cmd, gor_cmd, rr_cmd, modp_cmd, qsum_cmd, batch_cmd}) {
    add_common(sub, c);
  }
  qsum_cmd->add_option("kind", qsum_kind, "cauchy | leveque | gordon-gf | sylvester-gf | euler-lift")->required();
  batch_cmd->add_option("config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (downset_cmd->parsed()) {
      std::vector<std::string> items;
      for (const auto& e : tpart::downset(single_target(c))) items.push_back(tpart::to_string(e));
      emit(list_output(items, c.format), c.out);
      return 0;
    }
    if (partitions_cmd->parsed()) {
      const auto target = single_target(c);
      const auto spec = tpart::parse_class_spec(c.job.classes.empty() ? "all" : c.job.classes.front());
      std::optional<tpart::PrimeAbove5> prime;
      if (spec.is_modp()) prime = tpart::find_prime_above_5(target.field());
      std::vector<std::string> items;
      tpart::for_each_partition(target, spec, [&](const tpart::Partition& p) { items.push_back(tpart::to_string(p)); }, prime);
      emit(list_output(items, c.format), c.out);
      return 0;
    }
    if (batch_cmd->parsed()) {
      std::ifstream in(config_path);
      const nlohmann::json config = nlohmann::json::parse(in, nullptr, false);
      if (config.is_discarded()) throw tpart::Error(tpart::ErrorCode::Parse, "batch config is not valid JSON");
      RunOptions options;
      auto jobs = tpart::cli::parse_batch_config(config, options);
      if (batch_cmd->count("--format")) options.format = tpart::cli::parse_format(c.format);
      if (batch_cmd->count("--jobs")) options.jobs = c.jobs;
      if (c.timing) options.timing = true;
      return run_table(jobs, options, c.out);
    }

    CLI::App* used = app.get_subcommands().front();
    c.job.command = used->get_name();
    c.job.qsum_kind = qsum_kind;
    return run_table({c.job}, options_of(c), c.out);
  } catch (const tpart::Error& e) {
    std::cerr << "error [" << tpart::to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
}
