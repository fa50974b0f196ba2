#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "tpart/classes.hpp"
#include "tpart/counting.hpp"
#include "tpart/error.hpp"
#include "tpart/identities.hpp"
#include "tpart/text.hpp"

namespace tpart::cli {

namespace {

using Task = std::function<std::vector<Row>()>;

std::string field_label(std::int64_t d) { return d > 0 ? "d=" + std::to_string(d) : "Z"; }

std::string verdict_of(bool equal) { return equal ? "equal" : "unequal"; }

[[noreturn]] void bad_job(const std::string& message) { throw Error(ErrorCode::InvalidParameter, message); }

Field job_field(const JobSpec& job) {
  if (job.d <= 0) bad_job(job.command + " needs --d");
  return Field::make(job.d);
}

std::vector<QuadInt> job_targets(const JobSpec& job, const Field& field) {
  std::vector<QuadInt> targets;
  for (const std::string& text : job.targets) {
    QuadInt t = parse_element(text, field);
    require_totally_positive(t, "target");
    targets.push_back(t);
  }
  if (job.trace_max) {
    for (const QuadInt& t : elements_with_trace_at_most(field, *job.trace_max)) targets.push_back(t);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (targets.empty()) bad_job(job.command + " needs --target or --trace-max");
  return targets;
}

std::vector<int> or_default(const std::vector<int>& values, std::vector<int> fallback) {
  return values.empty() ? fallback : values;
}

// Two rows per identity: direct counts, then the sectional factorization.
std::vector<Row> identity_rows(const std::string& field, const QuadInt& target, const std::string& check,
                               const std::pair<ClassSpec, ClassSpec>& sides,
                               const std::optional<PrimeAbove5>& prime = std::nullopt) {
  const IdentityReport r = verify_identity(target, sides, prime);
  const std::string t = to_string(target);
  return {
      Row{field, t, check, std::to_string(r.a_count), std::to_string(r.b_count), verdict_of(r.a_count == r.b_count), {}, {}},
      Row{field, t, check + ":sections", std::to_string(r.a_sectional), std::to_string(r.b_sectional),
          verdict_of(r.a_sectional == r.a_count && r.b_sectional == r.b_count), {}, {}},
  };
}

Row series_row(const std::string& field, const std::string& target, const SeriesCheck& c, bool alternate) {
  Row row{field, target, c.name + "[" + c.reading + "]", std::to_string(c.lhs_terms), std::to_string(c.rhs_terms),
          {}, c.first_difference, {}};
  // Alternate readings are reported but never fail the run.
  row.verdict = alternate ? (c.equal ? "holds" : "differs") : verdict_of(c.equal);
  return row;
}

std::int64_t classical_bound(const JobSpec& job, std::int64_t fallback) {
  if (!job.bound) return fallback;
  try {
    return std::stoll(*job.bound);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "classical truncation must be an integer, got '" + *job.bound + "'");
  }
}

QuadInt element_bound(const JobSpec& job, const Field& field) {
  if (!job.bound) bad_job("verify-qsum " + job.qsum_kind + " needs --bound");
  QuadInt b = parse_element(*job.bound, field);
  require_totally_positive(b, "bound");
  return b;
}

int cap(const JobSpec& job, std::size_t index, int fallback) {
  return index < job.caps.size() ? job.caps[index] : fallback;
}

void expand_counting(const JobSpec& job, std::vector<Task>& tasks) {
  const Field field = job_field(job);
  const std::string label = field_label(job.d);
  const auto targets = job_targets(job, field);

  if (job.command == "verify-sylvester") {
    const auto ks = or_default(job.k, {1, 2, 3, 4});
    for (const QuadInt& t : targets) {
      for (int k : ks) {
        tasks.push_back([=] { return identity_rows(label, t, "sylvester:k=" + std::to_string(k), sylvester_pair(k)); });
      }
    }
    return;
  }
  if (job.command == "verify-gordon") {
    const auto ks = or_default(job.k, {2, 3});
    for (const QuadInt& t : targets) {
      for (int k : ks) {
        for (int i : or_default(job.i, {})) {
          if (i > k) continue;
          tasks.push_back([=] {
            return identity_rows(label, t, "gordon:k=" + std::to_string(k) + ",i=" + std::to_string(i), gordon_pair(k, i));
          });
        }
        if (job.i.empty()) {
          for (int i = 1; i <= k; ++i) {
            tasks.push_back([=] {
              return identity_rows(label, t, "gordon:k=" + std::to_string(k) + ",i=" + std::to_string(i),
                                   gordon_pair(k, i));
            });
          }
        }
      }
    }
    return;
  }
  if (job.command == "verify-rr") {
    for (const QuadInt& t : targets) {
      tasks.push_back([=] { return identity_rows(label, t, "rr1", gordon_pair(2, 2)); });
      tasks.push_back([=] { return identity_rows(label, t, "rr2", gordon_pair(2, 1)); });
    }
    return;
  }
  if (job.command == "verify-modp") {
    const auto prime = try_find_prime_above_5(field);
    if (!prime) {
      tasks.push_back([=] {
        return std::vector<Row>{Row{label, "-", "modp", "-", "-", "skipped:Inert5",
                                    "5 is inert in Q(sqrt " + std::to_string(job.d) + ")", {}}};
      });
      return;
    }
    for (const QuadInt& t : targets) {
      for (int v : {1, 2}) {
        tasks.push_back([=] { return identity_rows(label, t, "modp:v=" + std::to_string(v), modp_pair(v), prime); });
      }
    }
    if (job.bound) {
      const QuadInt b = element_bound(job, field);
      for (std::uint8_t mask : {kResidues14, kResidues23}) {
        tasks.push_back([=] {
          std::vector<Row> rows;
          for (const SeriesCheck& c : modp_gf_check(b, mask)) rows.push_back(series_row(label, to_string(b), c, false));
          return rows;
        });
      }
    }
    return;
  }
  if (job.command == "count") {
    const auto classes = job.classes.empty() ? std::vector<std::string>{"all"} : job.classes;
    const auto prime = try_find_prime_above_5(field);
    for (const QuadInt& t : targets) {
      for (const std::string& text : classes) {
        const ClassSpec spec = parse_class_spec(text);
        tasks.push_back([=] {
          const std::string tt = to_string(t);
          if (spec.is_modp() && !prime) {
            return std::vector<Row>{Row{label, tt, text, "-", "-", "skipped:Inert5", "5 is inert", {}}};
          }
          const std::int64_t direct = count_class(t, spec, prime);
          const std::int64_t factored = spec.kind() == ClassSpec::Kind::All ? count_via_factorization(t)
                                                                            : count_class_via_sections(t, spec, prime);
          return std::vector<Row>{
              Row{label, tt, text, std::to_string(direct), std::to_string(factored), verdict_of(direct == factored), {}, {}}};
        });
      }
    }
    return;
  }
  bad_job("unknown command '" + job.command + "'");
}

void expand_qsum(const JobSpec& job, std::vector<Task>& tasks) {
  const std::string& kind = job.qsum_kind;
  if (kind == "cauchy") {
    const std::int64_t n = classical_bound(job, 15);
    const int ca = cap(job, 0, 5);
    const int ct = cap(job, 1, 5);
    tasks.push_back([=] {
      const auto checks = cauchy_check(n, ca, ct);
      return std::vector<Row>{series_row("Z", "q^" + std::to_string(n), checks[0], false),
                              series_row("Z", "q^" + std::to_string(n), checks[1], true)};
    });
    return;
  }
  if (kind == "leveque") {
    const int ca = cap(job, 0, job.d > 0 ? 4 : 6);
    if (job.d <= 0) {
      const std::int64_t n = classical_bound(job, 20);
      tasks.push_back([=] {
        const auto checks = leveque_check(n, ca);
        return std::vector<Row>{series_row("Z", "q^" + std::to_string(n), checks[0], false),
                                series_row("Z", "q^" + std::to_string(n), checks[1], true)};
      });
    } else {
      const QuadInt b = element_bound(job, job_field(job));
      tasks.push_back([=] {
        const auto checks = leveque_lifted_check(b, ca);
        return std::vector<Row>{series_row(field_label(job.d), to_string(b), checks[0], false),
                                series_row(field_label(job.d), to_string(b), checks[1], true)};
      });
    }
    return;
  }
  if (kind == "gordon-gf") {
    const QuadInt b = element_bound(job, job_field(job));
    for (int k : or_default(job.k, {2, 3})) {
      for (int i = 1; i <= k; ++i) {
        if (!job.i.empty() && std::find(job.i.begin(), job.i.end(), i) == job.i.end()) continue;
        tasks.push_back([=] {
          return std::vector<Row>{series_row(field_label(job.d), to_string(b), gordon_gf_check(b, k, i), false),
                                  series_row(field_label(job.d), to_string(b), gordon_count_check(b, k, i), false)};
        });
      }
    }
    return;
  }
  if (kind == "sylvester-gf") {
    const Field field = job_field(job);
    const QuadInt b = element_bound(job, field);
    std::vector<QuadInt> gammas;
    for (const std::string& text : job.targets) gammas.push_back(parse_element(text, field));
    if (gammas.empty()) gammas = primitives_up_to(b);
    const int ca = cap(job, 0, 4);
    for (const QuadInt& gamma : gammas) {
      tasks.push_back([=] {
        std::vector<Row> rows;
        for (const SeriesCheck& c : sylvester_gf_check(gamma, b, ca)) {
          rows.push_back(series_row(field_label(job.d), to_string(gamma), c, false));
        }
        return rows;
      });
    }
    return;
  }
  if (kind == "euler-lift") {
    const QuadInt b = element_bound(job, job_field(job));
    tasks.push_back([=] { return std::vector<Row>{series_row(field_label(job.d), to_string(b), euler_lift_check(b), false)}; });
    return;
  }
  bad_job("unknown q-sum check '" + kind + "' (cauchy, leveque, gordon-gf, sylvester-gf, euler-lift)");
}

std::vector<Row> run_task(const Task& task, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Row> rows;
  try {
    rows = task();
  } catch (const Error& e) {
    rows = {Row{"-", "-", "-", "-", "-", "error:" + std::string(to_string(e.code())), e.what(), {}}};
  } catch (const std::exception& e) {
    rows = {Row{"-", "-", "-", "-", "-", "error", e.what(), {}}};
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    for (Row& row : rows) row.millis = ms.count();
  }
  return rows;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Row> run_jobs(const std::vector<JobSpec>& jobs, const RunOptions& options) {
  std::vector<Task> tasks;
  for (const JobSpec& job : jobs) {
    if (job.command == "verify-qsum") {
      expand_qsum(job, tasks);
    } else {
      expand_counting(job, tasks);
    }
  }

  std::vector<std::vector<Row>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < tasks.size(); j = next++) results[j] = run_task(tasks[j], options.timing);
  };
  const int width = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < width; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // Results are stored by task index, so the order is the expansion order.
  std::vector<Row> rows;
  for (auto& chunk : results) {
    for (Row& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

int exit_code(const std::vector<Row>& rows) {
  for (const Row& row : rows) {
    if (row.verdict == "unequal" || row.verdict.rfind("error", 0) == 0) return 1;
  }
  return 0;
}

std::string format_rows(const std::vector<Row>& rows, const RunOptions& options) {
  if (options.format == Format::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const Row& row : rows) {
      nlohmann::json j{{"field", row.field}, {"target", row.target}, {"check", row.check},
                       {"lhs", row.lhs},     {"rhs", row.rhs},       {"verdict", row.verdict}};
      j["millis"] = row.millis ? nlohmann::json(*row.millis) : nlohmann::json(nullptr);
      if (!row.reason.empty()) j["reason"] = row.reason;
      out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "field,target,check,lhs,rhs,verdict,millis\n";
  for (const Row& row : rows) {
    os << csv_field(row.field) << ',' << csv_field(row.target) << ',' << csv_field(row.check) << ','
       << csv_field(row.lhs) << ',' << csv_field(row.rhs) << ',' << csv_field(row.verdict) << ','
       << (row.millis ? std::to_string(*row.millis) : "-") << '\n';
  }
  return os.str();
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw Error(ErrorCode::Parse, "format must be csv or json, got '" + text + "'");
}

std::vector<JobSpec> parse_batch_config(const nlohmann::json& config, RunOptions& options) {
  try {
    if (config.contains("format")) options.format = parse_format(config.at("format").get<std::string>());
    if (config.contains("jobs")) options.jobs = config.at("jobs").get<int>();
    std::vector<JobSpec> jobs;
    for (const auto& t : config.at("tasks")) {
      JobSpec job;
      job.command = t.at("command").get<std::string>();
      job.d = t.value("d", std::int64_t{0});
      job.targets = t.value("targets", std::vector<std::string>{});
      if (t.contains("trace_max")) job.trace_max = t.at("trace_max").get<std::int64_t>();
      job.k = t.value("k", std::vector<int>{});
      job.i = t.value("i", std::vector<int>{});
      job.classes = t.value("classes", std::vector<std::string>{});
      if (t.contains("bound")) {
        const auto& b = t.at("bound");
        job.bound = b.is_string() ? b.get<std::string>() : std::to_string(b.get<std::int64_t>());
      }
      job.qsum_kind = t.value("qsum", std::string{});
      job.caps = t.value("caps", std::vector<int>{});
      jobs.push_back(std::move(job));
    }
    return jobs;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("batch config: ") + e.what());
  }
}

}  // namespace tpart::cli
