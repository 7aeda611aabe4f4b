#include "lpt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lpt/error.hpp"
#include "lpt/oracle.hpp"
#include "lpt/resummation.hpp"
#include "lpt/wavefunction.hpp"

namespace lpt::cli {

namespace {

using Json = nlohmann::ordered_json;

void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        emit(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        emit(value, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_float(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string dump(const Json& j) {
  std::string out;
  emit(j, out);
  out += '\n';
  return out;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BracketingFailure:
    case Errc::NotConverged:
      return kOracleError;
    case Errc::IndexNotReady:
    case Errc::OrderTooLarge:
    case Errc::DegenerateSystem:
    case Errc::SingularPadeSystem:
    case Errc::DomainError:
      return kEngineError;
    default:
      return kConfigError;
  }
}

struct JobOutcome {
  int code = kSuccess;
  std::string document;
  std::string error;
};

std::string csv_cell(const std::optional<double>& value) { return value ? format_float(*value) : ""; }

struct Job {
  PotentialSpec potential;
  QuantumState state;
};

Job prepare(const JobConfig& config) {
  std::vector<Rational> v;
  v.reserve(config.v.size());
  for (const auto& text : config.v) v.push_back(Rational::parse(text));
  auto potential = make_potential(Rational::parse(config.mass), Rational::parse(config.omega), std::move(v));
  if (config.order < 1) throw Error(Errc::InvalidArgument, "order must be >= 1");
  return Job{std::move(potential), make_state(config.n, config.l)};
}

Json header(const Job& job, int order) {
  Json doc;
  Json v = Json::array();
  for (const auto& x : job.potential.anharmonic()) v.push_back(x.to_string());
  doc["potential"] = {{"mass", job.potential.mass().to_string()},
                      {"omega", job.potential.omega().to_string()},
                      {"v", v}};
  doc["state"] = {{"n", job.state.n()}, {"l", job.state.l()}};
  doc["order"] = order;
  return doc;
}

Json corrections_json(const EnergySeries& series) {
  Json out = Json::array();
  for (const auto& e : series.corrections()) out.push_back(e.to_string());
  return out;
}

/// Degrees requested explicitly, or the near-diagonal default [K-1-q / q], q = (K-1)/2.
std::pair<int, int> pade_degrees(const JobConfig& config) {
  const int den = config.pade_den_degree.value_or((config.order - 1) / 2);
  const int num = config.pade_num_degree.value_or(config.order - 1 - den);
  return {num, den};
}

/// Float value of the designated coupling; nullopt when it is zero.
std::optional<double> coupling_value(const JobConfig& config, const PotentialSpec& potential) {
  const int index = config.pade_coupling;
  if (index < 1) throw Error(Errc::InvalidArgument, "--pade-coupling is 1-based");
  const Rational g = potential.v(index);
  if (g.is_zero()) return std::nullopt;
  return g.to_double();
}

struct PadeOutcome {
  std::pair<int, int> degrees;
  std::optional<double> value;
  std::string error;
};

std::optional<PadeOutcome> try_pade(const JobConfig& config, const Job& job, const EnergySeries& series,
                                    bool required) {
  if (!required && !config.pade_num_degree && !config.pade_den_degree) return std::nullopt;
  const auto coupling = coupling_value(config, job.potential);
  if (!coupling) return std::nullopt;
  PadeOutcome outcome;
  outcome.degrees = pade_degrees(config);
  try {
    outcome.value = pade(series, outcome.degrees.first, outcome.degrees.second, *coupling);
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument && !required) throw;
    outcome.error = e.what();
  }
  return outcome;
}

Json pade_json(const PadeOutcome& p) {
  Json j;
  j["num_degree"] = p.degrees.first;
  j["den_degree"] = p.degrees.second;
  j["value"] = p.value ? Json(*p.value) : Json(nullptr);
  if (!p.error.empty()) j["error"] = p.error;
  return j;
}

JobOutcome compute_job(const JobConfig& config) {
  JobOutcome outcome;
  const Job job = prepare(config);
  const auto result = compute_series(job.potential, job.state, config.order);
  const auto sums = partial_sums(result.series);
  const auto pade_outcome = try_pade(config, job, result.series, false);

  if (config.format == OutputFormat::Csv) {
    std::ostringstream csv;
    csv << "order,correction,partial_sum";
    if (pade_outcome) csv << ",pade_value";
    csv << '\n';
    for (int k = 1; k <= result.series.order(); ++k) {
      csv << k << ',' << result.series.at(k).to_string() << ',' << format_float(sums.values[k - 1]);
      if (pade_outcome) csv << ',' << csv_cell(pade_outcome->value);
      csv << '\n';
    }
    outcome.document = csv.str();
    return outcome;
  }

  Json doc = header(job, config.order);
  doc["corrections"] = corrections_json(result.series);
  doc["partial_sums"] = sums.values;
  if (pade_outcome) doc["pade"] = pade_json(*pade_outcome);
  outcome.document = dump(doc);
  return outcome;
}

OracleConfig oracle_config(const JobConfig& config, const Job& job) {
  OracleConfig oc = default_oracle_config(job.potential, job.state);
  if (config.oracle_r_max) {
    oc.r_max = *config.oracle_r_max;
    oc.bracket.second = job.potential.evaluate(oc.r_max);
  }
  if (config.oracle_grid_points) oc.grid_points = *config.oracle_grid_points;
  if (config.oracle_tolerance) oc.tolerance = *config.oracle_tolerance;
  return oc;
}

JobOutcome validate_job(const JobConfig& config) {
  JobOutcome outcome;
  const Job job = prepare(config);
  const auto result = compute_series(job.potential, job.state, config.order);
  auto report = summarize(result.series);
  const auto pade_outcome = try_pade(config, job, result.series, true);
  if (pade_outcome) {
    report.pade_degrees = pade_outcome->degrees;
    report.pade_value = pade_outcome->value;
  }

  OracleResult oracle;
  try {
    oracle = solve_radial(job.potential, oracle_config(config, job));
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument) throw;
    outcome.code = kOracleError;
    outcome.error = e.what();
    return outcome;
  }
  const auto record = compare_with_series(oracle, report);

  if (config.format == OutputFormat::Csv) {
    std::ostringstream csv;
    csv << "order,correction,partial_sum,abs_deviation,rel_deviation,oracle_energy,pade_value,optimal\n";
    for (int k = 1; k <= result.series.order(); ++k) {
      csv << k << ',' << result.series.at(k).to_string() << ',' << format_float(report.partial_sums[k - 1])
          << ',' << format_float(record.abs_deviation[k - 1]) << ','
          << format_float(record.rel_deviation[k - 1]) << ',' << format_float(oracle.energy) << ','
          << csv_cell(report.pade_value) << ',' << (k == record.best_order ? 1 : 0) << '\n';
    }
    outcome.document = csv.str();
    return outcome;
  }

  Json doc = header(job, config.order);
  doc["corrections"] = corrections_json(result.series);
  doc["partial_sums"] = report.partial_sums;
  if (pade_outcome) doc["pade"] = pade_json(*pade_outcome);
  doc["oracle"] = {{"energy", oracle.energy},
                   {"residual", oracle.residual_estimate},
                   {"converged", oracle.converged}};
  Json comparison;
  comparison["abs_deviation"] = record.abs_deviation;
  comparison["rel_deviation"] = record.rel_deviation;
  comparison["pade_abs_deviation"] =
      record.pade_abs_deviation ? Json(*record.pade_abs_deviation) : Json(nullptr);
  comparison["best_order"] = record.best_order;
  comparison["monotone_decreasing"] = record.monotone_decreasing;
  doc["comparison"] = comparison;
  outcome.document = dump(doc);
  return outcome;
}

JobOutcome guarded(JobOutcome (*job)(const JobConfig&), const JobConfig& config) {
  try {
    return job(config);
  } catch (const Error& e) {
    return JobOutcome{exit_code_for(e.code()), "", e.what()};
  }
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open " + tmp.string() + " for writing");
    file << content;
    if (!file.flush()) throw Error(Errc::InvalidArgument, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path sweep_path(const std::string& base, int n, int l) {
  const std::filesystem::path p(base);
  auto name = p.stem().string() + "_n" + std::to_string(n) + "_l" + std::to_string(l) + p.extension().string();
  return p.parent_path() / name;
}

int run_jobs(const JobConfig& config, JobOutcome (*job)(const JobConfig&), std::ostream& out,
             std::ostream& err) {
  std::vector<JobConfig> jobs;
  if (config.sweep.empty()) {
    jobs.push_back(config);
  } else {
    for (const auto& [n, l] : config.sweep) {
      JobConfig c = config;
      c.n = n;
      c.l = l;
      jobs.push_back(std::move(c));
    }
  }

  std::vector<std::future<JobOutcome>> pending;
  pending.reserve(jobs.size());
  for (const auto& c : jobs) pending.push_back(std::async(std::launch::async, guarded, job, std::cref(c)));

  int code = kSuccess;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const JobOutcome outcome = pending[i].get();
    if (outcome.code != kSuccess) {
      err << "error (n=" << jobs[i].n << ", l=" << jobs[i].l << "): " << outcome.error << '\n';
      if (code == kSuccess) code = outcome.code;
      continue;
    }
    try {
      if (config.output_path.empty()) {
        out << outcome.document;
      } else if (config.sweep.empty()) {
        write_atomically(config.output_path, outcome.document);
      } else {
        write_atomically(sweep_path(config.output_path, jobs[i].n, jobs[i].l), outcome.document);
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      if (code == kSuccess) code = kConfigError;
    }
  }
  return code;
}

std::string rational_text(const Json& j, const char* field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(Errc::InvalidArgument, std::string(field) + " must be a \"p/q\" string or an integer");
}

}  // namespace

std::string format_float(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(Errc::InvalidArgument, "format must be json or csv, got '" + text + "'");
}

std::vector<std::pair<int, int>> parse_sweep(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "sweep entry '" + item + "' is not n:l");
    try {
      std::size_t used_n = 0;
      std::size_t used_l = 0;
      const int n = std::stoi(item.substr(0, colon), &used_n);
      const int l = std::stoi(item.substr(colon + 1), &used_l);
      if (used_n != colon || used_l != item.size() - colon - 1) throw std::invalid_argument(item);
      out.emplace_back(n, l);
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "sweep entry '" + item + "' is not n:l");
    }
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty sweep list");
  return out;
}

JobConfig job_config_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
  }
  JobConfig config;
  try {
    if (doc.contains("potential")) {
      const auto& p = doc.at("potential");
      if (p.contains("mass")) config.mass = rational_text(p.at("mass"), "mass");
      if (p.contains("omega")) config.omega = rational_text(p.at("omega"), "omega");
      if (p.contains("v")) {
        for (const auto& x : p.at("v")) config.v.push_back(rational_text(x, "v"));
      }
    }
    if (doc.contains("state")) {
      const auto& s = doc.at("state");
      if (s.contains("n")) config.n = s.at("n").get<int>();
      if (s.contains("l")) config.l = s.at("l").get<int>();
    }
    if (doc.contains("order")) config.order = doc.at("order").get<int>();
    if (doc.contains("pade")) {
      const auto& p = doc.at("pade");
      if (p.contains("num_degree")) config.pade_num_degree = p.at("num_degree").get<int>();
      if (p.contains("den_degree")) config.pade_den_degree = p.at("den_degree").get<int>();
      if (p.contains("coupling_index")) config.pade_coupling = p.at("coupling_index").get<int>();
    }
    if (doc.contains("oracle")) {
      const auto& o = doc.at("oracle");
      if (o.contains("r_max")) config.oracle_r_max = o.at("r_max").get<double>();
      if (o.contains("grid_points")) config.oracle_grid_points = o.at("grid_points").get<int>();
      if (o.contains("tolerance")) config.oracle_tolerance = o.at("tolerance").get<double>();
    }
    if (doc.contains("format")) config.format = parse_format(doc.at("format").get<std::string>());
    if (doc.contains("output")) config.output_path = doc.at("output").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("bad config field: ") + e.what());
  }
  return config;
}

JobConfig load_job_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot read config " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return job_config_from_json(buffer.str());
}

int run_compute(const JobConfig& config, std::ostream& out, std::ostream& err) {
  return run_jobs(config, compute_job, out, err);
}

int run_validate(const JobConfig& config, std::ostream& out, std::ostream& err) {
  return run_jobs(config, validate_job, out, err);
}

int run_check_harmonic(int max_n, int max_l, int order, std::ostream& out, std::ostream& err,
                       const SeriesEngine& engine) {
  if (max_n < 0 || max_l < 0 || order < 1) {
    err << "error: check-harmonic needs max_n, max_l >= 0 and order >= 1\n";
    return kConfigError;
  }
  const SeriesEngine run = engine ? engine : SeriesEngine([](const PotentialSpec& p, const QuantumState& s, int k) {
    return compute_series(p, s, k);
  });

  const auto fail = [&](int n, int l, int k, const std::string& what) {
    Json doc;
    doc["passed"] = false;
    doc["failure"] = {{"n", n}, {"l", l}, {"k", k}, {"check", what}};
    out << dump(doc);
    err << "check-harmonic failed at (n=" << n << ", l=" << l << ", k=" << k << "): " << what << '\n';
    return kCheckFailure;
  };

  const auto potential = make_potential(1, 1, {});
  long checks = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (int l = 0; l <= max_l; ++l) {
      const auto state = make_state(n, l);
      std::optional<SeriesResult> computed;
      try {
        computed.emplace(run(potential, state, order));
      } catch (const Error& e) {
        return fail(n, l, 0, std::string("engine error: ") + e.what());
      }
      const SeriesResult& result = *computed;
      if (result.series.order() != order) return fail(n, l, 0, "series length");
      if (result.series.at(1) != Rational(2 * (2 * n + l) + 3, 2)) return fail(n, l, 1, "E_1 = 2n+l+3/2");
      ++checks;
      for (int k = 2; k <= order; ++k) {
        if (!result.series.at(k).is_zero()) return fail(n, l, k, "E_k = 0");
        ++checks;
      }
      const auto d = harmonic_d_coefficients(state, std::max({order, n + 1, 2}));
      for (int k = 0; k <= order; ++k) {
        if (result.table.at(k, 0) != d.d[k]) return fail(n, l, k, "C^k_0 = d_k");
        ++checks;
      }
      const auto p = node_polynomial(state, d);
      for (int m = 1; m <= n; ++m) {
        const Rational expected = Rational(m) * (Rational(m + l) + Rational(1, 2)) / Rational(m - n - 1);
        if (p.p[m - 1] / p.p[m] != expected) return fail(n, l, m, "Laguerre ratio");
        ++checks;
      }
    }
  }

  Json doc;
  doc["passed"] = true;
  doc["max_n"] = max_n;
  doc["max_l"] = max_l;
  doc["order"] = order;
  doc["checks"] = checks;
  out << dump(doc);
  return kSuccess;
}

}  // namespace lpt::cli
