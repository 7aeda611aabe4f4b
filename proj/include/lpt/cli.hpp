#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpt/engine.hpp"
#include "lpt/model.hpp"

namespace lpt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kConfigError = 2,
  kEngineError = 3,
  kOracleError = 4,
};

enum class OutputFormat { Json, Csv };

/// One job as read from flags and/or a --config document. Rationals stay as
/// text until the job runs so parse failures surface as config errors.
struct JobConfig {
  std::string mass = "1";
  std::string omega = "1";
  std::vector<std::string> v;
  int n = 0;
  int l = 0;
  int order = 8;

  std::optional<int> pade_num_degree;
  std::optional<int> pade_den_degree;
  int pade_coupling = 1;  // 1-based index into v

  std::optional<double> oracle_r_max;
  std::optional<int> oracle_grid_points;
  std::optional<double> oracle_tolerance;

  OutputFormat format = OutputFormat::Json;
  std::string output_path;
  std::vector<std::pair<int, int>> sweep;  // (n, l); empty means the single state above
};

/// Reads the input subset of the output schema. Throws Error{InvalidArgument} on
/// malformed documents.
JobConfig load_job_config(const std::string& path);
JobConfig job_config_from_json(const std::string& text);

/// "n:l,n:l,..." list for --sweep.
std::vector<std::pair<int, int>> parse_sweep(const std::string& text);

OutputFormat parse_format(const std::string& text);

/// printf("%.17g"); non-finite values become "null".
std::string format_float(double value);

int run_compute(const JobConfig& config, std::ostream& out, std::ostream& err);
int run_validate(const JobConfig& config, std::ostream& out, std::ostream& err);

using SeriesEngine =
    std::function<SeriesResult(const PotentialSpec&, const QuantumState&, int)>;

/// Exact harmonic checks over 0..max_n × 0..max_l: E_1 = 2n+l+3/2, E_k = 0 for
/// k ≥ 2, C^k_0 = d_k, and the Laguerre ratios of the node polynomial.
/// `engine` is injectable so a broken engine can be exercised.
int run_check_harmonic(int max_n, int max_l, int order, std::ostream& out, std::ostream& err,
                       const SeriesEngine& engine = {});

}  // namespace lpt::cli
