#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpt/cli.hpp"
#include "lpt/error.hpp"

namespace {

using lpt::cli::JobConfig;

struct JobFlags {
  std::string config_path;
  std::string mass;
  std::string omega;
  std::vector<std::string> v;
  int n = 0;
  int l = 0;
  int order = 8;
  int pade_num = 0;
  int pade_den = 0;
  int pade_coupling = 1;
  double r_max = 0;
  int grid_points = 0;
  double tolerance = 0;
  std::string format;
  std::string output;
  std::string sweep;

  std::vector<CLI::Option*> opts;

  CLI::Option* o(const char* name) const {
    for (auto* opt : opts) {
      if (opt->check_name(name)) return opt;
    }
    return nullptr;
  }
  bool given(const char* name) const { return o(name)->count() > 0; }
};

void add_job_flags(CLI::App* cmd, JobFlags& f) {
  f.opts = {
      cmd->add_option("--config", f.config_path, "JSON job document; explicit flags override it"),
      cmd->add_option("--mass", f.mass, "particle mass m (p/q)"),
      cmd->add_option("--omega", f.omega, "harmonic frequency (p/q)"),
      cmd->add_option("--v", f.v, "anharmonic coefficients v1 v2 ... (p/q), repeatable")
          ->allow_extra_args(false),
      cmd->add_option("--n", f.n, "radial quantum number"),
      cmd->add_option("--l", f.l, "angular momentum"),
      cmd->add_option("--order", f.order, "number of corrections K"),
      cmd->add_option("--pade-num", f.pade_num, "Pade numerator degree"),
      cmd->add_option("--pade-den", f.pade_den, "Pade denominator degree"),
      cmd->add_option("--pade-coupling", f.pade_coupling, "1-based index of the expansion coupling in v"),
      cmd->add_option("--r-max", f.r_max, "oracle box radius"),
      cmd->add_option("--grid-points", f.grid_points, "oracle grid size"),
      cmd->add_option("--tolerance", f.tolerance, "oracle bisection tolerance"),
      cmd->add_option("--format", f.format, "json or csv"),
      cmd->add_option("--output", f.output, "output file (per-state suffix under --sweep)"),
      cmd->add_option("--sweep", f.sweep, "states to run, e.g. 0:0,1:0,0:1"),
  };
}

JobConfig build_config(const JobFlags& f) {
  JobConfig c = f.config_path.empty() ? JobConfig{} : lpt::cli::load_job_config(f.config_path);
  if (f.given("--mass")) c.mass = f.mass;
  if (f.given("--omega")) c.omega = f.omega;
  if (f.given("--v")) c.v = f.v;
  if (f.given("--n")) c.n = f.n;
  if (f.given("--l")) c.l = f.l;
  if (f.given("--order")) c.order = f.order;
  if (f.given("--pade-num")) c.pade_num_degree = f.pade_num;
  if (f.given("--pade-den")) c.pade_den_degree = f.pade_den;
  if (f.given("--pade-coupling")) c.pade_coupling = f.pade_coupling;
  if (f.given("--r-max")) c.oracle_r_max = f.r_max;
  if (f.given("--grid-points")) c.oracle_grid_points = f.grid_points;
  if (f.given("--tolerance")) c.oracle_tolerance = f.tolerance;
  if (f.given("--format")) c.format = lpt::cli::parse_format(f.format);
  if (f.given("--output")) c.output_path = f.output;
  if (f.given("--sweep")) c.sweep = lpt::cli::parse_sweep(f.sweep);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact h-bar expansion of spherical anharmonic oscillator energies"};
  app.require_subcommand(1, 1);

  JobFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "exact energy corrections E_1..E_K");
  add_job_flags(compute, compute_flags);

  JobFlags validate_flags;
  auto* validate = app.add_subcommand("validate", "compare partial sums and Pade against the numeric oracle");
  add_job_flags(validate, validate_flags);

  int max_n = 0;
  int max_l = 0;
  int check_order = 15;
  auto* check = app.add_subcommand("check-harmonic", "exact harmonic-limit checks over a state grid");
  check->add_option("--max-n", max_n, "largest n")->required();
  check->add_option("--max-l", max_l, "largest l")->required();
  check->add_option("--order", check_order, "number of corrections K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lpt::cli::kConfigError;
  }

  try {
    if (*check) return lpt::cli::run_check_harmonic(max_n, max_l, check_order, std::cout, std::cerr);
    if (*compute) return lpt::cli::run_compute(build_config(compute_flags), std::cout, std::cerr);
    return lpt::cli::run_validate(build_config(validate_flags), std::cout, std::cerr);
  } catch (const lpt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return lpt::cli::kConfigError;
  }
}
