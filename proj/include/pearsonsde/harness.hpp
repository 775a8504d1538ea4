#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pearsonsde/asymptotics.hpp"
#include "pearsonsde/estimators.hpp"
#include "pearsonsde/optimizer.hpp"

namespace pearsonsde::harness {

using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_invalid_input = 2;
constexpr int exit_estimation_failure = 3;
constexpr int exit_io = 4;

enum class ModelKind { wf, sk, ou };
enum class EstimatorKind { ss, em, ga, ll };

ModelKind parse_model(const std::string& name);
EstimatorKind parse_estimator(const std::string& name);
const char* to_string(ModelKind m);
const char* to_string(EstimatorKind e);

// ---- config ------------------------------------------------------------
// Configs are JSON documents with one section per command. Flags of the form
// --section.key-name=value override fields; dashes inside key segments map to
// underscores. Values parse as JSON when possible, comma lists as arrays.
void apply_override(Json& cfg, const std::string& dotted_path, const std::string& value);
Json resolve_config(const Json& file_cfg,
                    const std::vector<std::pair<std::string, std::string>>& overrides);

// Parameter (de)serialization to flat named-field maps: wf.kappa / wf.K /
// wf.lambda, wf.tau / wf.q / wf.P, sk.eta ... sk.gamma.
Json wf_params_to_json(const WfParams& p);
WfParams wf_params_from_json(const Json& j);
Json wf_natural_to_json(const WfNaturalParams& p);
WfNaturalParams wf_natural_from_json(const Json& j);
Json sk_params_to_json(const SkParams& p);
SkParams sk_params_from_json(const Json& j);

OptSchedule schedule_from_json(const Json& j, ModelKind model);

// ---- io ------------------------------------------------------------------
// Paths serialize as CSV with header t,x1,...,xd at 17 significant digits.
void write_path_csv(const std::string& file, const Path& path);
Path read_path_csv(const std::string& file);
void write_json_file(const std::string& file, const Json& j);
Json read_json_file(const std::string& file);

// ---- commands --------------------------------------------------------
// Each takes its resolved config section and returns a process exit code.
int cmd_simulate(const Json& cfg);
int cmd_fit(const Json& cfg);
int cmd_study(const Json& cfg);
int cmd_icecore(const Json& cfg);
int cmd_bench(const Json& cfg);

int run_cli(int argc, const char* const* argv);

// ---- study ----------------------------------------------------------
struct StudyConfig {
  ModelKind model = ModelKind::sk;
  Json true_params;   // natural scale for wf
  Json theta_init;
  std::vector<double> h_values;
  int n_replications = 20;
  double t_horizon = 0.0;
  double h_sim = 1e-4;
  std::vector<EstimatorKind> estimators;
  double outlier_multiplier = 1.5;
  int outlier_passes = 2;
  double aux_t = 200.0;
  double aux_h = 0.001;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out_dir = ".";
  Json optimizer;

  static StudyConfig parse(const Json& section);
  Json to_json() const;
};

struct ReplicationRow {
  int replication = 0;
  EstimatorKind estimator = EstimatorKind::ss;
  double h = 0.0;
  std::string param;
  double error = 0.0;      // theta_hat - theta_true, reporting scale
  double wall_clock = 0.0;
  std::string status;      // ok | non-converged | indefinite-covariance | ...
};

struct StudyReport {
  Json report;                       // schema 1 document
  std::vector<ReplicationRow> rows;
};

StudyReport run_study(const StudyConfig& cfg);
void write_replication_csv(const std::string& file, const std::vector<ReplicationRow>& rows);

}  // namespace pearsonsde::harness
