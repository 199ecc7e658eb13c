#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latd/decoder.hpp"
#include "latd/lattice.hpp"

// Monte-Carlo frame-error-rate sweeps with deterministic per-frame random
// streams: frame f of grid point pt always consumes streams keyed on
// (master_seed, purpose, pt, f), so results are byte-stable regardless of
// scheduling and identical master seeds give common random numbers across
// configurations.
namespace latd {

struct FieldSpec {
  std::string type;   // "quadratic" | "real_cyclotomic5" | "cubic"
  i64 m = 0;          // quadratic
  i64 a = 0, b = 0;   // cubic x^3 + ax + b
};

struct ExperimentConfig {
  FieldSpec field;
  i64 p = 0;
  int N = 0;
  std::vector<int> k;
  uint64_t code_seed = 1;
  double snr_db_start = 0.0;
  double snr_db_stop = 0.0;
  double snr_db_step = 1.0;
  long long min_frame_errors = 100;
  long long max_frames = 2000000;
  uint64_t master_seed = 1;
  std::string cancellation = "block";
  std::string messages = "zero";   // "zero" | "random"
  int message_box = 2;             // random mode draws u from [-B, B]
  std::string output;
};

struct PointResult {
  double snr_db = 0.0;
  long long frames = 0;
  long long frame_errors = 0;
  double fer = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double wall_sec = 0.0;
};

struct FerSweepResult {
  ExperimentConfig config;
  std::vector<PointResult> points;
  double wall_sec = 0.0;
};

struct PolPoint {
  double snr_db = 0.0;
  double p_out = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct CrossingCi {
  double lo = 0.0;
  double mid = 0.0;
  double hi = 0.0;
};

NumberField field_from_spec(const FieldSpec& spec);
std::vector<double> snr_grid(double start_db, double stop_db, double step_db);

void validate_config(const ExperimentConfig& cfg);
ConstructionDLattice lattice_from_config(const ExperimentConfig& cfg);
FerSweepResult run_fer_sweep(const ExperimentConfig& cfg);

std::vector<PolPoint> run_pol_sweep(int n, const std::vector<double>& grid_db,
                                    long long trials, uint64_t seed);

// SNR (dB) where the measured curve crosses target, bracketed by the
// crossings of the pointwise confidence curves.
CrossingCi fer_crossing(const std::vector<PointResult>& points, double target,
                        const std::string& name);
CrossingCi pol_crossing(const std::vector<PolPoint>& points, double target,
                        const std::string& name);

// dB distance between a measured FER curve and the outage limit at one
// target rate; both curves must bracket the target.
double gap_to_pol(const std::vector<PointResult>& fer,
                  const std::vector<PolPoint>& pol, double target);

// Shortest round-trip decimal form.
std::string format_double(double v);
std::string fer_csv(const FerSweepResult& result);
std::string pol_csv(const std::vector<PolPoint>& points);
std::string config_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json_text(const std::string& text);

// Writes the CSV to cfg.output and a <output>.meta.json sidecar holding the
// resolved config, version string, and wall time.
void write_fer_results(const FerSweepResult& result, const std::string& path);

std::string version_string();

}  // namespace latd
