#include "latd/sim.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "latd/channel.hpp"

#ifndef LATD_GIT_DESCRIBE
#define LATD_GIT_DESCRIBE "unknown"
#endif

namespace latd {
namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

NumberField field_from_spec(const FieldSpec& spec) {
  if (spec.type == "quadratic") return build_quadratic_field(spec.m);
  if (spec.type == "real_cyclotomic5") return build_real_cyclotomic5();
  if (spec.type == "cubic") return build_cubic_field(spec.a, spec.b);
  throw std::invalid_argument("unknown field type: " + spec.type);
}

std::vector<double> snr_grid(double start_db, double stop_db, double step_db) {
  if (step_db <= 0.0) throw std::invalid_argument("snr_db_step must be positive");
  if (stop_db < start_db) throw std::invalid_argument("snr_db_stop below snr_db_start");
  std::vector<double> grid;
  const int count = static_cast<int>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) grid.push_back(start_db + i * step_db);
  return grid;
}

void validate_config(const ExperimentConfig& cfg) {
  field_from_spec(cfg.field);
  snr_grid(cfg.snr_db_start, cfg.snr_db_stop, cfg.snr_db_step);
  if (cfg.min_frame_errors < 20)
    throw std::invalid_argument("min_frame_errors must be >= 20");
  if (cfg.max_frames < cfg.min_frame_errors)
    throw std::invalid_argument("max_frames must be >= min_frame_errors");
  if (cfg.cancellation != "block" && cfg.cancellation != "literal")
    throw std::invalid_argument("cancellation must be block or literal");
  if (cfg.messages != "zero" && cfg.messages != "random")
    throw std::invalid_argument("messages must be zero or random");
  if (cfg.messages == "random" && cfg.message_box < 1)
    throw std::invalid_argument("message_box must be >= 1");
}

ConstructionDLattice lattice_from_config(const ExperimentConfig& cfg) {
  const NumberField field = field_from_spec(cfg.field);
  const NestedCodeFamily family = random_family(cfg.p, cfg.N, cfg.k, cfg.code_seed);
  const PrimeIdealTower tower = prime_tower_auto(field, cfg.p, family.a);
  return build_lattice(field, family, tower);
}

FerSweepResult run_fer_sweep(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const auto sweep_start = std::chrono::steady_clock::now();
  const ConstructionDLattice lat = lattice_from_config(cfg);
  DecodeOptions opts;
  opts.mode = cfg.cancellation == "block" ? Cancellation::kBlock : Cancellation::kLiteral;
  opts.assemble_point = false;
  const bool random_messages = cfg.messages == "random";
  const uint64_t box = 2 * static_cast<uint64_t>(cfg.message_box) + 1;
  const std::vector<double> grid = snr_grid(cfg.snr_db_start, cfg.snr_db_stop, cfg.snr_db_step);
  FerSweepResult result;
  result.config = cfg;
  const Eigen::VectorXd zero_x = Eigen::VectorXd::Zero(lat.dim);
  IntVec u(lat.dim, 0);
  for (size_t pt = 0; pt < grid.size(); ++pt) {
    const auto point_start = std::chrono::steady_clock::now();
    const double sigma_n2 = channel_from_lattice(lat, grid[pt]).sigma_n2;
    long long frames = 0, errors = 0;
    while (errors < cfg.min_frame_errors && frames < cfg.max_frames) {
      const uint64_t f = static_cast<uint64_t>(frames);
      RngStream fading_stream = make_stream(cfg.master_seed, StreamPurpose::kFading, pt, f);
      RngStream noise_stream = make_stream(cfg.master_seed, StreamPurpose::kNoise, pt, f);
      const FadingRealization fading = sample_fading(lat.n, fading_stream);
      Eigen::VectorXd x;
      if (random_messages) {
        RngStream msg = make_stream(cfg.master_seed, StreamPurpose::kMessage, pt, f);
        for (int t = 0; t < lat.dim; ++t)
          u[t] = static_cast<i64>(msg.next_below(box)) - cfg.message_box;
        x = encode(lat, u).x;
      } else {
        x = zero_x;
      }
      const Eigen::VectorXd y = transmit(x, fading, sigma_n2, noise_stream);
      const DecodeResult dec = decode(lat, y, fading, opts);
      ++frames;
      if (dec.cond_failure || dec.u != u) ++errors;
    }
    PointResult pr;
    pr.snr_db = grid[pt];
    pr.frames = frames;
    pr.frame_errors = errors;
    pr.fer = static_cast<double>(errors) / static_cast<double>(frames);
    const Interval ci = wilson_interval(errors, frames);
    pr.ci_low = ci.lo;
    pr.ci_high = ci.hi;
    pr.wall_sec = seconds_since(point_start);
    result.points.push_back(pr);
  }
  result.wall_sec = seconds_since(sweep_start);
  return result;
}

std::vector<PolPoint> run_pol_sweep(int n, const std::vector<double>& grid_db,
                                    long long trials, uint64_t seed) {
  std::vector<PolPoint> points;
  for (size_t pt = 0; pt < grid_db.size(); ++pt) {
    RngStream stream = make_stream(seed, StreamPurpose::kOutage, pt, 0);
    const double gamma = std::pow(10.0, grid_db[pt] / 10.0);
    const OutageEstimate est = outage_probability(gamma, n, trials, stream);
    points.push_back({grid_db[pt], est.p_out, est.ci.lo, est.ci.hi});
  }
  return points;
}

CrossingCi fer_crossing(const std::vector<PointResult>& points, double target,
                        const std::string& name) {
  std::vector<double> snr, mid, lo, hi;
  for (const PointResult& p : points) {
    snr.push_back(p.snr_db);
    mid.push_back(p.fer);
    lo.push_back(p.ci_low);
    hi.push_back(p.ci_high);
  }
  // pointwise-lower curve crosses the target earlier, so it bounds from below
  return {log_crossing(snr, lo, target, name + " ci_low"),
          log_crossing(snr, mid, target, name),
          log_crossing(snr, hi, target, name + " ci_high")};
}

CrossingCi pol_crossing(const std::vector<PolPoint>& points, double target,
                        const std::string& name) {
  std::vector<double> snr, mid, lo, hi;
  for (const PolPoint& p : points) {
    snr.push_back(p.snr_db);
    mid.push_back(p.p_out);
    lo.push_back(p.ci_low);
    hi.push_back(p.ci_high);
  }
  return {log_crossing(snr, lo, target, name + " ci_low"),
          log_crossing(snr, mid, target, name),
          log_crossing(snr, hi, target, name + " ci_high")};
}

double gap_to_pol(const std::vector<PointResult>& fer,
                  const std::vector<PolPoint>& pol, double target) {
  return fer_crossing(fer, target, "fer curve").mid -
         pol_crossing(pol, target, "outage limit").mid;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fer_csv(const FerSweepResult& result) {
  std::string out = "snr_db,frames,frame_errors,fer,ci_low,ci_high\n";
  for (const PointResult& p : result.points) {
    out += format_double(p.snr_db);
    out += ',' + std::to_string(p.frames);
    out += ',' + std::to_string(p.frame_errors);
    out += ',' + format_double(p.fer);
    out += ',' + format_double(p.ci_low);
    out += ',' + format_double(p.ci_high);
    out += '\n';
  }
  return out;
}

std::string pol_csv(const std::vector<PolPoint>& points) {
  std::string out = "snr_db,p_out,ci_low,ci_high\n";
  for (const PolPoint& p : points) {
    out += format_double(p.snr_db);
    out += ',' + format_double(p.p_out);
    out += ',' + format_double(p.ci_low);
    out += ',' + format_double(p.ci_high);
    out += '\n';
  }
  return out;
}

std::string config_json(const ExperimentConfig& cfg) {
  json j;
  j["field"]["type"] = cfg.field.type;
  if (cfg.field.type == "quadratic") j["field"]["m"] = cfg.field.m;
  if (cfg.field.type == "cubic") {
    j["field"]["a"] = cfg.field.a;
    j["field"]["b"] = cfg.field.b;
  }
  j["p"] = cfg.p;
  j["N"] = cfg.N;
  j["k"] = cfg.k;
  j["code_seed"] = cfg.code_seed;
  j["snr_db_start"] = cfg.snr_db_start;
  j["snr_db_stop"] = cfg.snr_db_stop;
  j["snr_db_step"] = cfg.snr_db_step;
  j["min_frame_errors"] = cfg.min_frame_errors;
  j["max_frames"] = cfg.max_frames;
  j["master_seed"] = cfg.master_seed;
  j["cancellation"] = cfg.cancellation;
  j["messages"] = cfg.messages;
  j["message_box"] = cfg.message_box;
  j["output"] = cfg.output;
  return j.dump(2);
}

ExperimentConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    const json& f = j.at("field");
    cfg.field.type = f.at("type").get<std::string>();
    if (cfg.field.type == "quadratic") cfg.field.m = f.at("m").get<i64>();
    if (cfg.field.type == "cubic") {
      cfg.field.a = f.at("a").get<i64>();
      cfg.field.b = f.at("b").get<i64>();
    }
    cfg.p = j.at("p").get<i64>();
    cfg.N = j.at("N").get<int>();
    cfg.k = j.at("k").get<std::vector<int>>();
    if (j.contains("code_seed")) cfg.code_seed = j["code_seed"].get<uint64_t>();
    if (j.contains("snr_db_start")) cfg.snr_db_start = j["snr_db_start"].get<double>();
    if (j.contains("snr_db_stop")) cfg.snr_db_stop = j["snr_db_stop"].get<double>();
    if (j.contains("snr_db_step")) cfg.snr_db_step = j["snr_db_step"].get<double>();
    if (j.contains("min_frame_errors"))
      cfg.min_frame_errors = j["min_frame_errors"].get<long long>();
    if (j.contains("max_frames")) cfg.max_frames = j["max_frames"].get<long long>();
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<uint64_t>();
    if (j.contains("cancellation")) cfg.cancellation = j["cancellation"].get<std::string>();
    if (j.contains("messages")) cfg.messages = j["messages"].get<std::string>();
    if (j.contains("message_box")) cfg.message_box = j["message_box"].get<int>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config key error: ") + e.what());
  }
  return cfg;
}

void write_fer_results(const FerSweepResult& result, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << fer_csv(result);
  }
  json meta;
  meta["config"] = json::parse(config_json(result.config));
  meta["version"] = version_string();
  meta["wall_sec"] = result.wall_sec;
  json points = json::array();
  for (const PointResult& p : result.points) points.push_back(p.wall_sec);
  meta["point_wall_sec"] = points;
  std::ofstream side(path + ".meta.json", std::ios::binary);
  if (!side) throw std::runtime_error("cannot open sidecar file: " + path + ".meta.json");
  side << meta.dump(2) << '\n';
}

std::string version_string() { return LATD_GIT_DESCRIBE; }

}  // namespace latd
