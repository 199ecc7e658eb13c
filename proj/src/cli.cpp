#include "latd/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latd/channel.hpp"
#include "latd/lattice.hpp"
#include "latd/sim.hpp"
#include "latd/verify.hpp"

namespace latd {
namespace {

struct ConfigFlags {
  std::string config_path;
  ExperimentConfig values;
  CLI::Option* field_type = nullptr;
  CLI::Option* field_m = nullptr;
  CLI::Option* field_a = nullptr;
  CLI::Option* field_b = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* N = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* code_seed = nullptr;
  CLI::Option* snr_start = nullptr;
  CLI::Option* snr_stop = nullptr;
  CLI::Option* snr_step = nullptr;
  CLI::Option* min_errors = nullptr;
  CLI::Option* max_frames = nullptr;
  CLI::Option* master_seed = nullptr;
  CLI::Option* cancellation = nullptr;
  CLI::Option* messages = nullptr;
  CLI::Option* message_box = nullptr;
  CLI::Option* output = nullptr;
};

void register_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its keys");
  f.field_type = cmd->add_option("--field-type", f.values.field.type,
                                 "quadratic | real_cyclotomic5 | cubic");
  f.field_m = cmd->add_option("--field-m", f.values.field.m, "m for quadratic fields");
  f.field_a = cmd->add_option("--field-a", f.values.field.a, "a for cubic x^3+ax+b");
  f.field_b = cmd->add_option("--field-b", f.values.field.b, "b for cubic x^3+ax+b");
  f.p = cmd->add_option("--p", f.values.p, "rational prime");
  f.N = cmd->add_option("--N", f.values.N, "code length");
  f.k = cmd->add_option("--k", f.values.k, "nested code dimensions, increasing");
  f.code_seed = cmd->add_option("--code-seed", f.values.code_seed, "B-block seed");
  f.snr_start = cmd->add_option("--snr-db-start", f.values.snr_db_start, "grid start, dB");
  f.snr_stop = cmd->add_option("--snr-db-stop", f.values.snr_db_stop, "grid stop, dB");
  f.snr_step = cmd->add_option("--snr-db-step", f.values.snr_db_step, "grid step, dB");
  f.min_errors = cmd->add_option("--min-frame-errors", f.values.min_frame_errors,
                                 "stop a point after this many errors");
  f.max_frames = cmd->add_option("--max-frames", f.values.max_frames,
                                 "hard frame cap per point");
  f.master_seed = cmd->add_option("--master-seed", f.values.master_seed, "run seed");
  f.cancellation = cmd->add_option("--cancellation", f.values.cancellation,
                                   "block | literal");
  f.messages = cmd->add_option("--messages", f.values.messages, "zero | random");
  f.message_box = cmd->add_option("--message-box", f.values.message_box,
                                  "random messages drawn from [-B, B]");
  f.output = cmd->add_option("--output", f.values.output, "CSV output path");
}

ExperimentConfig resolve_config(const ConfigFlags& f) {
  ExperimentConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read config file: " + f.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    cfg = config_from_json_text(text.str());
  }
  if (f.field_type->count()) cfg.field.type = f.values.field.type;
  if (f.field_m->count()) cfg.field.m = f.values.field.m;
  if (f.field_a->count()) cfg.field.a = f.values.field.a;
  if (f.field_b->count()) cfg.field.b = f.values.field.b;
  if (f.p->count()) cfg.p = f.values.p;
  if (f.N->count()) cfg.N = f.values.N;
  if (f.k->count()) cfg.k = f.values.k;
  if (f.code_seed->count()) cfg.code_seed = f.values.code_seed;
  if (f.snr_start->count()) cfg.snr_db_start = f.values.snr_db_start;
  if (f.snr_stop->count()) cfg.snr_db_stop = f.values.snr_db_stop;
  if (f.snr_step->count()) cfg.snr_db_step = f.values.snr_db_step;
  if (f.min_errors->count()) cfg.min_frame_errors = f.values.min_frame_errors;
  if (f.max_frames->count()) cfg.max_frames = f.values.max_frames;
  if (f.master_seed->count()) cfg.master_seed = f.values.master_seed;
  if (f.cancellation->count()) cfg.cancellation = f.values.cancellation;
  if (f.messages->count()) cfg.messages = f.values.messages;
  if (f.message_box->count()) cfg.message_box = f.values.message_box;
  if (f.output->count()) cfg.output = f.values.output;
  return cfg;
}

int cmd_build(const ConfigFlags& flags, const std::string& dump_path) {
  const ExperimentConfig cfg = resolve_config(flags);
  const ConstructionDLattice lat = lattice_from_config(cfg);
  std::cout << "field: " << lat.field.name << "  degree n = " << lat.n
            << "  disc = " << lat.field.disc << '\n';
  std::cout << "p = " << lat.family.p << "  N = " << lat.N << "  a = " << lat.family.a
            << "  k =";
  for (int k : lat.family.dims) std::cout << ' ' << k;
  std::cout << '\n';
  std::cout << "tower: " << (lat.tower.principal ? "principal" : "two-element") << '\n';
  const double log2vol = lat.log_vol / std::log(2.0);
  const double rel = std::abs(std::expm1(log_abs_det(lat.G) - lat.log_vol));
  std::cout << "log2 vol = " << format_double(log2vol) << '\n';
  std::cout << "closed form vs |det G|: rel err = " << format_double(rel) << '\n';
  if (!dump_path.empty()) {
    std::ofstream out(dump_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open dump file: " + dump_path);
    for (int r = 0; r < lat.dim; ++r) {
      for (int c = 0; c < lat.dim; ++c) {
        if (c) out << ',';
        out << format_double(lat.G(r, c));
      }
      out << '\n';
    }
    std::cout << "generator written to " << dump_path << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& preset) {
  bool ok;
  if (preset.empty()) {
    ok = verify_all(std::cout);
  } else if (preset == "example1") {
    ok = verify_example1(std::cout);
  } else {
    throw std::invalid_argument("unknown preset: " + preset);
  }
  return ok ? 0 : 2;
}

int cmd_pol(int n, double start_db, double stop_db, double step_db, long long trials,
            uint64_t seed, const std::string& output) {
  if (n < 1 || n > 4) throw std::invalid_argument("--n must be in 1..4");
  const std::vector<double> grid = snr_grid(start_db, stop_db, step_db);
  const std::vector<PolPoint> points = run_pol_sweep(n, grid, trials, seed);
  const std::string csv = pol_csv(points);
  if (output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << csv;
    std::cout << "wrote " << points.size() << " points to " << output << '\n';
  }
  return 0;
}

int cmd_fer(const ConfigFlags& flags) {
  const ExperimentConfig cfg = resolve_config(flags);
  validate_config(cfg);
  const FerSweepResult result = run_fer_sweep(cfg);
  if (cfg.output.empty()) {
    std::cout << fer_csv(result);
  } else {
    write_fer_results(result, cfg.output);
    std::cout << "wrote " << result.points.size() << " points to " << cfg.output
              << " (+ .meta.json)\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"construction-D lattices over number fields on block-fading channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  CLI::App* build = app.add_subcommand("build", "construct a lattice and report volume");
  ConfigFlags build_flags;
  register_config_flags(build, build_flags);
  std::string dump_path;
  build->add_option("--dump-g", dump_path, "write the generator matrix as CSV");

  CLI::App* verify = app.add_subcommand("verify", "run the small-instance oracle suite");
  std::string preset;
  verify->add_option("--preset", preset, "run one named preset (example1)");

  CLI::App* pol = app.add_subcommand("pol", "outage-limit Monte Carlo sweep");
  int pol_n = 2;
  double pol_start = 20.0, pol_stop = 40.0, pol_step = 2.5;
  long long pol_trials = 1000000;
  uint64_t pol_seed = 1;
  std::string pol_output;
  pol->add_option("--n", pol_n, "fading blocks per lattice point")->required();
  pol->add_option("--snr-db-start", pol_start, "grid start, dB");
  pol->add_option("--snr-db-stop", pol_stop, "grid stop, dB");
  pol->add_option("--snr-db-step", pol_step, "grid step, dB");
  pol->add_option("--trials", pol_trials, "fading draws per point");
  pol->add_option("--seed", pol_seed, "stream seed");
  pol->add_option("--output", pol_output, "CSV output path");

  CLI::App* fer = app.add_subcommand("fer", "frame-error-rate sweep");
  ConfigFlags fer_flags;
  register_config_flags(fer, fer_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (build->parsed()) return cmd_build(build_flags, dump_path);
    if (verify->parsed()) return cmd_verify(preset);
    if (pol->parsed())
      return cmd_pol(pol_n, pol_start, pol_stop, pol_step, pol_trials, pol_seed,
                     pol_output);
    if (fer->parsed()) return cmd_fer(fer_flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace latd
