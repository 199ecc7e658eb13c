#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "latd/sim.hpp"

using namespace latd;

namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.field.type = "quadratic";
  cfg.field.m = 2;
  cfg.p = 2;
  cfg.N = 4;
  cfg.k = {2};
  cfg.code_seed = 9;
  cfg.snr_db_start = 14.0;
  cfg.snr_db_stop = 16.0;
  cfg.snr_db_step = 1.0;
  cfg.min_frame_errors = 20;
  cfg.max_frames = 400;
  cfg.master_seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("snr grids are inclusive and fp-robust") {
  CHECK(snr_grid(0.0, 10.0, 2.5) == std::vector<double>{0.0, 2.5, 5.0, 7.5, 10.0});
  CHECK(snr_grid(5.0, 5.0, 1.0) == std::vector<double>{5.0});
  CHECK(snr_grid(0.0, 0.3, 0.1).size() == 4);  // 0.3/0.1 is 2.9999... in fp
  CHECK_THROWS_AS(snr_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(snr_grid(1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("field specs cover the supported constructions") {
  FieldSpec q{"quadratic", 7, 0, 0};
  CHECK(field_from_spec(q).disc == 28);
  FieldSpec c{"real_cyclotomic5", 0, 0, 0};
  CHECK(field_from_spec(c).disc == 5);
  FieldSpec cu{"cubic", 0, -4, -2};
  CHECK(field_from_spec(cu).disc == 148);
  FieldSpec bad{"septic", 0, 0, 0};
  CHECK_THROWS_AS(field_from_spec(bad), std::invalid_argument);
}

TEST_CASE("config validation rejects unusable experiments") {
  ExperimentConfig cfg = tiny_config();
  CHECK_NOTHROW(validate_config(cfg));
  ExperimentConfig few = cfg;
  few.min_frame_errors = 5;
  CHECK_THROWS_AS(validate_config(few), std::invalid_argument);
  ExperimentConfig inverted = cfg;
  inverted.max_frames = 10;
  CHECK_THROWS_AS(validate_config(inverted), std::invalid_argument);
  ExperimentConfig mode = cfg;
  mode.cancellation = "none";
  CHECK_THROWS_AS(validate_config(mode), std::invalid_argument);
  ExperimentConfig msg = cfg;
  msg.messages = "ones";
  CHECK_THROWS_AS(validate_config(msg), std::invalid_argument);
  ExperimentConfig box = cfg;
  box.messages = "random";
  box.message_box = 0;
  CHECK_THROWS_AS(validate_config(box), std::invalid_argument);
}

TEST_CASE("config json round trips every key") {
  ExperimentConfig cfg = tiny_config();
  cfg.field.type = "cubic";
  cfg.field.a = -4;
  cfg.field.b = -2;
  cfg.cancellation = "literal";
  cfg.messages = "random";
  cfg.message_box = 3;
  cfg.output = "out.csv";
  ExperimentConfig back = config_from_json_text(config_json(cfg));
  CHECK(back.field.type == cfg.field.type);
  CHECK(back.field.a == cfg.field.a);
  CHECK(back.field.b == cfg.field.b);
  CHECK(back.p == cfg.p);
  CHECK(back.N == cfg.N);
  CHECK(back.k == cfg.k);
  CHECK(back.code_seed == cfg.code_seed);
  CHECK(back.snr_db_start == cfg.snr_db_start);
  CHECK(back.snr_db_stop == cfg.snr_db_stop);
  CHECK(back.snr_db_step == cfg.snr_db_step);
  CHECK(back.min_frame_errors == cfg.min_frame_errors);
  CHECK(back.max_frames == cfg.max_frames);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.cancellation == cfg.cancellation);
  CHECK(back.messages == cfg.messages);
  CHECK(back.message_box == cfg.message_box);
  CHECK(back.output == cfg.output);
}

TEST_CASE("config parsing reports failures as invalid_argument") {
  CHECK_THROWS_AS(config_from_json_text("{nope"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json_text("{}"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json_text(R"({"field":{"type":"quadratic","m":2}})"),
                  std::invalid_argument);  // p, N, k missing
  const std::string minimal =
      R"({"field":{"type":"quadratic","m":2},"p":2,"N":4,"k":[2]})";
  ExperimentConfig cfg = config_from_json_text(minimal);
  CHECK(cfg.min_frame_errors == 100);  // defaults fill the rest
  CHECK(cfg.max_frames == 2000000);
  CHECK(cfg.cancellation == "block");
  CHECK(cfg.messages == "zero");
}

TEST_CASE("doubles render shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.0) == "-3");
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(std::stod(format_double(1e-12)) == 1e-12);
}

TEST_CASE("csv headers are pinned") {
  FerSweepResult r;
  r.points.push_back({10.0, 100, 10, 0.1, 0.05, 0.17, 0.0});
  const std::string csv = fer_csv(r);
  CHECK(csv.substr(0, csv.find('\n')) == "snr_db,frames,frame_errors,fer,ci_low,ci_high");
  CHECK(csv.find("10,100,10,0.1,0.05,0.17\n") != std::string::npos);
  const std::string pol = pol_csv({{20.0, 0.25, 0.2, 0.3}});
  CHECK(pol.substr(0, pol.find('\n')) == "snr_db,p_out,ci_low,ci_high");
  CHECK(pol.find("20,0.25,0.2,0.3\n") != std::string::npos);
}

TEST_CASE("sweeps are reproducible byte for byte") {
  ExperimentConfig cfg = tiny_config();
  FerSweepResult a = run_fer_sweep(cfg);
  FerSweepResult b = run_fer_sweep(cfg);
  CHECK(fer_csv(a) == fer_csv(b));
  REQUIRE(a.points.size() == 3);
  for (const PointResult& p : a.points) {
    CHECK(p.frames <= cfg.max_frames);
    CHECK((p.frame_errors >= cfg.min_frame_errors || p.frames == cfg.max_frames));
    CHECK(p.ci_low <= p.fer);
    CHECK(p.fer <= p.ci_high);
  }
}

TEST_CASE("random message mode sweeps and stays statistically in family") {
  ExperimentConfig zero = tiny_config();
  ExperimentConfig rnd = tiny_config();
  rnd.messages = "random";
  FerSweepResult a = run_fer_sweep(zero);
  FerSweepResult b = run_fer_sweep(rnd);
  // geometric uniformity: the error statistics cannot depend on the message,
  // so the wide small-sample intervals must overlap
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) {
    CHECK(b.points[i].frames > 0);
    CHECK(a.points[i].ci_low <= b.points[i].ci_high);
    CHECK(b.points[i].ci_low <= a.points[i].ci_high);
  }
}

TEST_CASE("pol sweep matches the direct outage estimate") {
  const std::vector<double> grid = {20.0, 25.0};
  std::vector<PolPoint> pts = run_pol_sweep(1, grid, 50000, 3);
  REQUIRE(pts.size() == 2);
  for (size_t i = 0; i < pts.size(); ++i) {
    const double exact = outage_exact_n1(std::pow(10.0, grid[i] / 10.0));
    CHECK(pts[i].ci_low <= exact);
    CHECK(exact <= pts[i].ci_high);
    CHECK(pts[i].p_out > 0.0);
  }
  std::vector<PolPoint> again = run_pol_sweep(1, grid, 50000, 3);
  CHECK(pol_csv(pts) == pol_csv(again));
}

TEST_CASE("curve crossings interpolate in log space with sane brackets") {
  std::vector<PointResult> pts;
  pts.push_back({10.0, 0, 0, 1e-1, 8e-2, 1.3e-1, 0.0});
  pts.push_back({20.0, 0, 0, 1e-2, 8e-3, 1.3e-2, 0.0});
  pts.push_back({30.0, 0, 0, 1e-3, 8e-4, 1.3e-3, 0.0});
  CrossingCi c = fer_crossing(pts, 1e-2, "synthetic");
  CHECK(c.mid == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(c.lo < c.mid);
  CHECK(c.mid < c.hi);
  CHECK_THROWS_AS(fer_crossing(pts, 1e-5, "synthetic"), std::runtime_error);

  std::vector<PolPoint> pol;
  pol.push_back({10.0, 1e-1, 9e-2, 1.1e-1});
  pol.push_back({20.0, 1e-3, 9e-4, 1.1e-3});
  CrossingCi pc = pol_crossing(pol, 1e-2, "synthetic pol");
  CHECK(pc.mid == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(gap_to_pol(pts, pol, 1e-2) == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("results land in the output file with a meta sidecar") {
  ExperimentConfig cfg = tiny_config();
  cfg.output = "/tmp/latd_test_out.csv";
  FerSweepResult r = run_fer_sweep(cfg);
  write_fer_results(r, cfg.output);
  std::ifstream csv(cfg.output);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "snr_db,frames,frame_errors,fer,ci_low,ci_high");
  std::ifstream meta(cfg.output + ".meta.json");
  REQUIRE(meta.good());
  std::ostringstream text;
  text << meta.rdbuf();
  CHECK(text.str().find("\"version\"") != std::string::npos);
  CHECK(text.str().find("\"config\"") != std::string::npos);
  CHECK(text.str().find("\"snr_db_start\": 14") != std::string::npos);
  std::remove(cfg.output.c_str());
  std::remove((cfg.output + ".meta.json").c_str());
}

TEST_CASE("version string is populated") {
  CHECK_FALSE(version_string().empty());
}
