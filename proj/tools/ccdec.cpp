// Copyright 2026 The colorcode authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ccdec: lattice inspection, single-shot decoding, Monte Carlo sweeps and
// threshold estimation for the hexagonal color code on a torus.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorcode.h"

using nlohmann::json;

namespace {

struct CodeHandle {
  cc_code* code = nullptr;
  ~CodeHandle() { cc_code_free(code); }
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "ccdec: " << message << "\n";
  std::exit(1);
}

void check(cc_status status) {
  if (status != CC_OK) {
    std::string detail = cc_last_error();
    die(detail.empty() ? cc_status_message(status) : detail);
  }
}

cc_code* make_code(int m) {
  static CodeHandle handle;  // one code per invocation
  check(cc_code_create(m, &handle.code));
  return handle.code;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<uint8_t> parse_bits(const std::string& s, size_t expected,
                                const char* what) {
  if (s.size() != expected)
    die(std::string(what) + " bitstring has length " + std::to_string(s.size()) +
        ", expected " + std::to_string(expected));
  std::vector<uint8_t> bits(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      die(std::string(what) + " bitstring must contain only '0' and '1'");
    bits[i] = s[i] == '1';
  }
  return bits;
}

std::string bits_to_string(const std::vector<uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

struct ConfigFlags {
  std::string mode = "soft";
  int bp_iters = 2;
  int split_rounds = 3;
  std::string split_rule = "ml";
  bool no_corner_lookahead = false;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "Decoder mode: hard or soft")
        ->check(CLI::IsMember({"hard", "soft"}));
    app->add_option("--bp-iters", bp_iters, "Belief-propagation prior-update iterations")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--split-rounds", split_rounds, "Soft split-message rounds")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--split-rule", split_rule, "Split decision rule: ml or sampled")
        ->check(CLI::IsMember({"ml", "sampled"}));
    app->add_flag("--no-corner-lookahead", no_corner_lookahead,
                  "Disable the corner look-ahead prior update");
  }

  cc_decode_config build(uint64_t seed) const {
    cc_decode_config cfg;
    cc_decode_config_init(&cfg);
    cfg.mode = mode == "hard" ? CC_MODE_HARD : CC_MODE_SOFT;
    cfg.bp_iterations = bp_iters;
    cfg.split_rounds = split_rounds;
    cfg.split_rule = split_rule == "sampled" ? CC_SPLIT_SAMPLED : CC_SPLIT_MOST_LIKELY;
    cfg.corner_lookahead = no_corner_lookahead ? 0 : 1;
    cfg.seed = seed;
    return cfg;
  }
};

std::vector<double> parse_p_grid(const std::string& spec) {
  double lo, hi, step;
  char colon1, colon2;
  std::istringstream in(spec);
  if (!(in >> lo >> colon1 >> hi >> colon2 >> step) || colon1 != ':' ||
      colon2 != ':' || !in.eof())
    die("--p-grid must be LO:HI:STEP");
  if (step <= 0.0) die("--p-grid step must be positive");
  std::vector<double> ps;
  for (double p = lo; p <= hi + 1e-12; p += step) {
    if (p < 0.0 || p > 0.5) die("p values must lie in [0, 0.5]");
    ps.push_back(p);
  }
  if (ps.empty()) die("--p-grid produced no points");
  return ps;
}

int run_info(int m) {
  cc_code* code = make_code(m);
  json levels = json::array();
  for (int l = 0; l < cc_code_num_levels(code); ++l) {
    int side, nq, nc;
    check(cc_code_level_info(code, l, &side, &nq, &nc));
    levels.push_back({{"level", l}, {"L", side}, {"n", nq}, {"checks", nc}});
  }
  json out = {
      {"m", m},
      {"n", cc_code_num_qubits(code)},
      {"k", cc_code_num_logical(code)},
      {"d", cc_code_distance(code)},
      {"d_formula", "2^(m+2)"},
      {"levels", levels},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_decode(int m, double p, const std::string& error_str,
               const std::string& syndrome_str, uint64_t seed,
               const ConfigFlags& flags) {
  cc_code* code = make_code(m);
  const size_t n = cc_code_num_qubits(code);
  const size_t nc = cc_code_num_checks(code);

  std::vector<uint8_t> error;
  std::vector<uint8_t> syndrome(nc);
  if (!error_str.empty() && !syndrome_str.empty())
    die("--error and --syndrome are mutually exclusive");
  if (!error_str.empty()) {
    error = parse_bits(error_str, n, "--error");
  } else if (syndrome_str.empty()) {
    error.resize(n);
    check(cc_sample_error(code, p, seed, error.data()));
  }
  if (!error.empty())
    check(cc_syndrome(code, error.data(), syndrome.data()));
  else
    syndrome = parse_bits(syndrome_str, nc, "--syndrome");

  cc_decode_config cfg = flags.build(seed);
  std::vector<uint8_t> estimate(n);
  std::vector<uint32_t> split_counts(m > 0 ? m : 0);
  check(cc_decode(code, syndrome.data(), p, &cfg, estimate.data(),
                  split_counts.empty() ? nullptr : split_counts.data()));

  json out = {
      {"m", m},
      {"mode", flags.mode},
      {"syndrome", bits_to_string(syndrome)},
      {"estimate", bits_to_string(estimate)},
      {"split_counts", split_counts},
  };
  if (!error.empty()) {
    std::vector<uint8_t> residual(n);
    for (size_t i = 0; i < n; ++i) residual[i] = error[i] ^ estimate[i];
    int ok = 0;
    check(cc_is_stabilizer(code, residual.data(), &ok));
    out["error"] = bits_to_string(error);
    out["success"] = ok == 1;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_sweep(const std::vector<int>& ms, const std::string& grid,
              uint64_t trials, uint64_t seed, int workers,
              const std::string& out_path, const ConfigFlags& flags) {
  std::vector<double> ps = parse_p_grid(grid);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::trunc);
    if (!file) die("cannot open output file " + out_path);
    out = &file;
  }

  *out << "m,L,n,p,trials,failures,rate,ci_lo,ci_hi,mode,bp_iters,split_rounds,seed\n";
  for (int m : ms) {
    CodeHandle handle;
    check(cc_code_create(m, &handle.code));
    int side, nq, nc;
    check(cc_code_level_info(handle.code, m, &side, &nq, &nc));
    cc_decode_config cfg = flags.build(seed);
    for (double p : ps) {
      cc_batch_stats stats;
      check(cc_run_batch(handle.code, p, trials, seed, workers, &cfg, &stats));
      *out << m << ',' << side << ',' << nq << ',' << format_double(p) << ','
           << stats.trials << ',' << stats.failures << ','
           << format_double(stats.rate) << ',' << format_double(stats.ci_lo)
           << ',' << format_double(stats.ci_hi) << ',' << flags.mode << ','
           << flags.bp_iters << ',' << flags.split_rounds << ',' << seed << "\n";
    }
  }
  return 0;
}

int run_threshold(const std::string& in_path) {
  std::ifstream file(in_path);
  if (!file) die("cannot open input file " + in_path);

  std::string header;
  if (!std::getline(file, header)) die("empty CSV");
  std::vector<std::string> columns;
  {
    std::istringstream in(header);
    std::string col;
    while (std::getline(in, col, ',')) columns.push_back(col);
  }
  auto column = [&](const std::string& name) {
    for (size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return i;
    die("CSV is missing column '" + name + "'");
  };
  const size_t col_m = column("m"), col_p = column("p"), col_rate = column("rate"),
               col_trials = column("trials");

  std::vector<cc_curve_point> points;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() != columns.size()) die("malformed CSV row: " + line);
    cc_curve_point pt;
    pt.m = std::stoi(fields[col_m]);
    pt.p = std::stod(fields[col_p]);
    pt.rate = std::stod(fields[col_rate]);
    pt.trials = std::stoull(fields[col_trials]);
    points.push_back(pt);
  }
  if (points.empty()) die("CSV has no data rows");

  double p_th = 0.0, spread = 0.0;
  std::vector<cc_threshold_pair> pairs(16);
  size_t num_pairs = 0;
  check(cc_estimate_threshold(points.data(), points.size(), &p_th, &spread,
                              pairs.data(), pairs.size(), &num_pairs));
  json jpairs = json::array();
  for (size_t i = 0; i < num_pairs && i < pairs.size(); ++i)
    jpairs.push_back({{"m_low", pairs[i].m_low},
                      {"m_high", pairs[i].m_high},
                      {"crossing", pairs[i].crossing}});
  json out = {{"p_th", p_th}, {"spread", spread}, {"pairs", jpairs}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hexagonal color-code decoder and threshold simulator"};
  app.require_subcommand(1);

  int m = 1;
  double p = 0.05;
  uint64_t seed = 0;
  uint64_t trials = 1000;
  int workers = 0;
  std::string error_str, syndrome_str, grid, out_path, in_path;
  std::vector<int> ms;
  ConfigFlags decode_flags, sweep_flags;

  CLI::App* info = app.add_subcommand("info", "Print lattice parameters as JSON");
  info->add_option("--m", m, "Code size parameter")->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* decode = app.add_subcommand("decode", "Decode a single instance");
  decode->add_option("--m", m, "Code size parameter")->required()
      ->check(CLI::NonNegativeNumber);
  decode->add_option("--p", p, "Channel error rate")->required();
  decode->add_option("--error", error_str, "Injected error bitstring");
  decode->add_option("--syndrome", syndrome_str, "Measured syndrome bitstring");
  decode->add_option("--seed", seed, "Seed for sampling and split decisions");
  decode_flags.attach(decode);

  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo failure-rate sweep (CSV)");
  sweep->add_option("--m", ms, "Code sizes, comma separated")->required()
      ->delimiter(',');
  sweep->add_option("--p-grid", grid, "Error-rate grid LO:HI:STEP")->required();
  sweep->add_option("--trials", trials, "Trials per (m, p) point")->required();
  sweep->add_option("--seed", seed, "Master seed");
  sweep->add_option("--workers", workers, "Worker threads (0 = hardware)");
  sweep->add_option("--out", out_path, "Output CSV file ('-' for stdout)");
  sweep_flags.attach(sweep);

  CLI::App* threshold = app.add_subcommand("threshold", "Estimate the threshold from a sweep CSV");
  threshold->add_option("--in", in_path, "Input CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) return run_info(m);
  if (decode->parsed())
    return run_decode(m, p, error_str, syndrome_str, seed, decode_flags);
  if (sweep->parsed())
    return run_sweep(ms, grid, trials, seed, workers, out_path, sweep_flags);
  if (threshold->parsed()) return run_threshold(in_path);
  return 1;
}
