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

#include "montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace colorcode {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over the (master, index) counter.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

BitVector sample_error(std::size_t n, double p, std::mt19937_64& rng) {
  BitVector e(n);
  if (p <= 0.0) return e;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(rng) < p) e.set(i, true);
  return e;
}

TrialRecord run_trial(const Decoder& decoder, double p,
                      const DecodeConfig& config, std::uint64_t trial_seed) {
  const LatticeHierarchy& hier = decoder.hierarchy();
  std::mt19937_64 rng(trial_seed);
  BitVector error = sample_error(hier.top().num_qubits(), p, rng);
  BitVector syndrome = hier.syndrome_of(hier.m(), error);

  DecodeConfig cfg = config;
  cfg.seed = trial_seed;
  DecodeResult result = decoder.decode(syndrome, p, cfg);

  TrialRecord record;
  record.m = hier.m();
  record.p = p;
  record.seed = trial_seed;
  record.error_weight = static_cast<int>(error.weight());
  record.success = hier.stabilizer_reducer().contains(error ^ result.estimate);
  return record;
}

BatchStats run_batch(const Decoder& decoder, double p, std::uint64_t trials,
                     std::uint64_t master_seed, int workers,
                     const DecodeConfig& config) {
  if (trials == 0) throw std::invalid_argument("run_batch: trials must be >= 1");
  unsigned n_workers = workers > 0
                           ? static_cast<unsigned>(workers)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<std::uint64_t>(n_workers, trials);

  std::vector<std::uint64_t> failures(n_workers, 0);
  auto work = [&](unsigned w) {
    std::uint64_t count = 0;
    for (std::uint64_t t = w; t < trials; t += n_workers) {
      if (!run_trial(decoder, p, config, derive_seed(master_seed, t)).success)
        ++count;
    }
    failures[w] = count;
  };

  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  BatchStats stats;
  stats.trials = trials;
  for (std::uint64_t f : failures) stats.failures += f;
  stats.rate = static_cast<double>(stats.failures) / static_cast<double>(trials);
  auto [lo, hi] = wilson_interval(stats.failures, trials);
  stats.ci_lo = lo;
  stats.ci_hi = hi;
  return stats;
}

std::pair<double, double> wilson_interval(std::uint64_t failures,
                                          std::uint64_t trials, double z) {
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(failures) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double margin =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - margin), std::min(1.0, center + margin)};
}

namespace {

double log_rate(const CurvePoint& pt) {
  // Zero-failure points get a half-count floor so the log is defined.
  double rate = pt.rate;
  if (rate <= 0.0) rate = 0.5 / std::max<std::uint64_t>(pt.trials, 1);
  return std::log(rate);
}

double pair_crossing(const Curve& a, const Curve& b) {
  std::vector<double> ps, diffs;
  for (const CurvePoint& pa : a.points) {
    auto it = std::find_if(b.points.begin(), b.points.end(), [&](const CurvePoint& pb) {
      return std::abs(pb.p - pa.p) < 1e-12;
    });
    if (it == b.points.end()) continue;
    ps.push_back(pa.p);
    diffs.push_back(log_rate(pa) - log_rate(*it));
  }
  if (ps.size() < 2)
    throw std::runtime_error("no crossing: curves share fewer than 2 points");
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    if (diffs[i] == 0.0 && diffs[i + 1] == 0.0) continue;  // identical segment
    if (diffs[i] == 0.0) return ps[i];
    if (diffs[i] * diffs[i + 1] < 0.0)
      return ps[i] + (ps[i + 1] - ps[i]) * diffs[i] / (diffs[i] - diffs[i + 1]);
  }
  if (diffs.back() == 0.0 && diffs.front() != 0.0) return ps.back();
  throw std::runtime_error("no crossing within the sampled p range");
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<Curve>& curves) {
  if (curves.size() < 2)
    throw std::invalid_argument("estimate_threshold: need at least 2 sizes");
  std::vector<Curve> sorted = curves;
  std::sort(sorted.begin(), sorted.end(),
            [](const Curve& a, const Curve& b) { return a.m < b.m; });

  ThresholdEstimate est;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    PairCrossing pc;
    pc.m_low = sorted[i].m;
    pc.m_high = sorted[i + 1].m;
    pc.crossing = pair_crossing(sorted[i], sorted[i + 1]);
    est.pairs.push_back(pc);
    sum += pc.crossing;
  }
  est.p_th = sum / static_cast<double>(est.pairs.size());
  for (const PairCrossing& a : est.pairs)
    for (const PairCrossing& b : est.pairs)
      est.spread = std::max(est.spread, std::abs(a.crossing - b.crossing));
  return est;
}

}  // namespace colorcode
