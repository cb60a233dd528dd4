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

#include "messaging.hpp"

#include <stdexcept>

#include "cell.hpp"

namespace colorcode {

using cell::clamp_prob;

std::vector<double> bp_update(const std::vector<double>& priors,
                              const BinaryMatrix& h, const BitVector& syndrome,
                              int iterations) {
  std::vector<std::vector<int>> check_qubits(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h.get(r, c)) check_qubits[r].push_back(static_cast<int>(c));
  return bp_update(priors, check_qubits, syndrome, iterations);
}

std::vector<double> bp_update(const std::vector<double>& priors,
                              const std::vector<std::vector<int>>& check_qubits,
                              const BitVector& syndrome, int iterations) {
  if (iterations <= 0) return priors;
  const std::size_t num_checks = check_qubits.size();
  const std::size_t num_qubits = priors.size();

  // qubit -> incident (check, position) list.
  std::vector<std::vector<std::pair<int, int>>> qubit_edges(num_qubits);
  for (std::size_t c = 0; c < num_checks; ++c)
    for (std::size_t pos = 0; pos < check_qubits[c].size(); ++pos)
      qubit_edges[check_qubits[c][pos]].emplace_back(static_cast<int>(c),
                                                     static_cast<int>(pos));

  // q[c][pos]: qubit -> check message, probability the qubit is in error.
  std::vector<std::vector<double>> q(num_checks), r(num_checks);
  for (std::size_t c = 0; c < num_checks; ++c) {
    q[c].resize(check_qubits[c].size());
    r[c].resize(check_qubits[c].size());
    for (std::size_t pos = 0; pos < check_qubits[c].size(); ++pos)
      q[c][pos] = clamp_prob(priors[check_qubits[c][pos]]);
  }

  for (int it = 0; it < iterations; ++it) {
    for (std::size_t c = 0; c < num_checks; ++c) {
      const int sc = syndrome.get(c) ? 1 : 0;
      const std::size_t deg = check_qubits[c].size();
      for (std::size_t pos = 0; pos < deg; ++pos) {
        double prod = 1.0;
        for (std::size_t other = 0; other < deg; ++other)
          if (other != pos) prod *= 1.0 - 2.0 * q[c][other];
        double msg = sc ? 0.5 + 0.5 * prod : 0.5 - 0.5 * prod;
        r[c][pos] = clamp_prob(msg);
      }
    }
    if (it + 1 == iterations) break;
    for (std::size_t v = 0; v < num_qubits; ++v) {
      const auto& edges = qubit_edges[v];
      for (std::size_t i = 0; i < edges.size(); ++i) {
        double num = clamp_prob(priors[v]);
        double den = 1.0 - num;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (j == i) continue;
          double m = r[edges[j].first][edges[j].second];
          num *= m;
          den *= 1.0 - m;
        }
        q[edges[i].first][edges[i].second] = clamp_prob(num / (num + den));
      }
    }
  }

  std::vector<double> posterior(num_qubits);
  for (std::size_t v = 0; v < num_qubits; ++v) {
    double num = clamp_prob(priors[v]);
    double den = 1.0 - num;
    for (const auto& [c, pos] : qubit_edges[v]) {
      num *= r[c][pos];
      den *= 1.0 - r[c][pos];
    }
    posterior[v] = clamp_prob(num / (num + den));
  }
  return posterior;
}

std::vector<double> corner_lookahead(const std::vector<double>& priors,
                                     const LevelGeometry& g,
                                     const BitVector& syndrome) {
  std::vector<double> updated = priors;
  for (const CornerInfo& corner : g.corners) {
    const int s = syndrome.get(corner.check) ? 1 : 0;
    const auto& support = g.check_qubits[corner.check];
    for (int k = 0; k < 6; ++k) {
      const int qi = corner.qubit[k];
      double prod = 1.0;
      for (int q : support)
        if (q != qi) prod *= 1.0 - 2.0 * clamp_prob(priors[q]);
      double pe = s ? 0.5 + 0.5 * prod : 0.5 - 0.5 * prod;
      pe = clamp_prob(pe);
      double pi = clamp_prob(priors[qi]);
      updated[qi] = clamp_prob(pe * pi / (pe * pi + (1.0 - pe) * (1.0 - pi)));
    }
  }
  return updated;
}

std::vector<std::array<double, 3>> init_split_beliefs(
    const std::vector<double>& priors, const LevelGeometry& g) {
  std::vector<std::array<double, 3>> beliefs(g.cells.size());
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (int e = 0; e < 3; ++e) {
      double prod = 1.0;
      for (int k = 0; k < 4; ++k)
        if ((cell::kCheckSupport[e] >> k) & 1)
          prod *= 1.0 - 2.0 * clamp_prob(priors[g.cells[c].qubits[k]]);
      beliefs[c][e] = clamp_prob(0.5 - 0.5 * prod);
    }
  }
  return beliefs;
}

std::pair<double, double> consistency_update(double p_top, double p_low, int s) {
  double pt = clamp_prob(p_top);
  double pl = clamp_prob(p_low);
  double nt, nl;
  if (s == 0) {
    double d = pt * pl + (1.0 - pt) * (1.0 - pl);
    nt = pt * pl / d;
    nl = nt;
  } else {
    double dt = pt * (1.0 - pl) + (1.0 - pt) * pl;
    nt = pt * (1.0 - pl) / dt;
    nl = 1.0 - nt;
  }
  return {clamp_prob(nt), clamp_prob(nl)};
}

void enforce_consistency(BeliefState& state, const LevelGeometry& g,
                         const BitVector& syndrome) {
  for (const SharedEdge& e : g.edges) {
    double p0 = state.beliefs[e.cell[0]][e.local[0]];
    double p1 = state.beliefs[e.cell[1]][e.local[1]];
    auto [n0, n1] = consistency_update(p0, p1, syndrome.get(e.check) ? 1 : 0);
    state.beliefs[e.cell[0]][e.local[0]] = n0;
    state.beliefs[e.cell[1]][e.local[1]] = n1;
  }
}

void split_round(BeliefState& state, const LevelGeometry& g,
                 const BitVector& syndrome) {
  std::vector<std::array<double, 3>> next(state.beliefs.size());
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    std::array<double, 4> priors;
    for (int k = 0; k < 4; ++k) priors[k] = state.priors[g.cells[c].qubits[k]];
    std::array<double, 8> likelihood;
    for (std::uint8_t s = 0; s < 8; ++s)
      likelihood[s] = cell::split_likelihood(s, priors);
    for (int e = 0; e < 3; ++e) {
      const int a = e == 0 ? 1 : 0;
      const int b = e == 2 ? 1 : 2;
      const double qa = state.beliefs[c][a];
      const double qb = state.beliefs[c][b];
      double out = 0.0;
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
          std::uint8_t s1 = static_cast<std::uint8_t>((1 << e) | (sa << a) | (sb << b));
          std::uint8_t s0 = static_cast<std::uint8_t>(s1 & ~(1 << e));
          double ratio = likelihood[s1] / (likelihood[s1] + likelihood[s0]);
          out += ratio * (sa ? qa : 1.0 - qa) * (sb ? qb : 1.0 - qb);
        }
      }
      next[c][e] = clamp_prob(out);
    }
  }
  state.beliefs = std::move(next);
  enforce_consistency(state, g, syndrome);
}

std::vector<std::uint8_t> finalize_splits(const BeliefState& state,
                                          const LevelGeometry& g,
                                          const BitVector& syndrome,
                                          SplitRule rule,
                                          std::mt19937_64& rng) {
  std::vector<std::uint8_t> splits(g.cells.size(), 0);
  for (const SharedEdge& e : g.edges) {
    const int s = syndrome.get(e.check) ? 1 : 0;
    const double p_top = state.beliefs[e.cell[0]][e.local[0]];
    int top;
    if (rule == SplitRule::MostLikely) {
      top = p_top > 0.5 ? 1 : 0;
    } else {
      top = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p_top ? 1 : 0;
    }
    int low = s ^ top;
    if (top) splits[e.cell[0]] |= std::uint8_t{1} << e.local[0];
    if (low) splits[e.cell[1]] |= std::uint8_t{1} << e.local[1];
  }
  return splits;
}

}  // namespace colorcode
