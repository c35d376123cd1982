// entropy.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The entropia-cpp Authors.

// Non-stochastic measures. The magnitude of a language is read off the
// Perron root of its short-circuited automaton; precision and recall are
// quotients of the magnitudes of the shared and the compared languages.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "entropia/automata.hpp"
#include "entropia/count_matrix.hpp"
#include "entropia/error.hpp"

namespace entropia {

struct SpectralOptions {
  double tolerance = 1e-9;  // relative
  std::size_t max_iterations = 1'000'000;
};

struct SpectralResult {
  double radius = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

/// Strongly connected components, iterative Tarjan. Components come out in
/// reverse topological order; members are in discovery order.
inline std::vector<std::vector<std::size_t>> strongly_connected_components(const CountMatrix& m) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = m.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& row = m.row(f.node);
      if (f.next_edge < row.size()) {
        std::size_t w = row[f.next_edge++].first;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      std::size_t v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::reverse(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

/// Perron root of an irreducible block with at least two nodes. Power
/// iteration on (B + I) from the all-ones vector; the Collatz-Wielandt
/// quotients min/max (Bx)_i / x_i bracket the root and decide convergence.
inline SpectralResult irreducible_radius(const CountMatrix& m,
                                         const std::vector<std::size_t>& members,
                                         const std::vector<std::size_t>& local,
                                         const SpectralOptions& opts) {
  const std::size_t k = members.size();
  std::vector<double> x(k, 1.0), y(k, 0.0);
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (const auto& [col, count] : m.row(members[i])) {
        std::size_t j = local[col];
        if (j < k && members[j] == col) acc += static_cast<double>(count) * x[j];
      }
      y[i] = acc;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      peak = std::max(peak, y[i]);
    }
    if (lo > 1.0 && hi - lo <= opts.tolerance * (lo - 1.0)) {
      return {0.5 * (lo + hi) - 1.0, it};
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / peak;
  }
  throw Error(ErrorCode::kNotConverged, "power iteration did not converge");
}

}  // namespace detail

/// Spectral radius of a nonnegative square matrix. The radius of a matrix
/// is the largest radius over its strongly connected blocks; a one-node
/// block contributes its self-loop count.
inline SpectralResult spectral_radius_detailed(const CountMatrix& m, const SpectralOptions& opts = {}) {
  if (!(opts.tolerance > 0.0)) throw Error(ErrorCode::kNotConverged, "tolerance must be positive");
  SpectralResult best;
  std::vector<std::size_t> local(m.size(), std::numeric_limits<std::size_t>::max());
  for (const auto& component : detail::strongly_connected_components(m)) {
    if (component.size() == 1) {
      double loops = static_cast<double>(m.at(component[0], component[0]));
      best.radius = std::max(best.radius, loops);
      continue;
    }
    for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = i;
    SpectralResult r = detail::irreducible_radius(m, component, local, opts);
    best.radius = std::max(best.radius, r.radius);
    best.iterations += r.iterations;
  }
  return best;
}

inline double spectral_radius(const CountMatrix& m, double tolerance = 1e-9) {
  return spectral_radius_detailed(m, SpectralOptions{tolerance}).radius;
}

struct EntropyValue {
  double bits_per_symbol = 0.0;
  bool empty_language = false;
};

/// Magnitude of a language: the Perron root of its short-circuited automaton
/// and its base-2 logarithm, the topological entropy.
struct LanguageMagnitude {
  double perron_root = 0.0;
  double bits = 0.0;
  bool empty_language = true;
  std::size_t states = 0;
  std::size_t iterations = 0;
};

inline LanguageMagnitude language_magnitude(const Dfa& a, const SpectralOptions& opts = {}) {
  Dfa useful = trim(a);
  LanguageMagnitude out;
  if (!useful.has_accepting_state()) return out;
  auto r = spectral_radius_detailed(short_circuit(useful).adjacency, opts);
  out.perron_root = r.radius;
  out.bits = std::max(0.0, std::log2(r.radius));
  out.empty_language = false;
  out.states = useful.size();
  out.iterations = r.iterations;
  return out;
}

inline EntropyValue topological_entropy(const Dfa& a, const SpectralOptions& opts = {}) {
  auto m = language_magnitude(a, opts);
  return EntropyValue{m.bits, m.empty_language};
}

/// What the precision and recall quotients divide.
enum class QuotientMagnitude {
  kPerronRoot,  // m(L) = Perron root of the short-circuited automaton
  kEntropy,     // m(L) = log2 of that root
};

struct MeasureOptions {
  QuotientMagnitude magnitude = QuotientMagnitude::kPerronRoot;
  SpectralOptions spectral;
  std::size_t max_states = kDefaultStateCap;
};

struct MeasureCounters {
  std::size_t relevant_states = 0;
  std::size_t retrieved_states = 0;
  std::size_t shared_states = 0;
  std::size_t iterations = 0;
};

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  MeasureCounters counters;
};

namespace detail {

// Degenerate cases: an empty operand only meets an empty shared language
// (1); an empty shared language against non-empty behavior scores 0; a
// zero-entropy operand with non-empty shared behavior scores 1.
inline double quotient(const LanguageMagnitude& shared, const LanguageMagnitude& whole,
                       QuotientMagnitude mode) {
  if (whole.empty_language) return 1.0;
  if (shared.empty_language) return 0.0;
  if (mode == QuotientMagnitude::kPerronRoot) return shared.perron_root / whole.perron_root;
  if (whole.bits == 0.0) return 1.0;
  return shared.bits / whole.bits;
}

}  // namespace detail

inline PrecisionRecall exact_precision_recall(const Dfa& rel, const Dfa& ret,
                                              const MeasureOptions& opts = {}) {
  Dfa shared = product(rel, ret, opts.max_states);
  auto m_rel = language_magnitude(rel, opts.spectral);
  auto m_ret = language_magnitude(ret, opts.spectral);
  auto m_shared = language_magnitude(shared, opts.spectral);
  PrecisionRecall out;
  out.precision = detail::quotient(m_shared, m_ret, opts.magnitude);
  out.recall = detail::quotient(m_shared, m_rel, opts.magnitude);
  out.counters = {m_rel.states, m_ret.states, m_shared.states,
                  m_rel.iterations + m_ret.iterations + m_shared.iterations};
  return out;
}

inline PrecisionRecall partial_precision_recall(const Dfa& rel, const Dfa& ret,
                                                const MeasureOptions& opts = {}) {
  Dfa rel_closed = determinize(skip_closure(rel, SkipBudget::unbounded()), opts.max_states);
  Dfa ret_closed = determinize(skip_closure(ret, SkipBudget::unbounded()), opts.max_states);
  return exact_precision_recall(rel_closed, ret_closed, opts);
}

inline PrecisionRecall controlled_partial_precision_recall(const Dfa& rel, const Dfa& ret,
                                                           std::uint32_t rel_skips,
                                                           std::uint32_t ret_skips,
                                                           const MeasureOptions& opts = {}) {
  Dfa rel_closed = determinize(skip_closure(rel, SkipBudget::at_most(rel_skips)), opts.max_states);
  Dfa ret_closed = determinize(skip_closure(ret, SkipBudget::at_most(ret_skips)), opts.max_states);
  return exact_precision_recall(rel_closed, ret_closed, opts);
}

}  // namespace entropia
