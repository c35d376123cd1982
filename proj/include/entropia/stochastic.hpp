// stochastic.hpp
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

// Stochastic measures over SDFAs: the Shannon entropy of the trace
// distribution, conjunctions, stochastic precision/recall and entropic
// relevance.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "entropia/automata.hpp"
#include "entropia/entropy.hpp"
#include "entropia/error.hpp"
#include "entropia/sdfa.hpp"

namespace entropia {

/// Frequency prefix tree of a log: each state's mass is split among the
/// traces that continue with each label and the traces that end there.
inline Sdfa log_to_sdfa(const EventLog& log) {
  if (log.empty()) throw Error(ErrorCode::kEmptyLog, "event log has no traces");
  Dfa tree;
  std::vector<std::uint64_t> reach{0}, ends{0};
  std::map<std::pair<State, Label>, std::uint64_t> continuing;
  for (const auto& [trace, count] : log.entries()) {
    State s = tree.initial();
    reach[s] += count;
    for (const auto& label : trace) {
      auto n = tree.next(s, label);
      if (!n) {
        State fresh = tree.add_state();
        tree.add_transition(s, label, fresh);
        reach.push_back(0);
        ends.push_back(0);
        n = fresh;
      }
      continuing[{s, label}] += count;
      s = *n;
      reach[s] += count;
    }
    ends[s] += count;
  }

  Sdfa sdfa;
  for (State s = 1; s < tree.size(); ++s) sdfa.add_state();
  for (State s = 0; s < tree.size(); ++s) {
    const double total = static_cast<double>(reach[s]);
    sdfa.set_termination(s, static_cast<double>(ends[s]) / total);
    for (const auto& [label, to] : tree.transitions(s)) {
      sdfa.add_transition(s, label, to, static_cast<double>(continuing.at({s, label})) / total);
    }
  }
  return sdfa;
}

struct FixedPointOptions {
  double tolerance = 1e-12;  // max-norm change, relative to max(1, |c|)
  std::size_t max_sweeps = 10'000'000;
};

struct VisitCounts {
  std::vector<double> counts;
  std::size_t sweeps = 0;
};

namespace detail {

/// States reachable from the initial state over positive-probability arcs.
inline std::vector<bool> reachable(const Sdfa& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& [label, arc] : a.transitions(s)) {
      if (arc.probability > 0.0 && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

/// Reachable states in breadth-first order, labels in map order. Sums run
/// in this order so equal reachable parts give equal floating point results.
inline std::vector<State> bfs_order(const Sdfa& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<State> order{a.initial()};
  seen[a.initial()] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& [label, arc] : a.transitions(order[k])) {
      if (arc.probability > 0.0 && !seen[arc.to]) {
        seen[arc.to] = true;
        order.push_back(arc.to);
      }
    }
  }
  return order;
}

/// States with a positive-probability path to termination.
inline std::vector<bool> can_terminate(const Sdfa& a) {
  std::vector<std::vector<State>> reverse(a.size());
  std::vector<bool> live(a.size(), false);
  std::vector<State> stack;
  for (State s = 0; s < a.size(); ++s) {
    for (const auto& [label, arc] : a.transitions(s)) {
      if (arc.probability > 0.0) reverse[arc.to].push_back(s);
    }
    if (a.termination(s) > 0.0) {
      live[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : reverse[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

inline double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace detail

/// Expected number of visits to each state, the fixed point of
/// c = e_initial + c P, by Jacobi sweeps from c = 0. Rows of P may be
/// substochastic.
inline VisitCounts expected_visits(const Sdfa& a, const FixedPointOptions& opts = {}) {
  auto reach = detail::reachable(a);
  auto live = detail::can_terminate(a);
  for (State s = 0; s < a.size(); ++s) {
    if (reach[s] && !live[s]) {
      throw Error(ErrorCode::kNonTerminatingSdfa, "state " + a.name(s) + " cannot reach termination");
    }
  }

  const auto order = detail::bfs_order(a);
  std::vector<double> c(a.size(), 0.0), next(a.size(), 0.0);
  for (std::size_t sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    std::fill(next.begin(), next.end(), 0.0);
    next[a.initial()] = 1.0;
    for (State s : order) {
      if (c[s] == 0.0) continue;
      for (const auto& [label, arc] : a.transitions(s)) next[arc.to] += c[s] * arc.probability;
    }
    double change = 0.0, scale = 1.0;
    for (State s : order) {
      change = std::max(change, std::abs(next[s] - c[s]));
      scale = std::max(scale, std::abs(next[s]));
    }
    c.swap(next);
    if (change < opts.tolerance * scale) return VisitCounts{std::move(c), sweep};
  }
  throw Error(ErrorCode::kNotConverged, "visit counts did not converge");
}

struct StochasticEntropy {
  double bits = 0.0;
  std::size_t sweeps = 0;
};

/// Shannon entropy of the trace distribution: expected visits times the
/// entropy of each state's choice among its labels and termination.
inline StochasticEntropy sdfa_entropy(const Sdfa& a, const FixedPointOptions& opts = {}) {
  VisitCounts visits = expected_visits(a, opts);
  double bits = 0.0;
  for (State s : detail::bfs_order(a)) {
    if (visits.counts[s] == 0.0) continue;
    double local = detail::plogp(a.termination(s));
    for (const auto& [label, arc] : a.transitions(s)) local += detail::plogp(arc.probability);
    bits += visits.counts[s] * local;
  }
  return StochasticEntropy{std::max(0.0, bits), visits.sweeps};
}

enum class ConjunctionMode {
  kRenormalized,  // surviving mass rescaled to 1 per state
  kSubstochastic  // probabilities kept as in the source
};

/// Product of `source` and `structure` restricted to shared labels and to
/// termination where both terminate. Probabilities come from `source`.
/// States that cannot reach termination in the product are dropped.
inline Sdfa conjunction(const Sdfa& source, const Sdfa& structure,
                        ConjunctionMode mode = ConjunctionMode::kRenormalized) {
  struct Node {
    State left, right;
    double termination = 0.0;
    std::vector<std::pair<Label, std::pair<std::size_t, double>>> out;
  };
  std::vector<Node> nodes;
  std::map<std::pair<State, State>, std::size_t> index;
  auto visit = [&](State l, State r) {
    auto [it, fresh] = index.emplace(std::pair{l, r}, nodes.size());
    if (fresh) nodes.push_back(Node{l, r, 0.0, {}});
    return it->second;
  };
  visit(source.initial(), structure.initial());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const State l = nodes[i].left, r = nodes[i].right;
    if (structure.termination(r) > 0.0) nodes[i].termination = source.termination(l);
    for (const auto& [label, arc] : source.transitions(l)) {
      if (!(arc.probability > 0.0)) continue;
      auto other = structure.next(r, label);
      if (!other || !(other->probability > 0.0)) continue;
      std::size_t to = visit(arc.to, other->to);
      nodes[i].out.push_back({label, {to, arc.probability}});
    }
  }

  std::vector<bool> live(nodes.size(), false);
  std::vector<std::vector<std::size_t>> reverse(nodes.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& [label, edge] : nodes[i].out) reverse[edge.first].push_back(i);
    if (nodes[i].termination > 0.0) {
      live[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t p : reverse[i]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  if (!live[0]) throw Error(ErrorCode::kEmptyConjunction, "no trace is possible in both automata");

  // Renumber live states breadth first.
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order{0}, renumber(nodes.size(), kUnset);
  renumber[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& [label, edge] : nodes[order[k]].out) {
      if (live[edge.first] && renumber[edge.first] == kUnset) {
        renumber[edge.first] = order.size();
        order.push_back(edge.first);
      }
    }
  }

  auto name_of = [&](std::size_t i) {
    return source.name(nodes[i].left) + "|" + structure.name(nodes[i].right);
  };
  Sdfa out(0.0, name_of(0));
  for (std::size_t k = 1; k < order.size(); ++k) out.add_state(0.0, name_of(order[k]));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Node& n = nodes[order[k]];
    double mass = n.termination;
    for (const auto& [label, edge] : n.out) {
      if (live[edge.first]) mass += edge.second;
    }
    const double scale = mode == ConjunctionMode::kRenormalized ? 1.0 / mass : 1.0;
    out.set_termination(static_cast<State>(k), n.termination * scale);
    for (const auto& [label, edge] : n.out) {
      if (!live[edge.first]) continue;
      out.add_transition(static_cast<State>(k), label, static_cast<State>(renumber[edge.first]),
                         edge.second * scale);
    }
  }
  return out;
}

struct StochasticOptions {
  ConjunctionMode conjunction = ConjunctionMode::kSubstochastic;
  FixedPointOptions fixed_point;
};

/// recall = H(rel restricted to ret) / H(rel) and
/// precision = H(ret restricted to rel) / H(ret).
inline PrecisionRecall stochastic_precision_recall(const Sdfa& rel, const Sdfa& ret,
                                                   const StochasticOptions& opts = {}) {
  const auto h_rel = sdfa_entropy(rel, opts.fixed_point);
  const auto h_ret = sdfa_entropy(ret, opts.fixed_point);
  PrecisionRecall out;
  out.counters.relevant_states = rel.size();
  out.counters.retrieved_states = ret.size();
  out.counters.iterations = h_rel.sweeps + h_ret.sweeps;

  Sdfa rel_part, ret_part;
  try {
    rel_part = conjunction(rel, ret, opts.conjunction);
    ret_part = conjunction(ret, rel, opts.conjunction);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyConjunction) throw;
    return out;
  }
  const auto h_rel_part = sdfa_entropy(rel_part, opts.fixed_point);
  const auto h_ret_part = sdfa_entropy(ret_part, opts.fixed_point);
  out.counters.shared_states = rel_part.size();
  out.counters.iterations += h_rel_part.sweeps + h_ret_part.sweeps;

  auto ratio = [](double part, double whole) { return whole == 0.0 ? 1.0 : part / whole; };
  out.recall = ratio(h_rel_part.bits, h_rel.bits);
  out.precision = ratio(h_ret_part.bits, h_ret.bits);
  return out;
}

/// Probability that `a` generates exactly `trace`.
inline double trace_probability(const Sdfa& a, const Trace& trace) {
  State s = a.initial();
  double p = 1.0;
  for (const auto& label : trace) {
    auto arc = a.next(s, label);
    if (!arc) return 0.0;
    p *= arc->probability;
    s = arc->to;
  }
  return p * a.termination(s);
}

struct RelevanceValue {
  double bits = 0.0;
  double selector_bits = 0.0;
  double avg_trace_bits = 0.0;
  double fitting_ratio = 0.0;
};

/// Average cost in bits of encoding one trace instance of `log`: a binary
/// selector for fitting vs. non-fitting traces, then -log2 p(t) under the
/// model for fitting traces or a uniform code over the log's labels plus an
/// end marker for the others.
inline RelevanceValue entropic_relevance(const EventLog& log, const Sdfa& model) {
  if (log.empty()) throw Error(ErrorCode::kEmptyLog, "event log has no traces");
  const double background = std::log2(static_cast<double>(log.alphabet().size()) + 1.0);
  const double total = static_cast<double>(log.total());

  std::uint64_t fitting = 0;
  double cost = 0.0;
  for (const auto& [trace, count] : log.entries()) {
    const double p = trace_probability(model, trace);
    double bits;
    if (p > 0.0) {
      fitting += count;
      bits = -std::log2(p);
    } else {
      bits = static_cast<double>(trace.size() + 1) * background;
    }
    cost += static_cast<double>(count) * bits;
  }

  RelevanceValue out;
  out.fitting_ratio = static_cast<double>(fitting) / total;
  out.selector_bits = detail::plogp(out.fitting_ratio) + detail::plogp(1.0 - out.fitting_ratio);
  out.avg_trace_bits = cost / total;
  out.bits = out.selector_bits + out.avg_trace_bits;
  return out;
}

}  // namespace entropia
