// oracles.hpp
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

// Brute-force reference computations and random instance generators used by
// the unit and acceptance suites. Nothing here calls the construction being
// checked: words are enumerated, automata are run directly, nets are
// searched, and trace distributions are expanded.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "entropia/entropia.hpp"

#ifndef ENTROPIA_DATA_DIR
#define ENTROPIA_DATA_DIR "data"
#endif

namespace oracle {

using entropia::Dfa;
using entropia::EventLog;
using entropia::Label;
using entropia::Nfa;
using entropia::PetriNet;
using entropia::Sdfa;
using entropia::State;
using entropia::Trace;

inline std::string data_path(const std::string& name) { return std::string(ENTROPIA_DATA_DIR) + "/" + name; }

template <typename T>
T load(const std::string& name) {
  return std::get<T>(entropia::load_artifact(data_path(name)).content);
}

inline Trace word(const std::string& letters) {
  Trace t;
  for (char c : letters) t.emplace_back(1, c);
  return t;
}

inline std::set<Trace> words(std::initializer_list<const char*> list) {
  std::set<Trace> out;
  for (const char* w : list) out.insert(word(w));
  return out;
}

inline EventLog log_of(std::initializer_list<const char*> list) {
  EventLog log;
  for (const char* w : list) log.add(word(w));
  return log;
}

/// All words over `alphabet` of length <= max_len.
inline std::vector<Trace> all_words(const std::vector<Label>& alphabet, std::size_t max_len) {
  std::vector<Trace> out{Trace{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& a : alphabet) {
        Trace w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

/// The accepted words of length <= max_len.
inline std::set<Trace> language(const Dfa& a, const std::vector<Label>& alphabet, std::size_t max_len) {
  std::set<Trace> out;
  for (auto& w : all_words(alphabet, max_len)) {
    if (a.accepts(w)) out.insert(std::move(w));
  }
  return out;
}

/// NFA membership by backtracking over (state, position), following silent
/// edges without revisiting a configuration.
inline bool nfa_accepts(const Nfa& n, const Trace& w) {
  std::set<std::pair<State, std::size_t>> seen;
  std::function<bool(State, std::size_t)> go = [&](State s, std::size_t pos) {
    if (!seen.insert({s, pos}).second) return false;
    if (pos == w.size() && n.accepting(s)) return true;
    for (const auto& e : n.edges(s)) {
      if (!e.label) {
        if (go(e.to, pos)) return true;
      } else if (pos < w.size() && *e.label == w[pos]) {
        if (go(e.to, pos + 1)) return true;
      }
    }
    return false;
  };
  return go(n.initial(), 0);
}

/// Words obtained from `w` by deleting at most `k` symbols.
inline std::set<Trace> deletions(const Trace& w, std::size_t k) {
  std::set<Trace> out;
  const std::size_t n = w.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    Trace sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) sub.push_back(w[i]);
    }
    out.insert(std::move(sub));
  }
  return out;
}

inline std::set<Trace> deletion_closure(const std::set<Trace>& lang, std::size_t k) {
  std::set<Trace> out;
  for (const auto& w : lang) {
    auto d = deletions(w, k);
    out.insert(d.begin(), d.end());
  }
  return out;
}

/// log2(C(n)) / n where C(n) counts the words of length n read from the
/// initial state of the short-circuited automaton (labels plus one fresh
/// symbol from each accepting state back to the initial state). Counts are
/// kept in log scale.
inline double growth_rate_estimate(const Dfa& a, std::size_t n) {
  std::vector<double> v(a.size(), 0.0);
  v[a.initial()] = 1.0;
  double log_scale = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next(a.size(), 0.0);
    for (State s = 0; s < a.size(); ++s) {
      if (v[s] == 0.0) continue;
      for (const auto& [label, to] : a.transitions(s)) next[to] += v[s];
      if (a.accepting(s)) next[a.initial()] += v[s];
    }
    double peak = *std::max_element(next.begin(), next.end());
    if (peak == 0.0) return 0.0;
    for (auto& x : next) x /= peak;
    log_scale += std::log2(peak);
    v.swap(next);
  }
  double total = 0.0;
  for (double x : v) total += x;
  return (log_scale + std::log2(total)) / static_cast<double>(n);
}

/// Trace-level Shannon entropy -sum p(t) log2 p(t), by expanding prefixes
/// one length at a time until the mass of the unfinished prefixes drops
/// below `residual`. Prefixes that end in the same state after using the
/// same multiset of arcs have equal probability and equal continuations, so
/// they are expanded once with a multiplicity.
struct EnumeratedEntropy {
  double bits = 0.0;
  double residual = 0.0;
  std::size_t expanded = 0;  // groups
  bool complete = false;
};

inline EnumeratedEntropy enumerate_entropy(const Sdfa& a, double residual, std::size_t max_expansions) {
  struct ArcRef {
    State to;
    double p;
  };
  std::vector<std::vector<std::pair<std::size_t, ArcRef>>> arcs(a.size());
  std::vector<double> arc_p;
  for (State s = 0; s < a.size(); ++s) {
    for (const auto& [label, arc] : a.transitions(s)) {
      if (arc.probability <= 0.0) continue;
      arcs[s].push_back({arc_p.size(), {arc.to, arc.probability}});
      arc_p.push_back(arc.probability);
    }
  }
  using Key = std::pair<State, std::vector<std::uint16_t>>;
  auto mass_of = [&](const std::vector<std::uint16_t>& used) {
    double m = 1.0;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i]) m *= std::pow(arc_p[i], used[i]);
    }
    return m;
  };

  EnumeratedEntropy out;
  std::map<Key, double> level{{Key{a.initial(), std::vector<std::uint16_t>(arc_p.size(), 0)}, 1.0}};
  while (!level.empty()) {
    double pending = 0.0;
    for (const auto& [key, count] : level) pending += count * mass_of(key.second);
    out.residual = pending;
    if (pending < residual) {
      out.complete = true;
      return out;
    }
    if (out.expanded >= max_expansions) return out;
    std::map<Key, double> next;
    for (const auto& [key, count] : level) {
      ++out.expanded;
      const double m = mass_of(key.second);
      const double stop = m * a.termination(key.first);
      if (stop > 0.0) out.bits -= count * stop * std::log2(stop);
      for (const auto& [index, arc] : arcs[key.first]) {
        Key child{arc.to, key.second};
        ++child.second[index];
        next[child] += count;
      }
    }
    level.swap(next);
  }
  out.residual = 0.0;
  out.complete = true;
  return out;
}

/// Probability of every trace with probability >= floor, by expansion.
inline std::map<Trace, double> trace_distribution(const Sdfa& a, double floor) {
  std::map<Trace, double> out;
  std::function<void(State, Trace&, double)> go = [&](State s, Trace& prefix, double mass) {
    if (mass < floor) return;
    if (a.termination(s) > 0.0) out[prefix] += mass * a.termination(s);
    for (const auto& [label, arc] : a.transitions(s)) {
      prefix.push_back(label);
      go(arc.to, prefix, mass * arc.probability);
      prefix.pop_back();
    }
  };
  Trace prefix;
  go(a.initial(), prefix, 1.0);
  return out;
}

// ---------------------------------------------------------------------------
// Petri nets

/// Visible-label sequences of length <= max_len leading to an accepting
/// marking, by depth-first search over firing sequences. Silent firings
/// count toward `max_depth`.
inline std::set<Trace> net_language(const PetriNet& net, std::size_t max_len, std::size_t max_depth) {
  auto accepting = [&](const entropia::Marking& m) {
    if (!net.final_markings().empty()) {
      return std::find(net.final_markings().begin(), net.final_markings().end(), m) != net.final_markings().end();
    }
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (net.enabled(m, t)) return false;
    }
    return true;
  };
  std::set<Trace> out;
  std::set<std::pair<entropia::Marking, Trace>> seen;
  std::function<void(const entropia::Marking&, Trace&, std::size_t)> go = [&](const entropia::Marking& m, Trace& w,
                                                                            std::size_t depth) {
    if (!seen.insert({m, w}).second) return;
    if (accepting(m)) out.insert(w);
    if (depth == max_depth) return;
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (!net.enabled(m, t)) continue;
      const auto& label = net.transitions()[t].label;
      if (label && w.size() == max_len) continue;
      auto next = net.fire(m, t);
      if (label) w.push_back(*label);
      go(next, w, depth + 1);
      if (label) w.pop_back();
    }
  };
  Trace w;
  go(net.initial_marking(), w, 0);
  return out;
}

/// Plain breadth-first exploration; true if it finishes within `cap`
/// markings.
inline bool explores_within(const PetriNet& net, std::size_t cap) {
  std::set<entropia::Marking> seen{net.initial_marking()};
  std::vector<entropia::Marking> frontier{net.initial_marking()};
  while (!frontier.empty()) {
    std::vector<entropia::Marking> next_frontier;
    for (const auto& m : frontier) {
      for (std::size_t t = 0; t < net.transitions().size(); ++t) {
        if (!net.enabled(m, t)) continue;
        auto n = net.fire(m, t);
        if (seen.insert(n).second) {
          if (seen.size() > cap) return false;
          next_frontier.push_back(std::move(n));
        }
      }
    }
    frontier.swap(next_frontier);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random instances

inline std::vector<Label> alphabet(std::size_t k) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

/// Random DFA with up to `max_states` states over up to `max_alphabet`
/// labels, trimmed; retried until its language is non-empty.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, std::size_t max_alphabet, double edge_p = 0.45) {
  for (;;) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
    auto sigma = alphabet(std::uniform_int_distribution<std::size_t>(1, max_alphabet)(rng));
    std::bernoulli_distribution edge(edge_p), acc(0.35);
    std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
    Dfa d;
    for (std::size_t i = 1; i < n; ++i) d.add_state();
    for (State s = 0; s < n; ++s) {
      d.set_accepting(s, acc(rng));
      for (const auto& a : sigma) {
        if (edge(rng)) d.add_transition(s, a, target(rng));
      }
    }
    Dfa t = entropia::trim(d);
    if (t.has_accepting_state()) return t;
  }
}

inline EventLog random_log(std::mt19937_64& rng, std::size_t max_traces, std::size_t max_len, std::size_t k) {
  auto sigma = alphabet(k);
  EventLog log;
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_traces)(rng);
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, k - 1), count(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Trace t;
    std::size_t l = len(rng);
    for (std::size_t j = 0; j < l; ++j) t.push_back(sigma[pick(rng)]);
    log.add(t, count(rng));
  }
  return log;
}

/// Random SDFA in which every state terminates with probability at least
/// `min_stop`, so it terminates almost surely.
inline Sdfa random_sdfa(std::mt19937_64& rng, std::size_t max_states, std::size_t max_alphabet, double min_stop) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  auto sigma = alphabet(std::uniform_int_distribution<std::size_t>(1, max_alphabet)(rng));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::bernoulli_distribution edge(0.6);
  Sdfa a;
  for (std::size_t i = 1; i < n; ++i) a.add_state();
  for (State s = 0; s < n; ++s) {
    std::vector<std::pair<Label, double>> weights;
    for (const auto& l : sigma) {
      if (edge(rng)) weights.emplace_back(l, 0.05 + unit(rng));
    }
    double stop = min_stop + (1.0 - min_stop) * unit(rng);
    if (weights.empty()) stop = 1.0;
    double total = 0.0;
    for (const auto& [l, w] : weights) total += w;
    a.set_termination(s, stop);
    double assigned = stop;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      double p = (1.0 - stop) * weights[i].second / total;
      if (i + 1 == weights.size()) p = 1.0 - assigned;
      assigned += p;
      a.add_transition(s, weights[i].first, target(rng), p);
    }
  }
  return a;
}

/// Random net with up to `max_places` places. Arcs are sparse, so some nets
/// are token generators and others conserve or consume tokens.
inline PetriNet random_net(std::mt19937_64& rng, std::size_t max_places, std::size_t max_transitions,
                           bool silent = false) {
  std::size_t np = std::uniform_int_distribution<std::size_t>(1, max_places)(rng);
  std::size_t nt = std::uniform_int_distribution<std::size_t>(0, max_transitions)(rng);
  std::bernoulli_distribution in_arc(0.35), out_arc(0.3);
  std::uniform_int_distribution<std::uint32_t> tokens(0, 2);
  std::uniform_int_distribution<std::size_t> label(0, silent ? 3 : 2);
  PetriNet net;
  for (std::size_t p = 0; p < np; ++p) net.add_place("p" + std::to_string(p), tokens(rng));
  for (std::size_t t = 0; t < nt; ++t) {
    std::size_t l = label(rng);
    net.add_transition("t" + std::to_string(t),
                       l == 3 ? std::nullopt : std::optional<Label>(Label(1, static_cast<char>('a' + l))));
    for (std::size_t p = 0; p < np; ++p) {
      if (in_arc(rng)) net.add_arc("p" + std::to_string(p), "t" + std::to_string(t));
      if (out_arc(rng)) net.add_arc("t" + std::to_string(t), "p" + std::to_string(p));
    }
  }
  return net;
}

// ---------------------------------------------------------------------------
// Structural comparison

/// Isomorphism of the parts reachable from the initial states, matching
/// states by simultaneous traversal; total state counts must agree.
inline bool isomorphic(const Sdfa& x, const Sdfa& y) {
  if (x.size() != y.size()) return false;
  std::map<State, State> map{{x.initial(), y.initial()}};
  std::vector<State> stack{x.initial()};
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    State t = map.at(s);
    if (x.termination(s) != y.termination(t)) return false;
    if (x.transitions(s).size() != y.transitions(t).size()) return false;
    for (const auto& [label, arc] : x.transitions(s)) {
      auto other = y.next(t, label);
      if (!other || other->probability != arc.probability) return false;
      auto [it, fresh] = map.emplace(arc.to, other->to);
      if (fresh) {
        stack.push_back(arc.to);
      } else if (it->second != other->to) {
        return false;
      }
    }
  }
  return true;
}

// Structural identity of two nets with the same node ids.
inline bool same_net(const PetriNet& x, const PetriNet& y) {
  if (x.places().size() != y.places().size() || x.transitions().size() != y.transitions().size()) return false;
  for (std::size_t i = 0; i < x.places().size(); ++i) {
    auto j = y.place_index(x.places()[i].id);
    if (!j || x.initial_marking().tokens[i] != y.initial_marking().tokens[*j]) return false;
  }
  for (std::size_t i = 0; i < x.transitions().size(); ++i) {
    auto j = y.transition_index(x.transitions()[i].id);
    if (!j || x.transitions()[i].label != y.transitions()[*j].label) return false;
    if (x.pre(i).size() != y.pre(*j).size() || x.post(i).size() != y.post(*j).size()) return false;
    for (const auto& [p, w] : x.pre(i)) {
      auto q = *y.place_index(x.places()[p].id);
      bool found = false;
      for (const auto& [p2, w2] : y.pre(*j)) found |= (p2 == q && w2 == w);
      if (!found) return false;
    }
    for (const auto& [p, w] : x.post(i)) {
      auto q = *y.place_index(x.places()[p].id);
      bool found = false;
      for (const auto& [p2, w2] : y.post(*j)) found |= (p2 == q && w2 == w);
      if (!found) return false;
    }
  }
  std::set<std::map<std::string, std::uint32_t>> fx, fy;
  auto named = [](const PetriNet& n, const entropia::Marking& m) {
    std::map<std::string, std::uint32_t> out;
    for (std::size_t i = 0; i < m.tokens.size(); ++i) {
      if (m.tokens[i]) out[n.places()[i].id] = m.tokens[i];
    }
    return out;
  };
  for (const auto& m : x.final_markings()) fx.insert(named(x, m));
  for (const auto& m : y.final_markings()) fy.insert(named(y, m));
  return fx == fy;
}

}  // namespace oracle
