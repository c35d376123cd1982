// automata.hpp
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

// Finite automata over activity labels and the language constructions the
// measures are built from: prefix-tree acceptors of logs, trimming, product,
// subset construction and skip closures.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entropia/count_matrix.hpp"
#include "entropia/error.hpp"

namespace entropia {

using Label = std::string;
using Trace = std::vector<Label>;
using State = std::uint32_t;

inline constexpr std::size_t kDefaultStateCap = 10'000'000;

/// Multiset of traces. Iteration order is the lexicographic order of traces,
/// so nothing downstream depends on the order traces were recorded in.
class EventLog {
 public:
  using Entries = std::map<Trace, std::uint64_t>;

  EventLog() = default;
  EventLog(std::initializer_list<std::pair<Trace, std::uint64_t>> entries) {
    for (const auto& [trace, count] : entries) add(trace, count);
  }

  void add(const Trace& trace, std::uint64_t count = 1) {
    if (count == 0) return;
    for (const auto& label : trace) {
      if (label.empty()) throw Error(ErrorCode::kParseError, "empty activity label");
    }
    entries_[trace] += count;
    total_ += count;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return entries_.size(); }

  std::uint64_t count(const Trace& trace) const {
    auto it = entries_.find(trace);
    return it == entries_.end() ? 0 : it->second;
  }

  std::set<Label> alphabet() const {
    std::set<Label> out;
    for (const auto& [trace, count] : entries_) out.insert(trace.begin(), trace.end());
    return out;
  }

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  Entries entries_;
  std::uint64_t total_ = 0;
};

/// Deterministic automaton. State 0 is always the initial state.
class Dfa {
 public:
  using Transitions = std::map<Label, State, std::less<>>;

  Dfa() : nodes_(1) {}

  /// Canonical automaton of the empty language: a lone non-accepting
  /// initial state.
  static Dfa empty_language() { return Dfa(); }

  State add_state(bool accepting = false) {
    nodes_.push_back(Node{accepting, {}});
    return static_cast<State>(nodes_.size() - 1);
  }

  void set_accepting(State s, bool accepting = true) { nodes_.at(s).accepting = accepting; }

  void add_transition(State from, const Label& label, State to) {
    check(from);
    check(to);
    auto [it, inserted] = nodes_[from].out.emplace(label, to);
    if (!inserted && it->second != to) {
      throw Error(ErrorCode::kInvalidAutomaton,
                  "second successor for label '" + label + "' breaks determinism");
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  State initial() const noexcept { return 0; }
  bool accepting(State s) const { return nodes_.at(s).accepting; }
  const Transitions& transitions(State s) const { return nodes_.at(s).out; }

  std::optional<State> next(State s, std::string_view label) const {
    const auto& out = nodes_.at(s).out;
    auto it = out.find(label);
    if (it == out.end()) return std::nullopt;
    return it->second;
  }

  bool accepts(const Trace& word) const {
    State s = initial();
    for (const auto& label : word) {
      auto n = next(s, label);
      if (!n) return false;
      s = *n;
    }
    return accepting(s);
  }

  bool has_accepting_state() const {
    for (const auto& n : nodes_) {
      if (n.accepting) return true;
    }
    return false;
  }

  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_) n += node.out.size();
    return n;
  }

  std::set<Label> alphabet() const {
    std::set<Label> out;
    for (const auto& node : nodes_) {
      for (const auto& [label, to] : node.out) out.insert(label);
    }
    return out;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  struct Node {
    bool accepting = false;
    Transitions out;
    friend bool operator==(const Node&, const Node&) = default;
  };

  void check(State s) const {
    if (s >= nodes_.size()) throw Error(ErrorCode::kInvalidAutomaton, "state out of range");
  }

  std::vector<Node> nodes_;
};

/// Nondeterministic automaton with silent edges (label == std::nullopt).
/// State 0 is the initial state.
class Nfa {
 public:
  struct Edge {
    std::optional<Label> label;
    State to;
  };

  Nfa() : nodes_(1) {}

  State add_state(bool accepting = false) {
    nodes_.push_back(Node{accepting, {}});
    return static_cast<State>(nodes_.size() - 1);
  }

  void set_accepting(State s, bool accepting = true) { nodes_.at(s).accepting = accepting; }

  void add_edge(State from, std::optional<Label> label, State to) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
      throw Error(ErrorCode::kInvalidAutomaton, "state out of range");
    }
    nodes_[from].out.push_back(Edge{std::move(label), to});
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  State initial() const noexcept { return 0; }
  bool accepting(State s) const { return nodes_.at(s).accepting; }
  const std::vector<Edge>& edges(State s) const { return nodes_.at(s).out; }

 private:
  struct Node {
    bool accepting = false;
    std::vector<Edge> out;
  };
  std::vector<Node> nodes_;
};

/// How many symbols a skip closure may delete from each word.
class SkipBudget {
 public:
  static constexpr SkipBudget unbounded() { return SkipBudget(kUnbounded); }
  static constexpr SkipBudget at_most(std::uint32_t k) { return SkipBudget(k); }

  constexpr bool is_unbounded() const noexcept { return limit_ == kUnbounded; }
  constexpr std::uint32_t limit() const noexcept { return limit_; }

 private:
  static constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit SkipBudget(std::uint32_t limit) : limit_(limit) {}
  std::uint32_t limit_;
};

/// Short-circuited transition graph: labeled transition counts of a trimmed
/// automaton plus one fresh-symbol edge from each accepting state back to
/// the initial state.
struct ShortCircuitGraph {
  CountMatrix adjacency;

  std::size_t node_count() const noexcept { return adjacency.size(); }
};

/// Prefix-tree acceptor of the distinct traces of `log`.
inline Dfa log_to_dfa(const EventLog& log) {
  if (log.empty()) throw Error(ErrorCode::kEmptyLog, "event log has no traces");
  Dfa dfa;
  for (const auto& [trace, count] : log.entries()) {
    State s = dfa.initial();
    for (const auto& label : trace) {
      auto n = dfa.next(s, label);
      if (!n) {
        State fresh = dfa.add_state();
        dfa.add_transition(s, label, fresh);
        n = fresh;
      }
      s = *n;
    }
    dfa.set_accepting(s);
  }
  return dfa;
}

/// Restricts `a` to states that are reachable from the initial state and can
/// reach an accepting state. States are renumbered in breadth-first order.
inline Dfa trim(const Dfa& a) {
  const std::size_t n = a.size();

  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s) {
    for (const auto& [label, to] : a.transitions(s)) reverse[to].push_back(s);
  }
  std::vector<bool> coreachable(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    if (a.accepting(s)) {
      coreachable[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : reverse[s]) {
      if (!coreachable[p]) {
        coreachable[p] = true;
        stack.push_back(p);
      }
    }
  }
  if (!coreachable[a.initial()]) return Dfa::empty_language();

  constexpr State kUnset = std::numeric_limits<State>::max();
  std::vector<State> renumber(n, kUnset);
  std::deque<State> queue{a.initial()};
  renumber[a.initial()] = 0;
  Dfa out;
  out.set_accepting(0, a.accepting(a.initial()));
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (const auto& [label, to] : a.transitions(s)) {
      if (!coreachable[to]) continue;
      if (renumber[to] == kUnset) {
        renumber[to] = out.add_state(a.accepting(to));
        queue.push_back(to);
      }
      out.add_transition(renumber[s], label, renumber[to]);
    }
  }
  return out;
}

/// Intersection automaton over reachable state pairs. Only labels present in
/// both operands synchronize.
inline Dfa product(const Dfa& a, const Dfa& b, std::size_t max_states = kDefaultStateCap) {
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  Dfa out;
  index.emplace(std::pair{a.initial(), b.initial()}, 0);
  out.set_accepting(0, a.accepting(a.initial()) && b.accepting(b.initial()));
  queue.emplace_back(a.initial(), b.initial());
  while (!queue.empty()) {
    auto pair = queue.front();
    queue.pop_front();
    State from = index.at(pair);
    for (const auto& [label, ta] : a.transitions(pair.first)) {
      auto tb = b.next(pair.second, label);
      if (!tb) continue;
      std::pair<State, State> target{ta, *tb};
      auto it = index.find(target);
      if (it == index.end()) {
        if (out.size() >= max_states) {
          throw Error(ErrorCode::kStateSpaceExceeded, "product automaton exceeds state cap");
        }
        State fresh = out.add_state(a.accepting(ta) && b.accepting(*tb));
        it = index.emplace(target, fresh).first;
        queue.push_back(target);
      }
      out.add_transition(from, label, it->second);
    }
  }
  return out;
}

namespace detail {

inline std::vector<State> silent_closure(const Nfa& n, std::vector<State> states) {
  std::set<State> seen(states.begin(), states.end());
  std::vector<State> stack(states.begin(), states.end());
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& e : n.edges(s)) {
      if (!e.label && seen.insert(e.to).second) stack.push_back(e.to);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Subset construction with silent-edge closure. A subset is identified by
/// its sorted member list. The result is trimmed.
inline Dfa determinize(const Nfa& n, std::size_t max_states = kDefaultStateCap) {
  auto any_accepting = [&n](const std::vector<State>& subset) {
    for (State s : subset) {
      if (n.accepting(s)) return true;
    }
    return false;
  };

  std::map<std::vector<State>, State> index;
  std::deque<std::vector<State>> queue;
  Dfa out;
  auto start = detail::silent_closure(n, {n.initial()});
  out.set_accepting(0, any_accepting(start));
  index.emplace(start, 0);
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    std::vector<State> subset = std::move(queue.front());
    queue.pop_front();
    State from = index.at(subset);

    std::map<Label, std::vector<State>> moves;
    for (State s : subset) {
      for (const auto& e : n.edges(s)) {
        if (e.label) moves[*e.label].push_back(e.to);
      }
    }
    for (auto& [label, targets] : moves) {
      auto closed = detail::silent_closure(n, std::move(targets));
      auto it = index.find(closed);
      if (it == index.end()) {
        if (out.size() >= max_states) {
          throw Error(ErrorCode::kStateSpaceExceeded, "subset construction exceeds state cap");
        }
        State fresh = out.add_state(any_accepting(closed));
        it = index.emplace(closed, fresh).first;
        queue.push_back(closed);
      }
      out.add_transition(from, label, it->second);
    }
  }
  return trim(out);
}

/// Automaton accepting every word obtained from a word of L(a) by deleting
/// symbols, at most `budget.limit()` of them unless the budget is unbounded.
inline Nfa skip_closure(const Dfa& a, SkipBudget budget) {
  Nfa out;
  if (budget.is_unbounded()) {
    for (State s = 1; s < a.size(); ++s) out.add_state();
    for (State s = 0; s < a.size(); ++s) {
      out.set_accepting(s, a.accepting(s));
      for (const auto& [label, to] : a.transitions(s)) {
        out.add_edge(s, label, to);
        out.add_edge(s, std::nullopt, to);
      }
    }
    return out;
  }

  // State (s, used) is numbered s * width + used.
  const std::size_t width = std::size_t{budget.limit()} + 1;
  for (std::size_t i = 1; i < a.size() * width; ++i) out.add_state();
  auto id = [width](State s, std::size_t used) { return static_cast<State>(s * width + used); };
  for (State s = 0; s < a.size(); ++s) {
    for (std::size_t used = 0; used < width; ++used) {
      out.set_accepting(id(s, used), a.accepting(s));
      for (const auto& [label, to] : a.transitions(s)) {
        out.add_edge(id(s, used), label, id(to, used));
        if (used + 1 < width) out.add_edge(id(s, used), std::nullopt, id(to, used + 1));
      }
    }
  }
  return out;
}

/// Adjacency counts of a trimmed automaton plus the accept -> initial edges.
/// An automaton without accepting states yields the 0-node graph.
inline ShortCircuitGraph short_circuit(const Dfa& a) {
  if (!a.has_accepting_state()) return ShortCircuitGraph{CountMatrix(0)};
  CountMatrix m(a.size());
  for (State s = 0; s < a.size(); ++s) {
    for (const auto& [label, to] : a.transitions(s)) m.add(s, to);
    if (a.accepting(s)) m.add(s, a.initial());
  }
  return ShortCircuitGraph{std::move(m)};
}

}  // namespace entropia
