// sdfa.hpp
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

#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "entropia/automata.hpp"
#include "entropia/error.hpp"

namespace entropia {

/// Stochastic deterministic finite automaton. Every state carries a
/// probability per outgoing label and a termination probability; state 0 is
/// the initial state. State names are kept for serialization only.
class Sdfa {
 public:
  struct Arc {
    State to;
    double probability;
    friend bool operator==(const Arc&, const Arc&) = default;
  };
  using Transitions = std::map<Label, Arc, std::less<>>;

  explicit Sdfa(double initial_termination = 0.0, std::string initial_name = "s0") {
    nodes_.push_back(Node{initial_termination, std::move(initial_name), {}});
  }

  State add_state(double termination = 0.0, std::string name = {}) {
    if (name.empty()) name = "s" + std::to_string(nodes_.size());
    nodes_.push_back(Node{termination, std::move(name), {}});
    return static_cast<State>(nodes_.size() - 1);
  }

  void set_termination(State s, double p) { nodes_.at(s).termination = p; }

  void add_transition(State from, const Label& label, State to, double probability) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
      throw Error(ErrorCode::kInvalidAutomaton, "state out of range");
    }
    if (!nodes_[from].out.emplace(label, Arc{to, probability}).second) {
      throw Error(ErrorCode::kDuplicateTransition,
                  "state " + nodes_[from].name + " has two transitions labeled '" + label + "'");
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  State initial() const noexcept { return 0; }
  double termination(State s) const { return nodes_.at(s).termination; }
  const Transitions& transitions(State s) const { return nodes_.at(s).out; }
  const std::string& name(State s) const { return nodes_.at(s).name; }

  std::optional<Arc> next(State s, std::string_view label) const {
    const auto& out = nodes_.at(s).out;
    auto it = out.find(label);
    if (it == out.end()) return std::nullopt;
    return it->second;
  }

  /// Termination plus the probabilities of all outgoing transitions.
  double total_mass(State s) const {
    double sum = nodes_.at(s).termination;
    for (const auto& [label, arc] : nodes_[s].out) sum += arc.probability;
    return sum;
  }

  /// Checks that every probability lies in [0, 1] and that every state's
  /// mass is 1 within `tolerance`.
  void validate(double tolerance = 1e-9) const {
    for (State s = 0; s < nodes_.size(); ++s) {
      auto bad = [](double p) { return !(p >= 0.0 && p <= 1.0); };
      if (bad(nodes_[s].termination)) {
        throw Error(ErrorCode::kStochasticSumViolation,
                    "termination probability of " + nodes_[s].name + " outside [0, 1]");
      }
      for (const auto& [label, arc] : nodes_[s].out) {
        if (bad(arc.probability)) {
          throw Error(ErrorCode::kStochasticSumViolation,
                      "probability of " + nodes_[s].name + " --" + label + "--> outside [0, 1]");
        }
      }
      double mass = total_mass(s);
      if (std::abs(mass - 1.0) > tolerance) {
        throw Error(ErrorCode::kStochasticSumViolation,
                    "probabilities of state " + nodes_[s].name + " sum to " + std::to_string(mass));
      }
    }
  }

  std::set<Label> alphabet() const {
    std::set<Label> out;
    for (const auto& node : nodes_) {
      for (const auto& [label, arc] : node.out) out.insert(label);
    }
    return out;
  }

 private:
  struct Node {
    double termination = 0.0;
    std::string name;
    Transitions out;
  };
  std::vector<Node> nodes_;
};

}  // namespace entropia
