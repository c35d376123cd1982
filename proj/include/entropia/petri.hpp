// petri.hpp
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

// Place/transition nets: boundedness by coverability, reachability graphs
// and their translation into (stochastic) automata.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "entropia/automata.hpp"
#include "entropia/error.hpp"
#include "entropia/sdfa.hpp"

namespace entropia {

/// Token counts indexed by place position in the owning net.
struct Marking {
  std::vector<std::uint32_t> tokens;

  friend auto operator<=>(const Marking&, const Marking&) = default;
  friend bool operator==(const Marking&, const Marking&) = default;

  /// Componentwise <=.
  bool covered_by(const Marking& other) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] > other.tokens[i]) return false;
    }
    return true;
  }
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept {
    return boost::hash_range(m.tokens.begin(), m.tokens.end());
  }
};

class PetriNet {
 public:
  struct Place {
    std::string id;
    std::string name;
  };
  struct Transition {
    std::string id;
    std::optional<Label> label;  // nullopt: silent
  };
  struct Arc {
    std::string source;
    std::string target;
    std::uint32_t weight = 1;
  };
  using Flow = std::vector<std::pair<std::size_t, std::uint32_t>>;  // (place, weight)

  std::size_t add_place(const std::string& id, std::uint32_t tokens = 0, std::string name = {}) {
    claim(id);
    places_.push_back(Place{id, std::move(name)});
    initial_.tokens.push_back(tokens);
    for (auto& m : finals_) m.tokens.push_back(0);
    place_index_.emplace(id, places_.size() - 1);
    return places_.size() - 1;
  }

  std::size_t add_transition(const std::string& id, std::optional<Label> label) {
    claim(id);
    if (label && label->empty()) label.reset();
    transitions_.push_back(Transition{id, std::move(label)});
    pre_.emplace_back();
    post_.emplace_back();
    transition_index_.emplace(id, transitions_.size() - 1);
    return transitions_.size() - 1;
  }

  /// Arcs connect a place and a transition, in either direction. Parallel
  /// arcs add up.
  void add_arc(const std::string& source, const std::string& target, std::uint32_t weight = 1) {
    if (weight == 0) throw Error(ErrorCode::kParseError, "arc weight must be positive");
    auto sp = place_index_.find(source);
    auto st = transition_index_.find(source);
    auto tp = place_index_.find(target);
    auto tt = transition_index_.find(target);
    if ((sp == place_index_.end() && st == transition_index_.end()) ||
        (tp == place_index_.end() && tt == transition_index_.end())) {
      throw Error(ErrorCode::kDanglingArc, "arc " + source + " -> " + target + " references an unknown node");
    }
    if (sp != place_index_.end() && tt != transition_index_.end()) {
      accumulate(pre_[tt->second], sp->second, weight);
    } else if (st != transition_index_.end() && tp != place_index_.end()) {
      accumulate(post_[st->second], tp->second, weight);
    } else {
      throw Error(ErrorCode::kDanglingArc, "arc " + source + " -> " + target + " does not connect a place and a transition");
    }
    arcs_.push_back(Arc{source, target, weight});
  }

  void set_initial_tokens(std::size_t place, std::uint32_t tokens) { initial_.tokens.at(place) = tokens; }

  void add_final_marking(Marking m) {
    if (m.tokens.size() != places_.size()) {
      throw Error(ErrorCode::kParseError, "final marking does not match the place count");
    }
    finals_.push_back(std::move(m));
  }

  const std::vector<Place>& places() const noexcept { return places_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Marking& initial_marking() const noexcept { return initial_; }
  const std::vector<Marking>& final_markings() const noexcept { return finals_; }
  const Flow& pre(std::size_t t) const { return pre_.at(t); }
  const Flow& post(std::size_t t) const { return post_.at(t); }

  std::optional<std::size_t> place_index(const std::string& id) const {
    auto it = place_index_.find(id);
    if (it == place_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> transition_index(const std::string& id) const {
    auto it = transition_index_.find(id);
    if (it == transition_index_.end()) return std::nullopt;
    return it->second;
  }

  bool enabled(const Marking& m, std::size_t t) const {
    for (const auto& [p, w] : pre_[t]) {
      if (m.tokens[p] < w) return false;
    }
    return true;
  }

  /// Successor marking; the caller guarantees `t` is enabled in `m`.
  /// Markings with counts at the uint32 ceiling are left there.
  Marking fire(const Marking& m, std::size_t t) const {
    Marking next = m;
    for (const auto& [p, w] : pre_[t]) next.tokens[p] -= w;
    for (const auto& [p, w] : post_[t]) {
      auto& slot = next.tokens[p];
      slot = (slot > std::numeric_limits<std::uint32_t>::max() - w) ? std::numeric_limits<std::uint32_t>::max()
                                                                    : slot + w;
    }
    return next;
  }

  bool has_silent_transition() const {
    return std::any_of(transitions_.begin(), transitions_.end(),
                       [](const Transition& t) { return !t.label.has_value(); });
  }

 private:
  void claim(const std::string& id) {
    if (id.empty()) throw Error(ErrorCode::kParseError, "node without id");
    if (place_index_.count(id) || transition_index_.count(id)) {
      throw Error(ErrorCode::kParseError, "duplicate node id '" + id + "'");
    }
  }

  static void accumulate(Flow& flow, std::size_t place, std::uint32_t weight) {
    for (auto& [p, w] : flow) {
      if (p == place) {
        w += weight;
        return;
      }
    }
    flow.emplace_back(place, weight);
    std::sort(flow.begin(), flow.end());
  }

  std::vector<Place> places_;
  std::vector<Transition> transitions_;
  std::vector<Arc> arcs_;
  std::vector<Flow> pre_, post_;
  Marking initial_;
  std::vector<Marking> finals_;
  std::map<std::string, std::size_t> place_index_, transition_index_;
};

/// A net whose transitions carry positive firing weights.
struct StochasticPetriNet {
  PetriNet net;
  std::vector<double> weights;  // per transition

  std::size_t add_transition(const std::string& id, std::optional<Label> label, double weight = 1.0) {
    if (!(weight > 0.0)) throw Error(ErrorCode::kNonPositiveWeight, "transition " + id + " has weight <= 0");
    std::size_t t = net.add_transition(id, std::move(label));
    weights.push_back(weight);
    return t;
  }
};

struct ReachabilityGraph {
  struct Edge {
    std::size_t from;
    std::size_t transition;
    std::size_t to;
  };

  std::vector<Marking> nodes;  // nodes[0] is the initial marking
  std::vector<Edge> edges;

  std::size_t initial() const noexcept { return 0; }
};

/// Karp-Miller style boundedness check. Markings are explored breadth
/// first; a new marking that strictly covers one of its ancestors in the
/// exploration tree would be accelerated to omega, which proves the
/// reachability set infinite. Revisited markings are not expanded again.
inline bool is_bounded(const PetriNet& net) {
  constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();
  constexpr std::uint32_t kCeiling = std::numeric_limits<std::uint32_t>::max();
  struct Node {
    Marking marking;
    std::size_t parent;
  };
  std::vector<Node> tree{{net.initial_marking(), kRoot}};
  std::unordered_map<Marking, std::size_t, MarkingHash> seen{{net.initial_marking(), 0}};

  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (!net.enabled(tree[i].marking, t)) continue;
      Marking next = net.fire(tree[i].marking, t);
      if (seen.count(next)) continue;
      if (std::find(next.tokens.begin(), next.tokens.end(), kCeiling) != next.tokens.end()) return false;
      for (std::size_t a = i; a != kRoot; a = tree[a].parent) {
        if (tree[a].marking.covered_by(next)) return false;  // distinct, so strictly covered
      }
      seen.emplace(next, tree.size());
      tree.push_back(Node{std::move(next), i});
    }
  }
  return true;
}

/// Breadth-first exploration of all reachable markings.
inline ReachabilityGraph reachability_graph(const PetriNet& net, std::size_t max_nodes = kDefaultStateCap) {
  ReachabilityGraph rg;
  std::unordered_map<Marking, std::size_t, MarkingHash> index;
  rg.nodes.push_back(net.initial_marking());
  index.emplace(net.initial_marking(), 0);
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (!net.enabled(rg.nodes[i], t)) continue;
      Marking next = net.fire(rg.nodes[i], t);
      auto it = index.find(next);
      if (it == index.end()) {
        if (rg.nodes.size() >= max_nodes) {
          throw Error(ErrorCode::kStateSpaceExceeded,
                      "reachability graph exceeds " + std::to_string(max_nodes) + " markings");
        }
        it = index.emplace(next, rg.nodes.size()).first;
        rg.nodes.push_back(std::move(next));
      }
      rg.edges.push_back({i, t, it->second});
    }
  }
  return rg;
}

namespace detail {

inline std::vector<bool> deadlocks(const ReachabilityGraph& rg) {
  std::vector<bool> dead(rg.nodes.size(), true);
  for (const auto& e : rg.edges) dead[e.from] = false;
  return dead;
}

}  // namespace detail

/// Language of the reachability graph as a trimmed DFA. Accepting markings
/// are the declared final markings, or every deadlock if none are declared.
inline Dfa rg_to_dfa(const ReachabilityGraph& rg, const PetriNet& net, std::size_t max_states = kDefaultStateCap) {
  Nfa nfa;
  for (std::size_t i = 1; i < rg.nodes.size(); ++i) nfa.add_state();

  bool any_accepting = false;
  if (!net.final_markings().empty()) {
    std::set<Marking> finals(net.final_markings().begin(), net.final_markings().end());
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
      if (finals.count(rg.nodes[i])) {
        nfa.set_accepting(static_cast<State>(i));
        any_accepting = true;
      }
    }
  } else {
    auto dead = detail::deadlocks(rg);
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
      if (dead[i]) {
        nfa.set_accepting(static_cast<State>(i));
        any_accepting = true;
      }
    }
  }
  if (!any_accepting) {
    throw Error(ErrorCode::kNoAcceptingState, "no reachable final marking and no deadlock");
  }
  for (const auto& e : rg.edges) {
    nfa.add_edge(static_cast<State>(e.from), net.transitions()[e.transition].label, static_cast<State>(e.to));
  }
  return determinize(nfa, max_states);
}

inline Dfa net_to_dfa(const PetriNet& net, std::size_t max_states = kDefaultStateCap) {
  return rg_to_dfa(reachability_graph(net, max_states), net, max_states);
}

/// One SDFA state per reachable marking. Enabled transitions share the
/// marking's mass in proportion to their weights; deadlocks terminate.
inline Sdfa stochastic_rg_to_sdfa(const StochasticPetriNet& spn, std::size_t max_nodes = kDefaultStateCap) {
  const PetriNet& net = spn.net;
  for (const auto& t : net.transitions()) {
    if (!t.label) {
      throw Error(ErrorCode::kSilentTransitionUnsupported,
                  "silent transition " + t.id + " in a stochastic net");
    }
  }
  ReachabilityGraph rg = reachability_graph(net, max_nodes);

  std::vector<std::vector<const ReachabilityGraph::Edge*>> out(rg.nodes.size());
  for (const auto& e : rg.edges) out[e.from].push_back(&e);

  std::set<Marking> finals(net.final_markings().begin(), net.final_markings().end());
  Sdfa sdfa;
  for (std::size_t i = 1; i < rg.nodes.size(); ++i) sdfa.add_state();
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    if (out[i].empty()) {
      sdfa.set_termination(static_cast<State>(i), 1.0);
      continue;
    }
    if (finals.count(rg.nodes[i])) {
      throw Error(ErrorCode::kNonDeadlockFinalMarking,
                  "a declared final marking enables transitions");
    }
    double total = 0.0;
    for (const auto* e : out[i]) total += spn.weights[e->transition];
    for (const auto* e : out[i]) {
      const auto& label = *net.transitions()[e->transition].label;
      if (sdfa.next(static_cast<State>(i), label)) {
        throw Error(ErrorCode::kNondeterministicStochasticModel,
                    "two enabled transitions labeled '" + label + "' in one marking");
      }
      sdfa.add_transition(static_cast<State>(i), label, static_cast<State>(e->to),
                          spn.weights[e->transition] / total);
    }
  }
  return sdfa;
}

}  // namespace entropia
