// formats.hpp
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

// Readers and writers for the input formats: XES event logs, PNML and
// stochastic PNML nets, and the line-oriented DFG and SDFA formats.
//
// SDFA grammar, one record per line:
//   initial <state>
//   state <state> <termination probability>
//   arc <from> <to> <label> <probability>
// DFG grammar:
//   source <node>
//   sink <node>
//   node <node> <label>
//   arc <from> <to> <frequency>
// Probabilities are decimals ("0.5") or fractions ("4/5"). Tokens containing
// whitespace, '#' or '"' are double-quoted with backslash escapes. Blank
// lines and '#' comments are ignored.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "entropia/automata.hpp"
#include "entropia/error.hpp"
#include "entropia/petri.hpp"
#include "entropia/sdfa.hpp"

namespace entropia {

namespace detail {

using boost::property_tree::ptree;

inline ptree read_xml_document(std::istream& in) {
  ptree doc;
  try {
    boost::property_tree::read_xml(in, doc, boost::property_tree::xml_parser::trim_whitespace);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedXml, e.what());
  }
  return doc;
}

inline void write_xml_document(std::ostream& out, const ptree& doc) {
  boost::property_tree::xml_writer_settings<std::string> settings(' ', 2);
  boost::property_tree::write_xml(out, doc, settings);
}

inline std::string attribute(const ptree& node, const std::string& name) {
  return node.get<std::string>("<xmlattr>." + name, "");
}

inline std::string text_child(const ptree& node, const std::string& child) {
  auto c = node.get_child_optional(child);
  if (!c) return "";
  return c->get<std::string>("text", "");
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::uint32_t parse_count(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  if (t.empty()) return 0;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::kParseError, "invalid " + what + " '" + t + "'");
  }
  return v;
}

inline double parse_real(std::string_view t, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kParseError, "invalid " + what + " '" + std::string(t) + "'");
  }
  return v;
}

/// Decimal or fraction p/q.
inline double parse_probability(std::string_view t) {
  auto slash = t.find('/');
  double v;
  if (slash == std::string_view::npos) {
    v = parse_real(t, "probability");
  } else {
    double num = parse_real(t.substr(0, slash), "probability numerator");
    double den = parse_real(t.substr(slash + 1), "probability denominator");
    if (den == 0.0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(t) + "'");
    v = num / den;
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kStochasticSumViolation, "probability '" + std::string(t) + "' outside [0, 1]");
  }
  return v;
}

inline std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Splits a line into tokens, honoring double quotes and '#' comments.
inline std::vector<std::string> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      std::string tok;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '\\' && i < line.size()) {
          tok += line[i++];
        } else if (d == '"') {
          closed = true;
          break;
        } else {
          tok += d;
        }
      }
      if (!closed) throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": unterminated quote");
      tokens.push_back(std::move(tok));
    } else {
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

inline std::string quote(const std::string& token) {
  bool plain = !token.empty() && token.find_first_of(" \t\r\n#\"\\") == std::string::npos;
  if (plain) return token;
  std::string out = "\"";
  for (char c : token) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <typename OnRecord>
void for_each_record(std::string_view text, OnRecord&& on_record) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = tokenize(text.substr(pos, end - pos), line_no);
    if (!tokens.empty()) on_record(tokens, line_no);
    pos = end + 1;
  }
}

[[noreturn]] inline void bad_record(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// XES

inline EventLog parse_xes(std::istream& in) {
  auto doc = detail::read_xml_document(in);
  auto root = doc.get_child_optional("log");
  if (!root) throw Error(ErrorCode::kMalformedXml, "no <log> root element");
  EventLog log;
  for (const auto& [tag, trace_node] : *root) {
    if (tag != "trace") continue;
    Trace trace;
    for (const auto& [event_tag, event_node] : trace_node) {
      if (event_tag != "event") continue;
      std::optional<std::string> label;
      for (const auto& [attr_tag, attr] : event_node) {
        if (attr_tag == "string" && detail::attribute(attr, "key") == "concept:name") {
          label = detail::attribute(attr, "value");
          break;
        }
      }
      if (!label || label->empty()) {
        throw Error(ErrorCode::kMissingConceptName, "event without a concept:name attribute");
      }
      trace.push_back(std::move(*label));
    }
    log.add(trace);
  }
  return log;
}

inline EventLog parse_xes(std::string_view document) {
  std::istringstream in{std::string(document)};
  return parse_xes(in);
}

/// Writes every trace instance separately, so counts survive a round trip.
inline void write_xes(std::ostream& out, const EventLog& log) {
  using detail::ptree;
  ptree root;
  root.put(ptree::path_type("<xmlattr>/xes.version", '/'), "1.0");
  root.put("<xmlattr>.xmlns", "http://www.xes-standard.org/");
  ptree& ext = root.add("extension", "");
  ext.put("<xmlattr>.name", "Concept");
  ext.put("<xmlattr>.prefix", "concept");
  ext.put("<xmlattr>.uri", "http://www.xes-standard.org/concept.xesext");
  std::size_t case_id = 0;
  for (const auto& [trace, count] : log.entries()) {
    for (std::uint64_t k = 0; k < count; ++k) {
      ptree& t = root.add("trace", "");
      ptree& name = t.add("string", "");
      name.put("<xmlattr>.key", "concept:name");
      name.put("<xmlattr>.value", "case" + std::to_string(case_id++));
      for (const auto& label : trace) {
        ptree& event = t.add("event", "");
        ptree& attr = event.add("string", "");
        attr.put("<xmlattr>.key", "concept:name");
        attr.put("<xmlattr>.value", label);
      }
    }
  }
  ptree doc;
  doc.add_child("log", root);
  detail::write_xml_document(out, doc);
}

// ---------------------------------------------------------------------------
// PNML and stochastic PNML

namespace detail {

struct PnmlTransition {
  std::string id;
  std::optional<Label> label;
  std::optional<std::string> weight;
};

struct PnmlDocument {
  struct Place {
    std::string id, name;
    std::uint32_t tokens;
  };
  std::vector<Place> places;
  std::vector<PnmlTransition> transitions;
  std::vector<PetriNet::Arc> arcs;
  std::vector<std::map<std::string, std::uint32_t>> finals;
};

inline void collect_pnml(const ptree& node, PnmlDocument& doc) {
  for (const auto& [tag, child] : node) {
    if (tag == "page") {
      collect_pnml(child, doc);
    } else if (tag == "place") {
      doc.places.push_back({attribute(child, "id"), text_child(child, "name"),
                            parse_count(text_child(child, "initialMarking"), "initial marking")});
    } else if (tag == "transition") {
      PnmlTransition t{attribute(child, "id"), trim(text_child(child, "name")), std::nullopt};
      for (const auto& [ttag, tool] : child) {
        if (ttag != "toolspecific") continue;
        if (attribute(tool, "activity") == "$invisible$" || attribute(tool, "invisible") == "true") {
          t.label.reset();
        }
        if (tool.get_child_optional("<xmlattr>.weight")) t.weight = attribute(tool, "weight");
      }
      if (t.label && t.label->empty()) t.label.reset();
      doc.transitions.push_back(std::move(t));
    } else if (tag == "arc") {
      std::string inscription = text_child(child, "inscription");
      std::uint32_t w = inscription.empty() ? 1 : parse_count(inscription, "arc inscription");
      doc.arcs.push_back({attribute(child, "source"), attribute(child, "target"), w});
    } else if (tag == "finalmarkings") {
      for (const auto& [mtag, marking] : child) {
        if (mtag != "marking") continue;
        std::map<std::string, std::uint32_t> m;
        for (const auto& [ptag, place] : marking) {
          if (ptag != "place") continue;
          m[attribute(place, "idref")] += parse_count(place.get<std::string>("text", ""), "final marking");
        }
        doc.finals.push_back(std::move(m));
      }
    }
  }
}

inline PnmlDocument read_pnml_document(std::istream& in) {
  auto xml = read_xml_document(in);
  auto pnml = xml.get_child_optional("pnml");
  if (!pnml) throw Error(ErrorCode::kMalformedXml, "no <pnml> root element");
  auto net = pnml->get_child_optional("net");
  if (!net) throw Error(ErrorCode::kMalformedXml, "no <net> element");
  PnmlDocument doc;
  collect_pnml(*net, doc);
  return doc;
}

inline void finish_net(const PnmlDocument& doc, PetriNet& net) {
  for (const auto& a : doc.arcs) net.add_arc(a.source, a.target, a.weight);
  for (const auto& f : doc.finals) {
    Marking m{std::vector<std::uint32_t>(net.places().size(), 0)};
    for (const auto& [id, count] : f) {
      auto p = net.place_index(id);
      if (!p) throw Error(ErrorCode::kDanglingArc, "final marking references unknown place " + id);
      m.tokens[*p] = count;
    }
    net.add_final_marking(std::move(m));
  }
}

inline ptree net_to_ptree(const PetriNet& net, const std::vector<double>* weights) {
  ptree page;
  page.put("<xmlattr>.id", "page0");
  for (std::size_t i = 0; i < net.places().size(); ++i) {
    const auto& p = net.places()[i];
    ptree& node = page.add("place", "");
    node.put("<xmlattr>.id", p.id);
    node.put("name.text", p.name.empty() ? p.id : p.name);
    if (net.initial_marking().tokens[i] > 0) {
      node.put("initialMarking.text", net.initial_marking().tokens[i]);
    }
  }
  for (std::size_t i = 0; i < net.transitions().size(); ++i) {
    const auto& t = net.transitions()[i];
    ptree& node = page.add("transition", "");
    node.put("<xmlattr>.id", t.id);
    node.put("name.text", t.label ? *t.label : std::string("tau"));
    if (!t.label) {
      ptree& tool = node.add("toolspecific", "");
      tool.put("<xmlattr>.tool", "ProM");
      tool.put("<xmlattr>.version", "6.4");
      tool.put("<xmlattr>.activity", "$invisible$");
    }
    if (weights) {
      ptree& tool = node.add("toolspecific", "");
      tool.put("<xmlattr>.tool", "StochasticPetriNet");
      tool.put("<xmlattr>.version", "0.2");
      tool.put("<xmlattr>.distributionType", "IMMEDIATE");
      tool.put("<xmlattr>.weight", format_real((*weights)[i]));
    }
  }
  std::size_t arc_id = 0;
  for (const auto& a : net.arcs()) {
    ptree& node = page.add("arc", "");
    node.put("<xmlattr>.id", "arc" + std::to_string(arc_id++));
    node.put("<xmlattr>.source", a.source);
    node.put("<xmlattr>.target", a.target);
    if (a.weight != 1) node.put("inscription.text", a.weight);
  }

  ptree net_node;
  net_node.put("<xmlattr>.id", "net0");
  net_node.put("<xmlattr>.type", "http://www.pnml.org/version-2009/grammar/pnmlcoremodel");
  net_node.add_child("page", page);
  if (!net.final_markings().empty()) {
    ptree& finals = net_node.add("finalmarkings", "");
    for (const auto& m : net.final_markings()) {
      ptree& marking = finals.add("marking", "");
      for (std::size_t i = 0; i < m.tokens.size(); ++i) {
        if (m.tokens[i] == 0) continue;
        ptree& place = marking.add("place", "");
        place.put("<xmlattr>.idref", net.places()[i].id);
        place.put("text", m.tokens[i]);
      }
    }
  }
  ptree doc;
  doc.add_child("pnml.net", net_node);
  return doc;
}

}  // namespace detail

inline PetriNet parse_pnml(std::istream& in) {
  auto doc = detail::read_pnml_document(in);
  PetriNet net;
  for (const auto& p : doc.places) net.add_place(p.id, p.tokens, p.name);
  for (const auto& t : doc.transitions) net.add_transition(t.id, t.label);
  detail::finish_net(doc, net);
  return net;
}

inline PetriNet parse_pnml(std::string_view document) {
  std::istringstream in{std::string(document)};
  return parse_pnml(in);
}

/// Weights come from a toolspecific "weight" attribute; missing weights
/// default to 1.
inline StochasticPetriNet parse_spnml(std::istream& in) {
  auto doc = detail::read_pnml_document(in);
  StochasticPetriNet spn;
  for (const auto& p : doc.places) spn.net.add_place(p.id, p.tokens, p.name);
  for (const auto& t : doc.transitions) {
    if (!t.label) {
      throw Error(ErrorCode::kSilentTransitionUnsupported, "silent transition " + t.id + " in a stochastic net");
    }
    double w = t.weight ? detail::parse_real(detail::trim(*t.weight), "weight") : 1.0;
    spn.add_transition(t.id, t.label, w);
  }
  detail::finish_net(doc, spn.net);
  return spn;
}

inline StochasticPetriNet parse_spnml(std::string_view document) {
  std::istringstream in{std::string(document)};
  return parse_spnml(in);
}

inline void write_pnml(std::ostream& out, const PetriNet& net) {
  detail::write_xml_document(out, detail::net_to_ptree(net, nullptr));
}

inline void write_spnml(std::ostream& out, const StochasticPetriNet& spn) {
  detail::write_xml_document(out, detail::net_to_ptree(spn.net, &spn.weights));
}

// ---------------------------------------------------------------------------
// SDFA

inline Sdfa parse_sdfa(std::string_view text, double tolerance = 1e-9) {
  struct ArcRecord {
    std::string from, to, label;
    double p;
    std::size_t line;
  };
  std::optional<std::string> initial;
  std::vector<std::string> order;
  std::map<std::string, double> termination;
  std::vector<ArcRecord> arcs;

  detail::for_each_record(text, [&](const std::vector<std::string>& tok, std::size_t line) {
    const std::string& kind = tok[0];
    if (kind == "initial") {
      if (tok.size() != 2) detail::bad_record(line, "expected 'initial <state>'");
      if (initial) detail::bad_record(line, "second initial state");
      initial = tok[1];
    } else if (kind == "state") {
      if (tok.size() != 3) detail::bad_record(line, "expected 'state <state> <termination>'");
      if (!termination.emplace(tok[1], detail::parse_probability(tok[2])).second) {
        detail::bad_record(line, "state " + tok[1] + " declared twice");
      }
      order.push_back(tok[1]);
    } else if (kind == "arc") {
      if (tok.size() != 5) detail::bad_record(line, "expected 'arc <from> <to> <label> <probability>'");
      if (tok[3].empty()) detail::bad_record(line, "empty label");
      arcs.push_back({tok[1], tok[2], tok[3], detail::parse_probability(tok[4]), line});
    } else {
      detail::bad_record(line, "unknown record '" + kind + "'");
    }
  });

  if (!initial) throw Error(ErrorCode::kParseError, "no initial state");
  if (!termination.count(*initial)) throw Error(ErrorCode::kParseError, "initial state " + *initial + " not declared");

  std::map<std::string, State> ids;
  Sdfa sdfa(termination.at(*initial), *initial);
  ids.emplace(*initial, 0);
  for (const auto& name : order) {
    if (name != *initial) ids.emplace(name, sdfa.add_state(termination.at(name), name));
  }
  for (const auto& a : arcs) {
    auto from = ids.find(a.from), to = ids.find(a.to);
    if (from == ids.end() || to == ids.end()) {
      detail::bad_record(a.line, "arc references undeclared state");
    }
    sdfa.add_transition(from->second, a.label, to->second, a.p);
  }
  sdfa.validate(tolerance);
  return sdfa;
}

inline void write_sdfa(std::ostream& out, const Sdfa& sdfa) {
  out << "initial " << detail::quote(sdfa.name(sdfa.initial())) << '\n';
  for (State s = 0; s < sdfa.size(); ++s) {
    out << "state " << detail::quote(sdfa.name(s)) << ' ' << detail::format_real(sdfa.termination(s)) << '\n';
  }
  for (State s = 0; s < sdfa.size(); ++s) {
    for (const auto& [label, arc] : sdfa.transitions(s)) {
      out << "arc " << detail::quote(sdfa.name(s)) << ' ' << detail::quote(sdfa.name(arc.to)) << ' '
          << detail::quote(label) << ' ' << detail::format_real(arc.probability) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// DFG

struct Dfg {
  struct Node {
    std::string id;
    Label label;
  };
  struct Arc {
    std::string from, to;
    std::uint64_t frequency;
  };
  std::string source, sink;
  std::vector<Node> nodes;
  std::vector<Arc> arcs;
};

/// Syntax and reference checks only; see dfg_to_sdfa for the semantics.
inline Dfg read_dfg(std::string_view text) {
  Dfg dfg;
  std::set<std::string> ids;
  detail::for_each_record(text, [&](const std::vector<std::string>& tok, std::size_t line) {
    const std::string& kind = tok[0];
    if (kind == "source" || kind == "sink") {
      if (tok.size() != 2) detail::bad_record(line, "expected '" + kind + " <node>'");
      std::string& slot = kind == "source" ? dfg.source : dfg.sink;
      if (!slot.empty()) detail::bad_record(line, "second " + kind);
      if (!ids.insert(tok[1]).second) detail::bad_record(line, "duplicate node id " + tok[1]);
      slot = tok[1];
    } else if (kind == "node") {
      if (tok.size() != 3 || tok[2].empty()) detail::bad_record(line, "expected 'node <node> <label>'");
      if (!ids.insert(tok[1]).second) detail::bad_record(line, "duplicate node id " + tok[1]);
      dfg.nodes.push_back({tok[1], tok[2]});
    } else if (kind == "arc") {
      if (tok.size() != 4) detail::bad_record(line, "expected 'arc <from> <to> <frequency>'");
      std::uint64_t f = 0;
      auto [ptr, ec] = std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), f);
      if (ec != std::errc() || ptr != tok[3].data() + tok[3].size() || f == 0) {
        detail::bad_record(line, "frequency must be a positive integer");
      }
      dfg.arcs.push_back({tok[1], tok[2], f});
    } else {
      detail::bad_record(line, "unknown record '" + kind + "'");
    }
  });
  if (dfg.source.empty() || dfg.sink.empty()) throw Error(ErrorCode::kParseError, "DFG needs a source and a sink");
  for (const auto& a : dfg.arcs) {
    if (!ids.count(a.from) || !ids.count(a.to)) {
      throw Error(ErrorCode::kParseError, "arc " + a.from + " -> " + a.to + " references an unknown node");
    }
    if (a.to == dfg.source || a.from == dfg.sink) {
      throw Error(ErrorCode::kParseError, "arcs may not enter the source or leave the sink");
    }
  }
  return dfg;
}

/// Each node becomes a state; arc frequencies are normalized per origin.
/// Arcs into the sink become termination mass of their origin.
inline Sdfa dfg_to_sdfa(const Dfg& dfg) {
  std::map<std::string, const Dfg::Node*> nodes;
  for (const auto& n : dfg.nodes) nodes.emplace(n.id, &n);
  std::map<std::string, std::vector<const Dfg::Arc*>> out;
  std::map<std::pair<std::string, std::string>, bool> seen_arcs;
  for (const auto& a : dfg.arcs) {
    if (!seen_arcs.emplace(std::pair{a.from, a.to}, true).second) {
      throw Error(ErrorCode::kDuplicateTransition, "duplicate arc " + a.from + " -> " + a.to);
    }
    out[a.from].push_back(&a);
  }

  // Reachability from the source, then the ability to reach the sink.
  std::set<std::string> reached{dfg.source};
  std::vector<std::string> stack{dfg.source};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    for (const auto* a : out[id]) {
      if (reached.insert(a->to).second) stack.push_back(a->to);
    }
  }
  for (const auto& n : dfg.nodes) {
    if (!reached.count(n.id)) throw Error(ErrorCode::kUnreachableNode, "node " + n.id + " is unreachable from the source");
  }
  if (!reached.count(dfg.sink)) throw Error(ErrorCode::kDeadEndNode, "the sink is unreachable");
  std::set<std::string> finishing{dfg.sink};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : dfg.arcs) {
      if (finishing.count(a.to) && finishing.insert(a.from).second) grew = true;
    }
  }
  for (const auto& n : dfg.nodes) {
    if (!finishing.count(n.id)) throw Error(ErrorCode::kDeadEndNode, "node " + n.id + " cannot reach the sink");
  }

  std::map<std::string, State> ids;
  Sdfa sdfa(0.0, dfg.source);
  ids.emplace(dfg.source, 0);
  for (const auto& n : dfg.nodes) ids.emplace(n.id, sdfa.add_state(0.0, n.id));
  for (const auto& [from, arcs] : out) {
    double total = 0.0;
    for (const auto* a : arcs) total += static_cast<double>(a->frequency);
    for (const auto* a : arcs) {
      double p = static_cast<double>(a->frequency) / total;
      if (a->to == dfg.sink) {
        sdfa.set_termination(ids.at(from), p);
      } else {
        sdfa.add_transition(ids.at(from), nodes.at(a->to)->label, ids.at(a->to), p);
      }
    }
  }
  return sdfa;
}

inline Sdfa parse_dfg(std::string_view text) { return dfg_to_sdfa(read_dfg(text)); }

inline void write_dfg(std::ostream& out, const Dfg& dfg) {
  out << "source " << detail::quote(dfg.source) << '\n';
  out << "sink " << detail::quote(dfg.sink) << '\n';
  for (const auto& n : dfg.nodes) out << "node " << detail::quote(n.id) << ' ' << detail::quote(n.label) << '\n';
  for (const auto& a : dfg.arcs) {
    out << "arc " << detail::quote(a.from) << ' ' << detail::quote(a.to) << ' ' << a.frequency << '\n';
  }
}

// ---------------------------------------------------------------------------
// Loading by file extension

enum class Format { kXes, kPnml, kSpnml, kDfg, kSdfa };

constexpr std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::kXes: return "XES";
    case Format::kPnml: return "PNML";
    case Format::kSpnml: return "sPNML";
    case Format::kDfg: return "DFG";
    case Format::kSdfa: return "SDFA";
  }
  return "?";
}

struct Artifact {
  Format format;
  std::variant<EventLog, PetriNet, StochasticPetriNet, Sdfa> content;
};

inline Format format_of(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".xes") return Format::kXes;
  if (ext == ".pnml") return Format::kPnml;
  if (ext == ".spnml") return Format::kSpnml;
  if (ext == ".dfg") return Format::kDfg;
  if (ext == ".sdfa") return Format::kSdfa;
  throw Error(ErrorCode::kUnknownExtension, "cannot infer the format of " + path.string());
}

inline Artifact load_artifact(const std::filesystem::path& path) {
  const Format format = format_of(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  switch (format) {
    case Format::kXes: return {format, parse_xes(in)};
    case Format::kPnml: return {format, parse_pnml(in)};
    case Format::kSpnml: return {format, parse_spnml(in)};
    default: break;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == Format::kDfg) return {format, parse_dfg(buf.str())};
  return {format, parse_sdfa(buf.str())};
}

}  // namespace entropia
