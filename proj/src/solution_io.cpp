// Copyright 2026 The ncopt Authors.
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

#include "ncopt/solution_io.hpp"

#include <sstream>

#include "ncopt/errors.hpp"
#include "text_util.hpp"

namespace ncopt {
namespace {

using detail::Line;

std::string links_text(const std::vector<LinkId>& links) {
  if (links.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(links[i]);
  }
  return out;
}

std::string channel_text(const std::optional<Channel>& ch) {
  if (!ch) return "- -";
  return std::to_string(ch->start) + ' ' + std::to_string(ch->width);
}

std::vector<LinkId> parse_links(const Line& line, std::size_t index,
                                std::string_view field) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, "missing field '" + std::string(field) + "'");
  }
  std::vector<LinkId> links;
  std::string_view token = line.tokens[index];
  if (token == "-") return links;
  while (true) {
    const std::size_t comma = token.find(',');
    Line piece{line.number, {token.substr(0, comma)}};
    links.push_back(detail::parse_int(piece, 0, field));
    if (comma == std::string_view::npos) break;
    token = token.substr(comma + 1);
  }
  return links;
}

Path parse_path(const Topology& topology, const Line& line, std::size_t index,
                std::string_view field) {
  try {
    return make_path(topology, parse_links(line, index, field));
  } catch (const InvariantError& e) {
    throw ParseError(line.number, std::string(field) + ": " + e.what());
  }
}

std::optional<Channel> parse_channel(const Line& line, std::size_t index,
                                     std::string_view field) {
  if (index + 1 >= line.tokens.size()) {
    throw ParseError(line.number, "missing field '" + std::string(field) + "'");
  }
  if (line.tokens[index] == "-" && line.tokens[index + 1] == "-") {
    return std::nullopt;
  }
  return Channel{detail::parse_int(line, index, field),
                 detail::parse_int(line, index + 1, field)};
}

void expect_keyword(const Line& line, std::size_t index,
                    std::string_view keyword) {
  if (index >= line.tokens.size() || line.tokens[index] != keyword) {
    throw ParseError(line.number, "expected '" + std::string(keyword) + "'");
  }
}

struct MetricField {
  const char* name;
  std::int64_t Metrics::* field;
};

constexpr MetricField kMetricFields[] = {
    {"routing_cost", &Metrics::routing_cost},
    {"wavelength_cost", &Metrics::wavelength_cost},
    {"spectrum_cost", &Metrics::spectrum_cost},
    {"served_rate", &Metrics::served_rate},
    {"transponder_count", &Metrics::transponder_count},
    {"padding_slots", &Metrics::padding_slots},
};

}  // namespace

std::string render_solution(const Instance& instance,
                            const DesignSolution& solution) {
  std::ostringstream out;
  out << "# ncopt solution\n"
      << render_topology(instance.topology) << render_demands(instance.demands)
      << "solution " << to_string(instance.mode) << ' '
      << to_string(instance.objective) << '\n'
      << "candidates " << instance.k << '\n'
      << "optimal " << (solution.proved_optimal ? 1 : 0) << '\n';
  for (const Assignment& a : solution.assignments) {
    out << "assign " << a.demand_id << " work "
        << links_text(a.route.working.links) << " prot "
        << (a.route.has_protection() ? links_text(a.route.protection.links)
                                     : "-")
        << " wch " << channel_text(a.working_channel) << " pch "
        << channel_text(a.protection_channel) << '\n';
  }
  for (const CodingGroup& g : solution.coding_groups) {
    out << "group " << g.demand_a << ' ' << g.demand_b << ' ' << g.coding_node
        << ' ' << links_text(g.branch_a.links) << ' '
        << links_text(g.branch_b.links) << ' '
        << links_text(g.encoded_segment.links) << '\n';
  }
  for (const EncryptedFlow& f : solution.encrypted_flows) {
    out << "encrypt " << f.confidential_demand << ' ' << f.carrier_demand << ' '
        << f.encoding_node << '\n';
  }
  const Metrics& m = solution.metrics;
  for (const MetricField& f : kMetricFields) {
    out << "metric " << f.name << ' ' << m.*(f.field) << '\n';
  }
  out << "metric served_demands " << m.served_demands << '\n'
      << "metric max_channel_index " << m.max_channel_index << '\n';
  return out.str();
}

SolutionDocument load_solution(std::string_view text) {
  const std::vector<Line> lines = detail::tokenize(text);
  // Topology and demand records go to their own loaders. Other lines are
  // blanked so reported line numbers stay those of the whole file.
  std::string topo_text;
  std::string demand_text;
  int topo_lines = 0;
  int demand_lines = 0;
  auto append = [](std::string& out, int& count, const Line& line) {
    for (; count + 1 < line.number; ++count) out += '\n';
    for (std::size_t i = 0; i < line.tokens.size(); ++i) {
      if (i) out += ' ';
      out += line.tokens[i];
    }
    out += '\n';
    ++count;
  };
  for (const Line& line : lines) {
    const std::string_view head = line.tokens[0];
    if (head == "topology" || head == "node" || head == "link") {
      append(topo_text, topo_lines, line);
    } else if (head == "demand") {
      append(demand_text, demand_lines, line);
    }
  }

  SolutionDocument doc;
  try {
    doc.topology = load_topology(topo_text);
  } catch (const InvariantError& e) {
    throw ParseError(0, std::string("topology: ") + e.what());
  }
  doc.demands = load_demands(demand_text, &doc.topology);

  bool saw_header = false;
  for (const Line& line : lines) {
    const std::string_view head = line.tokens[0];
    if (head == "topology" || head == "node" || head == "link" ||
        head == "demand") {
      continue;
    }
    if (head == "solution") {
      detail::expect_arity(line, 3);
      auto mode = parse_mode(line.tokens[1]);
      auto objective = parse_objective(line.tokens[2]);
      if (!mode || !objective) {
        throw ParseError(line.number, "unknown mode or objective");
      }
      doc.mode = *mode;
      doc.objective = *objective;
      saw_header = true;
    } else if (head == "candidates") {
      detail::expect_arity(line, 2);
      doc.k = detail::parse_int(line, 1, "k");
    } else if (head == "optimal") {
      detail::expect_arity(line, 2);
      doc.solution.proved_optimal = detail::parse_flag(line, 1, "optimal");
    } else if (head == "assign") {
      detail::expect_arity(line, 12);
      Assignment a;
      a.demand_id = detail::parse_int(line, 1, "demand");
      expect_keyword(line, 2, "work");
      a.route.working = parse_path(doc.topology, line, 3, "working path");
      expect_keyword(line, 4, "prot");
      if (line.tokens[5] != "-") {
        a.route.protection =
            parse_path(doc.topology, line, 5, "protection path");
      }
      expect_keyword(line, 6, "wch");
      a.working_channel = parse_channel(line, 7, "working channel");
      expect_keyword(line, 9, "pch");
      a.protection_channel = parse_channel(line, 10, "protection channel");
      doc.solution.assignments.push_back(std::move(a));
    } else if (head == "group") {
      detail::expect_arity(line, 7);
      CodingGroup g;
      g.demand_a = detail::parse_int(line, 1, "demand_a");
      g.demand_b = detail::parse_int(line, 2, "demand_b");
      g.coding_node = detail::parse_int(line, 3, "coding_node");
      if (!doc.topology.has_node(g.coding_node)) {
        throw ParseError(line.number, "unknown coding node");
      }
      g.branch_a = line.tokens[4] == "-"
                       ? stub_path(g.coding_node)
                       : parse_path(doc.topology, line, 4, "branch_a");
      g.branch_b = line.tokens[5] == "-"
                       ? stub_path(g.coding_node)
                       : parse_path(doc.topology, line, 5, "branch_b");
      g.encoded_segment = parse_path(doc.topology, line, 6, "segment");
      doc.solution.coding_groups.push_back(std::move(g));
    } else if (head == "encrypt") {
      detail::expect_arity(line, 4);
      EncryptedFlow f;
      f.confidential_demand = detail::parse_int(line, 1, "confidential");
      f.carrier_demand = detail::parse_int(line, 2, "carrier");
      f.encoding_node = detail::parse_int(line, 3, "encoding_node");
      const Assignment* a = doc.solution.find(f.confidential_demand);
      if (!a) {
        throw ParseError(line.number, "encrypted demand has no assignment");
      }
      f.shared_route = a->route.working;
      doc.solution.encrypted_flows.push_back(std::move(f));
    } else if (head == "metric") {
      detail::expect_arity(line, 3);
      const std::string_view name = line.tokens[1];
      Metrics& m = doc.solution.metrics;
      bool known = false;
      for (const MetricField& f : kMetricFields) {
        if (name == f.name) {
          m.*(f.field) = detail::parse_int<std::int64_t>(line, 2, name);
          known = true;
        }
      }
      if (name == "served_demands") {
        m.served_demands = detail::parse_int(line, 2, name);
        known = true;
      } else if (name == "max_channel_index") {
        m.max_channel_index = detail::parse_int(line, 2, name);
        known = true;
      }
      if (!known) {
        throw ParseError(line.number,
                         "unknown metric '" + std::string(name) + "'");
      }
    } else {
      throw ParseError(line.number,
                       "unknown record '" + std::string(head) + "'");
    }
  }
  if (!saw_header) throw ParseError(0, "missing 'solution' record");
  return doc;
}

SolutionDocument load_solution_file(const std::string& path) {
  return load_solution(detail::read_file(path));
}

std::string render_trace(const Instance& instance,
                         const std::vector<RecoveryTrace>& traces) {
  std::ostringstream out;
  out << "edge,u,v,demand,outcome,recovered,decode_surviving,decode_encoded\n";
  for (const RecoveryTrace& t : traces) {
    const Edge& e = instance.topology.edges()[t.failed_edge];
    for (const DemandOutcome& o : t.outcomes) {
      out << t.failed_edge << ',' << e.u << ',' << e.v << ',' << o.demand_id
          << ',' << to_string(o.outcome) << ','
          << (o.outcome == Outcome::kLost ? "" : o.recovered.to_hex()) << ','
          << (o.decode_surviving ? o.decode_surviving->to_hex() : "") << ','
          << (o.decode_encoded ? o.decode_encoded->to_hex() : "") << '\n';
    }
  }
  return out.str();
}

}  // namespace ncopt
