#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "arxivnet/centrality.hpp"
#include "arxivnet/community.hpp"
#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/hits.hpp"
#include "arxivnet/profiling.hpp"
#include "arxivnet/spreader_network.hpp"

namespace arxivnet {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

/// GraphML document for the spreader network. Nodes carry authority, hub,
/// betweenness, community, CL and PL; edges carry the overlap coefficient.
/// Layout and styling are left to the visualization tool.
inline std::string export_graphml(const SpreaderNetwork& net, const DiffusionGraph& graph, const Partition& partition,
                                  const HitsScores& hits, const CentralityScores& centrality,
                                  const std::unordered_map<std::string, UserProfile>& profiles) {
  const auto n = net.nodes.size();
  if (partition.community.size() != n || centrality.values.size() != n)
    throw Error("GraphML export: partition/centrality do not match the network");
  if (hits.authority.size() != graph.size() || hits.hub.size() != graph.size())
    throw Error("GraphML export: HITS scores do not match the diffusion graph");

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
         "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
         "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
         "  <key id=\"authority\" for=\"node\" attr.name=\"authority\" attr.type=\"double\"/>\n"
         "  <key id=\"hub\" for=\"node\" attr.name=\"hub\" attr.type=\"double\"/>\n"
         "  <key id=\"betweenness\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n"
         "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
         "  <key id=\"cl\" for=\"node\" attr.name=\"cl\" attr.type=\"string\"/>\n"
         "  <key id=\"pl\" for=\"node\" attr.name=\"pl\" attr.type=\"string\"/>\n"
         "  <key id=\"coefficient\" for=\"edge\" attr.name=\"coefficient\" attr.type=\"double\"/>\n"
         "  <graph id=\"spreaders\" edgedefault=\"undirected\">\n";
  for (std::size_t k = 0; k < n; ++k) {
    const auto node = net.nodes[k];
    const auto& id = graph.users().name(node);
    const auto it = profiles.find(id);
    const std::string cl = it == profiles.end() ? "UD" : it->second.communication_lang;
    const std::string pl = it == profiles.end() ? "UD" : it->second.profile_lang;
    out << "    <node id=\"" << xml_escape(id) << "\">\n"
        << "      <data key=\"authority\">" << csv::format_double(hits.authority[node]) << "</data>\n"
        << "      <data key=\"hub\">" << csv::format_double(hits.hub[node]) << "</data>\n"
        << "      <data key=\"betweenness\">" << csv::format_double(centrality.values[k]) << "</data>\n"
        << "      <data key=\"community\">" << partition.community[k] << "</data>\n"
        << "      <data key=\"cl\">" << xml_escape(cl) << "</data>\n"
        << "      <data key=\"pl\">" << xml_escape(pl) << "</data>\n"
        << "    </node>\n";
  }
  for (const auto& e : net.graph.edges()) {
    out << "    <edge source=\"" << xml_escape(graph.users().name(net.nodes[e.u])) << "\" target=\""
        << xml_escape(graph.users().name(net.nodes[e.v])) << "\">\n"
        << "      <data key=\"coefficient\">" << csv::format_double(e.weight) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace arxivnet
