#ifndef NESTGEN_IO_HPP
#define NESTGEN_IO_HPP

#include <string>
#include <vector>

#include "nestgen/graph.hpp"

namespace nestgen {

// Line-oriented text format:
//   graph <name>
//   v <count>            (vertices are 1..count)   or   vl <id> <id> ...
//   e <id> <u> <v>
//   # comment
struct GraphDocument {
    std::string name;
    std::vector<VertexId> vertices;
    std::vector<EdgeRec> edges;
};

GraphDocument parse_graph_text(const std::string& text);
std::string serialize_graph_text(const GraphDocument& doc);

GraphDocument parse_graph_json(const std::string& text);
std::string serialize_graph_json(const GraphDocument& doc);

Multigraph to_multigraph(const GraphDocument& doc);
GraphDocument to_document(const std::string& name, const Multigraph& g);

} // namespace nestgen

#endif
