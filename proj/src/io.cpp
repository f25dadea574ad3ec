#include "nestgen/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace nestgen {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

} // namespace

GraphDocument parse_graph_text(const std::string& text) {
    GraphDocument doc;
    bool saw_graph = false, saw_vertices = false;
    std::set<VertexId> vset;
    std::set<EdgeId> eset;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "graph") {
            if (saw_graph) fail(lineno, "duplicate graph line");
            if (!(ls >> doc.name)) fail(lineno, "graph line needs a name");
            saw_graph = true;
        } else if (kw == "v") {
            if (saw_vertices) fail(lineno, "duplicate vertex declaration");
            int count;
            if (!(ls >> count) || count < 0) fail(lineno, "v needs a nonnegative count");
            for (VertexId i = 1; i <= count; ++i) {
                doc.vertices.push_back(i);
                vset.insert(i);
            }
            saw_vertices = true;
        } else if (kw == "vl") {
            if (saw_vertices) fail(lineno, "duplicate vertex declaration");
            VertexId v;
            while (ls >> v) {
                if (!vset.insert(v).second)
                    fail(lineno, "duplicate vertex id " + std::to_string(v));
                doc.vertices.push_back(v);
            }
            if (!ls.eof()) fail(lineno, "vl expects integer ids");
            saw_vertices = true;
        } else if (kw == "e") {
            EdgeRec e;
            if (!(ls >> e.id >> e.u >> e.v)) fail(lineno, "e needs <id> <u> <v>");
            if (!eset.insert(e.id).second)
                fail(lineno, "duplicate edge id " + std::to_string(e.id));
            if (!vset.count(e.u))
                fail(lineno, "edge " + std::to_string(e.id) + " references unknown vertex " +
                                 std::to_string(e.u));
            if (!vset.count(e.v))
                fail(lineno, "edge " + std::to_string(e.id) + " references unknown vertex " +
                                 std::to_string(e.v));
            doc.edges.push_back(e);
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#') fail(lineno, "trailing tokens after directive");
    }
    if (!saw_graph) throw input_error("missing graph line");
    return doc;
}

std::string serialize_graph_text(const GraphDocument& doc) {
    GraphDocument d = doc;
    std::sort(d.vertices.begin(), d.vertices.end());
    std::sort(d.edges.begin(), d.edges.end(),
              [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });

    std::ostringstream out;
    out << "graph " << (d.name.empty() ? "unnamed" : d.name) << "\n";
    bool contiguous = !d.vertices.empty() && d.vertices.front() == 1 &&
                      d.vertices.back() == static_cast<VertexId>(d.vertices.size());
    if (contiguous) {
        out << "v " << d.vertices.size() << "\n";
    } else {
        out << "vl";
        for (VertexId v : d.vertices) out << " " << v;
        out << "\n";
    }
    for (const EdgeRec& e : d.edges) {
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        out << "e " << e.id << " " << a << " " << b << "\n";
    }
    return out.str();
}

GraphDocument parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("json parse error: ") + e.what());
    }
    GraphDocument doc;
    try {
        doc.name = j.value("name", std::string("unnamed"));
        for (const auto& v : j.at("vertices")) doc.vertices.push_back(v.get<VertexId>());
        for (const auto& e : j.at("edges")) {
            doc.edges.push_back(
                {e.at("id").get<EdgeId>(), e.at("u").get<VertexId>(), e.at("v").get<VertexId>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("json graph document malformed: ") + e.what());
    }
    return doc;
}

std::string serialize_graph_json(const GraphDocument& doc) {
    nlohmann::json j;
    j["name"] = doc.name.empty() ? "unnamed" : doc.name;
    j["vertices"] = doc.vertices;
    j["edges"] = nlohmann::json::array();
    for (const EdgeRec& e : doc.edges)
        j["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    return j.dump(2) + "\n";
}

Multigraph to_multigraph(const GraphDocument& doc) {
    return Multigraph::build(doc.vertices, doc.edges);
}

GraphDocument to_document(const std::string& name, const Multigraph& g) {
    return GraphDocument{name, g.vertices(), g.edges()};
}

} // namespace nestgen
