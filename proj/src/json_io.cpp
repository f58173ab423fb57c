#include "rcw/json_io.hpp"

#include "rcw/errors.hpp"

namespace rcw::io {

namespace {

int read_order(const json& doc) {
    if (!doc.is_object()) throw malformed_input_error("document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw malformed_input_error("missing integer field \"n\"");
    int n = doc["n"].get<int>();
    if (n < 1) throw malformed_input_error("\"n\" must be a positive integer");
    return n;
}

std::vector<std::pair<int, int>> read_pairs(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_array())
        throw malformed_input_error(std::string("missing array field \"") + field + "\"");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : doc[field]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw malformed_input_error(std::string("entries of \"") + field +
                                        "\" must be [u, v] integer pairs");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return pairs;
}

}  // namespace

json coloring_to_json(const CompleteColoring& c) {
    json doc;
    doc["n"] = c.order();
    json edges = json::array();
    for (auto [u, v] : c.red_pairs()) edges.push_back({u, v});
    doc["red_edges"] = std::move(edges);
    return doc;
}

std::string serialize_coloring(const CompleteColoring& c) { return coloring_to_json(c).dump(); }

CompleteColoring coloring_from_json(const json& doc) {
    int n = read_order(doc);
    return CompleteColoring::make(n, read_pairs(doc, "red_edges"));
}

CompleteColoring parse_coloring(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw malformed_input_error(std::string("JSON parse error: ") + e.what());
    }
    return coloring_from_json(doc);
}

json graph_to_json(const Graph& g) {
    json doc;
    doc["n"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc;
}

Graph graph_from_json(const json& doc) {
    int n = read_order(doc);
    return Graph::from_edges(n, read_pairs(doc, "edges"));
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

Graph parse_graph(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw malformed_input_error(std::string("JSON parse error: ") + e.what());
    }
    return graph_from_json(doc);
}

json cycle_to_json(const CycleWitness& w) { return json(w.vertices); }

json wheel_to_json(const WheelWitness& w) {
    return json{{"hub", w.hub}, {"rim", w.rim.vertices}};
}

json path_to_json(const PathWitness& w) { return json(w.vertices); }

json partition_to_json(const Partition& p) {
    json classes = json::array();
    for (const auto& cls : p.classes()) classes.push_back(cls);
    return json{{"classes", std::move(classes)}};
}

}  // namespace rcw::io
