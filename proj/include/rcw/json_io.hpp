#pragma once

#include <string>

#include <json.hpp>

#include "rcw/coloring.hpp"
#include "rcw/witness.hpp"

namespace rcw::io {

using nlohmann::json;

/// Canonical coloring document: {"n": <int>, "red_edges": [[u,v],...]} with
/// u < v and edges sorted lexicographically; blue is implicit. Writers emit
/// canonical order; readers accept any order and deduplicate.
json coloring_to_json(const CompleteColoring& c);
std::string serialize_coloring(const CompleteColoring& c);

/// Parses a coloring document. Accepts non-canonical input (unsorted edges,
/// reversed pairs, duplicates). Throws malformed_input_error on structural
/// problems, out_of_range_error / self_loop_error on bad endpoints.
CompleteColoring coloring_from_json(const json& doc);
CompleteColoring parse_coloring(const std::string& bytes);

/// Graph document: {"n": <int>, "edges": [[u,v],...]}, same conventions.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& doc);
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& bytes);

json cycle_to_json(const CycleWitness& w);
json wheel_to_json(const WheelWitness& w);
json path_to_json(const PathWitness& w);
json partition_to_json(const Partition& p);

}  // namespace rcw::io
