#pragma once

#include <string>

#include <json.hpp>

#include "ksg/graph.hpp"
#include "ksg/vecset.hpp"

namespace ksg {

using json = nlohmann::json;

// Canonical JSON bytes: compact dump with lexicographically sorted keys
// (nlohmann's default object ordering), lowest-terms rationals. Used for
// golden files and for hashing.
std::string canonical_dump(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);  // symmetrizes and deduplicates pairs

json vectors_to_json(const VectorSet& V);
VectorSet vectors_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// SHA-256 of the canonical graph JSON; binds certificates to instances
std::string graph_sha(const Graph& g);

// reads a whole file, or stdin when path == "-"
std::string read_input(const std::string& path);
void write_output(const std::string& path, const std::string& data);

}  // namespace ksg
