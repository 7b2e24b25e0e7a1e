#pragma once

#include <string>

#include <json.hpp>

#include "homcx/collapse.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/nerve.hpp"
#include "homcx/simplicial.hpp"

namespace homcx {

using Json = nlohmann::ordered_json;

/// `{"facets": [[v, ...], ...]}`; labels may be strings or integers.
SimplicialComplex complex_from_json(const Json& j);
/// `{"vertices": [...], "edges": [[u, v], ...]}`; vertex order is kept.
Graph graph_from_json(const Json& j);

/// Parses a file; throws InputError on unreadable or malformed content.
Json read_json_file(const std::string& path);
SimplicialComplex read_complex(const std::string& path);
Graph read_graph(const std::string& path);

Json to_json(const SimplicialComplex& x);
Json to_json(const Graph& g);
Json to_json(const HomologyProfile& p);
Json to_json(const HomPoset& p);
/// Steps as {sigma, tau, removed} with simplices rendered in `start`'s labels.
Json to_json(const CollapseCertificate& c, const SimplicialComplex& start);
Json to_json(const Cover& c);
Json to_json(const Filtration& f);

}  // namespace homcx
