#include "homcx/io.hpp"

#include <fstream>
#include <limits>

#include "homcx/error.hpp"

namespace homcx {

namespace {

std::string label_from_json(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError("vertex labels must be strings or integers, got " + v.dump());
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing \"") + key + "\" field");
    return j.at(key);
}

Json simplex_json(const SimplicialComplex& x, const Simplex& s) { return Json(x.labels_of(s)); }

}  // namespace

SimplicialComplex complex_from_json(const Json& j) {
    const Json& facets = require(j, "facets");
    if (!facets.is_array()) throw InputError("\"facets\" must be an array");
    std::vector<std::vector<std::string>> lists;
    for (const auto& f : facets) {
        if (!f.is_array()) throw InputError("each facet must be an array of labels");
        std::vector<std::string> labels;
        for (const auto& v : f) labels.push_back(label_from_json(v));
        lists.push_back(std::move(labels));
    }
    return from_facets(lists);
}

Graph graph_from_json(const Json& j) {
    const Json& vertices = require(j, "vertices");
    const Json& edges = require(j, "edges");
    if (!vertices.is_array() || !edges.is_array()) throw InputError("\"vertices\" and \"edges\" must be arrays");
    std::vector<std::string> labels;
    for (const auto& v : vertices) labels.push_back(label_from_json(v));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair, got " + e.dump());
        pairs.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
    }
    return Graph::from_labels(std::move(labels), pairs);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

SimplicialComplex read_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

Graph read_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

Json to_json(const SimplicialComplex& x) {
    Json facets = Json::array();
    for (const auto& f : x.facets()) facets.push_back(simplex_json(x, f));
    Json j;
    j["facets"] = std::move(facets);
    j["f_vector"] = x.f_vector();
    return j;
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({g.label(a), g.label(b)}));
    Json j;
    j["vertices"] = g.vertices().labels();
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const HomologyProfile& p) {
    Json torsion = Json::array();
    for (const auto& t : p.torsion) {
        Json row = Json::array();
        for (const auto& d : t) {
            if (d <= Integer(std::numeric_limits<long long>::max()))
                row.push_back(static_cast<long long>(d));
            else
                row.push_back(d.str());
        }
        torsion.push_back(std::move(row));
    }
    Json j;
    j["betti"] = p.betti;
    j["torsion"] = std::move(torsion);
    return j;
}

Json to_json(const HomPoset& p) {
    Json elements = Json::array();
    Json covers = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        elements.push_back(p.key(static_cast<int>(i)));
        for (int up : p.upper_covers(static_cast<int>(i))) covers.push_back(Json::array({i, up}));
    }
    Json j;
    j["source"] = to_json(p.source());
    j["size"] = p.size();
    j["elements"] = std::move(elements);
    j["covers"] = std::move(covers);
    return j;
}

Json to_json(const CollapseCertificate& c, const SimplicialComplex& start) {
    Json steps = Json::array();
    for (const auto& step : c.steps) {
        Json removed = Json::array();
        for (const auto& s : step.removed) removed.push_back(simplex_json(start, s));
        Json j;
        j["sigma"] = simplex_json(start, step.pair.sigma);
        j["tau"] = simplex_json(start, step.pair.tau);
        j["removed"] = std::move(removed);
        steps.push_back(std::move(j));
    }
    return steps;
}

Json to_json(const Cover& c) {
    Json j = Json::object();
    for (std::size_t i = 0; i < c.index.size(); ++i) j[c.index[i]] = to_json(c.pieces[i])["facets"];
    return j;
}

Json to_json(const Filtration& f) {
    Json order = Json::array();
    for (VertexId v : f.order) order.push_back(f.g1x.graph.label(v));
    Json complexes = Json::array();
    for (const auto& k : f.complexes) complexes.push_back(to_json(k));
    Json j;
    j["p"] = f.p;
    j["q"] = f.q;
    j["order"] = std::move(order);
    j["complexes"] = std::move(complexes);
    return j;
}

}  // namespace homcx
