#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "homcx/simplicial.hpp"

namespace homcx {

using Bitset = boost::dynamic_bitset<>;

/// Finite undirected graph; loops are ordinary edges (v,v).
class Graph {
public:
    Graph() = default;
    /// Edges are given as id pairs into `labels`; order of endpoints is irrelevant.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges);

    static Graph from_labels(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges);
    /// K_n on vertices "1".."n", optionally with a loop at every vertex.
    static Graph complete(int n, bool loops = false);

    std::size_t size() const { return dict_.size(); }
    const VertexDict& vertices() const { return dict_; }
    const std::string& label(VertexId v) const { return dict_.label(v); }

    bool adjacent(VertexId a, VertexId b) const { return adj_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool has_loop(VertexId v) const { return adjacent(v, v); }
    /// N(v); contains v itself iff v carries a loop.
    const Bitset& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Sorted (a <= b) edge list, lexicographic.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::size_t num_edges() const;

    Graph without_vertex(VertexId v) const;

private:
    VertexDict dict_;
    std::vector<Bitset> adj_;
};

Bitset to_bitset(const Simplex& set, std::size_t n);
Simplex from_bitset(const Bitset& bits);

/// G_{k,X} together with the simplex each of its vertices stands for.
struct SubdivisionGraph {
    Graph graph;
    /// Sd^{k-1}(X); the graph's vertices are its simplices.
    SimplicialComplex base;
    /// cells[v] is the simplex of `base` named by graph vertex v.
    std::vector<Simplex> cells;
};

/// 1-skeleton of Sd^k(X) with a loop at every vertex.
SubdivisionGraph build_g_kx(const SimplicialComplex& x, int k = 1);

/// N(A) = vertices adjacent to every member of A.
Bitset common_neighborhood(const Graph& g, const Bitset& a);
Simplex common_neighborhood(const Graph& g, const Simplex& a);

/// Simplices are the vertex sets with a common neighbor. Isolated vertices are dropped.
SimplicialComplex neighborhood_complex(const Graph& g);

/// Simplices are vertex sets inducing a complete subgraph (loops ignored).
SimplicialComplex clique_complex(const Graph& g);

struct FoldStep {
    VertexId removed;
    VertexId witness;
    std::string removed_label;
    std::string witness_label;
};

/// First pair u != v with N(u) ⊆ N(v), smallest u then smallest v.
std::optional<FoldStep> find_fold(const Graph& g);

struct FoldResult {
    Graph core;
    /// Ids in each step refer to the graph before that step.
    std::vector<FoldStep> steps;
};

FoldResult fold_reduce(const Graph& g);

/// Longest shortest path, ignoring loops. Throws DomainError when disconnected or empty.
int diameter(const Graph& g);

}  // namespace homcx
