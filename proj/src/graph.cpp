#include "homcx/graph.hpp"

#include <algorithm>
#include <deque>

#include "homcx/error.hpp"

namespace homcx {

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : dict_(std::move(labels)), adj_(dict_.size(), Bitset(dict_.size())) {
    const auto n = static_cast<VertexId>(dict_.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("edge endpoint not in vertex set");
        adj_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
        adj_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    }
}

Graph Graph::from_labels(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    VertexDict dict(vertices);
    std::vector<std::pair<VertexId, VertexId>> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = dict.find(a), ib = dict.find(b);
        if (!ia || !ib) throw DomainError("edge endpoint not in vertex set: (" + a + "," + b + ")");
        ids.emplace_back(*ia, *ib);
    }
    return Graph(std::move(vertices), ids);
}

Graph Graph::complete(int n, bool loops) {
    if (n < 1) throw DomainError("complete graph needs at least one vertex");
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = loops ? i : i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(std::move(labels), edges);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t a = 0; a < adj_.size(); ++a)
        for (auto b = a == 0 ? adj_[a].find_first() : adj_[a].find_next(a - 1); b != Bitset::npos;
             b = adj_[a].find_next(b))
            out.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    return out;
}

std::size_t Graph::num_edges() const { return edges().size(); }

Graph Graph::without_vertex(VertexId v) const {
    std::vector<std::string> labels;
    std::vector<VertexId> remap(size(), -1);
    for (std::size_t i = 0; i < size(); ++i) {
        if (static_cast<VertexId>(i) == v) continue;
        remap[i] = static_cast<VertexId>(labels.size());
        labels.push_back(dict_.label(static_cast<VertexId>(i)));
    }
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto [a, b] : edges())
        if (a != v && b != v) kept.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
    return Graph(std::move(labels), kept);
}

Bitset to_bitset(const Simplex& set, std::size_t n) {
    Bitset out(n);
    for (VertexId v : set) out.set(static_cast<std::size_t>(v));
    return out;
}

Simplex from_bitset(const Bitset& bits) {
    Simplex out;
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(static_cast<VertexId>(i));
    return out;
}

SubdivisionGraph build_g_kx(const SimplicialComplex& x, int k) {
    if (k <= 0) throw DomainError("G_{k,X} needs k >= 1");
    if (x.empty()) throw DomainError("G_{k,X} needs a nonempty complex");
    SubdivisionGraph out;
    out.base = (k == 1) ? x : barycentric_subdivision(x, k - 1);
    out.cells = out.base.simplices();
    std::vector<std::string> labels;
    labels.reserve(out.cells.size());
    for (const auto& c : out.cells) labels.push_back(out.base.render(c));

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i));
        // canonical order puts every proper face before its cofaces
        for (std::size_t j = i + 1; j < out.cells.size(); ++j)
            if (is_subset(out.cells[i], out.cells[j]))
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
    out.graph = Graph(std::move(labels), edges);
    return out;
}

Bitset common_neighborhood(const Graph& g, const Bitset& a) {
    if (a.size() != g.size()) throw DomainError("vertex set does not belong to this graph");
    if (a.none()) throw DomainError("common neighborhood of the empty set");
    Bitset out(g.size());
    out.set();
    for (auto v = a.find_first(); v != Bitset::npos; v = a.find_next(v)) out &= g.neighbors(static_cast<VertexId>(v));
    return out;
}

Simplex common_neighborhood(const Graph& g, const Simplex& a) {
    for (VertexId v : a)
        if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw DomainError("vertex not in graph");
    return from_bitset(common_neighborhood(g, to_bitset(a, g.size())));
}

SimplicialComplex neighborhood_complex(const Graph& g) {
    std::vector<Simplex> generators;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& n = g.neighbors(static_cast<VertexId>(v));
        if (n.any()) generators.push_back(from_bitset(n));
    }
    return SimplicialComplex(g.vertices().labels(), std::move(generators));
}

SimplicialComplex clique_complex(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<Bitset> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        adj[v] = g.neighbors(static_cast<VertexId>(v));
        adj[v].reset(v);
    }
    std::vector<Simplex> cliques;
    // Bron–Kerbosch with pivoting; R is kept as a sorted id list.
    auto expand = [&](auto&& self, Simplex& r, Bitset p, Bitset x) -> void {
        if (p.none() && x.none()) {
            cliques.push_back(r);
            return;
        }
        const Bitset px = p | x;
        std::size_t pivot = px.find_first();
        std::size_t best = (p & adj[pivot]).count();
        for (auto u = px.find_next(pivot); u != Bitset::npos; u = px.find_next(u)) {
            const auto c = (p & adj[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        const Bitset candidates = p - adj[pivot];
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            r.push_back(static_cast<VertexId>(v));
            self(self, r, p & adj[v], x & adj[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Simplex r;
    Bitset all(n);
    all.set();
    if (n > 0) expand(expand, r, all, Bitset(n));
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    return SimplicialComplex::from_maximal_facets(g.vertices().labels(), std::move(cliques));
}

std::optional<FoldStep> find_fold(const Graph& g) {
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (u == v) continue;
            if (g.neighbors(static_cast<VertexId>(u)).is_subset_of(g.neighbors(static_cast<VertexId>(v)))) {
                return FoldStep{static_cast<VertexId>(u), static_cast<VertexId>(v),
                                g.label(static_cast<VertexId>(u)), g.label(static_cast<VertexId>(v))};
            }
        }
    }
    return std::nullopt;
}

FoldResult fold_reduce(const Graph& g) {
    FoldResult out{g, {}};
    while (auto step = find_fold(out.core)) {
        out.core = out.core.without_vertex(step->removed);
        out.steps.push_back(std::move(*step));
    }
    return out;
}

int diameter(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) throw DomainError("diameter of the empty graph");
    int best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(static_cast<VertexId>(x));
            for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (int d : dist) {
            if (d < 0) throw DomainError("infinite diameter");
            best = std::max(best, d);
        }
    }
    return best;
}

}  // namespace homcx
