#include "homcx/nerve.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "homcx/error.hpp"
#include "homcx/graph.hpp"

namespace homcx {

Cover star_cover(const SimplicialComplex& x) {
    if (x.empty()) throw DomainError("star cover of the empty complex");
    const SubdivisionGraph g = build_g_kx(x, 1);
    const auto& labels = g.graph.vertices().labels();
    Cover c;
    for (std::size_t v = 0; v < x.num_vertices(); ++v) {
        // The vertex {v} of G_{1,X} is looped, so N({v}) is its neighbor set.
        const auto cell = g.base.simplex_of({x.label(static_cast<VertexId>(v))});
        const int at = static_cast<int>(std::lower_bound(g.cells.begin(), g.cells.end(), *cell, CanonicalLess{}) -
                                        g.cells.begin());
        c.index.push_back(x.label(static_cast<VertexId>(v)));
        c.pieces.emplace_back(labels, std::vector<Simplex>{from_bitset(g.graph.neighbors(at))});
    }
    return c;
}

namespace {

/// Pieces re-expressed over one shared label dictionary, as sorted simplex lists.
struct Universe {
    std::vector<std::string> labels;
    std::vector<std::vector<Simplex>> pieces;
};

Universe common_universe(const Cover& c) {
    Universe u;
    std::unordered_map<std::string, VertexId> ids;
    for (const auto& piece : c.pieces)
        for (const auto& l : piece.vertices().labels())
            if (ids.emplace(l, static_cast<VertexId>(u.labels.size())).second) u.labels.push_back(l);
    for (const auto& piece : c.pieces) {
        std::vector<Simplex> out;
        out.reserve(piece.simplices().size());
        for (const auto& s : piece.simplices()) {
            Simplex t;
            for (VertexId v : s) t.push_back(ids.at(piece.label(v)));
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end());
        u.pieces.push_back(std::move(out));
    }
    return u;
}

std::vector<Simplex> intersect(const std::vector<Simplex>& a, const std::vector<Simplex>& b) {
    std::vector<Simplex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Visits every index subset with a nonempty intersection, passing the subset and the intersection.
template <typename Visit>
void for_each_nonempty_intersection(const Universe& u, Visit visit) {
    Simplex subset;
    std::function<void(std::size_t, const std::vector<Simplex>&)> grow = [&](std::size_t from,
                                                                             const std::vector<Simplex>& common) {
        for (std::size_t j = from; j < u.pieces.size(); ++j) {
            auto next = subset.empty() ? u.pieces[j] : intersect(common, u.pieces[j]);
            if (next.empty()) continue;
            subset.push_back(static_cast<VertexId>(j));
            visit(subset, next);
            grow(j + 1, next);
            subset.pop_back();
        }
    };
    grow(0, {});
}

}  // namespace

SimplicialComplex nerve_of_cover(const Cover& c) {
    if (c.index.size() != c.pieces.size()) throw DomainError("cover index and pieces differ in length");
    const Universe u = common_universe(c);
    std::vector<Simplex> simplices;
    for_each_nonempty_intersection(u, [&](const Simplex& subset, const std::vector<Simplex>&) {
        simplices.push_back(subset);
    });
    return SimplicialComplex(c.index, std::move(simplices));
}

NerveHypothesisReport verify_nerve_theorem_hypotheses(const Cover& c) {
    NerveHypothesisReport report;
    const Universe u = common_universe(c);
    for_each_nonempty_intersection(u, [&](const Simplex& subset, const std::vector<Simplex>& common) {
        ++report.intersections_checked;
        Simplex verts;
        for (const auto& s : common) verts = set_union(verts, s);
        report.max_intersection_dim = std::max(report.max_intersection_dim, verts.size() - 1);
        const bool full = verts.size() < 63 && common.size() + 1 == (std::size_t{1} << verts.size());
        if (!full && report.failures.size() < 10) {
            std::string msg = "intersection over {";
            for (std::size_t i = 0; i < subset.size(); ++i)
                msg += (i ? "," : "") + c.index[static_cast<std::size_t>(subset[i])];
            msg += "} has " + std::to_string(common.size()) + " simplices on " + std::to_string(verts.size()) +
                   " vertices; not a full simplex";
            report.failures.push_back(std::move(msg));
        }
    });
    return report;
}

SimplicialComplex cover_union(const Cover& c) {
    const Universe u = common_universe(c);
    std::vector<Simplex> generators;
    for (const auto& piece : c.pieces)
        for (const auto& f : piece.facets()) {
            Simplex t;
            for (VertexId v : f) t.push_back(static_cast<VertexId>(
                std::find(u.labels.begin(), u.labels.end(), piece.label(v)) - u.labels.begin()));
            std::sort(t.begin(), t.end());
            generators.push_back(std::move(t));
        }
    return SimplicialComplex(u.labels, std::move(generators));
}

}  // namespace homcx
