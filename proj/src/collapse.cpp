#include "homcx/collapse.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "homcx/error.hpp"

namespace homcx {

namespace {

std::vector<Simplex> interval(const Simplex& tau, const Simplex& sigma) {
    Simplex extra;
    std::set_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(extra));
    std::vector<Simplex> out;
    const std::size_t count = std::size_t{1} << extra.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Simplex add;
        for (std::size_t i = 0; i < extra.size(); ++i)
            if (mask & (std::size_t{1} << i)) add.push_back(extra[i]);
        out.push_back(set_union(tau, add));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool proper_nonempty_face(const CollapsiblePair& pair) {
    return !pair.tau.empty() && pair.tau.size() < pair.sigma.size() && is_subset(pair.tau, pair.sigma);
}

}  // namespace

std::vector<CollapsiblePair> free_face_pairs(const SimplicialComplex& x) {
    std::vector<CollapsiblePair> out;
    const auto& facets = x.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const Simplex& sigma = facets[f];
        // a face of sigma lies in another facet g iff it lies in sigma ∩ g
        std::vector<Simplex> shared;
        for (std::size_t g = 0; g < facets.size(); ++g) {
            if (g == f) continue;
            Simplex common = set_intersection(sigma, facets[g]);
            if (!common.empty()) shared.push_back(std::move(common));
        }
        std::vector<Simplex> faces;
        const std::size_t count = std::size_t{1} << sigma.size();
        for (std::size_t mask = 1; mask + 1 < count; ++mask) {
            Simplex tau;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (mask & (std::size_t{1} << i)) tau.push_back(sigma[i]);
            const bool elsewhere = std::any_of(shared.begin(), shared.end(),
                                               [&](const Simplex& s) { return is_subset(tau, s); });
            if (!elsewhere) faces.push_back(std::move(tau));
        }
        std::sort(faces.begin(), faces.end(), CanonicalLess{});
        for (auto& tau : faces) out.push_back(CollapsiblePair{sigma, std::move(tau)});
    }
    return out;
}

bool is_collapsible(const SimplicialComplex& x, const CollapsiblePair& pair) {
    if (!proper_nonempty_face(pair)) return false;
    const auto& facets = x.facets();
    bool found = false;
    for (const auto& f : facets) {
        if (f == pair.sigma) {
            found = true;
        } else if (is_subset(pair.tau, f)) {
            return false;
        }
    }
    return found;
}

SimplicialComplex perform_collapse(const SimplicialComplex& x, const CollapsiblePair& pair) {
    if (!is_collapsible(x, pair)) throw DomainError("pair " + x.render(pair.sigma) + ", " + x.render(pair.tau) +
                                                    " is not collapsible");
    // Faces of sigma that avoid the interval are exactly those missing some vertex of tau.
    std::vector<Simplex> generators;
    for (const auto& f : x.facets())
        if (f != pair.sigma) generators.push_back(f);
    for (VertexId v : pair.tau) {
        Simplex face;
        for (VertexId w : pair.sigma)
            if (w != v) face.push_back(w);
        if (!face.empty()) generators.push_back(std::move(face));
    }
    return SimplicialComplex(x.vertices().labels(), std::move(generators));
}

SimplicialComplex replay_certificate(const SimplicialComplex& start, const CollapseCertificate& cert) {
    SimplicialComplex current = start;
    std::size_t index = 0;
    for (const auto& step : cert.steps) {
        auto sigma = current.simplex_of(start.labels_of(step.pair.sigma));
        auto tau = current.simplex_of(start.labels_of(step.pair.tau));
        if (!sigma || !tau || !is_collapsible(current, CollapsiblePair{*sigma, *tau}))
            throw InvariantViolation("certificate step " + std::to_string(index) + " (" + start.render(step.pair.sigma) +
                                     ", " + start.render(step.pair.tau) + ") is not collapsible");
        const auto expected = interval(step.pair.tau, step.pair.sigma);
        if (step.removed != expected)
            throw InvariantViolation("certificate step " + std::to_string(index) + " records a wrong interval");
        current = perform_collapse(current, CollapsiblePair{*sigma, *tau});
        ++index;
    }
    return current;
}

// ---------------------------------------------------------------------------
// SimplexStore

SimplexStore::SimplexStore(const SimplicialComplex& x)
    : labels_(x.vertices().labels()), cells_(x.simplices()) {
    const std::size_t n = cells_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index_.emplace(cells_[i], static_cast<int>(i));
    faces_.assign(n, {});
    cofaces_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = cells_[i];
        if (s.size() < 2) continue;
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != drop) face[k++] = s[j];
            const int f = index_.at(face);
            faces_[i].push_back(f);
            cofaces_[static_cast<std::size_t>(f)].push_back(static_cast<int>(i));
        }
    }
    alive_.assign(n, 1);
    coface_count_.resize(n);
    for (std::size_t i = 0; i < n; ++i) coface_count_[i] = static_cast<int>(cofaces_[i].size());
    alive_count_ = n;
}

int SimplexStore::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

bool SimplexStore::contains(const Simplex& s) const {
    const int i = index_of(s);
    return i >= 0 && alive(i);
}

bool SimplexStore::is_free_pair(const CollapsiblePair& pair) const {
    if (!proper_nonempty_face(pair)) return false;
    const int s = index_of(pair.sigma), t = index_of(pair.tau);
    if (s < 0 || t < 0 || !alive(s) || !alive(t) || coface_count_[static_cast<std::size_t>(s)] != 0) return false;
    // sigma is the only facet above tau iff every alive coface one dimension up sits inside sigma
    for (int c : cofaces_[static_cast<std::size_t>(t)])
        if (alive(c) && !is_subset(cells_[static_cast<std::size_t>(c)], pair.sigma)) return false;
    return true;
}

void SimplexStore::kill(int i) {
    auto& flag = alive_[static_cast<std::size_t>(i)];
    if (!flag) return;
    flag = 0;
    --alive_count_;
    for (int f : faces_[static_cast<std::size_t>(i)]) --coface_count_[static_cast<std::size_t>(f)];
}

std::vector<Simplex> SimplexStore::collapse(const CollapsiblePair& pair) {
    if (!is_free_pair(pair)) throw DomainError("pair is not collapsible in the current complex");
    auto removed = interval(pair.tau, pair.sigma);
    for (const auto& g : removed) kill(index_.at(g));
    return removed;
}

CollapseCertificate SimplexStore::collapse_greedily() {
    CollapseCertificate cert;
    std::priority_queue<int, std::vector<int>, std::greater<>> candidates;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (alive_[i] && coface_count_[i] == 1) candidates.push(static_cast<int>(i));
    while (!candidates.empty()) {
        const int tau = candidates.top();
        candidates.pop();
        if (!alive(tau) || coface_count_[static_cast<std::size_t>(tau)] != 1) continue;
        int sigma = -1;
        for (int c : cofaces_[static_cast<std::size_t>(tau)])
            if (alive(c)) sigma = c;
        // a face with a single coface one dimension up has that coface as its only facet
        kill(sigma);
        kill(tau);
        CollapseStep step;
        step.pair = CollapsiblePair{cells_[static_cast<std::size_t>(sigma)], cells_[static_cast<std::size_t>(tau)]};
        step.removed = {step.pair.tau, step.pair.sigma};
        cert.steps.push_back(std::move(step));
        for (int cell : {sigma, tau})
            for (int f : faces_[static_cast<std::size_t>(cell)])
                if (alive(f) && coface_count_[static_cast<std::size_t>(f)] == 1) candidates.push(f);
    }
    return cert;
}

std::vector<int> SimplexStore::cells_containing(VertexId v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (alive_[i] && std::binary_search(cells_[i].begin(), cells_[i].end(), v)) out.push_back(static_cast<int>(i));
    return out;
}

SimplicialComplex SimplexStore::to_complex() const {
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (alive_[i] && coface_count_[i] == 0) facets.push_back(cells_[i]);
    return SimplicialComplex::from_maximal_facets(labels_, std::move(facets));
}

GreedyCollapseResult greedy_collapse(const SimplicialComplex& x) {
    SimplexStore store(x);
    auto cert = store.collapse_greedily();
    return GreedyCollapseResult{store.to_complex(), std::move(cert)};
}

// ---------------------------------------------------------------------------
// K_l filtration

Filtration kl_filtration(const SimplicialComplex& x) {
    Filtration f;
    f.g1x = build_g_kx(x, 1);
    const auto& cells = f.g1x.cells;
    f.p = cells.size();
    f.q = x.num_vertices();
    if (f.p == f.q) throw DomainError("filtration undefined for a 0-dimensional complex");

    f.order.resize(f.p);
    for (std::size_t i = 0; i < f.p; ++i) f.order[i] = static_cast<VertexId>(i);
    // cells are canonical (dimension ascending, then lexicographic)
    std::stable_sort(f.order.begin(), f.order.end(), [&](VertexId a, VertexId b) {
        return cells[static_cast<std::size_t>(a)].size() > cells[static_cast<std::size_t>(b)].size();
    });

    const Graph& g = f.g1x.graph;
    const std::size_t stages = f.p - f.q + 1;
    for (std::size_t l = 1; l <= stages; ++l) {
        std::vector<Simplex> generators;
        for (std::size_t i = l; i <= f.p; ++i) generators.push_back(from_bitset(g.neighbors(f.order[i - 1])));
        f.complexes.emplace_back(g.vertices().labels(), std::move(generators));
    }
    return f;
}

SimplicialComplex vertex_star_union(const SubdivisionGraph& g1x, const SimplicialComplex& x) {
    std::vector<Simplex> generators;
    for (std::size_t v = 0; v < x.num_vertices(); ++v) {
        Simplex star;
        for (std::size_t c = 0; c < g1x.cells.size(); ++c) {
            const auto& cell = g1x.cells[c];
            if (std::binary_search(cell.begin(), cell.end(), static_cast<VertexId>(v)))
                star.push_back(static_cast<VertexId>(c));
        }
        generators.push_back(std::move(star));
    }
    return SimplicialComplex(g1x.graph.vertices().labels(), std::move(generators));
}

namespace {

std::string describe(const SimplicialComplex& c, std::size_t limit = 12) {
    std::string out = "facets:";
    std::size_t shown = 0;
    for (const auto& f : c.facets()) {
        if (shown++ == limit) {
            out += " ... (" + std::to_string(c.facets().size()) + " total)";
            break;
        }
        out += ' ' + c.render(f);
    }
    return out;
}

}  // namespace

KlCollapseReport verify_kl_collapse_sequence(const Filtration& f) {
    KlCollapseReport report;
    if (f.complexes.empty()) throw DomainError("empty filtration");
    const SimplicialComplex& k1 = f.complexes.front();
    const Graph& g = f.g1x.graph;
    SimplexStore store(k1);

    auto to_k1 = [&](const Simplex& in_g) {
        std::vector<std::string> labels;
        for (VertexId v : in_g) labels.push_back(g.label(v));
        auto s = k1.simplex_of(labels);
        if (!s) throw InvariantViolation("simplex missing from K_1");
        return *s;
    };

    for (std::size_t l = 1; l + 1 <= f.complexes.size(); ++l) {
        KlStage stage;
        stage.l = static_cast<int>(l);
        const VertexId pivot_g = f.order[l - 1];
        stage.pivot_label = g.label(pivot_g);
        const VertexId pivot = k1.vertices().id(stage.pivot_label);

        const Simplex top = to_k1(from_bitset(g.neighbors(pivot_g)));
        Simplex rest;
        for (VertexId v : top)
            if (v != pivot) rest.push_back(v);
        CollapsiblePair first{top, rest};
        if (!store.is_free_pair(first))
            throw InvariantViolation("stage " + std::to_string(l) + ": (N(" + stage.pivot_label + "), N(" +
                                     stage.pivot_label + ") minus it) is not collapsible; " +
                                     describe(store.to_complex()));
        stage.certificate.steps.push_back(CollapseStep{first, store.collapse(first)});

        // Only simplices outside K_{l+1} are collapsed; the rest must survive the stage.
        const SimplicialComplex& next = f.complexes[l];
        std::vector<int> candidates;
        for (int c : store.cells_containing(pivot)) {
            auto s = next.simplex_of(k1.labels_of(store.cell(c)));
            if (!s || !next.contains(*s)) candidates.push_back(c);
        }
        for (bool progress = true; progress;) {
            progress = false;
            for (int c : candidates) {
                if (!store.alive(c)) continue;
                const Simplex& sigma = store.cell(c);
                if (sigma.size() < 2) continue;
                Simplex tau;
                for (VertexId v : sigma)
                    if (v != pivot) tau.push_back(v);
                CollapsiblePair pair{sigma, std::move(tau)};
                if (store.is_free_pair(pair)) {
                    auto removed = store.collapse(pair);
                    stage.certificate.steps.push_back(CollapseStep{std::move(pair), std::move(removed)});
                    progress = true;
                    break;
                }
            }
        }

        const SimplicialComplex reached = store.to_complex();
        if (!(reached == next))
            throw InvariantViolation("stage " + std::to_string(l) + " (pivot " + stage.pivot_label +
                                     ") stalled before K_" + std::to_string(l + 1) + "; stuck " + describe(reached) +
                                     "; expected " + describe(next));
        for (const auto& step : stage.certificate.steps) report.combined.steps.push_back(step);
        report.stages.push_back(std::move(stage));
    }
    return report;
}

}  // namespace homcx
