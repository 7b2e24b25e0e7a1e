#include "homcx/hom.hpp"

#include <algorithm>
#include <map>

#include <boost/container_hash/hash.hpp>

#include "homcx/error.hpp"

namespace homcx {

std::size_t Multihom::weight() const {
    std::size_t w = 0;
    for (const auto& s : images) w += s.size();
    return w;
}

std::size_t MultihomHash::operator()(const Multihom& m) const {
    std::size_t seed = 0;
    for (const auto& s : m.images) boost::hash_combine(seed, boost::hash_range(s.begin(), s.end()));
    return seed;
}

bool leq(const Multihom& a, const Multihom& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t u = 0; u < a.size(); ++u)
        if (!is_subset(a[u], b[u])) return false;
    return true;
}

namespace {

void check_images(const Graph& h, const Multihom& eta) {
    for (const auto& img : eta.images) {
        if (img.empty()) throw DomainError("multihomomorphism image is empty");
        for (VertexId v : img)
            if (v < 0 || static_cast<std::size_t>(v) >= h.size())
                throw DomainError("image vertex not in target graph");
    }
}

bool product_in_edges(const Graph& h, const VertexSet& a, const VertexSet& b) {
    for (VertexId x : a)
        for (VertexId y : b)
            if (!h.adjacent(x, y)) return false;
    return true;
}

}  // namespace

bool is_multihom(const Graph& g, const Graph& h, const Multihom& eta) {
    if (eta.size() != g.size()) throw DomainError("multihomomorphism is not total");
    check_images(h, eta);
    for (auto [u, w] : g.edges())
        if (!product_in_edges(h, eta[static_cast<std::size_t>(u)], eta[static_cast<std::size_t>(w)])) return false;
    return true;
}

std::string render(const Multihom& eta, const Graph& h) {
    std::string out = "(";
    for (std::size_t u = 0; u < eta.size(); ++u) {
        if (u) out += '|';
        out += '{';
        for (std::size_t i = 0; i < eta[u].size(); ++i) {
            if (i) out += ',';
            out += h.label(eta[u][i]);
        }
        out += '}';
    }
    out += ')';
    return out;
}

// ---------------------------------------------------------------------------
// HomPoset

HomPoset::HomPoset(Graph source, Graph target, std::vector<Multihom> elements)
    : source_(std::move(source)), target_(std::move(target)), elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));

    // Downward closure makes the covers exactly the one-vertex extensions.
    up_.assign(elements_.size(), {});
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        Multihom probe = elements_[i];
        for (std::size_t u = 0; u < probe.size(); ++u) {
            const VertexSet original = probe.images[u];
            for (std::size_t v = 0; v < target_.size(); ++v) {
                const auto vid = static_cast<VertexId>(v);
                if (std::binary_search(original.begin(), original.end(), vid)) continue;
                VertexSet grown = original;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), vid), vid);
                probe.images[u] = std::move(grown);
                if (auto it = index_.find(probe); it != index_.end()) up_[i].push_back(it->second);
            }
            probe.images[u] = original;
        }
        std::sort(up_[i].begin(), up_[i].end());
    }
}

int HomPoset::find(const Multihom& eta) const {
    auto it = index_.find(eta);
    return it == index_.end() ? -1 : it->second;
}

Poset HomPoset::to_poset() const {
    std::vector<std::string> keys;
    keys.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) keys.push_back(key(static_cast<int>(i)));
    return Poset(std::move(keys), up_);
}

namespace {

class HomEnumerator {
public:
    HomEnumerator(const Graph& g, const Graph& h, std::size_t cap)
        : g_(g), h_(h), cap_(cap), current_(g.size()), neighborhoods_(g.size()) {}

    std::vector<Multihom> run() {
        place(0);
        return std::move(out_);
    }

private:
    void place(std::size_t u) {
        if (u == g_.size()) {
            if (out_.size() >= cap_) throw CapExceeded("Hom enumeration", out_.size());
            out_.push_back(Multihom{current_});
            return;
        }
        Bitset pool(h_.size());
        pool.set();
        for (std::size_t w = 0; w < u; ++w)
            if (g_.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(w))) pool &= neighborhoods_[w];
        const bool looped = g_.has_loop(static_cast<VertexId>(u));
        if (looped) {
            for (std::size_t v = 0; v < h_.size(); ++v)
                if (!h_.has_loop(static_cast<VertexId>(v))) pool.reset(v);
        }
        const Simplex candidates = from_bitset(pool);
        VertexSet chosen;
        for (std::size_t size = 1; size <= candidates.size(); ++size)
            choose(u, looped, candidates, 0, size, chosen);
    }

    // Combinations of `candidates` of the given size, in lexicographic order.
    void choose(std::size_t u, bool looped, const Simplex& candidates, std::size_t from, std::size_t size,
                VertexSet& chosen) {
        if (chosen.size() == size) {
            current_[u] = chosen;
            neighborhoods_[u] = common_neighborhood(h_, to_bitset(chosen, h_.size()));
            place(u + 1);
            return;
        }
        const std::size_t need = size - chosen.size();
        for (std::size_t i = from; i + need <= candidates.size(); ++i) {
            const VertexId v = candidates[i];
            if (looped && !std::all_of(chosen.begin(), chosen.end(), [&](VertexId c) { return h_.adjacent(c, v); }))
                continue;
            chosen.push_back(v);
            choose(u, looped, candidates, i + 1, size, chosen);
            chosen.pop_back();
        }
    }

    const Graph& g_;
    const Graph& h_;
    std::size_t cap_;
    std::vector<VertexSet> current_;
    std::vector<Bitset> neighborhoods_;
    std::vector<Multihom> out_;
};

}  // namespace

HomPoset enumerate_hom(const Graph& g, const Graph& h, std::size_t cap) {
    if (g.size() == 0 || h.size() == 0) throw DomainError("Hom needs nonempty graphs");
    auto elements = HomEnumerator(g, h, cap).run();
    return HomPoset(g, h, std::move(elements));
}

SimplicialComplex hom_order_complex(const HomPoset& p, std::size_t max_chains) {
    return order_complex(p.to_poset(), max_chains);
}

Multihom restriction_map(const Multihom& eta) {
    if (eta.size() < 3) throw DomainError("restriction map needs n >= 3");
    Multihom out = eta;
    out.images.pop_back();
    return out;
}

Multihom fiber_maximum(const Multihom& rho, const Graph& h) {
    if (rho.size() < 2) throw DomainError("fiber maximum needs n >= 3");
    check_images(h, rho);
    Bitset last(h.size());
    last.set();
    for (const auto& img : rho.images) last &= common_neighborhood(h, to_bitset(img, h.size()));
    if (last.none()) throw InvariantViolation("empty common neighborhood over the fiber");
    Multihom out = rho;
    out.images.push_back(from_bitset(last));
    return out;
}

// ---------------------------------------------------------------------------
// Common-neighbor witness

WitnessTrace common_neighbor_witness(const Multihom& eta, const SubdivisionGraph& h) {
    const Graph& graph = h.graph;
    const std::size_t n = eta.size();
    if (n < 2) throw DomainError("witness construction needs n >= 2");
    check_images(graph, eta);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!product_in_edges(graph, eta[i], eta[j])) throw DomainError("not an element of Hom(K_n, H)");

    auto cell = [&](VertexId v) -> const Simplex& { return h.cells[static_cast<std::size_t>(v)]; };
    auto min_dim = [&](const VertexSet& img) {
        int d = dimension(cell(img.front()));
        for (VertexId v : img) d = std::min(d, dimension(cell(v)));
        return d;
    };

    WitnessTrace trace;
    trace.k = 0;
    trace.min_dim = min_dim(eta[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const int d = min_dim(eta[i]);
        if (d < trace.min_dim) {
            trace.min_dim = d;
            trace.k = static_cast<int>(i);
        }
    }

    std::vector<Simplex> sorted;
    for (VertexId v : eta[static_cast<std::size_t>(trace.k)]) sorted.push_back(cell(v));
    std::stable_sort(sorted.begin(), sorted.end(), CanonicalLess{});

    Simplex tau;
    std::vector<Simplex> remaining;
    for (const auto& s : sorted) {
        if (dimension(s) == trace.min_dim) {
            tau = set_union(tau, s);
            ++trace.i1;
        } else {
            remaining.push_back(s);
        }
    }
    trace.tau_chain.push_back(tau);
    trace.s_families.push_back(remaining);

    const std::size_t max_steps = remaining.size() + 1;
    for (std::size_t step = 0;; ++step) {
        if (step > max_steps) throw InvariantViolation("witness iteration did not terminate");
        if (remaining.empty()) break;
        std::vector<Simplex> incomparable, rest;
        for (auto& s : remaining) {
            if (!is_subset(tau, s) && !is_subset(s, tau)) incomparable.push_back(std::move(s));
            else rest.push_back(std::move(s));
        }
        remaining = std::move(rest);
        if (incomparable.empty()) break;
        for (const auto& s : incomparable) tau = set_union(tau, s);
        trace.s_families.push_back(std::move(incomparable));
        trace.tau_chain.push_back(tau);
    }

    auto it = std::lower_bound(h.cells.begin(), h.cells.end(), tau, CanonicalLess{});
    if (it == h.cells.end() || *it != tau)
        throw InvariantViolation("constructed witness " + h.base.render(tau) + " is not a simplex");
    trace.witness = static_cast<VertexId>(it - h.cells.begin());
    trace.witness_label = graph.label(trace.witness);

    for (std::size_t i = 0; i < n; ++i) {
        const Bitset nb = common_neighborhood(graph, to_bitset(eta[i], graph.size()));
        if (!nb.test(static_cast<std::size_t>(trace.witness)))
            throw InvariantViolation("witness " + trace.witness_label + " is not a common neighbor of coordinate " +
                                     std::to_string(i + 1));
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Quillen-type fiber conditions for the restriction map

QuillenReport check_quillen_conditions(int n, const Graph& h, std::size_t cap) {
    if (n < 3) throw DomainError("fiber conditions need n >= 3");
    QuillenReport report;
    report.n = n;
    const HomPoset source = enumerate_hom(Graph::complete(n), h, cap);
    const HomPoset target = enumerate_hom(Graph::complete(n - 1), h, cap);
    report.source_size = source.size();
    report.target_size = target.size();

    auto fail = [&](std::string msg) {
        if (report.failures.size() < 10) report.failures.push_back(std::move(msg));
        else if (report.failures.size() == 10) report.failures.emplace_back("...");
    };

    std::map<Multihom, std::vector<int>> fibers;
    for (std::size_t i = 0; i < source.size(); ++i) {
        Multihom image = restriction_map(source[i]);
        if (target.find(image) < 0) fail("restriction of " + source.key(static_cast<int>(i)) + " is not in the target");
        fibers[std::move(image)].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < source.size(); ++i)
        for (int j : source.upper_covers(static_cast<int>(i)))
            if (!leq(restriction_map(source[i]), restriction_map(source[static_cast<std::size_t>(j)])))
                report.monotone = false;

    // (A): every fiber has a unique maximum, and it is the fiber maximum.
    for (std::size_t q = 0; q < target.size(); ++q) {
        const Multihom& rho = target[q];
        ++report.fibers_checked;
        Multihom top;
        try {
            top = fiber_maximum(rho, h);
        } catch (const InvariantViolation&) {
            fail("fiber over " + target.key(static_cast<int>(q)) + ": empty common neighborhood");
            continue;
        }
        if (source.find(top) < 0) {
            fail("fiber over " + target.key(static_cast<int>(q)) + ": maximum " + render(top, h) + " not in Hom");
            continue;
        }
        auto it = fibers.find(rho);
        if (it == fibers.end()) {
            fail("fiber over " + target.key(static_cast<int>(q)) + " is empty");
            continue;
        }
        for (int g : it->second)
            if (!leq(source[static_cast<std::size_t>(g)], top))
                fail("fiber over " + target.key(static_cast<int>(q)) + ": " + source.key(g) + " exceeds " + render(top, h));
    }

    // (B): for rho <= phi(eta), (rho, eta(n)) is the maximum of the fiber below eta.
    for (std::size_t p = 0; p < source.size(); ++p) {
        const Multihom& eta = source[p];
        const Multihom restricted = restriction_map(eta);
        for (std::size_t q = 0; q < target.size(); ++q) {
            const Multihom& rho = target[q];
            if (!leq(rho, restricted)) continue;
            ++report.pairs_checked;
            Multihom candidate = rho;
            candidate.images.push_back(eta.images.back());
            if (source.find(candidate) < 0) {
                fail("(" + target.key(static_cast<int>(q)) + ", " + source.key(static_cast<int>(p)) +
                     "): " + render(candidate, h) + " not in Hom");
                continue;
            }
            for (int g : fibers[rho]) {
                const Multihom& gamma = source[static_cast<std::size_t>(g)];
                if (leq(gamma, eta) && !leq(gamma, candidate))
                    fail("(" + target.key(static_cast<int>(q)) + ", " + source.key(static_cast<int>(p)) +
                         "): " + source.key(g) + " not below " + render(candidate, h));
            }
        }
    }
    return report;
}

}  // namespace homcx
