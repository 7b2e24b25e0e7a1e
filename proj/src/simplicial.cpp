#include "homcx/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "homcx/error.hpp"

namespace homcx {

bool is_subset(const Simplex& sub, const Simplex& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Simplex set_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && digit(a[ie])) ++ie;
            while (je < b.size() && digit(b[je])) ++je;
            std::size_t is = i, js = j;
            while (is + 1 < ie && a[is] == '0') ++is;
            while (js + 1 < je && b[js] == '0') ++js;
            const std::size_t la = ie - is, lb = je - js;
            if (la != lb) return la < lb;
            const int c = a.compare(is, la, b, js, lb);
            if (c != 0) return c < 0;
            if ((ie - i) != (je - j)) return (ie - i) < (je - j);
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

// ---------------------------------------------------------------------------
// VertexDict

VertexDict::VertexDict(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<VertexId>(i)).second)
            throw DomainError("duplicate vertex label '" + labels_[i] + "'");
    }
}

std::optional<VertexId> VertexDict::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId VertexDict::id(const std::string& label) const {
    auto found = find(label);
    if (!found) throw DomainError("unknown vertex label '" + label + "'");
    return *found;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

struct SimplicialComplex::Closure {
    std::once_flag once;
    std::vector<Simplex> simplices;
};

SimplicialComplex::SimplicialComplex() : closure_(std::make_shared<Closure>()) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators)
    : closure_(std::make_shared<Closure>()) {
    const auto n = static_cast<VertexId>(labels.size());
    for (auto& g : generators) {
        if (g.empty()) throw DomainError("empty simplex");
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw DomainError("duplicate vertex in simplex");
        if (g.front() < 0 || g.back() >= n) throw DomainError("vertex id out of range");
    }
    std::sort(generators.begin(), generators.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<Simplex> kept;
    for (auto& g : generators) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                          [&](const Simplex& k) { return is_subset(g, k); });
        if (!absorbed) kept.push_back(std::move(g));
    }

    std::vector<char> used(labels.size(), 0);
    for (const auto& f : kept)
        for (VertexId v : f) used[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexId> remap(labels.size(), -1);
    std::vector<std::string> compact;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (used[i]) {
            remap[i] = static_cast<VertexId>(compact.size());
            compact.push_back(std::move(labels[i]));
        }
    }
    for (auto& f : kept)
        for (auto& v : f) v = remap[static_cast<std::size_t>(v)];
    std::sort(kept.begin(), kept.end(), CanonicalLess{});

    dict_ = VertexDict(std::move(compact));
    facets_ = std::move(kept);
}

SimplicialComplex SimplicialComplex::from_maximal_facets(std::vector<std::string> labels,
                                                         std::vector<Simplex> facets) {
    SimplicialComplex out;
    std::vector<char> used(labels.size(), 0);
    for (const auto& f : facets)
        for (VertexId v : f) used[static_cast<std::size_t>(v)] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        std::vector<VertexId> remap(labels.size(), -1);
        std::vector<std::string> compact;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!used[i]) continue;
            remap[i] = static_cast<VertexId>(compact.size());
            compact.push_back(std::move(labels[i]));
        }
        for (auto& f : facets)
            for (auto& v : f) v = remap[static_cast<std::size_t>(v)];
        labels = std::move(compact);
    }
    std::sort(facets.begin(), facets.end(), CanonicalLess{});
    out.dict_ = VertexDict(std::move(labels));
    out.facets_ = std::move(facets);
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, dimension(f));
    return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return false;
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return is_subset(s, f); });
}

const std::vector<Simplex>& SimplicialComplex::simplices() const {
    std::call_once(closure_->once, [this] {
        const int top = dim();
        if (top < 0) return;
        // Level-wise downward closure: each face is generated once per coface.
        std::vector<std::unordered_set<Simplex, SimplexHash>> levels(static_cast<std::size_t>(top) + 2);
        for (const auto& f : facets_) levels[f.size()].insert(f);
        for (std::size_t sz = levels.size() - 1; sz >= 2; --sz) {
            for (const auto& s : levels[sz]) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex face;
                    face.reserve(sz - 1);
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) face.push_back(s[i]);
                    levels[sz - 1].insert(std::move(face));
                }
            }
        }
        auto& out = closure_->simplices;
        for (std::size_t sz = 1; sz < levels.size(); ++sz) {
            const std::size_t start = out.size();
            out.insert(out.end(), levels[sz].begin(), levels[sz].end());
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
        }
    });
    return closure_->simplices;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& s : simplices()) ++f[s.size() - 1];
    return f;
}

std::string SimplicialComplex::render(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += dict_.label(s[i]);
    }
    out += '}';
    return out;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(dict_.label(v));
    return out;
}

std::optional<Simplex> SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
    Simplex s;
    s.reserve(labels.size());
    for (const auto& l : labels) {
        auto id = dict_.find(l);
        if (!id) return std::nullopt;
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    return s;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.facets_.size() != b.facets_.size()) return false;
    if (a.dict_.labels() == b.dict_.labels()) return a.facets_ == b.facets_;
    auto by_label = [](const SimplicialComplex& x) {
        std::vector<std::vector<std::string>> out;
        out.reserve(x.facets_.size());
        for (const auto& f : x.facets_) {
            auto l = x.labels_of(f);
            std::sort(l.begin(), l.end());
            out.push_back(std::move(l));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return by_label(a) == by_label(b);
}

SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_lists) {
    std::vector<std::string> labels;
    for (const auto& f : facet_lists) {
        if (f.empty()) throw DomainError("empty simplex");
        labels.insert(labels.end(), f.begin(), f.end());
    }
    std::sort(labels.begin(), labels.end(), natural_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    VertexDict dict(labels);
    std::vector<Simplex> generators;
    generators.reserve(facet_lists.size());
    for (const auto& f : facet_lists) {
        Simplex s;
        for (const auto& l : f) s.push_back(dict.id(l));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw DomainError("duplicate vertex label in simplex");
        generators.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(labels), std::move(generators));
}

const std::vector<Simplex>& all_simplices(const SimplicialComplex& x) { return x.simplices(); }

SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
    if (k < 0) throw DomainError("skeleton dimension must be non-negative");
    std::vector<Simplex> generators;
    const auto want = static_cast<std::size_t>(k) + 1;
    for (const auto& f : x.facets()) {
        if (f.size() <= want) {
            generators.push_back(f);
            continue;
        }
        // every (k+1)-subset of f
        std::vector<char> mask(f.size(), 0);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(want), 1);
        do {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask[i]) s.push_back(f[i]);
            generators.push_back(std::move(s));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return SimplicialComplex(x.vertices().labels(), std::move(generators));
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
    std::int64_t chi = 0;
    for (const auto& s : x.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(std::vector<std::string> keys, std::vector<std::vector<int>> upper_covers)
    : keys_(std::move(keys)), up_(std::move(upper_covers)) {
    if (up_.size() != keys_.size()) throw DomainError("poset cover list does not match element count");
    down_.assign(keys_.size(), {});
    for (std::size_t a = 0; a < up_.size(); ++a) {
        std::sort(up_[a].begin(), up_[a].end());
        for (int b : up_[a]) {
            if (b < 0 || static_cast<std::size_t>(b) >= keys_.size() || static_cast<std::size_t>(b) == a)
                throw DomainError("invalid covering relation");
            down_[static_cast<std::size_t>(b)].push_back(static_cast<int>(a));
        }
    }
}

Poset Poset::reduce(std::vector<std::string> keys, const std::vector<std::vector<char>>& lt) {
    const std::size_t n = keys.size();
    std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (lt[a][b]) below[b].set(a);
    std::vector<std::vector<int>> up(n);
    for (std::size_t b = 0; b < n; ++b) {
        boost::dynamic_bitset<> reachable(n);
        for (auto c = below[b].find_first(); c != boost::dynamic_bitset<>::npos; c = below[b].find_next(c))
            reachable |= below[c];
        const auto covers = below[b] - reachable;
        for (auto a = covers.find_first(); a != boost::dynamic_bitset<>::npos; a = covers.find_next(a))
            up[a].push_back(static_cast<int>(b));
    }
    return Poset(std::move(keys), std::move(up));
}

std::vector<std::pair<int, int>> Poset::covering_relations() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < up_.size(); ++a)
        for (int b : up_[a]) out.emplace_back(static_cast<int>(a), b);
    return out;
}

bool Poset::less(int a, int b) const {
    if (a == b) return false;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{a};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : up_[static_cast<std::size_t>(x)]) {
            if (y == b) return true;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

Poset face_poset(const SimplicialComplex& x) {
    const auto& all = x.simplices();
    std::unordered_map<Simplex, int, SimplexHash> index;
    index.reserve(all.size());
    std::vector<std::string> keys;
    keys.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        index.emplace(all[i], static_cast<int>(i));
        keys.push_back(x.render(all[i]));
    }
    std::vector<std::vector<int>> up(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& s = all[i];
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != drop) face.push_back(s[j]);
            up[static_cast<std::size_t>(index.at(face))].push_back(static_cast<int>(i));
        }
    }
    return Poset(std::move(keys), std::move(up));
}

SimplicialComplex order_complex(const Poset& p, std::size_t max_chains) {
    std::vector<Simplex> chains;
    Simplex path;
    // Maximal chains are exactly the Hasse-diagram paths from a minimal to a maximal element.
    auto walk = [&](auto&& self, int x) -> void {
        path.push_back(x);
        const auto& ups = p.upper_covers(x);
        if (ups.empty()) {
            if (chains.size() >= max_chains) throw CapExceeded("order complex", chains.size());
            Simplex c = path;
            std::sort(c.begin(), c.end());
            chains.push_back(std::move(c));
        } else {
            for (int y : ups) self(self, y);
        }
        path.pop_back();
    };
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.lower_covers(static_cast<int>(i)).empty()) walk(walk, static_cast<int>(i));
    return SimplicialComplex::from_maximal_facets(p.keys(), std::move(chains));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x, int k) {
    if (k <= 0) throw DomainError("subdivision depth must be at least 1");
    SimplicialComplex out = x;
    for (int i = 0; i < k; ++i) out = order_complex(face_poset(out));
    return out;
}

}  // namespace homcx
