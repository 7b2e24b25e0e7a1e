#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

namespace homcx {

using VertexId = int;

/// Strictly ascending list of vertex ids. The empty simplex is never stored.
using Simplex = std::vector<VertexId>;

using SimplexHash = boost::hash<Simplex>;

inline int dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Canonical simplex order: dimension ascending, then lexicographic on ids.
struct CanonicalLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

bool is_subset(const Simplex& sub, const Simplex& super);
Simplex set_union(const Simplex& a, const Simplex& b);
Simplex set_intersection(const Simplex& a, const Simplex& b);

/// Orders labels so that runs of digits compare numerically ("2" < "10").
bool natural_less(const std::string& a, const std::string& b);

/// Bijection between printable labels and dense ids 0..n-1.
class VertexDict {
public:
    VertexDict() = default;
    explicit VertexDict(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(VertexId id) const { return labels_.at(static_cast<std::size_t>(id)); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(const std::string& label) const;
    VertexId id(const std::string& label) const;  // throws DomainError if absent

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
};

/// Finite abstract simplicial complex stored by its facets.
///
/// Faces are implicit: a set is a simplex iff it lies in some facet. The full
/// simplex list is materialized on first request and shared between copies.
/// Vertex ids are contiguous and every vertex lies in some facet.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Facets are given in ids of `labels`; contained generators are absorbed
    /// and labels that appear in no facet are dropped (order preserved).
    SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators);

    /// Skips absorption; the caller guarantees the generators are pairwise
    /// incomparable. Unused labels are still dropped.
    static SimplicialComplex from_maximal_facets(std::vector<std::string> labels,
                                                 std::vector<Simplex> facets);

    const VertexDict& vertices() const { return dict_; }
    std::size_t num_vertices() const { return dict_.size(); }
    const std::string& label(VertexId id) const { return dict_.label(id); }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool empty() const { return facets_.empty(); }
    int dim() const;

    bool contains(const Simplex& s) const;

    /// Every simplex exactly once, canonical order.
    const std::vector<Simplex>& simplices() const;
    /// Number of simplices of each dimension 0..dim().
    std::vector<std::size_t> f_vector() const;

    /// "{a,b,c}" using this complex's labels.
    std::string render(const Simplex& s) const;
    /// Labels of a simplex, in id order.
    std::vector<std::string> labels_of(const Simplex& s) const;
    /// Translates labels into a simplex of this complex's ids; nullopt if a label is unknown.
    std::optional<Simplex> simplex_of(const std::vector<std::string>& labels) const;

    /// Literal equality of the simplex sets, compared by label.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct Closure;

    VertexDict dict_;
    std::vector<Simplex> facets_;
    std::shared_ptr<Closure> closure_;
};

/// Builds a complex from label lists; ids follow natural label order.
SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_lists);

const std::vector<Simplex>& all_simplices(const SimplicialComplex& x);
SimplicialComplex skeleton(const SimplicialComplex& x, int k);
std::int64_t euler_characteristic(const SimplicialComplex& x);

/// Finite poset stored by its covering relation.
class Poset {
public:
    Poset() = default;
    /// `upper_covers[i]` lists the elements covering i. Trusted to be transitively reduced.
    Poset(std::vector<std::string> keys, std::vector<std::vector<int>> upper_covers);

    /// Builds the covering relation of the strict order `less` by transitive reduction.
    template <typename Less>
    static Poset from_relation(std::vector<std::string> keys, Less less);

    std::size_t size() const { return keys_.size(); }
    const std::string& key(int i) const { return keys_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& keys() const { return keys_; }
    const std::vector<int>& upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& lower_covers(int i) const { return down_[static_cast<std::size_t>(i)]; }
    /// All covering pairs (lower, upper), sorted.
    std::vector<std::pair<int, int>> covering_relations() const;
    /// Strict order, reconstructed by transitive closure.
    bool less(int a, int b) const;

private:
    static Poset reduce(std::vector<std::string> keys, const std::vector<std::vector<char>>& lt);

    std::vector<std::string> keys_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
};

template <typename Less>
Poset Poset::from_relation(std::vector<std::string> keys, Less less) {
    const std::size_t n = keys.size();
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && less(static_cast<int>(a), static_cast<int>(b))) lt[a][b] = 1;
    return reduce(std::move(keys), lt);
}

/// Simplices of `x` ordered by inclusion; element i is all_simplices(x)[i].
Poset face_poset(const SimplicialComplex& x);

/// Chains of `p`. Vertex i is element i; facets are the maximal chains.
/// Throws CapExceeded if there are more than `max_chains` maximal chains.
SimplicialComplex order_complex(const Poset& p, std::size_t max_chains = 10'000'000);

/// Sd^k(x). Vertex labels are renderings of the simplices one stage up.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x, int k = 1);

}  // namespace homcx
