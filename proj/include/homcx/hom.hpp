#pragma once

#include <cstddef>
#include <compare>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/simplicial.hpp"

namespace homcx {

inline constexpr std::size_t kDefaultHomCap = 1'000'000;

/// Sorted ids of target-graph vertices.
using VertexSet = Simplex;

/// Assignment of a nonempty vertex set of H to each vertex of G (by G's id order).
struct Multihom {
    std::vector<VertexSet> images;

    std::size_t size() const { return images.size(); }
    const VertexSet& operator[](std::size_t u) const { return images[u]; }
    /// Sum of image sizes; covering pairs differ by exactly one.
    std::size_t weight() const;

    friend bool operator==(const Multihom&, const Multihom&) = default;
    friend auto operator<=>(const Multihom&, const Multihom&) = default;
};

struct MultihomHash {
    std::size_t operator()(const Multihom& m) const;
};

/// Pointwise inclusion.
bool leq(const Multihom& a, const Multihom& b);

/// Hom condition on every edge of G, loops included.
bool is_multihom(const Graph& g, const Graph& h, const Multihom& eta);

/// "({a,b}|{c})" with H labels.
std::string render(const Multihom& eta, const Graph& h);

/// The poset of multihomomorphisms G -> H under pointwise inclusion.
class HomPoset {
public:
    HomPoset(Graph source, Graph target, std::vector<Multihom> elements);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<Multihom>& elements() const { return elements_; }
    const Multihom& operator[](std::size_t i) const { return elements_[i]; }
    /// Index of `eta`, or -1.
    int find(const Multihom& eta) const;
    const std::vector<int>& upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }
    std::string key(int i) const { return render(elements_[static_cast<std::size_t>(i)], target_); }

    Poset to_poset() const;

private:
    Graph source_;
    Graph target_;
    std::vector<Multihom> elements_;
    std::unordered_map<Multihom, int, MultihomHash> index_;
    std::vector<std::vector<int>> up_;
};

/// Depth-first over V(G); candidates for u are nonempty subsets of the common
/// neighborhood of the images already placed on u's neighbors, in canonical
/// set order. Output order is lexicographic in that order.
/// Throws CapExceeded once more than `cap` elements have been produced.
HomPoset enumerate_hom(const Graph& g, const Graph& h, std::size_t cap = kDefaultHomCap);

SimplicialComplex hom_order_complex(const HomPoset& p, std::size_t max_chains = 10'000'000);

/// Drops the last vertex of K_n. Requires n >= 3.
Multihom restriction_map(const Multihom& eta);

/// Unique maximum of the fiber over `rho`: rho extended by the intersection
/// of the common neighborhoods of rho's images. Throws InvariantViolation
/// when that intersection is empty.
Multihom fiber_maximum(const Multihom& rho, const Graph& h);

/// Trace of the constructive common-neighbor argument for η ∈ Hom(K_n, G_{1,X}).
/// Simplices in `tau_chain` and `s_families` are simplices of `h.base`.
struct WitnessTrace {
    int k = 0;             ///< 0-based coordinate attaining the minimal dimension
    int min_dim = 0;       ///< that minimal dimension
    int i1 = 0;            ///< how many elements of η(k) have the minimal dimension
    std::vector<Simplex> tau_chain;
    std::vector<std::vector<Simplex>> s_families;  ///< s_families[0] is S_0
    VertexId witness = -1;
    std::string witness_label;
};

WitnessTrace common_neighbor_witness(const Multihom& eta, const SubdivisionGraph& h);

struct QuillenReport {
    int n = 0;
    std::size_t source_size = 0;   ///< |Hom(K_n, H)|
    std::size_t target_size = 0;   ///< |Hom(K_{n-1}, H)|
    std::size_t fibers_checked = 0;
    std::size_t pairs_checked = 0;  ///< (rho, eta) pairs with rho <= phi(eta)
    bool monotone = true;
    std::vector<std::string> failures;  ///< first few counterexamples
    bool passed() const { return monotone && failures.empty(); }
};

QuillenReport check_quillen_conditions(int n, const Graph& h, std::size_t cap = kDefaultHomCap);

}  // namespace homcx
