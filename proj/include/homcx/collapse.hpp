#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/simplicial.hpp"

namespace homcx {

/// (sigma, tau) with tau a proper face of the facet sigma, and sigma the only
/// facet containing tau.
struct CollapsiblePair {
    Simplex sigma;
    Simplex tau;
    friend bool operator==(const CollapsiblePair&, const CollapsiblePair&) = default;
};

struct CollapseStep {
    CollapsiblePair pair;
    /// {gamma : tau ⊆ gamma ⊆ sigma}, canonical order.
    std::vector<Simplex> removed;
};

/// Simplices in a certificate are ids of the start complex's vertex dictionary.
struct CollapseCertificate {
    std::vector<CollapseStep> steps;
};

/// All collapsible pairs, ordered by facet then face (canonical order).
std::vector<CollapsiblePair> free_face_pairs(const SimplicialComplex& x);

bool is_collapsible(const SimplicialComplex& x, const CollapsiblePair& pair);

/// Removes the interval [tau, sigma]. Throws DomainError if the pair is not collapsible.
SimplicialComplex perform_collapse(const SimplicialComplex& x, const CollapsiblePair& pair);

/// Replays a certificate with perform_collapse, checking every step. Throws
/// InvariantViolation naming the first step that is not collapsible.
SimplicialComplex replay_certificate(const SimplicialComplex& start, const CollapseCertificate& cert);

/// Mutable explicit simplex set with face/coface incidence, used while
/// building collapse sequences.
class SimplexStore {
public:
    explicit SimplexStore(const SimplicialComplex& x);

    bool contains(const Simplex& s) const;
    std::size_t alive_count() const { return alive_count_; }
    /// True when sigma is alive with no alive cofaces and every alive coface of
    /// tau lies inside sigma.
    bool is_free_pair(const CollapsiblePair& pair) const;
    /// Removes the interval and returns it in canonical order.
    std::vector<Simplex> collapse(const CollapsiblePair& pair);
    /// Elementary collapses, always taking the canonically smallest free face.
    CollapseCertificate collapse_greedily();
    /// Alive simplices containing vertex v, canonical order.
    std::vector<int> cells_containing(VertexId v) const;
    const Simplex& cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
    bool alive(int i) const { return alive_[static_cast<std::size_t>(i)] != 0; }
    int alive_cofaces(int i) const { return coface_count_[static_cast<std::size_t>(i)]; }
    int index_of(const Simplex& s) const;

    SimplicialComplex to_complex() const;

private:
    void kill(int i);

    std::vector<std::string> labels_;
    std::vector<Simplex> cells_;
    std::unordered_map<Simplex, int, SimplexHash> index_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> cofaces_;
    std::vector<char> alive_;
    std::vector<int> coface_count_;
    std::size_t alive_count_ = 0;
};

/// Repeatedly applies the first available (canonically smallest free face)
/// elementary collapse until none remains.
struct GreedyCollapseResult {
    SimplicialComplex result;
    CollapseCertificate certificate;
};

GreedyCollapseResult greedy_collapse(const SimplicialComplex& x);

/// Dimension-ordered vertex labelling of G_{1,X} and the chain K_1 ⊇ ... ⊇ K_{p-q+1}.
struct Filtration {
    SubdivisionGraph g1x;
    /// order[i] is the G_{1,X} vertex sigma_{i+1}; dimension non-increasing.
    std::vector<VertexId> order;
    std::size_t p = 0;
    std::size_t q = 0;
    /// complexes[l-1] is K_l, l = 1..p-q+1; vertex labels are those of g1x.graph.
    std::vector<SimplicialComplex> complexes;
};

/// Order: simplices of X by dimension descending, ties broken lexicographically.
/// K_l is generated by N(sigma_i) for i >= l. Throws DomainError if X has no
/// simplex of positive dimension.
Filtration kl_filtration(const SimplicialComplex& x);

/// Union of the full simplices on N(x), x a vertex of X (built directly).
SimplicialComplex vertex_star_union(const SubdivisionGraph& g1x, const SimplicialComplex& x);

struct KlStage {
    int l = 0;  ///< collapses K_l onto K_{l+1}
    std::string pivot_label;
    CollapseCertificate certificate;
};

struct KlCollapseReport {
    std::vector<KlStage> stages;
    /// Concatenation of all stage certificates, starting from K_1.
    CollapseCertificate combined;
};

/// For every l: collapse (N(sigma_l), N(sigma_l) \ {sigma_l}), then keep
/// collapsing (sigma, sigma \ {sigma_l}) for the first sigma outside K_{l+1}
/// (canonical order) whose face is free, restarting after each removal; the endpoint must equal
/// K_{l+1} exactly. Throws InvariantViolation carrying the stuck complex
/// when the scheme stalls or ends anywhere else.
KlCollapseReport verify_kl_collapse_sequence(const Filtration& f);

}  // namespace homcx
