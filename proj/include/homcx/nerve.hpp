#pragma once

#include <string>
#include <vector>

#include "homcx/simplicial.hpp"

namespace homcx {

/// Finite cover of a complex by subcomplexes, indexed by labels.
struct Cover {
    std::vector<std::string> index;
    /// pieces[i] is the piece indexed by index[i]; labels are those of the covered complex.
    std::vector<SimplicialComplex> pieces;
};

/// One full simplex on N({x}) ⊂ V(G_{1,X}) per vertex x of X, indexed by x's label.
Cover star_cover(const SimplicialComplex& x);

/// Vertices are the index labels; a set is a simplex iff its pieces share a simplex.
SimplicialComplex nerve_of_cover(const Cover& c);

struct NerveHypothesisReport {
    std::size_t intersections_checked = 0;  ///< nonempty intersections, singletons included
    std::size_t max_intersection_dim = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Checks that every nonempty intersection of pieces is a full simplex.
NerveHypothesisReport verify_nerve_theorem_hypotheses(const Cover& c);

/// Union of all pieces as one complex.
SimplicialComplex cover_union(const Cover& c);

}  // namespace homcx
