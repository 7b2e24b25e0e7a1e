#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "homcx/simplicial.hpp"

namespace homcx {

using Integer = boost::multiprecision::cpp_int;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// ∂_k: rows are the (k-1)-simplices, columns the k-simplices, both canonical.
struct BoundaryMatrix {
    int dim = 0;
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    Eigen::SparseMatrix<int> entries;
};

/// ∂_1 .. ∂_dim(X). Empty for a 0-dimensional or empty complex.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& x);

struct SNFResult {
    /// Nonzero invariant factors, each dividing the next.
    std::vector<Integer> diagonal;
    std::size_t rank() const { return diagonal.size(); }
};

/// A matrix as a list of nonzero (row, col, value) triples.
struct IntegerTriplets {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Eigen::Triplet<Integer>> entries;
};

SNFResult smith_normal_form(const IntegerTriplets& m);
SNFResult smith_normal_form(const Eigen::SparseMatrix<int>& m);

template <typename Derived>
SNFResult smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
    IntegerTriplets t;
    t.rows = static_cast<std::size_t>(m.rows());
    t.cols = static_cast<std::size_t>(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Integer v(m(i, j));
            if (v != 0) t.entries.emplace_back(i, j, v);
        }
    return smith_normal_form(t);
}

struct HomologyProfile {
    std::vector<std::size_t> betti;
    /// torsion[k]: invariant factors > 1 of H_k, ascending.
    std::vector<std::vector<Integer>> torsion;
};

/// Integral simplicial homology. `reduced` subtracts one from betti_0 of a nonempty complex.
HomologyProfile homology(const SimplicialComplex& x, bool reduced = false);

/// Equal Betti numbers and torsion in every dimension, trailing zeros ignored.
bool same_homology(const HomologyProfile& a, const HomologyProfile& b);
bool same_homology(const SimplicialComplex& x, const SimplicialComplex& y);

/// "(1,0,0) torsion H1:2"
std::string describe(const HomologyProfile& p);

}  // namespace homcx
