#include "homcx/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "homcx/error.hpp"

namespace homcx {

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& x) {
    std::vector<BoundaryMatrix> out;
    if (x.empty()) return out;
    const auto& all = x.simplices();
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(x.dim()) + 1);
    for (const auto& s : all) by_dim[s.size() - 1].push_back(s);

    for (int k = 1; k <= x.dim(); ++k) {
        BoundaryMatrix b;
        b.dim = k;
        b.rows = by_dim[static_cast<std::size_t>(k - 1)];
        b.cols = by_dim[static_cast<std::size_t>(k)];
        std::unordered_map<Simplex, int, SimplexHash> row_of;
        row_of.reserve(b.rows.size());
        for (std::size_t i = 0; i < b.rows.size(); ++i) row_of.emplace(b.rows[i], static_cast<int>(i));

        std::vector<Eigen::Triplet<int>> triplets;
        triplets.reserve(b.cols.size() * static_cast<std::size_t>(k + 1));
        Simplex face(static_cast<std::size_t>(k));
        for (std::size_t j = 0; j < b.cols.size(); ++j) {
            const Simplex& s = b.cols[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[w++] = s[i];
                triplets.emplace_back(row_of.at(face), static_cast<int>(j), drop % 2 == 0 ? 1 : -1);
            }
        }
        b.entries.resize(static_cast<Eigen::Index>(b.rows.size()), static_cast<Eigen::Index>(b.cols.size()));
        b.entries.setFromTriplets(triplets.begin(), triplets.end());
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

/// Sparse integer matrix under unimodular row and column operations.
class Eliminator {
public:
    Eliminator(const IntegerTriplets& m) : rows_(m.rows), cols_(m.cols) {
        for (const auto& t : m.entries) {
            if (t.value() == 0) continue;
            rows_[static_cast<std::size_t>(t.row())][static_cast<int>(t.col())] += t.value();
            cols_[static_cast<std::size_t>(t.col())].insert(static_cast<int>(t.row()));
        }
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (auto it = rows_[r].begin(); it != rows_[r].end();) {
                if (it->second == 0) {
                    cols_[static_cast<std::size_t>(it->first)].erase(static_cast<int>(r));
                    it = rows_[r].erase(it);
                } else {
                    ++it;
                }
            }
    }

    std::vector<Integer> run() {
        // Unit pivots first: they never need gcd steps and clear most of a boundary matrix.
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            int best = -1;
            for (int r : cols_[c]) {
                const Integer& v = rows_[static_cast<std::size_t>(r)].at(static_cast<int>(c));
                if ((v == 1 || v == -1) &&
                    (best < 0 || rows_[static_cast<std::size_t>(r)].size() < rows_[static_cast<std::size_t>(best)].size()))
                    best = r;
            }
            if (best >= 0) eliminate(best, static_cast<int>(c));
        }
        while (true) {
            int pr = -1, pc = -1;
            for (std::size_t r = 0; r < rows_.size(); ++r)
                for (const auto& [c, v] : rows_[r]) {
                    if (pr < 0) {
                        pr = static_cast<int>(r), pc = c;
                        continue;
                    }
                    const Integer a = abs(v), b = abs(rows_[static_cast<std::size_t>(pr)].at(pc));
                    if (a < b || (a == b && rows_[r].size() < rows_[static_cast<std::size_t>(pr)].size()))
                        pr = static_cast<int>(r), pc = c;
                }
            if (pr < 0) break;
            eliminate(pr, pc);
        }
        return std::move(diagonal_);
    }

private:
    void add_row_multiple(int target, int source, const Integer& q) {
        auto& t = rows_[static_cast<std::size_t>(target)];
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(source)]) {
            auto [it, inserted] = t.try_emplace(c, 0);
            it->second -= q * v;
            if (it->second == 0) {
                t.erase(it);
                cols_[static_cast<std::size_t>(c)].erase(target);
            } else if (inserted) {
                cols_[static_cast<std::size_t>(c)].insert(target);
            }
        }
    }

    void drop_row(int r) {
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) cols_[static_cast<std::size_t>(c)].erase(r);
        rows_[static_cast<std::size_t>(r)].clear();
    }

    /// Clears the pivot's row and column if the pivot divides them; otherwise
    /// leaves a strictly smaller remainder for the next pivot search.
    void eliminate(int r, int c) {
        const Integer p = rows_[static_cast<std::size_t>(r)].at(c);
        bool clean = true;
        const std::vector<int> others(cols_[static_cast<std::size_t>(c)].begin(), cols_[static_cast<std::size_t>(c)].end());
        for (int i : others) {
            if (i == r) continue;
            const Integer a = rows_[static_cast<std::size_t>(i)].at(c);
            Integer q = a / p;
            if (q * p != a) clean = false;
            if (q != 0) add_row_multiple(i, r, q);
        }
        if (!clean) return;
        // Column c is now zero off the pivot, so column operations only touch row r.
        auto& row = rows_[static_cast<std::size_t>(r)];
        for (auto it = row.begin(); it != row.end();) {
            if (it->first == c) {
                ++it;
                continue;
            }
            Integer rem = it->second % p;
            if (rem == 0) {
                cols_[static_cast<std::size_t>(it->first)].erase(r);
                it = row.erase(it);
            } else {
                it->second = rem;
                clean = false;
                ++it;
            }
        }
        if (!clean) return;
        diagonal_.push_back(abs(p));
        drop_row(r);
    }

    std::vector<std::map<int, Integer>> rows_;
    std::vector<std::set<int>> cols_;
    std::vector<Integer> diagonal_;
};

void normalize_chain(std::vector<Integer>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const Integer g = gcd(d[i], d[j]);
            const Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

}  // namespace

SNFResult smith_normal_form(const IntegerTriplets& m) {
    Eliminator e(m);
    SNFResult out{e.run()};
    normalize_chain(out.diagonal);
    return out;
}

SNFResult smith_normal_form(const Eigen::SparseMatrix<int>& m) {
    IntegerTriplets t;
    t.rows = static_cast<std::size_t>(m.rows());
    t.cols = static_cast<std::size_t>(m.cols());
    for (int k = 0; k < m.outerSize(); ++k)
        for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it)
            if (it.value() != 0) t.entries.emplace_back(it.row(), it.col(), Integer(it.value()));
    return smith_normal_form(t);
}

HomologyProfile homology(const SimplicialComplex& x, bool reduced) {
    HomologyProfile p;
    if (x.empty()) {
        p.betti = {0};
        p.torsion = {{}};
        return p;
    }
    const auto f = x.f_vector();
    const auto boundaries = boundary_matrices(x);
    // ranks[k] = rank ∂_k; ∂_0 and ∂_{dim+1} are zero.
    std::vector<std::size_t> ranks(f.size() + 1, 0);
    std::vector<std::vector<Integer>> diag(f.size() + 1);
    for (const auto& b : boundaries) {
        auto snf = smith_normal_form(b.entries);
        ranks[static_cast<std::size_t>(b.dim)] = snf.rank();
        diag[static_cast<std::size_t>(b.dim)] = std::move(snf.diagonal);
    }
    for (std::size_t k = 0; k < f.size(); ++k) {
        p.betti.push_back(f[k] - ranks[k] - ranks[k + 1]);
        std::vector<Integer> t;
        for (const auto& d : diag[k + 1])
            if (d > 1) t.push_back(d);
        p.torsion.push_back(std::move(t));
    }
    if (reduced) --p.betti[0];
    return p;
}

bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
    const std::size_t n = std::max({a.betti.size(), b.betti.size(), a.torsion.size(), b.torsion.size()});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t ba = k < a.betti.size() ? a.betti[k] : 0;
        const std::size_t bb = k < b.betti.size() ? b.betti[k] : 0;
        if (ba != bb) return false;
        static const std::vector<Integer> none;
        const auto& ta = k < a.torsion.size() ? a.torsion[k] : none;
        const auto& tb = k < b.torsion.size() ? b.torsion[k] : none;
        if (ta != tb) return false;
    }
    return true;
}

bool same_homology(const SimplicialComplex& x, const SimplicialComplex& y) {
    return same_homology(homology(x), homology(y));
}

std::string describe(const HomologyProfile& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.betti.size(); ++k) out += (k ? "," : "") + std::to_string(p.betti[k]);
    out += ")";
    for (std::size_t k = 0; k < p.torsion.size(); ++k) {
        if (p.torsion[k].empty()) continue;
        out += " torsion H" + std::to_string(k) + ":";
        for (std::size_t i = 0; i < p.torsion[k].size(); ++i) out += (i ? "," : "") + p.torsion[k][i].str();
    }
    return out;
}

}  // namespace homcx
