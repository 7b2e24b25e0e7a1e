// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "homcx/collapse.hpp"
#include "homcx/error.hpp"
#include "homcx/fixtures.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/nerve.hpp"
#include "cli_runner.hpp"
#include "oracle.hpp"

using namespace homcx;

namespace {

// Pinned tolerances. Every comparison below is exact; only runtimes have slack.
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion4Seconds = 60.0;
constexpr std::size_t kRandomMatrices = 200;
constexpr int kMaxMatrixDim = 12;
constexpr std::size_t kRandomComplexes = 100;
/// Per-step homology is recomputed for K_l certificates with at most this many simplices in K_1;
/// larger ones are checked at every stage endpoint.
constexpr std::size_t kPerStepHomologyLimit = 1000;

const std::vector<std::string> kSmall = {"point", "delta1", "bd_delta2"};

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

HomologyProfile reduced_profile(const SimplicialComplex& x) { return homology(greedy_collapse(x).result); }

HomologyProfile hom_profile(const Graph& t, const Graph& h) {
    return reduced_profile(hom_order_complex(enumerate_hom(t, h)));
}

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion1() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& fx : fixture_set("core")) {
        const auto hx = homology(fx.complex);
        const auto hn = homology(neighborhood_complex(build_g_kx(fx.complex, 1).graph));
        o.expect(same_homology(hx, hn), fx.id + ": " + describe(hn) + " vs " + describe(hx));
        if (fx.id == "rp2")
            o.expect(hn.torsion.size() > 1 && hn.torsion[1] == std::vector<Integer>{2}, "rp2: missing Z/2 in H_1");
    }
    const double t = seconds(start);
    o.expect(t < kCriterion1Seconds, "took " + std::to_string(t) + " s");
    if (o.passed) o.detail = "8 fixtures, rp2 torsion (2), " + std::to_string(t) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::size_t stages = 0;
    for (const auto& fx : fixture_set("core")) {
        if (fx.complex.dim() < 1) continue;
        const Filtration f = kl_filtration(fx.complex);
        KlCollapseReport report;
        try {
            report = verify_kl_collapse_sequence(f);
        } catch (const InvariantViolation& e) {
            o.fail(fx.id + ": " + e.what());
            continue;
        }
        // replay every stage with facet-level collapses and compare to K_(l+1) as label sets
        const SimplicialComplex& k1 = f.complexes.front();
        SimplicialComplex current = k1;
        for (std::size_t s = 0; s < report.stages.size(); ++s) {
            for (const auto& step : report.stages[s].certificate.steps) {
                auto sigma = current.simplex_of(k1.labels_of(step.pair.sigma));
                auto tau = current.simplex_of(k1.labels_of(step.pair.tau));
                if (!sigma || !tau || !is_collapsible(current, {*sigma, *tau})) {
                    o.fail(fx.id + ": stage " + std::to_string(s + 1) + " has a non-collapsible step");
                    break;
                }
                current = perform_collapse(current, {*sigma, *tau});
            }
            o.expect(oracle::simplices(current) == oracle::simplices(f.complexes[s + 1]),
                     fx.id + ": stage " + std::to_string(s + 1) + " endpoint differs from K_(l+1)");
            ++stages;
        }
        o.expect(report.stages.size() == f.p - f.q, fx.id + ": wrong number of stages");
        if (fx.id == "bd_delta2") {
            std::set<std::string> removed;
            for (const auto& step : report.stages.front().certificate.steps)
                for (const auto& g : step.removed) removed.insert(k1.render(g));
            o.expect(removed == std::set<std::string>{"{{1},{2}}", "{{1},{2},{1,2}}"},
                     "bd_delta2: stage 1 removed a different set");
        }
    }
    if (o.passed) o.detail = std::to_string(stages) + " stages replayed with set-equal endpoints";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const auto& fx : fixture_set("core")) {
        const Cover c = star_cover(fx.complex);
        o.expect(oracle::simplices(nerve_of_cover(c)) == oracle::simplices(fx.complex), fx.id + ": nerve differs");
        const auto hyp = verify_nerve_theorem_hypotheses(c);
        o.expect(hyp.passed(), fx.id + ": " + (hyp.failures.empty() ? "" : hyp.failures.front()));
    }
    if (o.passed) o.detail = "8 fixtures";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const char* id : {"point", "delta1", "bd_delta2", "delta2"}) {
        const auto g = build_g_kx(fixture(id).complex, 1).graph;
        const auto hh = hom_profile(Graph::complete(2), g);
        const auto hn = homology(neighborhood_complex(g));
        o.expect(same_homology(hh, hn), std::string(id) + ": " + describe(hh) + " vs " + describe(hn));
    }
    const double t = seconds(start);
    o.expect(t < kCriterion4Seconds, "took " + std::to_string(t) + " s");
    if (o.passed) o.detail = "4 fixtures, " + std::to_string(t) + " s";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::vector<HomologyProfile> expected = {{{1}, {{}}}, {{1}, {{}}}, {{1, 1}, {{}, {}}}};
    for (std::size_t i = 0; i < kSmall.size(); ++i) {
        const auto g = build_g_kx(fixture(kSmall[i]).complex, 1).graph;
        const auto h3 = hom_profile(Graph::complete(3), g);
        const auto h2 = hom_profile(Graph::complete(2), g);
        o.expect(same_homology(h3, h2), kSmall[i] + ": " + describe(h3) + " vs " + describe(h2));
        o.expect(same_homology(h3, expected[i]), kSmall[i] + ": expected " + describe(expected[i]) + ", got " + describe(h3));
    }
    if (o.passed) o.detail = "profiles (1), (1), (1,1)";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& id : kSmall) {
        const auto g = build_g_kx(fixture(id).complex, 1);
        const auto adj = oracle::adjacency(g.graph);
        for (int n : {2, 3}) {
            const auto poset = enumerate_hom(Graph::complete(n), g.graph);
            for (const auto& eta : poset.elements()) {
                std::set<VertexId> common;
                for (std::size_t w = 0; w < g.graph.size(); ++w) {
                    bool all = true;
                    for (const auto& img : eta.images)
                        for (VertexId v : img) all = all && adj[static_cast<std::size_t>(v)][w];
                    if (all) common.insert(static_cast<VertexId>(w));
                }
                ++checked;
                if (common.empty()) {
                    o.fail(id + ": empty intersection for " + render(eta, g.graph));
                    continue;
                }
                try {
                    const auto t = common_neighbor_witness(eta, g);
                    o.expect(common.count(t.witness) == 1, id + ": witness outside intersection for " + render(eta, g.graph));
                } catch (const Error& e) {
                    o.fail(id + ": " + e.what());
                }
            }
        }
    }
    if (o.passed) o.detail = std::to_string(checked) + " eta checked, 100%";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t fibers = 0, pairs = 0;
    for (const auto& id : kSmall) {
        const auto h = build_g_kx(fixture(id).complex, 1).graph;
        const auto report = check_quillen_conditions(3, h);
        o.expect(report.passed(), id + ": " + (report.failures.empty() ? "not monotone" : report.failures.front()));

        // independent scan over the enumerated posets
        const auto p3 = enumerate_hom(Graph::complete(3), h);
        const auto p2 = enumerate_hom(Graph::complete(2), h);
        for (const auto& rho : p2.elements()) {
            std::vector<const Multihom*> fiber;
            for (const auto& eta : p3.elements())
                if (restriction_map(eta) == rho) fiber.push_back(&eta);
            const Multihom* top = nullptr;
            for (const auto* a : fiber) {
                bool above_all = true;
                for (const auto* b : fiber) above_all = above_all && leq(*b, *a);
                if (above_all) top = a;
            }
            ++fibers;
            if (!top) {
                o.fail(id + ": fiber over " + render(rho, h) + " has no maximum");
                continue;
            }
            o.expect(*top == fiber_maximum(rho, h), id + ": maximum differs from fiber_maximum at " + render(rho, h));
        }
        for (const auto& eta : p3.elements()) {
            const Multihom phi = restriction_map(eta);
            for (const auto& rho : p2.elements()) {
                if (!leq(rho, phi)) continue;
                ++pairs;
                Multihom candidate = rho;
                candidate.images.push_back(eta.images.back());
                bool is_max = p3.find(candidate) >= 0 && leq(candidate, eta);
                for (const auto& gamma : p3.elements())
                    if (is_max && restriction_map(gamma) == rho && leq(gamma, eta)) is_max = leq(gamma, candidate);
                o.expect(is_max, id + ": condition (B) fails at " + render(eta, h));
            }
        }
    }
    if (o.passed) o.detail = std::to_string(fibers) + " fibers, " + std::to_string(pairs) + " (rho, eta) pairs";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const auto t = Graph::from_labels({"a", "b"}, {{"a", "b"}, {"b", "b"}});
    const auto folded = fold_reduce(t);
    o.expect(folded.core.size() == 1 && folded.core.has_loop(0), "T does not fold to a looped vertex");
    for (const auto& id : kSmall) {
        const auto x = fixture(id).complex;
        const auto g = build_g_kx(x, 1).graph;
        o.expect(oracle::simplices(clique_complex(g)) == oracle::simplices(barycentric_subdivision(x, 1)),
                 id + ": Cl(G_1X) differs from Sd(X)");
        const auto ht = hom_profile(t, g);
        o.expect(same_homology(ht, homology(x)), id + ": " + describe(ht) + " vs " + describe(homology(x)));
    }
    if (o.passed) o.detail = "fold, Cl = Sd, homology on 3 fixtures";
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto alternating = [](const HomologyProfile& h) {
        long long s = 0;
        for (std::size_t k = 0; k < h.betti.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long long>(h.betti[k]);
        return s;
    };
    for (const auto& fx : fixture_set("core")) {
        const auto b = boundary_matrices(fx.complex);
        for (std::size_t k = 0; k + 1 < b.size(); ++k) {
            const Eigen::SparseMatrix<int> product = b[k].entries * b[k + 1].entries;
            o.expect(product.norm() == 0, fx.id + ": boundary of boundary is nonzero");
        }
        for (const auto& m : b) {
            const auto d = smith_normal_form(m.entries).diagonal;
            for (std::size_t i = 0; i + 1 < d.size(); ++i)
                o.expect(d[i + 1] % d[i] == 0, fx.id + ": divisibility chain broken");
        }
        o.expect(alternating(homology(fx.complex)) == oracle::euler(oracle::simplices(fx.complex)),
                 fx.id + ": Euler characteristic mismatch");
    }

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, kMaxMatrixDim), value(-6, 6);
    std::bernoulli_distribution keep(0.5);
    for (std::size_t trial = 0; trial < kRandomMatrices; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        oracle::Dense d(static_cast<std::size_t>(rows), std::vector<oracle::Integer>(static_cast<std::size_t>(cols), 0));
        IntegerMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const int v = keep(rng) ? value(rng) : 0;
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                m(i, j) = v;
            }
        const auto snf = smith_normal_form(m);
        o.expect(snf.rank() == oracle::bareiss_rank(d), "random matrix " + std::to_string(trial) + ": rank mismatch");
        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
            o.expect(snf.diagonal[i + 1] % snf.diagonal[i] == 0, "random matrix: divisibility chain broken");
    }

    std::mt19937 crng(777);
    for (std::size_t trial = 0; trial < kRandomComplexes; ++trial) {
        const auto x = oracle::random_complex(crng, 4 + static_cast<int>(trial % 4), 3 + static_cast<int>(trial % 5), 4);
        o.expect(alternating(homology(x)) == oracle::euler(oracle::simplices(x)), "random complex: Euler mismatch");
    }

    // per-step invariance along the K_l certificates and greedy certificates of the fixtures
    std::size_t steps = 0, stage_endpoints = 0;
    for (const auto& fx : fixture_set("core")) {
        std::vector<std::pair<SimplicialComplex, CollapseCertificate>> certificates;
        certificates.emplace_back(fx.complex, greedy_collapse(fx.complex).certificate);
        if (fx.complex.dim() >= 1) {
            const auto f = kl_filtration(fx.complex);
            if (f.complexes.front().simplices().size() <= kPerStepHomologyLimit) {
                certificates.emplace_back(f.complexes.front(), verify_kl_collapse_sequence(f).combined);
            } else {
                const auto h = homology(f.complexes.front());
                for (const auto& stage : f.complexes)
                    o.expect(same_homology(homology(stage), h), fx.id + ": homology changed between stages");
                stage_endpoints += f.complexes.size() - 1;
            }
        }
        for (const auto& [start, cert] : certificates) {
            const auto h = homology(start);
            SimplicialComplex current = start;
            for (const auto& step : cert.steps) {
                auto sigma = current.simplex_of(start.labels_of(step.pair.sigma));
                auto tau = current.simplex_of(start.labels_of(step.pair.tau));
                current = perform_collapse(current, {*sigma, *tau});
                ++steps;
                if (!same_homology(homology(current), h)) {
                    o.fail(fx.id + ": homology changed at a collapse step");
                    break;
                }
            }
        }
    }
    if (o.passed)
        o.detail = std::to_string(kRandomMatrices) + " matrices, " + std::to_string(kRandomComplexes) +
                   " complexes, " + std::to_string(steps) + " collapse steps, " +
                   std::to_string(stage_endpoints) + " stage endpoints";
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (const std::string args : {"verify thm-1.2 --format json", "verify prop-collapse --format json",
                                   "verify quillen --format json", "verify prop-3.1"}) {
        const auto a = cli::run(args), b = cli::run(args);
        o.expect(a.exit_code == 0 && b.exit_code == 0, args + ": nonzero exit");
        o.expect(!a.out.empty() && cli::without_wall_time(a.out) == cli::without_wall_time(b.out),
                 args + ": reports differ");
    }
    if (o.passed) o.detail = "4 suites, byte-identical modulo wall_time";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"homology of N(G_1X) equals homology of X on core fixtures", criterion1},
        {"K_l collapse certificates replay with set-equal endpoints", criterion2},
        {"nerve of the star cover equals X; intersections are simplices", criterion3},
        {"homology of Hom(K_2,G_1X) equals homology of N(G_1X)", criterion4},
        {"homology of Hom(K_3,G_1X) equals homology of Hom(K_2,G_1X)", criterion5},
        {"common-neighbor witness lies in the brute-force intersection", criterion6},
        {"fiber maxima and condition (B) for n = 3", criterion7},
        {"fold path: T folds, Cl(G_1X) = Sd(X), Hom(T,G_1X) homology", criterion8},
        {"homology kernel properties", criterion9},
        {"verify reports are deterministic", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %2zu %s: %s (%s) [%.2fs]\n", i + 1, o.passed ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), o.detail.c_str(), seconds(start));
        std::fflush(stdout);
        failures += !o.passed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
