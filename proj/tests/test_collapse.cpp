#include <catch_amalgamated.hpp>

#include "homcx/collapse.hpp"
#include "homcx/error.hpp"
#include "homcx/fixtures.hpp"
#include "homcx/homology.hpp"
#include "oracle.hpp"

using namespace homcx;

namespace {

Simplex ids(const SimplicialComplex& x, std::vector<std::string> labels) { return *x.simplex_of(labels); }

/// Brute-force free pairs: sigma a facet, tau a proper face lying in no other facet.
std::set<std::pair<oracle::LabelSet, oracle::LabelSet>> brute_free_pairs(const SimplicialComplex& x) {
    std::vector<oracle::LabelSet> facets;
    for (const auto& f : x.facets()) {
        auto l = x.labels_of(f);
        facets.emplace_back(l.begin(), l.end());
    }
    std::set<std::pair<oracle::LabelSet, oracle::LabelSet>> out;
    for (const auto& sigma : facets)
        for (const auto& tau : oracle::subsets_of(sigma)) {
            if (tau == sigma) continue;
            int containing = 0;
            for (const auto& f : facets) containing += std::includes(f.begin(), f.end(), tau.begin(), tau.end());
            if (containing == 1) out.emplace(sigma, tau);
        }
    return out;
}

}  // namespace

TEST_CASE("free faces") {
    const auto edge = fixture("delta1").complex;
    const auto pairs = free_face_pairs(edge);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == CollapsiblePair{ids(edge, {"1", "2"}), ids(edge, {"1"})});
    CHECK(pairs[1] == CollapsiblePair{ids(edge, {"1", "2"}), ids(edge, {"2"})});
    CHECK(free_face_pairs(fixture("bd_delta2").complex).empty());
    CHECK(free_face_pairs(fixture("bd_delta3").complex).empty());
}

TEST_CASE("free faces match brute force on random complexes") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = oracle::random_complex(rng, 6, 4, 4);
        std::set<std::pair<oracle::LabelSet, oracle::LabelSet>> got;
        for (const auto& p : free_face_pairs(x)) {
            CHECK(is_collapsible(x, p));
            auto s = x.labels_of(p.sigma), t = x.labels_of(p.tau);
            got.emplace(oracle::LabelSet(s.begin(), s.end()), oracle::LabelSet(t.begin(), t.end()));
        }
        CHECK(got == brute_free_pairs(x));
    }
}

TEST_CASE("perform_collapse") {
    const auto edge = fixture("delta1").complex;
    const auto point = perform_collapse(edge, {ids(edge, {"1", "2"}), ids(edge, {"2"})});
    CHECK(point == fixture("point").complex);
    CHECK_THROWS_AS(perform_collapse(edge, {ids(edge, {"1", "2"}), ids(edge, {"1", "2"})}), DomainError);
    const auto circle = fixture("bd_delta2").complex;
    CHECK_THROWS_AS(perform_collapse(circle, {ids(circle, {"1", "2"}), ids(circle, {"1"})}), DomainError);
}

TEST_CASE("collapse removes exactly the interval and keeps homology") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = oracle::random_complex(rng, 7, 5, 4);
        const auto before = oracle::simplices(x);
        for (const auto& p : free_face_pairs(x)) {
            const auto y = perform_collapse(x, p);
            auto s = x.labels_of(p.sigma), t = x.labels_of(p.tau);
            const oracle::LabelSet sigma(s.begin(), s.end()), tau(t.begin(), t.end());
            oracle::Family expected;
            for (const auto& g : before)
                if (!(std::includes(g.begin(), g.end(), tau.begin(), tau.end()) &&
                      std::includes(sigma.begin(), sigma.end(), g.begin(), g.end())))
                    expected.insert(g);
            CHECK(oracle::simplices(y) == expected);
            CHECK(euler_characteristic(y) == euler_characteristic(x));
            CHECK(same_homology(homology(y), homology(x)));
        }
    }
}

TEST_CASE("greedy collapse") {
    CHECK(greedy_collapse(fixture("delta2").complex).result.f_vector() == std::vector<std::size_t>{1});
    const auto circle = greedy_collapse(fixture("bd_delta2").complex);
    CHECK(circle.result == fixture("bd_delta2").complex);
    CHECK(circle.certificate.steps.empty());
    const auto rp2 = greedy_collapse(fixture("rp2").complex);
    CHECK(rp2.result == fixture("rp2").complex);
}

TEST_CASE("greedy collapse certificates replay and preserve homology on random complexes") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = oracle::random_complex(rng, 3 + trial % 5, 2 + trial % 5, 4);
        const auto r = greedy_collapse(x);
        CHECK(replay_certificate(x, r.certificate) == r.result);
        CHECK(free_face_pairs(r.result).empty());
        CHECK(same_homology(homology(x), homology(r.result)));
        for (const auto& step : r.certificate.steps) {
            CHECK(step.removed.size() == 2);
            CHECK(step.pair.tau.size() + 1 == step.pair.sigma.size());
        }
    }
}

TEST_CASE("homology is invariant under every certificate step") {
    for (const char* id : {"delta2", "path2", "wedge2"}) {
        const auto x = build_g_kx(fixture(id).complex, 1);
        SimplicialComplex current = neighborhood_complex(x.graph);
        const auto start = current;
        const auto h = homology(start);
        for (const auto& step : greedy_collapse(start).certificate.steps) {
            auto s = current.simplex_of(start.labels_of(step.pair.sigma));
            auto t = current.simplex_of(start.labels_of(step.pair.tau));
            REQUIRE((s && t));
            current = perform_collapse(current, {*s, *t});
            CHECK(same_homology(homology(current), h));
        }
    }
}

TEST_CASE("tampered certificates are rejected") {
    const auto x = fixture("delta2").complex;
    auto r = greedy_collapse(x);
    REQUIRE(r.certificate.steps.size() > 1);
    std::swap(r.certificate.steps.front(), r.certificate.steps.back());
    CHECK_THROWS_AS(replay_certificate(x, r.certificate), InvariantViolation);
}

TEST_CASE("SimplexStore") {
    const auto x = fixture("delta2").complex;
    SimplexStore store(x);
    CHECK(store.alive_count() == 7);
    const CollapsiblePair pair{ids(x, {"1", "2", "3"}), ids(x, {"1"})};
    CHECK(store.is_free_pair(pair));
    const auto removed = store.collapse(pair);
    CHECK(removed.size() == 4);
    CHECK(store.alive_count() == 3);
    CHECK(store.to_complex() == from_facets({{"2", "3"}}));
    CHECK_THROWS_AS(store.collapse(pair), DomainError);
}

TEST_CASE("K_l filtration of the hollow triangle") {
    const auto x = fixture("bd_delta2").complex;
    const Filtration f = kl_filtration(x);
    CHECK(f.p == 6);
    CHECK(f.q == 3);
    REQUIRE(f.complexes.size() == 4);
    std::vector<std::string> order;
    for (VertexId v : f.order) order.push_back(f.g1x.graph.label(v));
    CHECK(order == std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}", "{1}", "{2}", "{3}"});
    CHECK(f.complexes[0] == neighborhood_complex(f.g1x.graph));

    // K_2: the triangle N({1,2}) and the edge {{1},{2}} are gone
    const auto& k1 = f.complexes[0];
    const auto& k2 = f.complexes[1];
    oracle::Family diff;
    const auto s1 = oracle::simplices(k1), s2 = oracle::simplices(k2);
    std::set_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(diff, diff.end()));
    CHECK(diff == oracle::Family{{"{1}", "{2}"}, {"{1}", "{2}", "{1,2}"}});

    const CollapsiblePair first{*k1.simplex_of({"{1}", "{2}", "{1,2}"}), *k1.simplex_of({"{1}", "{2}"})};
    bool listed = false;
    for (const auto& p : free_face_pairs(k1)) listed = listed || p == first;
    CHECK(listed);
    CHECK(perform_collapse(k1, first) == k2);

    const auto report = verify_kl_collapse_sequence(f);
    REQUIRE(report.stages.size() == 3);
    REQUIRE(report.stages[0].certificate.steps.size() == 1);
    CHECK(report.stages[0].certificate.steps[0].pair == first);
    CHECK(replay_certificate(k1, report.combined) == f.complexes.back());
}

TEST_CASE("K_l filtrations on every fixture") {
    CHECK_THROWS_AS(kl_filtration(fixture("point").complex), DomainError);
    for (const auto& fx : fixture_set("core")) {
        if (fx.complex.dim() < 1) continue;
        INFO(fx.id);
        const Filtration f = kl_filtration(fx.complex);
        CHECK(f.complexes.size() == f.p - f.q + 1);
        // the last q vertices in the order are the vertices of X
        for (std::size_t i = f.p - f.q; i < f.p; ++i)
            CHECK(f.g1x.cells[static_cast<std::size_t>(f.order[i])].size() == 1);
        for (std::size_t i = 1; i < f.p; ++i)
            CHECK(f.g1x.cells[static_cast<std::size_t>(f.order[i - 1])].size() >=
                  f.g1x.cells[static_cast<std::size_t>(f.order[i])].size());
        CHECK(f.complexes.front() == neighborhood_complex(f.g1x.graph));
        for (std::size_t l = 1; l < f.complexes.size(); ++l) {
            const auto big = oracle::simplices(f.complexes[l - 1]), small = oracle::simplices(f.complexes[l]);
            CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
        // the final stage is generated by the sets N(x), x a vertex of X
        const auto b = oracle::g1x(fx.complex);
        oracle::Family stars;
        for (std::size_t v = 0; v < b.cells.size(); ++v) {
            if (b.cells[v].size() != 1) continue;
            oracle::LabelSet n;
            for (std::size_t w = 0; w < b.cells.size(); ++w)
                if (b.adj[v][w]) n.insert(b.labels[w]);
            stars.insert(n);
        }
        CHECK(oracle::simplices(f.complexes.back()) == oracle::closure(stars));
        CHECK(f.complexes.back() == vertex_star_union(f.g1x, fx.complex));

        const auto report = verify_kl_collapse_sequence(f);
        CHECK(report.stages.size() == f.complexes.size() - 1);
        CHECK(replay_certificate(f.complexes.front(), report.combined) == f.complexes.back());
    }
}

TEST_CASE("K_l collapse sequence on the triangle and the 2-sphere") {
    const auto f = kl_filtration(fixture("delta2").complex);
    CHECK(f.p == 7);
    CHECK(f.q == 3);
    CHECK_NOTHROW(verify_kl_collapse_sequence(f));

    const auto s2 = kl_filtration(fixture("bd_delta3").complex);
    verify_kl_collapse_sequence(s2);
    CHECK(same_homology(homology(s2.complexes.back()), HomologyProfile{{1, 0, 1}, {}}));
}
