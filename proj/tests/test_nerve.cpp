#include <catch_amalgamated.hpp>

#include "homcx/collapse.hpp"
#include "homcx/fixtures.hpp"
#include "homcx/nerve.hpp"
#include "oracle.hpp"

using namespace homcx;

namespace {

std::vector<std::string> piece_vertices(const Cover& c, std::size_t i) { return c.pieces[i].vertices().labels(); }

}  // namespace

TEST_CASE("star cover pieces") {
    const auto edge = star_cover(fixture("delta1").complex);
    REQUIRE(edge.index == std::vector<std::string>{"1", "2"});
    CHECK(piece_vertices(edge, 0) == std::vector<std::string>{"{1}", "{1,2}"});
    CHECK(piece_vertices(edge, 1) == std::vector<std::string>{"{2}", "{1,2}"});
    for (const auto& p : edge.pieces) CHECK(p.facets().size() == 1);

    const auto point = star_cover(fixture("point").complex);
    REQUIRE(point.pieces.size() == 1);
    CHECK(point.pieces[0].f_vector() == std::vector<std::size_t>{1});

    const auto circle = star_cover(fixture("bd_delta2").complex);
    REQUIRE(circle.pieces.size() == 3);
    for (const auto& p : circle.pieces) CHECK(p.f_vector() == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("every simplex of a piece meets the vertex set in its own vertex") {
    for (const auto& fx : fixture_set("core")) {
        INFO(fx.id);
        const auto c = star_cover(fx.complex);
        for (std::size_t i = 0; i < c.pieces.size(); ++i)
            for (const auto& label : piece_vertices(c, i)) {
                // a piece vertex is a simplex of X containing x_i
                const std::string x = "," + label.substr(1, label.size() - 2) + ",";
                CHECK(x.find("," + c.index[i] + ",") != std::string::npos);
            }
    }
}

TEST_CASE("nerve of the star cover is the complex itself") {
    for (const auto& fx : fixture_set("core")) {
        INFO(fx.id);
        CHECK(nerve_of_cover(star_cover(fx.complex)) == fx.complex);
    }
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = oracle::random_complex(rng, 6, 4, 4);
        CHECK(nerve_of_cover(star_cover(x)) == x);
    }
}

TEST_CASE("nerve of disjoint pieces") {
    Cover c;
    c.index = {"A", "B"};
    c.pieces = {from_facets({{"a", "b"}}), from_facets({{"c"}})};
    CHECK(nerve_of_cover(c).f_vector() == std::vector<std::size_t>{2});
    c.pieces[1] = from_facets({{"b", "c"}});
    CHECK(nerve_of_cover(c).f_vector() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("intersections of star-cover pieces are full simplices") {
    const auto circle = verify_nerve_theorem_hypotheses(star_cover(fixture("bd_delta2").complex));
    CHECK(circle.passed());
    // three singletons plus three pairwise single vertices
    CHECK(circle.intersections_checked == 6);

    const auto tri = verify_nerve_theorem_hypotheses(star_cover(fixture("delta2").complex));
    CHECK(tri.passed());
    CHECK(tri.intersections_checked == 7);

    for (const auto& fx : fixture_set("core")) {
        INFO(fx.id);
        CHECK(verify_nerve_theorem_hypotheses(star_cover(fx.complex)).passed());
    }
}

TEST_CASE("a cover with a hollow intersection fails the hypothesis check") {
    Cover c;
    c.index = {"A", "B"};
    c.pieces = {from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}}), from_facets({{"a", "b", "c"}})};
    const auto r = verify_nerve_theorem_hypotheses(c);
    CHECK_FALSE(r.passed());
}

TEST_CASE("union of star pieces is the last filtration stage") {
    for (const auto& fx : fixture_set("core")) {
        INFO(fx.id);
        const auto c = star_cover(fx.complex);
        const auto g = build_g_kx(fx.complex, 1);
        CHECK(cover_union(c) == vertex_star_union(g, fx.complex));
        if (fx.complex.dim() >= 1) CHECK(cover_union(c) == kl_filtration(fx.complex).complexes.back());
    }
}
