#include "homcx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>

#include "homcx/collapse.hpp"
#include "homcx/error.hpp"
#include "homcx/fixtures.hpp"
#include "homcx/graph.hpp"
#include "homcx/homology.hpp"
#include "homcx/nerve.hpp"

namespace homcx {

bool FixtureReport::passed() const {
    return !cap_exceeded && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool VerificationReport::passed() const {
    return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureReport& f) { return f.passed(); });
}

bool VerificationReport::cap_exceeded() const {
    return std::any_of(fixtures.begin(), fixtures.end(), [](const FixtureReport& f) { return f.cap_exceeded; });
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"thm-1.1", "thm-1.2", "thm-1.3",  "lemma-hom-nbhd", "prop-3.1",
                                                 "prop-collapse", "prop-4.1", "quillen", "fold"};
    return ids;
}

std::string certificate_digest(const CollapseCertificate& c) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& step : c.steps) {
        for (const Simplex* s : {&step.pair.sigma, &step.pair.tau}) {
            mix(s->size());
            for (VertexId v : *s) mix(static_cast<std::uint64_t>(v));
        }
        mix(step.removed.size());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check(FixtureReport& r, std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back(Check{std::move(name), ok, ok ? std::string{} : std::move(detail)});
}

struct Profiled {
    HomologyProfile profile;
    Json artifact;
};

Profiled profile_of(const SimplicialComplex& c) {
    auto reduced = greedy_collapse(c);
    Profiled out{homology(reduced.result), Json::object()};
    out.artifact["profile"] = to_json(out.profile);
    out.artifact["simplices"] = c.simplices().size();
    out.artifact["simplices_after_collapse"] = reduced.result.simplices().size();
    out.artifact["collapse_steps"] = reduced.certificate.steps.size();
    out.artifact["certificate_digest"] = certificate_digest(reduced.certificate);
    return out;
}

Profiled hom_profile(const Graph& t, const Graph& h, std::size_t cap) {
    const HomPoset p = enumerate_hom(t, h, cap);
    Profiled out = profile_of(hom_order_complex(p));
    out.artifact["hom_elements"] = p.size();
    return out;
}

std::string mismatch(const HomologyProfile& a, const HomologyProfile& b) {
    return describe(a) + " vs " + describe(b);
}

Graph looped_edge() { return Graph::from_labels({"a", "b"}, {{"a", "b"}, {"b", "b"}}); }

// ---------------------------------------------------------------------------
// suites

void suite_thm_1_2(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions&) {
    const auto g = build_g_kx(x, 1);
    const Profiled px = profile_of(x);
    const Profiled pn = profile_of(neighborhood_complex(g.graph));
    r.artifacts["X"] = px.artifact;
    r.artifacts["N(G_1X)"] = pn.artifact;
    check(r, "homology(N(G_1X)) == homology(X)", same_homology(px.profile, pn.profile),
          mismatch(pn.profile, px.profile));
}

void suite_prop_collapse(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions&) {
    if (x.dim() < 1) {
        r.skipped = true;
        r.artifacts["reason"] = "p = q: no simplex of positive dimension";
        return;
    }
    const Filtration f = kl_filtration(x);
    Json order = Json::array();
    for (VertexId v : f.order) order.push_back(f.g1x.graph.label(v));
    r.artifacts["p"] = f.p;
    r.artifacts["q"] = f.q;
    r.artifacts["order"] = std::move(order);

    const SimplicialComplex& k1 = f.complexes.front();
    check(r, "K_1 == N(G_1X)", k1 == neighborhood_complex(f.g1x.graph));
    bool nested = true;
    std::string where;
    for (std::size_t l = 1; l < f.complexes.size() && nested; ++l)
        for (const auto& facet : f.complexes[l].facets()) {
            auto s = f.complexes[l - 1].simplex_of(f.complexes[l].labels_of(facet));
            if (!s || !f.complexes[l - 1].contains(*s)) {
                nested = false;
                where = "K_" + std::to_string(l + 1) + " facet " + f.complexes[l].render(facet) + " not in K_" +
                        std::to_string(l);
                break;
            }
        }
    check(r, "K_(l+1) subset of K_l", nested, where);
    const SimplicialComplex stars = vertex_star_union(f.g1x, x);
    check(r, "K_(p-q+1) == union of full simplices on N(x)", f.complexes.back() == stars);

    const KlCollapseReport sequence = verify_kl_collapse_sequence(f);
    Json stages = Json::array();
    for (const auto& stage : sequence.stages) {
        std::size_t removed = 0;
        for (const auto& step : stage.certificate.steps) removed += step.removed.size();
        Json s;
        s["l"] = stage.l;
        s["pivot"] = stage.pivot_label;
        s["steps"] = stage.certificate.steps.size();
        s["removed"] = removed;
        stages.push_back(std::move(s));
    }
    if (!sequence.stages.empty()) {
        Json first = Json::array();
        for (const auto& step : sequence.stages.front().certificate.steps)
            for (const auto& g : step.removed) first.push_back(k1.render(g));
        r.artifacts["stage1_removed"] = std::move(first);
    }
    r.artifacts["stages"] = std::move(stages);
    r.artifacts["certificate_digest"] = certificate_digest(sequence.combined);
    check(r, "every stage reaches K_(l+1)", sequence.stages.size() + 1 == f.complexes.size());

    const SimplicialComplex replayed = replay_certificate(k1, sequence.combined);
    check(r, "certificate replays from K_1 to K_(p-q+1)", replayed == f.complexes.back());

    const HomologyProfile hx = homology(x), h1 = homology(k1), hl = homology(f.complexes.back());
    r.artifacts["profile"] = to_json(h1);
    check(r, "homology(K_1) == homology(K_(p-q+1)) == homology(X)",
          same_homology(h1, hl) && same_homology(hl, hx), describe(h1) + ", " + describe(hl) + ", " + describe(hx));
}

void suite_prop_3_1(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions&) {
    const Cover c = star_cover(x);
    const SimplicialComplex nerve = nerve_of_cover(c);
    r.artifacts["pieces"] = c.pieces.size();
    r.artifacts["nerve_f_vector"] = nerve.f_vector();
    check(r, "Nerve(star cover) == X", nerve == x, "nerve " + to_json(nerve)["facets"].dump());
    const auto hyp = verify_nerve_theorem_hypotheses(c);
    r.artifacts["intersections_checked"] = hyp.intersections_checked;
    check(r, "nonempty intersections are full simplices", hyp.passed(),
          hyp.failures.empty() ? std::string{} : hyp.failures.front());
    check(r, "union of pieces == K_(p-q+1)", cover_union(c) == vertex_star_union(build_g_kx(x, 1), x));
}

void suite_lemma_hom_nbhd(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const auto g = build_g_kx(x, 1);
    const Profiled pn = profile_of(neighborhood_complex(g.graph));
    r.artifacts["N(G_1X)"] = pn.artifact;
    const Profiled ph = hom_profile(Graph::complete(2), g.graph, o.cap);
    r.artifacts["Hom(K_2,G_1X)"] = ph.artifact;
    check(r, "homology(Hom(K_2,G_1X)) == homology(N(G_1X))", same_homology(ph.profile, pn.profile),
          mismatch(ph.profile, pn.profile));
}

void suite_thm_1_3(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const int n = o.n ? o.n : 3;
    if (n < 3) throw DomainError("thm-1.3 needs n >= 3");
    const auto g = build_g_kx(x, 1);
    const Profiled p2 = hom_profile(Graph::complete(2), g.graph, o.cap);
    r.artifacts["Hom(K_2,G_1X)"] = p2.artifact;
    const Profiled pn = hom_profile(Graph::complete(n), g.graph, o.cap);
    r.artifacts["Hom(K_" + std::to_string(n) + ",G_1X)"] = pn.artifact;
    check(r, "homology(Hom(K_" + std::to_string(n) + ",G_1X)) == homology(Hom(K_2,G_1X))",
          same_homology(pn.profile, p2.profile), mismatch(pn.profile, p2.profile));
    const HomologyProfile hx = homology(x);
    check(r, "homology(Hom(K_2,G_1X)) == homology(X)", same_homology(p2.profile, hx), mismatch(p2.profile, hx));
}

void suite_thm_1_1(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const auto g = build_g_kx(x, 1);
    const HomologyProfile hx = homology(x);
    r.artifacts["X"] = to_json(hx);
    std::vector<std::pair<std::string, Graph>> targets = {{"K_2", Graph::complete(2)}, {"K_3", Graph::complete(3)}};
    if (o.n > 3) targets.emplace_back("K_" + std::to_string(o.n), Graph::complete(o.n));
    targets.emplace_back("looped edge", looped_edge());
    for (const auto& [name, t] : targets) {
        check(r, "diameter(" + name + ") == 1", diameter(t) == 1);
        const Profiled p = hom_profile(t, g.graph, o.cap);
        r.artifacts["Hom(" + name + ",G_1X)"] = p.artifact;
        check(r, "homology(Hom(" + name + ",G_1X)) == homology(X)", same_homology(p.profile, hx),
              mismatch(p.profile, hx));
    }
}

void suite_prop_4_1(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const auto g = build_g_kx(x, 1);
    const std::vector<int> ns = o.n ? std::vector<int>{o.n} : std::vector<int>{2, 3};
    for (int n : ns) {
        if (n < 2) throw DomainError("prop-4.1 needs n >= 2");
        const HomPoset p = enumerate_hom(Graph::complete(n), g.graph, o.cap);
        std::size_t checked = 0, failed = 0;
        std::string first;
        for (const auto& eta : p.elements()) {
            Bitset common(g.graph.size());
            common.set();
            for (const auto& image : eta.images) common &= common_neighborhood(g.graph, to_bitset(image, g.graph.size()));
            std::string problem;
            if (common.none()) {
                problem = "empty common neighborhood";
            } else {
                const WitnessTrace t = common_neighbor_witness(eta, g);
                if (t.witness < 0 || !common.test(static_cast<std::size_t>(t.witness)))
                    problem = "witness " + t.witness_label + " outside the intersection";
            }
            ++checked;
            if (!problem.empty() && failed++ == 0) first = render(eta, g.graph) + ": " + problem;
        }
        Json a;
        a["hom_elements"] = p.size();
        a["eta_checked"] = checked;
        r.artifacts["n=" + std::to_string(n)] = std::move(a);
        check(r, "witness in the common neighborhood for every eta in Hom(K_" + std::to_string(n) + ",G_1X)",
              failed == 0, std::to_string(failed) + " failures; first " + first);
    }
}

void suite_quillen(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const int n = o.n ? o.n : 3;
    const auto g = build_g_kx(x, 1);
    const QuillenReport q = check_quillen_conditions(n, g.graph, o.cap);
    r.artifacts["n"] = n;
    r.artifacts["source_size"] = q.source_size;
    r.artifacts["target_size"] = q.target_size;
    r.artifacts["fibers_checked"] = q.fibers_checked;
    r.artifacts["pairs_checked"] = q.pairs_checked;
    check(r, "restriction map is order preserving", q.monotone);
    check(r, "fiber maxima and condition (B)", q.failures.empty(), q.failures.empty() ? "" : q.failures.front());
}

void suite_fold(FixtureReport& r, const SimplicialComplex& x, const VerifyOptions& o) {
    const Graph t = looped_edge();
    const FoldResult folded = fold_reduce(t);
    check(r, "looped edge folds to one looped vertex", folded.core.size() == 1 && folded.core.has_loop(0));
    const auto g = build_g_kx(x, 1);
    check(r, "Cl(G_1X) == Sd(X)", clique_complex(g.graph) == barycentric_subdivision(x, 1));
    const HomologyProfile hx = homology(x);
    const Profiled p = hom_profile(t, g.graph, o.cap);
    r.artifacts["Hom(T,G_1X)"] = p.artifact;
    check(r, "homology(Hom(T,G_1X)) == homology(X)", same_homology(p.profile, hx), mismatch(p.profile, hx));
    const Profiled pc = hom_profile(folded.core, g.graph, o.cap);
    r.artifacts["Hom(core,G_1X)"] = pc.artifact;
    check(r, "homology(Hom(core,G_1X)) == homology(Hom(T,G_1X))", same_homology(pc.profile, p.profile),
          mismatch(pc.profile, p.profile));
}

struct Suite {
    std::string surrogate;
    std::string defaults;
    std::function<void(FixtureReport&, const SimplicialComplex&, const VerifyOptions&)> run;
};

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"thm-1.1", {"homology equality", "point,delta1,bd_delta2", suite_thm_1_1}},
        {"thm-1.2", {"homology equality", "core", suite_thm_1_2}},
        {"thm-1.3", {"homology equality", "point,delta1,bd_delta2", suite_thm_1_3}},
        {"lemma-hom-nbhd", {"homology equality", "point,delta1,bd_delta2,delta2", suite_lemma_hom_nbhd}},
        {"prop-3.1", {"nerve equality", "core", suite_prop_3_1}},
        {"prop-collapse", {"collapse certificate", "core", suite_prop_collapse}},
        {"prop-4.1", {"fiber maxima", "point,delta1,bd_delta2", suite_prop_4_1}},
        {"quillen", {"fiber maxima", "point,delta1,bd_delta2", suite_quillen}},
        {"fold", {"homology equality", "point,delta1,bd_delta2", suite_fold}},
    };
    return table;
}

std::string surrogate_note(const std::string& surrogate) {
    if (surrogate == "homology equality")
        return "equal integral homology is necessary for homotopy equivalence; it does not prove one";
    if (surrogate == "collapse certificate")
        return "each collapse step is replayed and checked; endpoints compared as literal simplex sets";
    if (surrogate == "nerve equality") return "nerve compared to the complex as literal simplex sets";
    return "poset conditions checked exhaustively on the enumerated elements";
}

}  // namespace

VerificationReport run_verification(const std::string& theorem, const VerifyOptions& options) {
    const auto it = suites().find(theorem);
    if (it == suites().end()) throw DomainError("unknown theorem id \"" + theorem + "\"");
    const Suite& suite = it->second;
    const auto start = Clock::now();
    VerificationReport report;
    report.theorem = theorem;
    report.surrogate = suite.surrogate;
    for (const auto& fx : fixture_set(options.fixtures.empty() ? suite.defaults : options.fixtures)) {
        FixtureReport r;
        r.fixture = fx.id;
        const auto fx_start = Clock::now();
        try {
            suite.run(r, fx.complex, options);
        } catch (const CapExceeded& e) {
            r.cap_exceeded = true;
            r.cap_detail = e.what();
            r.artifacts["partial_count"] = e.partial_count;
        } catch (const InvariantViolation& e) {
            check(r, "construction postcondition", false, e.what());
        }
        r.wall_time = seconds_since(fx_start);
        report.fixtures.push_back(std::move(r));
    }
    report.wall_time = seconds_since(start);
    return report;
}

Json to_json(const VerificationReport& r) {
    Json fixtures = Json::array();
    for (const auto& f : r.fixtures) {
        Json checks = Json::array();
        for (const auto& c : f.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["passed"] = c.passed;
            if (!c.passed) jc["counterexample"] = c.detail;
            checks.push_back(std::move(jc));
        }
        Json jf;
        jf["fixture"] = f.fixture;
        jf["status"] = f.cap_exceeded ? "cap_exceeded" : f.skipped ? "not_applicable" : f.passed() ? "pass" : "fail";
        if (f.cap_exceeded) {
            jf["cap_detail"] = f.cap_detail;
            Json done = Json::array();
            for (const auto& c : f.checks) done.push_back(c.name);
            jf["completed_checks"] = std::move(done);
        }
        jf["checks"] = std::move(checks);
        jf["artifacts"] = f.artifacts;
        jf["wall_time"] = f.wall_time;
        fixtures.push_back(std::move(jf));
    }
    Json j;
    j["theorem"] = r.theorem;
    j["surrogate"] = r.surrogate;
    j["surrogate_note"] = surrogate_note(r.surrogate);
    j["passed"] = r.passed();
    j["fixtures"] = std::move(fixtures);
    j["wall_time"] = r.wall_time;
    return j;
}

std::string to_text(const VerificationReport& r) {
    char buf[64];
    std::string out = r.theorem + " (surrogate: " + r.surrogate + ")\n";
    out += "note: " + surrogate_note(r.surrogate) + "\n";
    std::size_t ok = 0;
    for (const auto& f : r.fixtures) {
        const char* status = f.cap_exceeded ? "CAP EXCEEDED" : f.skipped ? "N/A" : f.passed() ? "PASS" : "FAIL";
        out += "fixture " + f.fixture + ": " + status + "\n";
        if (f.skipped) out += "  " + f.artifacts.value("reason", std::string{}) + "\n";
        if (f.cap_exceeded) out += "  " + f.cap_detail + "\n";
        for (const auto& c : f.checks) {
            out += std::string("  [") + (c.passed ? "PASS" : "FAIL") + "] " + c.name + "\n";
            if (!c.passed && !c.detail.empty()) out += "    " + c.detail + "\n";
        }
        std::snprintf(buf, sizeof buf, "  wall_time: %.3fs\n", f.wall_time);
        out += buf;
        if (f.passed()) ++ok;
    }
    out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(ok) + "/" +
           std::to_string(r.fixtures.size()) + " fixtures)\n";
    std::snprintf(buf, sizeof buf, "wall_time: %.3fs\n", r.wall_time);
    out += buf;
    return out;
}

}  // namespace homcx
