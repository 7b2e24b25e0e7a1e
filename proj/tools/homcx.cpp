// Command-line front end for the homcx library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "homcx/collapse.hpp"
#include "homcx/error.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/io.hpp"
#include "homcx/nerve.hpp"
#include "homcx/verify.hpp"

using namespace homcx;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kCap = 3 };

std::size_t default_cap() {
    if (const char* env = std::getenv("HOMCX_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("HOMCX_CAP is not a number: ") + env);
        }
    }
    return kDefaultHomCap;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit(const Json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

Graph source_graph(const std::string& spec) {
    if (spec.size() > 1 && spec[0] == 'K' && spec.find_first_not_of("0123456789", 1) == std::string::npos)
        return Graph::complete(std::stoi(spec.substr(1)));
    return read_graph(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial complexes, graph Hom complexes and collapse certificates"};
    app.require_subcommand(1);
    std::string input, output;
    int k = 1;

    auto with_io = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("input", input, what)->required();
        cmd->add_option("-o,--output", output, "Write to a file instead of stdout");
    };

    auto* sd = app.add_subcommand("sd", "Iterated barycentric subdivision of a complex");
    with_io(sd, "Complex JSON");
    sd->add_option("-k", k, "Number of subdivisions")->capture_default_str();

    auto* g1x = app.add_subcommand("g1x", "Reflexive 1-skeleton G_{k,X} of Sd^k(X)");
    with_io(g1x, "Complex JSON");
    g1x->add_option("-k", k, "Subdivision depth")->capture_default_str();

    auto* nbhd = app.add_subcommand("nbhd", "Neighborhood complex of a graph");
    with_io(nbhd, "Graph JSON");

    auto* clique = app.add_subcommand("clique", "Clique complex of a graph");
    with_io(clique, "Graph JSON");

    std::string source = "K2";
    std::size_t cap = 0;
    auto* hom = app.add_subcommand("hom", "Poset of multihomomorphisms G -> H");
    with_io(hom, "Target graph H (JSON)");
    hom->add_option("--g", source, "Source graph: K<n> or a graph JSON file")->capture_default_str();
    hom->add_option("--cap", cap, "Element cap (default 1000000 or $HOMCX_CAP)");

    bool collapse_first = false, reduced = false;
    auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex");
    with_io(homology_cmd, "Complex JSON");
    homology_cmd->add_flag("--collapse", collapse_first, "Greedy collapse before computing");
    homology_cmd->add_flag("--reduced", reduced, "Reduced homology");

    auto* collapse = app.add_subcommand("collapse", "Greedy collapse with a replayable certificate");
    with_io(collapse, "Complex JSON");

    auto* nerve = app.add_subcommand("nerve", "Star cover of a complex and its nerve");
    with_io(nerve, "Complex JSON");

    auto* klfilt = app.add_subcommand("klfilt", "K_l filtration of N(G_{1,X}) with collapse certificates");
    with_io(klfilt, "Complex JSON");

    std::string theorem, fixtures, format = "text";
    int n = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("theorem", theorem, "Suite id")->required()->check(CLI::IsMember(theorem_ids()));
    auto* fixtures_opt = verify->add_option("--fixtures", fixtures, "core or a comma-separated list of fixture ids");
    verify->add_option("--fixture", fixtures, "Single fixture id")->excludes(fixtures_opt);
    verify->add_option("--n", n, "Size of K_n where the suite takes one");
    verify->add_option("--cap", cap, "Hom element cap (default 1000000 or $HOMCX_CAP)");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    verify->add_option("-o,--output", output, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (cap == 0) cap = default_cap();
        if (*sd) {
            emit(to_json(barycentric_subdivision(read_complex(input), k)), output);
        } else if (*g1x) {
            emit(to_json(build_g_kx(read_complex(input), k).graph), output);
        } else if (*nbhd) {
            emit(to_json(neighborhood_complex(read_graph(input))), output);
        } else if (*clique) {
            emit(to_json(clique_complex(read_graph(input))), output);
        } else if (*hom) {
            emit(to_json(enumerate_hom(source_graph(source), read_graph(input), cap)), output);
        } else if (*homology_cmd) {
            const SimplicialComplex x = read_complex(input);
            emit(to_json(homology(collapse_first ? greedy_collapse(x).result : x, reduced)), output);
        } else if (*collapse) {
            const SimplicialComplex x = read_complex(input);
            const auto result = greedy_collapse(x);
            Json j;
            j["result"] = to_json(result.result);
            j["certificate"] = to_json(result.certificate, x);
            emit(j, output);
        } else if (*nerve) {
            const Cover c = star_cover(read_complex(input));
            const auto hyp = verify_nerve_theorem_hypotheses(c);
            Json j;
            j["cover"] = to_json(c);
            j["nerve"] = to_json(nerve_of_cover(c));
            j["intersections_checked"] = hyp.intersections_checked;
            j["intersections_full_simplices"] = hyp.passed();
            emit(j, output);
        } else if (*klfilt) {
            const Filtration f = kl_filtration(read_complex(input));
            const KlCollapseReport report = verify_kl_collapse_sequence(f);
            Json j = to_json(f);
            j["certificate"] = to_json(report.combined, f.complexes.front());
            emit(j, output);
        } else if (*verify) {
            VerifyOptions options;
            options.fixtures = fixtures;
            options.n = n;
            options.cap = cap;
            const VerificationReport r = run_verification(theorem, options);
            if (format == "json")
                emit(to_json(r), output);
            else
                emit(to_text(r), output);
            if (r.cap_exceeded()) return kCap;
            return r.passed() ? kOk : kFailed;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "homcx: " << e.what() << "\n";
        return kCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "homcx: invariant violated: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "homcx: " << e.what() << "\n";
        return kBadInput;
    } catch (const Json::exception& e) {
        std::cerr << "homcx: malformed input: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
