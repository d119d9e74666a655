#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ckgraph/errors.hpp"
#include "ckgraph/ihara_zeta.hpp"
#include "ckgraph/ktheory.hpp"
#include "ckgraph/multigraph.hpp"
#include "ckgraph/report_json.hpp"
#include "ckgraph/sweep.hpp"

using namespace ckgraph;

namespace {

enum ExitCode { kOk = 0, kUnexpected = 1, kInput = 2, kTheorem = 3, kIndeterminate = 4, kCounterexample = 5 };

struct Options {
    std::string format;  // empty: JSON reports, text graph files
    std::string path1, path2;
    bool strict = false;
    bool stable = false;
    std::string family;
    std::size_t param = 0;
    std::string out;
    SweepConfig sweep;
    bool random = false;
};

Multigraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph(text.str());
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string optional_integer(const std::optional<Integer>& x) {
    return x ? x->get_str() : std::string("none");
}

int run_invariants(const Options& o) {
    const KTheoryReport r = ktheory_report(load(o.path1));
    if (o.format != "text") {
        emit(to_json_value(r));
        return kOk;
    }
    std::cout << "g: " << r.genus << "\nvertices: " << r.vertex_count << "\nedges: " << r.edge_count
              << "\nK0: " << to_string(r.k0) << "\nK1 rank: " << r.k1_rank
              << "\nunit order: " << optional_integer(r.unit.order)
              << "\nsimplicity: irreducible=" << yes_no(r.simplicity.irreducible)
              << " permutation=" << yes_no(r.simplicity.permutation) << '\n';
    return kOk;
}

int run_classify(const Options& o) {
    const Multigraph g1 = load(o.path1), g2 = load(o.path2);
    const Classification c = o.strict ? classify_strict(g1, g2) : classify_stable(g1, g2);
    if (o.format != "text") {
        emit(to_json_value(c));
    } else {
        std::cout << "verdict: " << to_string(c.verdict) << "\nreason: " << c.reason << '\n';
    }
    return c.verdict == Verdict::Indeterminate ? kIndeterminate : kOk;
}

int run_zeta(const Options& o) {
    const ZetaReport r = zeta_report(load(o.path1));
    if (o.format != "text") {
        emit(to_json_value(r));
        return kOk;
    }
    std::cout << "g: " << r.genus << "\ndet(1 - uT): " << to_string(r.edge_poly)
              << "\nvertex side: " << to_string(r.vertex_poly)
              << "\nidentity holds: " << yes_no(r.identity_holds) << "\nord at u=1: " << r.ord_at_one
              << '\n';
    return kOk;
}

int run_generate(const Options& o) {
    Multigraph g = o.family == "flower" ? generate_flower(o.param)
                   : o.family == "theta" ? generate_theta(o.param)
                   : o.family == "chain" ? generate_chain(o.param)
                                         : generate_cycle(o.param);
    const std::string text = o.format == "json" ? to_json(g) + "\n" : to_text(g);
    if (o.out.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream file(o.out);
    if (!file) throw DomainError("cannot write " + o.out);
    file << text;
    return kOk;
}

int run_verify(Options o) {
    o.sweep.mode = o.random ? SweepConfig::Mode::Random : SweepConfig::Mode::Exhaustive;
    const SweepSummary s = run_sweep(o.sweep);
    if (o.format != "text") {
        Json j;
        j["mode"] = o.random ? "random" : "exhaustive";
        j["max_vertices"] = o.sweep.max_vertices;
        j["max_edges"] = o.sweep.max_edges;
        if (o.random) {
            j["samples"] = o.sweep.sample_count;
            j["seed"] = o.sweep.seed;
        }
        j["graphs"] = s.graphs;
        Json tallies = Json::array();
        for (const auto& t : s.tallies)
            tallies.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed},
                               {"skipped", t.skipped}});
        j["invariants"] = std::move(tallies);
        j["ok"] = s.ok();
        if (s.first_failure) {
            j["counterexample"] = {{"invariant", s.first_failure->invariant},
                                   {"detail", s.first_failure->detail},
                                   {"graph", to_text(s.first_failure->graph)}};
        }
        emit(j);
    } else {
        std::cout << "graphs: " << s.graphs << '\n';
        for (const auto& t : s.tallies)
            std::cout << t.name << ": " << t.passed << " passed, " << t.failed << " failed, "
                      << t.skipped << " skipped\n";
        if (s.first_failure) {
            std::cout << "counterexample (" << s.first_failure->invariant
                      << "): " << s.first_failure->detail << '\n'
                      << to_text(s.first_failure->graph);
        } else {
            std::cout << "all invariants hold\n";
        }
    }
    return s.ok() ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-theory of Cuntz-Krieger algebras of graph edge operators"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format (json or text)")
        ->check(CLI::IsMember({"json", "text"}));

    auto* inv = app.add_subcommand("invariants", "K-theory report for a graph file");
    inv->add_option("file", o.path1)->required();

    auto* cls = app.add_subcommand("classify", "Compare the algebras of two graphs");
    cls->add_option("first", o.path1)->required();
    cls->add_option("second", o.path2)->required();
    auto* strict = cls->add_flag("--strict", o.strict, "Isomorphism (K0 with unit class)");
    auto* stable = cls->add_flag("--stable", o.stable, "Stable isomorphism (K0 only)");
    strict->excludes(stable);

    auto* zeta = app.add_subcommand("zeta", "Ihara-Bass identity and order at u = 1");
    zeta->add_option("file", o.path1)->required();

    auto* gen = app.add_subcommand("generate", "Write a named graph family");
    gen->add_option("family", o.family)
        ->required()
        ->check(CLI::IsMember({"flower", "theta", "chain", "cycle"}));
    gen->add_option("param", o.param, "Betti number, or vertex count for cycle")->required();
    gen->add_option("--out", o.out, "Output path (default: standard output)");

    auto* ver = app.add_subcommand("verify", "Check every invariant over a graph sweep");
    ver->add_option("--max-vertices", o.sweep.max_vertices)->capture_default_str();
    ver->add_option("--max-edges", o.sweep.max_edges)->capture_default_str();
    ver->add_flag("--random", o.random, "Sample random graphs instead of enumerating");
    ver->add_option("--samples", o.sweep.sample_count)->capture_default_str();
    ver->add_option("--seed", o.sweep.seed)->capture_default_str();
    ver->add_flag("--inject-mutant", o.sweep.inject_mutant,
                  "Corrupt one edge-matrix entry to test the harness");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (*cls && !o.strict && !o.stable)
            throw CLI::ValidationError("classify", "one of --strict or --stable is required");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*inv) return run_invariants(o);
        if (*cls) return run_classify(o);
        if (*zeta) return run_zeta(o);
        if (*gen) return run_generate(o);
        return run_verify(o);
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kTheorem;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUnexpected;
    }
}
