#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ckgraph/edge_operator.hpp"
#include "ckgraph/multigraph.hpp"

namespace ckgraph {

/// Relabeling of g with the lexicographically smallest sorted edge list over
/// all vertex permutations. Brute force; intended for a handful of vertices.
Multigraph canonical_form(const Multigraph& g);

/// Every connected multigraph with 1..max_vertices vertices, at most
/// max_edges edges and Betti number >= min_genus, once per canonical form.
std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_vertices,
                                                        std::size_t max_edges,
                                                        std::size_t min_genus = 1);

/// Random connected multigraph with shuffled vertex labels, edge order and
/// orientations.
Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                                       std::size_t max_edges, std::size_t min_genus = 1);

/// One graph under test. `matrix` is normally edge_matrix(graph); the sweep
/// self-test replaces it with a corrupted copy.
struct GraphCase {
    Multigraph graph;
    std::size_t genus = 0;
    EdgeMatrix matrix;

    explicit GraphCase(Multigraph g);
};

struct CheckOutcome {
    enum class Status { Pass, Fail, Skip };
    Status status = Status::Pass;
    std::string detail;

    static CheckOutcome pass() { return {}; }
    static CheckOutcome skip() { return {Status::Skip, {}}; }
    static CheckOutcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
};

struct InvariantCheck {
    std::string name;
    std::function<CheckOutcome(const GraphCase&)> run;
};

/// Named checks for every structural and K-theoretic invariant.
const std::vector<InvariantCheck>& invariant_checks();
const InvariantCheck& invariant_check(const std::string& name);

/// Expected values for the named example families.
struct Fixture {
    std::string name;
    Multigraph graph;
    std::size_t genus;
    std::size_t vertex_count;
    bool stable;
    std::optional<std::size_t> unit_order;
};

const std::vector<Fixture>& regression_fixtures();
/// Empty on success, otherwise a description of the first mismatch.
std::string check_fixture(const Fixture& f);

struct SweepConfig {
    enum class Mode { Exhaustive, Random };
    std::size_t max_vertices = 4;
    std::size_t max_edges = 6;
    Mode mode = Mode::Exhaustive;
    std::size_t sample_count = 500;
    std::uint64_t seed = 42;
    bool include_fixtures = true;
    /// Flip entry (0, 0) of every edge matrix. Used to prove the harness
    /// catches a wrong matrix.
    bool inject_mutant = false;
};

struct InvariantTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct Counterexample {
    std::string invariant;
    Multigraph graph;
    std::string detail;
};

struct SweepSummary {
    std::size_t graphs = 0;
    std::vector<InvariantTally> tallies;
    std::optional<Counterexample> first_failure;

    bool ok() const { return !first_failure.has_value(); }
};

SweepSummary run_sweep(const SweepConfig& config);

}  // namespace ckgraph
