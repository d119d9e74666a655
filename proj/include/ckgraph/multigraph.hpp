#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ckgraph {

/// A geometric edge. The stored (u, v) order fixes the positive orientation.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph with loops and parallel edges. The edge
/// order is part of the value: edge i becomes oriented edges i and m + i.
class Multigraph {
public:
    Multigraph() = default;
    /// Throws DomainError if an endpoint is out of range.
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    /// Number of edge ends at v; a loop counts twice.
    std::size_t valence(std::size_t v) const;
    std::vector<std::size_t> valences() const;
    bool is_connected() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Integer coefficient per geometric edge, in the stored orientation.
using CycleVector = std::vector<std::int64_t>;

// Text format: `vertices <n>` then one `edge <u> <v>` per line; blank lines
// and `#` comments are skipped. Input starting with `{` is read as JSON
// {"vertices": n, "edges": [[u, v], ...]}.
Multigraph parse_graph(std::string_view text);
std::string to_text(const Multigraph& g);
std::string to_json(const Multigraph& g);

/// m - n + 1. Throws DomainError for disconnected input.
std::size_t betti_number(const Multigraph& g);

/// Breadth-first spanning tree from vertex 0, scanning incident edges in
/// increasing index order. Returned edge indices are sorted.
std::vector<std::size_t> spanning_tree(const Multigraph& g);

/// One fundamental cycle per non-tree edge, oriented along that edge.
std::vector<CycleVector> cycle_basis(const Multigraph& g);

/// True if c lies in the kernel of the boundary map.
bool is_cycle(const Multigraph& g, const CycleVector& c);

/// Merges the endpoints of edge e and deletes it. Surviving edges keep their
/// relative order and stored orientation; the merged vertex takes the smaller
/// index and higher indices shift down by one.
Multigraph contract_edge(const Multigraph& g, std::size_t e);

/// Connected, and every vertex without a loop has valence >= 3.
bool is_stable(const Multigraph& g);

/// Edges removed by repeatedly deleting valence-1 vertices (the union of all
/// ends). Sorted.
std::vector<std::size_t> classify_end_edges(const Multigraph& g);

std::vector<std::size_t> non_loop_edges(const Multigraph& g);

/// g itself followed by each graph obtained by contracting the lowest-index
/// non-loop edge, down to a single vertex.
std::vector<Multigraph> contraction_stages(const Multigraph& g);

/// One vertex, at least one edge, every edge a loop.
bool is_flower(const Multigraph& g);

Multigraph generate_flower(std::size_t genus);
Multigraph generate_theta(std::size_t genus);
/// 2g-2 vertices on a path with a loop at each end; consecutive vertices are
/// joined alternately by one and by two edges, starting with a single edge.
Multigraph generate_chain(std::size_t genus);
/// Ring on n vertices (n = 1 is a loop, n = 2 a double edge).
Multigraph generate_cycle(std::size_t n);

}  // namespace ckgraph
