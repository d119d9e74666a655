#include "ckgraph/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ckgraph/errors.hpp"

namespace ckgraph {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (const Edge& e : edges_)
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw DomainError("edge endpoint out of range");
}

std::size_t Multigraph::valence(std::size_t v) const {
    std::size_t d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<std::size_t> Multigraph::valences() const {
    std::vector<std::size_t> d(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<std::size_t> parent(vertex_count_);
    for (std::size_t i = 0; i < vertex_count_; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertex_count_;
    for (const Edge& e : edges_) {
        const std::size_t a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

// ---------------------------------------------------------------------------
// Parsing and serialization

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

bool parse_index(std::string_view word, std::size_t& out) {
    const auto* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, out);
    return ec == std::errc() && ptr == end;
}

Multigraph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("JSON graph needs \"vertices\" and \"edges\"", 0);
    if (!doc["vertices"].is_number_unsigned())
        throw ParseError("\"vertices\" must be a nonnegative integer", 0);
    const auto n = doc["vertices"].get<std::size_t>();
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
    std::vector<Edge> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            throw ParseError("edge entries must be [u, v] index pairs", 0);
        Edge e{pair[0].get<std::size_t>(), pair[1].get<std::size_t>()};
        if (e.u >= n || e.v >= n) throw ParseError("vertex index out of range", 0);
        edges.push_back(e);
    }
    if (edges.empty()) throw ParseError("empty edge list", 0);
    return Multigraph(n, std::move(edges));
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_graph(text);

    std::optional<std::size_t> vertices;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty() || words.front().front() == '#') continue;

        if (!vertices) {
            std::size_t n = 0;
            if (words.size() != 2 || words[0] != "vertices" || !parse_index(words[1], n))
                throw ParseError("expected `vertices <n>`", line_no);
            vertices = n;
            continue;
        }
        std::size_t u = 0, v = 0;
        if (words.size() != 3 || words[0] != "edge" || !parse_index(words[1], u) ||
            !parse_index(words[2], v))
            throw ParseError("malformed line", line_no);
        if (u >= *vertices || v >= *vertices) throw ParseError("vertex index out of range", line_no);
        edges.push_back({u, v});
    }
    if (!vertices) throw ParseError("missing `vertices <n>` header", 0);
    if (edges.empty()) throw ParseError("empty edge list", 0);
    return Multigraph(*vertices, std::move(edges));
}

std::string to_text(const Multigraph& g) {
    std::ostringstream os;
    os << "vertices " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) os << "edge " << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::string to_json(const Multigraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Structure

namespace {

void require_connected(const Multigraph& g) {
    if (!g.is_connected()) throw DomainError("graph is not connected");
}

struct BfsTree {
    std::vector<std::size_t> parent_edge;  // npos at the root
    std::vector<std::size_t> parent;
    std::vector<std::size_t> depth;
    std::vector<bool> in_tree;  // per edge
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

BfsTree bfs_tree(const Multigraph& g) {
    require_connected(g);
    const std::size_t n = g.vertex_count();
    // incident[v] lists edge indices in increasing order.
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        incident[g.edge(i).u].push_back(i);
        if (!g.edge(i).is_loop()) incident[g.edge(i).v].push_back(i);
    }
    BfsTree t{std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos),
              std::vector<std::size_t>(n, 0), std::vector<bool>(g.edge_count(), false)};
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t i : incident[x]) {
            const Edge& e = g.edge(i);
            const std::size_t y = e.u == x ? e.v : e.u;
            if (seen[y]) continue;
            seen[y] = true;
            t.parent[y] = x;
            t.parent_edge[y] = i;
            t.depth[y] = t.depth[x] + 1;
            t.in_tree[i] = true;
            queue.push_back(y);
        }
    }
    return t;
}

}  // namespace

std::size_t betti_number(const Multigraph& g) {
    require_connected(g);
    return g.edge_count() + 1 - g.vertex_count();
}

std::vector<std::size_t> spanning_tree(const Multigraph& g) {
    const BfsTree t = bfs_tree(g);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (t.in_tree[i]) out.push_back(i);
    return out;
}

std::vector<CycleVector> cycle_basis(const Multigraph& g) {
    const BfsTree t = bfs_tree(g);
    std::vector<CycleVector> basis;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (t.in_tree[i]) continue;
        CycleVector c(g.edge_count(), 0);
        c[i] = 1;
        // Close the cycle with the tree path from v back to u.
        std::size_t x = g.edge(i).v, y = g.edge(i).u;
        while (x != y) {
            if (t.depth[x] >= t.depth[y]) {
                // Step x -> parent(x).
                const std::size_t pe = t.parent_edge[x];
                c[pe] += g.edge(pe).u == x ? 1 : -1;
                x = t.parent[x];
            } else {
                // Step parent(y) -> y, walked from the u side.
                const std::size_t pe = t.parent_edge[y];
                c[pe] += g.edge(pe).v == y ? 1 : -1;
                y = t.parent[y];
            }
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

bool is_cycle(const Multigraph& g, const CycleVector& c) {
    if (c.size() != g.edge_count()) return false;
    std::vector<std::int64_t> boundary(g.vertex_count(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        boundary[g.edge(i).v] += c[i];
        boundary[g.edge(i).u] -= c[i];
    }
    return std::all_of(boundary.begin(), boundary.end(), [](std::int64_t b) { return b == 0; });
}

Multigraph contract_edge(const Multigraph& g, std::size_t e) {
    if (e >= g.edge_count()) throw DomainError("edge index out of range");
    const Edge& gamma = g.edge(e);
    if (gamma.is_loop()) throw DomainError("cannot contract a loop");
    const std::size_t keep = std::min(gamma.u, gamma.v);
    const std::size_t drop = std::max(gamma.u, gamma.v);
    auto relabel = [&](std::size_t v) {
        if (v == drop) return keep;
        return v > drop ? v - 1 : v;
    };
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (i != e) edges.push_back({relabel(g.edge(i).u), relabel(g.edge(i).v)});
    return Multigraph(g.vertex_count() - 1, std::move(edges));
}

bool is_stable(const Multigraph& g) {
    if (!g.is_connected()) return false;
    std::vector<bool> has_loop(g.vertex_count(), false);
    for (const Edge& e : g.edges())
        if (e.is_loop()) has_loop[e.u] = true;
    const auto val = g.valences();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!has_loop[v] && val[v] < 3) return false;
    return true;
}

std::vector<std::size_t> classify_end_edges(const Multigraph& g) {
    auto val = g.valences();
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_loop()) continue;  // a loop keeps its vertex at valence >= 2
        incident[g.edge(i).u].push_back(i);
        incident[g.edge(i).v].push_back(i);
    }
    std::vector<bool> removed(g.edge_count(), false);
    std::deque<std::size_t> leaves;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (val[v] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
        const std::size_t x = leaves.front();
        leaves.pop_front();
        if (val[x] != 1) continue;
        for (std::size_t i : incident[x]) {
            if (removed[i]) continue;
            removed[i] = true;
            const std::size_t y = g.edge(i).u == x ? g.edge(i).v : g.edge(i).u;
            --val[x];
            if (--val[y] == 1) leaves.push_back(y);
            break;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (removed[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> non_loop_edges(const Multigraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!g.edge(i).is_loop()) out.push_back(i);
    return out;
}

std::vector<Multigraph> contraction_stages(const Multigraph& g) {
    std::vector<Multigraph> stages{g};
    for (;;) {
        const auto candidates = non_loop_edges(stages.back());
        if (candidates.empty()) break;
        stages.push_back(contract_edge(stages.back(), candidates.front()));
    }
    return stages;
}

bool is_flower(const Multigraph& g) {
    return g.vertex_count() == 1 && g.edge_count() > 0;
}

// ---------------------------------------------------------------------------
// Families

Multigraph generate_flower(std::size_t genus) {
    if (genus == 0) throw DomainError("flower needs genus >= 1");
    return Multigraph(1, std::vector<Edge>(genus, Edge{0, 0}));
}

Multigraph generate_theta(std::size_t genus) {
    if (genus == 0) throw DomainError("theta needs genus >= 1");
    return Multigraph(2, std::vector<Edge>(genus + 1, Edge{0, 1}));
}

Multigraph generate_chain(std::size_t genus) {
    if (genus < 2) throw DomainError("chain needs genus >= 2");
    const std::size_t n = 2 * genus - 2;
    std::vector<Edge> edges{{0, 0}};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
        if (i % 2 == 1) edges.push_back({i, i + 1});
    }
    edges.push_back({n - 1, n - 1});
    Multigraph g(n, std::move(edges));
    if (betti_number(g) != genus || !is_stable(g))
        throw TheoremViolation("chain generator produced a graph of the wrong type");
    return g;
}

Multigraph generate_cycle(std::size_t n) {
    if (n == 0) throw DomainError("cycle needs at least one vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

}  // namespace ckgraph
