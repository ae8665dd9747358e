#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace reedlab {

// Sorted list of distinct vertex ids of some graph.
using VertexSet = std::vector<int>;

struct Edge {
    int u = 0; // normalized: u < v
    int v = 0;
    bool operator==(const Edge&) const = default;
};

// Immutable simple undirected graph. Neighbor lists are sorted, loop- and
// multiedge-free, and symmetric by construction. All queries are const, so
// concurrent use from several threads needs no synchronization.
class Graph {
public:
    Graph() = default;

    // Deduplicates edges; throws std::invalid_argument on loops or ids
    // outside [0, n).
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int n() const { return static_cast<int>(adj_.size()); }
    long m() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    // Convention for the empty graph (n = 0): max_degree = min_degree = 0.
    int max_degree() const;
    int min_degree() const;
    std::vector<Edge> edges() const; // sorted (u, v) pairs with u < v

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    long m_ = 0;
};

// Cyclic vertex sequence of odd length >= 3; consecutive vertices (wrapping
// around) are adjacent and there is no chord.
struct OddCycleWitness {
    std::vector<int> vertices;
};

struct Bipartition {
    VertexSet left;
    VertexSet right;
};

using BipartiteResult = std::variant<Bipartition, OddCycleWitness>;

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original; // new id -> original id (sorted)
};

// Throws std::invalid_argument unless s is strictly increasing with ids in [0, n).
void validate_vertex_set(const Graph& g, const VertexSet& s);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// First edge (lex order) with both endpoints in s, if any.
std::optional<Edge> find_internal_edge(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

// Two-coloring certificate or a shortest odd cycle. A shortest odd cycle is
// always chordless. Deterministic: BFS layering from every vertex, ties
// broken by lowest root id, then lexicographically smallest vertex sequence.
BipartiteResult bipartition_or_odd_cycle(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

VertexSet all_vertices(const Graph& g);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union_of(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

// True iff `cycle` lists a chordless simple cycle of g in cyclic order.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

} // namespace reedlab
