#include "reedlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace reedlab {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v)
                                        + " out of range [0," + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.m_ += static_cast<long>(nbrs.size());
    }
    g.m_ /= 2;
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

const std::vector<int>& Graph::neighbors(int v) const
{
    if (v < 0 || v >= n())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const
{
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= n())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& nbrs : adj_)
        d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int d = n();
    for (const auto& nbrs : adj_)
        d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.push_back({u, v});
    return out;
}

void validate_vertex_set(const Graph& g, const VertexSet& s)
{
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (v <= prev)
            throw std::invalid_argument("vertex set is not strictly increasing");
        prev = v;
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    validate_vertex_set(g, s);
    std::vector<int> to_new(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < s.size(); ++i)
        to_new[static_cast<std::size_t>(s[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && to_new[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(to_new[static_cast<std::size_t>(v)],
                                   to_new[static_cast<std::size_t>(w)]);
    return {Graph::from_edges(static_cast<int>(s.size()), edges), s};
}

std::optional<Edge> find_internal_edge(const Graph& g, const VertexSet& s)
{
    validate_vertex_set(g, s);
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && std::binary_search(s.begin(), s.end(), w))
                return Edge{v, w};
    return std::nullopt;
}

bool is_stable(const Graph& g, const VertexSet& s) { return !find_internal_edge(g, s).has_value(); }

namespace {

// BFS from root; returns (dist, parent) with neighbors scanned in sorted order.
void bfs_layers(const Graph& g, int root, std::vector<int>& dist, std::vector<int>& parent)
{
    dist.assign(static_cast<std::size_t>(g.n()), -1);
    parent.assign(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
    }
}

std::vector<int> path_to_root(const std::vector<int>& parent, int v)
{
    std::vector<int> path{v};
    while (parent[static_cast<std::size_t>(path.back())] >= 0)
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
    return path; // v ... root
}

} // namespace

BipartiteResult bipartition_or_odd_cycle(const Graph& g)
{
    const int n = g.n();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    bool bipartite = true;
    for (int root = 0; root < n && bipartite; ++root) {
        if (side[static_cast<std::size_t>(root)] >= 0)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty() && bipartite) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }

    if (bipartite) {
        Bipartition parts;
        for (int v = 0; v < n; ++v)
            (side[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
        return parts;
    }

    // Shortest odd closed walk through a same-layer edge; at the global
    // minimum the two tree paths are disjoint, so this is a simple cycle,
    // and a shortest odd cycle is chordless.
    int best_len = -1;
    int best_root = -1;
    std::vector<int> best_seq;
    std::vector<int> dist, parent;
    const std::vector<Edge> all_edges = g.edges();
    for (int root = 0; root < n; ++root) {
        bfs_layers(g, root, dist, parent);
        for (const Edge& e : all_edges) {
            int du = dist[static_cast<std::size_t>(e.u)];
            int dv = dist[static_cast<std::size_t>(e.v)];
            if (du < 0 || dv < 0 || du != dv)
                continue;
            int len = 2 * du + 1;
            bool shorter = best_len < 0 || len < best_len;
            bool same_root_tie = len == best_len && root == best_root;
            if (!shorter && !same_root_tie)
                continue; // an equal-length cycle at a later root loses the tie
            // sequence u..root..v, cyclically closed by the edge (u, v)
            std::vector<int> up = path_to_root(parent, e.u);       // u ... root
            std::vector<int> down = path_to_root(parent, e.v);     // v ... root
            std::vector<int> seq = up;
            seq.insert(seq.end(), down.rbegin() + 1, down.rend()); // root's child ... v
            if (shorter || seq < best_seq) {
                best_len = len;
                best_root = root;
                best_seq = std::move(seq);
            }
        }
        if (best_len == 3)
            break; // no shorter odd cycle exists and later roots lose ties
    }
    return OddCycleWitness{best_seq};
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int root = 0; root < g.n(); ++root) {
        if (seen[static_cast<std::size_t>(root)])
            continue;
        VertexSet comp;
        std::deque<int> queue{root};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet all_vertices(const Graph& g)
{
    VertexSet s(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        s[static_cast<std::size_t>(v)] = v;
    return s;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union_of(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle)
{
    const int len = static_cast<int>(cycle.size());
    if (len < 3)
        return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : cycle)
        if (v < 0 || v >= g.n())
            return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)])
                != consecutive)
                return false;
        }
    return true;
}

} // namespace reedlab
