#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cyclenet/matrix.hpp"
#include "cyclenet/rng.hpp"

namespace cyclenet {

using NodeId = int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph with string node labels.
///
/// Node order is the canonical order (first appearance, stable) and is the
/// index order of every matrix built from the graph. Adjacency lists and the
/// edge list are kept sorted by index, so all traversals are deterministic.
/// Graphs are immutable once construction finishes; no operation below
/// mutates its input.
class Graph {
public:
    NodeId add_node(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        adj_.emplace_back();
        return id;
    }

    /// Adds an edge, registering unseen labels. Returns false on duplicates.
    bool add_edge(const std::string& u, const std::string& v) {
        return add_edge(add_node(u), add_node(v));
    }

    bool add_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v) throw std::invalid_argument("self-loop rejected: node " + labels_[u]);
        if (u > v) std::swap(u, v);
        auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (pos != edges_.end() && *pos == std::make_pair(u, v)) return false;
        edges_.insert(pos, {u, v});
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        return true;
    }

    bool remove_edge(NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (pos == edges_.end() || *pos != std::make_pair(u, v)) return false;
        edges_.erase(pos);
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
        return true;
    }

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& label(NodeId v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<NodeId> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    NodeId index_of(const std::string& label) const {
        auto v = find(label);
        if (!v) throw std::invalid_argument("unknown node label: " + label);
        return *v;
    }

    const std::vector<NodeId>& neighbors(NodeId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Edges as (min,max) index pairs in lexicographic order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

private:
    void check_node(NodeId v) const {
        if (v < 0 || v >= node_count()) throw std::invalid_argument("node index out of range");
    }

    static void insert_sorted(std::vector<NodeId>& vec, NodeId x) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
    }

    static void erase_sorted(std::vector<NodeId>& vec, NodeId x) {
        auto it = std::lower_bound(vec.begin(), vec.end(), x);
        if (it != vec.end() && *it == x) vec.erase(it);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Parses the edge-list format: one edge per line, two whitespace-separated
/// labels; lines whose first non-blank character is '#' are ignored.
/// Duplicate edge lines collapse; self-loops and malformed lines are
/// rejected with their line number.
inline Graph parse_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;          // blank line
        if (a.front() == '#') continue;    // comment line
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected exactly two labels");
        if (a == b)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop on '" + a + "'");
        g.add_edge(a, b);
    }
    return g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/// Connected components as node blocks, ordered by their lowest node.
inline std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    int n = g.node_count();
    std::vector<std::vector<NodeId>> blocks;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (NodeId root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<NodeId> block;
        std::deque<NodeId> queue{root};
        seen[static_cast<std::size_t>(root)] = true;
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            block.push_back(v);
            for (NodeId u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

inline int component_count(const Graph& g) {
    return static_cast<int>(connected_components(g).size());
}

struct SpanningForest {
    std::vector<std::pair<NodeId, NodeId>> tree_edges;  // BFS discovery order
    std::vector<std::pair<NodeId, NodeId>> chords;      // canonical edge order
    std::vector<NodeId> parent;                         // -1 at roots
    std::vector<int> depth;
};

/// Deterministic BFS spanning forest: roots are the lowest-ordered node of
/// each component, neighbors visited in canonical order.
inline SpanningForest spanning_forest(const Graph& g) {
    int n = g.node_count();
    SpanningForest f;
    f.parent.assign(static_cast<std::size_t>(n), -1);
    f.depth.assign(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::unordered_set<std::uint64_t> tree_keys;
    auto key = [](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    };

    for (NodeId root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::deque<NodeId> queue{root};
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            for (NodeId u : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(u)]) continue;
                seen[static_cast<std::size_t>(u)] = true;
                f.parent[static_cast<std::size_t>(u)] = v;
                f.depth[static_cast<std::size_t>(u)] = f.depth[static_cast<std::size_t>(v)] + 1;
                f.tree_edges.push_back({v, u});
                tree_keys.insert(key(v, u));
                queue.push_back(u);
            }
        }
    }
    for (const auto& e : g.edges())
        if (!tree_keys.count(key(e.first, e.second))) f.chords.push_back(e);
    return f;
}

/// Per-node structural profile. Unbounded girth (node on no cycle) and
/// unbounded path-sum (disconnected graph) are encoded as empty optionals.
struct NodeProfile {
    int degree = 0;
    std::optional<int> girth;
    std::optional<long long> path_sum;

    bool operator==(const NodeProfile&) const = default;
};

/// Profile of node v: degree, length of the shortest simple cycle through v,
/// and the sum of BFS distances to every other node.
///
/// The girth scan runs one BFS from v recording each node's distance and
/// first-hop branch, then minimizes dist(x)+dist(y)+1 over edges (x,y) whose
/// endpoints lie in distinct branches; tree paths from distinct branches
/// meet only at v, so every candidate is a simple cycle through v and the
/// minimum is exact.
inline NodeProfile node_profile(const Graph& g, NodeId v) {
    int n = g.node_count();
    if (v < 0 || v >= n) throw std::invalid_argument("node_profile: node out of range");

    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> branch(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    std::deque<NodeId> queue{v};
    while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        for (NodeId y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] != -1) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            branch[static_cast<std::size_t>(y)] = (x == v) ? y : branch[static_cast<std::size_t>(x)];
            queue.push_back(y);
        }
    }

    NodeProfile p;
    p.degree = g.degree(v);

    int best = std::numeric_limits<int>::max();
    for (const auto& [x, y] : g.edges()) {
        if (x == v || y == v) continue;
        if (dist[static_cast<std::size_t>(x)] < 0 || dist[static_cast<std::size_t>(y)] < 0) continue;
        if (branch[static_cast<std::size_t>(x)] == branch[static_cast<std::size_t>(y)]) continue;
        best = std::min(best, dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1);
    }
    if (best != std::numeric_limits<int>::max()) p.girth = best;

    long long sum = 0;
    bool reached_all = true;
    for (NodeId u = 0; u < n; ++u) {
        if (dist[static_cast<std::size_t>(u)] < 0)
            reached_all = false;
        else
            sum += dist[static_cast<std::size_t>(u)];
    }
    if (reached_all) p.path_sum = sum;
    return p;
}

/// True iff every node has the identical (degree, girth, path-sum) profile;
/// the shared profile accompanies a positive verdict.
inline std::pair<bool, NodeProfile> is_totally_homogeneous(const Graph& g) {
    if (g.node_count() == 0) return {true, NodeProfile{}};
    NodeProfile first = node_profile(g, 0);
    for (NodeId v = 1; v < g.node_count(); ++v)
        if (node_profile(g, v) != first) return {false, NodeProfile{}};
    return {true, first};
}

/// L = D - A in canonical node order.
inline SymmetricMatrix laplacian(const Graph& g) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    SymmetricMatrix m(n);
    for (const auto& [u, v] : g.edges()) {
        m.set_sym(static_cast<std::size_t>(u), static_cast<std::size_t>(v), -1.0);
        m.add_sym(static_cast<std::size_t>(u), static_cast<std::size_t>(u), 1.0);
        m.add_sym(static_cast<std::size_t>(v), static_cast<std::size_t>(v), 1.0);
    }
    return m;
}

/// Rotation/reflection canonical form of a simple node cycle: the minimum
/// node leads and its smaller cycle-neighbor comes second.
inline std::vector<NodeId> canonical_cycle_form(const std::vector<NodeId>& cycle) {
    std::size_t k = cycle.size();
    if (k < 3) throw std::invalid_argument("canonical_cycle_form: cycle needs >= 3 nodes");
    std::size_t start = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (cycle[i] < cycle[start]) start = i;
    NodeId fwd = cycle[(start + 1) % k];
    NodeId bwd = cycle[(start + k - 1) % k];
    std::vector<NodeId> out(k);
    if (fwd <= bwd) {
        for (std::size_t i = 0; i < k; ++i) out[i] = cycle[(start + i) % k];
    } else {
        for (std::size_t i = 0; i < k; ++i) out[i] = cycle[(start + k - i) % k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Deterministic generators
// ---------------------------------------------------------------------------

namespace detail {

inline std::string node_name(int i) { return std::to_string(i); }

inline Graph empty_labeled(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node(node_name(i));
    return g;
}

}  // namespace detail

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g = detail::empty_labeled(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Ring lattice: node i joined to i+-1 .. i+-half_width (mod n).
inline Graph ring_lattice(int n, int half_width) {
    if (half_width < 1) throw std::invalid_argument("ring_lattice: half_width must be >= 1");
    if (n < 2 * half_width + 1)
        throw std::invalid_argument("ring_lattice: need n >= 2*half_width + 1");
    Graph g = detail::empty_labeled(n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= half_width; ++k) g.add_edge(i, (i + k) % n);
    return g;
}

inline Graph cycle_graph(int n) { return ring_lattice(n, 1); }

/// Cocktail-party graph K_{2 x m}: 2m nodes, all edges except the m
/// antipodal pairs (i, i+m).
inline Graph cocktail_party(int m) {
    if (m < 1) throw std::invalid_argument("cocktail_party: m must be >= 1");
    int n = 2 * m;
    Graph g = detail::empty_labeled(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (v - u != m) g.add_edge(u, v);
    return g;
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
inline Graph petersen() {
    Graph g = detail::empty_labeled(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

/// Uniform G(n,m): all candidate pairs are shuffled with the seeded engine
/// and the first m become edges. Bit-for-bit reproducible per seed.
inline Graph erdos_renyi_gnm(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("erdos_renyi_gnm: negative parameter");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw std::invalid_argument("erdos_renyi_gnm: m exceeds n(n-1)/2");
    Graph g = detail::empty_labeled(n);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(static_cast<std::size_t>(max_edges));
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    auto eng = make_engine(seed);
    std::shuffle(pairs.begin(), pairs.end(), eng);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[static_cast<std::size_t>(i)].first,
                                           pairs[static_cast<std::size_t>(i)].second);
    return g;
}

/// Small-world rewiring: iterate the base graph's edges in canonical order;
/// with probability p replace the far (second) endpoint by a uniformly
/// random node, resampling on self-loops and duplicates. p = 0 is the
/// identity.
inline Graph ws_rewire(const Graph& base, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("ws_rewire: p must be in [0,1]");
    Graph g = base;
    int n = g.node_count();
    if (n < 2) return g;
    auto eng = make_engine(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    auto snapshot = base.edges();
    for (const auto& [u, v] : snapshot) {
        if (coin(eng) >= p) continue;
        if (g.degree(u) >= n - 1) continue;  // no free target left
        for (int attempt = 0; attempt < 16 * n; ++attempt) {
            NodeId w = pick(eng);
            if (w == u || g.has_edge(u, w)) continue;
            g.remove_edge(u, v);
            g.add_edge(u, w);
            break;
        }
    }
    return g;
}

/// Circulant graph: node i joined to i+-s (mod n) for each offset s.
inline Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant: n must be >= 3");
    Graph g = detail::empty_labeled(n);
    for (int s : offsets) {
        if (s < 1 || 2 * s > n)
            throw std::invalid_argument("circulant: offset out of range");
        for (int i = 0; i < n; ++i)
            if ((i + s) % n != i) g.add_edge(i, (i + s) % n);
    }
    return g;
}

}  // namespace cyclenet
