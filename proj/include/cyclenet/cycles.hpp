#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclenet/gf2.hpp"
#include "cyclenet/graph.hpp"

namespace cyclenet {

/// The smallest-basic-cycle set of a graph: for every node with bounded
/// girth, all simple cycles of exactly that length through it, deduplicated
/// under rotation and reflection.
struct CycleSet {
    std::vector<std::vector<NodeId>> cycles;         // canonical form, sorted
    std::vector<std::vector<std::size_t>> per_node;  // node -> indices of its cycles
};

namespace detail {

struct CycleDfs {
    const Graph* g;
    int target_len;
    NodeId root;
    std::uint64_t* budget;
    std::vector<bool> on_path;
    std::vector<NodeId> path;
    std::set<std::vector<NodeId>>* out;

    void run() {
        path.push_back(root);
        on_path[static_cast<std::size_t>(root)] = true;
        extend();
    }

    void extend() {
        if (*budget == 0)
            throw std::runtime_error("smallest_cycle_set: enumeration budget exceeded");
        --*budget;
        if (static_cast<int>(path.size()) == target_len) {
            if (g->has_edge(path.back(), root)) out->insert(canonical_cycle_form(path));
            return;
        }
        for (NodeId w : g->neighbors(path.back())) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = true;
            extend();
            on_path[static_cast<std::size_t>(w)] = false;
            path.pop_back();
        }
    }
};

}  // namespace detail

/// Enumerates each node's girth-length simple cycles by depth-limited DFS
/// and merges them into one deduplicated set. The step budget guards
/// pathological inputs; exceeding it throws.
inline CycleSet smallest_cycle_set(const Graph& g, std::uint64_t budget = 50'000'000) {
    int n = g.node_count();
    std::vector<std::optional<int>> girth(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) girth[static_cast<std::size_t>(v)] = node_profile(g, v).girth;

    // Every root enumerates all of its own girth-length cycles; each cycle
    // is found once per member node (twice per direction) and collapses in
    // the canonical-form set.
    std::set<std::vector<NodeId>> found;
    for (NodeId v = 0; v < n; ++v) {
        if (!girth[static_cast<std::size_t>(v)]) continue;
        detail::CycleDfs dfs{&g, *girth[static_cast<std::size_t>(v)], v, &budget,
                             std::vector<bool>(static_cast<std::size_t>(n), false),
                             {},
                             &found};
        dfs.run();
    }

    CycleSet cs;
    cs.cycles.assign(found.begin(), found.end());
    cs.per_node.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < cs.cycles.size(); ++i)
        for (NodeId v : cs.cycles[i]) cs.per_node[static_cast<std::size_t>(v)].push_back(i);
    return cs;
}

/// Adjacency as a symmetric 0/1 BitMatrix with zero diagonal.
inline BitMatrix adjacency_matrix(const Graph& g) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    BitMatrix a(n, n);
    for (const auto& [u, v] : g.edges()) {
        a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        a.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
    }
    return a;
}

/// Node-by-node cycle count matrix C = H^T H over the integers, computed by
/// entrywise pair counting: C_ij is the number of basic cycles containing
/// both i and j; the diagonal is each node's cycle number.
inline std::vector<std::vector<long long>> cycle_number_matrix(const CycleSet& cs, int n) {
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(n),
                                          std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (const auto& cycle : cs.cycles)
        for (NodeId i : cycle)
            for (NodeId j : cycle) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
    return c;
}

/// Cycle ratio r_i = sum over nodes j sharing a basic cycle with i (self
/// included) of C_ij / C_jj; zero for nodes on no basic cycle.
inline std::vector<double> cycle_ratio(const CycleSet& cs, const Graph& g) {
    int n = g.node_count();
    auto c = cycle_number_matrix(cs, n);
    std::vector<double> r(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            long long shared = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (shared > 0)
                sum += static_cast<double>(shared) /
                       static_cast<double>(c[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
        }
        r[static_cast<std::size_t>(i)] = sum;
    }
    return r;
}

/// Contact matrix of the cycle-based spreading model: (i,j) is set iff
/// i != j and the nodes are adjacent or share a basic cycle.
inline BitMatrix spreading_matrix(const Graph& g, const CycleSet& cs) {
    BitMatrix m = adjacency_matrix(g);
    for (const auto& cycle : cs.cycles)
        for (NodeId i : cycle)
            for (NodeId j : cycle)
                if (i != j) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return m;
}

inline BitMatrix spreading_matrix(const Graph& g) { return spreading_matrix(g, smallest_cycle_set(g)); }

/// Nodes plus one hyperedge per basic cycle; incidence rows are hyperedge
/// indicators over the nodes.
struct HyperNetwork {
    std::vector<std::string> node_labels;
    std::vector<std::vector<NodeId>> hyperedges;  // sorted node indices, one per cycle
    BitMatrix incidence;                          // cycles x nodes
};

/// Integer Gram matrix H^T H computed through the incidence matrix product
/// (popcounts of column pairs).
inline std::vector<std::vector<long long>> incidence_gram(const BitMatrix& h) {
    std::size_t n = h.cols();
    std::vector<BitVector> cols;
    cols.reserve(n);
    for (std::size_t c = 0; c < n; ++c) cols.push_back(h.column(c));
    std::vector<std::vector<long long>> gram(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            long long v = static_cast<long long>((cols[i] & cols[j]).count());
            gram[i][j] = v;
            gram[j][i] = v;
        }
    return gram;
}

/// Converts an ordinary network to a hypernetwork by promoting each basic
/// cycle to a hyperedge. Asserts the identity H^T H = cycle_number_matrix.
inline HyperNetwork to_hypernetwork(const Graph& g) {
    CycleSet cs = smallest_cycle_set(g);
    HyperNetwork h;
    h.node_labels = g.labels();
    h.incidence = BitMatrix(cs.cycles.size(), static_cast<std::size_t>(g.node_count()));
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        std::vector<NodeId> members = cs.cycles[i];
        std::sort(members.begin(), members.end());
        for (NodeId v : members) h.incidence.set(i, static_cast<std::size_t>(v));
        h.hyperedges.push_back(std::move(members));
    }
    if (incidence_gram(h.incidence) != cycle_number_matrix(cs, g.node_count()))
        throw std::logic_error("to_hypernetwork: H^T H does not match the cycle number matrix");
    return h;
}

}  // namespace cyclenet
