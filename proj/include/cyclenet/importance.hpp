#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclenet/cycles.hpp"
#include "cyclenet/graph.hpp"
#include "cyclenet/rng.hpp"

namespace cyclenet {

/// Largest h such that v has at least h neighbors of degree at least h.
inline int h_index(const Graph& g, NodeId v) {
    std::vector<int> degs;
    for (NodeId u : g.neighbors(v)) degs.push_back(g.degree(u));
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    int h = 0;
    while (h < static_cast<int>(degs.size()) && degs[static_cast<std::size_t>(h)] >= h + 1) ++h;
    return h;
}

/// k-core decomposition by minimum-degree peeling (bin-sort algorithm of
/// Batagelj and Zaversnik); core(v) is the largest k with v in the k-core.
inline std::vector<int> coreness(const Graph& g) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    if (n == 0) return {};
    std::vector<int> deg(n);
    int max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<NodeId>(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Bin sort nodes by degree.
    std::vector<int> bin(static_cast<std::size_t>(max_deg) + 1, 0);
    for (std::size_t v = 0; v < n; ++v) ++bin[static_cast<std::size_t>(deg[v])];
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        int count = bin[static_cast<std::size_t>(d)];
        bin[static_cast<std::size_t>(d)] = start;
        start += count;
    }
    std::vector<int> pos(n), vert(n);
    for (std::size_t v = 0; v < n; ++v) {
        pos[v] = bin[static_cast<std::size_t>(deg[v])]++;
        vert[static_cast<std::size_t>(pos[v])] = static_cast<int>(v);
    }
    for (int d = max_deg; d >= 1; --d) bin[static_cast<std::size_t>(d)] = bin[static_cast<std::size_t>(d - 1)];
    bin[0] = 0;

    // Peel in degree order; deg[v] at removal time is its coreness.
    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = vert[i];
        for (NodeId u : g.neighbors(v)) {
            if (deg[static_cast<std::size_t>(u)] <= deg[static_cast<std::size_t>(v)]) continue;
            int du = deg[static_cast<std::size_t>(u)];
            int pu = pos[static_cast<std::size_t>(u)];
            int pw = bin[static_cast<std::size_t>(du)];
            NodeId w = vert[static_cast<std::size_t>(pw)];
            if (u != w) {
                pos[static_cast<std::size_t>(u)] = pw;
                pos[static_cast<std::size_t>(w)] = pu;
                vert[static_cast<std::size_t>(pu)] = w;
                vert[static_cast<std::size_t>(pw)] = u;
            }
            ++bin[static_cast<std::size_t>(du)];
            --deg[static_cast<std::size_t>(u)];
        }
    }
    return deg;
}

enum class ImportanceIndex { degree, h_index, coreness, cycle_number, cycle_ratio };

inline std::optional<ImportanceIndex> parse_index(const std::string& name) {
    if (name == "degree") return ImportanceIndex::degree;
    if (name == "h_index") return ImportanceIndex::h_index;
    if (name == "coreness") return ImportanceIndex::coreness;
    if (name == "cycle_number") return ImportanceIndex::cycle_number;
    if (name == "cycle_ratio") return ImportanceIndex::cycle_ratio;
    return std::nullopt;
}

inline std::string index_name(ImportanceIndex idx) {
    switch (idx) {
        case ImportanceIndex::degree: return "degree";
        case ImportanceIndex::h_index: return "h_index";
        case ImportanceIndex::coreness: return "coreness";
        case ImportanceIndex::cycle_number: return "cycle_number";
        case ImportanceIndex::cycle_ratio: return "cycle_ratio";
    }
    return "?";
}

inline std::vector<double> index_scores(const Graph& g, ImportanceIndex idx,
                                        const CycleSet* cs = nullptr) {
    int n = g.node_count();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    switch (idx) {
        case ImportanceIndex::degree:
            for (NodeId v = 0; v < n; ++v) scores[static_cast<std::size_t>(v)] = g.degree(v);
            break;
        case ImportanceIndex::h_index:
            for (NodeId v = 0; v < n; ++v) scores[static_cast<std::size_t>(v)] = h_index(g, v);
            break;
        case ImportanceIndex::coreness: {
            auto core = coreness(g);
            for (NodeId v = 0; v < n; ++v) scores[static_cast<std::size_t>(v)] = core[static_cast<std::size_t>(v)];
            break;
        }
        case ImportanceIndex::cycle_number: {
            CycleSet local;
            const CycleSet& set = cs ? *cs : (local = smallest_cycle_set(g));
            auto c = cycle_number_matrix(set, n);
            for (NodeId v = 0; v < n; ++v)
                scores[static_cast<std::size_t>(v)] =
                    static_cast<double>(c[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
            break;
        }
        case ImportanceIndex::cycle_ratio: {
            CycleSet local;
            const CycleSet& set = cs ? *cs : (local = smallest_cycle_set(g));
            scores = cycle_ratio(set, g);
            break;
        }
    }
    return scores;
}

/// Nodes ordered by descending score; equal-score blocks are randomly
/// permuted by the seed.
struct Ranking {
    std::string index_name;
    std::vector<double> scores;  // by node index
    std::vector<NodeId> order;   // descending importance
    std::uint64_t seed = 0;
};

inline Ranking rank_nodes(const Graph& g, ImportanceIndex idx, std::uint64_t seed,
                          const CycleSet* cs = nullptr) {
    Ranking r;
    r.index_name = index_name(idx);
    r.seed = seed;
    r.scores = index_scores(g, idx, cs);
    r.order.resize(r.scores.size());
    for (std::size_t i = 0; i < r.order.size(); ++i) r.order[i] = static_cast<NodeId>(i);
    auto eng = make_engine(derive_seed(seed, 0x72616e6bULL));
    std::shuffle(r.order.begin(), r.order.end(), eng);
    std::stable_sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) {
        return r.scores[static_cast<std::size_t>(a)] > r.scores[static_cast<std::size_t>(b)];
    });
    return r;
}

/// Kendall tau-b (tie-corrected) between two score lists over the same
/// node set.
inline double kendall_tau(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("kendall_tau: mismatched node sets");
    std::size_t n = a.size();
    if (n < 2) throw std::invalid_argument("kendall_tau: need at least two nodes");

    long long concordant = 0, discordant = 0, tied_a = 0, tied_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double da = a[i] - a[j];
            double db = b[i] - b[j];
            if (da == 0.0) ++tied_a;
            if (db == 0.0) ++tied_b;
            if (da == 0.0 || db == 0.0) continue;
            if ((da > 0.0) == (db > 0.0))
                ++concordant;
            else
                ++discordant;
        }
    }
    double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    double denom =
        std::sqrt((n0 - static_cast<double>(tied_a)) * (n0 - static_cast<double>(tied_b)));
    if (denom == 0.0) throw std::invalid_argument("kendall_tau: a score list is constant");
    return (static_cast<double>(concordant) - static_cast<double>(discordant)) / denom;
}

inline double kendall_tau(const Ranking& a, const Ranking& b) {
    return kendall_tau(a.scores, b.scores);
}

/// Static-removal robustness curve: for each fraction f, drop the top
/// ceil(f*n) ranked nodes and report the largest surviving component over
/// the ORIGINAL node count.
inline std::vector<std::pair<double, double>> attack_curve(const Graph& g, const Ranking& r,
                                                           const std::vector<double>& fractions) {
    int n = g.node_count();
    if (static_cast<int>(r.order.size()) != n)
        throw std::invalid_argument("attack_curve: ranking does not cover the graph");
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (fractions[i] < 0.0 || fractions[i] > 1.0)
            throw std::invalid_argument("attack_curve: fraction outside [0,1]");
        if (i > 0 && fractions[i] < fractions[i - 1])
            throw std::invalid_argument("attack_curve: fractions must be nondecreasing");
    }

    std::vector<std::pair<double, double>> curve;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (double f : fractions) {
        int k = static_cast<int>(std::ceil(f * n - 1e-9));
        k = std::clamp(k, 0, n);
        std::fill(removed.begin(), removed.end(), false);
        for (int i = 0; i < k; ++i) removed[static_cast<std::size_t>(r.order[static_cast<std::size_t>(i)])] = true;

        int largest = 0;
        std::vector<bool> seen = removed;
        for (NodeId root = 0; root < n; ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            int size = 0;
            std::deque<NodeId> queue{root};
            seen[static_cast<std::size_t>(root)] = true;
            while (!queue.empty()) {
                NodeId v = queue.front();
                queue.pop_front();
                ++size;
                for (NodeId u : g.neighbors(v))
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        queue.push_back(u);
                    }
            }
            largest = std::max(largest, size);
        }
        curve.push_back({f, n == 0 ? 0.0 : static_cast<double>(largest) / n});
    }
    return curve;
}

}  // namespace cyclenet
