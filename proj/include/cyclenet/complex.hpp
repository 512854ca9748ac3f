#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclenet/gf2.hpp"
#include "cyclenet/graph.hpp"

namespace cyclenet {

/// Raised when a truncated enumeration would falsify an alternating sum.
struct CapViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A k-clique as a strictly increasing tuple of node indices; dimension is
/// vertex count minus one.
using Simplex = std::vector<NodeId>;

/// All cliques of a graph up to a dimension cap, with canonical indices.
///
/// cliques(k) is lexicographically sorted; cliques(0) is all nodes and
/// cliques(1) all edges. complete_enumeration() reports whether any clique
/// of dimension max_dim+1 exists; when it does, alternating sums over the
/// stored counts are meaningless and strict-mode accessors refuse.
class CliqueComplex {
public:
    CliqueComplex(const Graph& g, int max_dim) : graph_(&g), max_dim_(max_dim) {
        if (max_dim < 1) throw std::invalid_argument("build_complex: max_dim must be >= 1");
        enumerate();
    }

    const Graph& graph() const { return *graph_; }
    int max_dim() const { return max_dim_; }

    const std::vector<Simplex>& cliques(int k) const {
        if (k < 0 || k > max_dim_) throw std::out_of_range("cliques: dimension out of range");
        return cliques_[static_cast<std::size_t>(k)];
    }

    /// m_k; explicit zero beyond the clique number.
    long long count(int k) const {
        if (k < 0 || k > max_dim_) return 0;
        return static_cast<long long>(cliques_[static_cast<std::size_t>(k)].size());
    }

    std::optional<std::size_t> index_of(int k, const Simplex& s) const {
        const auto& level = cliques(k);
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - level.begin());
    }

    /// False iff some (max_dim+1)-clique exists, i.e. the cap truncated the
    /// complex.
    bool complete_enumeration() const { return !has_cliques_above_cap_; }

    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        f.reserve(static_cast<std::size_t>(max_dim_) + 1);
        for (int k = 0; k <= max_dim_; ++k) f.push_back(count(k));
        return f;
    }

    /// Alternating sum of clique counts. In strict mode refuses when the cap
    /// truncated the enumeration, since the sum would be wrong.
    long long euler_characteristic(bool strict = false) const {
        if (strict && has_cliques_above_cap_)
            throw CapViolation("euler_characteristic: cliques exist above the dimension cap " +
                               std::to_string(max_dim_));
        long long chi = 0;
        int sign = 1;
        for (int k = 0; k <= max_dim_; ++k, sign = -sign) chi += sign * count(k);
        return chi;
    }

    /// Boundary matrix B_k of shape m_{k-1} x m_k: entry (i,j) is 1 iff the
    /// i-th (k-1)-clique is a face of the j-th k-clique.
    BitMatrix boundary_matrix(int k) const {
        if (k < 1 || k > max_dim_)
            throw std::out_of_range("boundary_matrix: k must be in [1, max_dim]");
        const auto& lower = cliques(k - 1);
        const auto& upper = cliques(k);
        BitMatrix b(lower.size(), upper.size());
        Simplex face;
        for (std::size_t j = 0; j < upper.size(); ++j) {
            const Simplex& s = upper[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != drop) face.push_back(s[t]);
                auto idx = index_of(k - 1, face);
                if (!idx) throw std::logic_error("boundary_matrix: face missing from complex");
                b.set(*idx, j);
            }
        }
        return b;
    }

private:
    // Each k-clique arises exactly once by extending its (k-1)-prefix with a
    // larger common neighbor, so every level comes out lexicographically
    // sorted.
    void enumerate() {
        const Graph& g = *graph_;
        cliques_.assign(static_cast<std::size_t>(max_dim_) + 1, {});
        for (NodeId v = 0; v < g.node_count(); ++v)
            cliques_[0].push_back({v});
        for (const auto& [u, v] : g.edges()) cliques_[1].push_back({u, v});
        std::sort(cliques_[1].begin(), cliques_[1].end());

        for (int k = 2; k <= max_dim_; ++k) {
            auto& out = cliques_[static_cast<std::size_t>(k)];
            for (const Simplex& c : cliques_[static_cast<std::size_t>(k - 1)]) {
                for (NodeId w : extensions(c)) {
                    Simplex bigger = c;
                    bigger.push_back(w);
                    out.push_back(std::move(bigger));
                }
            }
        }

        has_cliques_above_cap_ = false;
        for (const Simplex& c : cliques_[static_cast<std::size_t>(max_dim_)]) {
            if (!extensions(c).empty()) {
                has_cliques_above_cap_ = true;
                break;
            }
        }
    }

    // Nodes above c.back() adjacent to every vertex of c.
    std::vector<NodeId> extensions(const Simplex& c) const {
        const Graph& g = *graph_;
        std::vector<NodeId> cand;
        for (NodeId w : g.neighbors(c.back())) {
            if (w <= c.back()) continue;
            bool ok = true;
            for (std::size_t t = 0; t + 1 < c.size(); ++t) {
                if (!g.has_edge(c[t], w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) cand.push_back(w);
        }
        return cand;
    }

    const Graph* graph_;
    int max_dim_;
    std::vector<std::vector<Simplex>> cliques_;
    bool has_cliques_above_cap_ = false;
};

inline CliqueComplex build_complex(const Graph& g, int max_dim = 3) {
    return CliqueComplex(g, max_dim);
}

}  // namespace cyclenet
