#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cyclenet/cycles.hpp"
#include "cyclenet/gf2.hpp"
#include "cyclenet/graph.hpp"
#include "cyclenet/rng.hpp"

namespace cyclenet {

struct SirConfig {
    double beta = 0.0;       // transmission probability per infected-susceptible contact per step
    double recovery = 1.0;   // recovery probability per infected node per step
    int max_steps = 100000;  // safety cap
    std::uint64_t seed = 0;

    void validate() const {
        if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("SirConfig: beta not in [0,1]");
        if (recovery < 0.0 || recovery > 1.0)
            throw std::invalid_argument("SirConfig: recovery not in [0,1]");
        if (max_steps < 1) throw std::invalid_argument("SirConfig: max_steps must be >= 1");
    }
};

struct SirOutcome {
    int recovered_count = 0;
    int steps_taken = 0;
    bool step_cap_hit = false;
    std::vector<std::array<int, 3>> trace;  // (S, I, R) after each step, starting at step 0
};

namespace detail {

inline std::vector<std::vector<NodeId>> contact_lists(const BitMatrix& contact) {
    if (contact.rows() != contact.cols())
        throw std::invalid_argument("sir: contact matrix must be square");
    if (!contact.is_symmetric()) throw std::invalid_argument("sir: contact matrix must be symmetric");
    std::vector<std::vector<NodeId>> lists(contact.rows());
    for (std::size_t r = 0; r < contact.rows(); ++r) {
        if (contact.get(r, r)) throw std::invalid_argument("sir: contact matrix diagonal must be zero");
        for (std::size_t c : contact.row(r).ones()) lists[r].push_back(static_cast<NodeId>(c));
    }
    return lists;
}

// Synchronous SIR sweep over precomputed contact lists. Infection resolves
// before recovery within a step, so newly infected nodes survive into the
// next step even at recovery probability 1.
inline SirOutcome run_sir(const std::vector<std::vector<NodeId>>& contacts, NodeId source,
                          const SirConfig& cfg, bool record_trace) {
    int n = static_cast<int>(contacts.size());
    if (source < 0 || source >= n) throw std::invalid_argument("sir: unknown source node");
    cfg.validate();

    enum : char { S = 0, I = 1, R = 2 };
    std::vector<char> state(static_cast<std::size_t>(n), S);
    state[static_cast<std::size_t>(source)] = I;
    std::vector<NodeId> infected{source};

    auto eng = make_engine(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SirOutcome out;
    if (record_trace) out.trace.push_back({n - 1, 1, 0});

    int recovered = 0;
    int steps = 0;
    while (!infected.empty() && steps < cfg.max_steps) {
        ++steps;
        std::vector<NodeId> newly;
        for (NodeId i : infected)
            for (NodeId j : contacts[static_cast<std::size_t>(i)]) {
                if (state[static_cast<std::size_t>(j)] != S) continue;
                if (unit(eng) < cfg.beta) {
                    state[static_cast<std::size_t>(j)] = I;
                    newly.push_back(j);
                }
            }
        std::vector<NodeId> still;
        for (NodeId i : infected) {
            if (unit(eng) < cfg.recovery) {
                state[static_cast<std::size_t>(i)] = R;
                ++recovered;
            } else {
                still.push_back(i);
            }
        }
        still.insert(still.end(), newly.begin(), newly.end());
        infected = std::move(still);
        if (record_trace) {
            int icount = static_cast<int>(infected.size());
            out.trace.push_back({n - recovered - icount, icount, recovered});
        }
    }

    out.step_cap_hit = !infected.empty();
    out.recovered_count = recovered + static_cast<int>(infected.size());
    out.steps_taken = steps;
    return out;
}

}  // namespace detail

/// One SIR realization on an explicit contact matrix.
inline SirOutcome sir_run(const BitMatrix& contact, NodeId source, const SirConfig& cfg) {
    return detail::run_sir(detail::contact_lists(contact), source, cfg, /*record_trace=*/true);
}

enum class SpreadMode { conventional, cycle_based };

/// Mean recovered count over every source node and runs_per_source seeded
/// runs. Per-run seeds derive from cfg.seed and the (source, run) pair, so
/// the grand mean is reproducible and order-independent.
inline double spreading_experiment(const Graph& g, SpreadMode mode, const SirConfig& cfg,
                                   int runs_per_source,
                                   std::vector<double>* per_source_means = nullptr) {
    if (runs_per_source < 1)
        throw std::invalid_argument("spreading_experiment: runs_per_source must be >= 1");
    cfg.validate();
    int n = g.node_count();
    if (n == 0) throw std::invalid_argument("spreading_experiment: empty graph");

    BitMatrix contact =
        (mode == SpreadMode::cycle_based) ? spreading_matrix(g) : adjacency_matrix(g);
    auto lists = detail::contact_lists(contact);

    if (per_source_means) per_source_means->assign(static_cast<std::size_t>(n), 0.0);
    long long total = 0;
    for (NodeId s = 0; s < n; ++s) {
        long long source_total = 0;
        for (int r = 0; r < runs_per_source; ++r) {
            SirConfig run_cfg = cfg;
            run_cfg.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(s),
                                       static_cast<std::uint64_t>(r));
            source_total += detail::run_sir(lists, s, run_cfg, /*record_trace=*/false).recovered_count;
        }
        if (per_source_means)
            (*per_source_means)[static_cast<std::size_t>(s)] =
                static_cast<double>(source_total) / runs_per_source;
        total += source_total;
    }
    return static_cast<double>(total) / (static_cast<double>(n) * runs_per_source);
}

}  // namespace cyclenet
