#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cyclenet/complex.hpp"
#include "cyclenet/gf2.hpp"
#include "cyclenet/graph.hpp"

namespace cyclenet {

/// A GF(2) vector over the k-cliques of a complex: a k-chain.
struct ChainVector {
    const CliqueComplex* complex = nullptr;
    int dim = 0;
    BitVector support;
};

inline ChainVector chain_from_simplices(const CliqueComplex& c, int k,
                                        const std::vector<Simplex>& simplices) {
    ChainVector v{&c, k, BitVector(static_cast<std::size_t>(c.count(k)))};
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        auto idx = c.index_of(k, s);
        if (!idx) throw std::invalid_argument("chain_from_simplices: simplex not in complex");
        v.support.flip(*idx);
    }
    return v;
}

/// Edge-indicator 1-chain of a simple node cycle.
inline ChainVector chain_from_node_cycle(const CliqueComplex& c, const std::vector<NodeId>& cycle) {
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        NodeId u = cycle[i];
        NodeId v = cycle[(i + 1) % cycle.size()];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return chain_from_simplices(c, 1, edges);
}

struct HomologyReport {
    std::vector<long long> betti;     // beta_0 .. beta_maxdim
    std::vector<long long> ranks;     // r_1 .. r_maxdim
    std::vector<long long> f_vector;  // m_0 .. m_maxdim
    long long euler_characteristic = 0;
    bool euler_poincare_ok = false;
};

/// Betti numbers via beta_k = m_k - r_k - r_{k+1} with r_0 = 0 and
/// r_{maxdim+1} = 0. Strict mode refuses truncated complexes, where the
/// trailing rank would be unknowable.
inline HomologyReport betti_numbers(const CliqueComplex& c, bool strict = true) {
    if (strict && !c.complete_enumeration())
        throw CapViolation("betti_numbers: cliques exist above the dimension cap");

    int d = c.max_dim();
    HomologyReport rep;
    rep.f_vector = c.f_vector();
    rep.euler_characteristic = c.euler_characteristic(strict);

    std::vector<long long> r(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k)
        r[static_cast<std::size_t>(k)] = static_cast<long long>(rank(c.boundary_matrix(k)));
    for (int k = 1; k <= d; ++k) rep.ranks.push_back(r[static_cast<std::size_t>(k)]);

    for (int k = 0; k <= d; ++k)
        rep.betti.push_back(rep.f_vector[static_cast<std::size_t>(k)] -
                            r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k) + 1]);

    if (rep.betti[0] != component_count(c.graph()))
        throw std::logic_error("betti_numbers: beta_0 disagrees with component count");

    long long chi_m = 0, chi_b = 0;
    int sign = 1;
    for (int k = 0; k <= d; ++k, sign = -sign) {
        chi_m += sign * rep.f_vector[static_cast<std::size_t>(k)];
        chi_b += sign * rep.betti[static_cast<std::size_t>(k)];
    }
    rep.euler_poincare_ok = (chi_m == chi_b);
    return rep;
}

/// |edges| - |nodes| + number of components: the rank of the cycle space.
inline long long cycle_space_dimension(const Graph& g) {
    return static_cast<long long>(g.edge_count()) - g.node_count() + component_count(g);
}

/// One fundamental cycle per chord of the BFS spanning forest: the chord
/// plus the unique tree path between its endpoints. Cycles come out in
/// canonical chord order and canonical rotation/reflection form; their edge
/// vectors are linearly independent over GF(2).
inline std::vector<std::vector<NodeId>> fundamental_cycle_basis(const Graph& g) {
    SpanningForest f = spanning_forest(g);
    std::vector<std::vector<NodeId>> cycles;
    cycles.reserve(f.chords.size());
    for (const auto& [u, v] : f.chords) {
        // Climb to the common ancestor, collecting both legs.
        std::vector<NodeId> left{u}, right{v};
        NodeId a = u, b = v;
        while (f.depth[static_cast<std::size_t>(a)] > f.depth[static_cast<std::size_t>(b)]) {
            a = f.parent[static_cast<std::size_t>(a)];
            left.push_back(a);
        }
        while (f.depth[static_cast<std::size_t>(b)] > f.depth[static_cast<std::size_t>(a)]) {
            b = f.parent[static_cast<std::size_t>(b)];
            right.push_back(b);
        }
        while (a != b) {
            a = f.parent[static_cast<std::size_t>(a)];
            b = f.parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
        }
        // left ends at the ancestor; append right's leg reversed, dropping
        // its copy of the ancestor.
        std::vector<NodeId> cycle = std::move(left);
        for (std::size_t i = right.size() - 1; i-- > 0;) cycle.push_back(right[i]);
        cycles.push_back(canonical_cycle_form(cycle));
    }
    return cycles;
}

namespace detail {

inline std::vector<BitVector> boundary_image_basis(const CliqueComplex& c, int k) {
    // Basis of Y_k = im(B_{k+1}) as vectors over the k-cliques. Above the
    // cap the image is empty provided enumeration is complete.
    if (k + 1 <= c.max_dim()) return column_space_basis(c.boundary_matrix(k + 1));
    if (!c.complete_enumeration())
        throw CapViolation("homology: rank above the dimension cap is unknowable");
    return {};
}

}  // namespace detail

/// True iff a + b bounds, i.e. the two k-cycles are homologous.
inline bool is_homologous(const ChainVector& a, const ChainVector& b) {
    if (a.complex == nullptr || a.complex != b.complex)
        throw std::invalid_argument("is_homologous: chains from different complexes");
    if (a.dim != b.dim) throw std::invalid_argument("is_homologous: dimension mismatch");
    const CliqueComplex& c = *a.complex;
    int k = a.dim;
    if (k < 1 || k > c.max_dim()) throw std::out_of_range("is_homologous: bad dimension");

    BitMatrix bk = c.boundary_matrix(k);
    if (!multiply(bk, a.support).is_zero() || !multiply(bk, b.support).is_zero())
        throw std::invalid_argument("is_homologous: operand is not a cycle");

    return reduce_mod_subspace(a.support ^ b.support, detail::boundary_image_basis(c, k)).is_zero();
}

/// Exactly beta_k canonical cavity representatives: null-space basis vectors
/// of B_k reduced mod im(B_{k+1}) in canonical order, kept greedily while
/// they grow the reduced span, sorted by lexicographic support.
inline std::vector<ChainVector> cavity_representatives(const CliqueComplex& c, int k) {
    if (k < 1 || k > c.max_dim())
        throw std::out_of_range("cavity_representatives: k must be in [1, max_dim]");

    std::vector<BitVector> image = detail::boundary_image_basis(c, k);
    Gf2Span image_span(static_cast<std::size_t>(c.count(k)));
    for (const auto& b : image) image_span.insert(b);

    Gf2Span kept_span(static_cast<std::size_t>(c.count(k)));
    std::vector<BitVector> reps;
    for (const BitVector& z : null_space_basis(c.boundary_matrix(k))) {
        BitVector reduced = image_span.reduce(z);
        if (reduced.is_zero()) continue;
        if (kept_span.insert(reduced)) reps.push_back(std::move(reduced));
    }
    std::sort(reps.begin(), reps.end(),
              [](const BitVector& x, const BitVector& y) { return x.lex_less(y); });

    std::vector<ChainVector> out;
    out.reserve(reps.size());
    for (auto& r : reps) out.push_back(ChainVector{&c, k, std::move(r)});
    return out;
}

}  // namespace cyclenet
