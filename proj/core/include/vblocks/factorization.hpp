#pragma once

#include "vblocks/fusion.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace vblocks {

/// Dual graph of a stable pointed curve: vertices carry genus, edges are
/// nodes (self-loops allowed), legs carry module labels.  Disconnected
/// graphs are treated as disjoint unions (the rank is multiplicative).
struct StableGraph {
    struct Vertex {
        long genus = 0;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::pair<std::size_t, std::size_t>> legs; // (vertex, label index)

    std::size_t valence(std::size_t v) const;
    long total_genus() const; // sum of vertex genera + first Betti number
    bool is_stable() const;   // 2g_v - 2 + valence_v > 0 at every vertex

    /// {"vertices":[{"genus":g},..], "edges":[[u,v],..],
    ///  "legs":[{"vertex":u,"label":"lbl"},..]} with labels resolved in the
    /// given ring.
    static StableGraph from_json(const std::string& text, const FusionRing& ring);
};

/// Rank recursion of the factorization decomposition, memoized on the
/// canonical (genus, sorted insertions) key.  The memo table is the only
/// mutable state and its writes are idempotent, so concurrent queries are
/// safe; a fresh engine run single-threaded produces identical values.
class RankEngine {
public:
    explicit RankEngine(FusionRing ring);

    const FusionRing& ring() const { return ring_; }

    /// Rank of the coinvariant bundle for genus g with the given insertions.
    /// Unstable low-point queries (g=0 with <= 2 points beyond the explicit
    /// bases, g=1 with no points) are routed through vacuum insertions.
    BigInt rank(long genus, std::vector<std::size_t> insertions) const;

    /// Full-degeneration sum over edge labelings of a stable graph: each
    /// edge receives (W, W') on its two half-edges.
    BigInt rank_via_graph(const StableGraph& graph) const;

    struct InvarianceReport {
        BigInt canonical;
        std::vector<BigInt> trial_values;
        bool agree = true;
        std::string witness; // first disagreeing pair, empty when agree
    };

    /// Recomputes the rank along seeded random full-degeneration sequences
    /// (random separating / non-separating splits down to trivalent genus-0
    /// data) and reports agreement with the canonical recursion.
    InvarianceReport invariance_check(long genus, std::vector<std::size_t> insertions,
                                      long trials, std::uint64_t seed) const;

private:
    BigInt rank_canonical(long genus, std::vector<std::size_t> sorted) const;
    BigInt rank_base(long genus, const std::vector<std::size_t>& sorted) const;
    long n_fast(std::size_t a, std::size_t b, std::size_t c) const {
        return n_dense_[(a * nlabels_ + b) * nlabels_ + c];
    }

    FusionRing ring_;
    std::size_t nlabels_;
    std::vector<long> n_dense_;       // snapshot of the tensor at construction
    std::vector<std::size_t> dual_dense_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<long, std::vector<std::size_t>>, BigInt> memo_;
};

/// Trivalent stable graph with no legs realizing genus g >= 2: a cycle of
/// 2(g-1) genus-0 vertices with a perfect matching of chords.  For g = 1 the
/// trivalent model needs one vacuum leg (vertex with a self-loop).
StableGraph trivalent_graph(long genus, std::size_t vacuum_label);

} // namespace vblocks
