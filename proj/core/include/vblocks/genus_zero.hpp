#pragma once

#include "vblocks/fock.hpp"
#include "vblocks/p1_section.hpp"

#include <string>
#include <vector>

namespace vblocks {

/// Element of Zhu's Lie algebra for P^1 minus marked points: the residues of
/// one global section B (x) mu expanded at every marked point.  Provenance
/// (B, mu) is kept; per-point mode data is generated on demand for a window.
struct ZhuLieElement {
    LinComb vector;    // B, a homogeneous quasi-primary vector
    P1Section section; // mu, a section of omega^{1 - deg B}
    std::vector<P1Point> points;
    std::vector<LaurentJet> jets; // expansion of mu at each point

    ZhuLieElement() : section(0) {}
};

/// Expands mu at every marked point.  B must be homogeneous and
/// quasi-primary (L_1 B = 0: only those currents transform as honest
/// k-differentials across charts, so only those pairings produce genuine
/// relations); mu must be a section of omega^{1 - deg B} with poles only at
/// the marked points (stray-pole error otherwise).  Jets carry exponents
/// < jet_depth.
ZhuLieElement zhu_element(const FockVOA& on, const LinComb& b, const P1Section& mu,
                          const std::vector<P1Point>& points, long jet_depth);

struct CoinvariantEstimate {
    long cutoff = 0;
    std::size_t ambient_dim = 0;
    std::size_t relation_rank = 0;
    long estimate = 0;
    bool stabilized = false;    // estimate equal at cutoff and cutoff-1
    std::vector<long> history;  // estimate at each d = 0..cutoff
};

/// Truncated coinvariant-dimension estimator on P^1: quotients
/// F_D M^1 (x) ... (x) M^n by the within-window images of phi_g(B (x) mu)
/// over B in a basis of V_{<=D} and mu in a pole-bounded section basis.
/// Relations with any nonzero component outside F_D are discarded (the
/// estimate stays one-sided); pole_bound < 0 picks a default derived from
/// the cutoff.
CoinvariantEstimate truncated_coinvariant_dim(const FockVOA& on,
                                              const std::vector<const FockModule*>& modules,
                                              const std::vector<P1Point>& points, long cutoff,
                                              long pole_bound = -1);

/// Spanning set of the sections of omega^{kappa} on P^1 minus the marked
/// points with pole order <= bound at each: partial-fraction terms plus the
/// globally regular polynomial part, all exactly regular at infinity.
std::vector<P1Section> section_basis_p1(long kappa, const std::vector<P1Point>& points,
                                        long bound);

struct OracleComparisonRow {
    std::vector<long> labels;
    long fusion = 0;
    long estimate = 0;
    bool stabilized = false;
    bool match = false;
};

struct OracleComparison {
    std::vector<OracleComparisonRow> rows;
    bool all_match = true;
};

/// Compares the stabilized estimator against the lattice fusion multiplicity
/// for every label triple of the sqrt(2k)Z catalog.
OracleComparison oracle_vs_fusion(long k, long max_cutoff, long pole_bound = -1);

} // namespace vblocks
