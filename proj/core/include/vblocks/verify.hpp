#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vblocks::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Checks = std::vector<Check>;

bool all_pass(const Checks& checks);

/// gamma and theta involutions on the Heisenberg and lattice k=1 windows.
Checks involution_suite(long gamma_window, long theta_degree, long theta_index_bound);

/// Ancillary-bracket identities, centrality of the vacuum mode, and the
/// bracket/module-commutator consistency on lattice k=1.
Checks bracket_suite(long degree_window, long index_bound);

/// Exhaustive sewing vanishing identity on the lattice k=1 modules.
Checks sewing_suite(long max_degree, long ij_bound, long q_cutoff);

/// Stable k-differential gluing and the nodal chiral-membership predicate.
Checks gluing_suite(long trials, std::uint64_t seed);

/// Jet prescription on P^1: seeded instances, round-trip congruences and the
/// global residue theorem for the k = 1 outputs.
Checks riemann_roch_suite(long instances, std::uint64_t seed);

/// Coinvariant estimator vs lattice fusion multiplicities (all triples),
/// charge-violation vanishing, and a corrupted-tensor negative control.
Checks oracle_suite(long k, long cutoff, long pole_bound);

/// Group-like closed form (2k)^g against recursion and explicit trivalent
/// graphs, genus-1 label counts, vacuum propagation, duality symmetry.
Checks ranks_suite(long max_genus, long max_k);

/// Degeneration invariance over the shipped catalogs plus the
/// non-associative negative control.
Checks invariance_suite(long trials, std::uint64_t seed);

/// q d/dq + c_W spectral bookkeeping and its Leibniz property.
Checks spectral_suite(long max_power);

/// Zhu product / O(V) membership identities on the concrete instances.
Checks zhu_suite(long cutoff);

/// Catalog formula reproduction (central charges, weights, label counts)
/// and validator coverage.
Checks catalog_suite();

std::vector<std::string> suite_names();

/// Dispatches by suite name ("all" runs everything) with defaults scaled
/// from the cutoff.
Checks run_suite(const std::string& name, long cutoff, std::uint64_t seed);

} // namespace vblocks::verify
