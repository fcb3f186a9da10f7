#pragma once

#include "vblocks/fusion.hpp"

#include <string>

namespace vblocks {

enum class CatalogFamily { VirasoroMinimal, AffineSl2, Lattice, Custom };

/// A rational-theory descriptor: the fusion ring plus family metadata and a
/// provenance note.  Built-in families (minimal models, affine sl2, rank-1
/// even lattices) validate on construction.
struct CatalogEntry {
    CatalogFamily family = CatalogFamily::Custom;
    std::string name;
    FusionRing ring;
    std::string provenance_notes;
    // family parameters (zero when not applicable)
    long p = 0, q = 0; // virasoro (p, q)
    long level = 0;    // affine sl2 level
    long k = 0;        // lattice sqrt(2k)Z
};

/// Virasoro minimal model Vir_{c(p,q)}: gcd(p,q) = 1, 1 < p < q and
/// p*q <= 40 in the shipped range.  Labels "m_n" with (m,n) ~ (p-m,q-n),
/// c = 1 - 6(p-q)^2/(pq), h_{m,n} = ((np-mq)^2 - (p-q)^2)/(4pq).  The fusion
/// tensor is tabulated data (standard BPZ truncated Clebsch-Gordan rule,
/// external to the factorization machinery) and is validated at load.
CatalogEntry minimal_model(long p, long q);

/// Affine sl2 at positive integer level: labels "0".."level", self-dual,
/// tabulated truncated Clebsch-Gordan fusion, weights l(l+2)/(4(level+2))
/// (Sugawara; external data, not used by rank computations).
CatalogEntry affine_sl2(long level);

/// Rank-1 even lattice sqrt(2k)Z: labels "0".."2k-1" (cosets of L'/L), group
/// law fusion, dual = negation; weights and central charge are computed from
/// the Fock realization rather than closed formulas.
CatalogEntry lattice_catalog(long k);

/// Loads a fusion-ring document from disk.  Unless force is set, documents
/// failing validate_fusion are rejected with InvalidCatalogError carrying
/// the report.
CatalogEntry load_catalog_file(const std::string& path, bool force = false);

/// Resolves a catalog selector: "lattice:K", "virasoro:P,Q", "sl2:L" (alias
/// "affine_sl2:L"), "file:PATH", or a bare name looked up as NAME.json in
/// the directory named by the VBLOCKS_CATALOG_DIR environment variable.
CatalogEntry resolve_catalog(const std::string& selector, bool force = false);

/// Label lookup helper for user-facing input: exact label, or the alias "V"
/// for the vacuum, or "X" for the unique non-vacuum label of a two-label
/// ring.
std::optional<std::size_t> resolve_label(const FusionRing& ring, const std::string& token);

} // namespace vblocks
