#pragma once

#include "vblocks/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vblocks {

/// Finite label set with vacuum, duality involution, conformal weights and a
/// 3-point multiplicity tensor.  The tensor is stored on ordered triples so
/// that symmetry is a checkable property rather than a storage artifact
/// (deliberately corrupted rings are representable).
class FusionRing {
public:
    FusionRing(std::vector<std::string> labels, std::size_t vacuum, std::vector<std::size_t> dual,
               std::vector<Rational> weights, Rational central_charge);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    std::size_t vacuum() const { return vacuum_; }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    const Rational& weight(std::size_t i) const { return weights_.at(i); }
    const Rational& central_charge() const { return central_charge_; }

    /// Multiplicity at the ordered triple (0 when unset).
    long n(std::size_t a, std::size_t b, std::size_t c) const;
    /// Sets the ordered triple only.
    void set_n(std::size_t a, std::size_t b, std::size_t c, long m);
    /// Sets all six permutations.
    void set_n_symmetric(std::size_t a, std::size_t b, std::size_t c, long m);

    const std::map<std::array<std::size_t, 3>, long>& tensor() const { return n_; }

private:
    std::vector<std::string> labels_;
    std::size_t vacuum_;
    std::vector<std::size_t> dual_;
    std::vector<Rational> weights_;
    Rational central_charge_;
    std::map<std::array<std::size_t, 3>, long> n_;
};

struct ValidationIssue {
    std::string constraint;              // "dual-involution", "unit-law", "symmetry", ...
    std::vector<std::string> witness;    // offending label tuple
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

/// Checks every FusionRing invariant: duality involution with self-dual
/// vacuum, the two-point unit law N(V,W,Y) = [Y == W'], full S_3 symmetry,
/// non-negative multiplicities, and 4-point associativity
///   sum_T N(a,b,T) N(T',c,d)  ==  sum_T N(a,c,T) N(T',b,d).
/// Failures are report entries with witnesses, never exceptions.
ValidationReport validate_fusion(const FusionRing& ring);

/// Parses the fusion-ring document format:
///   { "labels": [...], "vacuum": "..", "dual": [["a","b"],..],
///     "central_charge": "p/q", "weights": {"lbl": "p/q"},
///     "fusion": [["a","b","c",m],..] }
/// Unlisted triples default to 0; listed triples are applied symmetrically,
/// and conflicting duplicate listings surface via validate_fusion.
FusionRing fusion_from_json(const std::string& text);

/// Serializes with one canonical (sorted) triple per nonzero multiplicity.
std::string fusion_to_json(const FusionRing& ring, const std::string& provenance = "");

} // namespace vblocks
