#pragma once

#include "vblocks/qseries.hpp"
#include "vblocks/voa.hpp"

#include <map>
#include <string>
#include <vector>

namespace vblocks {

/// Basis vector of a rank-1 Fock space: h_{-n_1}...h_{-n_r} applied to the
/// ground vector of charge lambda = charge * alpha, with the partition held
/// weakly decreasing.
struct FockState {
    Rational charge;
    std::vector<long> parts;

    friend bool operator==(const FockState& a, const FockState& b) {
        return a.charge == b.charge && a.parts == b.parts;
    }
    friend bool operator<(const FockState& a, const FockState& b) {
        if (a.charge != b.charge) return a.charge < b.charge;
        return a.parts < b.parts;
    }

    long parts_sum() const;
    std::string label() const;
};

using FockTerms = std::map<FockState, Rational>;

/// Exact rank-1 Heisenberg / lattice mode arithmetic.  gram = (alpha, alpha)
/// of the charge generator: 1 for the normalized free boson, 2k for the even
/// lattice sqrt(2k)Z.  All operators are computed from the standard
/// exponential form of the vertex operators; nothing here is truncated, the
/// window is imposed by the adapters.
class FockModel {
public:
    static FockModel heisenberg() { return FockModel(Rational(1)); }
    static FockModel lattice(long k);

    const Rational& gram() const { return gram_; }
    Rational pairing(const Rational& a, const Rational& b) const { return gram_ * a * b; }

    /// L_0 eigenvalue (lambda, lambda)/2 + sum of parts.
    Rational l0(const FockState& s) const;

    /// h_n on a state: n < 0 creates a part, n > 0 annihilates with factor
    /// n * (h,h) * multiplicity, n = 0 scales by (lambda, h).
    FockTerms heisenberg_mode(long n, const FockState& u) const;

    /// A_{(i)} u for a basis vector A of the vertex algebra (integer charge).
    FockTerms vertex_mode(const FockState& a, long i, const FockState& u) const;

private:
    explicit FockModel(Rational gram) : gram_(std::move(gram)) {}
    Rational gram_;
};

/// A concrete truncated vertex algebra built on a FockModel, with raw access
/// to the underlying states (the coinvariant oracle works untruncated).
class FockVOA {
public:
    static FockVOA heisenberg(long truncation);
    static FockVOA lattice(long k, long truncation);

    const TruncatedVOA& voa() const { return *voa_; }
    VOAPtr voa_ptr() const { return voa_; }
    const FockModel& model() const { return model_; }
    long lattice_k() const { return lattice_k_; } // 0 for the plain boson

    const FockState& state_of(std::size_t id) const;
    std::optional<std::size_t> id_of(const FockState& s) const;
    LinComb to_lincomb(const FockTerms& terms) const; // throws if outside window

private:
    FockVOA(FockModel model, long lattice_k);

    FockModel model_;
    long lattice_k_;
    VOAPtr voa_;
    std::shared_ptr<const std::vector<FockState>> states_;
    std::shared_ptr<const std::map<FockState, std::size_t>> index_;

    friend class FockModule;
};

/// A concrete truncated module over a FockVOA: an irreducible lattice module
/// V_{L+lambda} (coset 0 <= j < 2k) or a Heisenberg Fock module pi_lambda.
class FockModule {
public:
    static FockModule lattice(const FockVOA& on, long coset, long truncation);
    static FockModule heisenberg(const FockVOA& on, const Rational& lambda, long truncation);

    const TruncatedModule& module() const { return *module_; }
    ModulePtr module_ptr() const { return module_; }
    const FockModel& model() const { return model_; }
    const Rational& conformal_weight() const { return module_->conformal_weight(); }

    const FockState& state_of(std::size_t id) const;
    std::optional<std::size_t> id_of(const FockState& s) const;
    const FockState& voa_state_of(std::size_t voa_id) const;

    /// Untruncated mode action on a module basis vector, for callers that
    /// manage their own window.
    FockTerms raw_mode(std::size_t voa_id, long i, const FockState& u) const;
    /// Linear extension over a combination of vertex-algebra basis vectors.
    FockTerms raw_mode(const LinComb& b, long i, const FockState& u) const;

private:
    FockModule(const FockVOA& on, Rational base_charge, bool lattice_sector,
               Rational conformal_weight, long truncation);

    FockModel model_;
    std::shared_ptr<const std::vector<FockState>> voa_states_;
    ModulePtr module_;
    std::shared_ptr<const std::vector<FockState>> states_;
    std::shared_ptr<const std::map<FockState, std::size_t>> index_;
};

/// Graded dimension of the lattice module with the given coset label:
/// coefficient of q^d counts basis vectors of level d.
QSeries lattice_graded_dimension(long k, long coset, long cutoff);

/// Conformal weight of the lattice module (minimal L_0 eigenvalue of the
/// coset), computed from the module data rather than a closed formula.
Rational lattice_conformal_weight(long k, long coset);

} // namespace vblocks
