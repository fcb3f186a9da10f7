#pragma once

#include "vblocks/graded_space.hpp"
#include "vblocks/rational.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace vblocks {

/// Mode action A_{(i)}B on basis vectors.  Returns the exact result as a
/// linear combination, or nullopt when a nonzero component leaves the
/// truncation window (explicit overflow; silent truncation is forbidden).
using ModeFn =
    std::function<std::optional<LinComb>(std::size_t a, long i, std::size_t b)>;

/// Truncated conformal vertex algebra: a graded window V_{<=D} with vacuum,
/// conformal vector, exact mode action and central charge.  Immutable after
/// construction; the internal mode memo is idempotent, so concurrent use is
/// safe.
class TruncatedVOA {
public:
    TruncatedVOA(GradedSpace space, long truncation, std::size_t vacuum, LinComb omega,
                 Rational central_charge, ModeFn mode);

    const GradedSpace& space() const { return space_; }
    long truncation() const { return truncation_; }
    std::size_t vacuum() const { return vacuum_; }
    const LinComb& omega() const { return omega_; }
    const Rational& central_charge() const { return central_charge_; }

    /// Degree of a basis vector as a long (VOA degrees are integers >= 0).
    long degree(std::size_t id) const { return space_.degree_of(id).to_long(); }

    /// A_{(i)}B for basis ids, memoized.
    std::optional<LinComb> mode(std::size_t a, long i, std::size_t b) const;

    /// Bilinear extension of the mode action.
    std::optional<LinComb> apply_mode(const LinComb& a, long i, const LinComb& b) const;
    /// Same, but overflow throws TruncationOverflowError.
    LinComb apply_mode_checked(const LinComb& a, long i, const LinComb& b,
                               const char* context) const;

    /// L_p v = omega_{(p+1)} v.
    std::optional<LinComb> virasoro(long p, const LinComb& v) const;
    LinComb virasoro_checked(long p, const LinComb& v, const char* context) const;

    /// Degree of a homogeneous combination; nullopt for 0 or mixed input.
    std::optional<Rational> homogeneous_degree(const LinComb& v) const;

    /// Splits homogeneous v of degree k >= 1 as v = L_{-1} w + r with r in a
    /// fixed complement of the translation image.  Returns (w, r).
    std::pair<LinComb, LinComb> translate_split(const LinComb& v) const;

private:
    struct DegreeSplitData;
    const DegreeSplitData& split_data(long degree) const;

    GradedSpace space_;
    long truncation_;
    std::size_t vacuum_;
    LinComb omega_;
    Rational central_charge_;
    ModeFn mode_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::tuple<std::size_t, long, std::size_t>, std::optional<LinComb>> memo_;
    mutable std::mutex split_mutex_;
    mutable std::map<long, std::shared_ptr<DegreeSplitData>> splits_;
};

using VOAPtr = std::shared_ptr<const TruncatedVOA>;

/// Truncated admissible module over a TruncatedVOA.  The graded space stores
/// L_0 eigenvalues (c_W + level); levels run 0..D_M.
class TruncatedModule {
public:
    TruncatedModule(VOAPtr voa, GradedSpace space, long truncation, Rational conformal_weight,
                    ModeFn mode);

    const TruncatedVOA& voa() const { return *voa_; }
    const GradedSpace& space() const { return space_; }
    long truncation() const { return truncation_; }
    const Rational& conformal_weight() const { return conformal_weight_; }

    /// Integer level of a basis vector: L_0 eigenvalue minus c_W.
    long level(std::size_t id) const;
    /// Basis ids at the given level.
    const std::vector<std::size_t>& ids_at_level(long level) const;

    /// A_{(i)} m for a VOA basis id and a module basis id, memoized.
    std::optional<LinComb> mode(std::size_t a, long i, std::size_t m) const;
    std::optional<LinComb> apply_mode(const LinComb& a, long i, const LinComb& m) const;
    LinComb apply_mode_checked(const LinComb& a, long i, const LinComb& m,
                               const char* context) const;

private:
    VOAPtr voa_;
    GradedSpace space_;
    long truncation_;
    Rational conformal_weight_;
    ModeFn mode_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::tuple<std::size_t, long, std::size_t>, std::optional<LinComb>> memo_;
};

using ModulePtr = std::shared_ptr<const TruncatedModule>;

/// One term c * A_{[i]} of an element of the Lie algebra ancillary to V.
struct ModeTerm {
    std::size_t basis_id;
    long t_index;
    Rational coeff;

    friend bool operator==(const ModeTerm& a, const ModeTerm& b) {
        return a.basis_id == b.basis_id && a.t_index == b.t_index && a.coeff == b.coeff;
    }
};

/// Finite rational combination of symbols A_{[i]}, held in the canonical
/// form modulo Im(d): no vacuum-degree term away from index -1, and no
/// component in the image of the translation operator at any index (such
/// components rewrite as (L_{-1}w)_{[m]} = -m w_{[m-1]}).
class ModeElement {
public:
    ModeElement() = default;

    static ModeElement make(const TruncatedVOA& voa, const std::vector<ModeTerm>& raw);
    static ModeElement single(const TruncatedVOA& voa, std::size_t basis_id, long t_index,
                              Rational coeff = Rational(1));

    const std::vector<ModeTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Term degree deg(A) - i - 1; returns the sub-sum of terms of degree d.
    ModeElement part_of_degree(const TruncatedVOA& voa, const Rational& d) const;

    ModeElement scaled(const Rational& c) const;
    friend bool operator==(const ModeElement& a, const ModeElement& b) {
        return a.terms_ == b.terms_;
    }

    /// Action on a module: sum of c * A_{(i)} applied to v.
    std::optional<LinComb> act(const TruncatedModule& module, const LinComb& v) const;

    std::string str(const TruncatedVOA& voa) const;

private:
    std::vector<ModeTerm> terms_; // sorted by (t_index, basis_id)
};

/// [x, y] with [A_{[i]}, B_{[j]}] = sum_{k>=0} binom(i,k) (A_{(k)}B)_{[i+j-k]}.
ModeElement lie_bracket(const ModeElement& x, const ModeElement& y, const TruncatedVOA& voa);

/// gamma . A = e^{L_1} (-1)^{L_0} A, the node-gluing involution of V.
LinComb gamma_action(const LinComb& a, const TruncatedVOA& voa);

/// theta(A_{[j]}) = (-1)^{k-1} sum_i (1/i!) (L_1^i A)_{[2k-j-i-2]} for A in V_k.
ModeElement theta_involution(const ModeElement& x, const TruncatedVOA& voa);

/// Zhu product o(A)*o(B) expanded as sum_j binom(deg A, j) A_{(j-1)} B.
LinComb zhu_product(const LinComb& a, const LinComb& b, const TruncatedVOA& voa);

/// Spanning vectors of the truncated subspace O(V)_{<=cutoff}: the
/// generators sum_j binom(deg A, j) A_{(j-2)} B with deg A + deg B + 1 <=
/// cutoff (so the whole vector stays inside the window).
std::vector<LinComb> zhu_O_generators(const TruncatedVOA& voa, long cutoff);

/// Membership of b in the truncated under-approximation O(V)_{<=cutoff}.
bool zhu_O_membership(const LinComb& b, const TruncatedVOA& voa, long cutoff);

/// Action of o(A) on a functional psi on M_0 (psi given by dual-basis
/// coefficients over the level-0 ids):
///   <o(A) psi, m> = (-1)^k <psi, sum_i (1/i!) (L_1^i A)_{(k-i-1)} m>.
LinComb contragredient_action(const LinComb& a, const LinComb& psi,
                              const TruncatedModule& module);

/// Matrix action of B'_{(l)} on the graded dual of the module window, for a
/// single VOA basis vector B (used by the sewing identity):
///   <B'_{(l)} psi, m> = (-1)^k <psi, sum_t (1/t!) (L_1^t B)_{(2k-l-t-2)} m>.
/// Returns the functional B'_{(l)} psi as dual-basis coefficients; psi is
/// supported on any levels of the window.
std::optional<LinComb> contragredient_mode(std::size_t b, long l, const LinComb& psi,
                                           const TruncatedModule& module);

/// Basis of the quasi-primary vectors ker(L_1) in each degree <= max_degree.
/// These are the vectors whose currents transform as honest k-differentials
/// under coordinate changes, hence the admissible pairings with global
/// (1-k)-differentials.
std::vector<LinComb> quasi_primary_basis(const TruncatedVOA& voa, long max_degree);

} // namespace vblocks
