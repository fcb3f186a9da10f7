#include "vblocks/nodal.hpp"

#include "vblocks/errors.hpp"

namespace vblocks {

Rational k_residue(const LaurentJet& jet, long k) {
    if (jet.order() < -k)
        throw OrderViolationError("k_residue: jet has order " + std::to_string(jet.order()) +
                                  " < " + std::to_string(-k));
    if (jet.tail_order() <= -k)
        throw OrderViolationError("k_residue: jet does not determine the coefficient at " +
                                  std::to_string(-k));
    return jet.coeff(-k);
}

bool glue_check(const KDifferentialJet& jet) {
    const long k = jet.k;
    if (jet.plus.order() < -k || jet.minus.order() < -k) return false;
    Rational rp = k_residue(jet.plus, k);
    Rational rm = k_residue(jet.minus, k);
    if (k % 2 != 0) rm = -rm;
    return rp == rm;
}

bool nodal_chiral_check(const ChiralJetElement& sigma, const TruncatedVOA& voa) {
    std::vector<ModeTerm> plus_raw, minus_raw;
    for (const auto& [k, comp] : sigma.graded) {
        if (comp.jet.k != 1 - k)
            throw std::invalid_argument("nodal_chiral_check: degree-" + std::to_string(k) +
                                        " component must carry a (1-k)-differential jet");
        if (!comp.vector.empty()) {
            auto deg = voa.homogeneous_degree(comp.vector);
            if (!deg || *deg != Rational(k))
                throw std::invalid_argument(
                    "nodal_chiral_check: component vector is not homogeneous of its key degree");
        }
        // order gate: sigma_{Q+-} in L(V)_{<=0} iff ord >= k-1 on both sides
        if (comp.jet.plus.order() < k - 1 || comp.jet.minus.order() < k - 1) return false;
        if (comp.jet.plus.tail_order() < k || comp.jet.minus.tail_order() < k)
            throw OrderViolationError(
                "nodal_chiral_check: jets do not determine the degree-0 part");
        // [sigma]_0: the s^{k-1} coefficient pairs the component to A_{[k-1]}
        const Rational cp = comp.jet.plus.coeff(k - 1);
        const Rational cm = comp.jet.minus.coeff(k - 1);
        for (const auto& [id, c] : comp.vector) {
            if (!cp.is_zero()) plus_raw.push_back({id, k - 1, c * cp});
            if (!cm.is_zero()) minus_raw.push_back({id, k - 1, c * cm});
        }
    }
    const ModeElement plus0 = ModeElement::make(voa, plus_raw);
    const ModeElement minus0 = ModeElement::make(voa, minus_raw);
    return theta_involution(plus0, voa) == minus0;
}

} // namespace vblocks
