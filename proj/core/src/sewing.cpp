#include "vblocks/sewing.hpp"

#include "vblocks/errors.hpp"

#include <tuple>

namespace vblocks {

long SewingElement::contraction(long level) const {
    return static_cast<long>(module->ids_at_level(level).size());
}

SewingElement make_sewing_element(ModulePtr module, long cutoff) {
    if (cutoff > module->truncation())
        throw std::invalid_argument("make_sewing_element: cutoff exceeds the module window");
    return SewingElement{std::move(module), cutoff};
}

bool sewing_identity_check(const LinComb& a, long i, long j, const TruncatedModule& module,
                           long cutoff) {
    if (i < 0 || j < 0) throw std::invalid_argument("sewing_identity_check: need i, j >= 0");
    const auto& voa = module.voa();
    auto deg = voa.homogeneous_degree(a);
    if (!deg) {
        if (a.empty()) return true;
        throw std::invalid_argument("sewing_identity_check: A must be homogeneous");
    }
    const long k = deg->to_long();
    const long x_idx = i - j + k - 1;
    const long s1 = std::max(0L, j - i); // q-normalization so both powers are >= 0
    const long s2 = std::max(0L, i - j);

    // accumulated tensor: (q power, W id, W'-dual id) -> coefficient
    std::map<std::tuple<long, std::size_t, std::size_t>, Rational> acc;
    auto add = [&](long qpow, std::size_t wid, std::size_t did, const Rational& c) {
        if (qpow > cutoff || c.is_zero()) return; // mod q^{cutoff+1}
        auto key = std::make_tuple(qpow, wid, did);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };

    // theta(A_{[x_idx]}) as a canonical mode element
    std::vector<ModeTerm> raw;
    for (const auto& [id, c] : a) raw.push_back({id, x_idx, c});
    const ModeElement x = ModeElement::make(voa, raw);
    const ModeElement tx = theta_involution(x, voa);

    for (long d = 0; d <= cutoff; ++d) {
        for (std::size_t m : module.ids_at_level(d)) {
            // (x (x) 1)(e_m (x) e*_m) q^{d + s1}
            if (d + s1 <= cutoff) {
                const LinComb xm =
                    module.apply_mode_checked(a, x_idx, LinComb{{m, Rational(1)}},
                                              "sewing_identity_check");
                for (const auto& [wid, c] : xm) add(d + s1, wid, m, c);
            }
            // (1 (x) theta(x))(e_m (x) e*_m) q^{d + s2}
            if (d + s2 <= cutoff) {
                const LinComb psi{{m, Rational(1)}};
                for (const auto& t : tx.terms()) {
                    auto r = contragredient_mode(t.basis_id, t.t_index, psi, module);
                    if (!r)
                        throw TruncationOverflowError(
                            "sewing_identity_check: contragredient mode leaves the window");
                    for (const auto& [did, c] : *r) add(d + s2, m, did, t.coeff * c);
                }
            }
        }
    }
    return acc.empty();
}

SpectralBlock spectral_apply_D(const SpectralBlock& block) {
    SpectralBlock out;
    out.shift = block.shift;
    for (const auto& [label, series] : block.per_label) {
        auto it = block.shift.find(label);
        const Rational cw = it == block.shift.end() ? Rational(0) : it->second;
        QSeries s(series.cutoff());
        for (long d = 0; d <= series.cutoff(); ++d)
            s.set(d, (Rational(d) + cw) * series[d]);
        out.per_label.emplace(label, std::move(s));
    }
    return out;
}

QSeries sewn_character(const TruncatedModule& module, long cutoff) {
    if (cutoff > module.truncation())
        throw std::invalid_argument("sewn_character: cutoff exceeds the module window");
    QSeries s(cutoff);
    for (long d = 0; d <= cutoff; ++d)
        s.set(d, Rational(static_cast<long>(module.ids_at_level(d).size())));
    return s;
}

} // namespace vblocks
