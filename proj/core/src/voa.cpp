#include "vblocks/voa.hpp"

#include "vblocks/errors.hpp"
#include "vblocks/linalg.hpp"

#include <algorithm>

namespace vblocks {

TruncatedVOA::TruncatedVOA(GradedSpace space, long truncation, std::size_t vacuum, LinComb omega,
                           Rational central_charge, ModeFn mode)
    : space_(std::move(space)),
      truncation_(truncation),
      vacuum_(vacuum),
      omega_(std::move(omega)),
      central_charge_(std::move(central_charge)),
      mode_(std::move(mode)) {
    if (space_.dim_at(Rational(0)) != 1)
        throw std::invalid_argument("TruncatedVOA: dim V_0 must be 1");
}

std::optional<LinComb> TruncatedVOA::mode(std::size_t a, long i, std::size_t b) const {
    const auto key = std::make_tuple(a, i, b);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    auto result = mode_(a, i, b);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(key, std::move(result)).first->second;
}

std::optional<LinComb> TruncatedVOA::apply_mode(const LinComb& a, long i, const LinComb& b) const {
    LinComb out;
    for (const auto& [ia, ca] : a) {
        for (const auto& [ib, cb] : b) {
            auto r = mode(ia, i, ib);
            if (!r) return std::nullopt;
            lincomb_add_scaled(out, *r, ca * cb);
        }
    }
    return out;
}

LinComb TruncatedVOA::apply_mode_checked(const LinComb& a, long i, const LinComb& b,
                                         const char* context) const {
    auto r = apply_mode(a, i, b);
    if (!r)
        throw TruncationOverflowError(std::string(context) +
                                      ": mode result leaves the truncation window");
    return std::move(*r);
}

std::optional<LinComb> TruncatedVOA::virasoro(long p, const LinComb& v) const {
    return apply_mode(omega_, p + 1, v);
}

LinComb TruncatedVOA::virasoro_checked(long p, const LinComb& v, const char* context) const {
    return apply_mode_checked(omega_, p + 1, v, context);
}

std::optional<Rational> TruncatedVOA::homogeneous_degree(const LinComb& v) const {
    std::optional<Rational> deg;
    for (const auto& [id, c] : v) {
        const Rational& d = space_.degree_of(id);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

// Reduced echelon of the translation image L_{-1} V_{k-1} inside V_k,
// with tracked preimage combinations.
struct TruncatedVOA::DegreeSplitData {
    // pivot basis id -> (image row with pivot coefficient 1, preimage comb)
    std::map<std::size_t, std::pair<LinComb, LinComb>> rows;
};

const TruncatedVOA::DegreeSplitData& TruncatedVOA::split_data(long degree) const {
    {
        std::lock_guard<std::mutex> lock(split_mutex_);
        auto it = splits_.find(degree);
        if (it != splits_.end()) return *it->second;
    }
    auto data = std::make_shared<DegreeSplitData>();
    for (std::size_t src : space_.ids_at(Rational(degree - 1))) {
        LinComb image = virasoro_checked(-1, LinComb{{src, Rational(1)}}, "translate_split");
        LinComb comb{{src, Rational(1)}};
        // reduce against existing rows
        for (const auto& [pivot, row] : data->rows) {
            auto it = image.find(pivot);
            if (it == image.end()) continue;
            const Rational c = it->second;
            lincomb_add_scaled(image, row.first, -c);
            lincomb_add_scaled(comb, row.second, -c);
        }
        if (image.empty()) continue;
        const std::size_t pivot = image.begin()->first;
        const Rational lead = image.begin()->second;
        const Rational inv = Rational(1) / lead;
        image = lincomb_scaled(image, inv);
        comb = lincomb_scaled(comb, inv);
        // back-substitute to keep the basis fully reduced
        for (auto& [p, row] : data->rows) {
            auto it = row.first.find(pivot);
            if (it == row.first.end()) continue;
            const Rational c = it->second;
            lincomb_add_scaled(row.first, image, -c);
            lincomb_add_scaled(row.second, comb, -c);
        }
        data->rows.emplace(pivot, std::make_pair(std::move(image), std::move(comb)));
    }
    std::lock_guard<std::mutex> lock(split_mutex_);
    return *splits_.emplace(degree, std::move(data)).first->second;
}

std::pair<LinComb, LinComb> TruncatedVOA::translate_split(const LinComb& v) const {
    auto deg = homogeneous_degree(v);
    if (!deg) {
        if (v.empty()) return {LinComb{}, LinComb{}};
        throw std::invalid_argument("translate_split: input not homogeneous");
    }
    const auto& data = split_data(deg->to_long());
    LinComb r = v;
    LinComb w;
    for (const auto& [pivot, row] : data.rows) {
        auto it = r.find(pivot);
        if (it == r.end()) continue;
        const Rational c = it->second;
        lincomb_add_scaled(r, row.first, -c);
        lincomb_add_scaled(w, row.second, c);
    }
    return {std::move(w), std::move(r)};
}

TruncatedModule::TruncatedModule(VOAPtr voa, GradedSpace space, long truncation,
                                 Rational conformal_weight, ModeFn mode)
    : voa_(std::move(voa)),
      space_(std::move(space)),
      truncation_(truncation),
      conformal_weight_(std::move(conformal_weight)),
      mode_(std::move(mode)) {}

long TruncatedModule::level(std::size_t id) const {
    return (space_.degree_of(id) - conformal_weight_).to_long();
}

const std::vector<std::size_t>& TruncatedModule::ids_at_level(long lev) const {
    return space_.ids_at(conformal_weight_ + Rational(lev));
}

std::optional<LinComb> TruncatedModule::mode(std::size_t a, long i, std::size_t m) const {
    const auto key = std::make_tuple(a, i, m);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    auto result = mode_(a, i, m);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(key, std::move(result)).first->second;
}

std::optional<LinComb> TruncatedModule::apply_mode(const LinComb& a, long i,
                                                   const LinComb& m) const {
    LinComb out;
    for (const auto& [ia, ca] : a) {
        for (const auto& [im, cm] : m) {
            auto r = mode(ia, i, im);
            if (!r) return std::nullopt;
            lincomb_add_scaled(out, *r, ca * cm);
        }
    }
    return out;
}

LinComb TruncatedModule::apply_mode_checked(const LinComb& a, long i, const LinComb& m,
                                            const char* context) const {
    auto r = apply_mode(a, i, m);
    if (!r)
        throw TruncationOverflowError(std::string(context) +
                                      ": module mode result leaves the truncation window");
    return std::move(*r);
}

// ---------------------------------------------------------------------------
// ModeElement
// ---------------------------------------------------------------------------

namespace {

// Canonical form modulo Im(d):
//  * a vacuum-degree component survives only at index -1
//    (d(1 x t^{m+1}) = (m+1) 1_{[m]});
//  * the L_{-1}-image part of a degree-k component at index m rewrites as
//    (L_{-1}w)_{[m]} = -m w_{[m-1]} and migrates downward.
std::vector<ModeTerm> canonical_terms(const TruncatedVOA& voa,
                                      const std::vector<ModeTerm>& raw) {
    // index -> degree -> component
    std::map<long, std::map<long, LinComb>> buckets;
    for (const auto& t : raw) {
        if (t.coeff.is_zero()) continue;
        lincomb_add(buckets[t.t_index][voa.degree(t.basis_id)], t.basis_id, t.coeff);
    }

    std::vector<ModeTerm> out;
    while (!buckets.empty()) {
        auto top = std::prev(buckets.end());
        const long index = top->first;
        auto components = std::move(top->second);
        buckets.erase(top);
        for (auto& [deg, comp] : components) {
            if (comp.empty()) continue;
            if (deg == 0) {
                if (index == -1)
                    for (const auto& [id, c] : comp) out.push_back({id, index, c});
                continue;
            }
            auto [w, r] = voa.translate_split(comp);
            for (const auto& [id, c] : r) out.push_back({id, index, c});
            if (!w.empty() && index != 0) {
                auto& lower = buckets[index - 1][deg - 1];
                lincomb_add_scaled(lower, w, Rational(-index));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const ModeTerm& a, const ModeTerm& b) {
        if (a.t_index != b.t_index) return a.t_index < b.t_index;
        return a.basis_id < b.basis_id;
    });
    return out;
}

} // namespace

ModeElement ModeElement::make(const TruncatedVOA& voa, const std::vector<ModeTerm>& raw) {
    ModeElement e;
    e.terms_ = canonical_terms(voa, raw);
    return e;
}

ModeElement ModeElement::single(const TruncatedVOA& voa, std::size_t basis_id, long t_index,
                                Rational coeff) {
    return make(voa, {{basis_id, t_index, std::move(coeff)}});
}

ModeElement ModeElement::part_of_degree(const TruncatedVOA& voa, const Rational& d) const {
    ModeElement e;
    for (const auto& t : terms_) {
        const Rational deg = Rational(voa.degree(t.basis_id)) - Rational(t.t_index) - Rational(1);
        if (deg == d) e.terms_.push_back(t);
    }
    return e;
}

ModeElement ModeElement::scaled(const Rational& c) const {
    ModeElement e;
    if (c.is_zero()) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.coeff *= c;
    return e;
}

std::optional<LinComb> ModeElement::act(const TruncatedModule& module, const LinComb& v) const {
    LinComb out;
    for (const auto& t : terms_) {
        for (const auto& [mid, cv] : v) {
            auto r = module.mode(t.basis_id, t.t_index, mid);
            if (!r) return std::nullopt;
            lincomb_add_scaled(out, *r, t.coeff * cv);
        }
    }
    return out;
}

std::string ModeElement::str(const TruncatedVOA& voa) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.coeff.str() + "*(" + voa.space().label_of(t.basis_id) + ")[" +
             std::to_string(t.t_index) + "]";
    }
    return s;
}

ModeElement lie_bracket(const ModeElement& x, const ModeElement& y, const TruncatedVOA& voa) {
    std::vector<ModeTerm> raw;
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            const long da = voa.degree(tx.basis_id);
            const long db = voa.degree(ty.basis_id);
            const Rational c = tx.coeff * ty.coeff;
            // A_{(k)}B vanishes once the target degree da+db-k-1 is negative.
            for (long k = 0; k <= da + db; ++k) {
                const Rational bc = binomial(tx.t_index, k);
                if (bc.is_zero()) continue;
                auto prod = voa.mode(tx.basis_id, k, ty.basis_id);
                if (!prod)
                    throw TruncationOverflowError(
                        "lie_bracket: A_(k)B exceeds the truncation window");
                for (const auto& [id, pc] : *prod)
                    raw.push_back({id, tx.t_index + ty.t_index - k, c * bc * pc});
            }
        }
    }
    return ModeElement::make(voa, raw);
}

LinComb gamma_action(const LinComb& a, const TruncatedVOA& voa) {
    // split into homogeneous components first
    std::map<long, LinComb> by_degree;
    for (const auto& [id, c] : a) lincomb_add(by_degree[voa.degree(id)], id, c);

    LinComb out;
    for (const auto& [k, comp] : by_degree) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        LinComb v = comp;
        long i = 0;
        while (!v.empty()) {
            lincomb_add_scaled(out, v, sign / factorial(i));
            v = voa.virasoro_checked(1, v, "gamma_action"); // L_1 lowers degree; no overflow
            ++i;
        }
    }
    return out;
}

ModeElement theta_involution(const ModeElement& x, const TruncatedVOA& voa) {
    std::vector<ModeTerm> raw;
    for (const auto& t : x.terms()) {
        const long k = voa.degree(t.basis_id);
        const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1); // (-1)^{k-1}
        LinComb v{{t.basis_id, Rational(1)}};
        long i = 0;
        while (!v.empty()) {
            const Rational c = t.coeff * sign / factorial(i);
            for (const auto& [id, vc] : v)
                raw.push_back({id, 2 * k - t.t_index - i - 2, c * vc});
            v = voa.virasoro_checked(1, v, "theta_involution");
            ++i;
        }
    }
    return ModeElement::make(voa, raw);
}

LinComb zhu_product(const LinComb& a, const LinComb& b, const TruncatedVOA& voa) {
    auto deg = voa.homogeneous_degree(a);
    if (!deg) {
        if (a.empty()) return {};
        throw std::invalid_argument("zhu_product: A must be homogeneous");
    }
    const long k = deg->to_long();
    LinComb out;
    for (long j = 0; j <= k; ++j) {
        const Rational bc = binomial(k, j);
        lincomb_add_scaled(out, voa.apply_mode_checked(a, j - 1, b, "zhu_product"), bc);
    }
    return out;
}

std::vector<LinComb> zhu_O_generators(const TruncatedVOA& voa, long cutoff) {
    if (cutoff > voa.truncation())
        throw std::invalid_argument("zhu_O_generators: cutoff exceeds truncation");
    std::vector<LinComb> gens;
    const std::size_t n = voa.space().dim();
    for (std::size_t a = 0; a < n; ++a) {
        const long da = voa.degree(a);
        for (std::size_t b = 0; b < n; ++b) {
            if (da + voa.degree(b) + 1 > cutoff) continue;
            LinComb gen;
            for (long j = 0; j <= da; ++j) {
                const Rational bc = binomial(da, j);
                auto r = voa.mode(a, j - 2, b);
                if (!r)
                    throw TruncationOverflowError("zhu_O_generators: unexpected overflow");
                lincomb_add_scaled(gen, *r, bc);
            }
            if (!gen.empty()) gens.push_back(std::move(gen));
        }
    }
    return gens;
}

bool zhu_O_membership(const LinComb& b, const TruncatedVOA& voa, long cutoff) {
    for (const auto& [id, c] : b)
        if (voa.degree(id) > cutoff)
            throw std::invalid_argument("zhu_O_membership: vector outside the cutoff window");
    RowEchelon echelon;
    for (auto& gen : zhu_O_generators(voa, cutoff)) {
        SparseRow row;
        for (auto& [id, c] : gen) row.emplace(id, c);
        echelon.insert(std::move(row));
    }
    SparseRow probe;
    for (const auto& [id, c] : b) probe.emplace(id, c);
    return echelon.contains(std::move(probe));
}

LinComb contragredient_action(const LinComb& a, const LinComb& psi,
                              const TruncatedModule& module) {
    const auto& voa = module.voa();
    auto deg = voa.homogeneous_degree(a);
    if (!deg) {
        if (a.empty()) return {};
        throw std::invalid_argument("contragredient_action: A must be homogeneous");
    }
    const long k = deg->to_long();
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);

    LinComb out;
    for (std::size_t m : module.ids_at_level(0)) {
        // U m = sum_i (1/i!) (L_1^i A)_{(k-i-1)} m, a level-0 vector
        LinComb um;
        LinComb v = a;
        long i = 0;
        while (!v.empty()) {
            lincomb_add_scaled(
                um,
                module.apply_mode_checked(v, k - i - 1, LinComb{{m, Rational(1)}},
                                          "contragredient_action"),
                Rational(1) / factorial(i));
            v = voa.virasoro_checked(1, v, "contragredient_action");
            ++i;
        }
        Rational pair(0);
        for (const auto& [id, c] : um) {
            auto it = psi.find(id);
            if (it != psi.end()) pair += it->second * c;
        }
        lincomb_add(out, m, sign * pair);
    }
    return out;
}

std::vector<LinComb> quasi_primary_basis(const TruncatedVOA& voa, long max_degree) {
    std::vector<LinComb> out;
    for (long k = 0; k <= std::min(max_degree, voa.truncation()); ++k) {
        const auto& ids = voa.space().ids_at(Rational(k));
        if (ids.empty()) continue;
        if (k == 0) {
            for (std::size_t id : ids) out.push_back(LinComb{{id, Rational(1)}});
            continue;
        }
        // kernel of L_1 restricted to degree k, by elimination on the matrix
        // (rows: degree k-1 coordinates, columns: degree-k basis)
        const std::size_t ncols = ids.size();
        std::vector<LinComb> images(ncols);
        for (std::size_t j = 0; j < ncols; ++j)
            images[j] = voa.virasoro_checked(1, LinComb{{ids[j], Rational(1)}},
                                             "quasi_primary_basis");
        // gather row coordinates
        std::map<std::size_t, std::size_t> row_of;
        for (const auto& img : images)
            for (const auto& [rid, c] : img)
                row_of.emplace(rid, row_of.size());
        std::vector<QVector> m(row_of.size(), QVector(ncols, Rational(0)));
        for (std::size_t j = 0; j < ncols; ++j)
            for (const auto& [rid, c] : images[j]) m[row_of[rid]][j] = c;

        // reduced echelon; free columns give the kernel basis
        std::vector<long> pivot_of_col(ncols, -1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
            std::size_t pr = rank;
            while (pr < m.size() && m[pr][col].is_zero()) ++pr;
            if (pr == m.size()) continue;
            std::swap(m[rank], m[pr]);
            const Rational inv = Rational(1) / m[rank][col];
            for (std::size_t j = col; j < ncols; ++j) m[rank][j] *= inv;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rank || m[i][col].is_zero()) continue;
                const Rational f = m[i][col];
                for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[rank][j];
            }
            pivot_of_col[col] = static_cast<long>(rank);
            ++rank;
        }
        for (std::size_t col = 0; col < ncols; ++col) {
            if (pivot_of_col[col] >= 0) continue;
            LinComb v{{ids[col], Rational(1)}};
            for (std::size_t pc = 0; pc < col; ++pc)
                if (pivot_of_col[pc] >= 0) {
                    const Rational c = m[static_cast<std::size_t>(pivot_of_col[pc])][col];
                    if (!c.is_zero()) lincomb_add(v, ids[pc], -c);
                }
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::optional<LinComb> contragredient_mode(std::size_t b, long l, const LinComb& psi,
                                           const TruncatedModule& module) {
    const auto& voa = module.voa();
    const long k = voa.degree(b);
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const long shift = l + 1 - k; // degree of every summand of U

    // levels where the output functional can live
    std::map<long, bool> psi_levels;
    for (const auto& [id, c] : psi) psi_levels[module.level(id)] = true;

    LinComb out;
    for (const auto& [plev, unused] : psi_levels) {
        const long mlev = plev - shift;
        if (mlev < 0 || mlev > module.truncation()) continue;
        for (std::size_t m : module.ids_at_level(mlev)) {
            LinComb um;
            LinComb v{{b, Rational(1)}};
            long t = 0;
            while (!v.empty()) {
                auto r = module.apply_mode(v, 2 * k - l - t - 2, LinComb{{m, Rational(1)}});
                if (!r) return std::nullopt;
                lincomb_add_scaled(um, *r, Rational(1) / factorial(t));
                v = voa.virasoro_checked(1, v, "contragredient_mode");
                ++t;
            }
            Rational pair(0);
            for (const auto& [id, c] : um) {
                auto it = psi.find(id);
                if (it != psi.end()) pair += it->second * c;
            }
            lincomb_add(out, m, sign * pair);
        }
    }
    return out;
}

} // namespace vblocks
