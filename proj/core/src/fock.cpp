#include "vblocks/fock.hpp"

#include "vblocks/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace vblocks {

long FockState::parts_sum() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

std::string FockState::label() const {
    std::string s;
    for (long p : parts) s += "a(-" + std::to_string(p) + ")";
    s += "|" + charge.str() + ">";
    return s;
}

FockModel FockModel::lattice(long k) {
    if (k < 1) throw std::invalid_argument("FockModel::lattice: k must be >= 1");
    return FockModel(Rational(2 * k));
}

Rational FockModel::l0(const FockState& s) const {
    return gram_ * s.charge * s.charge / Rational(2) + Rational(s.parts_sum());
}

namespace {

// Mode coefficient of h_m inside h^{(n)}(z) := (1/(n-1)!) d^{n-1} h(z):
// the z^{-m-n} term carries (-1)^{n-1} binom(m+n-1, n-1).
Rational hfactor_weight(long n, long m) {
    Rational b = binomial(m + n - 1, n - 1);
    return (n % 2 == 0) ? -b : b;
}

Rational rational_pow(const Rational& x, long e) {
    Rational r(1);
    for (long t = 0; t < e; ++t) r *= x;
    return r;
}

void sort_desc(std::vector<long>& v) { std::sort(v.begin(), v.end(), std::greater<long>()); }

long count_part(const std::vector<long>& parts, long p) {
    return std::count(parts.begin(), parts.end(), p);
}

void remove_one_part(std::vector<long>& parts, long p) {
    auto it = std::find(parts.begin(), parts.end(), p);
    parts.erase(it);
}

} // namespace

FockTerms FockModel::heisenberg_mode(long n, const FockState& u) const {
    FockTerms out;
    if (n < 0) {
        FockState v = u;
        v.parts.push_back(-n);
        sort_desc(v.parts);
        out.emplace(std::move(v), Rational(1));
    } else if (n == 0) {
        const Rational c = gram_ * u.charge;
        if (!c.is_zero()) out.emplace(u, c);
    } else {
        const long cnt = count_part(u.parts, n);
        if (cnt > 0) {
            FockState v = u;
            remove_one_part(v.parts, n);
            out.emplace(std::move(v), Rational(n) * gram_ * Rational(cnt));
        }
    }
    return out;
}

// Y(A,z) = : h^{(n_1)}(z) ... h^{(n_r)}(z) Gamma_mu(z) : evaluated exactly.
// Normal ordering sends every creation mode left of every annihilation/zero
// mode; the zero modes and z^{mu_0} read the charge of the incoming state.
// The trivial 2-cocycle is used (rank 1, even pairing).
FockTerms FockModel::vertex_mode(const FockState& a, long i, const FockState& u) const {
    if (!a.charge.is_integer())
        throw std::invalid_argument("vertex_mode: operator state must have integer charge");
    const long m = a.charge.to_long();
    const std::vector<long>& ns = a.parts;

    const Rational deg_out = l0(a) - Rational(i + 1) + l0(u);
    const Rational shift_pow_r = pairing(a.charge, u.charge);
    if (!shift_pow_r.is_integer())
        throw std::invalid_argument("vertex_mode: pairing (mu, lambda) is not integral");
    const long shift_pow = shift_pow_r.to_long();

    FockTerms out;

    auto emit = [&](FockState state, const Rational& coeff) {
        sort_desc(state.parts);
        auto it = out.find(state);
        if (it == out.end()) {
            out.emplace(std::move(state), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    // creation side: E^-(z) multisets, budget = degree still to be created
    std::function<void(FockState, long, long, Rational)> eminus =
        [&](FockState state, long rem, long maxpart, Rational coeff) {
            if (rem == 0) {
                emit(std::move(state), coeff);
                return;
            }
            if (m == 0 || maxpart == 0) return;
            for (long c = 0; c * maxpart <= rem; ++c) {
                if (c > 0) {
                    coeff *= Rational(m, maxpart) / Rational(c); // (m/n)^c / c! built up stepwise
                    state.parts.push_back(maxpart);
                }
                eminus(state, rem - c * maxpart, maxpart - 1, coeff);
            }
        };

    // creation picks of the deferred h-factors
    std::function<void(const std::vector<long>&, std::size_t, FockState, long, Rational)>
        create_picks = [&](const std::vector<long>& deferred, std::size_t j, FockState state,
                           long rem, Rational coeff) {
            if (j == deferred.size()) {
                eminus(std::move(state), rem, rem, coeff);
                return;
            }
            const long later = static_cast<long>(deferred.size() - j - 1);
            for (long p = 1; p <= rem - later; ++p) {
                const Rational w = hfactor_weight(deferred[j], -p);
                if (w.is_zero()) continue;
                FockState s2 = state;
                s2.parts.push_back(p);
                create_picks(deferred, j + 1, std::move(s2), rem - p, coeff * w);
            }
        };

    auto phase_shift = [&](FockState state, long zpow, const Rational& coeff,
                           const std::vector<long>& deferred) {
        state.charge += a.charge;
        zpow += shift_pow;
        const Rational budget_r = deg_out - l0(state);
        if (!budget_r.is_integer()) return;
        const long budget = budget_r.to_long();
        if (budget < 0) return;
        const long zneed = (-i - 1) - zpow;
        long defer_sum = 0;
        for (long n : deferred) defer_sum += n;
        if (budget - zneed != defer_sum) return;
        create_picks(deferred, 0, std::move(state), budget, coeff);
    };

    // E^+(z) removal multisets over the distinct parts of the incoming state
    std::function<void(FockState, long, Rational, const std::vector<long>&,
                       const std::vector<long>&, std::size_t)>
        eplus = [&](FockState state, long zpow, Rational coeff, const std::vector<long>& deferred,
                    const std::vector<long>& values, std::size_t vi) {
            if (m == 0 || vi >= values.size()) {
                phase_shift(std::move(state), zpow, coeff, deferred);
                return;
            }
            const long n = values[vi];
            const long cn = count_part(state.parts, n);
            Rational factor(1);
            FockState s2 = state;
            for (long c = 0; c <= cn; ++c) {
                if (c > 0) {
                    // (-m (h,h))^c binom(cn, c), built incrementally
                    factor *= Rational(-m) * gram_ * Rational(cn - c + 1, c);
                    remove_one_part(s2.parts, n);
                }
                eplus(s2, zpow - n * c, coeff * factor, deferred, values, vi + 1);
            }
        };

    auto eplus_start = [&](FockState state, long zpow, const Rational& coeff,
                           const std::vector<long>& deferred) {
        std::vector<long> values;
        for (long p : state.parts)
            if (values.empty() || values.back() != p) values.push_back(p);
        eplus(std::move(state), zpow, coeff, deferred, values, 0);
    };

    // phase A: each h-factor either defers to the creation side or picks an
    // annihilation/zero mode on the incoming state
    std::function<void(std::size_t, FockState, long, Rational, std::vector<long>)> phase_a =
        [&](std::size_t idx, FockState state, long zpow, Rational coeff,
            std::vector<long> deferred) {
            if (idx == ns.size()) {
                eplus_start(std::move(state), zpow, coeff, deferred);
                return;
            }
            const long n = ns[idx];
            {
                auto d2 = deferred;
                d2.push_back(n);
                phase_a(idx + 1, state, zpow, coeff, std::move(d2));
            }
            {
                const Rational c0 = hfactor_weight(n, 0) * gram_ * state.charge;
                if (!c0.is_zero()) phase_a(idx + 1, state, zpow - n, coeff * c0, deferred);
            }
            long prev = 0;
            for (std::size_t pi = 0; pi < state.parts.size(); ++pi) {
                const long p = state.parts[pi];
                if (p == prev) continue;
                prev = p;
                const Rational cp =
                    hfactor_weight(n, p) * Rational(p) * gram_ * Rational(count_part(state.parts, p));
                if (cp.is_zero()) continue;
                FockState v = state;
                remove_one_part(v.parts, p);
                phase_a(idx + 1, std::move(v), zpow - p - n, coeff * cp, deferred);
            }
        };

    phase_a(0, u, 0, Rational(1), {});
    return out;
}

// ---------------------------------------------------------------------------
// Truncated instances
// ---------------------------------------------------------------------------

namespace {

void for_each_partition(long total, std::vector<long>& acc, long maxpart,
                        const std::function<void(const std::vector<long>&)>& fn) {
    if (total == 0) {
        fn(acc);
        return;
    }
    for (long p = std::min(maxpart, total); p >= 1; --p) {
        acc.push_back(p);
        for_each_partition(total - p, acc, p, fn);
        acc.pop_back();
    }
}

// all states with the given charges and l0 eigenvalue in [base, base + window]
std::vector<FockState> enumerate_states(const FockModel& model,
                                        const std::vector<Rational>& charges,
                                        const Rational& base, long window) {
    std::map<Rational, std::vector<FockState>> by_degree;
    for (const Rational& r : charges) {
        const Rational cdeg = model.l0(FockState{r, {}});
        const Rational room = base + Rational(window) - cdeg;
        if (room < Rational(0)) continue;
        if (!(cdeg - base).is_integer()) continue;
        const long budget = room.to_long(); // room is an integer by the grading rule
        for (long t = 0; t <= budget; ++t) {
            std::vector<long> acc;
            for_each_partition(t, acc, t == 0 ? 1 : t, [&](const std::vector<long>& parts) {
                FockState s{r, parts};
                by_degree[cdeg + Rational(t)].push_back(std::move(s));
            });
        }
    }
    std::vector<FockState> out;
    for (auto& [deg, states] : by_degree) {
        std::sort(states.begin(), states.end());
        for (auto& s : states) out.push_back(std::move(s));
    }
    return out;
}

ModeFn make_mode_fn(FockModel model, std::shared_ptr<const std::vector<FockState>> op_states,
                    std::shared_ptr<const std::vector<FockState>> arg_states,
                    std::shared_ptr<const std::map<FockState, std::size_t>> arg_index) {
    return [model, op_states = std::move(op_states), arg_states = std::move(arg_states),
            arg_index = std::move(arg_index)](std::size_t a, long i,
                                              std::size_t b) -> std::optional<LinComb> {
        FockTerms terms = model.vertex_mode(op_states->at(a), i, arg_states->at(b));
        LinComb out;
        for (const auto& [state, c] : terms) {
            auto it = arg_index->find(state);
            if (it == arg_index->end()) return std::nullopt; // nonzero term outside the window
            out.emplace(it->second, c);
        }
        return out;
    };
}

} // namespace

FockVOA::FockVOA(FockModel model, long lattice_k) : model_(model), lattice_k_(lattice_k) {}

FockVOA FockVOA::heisenberg(long truncation) {
    if (truncation < 2)
        throw std::invalid_argument("FockVOA::heisenberg: truncation must be >= 2 to hold omega");
    FockVOA f(FockModel::heisenberg(), 0);
    auto states = std::make_shared<std::vector<FockState>>(
        enumerate_states(f.model_, {Rational(0)}, Rational(0), truncation));
    auto index = std::make_shared<std::map<FockState, std::size_t>>();
    GradedSpace space;
    for (std::size_t id = 0; id < states->size(); ++id) {
        const FockState& s = (*states)[id];
        space.add_basis_vector(f.model_.l0(s), s.label());
        index->emplace(s, id);
    }
    const std::size_t vacuum = index->at(FockState{Rational(0), {}});
    const Rational omega_coeff = Rational(1) / (Rational(2) * f.model_.gram());
    LinComb omega{{index->at(FockState{Rational(0), {1, 1}}), omega_coeff}};

    // central charge read off from omega_{(3)} omega = (c/2) vacuum
    FockTerms top = f.model_.vertex_mode(FockState{Rational(0), {1, 1}}, 3, FockState{Rational(0), {1, 1}});
    Rational c(0);
    auto it = top.find(FockState{Rational(0), {}});
    if (it != top.end()) c = Rational(2) * omega_coeff * omega_coeff * it->second;

    f.voa_ = std::make_shared<TruncatedVOA>(std::move(space), truncation, vacuum, std::move(omega),
                                            c, make_mode_fn(f.model_, states, states, index));
    f.states_ = std::move(states);
    f.index_ = std::move(index);
    return f;
}

FockVOA FockVOA::lattice(long k, long truncation) {
    if (truncation < 2)
        throw std::invalid_argument("FockVOA::lattice: truncation must be >= 2 to hold omega");
    FockVOA f(FockModel::lattice(k), k);
    std::vector<Rational> charges;
    for (long m = 0; k * m * m <= truncation; ++m) {
        charges.push_back(Rational(m));
        if (m > 0) charges.push_back(Rational(-m));
    }
    auto states = std::make_shared<std::vector<FockState>>(
        enumerate_states(f.model_, charges, Rational(0), truncation));
    auto index = std::make_shared<std::map<FockState, std::size_t>>();
    GradedSpace space;
    for (std::size_t id = 0; id < states->size(); ++id) {
        const FockState& s = (*states)[id];
        space.add_basis_vector(f.model_.l0(s), s.label());
        index->emplace(s, id);
    }
    const std::size_t vacuum = index->at(FockState{Rational(0), {}});
    const Rational omega_coeff = Rational(1) / (Rational(2) * f.model_.gram());
    LinComb omega{{index->at(FockState{Rational(0), {1, 1}}), omega_coeff}};

    FockTerms top = f.model_.vertex_mode(FockState{Rational(0), {1, 1}}, 3, FockState{Rational(0), {1, 1}});
    Rational c(0);
    auto it = top.find(FockState{Rational(0), {}});
    if (it != top.end()) c = Rational(2) * omega_coeff * omega_coeff * it->second;

    f.voa_ = std::make_shared<TruncatedVOA>(std::move(space), truncation, vacuum, std::move(omega),
                                            c, make_mode_fn(f.model_, states, states, index));
    f.states_ = std::move(states);
    f.index_ = std::move(index);
    return f;
}

std::optional<std::size_t> FockVOA::id_of(const FockState& s) const {
    auto it = index_->find(s);
    if (it == index_->end()) return std::nullopt;
    return it->second;
}

const FockState& FockVOA::state_of(std::size_t id) const { return states_->at(id); }

LinComb FockVOA::to_lincomb(const FockTerms& terms) const {
    LinComb out;
    for (const auto& [state, c] : terms) {
        auto id = id_of(state);
        if (!id)
            throw TruncationOverflowError("FockVOA::to_lincomb: state outside the window: " +
                                          state.label());
        out.emplace(*id, c);
    }
    return out;
}

FockModule::FockModule(const FockVOA& on, Rational base_charge, bool lattice_sector,
                       Rational conformal_weight, long truncation)
    : model_(on.model_), voa_states_(on.states_) {
    std::vector<Rational> charges;
    if (lattice_sector) {
        // all charges in the coset with l0 within the window
        for (long m = 0;; ++m) {
            const Rational rp = base_charge + Rational(m);
            const Rational rm = base_charge - Rational(m + 1);
            const bool pin = model_.l0(FockState{rp, {}}) <= conformal_weight + Rational(truncation);
            const bool min = model_.l0(FockState{rm, {}}) <= conformal_weight + Rational(truncation);
            if (pin) charges.push_back(rp);
            if (min) charges.push_back(rm);
            if (!pin && !min) break;
        }
    } else {
        charges.push_back(base_charge);
    }
    auto states = std::make_shared<std::vector<FockState>>(
        enumerate_states(model_, charges, conformal_weight, truncation));
    auto index = std::make_shared<std::map<FockState, std::size_t>>();
    GradedSpace space;
    for (std::size_t id = 0; id < states->size(); ++id) {
        const FockState& s = (*states)[id];
        space.add_basis_vector(model_.l0(s), s.label());
        index->emplace(s, id);
    }
    module_ = std::make_shared<TruncatedModule>(
        on.voa_ptr(), std::move(space), truncation, conformal_weight,
        make_mode_fn(model_, voa_states_, states, index));
    states_ = std::move(states);
    index_ = std::move(index);
}

FockModule FockModule::lattice(const FockVOA& on, long coset, long truncation) {
    if (on.lattice_k() < 1)
        throw std::invalid_argument("FockModule::lattice: base is not a lattice vertex algebra");
    const long k = on.lattice_k();
    if (coset < 0 || coset >= 2 * k)
        throw std::invalid_argument("FockModule::lattice: coset out of range");
    const Rational base(coset, 2 * k);
    return FockModule(on, base, true, lattice_conformal_weight(k, coset), truncation);
}

FockModule FockModule::heisenberg(const FockVOA& on, const Rational& lambda, long truncation) {
    if (on.lattice_k() != 0)
        throw std::invalid_argument("FockModule::heisenberg: base must be the Heisenberg algebra");
    const Rational cw = on.model().l0(FockState{lambda, {}});
    return FockModule(on, lambda, false, cw, truncation);
}

std::optional<std::size_t> FockModule::id_of(const FockState& s) const {
    auto it = index_->find(s);
    if (it == index_->end()) return std::nullopt;
    return it->second;
}

const FockState& FockModule::state_of(std::size_t id) const { return states_->at(id); }

const FockState& FockModule::voa_state_of(std::size_t voa_id) const {
    return voa_states_->at(voa_id);
}

FockTerms FockModule::raw_mode(std::size_t voa_id, long i, const FockState& u) const {
    return model_.vertex_mode(voa_states_->at(voa_id), i, u);
}

FockTerms FockModule::raw_mode(const LinComb& b, long i, const FockState& u) const {
    FockTerms out;
    for (const auto& [id, c] : b) {
        for (const auto& [state, tc] : model_.vertex_mode(voa_states_->at(id), i, u)) {
            auto it = out.find(state);
            if (it == out.end()) {
                out.emplace(state, c * tc);
                if (out[state].is_zero()) out.erase(state);
            } else {
                it->second += c * tc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Rational lattice_conformal_weight(long k, long coset) {
    const FockModel model = FockModel::lattice(k);
    const Rational base(coset, 2 * k);
    Rational best = model.l0(FockState{base, {}});
    for (long m = -2; m <= 2; ++m) {
        const Rational v = model.l0(FockState{base + Rational(m), {}});
        if (v < best) best = v;
    }
    return best;
}

QSeries lattice_graded_dimension(long k, long coset, long cutoff) {
    const FockModel model = FockModel::lattice(k);
    const Rational cw = lattice_conformal_weight(k, coset);
    const Rational base(coset, 2 * k);

    // partition numbers p(0..cutoff)
    std::vector<long> p(static_cast<std::size_t>(cutoff) + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= cutoff; ++part)
        for (long n = part; n <= cutoff; ++n) p[n] += p[n - part];

    QSeries out(cutoff);
    auto accumulate = [&](const Rational& offset) {
        const long d0 = offset.to_long();
        for (long t = 0; d0 + t <= cutoff; ++t) out.set(d0 + t, out[d0 + t] + Rational(p[t]));
    };
    for (long m = 0;; ++m) {
        const Rational op = model.l0(FockState{base + Rational(m), {}}) - cw;
        const Rational om = model.l0(FockState{base - Rational(m + 1), {}}) - cw;
        const bool anyp = op <= Rational(cutoff);
        const bool anym = om <= Rational(cutoff);
        if (anyp) accumulate(op);
        if (anym) accumulate(om);
        if (!anyp && !anym) break;
    }
    return out;
}

} // namespace vblocks
