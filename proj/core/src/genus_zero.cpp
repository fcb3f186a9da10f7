#include "vblocks/genus_zero.hpp"

#include "vblocks/catalog.hpp"
#include "vblocks/errors.hpp"
#include "vblocks/linalg.hpp"

#include <algorithm>
#include <set>

namespace vblocks {

std::vector<P1Section> section_basis_p1(long kappa, const std::vector<P1Point>& points,
                                        long bound) {
    for (const auto& p : points)
        if (p.infinite)
            throw std::invalid_argument("section_basis_p1: marked points must be finite");
    std::vector<P1Section> out;

    if (kappa == 1) {
        // 1-forms: (z-p)^{-m} dz is regular at infinity only for m >= 2;
        // simple-pole combinations enter through residue-zero differences.
        for (const auto& p : points)
            for (long m = 2; m <= bound; ++m) {
                P1Section s(1);
                s.add_pole_term(p.z, m, Rational(1));
                out.push_back(std::move(s));
            }
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            P1Section s(1);
            s.add_pole_term(points[i].z, 1, Rational(1));
            s.add_pole_term(points.back().z, 1, Rational(-1));
            out.push_back(std::move(s));
        }
        return out;
    }

    if (kappa > 1)
        throw std::invalid_argument("section_basis_p1: kappa > 1 is not needed on P^1");

    // kappa <= 0: all bounded pole terms are regular at infinity, and the
    // polynomial part is regular up to degree -2 kappa.
    for (const auto& p : points)
        for (long m = 1; m <= bound; ++m) {
            P1Section s(kappa);
            s.add_pole_term(p.z, m, Rational(1));
            out.push_back(std::move(s));
        }
    for (long r = 0; r <= -2 * kappa; ++r) {
        P1Section s(kappa);
        s.add_poly_term(r, Rational(1));
        out.push_back(std::move(s));
    }
    return out;
}

ZhuLieElement zhu_element(const FockVOA& on, const LinComb& b, const P1Section& mu,
                          const std::vector<P1Point>& points, long jet_depth) {
    const auto& voa = on.voa();
    auto deg = voa.homogeneous_degree(b);
    if (!deg) throw std::invalid_argument("zhu_element: B must be a homogeneous vector");
    const long k = deg->to_long();
    if (!voa.virasoro_checked(1, b, "zhu_element").empty())
        throw std::invalid_argument("zhu_element: B must be quasi-primary (L_1 B = 0)");
    if (mu.k() != 1 - k)
        throw std::invalid_argument("zhu_element: section power " + std::to_string(mu.k()) +
                                    " does not match 1 - deg B = " + std::to_string(1 - k));
    for (const auto& pole : mu.pole_locations()) {
        if (std::find(points.begin(), points.end(), pole) == points.end())
            throw StrayPoleError("zhu_element: section has a pole away from the marked points (" +
                                 pole.str() + ")");
    }
    ZhuLieElement el;
    el.vector = b;
    el.section = mu;
    el.points = points;
    for (const auto& p : points) el.jets.push_back(mu.expand_at(p, jet_depth));
    return el;
}

namespace {

// ambient basis tuple of module state indices, organized by total charge
struct AmbientIndex {
    // per tuple: ids per slot; tuples grouped into sectors keyed by charge
    std::map<Rational, std::vector<std::vector<std::size_t>>> sectors;
    std::map<Rational, std::map<std::vector<std::size_t>, std::size_t>> columns;
    std::size_t total = 0;
};

AmbientIndex build_ambient(const std::vector<const FockModule*>& modules, long cutoff) {
    AmbientIndex idx;
    const std::size_t n = modules.size();
    std::vector<std::size_t> tuple(n);
    std::function<void(std::size_t, long, Rational)> rec = [&](std::size_t slot, long level_left,
                                                               Rational charge) {
        if (slot == n) {
            auto& sec = idx.sectors[charge];
            idx.columns[charge].emplace(tuple, sec.size());
            sec.push_back(tuple);
            ++idx.total;
            return;
        }
        const auto& mod = modules[slot]->module();
        for (long d = 0; d <= level_left; ++d) {
            for (std::size_t id : mod.ids_at_level(d)) {
                tuple[slot] = id;
                rec(slot + 1, level_left - d, charge + modules[slot]->state_of(id).charge);
            }
        }
    };
    rec(0, cutoff, Rational(0));
    return idx;
}

struct SectorEchelon {
    RowEchelon rows;
    std::size_t dim = 0;
    bool saturated() const { return rows.rank() >= dim; }
};

long estimate_at_cutoff(const FockVOA& on, const std::vector<const FockModule*>& modules,
                        const std::vector<P1Point>& points, long cutoff, long pole_bound,
                        std::size_t* ambient_out, std::size_t* rank_out) {
    const auto& voa = on.voa();
    const std::size_t n = modules.size();

    AmbientIndex ambient = build_ambient(modules, cutoff);
    std::map<Rational, SectorEchelon> echelons;
    for (const auto& [charge, tuples] : ambient.sectors) {
        echelons[charge].dim = tuples.size();
    }

    // relation operators: per (B, mu, point) the list of (mode index, coeff)
    // from the jet of mu; applied through the raw (untruncated) Fock action.
    // B runs over quasi-primary vectors: descendants do not transform as
    // differentials across the chart at infinity and would yield spurious
    // relations.  The degree bound cutoff+2 keeps the charge relations (the
    // weight-1 current) present at every cutoff.
    for (const LinComb& bvec : quasi_primary_basis(voa, cutoff + 2)) {
        const long degb = voa.homogeneous_degree(bvec)->to_long();
        const long kappa = 1 - degb;
        const long depth = degb + cutoff + 1; // annihilation modes that can act on F_D
        const Rational op_charge = on.state_of(bvec.begin()->first).charge;

        for (const auto& mu : section_basis_p1(kappa, points, pole_bound)) {
            // jets at every point
            std::vector<std::vector<std::pair<long, Rational>>> ops(n);
            for (std::size_t i = 0; i < n; ++i) {
                LaurentJet jet = mu.expand_at(points[i], depth);
                for (const auto& [e, c] : jet.terms()) ops[i].emplace_back(e, c);
            }

            // rows for every ambient tuple; a row is kept only when every
            // nonzero component stays inside F_D
            for (const auto& [charge, tuples] : ambient.sectors) {
                const Rational target_charge = charge + op_charge;
                auto target_sec = ambient.columns.find(target_charge);
                auto target_ech = echelons.find(target_charge);
                const bool target_exists = target_sec != ambient.columns.end();
                if (target_exists && target_ech->second.saturated()) continue;

                for (const auto& tuple : tuples) {
                    long base_level = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        base_level += modules[i]->module().level(tuple[i]);

                    SparseRow row;
                    bool keep = true;
                    for (std::size_t i = 0; i < n && keep; ++i) {
                        const long other = base_level - modules[i]->module().level(tuple[i]);
                        const FockState& ui = modules[i]->state_of(tuple[i]);
                        for (const auto& [m, c] : ops[i]) {
                            FockTerms terms = modules[i]->raw_mode(bvec, m, ui);
                            for (const auto& [state, tc] : terms) {
                                const Rational lvl_r =
                                    modules[i]->model().l0(state) - modules[i]->conformal_weight();
                                const long lvl = lvl_r.to_long();
                                if (other + lvl > cutoff) {
                                    keep = false; // nonzero component escapes F_D
                                    break;
                                }
                                auto sid = modules[i]->id_of(state);
                                if (!sid)
                                    throw TruncationOverflowError(
                                        "coinvariant estimator: module window narrower than "
                                        "the cutoff");
                                auto t2 = tuple;
                                t2[i] = *sid;
                                const std::size_t col = ambient.columns.at(target_charge).at(t2);
                                auto it = row.find(col);
                                if (it == row.end()) {
                                    row.emplace(col, c * tc);
                                    if (row[col].is_zero()) row.erase(col);
                                } else {
                                    it->second += c * tc;
                                    if (it->second.is_zero()) row.erase(it);
                                }
                            }
                            if (!keep) break;
                        }
                    }
                    if (!keep || row.empty()) continue;
                    auto& ech = echelons[target_charge];
                    if (!ech.saturated()) ech.rows.insert(std::move(row));
                }
            }
        }
    }

    std::size_t rank = 0;
    for (auto& [charge, ech] : echelons) rank += ech.rows.rank();
    if (ambient_out) *ambient_out = ambient.total;
    if (rank_out) *rank_out = rank;
    return static_cast<long>(ambient.total) - static_cast<long>(rank);
}

} // namespace

CoinvariantEstimate truncated_coinvariant_dim(const FockVOA& on,
                                              const std::vector<const FockModule*>& modules,
                                              const std::vector<P1Point>& points, long cutoff,
                                              long pole_bound) {
    if (points.size() < 3)
        throw InsufficientPointsError("truncated_coinvariant_dim: need at least 3 points");
    if (points.size() != modules.size())
        throw DimensionMismatchError("truncated_coinvariant_dim: one module per point");
    {
        std::set<P1Point> distinct(points.begin(), points.end());
        if (distinct.size() != points.size())
            throw std::invalid_argument("truncated_coinvariant_dim: points must be distinct");
    }
    if (pole_bound < 0) pole_bound = cutoff + 2;

    CoinvariantEstimate est;
    est.cutoff = cutoff;
    for (long d = 0; d <= cutoff; ++d) {
        std::size_t ambient = 0;
        std::size_t rank = 0;
        const long value = estimate_at_cutoff(on, modules, points, d, pole_bound, &ambient, &rank);
        est.history.push_back(value);
        if (d == cutoff) {
            est.ambient_dim = ambient;
            est.relation_rank = rank;
            est.estimate = value;
        }
    }
    est.stabilized = est.history.size() >= 2 &&
                     est.history.back() == est.history[est.history.size() - 2];
    return est;
}

OracleComparison oracle_vs_fusion(long k, long max_cutoff, long pole_bound) {
    OracleComparison cmp;
    const CatalogEntry cat = lattice_catalog(k);
    const long window = 3 * max_cutoff + 2; // raw states stay well inside
    const FockVOA voa = FockVOA::lattice(k, std::max(max_cutoff, 2L));

    std::vector<FockModule> mods;
    mods.reserve(static_cast<std::size_t>(2 * k));
    for (long j = 0; j < 2 * k; ++j) mods.push_back(FockModule::lattice(voa, j, window));

    const std::vector<P1Point> points{P1Point::at(Rational(0)), P1Point::at(Rational(1)),
                                      P1Point::at(Rational(-1))};

    for (long a = 0; a < 2 * k; ++a)
        for (long b = 0; b < 2 * k; ++b)
            for (long c = 0; c < 2 * k; ++c) {
                std::vector<const FockModule*> triple{&mods[a], &mods[b], &mods[c]};
                const auto est = truncated_coinvariant_dim(voa, triple, points, max_cutoff,
                                                           pole_bound);
                OracleComparisonRow row;
                row.labels = {a, b, c};
                row.fusion = cat.ring.n(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                        static_cast<std::size_t>(c));
                row.estimate = est.estimate;
                row.stabilized = est.stabilized;
                row.match = est.stabilized && est.estimate == row.fusion;
                if (!row.match) cmp.all_match = false;
                cmp.rows.push_back(std::move(row));
            }
    return cmp;
}

} // namespace vblocks
