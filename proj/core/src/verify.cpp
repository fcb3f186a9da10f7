#include "vblocks/verify.hpp"

#include "vblocks/catalog.hpp"
#include "vblocks/errors.hpp"
#include "vblocks/factorization.hpp"
#include "vblocks/fock.hpp"
#include "vblocks/genus_zero.hpp"
#include "vblocks/nodal.hpp"
#include "vblocks/p1_section.hpp"
#include "vblocks/sewing.hpp"
#include "vblocks/voa.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vblocks::verify {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
};

void add(Checks& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

} // namespace

bool all_pass(const Checks& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// involutions
// ---------------------------------------------------------------------------

Checks involution_suite(long gamma_window, long theta_degree, long theta_index_bound) {
    Checks out;
    const FockVOA heis = FockVOA::heisenberg(gamma_window);
    const FockVOA latt = FockVOA::lattice(1, gamma_window);

    for (const auto* f : {&heis, &latt}) {
        const auto& voa = f->voa();
        const std::string tag = (f == &heis) ? "heisenberg" : "lattice k=1";

        bool gamma_ok = true;
        for (std::size_t a = 0; a < voa.space().dim(); ++a) {
            const LinComb v{{a, Rational(1)}};
            if (!(gamma_action(gamma_action(v, voa), voa) == v)) gamma_ok = false;
        }
        add(out, "gamma involution on V_<=" + std::to_string(gamma_window) + " (" + tag + ")",
            gamma_ok);

        bool theta_ok = true;
        bool theta_deg = true;
        for (std::size_t a = 0; a < voa.space().dim(); ++a) {
            if (voa.degree(a) > theta_degree) continue;
            for (long i = -theta_index_bound; i <= theta_index_bound; ++i) {
                const ModeElement x = ModeElement::single(voa, a, i);
                if (x.is_zero()) continue;
                const ModeElement tx = theta_involution(x, voa);
                if (!(theta_involution(tx, voa) == x)) theta_ok = false;
                // degree flip: deg(A_[i]) = d must map into degree -d terms,
                // so L(V)_0 is preserved
                const Rational d = Rational(voa.degree(a)) - Rational(i) - Rational(1);
                for (const auto& t : tx.terms()) {
                    const Rational td =
                        Rational(voa.degree(t.basis_id)) - Rational(t.t_index) - Rational(1);
                    if (td != -d) theta_deg = false;
                }
            }
        }
        add(out, "theta involution, A in V_<=" + std::to_string(theta_degree) + " (" + tag + ")",
            theta_ok);
        add(out, "theta flips mode degree, preserves L(V)_0 (" + tag + ")", theta_deg);
    }

    // explicit values: theta(h_[0]) = h_[0]; theta(omega_[1]) = -omega_[1]
    {
        const auto& voa = heis.voa();
        const auto h = *heis.id_of(FockState{Rational(0), {1}});
        const ModeElement th = theta_involution(ModeElement::single(voa, h, 0), voa);
        add(out, "theta(h_[0]) = h_[0]", th == ModeElement::single(voa, h, 0));
        std::vector<ModeTerm> wt;
        for (const auto& [id, c] : voa.omega()) wt.push_back({id, 1, c});
        const ModeElement w1 = ModeElement::make(voa, wt);
        add(out, "theta(omega_[1]) = -omega_[1]",
            theta_involution(w1, voa) == w1.scaled(Rational(-1)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// brackets and module commutators
// ---------------------------------------------------------------------------

Checks bracket_suite(long degree_window, long index_bound) {
    Checks out;
    const FockVOA latt = FockVOA::lattice(1, 2 * degree_window + 2);
    const auto& voa = latt.voa();

    // vacuum mode centrality
    {
        bool central = true;
        const ModeElement one = ModeElement::single(voa, voa.vacuum(), -1);
        for (std::size_t a = 0; a < voa.space().dim(); ++a) {
            if (voa.degree(a) > degree_window) continue;
            for (long i = -index_bound; i <= index_bound; ++i) {
                if (!lie_bracket(one, ModeElement::single(voa, a, i), voa).is_zero())
                    central = false;
            }
        }
        add(out, "1_[-1] is central", central);
    }

    // module commutator consistency on both lattice k=1 modules
    {
        const FockModule m0 = FockModule::lattice(latt, 0, 2 * degree_window + 2);
        const FockModule m1 = FockModule::lattice(latt, 1, 2 * degree_window + 2);
        long checked = 0;
        bool ok = true;
        for (const auto* fm : {&m0, &m1}) {
            const auto& mod = fm->module();
            for (std::size_t a = 0; a < voa.space().dim() && ok; ++a) {
                const long da = voa.degree(a);
                if (da > degree_window || da == 0) continue;
                for (std::size_t b = 0; b < voa.space().dim() && ok; ++b) {
                    const long db = voa.degree(b);
                    if (db > degree_window || db == 0) continue;
                    for (long m = -index_bound; m <= index_bound && ok; ++m) {
                        for (long n = -index_bound; n <= index_bound && ok; ++n) {
                            const ModeElement br = lie_bracket(ModeElement::single(voa, a, m),
                                                               ModeElement::single(voa, b, n), voa);
                            for (std::size_t v = 0; v < mod.space().dim(); ++v) {
                                if (mod.level(v) > degree_window) continue;
                                auto bv = mod.mode(b, n, v);
                                auto av = mod.mode(a, m, v);
                                if (!bv || !av) continue;
                                auto abv = mod.apply_mode(LinComb{{a, Rational(1)}}, m, *bv);
                                auto bav = mod.apply_mode(LinComb{{b, Rational(1)}}, n, *av);
                                if (!abv || !bav) continue;
                                LinComb comm = *abv;
                                lincomb_add_scaled(comm, *bav, Rational(-1));
                                auto rhs = br.act(mod, LinComb{{v, Rational(1)}});
                                if (!rhs) continue;
                                ++checked;
                                if (!(comm == *rhs)) ok = false;
                            }
                        }
                    }
                }
            }
        }
        add(out, "bracket vs module commutators, lattice k=1, degree window " +
                     std::to_string(degree_window),
            ok && checked > 0, std::to_string(checked) + " commutators checked");
    }
    return out;
}

// ---------------------------------------------------------------------------
// sewing
// ---------------------------------------------------------------------------

Checks sewing_suite(long max_degree, long ij_bound, long q_cutoff) {
    Checks out;
    const FockVOA latt = FockVOA::lattice(1, std::max(2 * max_degree, q_cutoff));
    const auto& voa = latt.voa();
    const FockModule m0 = FockModule::lattice(latt, 0, q_cutoff);
    const FockModule m1 = FockModule::lattice(latt, 1, q_cutoff);

    long checks = 0;
    bool ok = true;
    std::string witness;
    for (const auto* fm : {&m0, &m1}) {
        for (std::size_t a = 0; a < voa.space().dim(); ++a) {
            const long k = voa.degree(a);
            if (k > max_degree) continue;
            for (long i = 0; i <= ij_bound; ++i)
                for (long j = 0; j <= ij_bound; ++j) {
                    ++checks;
                    if (!sewing_identity_check(LinComb{{a, Rational(1)}}, i, j, fm->module(),
                                               q_cutoff)) {
                        ok = false;
                        if (witness.empty())
                            witness = voa.space().label_of(a) + " i=" + std::to_string(i) +
                                      " j=" + std::to_string(j);
                    }
                }
        }
    }
    add(out, "sewing identity, deg <= " + std::to_string(max_degree) + ", i,j <= " +
                 std::to_string(ij_bound) + ", q-cutoff " + std::to_string(q_cutoff),
        ok && checks > 0, ok ? std::to_string(checks) + " identities" : witness);

    // contraction of 1^{W_i} is dim W_i
    {
        bool ok2 = true;
        for (const auto* fm : {&m0, &m1}) {
            const SewingElement el = make_sewing_element(fm->module_ptr(), q_cutoff);
            const QSeries chi = sewn_character(fm->module(), q_cutoff);
            for (long d = 0; d <= q_cutoff; ++d)
                if (Rational(el.contraction(d)) != chi[d]) ok2 = false;
        }
        add(out, "contraction of 1^{W_i} equals dim W_i", ok2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// nodal gluing
// ---------------------------------------------------------------------------

Checks gluing_suite(long trials, std::uint64_t seed) {
    Checks out;
    SplitMix64 rng(seed);
    auto rand_rat = [&]() { return Rational(rng.range(-6, 6), rng.range(1, 4)); };

    // k = 0: value matching
    bool k0 = true;
    for (long t = 0; t < trials; ++t) {
        const Rational v = rand_rat();
        KDifferentialJet jet;
        jet.k = 0;
        jet.plus = LaurentJet(3, "s+");
        jet.minus = LaurentJet(3, "s-");
        jet.plus.set(0, v);
        jet.plus.set(1, rand_rat());
        jet.minus.set(0, v);
        jet.minus.set(1, rand_rat());
        if (!glue_check(jet)) k0 = false;
        jet.minus.set(0, v + Rational(1));
        if (glue_check(jet)) k0 = false;
    }
    add(out, "glue_check k=0 value matching (" + std::to_string(trials) + " random jets)", k0);

    // k = 1: residue antisymmetry
    bool k1 = true;
    for (long t = 0; t < trials; ++t) {
        const Rational r = rand_rat();
        KDifferentialJet jet;
        jet.k = 1;
        jet.plus = LaurentJet(2, "s+");
        jet.minus = LaurentJet(2, "s-");
        jet.plus.set(-1, r);
        jet.plus.set(0, rand_rat());
        jet.minus.set(-1, -r);
        jet.minus.set(1, rand_rat());
        if (!glue_check(jet)) k1 = false;
        if (!r.is_zero()) {
            jet.minus.set(-1, r);
            if (glue_check(jet)) k1 = false;
        }
    }
    add(out, "glue_check k=1 residue antisymmetry", k1);

    // k = 2: signed equality, plus the order gate
    {
        KDifferentialJet jet;
        jet.k = 2;
        jet.plus = LaurentJet(1, "s+");
        jet.minus = LaurentJet(1, "s-");
        jet.plus.set(-2, Rational(1));
        jet.minus.set(-2, Rational(1));
        const bool same = glue_check(jet);
        jet.minus.set(-2, Rational(-1));
        const bool flipped = glue_check(jet);
        jet.minus.set(-2, Rational(1));
        jet.plus.set(-3, Rational(1)); // pole below -k: order gate must reject
        bool deep;
        {
            LaurentJet p2(1, "s+");
            p2.set(-3, Rational(1));
            p2.set(-2, Rational(1));
            KDifferentialJet j2{2, p2, jet.minus};
            deep = glue_check(j2);
        }
        add(out, "glue_check k=2 signed residues", same && !flipped && !deep);
    }

    // symmetry of the predicate under swapping branches with the sign
    bool sym = true;
    for (long t = 0; t < trials; ++t) {
        const long k = rng.range(0, 2);
        KDifferentialJet jet;
        jet.k = k;
        jet.plus = LaurentJet(2, "s+");
        jet.minus = LaurentJet(2, "s-");
        for (long e = -k; e < 2; ++e) {
            if (rng.below(2)) jet.plus.set(e, rand_rat());
            if (rng.below(2)) jet.minus.set(e, rand_rat());
        }
        KDifferentialJet swapped{jet.k, jet.minus, jet.plus};
        if (glue_check(jet) != glue_check(swapped)) sym = false;
    }
    add(out, "glue_check symmetric under branch swap", sym);

    // nodal chiral predicate on the lattice instance
    {
        const FockVOA latt = FockVOA::lattice(1, 6);
        const auto& voa = latt.voa();
        const auto h = *latt.id_of(FockState{Rational(0), {1}});

        auto jet_pair = [&](long kfield, long e, const Rational& cp, const Rational& cm) {
            KDifferentialJet j;
            j.k = kfield;
            j.plus = LaurentJet(e + 2, "s+");
            j.minus = LaurentJet(e + 2, "s-");
            if (!cp.is_zero()) j.plus.set(e, cp);
            if (!cm.is_zero()) j.minus.set(e, cm);
            return j;
        };

        // theta(h_[0]) = h_[0]: matched degree-1 data passes
        ChiralJetElement sigma;
        sigma.graded[1] = {LinComb{{h, Rational(1)}}, jet_pair(0, 0, Rational(3), Rational(3))};
        const bool accept = nodal_chiral_check(sigma, voa);

        // theta(omega_[1]) = -omega_[1]: un-flipped degree-2 data must fail
        ChiralJetElement sigma2;
        sigma2.graded[2] = {voa.omega(), jet_pair(-1, 1, Rational(1), Rational(1))};
        const bool reject = !nodal_chiral_check(sigma2, voa);
        ChiralJetElement sigma3;
        sigma3.graded[2] = {voa.omega(), jet_pair(-1, 1, Rational(1), Rational(-1))};
        const bool accept_flipped = nodal_chiral_check(sigma3, voa);

        // order gate
        ChiralJetElement sigma4;
        {
            KDifferentialJet j = jet_pair(0, 0, Rational(1), Rational(1));
            j.plus.set(-1, Rational(1)); // pole below k-1
            sigma4.graded[1] = {LinComb{{h, Rational(1)}}, j};
        }
        const bool order_gate = !nodal_chiral_check(sigma4, voa);

        // stability under deep-order perturbation (vanishing mod s^k data)
        ChiralJetElement sigma5 = sigma;
        {
            KDifferentialJet j = jet_pair(0, 0, Rational(3), Rational(3));
            j.plus.set(1, Rational(7)); // beyond the degree-0 window
            sigma5.graded[1] = {LinComb{{h, Rational(1)}}, j};
        }
        const bool stable = nodal_chiral_check(sigma5, voa) == accept;

        add(out, "nodal_chiral_check accepts theta-matched, rejects sign-flipped",
            accept && reject && accept_flipped && order_gate && stable);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Riemann-Roch jet prescription
// ---------------------------------------------------------------------------

Checks riemann_roch_suite(long instances, std::uint64_t seed) {
    Checks out;
    SplitMix64 rng(seed);
    const std::vector<Rational> coords{Rational(0), Rational(1), Rational(-1), Rational(2)};

    bool round_trip = true;
    bool residue_thm = true;
    long k1_count = 0;
    std::string witness;
    for (long t = 0; t < instances; ++t) {
        JetPrescription prob;
        prob.k = rng.range(-1, 2);
        prob.modulus = rng.range(1, 6);
        const long npts = rng.range(1, 4);
        for (long i = 0; i < npts; ++i) prob.q_points.push_back(P1Point::at(coords[i]));
        prob.target = rng.below(prob.q_points.size());
        prob.exponent = rng.range(-3, std::min(prob.modulus - 1, 3L));
        prob.pole_points = {P1Point::at(Rational(5))};
        if (rng.below(2)) prob.pole_points.push_back(P1Point::infinity());

        P1Section s(0);
        try {
            s = prescribe_jets_p1(prob);
        } catch (const std::exception& e) {
            round_trip = false;
            if (witness.empty()) witness = e.what();
            continue;
        }
        // independent re-expansion
        for (std::size_t qi = 0; qi < prob.q_points.size(); ++qi) {
            LaurentJet jet = s.expand_at(prob.q_points[qi], prob.modulus);
            LaurentJet want(prob.modulus);
            if (qi == prob.target && prob.exponent < prob.modulus)
                want.set(prob.exponent, Rational(1));
            if (!jet.congruent(want, prob.modulus)) round_trip = false;
        }
        if (prob.k == 1) {
            ++k1_count;
            const auto poles = s.pole_locations();
            Rational sum(0);
            for (const auto& pole : poles) sum += s.residue_at(pole);
            // q-points can carry poles of the solution as well
            for (const auto& q : prob.q_points)
                if (std::find(poles.begin(), poles.end(), q) == poles.end())
                    sum += s.residue_at(q);
            if (!sum.is_zero()) residue_thm = false;
        }
    }
    add(out, "prescribe_jets_p1 round trip (" + std::to_string(instances) + " seeded instances)",
        round_trip, witness);
    add(out, "global residue sum vanishes for k=1 outputs", residue_thm,
        std::to_string(k1_count) + " k=1 instances");
    return out;
}

// ---------------------------------------------------------------------------
// genus-zero oracle
// ---------------------------------------------------------------------------

Checks oracle_suite(long k, long cutoff, long pole_bound) {
    Checks out;
    const OracleComparison cmp = oracle_vs_fusion(k, cutoff, pole_bound);
    std::string witness;
    for (const auto& row : cmp.rows) {
        if (!row.match && witness.empty()) {
            witness = "(" + std::to_string(row.labels[0]) + "," + std::to_string(row.labels[1]) +
                      "," + std::to_string(row.labels[2]) + ") fusion " +
                      std::to_string(row.fusion) + " vs estimate " + std::to_string(row.estimate) +
                      (row.stabilized ? "" : " (not stabilized)");
        }
    }
    add(out, "oracle equals fusion on all " + std::to_string(cmp.rows.size()) +
                 " lattice k=" + std::to_string(k) + " triples (D=" + std::to_string(cutoff) + ")",
        cmp.all_match, witness);

    // charge-violating triples vanish at every cutoff
    {
        const FockVOA voa = FockVOA::lattice(k, std::max(cutoff, 2L));
        std::vector<FockModule> mods;
        for (long j = 0; j < 2 * k; ++j) mods.push_back(FockModule::lattice(voa, j, cutoff));
        const std::vector<P1Point> pts{P1Point::at(Rational(0)), P1Point::at(Rational(1)),
                                       P1Point::at(Rational(-1))};
        bool ok = true;
        for (long a = 0; a < 2 * k && ok; ++a)
            for (long b = 0; b < 2 * k && ok; ++b)
                for (long c = 0; c < 2 * k && ok; ++c) {
                    if ((a + b + c) % (2 * k) == 0) continue;
                    std::vector<const FockModule*> triple{&mods[a], &mods[b], &mods[c]};
                    const auto est =
                        truncated_coinvariant_dim(voa, triple, pts, cutoff, pole_bound);
                    for (long v : est.history)
                        if (v != 0) ok = false;
                }
        add(out, "charge-violating triples give 0 at every cutoff", ok);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ranks
// ---------------------------------------------------------------------------

Checks ranks_suite(long max_genus, long max_k) {
    Checks out;

    // group-like closed form against recursion and one trivalent graph each
    bool closed = true;
    bool graphs = true;
    for (long k = 1; k <= max_k; ++k) {
        const RankEngine engine(lattice_catalog(k).ring);
        BigInt power = 1;
        for (long g = 1; g <= max_genus; ++g) {
            power *= BigInt(2 * k);
            if (engine.rank(g, {}) != power) closed = false;
            if (engine.rank_via_graph(trivalent_graph(g, engine.ring().vacuum())) != power)
                graphs = false;
        }
    }
    add(out, "rank(g, {}) = (2k)^g, g <= " + std::to_string(max_genus) + ", k <= " +
                 std::to_string(max_k),
        closed);
    add(out, "trivalent-graph sums match the closed form", graphs);

    // genus-1 label counts across shipped catalogs
    {
        bool ok = true;
        std::vector<CatalogEntry> cats;
        for (long k = 1; k <= max_k; ++k) cats.push_back(lattice_catalog(k));
        cats.push_back(affine_sl2(1));
        cats.push_back(affine_sl2(2));
        cats.push_back(minimal_model(2, 5));
        cats.push_back(minimal_model(3, 4));
        for (const auto& cat : cats) {
            const RankEngine engine(cat.ring);
            if (engine.rank(1, {}) != BigInt(static_cast<long>(cat.ring.size()))) ok = false;
        }
        add(out, "rank(1, {}) = #labels for every shipped catalog", ok);
    }

    // vacuum propagation, duality symmetry, unit laws
    {
        bool prop = true;
        bool dualsym = true;
        bool units = true;
        for (const auto& cat : {lattice_catalog(2), affine_sl2(2), minimal_model(2, 5)}) {
            const RankEngine engine(cat.ring);
            const std::size_t L = cat.ring.size();
            SplitMix64 rng(7);
            for (long g = 0; g <= 2; ++g) {
                for (long trial = 0; trial < 20; ++trial) {
                    std::vector<std::size_t> s;
                    const long n = rng.range(0, 3);
                    for (long t = 0; t < n; ++t) s.push_back(rng.below(L));
                    auto with_vac = s;
                    with_vac.push_back(cat.ring.vacuum());
                    if (engine.rank(g, s) != engine.rank(g, with_vac)) prop = false;
                    std::vector<std::size_t> duals;
                    for (auto l : s) duals.push_back(cat.ring.dual(l));
                    if (engine.rank(g, s) != engine.rank(g, duals)) dualsym = false;
                }
            }
            for (std::size_t w = 0; w < L; ++w) {
                for (std::size_t y = 0; y < L; ++y)
                    if (engine.rank(0, {w, y}) != BigInt(y == cat.ring.dual(w) ? 1 : 0))
                        units = false;
                if (engine.rank(0, {w, cat.ring.dual(w), cat.ring.vacuum()}) != 1) units = false;
            }
        }
        add(out, "vacuum propagation at rank level", prop);
        add(out, "duality symmetry rank(g,S) = rank(g,S')", dualsym);
        add(out, "two-point and vacuum-three-point unit laws", units);
    }

    // Lee-Yang four-point sum and the (2,5) CLI examples
    {
        const RankEngine engine(minimal_model(2, 5).ring);
        const std::size_t x = 1 - engine.ring().vacuum();
        add(out, "virasoro(2,5) four-point rank = 2", engine.rank(0, {x, x, x, x}) == 2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// degeneration invariance
// ---------------------------------------------------------------------------

Checks invariance_suite(long trials, std::uint64_t seed) {
    Checks out;
    std::vector<CatalogEntry> cats;
    for (long k = 1; k <= 3; ++k) cats.push_back(lattice_catalog(k));
    cats.push_back(affine_sl2(1));
    cats.push_back(affine_sl2(2));
    cats.push_back(minimal_model(2, 5));
    cats.push_back(minimal_model(3, 4));

    bool agree = true;
    long queries = 0;
    std::string witness;
    for (const auto& cat : cats) {
        const RankEngine engine(cat.ring);
        const std::size_t L = cat.ring.size();
        // all insertion multisets of size <= 3 at every genus <= 2
        std::vector<std::vector<std::size_t>> multisets{{}};
        for (std::size_t a = 0; a < L; ++a) {
            multisets.push_back({a});
            for (std::size_t b = a; b < L; ++b) {
                multisets.push_back({a, b});
                for (std::size_t c = b; c < L; ++c) multisets.push_back({a, b, c});
            }
        }
        for (long g = 0; g <= 2; ++g) {
            for (const auto& s : multisets) {
                ++queries;
                const auto report = engine.invariance_check(g, s, trials, seed);
                if (!report.agree) {
                    agree = false;
                    if (witness.empty()) witness = cat.name + ": " + report.witness;
                }
            }
        }
    }
    add(out, "degeneration invariance over shipped catalogs (" + std::to_string(queries) +
                 " queries x " + std::to_string(trials) + " trials)",
        agree, witness);

    // negative control: a symmetric but unit-law-violating two-label tensor
    // is pairing-dependent, so random degenerations must disagree
    {
        FusionRing bad({"V", "X"}, 0, {0, 1}, {Rational(0), Rational(0)}, Rational(0));
        bad.set_n_symmetric(0, 0, 0, 1);
        bad.set_n_symmetric(0, 0, 1, 1); // corrupt: N(V,V,X) = 1
        bad.set_n_symmetric(0, 1, 1, 1);
        bad.set_n_symmetric(1, 1, 1, 0);
        const RankEngine engine(bad);
        const auto report = engine.invariance_check(0, {0, 0, 1, 1}, trials, seed);
        add(out, "non-associative negative control disagrees with a witness",
            !report.agree && !report.witness.empty(), report.witness);
    }
    return out;
}

// ---------------------------------------------------------------------------
// spectral bookkeeping
// ---------------------------------------------------------------------------

Checks spectral_suite(long max_power) {
    Checks out;
    std::vector<CatalogEntry> cats{lattice_catalog(1), lattice_catalog(2), lattice_catalog(3),
                                   affine_sl2(1),      affine_sl2(2),      minimal_model(2, 5),
                                   minimal_model(3, 4)};
    bool eigen = true;
    for (const auto& cat : cats) {
        SpectralBlock block;
        for (std::size_t l = 0; l < cat.ring.size(); ++l) {
            block.shift[cat.ring.label(l)] = cat.ring.weight(l);
            block.per_label.emplace(cat.ring.label(l), QSeries::one(max_power));
        }
        // apply D to each pure power q^d and read the eigenvalue
        for (long d = 0; d <= max_power; ++d) {
            SpectralBlock pure;
            pure.shift = block.shift;
            for (const auto& [label, unused] : block.per_label) {
                QSeries s(max_power);
                s.set(d, Rational(1));
                pure.per_label.emplace(label, std::move(s));
            }
            const SpectralBlock applied = spectral_apply_D(pure);
            for (const auto& [label, series] : applied.per_label) {
                for (long e = 0; e <= max_power; ++e) {
                    const Rational want =
                        (e == d) ? Rational(d) + pure.shift.at(label) : Rational(0);
                    if (series[e] != want) eigen = false;
                }
            }
        }
    }
    add(out, "D eigenvalue on the q^d component of block W is d + c_W, d <= " +
                 std::to_string(max_power),
        eigen);

    // Leibniz: D(q f) = q D(f) + q f blockwise
    {
        bool leibniz = true;
        SplitMix64 rng(11);
        for (long trial = 0; trial < 16; ++trial) {
            const Rational cw(rng.range(-3, 9), rng.range(1, 8));
            QSeries f(max_power);
            for (long d = 0; d <= max_power; ++d) f.set(d, Rational(rng.range(-5, 5)));
            QSeries qf(max_power);
            for (long d = 1; d <= max_power; ++d) qf.set(d, f[d - 1]);
            SpectralBlock bf, bqf;
            bf.shift["W"] = cw;
            bqf.shift["W"] = cw;
            bf.per_label.emplace("W", f);
            bqf.per_label.emplace("W", qf);
            const QSeries dqf = spectral_apply_D(bqf).per_label.at("W");
            const QSeries df = spectral_apply_D(bf).per_label.at("W");
            QSeries rhs(max_power);
            for (long d = 1; d <= max_power; ++d) rhs.set(d, df[d - 1] + f[d - 1]);
            if (!(dqf == rhs)) leibniz = false;
        }
        add(out, "D(q f) = q D(f) + q f per block", leibniz);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zhu-algebra identities
// ---------------------------------------------------------------------------

Checks zhu_suite(long cutoff) {
    Checks out;
    const FockVOA heis = FockVOA::heisenberg(cutoff + 2);
    const auto& voa = heis.voa();
    const auto h = *heis.id_of(FockState{Rational(0), {1}});
    const LinComb one{{voa.vacuum(), Rational(1)}};
    const LinComb hv{{h, Rational(1)}};

    bool unit = true;
    for (std::size_t b = 0; b < voa.space().dim(); ++b) {
        if (voa.degree(b) > cutoff) continue;
        const LinComb bv{{b, Rational(1)}};
        if (!(zhu_product(one, bv, voa) == bv)) unit = false;
    }
    add(out, "zhu_product(1, B) = B", unit);

    {
        const LinComb expect{{*heis.id_of(FockState{Rational(0), {1, 1}}), Rational(1)}};
        add(out, "heisenberg zhu_product(h, h) = h_(-1)h", zhu_product(hv, hv, voa) == expect);
    }

    // omega * omega = sum_j binom(2,j) omega_(j-1) omega
    {
        LinComb expect;
        for (long j = 0; j <= 2; ++j)
            lincomb_add_scaled(expect,
                               voa.apply_mode_checked(voa.omega(), j - 1, voa.omega(), "verify"),
                               binomial(2, j));
        add(out, "zhu_product(omega, omega) matches the binomial expansion",
            zhu_product(voa.omega(), voa.omega(), voa) == expect);
    }

    // membership examples
    {
        const LinComb zero;
        bool ok = zhu_O_membership(zero, voa, cutoff);
        LinComb gen{{*heis.id_of(FockState{Rational(0), {2}}), Rational(1)},
                    {h, Rational(1)}}; // h_(-2)1 + h_(-1)1
        ok = ok && zhu_O_membership(gen, voa, cutoff);
        ok = ok && !zhu_O_membership(hv, voa, std::min(cutoff, 4L));
        add(out, "O(V) membership: 0 and h_(-2)1 + h_(-1)1 in, h out", ok);
    }

    // zhu_product descends: A * g stays in O(V) for O(V)-generators g
    {
        bool descends = true;
        const long c = std::min(cutoff, 5L);
        const auto gens = zhu_O_generators(voa, c);
        for (std::size_t a = 0; a < voa.space().dim() && descends; ++a) {
            if (voa.degree(a) < 1 || voa.degree(a) > 2) continue;
            for (const auto& g : gens) {
                // stay inside the membership window
                bool inside = true;
                LinComb prod;
                try {
                    prod = zhu_product(LinComb{{a, Rational(1)}}, g, voa);
                } catch (const TruncationOverflowError&) {
                    inside = false;
                }
                if (!inside) continue;
                for (const auto& [id, cc] : prod)
                    if (voa.degree(id) > c) inside = false;
                if (inside && !zhu_O_membership(prod, voa, c)) descends = false;
            }
        }
        add(out, "zhu_product descends to A(V) (A * O(V) in O(V))", descends);
    }

    // contragredient action on M_0: o(1) = id, o(h) = -(lambda,h), o(omega) = c_W
    {
        const FockVOA latt = FockVOA::lattice(1, 6);
        const FockModule m1 = FockModule::lattice(latt, 1, 4);
        const auto& mod = m1.module();
        const auto& lvoa = latt.voa();
        bool ok = true;
        for (std::size_t psi_id : mod.ids_at_level(0)) {
            const LinComb psi{{psi_id, Rational(1)}};
            // o(1) psi = psi
            if (!(contragredient_action(LinComb{{lvoa.vacuum(), Rational(1)}}, psi, mod) == psi))
                ok = false;
            // o(h) psi = -(lambda, h) psi on the charge eigenvector
            const auto lh = *latt.id_of(FockState{Rational(0), {1}});
            const Rational lam = m1.state_of(psi_id).charge;
            const LinComb got = contragredient_action(LinComb{{lh, Rational(1)}}, psi, mod);
            const LinComb want = lincomb_scaled(psi, -m1.model().pairing(lam, Rational(1)));
            if (!(got == want)) ok = false;
            // o(omega) psi = c_W psi
            const LinComb gw = contragredient_action(lvoa.omega(), psi, mod);
            if (!(gw == lincomb_scaled(psi, m1.conformal_weight()))) ok = false;
        }
        add(out, "contragredient o(A) action on M_0 (1, h, omega examples)", ok);
    }
    return out;
}

// ---------------------------------------------------------------------------
// catalog formulas
// ---------------------------------------------------------------------------

Checks catalog_suite() {
    Checks out;
    {
        const CatalogEntry c25 = minimal_model(2, 5);
        bool ok = c25.ring.size() == 2 && c25.ring.central_charge() == Rational(-22, 5);
        std::vector<Rational> ws;
        for (std::size_t i = 0; i < c25.ring.size(); ++i) ws.push_back(c25.ring.weight(i));
        std::sort(ws.begin(), ws.end());
        ok = ok && ws == std::vector<Rational>{Rational(-1, 5), Rational(0)};
        add(out, "virasoro(2,5): c = -22/5, weights {0, -1/5}, 2 labels", ok);
    }
    {
        const CatalogEntry c34 = minimal_model(3, 4);
        bool ok = c34.ring.size() == 3 && c34.ring.central_charge() == Rational(1, 2);
        std::vector<Rational> ws;
        for (std::size_t i = 0; i < c34.ring.size(); ++i) ws.push_back(c34.ring.weight(i));
        std::sort(ws.begin(), ws.end());
        ok = ok && ws == std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 2)};
        add(out, "virasoro(3,4): c = 1/2, weights {0, 1/2, 1/16}, 3 labels", ok);
    }
    {
        const CatalogEntry c23 = minimal_model(2, 3);
        add(out, "virasoro(2,3): trivial theory with 1 label of weight 0",
            c23.ring.size() == 1 && c23.ring.weight(0) == Rational(0) &&
                c23.ring.central_charge() == Rational(0));
    }
    {
        bool ok = true;
        for (long p = 2; p <= 6; ++p)
            for (long q = p + 1; p * q <= 40; ++q) {
                if (std::gcd(p, q) != 1) continue;
                const CatalogEntry cat = minimal_model(p, q);
                if (static_cast<long>(cat.ring.size()) != (p - 1) * (q - 1) / 2) ok = false;
                std::vector<Rational> ws;
                for (std::size_t i = 0; i < cat.ring.size(); ++i) ws.push_back(cat.ring.weight(i));
                std::sort(ws.begin(), ws.end());
                if (std::adjacent_find(ws.begin(), ws.end()) != ws.end()) ok = false;
                if (!validate_fusion(cat.ring).ok()) ok = false;
            }
        add(out, "shipped (p,q) range: label count (p-1)(q-1)/2, distinct weights, validated",
            ok);
    }
    {
        const CatalogEntry l1 = affine_sl2(1);
        const CatalogEntry l2 = affine_sl2(2);
        bool ok = l1.ring.size() == 2 && l1.ring.n(1, 1, 0) == 1 && l1.ring.n(1, 1, 1) == 0;
        ok = ok && l2.ring.size() == 3 && l2.ring.n(1, 1, 2) == 1 && l2.ring.n(1, 1, 1) == 0;
        ok = ok && validate_fusion(l1.ring).ok() && validate_fusion(l2.ring).ok();
        add(out, "affine sl2 levels 1, 2: label counts and parity fusion entries", ok);
    }
    {
        const CatalogEntry k1 = lattice_catalog(1);
        const CatalogEntry k2 = lattice_catalog(2);
        bool ok = k1.ring.size() == 2 && k1.ring.dual(1) == 1 && k2.ring.dual(1) == 3;
        std::vector<Rational> ws{k1.ring.weight(0), k1.ring.weight(1)};
        std::sort(ws.begin(), ws.end());
        ok = ok && ws == std::vector<Rational>{Rational(0), Rational(1, 4)};
        ok = ok && validate_fusion(k1.ring).ok() && validate_fusion(k2.ring).ok();
        add(out, "lattice catalogs: duals and weights {0, 1/4} at k=1", ok);
    }
    {
        // validator negative controls
        FusionRing bad({"V", "W"}, 0, {0, 1}, {Rational(0), Rational(1)}, Rational(0));
        bad.set_n_symmetric(0, 0, 0, 1);
        bad.set_n_symmetric(0, 1, 1, 1);
        bad.set_n(0, 1, 0, 1); // unit-law violation at an ordered triple
        const auto report = validate_fusion(bad);
        bool found_unit = false;
        for (const auto& issue : report.issues)
            if (issue.constraint == "unit-law" || issue.constraint == "symmetry")
                found_unit = true;
        add(out, "validator flags a corrupted unit law with a witness", found_unit);

        // Lee-Yang passes
        FusionRing ly({"V", "X"}, 0, {0, 1}, {Rational(0), Rational(-1, 5)}, Rational(-22, 5));
        ly.set_n_symmetric(0, 0, 0, 1);
        ly.set_n_symmetric(0, 1, 1, 1);
        ly.set_n_symmetric(1, 1, 1, 1);
        add(out, "Lee-Yang table passes the validator", validate_fusion(ly).ok());
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"involution", "bracket", "sewing",    "gluing",  "riemann-roch", "oracle",
            "ranks",      "invariance", "spectral", "zhu",     "catalog"};
}

Checks run_suite(const std::string& name, long cutoff, std::uint64_t seed) {
    Checks out;
    auto append = [&](Checks more) {
        for (auto& c : more) out.push_back(std::move(c));
    };
    const bool all = name == "all";
    if (all || name == "involution")
        append(involution_suite(cutoff, std::min(cutoff, 4L), 4));
    if (all || name == "bracket") append(bracket_suite(3, 2));
    if (all || name == "sewing") append(sewing_suite(3, 2, cutoff));
    if (all || name == "gluing") append(gluing_suite(50, seed));
    if (all || name == "riemann-roch") append(riemann_roch_suite(20, seed));
    if (all || name == "oracle") append(oracle_suite(1, std::min(cutoff, 4L), -1));
    if (all || name == "ranks") append(ranks_suite(4, 3));
    if (all || name == "invariance") append(invariance_suite(5, seed));
    if (all || name == "spectral") append(spectral_suite(8));
    if (all || name == "zhu") append(zhu_suite(std::min(cutoff, 6L)));
    if (all || name == "catalog") append(catalog_suite());
    if (out.empty()) throw std::invalid_argument("unknown verify suite '" + name + "'");
    return out;
}

} // namespace vblocks::verify
