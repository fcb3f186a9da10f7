#include "vblocks/p1_section.hpp"

#include "vblocks/errors.hpp"
#include "vblocks/linalg.hpp"

#include <algorithm>
#include <set>

namespace vblocks {

void P1Section::add_pole_term(const Rational& p, long order, const Rational& c) {
    if (order < 1) throw std::invalid_argument("P1Section: pole order must be >= 1");
    if (c.is_zero()) return;
    auto& at = poles_[p];
    at[order] += c;
    if (at[order].is_zero()) at.erase(order);
    if (at.empty()) poles_.erase(p);
}

void P1Section::add_poly_term(long r, const Rational& c) {
    if (r < 0) throw std::invalid_argument("P1Section: polynomial degree must be >= 0");
    if (c.is_zero()) return;
    poly_[r] += c;
    if (poly_[r].is_zero()) poly_.erase(r);
}

LaurentJet P1Section::expand_at(const P1Point& pt, long n) const {
    LaurentJet jet(n, pt.infinite ? "w" : "s");
    if (!pt.infinite) {
        const Rational& p = pt.z;
        for (const auto& [q, terms] : poles_) {
            if (q == p) {
                for (const auto& [m, c] : terms)
                    if (-m < n) jet.add(-m, c);
            } else {
                // (z-q)^{-m} = sum_t binom(-m,t) (p-q)^{-m-t} s^t
                const Rational base = p - q;
                for (const auto& [m, c] : terms) {
                    Rational coeff = c;
                    for (long t = 0; t < m; ++t) coeff /= base; // (p-q)^{-m}
                    for (long t = 0; t < n; ++t) {
                        jet.add(t, coeff * binomial(-m, t));
                        coeff /= base;
                    }
                }
            }
        }
        for (const auto& [r, d] : poly_) {
            // (s+p)^r = sum_t binom(r,t) p^{r-t} s^t
            for (long t = 0; t <= r && t < n; ++t) {
                Rational pw(1);
                for (long u = 0; u < r - t; ++u) pw *= p;
                jet.add(t, d * binomial(r, t) * pw);
            }
        }
        return jet;
    }

    // w = 1/z chart: f(1/w) (-1)^k w^{-2k} (dw)^k
    const Rational sign = (k_ % 2 == 0) ? Rational(1) : Rational(-1);
    for (const auto& [q, terms] : poles_) {
        // (1/w - q)^{-m} = w^m (1 - qw)^{-m} = sum_t binom(m+t-1,t) q^t w^{m+t}
        for (const auto& [m, c] : terms) {
            Rational qt(1);
            for (long t = 0; m + t - 2 * k_ < n; ++t) {
                jet.add(m + t - 2 * k_, sign * c * binomial(m + t - 1, t) * qt);
                qt *= q;
            }
        }
    }
    for (const auto& [r, d] : poly_) {
        if (-r - 2 * k_ < n) jet.add(-r - 2 * k_, sign * d);
    }
    return jet;
}

std::vector<P1Point> P1Section::pole_locations() const {
    std::vector<P1Point> out;
    for (const auto& [p, terms] : poles_)
        if (!terms.empty()) out.push_back(P1Point::at(p));
    // infinity is a pole when the w-expansion has a negative exponent
    LaurentJet winf = expand_at(P1Point::infinity(), 1);
    if (winf.order() < 0) out.push_back(P1Point::infinity());
    return out;
}

Rational P1Section::residue_at(const P1Point& pt) const {
    LaurentJet jet = expand_at(pt, 1);
    if (jet.order() < -1 && jet.tail_order() <= -1)
        throw OrderViolationError("residue_at: insufficient jet data");
    return jet.coeff(-1);
}

std::string P1Section::str() const {
    std::string s;
    for (const auto& [p, terms] : poles_)
        for (const auto& [m, c] : terms) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*(z-" + p.str() + ")^-" + std::to_string(m);
        }
    for (const auto& [r, d] : poly_) {
        if (!s.empty()) s += " + ";
        s += d.str() + "*z^" + std::to_string(r);
    }
    if (s.empty()) s = "0";
    s += " (dz)^" + std::to_string(k_);
    return s;
}

P1Section prescribe_jets_p1(const JetPrescription& prob) {
    const long k = prob.k;
    const long n_mod = prob.modulus;
    if (prob.q_points.empty()) throw std::invalid_argument("prescribe_jets_p1: no q-points");
    if (prob.target >= prob.q_points.size())
        throw std::invalid_argument("prescribe_jets_p1: target index out of range");
    {
        std::set<P1Point> all(prob.q_points.begin(), prob.q_points.end());
        for (const auto& p : prob.pole_points) all.insert(p);
        if (all.size() != prob.q_points.size() + prob.pole_points.size())
            throw std::invalid_argument("prescribe_jets_p1: points must be pairwise distinct");
    }

    const long d = prob.exponent;
    const P1Point& target = prob.q_points[prob.target];
    // the ansatz must absorb every prescribed coefficient: N conditions per
    // q-point plus the polar window at the target and the chart twist
    const long big = static_cast<long>(prob.q_points.size()) * n_mod + std::labs(d) +
                     2 * std::labs(k) + 4;

    // ansatz basis: each entry is a single-term section
    struct Term {
        bool is_pole; // else polynomial
        Rational p;
        long m_or_r;
    };
    std::vector<Term> basis;
    bool inf_in_poles = false;
    for (const auto& pp : prob.pole_points) {
        if (pp.infinite) {
            inf_in_poles = true;
            continue;
        }
        for (long m = 1; m <= big; ++m) basis.push_back({true, pp.z, m});
    }
    if (!target.infinite && d < 0)
        for (long m = 1; m <= -d; ++m) basis.push_back({true, target.z, m});

    long rmax = std::max(0L, -2 * k); // globally regular polynomial degrees
    if (inf_in_poles) rmax = std::max(rmax, big);
    if (target.infinite) rmax = std::max(rmax, std::max(0L, -d - 2 * k));
    for (long r = 0; r <= rmax; ++r) basis.push_back({false, Rational(0), r});

    auto term_section = [&](const Term& t) {
        P1Section s(k);
        if (t.is_pole)
            s.add_pole_term(t.p, t.m_or_r, Rational(1));
        else
            s.add_poly_term(t.m_or_r, Rational(1));
        return s;
    };

    // constraint rows: jet coefficients at each q-point, exponents from the
    // lowest the ansatz can produce up to N-1; plus regularity at infinity
    // when it is not among the marked points.
    std::vector<QVector> rows;
    QVector rhs;
    auto add_constraints = [&](const P1Point& at, long lo, long hi, bool is_target) {
        std::vector<LaurentJet> jets;
        jets.reserve(basis.size());
        for (const auto& t : basis) jets.push_back(term_section(t).expand_at(at, hi));
        for (long e = lo; e < hi; ++e) {
            QVector row(basis.size(), Rational(0));
            bool any = false;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                row[b] = jets[b].coeff(e);
                if (!row[b].is_zero()) any = true;
            }
            const Rational want = (is_target && e == d) ? Rational(1) : Rational(0);
            if (!any && want.is_zero()) continue;
            rows.push_back(std::move(row));
            rhs.push_back(want);
        }
    };

    const long lo_bound = -(big + 2 * std::labs(k) + 1);
    for (std::size_t qi = 0; qi < prob.q_points.size(); ++qi)
        add_constraints(prob.q_points[qi], lo_bound, n_mod, qi == prob.target);

    bool inf_marked = inf_in_poles || target.infinite;
    for (const auto& qp : prob.q_points)
        if (qp.infinite) inf_marked = true;
    if (!inf_marked) add_constraints(P1Point::infinity(), lo_bound, 0, false);

    auto solution = solve_linear(std::move(rows), std::move(rhs));
    if (!solution)
        throw InfeasibleSystemError(
            "prescribe_jets_p1: no section satisfies the prescription (ansatz bound bug?)");

    P1Section out(k);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((*solution)[b].is_zero()) continue;
        if (basis[b].is_pole)
            out.add_pole_term(basis[b].p, basis[b].m_or_r, (*solution)[b]);
        else
            out.add_poly_term(basis[b].m_or_r, (*solution)[b]);
    }

    // round-trip guard: re-expand and verify the congruences
    for (std::size_t qi = 0; qi < prob.q_points.size(); ++qi) {
        LaurentJet jet = out.expand_at(prob.q_points[qi], n_mod);
        LaurentJet want(n_mod);
        if (qi == prob.target && d < n_mod) want.set(d, Rational(1));
        if (!jet.congruent(want, n_mod))
            throw InfeasibleSystemError("prescribe_jets_p1: round-trip verification failed");
    }
    return out;
}

} // namespace vblocks
