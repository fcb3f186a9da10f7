#include "vblocks/errors.hpp"
#include "vblocks/fock.hpp"
#include "vblocks/nodal.hpp"
#include "vblocks/p1_section.hpp"

#include <doctest.h>

using namespace vblocks;

TEST_CASE("k_residue") {
    LaurentJet jet(2);
    jet.set(-1, Rational(1));
    CHECK(k_residue(jet, 1) == Rational(1));

    LaurentJet j2(2);
    j2.set(-2, Rational(1));
    j2.set(-1, Rational(3));
    CHECK(k_residue(j2, 2) == Rational(1));
    CHECK_THROWS_AS(k_residue(j2, 1), OrderViolationError); // pole below -k

    LaurentJet j0(2);
    j0.set(0, Rational(5));
    j0.set(1, Rational(1));
    CHECK(k_residue(j0, 0) == Rational(5));

    LaurentJet shallow(-1, "s");
    CHECK_THROWS_AS(k_residue(shallow, 0), OrderViolationError); // tail too shallow
}

TEST_CASE("glue_check spec examples") {
    auto jet = [](long k, std::map<long, Rational> plus, std::map<long, Rational> minus) {
        KDifferentialJet j;
        j.k = k;
        j.plus = LaurentJet(3, "s+");
        j.minus = LaurentJet(3, "s-");
        for (auto& [e, c] : plus) j.plus.set(e, c);
        for (auto& [e, c] : minus) j.minus.set(e, c);
        return j;
    };

    // k=0: value matching
    CHECK(glue_check(jet(0, {{0, 2}, {1, 1}}, {{0, 2}, {1, -1}})));
    CHECK_FALSE(glue_check(jet(0, {{0, 2}}, {{0, 3}})));

    // k=1: residues (1, -1)
    CHECK(glue_check(jet(1, {{-1, 1}}, {{-1, -1}})));
    CHECK_FALSE(glue_check(jet(1, {{-1, 1}}, {{-1, 1}})));

    // k=2: residues (1, 1) pass, (1, -1) fail
    CHECK(glue_check(jet(2, {{-2, 1}}, {{-2, 1}})));
    CHECK_FALSE(glue_check(jet(2, {{-2, 1}}, {{-2, -1}})));

    // order gate: a pole below -k fails regardless of residues
    CHECK_FALSE(glue_check(jet(1, {{-2, 1}, {-1, 1}}, {{-1, -1}})));
}

TEST_CASE("glue_check branch-swap symmetry") {
    for (long k = 0; k <= 2; ++k) {
        for (long trial = 0; trial < 20; ++trial) {
            KDifferentialJet j;
            j.k = k;
            j.plus = LaurentJet(2, "s+");
            j.minus = LaurentJet(2, "s-");
            const long seedp = trial * 3 + k;
            for (long e = -k; e < 2; ++e) {
                if ((seedp + e) % 3 == 0) j.plus.set(e, Rational(seedp + e + 1));
                if ((seedp + e) % 2 == 0) j.minus.set(e, Rational(2 * seedp - e + 1));
            }
            KDifferentialJet swapped{j.k, j.minus, j.plus};
            CHECK(glue_check(j) == glue_check(swapped));
        }
    }
}

TEST_CASE("nodal chiral membership") {
    const FockVOA latt = FockVOA::lattice(1, 6);
    const auto& voa = latt.voa();
    const auto h = *latt.id_of(FockState{Rational(0), {1}});

    auto jets = [](long kfield, long tail, std::map<long, Rational> plus,
                   std::map<long, Rational> minus) {
        KDifferentialJet j;
        j.k = kfield;
        j.plus = LaurentJet(tail, "s+");
        j.minus = LaurentJet(tail, "s-");
        for (auto& [e, c] : plus) j.plus.set(e, c);
        for (auto& [e, c] : minus) j.minus.set(e, c);
        return j;
    };

    // degree-1 quasi-primary: theta(h_[0]) = h_[0], so equal coefficients pass
    {
        ChiralJetElement sigma;
        sigma.graded[1] = {LinComb{{h, Rational(1)}}, jets(0, 2, {{0, 5}}, {{0, 5}})};
        CHECK(nodal_chiral_check(sigma, voa));
        sigma.graded[1].jet.minus.set(0, Rational(4));
        CHECK_FALSE(nodal_chiral_check(sigma, voa));
    }

    // pole violating ord >= k-1 is rejected by the order gate
    {
        ChiralJetElement sigma;
        sigma.graded[1] = {LinComb{{h, Rational(1)}}, jets(0, 2, {{-1, 1}, {0, 1}}, {{0, 1}})};
        CHECK_FALSE(nodal_chiral_check(sigma, voa));
    }

    // omega component: theta(omega_[1]) = -omega_[1], the sign must flip
    {
        ChiralJetElement sigma;
        sigma.graded[2] = {voa.omega(), jets(-1, 3, {{1, 1}}, {{1, 1}})};
        CHECK_FALSE(nodal_chiral_check(sigma, voa));
        sigma.graded[2].jet.minus.set(1, Rational(-1));
        CHECK(nodal_chiral_check(sigma, voa));
    }

    // stability under deep-order perturbation
    {
        ChiralJetElement sigma;
        sigma.graded[1] = {LinComb{{h, Rational(1)}}, jets(0, 4, {{0, 5}}, {{0, 5}})};
        const bool before = nodal_chiral_check(sigma, voa);
        sigma.graded[1].jet.plus.set(2, Rational(9)); // vanishes mod s^k and deeper
        sigma.graded[1].jet.minus.set(3, Rational(-2));
        CHECK(nodal_chiral_check(sigma, voa) == before);
    }

    // mixed-degree element: h-part matched, omega-part flipped
    {
        ChiralJetElement sigma;
        sigma.graded[1] = {LinComb{{h, Rational(1)}}, jets(0, 2, {{0, 2}}, {{0, 2}})};
        sigma.graded[2] = {voa.omega(), jets(-1, 3, {{1, 7}}, {{1, -7}})};
        CHECK(nodal_chiral_check(sigma, voa));
    }
}

TEST_CASE("prescribe_jets_p1 spec examples") {
    // k=1, Q-points {0}, pole set {1}, target (0, -1), N=1: residue-1 form
    {
        JetPrescription prob;
        prob.k = 1;
        prob.q_points = {P1Point::at(Rational(0))};
        prob.target = 0;
        prob.exponent = -1;
        prob.modulus = 1;
        prob.pole_points = {P1Point::at(Rational(1))};
        const P1Section s = prescribe_jets_p1(prob);
        const LaurentJet jet = s.expand_at(P1Point::at(Rational(0)), 1);
        CHECK(jet.coeff(-1) == Rational(1));
        CHECK(jet.coeff(0) == Rational(0));

        // global residue sum over all poles vanishes
        const auto poles = s.pole_locations();
        Rational sum(0);
        for (const auto& pole : poles) sum += s.residue_at(pole);
        bool zero_counted = false;
        for (const auto& pole : poles)
            if (pole == P1Point::at(Rational(0))) zero_counted = true;
        if (!zero_counted) sum += s.residue_at(P1Point::at(Rational(0)));
        CHECK(sum.is_zero());
    }

    // k=0: constant 1 at Q1, 0 mod s^N at Q2
    {
        JetPrescription prob;
        prob.k = 0;
        prob.q_points = {P1Point::at(Rational(0)), P1Point::at(Rational(1))};
        prob.target = 0;
        prob.exponent = 0;
        prob.modulus = 3;
        prob.pole_points = {P1Point::at(Rational(2))};
        const P1Section s = prescribe_jets_p1(prob);
        CHECK(s.expand_at(P1Point::at(Rational(0)), 3).coeff(0) == Rational(1));
        CHECK(s.expand_at(P1Point::at(Rational(0)), 3).coeff(1) == Rational(0));
        const LaurentJet at_q2 = s.expand_at(P1Point::at(Rational(1)), 3);
        CHECK(at_q2.congruent(LaurentJet(3), 3));
    }

    // distinctness precondition
    {
        JetPrescription prob;
        prob.k = 0;
        prob.q_points = {P1Point::at(Rational(0))};
        prob.pole_points = {P1Point::at(Rational(0))};
        CHECK_THROWS_AS(prescribe_jets_p1(prob), std::invalid_argument);
    }
}

TEST_CASE("p1 section expansion at infinity") {
    // f = z (dz): at infinity f(1/w)(-w^{-2}) = -w^{-3}
    P1Section s(1);
    s.add_poly_term(1, Rational(1));
    const LaurentJet winf = s.expand_at(P1Point::infinity(), 1);
    CHECK(winf.coeff(-3) == Rational(-1));

    // (z-2)^{-1} (dz)^0 at infinity: w (1-2w)^{-1} = w + 2w^2 + ...
    P1Section t(0);
    t.add_pole_term(Rational(2), 1, Rational(1));
    const LaurentJet tinf = t.expand_at(P1Point::infinity(), 4);
    CHECK(tinf.coeff(1) == Rational(1));
    CHECK(tinf.coeff(2) == Rational(2));
    CHECK(tinf.coeff(3) == Rational(4));

    // residue theorem on an explicit 1-form: dz/(z(z-1)) has residues -1, 1
    P1Section u(1);
    u.add_pole_term(Rational(0), 1, Rational(-1));
    u.add_pole_term(Rational(1), 1, Rational(1));
    CHECK(u.residue_at(P1Point::at(Rational(0))) == Rational(-1));
    CHECK(u.residue_at(P1Point::at(Rational(1))) == Rational(1));
    CHECK(u.residue_at(P1Point::infinity()) == Rational(0));
}
