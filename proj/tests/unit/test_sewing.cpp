#include "vblocks/fock.hpp"
#include "vblocks/sewing.hpp"

#include <doctest.h>

using namespace vblocks;

TEST_CASE("sewing identity spec examples") {
    // A = omega, i = j: the L_0-diagonal case on the Heisenberg pi_0 module
    {
        const FockVOA heis = FockVOA::heisenberg(8);
        const FockModule pi0 = FockModule::heisenberg(heis, Rational(0), 6);
        CHECK(sewing_identity_check(heis.voa().omega(), 1, 1, pi0.module(), 6));
        CHECK(sewing_identity_check(heis.voa().omega(), 2, 2, pi0.module(), 6));
    }

    const FockVOA latt = FockVOA::lattice(1, 8);
    const auto& voa = latt.voa();
    const FockModule m1 = FockModule::lattice(latt, 1, 6);

    // A = 1, i = j: reduces to (id - id) 1^W = 0
    CHECK(sewing_identity_check(LinComb{{voa.vacuum(), Rational(1)}}, 1, 1, m1.module(), 6));

    // A = h (degree 1), i = 1, j = 0 on the lattice k=1 coset-1 module
    const auto h = *latt.id_of(FockState{Rational(0), {1}});
    CHECK(sewing_identity_check(LinComb{{h, Rational(1)}}, 1, 0, m1.module(), 4));
}

TEST_CASE("sewing identity is sensitive to the involution sign") {
    // replacing theta by -theta must break the identity: simulate by feeding
    // -A on one side only; the check uses the implemented theta, so flipping
    // the input sign flips exactly one term
    const FockVOA latt = FockVOA::lattice(1, 8);
    const auto& voa = latt.voa();
    const FockModule m0 = FockModule::lattice(latt, 0, 4);
    const auto h = *latt.id_of(FockState{Rational(0), {1}});

    // honest check passes ...
    CHECK(sewing_identity_check(LinComb{{h, Rational(1)}}, 1, 0, m0.module(), 4));
    // ... and the two terms individually are nonzero, so the cancellation is
    // genuine: h_(0) does not kill the charged components of 1^W.
    const auto& mod = m0.module();
    bool some_nonzero = false;
    for (long d = 0; d <= 4 && !some_nonzero; ++d)
        for (std::size_t m : mod.ids_at_level(d)) {
            auto r = mod.mode(h, 0, m);
            if (r && !r->empty()) some_nonzero = true;
        }
    CHECK(some_nonzero);
}

TEST_CASE("spectral shift examples") {
    SpectralBlock block;
    block.shift["W"] = Rational(1, 4);
    block.shift["V"] = Rational(0);

    QSeries onePlusQ(4);
    onePlusQ.set(0, Rational(1));
    onePlusQ.set(1, Rational(1));
    block.per_label.emplace("W", onePlusQ);

    QSeries justQ(4);
    justQ.set(1, Rational(1));
    block.per_label.emplace("V", justQ);

    const SpectralBlock out = spectral_apply_D(block);
    CHECK(out.per_label.at("W")[0] == Rational(1, 4));
    CHECK(out.per_label.at("W")[1] == Rational(5, 4));
    CHECK(out.per_label.at("V")[1] == Rational(1)); // q in the vacuum block stays q

    // constants scale by c_W
    SpectralBlock con;
    con.shift["W"] = Rational(3, 7);
    QSeries c0(2);
    c0.set(0, Rational(2));
    con.per_label.emplace("W", c0);
    CHECK(spectral_apply_D(con).per_label.at("W")[0] == Rational(6, 7));
}

TEST_CASE("sewn character values") {
    const FockVOA latt = FockVOA::lattice(1, 6);
    const FockModule m0 = FockModule::lattice(latt, 0, 6);
    const QSeries chi = sewn_character(m0.module(), 1);
    CHECK(chi[0] == Rational(1));
    CHECK(chi[1] == Rational(3));
    CHECK(sewn_character(m0.module(), 6) == lattice_graded_dimension(1, 0, 6));

    const SewingElement el = make_sewing_element(m0.module_ptr(), 6);
    for (long d = 0; d <= 6; ++d)
        CHECK(Rational(el.contraction(d)) == sewn_character(m0.module(), 6)[d]);

    const FockVOA heis = FockVOA::heisenberg(4);
    const FockModule pi0 = FockModule::heisenberg(heis, Rational(0), 4);
    CHECK(sewn_character(pi0.module(), 4) ==
          QSeries(4, {Rational(1), Rational(1), Rational(2), Rational(3), Rational(5)}));
}
