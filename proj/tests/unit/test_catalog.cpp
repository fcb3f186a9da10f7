#include "vblocks/catalog.hpp"
#include "vblocks/errors.hpp"
#include "vblocks/fock.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

using namespace vblocks;

TEST_CASE("minimal model values from the Kac formulas") {
    const CatalogEntry c25 = minimal_model(2, 5);
    CHECK(c25.ring.size() == 2);
    CHECK(c25.ring.central_charge() == Rational(-22, 5));
    std::vector<Rational> w25{c25.ring.weight(0), c25.ring.weight(1)};
    std::sort(w25.begin(), w25.end());
    CHECK(w25 == std::vector<Rational>{Rational(-1, 5), Rational(0)});

    const CatalogEntry c34 = minimal_model(3, 4);
    CHECK(c34.ring.size() == 3);
    CHECK(c34.ring.central_charge() == Rational(1, 2));
    std::vector<Rational> w34;
    for (std::size_t i = 0; i < 3; ++i) w34.push_back(c34.ring.weight(i));
    std::sort(w34.begin(), w34.end());
    CHECK(w34 == std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 2)});

    const CatalogEntry c23 = minimal_model(2, 3);
    CHECK(c23.ring.size() == 1);
    CHECK(c23.ring.central_charge() == Rational(0));
    CHECK(c23.ring.weight(0) == Rational(0));

    CHECK_THROWS_AS(minimal_model(4, 6), InvalidCatalogError); // not coprime
    CHECK_THROWS_AS(minimal_model(5, 3), InvalidCatalogError); // p < q violated
    CHECK_THROWS_AS(minimal_model(1, 2), InvalidCatalogError);
}

TEST_CASE("shipped minimal models validate with distinct weights") {
    for (long p = 2; p <= 6; ++p)
        for (long q = p + 1; p * q <= 40; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const CatalogEntry cat = minimal_model(p, q);
            CHECK(static_cast<long>(cat.ring.size()) == (p - 1) * (q - 1) / 2);
            CHECK(validate_fusion(cat.ring).ok());
            std::vector<Rational> ws;
            for (std::size_t i = 0; i < cat.ring.size(); ++i) ws.push_back(cat.ring.weight(i));
            std::sort(ws.begin(), ws.end());
            CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
        }
}

TEST_CASE("lee-yang fusion is the fibonacci rule") {
    const CatalogEntry c25 = minimal_model(2, 5);
    const std::size_t v = c25.ring.vacuum();
    const std::size_t x = 1 - v;
    CHECK(c25.ring.n(x, x, x) == 1);
    CHECK(c25.ring.n(x, x, v) == 1);
    CHECK(c25.ring.n(v, v, x) == 0);
}

TEST_CASE("affine sl2 tables") {
    const CatalogEntry l1 = affine_sl2(1);
    CHECK(l1.ring.size() == 2);
    CHECK(l1.ring.n(1, 1, 0) == 1); // Z/2 group law
    CHECK(l1.ring.n(1, 1, 1) == 0);
    CHECK(l1.ring.n(1, 0, 1) == 1);
    CHECK(validate_fusion(l1.ring).ok());

    const CatalogEntry l2 = affine_sl2(2);
    CHECK(l2.ring.size() == 3);
    CHECK(l2.ring.n(1, 1, 2) == 1);
    CHECK(l2.ring.n(1, 1, 1) == 0); // parity
    CHECK(l2.ring.n(1, 1, 0) == 1);
    CHECK(l2.ring.n(2, 2, 2) == 0); // truncation at the level
    CHECK(validate_fusion(l2.ring).ok());
    CHECK(l2.ring.weight(1) == Rational(3, 16));

    CHECK_THROWS_AS(affine_sl2(0), InvalidCatalogError);
}

TEST_CASE("lattice catalogs") {
    const CatalogEntry k1 = lattice_catalog(1);
    CHECK(k1.ring.size() == 2);
    CHECK(k1.ring.dual(1) == 1); // -1 = 1 mod 2
    std::vector<Rational> ws{k1.ring.weight(0), k1.ring.weight(1)};
    std::sort(ws.begin(), ws.end());
    CHECK(ws == std::vector<Rational>{Rational(0), Rational(1, 4)});
    CHECK(validate_fusion(k1.ring).ok());

    const CatalogEntry k2 = lattice_catalog(2);
    CHECK(k2.ring.dual(1) == 3);
    CHECK(k2.ring.n(1, 1, 2) == 1);
    CHECK(k2.ring.n(1, 1, 1) == 0);
    CHECK(validate_fusion(k2.ring).ok());

    // weights come from the implemented L_0, assert against the module action
    const FockVOA voa = FockVOA::lattice(2, 4);
    for (long j = 0; j < 4; ++j) {
        const FockModule mod = FockModule::lattice(voa, j, 2);
        for (std::size_t pid : mod.module().ids_at_level(0)) {
            const LinComb psi{{pid, Rational(1)}};
            const auto l0 = mod.module().apply_mode(voa.voa().omega(), 1, psi);
            REQUIRE(l0.has_value());
            CHECK(*l0 == lincomb_scaled(psi, k2.ring.weight(static_cast<std::size_t>(j))));
        }
    }
}

TEST_CASE("validator witnesses") {
    // unit-law failure: N(V,W,W) = 1 with W != W'
    FusionRing ring({"V", "W", "Wbar"}, 0, {0, 2, 1}, {Rational(0), Rational(1), Rational(1)},
                    Rational(0));
    ring.set_n_symmetric(0, 0, 0, 1);
    ring.set_n_symmetric(0, 1, 2, 1);
    ring.set_n_symmetric(0, 1, 1, 1); // violates the unit law
    const auto report = validate_fusion(ring);
    CHECK_FALSE(report.ok());
    bool witnessed = false;
    for (const auto& issue : report.issues)
        if (issue.constraint == "unit-law" &&
            std::find(issue.witness.begin(), issue.witness.end(), "W") != issue.witness.end())
            witnessed = true;
    CHECK(witnessed);

    // asymmetric raw tensor is caught
    FusionRing asym({"V", "X"}, 0, {0, 1}, {Rational(0), Rational(0)}, Rational(0));
    asym.set_n_symmetric(0, 0, 0, 1);
    asym.set_n_symmetric(1, 1, 1, 1);
    asym.set_n(1, 1, 0, 1); // only one ordering of (V, X, X)
    bool sym_issue = false;
    for (const auto& issue : validate_fusion(asym).issues)
        if (issue.constraint == "symmetry") sym_issue = true;
    CHECK(sym_issue);
}

TEST_CASE("fusion document round trip") {
    const CatalogEntry cat = minimal_model(3, 4);
    const std::string doc = fusion_to_json(cat.ring, cat.provenance_notes);
    const FusionRing back = fusion_from_json(doc);
    CHECK(back.size() == cat.ring.size());
    CHECK(back.central_charge() == cat.ring.central_charge());
    for (std::size_t a = 0; a < back.size(); ++a) {
        const auto idx = cat.ring.index_of(back.label(a));
        REQUIRE(idx.has_value());
        CHECK(back.weight(a) == cat.ring.weight(*idx));
    }
    for (std::size_t a = 0; a < back.size(); ++a)
        for (std::size_t b = 0; b < back.size(); ++b)
            for (std::size_t c = 0; c < back.size(); ++c) {
                const auto ia = *cat.ring.index_of(back.label(a));
                const auto ib = *cat.ring.index_of(back.label(b));
                const auto ic = *cat.ring.index_of(back.label(c));
                CHECK(back.n(a, b, c) == cat.ring.n(ia, ib, ic));
            }
    CHECK(validate_fusion(back).ok());
}

TEST_CASE("document loader rejects invalid rings unless forced") {
    const std::string path = "test_bad_ring_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"labels":["V","W"],"vacuum":"V","dual":[["V","V"],["W","W"]],
                   "central_charge":"0","weights":{"V":"0","W":"1"},
                   "fusion":[["V","V","V",1],["V","W","W",1],["V","V","W",1]]})";
    }
    CHECK_THROWS_AS(load_catalog_file(path), FusionValidationError);
    const CatalogEntry forced = load_catalog_file(path, /*force=*/true);
    CHECK(forced.ring.size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("selector resolution") {
    CHECK(resolve_catalog("lattice:2").k == 2);
    CHECK(resolve_catalog("sl2:1").level == 1);
    CHECK(resolve_catalog("affine_sl2:2").level == 2);
    CHECK(resolve_catalog("virasoro:2,5").ring.size() == 2);
    CHECK_THROWS_AS(resolve_catalog("nope:1"), InvalidCatalogError);
    CHECK_THROWS_AS(resolve_catalog("virasoro:25"), InvalidCatalogError);

    const auto& ring = resolve_catalog("virasoro:2,5").ring;
    CHECK(resolve_label(ring, "V") == ring.vacuum());
    CHECK(resolve_label(ring, "X") == 1 - ring.vacuum());
    CHECK_FALSE(resolve_label(ring, "Y").has_value());
}
