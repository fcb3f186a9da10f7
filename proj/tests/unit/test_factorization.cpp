#include "vblocks/catalog.hpp"
#include "vblocks/errors.hpp"
#include "vblocks/factorization.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vblocks;

TEST_CASE("base cases and vacuum routing") {
    const CatalogEntry cat = lattice_catalog(2);
    const RankEngine engine(cat.ring);
    const std::size_t v = cat.ring.vacuum();

    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(engine.rank(0, {a, b}) == BigInt(b == cat.ring.dual(a) ? 1 : 0));
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(engine.rank(0, {a, b, c}) == BigInt(cat.ring.n(a, b, c)));
        }
    CHECK(engine.rank(0, {v}) == 1);
    CHECK(engine.rank(0, {1}) == 0);
    CHECK(engine.rank(0, {}) == 1);  // routed through R(0, {V})
    CHECK(engine.rank(1, {}) == 4);  // routed, then one non-separating step
    CHECK_THROWS_AS(engine.rank(-1, {}), UnstableQueryError);
    CHECK_THROWS_AS(engine.rank(0, {17}), UnstableQueryError);
}

TEST_CASE("spec rank examples") {
    CHECK(RankEngine(lattice_catalog(1).ring).rank(2, {}) == 4);
    CHECK(RankEngine(lattice_catalog(1).ring).rank(3, {}) == 8);
    CHECK(RankEngine(lattice_catalog(2).ring).rank(1, {}) == 4);

    const CatalogEntry ly = minimal_model(2, 5);
    const std::size_t x = 1 - ly.ring.vacuum();
    CHECK(RankEngine(ly.ring).rank(0, {x, x, x, x}) == 2);
}

TEST_CASE("genus-1 rank equals the label count for every shipped catalog") {
    std::vector<CatalogEntry> cats;
    for (long k = 1; k <= 3; ++k) cats.push_back(lattice_catalog(k));
    for (long l = 1; l <= 2; ++l) cats.push_back(affine_sl2(l));
    cats.push_back(minimal_model(2, 5));
    cats.push_back(minimal_model(3, 4));
    for (const auto& cat : cats)
        CHECK(RankEngine(cat.ring).rank(1, {}) ==
              BigInt(static_cast<long>(cat.ring.size())));
}

TEST_CASE("group-like closed form (2k)^g as a property") {
    for (long k = 1; k <= 3; ++k) {
        const CatalogEntry cat = lattice_catalog(k);
        // every row of N is a permutation: group-like fusion
        for (std::size_t a = 0; a < cat.ring.size(); ++a)
            for (std::size_t b = 0; b < cat.ring.size(); ++b) {
                long total = 0;
                for (std::size_t c = 0; c < cat.ring.size(); ++c) total += cat.ring.n(a, b, c);
                CHECK(total == 1);
            }
        const RankEngine engine(cat.ring);
        BigInt power = 1;
        for (long g = 1; g <= 4; ++g) {
            power *= BigInt(2 * k);
            CHECK(engine.rank(g, {}) == power);
        }
    }
}

TEST_CASE("graph rank examples") {
    const CatalogEntry cat = lattice_catalog(1);
    const RankEngine engine(cat.ring);

    // single vertex of genus 1, no edges: routed to rank(1, {}) = |W|
    {
        StableGraph g;
        g.vertices.push_back({1});
        CHECK(engine.rank_via_graph(g) == 2);
    }

    // two genus-0 vertices joined by an edge: sum_T N(w1,w2,T) N(T',w3,w4)
    {
        StableGraph g;
        g.vertices.push_back({0});
        g.vertices.push_back({0});
        g.edges.emplace_back(0, 1);
        g.legs = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
        BigInt expect = 0;
        for (std::size_t t = 0; t < 2; ++t)
            expect += BigInt(cat.ring.n(0, 1, t) * cat.ring.n(cat.ring.dual(t), 1, 0));
        CHECK(engine.rank_via_graph(g) == expect);
        CHECK(engine.rank_via_graph(g) == engine.rank(0, {0, 1, 1, 0}));
    }

    // genus-0 vertex with a self-loop and one vacuum leg: equals rank(1, {})
    {
        StableGraph g;
        g.vertices.push_back({0});
        g.edges.emplace_back(0, 0);
        g.legs = {{0, cat.ring.vacuum()}};
        CHECK(engine.rank_via_graph(g) == engine.rank(1, {}));
    }

    // unstable vertex rejected
    {
        StableGraph g;
        g.vertices.push_back({0});
        g.legs = {{0, 0}, {0, 0}};
        CHECK_THROWS_AS(engine.rank_via_graph(g), UnstableQueryError);
    }
}

TEST_CASE("graph rank is independent of the graph model") {
    // all stable graphs for (g, legs) within a small range must agree
    for (long k = 1; k <= 2; ++k) {
        const CatalogEntry cat = lattice_catalog(k);
        const RankEngine engine(cat.ring);
        const std::size_t L = cat.ring.size();

        // (g=1, one leg w): vertex g1 with leg, or g0 with self-loop + leg
        for (std::size_t w = 0; w < L; ++w) {
            StableGraph a;
            a.vertices.push_back({1});
            a.legs = {{0, w}};
            StableGraph b;
            b.vertices.push_back({0});
            b.edges.emplace_back(0, 0);
            b.legs = {{0, w}};
            CHECK(engine.rank_via_graph(a) == engine.rank_via_graph(b));
            CHECK(engine.rank_via_graph(a) == engine.rank(1, {w}));
        }

        // (g=2, no legs): five stable-graph models
        std::vector<StableGraph> models;
        {
            StableGraph g;
            g.vertices.push_back({2});
            models.push_back(g);
        }
        {
            StableGraph g;
            g.vertices.push_back({1});
            g.edges.emplace_back(0, 0);
            models.push_back(g);
        }
        {
            StableGraph g;
            g.vertices = {{1}, {1}};
            g.edges.emplace_back(0, 1);
            models.push_back(g);
        }
        {
            StableGraph g; // theta graph
            g.vertices = {{0}, {0}};
            g.edges.emplace_back(0, 1);
            g.edges.emplace_back(0, 1);
            g.edges.emplace_back(0, 1);
            models.push_back(g);
        }
        {
            StableGraph g; // dumbbell
            g.vertices = {{0}, {0}};
            g.edges.emplace_back(0, 0);
            g.edges.emplace_back(1, 1);
            g.edges.emplace_back(0, 1);
            models.push_back(g);
        }
        const BigInt expect = engine.rank(2, {});
        for (const auto& g : models) {
            CHECK(g.total_genus() == 2);
            CHECK(engine.rank_via_graph(g) == expect);
        }

        // (g=1, three legs): one-vertex model vs loop + separate vertex
        for (std::size_t w = 0; w < L; ++w) {
            StableGraph a;
            a.vertices.push_back({1});
            a.legs = {{0, w}, {0, 0}, {0, cat.ring.dual(w)}};
            StableGraph b;
            b.vertices = {{0}, {1}};
            b.edges.emplace_back(0, 1);
            b.legs = {{0, w}, {0, 0}, {0, cat.ring.dual(w)}};
            CHECK(engine.rank_via_graph(a) == engine.rank_via_graph(b));
        }
    }
}

TEST_CASE("edge orientation is immaterial") {
    const CatalogEntry cat = lattice_catalog(2); // nontrivial duality
    const RankEngine engine(cat.ring);
    StableGraph g;
    g.vertices = {{0}, {0}};
    g.edges.emplace_back(0, 1);
    g.legs = {{0, 1}, {0, 2}, {1, 3}, {1, 2}};
    StableGraph flipped = g;
    flipped.edges[0] = {1, 0};
    CHECK(engine.rank_via_graph(g) == engine.rank_via_graph(flipped));
}

TEST_CASE("disconnected graphs multiply") {
    const CatalogEntry cat = lattice_catalog(1);
    const RankEngine engine(cat.ring);
    StableGraph g;
    g.vertices = {{1}, {2}};
    CHECK(engine.rank_via_graph(g) == engine.rank(1, {}) * engine.rank(2, {}));
}

TEST_CASE("invariance check agrees on valid rings and catches corruption") {
    const RankEngine good(lattice_catalog(2).ring);
    const auto ok = good.invariance_check(2, {}, 5, 1);
    CHECK(ok.agree);
    CHECK(ok.canonical == 16);
    for (const auto& v : ok.trial_values) CHECK(v == 16);

    FusionRing bad({"V", "X"}, 0, {0, 1}, {Rational(0), Rational(0)}, Rational(0));
    bad.set_n_symmetric(0, 0, 0, 1);
    bad.set_n_symmetric(0, 0, 1, 1); // unit-law corruption: pairing-dependent sums
    bad.set_n_symmetric(0, 1, 1, 1);
    CHECK_FALSE(validate_fusion(bad).ok());
    const RankEngine engine(bad);
    const auto report = engine.invariance_check(0, {0, 0, 1, 1}, 5, 1);
    CHECK_FALSE(report.agree);
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("stable graph document parsing") {
    const CatalogEntry cat = lattice_catalog(1);
    const std::string doc = R"({
        "vertices": [{"genus": 0}, {"genus": 0}],
        "edges": [[0, 1], [0, 1], [0, 1]],
        "legs": []
    })";
    const StableGraph g = StableGraph::from_json(doc, cat.ring);
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 3);
    CHECK(g.total_genus() == 2);
    CHECK(g.is_stable());
    CHECK(RankEngine(cat.ring).rank_via_graph(g) == 4);

    CHECK_THROWS(StableGraph::from_json(R"({"vertices":[],"edges":[[0,1]]})", cat.ring));
    CHECK_THROWS(
        StableGraph::from_json(R"({"vertices":[{"genus":0}],"legs":[{"vertex":0,"label":"zz"}]})",
                               cat.ring));
}

TEST_CASE("trivalent graph family") {
    for (long g = 2; g <= 4; ++g) {
        const StableGraph graph = trivalent_graph(g, 0);
        CHECK(graph.total_genus() == g);
        CHECK(graph.is_stable());
        for (std::size_t v = 0; v < graph.vertices.size(); ++v) CHECK(graph.valence(v) == 3);
    }
    const StableGraph g1 = trivalent_graph(1, 0);
    CHECK(g1.total_genus() == 1);
    CHECK(g1.is_stable());
}
