// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every check is exact; the cutoffs and windows are pinned here.

#include "vblocks/catalog.hpp"
#include "vblocks/factorization.hpp"
#include "vblocks/fock.hpp"
#include "vblocks/genus_zero.hpp"
#include "vblocks/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace vblocks;

namespace {

int failures = 0;

void criterion(int number, const std::string& text, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string error;
    try {
        pass = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", number,
                text.c_str(), secs, error.empty() ? "" : " -- ", error.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
}

bool checks_pass(const verify::Checks& checks) {
    bool ok = true;
    for (const auto& c : checks) {
        if (!c.pass) {
            std::printf("        failed check: %s %s\n", c.name.c_str(), c.detail.c_str());
            ok = false;
        }
    }
    return ok;
}

} // namespace

int main() {
    criterion(1, "group-like Verlinde closed form: rank(g,{}) = (2k)^g, g <= 4, k <= 3", [] {
        bool ok = true;
        for (long k = 1; k <= 3; ++k) {
            const RankEngine engine(lattice_catalog(k).ring);
            BigInt power = 1;
            for (long g = 1; g <= 4; ++g) {
                power *= BigInt(2 * k);
                if (engine.rank(g, {}) != power) ok = false;
                if (engine.rank_via_graph(trivalent_graph(g, engine.ring().vacuum())) != power)
                    ok = false;
            }
        }
        return ok;
    });

    criterion(2, "degeneration invariance, shipped catalogs + negative control (5 seeded trials)",
              [] { return checks_pass(verify::invariance_suite(5, 20260810)); });

    criterion(3, "genus-1 label count: rank(1,{}) = #labels for every shipped catalog", [] {
        bool ok = true;
        std::vector<CatalogEntry> cats;
        for (long k = 1; k <= 3; ++k) cats.push_back(lattice_catalog(k));
        for (long l = 1; l <= 2; ++l) cats.push_back(affine_sl2(l));
        cats.push_back(minimal_model(2, 5));
        cats.push_back(minimal_model(3, 4));
        for (const auto& cat : cats)
            if (RankEngine(cat.ring).rank(1, {}) != BigInt(static_cast<long>(cat.ring.size())))
                ok = false;
        return ok;
    });

    criterion(4, "paper formulas: c and weights for virasoro (2,5) and (3,4), Kac label counts",
              [] { return checks_pass(verify::catalog_suite()); });

    criterion(5, "sewing identity: deg A <= 3, 0 <= i,j <= 2, lattice k=1 modules, q-cutoff 6",
              [] { return checks_pass(verify::sewing_suite(3, 2, 6)); });

    criterion(6, "involutions: gamma^2 = id on V_<=6; theta^2 = id on V_<=4, |i| <= 4",
              [] { return checks_pass(verify::involution_suite(6, 4, 4)); });

    criterion(7, "bracket matches module commutators on the degree-<=3 lattice k=1 window",
              [] { return checks_pass(verify::bracket_suite(3, 2)); });

    criterion(8, "oracle equivalence: stabilized estimator equals fusion, lattice k=1 and k=2",
              [] {
                  bool ok = checks_pass(verify::oracle_suite(1, 4, -1));
                  ok = checks_pass(verify::oracle_suite(2, 4, -1)) && ok;
                  return ok;
              });

    criterion(9, "nodal gluing: k = 0,1,2 characterizations and the chiral sign predicate",
              [] { return checks_pass(verify::gluing_suite(50, 4711)); });

    criterion(10, "Riemann-Roch constructor: 20 seeded prescriptions, k in {-1..2}, N <= 6",
              [] { return checks_pass(verify::riemann_roch_suite(20, 97)); });

    criterion(11, "spectral rule: D eigenvalue d + c_W on every shipped weight, d <= 8",
              [] { return checks_pass(verify::spectral_suite(8)); });

    if (failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
