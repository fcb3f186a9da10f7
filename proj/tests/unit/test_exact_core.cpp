#include "vblocks/errors.hpp"
#include "vblocks/laurent.hpp"
#include "vblocks/linalg.hpp"
#include "vblocks/qseries.hpp"
#include "vblocks/rational.hpp"

#include <doctest.h>

#include <random>

using namespace vblocks;

TEST_CASE("rational normal form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2).denominator() == 2);
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational::parse("-22/5").str() == "-22/5");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK(binomial(-2, 3) == Rational(-4));
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(factorial(5) == Rational(120));
}

namespace {

// independent rank oracle: the largest r with a nonzero r x r minor
Rational minor_det(const std::vector<QVector>& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m[rows[0]][cols[0]];
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Rational term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::size_t>& acc,
                     std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (acc.size() == k) {
        fn(acc);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        acc.push_back(i);
        subsets_of_size(n, k, acc, i + 1, fn);
        acc.pop_back();
    }
}

std::size_t rank_by_minors(const std::vector<QVector>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (std::size_t r = std::min(rows, cols); r >= 1; --r) {
        bool found = false;
        std::vector<std::size_t> racc, cacc;
        subsets_of_size(rows, r, racc, 0, [&](const std::vector<std::size_t>& rs) {
            if (found) return;
            subsets_of_size(cols, r, cacc, 0, [&](const std::vector<std::size_t>& cs) {
                if (!found && !minor_det(m, rs, cs).is_zero()) found = true;
            });
        });
        if (found) return r;
    }
    return 0;
}

} // namespace

TEST_CASE("rank_of_span spec values") {
    CHECK(rank_of_span({{1, 0}, {0, 1}}) == 2);
    CHECK(rank_of_span({{1, 2}, {2, 4}}) == 1);
    CHECK(rank_of_span({{Rational(1, 2), Rational(1, 3)},
                        {Rational(1, 4), Rational(1, 6)},
                        {Rational(0), Rational(1)}}) == 2);
    CHECK_THROWS_AS(rank_of_span({{1, 0}, {1}}), DimensionMismatchError);
}

TEST_CASE("rank_of_span agrees with determinant minors on random matrices") {
    std::mt19937_64 rng(42);
    auto rnd = [&]() {
        return Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    };
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        std::vector<QVector> m(rows, QVector(cols));
        for (auto& row : m)
            for (auto& x : row) x = rnd();
        CHECK(rank_of_span(m) == rank_by_minors(m));
    }
}

TEST_CASE("quotient_dim spec values and rank identity") {
    CHECK(quotient_dim(3, {}) == 3);
    CHECK(quotient_dim(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 0);
    CHECK(quotient_dim(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, -1, 0}}) == 2);
    CHECK_THROWS_AS(quotient_dim(3, {{1, 0}}), DimensionMismatchError);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        std::vector<QVector> rel(rng() % 5, QVector(n));
        for (auto& row : rel)
            for (auto& x : row) x = Rational(static_cast<long>(rng() % 5) - 2);
        CHECK(quotient_dim(n, rel) + rank_of_span(rel) == n);
    }
}

TEST_CASE("row echelon incremental rank") {
    RowEchelon e;
    CHECK(e.insert({{0, Rational(1)}, {1, Rational(2)}}));
    CHECK_FALSE(e.insert({{0, Rational(2)}, {1, Rational(4)}}));
    CHECK(e.insert({{1, Rational(1)}}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({{0, Rational(5)}, {1, Rational(-3)}}));
}

TEST_CASE("qseries spec values") {
    QSeries a(2, {Rational(1), Rational(1)});        // 1 + q
    QSeries b(2, {Rational(1), Rational(-1)});       // 1 - q
    QSeries ab = qseries_mul(a, b);
    CHECK(ab == QSeries(2, {Rational(1), Rational(0), Rational(-1)}));

    QSeries q1(1, {Rational(0), Rational(1)});
    CHECK(qseries_mul(q1, q1).is_zero()); // q^2 truncated away

    QSeries c(2, {Rational(1), Rational(1), Rational(1)});
    QSeries d(2, {Rational(1), Rational(1)});
    CHECK(qseries_mul(c, d) == QSeries(2, {Rational(1), Rational(2), Rational(2)}));

    CHECK_THROWS_AS(qseries_mul(QSeries(1), QSeries(2)), CutoffMismatchError);
}

TEST_CASE("qseries ring laws at fixed cutoff") {
    std::mt19937_64 rng(3);
    auto random_series = [&](long cutoff) {
        QSeries s(cutoff);
        for (long d = 0; d <= cutoff; ++d)
            s.set(d, Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1));
        return s;
    };
    for (int trial = 0; trial < 15; ++trial) {
        const long cutoff = 3 + static_cast<long>(rng() % 4);
        QSeries a = random_series(cutoff);
        QSeries b = random_series(cutoff);
        QSeries c = random_series(cutoff);
        CHECK(qseries_mul(qseries_mul(a, b), c) == qseries_mul(a, qseries_mul(b, c)));
        CHECK(qseries_mul(a, b + c) == qseries_mul(a, b) + qseries_mul(a, c));
        CHECK(qseries_mul(a, QSeries::one(cutoff)) == a);
    }
}

TEST_CASE("laurent jets") {
    LaurentJet jet(3);
    jet.set(-2, Rational(1));
    jet.set(1, Rational(5));
    CHECK(jet.order() == -2);
    CHECK(jet.coeff(-2) == Rational(1));
    CHECK(jet.coeff(0) == Rational(0));
    CHECK_THROWS_AS(jet.coeff(3), OrderViolationError);
    jet.set(-2, Rational(0)); // zero coefficients are not stored
    CHECK(jet.terms().count(-2) == 0);
    CHECK(jet.order() == 1);

    LaurentJet a(4), b(2);
    a.set(0, Rational(1));
    a.set(3, Rational(2));
    b.set(0, Rational(1));
    LaurentJet sum = a + b;
    CHECK(sum.tail_order() == 2);       // knowledge shrinks to the weaker jet
    CHECK(sum.coeff(0) == Rational(2));
    CHECK(sum.terms().count(3) == 0);

    LaurentJet sh = a.shifted(-1, Rational(3));
    CHECK(sh.coeff(-1) == Rational(3));
    CHECK(sh.tail_order() == 3);

    CHECK(a.congruent(b, 1));        // both are 1 + O(s)
    CHECK_FALSE((a + a).congruent(b, 1));
    CHECK_THROWS_AS(a.congruent(b, 3), OrderViolationError); // b does not know s^2
}
