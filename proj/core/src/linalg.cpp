#include "vblocks/linalg.hpp"

#include "vblocks/errors.hpp"

#include <algorithm>
#include <utility>

namespace vblocks {

namespace {

// Clears denominators row by row; rank is unchanged by row scaling.
std::vector<std::vector<BigInt>> to_integer_rows(const std::vector<QVector>& vectors) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        BigInt lcm = 1;
        for (const auto& x : v) {
            const BigInt& d = x.denominator();
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<BigInt> row;
        row.reserve(v.size());
        for (const auto& x : v) row.push_back(x.numerator() * (lcm / x.denominator()));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::size_t rank_of_span(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t ncols = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != ncols)
            throw DimensionMismatchError("rank_of_span: ragged input (expected length " +
                                         std::to_string(ncols) + ", got " +
                                         std::to_string(v.size()) + ")");
    }

    auto m = to_integer_rows(vectors);
    const std::size_t nrows = m.size();

    // Bareiss fraction-free elimination with column pivot search.
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < nrows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == nrows) continue;
        std::swap(m[rank], m[pivot_row]);

        const BigInt pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[rank][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

std::size_t quotient_dim(std::size_t ambient_dim, const std::vector<QVector>& relations) {
    for (const auto& r : relations) {
        if (r.size() != ambient_dim)
            throw DimensionMismatchError("quotient_dim: relation of length " +
                                         std::to_string(r.size()) + " in ambient dimension " +
                                         std::to_string(ambient_dim));
    }
    return ambient_dim - rank_of_span(relations);
}

SparseRow RowEchelon::reduce(SparseRow row) const {
    while (!row.empty()) {
        const auto lead = row.begin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) break;
        const Rational c = row.begin()->second; // pivot of it->second is 1
        for (const auto& [col, val] : it->second) {
            auto jt = row.find(col);
            if (jt == row.end()) {
                row.emplace(col, -c * val);
            } else {
                jt->second -= c * val;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
    return row;
}

bool RowEchelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const Rational lead = row.begin()->second;
    for (auto& [col, val] : row) val /= lead;
    const std::size_t pivot = row.begin()->first;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (auto& [p, r] : rows_) {
        auto it = r.find(pivot);
        if (it == r.end()) continue;
        const Rational c = it->second;
        for (const auto& [col, val] : row) {
            auto jt = r.find(col);
            if (jt == r.end()) {
                r.emplace(col, -c * val);
            } else {
                jt->second -= c * val;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

std::optional<QVector> solve_linear(std::vector<QVector> a, QVector b) {
    const std::size_t nrows = a.size();
    if (b.size() != nrows) throw DimensionMismatchError("solve_linear: rhs length mismatch");
    const std::size_t ncols = nrows == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != ncols) throw DimensionMismatchError("solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pr = rank;
        while (pr < nrows && a[pr][col].is_zero()) ++pr;
        if (pr == nrows) continue;
        std::swap(a[rank], a[pr]);
        std::swap(b[rank], b[pr]);
        const Rational inv = Rational(1) / a[rank][col];
        for (std::size_t j = col; j < ncols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < nrows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    QVector x(ncols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace vblocks
