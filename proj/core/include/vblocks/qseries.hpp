#pragma once

#include "vblocks/rational.hpp"

#include <string>
#include <vector>

namespace vblocks {

/// Truncated power series in q with rational coefficients.  Coefficients are
/// stored for q^0..q^cutoff; all arithmetic truncates at the cutoff.
class QSeries {
public:
    explicit QSeries(long cutoff) : coeff_(static_cast<std::size_t>(cutoff) + 1) {
        if (cutoff < 0) throw std::invalid_argument("QSeries: negative cutoff");
    }
    QSeries(long cutoff, std::vector<Rational> coeff);

    static QSeries one(long cutoff);

    long cutoff() const { return static_cast<long>(coeff_.size()) - 1; }

    const Rational& operator[](long d) const { return coeff_.at(static_cast<std::size_t>(d)); }
    void set(long d, Rational value) { coeff_.at(static_cast<std::size_t>(d)) = std::move(value); }

    bool is_zero() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeff_ == b.coeff_; }

    std::string str() const;

private:
    std::vector<Rational> coeff_;
};

/// Cauchy product truncated at the common cutoff.  Throws CutoffMismatchError
/// when the cutoffs differ.
QSeries qseries_mul(const QSeries& a, const QSeries& b);

} // namespace vblocks
