#include "vblocks/qseries.hpp"

#include "vblocks/errors.hpp"

namespace vblocks {

QSeries::QSeries(long cutoff, std::vector<Rational> coeff) : QSeries(cutoff) {
    if (coeff.size() > coeff_.size())
        throw std::invalid_argument("QSeries: more coefficients than cutoff allows");
    for (std::size_t d = 0; d < coeff.size(); ++d) coeff_[d] = std::move(coeff[d]);
}

QSeries QSeries::one(long cutoff) {
    QSeries s(cutoff);
    s.coeff_[0] = Rational(1);
    return s;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.cutoff() != cutoff()) throw CutoffMismatchError("QSeries: cutoff mismatch in +");
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] += o.coeff_[d];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.cutoff() != cutoff()) throw CutoffMismatchError("QSeries: cutoff mismatch in -");
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] -= o.coeff_[d];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeff_) x *= c;
    return *this;
}

QSeries qseries_mul(const QSeries& a, const QSeries& b) {
    if (a.cutoff() != b.cutoff())
        throw CutoffMismatchError("qseries_mul: cutoffs " + std::to_string(a.cutoff()) + " vs " +
                                  std::to_string(b.cutoff()));
    QSeries out(a.cutoff());
    for (long d = 0; d <= a.cutoff(); ++d) {
        Rational acc(0);
        for (long i = 0; i <= d; ++i) acc += a[i] * b[d - i];
        out.set(d, std::move(acc));
    }
    return out;
}

std::string QSeries::str() const {
    std::string s;
    for (long d = 0; d <= cutoff(); ++d) {
        if ((*this)[d].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += (*this)[d].str();
        if (d > 0) s += "*q^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

} // namespace vblocks
