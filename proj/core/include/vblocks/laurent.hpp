#pragma once

#include "vblocks/rational.hpp"

#include <map>
#include <string>

namespace vblocks {

/// Truncated Laurent data of a local expansion: finitely many known
/// coefficients below `tail_order`, nothing known from `tail_order` on.
/// Zero coefficients are never stored and every stored exponent is
/// < tail_order.
class LaurentJet {
public:
    LaurentJet() : tail_order_(0) {}
    explicit LaurentJet(long tail_order, std::string var = "s")
        : var_(std::move(var)), tail_order_(tail_order) {}

    const std::string& var() const { return var_; }
    long tail_order() const { return tail_order_; }

    /// Coefficient at exponent e; e must be < tail_order (else the data is
    /// simply unknown and asking is a logic error).
    Rational coeff(long e) const;

    void set(long e, Rational c);
    void add(long e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }

    /// Smallest exponent with nonzero coefficient; tail_order() when none is
    /// stored (the jet is 0 as far as it is known).
    long order() const { return terms_.empty() ? tail_order_ : terms_.begin()->first; }

    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentJet& operator+=(const LaurentJet& o);
    LaurentJet& operator*=(const Rational& c);
    friend LaurentJet operator+(LaurentJet a, const LaurentJet& b) { return a += b; }
    friend LaurentJet operator*(LaurentJet a, const Rational& c) { return a *= c; }

    /// Multiplies by c * s^k (known data shifts with the tail marker).
    LaurentJet shifted(long k, const Rational& c = Rational(1)) const;

    /// Restricts knowledge to exponents < n.
    LaurentJet truncated(long n) const;

    /// Equality of all coefficients at exponents < n (both jets must know
    /// that range, i.e. have tail_order >= n).
    bool congruent(const LaurentJet& o, long n) const;

    std::string str() const;

private:
    std::string var_ = "s";
    std::map<long, Rational> terms_;
    long tail_order_;
};

} // namespace vblocks
