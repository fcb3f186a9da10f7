#pragma once

#include "vblocks/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace vblocks {

/// A point of P^1 with rational coordinate, or the point at infinity.
struct P1Point {
    bool infinite = false;
    Rational z;

    static P1Point at(Rational coord) { return {false, std::move(coord)}; }
    static P1Point infinity() { return {true, Rational(0)}; }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.infinite == b.infinite && (a.infinite || a.z == b.z);
    }
    friend bool operator<(const P1Point& a, const P1Point& b) {
        if (a.infinite != b.infinite) return !a.infinite; // finite points first
        return !a.infinite && a.z < b.z;
    }
    std::string str() const { return infinite ? "inf" : z.str(); }
};

/// Rational k-differential f(z) (dz)^k on P^1 in explicit partial-fraction
/// form: f = sum_{p,m} c_{p,m} (z-p)^{-m} + sum_r d_r z^r.  Expansions are
/// exact; at infinity the chart is w = 1/z with (dz)^k = (-1)^k w^{-2k}(dw)^k.
class P1Section {
public:
    explicit P1Section(long k) : k_(k) {}

    long k() const { return k_; }

    void add_pole_term(const Rational& p, long order, const Rational& c);
    void add_poly_term(long r, const Rational& c);

    const std::map<Rational, std::map<long, Rational>>& poles() const { return poles_; }
    const std::map<long, Rational>& poly() const { return poly_; }

    /// Laurent jet at the point in its local coordinate, known through
    /// exponents < n.
    LaurentJet expand_at(const P1Point& pt, long n) const;

    /// Points where the section can have a pole (finite partial-fraction
    /// poles, plus infinity when the expansion there has negative exponents).
    std::vector<P1Point> pole_locations() const;

    /// Residue of the 1-form part at the point (meaningful for k = 1 data):
    /// the s^{-1} jet coefficient.
    Rational residue_at(const P1Point& pt) const;

    std::string str() const;

private:
    long k_;
    std::map<Rational, std::map<long, Rational>> poles_; // p -> order -> coeff
    std::map<long, Rational> poly_;                      // degree -> coeff
};

/// Jet-prescription problem on P^1: find a k-differential, holomorphic away
/// from pole_points and the target point's allowed polar part, with
///   jet at q_points[target]  ==  s^d (ds)^k   mod s^N,
///   jet at every other q-point == 0           mod s^N.
struct JetPrescription {
    std::vector<P1Point> q_points;
    std::size_t target = 0;
    long exponent = 0; // d
    long modulus = 1;  // N
    long k = 0;
    std::vector<P1Point> pole_points;
};

/// Solves the prescription by exact linear algebra over a pole-bounded
/// ansatz.  Throws InfeasibleSystemError when the system has no solution
/// (which must not happen on genus 0 with a nonempty pole set).
P1Section prescribe_jets_p1(const JetPrescription& problem);

} // namespace vblocks
