#include "vblocks/laurent.hpp"

#include "vblocks/errors.hpp"

namespace vblocks {

Rational LaurentJet::coeff(long e) const {
    if (e >= tail_order_)
        throw OrderViolationError("LaurentJet: coefficient at " + var_ + "^" + std::to_string(e) +
                                  " is beyond the tail marker " + std::to_string(tail_order_));
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentJet::set(long e, Rational c) {
    if (e >= tail_order_)
        throw OrderViolationError("LaurentJet: cannot set coefficient at or beyond tail marker");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void LaurentJet::add(long e, const Rational& c) {
    if (c.is_zero()) return;
    set(e, coeff(e) + c);
}

LaurentJet& LaurentJet::operator+=(const LaurentJet& o) {
    tail_order_ = std::min(tail_order_, o.tail_order_);
    for (const auto& [e, c] : o.terms_) {
        if (e >= tail_order_) break;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    // drop own data past the new (possibly lower) tail
    terms_.erase(terms_.lower_bound(tail_order_), terms_.end());
    return *this;
}

LaurentJet& LaurentJet::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentJet LaurentJet::shifted(long k, const Rational& c) const {
    LaurentJet out(tail_order_ + k, var_);
    if (!c.is_zero())
        for (const auto& [e, v] : terms_) out.set(e + k, v * c);
    return out;
}

LaurentJet LaurentJet::truncated(long n) const {
    LaurentJet out(std::min(n, tail_order_), var_);
    for (const auto& [e, v] : terms_) {
        if (e >= out.tail_order()) break;
        out.set(e, v);
    }
    return out;
}

bool LaurentJet::congruent(const LaurentJet& o, long n) const {
    if (tail_order_ < n || o.tail_order_ < n)
        throw OrderViolationError("LaurentJet::congruent: jets do not determine exponents < " +
                                  std::to_string(n));
    for (const auto& [e, v] : terms_)
        if (e < n && o.coeff(e) != v) return false;
    for (const auto& [e, v] : o.terms_)
        if (e < n && coeff(e) != v) return false;
    return true;
}

std::string LaurentJet::str() const {
    std::string s;
    for (const auto& [e, v] : terms_) {
        if (!s.empty()) s += " + ";
        s += v.str() + "*" + var_ + "^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    s += " + O(" + var_ + "^" + std::to_string(tail_order_) + ")";
    return s;
}

} // namespace vblocks
