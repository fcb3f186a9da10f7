#include "vblocks/graded_space.hpp"

namespace vblocks {

const std::vector<std::size_t> GradedSpace::kEmpty = {};

std::size_t GradedSpace::add_basis_vector(Rational degree, std::string label) {
    const std::size_t id = degrees_.size();
    by_degree_[degree].push_back(id);
    degrees_.push_back(std::move(degree));
    labels_.push_back(std::move(label));
    return id;
}

std::size_t GradedSpace::dim_at(const Rational& degree) const {
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? 0 : it->second.size();
}

const std::vector<std::size_t>& GradedSpace::ids_at(const Rational& degree) const {
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? kEmpty : it->second;
}

std::vector<Rational> GradedSpace::degrees() const {
    std::vector<Rational> out;
    out.reserve(by_degree_.size());
    for (const auto& [d, ids] : by_degree_) out.push_back(d);
    return out;
}

void lincomb_add(LinComb& into, std::size_t id, const Rational& c) {
    if (c.is_zero()) return;
    auto it = into.find(id);
    if (it == into.end()) {
        into.emplace(id, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

void lincomb_add_scaled(LinComb& into, const LinComb& other, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [id, v] : other) lincomb_add(into, id, v * c);
}

LinComb lincomb_scaled(const LinComb& v, const Rational& c) {
    LinComb out;
    if (!c.is_zero())
        for (const auto& [id, x] : v) out.emplace(id, x * c);
    return out;
}

bool lincomb_equal(const LinComb& a, const LinComb& b) { return a == b; }

std::string lincomb_str(const LinComb& v, const GradedSpace& space) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [id, c] : v) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + space.label_of(id);
    }
    return s;
}

} // namespace vblocks
