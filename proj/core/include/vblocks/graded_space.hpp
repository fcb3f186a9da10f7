#pragma once

#include "vblocks/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace vblocks {

/// Finite-dimensional graded vector space with a labeled homogeneous basis.
/// Basis vectors are addressed by flat ids in a fixed order (grouped by
/// degree, then by insertion order within the degree).
class GradedSpace {
public:
    std::size_t add_basis_vector(Rational degree, std::string label);

    std::size_t dim() const { return degrees_.size(); }
    const Rational& degree_of(std::size_t id) const { return degrees_.at(id); }
    const std::string& label_of(std::size_t id) const { return labels_.at(id); }

    std::size_t dim_at(const Rational& degree) const;
    const std::vector<std::size_t>& ids_at(const Rational& degree) const;
    std::vector<Rational> degrees() const;

    bool has_degree(const Rational& degree) const { return by_degree_.count(degree) > 0; }

private:
    std::vector<Rational> degrees_;
    std::vector<std::string> labels_;
    std::map<Rational, std::vector<std::size_t>> by_degree_;
    static const std::vector<std::size_t> kEmpty;
};

/// Sparse linear combination of basis vectors (flat id -> coefficient).
using LinComb = std::map<std::size_t, Rational>;

void lincomb_add(LinComb& into, std::size_t id, const Rational& c);
void lincomb_add_scaled(LinComb& into, const LinComb& other, const Rational& c);
LinComb lincomb_scaled(const LinComb& v, const Rational& c);
bool lincomb_equal(const LinComb& a, const LinComb& b);
std::string lincomb_str(const LinComb& v, const GradedSpace& space);

} // namespace vblocks
