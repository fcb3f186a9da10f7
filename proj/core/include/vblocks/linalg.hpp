#pragma once

#include "vblocks/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace vblocks {

using QVector = std::vector<Rational>;
using SparseRow = std::map<std::size_t, Rational>;

/// Dimension of the linear span of the given coordinate vectors, computed
/// exactly by fraction-free (Bareiss) elimination after clearing row
/// denominators.  Throws DimensionMismatchError on ragged input.
std::size_t rank_of_span(const std::vector<QVector>& vectors);

/// ambient_dim - rank_of_span(relations); each relation must have length
/// ambient_dim.
std::size_t quotient_dim(std::size_t ambient_dim, const std::vector<QVector>& relations);

/// Incremental exact row reduction over Q for sparse rows.  Keeps a reduced
/// echelon basis; rows can be streamed in and duplicates vanish for free.
class RowEchelon {
public:
    /// Reduces the row against the current basis and inserts the remainder
    /// if nonzero.  Returns true when the rank grew.
    bool insert(SparseRow row);

    /// Reduces a copy of the row against the basis without inserting.
    SparseRow reduce(SparseRow row) const;

    std::size_t rank() const { return rows_.size(); }

    /// True iff the row lies in the current span.
    bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

private:
    // pivot column -> fully reduced row with leading coefficient 1
    std::map<std::size_t, SparseRow> rows_;
};

/// Solves A x = b exactly over Q (any solution, free variables set to 0).
/// Rows of `a` are the equations.  Returns nullopt when inconsistent.
std::optional<QVector> solve_linear(std::vector<QVector> a, QVector b);

} // namespace vblocks
