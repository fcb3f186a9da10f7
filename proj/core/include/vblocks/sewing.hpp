#pragma once

#include "vblocks/qseries.hpp"
#include "vblocks/voa.hpp"

#include <map>
#include <string>

namespace vblocks {

/// The q-graded sewing element 1^W = sum_i 1^{W_i} q^i, held as the list of
/// per-level identity tensors over the module's basis (each component pairs
/// to dim W_i under contraction).
struct SewingElement {
    ModulePtr module;
    long cutoff = 0;

    /// Contraction of 1^{W_i}: dim W_i.
    long contraction(long level) const;
};

SewingElement make_sewing_element(ModulePtr module, long cutoff);

/// Exhaustive exact check of the sewing vanishing identity
///   (A_{[i-j+k-1]} (x) 1 + 1 (x) theta(A_{[i-j+k-1]}) q^{i-j}) 1^W = 0
/// in W (x) W' (x) Q[q]/q^{cutoff+1}, for homogeneous A of degree k and
/// i, j >= 0.  The W'-side acts through the contragredient mode formula; the
/// module window must be wide enough for the shifted levels (overflow
/// throws, it is never silently dropped).
bool sewing_identity_check(const LinComb& a, long i, long j, const TruncatedModule& module,
                           long cutoff);

/// Per-label q-series data with the conformal-weight shifts of the
/// degeneration parameter action D = q d/dq.
struct SpectralBlock {
    std::map<std::string, QSeries> per_label;
    std::map<std::string, Rational> shift; // c_W per label
};

/// Applies D blockwise: the q^d coefficient of block W scales by d + c_W.
SpectralBlock spectral_apply_D(const SpectralBlock& block);

/// Trace of the sewing element: sum_i dim W_i q^i.
QSeries sewn_character(const TruncatedModule& module, long cutoff);

} // namespace vblocks
