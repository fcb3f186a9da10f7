#pragma once

#include "vblocks/laurent.hpp"
#include "vblocks/voa.hpp"

#include <map>

namespace vblocks {

/// Laurent data of a stable k-differential at the two preimages of a node.
struct KDifferentialJet {
    long k = 0;       // tensor power of omega
    LaurentJet plus;  // expansion in s_+
    LaurentJet minus; // expansion in s_-
};

/// Coefficient of s^{-k}(ds)^k.  Requires ord(jet) >= -k (order-violation
/// error otherwise) and enough jet data to determine the coefficient.
Rational k_residue(const LaurentJet& jet, long k);

/// Gluing predicate of stable k-differentials at a node:
///   ord >= -k on both branches and Res^k_+ = (-1)^k Res^k_-.
bool glue_check(const KDifferentialJet& jet);

/// One graded component of a chiral-algebra element near a node: a
/// homogeneous vector of degree k tensored with (1-k)-differential data.
struct ChiralJetComponent {
    LinComb vector;       // homogeneous of the keyed degree
    KDifferentialJet jet; // jet.k must equal 1 - degree
};

/// Element sigma described by its graded jets; degrees not present carry no
/// data.
struct ChiralJetElement {
    std::map<long, ChiralJetComponent> graded;
};

/// Membership conditions for a chiral element on the nodal curve:
///   sigma_{Q+-} in L(V)_{<=0}  (equivalently ord >= k-1 on the degree-k jet)
///   and [sigma_{Q-}]_0 = theta([sigma_{Q+}]_0).
bool nodal_chiral_check(const ChiralJetElement& sigma, const TruncatedVOA& voa);

} // namespace vblocks
