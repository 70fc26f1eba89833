#pragma once

#include "toricdm/abelian_group.hpp"

namespace toricdm {

/// DG(beta) = coker([B Q]^T) together with the dual map (Z^n)^* -> DG(beta).
struct GaleDualData {
    FgAbelianGroup group;
    IntegerMatrix dual_map;  // k x n, canonical coordinates (free rows, then torsion rows)
    Cokernel change_of_basis;

    /// The dual map viewed as a homomorphism Z^n -> DG(beta).
    GroupHomomorphism as_homomorphism() const;
};

GaleDualData gale_dual(const GroupHomomorphism& beta);

/// Same construction from an arbitrary lift B of beta (columns need not be reduced).
GaleDualData gale_dual_from_lift(const FgAbelianGroup& target, const IntegerMatrix& B);

/// Is there an automorphism a of G with a * f = g (columns read in G)?
/// Requires the free rows of f to have full row rank.
bool maps_equivalent(const FgAbelianGroup& G, const IntegerMatrix& f, const IntegerMatrix& g);

/// beta is naturally isomorphic to its double dual. Throws InfiniteCokernel.
bool double_dual_check(const GroupHomomorphism& beta);

/// A commutative diagram
///     0 -> Z^n1 -i-> Z^n2 -p-> Z^n3 -> 0
///            b1       b2       b3
///     0 ->  N1  -j->  N2  -s->  N3  -> 0
/// with j and s given on ambient coordinates.
struct ShortExactDiagram {
    GroupHomomorphism beta1, beta2, beta3;
    IntegerMatrix i, p;
    IntegerMatrix j, s;
};

/// Verifies the dual row 0 -> DG(b3) -> DG(b2) -> DG(b1) -> 0 is exact and commutes
/// with the dual maps. Throws BadDiagram if the input diagram is not as required.
bool dual_sequence_check(const ShortExactDiagram& diagram);

}  // namespace toricdm
