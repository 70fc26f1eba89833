#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricdm/matrix.hpp"

namespace toricdm {

/// Element of Z^d + Z/q_1 + ... + Z/q_r; torsion residues kept in [0, q_j).
struct GroupElement {
    IntegerVector free;
    IntegerVector torsion;

    IntegerVector ambient() const;
    bool is_zero() const;
    bool operator==(const GroupElement& o) const { return free == o.free && torsion == o.torsion; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const;
};

std::string to_string(const GroupElement& e);

/// Z^rank + Z/q_1 + ... + Z/q_r. Canonical when every q_j >= 2 and q_1 | q_2 | ...
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(std::size_t rank, IntegerVector torsion);

    std::size_t rank() const { return rank_; }
    const IntegerVector& torsion() const { return torsion_; }
    std::size_t ambient_dim() const { return rank_ + torsion_.size(); }

    bool is_canonical() const;
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    /// Product of the torsion orders when finite.
    std::optional<Integer> order() const;

    /// The (d+r) x r relation matrix [0; diag(q)].
    IntegerMatrix relations() const;

    GroupElement zero() const;
    GroupElement reduce(const IntegerVector& ambient) const;
    GroupElement element(IntegerVector free, IntegerVector torsion) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const Integer& k, const GroupElement& a) const;
    IntegerVector bar(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;

    /// All elements with zero free part.
    std::vector<GroupElement> torsion_elements() const;

    bool operator==(const FgAbelianGroup& o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

private:
    void check(const GroupElement& a) const;

    std::size_t rank_ = 0;
    IntegerVector torsion_;
};

std::string to_string(const FgAbelianGroup& g);

/// Z^m / im(M) in canonical form, with the coordinate change in both directions.
struct Cokernel {
    FgAbelianGroup group;
    IntegerMatrix to_canonical;    // k x m: ambient vector -> canonical coordinates
    IntegerMatrix from_canonical;  // m x k: canonical generators lifted to Z^m

    GroupElement project(const IntegerVector& x) const;
    IntegerVector lift(const GroupElement& g) const;
};

Cokernel cokernel(const IntegerMatrix& M);

/// beta: Z^n -> N, stored as images b_1..b_n.
struct GroupHomomorphism {
    FgAbelianGroup target;
    std::vector<GroupElement> images;

    std::size_t source_rank() const { return images.size(); }
    /// (d+r) x n lift B: free part over torsion residues.
    IntegerMatrix lift() const;
    /// [B Q]
    IntegerMatrix presentation() const;

    static GroupHomomorphism from_lift(const FgAbelianGroup& target, const IntegerMatrix& B);
};

/// True iff the free parts of the images span N (x) Q.
bool cokernel_is_finite(const GroupHomomorphism& beta);

}  // namespace toricdm
