#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "toricdm/abelian_group.hpp"

namespace toricdm {

/// Sorted ray indices (0-based).
using Cone = std::vector<std::size_t>;

struct SimplicialFan {
    std::size_t dim = 0;
    std::size_t ray_count = 0;
    std::vector<Cone> max_cones;

    /// Every cone, including the empty one, sorted by size then lexicographically.
    std::vector<Cone> all_cones() const;
    bool is_cone(const Cone& c) const;
    bool is_complete() const;
    /// f_{-1}, f_0, ..., f_{d-1}: number of cones with k rays for k = 0..d.
    std::vector<std::size_t> f_vector() const;
};

struct BoxElement {
    GroupElement element;
    Cone minimal_cone;
    std::map<std::size_t, Rational> frac_coords;  // positive exactly on minimal_cone
    Rational age;
};

struct BoxRepresentative {
    BoxElement v;
    std::map<std::size_t, Integer> floors;
};

struct MinimalCone {
    Cone cone;
    std::map<std::size_t, Rational> coords;
};

class StackyFan {
public:
    /// Validates raw data. A non-canonical group is rewritten in invariant-factor form.
    static StackyFan validate(const FgAbelianGroup& group, const std::vector<GroupElement>& rays,
                              const std::vector<Cone>& cones);

    const FgAbelianGroup& group() const { return group_; }
    const SimplicialFan& fan() const { return fan_; }
    const GroupHomomorphism& beta() const { return beta_; }
    std::size_t dim() const { return fan_.dim; }
    std::size_t ray_count() const { return fan_.ray_count; }
    const GroupElement& ray(std::size_t i) const { return beta_.images[i]; }
    const std::vector<Cone>& max_cones() const { return fan_.max_cones; }
    bool is_complete() const { return fan_.is_complete(); }
    bool is_cone(const Cone& c) const { return fan_.is_cone(c); }

    /// d x |sigma| matrix of the free parts of the generators of sigma.
    IntegerMatrix bar_matrix(const Cone& sigma) const;
    /// (d+r) x |sigma| ambient lifts of the generators of sigma.
    IntegerMatrix lift_matrix(const Cone& sigma) const;

    MinimalCone minimal_cone(const RationalVector& point) const;
    MinimalCone minimal_cone(const GroupElement& c) const;

    bool operator==(const StackyFan& o) const;

private:
    FgAbelianGroup group_;
    SimplicialFan fan_;
    GroupHomomorphism beta_;
};

/// Rays in link(sigma) and the quotient fan on N(sigma) = N / N_sigma.
struct QuotientStackyFan {
    std::shared_ptr<const StackyFan> parent;
    Cone sigma;
    std::vector<std::size_t> link;  // quotient ray k comes from parent ray link[k]
    Cokernel projection;            // N-ambient -> N(sigma)
    StackyFan fan;
};

std::vector<BoxElement> box_of_cone(const StackyFan& s, const Cone& sigma);
std::vector<BoxElement> box(const StackyFan& s);
/// Box data for an element already known to be a box element.
BoxElement box_element(const StackyFan& s, const GroupElement& v);
BoxRepresentative box_representative(const StackyFan& s, const GroupElement& c);
BoxElement inverse_box(const StackyFan& s, const BoxElement& v);

/// Ordering of box elements: age, then free part, then torsion part.
bool box_less(const BoxElement& a, const BoxElement& b);

QuotientStackyFan link_and_quotient(const StackyFan& s, const Cone& sigma);
Cokernel local_group_presentation(const StackyFan& s, const Cone& sigma);
FgAbelianGroup local_group(const StackyFan& s, const Cone& sigma);
std::vector<Cone> irrelevant_ideal(const StackyFan& s);

/// phi is given on ambient coordinates: (d+r) x (d'+r').
bool stacky_morphism_check(const IntegerMatrix& phi, const StackyFan& source, const StackyFan& target);

}  // namespace toricdm
