#include "toricdm/inertia.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricdm/errors.hpp"
#include "toricdm/smith.hpp"

namespace toricdm {

namespace {

Cone cone_union(const Cone& a, const Cone& b) {
    Cone u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

Cone common_cone(const BoxElement& a, const BoxElement& b, const BoxElement& c) {
    return cone_union(cone_union(a.minimal_cone, b.minimal_cone), c.minimal_cone);
}

std::optional<IntegerVector> solve_in_cone(const StackyFan& s, const Cone& cone, const GroupElement& x) {
    return integer_solve(s.lift_matrix(cone).hstack(s.group().relations()), x.ambient());
}

}  // namespace

std::vector<SectorReport> inertia_components(const StackyFan& s) {
    std::vector<SectorReport> out;
    for (const auto& v : box(s)) out.push_back({v, link_and_quotient(s, v.minimal_cone), v.age});
    return out;
}

bool is_component(const StackyFan& s, const BoxElement& v1, const BoxElement& v2, const BoxElement& v3) {
    Cone cone = common_cone(v1, v2, v3);
    if (!s.is_cone(cone)) return false;
    const auto& N = s.group();
    return solve_in_cone(s, cone, N.add(N.add(v1.element, v2.element), v3.element)).has_value();
}

std::map<std::size_t, Integer> virtual_exponents(const StackyFan& s, const BoxElement& v1, const BoxElement& v2,
                                                 const BoxElement& v3) {
    Cone cone = common_cone(v1, v2, v3);
    if (!s.is_cone(cone)) throw Error(ErrorKind::NotAComponent, "no cone contains the three box elements");
    const auto& N = s.group();
    auto x = solve_in_cone(s, cone, N.add(N.add(v1.element, v2.element), v3.element));
    if (!x) throw Error(ErrorKind::NotAComponent, "sum does not lie in N_sigma");
    std::map<std::size_t, Integer> m;
    for (std::size_t k = 0; k < cone.size(); ++k) {
        const std::size_t i = cone[k];
        Rational a = 0;
        for (const auto* v : {&v1, &v2, &v3}) {
            auto it = v->frac_coords.find(i);
            if (it != v->frac_coords.end()) a += it->second;
        }
        if (a != (*x)[k]) throw std::logic_error("exponent disagrees with the fractional coordinates");
        if ((*x)[k] != 1 && (*x)[k] != 2) throw std::logic_error("exponent outside {1, 2} on the minimal cone");
        m[i] = (*x)[k];
    }
    return m;
}

std::vector<ModuliComponent> moduli_components(const StackyFan& s) {
    if (!s.is_complete()) throw Error(ErrorKind::NotComplete, "moduli components need a complete fan");
    const auto B = box(s);
    std::vector<ModuliComponent> out;
    for (const auto& a : B)
        for (const auto& b : B)
            for (const auto& c : B) {
                if (!is_component(s, a, b, c)) continue;
                Cone cone = common_cone(a, b, c);
                out.push_back({{a, b, c}, cone, link_and_quotient(s, cone), virtual_exponents(s, a, b, c)});
            }
    return out;
}

std::optional<ObstructionTerms> obstruction_terms(const StackyFan& s, const BoxElement& v1, const BoxElement& v2) {
    const Cone shared = cone_union(v1.minimal_cone, v2.minimal_cone);
    if (!s.is_cone(shared)) return std::nullopt;
    const auto& N = s.group();
    ObstructionTerms t;
    BoxElement r = box_representative(s, N.add(v1.element, v2.element)).v;
    t.v3 = inverse_box(s, r);
    t.v3_inverse = inverse_box(s, t.v3);
    for (const auto& [i, m] : virtual_exponents(s, v1, v2, t.v3))
        if (m == 2) t.I.push_back(i);
    for (auto i : shared)
        if (!std::binary_search(t.v3.minimal_cone.begin(), t.v3.minimal_cone.end(), i)) t.J.push_back(i);
    RingElement p = RingElement::monomial(t.v3_inverse.element);
    for (auto i : t.I) p = multiply(s, p, RingElement::monomial(s.ray(i)));
    for (auto j : t.J) p = multiply(s, p, RingElement::monomial(s.ray(j)));
    t.product = p;
    return t;
}

RingElement obstruction_product(const StackyFan& s, const BoxElement& v1, const BoxElement& v2) {
    auto t = obstruction_terms(s, v1, v2);
    return t ? t->product : RingElement{};
}

}  // namespace toricdm
