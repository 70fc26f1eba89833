#pragma once

#include <array>

#include "toricdm/deformed_ring.hpp"

namespace toricdm {

struct SectorReport {
    BoxElement box;
    QuotientStackyFan sector_fan;
    Rational age;
};

std::vector<SectorReport> inertia_components(const StackyFan& s);

struct ModuliComponent {
    std::array<BoxElement, 3> triple;
    Cone cone;  // minimal cone containing all three bars
    QuotientStackyFan component_fan;
    std::map<std::size_t, Integer> exponents;
};

/// Ordered triples of box elements whose sum lies in N_sigma for their minimal common cone.
std::vector<ModuliComponent> moduli_components(const StackyFan& s);

/// Integers m_k with v1 + v2 + v3 = sum m_k b_k over the minimal common cone. Throws NotAComponent.
std::map<std::size_t, Integer> virtual_exponents(const StackyFan& s, const BoxElement& v1, const BoxElement& v2,
                                                 const BoxElement& v3);

/// Is (v1, v2, v3) a component?
bool is_component(const StackyFan& s, const BoxElement& v1, const BoxElement& v2, const BoxElement& v3);

struct ObstructionTerms {
    BoxElement v3;
    BoxElement v3_inverse;
    Cone I;  // rays with exponent 2
    Cone J;  // rays of the cone of v1, v2 outside the cone of v3
    RingElement product;
};

/// The closed form of y^{v1} * y^{v2}; nullopt when no cone contains both bars.
std::optional<ObstructionTerms> obstruction_terms(const StackyFan& s, const BoxElement& v1, const BoxElement& v2);
RingElement obstruction_product(const StackyFan& s, const BoxElement& v1, const BoxElement& v2);

}  // namespace toricdm
