#pragma once

#include <optional>
#include <string>

#include "toricdm/deformed_ring.hpp"

namespace toricdm {

struct SubdivisionPair {
    StackyFan coarse;
    StackyFan fine;
};

/// Fine ray matching each coarse ray (same generator), if every coarse ray survives.
std::optional<std::vector<std::size_t>> ray_embedding(const StackyFan& fine, const StackyFan& coarse);

bool is_subdivision(const StackyFan& fine, const StackyFan& coarse);
bool is_smooth(const StackyFan& s);
bool is_crepant(const SubdivisionPair& pair);

/// Integer heights per fine ray: 0 on coarse rays, positive on new rays, strictly
/// bending along every interior wall. nullopt when the subdivision is not regular.
std::optional<IntegerVector> support_function(const SubdivisionPair& pair);
/// Exact re-check of the conditions above.
bool certifies_regularity(const SubdivisionPair& pair, const IntegerVector& h);

struct IdealExport {
    std::vector<std::string> I1, I2, I1_t, I2_t, I_fine;
};

struct FamilyReport {
    GradedDims orbifold_dims;
    GradedDims resolution_dims;
    bool equal = false;
    bool subdivision = false, smooth = false, crepant = false;
    std::optional<IntegerVector> support;
    std::vector<std::string> warnings;
    IdealExport ideals;
    SquareZeroVerdict orbifold_square_zero, resolution_square_zero;
    /// One ring has a nonzero degree-one square-zero element and the other has none.
    bool rings_distinguished = false;

    bool preconditions_hold() const { return subdivision && smooth && crepant; }
};

FamilyReport hilbert_compare(const SubdivisionPair& pair);

}  // namespace toricdm
