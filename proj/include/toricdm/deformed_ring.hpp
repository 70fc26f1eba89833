#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toricdm/stacky_fan.hpp"

namespace toricdm {

/// Finite Q-linear combination of monomials y^c, c in N. No zero coefficients are stored.
struct RingElement {
    std::map<GroupElement, Rational> terms;

    static RingElement monomial(const GroupElement& c, const Rational& coeff = 1);
    bool is_zero() const { return terms.empty(); }
    void add(const GroupElement& c, const Rational& coeff);
    bool operator==(const RingElement& o) const { return terms == o.terms; }
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator*(const Rational& k, const RingElement& a);

/// y^c1 * y^c2 = y^{c1+c2} if some cone contains both bars, else 0.
RingElement multiply(const StackyFan& s, const RingElement& a, const RingElement& b);
Rational degree(const StackyFan& s, const GroupElement& c);

std::vector<Integer> h_vector(const SimplicialFan& fan);

using GradedDims = std::map<Rational, std::size_t>;

/// Graded dimensions of the Stanley-Reisner ring modulo the linear forms.
GradedDims chow_graded_dims(const StackyFan& s);

using Coordinates = std::map<std::size_t, Rational>;

struct BasisMonomial {
    GroupElement monomial;
    Rational degree;
    BoxElement sector;
};

struct GradedPresentation {
    std::size_t dim = 0;
    std::vector<BasisMonomial> basis;
    GradedDims dims;
    std::map<GroupElement, Coordinates> reduction;                          // every enumerated monomial
    std::map<std::pair<std::size_t, std::size_t>, Coordinates> structure;  // e_a * e_b, zero products omitted

    std::size_t total_dim() const { return basis.size(); }
    std::vector<std::size_t> basis_in_degree(const Rational& q) const;
    /// Coordinates of an element of the deformed ring; monomials above the top degree vanish.
    Coordinates reduce(const RingElement& x) const;
    Coordinates multiply(const Coordinates& x, const Coordinates& y) const;
    Coordinates product(std::size_t a, std::size_t b) const;
};

struct ChowOptions {
    std::optional<std::size_t> max_degree;  // enumerate monomials up to this degree (default: dimension)
    bool reversed = false;                  // prefer the largest monomials when choosing the basis
};

GradedPresentation orbifold_chow(const StackyFan& s, const ChowOptions& options = {});

struct SectorDims {
    BoxElement box;
    GradedDims dims;  // h-vector of the quotient fan shifted by the age
};

std::vector<SectorDims> sector_decomposition(const StackyFan& s);
GradedDims sum_dims(const std::vector<SectorDims>& sectors);

struct SquareZeroVerdict {
    enum class Kind { Exists, NotExists, Undecided } kind = Kind::Undecided;
    std::vector<Rational> witness;  // coefficients in the degree-one basis
};

const char* verdict_name(SquareZeroVerdict::Kind k);

SquareZeroVerdict square_zero_degree_one(const GradedPresentation& pres);

}  // namespace toricdm
