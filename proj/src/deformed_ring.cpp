#include "toricdm/deformed_ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "toricdm/errors.hpp"
#include "toricdm/rational_linalg.hpp"

namespace toricdm {

RingElement RingElement::monomial(const GroupElement& c, const Rational& coeff) {
    RingElement r;
    r.add(c, coeff);
    return r;
}

void RingElement::add(const GroupElement& c, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
        terms.emplace(c, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [c, k] : b.terms) r.add(c, k);
    return r;
}

RingElement operator*(const Rational& k, const RingElement& a) {
    RingElement r;
    for (const auto& [c, x] : a.terms) r.add(c, k * x);
    return r;
}

namespace {

Cone cone_union(const Cone& a, const Cone& b) {
    Cone u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

// Memoized minimal cones.
class Locator {
public:
    explicit Locator(const StackyFan& s) : s_(s) {}
    const MinimalCone& operator()(const GroupElement& c) {
        auto it = cache_.find(c.free);
        if (it == cache_.end()) it = cache_.emplace(c.free, s_.minimal_cone(c)).first;
        return it->second;
    }
    bool share_cone(const GroupElement& a, const GroupElement& b) {
        return s_.is_cone(cone_union((*this)(a).cone, (*this)(b).cone));
    }
    Rational degree(const GroupElement& c) {
        Rational q = 0;
        for (const auto& [i, m] : (*this)(c).coords) q += m;
        return q;
    }

private:
    const StackyFan& s_;
    std::map<IntegerVector, MinimalCone> cache_;
};

Integer binomial(std::size_t n, std::size_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

RingElement multiply(const StackyFan& s, const RingElement& a, const RingElement& b) {
    Locator loc(s);
    RingElement r;
    for (const auto& [c1, k1] : a.terms)
        for (const auto& [c2, k2] : b.terms)
            if (loc.share_cone(c1, c2)) r.add(s.group().add(c1, c2), k1 * k2);
    return r;
}

Rational degree(const StackyFan& s, const GroupElement& c) {
    Rational q = 0;
    for (const auto& [i, m] : s.minimal_cone(c).coords) q += m;
    return q;
}

std::vector<Integer> h_vector(const SimplicialFan& fan) {
    if (!fan.is_complete()) throw Error(ErrorKind::NotComplete, "h-vector needs a complete fan");
    const std::size_t d = fan.dim;
    auto f = fan.f_vector();
    // sum_i h_i t^{d-i} = sum_k f_{k-1} (t-1)^{d-k}
    std::vector<Integer> poly(d + 1);  // coefficient of t^e
    for (std::size_t k = 0; k <= d; ++k) {
        const std::size_t m = d - k;
        for (std::size_t e = 0; e <= m; ++e) {
            Integer term = binomial(m, e) * f[k];
            poly[e] += (m - e) % 2 ? Integer(-term) : term;
        }
    }
    std::vector<Integer> h(d + 1);
    for (std::size_t i = 0; i <= d; ++i) h[i] = poly[d - i];
    return h;
}

GradedDims chow_graded_dims(const StackyFan& s) {
    if (!s.is_complete()) throw Error(ErrorKind::NotComplete, "Chow ring needs a complete fan");
    const std::size_t d = s.dim(), n = s.ray_count();
    const auto cones = s.fan().all_cones();
    // cone-supported monomials of each degree, as exponent vectors
    std::vector<std::vector<std::vector<std::size_t>>> monos(d + 1);
    for (const auto& c : cones) {
        std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> fill =
            [&](std::size_t k, std::size_t used, std::vector<std::size_t>& e) {
                if (k == c.size()) {
                    if (used <= d) monos[used].push_back(e);
                    return;
                }
                for (std::size_t x = 1; used + x <= d; ++x) {
                    e[c[k]] = x;
                    fill(k + 1, used + x, e);
                }
                e[c[k]] = 0;
            };
        std::vector<std::size_t> e(n, 0);
        fill(0, 0, e);
    }
    GradedDims dims;
    for (std::size_t k = 0; k <= d; ++k) {
        std::map<std::vector<std::size_t>, std::size_t> col;
        for (const auto& m : monos[k]) col.emplace(m, col.size());
        std::vector<RationalVector> rows;
        if (k > 0)
            for (const auto& mu : monos[k - 1])
                for (std::size_t j = 0; j < d; ++j) {
                    RationalVector row(col.size());
                    for (std::size_t i = 0; i < n; ++i) {
                        if (s.ray(i).free[j] == 0) continue;
                        auto e = mu;
                        ++e[i];
                        auto it = col.find(e);
                        if (it != col.end()) row[it->second] += s.ray(i).free[j];
                    }
                    rows.push_back(row);
                }
        RationalMatrix R(rows.size(), col.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < col.size(); ++c) R(r, c) = rows[r][c];
        std::size_t dim_k = col.size() - (rows.empty() ? 0 : rank(R));
        if (dim_k) dims[Rational(k)] = dim_k;
    }
    return dims;
}

std::vector<std::size_t> GradedPresentation::basis_in_degree(const Rational& q) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].degree == q) out.push_back(i);
    return out;
}

Coordinates GradedPresentation::reduce(const RingElement& x) const {
    Coordinates out;
    for (const auto& [c, k] : x.terms) {
        auto it = reduction.find(c);
        if (it == reduction.end()) continue;  // above the top degree
        for (const auto& [b, v] : it->second) {
            out[b] += k * v;
            if (out[b] == 0) out.erase(b);
        }
    }
    return out;
}

Coordinates GradedPresentation::product(std::size_t a, std::size_t b) const {
    auto it = structure.find({a, b});
    return it == structure.end() ? Coordinates{} : it->second;
}

Coordinates GradedPresentation::multiply(const Coordinates& x, const Coordinates& y) const {
    Coordinates out;
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y)
            for (const auto& [c, w] : product(a, b)) {
                out[c] += u * v * w;
                if (out[c] == 0) out.erase(c);
            }
    return out;
}

GradedPresentation orbifold_chow(const StackyFan& s, const ChowOptions& options) {
    if (!s.is_complete()) throw Error(ErrorKind::NotComplete, "orbifold Chow ring needs a complete fan");
    const std::size_t d = s.dim();
    const Rational top(options.max_degree.value_or(d));
    const FgAbelianGroup& N = s.group();
    Locator loc(s);

    // y^c = y^v * prod y^{k_i b_i} over the boxes of the maximal cones
    std::map<GroupElement, Rational> degree_of;
    for (const auto& sigma : s.max_cones()) {
        for (const auto& v : box_of_cone(s, sigma)) {
            std::function<void(std::size_t, const GroupElement&, const Rational&)> grow =
                [&](std::size_t k, const GroupElement& c, const Rational& q) {
                    if (k == sigma.size()) {
                        degree_of.emplace(c, q);
                        return;
                    }
                    GroupElement cur = c;
                    for (Rational r = q; r <= top; r += 1) {
                        grow(k + 1, cur, r);
                        cur = N.add(cur, s.ray(sigma[k]));
                    }
                };
            if (v.age <= top) grow(0, v.element, v.age);
        }
    }

    std::map<GroupElement, BoxElement> sector_of;
    std::map<Rational, std::vector<GroupElement>> buckets;
    for (const auto& [c, q] : degree_of) {
        sector_of.emplace(c, box_representative(s, c).v);
        buckets[q].push_back(c);
    }
    auto prefer = [&](const GroupElement& a, const GroupElement& b) {
        const auto& va = sector_of.at(a);
        const auto& vb = sector_of.at(b);
        return std::tie(va.age, a) < std::tie(vb.age, b);
    };

    GradedPresentation P;
    P.dim = d;
    std::map<Rational, std::vector<std::pair<GroupElement, Coordinates>>> pending;
    for (auto& [q, monos] : buckets) {
        // columns from least to most preferred: pivots land on the least preferred monomials
        std::sort(monos.begin(), monos.end(), [&](const GroupElement& a, const GroupElement& b) {
            return options.reversed ? prefer(a, b) : prefer(b, a);
        });
        std::map<GroupElement, std::size_t> col;
        for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;

        std::vector<RationalVector> rows;
        auto lower = buckets.find(q - 1);
        if (lower != buckets.end())
            for (const auto& mu : lower->second)
                for (std::size_t j = 0; j < d; ++j) {
                    RationalVector row(monos.size());
                    bool any = false;
                    for (std::size_t i = 0; i < s.ray_count(); ++i) {
                        const Integer& th = s.ray(i).free[j];
                        if (th == 0 || !loc.share_cone(mu, s.ray(i))) continue;
                        row[col.at(N.add(mu, s.ray(i)))] += th;
                        any = true;
                    }
                    if (any) rows.push_back(row);
                }
        RationalMatrix R(rows.size(), monos.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < monos.size(); ++c) R(r, c) = rows[r][c];
        RowEchelon e = rref(R);
        std::vector<bool> pivot(monos.size(), false);
        for (auto p : e.pivots) pivot[p] = true;

        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (!pivot[c]) free_cols.push_back(c);
        // basis in preference order
        std::vector<std::size_t> ordered = free_cols;
        std::sort(ordered.begin(), ordered.end(),
                  [&](std::size_t a, std::size_t b) { return prefer(monos[a], monos[b]); });
        std::map<std::size_t, std::size_t> index_of;
        for (auto c : ordered) {
            index_of[c] = P.basis.size();
            P.basis.push_back({monos[c], q, sector_of.at(monos[c])});
        }
        if (!ordered.empty()) P.dims[q] = ordered.size();
        for (auto c : free_cols) P.reduction[monos[c]] = {{index_of[c], Rational(1)}};
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            Coordinates x;
            for (auto c : free_cols)
                if (e.reduced(r, c) != 0) x[index_of[c]] = -e.reduced(r, c);
            P.reduction[monos[e.pivots[r]]] = x;
        }
    }

    for (std::size_t a = 0; a < P.basis.size(); ++a)
        for (std::size_t b = 0; b < P.basis.size(); ++b) {
            const auto& ca = P.basis[a].monomial;
            const auto& cb = P.basis[b].monomial;
            if (!loc.share_cone(ca, cb)) continue;
            Coordinates x = P.reduce(RingElement::monomial(N.add(ca, cb)));
            if (!x.empty()) P.structure[{a, b}] = x;
        }
    return P;
}

std::vector<SectorDims> sector_decomposition(const StackyFan& s) {
    if (!s.is_complete()) throw Error(ErrorKind::NotComplete, "sector decomposition needs a complete fan");
    std::vector<SectorDims> out;
    for (const auto& v : box(s)) {
        QuotientStackyFan q = link_and_quotient(s, v.minimal_cone);
        auto h = h_vector(q.fan.fan());
        SectorDims sd{v, {}};
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k] != 0) sd.dims[v.age + k] = h[k].get_ui();
        out.push_back(sd);
    }
    return out;
}

GradedDims sum_dims(const std::vector<SectorDims>& sectors) {
    GradedDims total;
    for (const auto& s : sectors)
        for (const auto& [q, n] : s.dims) total[q] += n;
    return total;
}

const char* verdict_name(SquareZeroVerdict::Kind k) {
    switch (k) {
        case SquareZeroVerdict::Kind::Exists: return "exists";
        case SquareZeroVerdict::Kind::NotExists: return "not_exists";
        case SquareZeroVerdict::Kind::Undecided: return "undecided";
    }
    return "undecided";
}

namespace {

// x^2 for x = sum a_i e_i over the degree-one basis.
Coordinates square(const GradedPresentation& P, const std::vector<std::size_t>& deg1, const std::vector<Rational>& a) {
    Coordinates x;
    for (std::size_t i = 0; i < deg1.size(); ++i)
        if (a[i] != 0) x[deg1[i]] = a[i];
    return P.multiply(x, x);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Integer n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rational(sqrt(n), sqrt(d));
}

}  // namespace

SquareZeroVerdict square_zero_degree_one(const GradedPresentation& P) {
    using K = SquareZeroVerdict::Kind;
    const auto deg1 = P.basis_in_degree(1);
    const std::size_t k = deg1.size();
    if (k == 0) return {K::NotExists, {}};
    if (k == 1) {
        if (square(P, deg1, {Rational(1)}).empty()) return {K::Exists, {Rational(1)}};
        return {K::NotExists, {}};
    }
    if (k == 2) {
        // one binary quadratic form per target coordinate
        auto q11 = P.multiply({{deg1[0], 1}}, {{deg1[0], 1}});
        auto q12 = P.multiply({{deg1[0], 1}}, {{deg1[1], 1}});
        auto q22 = P.multiply({{deg1[1], 1}}, {{deg1[1], 1}});
        std::set<std::size_t> targets;
        for (const auto* m : {&q11, &q12, &q22})
            for (const auto& [t, v] : *m) targets.insert(t);
        if (targets.empty()) return {K::Exists, {Rational(1), Rational(0)}};
        auto get = [](const Coordinates& m, std::size_t t) {
            auto it = m.find(t);
            return it == m.end() ? Rational(0) : it->second;
        };
        std::size_t t0 = *targets.begin();
        // alpha a^2 + beta a b + gamma b^2
        Rational alpha = get(q11, t0), beta = 2 * get(q12, t0), gamma = get(q22, t0);
        std::vector<std::vector<Rational>> candidates;
        if (alpha == 0) {
            candidates.push_back({Rational(1), Rational(0)});
            if (beta != 0) candidates.push_back({-gamma / beta, Rational(1)});
        } else if (auto r = rational_sqrt(beta * beta - 4 * alpha * gamma)) {
            candidates.push_back({(-beta + *r) / (2 * alpha), Rational(1)});
            candidates.push_back({(-beta - *r) / (2 * alpha), Rational(1)});
        }
        for (const auto& a : candidates)
            if (square(P, deg1, a).empty()) return {K::Exists, a};
        return {K::NotExists, {}};
    }
    // bounded search over small integer vectors with first nonzero entry positive
    const long bound = 2;
    std::vector<Rational> a(k);
    std::function<bool(std::size_t, bool)> search = [&](std::size_t i, bool started) -> bool {
        if (i == k) return started && square(P, deg1, a).empty();
        for (long v = started ? -bound : 0; v <= bound; ++v) {
            a[i] = v;
            if (search(i + 1, started || v != 0)) return true;
        }
        a[i] = 0;
        return false;
    };
    if (search(0, false)) return {K::Exists, a};
    return {K::Undecided, {}};
}

}  // namespace toricdm
