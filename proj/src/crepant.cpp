#include "toricdm/crepant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "toricdm/errors.hpp"
#include "toricdm/lp.hpp"
#include "toricdm/rational_linalg.hpp"
#include "toricdm/smith.hpp"

namespace toricdm {

namespace {

Cone cone_union(const Cone& a, const Cone& b) {
    Cone u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

// Smallest coarse cone containing the fine cone, or nullopt if none does.
std::optional<Cone> coarse_carrier(const StackyFan& coarse, const StackyFan& fine, const Cone& c) {
    Cone u;
    for (auto i : c) {
        try {
            u = cone_union(u, coarse.minimal_cone(fine.ray(i)).cone);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (!coarse.is_cone(u)) return std::nullopt;
    return u;
}

bool is_max_cone(const StackyFan& s, const Cone& c) {
    return std::find(s.max_cones().begin(), s.max_cones().end(), c) != s.max_cones().end();
}

struct Wall {
    std::size_t coarse_cone;
    Cone left;            // fine cone on one side
    std::size_t across;   // ray of the fine cone on the other side
    RationalVector lambda;  // coordinates of that ray in the generators of `left`
};

// Interior walls of the fine fan, grouped by coarse maximal cone. Both orientations are listed.
std::vector<Wall> interior_walls(const SubdivisionPair& pair) {
    const auto& fine = pair.fine;
    std::vector<Wall> walls;
    const auto& coarse_cones = pair.coarse.max_cones();
    for (std::size_t c = 0; c < coarse_cones.size(); ++c) {
        std::vector<Cone> inside;
        for (const auto& f : fine.max_cones())
            if (coarse_carrier(pair.coarse, fine, f) == coarse_cones[c]) inside.push_back(f);
        for (const auto& a : inside)
            for (const auto& b : inside) {
                if (a == b) continue;
                Cone shared;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
                if (shared.size() + 1 != a.size() || a.size() != b.size()) continue;
                std::size_t u = 0;
                for (auto i : b)
                    if (!std::binary_search(a.begin(), a.end(), i)) u = i;
                auto lambda = rational_solve(to_rational(fine.bar_matrix(a)), to_rational(fine.ray(u).free));
                walls.push_back({c, a, u, *lambda});
            }
    }
    return walls;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string power(const std::string& base, const Integer& e) {
    if (e == 1) return base;
    return base + "^" + e.get_str();
}

std::string monomial(const std::vector<Integer>& exps) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) parts.push_back(power(var(i), exps[i]));
    return parts.empty() ? "1" : join(parts, "*");
}

std::string with_t(const std::string& mono, const std::string& t, const Integer& e) {
    if (e == 0) return mono;
    return (mono == "1" ? "" : mono + "*") + power(t, e);
}

std::string linear_form(const std::vector<std::pair<Integer, std::string>>& terms) {
    std::string s;
    for (const auto& [k, x] : terms) {
        if (k == 0) continue;
        Integer a = abs(k);
        std::string body = a == 1 ? x : a.get_str() + "*" + x;
        if (s.empty()) s = k < 0 ? "-" + body : body;
        else s += (k < 0 ? " - " : " + ") + body;
    }
    return s.empty() ? "0" : s;
}

// Minimal ray sets of `fine` whose carrier is not a cone of `s`.
std::vector<Cone> minimal_nonfaces(const StackyFan& fine, const std::function<bool(const Cone&)>& is_face) {
    const std::size_t m = fine.ray_count();
    std::vector<Cone> out;
    std::function<void(std::size_t, Cone&)> grow = [&](std::size_t start, Cone& c) {
        for (std::size_t i = start; i < m; ++i) {
            c.push_back(i);
            if (!is_face(c)) {
                bool minimal = true;
                for (std::size_t k = 0; k + 1 < c.size() && minimal; ++k) {
                    Cone sub = c;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                    if (!is_face(sub)) minimal = false;
                }
                if (minimal) out.push_back(c);
            } else if (c.size() <= fine.dim()) {
                grow(i + 1, c);
            }
            c.pop_back();
        }
    };
    Cone c;
    grow(0, c);
    return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> ray_embedding(const StackyFan& fine, const StackyFan& coarse) {
    std::vector<std::size_t> emb;
    for (std::size_t i = 0; i < coarse.ray_count(); ++i) {
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < fine.ray_count(); ++j)
            if (fine.ray(j) == coarse.ray(i)) hit = j;
        if (!hit) return std::nullopt;
        emb.push_back(*hit);
    }
    return emb;
}

bool is_subdivision(const StackyFan& fine, const StackyFan& coarse) {
    if (fine.group() != coarse.group()) return false;
    if (!ray_embedding(fine, coarse)) return false;
    std::map<Cone, std::vector<Cone>> inside;
    for (const auto& f : fine.max_cones()) {
        auto carrier = coarse_carrier(coarse, fine, f);
        if (!carrier || carrier->size() != f.size() || !is_max_cone(coarse, *carrier)) return false;
        inside[*carrier].push_back(f);
    }
    for (const auto& c : coarse.max_cones()) {
        auto it = inside.find(c);
        if (it == inside.end()) return false;
        // fine cones inside c form a pseudomanifold whose boundary lies on the boundary of c
        std::map<Cone, int> facets;
        for (const auto& f : it->second)
            for (std::size_t k = 0; k < f.size(); ++k) {
                Cone g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
                ++facets[g];
            }
        for (const auto& [g, count] : facets) {
            auto carrier = coarse_carrier(coarse, fine, g);
            bool on_boundary = carrier && *carrier != c;
            if (!(on_boundary ? count == 1 : count == 2)) return false;
        }
    }
    return true;
}

bool is_smooth(const StackyFan& s) {
    if (!s.group().torsion().empty()) return false;
    for (const auto& c : s.max_cones()) {
        if (c.size() == s.dim()) {
            if (abs(determinant(s.bar_matrix(c))) != 1) return false;
        } else if (!cokernel(s.bar_matrix(c)).group.torsion().empty()) {
            return false;
        }
    }
    return true;
}

bool is_crepant(const SubdivisionPair& pair) {
    const auto& coarse = pair.coarse;
    for (const auto& sigma : coarse.max_cones()) {
        RationalVector minus_ones(sigma.size(), Rational(-1));
        auto theta = rational_solve(to_rational(coarse.bar_matrix(sigma).transpose()), minus_ones);
        if (!theta) return false;
        for (std::size_t j = 0; j < pair.fine.ray_count(); ++j) {
            const auto& b = pair.fine.ray(j);
            MinimalCone mc;
            try {
                mc = coarse.minimal_cone(b);
            } catch (const Error&) {
                return false;
            }
            if (!std::includes(sigma.begin(), sigma.end(), mc.cone.begin(), mc.cone.end())) continue;
            Rational value = 0;
            for (std::size_t k = 0; k < coarse.dim(); ++k) value += (*theta)[k] * b.free[k];
            if (value != -1) return false;
        }
    }
    return true;
}

std::optional<IntegerVector> support_function(const SubdivisionPair& pair) {
    auto emb = ray_embedding(pair.fine, pair.coarse);
    if (!emb) return std::nullopt;
    const std::size_t m = pair.fine.ray_count();
    std::vector<bool> old(m, false);
    for (auto j : *emb) old[j] = true;
    // variables: s_j for new rays (h_j = 1 + s_j), then one slack per wall
    std::vector<std::size_t> var_of(m, m);
    std::size_t nvars = 0;
    for (std::size_t j = 0; j < m; ++j)
        if (!old[j]) var_of[j] = nvars++;
    const auto walls = interior_walls(pair);
    RationalMatrix A(walls.size(), nvars + walls.size());
    RationalVector b(walls.size());
    for (std::size_t w = 0; w < walls.size(); ++w) {
        // sum lambda_i h_i - h_across - slack = 1
        Rational constant = 0;
        auto coeff = [&](std::size_t ray, const Rational& c) {
            if (old[ray]) return;
            A(w, var_of[ray]) += c;
            constant += c;
        };
        for (std::size_t k = 0; k < walls[w].left.size(); ++k) coeff(walls[w].left[k], walls[w].lambda[k]);
        coeff(walls[w].across, Rational(-1));
        A(w, nvars + w) = -1;
        b[w] = 1 - constant;
    }
    auto x = feasible_point(A, b);
    if (!x) return std::nullopt;
    RationalVector h(m);
    Integer den = 1;
    for (std::size_t j = 0; j < m; ++j) {
        if (old[j]) continue;
        h[j] = 1 + (*x)[var_of[j]];
        den = lcm(den, Integer(h[j].get_den()));
    }
    IntegerVector out(m);
    for (std::size_t j = 0; j < m; ++j) {
        Rational v = h[j] * den;
        out[j] = v.get_num();
    }
    return out;
}

bool certifies_regularity(const SubdivisionPair& pair, const IntegerVector& h) {
    auto emb = ray_embedding(pair.fine, pair.coarse);
    if (!emb || h.size() != pair.fine.ray_count()) return false;
    std::vector<bool> old(h.size(), false);
    for (auto j : *emb) old[j] = true;
    for (std::size_t j = 0; j < h.size(); ++j)
        if (old[j] ? h[j] != 0 : h[j] <= 0) return false;
    for (const auto& w : interior_walls(pair)) {
        Rational bend = -Rational(h[w.across]);
        for (std::size_t k = 0; k < w.left.size(); ++k) bend += w.lambda[k] * h[w.left[k]];
        if (bend <= 0) return false;
    }
    return true;
}

FamilyReport hilbert_compare(const SubdivisionPair& pair) {
    const auto& coarse = pair.coarse;
    const auto& fine = pair.fine;
    FamilyReport r;
    r.subdivision = is_subdivision(fine, coarse);
    r.smooth = is_smooth(fine);
    r.crepant = r.subdivision && is_crepant(pair);
    if (!r.subdivision) r.warnings.push_back("fine fan is not a subdivision of the coarse fan");
    if (!r.smooth) r.warnings.push_back("fine fan is not smooth");
    if (r.subdivision && !r.crepant) r.warnings.push_back("subdivision is not crepant");
    if (r.subdivision) {
        r.support = support_function(pair);
        if (!r.support) r.warnings.push_back("subdivision is not regular");
    }

    GradedPresentation orb = orbifold_chow(coarse);
    GradedPresentation res = orbifold_chow(fine);
    r.orbifold_dims = orb.dims;
    r.resolution_dims = chow_graded_dims(fine);
    r.equal = r.orbifold_dims == r.resolution_dims;
    r.orbifold_square_zero = square_zero_degree_one(orb);
    r.resolution_square_zero = square_zero_degree_one(res);
    using K = SquareZeroVerdict::Kind;
    auto a = r.orbifold_square_zero.kind, b = r.resolution_square_zero.kind;
    r.rings_distinguished = (a == K::Exists && b == K::NotExists) || (a == K::NotExists && b == K::Exists);

    if (!r.subdivision) return r;
    const std::size_t m = fine.ray_count(), d = fine.dim();
    const IntegerVector h = r.support.value_or(IntegerVector(m));

    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::pair<Integer, std::string>> plain, weighted;
        for (std::size_t i = 0; i < m; ++i) {
            plain.emplace_back(fine.ray(i).free[j], var(i));
            weighted.emplace_back(fine.ray(i).free[j], with_t(var(i), "t1", h[i]));
        }
        r.ideals.I1.push_back(linear_form(plain));
        r.ideals.I1_t.push_back(linear_form(weighted));
    }

    // deformed product of the coarse fan: non-faces and one binomial per lattice basis vector
    auto carrier_is_cone = [&](const Cone& c) { return coarse_carrier(coarse, fine, c).has_value(); };
    for (const auto& c : minimal_nonfaces(fine, carrier_is_cone)) {
        std::vector<Integer> e(m);
        for (auto i : c) e[i] = 1;
        r.ideals.I2.push_back(monomial(e));
        r.ideals.I2_t.push_back(monomial(e));
    }
    for (const auto& sigma : coarse.max_cones()) {
        Cone rays;
        for (std::size_t i = 0; i < m; ++i) {
            auto mc = coarse.minimal_cone(fine.ray(i)).cone;
            if (std::includes(sigma.begin(), sigma.end(), mc.begin(), mc.end())) rays.push_back(i);
        }
        IntegerMatrix K = kernel_basis(fine.lift_matrix(rays).hstack(fine.group().relations()));
        for (std::size_t k = 0; k < K.cols(); ++k) {
            std::vector<Integer> plus(m), minus(m);
            Integer hp = 0, hm = 0;
            for (std::size_t t = 0; t < rays.size(); ++t) {
                const Integer& x = K(t, k);
                (x > 0 ? plus : minus)[rays[t]] = abs(x);
                (x > 0 ? hp : hm) += abs(x) * h[rays[t]];
            }
            Integer lo = std::min(hp, hm);
            r.ideals.I2.push_back(monomial(plus) + " - " + monomial(minus));
            r.ideals.I2_t.push_back(with_t(monomial(plus), "t2", hp - lo) + " - " + with_t(monomial(minus), "t2", hm - lo));
        }
    }
    std::sort(r.ideals.I2.begin(), r.ideals.I2.end());
    r.ideals.I2.erase(std::unique(r.ideals.I2.begin(), r.ideals.I2.end()), r.ideals.I2.end());
    std::sort(r.ideals.I2_t.begin(), r.ideals.I2_t.end());
    r.ideals.I2_t.erase(std::unique(r.ideals.I2_t.begin(), r.ideals.I2_t.end()), r.ideals.I2_t.end());

    for (const auto& c : minimal_nonfaces(fine, [&](const Cone& c) { return fine.is_cone(c); })) {
        std::vector<Integer> e(m);
        for (auto i : c) e[i] = 1;
        r.ideals.I_fine.push_back(monomial(e));
    }
    return r;
}

}  // namespace toricdm
