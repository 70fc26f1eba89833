#include "toricdm/stacky_fan.hpp"

#include <algorithm>
#include <set>

#include "toricdm/errors.hpp"
#include "toricdm/lp.hpp"
#include "toricdm/rational_linalg.hpp"
#include "toricdm/smith.hpp"

namespace toricdm {

namespace {

bool is_subset(const Cone& a, const Cone& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string cone_string(const Cone& c) {
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
    return s + "}";
}

Cone difference(const Cone& a, const Cone& b) {
    Cone out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Cones meet in a common face unless some point of both has positive weight off the shared rays.
bool improper_intersection(const StackyFan& s, const Cone& a, const Cone& b) {
    Cone only_a = difference(a, b);
    if (only_a.empty()) return false;
    const std::size_t d = s.dim();
    RationalMatrix A(d + 1, a.size() + b.size());
    RationalVector rhs(d + 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t r = 0; r < d; ++r) A(r, k) = s.ray(a[k]).free[r];
        if (std::binary_search(only_a.begin(), only_a.end(), a[k])) A(d, k) = 1;
    }
    for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t r = 0; r < d; ++r) A(r, a.size() + k) = -Rational(s.ray(b[k]).free[r]);
    rhs[d] = 1;
    return feasible_point(A, rhs).has_value();
}

}  // namespace

std::vector<Cone> SimplicialFan::all_cones() const {
    std::set<Cone> seen;
    for (const auto& c : max_cones) {
        const std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Cone f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) f.push_back(c[i]);
            seen.insert(f);
        }
    }
    std::vector<Cone> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const Cone& x, const Cone& y) { return x.size() < y.size(); });
    return out;
}

bool SimplicialFan::is_cone(const Cone& c) const {
    for (const auto& m : max_cones)
        if (is_subset(c, m)) return true;
    return false;
}

bool SimplicialFan::is_complete() const {
    std::map<Cone, int> facets;
    for (const auto& c : max_cones) {
        if (c.size() != dim) return false;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Cone f = c;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
            ++facets[f];
        }
    }
    for (const auto& [f, count] : facets)
        if (count != 2) return false;
    return true;
}

std::vector<std::size_t> SimplicialFan::f_vector() const {
    std::vector<std::size_t> f(dim + 1, 0);
    for (const auto& c : all_cones()) ++f[c.size()];
    return f;
}

StackyFan StackyFan::validate(const FgAbelianGroup& group, const std::vector<GroupElement>& rays,
                              const std::vector<Cone>& cones) {
    StackyFan s;
    const std::size_t d = group.rank();
    for (const auto& b : rays)
        if (b.free.size() != d || b.torsion.size() != group.torsion().size())
            throw Error(ErrorKind::MismatchedGroup, "ray " + to_string(b) + " does not match the group");

    // torsion part rewritten in invariant-factor form; free coordinates untouched
    s.group_ = group;
    std::vector<GroupElement> R;
    if (group.is_canonical()) {
        for (const auto& b : rays) R.push_back(group.element(b.free, b.torsion));
    } else {
        IntegerMatrix D(group.torsion().size(), group.torsion().size());
        for (std::size_t j = 0; j < group.torsion().size(); ++j) D(j, j) = group.torsion()[j];
        Cokernel c = cokernel(D);
        s.group_ = FgAbelianGroup(d, c.group.torsion());
        for (const auto& b : rays) R.push_back(s.group_.element(b.free, c.to_canonical * b.torsion));
    }
    s.beta_ = GroupHomomorphism{s.group_, R};
    s.fan_.dim = d;
    s.fan_.ray_count = R.size();

    for (std::size_t i = 0; i < R.size(); ++i) {
        bool zero = std::all_of(R[i].free.begin(), R[i].free.end(), [](const Integer& x) { return x == 0; });
        if (zero) throw Error(ErrorKind::NotOnRay, "ray " + std::to_string(i + 1) + " has zero image in N_Q");
    }

    std::vector<Cone> listed;
    for (Cone c : cones) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (auto i : c)
            if (i >= R.size()) throw Error(ErrorKind::NotACone, "cone index " + std::to_string(i + 1) + " out of range");
        if (rank(s.bar_matrix(c)) != c.size())
            throw Error(ErrorKind::DependentGenerators, "cone " + cone_string(c) + " has dependent generators");
        listed.push_back(c);
    }
    if (listed.empty()) listed.push_back({});
    for (std::size_t a = 0; a < listed.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < listed.size() && !dominated; ++b) {
            if (a == b) continue;
            if (listed[a] == listed[b]) dominated = b < a;
            else dominated = is_subset(listed[a], listed[b]);
        }
        if (!dominated) s.fan_.max_cones.push_back(listed[a]);
    }

    for (std::size_t i = 0; i < R.size(); ++i)
        if (!s.fan_.is_cone({i})) throw Error(ErrorKind::NotOnRay, "ray " + std::to_string(i + 1) + " lies in no cone");
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = i + 1; j < R.size(); ++j) {
            if (rank(s.bar_matrix({i, j})) != 1) continue;
            Integer dot = 0;
            for (std::size_t k = 0; k < d; ++k) dot += R[i].free[k] * R[j].free[k];
            if (dot > 0)
                throw Error(ErrorKind::NotOnRay, "rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                     " generate the same ray");
        }
    Cone everything;
    for (std::size_t i = 0; i < R.size(); ++i) everything.push_back(i);
    if (rank(s.bar_matrix(everything)) != d) throw Error(ErrorKind::RaysDoNotSpan, "rays do not span N_Q");

    const auto& M = s.fan_.max_cones;
    for (std::size_t a = 0; a < M.size(); ++a)
        for (std::size_t b = a + 1; b < M.size(); ++b)
            if (improper_intersection(s, M[a], M[b]))
                throw Error(ErrorKind::NotAFan,
                            "cones " + cone_string(M[a]) + " and " + cone_string(M[b]) + " do not meet in a common face");
    return s;
}

IntegerMatrix StackyFan::bar_matrix(const Cone& sigma) const {
    IntegerMatrix m(dim(), sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k)
        for (std::size_t r = 0; r < dim(); ++r) m(r, k) = ray(sigma[k]).free[r];
    return m;
}

IntegerMatrix StackyFan::lift_matrix(const Cone& sigma) const {
    IntegerMatrix m(group_.ambient_dim(), sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) m.set_column(k, ray(sigma[k]).ambient());
    return m;
}

MinimalCone StackyFan::minimal_cone(const RationalVector& point) const {
    if (point.size() != dim()) throw Error(ErrorKind::MismatchedGroup, "point has wrong dimension");
    if (std::all_of(point.begin(), point.end(), [](const Rational& x) { return x == 0; })) return {};
    for (const auto& sigma : max_cones()) {
        auto m = rational_solve(to_rational(bar_matrix(sigma)), point);
        if (!m || std::any_of(m->begin(), m->end(), [](const Rational& x) { return x < 0; })) continue;
        MinimalCone out;
        for (std::size_t k = 0; k < sigma.size(); ++k)
            if ((*m)[k] > 0) {
                out.cone.push_back(sigma[k]);
                out.coords[sigma[k]] = (*m)[k];
            }
        return out;
    }
    throw Error(ErrorKind::OutsideSupport, "point lies in no cone of the fan");
}

MinimalCone StackyFan::minimal_cone(const GroupElement& c) const { return minimal_cone(to_rational(group_.bar(c))); }

bool StackyFan::operator==(const StackyFan& o) const {
    if (group_ != o.group_ || beta_.images != o.beta_.images) return false;
    auto a = fan_.max_cones, b = o.fan_.max_cones;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool box_less(const BoxElement& a, const BoxElement& b) {
    if (a.age != b.age) return a.age < b.age;
    return a.element < b.element;
}

BoxElement box_element(const StackyFan& s, const GroupElement& v) {
    MinimalCone mc = s.minimal_cone(v);
    BoxElement e{v, mc.cone, mc.coords, 0};
    for (const auto& [i, q] : mc.coords) {
        if (q >= 1) throw std::invalid_argument("element " + to_string(v) + " is not a box element");
        e.age += q;
    }
    return e;
}

std::vector<BoxElement> box_of_cone(const StackyFan& s, const Cone& sigma) {
    const std::size_t d = s.dim();
    if (sigma.size() != d || std::find(s.max_cones().begin(), s.max_cones().end(), sigma) == s.max_cones().end())
        throw Error(ErrorKind::NotMaximalCone, cone_string(sigma) + " is not a d-dimensional cone of the fan");
    IntegerMatrix B = s.bar_matrix(sigma);
    RationalMatrix inv = d == 0 ? RationalMatrix() : *inverse(to_rational(B));
    IntegerVector lo(d), hi(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) (B(r, k) < 0 ? lo[r] : hi[r]) += B(r, k);

    std::vector<IntegerVector> points;
    IntegerVector p = lo;
    for (;;) {
        RationalVector m = d == 0 ? RationalVector() : inv * to_rational(p);
        if (std::all_of(m.begin(), m.end(), [](const Rational& x) { return x >= 0 && x < 1; })) points.push_back(p);
        std::size_t r = 0;
        while (r < d && p[r] == hi[r]) p[r] = lo[r], ++r;
        if (r == d) break;
        ++p[r];
    }

    std::vector<BoxElement> out;
    for (const auto& pt : points)
        for (const auto& t : s.group().torsion_elements()) {
            GroupElement v{pt, t.torsion};
            RationalVector m = d == 0 ? RationalVector() : inv * to_rational(pt);
            BoxElement e{v, {}, {}, 0};
            for (std::size_t k = 0; k < d; ++k)
                if (m[k] > 0) {
                    e.minimal_cone.push_back(sigma[k]);
                    e.frac_coords[sigma[k]] = m[k];
                    e.age += m[k];
                }
            out.push_back(e);
        }
    std::sort(out.begin(), out.end(), box_less);
    return out;
}

std::vector<BoxElement> box(const StackyFan& s) {
    std::map<GroupElement, BoxElement> seen;
    for (const auto& sigma : s.max_cones()) {
        if (sigma.size() != s.dim()) continue;
        for (auto& e : box_of_cone(s, sigma)) seen.emplace(e.element, e);
    }
    std::vector<BoxElement> out;
    for (auto& [k, e] : seen) out.push_back(e);
    std::sort(out.begin(), out.end(), box_less);
    return out;
}

BoxRepresentative box_representative(const StackyFan& s, const GroupElement& c) {
    MinimalCone mc = s.minimal_cone(c);
    BoxRepresentative r;
    GroupElement v = c;
    for (const auto& [i, m] : mc.coords) {
        Integer f = floor(m);
        r.floors[i] = f;
        v = s.group().sub(v, s.group().scale(f, s.ray(i)));
    }
    r.v = box_element(s, v);
    return r;
}

BoxElement inverse_box(const StackyFan& s, const BoxElement& v) {
    const auto& N = s.group();
    GroupElement w = N.negate(v.element);
    for (auto i : v.minimal_cone) w = N.add(w, s.ray(i));
    return box_element(s, w);
}

Cokernel local_group_presentation(const StackyFan& s, const Cone& sigma) {
    return cokernel(s.lift_matrix(sigma).hstack(s.group().relations()));
}

FgAbelianGroup local_group(const StackyFan& s, const Cone& sigma) {
    if (sigma.size() != s.dim() || std::find(s.max_cones().begin(), s.max_cones().end(), sigma) == s.max_cones().end())
        throw Error(ErrorKind::NotMaximalCone, cone_string(sigma) + " is not a d-dimensional cone of the fan");
    return local_group_presentation(s, sigma).group;
}

QuotientStackyFan link_and_quotient(const StackyFan& s, const Cone& sigma_in) {
    Cone sigma = sigma_in;
    std::sort(sigma.begin(), sigma.end());
    if (!s.is_cone(sigma)) throw Error(ErrorKind::NotACone, cone_string(sigma) + " is not a cone of the fan");
    QuotientStackyFan q;
    q.parent = std::make_shared<const StackyFan>(s);
    q.sigma = sigma;
    std::map<std::size_t, std::size_t> index;
    for (std::size_t i = 0; i < s.ray_count(); ++i) {
        if (std::binary_search(sigma.begin(), sigma.end(), i)) continue;
        Cone c = sigma;
        c.insert(std::upper_bound(c.begin(), c.end(), i), i);
        if (s.is_cone(c)) {
            index[i] = q.link.size();
            q.link.push_back(i);
        }
    }
    q.projection = local_group_presentation(s, sigma);
    std::vector<GroupElement> rays;
    for (auto i : q.link) rays.push_back(q.projection.project(s.ray(i).ambient()));
    std::vector<Cone> cones;
    for (const auto& tau : s.max_cones()) {
        if (!is_subset(sigma, tau)) continue;
        Cone c;
        for (auto i : difference(tau, sigma)) c.push_back(index.at(i));
        std::sort(c.begin(), c.end());
        cones.push_back(c);
    }
    try {
        q.fan = StackyFan::validate(q.projection.group, rays, cones);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RaysDoNotSpan)
            throw Error(ErrorKind::ConditionSpanQuotFails, "link of " + cone_string(sigma) + " does not span N(sigma)_Q");
        throw;
    }
    return q;
}

std::vector<Cone> irrelevant_ideal(const StackyFan& s) {
    std::vector<Cone> comps;
    for (const auto& sigma : s.max_cones()) {
        Cone c;
        for (std::size_t i = 0; i < s.ray_count(); ++i)
            if (!std::binary_search(sigma.begin(), sigma.end(), i)) c.push_back(i);
        comps.push_back(c);
    }
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::vector<Cone> out;
    for (const auto& c : comps) {
        bool redundant = false;
        for (const auto& o : comps)
            if (o != c && is_subset(o, c)) redundant = true;
        if (!redundant) out.push_back(c);
    }
    return out;
}

bool stacky_morphism_check(const IntegerMatrix& phi, const StackyFan& source, const StackyFan& target) {
    const FgAbelianGroup& N = target.group();
    const FgAbelianGroup& Np = source.group();
    if (phi.rows() != N.ambient_dim() || phi.cols() != Np.ambient_dim()) return false;
    const IntegerMatrix Q = N.relations();
    if (!lattice_contains(Q, phi * Np.relations())) return false;
    for (const auto& sp : source.max_cones()) {
        Cone image;
        std::vector<std::pair<GroupElement, Cone>> images;
        for (auto i : sp) {
            GroupElement x = N.reduce(phi * source.ray(i).ambient());
            MinimalCone mc;
            try {
                mc = target.minimal_cone(x);
            } catch (const Error&) {
                return false;
            }
            images.emplace_back(x, mc.cone);
            Cone u;
            std::set_union(image.begin(), image.end(), mc.cone.begin(), mc.cone.end(), std::back_inserter(u));
            image = u;
        }
        if (!target.is_cone(image)) return false;
        for (const auto& [x, cone] : images)
            if (!integer_solve(target.lift_matrix(cone).hstack(Q), x.ambient())) return false;
    }
    return true;
}

}  // namespace toricdm
