#include "toricdm/gale.hpp"

#include <functional>
#include <numeric>

#include "toricdm/errors.hpp"
#include "toricdm/rational_linalg.hpp"
#include "toricdm/smith.hpp"

namespace toricdm {

GroupHomomorphism GaleDualData::as_homomorphism() const { return GroupHomomorphism::from_lift(group, dual_map); }

GaleDualData gale_dual_from_lift(const FgAbelianGroup& target, const IntegerMatrix& B) {
    const std::size_t n = B.cols();
    IntegerMatrix T = B.hstack(target.relations()).transpose();
    GaleDualData g;
    g.change_of_basis = cokernel(T);
    Cokernel& c = g.change_of_basis;
    g.group = c.group;
    const std::size_t a = c.group.rank();
    // first nonzero entry of each free row positive
    for (std::size_t k = 0; k < a; ++k) {
        Integer lead = 0;
        for (std::size_t i = 0; i < n && lead == 0; ++i) lead = c.to_canonical(k, i);
        if (lead >= 0) continue;
        for (std::size_t j = 0; j < c.to_canonical.cols(); ++j) c.to_canonical(k, j) = -c.to_canonical(k, j);
        for (std::size_t i = 0; i < c.from_canonical.rows(); ++i) c.from_canonical(i, k) = -c.from_canonical(i, k);
    }
    g.dual_map = IntegerMatrix(c.to_canonical.rows(), n);
    for (std::size_t i = 0; i < n; ++i) {
        IntegerVector e(T.rows());
        e[i] = 1;
        g.dual_map.set_column(i, c.project(e).ambient());
    }
    return g;
}

GaleDualData gale_dual(const GroupHomomorphism& beta) { return gale_dual_from_lift(beta.target, beta.lift()); }

namespace {

IntegerMatrix rows_of(const IntegerMatrix& m, std::size_t r0, std::size_t r1) { return m.block(r0, r1, 0, m.cols()); }

IntegerMatrix diag(const IntegerVector& q) {
    IntegerMatrix d(q.size(), q.size());
    for (std::size_t i = 0; i < q.size(); ++i) d(i, i) = q[i];
    return d;
}

// x with A x = B column by column.
std::optional<IntegerMatrix> integer_solve_all(const IntegerMatrix& A, const IntegerMatrix& B) {
    IntegerMatrix X(A.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        auto x = integer_solve(A, B.column(j));
        if (!x) return std::nullopt;
        X.set_column(j, *x);
    }
    return X;
}

bool trivial_cokernel(const IntegerMatrix& M) { return cokernel(M).group.is_trivial(); }

// First a coordinates of a kernel basis of [f | R].
IntegerMatrix projected_kernel(const IntegerMatrix& f, const IntegerMatrix& R) {
    IntegerMatrix K = kernel_basis(f.hstack(R));
    return K.block(0, f.cols(), 0, K.cols());
}

bool well_defined(const IntegerMatrix& f, const IntegerMatrix& Rsrc, const IntegerMatrix& Rtgt) {
    return lattice_contains(Rtgt, f * Rsrc);
}
bool injective(const IntegerMatrix& f, const IntegerMatrix& Rsrc, const IntegerMatrix& Rtgt) {
    return lattice_contains(Rsrc, projected_kernel(f, Rtgt));
}
bool surjective(const IntegerMatrix& g, const IntegerMatrix& Rtgt) { return trivial_cokernel(g.hstack(Rtgt)); }
// im f + im Rmid equals the kernel of g (mod Rtgt).
bool exact_at(const IntegerMatrix& f, const IntegerMatrix& Rmid, const IntegerMatrix& g, const IntegerMatrix& Rtgt) {
    return lattice_equal(f.hstack(Rmid), projected_kernel(g, Rtgt));
}

struct Presented {
    IntegerMatrix B, Q;
};

Presented presented(const GroupHomomorphism& beta) { return {beta.lift(), beta.target.relations()}; }

// Ambient map Z^{n_t + r_t} -> Z^{n_s + r_s} of the dual row induced by a square (top, bottom).
IntegerMatrix dual_ambient(const Presented& src, const Presented& tgt, const IntegerMatrix& top, const IntegerMatrix& bottom) {
    auto sigma = integer_solve_all(tgt.Q, bottom * src.Q);
    auto omega = integer_solve_all(tgt.Q, bottom * src.B - tgt.B * top);
    if (!sigma || !omega) throw Error(ErrorKind::BadDiagram, "square does not lift to the presentations");
    IntegerMatrix upper = top.hstack(IntegerMatrix(top.rows(), src.Q.cols()));
    IntegerMatrix Pi = upper.vstack(omega->hstack(*sigma));
    return Pi.transpose();
}

}  // namespace

bool maps_equivalent(const FgAbelianGroup& G, const IntegerMatrix& f, const IntegerMatrix& g) {
    const std::size_t a = G.rank(), r = G.torsion().size(), n = f.cols();
    if (f.rows() != a + r || g.rows() != a + r || g.cols() != n) return false;
    const IntegerMatrix ff = rows_of(f, 0, a), ft = rows_of(f, a, a + r);
    const IntegerMatrix gf = rows_of(g, 0, a), gt = rows_of(g, a, a + r);
    if (rank(ff) != a) throw std::invalid_argument("maps_equivalent: free part must have full row rank");

    // A ff = gf on the free part
    IntegerMatrix A = IntegerMatrix::identity(a);
    if (a > 0) {
        RowEchelon e = rref(to_rational(ff));
        IntegerMatrix fsub = ff.select_columns(e.pivots), gsub = gf.select_columns(e.pivots);
        auto inv = inverse(to_rational(fsub));
        RationalMatrix Aq = to_rational(gsub) * *inv;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t k = 0; k < a; ++k) {
                if (Aq(i, k).get_den() != 1) return false;
                A(i, k) = Aq(i, k).get_num();
            }
        if (!is_unimodular(A) || A * ff != gf) return false;
    }
    if (r == 0) return true;

    const IntegerVector& q = G.torsion();
    const IntegerMatrix Qd = diag(q);
    // torsion endomorphisms: entry (x, y) is a multiple of q_x / gcd(q_x, q_y), taken mod q_x
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<Integer> step, count;
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            Integer gc = gcd(q[x], q[y]);
            slots.emplace_back(x, y);
            step.push_back(q[x] / gc);
            count.push_back(gc);
        }
    IntegerMatrix tau(r, r);
    std::function<bool(std::size_t)> search = [&](std::size_t s) -> bool {
        if (s == slots.size()) {
            if (!trivial_cokernel(tau.hstack(Qd))) return false;
            // h_x ff + y q_x = (gt - tau ft)_x for each torsion row x
            IntegerMatrix rhs = gt - tau * ft;
            for (std::size_t x = 0; x < r; ++x) {
                IntegerMatrix sys = ff.transpose().hstack(diag(IntegerVector(n, q[x])));
                if (!integer_solve(sys, rhs.row(x))) return false;
            }
            return true;
        }
        auto [x, y] = slots[s];
        for (Integer k = 0; k < count[s]; ++k) {
            tau(x, y) = k * step[s];
            if (search(s + 1)) return true;
        }
        return false;
    };
    return search(0);
}

bool double_dual_check(const GroupHomomorphism& beta) {
    if (!cokernel_is_finite(beta)) throw Error(ErrorKind::InfiniteCokernel, "cokernel of beta is infinite");
    const std::size_t n = beta.source_rank();
    const FgAbelianGroup& N = beta.target;
    const IntegerMatrix B = beta.lift(), Q = N.relations();
    const IntegerMatrix M = B.hstack(Q);
    const IntegerMatrix T = M.transpose();
    const std::size_t dr = N.ambient_dim();

    GaleDualData first = gale_dual(beta);
    const IntegerMatrix& C = first.dual_map;
    const IntegerMatrix Qp = first.group.relations();
    const IntegerMatrix& mu = first.change_of_basis.from_canonical;

    GaleDualData second = gale_dual_from_lift(first.group, C);
    const IntegerMatrix T2 = C.hstack(Qp).transpose();

    // Lambda = [[I_n, 0], [eta, kappa]] with [C_T T] Lambda = mu [C Q']
    IntegerMatrix CT(n + N.torsion().size(), n);
    for (std::size_t i = 0; i < n; ++i) CT(i, i) = 1;
    auto eta = integer_solve_all(T, mu * C - CT);
    auto kappa = integer_solve_all(T, mu * Qp);
    if (!eta || !kappa) return false;
    IntegerMatrix Lambda = IntegerMatrix::identity(n).hstack(IntegerMatrix(n, Qp.cols())).vstack(eta->hstack(*kappa));
    IntegerMatrix LT = Lambda.transpose();

    // R_T = [[I_n, 0], [M]] presents DG(beta^vee) in T-coordinates
    IntegerMatrix RT = IntegerMatrix::identity(n).hstack(IntegerMatrix(n, Q.cols())).vstack(M);
    if (!lattice_contains(T2, LT * RT)) return false;

    // Phi(u, w) = B u - w identifies Z^{n+d+r} / im R_T with N
    IntegerMatrix Phi = B.hstack(-IntegerMatrix::identity(dr));
    IntegerMatrix sys = LT.hstack(-T2);
    IntegerMatrix Psi(dr, T2.rows());
    for (std::size_t k = 0; k < T2.rows(); ++k) {
        IntegerVector e(T2.rows());
        e[k] = 1;
        auto z = integer_solve(sys, e);
        if (!z) return false;
        IntegerVector zz(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(LT.cols()));
        Psi.set_column(k, Phi * zz);
    }
    if (!lattice_contains(Q, Psi * T2)) return false;

    IntegerMatrix PsiCan = Psi * second.change_of_basis.from_canonical;
    if (!lattice_contains(Q, PsiCan * second.group.relations())) return false;
    if (!lattice_contains(Q, PsiCan * second.dual_map - B)) return false;
    if (!trivial_cokernel(PsiCan.hstack(Q))) return false;
    return second.group == cokernel(Q).group;
}

bool dual_sequence_check(const ShortExactDiagram& D) {
    const Presented P1 = presented(D.beta1), P2 = presented(D.beta2), P3 = presented(D.beta3);
    const std::size_t n1 = D.beta1.source_rank(), n2 = D.beta2.source_rank(), n3 = D.beta3.source_rank();
    auto bad = [](const std::string& why) { return Error(ErrorKind::BadDiagram, why); };
    if (D.i.rows() != n2 || D.i.cols() != n1 || D.p.rows() != n3 || D.p.cols() != n2) throw bad("top maps have wrong shape");
    if (D.j.rows() != P2.B.rows() || D.j.cols() != P1.B.rows() || D.s.rows() != P3.B.rows() || D.s.cols() != P2.B.rows())
        throw bad("bottom maps have wrong shape");
    if (!well_defined(D.j, P1.Q, P2.Q) || !well_defined(D.s, P2.Q, P3.Q)) throw bad("bottom maps are not well defined");

    const IntegerMatrix none1(n1, 0), none2(n2, 0), none3(n3, 0);
    if (!injective(D.i, none1, none2) || !exact_at(D.i, none2, D.p, none3) || !surjective(D.p, none3))
        throw bad("top row is not exact");
    if (!lattice_contains(P3.Q, D.s * D.j) || !injective(D.j, P1.Q, P2.Q) || !exact_at(D.j, P2.Q, D.s, P3.Q) ||
        !surjective(D.s, P3.Q))
        throw bad("bottom row is not exact");
    if (!lattice_contains(P2.Q, D.j * P1.B - P2.B * D.i) || !lattice_contains(P3.Q, D.s * P2.B - P3.B * D.p))
        throw bad("squares do not commute");
    if (!cokernel_is_finite(D.beta1) || !cokernel_is_finite(D.beta2) || !cokernel_is_finite(D.beta3))
        throw bad("a column has infinite cokernel");

    const GaleDualData G1 = gale_dual(D.beta1), G2 = gale_dual(D.beta2), G3 = gale_dual(D.beta3);
    const IntegerMatrix R1 = G1.group.relations(), R2 = G2.group.relations(), R3 = G3.group.relations();

    IntegerMatrix delta = G2.change_of_basis.to_canonical * dual_ambient(P2, P3, D.p, D.s) * G3.change_of_basis.from_canonical;
    IntegerMatrix eps = G1.change_of_basis.to_canonical * dual_ambient(P1, P2, D.i, D.j) * G2.change_of_basis.from_canonical;

    if (!well_defined(delta, R3, R2) || !well_defined(eps, R2, R1)) return false;
    if (!injective(delta, R3, R2)) return false;
    if (!exact_at(delta, R2, eps, R1)) return false;
    if (!surjective(eps, R1)) return false;
    if (!lattice_contains(R2, delta * G3.dual_map - G2.dual_map * D.p.transpose())) return false;
    if (!lattice_contains(R1, eps * G2.dual_map - G1.dual_map * D.i.transpose())) return false;
    return true;
}

}  // namespace toricdm
