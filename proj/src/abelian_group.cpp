#include "toricdm/abelian_group.hpp"

#include <sstream>

#include "toricdm/errors.hpp"
#include "toricdm/rational_linalg.hpp"
#include "toricdm/smith.hpp"

namespace toricdm {

IntegerVector GroupElement::ambient() const {
    IntegerVector v = free;
    v.insert(v.end(), torsion.begin(), torsion.end());
    return v;
}

bool GroupElement::is_zero() const {
    for (const auto& x : free)
        if (x != 0) return false;
    for (const auto& x : torsion)
        if (x != 0) return false;
    return true;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
}

std::string to_string(const GroupElement& e) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& x : e.free) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    if (!e.torsion.empty()) {
        os << " | ";
        first = true;
        for (const auto& x : e.torsion) {
            if (!first) os << ',';
            os << x;
            first = false;
        }
    }
    os << ')';
    return os.str();
}

FgAbelianGroup::FgAbelianGroup(std::size_t rank, IntegerVector torsion) : rank_(rank), torsion_(std::move(torsion)) {
    for (const auto& q : torsion_)
        if (q < 1) throw std::invalid_argument("torsion orders must be positive");
}

bool FgAbelianGroup::is_canonical() const {
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        if (torsion_[j] < 2) return false;
        if (j > 0 && !mpz_divisible_p(torsion_[j].get_mpz_t(), torsion_[j - 1].get_mpz_t())) return false;
    }
    return true;
}

std::optional<Integer> FgAbelianGroup::order() const {
    if (rank_ != 0) return std::nullopt;
    Integer o = 1;
    for (const auto& q : torsion_) o *= q;
    return o;
}

IntegerMatrix FgAbelianGroup::relations() const {
    IntegerMatrix Q(ambient_dim(), torsion_.size());
    for (std::size_t j = 0; j < torsion_.size(); ++j) Q(rank_ + j, j) = torsion_[j];
    return Q;
}

GroupElement FgAbelianGroup::zero() const {
    return {IntegerVector(rank_), IntegerVector(torsion_.size())};
}

GroupElement FgAbelianGroup::reduce(const IntegerVector& ambient) const {
    if (ambient.size() != ambient_dim()) throw Error(ErrorKind::MismatchedGroup, "ambient vector has wrong length");
    GroupElement e;
    e.free.assign(ambient.begin(), ambient.begin() + static_cast<std::ptrdiff_t>(rank_));
    for (std::size_t j = 0; j < torsion_.size(); ++j) e.torsion.push_back(mod(ambient[rank_ + j], torsion_[j]));
    return e;
}

GroupElement FgAbelianGroup::element(IntegerVector free, IntegerVector torsion) const {
    if (free.size() != rank_ || torsion.size() != torsion_.size())
        throw Error(ErrorKind::MismatchedGroup, "element shape does not match group");
    for (std::size_t j = 0; j < torsion.size(); ++j) torsion[j] = mod(torsion[j], torsion_[j]);
    return {std::move(free), std::move(torsion)};
}

void FgAbelianGroup::check(const GroupElement& a) const {
    if (!contains(a)) throw Error(ErrorKind::MismatchedGroup, "element " + to_string(a) + " not in " + toricdm::to_string(*this));
}

bool FgAbelianGroup::contains(const GroupElement& a) const {
    if (a.free.size() != rank_ || a.torsion.size() != torsion_.size()) return false;
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        if (a.torsion[j] < 0 || a.torsion[j] >= torsion_[j]) return false;
    return true;
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement c = a;
    for (std::size_t i = 0; i < rank_; ++i) c.free[i] += b.free[i];
    for (std::size_t j = 0; j < torsion_.size(); ++j) c.torsion[j] = mod(c.torsion[j] + b.torsion[j], torsion_[j]);
    return c;
}

GroupElement FgAbelianGroup::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement FgAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }

GroupElement FgAbelianGroup::scale(const Integer& k, const GroupElement& a) const {
    check(a);
    GroupElement c = a;
    for (auto& x : c.free) x *= k;
    for (std::size_t j = 0; j < torsion_.size(); ++j) c.torsion[j] = mod(k * c.torsion[j], torsion_[j]);
    return c;
}

IntegerVector FgAbelianGroup::bar(const GroupElement& a) const {
    check(a);
    return a.free;
}

std::vector<GroupElement> FgAbelianGroup::torsion_elements() const {
    std::vector<GroupElement> out{zero()};
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        std::vector<GroupElement> next;
        for (const auto& e : out)
            for (Integer k = 0; k < torsion_[j]; ++k) {
                GroupElement f = e;
                f.torsion[j] = k;
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

std::string to_string(const FgAbelianGroup& g) {
    std::vector<std::string> parts;
    if (g.rank() == 1) parts.push_back("Z");
    if (g.rank() > 1) parts.push_back("Z^" + std::to_string(g.rank()));
    for (const auto& q : g.torsion()) parts.push_back("Z/" + q.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

GroupElement Cokernel::project(const IntegerVector& x) const { return group.reduce(to_canonical * x); }

IntegerVector Cokernel::lift(const GroupElement& g) const { return from_canonical * g.ambient(); }

Cokernel cokernel(const IntegerMatrix& M) {
    SmithForm f = smith_normal_form(M);
    const std::size_t m = M.rows();
    std::vector<std::size_t> rows;
    for (std::size_t i = f.rank; i < m; ++i) rows.push_back(i);
    const std::size_t free_rank = rows.size();
    IntegerVector torsion;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i) > 1) {
            rows.push_back(i);
            torsion.push_back(f.S(i, i));
        }
    Cokernel c;
    c.group = FgAbelianGroup(free_rank, torsion);
    c.to_canonical = IntegerMatrix(rows.size(), m);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < m; ++j) c.to_canonical(k, j) = f.U(rows[k], j);
    c.from_canonical = f.Uinv.select_columns(rows);
    return c;
}

IntegerMatrix GroupHomomorphism::lift() const {
    IntegerMatrix B(target.ambient_dim(), images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!target.contains(images[i])) throw Error(ErrorKind::MismatchedGroup, "image outside target group");
        B.set_column(i, images[i].ambient());
    }
    return B;
}

IntegerMatrix GroupHomomorphism::presentation() const { return lift().hstack(target.relations()); }

GroupHomomorphism GroupHomomorphism::from_lift(const FgAbelianGroup& target, const IntegerMatrix& B) {
    if (B.rows() != target.ambient_dim()) throw Error(ErrorKind::MismatchedGroup, "lift has wrong row count");
    GroupHomomorphism h{target, {}};
    for (std::size_t i = 0; i < B.cols(); ++i) h.images.push_back(target.reduce(B.column(i)));
    return h;
}

bool cokernel_is_finite(const GroupHomomorphism& beta) {
    const std::size_t d = beta.target.rank();
    if (d == 0) return true;
    IntegerMatrix F(d, beta.images.size());
    for (std::size_t i = 0; i < beta.images.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) F(k, i) = beta.images[i].free[k];
    return rank(F) == d;
}

}  // namespace toricdm
