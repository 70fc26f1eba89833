#include "toricdm/io.hpp"

#include <fstream>
#include <sstream>

#include "toricdm/errors.hpp"

namespace toricdm {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Integer integer_of(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    parse_error(where + ": expected an integer");
}

IntegerVector integers_of(const json& j, const std::string& where) {
    if (!j.is_array()) parse_error(where + ": expected a list of integers");
    IntegerVector v;
    for (const auto& x : j) v.push_back(integer_of(x, where));
    return v;
}

std::vector<GroupElement> rays_of(const json& j, std::size_t rank, std::size_t tors, const std::string& where) {
    if (!j.is_array()) parse_error(where + ": expected a list of rays");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& r = j[i];
        std::string at = where + "[" + std::to_string(i + 1) + "]";
        if (!r.is_object() || !r.contains("free")) parse_error(at + ": expected {free, torsion}");
        GroupElement e{integers_of(r["free"], at + ".free"), r.contains("torsion") ? integers_of(r["torsion"], at + ".torsion")
                                                                                      : IntegerVector{}};
        if (e.free.size() != rank || e.torsion.size() != tors) parse_error(at + ": wrong number of coordinates");
        out.push_back(e);
    }
    return out;
}

std::vector<Cone> cones_of(const json& j, std::size_t ray_count, const std::string& where) {
    if (!j.is_array()) parse_error(where + ": expected a list of cones");
    std::vector<Cone> out;
    for (const auto& c : j) {
        if (!c.is_array()) parse_error(where + ": each cone is a list of ray indices");
        Cone cone;
        for (const auto& x : c) {
            if (!x.is_number_integer()) parse_error(where + ": ray indices are integers");
            long long k = x.get<long long>();
            if (k < 1 || static_cast<std::size_t>(k) > ray_count)
                parse_error(where + ": ray index " + std::to_string(k) + " out of range");
            cone.push_back(static_cast<std::size_t>(k - 1));
        }
        out.push_back(cone);
    }
    return out;
}

json rays_json(const std::vector<GroupElement>& rays) {
    json a = json::array();
    for (const auto& r : rays) a.push_back(to_json(r));
    return a;
}

json cones_json(const std::vector<Cone>& cones) {
    json a = json::array();
    for (const auto& c : cones) {
        json x = json::array();
        for (auto i : c) x.push_back(i + 1);
        a.push_back(x);
    }
    return a;
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json coords_json(const std::map<std::size_t, Rational>& m) {
    json o = json::object();
    for (const auto& [i, q] : m) o[std::to_string(i + 1)] = to_json(q);
    return o;
}

json coordinates_json(const Coordinates& c) {
    json o = json::object();
    for (const auto& [i, q] : c) o[std::to_string(i + 1)] = to_json(q);
    return o;
}

}  // namespace

InputDocument parse_document(const json& j_in) {
    const json* p = &j_in;
    if (p->is_object() && p->contains("document")) p = &(*p)["document"];
    const json& j = *p;
    if (!j.is_object()) parse_error("document must be a JSON object");
    if (!j.contains("group") || !j["group"].is_object()) parse_error("missing group");
    const json& g = j["group"];
    if (!g.contains("rank") || !g["rank"].is_number_integer() || g["rank"].get<long long>() < 0)
        parse_error("group.rank must be a nonnegative integer");
    IntegerVector tors = g.contains("torsion") ? integers_of(g["torsion"], "group.torsion") : IntegerVector{};
    for (const auto& q : tors)
        if (q < 1) parse_error("group.torsion orders must be positive");
    InputDocument doc;
    doc.group = FgAbelianGroup(g["rank"].get<std::size_t>(), tors);
    if (!j.contains("rays")) parse_error("missing rays");
    doc.rays = rays_of(j["rays"], doc.group.rank(), tors.size(), "rays");
    doc.cones = j.contains("cones") ? cones_of(j["cones"], doc.rays.size(), "cones") : std::vector<Cone>{};
    if (j.contains("subdivision") && !j["subdivision"].is_null()) {
        const json& s = j["subdivision"];
        if (!s.is_object()) parse_error("subdivision must be an object");
        InputDocument::Subdivision sub;
        sub.rays = s.contains("rays") ? rays_of(s["rays"], doc.group.rank(), tors.size(), "subdivision.rays")
                                      : std::vector<GroupElement>{};
        if (!s.contains("cones")) parse_error("subdivision.cones missing");
        sub.cones = cones_of(s["cones"], doc.rays.size() + sub.rays.size(), "subdivision.cones");
        doc.subdivision = sub;
    }
    return doc;
}

InputDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        parse_error(path + ": " + e.what());
    }
    return parse_document(j);
}

json to_json(const InputDocument& doc) {
    json j;
    j["group"] = to_json(doc.group);
    j["rays"] = rays_json(doc.rays);
    j["cones"] = cones_json(doc.cones);
    if (doc.subdivision) j["subdivision"] = {{"rays", rays_json(doc.subdivision->rays)}, {"cones", cones_json(doc.subdivision->cones)}};
    return j;
}

InputDocument document_of(const StackyFan& s) {
    return {s.group(), s.beta().images, s.max_cones(), std::nullopt};
}

StackyFan build_fan(const InputDocument& doc) { return StackyFan::validate(doc.group, doc.rays, doc.cones); }

SubdivisionPair build_pair(const InputDocument& doc) {
    if (!doc.subdivision) parse_error("document has no subdivision block");
    StackyFan coarse = build_fan(doc);
    std::vector<GroupElement> rays = doc.rays;
    rays.insert(rays.end(), doc.subdivision->rays.begin(), doc.subdivision->rays.end());
    StackyFan fine = StackyFan::validate(doc.group, rays, doc.subdivision->cones);
    return {coarse, fine};
}

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string dims_string(const GradedDims& dims) {
    std::string s;
    for (const auto& [q, n] : dims) s += (s.empty() ? "" : ", ") + rational_string(q) + ": " + std::to_string(n);
    return s;
}

std::string cone_string(const Cone& c) {
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
    return s + "}";
}

json to_json(const Rational& q) { return rational_string(q); }

json to_json(const FgAbelianGroup& g) {
    json t = json::array();
    for (const auto& q : g.torsion()) t.push_back(integer_json(q));
    return {{"rank", g.rank()}, {"torsion", t}};
}

json to_json(const GroupElement& e) {
    json f = json::array(), t = json::array();
    for (const auto& x : e.free) f.push_back(integer_json(x));
    for (const auto& x : e.torsion) t.push_back(integer_json(x));
    return {{"free", f}, {"torsion", t}};
}

json to_json(const BoxElement& b) {
    json c = json::array();
    for (auto i : b.minimal_cone) c.push_back(i + 1);
    return {{"element", to_json(b.element)}, {"minimal_cone", c}, {"frac_coords", coords_json(b.frac_coords)}, {"age", to_json(b.age)}};
}

json to_json(const GradedDims& dims) {
    json o = json::object();
    for (const auto& [q, n] : dims) o[rational_string(q)] = n;
    return o;
}

json to_json(const GradedPresentation& p, bool table) {
    json j;
    j["dims"] = to_json(p.dims);
    j["total"] = p.total_dim();
    if (!table) return j;
    json basis = json::array();
    for (const auto& b : p.basis)
        basis.push_back({{"monomial", to_json(b.monomial)}, {"degree", to_json(b.degree)}, {"sector", to_json(b.sector.element)}});
    j["basis"] = basis;
    json sc = json::array();
    for (const auto& [ab, c] : p.structure)
        sc.push_back({{"a", ab.first + 1}, {"b", ab.second + 1}, {"product", coordinates_json(c)}});
    j["structure_constants"] = sc;
    return j;
}

json to_json(const FamilyReport& r) {
    json j;
    j["subdivision"] = r.subdivision;
    j["smooth"] = r.smooth;
    j["crepant"] = r.crepant;
    if (r.support) {
        json h = json::array();
        for (const auto& x : *r.support) h.push_back(integer_json(x));
        j["support_function"] = h;
    } else {
        j["support_function"] = nullptr;
    }
    j["orbifold_dims"] = to_json(r.orbifold_dims);
    j["resolution_dims"] = to_json(r.resolution_dims);
    j["equal"] = r.equal;
    j["square_zero"] = {{"orbifold", verdict_name(r.orbifold_square_zero.kind)},
                        {"resolution", verdict_name(r.resolution_square_zero.kind)}};
    j["rings_distinguished"] = r.rings_distinguished;
    j["warnings"] = r.warnings;
    j["ideals"] = {{"I1", r.ideals.I1}, {"I2", r.ideals.I2}, {"I1_t", r.ideals.I1_t}, {"I2_t", r.ideals.I2_t}, {"I_fine", r.ideals.I_fine}};
    return j;
}

}  // namespace toricdm
