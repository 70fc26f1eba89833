#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "toricdm/errors.hpp"
#include "toricdm/gale.hpp"
#include "toricdm/io.hpp"

using namespace toricdm;

namespace {

enum Exit { Ok = 0, ParseFailure = 1, Invalid = 2, Unequal = 3 };

bool as_json = false;
bool table = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string matrix_string(const IntegerMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string frac_string(const std::map<std::size_t, Rational>& m) {
    std::string s;
    for (const auto& [i, q] : m) s += (s.empty() ? "" : " ") + std::to_string(i + 1) + ":" + q.get_str();
    return s.empty() ? "-" : s;
}

// Order of the image of v in N(sigma(v)); v is torsion there.
Integer sector_order(const SectorReport& r) {
    GroupElement g = r.sector_fan.projection.project(r.box.element.ambient());
    Integer order = 1;
    const auto& q = r.sector_fan.projection.group.torsion();
    for (std::size_t i = 0; i < q.size(); ++i) {
        Integer d = gcd(g.torsion[i], q[i]);
        order = lcm(order, q[i] / d);
    }
    return order;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

int cmd_validate(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    if (as_json) {
        json j;
        j["valid"] = true;
        j["group"] = to_json(s.group());
        j["dim"] = s.dim();
        j["rays"] = s.ray_count();
        j["max_cones"] = s.max_cones().size();
        j["complete"] = s.is_complete();
        j["document"] = to_json(doc);
        emit(j);
    } else {
        std::cout << "valid: N = " << to_string(s.group()) << ", " << s.ray_count() << " rays, " << s.max_cones().size()
                  << " maximal cones, " << (s.is_complete() ? "complete" : "not complete") << "\n";
    }
    return Ok;
}

int cmd_gale_dual(const InputDocument& doc) {
    GroupHomomorphism beta = doc.cones.empty() ? GroupHomomorphism{doc.group, doc.rays} : build_fan(doc).beta();
    if (!cokernel_is_finite(beta)) throw Error(ErrorKind::InfiniteCokernel, "the rays do not generate a finite-index subgroup");
    GaleDualData g = gale_dual(beta);
    if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < g.dual_map.rows(); ++i) {
            json r = json::array();
            for (const auto& x : g.dual_map.row(i)) r.push_back(x.get_si());
            rows.push_back(r);
        }
        emit({{"group", to_json(g.group)}, {"dual_map", rows}, {"document", to_json(doc)}});
    } else {
        std::cout << "DG = " << to_string(g.group) << "; beta_vee = " << matrix_string(g.dual_map) << "\n";
    }
    return Ok;
}

int cmd_box(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    auto b = box(s);
    if (as_json) {
        json a = json::array();
        for (const auto& v : b) a.push_back(to_json(v));
        emit({{"box", a}, {"document", to_json(doc)}});
        return Ok;
    }
    std::cout << pad("element", 16) << pad("cone", 12) << pad("coords", 24) << "age\n";
    for (const auto& v : b)
        std::cout << pad(to_string(v.element), 16) << pad(cone_string(v.minimal_cone), 12)
                  << pad(frac_string(v.frac_coords), 24) << v.age.get_str() << "\n";
    return Ok;
}

int cmd_sectors(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    auto sectors = inertia_components(s);
    if (as_json) {
        json a = json::array();
        for (const auto& r : sectors) {
            const StackyFan& q = r.sector_fan.fan;
            json link = json::array();
            for (auto i : r.sector_fan.link) link.push_back(i + 1);
            a.push_back({{"box", to_json(r.box)},
                         {"age", to_json(r.age)},
                         {"order", sector_order(r).get_si()},
                         {"quotient", {{"group", to_json(q.group())}, {"dim", q.dim()}, {"link", link}, {"max_cones", q.max_cones().size()}}}});
        }
        emit({{"sectors", a}, {"document", to_json(doc)}});
        return Ok;
    }
    for (const auto& r : sectors) {
        const StackyFan& q = r.sector_fan.fan;
        std::cout << pad(to_string(r.box.element), 16) << "age " << pad(r.age.get_str(), 6) << "cone "
                  << pad(cone_string(r.box.minimal_cone), 10) << "quotient N = " << to_string(q.group()) << ", "
                  << q.ray_count() << " rays, " << q.max_cones().size() << " maximal cones; isotropy Z/"
                  << sector_order(r) << "\n";
    }
    return Ok;
}

int cmd_chow(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    GradedDims dims = chow_graded_dims(s);
    auto h = h_vector(s.fan());
    bool match = dims.size() == h.size();
    for (std::size_t k = 0; match && k < h.size(); ++k) {
        auto it = dims.find(Rational(static_cast<long>(k)));
        std::size_t d = it == dims.end() ? 0 : it->second;
        match = Integer(static_cast<long>(d)) == h[k];
    }
    if (as_json) {
        json hv = json::array();
        for (const auto& x : h) hv.push_back(x.get_si());
        emit({{"dims", to_json(dims)}, {"h_vector", hv}, {"match", match}, {"document", to_json(doc)}});
    } else {
        std::cout << "dims: " << dims_string(dims) << "\nh-vector:";
        for (const auto& x : h) std::cout << " " << x;
        std::cout << "\nmatch: " << (match ? "yes" : "no") << "\n";
    }
    return Ok;
}

std::string coords_string(const GradedPresentation& p, const Coordinates& c) {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [i, q] : c) {
        std::string coeff = q == 1 ? "" : q == -1 ? "-" : q.get_str() + " ";
        s += (s.empty() ? "" : " + ") + coeff + "e" + std::to_string(i + 1);
    }
    (void)p;
    return s;
}

int cmd_orbifold_chow(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    GradedPresentation p = orbifold_chow(s);
    if (as_json) {
        json j = to_json(p, table);
        j["document"] = to_json(doc);
        emit(j);
        return Ok;
    }
    std::cout << "dims: " << dims_string(p.dims) << "\ntotal: " << p.total_dim() << "\n";
    if (!table) return Ok;
    std::cout << "basis:\n";
    for (std::size_t a = 0; a < p.basis.size(); ++a) {
        const auto& b = p.basis[a];
        std::cout << "  e" << a + 1 << " = y^" << to_string(b.monomial) << "  degree " << b.degree.get_str() << "  sector "
                  << to_string(b.sector.element) << "\n";
    }
    std::cout << "structure constants:\n";
    for (std::size_t a = 0; a < p.basis.size(); ++a)
        for (std::size_t b = a; b < p.basis.size(); ++b) {
            auto c = p.product(a, b);
            if (c.empty()) continue;
            std::cout << "  e" << a + 1 << " * e" << b + 1 << " = " << coords_string(p, c) << "\n";
        }
    return Ok;
}

int cmd_moduli(const InputDocument& doc) {
    StackyFan s = build_fan(doc);
    auto comps = moduli_components(s);
    if (as_json) {
        json a = json::array();
        for (const auto& m : comps) {
            json t = json::array(), c = json::array(), e = json::object();
            for (const auto& v : m.triple) t.push_back(to_json(v.element));
            for (auto i : m.cone) c.push_back(i + 1);
            for (const auto& [k, x] : m.exponents) e[std::to_string(k + 1)] = x.get_si();
            a.push_back({{"triple", t}, {"cone", c}, {"exponents", e}});
        }
        emit({{"components", a}, {"document", to_json(doc)}});
        return Ok;
    }
    std::cout << "components: " << comps.size() << "\n";
    for (const auto& m : comps) {
        std::string e;
        for (const auto& [k, x] : m.exponents) e += (e.empty() ? "" : ", ") + std::to_string(k + 1) + ": " + x.get_str();
        std::cout << "  (" << to_string(m.triple[0].element) << ", " << to_string(m.triple[1].element) << ", "
                  << to_string(m.triple[2].element) << ")  cone " << cone_string(m.cone) << "  exponents {" << e << "}\n";
    }
    return Ok;
}

int cmd_crepant_compare(const InputDocument& doc) {
    SubdivisionPair pair = build_pair(doc);
    FamilyReport r = hilbert_compare(pair);
    int code = !r.preconditions_hold() ? Invalid : r.equal ? Ok : Unequal;
    if (as_json) {
        json j = to_json(r);
        j["document"] = to_json(doc);
        emit(j);
    } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "subdivision: " << yn(r.subdivision) << "\nsmooth: " << yn(r.smooth) << "\ncrepant: " << yn(r.crepant)
                  << "\n";
        std::cout << "regular: ";
        if (r.support) {
            std::cout << "yes, heights";
            for (const auto& x : *r.support) std::cout << " " << x;
            std::cout << "\n";
        } else {
            std::cout << "no support function found\n";
        }
        std::cout << "orbifold dims: " << dims_string(r.orbifold_dims) << "\nresolution dims: " << dims_string(r.resolution_dims)
                  << "\nhilbert functions equal: " << yn(r.equal) << "\n";
        std::cout << "square-zero degree-one class: orbifold " << verdict_name(r.orbifold_square_zero.kind) << ", resolution "
                  << verdict_name(r.resolution_square_zero.kind) << "\n";
        std::cout << "rings isomorphic: " << (r.rings_distinguished ? "no" : "not decided") << "\n";
        auto list = [](const char* name, const std::vector<std::string>& v) {
            std::cout << name << ":";
            for (const auto& x : v) std::cout << "\n  " << x;
            std::cout << "\n";
        };
        list("I1", r.ideals.I1);
        list("I2", r.ideals.I2);
        list("I1(t)", r.ideals.I1_t);
        list("I2(t)", r.ideals.I2_t);
        list("I(fine)", r.ideals.I_fine);
        for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    }
    if (code == Invalid) {
        std::string what = !r.subdivision ? "NotASubdivision" : !r.smooth ? "NotSmooth" : "NotCrepant";
        std::cerr << "error: " << what << ": precondition for the comparison fails\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on stacky fans"};
    app.require_subcommand(1);
    app.add_flag("--json", as_json, "machine-readable output");
    std::string file;
    using Handler = int (*)(const InputDocument&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "input JSON document")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
        commands.emplace_back(sub, h);
        return sub;
    };
    add("validate", "validate a stacky fan", cmd_validate);
    add("gale-dual", "Gale dual group and dual map", cmd_gale_dual);
    add("box", "box elements with minimal cones and ages", cmd_box);
    add("sectors", "twisted sectors of the inertia stack", cmd_sectors);
    add("chow", "Chow ring dimensions of the coarse fan", cmd_chow);
    add("orbifold-chow", "orbifold Chow ring", cmd_orbifold_chow)->add_flag("--table", table, "print basis and structure constants");
    add("moduli", "components of the twisted-curve moduli", cmd_moduli);
    add("crepant-compare", "compare with a crepant resolution", cmd_crepant_compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseFailure;
    }
    try {
        InputDocument doc = read_document(file);
        for (auto& [sub, h] : commands)
            if (sub->parsed()) return h(doc);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? ParseFailure : Invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    return Ok;
}
