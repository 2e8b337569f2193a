#include "g2calib/json_io.hpp"

#include "g2calib/errors.hpp"

#include <map>

namespace g2calib {

namespace {

const Json& need(const Json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError("missing field '" + field + "'");
    return j.at(field);
}

double need_number(const Json& j, const std::string& field) {
    if (!j.is_number()) throw ParseError("field '" + field + "' must be a number");
    return j.get<double>();
}

} // namespace

Vec7 parse_vec7(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 7)
        throw ParseError("field '" + field + "' must be an array of 7 numbers");
    Vec7 v;
    for (int i = 0; i < 7; ++i) v[i] = need_number(j[static_cast<std::size_t>(i)], field);
    return v;
}

OrientedPlane parse_plane(const Json& j) {
    int dim = static_cast<int>(need_number(need(j, "dim"), "dim"));
    const Json& vs = need(j, "vectors");
    if (!vs.is_array() || static_cast<int>(vs.size()) != dim)
        throw ParseError("field 'vectors' must hold exactly 'dim' vectors");
    std::vector<Vec7> vectors;
    for (const auto& row : vs) vectors.push_back(parse_vec7(row, "vectors"));
    try {
        return make_plane(vectors);
    } catch (const PreconditionError& e) {
        throw PreconditionError(std::string("plane input: ") + e.what());
    }
}

Json plane_to_json(const OrientedPlane& p) {
    Json vs = Json::array();
    for (const auto& v : p.frame) {
        Json row = Json::array();
        for (int i = 0; i < 7; ++i) row.push_back(v[i]);
        vs.push_back(row);
    }
    return Json{{"dim", p.dim}, {"vectors", vs}};
}

BoundaryInput parse_boundary_config(const Json& j) {
    BoundaryInput in;
    in.cfg.u = parse_vec7(need(j, "u"), "u");
    in.cfg.v = parse_vec7(need(j, "v"), "v");
    in.cfg.w = parse_vec7(need(j, "w"), "w");
    in.cfg.F = parse_plane(need(j, "F"));
    if (j.contains("NX")) {
        const Json& nx = j.at("NX");
        if (!nx.is_array() || nx.size() != 2)
            throw ParseError("field 'NX' must hold exactly 2 vectors");
        in.NX = {parse_vec7(nx[0], "NX"), parse_vec7(nx[1], "NX")};
    }
    return in;
}

std::vector<BoundaryComponent> parse_components(const Json& j) {
    if (!j.is_array()) throw ParseError("components input must be an array");
    std::vector<BoundaryComponent> out;
    for (const auto& item : j) {
        BoundaryComponent c;
        c.genus = static_cast<int>(need_number(need(item, "genus"), "genus"));
        c.c1 = static_cast<int>(need_number(need(item, "c1"), "c1"));
        if (c.genus < 0) throw ParseError("field 'genus' must be nonnegative");
        out.push_back(c);
    }
    return out;
}

SampledLineBundle parse_bundle(const Json& j) {
    const Json& verts = need(j, "vertices");
    const Json& tris = need(j, "triangles");
    const Json& lines = need(j, "lines");
    if (!verts.is_array() || !tris.is_array() || !lines.is_array())
        throw ParseError("fields 'vertices', 'triangles', 'lines' must be arrays");
    if (verts.size() != lines.size())
        throw ParseError("field 'lines' must hold one sample per vertex");

    std::map<long, int> id_to_slot;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        if (!verts[k].is_number_integer()) throw ParseError("field 'vertices' must hold integers");
        long id = verts[k].get<long>();
        if (id_to_slot.count(id)) throw ParseError("field 'vertices' holds a duplicate id");
        id_to_slot[id] = static_cast<int>(k);
    }

    SampledLineBundle b;
    for (const auto& row : lines) {
        if (!row.is_array() || row.empty())
            throw ParseError("field 'lines' entries must be nonempty arrays of [re, im]");
        std::vector<std::complex<double>> s;
        for (const auto& pair : row) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("field 'lines' components must be [re, im] pairs");
            s.emplace_back(need_number(pair[0], "lines"), need_number(pair[1], "lines"));
        }
        b.lines.push_back(std::move(s));
    }
    for (const auto& row : tris) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("field 'triangles' must hold triples");
        std::array<int, 3> t{};
        for (int k = 0; k < 3; ++k) {
            if (!row[static_cast<std::size_t>(k)].is_number_integer())
                throw ParseError("field 'triangles' must hold integer ids");
            auto it = id_to_slot.find(row[static_cast<std::size_t>(k)].get<long>());
            if (it == id_to_slot.end())
                throw ParseError("field 'triangles' references an unknown vertex id");
            t[static_cast<std::size_t>(k)] = it->second;
        }
        b.triangles.push_back(t);
    }
    return b;
}

Json bundle_to_json(const SampledLineBundle& b) {
    Json verts = Json::array(), tris = Json::array(), lines = Json::array();
    for (std::size_t k = 0; k < b.lines.size(); ++k) verts.push_back(k);
    for (const auto& t : b.triangles) tris.push_back({t[0], t[1], t[2]});
    for (const auto& s : b.lines) {
        Json row = Json::array();
        for (const auto& z : s) row.push_back({z.real(), z.imag()});
        lines.push_back(row);
    }
    return Json{{"vertices", verts}, {"triangles", tris}, {"lines", lines}};
}

AffineTorusMap parse_torus_map(const Json& j) {
    const Json& signs = need(j, "signs");
    const Json& shift = need(j, "shift");
    if (!signs.is_array() || signs.size() != 7 || !shift.is_array() || shift.size() != 7)
        throw ParseError("fields 'signs' and 'shift' must be arrays of length 7");
    AffineTorusMap m;
    for (int i = 0; i < 7; ++i) {
        const Json& s = signs[static_cast<std::size_t>(i)];
        if (!s.is_number_integer() || std::abs(s.get<int>()) != 1)
            throw ParseError("field 'signs' must hold +1 or -1 entries");
        m.signs[static_cast<std::size_t>(i)] = s.get<int>();
        const Json& c = shift[static_cast<std::size_t>(i)];
        if (!c.is_string()) throw ParseError("field 'shift' must hold rational strings");
        m.shift[static_cast<std::size_t>(i)] = mod1(parse_rational(c.get<std::string>()));
    }
    return m;
}

Json torus_map_to_json(const AffineTorusMap& m) {
    Json signs = Json::array(), shift = Json::array();
    for (int i = 0; i < 7; ++i) {
        signs.push_back(m.signs[static_cast<std::size_t>(i)]);
        shift.push_back(to_string(m.shift[static_cast<std::size_t>(i)]));
    }
    return Json{{"signs", signs}, {"shift", shift}};
}

CoordSubtorus parse_subtorus(const Json& j) {
    const Json& free = need(j, "free");
    if (!free.is_array()) throw ParseError("field 'free' must be an array of coordinates");
    CoordSubtorus t;
    for (const auto& f : free) {
        if (!f.is_number_integer()) throw ParseError("field 'free' must hold integers 1..7");
        int c = f.get<int>();
        if (c < 1 || c > 7) throw ParseError("field 'free' must hold integers 1..7");
        t.free_mask |= static_cast<std::uint8_t>(1u << (c - 1));
    }
    if (j.contains("fixed")) {
        const Json& fixed = j.at("fixed");
        if (!fixed.is_object()) throw ParseError("field 'fixed' must be an object");
        for (const auto& [key, val] : fixed.items()) {
            int c = 0;
            try {
                c = std::stoi(key);
            } catch (...) {
                throw ParseError("field 'fixed' keys must be coordinates 1..7");
            }
            if (c < 1 || c > 7 || t.is_free(c - 1))
                throw ParseError("field 'fixed' keys must be non-free coordinates 1..7");
            if (!val.is_string()) throw ParseError("field 'fixed' values must be rational strings");
            t.fixed[static_cast<std::size_t>(c - 1)] = mod1(parse_rational(val.get<std::string>()));
        }
    }
    return t;
}

Json subtorus_to_json(const CoordSubtorus& t) {
    Json free = Json::array();
    Json fixed = Json::object();
    for (int i = 0; i < 7; ++i) {
        if (t.is_free(i))
            free.push_back(i + 1);
        else
            fixed[std::to_string(i + 1)] = to_string(t.fixed[static_cast<std::size_t>(i)]);
    }
    return Json{{"free", free}, {"fixed", fixed}, {"dim", t.dim()}};
}

Json orbit_census_to_json(const OrbitCensus& census) {
    Json orbits = Json::array();
    for (const auto& o : census.orbits) {
        Json elems = Json::array();
        for (const auto& t : o.elements) elems.push_back(subtorus_to_json(t));
        orbits.push_back(Json{{"size", o.elements.size()},
                              {"stabilizer_order", o.stabilizer_order},
                              {"elements", elems}});
    }
    return Json{{"orbit_count", census.orbits.size()},
                {"group_order", census.group_order},
                {"free_action", census.free_action},
                {"orbits", orbits}};
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json RunReport::to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks)
        cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
    return Json{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"checks", cs}};
}

RunReport RunReport::from_json(const Json& j) {
    RunReport r;
    r.command = need(j, "command").get<std::string>();
    r.inputs = need(j, "inputs");
    r.outputs = need(j, "outputs");
    for (const auto& c : need(j, "checks")) {
        RunCheck rc;
        rc.name = need(c, "name").get<std::string>();
        rc.pass = need(c, "pass").get<bool>();
        rc.value = need(c, "value");
        r.checks.push_back(std::move(rc));
    }
    return r;
}

} // namespace g2calib
