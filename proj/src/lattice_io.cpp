#include "hyperlat/lattice_io.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace hyperlat {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "hyperlat/lattice/v1";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("lattice document: " + path + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "." + key, "missing");
    return *it;
}

void reject_unknown(const json& obj, const std::string& path, std::set<std::string> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) fail(path + "." + it.key(), "unknown key");
    }
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

double as_double(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

Complex as_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
    return {as_double(j[0], path + "[0]"), as_double(j[1], path + "[1]")};
}

std::vector<int> as_int_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

GeometryKind as_geometry(const json& j, const std::string& path) {
    if (j == "hyperbolic") return GeometryKind::Hyperbolic;
    if (j == "euclidean") return GeometryKind::Euclidean;
    fail(path, "expected \"hyperbolic\" or \"euclidean\"");
}

json header(const char* kind, GeometryKind geometry, int p, int shells) {
    json doc;
    doc["schema"] = kSchema;
    doc["kind"] = kind;
    doc["geometry"] = to_string(geometry);
    doc["p"] = p;
    doc["shells"] = shells;
    return doc;
}

void check_header(const json& doc, const char* kind) {
    if (member(doc, "$", "schema") != kSchema)
        fail("$.schema", "expected \"" + std::string(kSchema) + "\"");
    if (member(doc, "$", "kind") != kind) fail("$.kind", "expected \"" + std::string(kind) + "\"");
}

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ConfigError("lattice document: not valid JSON");
    return doc;
}

}  // namespace

std::string serialize(const LayoutGraph& layout) {
    json doc = header("layout", layout.geometry, layout.p, layout.shells);
    json vs = json::array();
    for (const auto& v : layout.vertices)
        vs.push_back({{"id", v.id}, {"pos", {v.pos.real(), v.pos.imag()}}, {"shell", v.shell}});
    json es = json::array();
    for (const auto& e : layout.edges)
        es.push_back({{"id", e.id},
                      {"v", {e.v0, e.v1}},
                      {"mid", {e.midpoint.real(), e.midpoint.imag()}},
                      {"shell", e.shell}});
    json fs = json::array();
    for (const auto& f : layout.faces)
        fs.push_back(
            {{"id", f.id}, {"vertices", f.vertices}, {"edges", f.edges}, {"shell", f.shell}});
    doc["vertices"] = std::move(vs);
    doc["edges"] = std::move(es);
    doc["faces"] = std::move(fs);
    return doc.dump(2);
}

std::string serialize(const EffectiveLattice& lat) {
    json doc = header("effective", lat.geometry, lat.p, lat.shells);
    doc["num_rings"] = lat.num_rings;
    json ss = json::array();
    for (const auto& s : lat.sites)
        ss.push_back({{"id", s.id},
                      {"pos", {s.pos.real(), s.pos.imag()}},
                      {"parent_edge", s.parent_edge},
                      {"parent_v", {s.parent_v0, s.parent_v1}},
                      {"ring", s.ring},
                      {"boundary", s.boundary}});
    json bs = json::array();
    for (std::size_t i = 0; i < lat.bonds.size(); ++i)
        bs.push_back({{"sites", {lat.bonds[i].first, lat.bonds[i].second}},
                      {"vertex", lat.bond_vertex[i]}});
    json ts = json::array();
    for (const auto& t : lat.triangles) ts.push_back({t[0], t[1], t[2]});
    json ps = json::array();
    for (const auto& poly : lat.polygons) ps.push_back(poly);
    doc["sites"] = std::move(ss);
    doc["bonds"] = std::move(bs);
    doc["triangles"] = std::move(ts);
    doc["polygons"] = std::move(ps);
    return doc.dump(2);
}

LayoutGraph deserialize_layout(const std::string& text) {
    const json doc = parse(text);
    check_header(doc, "layout");
    reject_unknown(doc, "$", {"schema", "kind", "geometry", "p", "shells", "vertices", "edges",
                              "faces"});
    LayoutGraph g;
    g.geometry = as_geometry(member(doc, "$", "geometry"), "$.geometry");
    g.p = as_int(member(doc, "$", "p"), "$.p");
    g.shells = as_int(member(doc, "$", "shells"), "$.shells");

    const json& vs = member(doc, "$", "vertices");
    if (!vs.is_array()) fail("$.vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        reject_unknown(vs[i], path, {"id", "pos", "shell"});
        LayoutVertex v;
        v.id = as_int(member(vs[i], path, "id"), path + ".id");
        v.pos = as_point(member(vs[i], path, "pos"), path + ".pos");
        v.shell = as_int(member(vs[i], path, "shell"), path + ".shell");
        if (v.id != static_cast<int>(i)) fail(path + ".id", "ids must be dense and ordered");
        g.vertices.push_back(v);
    }

    const json& es = member(doc, "$", "edges");
    if (!es.is_array()) fail("$.edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        reject_unknown(es[i], path, {"id", "v", "mid", "shell"});
        LayoutEdge e;
        e.id = as_int(member(es[i], path, "id"), path + ".id");
        auto vv = as_int_list(member(es[i], path, "v"), path + ".v");
        if (vv.size() != 2) fail(path + ".v", "expected two vertex ids");
        e.v0 = vv[0];
        e.v1 = vv[1];
        e.midpoint = as_point(member(es[i], path, "mid"), path + ".mid");
        e.shell = as_int(member(es[i], path, "shell"), path + ".shell");
        if (e.id != static_cast<int>(i)) fail(path + ".id", "ids must be dense and ordered");
        const int nv = static_cast<int>(g.vertices.size());
        if (e.v0 < 0 || e.v0 >= nv || e.v1 < 0 || e.v1 >= nv)
            fail(path + ".v", "vertex id out of range");
        g.edges.push_back(e);
    }

    const json& fs = member(doc, "$", "faces");
    if (!fs.is_array()) fail("$.faces", "expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string path = "$.faces[" + std::to_string(i) + "]";
        reject_unknown(fs[i], path, {"id", "vertices", "edges", "shell"});
        LayoutFace f;
        f.id = as_int(member(fs[i], path, "id"), path + ".id");
        f.vertices = as_int_list(member(fs[i], path, "vertices"), path + ".vertices");
        f.edges = as_int_list(member(fs[i], path, "edges"), path + ".edges");
        f.shell = as_int(member(fs[i], path, "shell"), path + ".shell");
        if (f.id != static_cast<int>(i)) fail(path + ".id", "ids must be dense and ordered");
        for (int e : f.edges)
            if (e < 0 || e >= static_cast<int>(g.edges.size()))
                fail(path + ".edges", "edge id out of range");
        for (int v : f.vertices)
            if (v < 0 || v >= static_cast<int>(g.vertices.size()))
                fail(path + ".vertices", "vertex id out of range");
        g.faces.push_back(std::move(f));
    }
    return g;
}

EffectiveLattice deserialize_effective(const std::string& text) {
    const json doc = parse(text);
    check_header(doc, "effective");
    reject_unknown(doc, "$", {"schema", "kind", "geometry", "p", "shells", "num_rings", "sites",
                              "bonds", "triangles", "polygons"});
    EffectiveLattice lat;
    lat.geometry = as_geometry(member(doc, "$", "geometry"), "$.geometry");
    lat.p = as_int(member(doc, "$", "p"), "$.p");
    lat.shells = as_int(member(doc, "$", "shells"), "$.shells");
    lat.num_rings = as_int(member(doc, "$", "num_rings"), "$.num_rings");

    const json& ss = member(doc, "$", "sites");
    if (!ss.is_array()) fail("$.sites", "expected an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::string path = "$.sites[" + std::to_string(i) + "]";
        reject_unknown(ss[i], path, {"id", "pos", "parent_edge", "parent_v", "ring", "boundary"});
        EffectiveSite s;
        s.id = as_int(member(ss[i], path, "id"), path + ".id");
        s.pos = as_point(member(ss[i], path, "pos"), path + ".pos");
        s.parent_edge = as_int(member(ss[i], path, "parent_edge"), path + ".parent_edge");
        auto pv = as_int_list(member(ss[i], path, "parent_v"), path + ".parent_v");
        if (pv.size() != 2) fail(path + ".parent_v", "expected two vertex ids");
        s.parent_v0 = pv[0];
        s.parent_v1 = pv[1];
        s.ring = as_int(member(ss[i], path, "ring"), path + ".ring");
        s.boundary = as_bool(member(ss[i], path, "boundary"), path + ".boundary");
        if (s.id != static_cast<int>(i)) fail(path + ".id", "ids must be dense and ordered");
        lat.sites.push_back(s);
    }

    const json& bs = member(doc, "$", "bonds");
    if (!bs.is_array()) fail("$.bonds", "expected an array");
    const int n = static_cast<int>(lat.sites.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const std::string path = "$.bonds[" + std::to_string(i) + "]";
        reject_unknown(bs[i], path, {"sites", "vertex"});
        auto pair = as_int_list(member(bs[i], path, "sites"), path + ".sites");
        if (pair.size() != 2) fail(path + ".sites", "expected two site ids");
        if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
            fail(path + ".sites", "site id out of range");
        if (pair[0] >= pair[1]) fail(path + ".sites", "expected first < second");
        lat.bonds.push_back({pair[0], pair[1]});
        lat.bond_vertex.push_back(as_int(member(bs[i], path, "vertex"), path + ".vertex"));
    }

    const json& ts = member(doc, "$", "triangles");
    if (!ts.is_array()) fail("$.triangles", "expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string path = "$.triangles[" + std::to_string(i) + "]";
        auto tri = as_int_list(ts[i], path);
        if (tri.size() != 3) fail(path, "expected three site ids");
        lat.triangles.push_back({tri[0], tri[1], tri[2]});
    }

    const json& ps = member(doc, "$", "polygons");
    if (!ps.is_array()) fail("$.polygons", "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string path = "$.polygons[" + std::to_string(i) + "]";
        lat.polygons.push_back(as_int_list(ps[i], path));
    }
    return lat;
}

}  // namespace hyperlat
