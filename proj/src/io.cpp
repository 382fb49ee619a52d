#include "ein3/io.hpp"

#include <fstream>
#include <sstream>

namespace ein3::io {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

template <int N>
Eigen::Matrix<double, N, 1> read_vector(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(N))
        fail(where, "expected an array of " + std::to_string(N) + " numbers");
    Eigen::Matrix<double, N, 1> v;
    for (int i = 0; i < N; ++i) {
        if (!j[i].is_number()) fail(where, "expected an array of " + std::to_string(N) + " numbers");
        v(i) = j[i].get<double>();
    }
    return v;
}

Mat2 read_mat2(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected a 2x2 matrix as two rows");
    Mat2 m;
    for (int r = 0; r < 2; ++r) m.row(r) = read_vector<2>(j[r], where).transpose();
    return m;
}

template <class V>
Json write_vector(const V& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Json write_mat2(const Mat2& m) {
    return Json::array({write_vector(Vec2(m.row(0).transpose())), write_vector(Vec2(m.row(1).transpose()))});
}

Vec read_normal(const Json& j, const std::string& where) {
    const auto v = read_vector<5>(j, where);
    return Vec(v);
}

TorusDef read_torus(const Json& j, const std::string& where, const Config& so_far) {
    const int forms = int(j.contains("normal")) + int(j.contains("plane")) + int(j.contains("graph"));
    if (forms != 1) fail(where, "a torus needs exactly one of \"normal\", \"plane\", \"graph\"");
    if (j.contains("normal")) return TorusDef{EinsteinTorus(read_normal(j["normal"], where)), {}, {}, {}};
    if (j.contains("plane")) {
        const Json& p = j["plane"];
        if (!p.is_array() || p.size() != 2) fail(where, "\"plane\" must hold two 4-vectors");
        const Plane2 s(read_vector<4>(p[0], where), read_vector<4>(p[1], where));
        if (s.lagrangian()) fail(where, "plane is Lagrangian and defines no splitting");
        return TorusDef{splitting_torus(s), s, {}, {}};
    }
    const Json& g = j["graph"];
    const std::string over = field(g, "over", where).get<std::string>();
    const NamedObject* base = so_far.find(over);
    if (!base) fail(where, "\"" + over + "\" is not defined before this object");
    const auto* bt = std::get_if<TorusDef>(&base->value);
    if (!bt || !bt->plane) fail(where, "\"" + over + "\" is not a torus given by a plane or graph");
    Map2 f;
    f.m = read_mat2(field(g, "map", where), where);
    const Plane2 s = graph(f, Splitting(*bt->plane));
    if (s.lagrangian()) fail(where, "graph of the map is Lagrangian (Det(f) = -1)");
    return TorusDef{splitting_torus(s), s, over, f};
}

Object read_object(const Json& j, const std::string& where, const Config& so_far) {
    if (!j.is_object()) fail(where, "expected an object");
    const std::string type = field(j, "type", where).get<std::string>();
    if (type == "torus") return read_torus(j, where, so_far);
    if (type == "quadrilateral")
        return LightlikeQuadrilateral(read_vector<4>(field(j, "u_plus", where), where),
                                      read_vector<4>(field(j, "u_minus", where), where),
                                      read_vector<4>(field(j, "v_plus", where), where),
                                      read_vector<4>(field(j, "v_minus", where), where));
    if (type == "ads_plane")
        return AdsCrookedPlane(AdsPoint(read_mat2(field(j, "base", where), where)),
                               read_vector<2>(field(j, "a", where), where),
                               read_vector<2>(field(j, "b", where), where));
    if (type == "photon") {
        const Vec4 v = read_vector<4>(field(j, "vector", where), where);
        if (!(v.norm() > 0.0)) fail(where, "zero photon vector");
        return PhotonDef{v};
    }
    fail(where, "unknown type \"" + type + "\"");
}

bool near(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).norm() <= eps_alg() * std::max(1.0, a.norm());
}

}  // namespace

std::string_view type_name(const Object& o) {
    return std::visit(overloaded{[](const TorusDef&) { return std::string_view("torus"); },
                                 [](const LightlikeQuadrilateral&) { return std::string_view("quadrilateral"); },
                                 [](const AdsCrookedPlane&) { return std::string_view("ads_plane"); },
                                 [](const PhotonDef&) { return std::string_view("photon"); }},
                      o);
}

const NamedObject* Config::find(const std::string& name) const {
    for (const auto& o : objects)
        if (o.name == name) return &o;
    return nullptr;
}

Config parse_settings(const Json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    Config c;
    try {
        if (doc.contains("eps_alg")) c.eps_alg = doc["eps_alg"].get<double>();
        if (doc.contains("eps_geo")) c.eps_geo = doc["eps_geo"].get<double>();
        if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.eps_alg && !(*c.eps_alg > 0.0)) throw ConfigError("config: eps_alg must be positive");
    if (c.eps_geo && !(*c.eps_geo > 0.0)) throw ConfigError("config: eps_geo must be positive");
    return c;
}

Config parse_config(const Json& doc) {
    Config c = parse_settings(doc);
    if (!doc.contains("objects") || !doc["objects"].is_object())
        throw ConfigError("config: missing \"objects\" table");
    for (const auto& [name, j] : doc["objects"].items()) {
        const std::string where = "object \"" + name + "\"";
        try {
            Object o = read_object(j, where, c);
            c.objects.push_back({name, std::move(o)});
        } catch (const GeometryError& e) {
            fail(where, e.what());
        } catch (const Json::exception& e) {
            fail(where, e.what());
        }
    }
    return c;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Config load_config(const std::string& path) { return parse_config(read_json(path)); }

Json to_json(const Object& o) {
    return std::visit(
        overloaded{
            [](const TorusDef& t) {
                Json j{{"type", "torus"}};
                if (t.over && t.map) {
                    j["graph"] = Json{{"over", *t.over}, {"map", write_mat2(t.map->m)}};
                } else if (t.plane) {
                    j["plane"] = Json::array({write_vector(t.plane->col(0)), write_vector(t.plane->col(1))});
                } else {
                    j["normal"] = write_vector(t.torus.normal());
                }
                return j;
            },
            [](const LightlikeQuadrilateral& q) {
                return Json{{"type", "quadrilateral"},
                            {"u_plus", write_vector(q.u_plus())},
                            {"u_minus", write_vector(q.u_minus())},
                            {"v_plus", write_vector(q.v_plus())},
                            {"v_minus", write_vector(q.v_minus())}};
            },
            [](const AdsCrookedPlane& p) {
                return Json{{"type", "ads_plane"},
                            {"base", write_mat2(p.base.matrix())},
                            {"a", write_vector(p.a)},
                            {"b", write_vector(p.b)}};
            },
            [](const PhotonDef& p) { return Json{{"type", "photon"}, {"vector", write_vector(p.vector)}}; }},
        o);
}

Json to_json(const Config& c) {
    Json doc = Json::object();
    if (c.eps_alg) doc["eps_alg"] = *c.eps_alg;
    if (c.eps_geo) doc["eps_geo"] = *c.eps_geo;
    if (c.seed) doc["seed"] = *c.seed;
    Json objs = Json::object();
    for (const auto& o : c.objects) objs[o.name] = to_json(o.value);
    doc["objects"] = std::move(objs);
    return doc;
}

bool same_object(const Object& a, const Object& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const TorusDef& t) {
                const auto& u = std::get<TorusDef>(b);
                if (!(t.torus == u.torus) || t.over != u.over || t.plane.has_value() != u.plane.has_value())
                    return false;
                if (t.plane && !(*t.plane == *u.plane)) return false;
                if (t.map.has_value() != u.map.has_value()) return false;
                return !t.map || near(t.map->m, u.map->m);
            },
            [&](const LightlikeQuadrilateral& q) {
                const auto& r = std::get<LightlikeQuadrilateral>(b);
                return near(q.u_plus(), r.u_plus()) && near(q.u_minus(), r.u_minus()) &&
                       near(q.v_plus(), r.v_plus()) && near(q.v_minus(), r.v_minus());
            },
            [&](const AdsCrookedPlane& p) {
                const auto& r = std::get<AdsCrookedPlane>(b);
                return near(p.base.matrix(), r.base.matrix()) && near(p.a, r.a) && near(p.b, r.b);
            },
            [&](const PhotonDef& p) {
                return projectively_equal(p.vector, std::get<PhotonDef>(b).vector, eps_alg());
            }},
        a);
}

Splitting splitting_of(const Config& c, const TorusDef& t) {
    if (!t.over) throw ConfigError("torus is not given as a graph");
    const NamedObject* base = c.find(*t.over);
    if (!base) throw ConfigError("\"" + *t.over + "\" is not defined");
    return Splitting(*std::get<TorusDef>(base->value).plane);
}

}  // namespace ein3::io
