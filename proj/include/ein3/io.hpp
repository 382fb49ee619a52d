#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ein3/ads.hpp"
#include "ein3/crooked.hpp"
#include "ein3/einstein.hpp"
#include "ein3/symplectic.hpp"

// JSON configuration files: named geometric objects plus optional global
// tolerances and seed. Every object is validated when the file is loaded.
namespace ein3::io {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A torus given by its W-model normal, by a nondegenerate plane S (the torus
// of S + S^perp), or as graph(f) over the splitting of another plane torus.
struct TorusDef {
    EinsteinTorus torus;
    std::optional<Plane2> plane;     // set for "plane" and "graph"
    std::optional<std::string> over; // graph only
    std::optional<Map2> map;         // graph only
};

struct PhotonDef {
    Vec4 vector;
};

using Object = std::variant<TorusDef, LightlikeQuadrilateral, AdsCrookedPlane, PhotonDef>;

std::string_view type_name(const Object& o);

struct NamedObject {
    std::string name;
    Object value;
};

struct Config {
    std::optional<double> eps_alg;
    std::optional<double> eps_geo;
    std::optional<std::uint64_t> seed;
    std::vector<NamedObject> objects;  // document order

    const NamedObject* find(const std::string& name) const;
};

Json read_json(const std::string& path);

// Tolerances and seed only; objects are left empty.
Config parse_settings(const Json& doc);

// Objects are validated with the process tolerances in force at the call, so
// a caller honoring the file's eps values applies them first.
Config parse_config(const Json& doc);
Config load_config(const std::string& path);

Json to_json(const Config& c);
Json to_json(const Object& o);

// Validator-level equality: same torus, same quadrilateral vectors, and so on.
bool same_object(const Object& a, const Object& b);

// The splitting behind a graph torus.
Splitting splitting_of(const Config& c, const TorusDef& t);

}  // namespace ein3::io
