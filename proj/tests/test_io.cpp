#include "helpers.hpp"

#include "ein3/io.hpp"
#include "ein3/oracle.hpp"

using namespace ein3;
using io::Json;

namespace {

const char* kDoc = R"({
  "eps_alg": 1e-10,
  "seed": 3,
  "objects": {
    "T": {"type": "torus", "normal": [1, 2, 0, 1, -1]},
    "S": {"type": "torus", "plane": [[1, 0, 0, 0], [0, 0, 1, 0]]},
    "G": {"type": "torus", "graph": {"over": "S", "map": [[3, 0], [0, 1]]}},
    "C": {"type": "quadrilateral", "u_plus": [1, 0, 0, 0], "u_minus": [0, 1, 0, 0],
          "v_plus": [0, 0, 0, 1], "v_minus": [0, 0, 1, 0]},
    "A": {"type": "ads_plane", "base": [[2, 1], [1, 1]], "a": [1, 0], "b": [0, 1]},
    "p": {"type": "photon", "vector": [1, 1, -1, 1]}
  }
})";

}  // namespace

TEST_CASE("config parsing") {
    const io::Config c = io::parse_config(Json::parse(kDoc));
    CHECK(c.eps_alg == 1e-10);
    CHECK_FALSE(c.eps_geo);
    CHECK(c.seed == 3u);
    REQUIRE(c.objects.size() == 6);
    CHECK(c.objects[0].name == "T");
    CHECK(io::type_name(c.find("C")->value) == "quadrilateral");
    CHECK(io::type_name(c.find("A")->value) == "ads_plane");
    const auto& g = std::get<io::TorusDef>(c.find("G")->value);
    CHECK(eta(std::get<io::TorusDef>(c.find("S")->value).torus, g.torus) == doctest::Approx(0.5));
    CHECK(eta_from_det(*g.map) == 0.5);
}

TEST_CASE("round trip keeps every object") {
    const io::Config c = io::parse_config(Json::parse(kDoc));
    const io::Config back = io::parse_config(Json::parse(io::to_json(c).dump()));
    REQUIRE(back.objects.size() == c.objects.size());
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
        CHECK(back.objects[i].name == c.objects[i].name);
        CHECK(io::same_object(back.objects[i].value, c.objects[i].value));
    }
    CHECK(back.eps_alg == c.eps_alg);
    CHECK(back.seed == c.seed);
}

TEST_CASE("round trip on random objects") {
    oracle::Rng rng(12);
    io::Config c;
    for (int i = 0; i < 50; ++i) {
        const std::string k = std::to_string(i);
        c.objects.push_back({"t" + k, io::TorusDef{EinsteinTorus(oracle::random_unit_spacelike(rng)), {}, {}, {}}});
        c.objects.push_back({"q" + k, oracle::random_quadrilateral(rng)});
        c.objects.push_back({"a" + k, oracle::random_ads_plane(rng)});
        c.objects.push_back({"p" + k, io::PhotonDef{oracle::random_vector4(rng)}});
    }
    const io::Config back = io::parse_config(Json::parse(io::to_json(c).dump()));
    REQUIRE(back.objects.size() == c.objects.size());
    for (std::size_t i = 0; i < c.objects.size(); ++i) CHECK(io::same_object(back.objects[i].value, c.objects[i].value));
}

TEST_CASE("invalid configs") {
    auto bad = [](const char* text) { return io::parse_config(Json::parse(text)); };
    CHECK_THROWS_AS(bad(R"({"objects": {"G": {"type": "torus", "graph": {"over": "S", "map": [[1,0],[0,1]]}}}})"),
                    io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"T": {"type": "torus", "normal": [0, 0, 1, 0, 0]}}})"), io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"T": {"type": "torus", "normal": [1, 0, 0]}}})"), io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"C": {"type": "quadrilateral", "u_plus": [1,0,0,0], "u_minus": [0,1,0,0],
                                 "v_plus": [0,0,1,0], "v_minus": [0,0,0,1]}}})"),
                    io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"A": {"type": "ads_plane", "base": [[2,0],[0,1]], "a": [1,0], "b": [0,1]}}})"),
                    io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"X": {"type": "hyperboloid"}}})"), io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"objects": {"S": {"type": "torus", "plane": [[1,0,0,0],[0,1,0,0]]}}})"),
                    io::ConfigError);
    CHECK_THROWS_AS(bad(R"({"eps_alg": -1, "objects": {}})"), io::ConfigError);
    CHECK_THROWS_AS(bad(R"([1, 2])"), io::ConfigError);
    CHECK_THROWS_AS(io::load_config("/nonexistent/config.json"), io::ConfigError);
}
