#include "helpers.hpp"

#include <cmath>

#include "ein3/einstein.hpp"
#include "ein3/oracle.hpp"

using namespace ein3;
using testing::w5;

TEST_CASE("Minkowski embedding and the improper point") {
    CHECK(minkowski_embed({0, 0, 0}) == EinPoint(w5(0, 0, 0, 0, 1)));
    CHECK(minkowski_embed({1, 0, 0}) == EinPoint(w5(1, 0, 0, 1, 1)));
    CHECK(minkowski_embed({0, 0, 1}) == EinPoint(w5(0, 0, 1, -1, 1)));

    const EinPoint inf = improper_point();
    CHECK(inf == EinPoint(w5(0, 0, 0, 1, 0)));
    CHECK(winner(inf.rep(), inf.rep()) == 0.0);
    CHECK(winner(inf.rep(), minkowski_embed({0, 0, 0}).rep()) == doctest::Approx(-0.5));
}

TEST_CASE("minkowski_coords inverts the embedding") {
    const auto c = minkowski_coords(minkowski_embed({0.5, -2, 1.25}).rep());
    REQUIRE(c);
    CHECK((*c)[0] == doctest::Approx(0.5));
    CHECK((*c)[1] == doctest::Approx(-2));
    CHECK((*c)[2] == doctest::Approx(1.25));
    CHECK_FALSE(minkowski_coords(improper_point().rep()));
}

TEST_CASE("EinPoint rejects non-null vectors") {
    CHECK_THROWS_AS(EinPoint(w5(1, 0, 0, 0, 0)), GeometryError);
}

TEST_CASE("incidence") {
    const EinPoint o = minkowski_embed({0, 0, 0});
    CHECK(incident(o, o));
    CHECK_FALSE(incident(o, improper_point()));
    const EinPoint p(w5(1, 0, 1, 0, 0)), q(w5(0, 1, 1, 0, 0));
    CHECK(winner(p.rep(), q.rep()) == -1.0);
    CHECK_FALSE(incident(p, q));
}

TEST_CASE("light cone") {
    const EinPoint p = minkowski_embed({0.3, 0.1, -0.7});
    CHECK(light_cone(p).contains(p.rep()));
    // (0,0,0,1,0)^perp is {v = 0}.
    const Subspace lc = light_cone(improper_point());
    CHECK(lc.dim() == 4);
    CHECK(lc.contains(Vec(w5(1, 2, 3, 4, 0))));
    CHECK_FALSE(lc.contains(Vec(w5(0, 0, 0, 0, 1))));
}

TEST_CASE("classify_point") {
    const EinPoint o = minkowski_embed({0, 0, 0}), inf = improper_point();
    CHECK(classify_point(minkowski_embed({0, 0, 1}), o, inf) == CausalType::Timelike);
    CHECK(classify_point(minkowski_embed({1, 0, 0}), o, inf) == CausalType::Spacelike);
    CHECK(classify_point(minkowski_embed({1, 0, 1}), o, inf) == CausalType::Lightlike);
}

TEST_CASE("eta values") {
    const EinsteinTorus t1(w5(1, 0, 0, 0, 0));
    CHECK(eta(t1, t1) == doctest::Approx(1.0));
    CHECK(eta(t1, EinsteinTorus(w5(0, 1, 0, 0, 0))) == 0.0);
    // (2,0,0,3,1) has Q = 4 - 3 = 1.
    CHECK(eta(t1, EinsteinTorus(w5(2, 0, 0, 3, 1))) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("EinsteinTorus rejects non-spacelike normals") {
    CHECK_THROWS_AS(EinsteinTorus(w5(0, 0, 1, 0, 0)), GeometryError);
    CHECK_THROWS_AS(EinsteinTorus(w5(1, 0, 1, 0, 0)), GeometryError);
}

TEST_CASE("classify_torus_pair") {
    const EinsteinTorus t1(w5(1, 0, 0, 0, 0));

    const IntersectionClass timelike = classify_torus_pair(t1, EinsteinTorus(w5(0, 1, 0, 0, 0)));
    CHECK(timelike.kind == IntersectionKind::TimelikeCircle);
    CHECK(signature(ein_space(), *timelike.carrier) == Signature{1, 2, 0});

    const IntersectionClass spacelike = classify_torus_pair(t1, EinsteinTorus(w5(2, 0, 0, 3, 1)));
    CHECK(spacelike.kind == IntersectionKind::SpacelikeCircle);
    CHECK(signature(ein_space(), *spacelike.carrier) == Signature{2, 1, 0});

    // s2 = (1,0,0,1,0) has Q = 1 and s1 . s2 = 1.
    const IntersectionClass photon = classify_torus_pair(t1, EinsteinTorus(w5(1, 0, 0, 1, 0)));
    CHECK(photon.kind == IntersectionKind::PhotonPair);
    CHECK(signature(ein_space(), *photon.carrier) == Signature{1, 1, 1});

    const auto [a, b] = photon_pair_from_degenerate(*photon.carrier);
    CHECK(signature(ein_space(), a.plane) == Signature{0, 0, 2});
    CHECK(signature(ein_space(), b.plane) == Signature{0, 0, 2});
    const Subspace radical = intersect(a.plane, b.plane);
    CHECK(radical.dim() == 1);
    CHECK(photon.carrier->contains(radical));
    CHECK(winner(radical.basis().col(0), radical.basis().col(0)) == doctest::Approx(0.0));

    const IntersectionClass equal = classify_torus_pair(t1, EinsteinTorus(w5(-3, 0, 0, 0, 0)));
    CHECK(equal.kind == IntersectionKind::Equal);
    CHECK_FALSE(equal.carrier);
}

TEST_CASE("photon pair from a diagonal degenerate carrier") {
    // Mutually orthogonal a, b, r with Q = 1, -1, 0.
    const Vec a = w5(1, 0, 0, 0, 0), b = w5(0, 0, 1, 0, 0), r = w5(0, 0, 0, 1, 0);
    const auto [p, q] = photon_pair_from_degenerate(Subspace::span({a, b, r}));
    const Subspace plus = Subspace::span({Vec(a + b), r}), minus = Subspace::span({Vec(a - b), r});
    CHECK(((p.plane == plus && q.plane == minus) || (p.plane == minus && q.plane == plus)));
}

TEST_CASE("reflect") {
    const Vec s = w5(1, 2, 0, 3, -1), v = w5(0.5, -1, 2, 0.25, 4);
    CHECK(testing::close(reflect(s, s), -s));
    const Vec w = w5(0, 0, 1, 0, 0);  // s . w = 0
    CHECK(testing::close(reflect(s, w), w));
    CHECK(testing::close(reflect(s, reflect(s, v)), v));
    CHECK_THROWS_AS(reflect(w5(1, 0, 1, 0, 0), v), GeometryError);
}

TEST_CASE("composition eigenvalues") {
    const Vec s = w5(1, 0, 0, 0, 0);
    auto ev = composition_eigenvalues(s, w5(0, 1, 0, 0, 0));
    CHECK(ev.first.real() == doctest::Approx(-1));
    CHECK(ev.second.real() == doctest::Approx(-1));
    ev = composition_eigenvalues(s, w5(1, 0, 0, 1, 0));
    CHECK(ev.first.real() == doctest::Approx(1));
    CHECK(ev.second.real() == doctest::Approx(1));
    ev = composition_eigenvalues(s, w5(2, 0, 0, 3, 1));
    CHECK(ev.first.real() == doctest::Approx(7 + 4 * std::sqrt(3.0)));
    CHECK(ev.second.real() == doctest::Approx(7 - 4 * std::sqrt(3.0)));
    CHECK(std::abs(ev.first.imag()) + std::abs(ev.second.imag()) == 0.0);

    // Direct eigensolve of the 2x2 matrix.
    Eigen::EigenSolver<Eigen::Matrix2d> es(composition_matrix(2.0));
    std::vector<double> direct{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
    std::sort(direct.begin(), direct.end());
    CHECK(direct[0] == doctest::Approx(7 - 4 * std::sqrt(3.0)));
    CHECK(direct[1] == doctest::Approx(7 + 4 * std::sqrt(3.0)));
}

TEST_CASE("triple light cone") {
    const EinPoint o = minkowski_embed({0, 0, 0}), inf = improper_point();
    CHECK(triple_lightcone_empty(minkowski_embed({0, 0, 1}), o, inf));
    CHECK_FALSE(triple_lightcone_empty(minkowski_embed({1, 0, 0}), o, inf));
    CHECK_FALSE(triple_lightcone_empty(minkowski_embed({1, 0, 1}), o, inf));
}
