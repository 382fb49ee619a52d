#include "helpers.hpp"

#include <cmath>

#include "ein3/oracle.hpp"
#include "ein3/symplectic.hpp"

using namespace ein3;
using testing::biv;
using testing::e;

namespace {

bool proportional(const Bivector& a, const Bivector& b, double tol = 1e-12) {
    return projectively_equal(a.c, b.c, tol);
}

Map2 map2(double a, double b, double c, double d) {
    Map2 f;
    f.m << a, b, c, d;
    return f;
}

const Splitting& standard_splitting() {
    static const Splitting sp(Plane2(e(1), e(3)));
    return sp;
}

}  // namespace

TEST_CASE("wedge product calibration") {
    const Bivector e13 = wedge(e(1), e(3)), e24 = wedge(e(2), e(4));
    CHECK(wedge_product(e13, e13) == 0.0);
    CHECK(wedge_product(e13, e24) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(wedge_product(omega_star(), omega_star()) + 2.0) < 1e-12);
}

TEST_CASE("omega star") {
    const Bivector w = omega_star();
    CHECK(testing::close(w.c, biv(0, -1, 0, 0, -1, 0).c));
    CHECK(wedge_product(w, wedge(e(1), e(3))) == doctest::Approx(1.0));
    CHECK(wedge_product(w, wedge(e(1), e(2))) == 0.0);
}

TEST_CASE("plucker and its inverse") {
    const Plane2 s(e(1), e(3));
    CHECK(proportional(plucker(s), wedge(e(1), e(3))));
    CHECK(bivector_to_plane(wedge(e(1), e(3))) == s);
    CHECK_THROWS_AS(bivector_to_plane(omega_star()), GeometryError);

    oracle::Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const Plane2 p = oracle::random_nondegenerate_plane(rng);
        const Bivector b = plucker(p);
        CHECK(std::abs(wedge_product(b, b)) < 1e-12);
        CHECK(proportional(plucker(bivector_to_plane(b)), b, 1e-9));

        const Plane2 l = oracle::random_lagrangian(rng);
        CHECK(std::abs(wedge_product(omega_star(), plucker(l))) < 1e-12);
    }
}

TEST_CASE("transverse") {
    const Plane2 p(e(1), e(2));
    CHECK_FALSE(transverse(p, p));
    CHECK(transverse(p, Plane2(e(3), e(4))));
    CHECK_FALSE(transverse(p, Plane2(e(2), e(3))));
}

TEST_CASE("reflection in omega star") {
    const Bivector in_w = wedge(e(1), e(2));
    CHECK(testing::close(reflect_omega_star(in_w).c, in_w.c));
    CHECK(testing::close(reflect_omega_star(omega_star()).c, (-omega_star()).c));
    CHECK(proportional(reflect_omega_star(wedge(e(1), e(3))), wedge(e(2), e(4))));
}

TEST_CASE("symplectic complement") {
    const Plane2 s(e(1), e(3));
    CHECK(symplectic_complement(s) == Plane2(e(2), e(4)));
    CHECK(symplectic_complement(symplectic_complement(s)) == s);

    oracle::Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const Plane2 p = oracle::random_nondegenerate_plane(rng);
        const Plane2 q = symplectic_complement(p);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(omega(p.col(i), q.col(j))) < 1e-12);
        CHECK(symplectic_complement_via_reflection(p) == q);
    }
}

TEST_CASE("Maslov index") {
    const Plane2 l(e(1), e(2)), lp(e(3), e(4));
    CHECK(maslov(l, Plane2(Vec4(e(1) + e(3)), Vec4(e(2) + e(4))), lp) == 2);
    CHECK(maslov(l, Plane2(Vec4(e(1) + e(3)), Vec4(e(2) - e(4))), lp) == 0);

    oracle::Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const Plane2 a = oracle::random_lagrangian(rng), b = oracle::random_lagrangian(rng),
                     c = oracle::random_lagrangian(rng);
        CHECK(maslov(a, b, c) == -maslov(c, b, a));
    }
}

TEST_CASE("mu") {
    const Plane2 s(e(1), e(3));
    const Bivector m = mu(s);
    CHECK(testing::close(m.c, biv(0, 0.5, 0, 0, -0.5, 0).c));
    CHECK(wedge_product(m, m) == doctest::Approx(0.5));
    CHECK(std::abs(wedge_product(m, omega_star())) < 1e-15);

    // mu(S) and mu(S^perp) span the same line of W.
    oracle::Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const Plane2 p = oracle::random_nondegenerate_plane(rng);
        CHECK(proportional(mu(p), mu(symplectic_complement(p)), 1e-9));
        CHECK(std::abs(wedge_product(mu(p), omega_star())) < 1e-12);
    }
}

TEST_CASE("splitting from a spacelike vector") {
    const Bivector u = wedge(e(1), e(3)) - wedge(e(2), e(4));
    const Splitting sp = splitting_from_spacelike(u);
    const Plane2 a(e(1), e(3)), b(e(2), e(4));
    CHECK(((sp.s() == a && sp.s_perp() == b) || (sp.s() == b && sp.s_perp() == a)));
    CHECK(bivector_to_plane(reflect_omega_star(plucker(sp.s()))) == sp.s_perp());

    oracle::Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const Plane2 p = oracle::random_nondegenerate_plane(rng);
        const Bivector v = mu_unit(p);
        const Splitting back = splitting_from_spacelike(std::sqrt(2.0) * v);
        CHECK(proportional(mu(back.s()), v, 1e-9));
    }
}

TEST_CASE("Lagrangians in a torus") {
    const Splitting& sp = standard_splitting();
    CHECK(lagrangian_in_torus(Plane2(e(1), e(2)), sp));
    const Plane2 l(Vec4(e(1) + e(2)), Vec4(e(3) - e(4)));
    REQUIRE(l.lagrangian());
    CHECK_FALSE(lagrangian_in_torus(l, sp));

    // Same question in the null-cone model.
    oracle::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const Plane2 s = oracle::random_nondegenerate_plane(rng);
        const Plane2 m = oracle::random_lagrangian(rng);
        const Vec x = w_coordinates(plucker(m)).normalized();
        const double in_w = winner(x, w_coordinates(mu_unit(s)));
        if (std::abs(in_w) < 1e-6) continue;
        CHECK_FALSE(lagrangian_in_torus(m, Splitting(s)));

        // A Lagrangian through a vector of S meets S.
        const Vec4 x0 = rng.normal() * s.col(0) + rng.normal() * s.col(1);
        const Plane2 through = oracle::PhotonPencil(x0).at(rng.uniform(0, 3.14));
        CHECK(lagrangian_in_torus(through, Splitting(s)));
        CHECK(std::abs(winner(w_coordinates(plucker(through)).normalized(), w_coordinates(mu_unit(s)))) < 1e-9);
    }
}

TEST_CASE("graph, Det and adjugate") {
    const Splitting& sp = standard_splitting();
    CHECK(graph(map2(0, 0, 0, 0), sp) == sp.s());
    CHECK(graph(map2(-1, 0, 0, 1), sp).lagrangian());
    CHECK_FALSE(graph(map2(1, 0, 0, 1), sp).lagrangian());

    CHECK(det_omega(map2(1, 0, 0, 1)) == 1.0);
    CHECK(det_omega(map2(1, 2, 3, 4)) == doctest::Approx(-2.0));

    CHECK(adjugate(map2(1, 2, 3, 4)).m == map2(4, -2, -3, 1).m);
    CHECK(adjugate(map2(1, 0, 0, 1)).m == map2(1, 0, 0, 1).m);

    oracle::Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const Map2 f = map2(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
        CHECK(testing::close(adjugate(adjugate(f)).m, f.m));
        CHECK(testing::close(adjugate(f).m * f.m, det_omega(f) * Eigen::Matrix2d::Identity(), 1e-12));
        // f^*(omega_B) = Det(f) omega_A on the normalized bases.
        const Mat42 a = sp.s().basis(), b = sp.s_perp().basis();
        const Vec4 fa1 = b * f.m.col(0), fa2 = b * f.m.col(1);
        CHECK(omega(fa1, fa2) == doctest::Approx(det_omega(f) * omega(a.col(0), a.col(1))));
        if (std::abs(det_omega(f) + 1.0) < 1e-3) continue;
        const Plane2 g = graph(f, sp), h = perp_graph(f, sp);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(omega(g.col(i), h.col(j))) < 1e-12);
    }
    CHECK(perp_graph(map2(0, 0, 0, 0), sp) == sp.s_perp());
    CHECK_THROWS_AS(perp_graph(map2(-1, 0, 0, 1), sp), GeometryError);
}

TEST_CASE("eta from Det") {
    CHECK(eta_from_det(map2(1, 0, 0, 1)) == 0.0);
    CHECK(eta_from_det(map2(0, 0, 0, 0)) == 1.0);
    const Map2 f = map2(3, 0, 0, 1);
    CHECK(eta_from_det(f) == 0.5);
    const Splitting& sp = standard_splitting();
    const double direct = eta_normalized(mu(sp.s()), mu(graph(f, sp)));
    CHECK(std::abs(direct - 0.5) < 1e-12);
    CHECK_THROWS_AS(eta_from_det(map2(-1, 0, 0, 1)), GeometryError);
}
