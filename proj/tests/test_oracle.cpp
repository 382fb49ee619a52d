#include "helpers.hpp"

#include <cmath>

#include "ein3/oracle.hpp"

using namespace ein3;
using namespace ein3::oracle;
using testing::w5;

TEST_CASE("seeded streams are reproducible") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(42), d(42);
    CHECK(testing::close(random_unit_spacelike(c), random_unit_spacelike(d), 0.0));
    CHECK(Rng(42).split(3).next_u64() == Rng(42).split(3).next_u64());
    CHECK(Rng(42).split(3).next_u64() != Rng(42).split(4).next_u64());
    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK((x >= 0.0 && x < 1.0));
    }
}

TEST_CASE("generators satisfy their invariants") {
    Rng rng(7);
    for (int t = 0; t < 1000; ++t) {
        const Vec s = random_unit_spacelike(rng);
        CHECK(std::abs(winner(s, s) - 1.0) < 1e-12);
        CHECK(random_lagrangian(rng).lagrangian());
        CHECK_FALSE(random_nondegenerate_plane(rng).lagrangian());
        const Mat4 g = random_symplectic(rng);
        const Mat4& o = SympSpace::standard().omega();
        CHECK((g.transpose() * o * g - o).norm() < 1e-12 * g.squaredNorm());
        CHECK(std::abs(random_sl2(rng).determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("torus samples") {
    Rng rng(5);
    const EinsteinTorus t(w5(1, 2, 0, 1, -1));
    const SampleCloud c = sample_torus(t, 500, rng);
    CHECK(c.size() == 500);
    for (const Vec& x : c.points) {
        CHECK(std::abs(winner(x, x)) < 1e-12);
        CHECK(std::abs(winner(x, t.normal())) < 1e-12);
    }

    // The torus through p_inf meets the patch in an affine timelike plane:
    // normal (1,0,0,0,0) gives the plane x = 0.
    const SampleCloud flat = sample_torus(EinsteinTorus(w5(1, 0, 0, 0, 0)), 300, rng);
    for (const Vec& x : flat.points)
        if (auto m = minkowski_coords(x, 1e-9)) CHECK(std::abs((*m)[0]) < 1e-9);

    // Far apart tori: T1 samples stay off T2.
    const EinsteinTorus t1(w5(1, 0, 0, 0, 0)), t2(w5(10, 0, 0, 99, 1));
    REQUIRE(eta(t1, t2) > 5);
    const SampleCloud far = sample_torus(t1, 300, rng);
    for (const Vec& x : far.points) {
        const Vec y = x.normalized();
        CHECK(std::abs(winner(y, t2.normal())) > 1e-3);
    }
}

TEST_CASE("surface samples are self-consistent") {
    Rng rng(6);
    const CrookedSurface c(random_quadrilateral(rng));
    const SampleCloud s = sample_surface(c, 600, rng);
    int counts[3] = {0, 0, 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto region = surface_contains(c, s.lagrangians[i]);
        REQUIRE(region);
        CHECK(to_string(*region) == s.labels[i]);
        ++counts[static_cast<int>(*region)];
        if (*region == SurfaceRegion::Stem) CHECK(std::abs(maslov(c.p0(), s.lagrangians[i], c.p_inf())) == 2);
    }
    CHECK(counts[0] == 240);
    CHECK(counts[1] == 240);
    CHECK(counts[2] == 120);
}

TEST_CASE("min_gap") {
    Rng rng(8);
    const SampleCloud a = sample_torus(EinsteinTorus(w5(0, 1, 0, 0, 0)), 50, rng);
    CHECK(min_gap(a, a) == 0.0);
    SampleCloud b = sample_torus(EinsteinTorus(w5(1, 0, 0, 0, 0)), 50, rng);
    b.points.push_back(a.points[7]);
    b.labels.push_back("shared");
    CHECK(min_gap(a, b) <= 1e-6);
    CHECK_THROWS_AS(min_gap(a, SampleCloud{}), GeometryError);
}

TEST_CASE("intersection probe") {
    Rng rng(9);
    const EinsteinTorus t1(w5(1, 0, 0, 0, 0));
    CHECK(probe_intersection_type(t1, EinsteinTorus(w5(0, 1, 0, 0, 0)), 256, rng).kind == ProbeKind::Timelike);
    CHECK(probe_intersection_type(t1, EinsteinTorus(w5(2, 0, 0, 3, 1)), 256, rng).kind == ProbeKind::Spacelike);
    CHECK(probe_intersection_type(t1, EinsteinTorus(w5(1, 0, 0, 1, 0)), 256, rng).kind == ProbeKind::PhotonPair);
    CHECK_THROWS_AS(probe_intersection_type(t1, EinsteinTorus(w5(0, 1, 0, 0, 0)), 8, rng), GeometryError);
}

TEST_CASE("photon search finds the surface through a crossing photon") {
    const CrookedSurface c(canonical_quadrilateral());
    Vec4 p;
    p << 1, 1, 1, 1;  // plus product -1: crosses
    const auto hits = photon_search(p, c, 2000);
    REQUIRE_FALSE(hits.empty());
    for (const auto& h : hits) CHECK(h.lagrangian.lagrangian());

    Vec4 q;
    q << 1, 1, -1, 1;  // disjoint
    CHECK(photon_search(q, c, 2000).empty());
}
