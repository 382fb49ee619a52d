#include "helpers.hpp"

#include "ein3/crooked.hpp"
#include "ein3/oracle.hpp"

using namespace ein3;
using testing::e;

namespace {

// (u+, u-, v+, v-) = (e1, e2, e4, e3):
//   P+ = <e1,e4>, P- = <e2,e3>, S1 = <e1,e3>, S2 = <e2,e4>, P0 = <e3,e4>, P_inf = <e1,e2>.
CrookedSurface canonical() { return CrookedSurface(oracle::canonical_quadrilateral()); }

Plane2 span(const Vec4& a, const Vec4& b) { return Plane2(a, b); }

}  // namespace

TEST_CASE("quadrilateral validation") {
    CHECK_NOTHROW(LightlikeQuadrilateral(e(1), e(2), e(4), e(3)));
    CHECK_THROWS_AS(LightlikeQuadrilateral(e(1), e(2), e(3), e(4)), GeometryError);
    CHECK_NOTHROW(LightlikeQuadrilateral(2 * e(1), e(2), e(4), 0.5 * e(3)));
    try {
        LightlikeQuadrilateral(e(1), e(2), e(3), e(4));
    } catch (const GeometryError& err) {
        CHECK(std::string(err.what()).find("omega(u+,v-) - 1 = -1") != std::string::npos);
    }
}

TEST_CASE("wing membership") {
    const CrookedSurface c = canonical();
    CHECK(wing_contains(c, span(e(1), Vec4(e(2) + e(4))), Wing::Plus));  // meets P+ in u+
    const Plane2 l = span(Vec4(e(1) - e(4)), Vec4(e(2) - e(3)));
    REQUIRE(l.lagrangian());
    CHECK_FALSE(wing_contains(c, l, Wing::Plus));  // u+ - v+
    CHECK(wing_contains(c, l, Wing::Minus));       // u- - v-
    CHECK(wing_contains(c, c.p_plus(), Wing::Plus));
}

TEST_CASE("stem membership") {
    const CrookedSurface c = canonical();
    const Plane2 l = span(Vec4(e(1) + e(3)), Vec4(e(2) + e(4)));
    CHECK(std::abs(maslov(c.p0(), l, c.p_inf())) == 2);
    CHECK(stem_contains(c, l));
    CHECK_FALSE(stem_contains(c, c.p0()));
    CHECK_FALSE(stem_contains(c, c.p_plus()));
    // Meets both stem planes but is spacelike with respect to P0, P_inf.
    const Plane2 m = span(Vec4(e(1) + e(3)), Vec4(e(2) - e(4)));
    CHECK(m.lagrangian());
    CHECK_FALSE(stem_contains(c, m));
}

TEST_CASE("surface_contains") {
    const CrookedSurface c = canonical();
    CHECK(surface_contains(c, c.p_plus()) == SurfaceRegion::WingPlus);
    CHECK(surface_contains(c, c.p_minus()) == SurfaceRegion::WingMinus);
    CHECK(surface_contains(c, span(Vec4(e(1) + e(3)), Vec4(e(2) + e(4)))) == SurfaceRegion::Stem);

    // Sampled stem members are never wing members.
    oracle::Rng rng(2);
    const oracle::SampleCloud s = oracle::sample_surface(c, 300, rng, {0, 0, 1});
    for (const auto& l : s.lagrangians) {
        CHECK(surface_contains(c, l) == SurfaceRegion::Stem);
        CHECK(std::abs(maslov(c.p0(), l, c.p_inf())) == 2);
    }
}

TEST_CASE("photon criterion") {
    const CrookedSurface c = canonical();
    CHECK_FALSE(photon_disjoint(e(1), c));
    CHECK(photon_disjoint(Vec4(e(1) + e(2) - e(3) + e(4)), c));
    CHECK_FALSE(photon_disjoint(Vec4(e(1) + e(3)), c));
    // Scale invariance, including negative scale.
    CHECK(photon_disjoint(Vec4(-7.5 * (e(1) + e(2) - e(3) + e(4))), c));

    const auto w = photon_surface_witness(Vec4(e(1) + e(2) + e(3) + e(4)), c);
    REQUIRE(w);
    CHECK(w->lagrangian.lagrangian());
    CHECK(surface_contains(c, w->lagrangian));
    CHECK(w->residual < 1e-12);
    CHECK_FALSE(photon_surface_witness(Vec4(e(1) + e(2) - e(3) + e(4)), c));
}

TEST_CASE("pairs of surfaces") {
    const CrookedSurface c = canonical();
    const CrookedPairReport same = crooked_pair_report(c, c);
    CHECK(same.margins.size() == 16);
    CHECK_FALSE(same.disjoint);
    CHECK(same.ambiguous);

    // A symplectic shear fixing e1 keeps the edge photon u+ shared.
    Mat4 g = Mat4::Identity();
    g(0, 2) = 1e-3;
    const CrookedSurface moved(oracle::canonical_quadrilateral().transformed(g));
    CHECK_FALSE(surfaces_disjoint(c, moved));
}

TEST_CASE("symplectic images of valid quadrilaterals stay valid") {
    oracle::Rng rng(13);
    for (int t = 0; t < 200; ++t) CHECK_NOTHROW(oracle::random_quadrilateral(rng));
}
