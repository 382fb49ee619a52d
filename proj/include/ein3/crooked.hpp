#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ein3/symplectic.hpp"

namespace ein3 {

// Four photon vectors with omega(u+, v-) = omega(u-, v+) = 1 and all other
// mutual products zero.
class LightlikeQuadrilateral {
public:
    // Throws GeometryError listing every product that misses its target.
    LightlikeQuadrilateral(const Vec4& u_plus, const Vec4& u_minus, const Vec4& v_plus,
                           const Vec4& v_minus);

    const Vec4& u_plus() const { return u_plus_; }
    const Vec4& u_minus() const { return u_minus_; }
    const Vec4& v_plus() const { return v_plus_; }
    const Vec4& v_minus() const { return v_minus_; }

    // The quadrilateral moved by a linear map of V (symplectic maps keep it valid).
    LightlikeQuadrilateral transformed(const Mat4& g) const;

private:
    Vec4 u_plus_, u_minus_, v_plus_, v_minus_;
};

// Deviations of the six pairwise omega products from their targets, in the
// order (u+,v-), (u-,v+), (u+,u-), (u+,v+), (u-,v-), (v+,v-).
std::array<double, 6> quadrilateral_deviations(const Vec4& u_plus, const Vec4& u_minus,
                                               const Vec4& v_plus, const Vec4& v_minus);

enum class SurfaceRegion { WingPlus, WingMinus, Stem };
enum class Wing { Plus, Minus };

std::string_view to_string(SurfaceRegion r);

class CrookedSurface {
public:
    explicit CrookedSurface(LightlikeQuadrilateral quad);

    const LightlikeQuadrilateral& quad() const { return quad_; }

    const Plane2& p0() const { return p0_; }        // span{v+, v-}
    const Plane2& p_inf() const { return p_inf_; }  // span{u+, u-}
    const Plane2& p_plus() const { return p_plus_; }
    const Plane2& p_minus() const { return p_minus_; }
    const Plane2& stem_s1() const { return s1_; }  // span{u+, v-}
    const Plane2& stem_s2() const { return s2_; }  // span{u-, v+}

    const Plane2& vertex(Wing w) const { return w == Wing::Plus ? p_plus_ : p_minus_; }

private:
    LightlikeQuadrilateral quad_;
    Plane2 p0_, p_inf_, p_plus_, p_minus_, s1_, s2_;
};

bool wing_contains(const CrookedSurface& c, const Plane2& l, Wing w);

// Open stem: Lagrangians meeting both stem planes that are timelike with
// respect to P0 and P_inf.
bool stem_contains(const CrookedSurface& c, const Plane2& l);

std::optional<SurfaceRegion> surface_contains(const CrookedSurface& c, const Plane2& l);

// The two products of the photon criterion for a unit-normalized photon vector:
//   plus  = omega(p, v+) omega(p, u+)   (must be > 0)
//   minus = omega(p, v-) omega(p, u-)   (must be < 0)
struct PhotonMargins {
    double plus = 0.0;
    double minus = 0.0;

    // Signed slack of each inequality; positive means satisfied.
    double slack_plus() const { return plus; }
    double slack_minus() const { return -minus; }
    bool disjoint() const;
};

PhotonMargins photon_margins(const Vec4& p, const CrookedSurface& c);

bool photon_disjoint(const Vec4& p, const CrookedSurface& c);

// A Lagrangian through p lying on the surface, built from the photon
// criterion's proof: the wing photon omega-orthogonal to p. Empty when the
// photon is disjoint. residual measures how far the result is from exact
// incidence (omega defects on unit vectors).
struct PhotonWitness {
    Plane2 lagrangian;
    SurfaceRegion region;
    double residual;
};

std::optional<PhotonWitness> photon_surface_witness(const Vec4& p, const CrookedSurface& c);

struct InequalityMargin {
    std::string photon;   // e.g. "second.u+"
    std::string against;  // surface tested
    std::string relation; // "> 0" or "< 0"
    double value;         // the product itself
    double slack;         // signed so that > 0 means satisfied
};

struct CrookedPairReport {
    std::vector<InequalityMargin> margins;  // 16 entries
    bool disjoint = false;
    bool ambiguous = false;  // some |slack| within 10 eps_alg
    double min_slack = 0.0;
};

CrookedPairReport crooked_pair_report(const CrookedSurface& c1, const CrookedSurface& c2);

bool surfaces_disjoint(const CrookedSurface& c1, const CrookedSurface& c2);

}  // namespace ein3
