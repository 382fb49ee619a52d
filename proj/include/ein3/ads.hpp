#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>

#include "ein3/crooked.hpp"

// Anti-de Sitter space inside Ein^3.
//
// V = V0 (+) V0 with omega = omega0 (+) -omega0 and omega0(x, y) = x^T J y,
// J = [[0, 1], [-1, 0]]. SL(2, R) sits in the Lagrangian Grassmannian through
// f -> graph(f); the involution I (+) -I fixes exactly the conformal boundary.
//
// Vectors of V0 (+) V0 are written (x; y) in "AdS coordinates". Every Plane2 or
// quadrilateral handed to the rest of the library is first moved to the
// standard symplectic basis by the fixed symplectic isomorphism ads_frame().
namespace ein3 {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

const Mat2& J();

inline double omega0(const Vec2& x, const Vec2& y) { return x.dot(J() * y); }

// Symplectic isomorphism from AdS coordinates to the standard basis of V.
const Mat4& ads_frame();

class AdsPoint {
public:
    explicit AdsPoint(const Mat2& m);

    static AdsPoint identity() { return AdsPoint(Mat2::Identity()); }

    const Mat2& matrix() const { return m_; }

private:
    Mat2 m_;
};

// An AdS crooked plane based at `base` with defining directions a, b in V0.
struct AdsCrookedPlane {
    AdsPoint base;
    Vec2 a;
    Vec2 b;

    AdsCrookedPlane(AdsPoint base, const Vec2& a, const Vec2& b);
};

class Sl2Vector {
public:
    explicit Sl2Vector(const Mat2& m);

    const Mat2& matrix() const { return m_; }

private:
    Mat2 m_;
};

struct Horocycle {
    Sl2Vector xi;  // null, upper cone
    double r;

    Horocycle(Sl2Vector xi, double r);
};

// The block matrix [I; f] spanning graph(f), in AdS coordinates.
Mat42 embed_block(const AdsPoint& f);

Plane2 embed(const AdsPoint& f);

// Action of (A, B) in SL2 x SL2 on V as B (+) A, expressed in the standard basis.
Mat4 isometry_action(const Mat2& a, const Mat2& b);

// I (+) -I in the standard basis.
const Mat4& involution_matrix();

Plane2 involution(const Plane2& l);

// Edge vectors in AdS coordinates, before normalization: u+ = (a; -a),
// v+ = (a; a), u- = (b; -b), v- = (b; b), then moved by I (+) base.
LightlikeQuadrilateral ads_quadrilateral(const AdsCrookedPlane& p);

// The four reduced inequalities for planes (I; a, b) and (f; a', b'):
//   omega0(x', y)^2 - omega0(f x', y)^2 > 0,  x' in {a', b'}, y in {a, b},
// evaluated on unit-length direction vectors.
struct AdsReport {
    std::array<double, 4> margins{};  // order: (a',b), (a',a), (b',b), (b',a)
    bool disjoint = false;
    Mat2 relative_base;  // f = base1^{-1} base2
};

AdsReport ads_report(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2);

bool ads_disjoint(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2);

// a -> -a a^T J.
Sl2Vector boundary_lift(const Vec2& a);

// Trace form K(X, Y) = Tr(XY).
double killing(const Sl2Vector& x, const Sl2Vector& y);

double horocycle_distance(const Horocycle& h1, const Horocycle& h2);

struct DgkReport {
    // K(xi, f xi' f^-1) - K(xi, xi') for (xi, xi') in
    // (B, A'), (A, A'), (B, B'), (A, B'), lifts of unit vectors.
    std::array<double, 4> margins{};
    bool verdict = false;
    std::string explanation;
};

DgkReport dgk_report(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2);

bool dgk_criterion(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2);

}  // namespace ein3
