#pragma once

#include <Eigen/Dense>

#include <string_view>

#include "ein3/einstein.hpp"
#include "ein3/linalg.hpp"

// Symplectic model of Ein^3.
//
// V = R^4 with the symplectic form fixed by omega(e1,e3) = omega(e2,e4) = 1 and
// all other basis products zero. Lambda^2 V carries the signature (3,3) form
// defined through the wedge product and the volume element vol; W = Ker(omega)
// is the five-dimensional (3,2) space of the null-cone model. Lagrangian planes
// are points of Ein^3, nondegenerate planes (through their splittings) are
// Einstein tori.
namespace ein3 {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat42 = Eigen::Matrix<double, 4, 2>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// A bivector in the basis e12, e13, e14, e23, e24, e34.
struct Bivector {
    Vec6 c = Vec6::Zero();

    Bivector() = default;
    explicit Bivector(const Vec6& coeffs) : c(coeffs) {}

    double norm() const { return c.norm(); }

    friend Bivector operator+(const Bivector& a, const Bivector& b) { return Bivector(a.c + b.c); }
    friend Bivector operator-(const Bivector& a, const Bivector& b) { return Bivector(a.c - b.c); }
    friend Bivector operator*(double s, const Bivector& b) { return Bivector(s * b.c); }
    Bivector operator-() const { return Bivector(-c); }
};

// A symplectic form on R^4 together with the calibration of Lambda^4 making
// (omega ^ omega)(vol) = -2. vol = vol_scale() * e1^e2^e3^e4.
class SympSpace {
public:
    explicit SympSpace(const Mat4& omega);

    static const SympSpace& standard();

    const Mat4& omega() const { return omega_; }
    double vol_scale() const { return vol_scale_; }

    double form(const Vec4& u, const Vec4& v) const { return u.dot(omega_ * v); }

    // Value of omega ^ omega on e1^e2^e3^e4.
    double omega_wedge_omega() const;

private:
    Mat4 omega_;
    double vol_scale_;
};

inline double omega(const Vec4& u, const Vec4& v) { return SympSpace::standard().form(u, v); }

Bivector wedge(const Vec4& u, const Vec4& v);

// Coefficient of e1^e2^e3^e4 in a ^ b.
double wedge4(const Bivector& a, const Bivector& b);

// The (3,3) form on Lambda^2 V: a ^ b = (a . b) vol.
double wedge_product(const Bivector& a, const Bivector& b,
                     const SympSpace& space = SympSpace::standard());

// omega extended linearly to bivectors: omega(u ^ v) = omega(u, v).
double omega_of(const Bivector& b, const SympSpace& space = SympSpace::standard());

// The bivector dual to omega: omega_star . (u ^ v) = omega(u, v).
Bivector omega_star(const SympSpace& space = SympSpace::standard());

enum class PlaneTag { Lagrangian, Nondegenerate };

std::string_view to_string(PlaneTag t);

class Plane2 {
public:
    explicit Plane2(const Mat42& basis);
    Plane2(const Vec4& u, const Vec4& v);

    const Mat42& basis() const { return basis_; }
    Vec4 col(int i) const { return basis_.col(i); }
    PlaneTag tag() const { return tag_; }
    bool lagrangian() const { return tag_ == PlaneTag::Lagrangian; }

    Subspace subspace() const { return Subspace(basis_, 4); }

    friend bool operator==(const Plane2& a, const Plane2& b) {
        return a.subspace() == b.subspace();
    }

private:
    Mat42 basis_;
    PlaneTag tag_;
};

Bivector plucker(const Plane2& p);

Plane2 bivector_to_plane(const Bivector& b);

bool transverse(const Plane2& p, const Plane2& q);

Bivector reflect_omega_star(const Bivector& b);

// The omega-orthogonal plane, found by solving the linear system. A Lagrangian
// input is its own complement and comes back tagged Lagrangian.
Plane2 symplectic_complement(const Plane2& s);

// The same complement obtained from [R_{omega*}(iota(S))].
Plane2 symplectic_complement_via_reflection(const Plane2& s);

// Maslov index m(L, P, L') of pairwise transverse Lagrangians; one of -2, 0, 2.
int maslov(const Plane2& l, const Plane2& p, const Plane2& l_prime);

// Orthogonal projection of iota(S) onto W for S with omega-normalized basis.
Bivector mu(const Plane2& s);

// sqrt(2) mu(S). mu(S) . mu(S) = 1/2 for every nondegenerate S, so this is a
// unit spacelike vector without dividing by a computed norm; the computed
// norm loses accuracy when S is close to Lagrangian and mu(S) is long.
Bivector mu_unit(const Plane2& s);

// |a . b| / sqrt((a . a)(b . b)) for spacelike a, b.
double eta_normalized(const Bivector& a, const Bivector& b);

// V = s (+) s_perp with both bases normalized to omega(b1, b2) = 1.
class Splitting {
public:
    explicit Splitting(const Plane2& s);
    Splitting(const Plane2& s, const Plane2& s_perp);

    const Plane2& s() const { return s_; }
    const Plane2& s_perp() const { return s_perp_; }

private:
    Plane2 s_;
    Plane2 s_perp_;
};

Splitting splitting_from_spacelike(const Bivector& u);

bool lagrangian_in_torus(const Plane2& l, const Splitting& sp);

// A linear map s -> s_perp (or back) written in the omega-normalized bases of
// a splitting.
struct Map2 {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
};

Plane2 graph(const Map2& f, const Splitting& sp);

double det_omega(const Map2& f);

Map2 adjugate(const Map2& f);

// graph(-Adj f) from s_perp to s, the omega-complement of graph(f).
Plane2 perp_graph(const Map2& f, const Splitting& sp);

double eta_from_det(const Map2& f);

// --- Bridge to the null-cone model -------------------------------------------

// Coordinates (x, y, z, u, v) of the orthogonal projection of b onto W, through
// a fixed isometry W -> (R^5, x^2 + y^2 - z^2 - uv).
Vec w_coordinates(const Bivector& b);

// Inverse of w_coordinates on W.
Bivector from_w_coordinates(const Vec& w);

// The Ein^3 point of a Lagrangian plane.
EinPoint lagrangian_point(const Plane2& l);

// The Einstein torus of the splitting s (+) s^perp.
EinsteinTorus splitting_torus(const Plane2& s);

}  // namespace ein3
