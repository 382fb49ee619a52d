#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>

#include "ein3/linalg.hpp"

// Null-cone model of the 3-dimensional Einstein universe.
//
// W = R^{3,2} with coordinates (x, y, z, u, v) and quadratic form
//   Q = x^2 + y^2 - z^2 - u v.
// Points are null lines, photons totally isotropic planes, Einstein tori the
// null cones of hyperplanes with spacelike normal.
namespace ein3 {

// The five-dimensional form space with the fixed Gram convention above.
const QuadSpace& ein_space();

inline double winner(const Vec& v, const Vec& w) { return inner(ein_space(), v, w); }

class EinPoint {
public:
    // Validates nullity (relative to |v|^2) and projectively normalizes.
    explicit EinPoint(const Vec& v);

    const Vec& rep() const { return rep_; }

    friend bool operator==(const EinPoint& a, const EinPoint& b) {
        return projectively_equal(a.rep_, b.rep_, eps_rank());
    }

private:
    Vec rep_;
};

struct PhotonW {
    Subspace plane;  // totally isotropic 2-plane
};

class EinsteinTorus {
public:
    // Rescales a spacelike vector to unit length and fixes its sign.
    explicit EinsteinTorus(const Vec& normal);

    // For a normal already known to be unit by construction: only the sign is
    // fixed, so a long nearly-null representative keeps its accuracy.
    static EinsteinTorus from_unit(const Vec& normal);

    const Vec& normal() const { return normal_; }

    friend bool operator==(const EinsteinTorus& a, const EinsteinTorus& b) {
        return projectively_equal(a.normal_, b.normal_, eps_rank());
    }

private:
    EinsteinTorus() = default;
    Vec normal_;
};

enum class CausalType { Timelike, Spacelike, Lightlike };

enum class IntersectionKind { PhotonPair, SpacelikeCircle, TimelikeCircle, Equal };

std::string_view to_string(CausalType t);
std::string_view to_string(IntersectionKind k);

struct IntersectionClass {
    IntersectionKind kind;
    std::optional<Subspace> carrier;  // absent for Equal
    double eta;
};

EinPoint minkowski_embed(const std::array<double, 3>& v);

// Affine coordinates of a point in the patch complementary to the light cone of
// the improper point; empty when the point lies on that light cone.
std::optional<std::array<double, 3>> minkowski_coords(const Vec& w, double tol = 1e-12);

EinPoint improper_point();

bool incident(const EinPoint& p, const EinPoint& q);

// Degenerate hyperplane p^perp whose null cone is the light cone of p.
Subspace light_cone(const EinPoint& p);

CausalType classify_point(const EinPoint& p, const EinPoint& p0, const EinPoint& pinf);

double eta(const EinsteinTorus& t1, const EinsteinTorus& t2);

IntersectionClass classify_torus_pair(const EinsteinTorus& t1, const EinsteinTorus& t2);

// Splits a (+,-,0) 3-space into the two isotropic planes making up its null cone.
std::pair<PhotonW, PhotonW> photon_pair_from_degenerate(const Subspace& carrier);

// Orthogonal reflection in the non-null vector s.
Vec reflect(const Vec& s, const Vec& v);

// The two eigenvalues of R_s R_s' on span{s, s'} other than the trivial ones,
// for unit spacelike s, s'. Their product is 1.
std::pair<std::complex<double>, std::complex<double>> composition_eigenvalues(const Vec& s,
                                                                              const Vec& s_prime);

// Matrix of R_s R_s' restricted to span{s, s'} in the basis (s, s'), as a
// function of c = s.s'.
Eigen::Matrix2d composition_matrix(double c);

// Whether the light cones of p, p0 and pinf have no common point.
bool triple_lightcone_empty(const EinPoint& p, const EinPoint& p0, const EinPoint& pinf);

}  // namespace ein3
