#include "ein3/einstein.hpp"

#include <algorithm>
#include <cmath>

namespace ein3 {

const QuadSpace& ein_space() {
    static const QuadSpace space = [] {
        Mat g = Mat::Zero(5, 5);
        g(0, 0) = 1.0;
        g(1, 1) = 1.0;
        g(2, 2) = -1.0;
        g(3, 4) = -0.5;
        g(4, 3) = -0.5;
        return QuadSpace(g);
    }();
    return space;
}

std::string_view to_string(CausalType t) {
    switch (t) {
        case CausalType::Timelike: return "timelike";
        case CausalType::Spacelike: return "spacelike";
        case CausalType::Lightlike: return "lightlike";
    }
    return "?";
}

std::string_view to_string(IntersectionKind k) {
    switch (k) {
        case IntersectionKind::PhotonPair: return "photon-pair";
        case IntersectionKind::SpacelikeCircle: return "spacelike";
        case IntersectionKind::TimelikeCircle: return "timelike";
        case IntersectionKind::Equal: return "equal";
    }
    return "?";
}

EinPoint::EinPoint(const Vec& v) {
    if (v.size() != 5) throw GeometryError("EinPoint: expected a vector of length 5");
    const double n2 = v.squaredNorm();
    if (!(n2 > 0.0)) throw GeometryError("EinPoint: zero vector");
    if (std::abs(winner(v, v)) > eps_alg() * n2)
        throw GeometryError("EinPoint: vector is not null");
    rep_ = projective_normalize(v);
}

EinsteinTorus::EinsteinTorus(const Vec& normal) {
    if (normal.size() != 5) throw GeometryError("EinsteinTorus: expected a vector of length 5");
    const double q = winner(normal, normal);
    if (!(q > eps_alg() * normal.squaredNorm()))
        throw GeometryError("EinsteinTorus: normal is not spacelike");
    Vec unit = normal / std::sqrt(q);
    if (projective_normalize(unit).dot(unit) < 0.0) unit = -unit;
    normal_ = unit;
}

EinsteinTorus EinsteinTorus::from_unit(const Vec& normal) {
    if (normal.size() != 5) throw GeometryError("EinsteinTorus: expected a vector of length 5");
    const double q = winner(normal, normal);
    if (std::abs(q - 1.0) > eps_rank() * std::max(1.0, normal.squaredNorm()))
        throw GeometryError("EinsteinTorus::from_unit: normal is not unit spacelike");
    EinsteinTorus t;
    t.normal_ = projective_normalize(normal).dot(normal) < 0.0 ? Vec(-normal) : normal;
    return t;
}

EinPoint minkowski_embed(const std::array<double, 3>& v) {
    const double lorentz = v[0] * v[0] + v[1] * v[1] - v[2] * v[2];
    Vec w(5);
    w << v[0], v[1], v[2], lorentz, 1.0;
    return EinPoint(w);
}

std::optional<std::array<double, 3>> minkowski_coords(const Vec& w, double tol) {
    if (w.size() != 5) throw GeometryError("minkowski_coords: expected a vector of length 5");
    if (std::abs(w(4)) <= tol * w.norm()) return std::nullopt;
    return std::array<double, 3>{w(0) / w(4), w(1) / w(4), w(2) / w(4)};
}

EinPoint improper_point() {
    Vec w = Vec::Zero(5);
    w(3) = 1.0;
    return EinPoint(w);
}

bool incident(const EinPoint& p, const EinPoint& q) {
    return std::abs(winner(p.rep(), q.rep())) <= eps_alg();
}

Subspace light_cone(const EinPoint& p) {
    return orthogonal_complement(ein_space(), Subspace::span({p.rep()}));
}

CausalType classify_point(const EinPoint& p, const EinPoint& p0, const EinPoint& pinf) {
    if (incident(p0, pinf))
        throw GeometryError("classify_point: p0 and pinf are incident, no Minkowski patch");
    // Points on the light cone at infinity are outside the patch; they carry
    // no timelike or spacelike circle through p0 and pinf either.
    if (incident(p, p0) || incident(p, pinf)) return CausalType::Lightlike;
    const Signature sig = signature(ein_space(), Subspace::span({p.rep(), p0.rep(), pinf.rep()}));
    if (sig == Signature{1, 2, 0}) return CausalType::Timelike;
    if (sig == Signature{2, 1, 0}) return CausalType::Spacelike;
    throw GeometryError("classify_point: degenerate span of p, p0, pinf");
}

double eta(const EinsteinTorus& t1, const EinsteinTorus& t2) {
    return std::abs(winner(t1.normal(), t2.normal()));
}

IntersectionClass classify_torus_pair(const EinsteinTorus& t1, const EinsteinTorus& t2) {
    const double e = eta(t1, t2);
    if (t1 == t2) return {IntersectionKind::Equal, std::nullopt, e};
    Subspace carrier =
        orthogonal_complement(ein_space(), Subspace::span({t1.normal(), t2.normal()}));
    IntersectionKind kind;
    if (std::abs(e - 1.0) <= eps_alg())
        kind = IntersectionKind::PhotonPair;
    else if (e < 1.0)
        kind = IntersectionKind::TimelikeCircle;
    else
        kind = IntersectionKind::SpacelikeCircle;
    return {kind, std::move(carrier), e};
}

std::pair<PhotonW, PhotonW> photon_pair_from_degenerate(const Subspace& carrier) {
    if (carrier.ambient_dim() != 5 || carrier.dim() != 3)
        throw GeometryError("photon_pair_from_degenerate: expected a 3-dimensional subspace of W");
    if (signature(ein_space(), carrier) != Signature{1, 1, 1})
        throw GeometryError("photon_pair_from_degenerate: carrier is not of type (+,-,0)");
    const Mat& b = carrier.basis();
    Mat restricted = b.transpose() * ein_space().gram() * b;
    restricted = 0.5 * (restricted + restricted.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(restricted);
    // Ascending eigenvalues: negative, ~0, positive.
    const Vec neg = b * es.eigenvectors().col(0) / std::sqrt(-es.eigenvalues()(0));
    const Vec rad = b * es.eigenvectors().col(1);
    const Vec pos = b * es.eigenvectors().col(2) / std::sqrt(es.eigenvalues()(2));
    return {PhotonW{Subspace::span({pos + neg, rad})}, PhotonW{Subspace::span({pos - neg, rad})}};
}

Vec reflect(const Vec& s, const Vec& v) {
    const double ss = winner(s, s);
    if (std::abs(ss) <= eps_alg() * s.squaredNorm())
        throw GeometryError("reflect: reflection vector is null");
    return v - 2.0 * winner(v, s) / ss * s;
}

Eigen::Matrix2d composition_matrix(double c) {
    Eigen::Matrix2d m;
    m << 4.0 * c * c - 1.0, 2.0 * c, -2.0 * c, -1.0;
    return m;
}

std::pair<std::complex<double>, std::complex<double>> composition_eigenvalues(const Vec& s,
                                                                              const Vec& s_prime) {
    const double c = winner(s, s_prime);
    const std::complex<double> root = std::sqrt(std::complex<double>(c * c - 1.0, 0.0));
    const std::complex<double> base(2.0 * c * c - 1.0, 0.0);
    return {base + 2.0 * c * root, base - 2.0 * c * root};
}

bool triple_lightcone_empty(const EinPoint& p, const EinPoint& p0, const EinPoint& pinf) {
    const Subspace span = Subspace::span({p.rep(), p0.rep(), pinf.rep()});
    if (span.dim() < 3)
        throw GeometryError("triple_lightcone_empty: points are not in general position");
    if (incident(p0, pinf)) throw GeometryError("triple_lightcone_empty: p0 and pinf are incident");
    const Subspace comp = orthogonal_complement(ein_space(), span);
    return signature(ein_space(), comp) == Signature{2, 0, 0};
}

}  // namespace ein3
