#include "ein3/ads.hpp"

#include <cmath>

namespace ein3 {

namespace {

Mat4 block_diag(const Mat2& a, const Mat2& b) {
    Mat4 m = Mat4::Zero();
    m.topLeftCorner<2, 2>() = a;
    m.bottomRightCorner<2, 2>() = b;
    return m;
}

Vec4 stack(const Vec2& x, const Vec2& y) {
    Vec4 v;
    v << x, y;
    return v;
}

Mat2 relative_base(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2) {
    return p1.base.matrix().inverse() * p2.base.matrix();
}

}  // namespace

const Mat2& J() {
    static const Mat2 j = (Mat2() << 0.0, 1.0, -1.0, 0.0).finished();
    return j;
}

const Mat4& ads_frame() {
    // (x1, x2, y1, y2) -> (x1, y1, x2, -y2)
    static const Mat4 t = (Mat4() << 1, 0, 0, 0,  //
                           0, 0, 1, 0,            //
                           0, 1, 0, 0,            //
                           0, 0, 0, -1)
                              .finished();
    return t;
}

AdsPoint::AdsPoint(const Mat2& m) : m_(m) {
    if (!m.allFinite()) throw GeometryError("AdsPoint: non-finite matrix");
    if (std::abs(m.determinant() - 1.0) > eps_alg() * std::max(1.0, m.squaredNorm()))
        throw GeometryError("AdsPoint: determinant is not 1 (det = " +
                            std::to_string(m.determinant()) + ")");
}

AdsCrookedPlane::AdsCrookedPlane(AdsPoint base_, const Vec2& a_, const Vec2& b_)
    : base(std::move(base_)), a(a_), b(b_) {
    if (!a.allFinite() || !b.allFinite() || !(a.norm() > 0.0) || !(b.norm() > 0.0))
        throw GeometryError("AdsCrookedPlane: directions must be finite and nonzero");
    if (std::abs(omega0(a.normalized(), b.normalized())) <= eps_alg())
        throw GeometryError("AdsCrookedPlane: directions a and b are dependent");
}

Sl2Vector::Sl2Vector(const Mat2& m) : m_(m) {
    if (!m.allFinite()) throw GeometryError("Sl2Vector: non-finite matrix");
    if (std::abs(m.trace()) > eps_alg() * std::max(1.0, m.norm()))
        throw GeometryError("Sl2Vector: matrix is not traceless");
}

Horocycle::Horocycle(Sl2Vector xi_, double r_) : xi(std::move(xi_)), r(r_) {
    const Mat2& m = xi.matrix();
    if (std::abs(killing(xi, xi)) > eps_alg() * std::max(1.0, m.squaredNorm()))
        throw GeometryError("Horocycle: ideal point is not null");
    if (!(m(1, 0) - m(0, 1) > 0.0)) throw GeometryError("Horocycle: ideal point not in the upper cone");
    if (!(r > 0.0) || !std::isfinite(r)) throw GeometryError("Horocycle: radius must be positive");
}

Mat42 embed_block(const AdsPoint& f) {
    Mat42 m;
    m << Mat2::Identity(), f.matrix();
    return m;
}

Plane2 embed(const AdsPoint& f) { return Plane2(Mat42(ads_frame() * embed_block(f))); }

Mat4 isometry_action(const Mat2& a, const Mat2& b) {
    return ads_frame() * block_diag(b, a) * ads_frame().inverse();
}

const Mat4& involution_matrix() {
    static const Mat4 m = ads_frame() * block_diag(Mat2::Identity(), -Mat2::Identity()) *
                          ads_frame().inverse();
    return m;
}

Plane2 involution(const Plane2& l) { return Plane2(Mat42(involution_matrix() * l.basis())); }

LightlikeQuadrilateral ads_quadrilateral(const AdsCrookedPlane& p) {
    const Vec2& a = p.a;
    const Vec2& b = p.b;
    const double c = omega0(a, b);
    if (std::abs(c) <= eps_alg() * a.norm() * b.norm())
        throw GeometryError("ads_quadrilateral: omega0(a, b) = 0");
    // u+ and v+ keep the a-photons unscaled so that omega(p, v+) omega(p, u+)
    // carries the sign of omega0(x, a)^2 - omega0(y, a)^2 for p = (x; y).
    const Mat4 move = ads_frame() * block_diag(Mat2::Identity(), p.base.matrix());
    const Vec4 u_plus = move * stack(a, -a);
    const Vec4 v_plus = move * stack(a, a);
    const Vec4 u_minus = move * stack(b, -b) * (-1.0 / (2.0 * c));
    const Vec4 v_minus = move * stack(b, b) * (1.0 / (2.0 * c));
    return LightlikeQuadrilateral(u_plus, u_minus, v_plus, v_minus);
}

AdsReport ads_report(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2) {
    AdsReport r;
    r.relative_base = relative_base(p1, p2);
    const Mat2& f = r.relative_base;
    const Vec2 a = p1.a.normalized();
    const Vec2 b = p1.b.normalized();
    const Vec2 ap = p2.a.normalized();
    const Vec2 bp = p2.b.normalized();
    auto gap = [&](const Vec2& x, const Vec2& y) {
        const double w = omega0(x, y);
        const double wf = omega0(f * x, y);
        return w * w - wf * wf;
    };
    r.margins = {gap(ap, b), gap(ap, a), gap(bp, b), gap(bp, a)};
    r.disjoint = true;
    for (double m : r.margins)
        if (!(m > eps_alg())) r.disjoint = false;
    return r;
}

bool ads_disjoint(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2) {
    return ads_report(p1, p2).disjoint;
}

Sl2Vector boundary_lift(const Vec2& a) {
    if (!(a.norm() > 0.0)) throw GeometryError("boundary_lift: zero vector");
    return Sl2Vector(-a * a.transpose() * J());
}

double killing(const Sl2Vector& x, const Sl2Vector& y) { return (x.matrix() * y.matrix()).trace(); }

double horocycle_distance(const Horocycle& h1, const Horocycle& h2) {
    const double k = killing(h1.xi, h2.xi);
    if (!(k < 0.0)) throw GeometryError("horocycle_distance: ideal points coincide (K >= 0)");
    const double x = k / (2.0 * h1.r * h2.r);
    if (-x < 1.0 - eps_alg()) throw GeometryError("horocycle_distance: horocycles overlap");
    const double arg = -0.5 * (x + 1.0 / x);
    return std::acosh(std::max(1.0, arg));
}

DgkReport dgk_report(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2) {
    DgkReport r;
    const Mat2 f = relative_base(p1, p2);
    const Mat2 finv = f.inverse();
    const Vec2 a = p1.a.normalized();
    const Vec2 b = p1.b.normalized();
    const Vec2 ap = p2.a.normalized();
    const Vec2 bp = p2.b.normalized();
    const std::array<std::pair<Vec2, Vec2>, 4> pairs = {{{b, ap}, {a, ap}, {b, bp}, {a, bp}}};
    static constexpr const char* kNames[4] = {"(b, a')", "(a, a')", "(b, b')", "(a, b')"};
    r.verdict = true;
    for (int i = 0; i < 4; ++i) {
        const auto& [x, y] = pairs[i];
        const Sl2Vector xi = boundary_lift(x);
        const Sl2Vector xi_p = boundary_lift(y);
        const Sl2Vector moved(f * xi_p.matrix() * finv);
        r.margins[i] = killing(xi, moved) - killing(xi, xi_p);
        if (std::abs(omega0(x, y)) <= eps_alg()) {
            r.verdict = false;
            r.explanation += std::string(r.explanation.empty() ? "" : "; ") + "endpoints " +
                             kNames[i] + " coincide";
        } else if (!(r.margins[i] > eps_alg())) {
            r.verdict = false;
        }
    }
    return r;
}

bool dgk_criterion(const AdsCrookedPlane& p1, const AdsCrookedPlane& p2) {
    return dgk_report(p1, p2).verdict;
}

}  // namespace ein3
