#include "ein3/symplectic.hpp"

#include <cmath>
#include <string>

namespace ein3 {

namespace {

// (i, j) index pairs of the bivector basis e12, e13, e14, e23, e24, e34.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Mat42 omega_normalized(const Mat42& basis) {
    Mat42 b = basis;
    const double w = omega(b.col(0), b.col(1));
    if (std::abs(w) <= eps_alg() * b.col(0).norm() * b.col(1).norm())
        throw GeometryError("plane is Lagrangian, no omega-normalized basis");
    b.col(1) /= w;
    return b;
}

Mat42 orthonormal_basis(const Mat42& basis) {
    Eigen::JacobiSVD<Mat42> svd(basis, Eigen::ComputeFullU);
    return svd.matrixU().leftCols<2>();
}

}  // namespace

SympSpace::SympSpace(const Mat4& omega) : omega_(omega), vol_scale_(0.0) {
    const double scale = omega_.cwiseAbs().maxCoeff();
    if (!omega_.allFinite() || !(scale > 0.0))
        throw GeometryError("SympSpace: form must be finite and nonzero");
    if ((omega_ + omega_.transpose()).cwiseAbs().maxCoeff() > eps_alg() * scale)
        throw GeometryError("SympSpace: form is not antisymmetric");
    const double ww = omega_wedge_omega();
    if (std::abs(ww) <= eps_rank() * scale * scale)
        throw GeometryError("SympSpace: form is degenerate");
    vol_scale_ = -2.0 / ww;
}

const SympSpace& SympSpace::standard() {
    static const SympSpace space = [] {
        Mat4 w = Mat4::Zero();
        w(0, 2) = 1.0;
        w(2, 0) = -1.0;
        w(1, 3) = 1.0;
        w(3, 1) = -1.0;
        return SympSpace(w);
    }();
    return space;
}

double SympSpace::omega_wedge_omega() const {
    const Mat4& w = omega_;
    const double pfaffian = w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
    return 2.0 * pfaffian;
}

Bivector wedge(const Vec4& u, const Vec4& v) {
    Vec6 c;
    for (int k = 0; k < 6; ++k) {
        const int i = kPairs[k][0];
        const int j = kPairs[k][1];
        c(k) = u(i) * v(j) - u(j) * v(i);
    }
    return Bivector(c);
}

double wedge4(const Bivector& a, const Bivector& b) {
    const Vec6& x = a.c;
    const Vec6& y = b.c;
    return x(0) * y(5) - x(1) * y(4) + x(2) * y(3) + x(3) * y(2) - x(4) * y(1) + x(5) * y(0);
}

double wedge_product(const Bivector& a, const Bivector& b, const SympSpace& space) {
    return wedge4(a, b) / space.vol_scale();
}

double omega_of(const Bivector& b, const SympSpace& space) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) s += b.c(k) * space.omega()(kPairs[k][0], kPairs[k][1]);
    return s;
}

Bivector omega_star(const SympSpace& space) {
    // Solve G x = w where G is the Gram matrix of the (3,3) form and w_k the
    // value of omega on the k-th basis bivector.
    Eigen::Matrix<double, 6, 6> gram;
    Vec6 rhs;
    for (int r = 0; r < 6; ++r) {
        Bivector er;
        er.c(r) = 1.0;
        rhs(r) = omega_of(er, space);
        for (int s = 0; s < 6; ++s) {
            Bivector es;
            es.c(s) = 1.0;
            gram(r, s) = wedge_product(er, es, space);
        }
    }
    return Bivector(gram.fullPivLu().solve(rhs));
}

std::string_view to_string(PlaneTag t) {
    return t == PlaneTag::Lagrangian ? "lagrangian" : "nondegenerate";
}

Plane2::Plane2(const Mat42& basis) : basis_(basis) {
    if (!basis_.allFinite()) throw GeometryError("Plane2: non-finite basis");
    Eigen::JacobiSVD<Mat42> svd(basis_, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0) || sv(1) <= eps_rank() * sv(0))
        throw GeometryError("Plane2: basis is rank deficient");
    const Mat42 q = svd.matrixU().leftCols<2>();
    tag_ = std::abs(omega(q.col(0), q.col(1))) <= eps_alg() ? PlaneTag::Lagrangian
                                                            : PlaneTag::Nondegenerate;
}

Plane2::Plane2(const Vec4& u, const Vec4& v)
    : Plane2([&] {
          Mat42 m;
          m << u, v;
          return m;
      }()) {}

Bivector plucker(const Plane2& p) { return wedge(p.col(0), p.col(1)); }

Plane2 bivector_to_plane(const Bivector& b) {
    const double n = b.norm();
    if (!(n > 0.0)) throw GeometryError("bivector_to_plane: zero bivector");
    if (std::abs(wedge_product(b, b)) > eps_alg() * n * n)
        throw GeometryError("bivector_to_plane: bivector is not decomposable (b.b = " +
                            std::to_string(wedge_product(b, b)) + ")");
    Mat4 a = Mat4::Zero();
    for (int k = 0; k < 6; ++k) {
        a(kPairs[k][0], kPairs[k][1]) = b.c(k);
        a(kPairs[k][1], kPairs[k][0]) = -b.c(k);
    }
    Eigen::JacobiSVD<Mat4> svd(a, Eigen::ComputeFullU);
    Mat42 basis = svd.matrixU().leftCols(2);
    // Rescale so that the Plucker vector reproduces b itself.
    const Bivector w = wedge(basis.col(0), basis.col(1));
    basis.col(1) *= b.c.dot(b.c) / w.c.dot(b.c);
    return Plane2(basis);
}

bool transverse(const Plane2& p, const Plane2& q) {
    const Bivector a = plucker(p);
    const Bivector b = plucker(q);
    return std::abs(wedge_product(a, b)) > eps_alg() * a.norm() * b.norm();
}

Bivector reflect_omega_star(const Bivector& b) {
    const Bivector ws = omega_star();
    return b + wedge_product(b, ws) * ws;
}

Plane2 symplectic_complement(const Plane2& s) {
    if (s.lagrangian()) return s;
    const Mat q = orthonormal_basis(s.basis());
    const Mat kernel = nullspace(q.transpose() * SympSpace::standard().omega());
    if (kernel.cols() != 2) throw GeometryError("symplectic_complement: unexpected kernel dimension");
    return Plane2(Mat42(kernel));
}

Plane2 symplectic_complement_via_reflection(const Plane2& s) {
    const Bivector i = plucker(s);
    return bivector_to_plane((1.0 / i.norm()) * reflect_omega_star(i));
}

int maslov(const Plane2& l, const Plane2& p, const Plane2& l_prime) {
    if (!l.lagrangian() || !p.lagrangian() || !l_prime.lagrangian())
        throw GeometryError("maslov: all three planes must be Lagrangian");
    if (!transverse(l, p) || !transverse(p, l_prime) || !transverse(l, l_prime))
        throw GeometryError("maslov: planes are not pairwise transverse");
    const Mat42 lb = orthonormal_basis(l.basis());
    const Mat42 lpb = orthonormal_basis(l_prime.basis());
    const Mat42 pb = orthonormal_basis(p.basis());
    Mat4 frame;
    frame << lb, lpb;
    const Mat42 coords = frame.partialPivLu().solve(pb);
    const Mat42 on_l = lb * coords.topRows<2>();
    const Mat42 on_lp = lpb * coords.bottomRows<2>();
    Eigen::Matrix2d q;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q(i, j) = omega(on_l.col(i), on_lp.col(j));
    q = 0.5 * (q + q.transpose()).eval();
    const Signature sig = inertia(q);
    if (sig.z != 0) throw GeometryError("maslov: restricted form is degenerate");
    return sig.p - sig.q;
}

Bivector mu(const Plane2& s) {
    if (s.lagrangian()) throw GeometryError("mu: plane is Lagrangian");
    const Mat42 b = omega_normalized(s.basis());
    const Bivector i = wedge(b.col(0), b.col(1));
    return i + (0.5 * omega_of(i)) * omega_star();
}

Bivector mu_unit(const Plane2& s) { return std::sqrt(2.0) * mu(s); }

double eta_normalized(const Bivector& a, const Bivector& b) {
    const double aa = wedge_product(a, a);
    const double bb = wedge_product(b, b);
    if (!(aa > 0.0) || !(bb > 0.0)) throw GeometryError("eta_normalized: vectors are not spacelike");
    return std::abs(wedge_product(a, b)) / std::sqrt(aa * bb);
}

Splitting::Splitting(const Plane2& s)
    : s_(omega_normalized(s.basis())), s_perp_(omega_normalized(symplectic_complement(s).basis())) {}

Splitting::Splitting(const Plane2& s, const Plane2& s_perp)
    : s_(omega_normalized(s.basis())), s_perp_(omega_normalized(s_perp.basis())) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Vec4 x = s_.col(i).normalized();
            const Vec4 y = s_perp_.col(j).normalized();
            if (std::abs(omega(x, y)) > eps_alg())
                throw GeometryError("Splitting: summands are not omega-orthogonal");
        }
}

Splitting splitting_from_spacelike(const Bivector& u) {
    const Bivector ws = omega_star();
    const double n = u.norm();
    if (!(n > 0.0)) throw GeometryError("splitting_from_spacelike: zero vector");
    if (std::abs(wedge_product(u, ws)) > eps_alg() * n * ws.norm())
        throw GeometryError("splitting_from_spacelike: vector is not in W");
    const double uu = wedge_product(u, u);
    if (!(uu > eps_alg() * n * n)) throw GeometryError("splitting_from_spacelike: vector is not spacelike");
    const Bivector unit = std::sqrt(2.0 / uu) * u;
    return Splitting(bivector_to_plane(unit - ws), bivector_to_plane(unit + ws));
}

bool lagrangian_in_torus(const Plane2& l, const Splitting& sp) {
    if (!l.lagrangian()) throw GeometryError("lagrangian_in_torus: plane is not Lagrangian");
    return !transverse(l, sp.s());
}

Plane2 graph(const Map2& f, const Splitting& sp) {
    return Plane2(Mat42(sp.s().basis() + sp.s_perp().basis() * f.m));
}

double det_omega(const Map2& f) { return f.m.determinant(); }

Map2 adjugate(const Map2& f) {
    Map2 a;
    a.m << f.m(1, 1), -f.m(0, 1), -f.m(1, 0), f.m(0, 0);
    return a;
}

Plane2 perp_graph(const Map2& f, const Splitting& sp) {
    if (std::abs(1.0 + det_omega(f)) <= eps_alg())
        throw GeometryError("perp_graph: Det(f) = -1, graph is Lagrangian");
    const Map2 g = adjugate(f);
    return Plane2(Mat42(sp.s_perp().basis() - sp.s().basis() * g.m));
}

double eta_from_det(const Map2& f) {
    const double d = det_omega(f);
    if (std::abs(1.0 + d) <= eps_alg()) throw GeometryError("eta_from_det: Det(f) = -1");
    return std::abs(1.0 - d) / std::abs(1.0 + d);
}

Vec w_coordinates(const Bivector& b) {
    const Bivector ws = omega_star();
    const Bivector p = b + (0.5 * wedge_product(b, ws)) * ws;
    const double r = std::sqrt(0.5);
    const Vec6& c = p.c;
    Vec w(5);
    w << r * (c(1) - c(4)), r * (c(2) + c(3)), r * (c(2) - c(3)), c(0), -2.0 * c(5);
    return w;
}

Bivector from_w_coordinates(const Vec& w) {
    if (w.size() != 5) throw GeometryError("from_w_coordinates: expected a vector of length 5");
    const double r = std::sqrt(0.5);
    Vec6 c;
    c << w(3), r * w(0), r * (w(1) + w(2)), r * (w(1) - w(2)), -r * w(0), -0.5 * w(4);
    return Bivector(c);
}

EinPoint lagrangian_point(const Plane2& l) {
    if (!l.lagrangian()) throw GeometryError("lagrangian_point: plane is not Lagrangian");
    const Bivector i = plucker(l);
    return EinPoint(w_coordinates((1.0 / i.norm()) * i));
}

EinsteinTorus splitting_torus(const Plane2& s) { return EinsteinTorus::from_unit(w_coordinates(mu_unit(s))); }

}  // namespace ein3
