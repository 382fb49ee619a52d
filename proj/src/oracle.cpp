#include "ein3/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

namespace ein3::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double q_form(const Vec& v) { return winner(v, v); }

Vec4 unit(const Vec4& v) { return v / v.norm(); }

// Two Euclidean-orthonormal vectors spanning w^omega (3-dim) modulo w.
Mat42 omega_perp_complement(const Vec4& w) {
    Eigen::Matrix<double, 2, 4> rows;
    rows.row(0) = w.transpose();
    rows.row(1) = w.transpose() * SympSpace::standard().omega();
    const Mat k = nullspace(rows);
    if (k.cols() != 2) throw GeometryError("omega_perp_complement: unexpected kernel dimension");
    return Mat42(k);
}

double normalized_incidence(const Plane2& a, const Plane2& b) {
    const Bivector x = plucker(a);
    const Bivector y = plucker(b);
    return wedge_product(x, y) / (x.norm() * y.norm());
}

Plane2 wing_sample(const CrookedSurface& c, Wing wing, Rng& rng) {
    const auto& k = c.quad();
    const Vec4 u = unit(wing == Wing::Plus ? k.u_plus() : k.u_minus());
    const Vec4 v = unit(wing == Wing::Plus ? k.v_plus() : k.v_minus());
    const double theta = rng.uniform(0.0, 0.5 * kPi);
    const double t = std::cos(theta);
    const double s = (wing == Wing::Plus ? 1.0 : -1.0) * std::sin(theta);
    const Vec4 w = unit(t * u + s * v);
    const Mat42 n = omega_perp_complement(w);
    const double phi = rng.uniform(0.0, kPi);
    return Plane2(w, std::cos(phi) * n.col(0) + std::sin(phi) * n.col(1));
}

Plane2 stem_sample(const CrookedSurface& c, Rng& rng) {
    const auto& k = c.quad();
    const Vec4 up = unit(k.u_plus()), um = unit(k.u_minus());
    const Vec4 vp = unit(k.v_plus()), vm = unit(k.v_minus());
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const double a = rng.uniform(0.0, 2.0 * kPi);
        const double b = rng.uniform(0.0, 2.0 * kPi);
        const Plane2 l(std::cos(a) * up + std::sin(a) * vm, std::cos(b) * um + std::sin(b) * vp);
        if (l.lagrangian() && stem_contains(c, l)) return l;
    }
    throw GeometryError("sample_surface: stem rejection sampling exhausted");
}

}  // namespace

// --- Rng --------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() {
    ++draws_;
    return engine_();
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (spare_normal_) {
        const double z = *spare_normal_;
        spare_normal_.reset();
        return z;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_normal_ = r * std::sin(2.0 * kPi * u2);
    return r * std::cos(2.0 * kPi * u2);
}

Rng Rng::split(std::uint64_t index) const { return Rng(splitmix64(seed_ ^ splitmix64(index + 1))); }

// --- generators -------------------------------------------------------------

Vec random_unit_spacelike(Rng& rng) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        Vec v(5);
        for (int i = 0; i < 5; ++i) v(i) = rng.normal();
        const double q = q_form(v);
        if (q > 0.05 * v.squaredNorm()) return v / std::sqrt(q);
    }
    throw GeometryError("random_unit_spacelike: rejection sampling exhausted");
}

Vec4 random_vector4(Rng& rng) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        Vec4 v;
        for (int i = 0; i < 4; ++i) v(i) = rng.normal();
        if (v.norm() > 1e-3) return v.normalized();
    }
    throw GeometryError("random_vector4: rejection sampling exhausted");
}

Mat2 random_sl2(Rng& rng, double scale) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const double c = rng.uniform(-1.0, 1.0);
    Mat2 x;
    x << a, b, c, -a;
    return (scale * x).exp();
}

Mat4 random_symplectic(Rng& rng) {
    Mat4 s;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) s(i, j) = s(j, i) = rng.uniform(-1.0, 1.0);
    const Mat4 x = SympSpace::standard().omega().inverse() * s;
    return x.exp();
}

Plane2 random_lagrangian(Rng& rng) {
    const Mat4 g = random_symplectic(rng);
    return Plane2(Mat42(g.leftCols<2>()));
}

Plane2 random_nondegenerate_plane(Rng& rng) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const Vec4 u = random_vector4(rng);
        const Vec4 v = random_vector4(rng);
        if (std::abs(u.dot(v)) > 0.95) continue;
        if (std::abs(omega(u, v)) > 0.1) return Plane2(u, v);
    }
    throw GeometryError("random_nondegenerate_plane: rejection sampling exhausted");
}

Splitting random_splitting(Rng& rng, double max_basis_product) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const Splitting sp(random_nondegenerate_plane(rng));
        const double a = sp.s().col(0).norm() * sp.s().col(1).norm();
        const double b = sp.s_perp().col(0).norm() * sp.s_perp().col(1).norm();
        if (a <= max_basis_product && b <= max_basis_product) return sp;
    }
    throw GeometryError("random_splitting: rejection sampling exhausted");
}

LightlikeQuadrilateral canonical_quadrilateral() {
    const Mat4 e = Mat4::Identity();
    return LightlikeQuadrilateral(e.col(0), e.col(1), e.col(3), e.col(2));
}

LightlikeQuadrilateral random_quadrilateral(Rng& rng) {
    return canonical_quadrilateral().transformed(random_symplectic(rng));
}

AdsCrookedPlane random_ads_plane(Rng& rng, double base_scale) {
    const AdsPoint base(random_sl2(rng, base_scale));
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const double ta = rng.uniform(0.0, 2.0 * kPi);
        const double tb = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 a(std::cos(ta), std::sin(ta));
        const Vec2 b(std::cos(tb), std::sin(tb));
        if (std::abs(omega0(a, b)) > 0.05) return AdsCrookedPlane(base, a, b);
    }
    throw GeometryError("random_ads_plane: rejection sampling exhausted");
}

Mat42 dual_basis(const Plane2& l, const Plane2& m) {
    Eigen::Matrix2d a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a(i, j) = omega(l.col(i), m.col(j));
    if (std::abs(a.determinant()) <= eps_alg() * l.basis().squaredNorm() * m.basis().squaredNorm())
        throw GeometryError("dual_basis: planes are not transverse");
    return m.basis() * a.inverse();
}

// --- sampling ---------------------------------------------------------------

void SampleCloud::append(const SampleCloud& other) {
    points.insert(points.end(), other.points.begin(), other.points.end());
    labels.insert(labels.end(), other.labels.begin(), other.labels.end());
    lagrangians.insert(lagrangians.end(), other.lagrangians.begin(), other.lagrangians.end());
}

SampleCloud sample_torus(const EinsteinTorus& t, int n, Rng& rng, const std::string& label) {
    const Subspace perp = orthogonal_complement(ein_space(), Subspace::span({t.normal()}));
    const Mat& b = perp.basis();
    const Mat g = b.transpose() * ein_space().gram() * b;
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    // Eigenvalues ascend: two negative, then two positive.
    const Vec& lam = es.eigenvalues();
    if (!(lam(1) < 0.0 && lam(2) > 0.0)) throw GeometryError("sample_torus: normal is not spacelike");
    Vec axes[4];
    for (int i = 0; i < 4; ++i) axes[i] = b * es.eigenvectors().col(i) / std::sqrt(std::abs(lam(i)));
    SampleCloud cloud;
    cloud.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double a = rng.uniform(0.0, 2.0 * kPi);
        const double c = rng.uniform(0.0, 2.0 * kPi);
        const Vec x = std::cos(c) * axes[0] + std::sin(c) * axes[1] + std::cos(a) * axes[2] +
                      std::sin(a) * axes[3];
        cloud.points.push_back(projective_normalize(x));
        cloud.labels.push_back(label);
    }
    return cloud;
}

SampleCloud sample_surface(const CrookedSurface& c, int n, Rng& rng, RegionMix mix) {
    const double total = mix.wing_plus + mix.wing_minus + mix.stem;
    if (!(total > 0.0) || mix.wing_plus < 0.0 || mix.wing_minus < 0.0 || mix.stem < 0.0)
        throw GeometryError("sample_surface: invalid region proportions");
    const int n_plus = static_cast<int>(std::lround(n * mix.wing_plus / total));
    const int n_minus = std::min(n - n_plus, static_cast<int>(std::lround(n * mix.wing_minus / total)));
    SampleCloud cloud;
    auto push = [&](const Plane2& l, SurfaceRegion r) {
        cloud.points.push_back(lagrangian_point(l).rep());
        cloud.labels.emplace_back(to_string(r));
        cloud.lagrangians.push_back(l);
    };
    for (int i = 0; i < n; ++i) {
        if (i < n_plus)
            push(wing_sample(c, Wing::Plus, rng), SurfaceRegion::WingPlus);
        else if (i < n_plus + n_minus)
            push(wing_sample(c, Wing::Minus, rng), SurfaceRegion::WingMinus);
        else
            push(stem_sample(c, rng), SurfaceRegion::Stem);
    }
    return cloud;
}

double min_gap(const SampleCloud& a, const SampleCloud& b) {
    if (a.points.empty() || b.points.empty()) throw GeometryError("min_gap: empty cloud");
    std::vector<Vec> bn;
    bn.reserve(b.size());
    for (const Vec& y : b.points) bn.push_back(y.normalized());
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& x : a.points) {
        const Vec xn = x.normalized();
        for (const Vec& y : bn) best = std::min(best, (xn - xn.dot(y) * y).norm());
    }
    return best;
}

// --- torus intersection probe -----------------------------------------------

std::string_view to_string(ProbeKind k) {
    switch (k) {
        case ProbeKind::Timelike: return "timelike";
        case ProbeKind::Spacelike: return "spacelike";
        case ProbeKind::PhotonPair: return "photon-pair";
    }
    return "?";
}

ConicSweep::ConicSweep(const Subspace& carrier, Rng& rng) {
    if (carrier.ambient_dim() != 5 || carrier.dim() != 3)
        throw GeometryError("ConicSweep: expected a 3-dimensional subspace of W");
    const Mat& b = carrier.basis();
    std::optional<Vec> pos, neg;
    for (int attempt = 0; attempt < kMaxRejections && !(pos && neg); ++attempt) {
        Eigen::Vector3d c(rng.normal(), rng.normal(), rng.normal());
        const Vec x = b * c.normalized();
        const double q = q_form(x);
        if (q > 1e-3 && !pos) pos = x;
        if (q < -1e-3 && !neg) neg = x;
    }
    if (!pos || !neg) throw GeometryError("ConicSweep: carrier null cone not found");
    // Root of Q(pos + t neg) = 0 with t > 0.
    const double qp = q_form(*pos), qn = q_form(*neg), pn = winner(*pos, *neg);
    const double t = (-pn - std::sqrt(pn * pn - qp * qn)) / qn;
    x0_ = (*pos + t * *neg).normalized();
    Eigen::RowVector3d row = (x0_.transpose() * b);
    const Mat k = nullspace(row);
    f1_ = b * k.col(0);
    f2_ = b * k.col(1);
}

Vec ConicSweep::at(double theta) const {
    const Vec w = std::cos(theta) * f1_ + std::sin(theta) * f2_;
    return q_form(w) * x0_ - 2.0 * winner(x0_, w) * w;
}

ProbeResult probe_intersection_type(const EinsteinTorus& t1, const EinsteinTorus& t2, int n, Rng& rng) {
    if (n < 16) throw GeometryError("probe_intersection_type: need at least 16 samples");
    if (t1 == t2) throw GeometryError("probe_intersection_type: tori are equal");
    const Subspace carrier =
        orthogonal_complement(ein_space(), Subspace::span({t1.normal(), t2.normal()}));
    const ConicSweep sweep(carrier, rng);
    // Chords between raw samples. x(theta) is smooth and stays on one nappe of
    // a nondegenerate cone, so Q(x - y) = -2 <x, y> carries the causal sign
    // without any choice of representatives.
    std::vector<Vec> pts;
    pts.reserve(n + 1);
    for (int k = 0; k <= n; ++k) pts.push_back(sweep.at(2.0 * kPi * k / n));
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec d = pts[k + 1] - pts[k];
        const double dd = d.squaredNorm();
        if (dd < 1e-24) continue;
        const double r = q_form(d) / dd;
        if (std::abs(r) > std::abs(best)) best = r;
    }
    if (std::abs(best) <= 1e-7) return {ProbeKind::PhotonPair, std::abs(best)};
    return {best < 0.0 ? ProbeKind::Timelike : ProbeKind::Spacelike, std::abs(best)};
}

// --- photon and surface searches --------------------------------------------

PhotonPencil::PhotonPencil(const Vec4& p) : p_(p.normalized()) {
    if (!(p.norm() > 0.0)) throw GeometryError("PhotonPencil: zero photon vector");
    const Mat42 n = omega_perp_complement(p_);
    q1_ = n.col(0);
    q2_ = n.col(1);
}

Vec4 PhotonPencil::direction(double theta) const { return std::cos(theta) * q1_ + std::sin(theta) * q2_; }

Plane2 PhotonPencil::at(double theta) const { return Plane2(p_, direction(theta)); }

std::vector<PhotonHit> photon_search(const Vec4& p, const CrookedSurface& c, int n) {
    const PhotonPencil pencil(p);
    const Vec4& q = pencil.photon();
    std::vector<PhotonHit> hits;
    auto test = [&](double theta, const Plane2& l) {
        if (!l.lagrangian()) return;
        if (auto region = surface_contains(c, l)) hits.push_back({l, *region, theta});
    };
    const std::array<const Plane2*, 3> targets = {&c.p_plus(), &c.p_minus(), &c.stem_s1()};
    for (const Plane2* target : targets) {
        const Bivector t = plucker(*target);
        const double tn = t.norm();
        auto f = [&](double th) {
            const Bivector b = wedge(q, pencil.direction(th));
            return wedge_product(b, t) / (b.norm() * tn);
        };
        double prev_th = 0.0;
        double prev = f(0.0);
        for (int k = 1; k <= n; ++k) {
            const double th = kPi * k / n;
            const double cur = f(th);
            if (prev == 0.0 || prev * cur < 0.0) {
                double lo = prev_th, hi = th, flo = prev;
                if (flo == 0.0) hi = lo;
                for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((fm < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = 0.5 * (lo + hi);
                test(root, pencil.at(root));
            }
            prev_th = th;
            prev = cur;
        }
    }
    // The plane through p and a u+ + d v-, where a = omega(p, v-) and
    // d = -omega(p, u+): the meeting point of the photon with the stem torus.
    const auto& k = c.quad();
    const Vec4 w = omega(q, k.v_minus()) * k.u_plus() - omega(q, k.u_plus()) * k.v_minus();
    if (w.norm() > eps_alg() && chordal_distance(q, w) > eps_rank()) test(-1.0, Plane2(q, w.normalized()));
    return hits;
}

double wing_residual(const CrookedSurface& c, const Plane2& l, Wing w) {
    const auto& k = c.quad();
    const Vec4 u = unit(w == Wing::Plus ? k.u_plus() : k.u_minus());
    const Vec4 v = unit(w == Wing::Plus ? k.v_plus() : k.v_minus());
    const Plane2 vertex(u, v);
    const double defect = std::abs(normalized_incidence(l, vertex));
    // Best approximate common direction: smallest right singular vector of [L V].
    Eigen::JacobiSVD<Mat42> lsvd(l.basis(), Eigen::ComputeFullU);
    Mat4 m;
    m << lsvd.matrixU().leftCols<2>(), u, v;
    Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullV);
    const Vec4 coeff = svd.matrixV().col(3);
    const double t = coeff(2), s = coeff(3);
    const double n2 = t * t + s * s;
    if (n2 == 0.0) return defect + 1.0;
    const double ts = t * s / n2;
    const double violation = w == Wing::Plus ? std::max(0.0, -ts) : std::max(0.0, ts);
    return defect + violation;
}

}  // namespace ein3::oracle
