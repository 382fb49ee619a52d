#include "ein3/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ein3 {

namespace {

constexpr double kTiny = 1e-300;

int rank_of(const Eigen::VectorXd& singular) {
    if (singular.size() == 0 || singular(0) <= kTiny) return 0;
    const double cut = eps_rank() * singular(0);
    int r = 0;
    for (Eigen::Index i = 0; i < singular.size(); ++i)
        if (singular(i) > cut) ++r;
    return r;
}

Signature inertia_scaled(const Mat& symmetric, double scale) {
    Signature s;
    if (symmetric.rows() == 0) return s;
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetric, Eigen::EigenvaluesOnly);
    const double cut = eps_rank() * std::max(scale, kTiny);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (l > cut)
            ++s.p;
        else if (l < -cut)
            ++s.q;
        else
            ++s.z;
    }
    return s;
}

}  // namespace

QuadSpace::QuadSpace(Mat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw GeometryError("QuadSpace: Gram matrix must be square and nonempty");
    if (!gram_.allFinite()) throw GeometryError("QuadSpace: Gram matrix has non-finite entries");
    const double scale = std::max(gram_.cwiseAbs().maxCoeff(), kTiny);
    if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > eps_alg() * scale)
        throw GeometryError("QuadSpace: Gram matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(gram_, Eigen::EigenvaluesOnly);
    const double min_abs = es.eigenvalues().cwiseAbs().minCoeff();
    if (min_abs <= eps_rank() * es.eigenvalues().cwiseAbs().maxCoeff())
        throw GeometryError("QuadSpace: Gram matrix is degenerate");
}

Subspace::Subspace(const Mat& spanning, int ambient_dim)
    : ambient_(ambient_dim >= 0 ? ambient_dim : static_cast<int>(spanning.rows())) {
    if (spanning.cols() > 0 && spanning.rows() != ambient_)
        throw GeometryError("Subspace: spanning set has wrong ambient dimension");
    if (spanning.cols() == 0 || spanning.rows() == 0) {
        basis_ = Mat(ambient_, 0);
        return;
    }
    if (!spanning.allFinite()) throw GeometryError("Subspace: non-finite spanning vector");
    Eigen::JacobiSVD<Mat> svd(spanning, Eigen::ComputeFullU);
    const int r = rank_of(svd.singularValues());
    basis_ = svd.matrixU().leftCols(r);
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(Mat(ambient_dim, 0), ambient_dim); }

Subspace Subspace::full(int ambient_dim) {
    return Subspace(Mat::Identity(ambient_dim, ambient_dim), ambient_dim);
}

Subspace Subspace::span(std::initializer_list<Vec> vectors) {
    if (vectors.size() == 0) throw GeometryError("Subspace::span: no vectors");
    const auto n = vectors.begin()->size();
    Mat m(n, static_cast<Eigen::Index>(vectors.size()));
    Eigen::Index j = 0;
    for (const auto& v : vectors) {
        if (v.size() != n) throw GeometryError("Subspace::span: dimension mismatch");
        m.col(j++) = v;
    }
    return Subspace(m);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw GeometryError("Subspace::contains: dimension mismatch");
    const double n = v.norm();
    if (n <= kTiny) return true;
    const Vec residual = v - basis_ * (basis_.transpose() * v);
    return residual.norm() <= eps_rank() * n * 10.0;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (int j = 0; j < other.dim(); ++j)
        if (!contains(Vec(other.basis_.col(j)))) return false;
    return true;
}

double inner(const QuadSpace& space, const Vec& v, const Vec& w) {
    if (v.size() != space.dim() || w.size() != space.dim())
        throw GeometryError("inner: dimension mismatch (space " + std::to_string(space.dim()) +
                            ", got " + std::to_string(v.size()) + " and " +
                            std::to_string(w.size()) + ")");
    return v.dot(space.gram() * w);
}

Signature inertia(const Mat& symmetric) {
    if (symmetric.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetric, Eigen::EigenvaluesOnly);
    return inertia_scaled(symmetric, es.eigenvalues().cwiseAbs().maxCoeff());
}

Signature signature(const QuadSpace& space, const Subspace& sub) {
    if (sub.ambient_dim() != space.dim())
        throw GeometryError("signature: subspace not in this space");
    if (sub.dim() == 0) return {};
    const Mat& b = sub.basis();
    Mat restricted = b.transpose() * space.gram() * b;
    restricted = 0.5 * (restricted + restricted.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(space.gram(), Eigen::EigenvaluesOnly);
    return inertia_scaled(restricted, es.eigenvalues().cwiseAbs().maxCoeff());
}

Mat nullspace(const Mat& m) {
    const auto n = m.cols();
    if (m.rows() == 0) return Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const int r = rank_of(svd.singularValues());
    return svd.matrixV().rightCols(n - r);
}

Subspace orthogonal_complement(const QuadSpace& space, const Subspace& sub) {
    if (sub.ambient_dim() != space.dim())
        throw GeometryError("orthogonal_complement: subspace not in this space");
    if (sub.dim() == 0) return Subspace::full(space.dim());
    return Subspace(nullspace(sub.basis().transpose() * space.gram()), space.dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw GeometryError("intersect: ambient dimensions differ");
    const int n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    Mat stacked(n, a.dim() + b.dim());
    stacked << a.basis(), -b.basis();
    const Mat kernel = nullspace(stacked);
    if (kernel.cols() == 0) return Subspace::zero(n);
    return Subspace(a.basis() * kernel.topRows(a.dim()), n);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw GeometryError("join: ambient dimensions differ");
    Mat m(a.ambient_dim(), a.dim() + b.dim());
    m << a.basis(), b.basis();
    return Subspace(m, a.ambient_dim());
}

Vec projective_normalize(const Vec& v) {
    if (v.size() == 0) throw GeometryError("projective_normalize: empty vector");
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(best))) best = i;
    if (std::abs(v(best)) <= kTiny || !v.allFinite())
        throw GeometryError("projective_normalize: zero or non-finite vector");
    return v / v(best);
}

double chordal_distance(const Vec& v, const Vec& w) {
    const double nv = v.norm();
    const double nw = w.norm();
    if (nv <= kTiny || nw <= kTiny) throw GeometryError("chordal_distance: zero vector");
    const Vec a = v / nv;
    const Vec b = w / nw;
    return (a - a.dot(b) * b).norm();
}

bool projectively_equal(const Vec& v, const Vec& w, double tol) {
    return chordal_distance(v, w) <= tol;
}

}  // namespace ein3
