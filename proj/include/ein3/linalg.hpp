#pragma once

#include <Eigen/Dense>

#include <cstddef>

#include "ein3/tolerance.hpp"

namespace ein3 {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A real vector space with a nondegenerate symmetric bilinear form.
class QuadSpace {
public:
    explicit QuadSpace(Mat gram);

    int dim() const { return static_cast<int>(gram_.rows()); }
    const Mat& gram() const { return gram_; }

private:
    Mat gram_;
};

// Inertia of a symmetric form: counts of positive, negative and zero directions.
struct Signature {
    int p = 0;
    int q = 0;
    int z = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

// A linear subspace stored by a Euclidean-orthonormal basis (dim x k).
// Any spanning set is accepted; dependent columns are dropped under eps_rank.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(const Mat& spanning, int ambient_dim = -1);

    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    static Subspace span(std::initializer_list<Vec> vectors);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Equality of column spans under eps_rank (mutual containment).
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
    }

private:
    int ambient_ = 0;
    Mat basis_;
};

double inner(const QuadSpace& space, const Vec& v, const Vec& w);

Signature signature(const QuadSpace& space, const Subspace& sub);

// Inertia of a symmetric matrix with the eps_rank zero threshold.
Signature inertia(const Mat& symmetric);

Subspace orthogonal_complement(const QuadSpace& space, const Subspace& sub);

Subspace intersect(const Subspace& a, const Subspace& b);

// Span of the union of two subspaces.
Subspace join(const Subspace& a, const Subspace& b);

// Basis of {x : m x = 0}, orthonormal columns. Rank decided relative to the
// largest singular value of m.
Mat nullspace(const Mat& m);

// Scales v so its largest-magnitude entry is +1 (lowest index wins ties).
Vec projective_normalize(const Vec& v);

// True when v and w span the same line.
bool projectively_equal(const Vec& v, const Vec& w, double tol);

// Sine of the angle between the lines spanned by v and w.
double chordal_distance(const Vec& v, const Vec& w);

}  // namespace ein3
