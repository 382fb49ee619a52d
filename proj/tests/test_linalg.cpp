#include "helpers.hpp"

#include "ein3/einstein.hpp"
#include "ein3/linalg.hpp"
#include "ein3/oracle.hpp"

using namespace ein3;
using testing::vec;
using testing::w5;

namespace {

QuadSpace lorentz3() { return QuadSpace(Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix()); }

}  // namespace

TEST_CASE("inner on diagonal and W forms") {
    const QuadSpace s = lorentz3();
    CHECK(inner(s, vec({0, 0, 1}), vec({0, 0, 1})) == -1.0);
    CHECK(inner(s, vec({1, 0, 0}), vec({0, 1, 0})) == 0.0);
    CHECK(winner(w5(0, 0, 0, 1, 0), w5(0, 0, 0, 0, 1)) == -0.5);
}

TEST_CASE("inner rejects mismatched lengths") {
    CHECK_THROWS_AS(inner(lorentz3(), vec({1, 0}), vec({1, 0, 0})), GeometryError);
}

TEST_CASE("signature") {
    CHECK(signature(ein_space(), Subspace::full(5)) == Signature{3, 2, 0});
    CHECK(signature(ein_space(), Subspace::span({w5(1, 0, 1, 0, 0)})) == Signature{0, 0, 1});
    CHECK(signature(ein_space(), Subspace::span({w5(1, 0, 0, 0, 0), w5(0, 0, 0, 1, 1)})) == Signature{1, 1, 0});
}

TEST_CASE("orthogonal complement") {
    CHECK(orthogonal_complement(ein_space(), Subspace::full(5)).dim() == 0);

    const Vec s = w5(1, 2, 0, 3, -1);
    const Subspace line = Subspace::span({s});
    CHECK(orthogonal_complement(ein_space(), orthogonal_complement(ein_space(), line)) == line);

    const Vec n = w5(1, 0, 1, 0, 0);
    CHECK(orthogonal_complement(ein_space(), Subspace::span({n})).contains(n));
}

TEST_CASE("intersect") {
    const Subspace a = Subspace::span({vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
    const Subspace b = Subspace::span({vec({0, 0, 1, 0}), vec({0, 0, 0, 1})});
    const Subspace c = Subspace::span({vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, b).dim() == 0);
    CHECK(intersect(a, c) == Subspace::span({vec({0, 1, 0, 0})}));
}

TEST_CASE("projective normalize") {
    CHECK(projective_normalize(w5(0, 0, 2, 0, 0)) == w5(0, 0, 1, 0, 0));
    CHECK(projective_normalize(w5(-3, 0, 0, 0, 0)) == w5(1, 0, 0, 0, 0));
    CHECK(projective_normalize(w5(1, -2, 0, 0, 0)) == w5(-0.5, 1, 0, 0, 0));
    CHECK_THROWS_AS(projective_normalize(w5(0, 0, 0, 0, 0)), GeometryError);
}

TEST_CASE("dimension formula and signature additivity on random subspaces") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Mat a(5, 2), b(5, 3);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 2; ++j) a(i, j) = rng.normal();
            for (int j = 0; j < 3; ++j) b(i, j) = rng.normal();
        }
        const Subspace sa(a), sb(b);
        CHECK(intersect(sa, sb).dim() + join(sa, sb).dim() == sa.dim() + sb.dim());

        // For a nondegenerate line, the ambient form splits as line + complement.
        const Vec v = a.col(0);
        if (std::abs(winner(v, v)) < 1e-3 * v.squaredNorm()) continue;
        const Signature l = signature(ein_space(), Subspace::span({v}));
        const Signature c = signature(ein_space(), orthogonal_complement(ein_space(), Subspace::span({v})));
        CHECK(l.p + c.p == 3);
        CHECK(l.q + c.q == 2);
    }
}
