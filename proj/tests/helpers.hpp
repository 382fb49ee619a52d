#pragma once

#include <doctest.h>

#include "ein3/symplectic.hpp"

namespace testing {

inline ein3::Vec4 e(int i) {
    ein3::Vec4 v = ein3::Vec4::Zero();
    v(i - 1) = 1.0;
    return v;
}

inline ein3::Vec w5(double x, double y, double z, double u, double v) {
    ein3::Vec w(5);
    w << x, y, z, u, v;
    return w;
}

inline ein3::Vec vec(std::initializer_list<double> xs) {
    ein3::Vec v(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

// Coefficients of a bivector in the order e12, e13, e14, e23, e24, e34.
inline ein3::Bivector biv(double c12, double c13, double c14, double c23, double c24, double c34) {
    ein3::Vec6 c;
    c << c12, c13, c14, c23, c24, c34;
    return ein3::Bivector(c);
}

inline bool close(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol = 1e-12) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() <= tol;
}

}  // namespace testing
