#pragma once

#include <stdexcept>
#include <string>

namespace ein3 {

// Process-wide tolerances. The CLI may override them once at startup; library
// code only reads them.
struct Tolerances {
    double eps_alg = 1e-9;   // algebraic identities, strict-inequality margins
    double eps_rank = 1e-9;  // rank and zero-eigenvalue decisions
    double eps_geo = 1e-6;   // sampled-geometry comparisons
};

inline Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

inline double eps_alg() { return tolerances().eps_alg; }
inline double eps_rank() { return tolerances().eps_rank; }
inline double eps_geo() { return tolerances().eps_geo; }

// Raised for violated preconditions and invalid geometric input.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ein3
