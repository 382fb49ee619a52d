#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ein3/ads.hpp"
#include "ein3/crooked.hpp"
#include "ein3/einstein.hpp"
#include "ein3/symplectic.hpp"

// Brute-force checks that do not go through the closed-form criteria:
// seeded generators, point sampling of tori and crooked surfaces, chordal
// gaps between clouds, and a finite-difference probe of torus intersections.
namespace ein3::oracle {

// Rejection loops give up after this many draws.
inline constexpr int kMaxRejections = 10000;

// mt19937_64 with portable uniform and normal transforms, so that a seed
// reproduces the same doubles on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double uniform(double lo, double hi);
    double normal();

    // Independent child stream; the same (seed, index) always gives the same child.
    Rng split(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

// --- generators -------------------------------------------------------------

Vec random_unit_spacelike(Rng& rng);
Vec4 random_vector4(Rng& rng);  // standard normal entries, unit length
Mat2 random_sl2(Rng& rng, double scale = 1.0);
// exp of a random Hamiltonian matrix Omega^-1 S with entries in [-1, 1].
Mat4 random_symplectic(Rng& rng);
Plane2 random_lagrangian(Rng& rng);
Plane2 random_nondegenerate_plane(Rng& rng);
// Rejects splittings whose omega-normalized bases have |b1| |b2| above the bound.
Splitting random_splitting(Rng& rng, double max_basis_product = 2.0);
LightlikeQuadrilateral random_quadrilateral(Rng& rng);
LightlikeQuadrilateral canonical_quadrilateral();  // (e1, e2, e4, e3)
AdsCrookedPlane random_ads_plane(Rng& rng, double base_scale = 1.0);

// A basis (m1, m2) of the Lagrangian m with omega(l_i, m_j) = delta_ij,
// where (l1, l2) are the columns of l. m must be transverse to l.
Mat42 dual_basis(const Plane2& l, const Plane2& m);

// --- sampling ---------------------------------------------------------------

struct SampleCloud {
    std::vector<Vec> points;          // projectively normalized W-model vectors
    std::vector<std::string> labels;
    std::vector<Plane2> lagrangians;  // filled for surface samples only

    std::size_t size() const { return points.size(); }
    void append(const SampleCloud& other);
};

SampleCloud sample_torus(const EinsteinTorus& t, int n, Rng& rng, const std::string& label = "torus");

struct RegionMix {
    double wing_plus = 0.4;
    double wing_minus = 0.4;
    double stem = 0.2;
};

SampleCloud sample_surface(const CrookedSurface& c, int n, Rng& rng, RegionMix mix = {});

// Minimum chordal distance over all pairs; throws on empty input.
double min_gap(const SampleCloud& a, const SampleCloud& b);

// --- torus intersection probe -----------------------------------------------

enum class ProbeKind { Timelike, Spacelike, PhotonPair };

std::string_view to_string(ProbeKind k);

struct ProbeResult {
    ProbeKind kind;
    double max_abs_ratio;  // largest |Q(dx)| / |dx|^2 over the sweep
};

// Walks the null conic of (s1, s2)^perp and reads the causal character of its
// finite-difference tangents.
ProbeResult probe_intersection_type(const EinsteinTorus& t1, const EinsteinTorus& t2, int n, Rng& rng);

// A continuous null curve x(theta), theta in [0, 2 pi), sweeping the whole
// null cone of a 3-dimensional subspace of W.
class ConicSweep {
public:
    ConicSweep(const Subspace& carrier, Rng& rng);
    Vec at(double theta) const;

private:
    Vec x0_, f1_, f2_;
};

// --- photon and surface searches --------------------------------------------

// Lagrangian through p indexed by theta in [0, pi): span{p, cos q1 + sin q2}.
class PhotonPencil {
public:
    explicit PhotonPencil(const Vec4& p);
    Vec4 direction(double theta) const;
    Plane2 at(double theta) const;
    const Vec4& photon() const { return p_; }

private:
    Vec4 p_, q1_, q2_;
};

struct PhotonHit {
    Plane2 lagrangian;
    SurfaceRegion region;
    double theta;  // -1 for the plane built from the proof of the photon criterion
};

// Scans n Lagrangians through p for sign changes of the incidence functions of
// P+, P- and the stem torus, refines each root by bisection and keeps the
// roots that pass surface_contains. The stem candidate span{p, a u+ + d v-}
// is tested as well.
std::vector<PhotonHit> photon_search(const Vec4& p, const CrookedSurface& c, int n);

// How far l is from lying in the given wing: the incidence defect with the
// vertex plane plus any violation of the sign condition (all on unit vectors).
double wing_residual(const CrookedSurface& c, const Plane2& l, Wing w);

}  // namespace ein3::oracle
