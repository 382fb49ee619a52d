#include "ein3/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ein3/ads.hpp"
#include "ein3/crooked.hpp"
#include "ein3/einstein.hpp"
#include "ein3/oracle.hpp"
#include "ein3/symplectic.hpp"

namespace ein3::suites {

namespace {

using oracle::Rng;

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxMessages = 10;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

class Recorder {
public:
    Recorder(std::string suite, std::uint64_t seed, int trials, double tolerance)
        : base_(seed ^ fnv1a(suite)) {
        report_.suite = std::move(suite);
        report_.seed = seed;
        report_.trial_count = trials;
        report_.tolerance = tolerance;
    }

    Rng trial_rng(int i) const { return base_.split(static_cast<std::uint64_t>(i)); }

    void fail(int trial, const std::string& what) {
        ++report_.failure_count;
        if (report_.failures.size() < kMaxMessages)
            report_.failures.push_back("trial " + std::to_string(trial) + ": " + what);
    }

    // Records v and fails the trial when it exceeds tol.
    void check(int trial, double v, double tol, const std::string& what) {
        observe(v);
        if (!(v <= tol)) fail(trial, what + " = " + num(v));
    }

    void expect(int trial, bool ok, const std::string& what) {
        if (!ok) fail(trial, what);
    }

    void observe(double v) {
        if (std::isnan(v))
            report_.max_violation = v;
        else if (!std::isnan(report_.max_violation))
            report_.max_violation = std::max(report_.max_violation, v);
    }

    void skip() { ++report_.skipped; }

    SuiteReport finish() { return std::move(report_); }

    // Runs body(i, rng) for each trial, turning exceptions into failures.
    void run(const std::function<void(int, Rng&)>& body) {
        for (int i = 0; i < report_.trial_count; ++i) {
            Rng rng = trial_rng(i);
            try {
                body(i, rng);
            } catch (const std::exception& e) {
                fail(i, std::string("exception: ") + e.what());
            }
        }
    }

private:
    Rng base_;
    SuiteReport report_;
};

Vec random_vec(Rng& rng, int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    return v;
}

Vec random_null(Rng& rng) {
    for (int attempt = 0; attempt < oracle::kMaxRejections; ++attempt) {
        const double x = rng.normal(), y = rng.normal(), z = rng.normal(), u = rng.normal();
        if (std::abs(u) < 0.1) continue;
        Vec w(5);
        w << x, y, z, u, (x * x + y * y - z * z) / u;
        return w.normalized();
    }
    throw GeometryError("random_null: rejection sampling exhausted");
}

Mat2 random_map(Rng& rng, double range) {
    Mat2 m;
    m << rng.uniform(-range, range), rng.uniform(-range, range), rng.uniform(-range, range),
        rng.uniform(-range, range);
    return m;
}

Vec2 unit_direction(Rng& rng) {
    const double t = rng.uniform(0.0, 2.0 * kPi);
    return {std::cos(t), std::sin(t)};
}

// A vector of l^omega other than multiples of x, for x in l.
Vec4 omega_partner(const Vec4& x, Rng& rng) {
    Eigen::Matrix<double, 2, 4> rows;
    rows.row(0) = x.transpose();
    rows.row(1) = x.transpose() * SympSpace::standard().omega();
    const Mat k = nullspace(rows);
    const double phi = rng.uniform(0.0, kPi);
    return std::cos(phi) * k.col(0) + std::sin(phi) * k.col(1);
}

double normalized_wedge(const Plane2& p, const Plane2& q) {
    const Bivector a = plucker(p), b = plucker(q);
    return wedge_product(a, b) / (a.norm() * b.norm());
}

bool safe_stem(const CrookedSurface& c, const Plane2& l) {
    try {
        return l.lagrangian() && stem_contains(c, l);
    } catch (const GeometryError&) {
        return false;
    }
}

Plane2 lagrangian_of(const Vec& w) { return bivector_to_plane(from_w_coordinates(w.normalized())); }

// --- suites -----------------------------------------------------------------

SuiteReport linalg_suite(int n, std::uint64_t seed) {
    Recorder r("linalg", seed, n, 1e-12);
    r.run([&](int i, Rng& rng) {
        const QuadSpace& w = ein_space();
        const Vec x = random_vec(rng, 5), y = random_vec(rng, 5), z = random_vec(rng, 5);
        const double a = rng.normal(), b = rng.normal();
        const double scale = std::max(1.0, (std::abs(a) * x.norm() + std::abs(b) * y.norm()) * z.norm());
        r.check(i, std::abs(inner(w, a * x + b * y, z) - a * inner(w, x, z) - b * inner(w, y, z)) / scale,
                1e-12, "bilinearity defect");
        r.check(i, std::abs(inner(w, x, z) - inner(w, z, x)) / scale, 1e-12, "symmetry defect");

        const int k = 1 + i % 4;
        Mat span(5, k);
        for (int j = 0; j < k; ++j) span.col(j) = random_vec(rng, 5);
        const Subspace sub(span, 5);
        const Signature s = signature(w, sub);
        if (s.z == 0) {
            const Signature c = signature(w, orthogonal_complement(w, sub));
            r.expect(i, s.p + c.p == 3 && s.q + c.q == 2 && c.z == 0, "signature not additive");
        }

        const int da = 1 + i % 3, db = 1 + (i / 3) % 3, shared = std::min({da, db, (i / 9) % 3});
        Mat ma(5, da), mb(5, db);
        for (int j = 0; j < da; ++j) ma.col(j) = random_vec(rng, 5);
        for (int j = 0; j < db; ++j) mb.col(j) = j < shared ? Vec(ma.col(j)) : random_vec(rng, 5);
        const Subspace sa(ma, 5), sb(mb, 5);
        r.expect(i, intersect(sa, sb).dim() + join(sa, sb).dim() == sa.dim() + sb.dim(),
                 "dimension formula fails");

        const Vec v = random_vec(rng, 5);
        const double lam = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::exp(rng.uniform(-3.0, 3.0));
        const Vec pv = projective_normalize(v);
        r.check(i, (projective_normalize(pv) - pv).norm(), 1e-12, "normalize not idempotent");
        r.check(i, (projective_normalize(lam * v) - pv).norm(), 1e-12, "normalize not scale invariant");
    });
    return r.finish();
}

SuiteReport trichotomy_suite(int n, std::uint64_t seed) {
    Recorder r("trichotomy", seed, n, 1e-6);
    r.run([&](int i, Rng& rng) {
        const Vec s1 = random_unit_spacelike(rng);
        // Every tenth pair is built with eta = 1: s2 = s1 + m, m null and orthogonal to s1.
        const bool photon = i % 10 == 9;
        Vec s2;
        if (photon) {
            const Vec m = oracle::sample_torus(EinsteinTorus(s1), 1, rng).points[0];
            s2 = s1 + rng.uniform(0.5, 2.0) * m.normalized();
        } else {
            s2 = random_unit_spacelike(rng);
        }
        const EinsteinTorus t1(s1), t2(s2);
        if (t1 == t2) {
            r.skip();
            return;
        }
        const IntersectionClass cls = classify_torus_pair(t1, t2);
        const double e = cls.eta;
        if (photon) r.observe(std::abs(e - 1.0));
        if (!photon && std::abs(e - 1.0) < 1e-6) {
            r.skip();
            return;
        }
        const IntersectionKind want = photon ? IntersectionKind::PhotonPair
                                      : e < 1.0 ? IntersectionKind::TimelikeCircle
                                                : IntersectionKind::SpacelikeCircle;
        r.expect(i, cls.kind == want,
                 "kind " + std::string(to_string(cls.kind)) + " at eta = " + num(e));
        const Signature sig = signature(ein_space(), *cls.carrier);
        const Signature want_sig = want == IntersectionKind::PhotonPair       ? Signature{1, 1, 1}
                                   : want == IntersectionKind::TimelikeCircle ? Signature{1, 2, 0}
                                                                              : Signature{2, 1, 0};
        r.expect(i, sig == want_sig, "carrier signature mismatch at eta = " + num(e));
        const oracle::ProbeResult probe = oracle::probe_intersection_type(t1, t2, 256, rng);
        const oracle::ProbeKind want_probe = want == IntersectionKind::PhotonPair ? oracle::ProbeKind::PhotonPair
                                             : want == IntersectionKind::TimelikeCircle
                                                 ? oracle::ProbeKind::Timelike
                                                 : oracle::ProbeKind::Spacelike;
        r.expect(i, probe.kind == want_probe,
                 "probe says " + std::string(to_string(probe.kind)) + " at eta = " + num(e));
    });
    return r.finish();
}

SuiteReport torus_carrier_suite(int n, std::uint64_t seed) {
    Recorder r("torus-carrier", seed, n, eps_alg());
    r.run([&](int i, Rng& rng) {
        const EinsteinTorus t1(random_unit_spacelike(rng)), t2(random_unit_spacelike(rng));
        const IntersectionClass cls = classify_torus_pair(t1, t2);
        if (!cls.carrier) return;
        const oracle::ConicSweep sweep(*cls.carrier, rng);
        for (int k = 0; k < 16; ++k) {
            const Vec x = sweep.at(rng.uniform(0.0, 2.0 * kPi));
            if (x.norm() < 1e-9) continue;
            const Vec xn = x.normalized();
            r.check(i, std::abs(winner(xn, xn)), eps_alg(), "carrier point not null");
            r.check(i, std::abs(winner(xn, t1.normal())), eps_alg(), "carrier point off first torus");
            r.check(i, std::abs(winner(xn, t2.normal())), eps_alg(), "carrier point off second torus");
        }
        const oracle::SampleCloud cloud = oracle::sample_torus(t1, 8, rng);
        for (const Vec& p : cloud.points) {
            const Vec xn = p.normalized();
            r.check(i, std::abs(winner(xn, xn)), eps_alg(), "torus sample not null");
            r.check(i, std::abs(winner(xn, t1.normal())), eps_alg(), "torus sample off torus");
        }
    });
    return r.finish();
}

SuiteReport composition_suite(int n, std::uint64_t seed) {
    Recorder r("composition-eigenvalues", seed, n, 1e-9);
    r.run([&](int i, Rng& rng) {
        const Vec s = random_unit_spacelike(rng);
        const Vec sp = random_unit_spacelike(rng);
        const double c = winner(s, sp);
        if (std::abs(std::abs(c) - 1.0) < 1e-6) {
            r.skip();
            return;
        }
        const auto [l1, l2] = composition_eigenvalues(s, sp);
        // Matrix of R_s R_s' on span{s, s'} from the reflections themselves.
        Eigen::Matrix<double, 5, 2> basis;
        basis << s, sp;
        Eigen::Matrix<double, 5, 2> images;
        images << reflect(s, reflect(sp, s)), reflect(s, reflect(sp, sp));
        const Eigen::Matrix2d m = basis.colPivHouseholderQr().solve(images);
        Eigen::EigenSolver<Eigen::Matrix2d> es(m);
        auto sorted = [](std::complex<double> a, std::complex<double> b) {
            if (a.real() > b.real() || (a.real() == b.real() && a.imag() > b.imag())) std::swap(a, b);
            return std::pair{a, b};
        };
        const auto [d1, d2] = sorted(es.eigenvalues()(0), es.eigenvalues()(1));
        const auto [c1, c2] = sorted(l1, l2);
        const double scale = std::max(1.0, std::abs(d1) + std::abs(d2));
        r.check(i, (std::abs(d1 - c1) + std::abs(d2 - c2)) / scale, 1e-9, "eigenvalue mismatch");
        const bool complex = std::abs(l1.imag()) > 0.0;
        const IntersectionKind kind = classify_torus_pair(EinsteinTorus(s), EinsteinTorus(sp)).kind;
        r.expect(i, complex == (kind == IntersectionKind::TimelikeCircle),
                 "eigenvalue type does not match intersection kind at c = " + num(c));
    });
    return r.finish();
}

SuiteReport triple_lightcone_suite(int n, std::uint64_t seed) {
    Recorder r("triple-lightcone", seed, n, 0.0);
    r.run([&](int i, Rng& rng) {
        Vec a = random_null(rng), b = random_null(rng);
        while (std::abs(winner(a, b)) < 1e-3) b = random_null(rng);
        const EinPoint p0(a), pinf(b), p(random_null(rng));
        if (incident(p, p0) || incident(p, pinf)) {
            r.skip();
            return;
        }
        const bool timelike = classify_point(p, p0, pinf) == CausalType::Timelike;
        r.expect(i, timelike == triple_lightcone_empty(p, p0, pinf), "timelike != empty triple light cone");
    });
    return r.finish();
}

SuiteReport minkowski_suite(int n, std::uint64_t seed) {
    Recorder r("minkowski-embed", seed, n, 1e-12);
    r.run([&](int i, Rng& rng) {
        const std::array<double, 3> v = {rng.normal(), rng.normal(), rng.normal()};
        const std::array<double, 3> w = {rng.normal(), rng.normal(), rng.normal()};
        const EinPoint pv = minkowski_embed(v), pw = minkowski_embed(w);
        const Vec x = pv.rep().normalized();
        r.check(i, std::abs(winner(x, x)), 1e-12, "embedded point not null");
        r.expect(i, !(pv == pw), "distinct points embed to the same line");
        const auto back = minkowski_coords(pv.rep());
        r.expect(i, back.has_value(), "embedded point left the patch");
        if (back) {
            double err = 0.0;
            for (int k = 0; k < 3; ++k) err = std::max(err, std::abs((*back)[k] - v[k]));
            r.check(i, err / std::max(1.0, std::hypot(v[0], v[1], v[2])), 1e-12, "round trip error");
        }
    });
    return r.finish();
}

SuiteReport eta_bridge_suite(int n, std::uint64_t seed) {
    Recorder r("eta-bridge", seed, n, 1e-9);
    r.run([&](int i, Rng& rng) {
        // Well-conditioned draws: rounding the graph basis moves the mu-vector
        // eta by about 2 |g1| |g2| eps / |1 + Det(f)|^2.
        const Splitting sp = oracle::random_splitting(rng);
        Map2 f;
        do f.m = random_map(rng, 1.0);
        while (std::abs(det_omega(f) + 1.0) <= 1e-3);
        const Plane2 t = graph(f, sp);
        const double by_det = eta_from_det(f);
        const double by_mu = std::abs(wedge_product(mu_unit(sp.s()), mu_unit(t)));
        r.check(i, std::abs(by_det - by_mu), 1e-9, "eta_from_det vs mu-vectors");
        const EinsteinTorus ts = splitting_torus(sp.s()), tt = splitting_torus(t);
        r.check(i, std::abs(by_det - eta(ts, tt)), 1e-9, "eta_from_det vs einstein eta");
        if (std::abs(by_det - 1.0) > 1e-6) {
            const IntersectionKind want =
                by_det < 1.0 ? IntersectionKind::TimelikeCircle : IntersectionKind::SpacelikeCircle;
            r.expect(i, classify_torus_pair(ts, tt).kind == want, "kind does not match Det(f)");
        }
    });
    return r.finish();
}

SuiteReport symplectic_identities_suite(int n, std::uint64_t seed) {
    Recorder r("symplectic-identities", seed, n, 1e-12);
    const Bivector ws = omega_star();
    r.check(-1, std::abs(wedge_product(ws, ws) + 2.0), 1e-12, "omega* . omega* + 2");
    r.run([&](int i, Rng& rng) {
        Map2 f;
        f.m = random_map(rng, 2.0);
        const Eigen::Matrix2d d = adjugate(f).m * f.m - det_omega(f) * Eigen::Matrix2d::Identity();
        r.check(i, d.cwiseAbs().maxCoeff(), 1e-12, "Adj(f) f - Det(f) id");

        Map2 g;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) g.m(a, b) = std::floor(rng.uniform(-9.0, 10.0));
        r.expect(i, adjugate(g).m * g.m == det_omega(g) * Eigen::Matrix2d::Identity(),
                 "integer adjugate identity not exact");

        const Plane2 s = oracle::random_nondegenerate_plane(rng);
        const Bivector a = plucker(symplectic_complement_via_reflection(s));
        const Bivector b = plucker(symplectic_complement(s));
        r.check(i, chordal_distance(a.c, b.c), 1e-9, "[R(iota S)] vs [iota(S^perp)]");

        const Plane2 p(oracle::random_vector4(rng), oracle::random_vector4(rng));
        const bool share = i % 2 == 1;
        const Vec4 x = share ? Vec4(p.col(0) * rng.normal() + p.col(1) * rng.normal()) : oracle::random_vector4(rng);
        const Plane2 q(x, oracle::random_vector4(rng));
        const double wv = std::abs(normalized_wedge(p, q));
        if (!share && wv < 1e-9) {
            r.skip();
            return;
        }
        const bool by_wedge = transverse(p, q);
        const bool by_dim = intersect(p.subspace(), q.subspace()).dim() == 0;
        r.expect(i, by_wedge == by_dim, "transverse disagrees with intersection dimension, wedge = " + num(wv));
        if (share) r.expect(i, !by_wedge, "planes sharing a vector reported transverse");
    });
    return r.finish();
}

SuiteReport graph_suite(int n, std::uint64_t seed) {
    Recorder r("graph-nondegeneracy", seed, n, eps_alg());
    r.run([&](int i, Rng& rng) {
        const Splitting sp(oracle::random_nondegenerate_plane(rng));
        Map2 f;
        f.m = random_map(rng, 2.0);
        if (i % 2 == 1) {
            // Force Det(f) = -1.
            while (std::abs(f.m(0, 0)) < 0.1) f.m(0, 0) = rng.uniform(-2.0, 2.0);
            f.m(1, 1) = (-1.0 + f.m(0, 1) * f.m(1, 0)) / f.m(0, 0);
        }
        const double gap = std::abs(det_omega(f) + 1.0);
        if (i % 2 == 0 && gap < 1e-6) {
            r.skip();
            return;
        }
        const Plane2 t = graph(f, sp);
        const Vec4 g1 = t.col(0), g2 = t.col(1);
        const double restricted = omega(g1, g2);  // = 1 + Det(f) in omega-normalized bases
        r.check(i, std::abs(restricted - (1.0 + det_omega(f))) / std::max(1.0, g1.norm() * g2.norm()), 1e-12,
                "restricted omega vs 1 + Det(f)");
        const bool nondegenerate = std::abs(restricted) / (g1.norm() * g2.norm()) > eps_alg();
        r.expect(i, nondegenerate == (gap > eps_alg()), "nondegeneracy disagrees with |Det(f) + 1|");
    });
    return r.finish();
}

SuiteReport plucker_suite(int n, std::uint64_t seed) {
    Recorder r("plucker-lagrangian", seed, n, 1e-12);
    const Bivector ws = omega_star();
    r.run([&](int i, Rng& rng) {
        const Plane2 l = oracle::random_lagrangian(rng);
        const Bivector b = plucker(l);
        const double bn = b.norm();
        r.check(i, std::abs(wedge_product(ws, b)) / bn, 1e-12, "omega* . iota(L)");
        r.check(i, std::abs(wedge_product(b, b)) / (bn * bn), 1e-12, "iota(L) . iota(L)");
        const Vec w = random_null(rng);
        const Plane2 back = lagrangian_of(w);
        r.expect(i, back.lagrangian(), "plane of a null W-vector is not Lagrangian");
        r.expect(i, lagrangian_point(back) == EinPoint(w), "plane does not return to its W-point");
    });
    return r.finish();
}

SuiteReport maslov_causal_suite(int n, std::uint64_t seed) {
    Recorder r("maslov-causal", seed, n, 0.0);
    r.run([&](int i, Rng& rng) {
        const CrookedSurface c(oracle::random_quadrilateral(rng));
        const Plane2& p0 = c.p0();
        const Plane2& pinf = c.p_inf();
        Plane2 l = oracle::random_lagrangian(rng);
        const int mode = i % 4;
        if (mode >= 2) {
            // Lagrangian through a vector of P0 (mode 2) or P_inf (mode 3).
            const Plane2& p = mode == 2 ? p0 : pinf;
            const Vec4 x = (p.col(0) * rng.normal() + p.col(1) * rng.normal()).normalized();
            l = Plane2(x, omega_partner(x, rng));
        }
        const CausalType ct = classify_point(lagrangian_point(l), lagrangian_point(p0), lagrangian_point(pinf));
        const bool defined = transverse(l, p0) && transverse(l, pinf);
        if (mode >= 2) r.expect(i, !defined, "constructed lightlike Lagrangian reported transverse");
        if (!defined) {
            r.expect(i, ct == CausalType::Lightlike, "undefined Maslov index but point is " + std::string(to_string(ct)));
            return;
        }
        const int m = maslov(p0, l, pinf);
        const CausalType want = std::abs(m) == 2 ? CausalType::Timelike : CausalType::Spacelike;
        r.expect(i, ct == want, "m = " + std::to_string(m) + " but point is " + std::string(to_string(ct)));
    });
    return r.finish();
}

SuiteReport maslov_invariance_suite(int n, std::uint64_t seed) {
    Recorder r("maslov-invariance", seed, n, 0.0);
    r.run([&](int i, Rng& rng) {
        const Plane2 a = oracle::random_lagrangian(rng), b = oracle::random_lagrangian(rng),
                     c = oracle::random_lagrangian(rng);
        const Mat4 g = oracle::random_symplectic(rng);
        auto move = [&](const Plane2& p) { return Plane2(Mat42(g * p.basis())); };
        const int m = maslov(a, b, c);
        const int mg = maslov(move(a), move(b), move(c));
        r.expect(i, m == mg, "maslov " + std::to_string(m) + " became " + std::to_string(mg));
    });
    return r.finish();
}

SuiteReport photon_lemma_suite(int n, std::uint64_t seed) {
    Recorder r("photon-lemma", seed, n, 1e-9);
    r.run([&](int i, Rng& rng) {
        for (int attempt = 0; attempt < oracle::kMaxRejections; ++attempt) {
            const CrookedSurface c(oracle::random_quadrilateral(rng));
            const Vec4 p = oracle::random_vector4(rng);
            const PhotonMargins m = photon_margins(p, c);
            if (std::min(std::abs(m.plus), std::abs(m.minus)) <= 1e-6) {
                r.skip();
                continue;
            }
            const bool disjoint = m.disjoint();
            const auto hits = oracle::photon_search(p, c, 10000);
            if (disjoint) {
                r.expect(i, hits.empty(), "criterion says disjoint, oracle found a " +
                                              std::string(to_string(hits.empty() ? SurfaceRegion::Stem
                                                                                 : hits[0].region)) +
                                              " Lagrangian through p");
                return;
            }
            r.expect(i, !hits.empty(), "criterion says not disjoint, oracle found no Lagrangian");
            const auto witness = photon_surface_witness(p, c);
            if (!witness) {
                r.fail(i, "no constructive witness");
                return;
            }
            const Plane2& l = witness->lagrangian;
            const Wing wing = witness->region == SurfaceRegion::WingPlus ? Wing::Plus : Wing::Minus;
            const Vec4 q = p.normalized();
            const Eigen::Matrix<double, 4, 2> lb = l.subspace().basis();
            const double off = (q - lb * (lb.transpose() * q)).norm();
            const double residual = std::max({witness->residual, oracle::wing_residual(c, l, wing), off});
            r.check(i, residual, 1e-9, "witness membership residual");
            r.expect(i, surface_contains(c, l).has_value(), "witness fails surface_contains");
            return;
        }
        r.fail(i, "no qualifying (photon, surface) pair");
    });
    return r.finish();
}

SuiteReport crooked_theorem_suite(int n, std::uint64_t seed) {
    Recorder r("crooked-theorem", seed, n, 1e-4);
    r.run([&](int i, Rng& rng) {
        // Disjoint pair from two AdS crooked planes with margins > 1e-3.
        std::optional<std::pair<AdsCrookedPlane, AdsCrookedPlane>> planes;
        for (int attempt = 0; attempt < oracle::kMaxRejections && !planes; ++attempt) {
            const AdsCrookedPlane a = oracle::random_ads_plane(rng, 1.0);
            const AdsCrookedPlane b = oracle::random_ads_plane(rng, 2.0);
            const AdsReport rep = ads_report(a, b);
            if (*std::min_element(rep.margins.begin(), rep.margins.end()) > 1e-3) planes.emplace(a, b);
        }
        if (!planes) {
            r.fail(i, "no disjoint AdS pair found");
            return;
        }
        const Mat4 g = oracle::random_symplectic(rng);
        const CrookedSurface c1(ads_quadrilateral(planes->first).transformed(g));
        const CrookedSurface c2(ads_quadrilateral(planes->second).transformed(g));
        r.expect(i, surfaces_disjoint(c1, c2), "AdS-disjoint pair not disjoint");
        const double gap = oracle::min_gap(oracle::sample_surface(c1, 400, rng), oracle::sample_surface(c2, 250, rng));
        if (!(gap > 1e-4)) r.fail(i, "sampled gap " + num(gap));

        // Intersecting pair: a sampled Lagrangian of d1 becomes the vertex P+ of d2.
        const CrookedSurface d1(oracle::random_quadrilateral(rng));
        const oracle::RegionMix mixes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        const Plane2 l = oracle::sample_surface(d1, 1, rng, mixes[i % 3]).lagrangians[0];
        Plane2 m = oracle::random_lagrangian(rng);
        while (std::abs(normalized_wedge(l, m)) < 1e-2) m = oracle::random_lagrangian(rng);
        const Mat42 dual = oracle::dual_basis(l, m);
        const CrookedSurface d2(LightlikeQuadrilateral(l.col(0), -dual.col(1), l.col(1), dual.col(0)));
        r.expect(i, !surfaces_disjoint(d1, d2), "pair sharing a Lagrangian reported disjoint");
        r.expect(i, surface_contains(d1, l).has_value() && surface_contains(d2, l).has_value(),
                 "shared Lagrangian not found on both surfaces");
    });
    return r.finish();
}

SuiteReport stem_only_suite(int n, std::uint64_t seed) {
    Recorder r("stem-only", seed, n, 1e-4);
    constexpr int kSweep = 720;
    r.run([&](int i, Rng& rng) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const CrookedSurface c1(oracle::random_quadrilateral(rng));
            const CrookedSurface c2(oracle::random_quadrilateral(rng));
            const EinsteinTorus t1 = splitting_torus(c1.stem_s1()), t2 = splitting_torus(c2.stem_s1());
            if (t1 == t2 || std::abs(eta(t1, t2) - 1.0) < 1e-6) continue;
            const IntersectionClass cls = classify_torus_pair(t1, t2);
            const oracle::ConicSweep sweep(*cls.carrier, rng);
            auto plane_at = [&](double th) -> std::optional<Plane2> {
                const Vec x = sweep.at(th);
                if (x.norm() < 1e-9) return std::nullopt;
                return lagrangian_of(x);
            };
            auto in_both = [&](double th) {
                const auto l = plane_at(th);
                return l && safe_stem(c1, *l) && safe_stem(c2, *l);
            };
            std::vector<char> inside(kSweep);
            int first = -1;
            for (int k = 0; k < kSweep; ++k) {
                inside[k] = in_both(2.0 * kPi * k / kSweep);
                if (inside[k] && first < 0) first = k;
            }
            if (first < 0) continue;  // stems do not meet along the sampled curve
            int exit = -1;
            for (int s = 1; s <= kSweep; ++s)
                if (!inside[(first + s) % kSweep]) {
                    exit = first + s;
                    break;
                }
            if (exit < 0) {
                r.fail(i, "torus intersection curve lies entirely in both stems");
                return;
            }
            double lo = 2.0 * kPi * (exit - 1) / kSweep, hi = 2.0 * kPi * exit / kSweep;
            for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                (in_both(mid) ? lo : hi) = mid;
            }
            const auto boundary = plane_at(0.5 * (lo + hi));
            const auto outside = plane_at(hi);
            if (!boundary || !outside) {
                r.fail(i, "stem exit point at the vertex of the conic");
                return;
            }
            auto wing_res = [&](const CrookedSurface& c, const Plane2& l) {
                return std::min(oracle::wing_residual(c, l, Wing::Plus), oracle::wing_residual(c, l, Wing::Minus));
            };
            auto membership = [&](const CrookedSurface& c, const Plane2& l) {
                return safe_stem(c, l) ? 0.0 : wing_res(c, l);
            };
            const bool left_first = !safe_stem(c1, *outside);
            const CrookedSurface& exited = left_first ? c1 : c2;
            const CrookedSurface& other = left_first ? c2 : c1;
            const double residual = std::max(wing_res(exited, *boundary), membership(other, *boundary));
            r.check(i, residual, 1e-4, "wing intersection residual");
            return;
        }
        r.fail(i, "no pair with intersecting stems in 1000 attempts");
    });
    return r.finish();
}

SuiteReport projective_suite(int n, std::uint64_t seed) {
    Recorder r("projective-invariance", seed, n, 0.0);
    r.run([&](int i, Rng& rng) {
        const LightlikeQuadrilateral q = oracle::random_quadrilateral(rng);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        const double lam = sign * std::exp(rng.uniform(-2.0, 2.0));
        const double nu = sign * std::exp(rng.uniform(-2.0, 2.0));
        const CrookedSurface c(q);
        const CrookedSurface cs(LightlikeQuadrilateral(lam * q.u_plus(), nu * q.u_minus(), q.v_plus() / nu,
                                                      q.v_minus() / lam));
        const oracle::SampleCloud cloud = oracle::sample_surface(c, 20, rng);
        for (std::size_t k = 0; k < cloud.size(); ++k) {
            const auto a = surface_contains(c, cloud.lagrangians[k]);
            const auto b = surface_contains(cs, cloud.lagrangians[k]);
            r.expect(i, a == b, "membership changed under rescaling");
        }
        for (int k = 0; k < 10; ++k) {
            const Plane2 l = oracle::random_lagrangian(rng);
            r.expect(i, surface_contains(c, l) == surface_contains(cs, l), "random Lagrangian membership changed");
            const Vec4 p = oracle::random_vector4(rng);
            const PhotonMargins m = photon_margins(p, c);
            if (std::min(std::abs(m.plus), std::abs(m.minus)) > 1e-9)
                r.expect(i, m.disjoint() == photon_disjoint(p, cs), "photon verdict changed");
        }
    });
    return r.finish();
}

SuiteReport dgk_suite(int n, std::uint64_t seed) {
    Recorder r("dgk-equivalence", seed, n, 1e-12);
    r.run([&](int i, Rng& rng) {
        bool done = false;
        for (int attempt = 0; attempt < oracle::kMaxRejections && !done; ++attempt) {
            const AdsCrookedPlane a = oracle::random_ads_plane(rng, 1.0);
            const AdsCrookedPlane b = oracle::random_ads_plane(rng, 1.5);
            const AdsReport ads = ads_report(a, b);
            const DgkReport dgk = dgk_report(a, b);
            const CrookedPairReport cr =
                crooked_pair_report(CrookedSurface(ads_quadrilateral(a)), CrookedSurface(ads_quadrilateral(b)));
            double smallest = std::numeric_limits<double>::infinity();
            for (double m : ads.margins) smallest = std::min(smallest, std::abs(m));
            for (double m : dgk.margins) smallest = std::min(smallest, std::abs(m));
            for (const auto& m : cr.margins) smallest = std::min(smallest, std::abs(m.slack));
            if (!(smallest > 1e-6)) {
                r.skip();
                continue;
            }
            done = true;
            r.expect(i, ads.disjoint == dgk.verdict && dgk.verdict == cr.disjoint,
                     "ads " + std::to_string(ads.disjoint) + ", dgk " + std::to_string(dgk.verdict) +
                         ", crooked " + std::to_string(cr.disjoint));
            double diff = 0.0;
            // Identity up to rounding, which scales with the size of the terms.
            for (int k = 0; k < 4; ++k)
                diff = std::max(diff, std::abs(ads.margins[k] - dgk.margins[k]) /
                                          std::max({1.0, std::abs(ads.margins[k]), std::abs(dgk.margins[k])}));
            r.check(i, diff, 1e-12, "four-inequality vs DGK margins (relative)");
        }
        if (!done) r.fail(i, "no configuration outside the ambiguity band");

        const AdsPoint g(oracle::random_sl2(rng, 1.0));
        const Vec2 a = unit_direction(rng), b = unit_direction(rng);
        const Mat2 lhs = boundary_lift(g.matrix() * a).matrix();
        const Mat2 rhs = g.matrix() * boundary_lift(a).matrix() * g.matrix().inverse();
        r.check(i, (lhs - rhs).cwiseAbs().maxCoeff(), 1e-12, "boundary_lift equivariance");
        const double k = killing(boundary_lift(a), boundary_lift(b));
        const double w = omega0(a, b);
        r.check(i, std::abs(w * w + k), 1e-12, "omega0(a, b)^2 + K");
        if (k < -1e-3) {
            const double r1 = rng.uniform(0.5, 2.0);
            const double r2 = -k / (2.0 * r1);
            const double d = horocycle_distance(Horocycle(boundary_lift(a), r1), Horocycle(boundary_lift(b), r2));
            r.expect(i, d == 0.0, "horocycle distance at K = -2rr' is " + num(d));
        }
    });
    return r.finish();
}

SuiteReport ads_equivariance_suite(int n, std::uint64_t seed) {
    Recorder r("ads-equivariance", seed, n, 1e-12);
    const Mat4& frame = ads_frame();
    const Mat4& om = SympSpace::standard().omega();
    Mat4 ads_form = Mat4::Zero();
    ads_form.topLeftCorner<2, 2>() = J();
    ads_form.bottomRightCorner<2, 2>() = -J();
    r.check(-1, (frame.transpose() * om * frame - ads_form).cwiseAbs().maxCoeff(), 1e-12,
            "ads_frame is not symplectic");
    r.run([&](int i, Rng& rng) {
        const Mat2 a = oracle::random_sl2(rng), b = oracle::random_sl2(rng);
        const AdsPoint f(oracle::random_sl2(rng));
        const Mat4 g = isometry_action(a, b);
        r.check(i, (g.transpose() * om * g - om).cwiseAbs().maxCoeff() / std::max(1.0, g.squaredNorm()), 1e-12,
                "isometry action not symplectic");
        const Plane2 moved(Mat42(g * embed(f).basis()));
        const AdsPoint image(a * f.matrix() * b.inverse());
        r.expect(i, moved == embed(image), "(A, B) graph(f) != graph(A f B^-1)");
        const Mat4& s = involution_matrix();
        r.check(i, (s * g - g * s).cwiseAbs().maxCoeff() / std::max(1.0, g.norm()), 1e-12,
                "isometry does not commute with the involution");
    });
    return r.finish();
}

SuiteReport embed_avoidance_suite(int n, std::uint64_t seed) {
    Recorder r("embed-avoidance", seed, n, eps_alg());
    const Mat4& t = ads_frame();
    const Plane2 e_plus(Mat42(t.leftCols<2>()));
    r.run([&](int i, Rng& rng) {
        const AdsPoint f(oracle::random_sl2(rng, 2.0));
        const Plane2 l = embed(f);
        r.expect(i, transverse(l, e_plus), "graph(f) meets V0 (+) 0");
        r.expect(i, !(involution(l) == l), "graph(f) fixed by the involution");
        // Points of the fixed locus: span{(x; 0), (0; y)}.
        for (int k = 0; k < 16; ++k) {
            const Vec2 x = unit_direction(rng), y = unit_direction(rng);
            Vec4 vx, vy;
            vx << x, 0.0, 0.0;
            vy << 0.0, 0.0, y;
            const Plane2 fixed(Vec4(t * vx), Vec4(t * vy));
            r.expect(i, fixed.lagrangian() && involution(fixed) == fixed, "sampled boundary point not fixed");
            r.expect(i, !(fixed == l), "graph(f) equals a boundary point");
        }
    });
    return r.finish();
}

using SuiteFn = SuiteReport (*)(int, std::uint64_t);

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"trichotomy", 1000, "torus pair kind vs sign of eta - 1, carrier signature and tangent probe"},
         trichotomy_suite},
        {{"eta-bridge", 1000, "eta_from_det(f) vs eta of mu-vectors over random splittings"}, eta_bridge_suite},
        {{"symplectic-identities", 1000, "omega*, adjugate, reflection complement and transversality"},
         symplectic_identities_suite},
        {{"maslov-causal", 1000, "|m(P0, L, P_inf)| = 2 / 0 / undefined vs timelike / spacelike / lightlike"},
         maslov_causal_suite},
        {{"photon-lemma", 1000, "photon criterion vs search over 10^4 Lagrangians through the photon"},
         photon_lemma_suite},
        {{"crooked-theorem", 200, "disjoint AdS-built pairs keep a sampled gap; pairs sharing a Lagrangian meet"},
         crooked_theorem_suite},
        {{"stem-only", 200, "stems that meet force a wing intersection"}, stem_only_suite},
        {{"dgk-equivalence", 1000, "four inequalities vs DGK vs sixteen inequalities; Killing lemma; horocycles"},
         dgk_suite},
        {{"linalg", 1000, "bilinearity, signature additivity, dimension formula, projective normalization"},
         linalg_suite},
        {{"torus-carrier", 1000, "carrier null cone lies on both tori"}, torus_carrier_suite},
        {{"composition-eigenvalues", 1000, "R_s R_s' eigenvalues vs direct eigendecomposition"}, composition_suite},
        {{"triple-lightcone", 1000, "timelike iff the three light cones have no common point"},
         triple_lightcone_suite},
        {{"minkowski-embed", 1000, "embedding is null, injective and inverted by minkowski_coords"},
         minkowski_suite},
        {{"graph-nondegeneracy", 1000, "graph(f) nondegenerate iff |Det(f) + 1| > eps_alg"}, graph_suite},
        {{"plucker-lagrangian", 1000, "Lagrangians are exactly the null lines of W"}, plucker_suite},
        {{"maslov-invariance", 1000, "Maslov index preserved by Sp(4)"}, maslov_invariance_suite},
        {{"projective-invariance", 200, "surface predicates ignore rescaling of the quadrilateral"},
         projective_suite},
        {{"ads-equivariance", 1000, "SL2 x SL2 action on graphs and the involution"}, ads_equivariance_suite},
        {{"embed-avoidance", 1000, "graph(f) misses the fixed locus of the involution"}, embed_avoidance_suite},
    };
    return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
    static const std::vector<SuiteInfo> list = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return list;
}

SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed) {
    for (const auto& e : registry())
        if (e.info.name == name) return e.fn(trials > 0 ? trials : e.info.default_trials, seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ein3::suites
