#include "ein3/crooked.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ein3 {

namespace {

double scaled_tol(const Vec4& a, const Vec4& b) {
    return eps_alg() * std::max(1.0, a.norm() * b.norm());
}

// Coordinates (t, s) of w in the basis (x, y) of a plane containing it.
Eigen::Vector2d plane_coords(const Vec4& x, const Vec4& y, const Vec4& w) {
    Mat42 m;
    m << x, y;
    return m.colPivHouseholderQr().solve(w);
}

}  // namespace

std::array<double, 6> quadrilateral_deviations(const Vec4& u_plus, const Vec4& u_minus,
                                               const Vec4& v_plus, const Vec4& v_minus) {
    return {omega(u_plus, v_minus) - 1.0, omega(u_minus, v_plus) - 1.0, omega(u_plus, u_minus),
            omega(u_plus, v_plus),        omega(u_minus, v_minus),      omega(v_plus, v_minus)};
}

LightlikeQuadrilateral::LightlikeQuadrilateral(const Vec4& u_plus, const Vec4& u_minus,
                                               const Vec4& v_plus, const Vec4& v_minus)
    : u_plus_(u_plus), u_minus_(u_minus), v_plus_(v_plus), v_minus_(v_minus) {
    static constexpr const char* kNames[6] = {"omega(u+,v-) - 1", "omega(u-,v+) - 1",
                                              "omega(u+,u-)",     "omega(u+,v+)",
                                              "omega(u-,v-)",     "omega(v+,v-)"};
    const std::array<Vec4, 4> vs = {u_plus, u_minus, v_plus, v_minus};
    for (const auto& v : vs)
        if (!v.allFinite()) throw GeometryError("LightlikeQuadrilateral: non-finite vector");
    const std::array<std::pair<int, int>, 6> pairs = {
        {{0, 3}, {1, 2}, {0, 1}, {0, 2}, {1, 3}, {2, 3}}};
    const auto dev = quadrilateral_deviations(u_plus, u_minus, v_plus, v_minus);
    std::ostringstream err;
    bool bad = false;
    for (int k = 0; k < 6; ++k) {
        const auto [i, j] = pairs[k];
        if (std::abs(dev[k]) > scaled_tol(vs[i], vs[j])) {
            err << (bad ? ", " : "") << kNames[k] << " = " << dev[k];
            bad = true;
        }
    }
    if (bad) throw GeometryError("LightlikeQuadrilateral: " + err.str());
}

LightlikeQuadrilateral LightlikeQuadrilateral::transformed(const Mat4& g) const {
    return LightlikeQuadrilateral(g * u_plus_, g * u_minus_, g * v_plus_, g * v_minus_);
}

std::string_view to_string(SurfaceRegion r) {
    switch (r) {
        case SurfaceRegion::WingPlus: return "wing+";
        case SurfaceRegion::WingMinus: return "wing-";
        case SurfaceRegion::Stem: return "stem";
    }
    return "?";
}

CrookedSurface::CrookedSurface(LightlikeQuadrilateral quad)
    : quad_(std::move(quad)),
      p0_(quad_.v_plus(), quad_.v_minus()),
      p_inf_(quad_.u_plus(), quad_.u_minus()),
      p_plus_(quad_.u_plus(), quad_.v_plus()),
      p_minus_(quad_.u_minus(), quad_.v_minus()),
      s1_(quad_.u_plus(), quad_.v_minus()),
      s2_(quad_.u_minus(), quad_.v_plus()) {}

bool wing_contains(const CrookedSurface& c, const Plane2& l, Wing w) {
    if (!l.lagrangian()) throw GeometryError("wing_contains: plane is not Lagrangian");
    const Plane2& vertex = c.vertex(w);
    const Subspace meet = intersect(l.subspace(), vertex.subspace());
    if (meet.dim() == 0) return false;
    if (meet.dim() == 2) return true;
    const Vec4 dir = meet.basis().col(0);
    const Vec4& u = w == Wing::Plus ? c.quad().u_plus() : c.quad().u_minus();
    const Vec4& v = w == Wing::Plus ? c.quad().v_plus() : c.quad().v_minus();
    const Eigen::Vector2d ts = plane_coords(u, v, dir);
    const double prod = ts(0) * ts(1);
    const double slack = eps_alg() * ts.squaredNorm();
    return w == Wing::Plus ? prod >= -slack : prod <= slack;
}

bool stem_contains(const CrookedSurface& c, const Plane2& l) {
    if (!l.lagrangian()) throw GeometryError("stem_contains: plane is not Lagrangian");
    const Subspace ls = l.subspace();
    if (intersect(ls, c.stem_s1().subspace()).dim() < 1) return false;
    if (intersect(ls, c.stem_s2().subspace()).dim() < 1) return false;
    if (!transverse(l, c.p0()) || !transverse(l, c.p_inf())) return false;
    return std::abs(maslov(c.p0(), l, c.p_inf())) == 2;
}

std::optional<SurfaceRegion> surface_contains(const CrookedSurface& c, const Plane2& l) {
    if (wing_contains(c, l, Wing::Plus)) return SurfaceRegion::WingPlus;
    if (wing_contains(c, l, Wing::Minus)) return SurfaceRegion::WingMinus;
    if (stem_contains(c, l)) return SurfaceRegion::Stem;
    return std::nullopt;
}

bool PhotonMargins::disjoint() const { return plus > eps_alg() && minus < -eps_alg(); }

PhotonMargins photon_margins(const Vec4& p, const CrookedSurface& c) {
    const double n = p.norm();
    if (!(n > 0.0)) throw GeometryError("photon_margins: zero photon vector");
    const Vec4 q = p / n;
    const auto& k = c.quad();
    return {omega(q, k.v_plus()) * omega(q, k.u_plus()),
            omega(q, k.v_minus()) * omega(q, k.u_minus())};
}

bool photon_disjoint(const Vec4& p, const CrookedSurface& c) { return photon_margins(p, c).disjoint(); }

std::optional<PhotonWitness> photon_surface_witness(const Vec4& p, const CrookedSurface& c) {
    const PhotonMargins m = photon_margins(p, c);
    const Vec4 q = p.normalized();
    auto build = [&](const Vec4& u, const Vec4& v, Wing wing) -> std::optional<PhotonWitness> {
        const Plane2& vertex = c.vertex(wing);
        const SurfaceRegion region = wing == Wing::Plus ? SurfaceRegion::WingPlus : SurfaceRegion::WingMinus;
        Vec4 w = omega(q, v) * u - omega(q, u) * v;
        if (w.norm() <= eps_alg() * u.norm() * v.norm() || chordal_distance(q, w) <= eps_rank()) {
            // p lies in the vertex plane itself.
            return PhotonWitness{vertex, region, std::abs(omega(q, vertex.col(0).normalized())) +
                                                     std::abs(omega(q, vertex.col(1).normalized()))};
        }
        w.normalize();
        Plane2 l(q, w);
        if (!l.lagrangian()) return std::nullopt;
        return PhotonWitness{l, region, std::abs(omega(q, w))};
    };
    const auto& k = c.quad();
    if (m.plus <= eps_alg()) return build(k.u_plus(), k.v_plus(), Wing::Plus);
    if (m.minus >= -eps_alg()) return build(k.u_minus(), k.v_minus(), Wing::Minus);
    return std::nullopt;
}

CrookedPairReport crooked_pair_report(const CrookedSurface& c1, const CrookedSurface& c2) {
    CrookedPairReport r;
    r.min_slack = std::numeric_limits<double>::infinity();
    auto add = [&](const CrookedSurface& from, const std::string& from_name,
                   const CrookedSurface& against, const std::string& against_name) {
        const auto& k = from.quad();
        const std::array<std::pair<const char*, const Vec4*>, 4> photons = {
            {{"u+", &k.u_plus()}, {"u-", &k.u_minus()}, {"v+", &k.v_plus()}, {"v-", &k.v_minus()}}};
        for (const auto& [name, vec] : photons) {
            const PhotonMargins m = photon_margins(*vec, against);
            const std::string label = from_name + "." + name;
            r.margins.push_back({label, against_name, "> 0", m.plus, m.slack_plus()});
            r.margins.push_back({label, against_name, "< 0", m.minus, m.slack_minus()});
        }
    };
    add(c2, "second", c1, "first");
    add(c1, "first", c2, "second");
    r.disjoint = true;
    for (const auto& m : r.margins) {
        r.min_slack = std::min(r.min_slack, m.slack);
        if (!(m.slack > eps_alg())) r.disjoint = false;
        if (std::abs(m.slack) <= 10.0 * eps_alg()) r.ambiguous = true;
    }
    return r;
}

bool surfaces_disjoint(const CrookedSurface& c1, const CrookedSurface& c2) {
    return crooked_pair_report(c1, c2).disjoint;
}

}  // namespace ein3
