// ein3: command-line front end for the Einstein torus and crooked surface
// predicates. Exit codes: 0 success (or "disjoint"), 1 "not disjoint",
// 2 invalid input, 3 check-ads criteria disagree.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ein3/ads.hpp"
#include "ein3/crooked.hpp"
#include "ein3/einstein.hpp"
#include "ein3/io.hpp"
#include "ein3/oracle.hpp"
#include "ein3/suites.hpp"
#include "ein3/symplectic.hpp"

using namespace ein3;

namespace {

constexpr int kDisjoint = 0;
constexpr int kNotDisjoint = 1;
constexpr int kBadInput = 2;
constexpr int kDisagree = 3;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);  // no "-0"
    return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Globals {
    std::optional<double> eps_alg, eps_geo;
    std::optional<std::uint64_t> seed;
};

// Flags beat the config file, which beats the built-in defaults.
std::uint64_t apply_settings(const Globals& g, const io::Config* c) {
    if (c && c->eps_alg) tolerances().eps_alg = *c->eps_alg;
    if (c && c->eps_geo) tolerances().eps_geo = *c->eps_geo;
    if (g.eps_alg) tolerances().eps_alg = *g.eps_alg;
    if (g.eps_geo) tolerances().eps_geo = *g.eps_geo;
    if (g.seed) return *g.seed;
    if (c && c->seed) return *c->seed;
    return 7;
}

bool is_surface(const io::Object& o) {
    return std::holds_alternative<LightlikeQuadrilateral>(o) || std::holds_alternative<AdsCrookedPlane>(o);
}

CrookedSurface surface_of(const io::Object& o) {
    if (const auto* q = std::get_if<LightlikeQuadrilateral>(&o)) return CrookedSurface(*q);
    return CrookedSurface(ads_quadrilateral(std::get<AdsCrookedPlane>(o)));
}

// Explicit names if given, otherwise the first objects accepted by `ok`.
template <class Pred>
std::vector<const io::NamedObject*> pick(const io::Config& c, const std::vector<std::string>& names,
                                         std::size_t count, Pred ok, const std::string& what) {
    std::vector<const io::NamedObject*> out;
    for (const auto& n : names) {
        if (n.empty()) continue;
        const io::NamedObject* o = c.find(n);
        if (!o) throw io::ConfigError("no object named \"" + n + "\"");
        if (!ok(o->value)) throw io::ConfigError("\"" + n + "\" is not a " + what);
        out.push_back(o);
    }
    for (const auto& o : c.objects) {
        if (out.size() >= count) break;
        if (!ok(o.value)) continue;
        bool taken = false;
        for (const auto* p : out) taken = taken || p == &o;
        if (!taken) out.push_back(&o);
    }
    if (out.size() < count)
        throw io::ConfigError("need " + std::to_string(count) + " " + what + " object(s), found " +
                              std::to_string(out.size()));
    out.resize(count);
    return out;
}

void warn_ambiguous() { std::cerr << "warning: ambiguous within tolerance\n"; }

// --- subcommands ------------------------------------------------------------

int classify_tori(const io::Config& c, const std::string& first, const std::string& second) {
    const auto objs = pick(c, {first, second}, 2,
                           [](const io::Object& o) { return std::holds_alternative<io::TorusDef>(o); }, "torus");
    const auto& t1 = std::get<io::TorusDef>(objs[0]->value);
    const auto& t2 = std::get<io::TorusDef>(objs[1]->value);
    const IntersectionClass cls = classify_torus_pair(t1.torus, t2.torus);
    std::cout << "first=" << objs[0]->name << "\nsecond=" << objs[1]->name << "\n";
    std::cout << "eta=" << num(cls.eta) << " kind=" << to_string(cls.kind) << "\n";
    if (cls.carrier) {
        const Signature s = signature(ein_space(), *cls.carrier);
        std::cout << "carrier_signature=" << s.p << "," << s.q << "," << s.z << "\n";
    }
    // A graph over the other torus's plane: report the Det(f) formula too.
    const io::TorusDef* graph = nullptr;
    if (t2.over && *t2.over == objs[0]->name) graph = &t2;
    if (t1.over && *t1.over == objs[1]->name) graph = &t1;
    if (graph) {
        const double by_det = eta_from_det(*graph->map);
        const double by_mu = eta_normalized(mu_unit(*t1.plane), mu_unit(*t2.plane));
        std::cout << "det_omega=" << num(det_omega(*graph->map)) << "\n";
        std::cout << "eta_det=" << num(by_det) << "\neta_mu=" << num(by_mu) << "\n";
        std::cout << "eta_paths_agree=" << flag(std::abs(by_det - by_mu) <= eps_alg()) << "\n";
    }
    if (cls.kind != IntersectionKind::Equal && std::abs(cls.eta - 1.0) <= 10.0 * eps_alg()) {
        std::cout << "ambiguous=true\n";
        warn_ambiguous();
    }
    return 0;
}

int check_photon(const io::Config& c, const std::string& photon, const std::string& surface) {
    const auto p = pick(c, {photon}, 1,
                        [](const io::Object& o) { return std::holds_alternative<io::PhotonDef>(o); }, "photon");
    const auto s = pick(c, {surface}, 1, is_surface, "surface");
    const Vec4& v = std::get<io::PhotonDef>(p[0]->value).vector;
    const CrookedSurface cs = surface_of(s[0]->value);
    const PhotonMargins m = photon_margins(v, cs);
    std::cout << "photon=" << p[0]->name << "\nsurface=" << s[0]->name << "\n";
    std::cout << "plus=" << num(m.plus) << " relation=>0 slack=" << num(m.slack_plus()) << "\n";
    std::cout << "minus=" << num(m.minus) << " relation=<0 slack=" << num(m.slack_minus()) << "\n";
    const bool ambiguous =
        std::abs(m.slack_plus()) <= 10.0 * eps_alg() || std::abs(m.slack_minus()) <= 10.0 * eps_alg();
    const bool disjoint = m.disjoint() && !ambiguous;
    if (ambiguous) {
        std::cout << "ambiguous=true\n";
        warn_ambiguous();
    }
    std::cout << "disjoint=" << flag(disjoint) << "\n";
    if (!m.disjoint()) {
        if (auto w = photon_surface_witness(v, cs)) {
            const Mat42& b = w->lagrangian.basis();
            std::cout << "witness_region=" << to_string(w->region) << "\nwitness_residual=" << num(w->residual)
                      << "\n";
            for (int k = 0; k < 2; ++k) {
                std::cout << "witness_basis" << k << "=";
                for (int i = 0; i < 4; ++i) std::cout << (i ? "," : "") << num(b(i, k));
                std::cout << "\n";
            }
        }
    }
    return disjoint ? kDisjoint : kNotDisjoint;
}

int check_crooked(const io::Config& c, const std::string& first, const std::string& second) {
    const auto objs = pick(c, {first, second}, 2, is_surface, "surface");
    const CrookedPairReport r = crooked_pair_report(surface_of(objs[0]->value), surface_of(objs[1]->value));
    std::cout << "first=" << objs[0]->name << "\nsecond=" << objs[1]->name << "\n";
    for (const auto& m : r.margins) {
        std::cout << "inequality photon=" << m.photon << " surface=" << m.against
                  << " relation=" << (m.relation == "> 0" ? ">0" : "<0") << " value=" << num(m.value)
                  << " slack=" << num(m.slack);
        if (std::abs(m.slack) <= eps_alg())
            std::cout << " flag=zero";
        else if (std::abs(m.slack) <= 10.0 * eps_alg())
            std::cout << " flag=near";
        else if (m.slack < 0.0)
            std::cout << " flag=violated";
        std::cout << "\n";
    }
    std::cout << "min_slack=" << num(r.min_slack) << "\n";
    if (r.ambiguous) {
        std::cout << "ambiguous=true\n";
        warn_ambiguous();
    }
    const bool disjoint = r.disjoint && !r.ambiguous;
    std::cout << "disjoint=" << flag(disjoint) << "\n";
    return disjoint ? kDisjoint : kNotDisjoint;
}

int check_ads(const io::Config& c, const std::string& first, const std::string& second) {
    const auto objs = pick(c, {first, second}, 2,
                           [](const io::Object& o) { return std::holds_alternative<AdsCrookedPlane>(o); },
                           "ads_plane");
    const auto& p1 = std::get<AdsCrookedPlane>(objs[0]->value);
    const auto& p2 = std::get<AdsCrookedPlane>(objs[1]->value);
    const AdsReport ads = ads_report(p1, p2);
    const DgkReport dgk = dgk_report(p1, p2);
    static constexpr const char* kPairs[4] = {"a',b", "a',a", "b',b", "b',a"};
    std::cout << "first=" << objs[0]->name << "\nsecond=" << objs[1]->name << "\n";
    const Mat2& f = ads.relative_base;
    std::cout << "relative_base=" << num(f(0, 0)) << "," << num(f(0, 1)) << "," << num(f(1, 0)) << ","
              << num(f(1, 1)) << "\n";
    bool ambiguous = false;
    for (int i = 0; i < 4; ++i) {
        std::cout << "four_inequality pair=" << kPairs[i] << " margin=" << num(ads.margins[i]) << "\n";
        ambiguous = ambiguous || std::abs(ads.margins[i]) <= 10.0 * eps_alg();
    }
    for (int i = 0; i < 4; ++i) {
        std::cout << "dgk pair=" << kPairs[i] << " margin=" << num(dgk.margins[i]) << "\n";
        ambiguous = ambiguous || std::abs(dgk.margins[i]) <= 10.0 * eps_alg();
    }
    std::cout << "ads_disjoint=" << flag(ads.disjoint) << "\ndgk=" << flag(dgk.verdict) << "\n";
    std::cout << "agree=" << flag(ads.disjoint == dgk.verdict) << "\n";
    if (ambiguous) {
        std::cout << "ambiguous=true\n";
        warn_ambiguous();
    }
    if (!dgk.explanation.empty()) {
        std::cout << "explanation=" << dgk.explanation << "\n";
        std::cerr << "error: degenerate endpoints: " << dgk.explanation << "\n";
        return kBadInput;
    }
    if (ads.disjoint != dgk.verdict) return kDisagree;
    return ads.disjoint ? kDisjoint : kNotDisjoint;
}

struct Cloud3 {
    std::vector<std::array<double, 3>> xyz;
    std::vector<std::string> labels;
    int dropped = 0;

    void add(const oracle::SampleCloud& s, const std::string& prefix) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto p = minkowski_coords(s.points[i], eps_geo());
            if (!p) {
                ++dropped;
                continue;
            }
            xyz.push_back(*p);
            labels.push_back(prefix + s.labels[i]);
        }
    }
};

void write_csv(std::ostream& out, const Cloud3& c) {
    out << "x,y,z,label\n";
    for (std::size_t i = 0; i < c.xyz.size(); ++i)
        out << num(c.xyz[i][0]) << "," << num(c.xyz[i][1]) << "," << num(c.xyz[i][2]) << "," << c.labels[i]
            << "\n";
}

void write_ply(std::ostream& out, const Cloud3& c) {
    std::vector<std::string> names;
    std::vector<int> ids;
    for (const auto& l : c.labels) {
        auto it = std::find(names.begin(), names.end(), l);
        ids.push_back(static_cast<int>(it - names.begin()));
        if (it == names.end()) names.push_back(l);
    }
    out << "ply\nformat ascii 1.0\n";
    for (std::size_t k = 0; k < names.size(); ++k) out << "comment label " << k << " " << names[k] << "\n";
    out << "element vertex " << c.xyz.size() << "\n";
    out << "property double x\nproperty double y\nproperty double z\nproperty int label\nend_header\n";
    for (std::size_t i = 0; i < c.xyz.size(); ++i)
        out << num(c.xyz[i][0]) << " " << num(c.xyz[i][1]) << " " << num(c.xyz[i][2]) << " " << ids[i] << "\n";
}

int sample(const io::Config& c, std::uint64_t seed, const std::vector<std::string>& names, int count,
           const std::string& format, const std::string& out_path) {
    if (count < 1) throw io::ConfigError("--count must be positive");
    auto sampleable = [](const io::Object& o) { return std::holds_alternative<io::TorusDef>(o) || is_surface(o); };
    std::vector<const io::NamedObject*> objs;
    if (names.empty()) {
        objs = pick(c, {}, 1, sampleable, "torus or surface");
        for (const auto& o : c.objects)
            if (&o != objs[0] && sampleable(o.value) && objs.size() < 2) objs.push_back(&o);
    } else {
        if (names.size() > 2) throw io::ConfigError("sample takes one or two objects");
        objs = pick(c, names, names.size(), sampleable, "torus or surface");
    }
    const oracle::Rng base(seed);
    Cloud3 cloud;
    for (std::size_t k = 0; k < objs.size(); ++k) {
        oracle::Rng rng = base.split(k);
        const io::Object& o = objs[k]->value;
        if (const auto* t = std::get_if<io::TorusDef>(&o))
            cloud.add(oracle::sample_torus(t->torus, count, rng, objs[k]->name), "");
        else
            cloud.add(oracle::sample_surface(surface_of(o), count, rng), objs[k]->name + ":");
    }
    // Two tori: also trace their intersection.
    if (objs.size() == 2) {
        const auto* a = std::get_if<io::TorusDef>(&objs[0]->value);
        const auto* b = std::get_if<io::TorusDef>(&objs[1]->value);
        if (a && b && !(a->torus == b->torus)) {
            oracle::Rng rng = base.split(objs.size());
            const IntersectionClass cls = classify_torus_pair(a->torus, b->torus);
            const oracle::ConicSweep sweep(*cls.carrier, rng);
            oracle::SampleCloud inter;
            for (int i = 0; i < count; ++i) {
                const Vec x = sweep.at(std::numbers::pi * i / count);
                if (x.norm() < 1e-9) continue;
                inter.points.push_back(projective_normalize(x));
                inter.labels.push_back("intersection");
            }
            cloud.add(inter, "");
        }
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw io::ConfigError("cannot write " + out_path);
        out = &file;
    }
    if (format == "ply")
        write_ply(*out, cloud);
    else
        write_csv(*out, cloud);
    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    summary << "points=" << cloud.xyz.size() << "\ndropped_at_infinity=" << cloud.dropped << "\n";
    if (!out_path.empty()) summary << "out=" << out_path << "\n";
    return 0;
}

int verify(const std::string& suite, int trials, std::uint64_t seed) {
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& s : suites::suite_list()) names.push_back(s.name);
    } else {
        names.push_back(suite);
    }
    bool all_pass = true;
    for (const auto& n : names) {
        const suites::SuiteReport r = suites::run_suite(n, trials, seed);
        io::Json line;
        line["suite"] = r.suite;
        line["seed"] = r.seed;
        line["trial_count"] = r.trial_count;
        line["tolerance"] = r.tolerance;
        line["pass"] = r.passed();
        line["skipped"] = r.skipped;
        line["failure_count"] = r.failure_count;
        line["failures"] = r.failures;
        line["max_violation"] = r.max_violation;
        std::cout << line.dump() << "\n" << std::flush;
        all_pass = all_pass && r.passed();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein tori, crooked surfaces and AdS crooked planes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--eps-alg", g.eps_alg, "tolerance for algebraic identities and margins")
        ->check(CLI::PositiveNumber);
    app.add_option("--eps-geo", g.eps_geo, "tolerance for sampled geometry")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for sampling and verification");

    std::string file, first, second, photon, surface, format = "csv", out_path, suite = "all";
    std::vector<std::string> objects;
    int count = 2000, trials = 0;

    auto* classify = app.add_subcommand("classify-tori", "classify the intersection of two Einstein tori");
    classify->add_option("file", file, "config file")->required();
    classify->add_option("--first", first, "first torus name");
    classify->add_option("--second", second, "second torus name");

    auto* photon_cmd = app.add_subcommand("check-photon", "photon vs crooked surface");
    photon_cmd->add_option("file", file, "config file")->required();
    photon_cmd->add_option("--photon", photon, "photon name");
    photon_cmd->add_option("--surface", surface, "surface name");

    auto* crooked = app.add_subcommand("check-crooked", "disjointness of two crooked surfaces");
    crooked->add_option("file", file, "config file")->required();
    crooked->add_option("--first", first, "first surface name");
    crooked->add_option("--second", second, "second surface name");

    auto* ads = app.add_subcommand("check-ads", "four inequalities vs the horocycle criterion");
    ads->add_option("file", file, "config file")->required();
    ads->add_option("--first", first, "plane at the base point");
    ads->add_option("--second", second, "second plane");

    auto* sample_cmd = app.add_subcommand("sample", "export a point cloud in the Minkowski patch");
    sample_cmd->add_option("file", file, "config file")->required();
    sample_cmd->add_option("--objects", objects, "one or two object names")->delimiter(',');
    sample_cmd->add_option("--count", count, "samples per object");
    sample_cmd->add_option("--format", format, "csv or ply")->check(CLI::IsMember({"csv", "ply"}));
    sample_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : suites::suite_list()) suite_names.push_back(s.name);
    verify_cmd->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suite_names));
    verify_cmd->add_option("--trials", trials, "trials per suite (default: suite default)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    try {
        if (verify_cmd->parsed()) return verify(suite, trials, apply_settings(g, nullptr));
        const io::Json doc = io::read_json(file);
        const io::Config settings = io::parse_settings(doc);
        const std::uint64_t seed = apply_settings(g, &settings);
        const io::Config config = io::parse_config(doc);
        if (classify->parsed()) return classify_tori(config, first, second);
        if (photon_cmd->parsed()) return check_photon(config, photon, surface);
        if (crooked->parsed()) return check_crooked(config, first, second);
        if (ads->parsed()) return check_ads(config, first, second);
        if (sample_cmd->parsed()) return sample(config, seed, objects, count, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
