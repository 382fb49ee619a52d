// One line per acceptance criterion; exit status 0 iff every criterion passes.
// Usage: acceptance [path-to-ein3-cli]
// With the CLI path, criterion 9 compares the bytes of two
// `verify --suite all --seed 7` runs; without it, two in-process runs.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ein3/suites.hpp"

using namespace ein3;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Criterion {
    int id;
    const char* title;
    std::vector<const char*> suites;
};

const std::array<Criterion, 8> kSuiteCriteria = {{
    {1, "torus pair trichotomy", {"trichotomy"}},
    {2, "eta from Det(f) vs mu-vectors", {"eta-bridge"}},
    {3, "symplectic-model identities", {"symplectic-identities"}},
    {4, "Maslov index vs causal type", {"maslov-causal"}},
    {5, "photon lemma vs Lagrangian search", {"photon-lemma"}},
    {6, "crooked surface theorem vs sampled gaps", {"crooked-theorem"}},
    {7, "no stem-only intersections", {"stem-only"}},
    {8, "four inequalities, DGK and sixteen inequalities", {"dgk-equivalence", "ads-equivariance"}},
}};

std::string run_cli(const std::string& cli) {
    const std::string cmd = "\"" + cli + "\" verify --suite all --seed " + std::to_string(kSeed);
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::string run_in_process() {
    std::ostringstream os;
    for (const auto& s : suites::suite_list()) {
        const auto r = suites::run_suite(s.name, 0, kSeed);
        os << r.suite << " " << r.trial_count << " " << r.skipped << " " << r.failure_count << " ";
        os.precision(17);
        os << r.max_violation << "\n";
        for (const auto& f : r.failures) os << f << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    using clock = std::chrono::steady_clock;
    bool all = true;
    for (const auto& c : kSuiteCriteria) {
        std::ostringstream detail;
        bool pass = true;
        for (const char* name : c.suites) {
            const auto t0 = clock::now();
            const auto r = suites::run_suite(name, 0, kSeed);
            const double secs = std::chrono::duration<double>(clock::now() - t0).count();
            const bool in_time = secs < 60.0;
            pass = pass && r.passed() && in_time;
            char buf[256];
            std::snprintf(buf, sizeof buf, " [%s trials=%d skipped=%d failures=%d max_violation=%.3g tol=%.0e %.1fs%s]",
                          name, r.trial_count, r.skipped, r.failure_count, r.max_violation, r.tolerance, secs,
                          in_time ? "" : " TOO SLOW");
            detail << buf;
            for (const auto& f : r.failures) detail << "\n    " << f;
        }
        std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.title << detail.str()
                  << std::endl;
        all = all && pass;
    }

    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string a = cli.empty() ? run_in_process() : run_cli(cli);
    const std::string b = cli.empty() ? run_in_process() : run_cli(cli);
    const bool same = !a.empty() && a == b;
    std::cout << "criterion 9 " << (same ? "PASS" : "FAIL") << " verify --suite all --seed 7 is byte-identical ["
              << (cli.empty() ? "in-process" : "cli") << " runs, " << a.size() << " bytes]" << std::endl;
    all = all && same;
    return all ? 0 : 1;
}
