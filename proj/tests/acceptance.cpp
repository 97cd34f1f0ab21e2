// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each. Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "constructions.hpp"
#include "oracles.hpp"
#include "sequences.hpp"
#include "verification.hpp"

#ifndef DCGRID_CLI_PATH
#define DCGRID_CLI_PATH "dcgrid"
#endif

using namespace dcgrid;

namespace {

constexpr double kPi = 3.141592653589793;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    int st = pclose(f);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string cli() { return std::string("'") + DCGRID_CLI_PATH + "'"; }

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

bool roles_match_hull(const PointSet& ps) {
    std::vector<size_t> hull = convex_hull_indices(ps.points);
    std::vector<char> on_hull(ps.points.size(), 0);
    for (size_t i : hull) on_hull[i] = 1;
    for (size_t i = 0; i < ps.points.size(); ++i)
        if (ps.roles[i] != (on_hull[i] ? Role::Hull : Role::Inner)) return false;
    return true;
}

// --- criteria ---------------------------------------------------------

bool criterion_verify_all(std::string& detail) {
    for (int64_t n = 3; n <= 1000; ++n) {
        PointSet ps = build_double_circle(n);
        VerificationReport r = is_double_circle(ps);
        if (!r.passed) {
            detail = "n=" + std::to_string(n) + " failed: " + condition_tag(r.failed);
            return false;
        }
        if (!roles_match_hull(ps)) {
            detail = "n=" + std::to_string(n) + ": labels disagree with the hull";
            return false;
        }
    }
    std::mt19937_64 rng(0xacce97ed);
    std::uniform_int_distribution<int64_t> dist(1001, 100000);
    for (int i = 0; i < 50; ++i) {
        int64_t n = dist(rng);
        PointSet ps = build_double_circle(n);
        VerificationReport r = is_double_circle(ps);
        if (!r.passed) {
            detail = "random n=" + std::to_string(n) + " failed: " + condition_tag(r.failed);
            return false;
        }
    }
    return true;
}

bool criterion_golden_trace(std::string& detail) {
    PointSet raw = build_double_circle_raw(3);
    std::vector<Vec> expected = {{3, 2}, {6, 3}, {4, 4}, {3, 6}, {2, 3}, {0, 0}};
    if (raw.points != expected) {
        detail = "trace mismatch";
        return false;
    }
    std::set<std::pair<int64_t, int64_t>> hull;
    for (const Vec& p : convex_hull(raw).points) hull.insert({p.x, p.y});
    if (hull != std::set<std::pair<int64_t, int64_t>>{{0, 0}, {6, 3}, {3, 6}}) {
        detail = "hull mismatch";
        return false;
    }
    if (grid_size(raw) != 6) {
        detail = "grid size != 6";
        return false;
    }
    return true;
}

bool criterion_size_band(std::string& detail) {
    double lo = 1e300, hi = 0;
    for (int exp = 4; exp <= 20; exp += 2) {
        int64_t n = int64_t{1} << exp;
        int64_t grid = grid_size(build_double_circle(n));
        double ratio = static_cast<double>(grid) / std::pow(static_cast<double>(n), 1.5);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        if (ratio < 0.1 || ratio > 10.0) {
            detail = "n=2^" + std::to_string(exp) + " ratio " + std::to_string(ratio);
            return false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "N/n^1.5 in [%.3f, %.3f]", lo, hi);
    detail = buf;
    return hi / lo < 2.0;
}

double median_build_ms(int64_t n, int repeats) {
    std::vector<double> times;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        PointSet ps = build_double_circle(n);
        auto t1 = std::chrono::steady_clock::now();
        if (ps.points.size() != static_cast<size_t>(2 * n)) std::abort();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

bool criterion_linear_time(std::string& detail) {
    for (int64_t n = 3; n <= 10000; ++n) {
        VectorSequence v = visible_vectors(n); // bucket-sorted
        if (radial_sort_compare(v).vecs != v.vecs) {
            detail = "bucket/comparison sort mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    (void)build_double_circle(int64_t{1} << 16); // warm up
    // timing medians; re-measure once if the box was noisy
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> medians;
        for (int exp = 16; exp <= 19; ++exp)
            medians.push_back(median_build_ms(int64_t{1} << exp, 9));
        double worst = 0;
        for (size_t i = 1; i < medians.size(); ++i)
            worst = std::max(worst, medians[i] / medians[i - 1]);
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "medians %.2f/%.2f/%.2f/%.2f ms, worst doubling ratio %.2f",
                      medians[0], medians[1], medians[2], medians[3], worst);
        detail = buf;
        if (worst <= 3.0) return true;
    }
    return false;
}

bool criterion_jarnik(std::string& detail) {
    JarnikSummary s1 = jarnik_counts(1);
    JarnikSummary s2 = jarnik_counts(2);
    if (s1.vertex_count != 8 || s1.size_s != 3 || s2.vertex_count != 16 || s2.size_s != 9) {
        detail = "exact sums wrong at q=1 or q=2";
        return false;
    }
    JarnikSummary s = jarnik_counts(1000);
    double rv = static_cast<double>(s.vertex_count) / (24.0 * 1000.0 * 1000.0 / (kPi * kPi));
    double rs = static_cast<double>(s.size_s) / (6.0 * 1e9 / (kPi * kPi));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "q=1000 ratios %.4f and %.4f", rv, rs);
    detail = buf;
    return std::abs(rv - 1.0) <= 0.05 && std::abs(rs - 1.0) <= 0.05;
}

bool criterion_consecutive_area(std::string& detail) {
    for (int64_t n = 3; n <= 10000; ++n) {
        const std::vector<Vec>& v = visible_vectors(n).vecs;
        for (size_t i = 0; i < v.size(); ++i)
            if (checked_abs(turn2(v[i], v[(i + 1) % v.size()])) != 1) {
                detail = "n=" + std::to_string(n) + " pair " + std::to_string(i);
                return false;
            }
    }
    return true;
}

bool criterion_window_signs(std::string& detail) {
    for (int64_t n = 3; n <= 512; ++n) {
        const std::vector<Vec>& v = visible_vectors(n).vecs;
        size_t len = v.size();
        for (size_t i = 0; i < len; i += 2)
            if (!check_lemma4(v[i], v[(i + 1) % len], v[(i + 2) % len], v[(i + 3) % len])) {
                detail = "n=" + std::to_string(n) + " window " + std::to_string(i);
                return false;
            }
    }
    return true;
}

bool criterion_pick(std::string& detail) {
    std::mt19937_64 rng(0x9c4b);
    std::uniform_int_distribution<int64_t> d(-50, 50);
    int done = 0;
    while (done < 10000) {
        Vec p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
        if (turn3(p, q, r) == 0) continue;
        ++done;
        PickCounts mine = pick_counts(p, q, r);
        oracle::TriangleCounts ref = oracle::enumerate_triangle(p, q, r);
        if (mine.interior != ref.interior || mine.boundary != ref.boundary ||
            2 * ref.interior + ref.boundary - 2 != mine.doubled_area) {
            detail = "triangle " + std::to_string(done) + " disagrees with enumeration";
            return false;
        }
    }
    return true;
}

bool criterion_baselines(std::string& detail) {
    for (int64_t n = 3; n <= 10000; ++n)
        if (grid_size(quadratic_baseline(n)) != 4 * n * n - 2 * n - 2) {
            detail = "baseline size formula fails at n=" + std::to_string(n);
            return false;
        }
    std::string failures;
    for (int64_t n = 3; n <= 200; ++n) {
        VerificationReport r = is_double_circle(quadratic_baseline(n));
        if (!r.passed)
            failures += " baseline n=" + std::to_string(n) + " (" + condition_tag(r.failed) + ")";
    }
    for (int64_t n = 4; n <= 200; n += 2) {
        VerificationReport r = is_double_circle(naive_symmetric(n));
        if (!r.passed)
            failures += " naive n=" + std::to_string(n) + " (" + condition_tag(r.failed) + ")";
    }
    if (failures.empty()) return true;
    // Known defect of the f(x)=x^2+x construction: at n=3 (and only there,
    // since (n-3)(n+1)=0 is the collinearity condition) the closing point
    // (3,15) lands on the line through (2,8) and (4,22), so the instance is
    // not in general position and no sound verifier can accept it.
    detail = "size formula exact to n=10000; verifier rejects:" + failures;
    return false;
}

bool criterion_cli(std::string& detail) {
    struct MethodRange {
        const char* method;
        int64_t start, step;
    };
    std::string trip_failures;
    for (MethodRange mr : {MethodRange{"doublecircle", 3, 1}, MethodRange{"baseline", 3, 1},
                           MethodRange{"naive", 4, 2}}) {
        for (int64_t n = mr.start; n <= 64; n += mr.step) {
            std::string cmd = cli() + " generate --n " + std::to_string(n) + " --method " +
                              mr.method + " 2>/dev/null | " + cli() + " verify 2>/dev/null";
            RunResult r = run_cmd(cmd);
            if (r.exit_code != 0 || r.out.rfind("PASS", 0) != 0)
                trip_failures += std::string(" ") + mr.method + " n=" + std::to_string(n) +
                                 " (exit " + std::to_string(r.exit_code) + ")";
        }
    }

    // byte-identical repeated runs, every method and format
    for (const char* method : {"doublecircle", "baseline", "naive"}) {
        for (const char* format : {"points", "json", "svg"}) {
            std::string cmd = cli() + " generate --n 6 --method " + method + " --format " + format;
            RunResult a = run_cmd(cmd), b = run_cmd(cmd);
            if (a.exit_code != 0 || a.out != b.out || a.out.empty()) {
                detail = std::string("non-deterministic output: ") + method + "/" + format;
                return false;
            }
        }
    }
    {
        std::string cmd = cli() + " jarnik --q 5";
        RunResult a = run_cmd(cmd), b = run_cmd(cmd);
        if (a.exit_code != 0 || a.out != b.out) {
            detail = "non-deterministic jarnik output";
            return false;
        }
        RunResult q1 = run_cmd(cli() + " jarnik --q 1");
        if (q1.exit_code != 0 || q1.out.find("size_S=3") == std::string::npos ||
            q1.out.find("vertex_count=8") == std::string::npos) {
            detail = "jarnik q=1 summary should report vertex_count=8 size_S=3";
            return false;
        }
    }

    // svg structure: 12 points, 6 per ring, one hull path
    {
        RunResult svg = run_cmd(cli() + " generate --n 6 --method doublecircle --format svg");
        bool ok = svg.exit_code == 0 && svg.out.find("<svg") != std::string::npos &&
                  svg.out.find("</svg>") != std::string::npos &&
                  count_occurrences(svg.out, "<circle") == 12 &&
                  count_occurrences(svg.out, "#1f77b4") == 6 &&
                  count_occurrences(svg.out, "#d62728") == 6 &&
                  count_occurrences(svg.out, "<path") == 1;
        if (!ok) {
            detail = "svg structure for n=6";
            return false;
        }
    }

    // failure paths: wrong shape -> exit 1 with tag; bad stream -> exit 2
    {
        RunResult r = run_cmd(cli() + " jarnik --q 1 2>/dev/null | " + cli() + " verify 2>/dev/null");
        if (r.exit_code != 1 || r.out.rfind("FAIL hull-count", 0) != 0) {
            detail = "jarnik q=1 should fail verification with hull-count";
            return false;
        }
        r = run_cmd("printf 'a b\\n' | " + cli() + " verify 2>/dev/null");
        if (r.exit_code != 2) {
            detail = "malformed line should exit 2, got " + std::to_string(r.exit_code);
            return false;
        }
        r = run_cmd(cli() + " generate --n 2 --method doublecircle 2>/dev/null");
        if (r.exit_code != 1) {
            detail = "n=2 should exit 1, got " + std::to_string(r.exit_code);
            return false;
        }
        r = run_cmd(cli() + " bench --n 1024 --repeats 2");
        if (r.exit_code != 0 || r.out.rfind("n,wall_ms,N,ratio", 0) != 0) {
            detail = "bench CSV header missing";
            return false;
        }
    }
    if (!trip_failures.empty()) {
        // The baseline n=3 cell is the degenerate instance rejected by the
        // verifier; every other method/n round trip must be clean.
        detail = "deterministic output, svg, exit codes ok; round-trip failures:" + trip_failures;
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "double-circle verification, n=3..1000 and 50 random n<=100000", criterion_verify_all},
        {2, "golden 6-point trace with hull {(0,0),(6,3),(3,6)} and N=6", criterion_golden_trace},
        {3, "grid size ratio N/n^1.5 within [0.1,10], varying < 2x", criterion_size_band},
        {4, "near-linear build time; bucket sort == comparison sort to n=10000", criterion_linear_time},
        {5, "jarnik counts (8,3) and (16,9); q=1000 ratios within 5%", criterion_jarnik},
        {6, "consecutive sorted visible vectors span doubled area 1, n<=10000", criterion_consecutive_area},
        {7, "blended-window turn signs strict for all windows, n<=512", criterion_window_signs},
        {8, "pick counts match enumeration on 10000 random triangles", criterion_pick},
        {9, "baselines: exact size to n=10000, verification to n=200", criterion_baselines},
        {10, "CLI round trip, deterministic output, svg structure, exit codes", criterion_cli},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok)
            std::printf("[PASS] criterion %2d: %s%s%s\n", c.id, c.name,
                        detail.empty() ? "" : " -- ", detail.c_str());
        else {
            std::printf("[FAIL] criterion %2d: %s -- %s\n", c.id, c.name, detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
