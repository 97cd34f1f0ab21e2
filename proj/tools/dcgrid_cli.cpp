// dcgrid command line: generate point sets, verify double circles, report
// Jarnik polygon statistics, and benchmark the O(n) construction.
//
// Exit codes: 0 success / verified, 1 domain or verification failure,
// 2 parse error (bad flags or malformed input stream).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcgrid.h"

namespace {

constexpr double kPi = 3.141592653589793;

struct SetHandle {
    dcg_point_set* p = nullptr;
    ~SetHandle() { dcg_point_set_free(p); }
    dcg_point_set* get() const { return p; }
};

struct StreamParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int report_error(const char* what, dcg_status st) {
    std::fprintf(stderr, "dcgrid: %s: %s\n", what, dcg_status_message(st));
    return 1;
}

std::string role_name(int role) {
    switch (role) {
        case DCG_ROLE_HULL: return "hull";
        case DCG_ROLE_INNER: return "inner";
        default: return "unlabeled";
    }
}

int64_t set_grid_size(const dcg_point_set* set) {
    int64_t n = 0;
    dcg_point_set_grid_size(set, &n);
    return n;
}

std::string render_points(const dcg_point_set* set, const std::string& header,
                          const std::string& summary) {
    std::string out;
    out += "# " + header + "\n";
    if (!summary.empty()) out += "# " + summary + "\n";
    int64_t count = dcg_point_set_size(set);
    char line[64];
    for (int64_t i = 0; i < count; ++i) {
        int64_t x = 0, y = 0;
        dcg_point_set_point(set, i, &x, &y);
        std::snprintf(line, sizeof(line), "%lld %lld\n", static_cast<long long>(x),
                      static_cast<long long>(y));
        out += line;
    }
    return out;
}

std::string render_json(const dcg_point_set* set, const std::string& method,
                        const nlohmann::ordered_json& extra) {
    nlohmann::ordered_json doc;
    doc["method"] = method;
    doc["n"] = dcg_point_set_size(set) / 2;
    doc["grid_size"] = set_grid_size(set);
    for (auto& [key, value] : extra.items()) doc[key] = value;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    int64_t count = dcg_point_set_size(set);
    for (int64_t i = 0; i < count; ++i) {
        int64_t x = 0, y = 0;
        dcg_point_set_point(set, i, &x, &y);
        nlohmann::ordered_json p;
        p["x"] = x;
        p["y"] = y;
        p["role"] = role_name(dcg_point_set_role(set, i));
        pts.push_back(std::move(p));
    }
    doc["points"] = std::move(pts);
    return doc.dump(2) + "\n";
}

// The y axis is flipped so the drawing matches the usual mathematical
// orientation (y up).
std::string render_svg(const dcg_point_set* set, double scale, const std::string& title) {
    int64_t grid = set_grid_size(set);
    int64_t margin = 1 + grid / 20;
    int64_t world = grid + 2 * margin;
    long pixels = std::lround(800.0 * scale);
    double radius = std::max(static_cast<double>(world) / 240.0, 0.35);
    double stroke = std::max(static_cast<double>(world) / 800.0, 0.1);

    auto ymap = [&](int64_t y) { return margin + (grid - y); };
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%ld\" height=\"%ld\" "
                  "viewBox=\"0 0 %lld %lld\">\n",
                  pixels, pixels, static_cast<long long>(world), static_cast<long long>(world));
    out += buf;
    out += "<title>" + title + "</title>\n";
    std::snprintf(buf, sizeof(buf), "<rect width=\"%lld\" height=\"%lld\" fill=\"white\"/>\n",
                  static_cast<long long>(world), static_cast<long long>(world));
    out += buf;

    int64_t count = dcg_point_set_size(set);
    std::string path;
    for (int64_t i = 0; i < count; ++i) {
        if (dcg_point_set_role(set, i) != DCG_ROLE_HULL) continue;
        int64_t x = 0, y = 0;
        dcg_point_set_point(set, i, &x, &y);
        std::snprintf(buf, sizeof(buf), "%s%lld %lld", path.empty() ? "M" : " L",
                      static_cast<long long>(margin + x), static_cast<long long>(ymap(y)));
        path += buf;
    }
    if (!path.empty()) {
        std::snprintf(buf, sizeof(buf),
                      "<path d=\"%s Z\" fill=\"none\" stroke=\"#888888\" stroke-width=\"%.3f\"/>\n",
                      path.c_str(), stroke);
        out += buf;
    }
    for (int64_t i = 0; i < count; ++i) {
        int64_t x = 0, y = 0;
        dcg_point_set_point(set, i, &x, &y);
        const char* fill = dcg_point_set_role(set, i) == DCG_ROLE_HULL ? "#1f77b4" : "#d62728";
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%lld\" cy=\"%lld\" r=\"%.3f\" fill=\"%s\"/>\n",
                      static_cast<long long>(margin + x), static_cast<long long>(ymap(y)), radius,
                      fill);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "dcgrid: cannot open %s for writing\n", out_path.c_str());
        return 1;
    }
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    return f ? 0 : 1;
}

// One point per line as "x y"; blank lines and #-comments are skipped.
std::vector<int64_t> parse_point_stream(std::istream& in) {
    std::vector<int64_t> coords;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        long long x = 0, y = 0;
        std::string tail;
        if (!(ls >> x >> y) || (ls >> tail))
            throw StreamParseError("line " + std::to_string(lineno) + ": expected \"x y\"");
        coords.push_back(x);
        coords.push_back(y);
    }
    return coords;
}

int cmd_generate(int64_t n, const std::string& method, const std::string& format,
                 const std::string& out_path, double scale) {
    SetHandle set;
    dcg_status st;
    if (method == "doublecircle")
        st = dcg_double_circle(n, &set.p);
    else if (method == "baseline")
        st = dcg_quadratic_baseline(n, &set.p);
    else
        st = dcg_naive_symmetric(n, &set.p);
    if (st != DCG_OK) return report_error(("generate --method " + method).c_str(), st);
    dcg_point_set_translate_to_grid(set.get());

    char header[128];
    std::snprintf(header, sizeof(header), "method=%s n=%lld N=%lld", method.c_str(),
                  static_cast<long long>(n), static_cast<long long>(set_grid_size(set.get())));
    std::string text;
    if (format == "points")
        text = render_points(set.get(), header, "");
    else if (format == "json")
        text = render_json(set.get(), method, {});
    else
        text = render_svg(set.get(), scale, std::string("dcgrid ") + header);
    return write_output(text, out_path);
}

int cmd_verify(const std::string& in_path) {
    std::vector<int64_t> coords;
    try {
        if (in_path.empty()) {
            coords = parse_point_stream(std::cin);
        } else {
            std::ifstream f(in_path);
            if (!f) {
                std::fprintf(stderr, "dcgrid: cannot open %s\n", in_path.c_str());
                return 2;
            }
            coords = parse_point_stream(f);
        }
    } catch (const StreamParseError& e) {
        std::fprintf(stderr, "dcgrid: parse error: %s\n", e.what());
        return 2;
    }

    SetHandle set;
    dcg_status st = dcg_point_set_create(coords.data(), static_cast<int64_t>(coords.size() / 2),
                                         &set.p);
    if (st != DCG_OK) return report_error("verify", st);

    dcg_verify_report report{};
    st = dcg_verify_double_circle(set.get(), &report);
    if (st != DCG_OK) return report_error("verify", st);
    if (report.passed) {
        std::printf("PASS n=%lld N=%lld\n", static_cast<long long>(dcg_point_set_size(set.get()) / 2),
                    static_cast<long long>(set_grid_size(set.get())));
        return 0;
    }
    std::printf("FAIL %s\n", dcg_condition_tag(report.failed_condition));
    std::fprintf(stderr, "dcgrid: verification failed (%s); witness points:",
                 dcg_condition_tag(report.failed_condition));
    for (int i = 0; i < 3 && report.witness[i] >= 0; ++i)
        std::fprintf(stderr, " %lld", static_cast<long long>(report.witness[i]));
    std::fprintf(stderr, "\n");
    return 1;
}

int cmd_jarnik(int64_t q, const std::string& format, const std::string& out_path, double scale) {
    dcg_jarnik_summary summary{};
    dcg_status st = dcg_jarnik_counts(q, &summary);
    if (st != DCG_OK) return report_error("jarnik", st);
    SetHandle set;
    st = dcg_jarnik_polygon(q, &set.p);
    if (st != DCG_OK) return report_error("jarnik", st);

    double qd = static_cast<double>(q);
    double ratio_vertices = static_cast<double>(summary.vertex_count) / (24.0 * qd * qd / (kPi * kPi));
    double ratio_size = static_cast<double>(summary.grid_size) / (6.0 * qd * qd * qd / (kPi * kPi));

    char header[128], stats[192];
    std::snprintf(header, sizeof(header), "method=jarnik q=%lld N=%lld",
                  static_cast<long long>(q), static_cast<long long>(set_grid_size(set.get())));
    std::snprintf(stats, sizeof(stats),
                  "vertex_count=%lld size_S=%lld ratio_vertex_count=%.6f ratio_size=%.6f",
                  static_cast<long long>(summary.vertex_count),
                  static_cast<long long>(summary.grid_size), ratio_vertices, ratio_size);

    std::string text;
    if (format == "points") {
        text = render_points(set.get(), header, stats);
    } else if (format == "json") {
        nlohmann::ordered_json extra;
        extra["q"] = q;
        extra["vertex_count"] = summary.vertex_count;
        extra["size_S"] = summary.grid_size;
        extra["ratio_vertex_count"] = ratio_vertices;
        extra["ratio_size"] = ratio_size;
        text = render_json(set.get(), "jarnik", extra);
    } else {
        text = render_svg(set.get(), scale, std::string("dcgrid ") + header);
    }
    return write_output(text, out_path);
}

int cmd_bench(std::vector<int64_t> sizes, int repeats, const std::string& out_path) {
    if (sizes.empty())
        sizes = {1 << 16, 1 << 17, 1 << 18, 1 << 19, 1 << 20};
    std::string text = "n,wall_ms,N,ratio\n";
    char line[128];
    for (int64_t n : sizes) {
        std::vector<double> times;
        int64_t grid = 0;
        for (int r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            SetHandle set;
            dcg_status st = dcg_double_circle(n, &set.p);
            auto t1 = std::chrono::steady_clock::now();
            if (st != DCG_OK) return report_error("bench", st);
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            dcg_point_set_grid_size(set.get(), &grid);
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        double ratio = static_cast<double>(grid) / std::pow(static_cast<double>(n), 1.5);
        std::snprintf(line, sizeof(line), "%lld,%.3f,%lld,%.6f\n", static_cast<long long>(n),
                      median, static_cast<long long>(grid), ratio);
        text += line;
    }
    return write_output(text, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double circles, Jarnik polygons, and exact verification on the integer grid"};
    app.require_subcommand(1);

    int64_t n = 0, q = 0;
    std::string method = "doublecircle", format = "points", out_path, in_path;
    double scale = 1.0;
    std::vector<int64_t> bench_sizes;
    int repeats = 5;

    CLI::App* generate = app.add_subcommand("generate", "Construct a point set and emit it");
    generate->add_option("--n", n, "Half the number of points (2n points total)")->required();
    generate->add_option("--method", method, "doublecircle | baseline | naive")
        ->check(CLI::IsMember({"doublecircle", "baseline", "naive"}));
    generate->add_option("--format", format, "points | json | svg")
        ->check(CLI::IsMember({"points", "json", "svg"}));
    generate->add_option("--out", out_path, "Write to file instead of stdout");
    generate->add_option("--scale", scale, "SVG canvas scale factor");

    CLI::App* verify = app.add_subcommand("verify", "Check a point stream for the double-circle conditions");
    verify->add_option("--in", in_path, "Read from file instead of stdin");

    CLI::App* jarnik = app.add_subcommand("jarnik", "Jarnik polygon vertices and exact statistics");
    jarnik->add_option("--q", q, "Chebyshev norm bound of the generating vectors")->required();
    jarnik->add_option("--format", format, "points | json | svg")
        ->check(CLI::IsMember({"points", "json", "svg"}));
    jarnik->add_option("--out", out_path, "Write to file instead of stdout");
    jarnik->add_option("--scale", scale, "SVG canvas scale factor");

    CLI::App* bench = app.add_subcommand("bench", "Time the double-circle construction (CSV)");
    bench->add_option("--n", bench_sizes, "Sizes to benchmark (repeatable)");
    bench->add_option("--repeats", repeats, "Runs per size; the median is reported")
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", out_path, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (generate->parsed()) return cmd_generate(n, method, format, out_path, scale);
    if (verify->parsed()) return cmd_verify(in_path);
    if (jarnik->parsed()) return cmd_jarnik(q, format, out_path, scale);
    return cmd_bench(bench_sizes, repeats, out_path);
}
