#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fbkoszul.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Options {
    std::string command;
    std::string operad = "builtin:com";
    int bound = 4;
    std::string window;
    std::string suite;
    std::string objects;
    std::string object;
    std::string out;
    std::string csv;
    std::string cache;
    int workers = 1;
    bool stable = false;
    bool inject_fault = false;
    bool quiet = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "N", "a:b" (both factors) or "a:b,c:d" (sources, targets).
fbk_window parse_window(const std::string& text, int bound) {
    if (text.empty()) return {0, bound, 0, bound};
    std::smatch m;
    static const std::regex one(R"(^\s*(\d+)\s*$)");
    static const std::regex range(R"(^\s*(\d+)\s*:\s*(\d+)\s*$)");
    static const std::regex pair(R"(^\s*(\d+)\s*:\s*(\d+)\s*,\s*(\d+)\s*:\s*(\d+)\s*$)");
    if (std::regex_match(text, m, one)) {
        int n = std::stoi(m[1]);
        return {0, n, 0, n};
    }
    if (std::regex_match(text, m, range)) {
        int a = std::stoi(m[1]), b = std::stoi(m[2]);
        return {a, b, a, b};
    }
    if (std::regex_match(text, m, pair)) return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
    throw UsageError("cannot parse window '" + text + "' (expected N, a:b or a:b,c:d)");
}

json window_json(const fbk_window& w) { return {{"s", {w.s_lo, w.s_hi}}, {"t", {w.t_lo, w.t_hi}}}; }

std::string fnv_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

void progress_to_stderr(void* user, const char* line) {
    if (!*static_cast<bool*>(user)) std::fprintf(stderr, "[fbkoszul] %s\n", line);
}

std::string take(char* s) {
    std::string r = s ? s : "";
    fbk_string_free(s);
    return r;
}

// Flattens tables into object,s,t,degree,dim[,homology] rows.
std::string to_csv(const json& report) {
    std::ostringstream o;
    o << "object,s,t,degree,dim,homology\n";
    if (report.contains("tables"))
        for (const auto& [name, rows] : report["tables"].items())
            for (const auto& r : rows) {
                o << name << ',' << r["s"] << ',' << r["t"] << ',' << r["degree"] << ',' << r["dim"] << ',';
                if (r.contains("homology")) o << r["homology"];
                o << '\n';
            }
    if (report.contains("verdicts") && !report["verdicts"].empty()) {
        o << "\nverdict,pass,checked,failure\n";
        for (const auto& v : report["verdicts"]) {
            std::string f = v.value("failure", "");
            for (auto& c : f)
                if (c == '"') c = '\'';
            o << v["name"].get<std::string>() << ',' << (v["pass"].get<bool>() ? "true" : "false") << ','
              << v["checked"] << ",\"" << f << "\"\n";
        }
    }
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

int run(const Options& opt) {
    if (opt.bound < 0 || opt.bound > fbk_max_bound())
        throw UsageError("--bound must lie in [0, " + std::to_string(fbk_max_bound()) + "]");
    fbk_window w = parse_window(opt.window, opt.bound);
    if (w.s_lo > w.s_hi || w.t_lo > w.t_hi || w.s_hi > opt.bound || w.t_hi > opt.bound)
        throw UsageError("window exceeds the arity bound " + std::to_string(opt.bound));

    fbk_session* session = nullptr;
    char* err = nullptr;
    fbk_status st = fbk_session_open(opt.operad.c_str(), opt.bound, &session, &err);
    if (st != FBK_OK) {
        std::fprintf(stderr, "fbkoszul: %s: %s\n", fbk_status_string(st), take(err).c_str());
        return kExitError;
    }
    std::unique_ptr<fbk_session, void (*)(fbk_session*)> guard(session, fbk_session_close);
    bool quiet = opt.quiet;
    fbk_session_set_progress(session, progress_to_stderr, &quiet);

    json config{{"command", opt.command},
                {"operad", opt.operad},
                {"presentation_hash", fbk_session_presentation_hash(session)},
                {"bound", opt.bound},
                {"window", window_json(w)}};
    if (opt.command == "dims") config["objects"] = opt.objects.empty() ? "default" : opt.objects;
    if (opt.command == "verify") {
        config["suite"] = opt.suite;
        config["inject_fault"] = opt.inject_fault;
    }
    if (opt.command == "export") config["object"] = opt.object;

    // Content address: presentation and bound plus the rest of the request.
    json key = config;
    key.erase("operad");
    std::string cache_file;
    if (!opt.cache.empty()) {
        fs::create_directories(opt.cache);
        cache_file = (fs::path(opt.cache) / (fnv_hex(key.dump()) + ".json")).string();
    }

    auto t0 = std::chrono::steady_clock::now();
    json body;
    bool hit = false;
    if (!cache_file.empty() && fs::exists(cache_file)) {
        std::ifstream in(cache_file);
        json cached = json::parse(in, nullptr, false);
        if (!cached.is_discarded() && cached.value("key", json()) == key) {
            body = cached["body"];
            hit = true;
            if (!quiet) std::fprintf(stderr, "[fbkoszul] cache hit %s\n", cache_file.c_str());
        }
    }
    if (!hit) {
        char* out = nullptr;
        int all_pass = 1;
        if (opt.command == "dims")
            st = fbk_dims_json(session, opt.objects.empty() ? nullptr : opt.objects.c_str(), w, opt.workers, &out);
        else if (opt.command == "verify")
            st = fbk_verify_json(session, opt.suite.c_str(), w, opt.workers, opt.inject_fault, &all_pass, &out);
        else
            st = fbk_export_json(session, opt.object.c_str(), w, &out);
        if (st != FBK_OK) {
            std::fprintf(stderr, "fbkoszul: %s: %s\n", fbk_status_string(st), fbk_session_error(session));
            return kExitError;
        }
        body = json::parse(take(out));
        if (!cache_file.empty()) {
            json stored = body;
            stored.erase("timings");
            write_file(cache_file, json{{"key", key}, {"body", stored}}.dump());
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool pass = body.value("pass", true);
    json report{{"tool_version", fbk_version()},
                {"schema_version", fbk_report_schema()},
                {"config", config},
                {"tables", body.value("tables", json::object())},
                {"verdicts", body.value("verdicts", json::array())},
                {"characters", body.value("characters", json::array())},
                {"pass", pass}};
    if (opt.command == "export") report["export"] = body;
    if (!opt.stable) {
        json tm = body.value("timings", json::object());
        tm["total_seconds"] = seconds;
        tm["workers"] = opt.workers;
        tm["cache_hit"] = hit;
        report["timings"] = tm;
    }

    std::string text = report.dump(2) + "\n";
    if (opt.out.empty()) std::cout << text;
    else write_file(opt.out, text);
    if (!opt.csv.empty()) write_file(opt.csv, to_csv(report));
    if (!quiet) std::fprintf(stderr, "[fbkoszul] overall: %s\n", pass ? "pass" : "FAIL");
    return pass ? 0 : kExitFail;
}

std::string joined(const char* const* names) {
    std::string s;
    for (; *names; ++names) s += std::string(s.empty() ? "" : ", ") + *names;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koszul duality computations for linear categories over finite sets"};
    app.set_version_flag("--version", fbk_version());
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--operad", opt.operad, "builtin:com, builtin:lie, builtin:unit or a JSON presentation file")
            ->capture_default_str();
        sub->add_option("--bound", opt.bound, "arity bound N (at most " + std::to_string(fbk_max_bound()) + ")")
            ->capture_default_str();
        sub->add_option("--window", opt.window, "bidegree window: N, a:b or a:b,c:d (default [0,N]^2)");
        sub->add_option("--out", opt.out, "write the JSON report here instead of standard output");
        sub->add_option("--csv", opt.csv, "also write a flat CSV projection here");
        sub->add_option("--cache", opt.cache, "cache directory keyed by presentation hash, bound and request");
        sub->add_option("--workers", opt.workers, "worker threads over bidegrees")->check(CLI::Range(1, 256))
            ->capture_default_str();
        sub->add_flag("--stable-output", opt.stable, "omit timings so reports are byte-identical");
        sub->add_flag("--quiet", opt.quiet, "no progress on standard error");
    };

    auto* dims = app.add_subcommand("dims", "dimension tables of categories and complexes");
    common(dims);
    dims->add_option("--objects", opt.objects, "comma-separated objects: " + joined(fbk_object_names()));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("--suite", opt.suite, "one of: " + joined(fbk_suite_names()))->required();
    verify->add_flag("--inject-fault", opt.inject_fault, "corrupt one differential (negative control for invariants)");

    auto* exp = app.add_subcommand("export", "basis degrees and differential matrices of one object");
    common(exp);
    exp->add_option("--object", opt.object, "one of: " + joined(fbk_object_names()))->required();

    CLI11_PARSE(app, argc, argv);
    opt.command = dims->parsed() ? "dims" : verify->parsed() ? "verify" : "export";
    try {
        return run(opt);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "fbkoszul: %s\n", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fbkoszul: error: %s\n", e.what());
        return kExitError;
    }
}
