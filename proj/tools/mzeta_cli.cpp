// Command-line front end. Talks to the library only through mzeta.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mzeta.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEval = 1;
constexpr int kExitUsage = 2;

struct Owned {
    char* p = nullptr;
    ~Owned() { mzeta_string_free(p); }
};

// Usage problems exit 2, evaluation failures exit 1; both name the error on stderr.
int report_status(mzeta_status st) {
    std::cerr << mzeta_status_name(st) << ": " << mzeta_last_error() << '\n';
    return st == MZETA_INVALID_ARGUMENT || st == MZETA_UNKNOWN_IDENTITY ? kExitUsage : kExitEval;
}

std::string fmt_tol(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
}

struct ComputeArgs {
    std::string target;
    std::map<std::string, std::string> kv;
};

int run_compute(const ComputeArgs& a) {
    std::vector<const char*> keys, values;
    for (const auto& [k, v] : a.kv) {
        keys.push_back(k.c_str());
        values.push_back(v.c_str());
    }
    mzeta_value* value = nullptr;
    const mzeta_status st = mzeta_compute(a.target.c_str(), keys.data(), values.data(), keys.size(), &value);
    if (st != MZETA_OK) return report_status(st);
    std::unique_ptr<mzeta_value, decltype(&mzeta_value_free)> guard(value, &mzeta_value_free);
    if (mzeta_value_is_exact(value))
        std::cout << mzeta_value_text(value) << '\n';
    else
        std::cout << mzeta_value_text(value) << " tol=" << fmt_tol(mzeta_value_tolerance(value)) << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::vector<std::string> ids;
    bool all = false;
    std::string format = "plain";
    std::string output;
    double tol = 0;
    std::vector<std::string> s_points, x_points, ranges;
    bool no_timing = false;
    unsigned threads = 0;
    std::string manifest;
};

int run_verify(const VerifyArgs& a) {
    if (a.ids.empty() && !a.all) {
        std::cerr << "invalid-argument: give --identity or --all\n";
        return kExitUsage;
    }
    mzeta_suite* raw = nullptr;
    if (mzeta_status st = mzeta_suite_create(&raw); st != MZETA_OK) return report_status(st);
    std::unique_ptr<mzeta_suite, decltype(&mzeta_suite_free)> suite(raw, &mzeta_suite_free);

    const auto check = [](mzeta_status st) { return st == MZETA_OK ? -1 : report_status(st); };
    int rc = -1;
    if (a.all) rc = check(mzeta_suite_add_all(raw));
    for (const auto& id : a.ids)
        if (rc < 0) rc = check(mzeta_suite_add_identity(raw, id.c_str()));
    if (rc < 0 && a.tol > 0) rc = check(mzeta_suite_set_tolerance(raw, a.tol));
    if (rc < 0) rc = check(mzeta_suite_set_timing(raw, a.no_timing ? 0 : 1));
    if (rc < 0) rc = check(mzeta_suite_set_threads(raw, a.threads));
    const auto c_strings = [](const std::vector<std::string>& v) {
        std::vector<const char*> out;
        for (const auto& s : v) out.push_back(s.c_str());
        return out;
    };
    if (rc < 0 && !a.s_points.empty()) {
        const auto pts = c_strings(a.s_points);
        rc = check(mzeta_suite_set_s_points(raw, pts.data(), pts.size()));
    }
    if (rc < 0 && !a.x_points.empty()) {
        const auto pts = c_strings(a.x_points);
        rc = check(mzeta_suite_set_x_points(raw, pts.data(), pts.size()));
    }
    for (const auto& r : a.ranges) {
        if (rc >= 0) break;
        // name=lo:hi or name=v
        const auto eq = r.find('=');
        unsigned lo = 0, hi = 0;
        char tail = 0;
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "invalid-argument: range must look like m=0:3\n";
            return kExitUsage;
        }
        const std::string spec = r.substr(eq + 1);
        if (std::sscanf(spec.c_str(), "%u:%u%c", &lo, &hi, &tail) != 2) {
            if (std::sscanf(spec.c_str(), "%u%c", &lo, &tail) != 1) {
                std::cerr << "invalid-argument: range must look like m=0:3\n";
                return kExitUsage;
            }
            hi = lo;
        }
        rc = check(mzeta_suite_set_range(raw, r.substr(0, eq).c_str(), lo, hi));
    }
    if (rc >= 0) return rc;

    std::string manifest_text;
    if (!a.manifest.empty()) {
        std::ifstream f(a.manifest, std::ios::binary);
        if (!f) {
            std::cerr << "io: cannot read " << a.manifest << '\n';
            return kExitUsage;
        }
        manifest_text.assign(std::istreambuf_iterator<char>(f), {});
    }

    if (mzeta_status st = mzeta_suite_run(raw); st != MZETA_OK) return report_status(st);

    Owned body, summary;
    mzeta_status st = MZETA_OK;
    if (a.format == "json")
        st = mzeta_suite_to_json(raw, &body.p);
    else if (a.format == "csv")
        st = mzeta_suite_to_csv(raw, &body.p);
    if (st == MZETA_OK) st = mzeta_suite_summary(raw, &summary.p);
    if (st != MZETA_OK) return report_status(st);

    std::string text;
    if (a.format == "plain") {
        // Plain: the summary line is the output; details go to json/csv.
        text = std::string(summary.p) + "\n";
    } else {
        text = body.p;
        std::cerr << summary.p << '\n';
    }
    if (!write_out(a.output, text)) {
        std::cerr << "io: cannot write " << (a.output.empty() ? "stdout" : a.output) << '\n';
        return kExitEval;
    }
    if (!a.output.empty() && a.format != "plain") std::cout << summary.p << '\n';

    int ok = 0;
    Owned violations;
    st = mzeta_suite_check_manifest(raw, manifest_text.empty() ? nullptr : manifest_text.c_str(), &ok, &violations.p);
    if (st != MZETA_OK) return report_status(st);
    if (!ok) std::cerr << "manifest mismatch:\n" << violations.p;
    return ok ? kExitOk : kExitEval;
}

struct TableArgs {
    std::string kind;
    unsigned max_n = 10;
    unsigned order = 1;
};

int run_table(const TableArgs& a) {
    Owned out;
    if (mzeta_status st = mzeta_table_csv(a.kind.c_str(), a.max_n, a.order, &out.p); st != MZETA_OK)
        return report_status(st);
    std::cout << out.p;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stirling, Bernoulli and Hurwitz-type zeta functions, with an identity checker"};
    app.set_version_flag("--version", std::string(mzeta_version()));
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Evaluate one function");
    c->add_option("target", compute.target,
                  "bernoulli | bernoulli-poly | norlund | stirling1 | stirling2 | hurwitz | multizeta | zhat | zmulti | umbral")
        ->required();
    static const std::vector<std::pair<std::string, std::string>> keys = {
        {"n", "index n"},        {"k", "index k"},          {"m", "index m"},
        {"order", "Noerlund order"}, {"s", "complex s: a, a+bi, a-bi"}, {"x", "x as decimal or p/q"},
        {"ms", "index vector, e.g. 1,2"}, {"N", "Euler-Maclaurin shift"}, {"J", "Euler-Maclaurin terms"},
        {"route", "auto | series | reduction | quadrature"}, {"form", "plain | shifted (umbral)"}};
    for (const auto& [k, help] : keys)
        c->add_option_function<std::string>("--" + k, [&compute, k = k](const std::string& v) { compute.kv[k] = v; }, help);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check identities over parameter grids");
    v->add_option("--identity", verify.ids, "Identity id (repeatable)");
    v->add_flag("--all", verify.all, "Every registered identity");
    v->add_option("--format", verify.format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    v->add_option("--output,-o", verify.output, "Write the report here instead of stdout");
    v->add_option("--tol", verify.tol, "Tolerance for numeric identities")->check(CLI::PositiveNumber);
    v->add_option("--s", verify.s_points, "Override s grid points (repeatable)");
    v->add_option("--x", verify.x_points, "Override x grid points (repeatable)");
    v->add_option("--range", verify.ranges, "Index range override, e.g. m=0:3 (repeatable)");
    v->add_flag("--no-timing", verify.no_timing, "Report elapsedMs as 0");
    v->add_option("--threads", verify.threads, "Worker threads, 0 = all cores");
    v->add_option("--manifest", verify.manifest, "Expected-outcome manifest (default: built in)");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Print a table as CSV");
    t->add_option("--kind", table.kind, "stirling1 | stirling2 | bernoulli | norlund")
        ->required()
        ->check(CLI::IsMember({"stirling1", "stirling2", "bernoulli", "norlund"}));
    t->add_option("--max-n", table.max_n, "Largest index")->check(CLI::Range(0, 1000));
    t->add_option("--order", table.order, "Noerlund order")->check(CLI::Range(0, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (c->parsed()) return run_compute(compute);
    if (v->parsed()) return run_verify(verify);
    return run_table(table);
}
