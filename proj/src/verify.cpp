#include "mzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

#include "json.hpp"

#include "identities.hpp"
#include "mzeta/error.hpp"
#include "mzeta/manifest_data.hpp"

namespace mzeta {

namespace {

using detail::IdentityDef;

const IdentityDef& find_def(std::string_view id) {
    for (const auto& d : detail::identity_defs())
        if (d.info.id == id) return d;
    raise(ErrorKind::UnknownIdentity, "unknown identity '" + std::string(id) + "'");
}

std::optional<double> env_tol() {
    const char* v = std::getenv("MZETA_TOL");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const double t = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(t > 0)) return std::nullopt;
    return t;
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool numeric_pass(double abs_err, double rel_err, double rhs_mag, double tol) {
    if (std::isnan(abs_err)) return false;
    return rhs_mag < 1e-30 ? abs_err <= tol : rel_err <= tol;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& d : detail::identity_defs()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

const IdentityInfo& identity_info(std::string_view id) { return find_def(id).info; }

IdentityReport run_identity(std::string_view id, Variant variant, const ParamList& params, std::optional<double> tol) {
    const IdentityDef& def = find_def(id);
    if (std::find(def.info.variants.begin(), def.info.variants.end(), variant) == def.info.variants.end())
        raise(ErrorKind::InvalidArgument,
              std::string(id) + " has no " + std::string(variant_name(variant)) + " variant");

    IdentityReport r;
    r.id = def.info.id;
    r.variant = variant;
    r.params = params;
    r.exact = def.info.exact;
    r.tol = def.info.exact ? 0 : tol.value_or(env_tol().value_or(def.info.default_tol));

    const auto start = std::chrono::steady_clock::now();
    try {
        const detail::Outcome o = def.eval(detail::Params(params), variant);
        r.lhs = o.lhs;
        r.rhs = o.rhs;
        if (r.exact) {
            r.pass = o.equal;
        } else {
            const long double diff = std::abs(o.lhs_value - o.rhs_value);
            const long double mag = std::abs(o.rhs_value);
            r.abs_err = static_cast<double>(diff);
            r.rel_err = mag > 0    ? static_cast<double>(diff / mag)
                        : diff == 0 ? 0.0
                                    : std::numeric_limits<double>::infinity();
            if (!std::isfinite(o.lhs_value.real()) || !std::isfinite(o.lhs_value.imag()) ||
                !std::isfinite(o.rhs_value.real()) || !std::isfinite(o.rhs_value.imag()))
                r.abs_err = r.rel_err = kNan;
            r.pass = numeric_pass(r.abs_err, r.rel_err, static_cast<double>(mag), r.tol);
        }
    } catch (const Error& e) {
        // Bad parameters are the caller's problem; evaluation failures become data.
        if (e.kind() == ErrorKind::InvalidArgument) throw;
        r.error = std::string(error_name(e.kind()));
        r.lhs = r.rhs = r.error;
        r.abs_err = r.rel_err = kNan;
        r.pass = false;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<ParamList> identity_grid(std::string_view id, const GridSpec& spec) { return find_def(id).grid(spec); }

std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options) {
    struct Job {
        const IdentityDef* def;
        Variant variant;
        ParamList params;
    };
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Job> jobs;
    for (const auto& id : sorted) {
        const IdentityDef& def = find_def(id);
        const auto grid = def.grid(options.grid);
        std::vector<Variant> variants = def.info.variants;
        std::sort(variants.begin(), variants.end(),
                  [](Variant a, Variant b) { return variant_name(a) < variant_name(b); });
        for (Variant v : variants)
            for (const auto& p : grid) jobs.push_back({&def, v, p});
    }

    std::vector<IdentityReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            const Job& j = jobs[i];
            try {
                out[i] = run_identity(j.def->info.id, j.variant, j.params, options.grid.tol);
            } catch (const Error& e) {
                IdentityReport& r = out[i];
                r.id = j.def->info.id;
                r.variant = j.variant;
                r.params = j.params;
                r.exact = j.def->info.exact;
                r.error = std::string(error_name(e.kind()));
                r.lhs = r.rhs = r.error;
                r.abs_err = r.rel_err = kNan;
            }
            if (!options.timing) out[i].elapsed_ms = 0;
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
    SuiteSummary s;
    for (const auto& r : reports) (r.pass ? s.pass : s.fail)++;
    s.total = reports.size();
    return s;
}

std::string summary_line(const SuiteSummary& s) {
    return "PASS " + std::to_string(s.pass) + " / FAIL " + std::to_string(s.fail) + " / TOTAL " + std::to_string(s.total);
}

Manifest parse_manifest(std::string_view text) {
    Manifest m;
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto& e : j.at("expectations")) {
            const auto variant = e.at("variant").get<std::string>();
            Variant v;
            if (variant == "as-printed")
                v = Variant::AsPrinted;
            else if (variant == "corrected")
                v = Variant::Corrected;
            else
                raise(ErrorKind::InvalidArgument, "manifest: bad variant '" + variant + "'");
            const auto expect = e.at("expect").get<std::string>();
            if (expect != "pass" && expect != "fail") raise(ErrorKind::InvalidArgument, "manifest: bad expect '" + expect + "'");
            m.expect_pass[{e.at("id").get<std::string>(), v}] = expect == "pass";
        }
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument, std::string("manifest: ") + e.what());
    }
    return m;
}

const Manifest& builtin_manifest() {
    static const Manifest m = parse_manifest(detail::kBuiltinManifest);
    return m;
}

std::vector<std::string> check_manifest(const std::vector<IdentityReport>& reports, const Manifest& manifest) {
    std::map<std::pair<std::string, Variant>, std::pair<std::size_t, std::size_t>> seen;  // pass, total
    for (const auto& r : reports) {
        auto& c = seen[{r.id, r.variant}];
        c.first += r.pass;
        ++c.second;
    }
    std::vector<std::string> violations;
    for (const auto& [key, counts] : seen) {
        const auto it = manifest.expect_pass.find(key);
        const bool expect_pass = it == manifest.expect_pass.end() || it->second;
        const bool all_pass = counts.first == counts.second;
        if (expect_pass == all_pass) continue;
        violations.push_back(key.first + " " + std::string(variant_name(key.second)) + ": expected " +
                             (expect_pass ? "all to pass" : "a failure") + ", got " + std::to_string(counts.first) + "/" +
                             std::to_string(counts.second) + " passing");
    }
    return violations;
}

}  // namespace mzeta
