// extern "C" surface over the C++ core.
#include "mzeta.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "mzeta/bernoulli.hpp"
#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/parse.hpp"
#include "mzeta/verify.hpp"
#include "mzeta/zeta_ops.hpp"

struct mzeta_value {
    std::string text;
    bool exact = false;
    mzeta::Complex value = 0;
    double tolerance = 0;
};

struct mzeta_suite {
    std::vector<std::string> ids;
    mzeta::SuiteOptions options;
    std::vector<mzeta::IdentityReport> reports;
};

namespace {

using namespace mzeta;

thread_local std::string g_last_error;

mzeta_status to_status(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return MZETA_INVALID_ARGUMENT;
        case ErrorKind::Pole: return MZETA_POLE;
        case ErrorKind::Domain: return MZETA_DOMAIN;
        case ErrorKind::DivergentRegion: return MZETA_DIVERGENT_REGION;
        case ErrorKind::QuadratureFailure: return MZETA_QUADRATURE_FAILURE;
        case ErrorKind::UnknownIdentity: return MZETA_UNKNOWN_IDENTITY;
    }
    return MZETA_INTERNAL;
}

mzeta_status fail(mzeta_status s, const std::string& what) {
    g_last_error = what;
    return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
mzeta_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MZETA_OK;
    } catch (const Error& e) {
        return fail(to_status(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MZETA_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MZETA_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) raise(ErrorKind::InvalidArgument, what);
}

class Args {
public:
    Args(const char* const* keys, const char* const* values, std::size_t n) {
        require(n == 0 || (keys && values), "null key/value arrays");
        for (std::size_t i = 0; i < n; ++i) {
            require(keys[i] && values[i], "null key or value");
            require(map_.emplace(keys[i], values[i]).second, std::string("duplicate key '") + keys[i] + "'");
        }
    }

    // Rejects keys outside the allowed set.
    void allow(std::initializer_list<const char*> names) const {
        for (const auto& [k, v] : map_) {
            bool known = false;
            for (const char* n : names) known = known || k == n;
            require(known, "unknown key '" + k + "'");
        }
    }

    bool has(const std::string& k) const { return map_.count(k) != 0; }

    const std::string& get(const std::string& k) const {
        const auto it = map_.find(k);
        require(it != map_.end(), "missing key '" + k + "'");
        return it->second;
    }

    unsigned uint(const std::string& k, unsigned max = 100000) const {
        const BigInt v = BigInt::from_string(get(k));
        require(v.sign() >= 0 && v <= BigInt(max), "'" + k + "' out of range");
        return static_cast<unsigned>(v.raw().get_ui());
    }

    std::vector<std::pair<std::string, std::string>> list() const { return {map_.begin(), map_.end()}; }

private:
    std::map<std::string, std::string> map_;
};

std::string numeric_text(Complex z) { return z.imag() == 0 ? format_real(z.real()) : format_complex(z); }

mzeta_value* exact_value(const BigRational& q) {
    auto* v = new mzeta_value;
    v->text = q.to_string();
    v->exact = true;
    v->value = q.to_long_double();
    return v;
}

mzeta_value* poly_value(const RationalPoly& p) {
    auto* v = new mzeta_value;
    v->text = p.to_json();
    v->exact = true;
    return v;
}

mzeta_value* numeric_value(Complex z, long double bound) {
    auto* v = new mzeta_value;
    v->text = numeric_text(z);
    v->value = z;
    v->tolerance = static_cast<double>(bound);
    return v;
}

ZetaRoute parse_route(const Args& a) {
    if (!a.has("route")) return ZetaRoute::Auto;
    const std::string& r = a.get("route");
    if (r == "auto") return ZetaRoute::Auto;
    if (r == "series") return ZetaRoute::Series;
    if (r == "reduction") return ZetaRoute::Reduction;
    raise(ErrorKind::InvalidArgument, "unknown route '" + r + "'");
}

mzeta_value* compute(const std::string& target, const Args& a) {
    if (target == "bernoulli") {
        a.allow({"n"});
        return exact_value(bernoulli_number(a.uint("n", 5000)));
    }
    if (target == "bernoulli-poly") {
        a.allow({"n", "x"});
        const RationalPoly p = bernoulli_poly(a.uint("n", 2000));
        return a.has("x") ? exact_value(p(BigRational::from_string(a.get("x")))) : poly_value(p);
    }
    if (target == "norlund") {
        a.allow({"m", "order", "x"});
        const unsigned m = a.uint("m", 1000), order = a.uint("order", 1000);
        if (!a.has("x")) return poly_value(norlund_poly(m, order));
        return exact_value(norlund_poly(m, order)(BigRational::from_string(a.get("x"))));
    }
    if (target == "stirling1" || target == "stirling2") {
        a.allow({"n", "k"});
        const unsigned n = a.uint("n", 5000), k = a.uint("k", 5000);
        return exact_value(BigRational(target == "stirling1" ? stirling1_unsigned(n, k) : stirling2(n, k)));
    }
    if (target == "hurwitz") {
        a.allow({"s", "x", "N", "J"});
        EvalParams p;
        if (a.has("N")) p.N = a.uint("N", 1U << 24);
        if (a.has("J")) p.J = a.uint("J", 1000);
        const Evaluation e = hurwitz_zeta_eval(parse_complex(a.get("s")), parse_real(a.get("x")), p);
        return numeric_value(e.value, e.error_bound);
    }
    if (target == "multizeta") {
        a.allow({"n", "s", "x", "route"});
        const unsigned n = a.uint("n", 1000);
        require(n > 0, "n must be positive");
        const Evaluation e = multi_zeta_eval(n, parse_complex(a.get("s")), parse_real(a.get("x")), parse_route(a));
        return numeric_value(e.value, e.error_bound);
    }
    if (target == "zhat") {
        a.allow({"m", "s", "x"});
        const std::vector<unsigned> ms{a.uint("m", 1000)};
        const Evaluation e = Z_multi_eval(ms, parse_complex(a.get("s")), parse_real(a.get("x")), ZetaRoute::Auto);
        return numeric_value(e.value, e.error_bound);
    }
    if (target == "zmulti") {
        a.allow({"ms", "s", "x", "route"});
        const std::vector<unsigned> ms = parse_index_list(a.get("ms"));
        const Complex s = parse_complex(a.get("s"));
        const long double x = parse_real(a.get("x"));
        if (a.has("route") && a.get("route") == "quadrature") {
            require(s.imag() == 0, "quadrature needs real s");
            const QuadratureResult q = Z_multi_quadrature(ms, s.real(), x);
            return numeric_value(q.value, q.error_estimate);
        }
        const Evaluation e = Z_multi_eval(ms, s, x, parse_route(a));
        return numeric_value(e.value, e.error_bound);
    }
    if (target == "umbral") {
        a.allow({"ms", "n", "x", "form"});
        const std::vector<unsigned> ms = parse_index_list(a.get("ms"));
        const unsigned n = a.uint("n", 200);
        const std::string form = a.has("form") ? a.get("form") : "plain";
        require(form == "plain" || form == "shifted", "form must be plain or shifted");
        const RationalPoly p = form == "plain" ? umbral_power(ms, n) : shifted_umbral_power(ms, n);
        return a.has("x") ? exact_value(p(BigRational::from_string(a.get("x")))) : poly_value(p);
    }
    raise(ErrorKind::InvalidArgument, "unknown target '" + target + "'");
}

Variant parse_variant(const char* v) {
    require(v != nullptr, "null variant");
    if (std::strcmp(v, "as-printed") == 0) return Variant::AsPrinted;
    if (std::strcmp(v, "corrected") == 0) return Variant::Corrected;
    raise(ErrorKind::InvalidArgument, std::string("unknown variant '") + v + "'");
}

std::string table_csv(const std::string& kind, unsigned max_n, unsigned order) {
    require(max_n <= 1000, "max-n must be at most 1000");
    std::ostringstream os;
    if (kind == "stirling1" || kind == "stirling2") {
        os << "n";
        for (unsigned k = 0; k <= max_n; ++k) os << ",k=" << k;
        os << '\n';
        for (unsigned n = 0; n <= max_n; ++n) {
            os << n;
            for (unsigned k = 0; k <= n; ++k) os << ',' << (kind == "stirling1" ? stirling1_unsigned(n, k) : stirling2(n, k));
            os << '\n';
        }
    } else if (kind == "bernoulli") {
        os << "n,B_n\n";
        for (unsigned n = 0; n <= max_n; ++n) os << n << ',' << bernoulli_number(n).to_string() << '\n';
    } else if (kind == "norlund") {
        require(order <= 1000, "order must be at most 1000");
        os << "n,B_n^(" << order << ")\n";
        for (unsigned n = 0; n <= max_n; ++n) os << n << ',' << norlund_number(n, order).to_string() << '\n';
    } else {
        raise(ErrorKind::InvalidArgument, "unknown table kind '" + kind + "'");
    }
    return os.str();
}

const std::vector<std::string>& variant_lists() {
    static const std::vector<std::string> lists = [] {
        std::vector<std::string> v;
        for (const auto& info : identity_registry()) {
            std::string s;
            for (Variant var : info.variants) s += (s.empty() ? "" : ",") + std::string(variant_name(var));
            v.push_back(s);
        }
        return v;
    }();
    return lists;
}

}  // namespace

extern "C" {

const char* mzeta_status_name(mzeta_status status) {
    switch (status) {
        case MZETA_OK: return "ok";
        case MZETA_INVALID_ARGUMENT: return "invalid-argument";
        case MZETA_POLE: return "pole";
        case MZETA_DOMAIN: return "domain";
        case MZETA_DIVERGENT_REGION: return "divergent-region";
        case MZETA_QUADRATURE_FAILURE: return "quadrature-failure";
        case MZETA_UNKNOWN_IDENTITY: return "unknown-identity";
        case MZETA_IO: return "io";
        case MZETA_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* mzeta_last_error(void) { return g_last_error.c_str(); }

const char* mzeta_version(void) { return "0.1.0"; }

void mzeta_string_free(char* s) { std::free(s); }

mzeta_status mzeta_compute(const char* target, const char* const* keys, const char* const* values, size_t count,
                           mzeta_value** out) {
    if (!target || !out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = compute(target, Args(keys, values, count)); });
}

const char* mzeta_value_text(const mzeta_value* v) { return v ? v->text.c_str() : ""; }
int mzeta_value_is_exact(const mzeta_value* v) { return v && v->exact ? 1 : 0; }
double mzeta_value_real(const mzeta_value* v) { return v ? static_cast<double>(v->value.real()) : 0.0; }
double mzeta_value_imag(const mzeta_value* v) { return v ? static_cast<double>(v->value.imag()) : 0.0; }
double mzeta_value_tolerance(const mzeta_value* v) { return v ? v->tolerance : 0.0; }
void mzeta_value_free(mzeta_value* v) { delete v; }

size_t mzeta_identity_count(void) { return identity_registry().size(); }

const char* mzeta_identity_id(size_t index) {
    const auto& r = identity_registry();
    return index < r.size() ? r[index].id.c_str() : nullptr;
}

const char* mzeta_identity_statement(size_t index) {
    const auto& r = identity_registry();
    return index < r.size() ? r[index].statement.c_str() : nullptr;
}

const char* mzeta_identity_variants(size_t index) {
    const auto& v = variant_lists();
    return index < v.size() ? v[index].c_str() : nullptr;
}

mzeta_status mzeta_run_identity(const char* id, const char* variant, const char* const* keys, const char* const* values,
                                size_t count, char** report_json) {
    if (!id || !report_json) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    *report_json = nullptr;
    return guarded([&] {
        const Args args(keys, values, count);
        ParamList params;
        const ParamList canonical = [&] {
            // Keep the grid's parameter order when the id has one.
            const auto grid = identity_grid(id);
            return grid.empty() ? ParamList{} : grid.front();
        }();
        for (const auto& [k, v] : canonical)
            if (args.has(k)) params.emplace_back(k, args.get(k));
        for (const auto& kv : args.list())
            if (std::find(params.begin(), params.end(), kv) == params.end()) params.push_back(kv);
        *report_json = dup(reports_to_json({run_identity(id, parse_variant(variant), params)}));
    });
}

mzeta_status mzeta_suite_create(mzeta_suite** out) {
    if (!out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new mzeta_suite; });
}

void mzeta_suite_free(mzeta_suite* suite) { delete suite; }

mzeta_status mzeta_suite_add_identity(mzeta_suite* suite, const char* id) {
    if (!suite || !id) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        identity_info(id);
        suite->ids.emplace_back(id);
    });
}

mzeta_status mzeta_suite_add_all(mzeta_suite* suite) {
    if (!suite) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        for (const auto& info : identity_registry()) suite->ids.push_back(info.id);
    });
}

mzeta_status mzeta_suite_set_tolerance(mzeta_suite* suite, double tol) {
    if (!suite) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    if (tol > 0)
        suite->options.grid.tol = tol;
    else
        suite->options.grid.tol.reset();
    return MZETA_OK;
}

mzeta_status mzeta_suite_set_timing(mzeta_suite* suite, int enabled) {
    if (!suite) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    suite->options.timing = enabled != 0;
    return MZETA_OK;
}

mzeta_status mzeta_suite_set_threads(mzeta_suite* suite, unsigned threads) {
    if (!suite) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    suite->options.threads = threads;
    return MZETA_OK;
}

mzeta_status mzeta_suite_set_s_points(mzeta_suite* suite, const char* const* points, size_t count) {
    if (!suite || (count && !points)) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<Complex> s;
        for (size_t i = 0; i < count; ++i) {
            require(points[i] != nullptr, "null s point");
            s.push_back(parse_complex(points[i]));
        }
        suite->options.grid.s_points = std::move(s);
    });
}

mzeta_status mzeta_suite_set_x_points(mzeta_suite* suite, const char* const* points, size_t count) {
    if (!suite || (count && !points)) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::string> x;
        for (size_t i = 0; i < count; ++i) {
            require(points[i] != nullptr, "null x point");
            require(parse_real(points[i]) > 0 || BigRational::from_string(points[i]).is_zero(), "x must be >= 0");
            x.emplace_back(points[i]);
        }
        suite->options.grid.x_points = std::move(x);
    });
}

mzeta_status mzeta_suite_set_range(mzeta_suite* suite, const char* name, unsigned lo, unsigned hi) {
    if (!suite || !name || !*name) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    if (lo > hi) return fail(MZETA_INVALID_ARGUMENT, "empty range");
    suite->options.grid.ranges[name] = {lo, hi};
    return MZETA_OK;
}

mzeta_status mzeta_suite_run(mzeta_suite* suite) {
    if (!suite) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] { suite->reports = run_suite(suite->ids, suite->options); });
}

size_t mzeta_suite_pass_count(const mzeta_suite* suite) { return suite ? summarize(suite->reports).pass : 0; }
size_t mzeta_suite_fail_count(const mzeta_suite* suite) { return suite ? summarize(suite->reports).fail : 0; }
size_t mzeta_suite_total(const mzeta_suite* suite) { return suite ? suite->reports.size() : 0; }

mzeta_status mzeta_suite_to_json(const mzeta_suite* suite, char** out) {
    if (!suite || !out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(reports_to_json(suite->reports)); });
}

mzeta_status mzeta_suite_to_csv(const mzeta_suite* suite, char** out) {
    if (!suite || !out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(reports_to_csv(suite->reports)); });
}

mzeta_status mzeta_suite_summary(const mzeta_suite* suite, char** out) {
    if (!suite || !out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(summary_line(summarize(suite->reports))); });
}

mzeta_status mzeta_suite_check_manifest(const mzeta_suite* suite, const char* manifest_json, int* ok, char** violations) {
    if (!suite || !ok || !violations) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    *violations = nullptr;
    return guarded([&] {
        const Manifest m = manifest_json ? parse_manifest(manifest_json) : builtin_manifest();
        const auto v = check_manifest(suite->reports, m);
        std::string text;
        for (const auto& line : v) text += line + "\n";
        *ok = v.empty() ? 1 : 0;
        *violations = dup(text);
    });
}

mzeta_status mzeta_table_csv(const char* kind, unsigned max_n, unsigned order, char** out) {
    if (!kind || !out) return fail(MZETA_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = dup(table_csv(kind, max_n, order)); });
}

}  // extern "C"
