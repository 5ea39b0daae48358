// JSON and CSV serialization of identity reports.
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "mzeta/verify.hpp"

namespace mzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip form of a double.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json residual(const IdentityReport& r, double v) {
    if (r.exact && r.error.empty()) return "exact";
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return nullptr;
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_residual(const IdentityReport& r, double v) {
    if (r.exact && r.error.empty()) return "exact";
    if (!std::isfinite(v)) return "";
    return num(v);
}

}  // namespace

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        ordered_json j;
        j["id"] = r.id;
        j["variant"] = std::string(variant_name(r.variant));
        j["params"] = std::move(params);
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["absErr"] = residual(r, r.abs_err);
        j["relErr"] = residual(r, r.rel_err);
        j["tol"] = r.exact ? ordered_json("exact") : ordered_json(r.tol);
        j["pass"] = r.pass;
        j["elapsedMs"] = r.elapsed_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    os << "id,variant,params,lhs,rhs,absErr,relErr,tol,pass,elapsedMs\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
        os << csv_field(r.id) << ',' << variant_name(r.variant) << ',' << csv_field(params) << ',' << csv_field(r.lhs)
           << ',' << csv_field(r.rhs) << ',' << csv_residual(r, r.abs_err) << ',' << csv_residual(r, r.rel_err) << ','
           << (r.exact ? "exact" : num(r.tol)) << ',' << (r.pass ? "true" : "false") << ',' << num(r.elapsed_ms) << '\n';
    }
    return os.str();
}

}  // namespace mzeta
