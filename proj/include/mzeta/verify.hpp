#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzeta/types.hpp"

namespace mzeta {

/// Ordered name=value pairs; the order is the identity's canonical parameter order.
using ParamList = std::vector<std::pair<std::string, std::string>>;

/// One verification outcome.
struct IdentityReport {
    std::string id;
    Variant variant = Variant::Corrected;
    ParamList params;
    std::string lhs;
    std::string rhs;
    bool exact = false;
    // Numeric residuals; NaN when a side could not be evaluated.
    double abs_err = 0;
    double rel_err = 0;
    double tol = 0;
    bool pass = false;
    double elapsed_ms = 0;
    std::string error;  // error name when evaluation raised, empty otherwise
};

/// Overrides for the default parameter grids. Unset fields keep the defaults.
struct GridSpec {
    std::optional<std::vector<Complex>> s_points;
    std::optional<std::vector<std::string>> x_points;  // decimals or p/q
    std::map<std::string, std::pair<unsigned, unsigned>> ranges;  // inclusive, e.g. "m" -> {0, 4}
    std::optional<double> tol;  // numeric identities only
};

struct IdentityInfo {
    std::string id;
    std::string statement;
    std::vector<Variant> variants;
    bool exact = false;
    double default_tol = 0;  // 0 for exact identities
};

/// Registered identities in canonical (id) order.
const std::vector<IdentityInfo>& identity_registry();

/// Throws Error(UnknownIdentity).
const IdentityInfo& identity_info(std::string_view id);

/// Single check at explicit parameters. Parameter names are those shown in reports.
/// Throws Error(InvalidArgument) for missing or malformed parameters.
IdentityReport run_identity(std::string_view id, Variant variant, const ParamList& params,
                            std::optional<double> tol = std::nullopt);

/// Parameter sets the default (or overridden) grid produces for one identity.
std::vector<ParamList> identity_grid(std::string_view id, const GridSpec& spec = {});

struct SuiteOptions {
    GridSpec grid;
    unsigned threads = 0;  // 0: hardware concurrency
    bool timing = true;    // false zeroes elapsed_ms
};

/// Every registered variant of every listed id over its grid, sorted by id, variant,
/// then grid order.
std::vector<IdentityReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options = {});

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t total = 0;
};
SuiteSummary summarize(const std::vector<IdentityReport>& reports);

/// "PASS p / FAIL f / TOTAL t"
std::string summary_line(const SuiteSummary& s);

std::string reports_to_json(const std::vector<IdentityReport>& reports);
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

/// Expected outcome per (id, variant): "pass" means every report passes, "fail" means
/// at least one fails. Pairs missing from the manifest must pass.
struct Manifest {
    std::map<std::pair<std::string, Variant>, bool> expect_pass;
};

Manifest parse_manifest(std::string_view json);
const Manifest& builtin_manifest();

/// Human-readable violations, empty when the reports match the manifest.
std::vector<std::string> check_manifest(const std::vector<IdentityReport>& reports, const Manifest& manifest);

}  // namespace mzeta
