#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mzeta/bigrational.hpp"
#include "mzeta/verify.hpp"

namespace mzeta::detail {

/// Result of evaluating both sides of one identity instance.
struct Outcome {
    bool exact = false;
    std::string lhs;
    std::string rhs;
    bool equal = false;        // exact identities
    Complex lhs_value = 0;     // numeric identities
    Complex rhs_value = 0;
};

/// Typed access to a ParamList.
class Params {
public:
    explicit Params(const ParamList& p) : p_(p) {}
    const std::string& raw(const std::string& name) const;
    unsigned uint(const std::string& name) const;
    Complex complex(const std::string& name) const;
    long double real(const std::string& name) const;
    BigRational rational(const std::string& name) const;
    std::vector<unsigned> indices(const std::string& name) const;

private:
    const ParamList& p_;
};

struct IdentityDef {
    IdentityInfo info;
    std::function<std::vector<ParamList>(const GridSpec&)> grid;
    std::function<Outcome(const Params&, Variant)> eval;
};

const std::vector<IdentityDef>& identity_defs();

}  // namespace mzeta::detail
