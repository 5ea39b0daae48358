#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzeta {

enum class ErrorKind {
    InvalidArgument,
    Pole,
    Domain,
    DivergentRegion,
    QuadratureFailure,
    UnknownIdentity,
};

/// Stable lower-case name used on the CLI diagnostic stream ("pole", "domain", ...).
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mzeta
