#include "mzeta/error.hpp"

namespace mzeta {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::DivergentRegion: return "divergent-region";
        case ErrorKind::QuadratureFailure: return "quadrature-failure";
        case ErrorKind::UnknownIdentity: return "unknown-identity";
    }
    return "unknown";
}

}  // namespace mzeta
