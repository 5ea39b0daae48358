#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzeta/bigrational.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i"; each part may be a decimal or "p/q".
Complex parse_complex(std::string_view text);

/// Real number given as a decimal or "p/q".
long double parse_real(std::string_view text);

/// Comma-separated nonnegative integers, e.g. "1,2,0".
std::vector<unsigned> parse_index_list(std::string_view text);

/// 17 significant digits.
std::string format_real(long double v, int digits = 17);

/// "a+bi" / "a-bi" with 17 significant digits per part.
std::string format_complex(const Complex& z, int digits = 17);

}  // namespace mzeta
