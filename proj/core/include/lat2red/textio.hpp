#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lat2red/core.hpp"

namespace lat2red {

/// One basis per line: "a1 a2 b1 b2". Blank lines and lines starting with '#' yield nullopt;
/// anything else that is not exactly four integers throws precondition_error.
std::optional<Basis> parse_basis_line(std::string_view line);

std::string format_basis(const Basis& B);

/// Reads the next basis from a stream, skipping comments; counts consumed lines in *line_no.
std::optional<Basis> read_basis(std::istream& in, std::size_t* line_no = nullptr);

/// Parses "3/8", "0.375" or "1" exactly.
mpq_class parse_rational(std::string_view s);

}  // namespace lat2red
