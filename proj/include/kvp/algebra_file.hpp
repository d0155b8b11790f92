#pragma once

// Text format for structure constants:
//
//   # comment
//   dim = 2
//   mu(1,2) = 1:1, 2:3/2     # mu(e1, e2) = e1 + 3/2 e2
//   mu(2,1) = 1:-1, 2:-3/2
//
// Indices are 1-based. Omitted entries are zero. `dim` must precede every
// entry and appear once; a slot (i, j, k) may be given only once.

#include <cstddef>
#include <string>
#include <string_view>

#include "kvp/algebra.hpp"
#include "kvp/errors.hpp"

namespace kvp {

class ParseError : public MalformedInput {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

BilinearStructure parse_algebra(std::string_view text);
BilinearStructure read_algebra_file(const std::string& path);

/// Canonical text; parse_algebra(print_algebra(mu)) == mu.
std::string print_algebra(const BilinearStructure& mu);

} // namespace kvp
