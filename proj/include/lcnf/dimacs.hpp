#pragma once

#include "lcnf/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcnf {

class parse_error : public std::runtime_error
{
public:
    parse_error(std::size_t line, const std::string& what);

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct DimacsDocument
{
    std::uint32_t declared_vars = 0;
    std::size_t declared_clauses = 0;
    /// Comment lines without the leading "c ".
    std::vector<std::string> comments;
    Formula body;

    /// "key=value" comments, in order of appearance.
    [[nodiscard]] Metadata metadata() const;
};

/// Standard DIMACS CNF. In strict mode literals above the declared variable
/// count and clause-count mismatches are errors.
[[nodiscard]] DimacsDocument parse_dimacs(std::istream& in, bool strict = true);
[[nodiscard]] DimacsDocument parse_dimacs_text(const std::string& text, bool strict = true);

/// Canonical clause order, metadata as leading "c key=value" lines, and a
/// header whose variable count is the largest variable id.
void emit_dimacs(std::ostream& out, const Formula& f, const Metadata& meta = {});
[[nodiscard]] std::string emit_dimacs(const Formula& f, const Metadata& meta = {});

} // namespace lcnf
