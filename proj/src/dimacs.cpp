#include "lcnf/dimacs.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace lcnf {

parse_error::parse_error(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line}
{
}

Metadata DimacsDocument::metadata() const
{
    Metadata out;
    for (const auto& c : comments)
        if (auto eq = c.find('='); eq != std::string::npos && eq > 0 && c.find(' ') > eq)
            out.emplace_back(c.substr(0, eq), c.substr(eq + 1));
    return out;
}

DimacsDocument parse_dimacs(std::istream& in, bool strict)
{
    DimacsDocument doc;
    bool have_header = false;
    std::vector<Clause> clauses;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;
    std::size_t raw_clauses = 0;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        if (line[start] == 'c') {
            auto text = line.substr(start + 1);
            if (!text.empty() && text.front() == ' ')
                text.erase(0, 1);
            doc.comments.push_back(std::move(text));
            continue;
        }
        if (line[start] == '%')
            break; // SATLIB end marker
        if (line[start] == 'p') {
            if (have_header)
                throw parse_error(line_no, "duplicate header");
            std::istringstream ss(line.substr(start + 1));
            std::string format;
            long long vars = -1, count = -1;
            if (!(ss >> format >> vars >> count) || format != "cnf" || vars < 0 || count < 0 ||
                vars > static_cast<long long>(UINT32_MAX))
                throw parse_error(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (ss >> extra)
                throw parse_error(line_no, "trailing text after header");
            doc.declared_vars = static_cast<std::uint32_t>(vars);
            doc.declared_clauses = static_cast<std::size_t>(count);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw parse_error(line_no, "clause data before the 'p cnf' header");

        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            long long value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw parse_error(line_no, "not an integer: '" + token + "'");
            if (value == 0) {
                try {
                    clauses.emplace_back(std::move(pending));
                } catch (const formula_error& e) {
                    throw parse_error(line_no, e.what());
                }
                pending.clear();
                ++raw_clauses;
                continue;
            }
            const auto magnitude = static_cast<unsigned long long>(value < 0 ? -value : value);
            if (magnitude > UINT32_MAX || (strict && magnitude > doc.declared_vars))
                throw parse_error(line_no, "literal " + token + " exceeds declared variable count " +
                                               std::to_string(doc.declared_vars));
            if (pending.empty())
                pending_line = line_no;
            pending.push_back(Literal::from_dimacs(value));
        }
    }
    if (!pending.empty())
        throw parse_error(pending_line, "clause is missing its terminating 0");
    if (!have_header)
        throw parse_error(line_no, "missing 'p cnf' header");
    if (strict && raw_clauses != doc.declared_clauses)
        throw parse_error(line_no, "header declares " + std::to_string(doc.declared_clauses) + " clauses, found " +
                                       std::to_string(raw_clauses));
    doc.body = Formula{std::move(clauses)};
    return doc;
}

DimacsDocument parse_dimacs_text(const std::string& text, bool strict)
{
    std::istringstream in(text);
    return parse_dimacs(in, strict);
}

void emit_dimacs(std::ostream& out, const Formula& f, const Metadata& meta)
{
    for (const auto& [key, value] : meta)
        out << "c " << key << '=' << value << '\n';
    out << "p cnf " << f.max_variable_id() << ' ' << f.size() << '\n';
    for (const auto& c : f) {
        for (auto lit : c)
            out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
}

std::string emit_dimacs(const Formula& f, const Metadata& meta)
{
    std::ostringstream out;
    emit_dimacs(out, f, meta);
    return out.str();
}

} // namespace lcnf
