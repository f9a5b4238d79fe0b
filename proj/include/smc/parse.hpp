#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smc/multipoly.hpp"

namespace smc {

struct ParsedInput {
    MultiPoly poly;
    std::vector<std::string> variable_names;
    std::string source_text;
};

std::vector<std::string> default_variables(int n = 3);

// Grammar: terms joined by +/-; a term is an optional rational coefficient
// (integer or a/b) and '*'-separated powers v^k (k >= 1); parenthesized
// subexpressions, optionally raised to a power, are multiplied in and
// expanded eagerly. '*' may be omitted before '(' or an identifier.
ParsedInput parse_poly(const std::string& text, const std::vector<std::string>& variables);
ParsedInput parse_poly(const std::string& text);

// Canonical form: graded-lex term order (highest first), explicit '*',
// '^' only for exponents >= 2. parse(print(p)) == p.
std::string print_poly(const MultiPoly& p, const std::vector<std::string>& variables);

std::optional<int> homogeneity(const MultiPoly& p);
std::set<ExpVec> support(const MultiPoly& p);

} // namespace smc
