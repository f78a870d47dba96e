#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "rsct/patterns.hpp"
#include "rsct/pluecker.hpp"
#include "rsct/verify.hpp"

namespace rsct {

// ---- JSON emitters (canonical wire format) ----

Json shape_json(const std::vector<int>& parts);
Json filling_json(const Filling& f);
Json matrix_json(const IntMatrix& m);
Json monomial_json(const Monomial& m);                      // [[i, j, e], ...]
Json polynomial_json(const Polynomial& p);                  // term list, descending order
Json report_json(const Report& r, bool with_timing = false);

// ---- parsers (accept both the comma/semicolon CLI forms and the JSON
//      forms the CLI itself emits) ----

std::vector<int> parse_int_list(const std::string& text);   // "4,2,3" or "[4,2,3]"
IntMatrix parse_matrix(const std::string& text);            // "[[...],...]" or @file
std::vector<std::vector<int>> parse_factors(const std::string& text); // "1,2;3" or JSON
Monomial parse_monomial(const std::string& text, int n);    // "i,j[,e];..." or JSON
Filling filling_from_json(const nlohmann::json& j);

// ---- text / LaTeX renderings ----

std::string filling_latex(const Filling& f);   // ytableau block
std::string polynomial_text(const Polynomial& p);
std::string polynomial_latex(const Polynomial& p);
std::string monomial_text(const Monomial& m);
std::string monomial_latex(const Monomial& m);

} // namespace rsct
