#include "rsct/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsct {

namespace {

std::string trimmed(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

int parse_int(const std::string& s)
{
    const std::string t = trimmed(s);
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + t + "'");
    }
    if (used != t.size())
        throw std::invalid_argument("not an integer: '" + t + "'");
    return v;
}

} // namespace

Json shape_json(const std::vector<int>& parts)
{
    return Json(parts);
}

Json filling_json(const Filling& f)
{
    Json j = Json::object();
    j["shape"] = f.shape_parts();
    j["n"] = f.n();
    j["rows"] = f.rows();
    return j;
}

Json matrix_json(const IntMatrix& m)
{
    return Json(m);
}

Json monomial_json(const Monomial& m)
{
    Json j = Json::array();
    for (const auto& p : m.powers())
        j.push_back(Json::array({p.row, p.col, p.exp}));
    return j;
}

Json polynomial_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json t = Json::object();
        t["coeff"] = coeff.str();
        t["exps"] = monomial_json(mono);
        terms.push_back(std::move(t));
    }
    return terms;
}

Json report_json(const Report& r, bool with_timing)
{
    Json j = Json::object();
    j["check"] = r.check;
    j["params"] = r.params;
    j["outcome"] = r.pass ? "pass" : "fail";
    j["counts"] = r.counts;
    j["witness"] = r.witness;
    if (with_timing)
        j["wall_ms"] = r.wall_ms;
    return j;
}

std::vector<int> parse_int_list(const std::string& text)
{
    const std::string t = trimmed(text);
    if (t.empty())
        return {};
    if (t.front() == '[') {
        const auto j = nlohmann::json::parse(t);
        if (!j.is_array())
            throw std::invalid_argument("expected a JSON array of integers");
        return j.get<std::vector<int>>();
    }
    std::vector<int> out;
    for (const auto& piece : split(t, ','))
        out.push_back(parse_int(piece));
    return out;
}

IntMatrix parse_matrix(const std::string& text)
{
    std::string t = trimmed(text);
    if (t.empty())
        throw std::invalid_argument("empty matrix argument");
    if (t.front() != '[') {
        std::ifstream in(t);
        if (!in)
            throw std::invalid_argument("cannot open matrix file: " + t);
        std::ostringstream buf;
        buf << in.rdbuf();
        t = trimmed(buf.str());
    }
    const auto j = nlohmann::json::parse(t);
    if (!j.is_array())
        throw std::invalid_argument("expected a JSON array of arrays");
    IntMatrix m;
    for (const auto& row : j)
        m.push_back(row.get<std::vector<int>>());
    return m;
}

std::vector<std::vector<int>> parse_factors(const std::string& text)
{
    const std::string t = trimmed(text);
    if (t.empty())
        return {};
    if (t.front() == '[') {
        const auto j = nlohmann::json::parse(t);
        std::vector<std::vector<int>> out;
        for (const auto& row : j)
            out.push_back(row.get<std::vector<int>>());
        return out;
    }
    std::vector<std::vector<int>> out;
    for (const auto& piece : split(t, ';')) {
        std::vector<int> factor;
        for (const auto& item : split(piece, ','))
            factor.push_back(parse_int(item));
        out.push_back(std::move(factor));
    }
    return out;
}

Monomial parse_monomial(const std::string& text, int n)
{
    const std::string t = trimmed(text);
    std::vector<VarPower> powers;
    if (t.empty())
        return Monomial(n);
    if (t.front() == '[') {
        const auto j = nlohmann::json::parse(t);
        for (const auto& entry : j) {
            const auto v = entry.get<std::vector<int>>();
            if (v.size() != 2 && v.size() != 3)
                throw std::invalid_argument("monomial entries are [i, j] or [i, j, e]");
            powers.push_back({v[0], v[1], v.size() == 3 ? v[2] : 1});
        }
    } else {
        for (const auto& piece : split(t, ';')) {
            const auto items = split(piece, ',');
            if (items.size() != 2 && items.size() != 3)
                throw std::invalid_argument("monomial entries are i,j or i,j,e");
            powers.push_back({parse_int(items[0]), parse_int(items[1]),
                              items.size() == 3 ? parse_int(items[2]) : 1});
        }
    }
    return Monomial(n, std::move(powers));
}

Filling filling_from_json(const nlohmann::json& j)
{
    if (!j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("filling JSON needs fields 'n' and 'rows'");
    const int n = j.at("n").get<int>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows"))
        rows.push_back(row.get<std::vector<int>>());
    Filling f(n, std::move(rows));
    if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != f.shape_parts())
        throw std::invalid_argument("filling JSON: shape does not match rows");
    return f;
}

std::string filling_latex(const Filling& f)
{
    std::ostringstream out;
    out << "\\begin{ytableau}\n";
    const auto& rows = f.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j)
                out << " & ";
            out << rows[i][j];
        }
        if (i + 1 < rows.size())
            out << " \\\\";
        out << "\n";
    }
    out << "\\end{ytableau}\n";
    return out.str();
}

namespace {

std::string monomial_string(const Monomial& m, bool latex)
{
    if (m.is_unit())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& p : m.powers()) {
        if (!first && !latex)
            out << "*";
        first = false;
        if (latex) {
            out << "z_{" << p.row << "," << p.col << "}";
            if (p.exp > 1)
                out << "^{" << p.exp << "}";
        } else {
            out << "z(" << p.row << "," << p.col << ")";
            if (p.exp > 1)
                out << "^" << p.exp;
        }
    }
    return out.str();
}

std::string polynomial_string(const Polynomial& p, bool latex)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        const Int mag = negative ? Int(-coeff) : coeff;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mag != 1 || mono.is_unit()) {
            out << mag.str();
            if (!mono.is_unit())
                out << (latex ? "\\," : "*");
        }
        if (!mono.is_unit())
            out << monomial_string(mono, latex);
    }
    return out.str();
}

} // namespace

std::string monomial_text(const Monomial& m)
{
    return monomial_string(m, false);
}

std::string monomial_latex(const Monomial& m)
{
    return monomial_string(m, true);
}

std::string polynomial_text(const Polynomial& p)
{
    return polynomial_string(p, false);
}

std::string polynomial_latex(const Polynomial& p)
{
    return polynomial_string(p, true);
}

} // namespace rsct
