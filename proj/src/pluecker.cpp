#include "rsct/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsct {

PlueckerSpec monomial_from_tab(const Filling& f)
{
    PlueckerSpec spec;
    spec.n = f.n();
    spec.orientation = Orientation::column;
    const auto& rows = f.rows();
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, row.size());
    spec.factors.resize(width);
    for (std::size_t j = 0; j < width; ++j) {
        for (const auto& row : rows)
            if (j < row.size())
                spec.factors[j].push_back(row[j]);
        std::sort(spec.factors[j].begin(), spec.factors[j].end());
    }
    return spec;
}

PlueckerSpec monomial_from_rsct(const Filling& y)
{
    PlueckerSpec spec;
    spec.n = y.n();
    spec.orientation = Orientation::row;
    spec.factors.reserve(y.rows().size());
    for (const auto& row : y.rows()) {
        std::vector<int> factor = row;
        std::sort(factor.begin(), factor.end());
        spec.factors.push_back(std::move(factor));
    }
    return spec;
}

Polynomial expand(const PlueckerSpec& spec)
{
    Polynomial out = Polynomial::constant(spec.n, 1);
    for (const auto& factor : spec.factors) {
        Polynomial d = determinant(spec.n, factor);
        if (d.is_zero())
            return Polynomial::zero(spec.n);
        out = out * d;
    }
    return out;
}

std::strong_ordering AntidiagonalOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (a.n() != n || b.n() != n)
        throw std::invalid_argument("antidiagonal order: dimension mismatch");
    return antidiag_compare(a, b);
}

bool AntidiagonalOrder::less(const Monomial& a, const Monomial& b) const
{
    return compare(a, b) == std::strong_ordering::less;
}

Monomial leading_term(const Polynomial& p, const AntidiagonalOrder& order)
{
    if (p.n() != order.n)
        throw std::invalid_argument("leading_term: dimension mismatch");
    return p.leading_monomial();
}

} // namespace rsct
