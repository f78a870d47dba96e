#pragma once

#include <vector>

#include "rsct/poly.hpp"
#include "rsct/tableaux.hpp"

namespace rsct {

enum class Orientation { row, column };

/// Product of Pluecker coordinates, one index list per factor. Column
/// orientation reads the factors off the columns of a straight-shape
/// filling (where repeated entries make the product vanish); row
/// orientation reads them off the rows of an RSCT. Factors are kept sorted
/// ascending, which fixes the determinant sign convention.
struct PlueckerSpec {
    int n = 1;
    Orientation orientation = Orientation::row;
    std::vector<std::vector<int>> factors;

    bool operator==(const PlueckerSpec&) const = default;
};

/// One factor per column of the filling, column entries as indices.
PlueckerSpec monomial_from_tab(const Filling& f);

/// One factor per row of the filling, row entries as indices.
PlueckerSpec monomial_from_rsct(const Filling& y);

/// Product of the factors' minors; zero iff some factor repeats an index.
Polynomial expand(const PlueckerSpec& spec);

/// The concrete anti-diagonal term order (see antidiag_compare): in every
/// top-justified minor, row 1 takes the largest column index of the initial
/// term, row 2 the next, and so on.
struct AntidiagonalOrder {
    int n = 1;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const;
};

/// The order-maximal monomial of p; throws std::domain_error on the zero
/// polynomial.
Monomial leading_term(const Polynomial& p, const AntidiagonalOrder& order);

} // namespace rsct
