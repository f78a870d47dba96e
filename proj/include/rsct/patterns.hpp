#pragma once

#include <vector>

#include "rsct/poly.hpp"
#include "rsct/tableaux.hpp"

namespace rsct {

/// Square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<int>>;

/// Anti-diagonal pattern test: entries non-negative, and for every i < n
/// and p the suffix-sum interlacing
///   sum_{j>=p} m[i+1][j]  <=  sum_{j>=p+1} m[i][j]
/// holds. The no-entry-below-the-last-nonzero rule for the first two rows
/// is implied but checked on its own as well. Throws on non-square input.
bool validate_ad(const IntMatrix& m);

/// Same test with the interlacing sums cut off at the anti-diagonal
/// (left sum up to column n-i-1, right sum up to n-i). Weaker than
/// validate_ad; kept for side-by-side comparison via the CLI.
bool validate_ad_literal(const IntMatrix& m);

/// Gelfand-Tsetlin pattern test: entries non-negative, rows weakly
/// decreasing, interlacing g[i+1][p] <= g[i][p+1].
bool validate_gt(const IntMatrix& m);

/// Build an RSCT from an anti-diagonal pattern. Row i of the pattern fills
/// column i of the tableau: column 1 places m[1][k] copies of k scanning
/// left to right; column i > 1 scans right to left, each copy of j landing
/// in the topmost row whose column-(i-1) entry exceeds j and whose
/// column-i cell is empty. Throws std::runtime_error when a copy cannot be
/// placed (impossible for a pattern passing validate_ad).
Filling phi(const IntMatrix& m);

/// Exponent matrix of a monomial, reinterpreted as a candidate
/// anti-diagonal pattern. Callers decide validity via validate_ad.
IntMatrix psi(const Monomial& m);

/// Row-wise suffix sums: g[i][j] = sum_{j'>=j} m[i][j'].
IntMatrix ad_to_gt(const IntMatrix& m);

/// Adjacent differences g[i][j] - g[i][j+1] (with g[i][n+1] = 0); inverse
/// of ad_to_gt. Throws std::invalid_argument on a negative difference.
IntMatrix gt_to_ad(const IntMatrix& g);

} // namespace rsct
