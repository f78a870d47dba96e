#include "rsct/patterns.hpp"

#include <stdexcept>

namespace rsct {

namespace {

int require_square(const IntMatrix& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("pattern: matrix is not square");
    return static_cast<int>(n);
}

bool all_nonnegative(const IntMatrix& m)
{
    for (const auto& row : m)
        for (int e : row)
            if (e < 0)
                return false;
    return true;
}

} // namespace

bool validate_ad(const IntMatrix& m)
{
    const int n = require_square(m);
    if (!all_nonnegative(m))
        return false;

    // suffix-sum interlacing between consecutive rows
    for (int i = 0; i + 1 < n; ++i) {
        for (int p = 0; p < n; ++p) {
            long long below = 0, above = 0;
            for (int j = p; j < n; ++j)
                below += m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
            for (int j = p + 1; j < n; ++j)
                above += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (below > above)
                return false;
        }
    }

    // redundant with the interlacing; a disagreement would flag a bug
    if (n >= 2) {
        int last = -1;
        for (int j = 0; j < n; ++j)
            if (m[0][static_cast<std::size_t>(j)] != 0)
                last = j;
        if (last >= 0 && m[1][static_cast<std::size_t>(last)] != 0)
            return false;
    }
    return true;
}

bool validate_ad_literal(const IntMatrix& m)
{
    const int n = require_square(m);
    if (!all_nonnegative(m))
        return false;

    // sums cut off at the anti-diagonal: left runs j = p .. n-i-1, right
    // runs j = p+1 .. n-i (1-based row index i)
    for (int i = 1; i < n; ++i) {
        for (int p = 1; p <= n; ++p) {
            long long below = 0, above = 0;
            for (int j = p; j <= n - i - 1; ++j)
                below += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            for (int j = p + 1; j <= n - i; ++j)
                above += m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (below > above)
                return false;
        }
    }

    if (n >= 2) {
        int last = -1;
        for (int j = 0; j < n; ++j)
            if (m[0][static_cast<std::size_t>(j)] != 0)
                last = j;
        if (last >= 0 && m[1][static_cast<std::size_t>(last)] != 0)
            return false;
    }
    return true;
}

bool validate_gt(const IntMatrix& m)
{
    const int n = require_square(m);
    if (!all_nonnegative(m))
        return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                < m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)])
                return false;
    for (int i = 0; i + 1 < n; ++i)
        for (int p = 0; p < n; ++p) {
            const int rhs = (p + 1 < n)
                ? m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p + 1)]
                : 0;
            if (m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p)] > rhs)
                return false;
        }
    return true;
}

Filling phi(const IntMatrix& m)
{
    const int n = require_square(m);
    if (!all_nonnegative(m))
        throw std::invalid_argument("phi: negative entry");

    std::vector<std::vector<int>> rows;

    // column 1: left to right, m[1][k] copies of k into the next empty rows
    for (int k = 1; k <= n; ++k)
        for (int c = 0; c < m[0][static_cast<std::size_t>(k - 1)]; ++c)
            rows.push_back({k});

    // column i > 1: right to left, each copy of j next to the topmost
    // column-(i-1) entry that exceeds j and has no column-i neighbour yet
    for (int i = 2; i <= n; ++i) {
        for (int j = n; j >= 1; --j) {
            const int copies = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (int c = 0; c < copies; ++c) {
                bool placed = false;
                for (auto& row : rows) {
                    if (static_cast<int>(row.size()) == i - 1 && row.back() > j) {
                        row.push_back(j);
                        placed = true;
                        break;
                    }
                }
                if (!placed)
                    throw std::runtime_error("phi: no slot for a copy; input is not an anti-diagonal pattern");
            }
        }
    }
    return Filling(n, std::move(rows));
}

IntMatrix psi(const Monomial& m)
{
    return m.exponent_matrix();
}

IntMatrix ad_to_gt(const IntMatrix& m)
{
    const int n = require_square(m);
    IntMatrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = n - 1; j >= 0; --j) {
            acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    }
    return g;
}

IntMatrix gt_to_ad(const IntMatrix& g)
{
    const int n = require_square(g);
    IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int next = (j + 1 < n)
                ? g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]
                : 0;
            const int diff = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - next;
            if (diff < 0)
                throw std::invalid_argument("gt_to_ad: row not weakly decreasing");
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = diff;
        }
    }
    return m;
}

} // namespace rsct
