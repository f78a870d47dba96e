#include "reference/reference.hpp"

#include <algorithm>
#include <numeric>

#include "rsct/pluecker.hpp"

namespace rsct::reference {

std::vector<Filling> brute_force_fillings(const std::vector<int>& shape, int n,
                                          const std::function<bool(const Filling&)>& pred)
{
    const int cells = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<Filling> out;
    std::vector<int> flat(static_cast<std::size_t>(cells), 1);
    for (;;) {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int s : shape) {
            rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                              flat.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(s)));
            pos += static_cast<std::size_t>(s);
        }
        Filling f(n, std::move(rows));
        if (pred(f))
            out.push_back(std::move(f));
        // odometer, last cell fastest
        int i = cells - 1;
        while (i >= 0 && flat[static_cast<std::size_t>(i)] == n) {
            flat[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0)
            break;
        ++flat[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<Filling> brute_force_ssyt(const Partition& lambda, int n)
{
    return brute_force_fillings(lambda.parts(), n, [](const Filling& f) { return validate_ssyt(f); });
}

std::vector<Filling> brute_force_rsct(const Composition& alpha, int n)
{
    return brute_force_fillings(alpha.parts(), n, [](const Filling& f) { return validate_rsct(f); });
}

Polynomial determinant_perm_sum(int n, const std::vector<int>& cols)
{
    const int k = static_cast<int>(cols.size());
    {
        std::vector<int> sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return Polynomial::zero(n);
    }
    Polynomial acc(n);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        std::vector<VarPower> powers;
        for (int row = 1; row <= k; ++row)
            powers.push_back({row, cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(row - 1)])], 1});
        acc.add_term(Monomial(n, std::move(powers)), (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

int rank_rational(const std::vector<std::vector<Int>>& m)
{
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = Rational(m[i][j]);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const Rational factor = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= factor * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace rsct::reference
