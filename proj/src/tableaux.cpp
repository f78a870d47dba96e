#include "rsct/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsct {

Filling::Filling(int n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows))
{
    if (n < 1)
        throw std::invalid_argument("filling: n must be >= 1");
    for (const auto& row : rows_) {
        if (row.empty())
            throw std::invalid_argument("filling: empty row");
        for (int e : row)
            if (e < 1 || e > n)
                throw std::invalid_argument("filling: entry out of [1, n]");
    }
}

std::vector<int> Filling::shape_parts() const
{
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return parts;
}

int Filling::cell_count() const
{
    int c = 0;
    for (const auto& row : rows_)
        c += static_cast<int>(row.size());
    return c;
}

int Filling::at(int row, int col) const
{
    if (row < 1 || row > row_count() || col < 1)
        return 0;
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    if (col > static_cast<int>(r.size()))
        return 0;
    return r[static_cast<std::size_t>(col - 1)];
}

bool validate_ssyt(const Filling& f)
{
    const auto& rows = f.rows();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i + 1].size() > rows[i].size())
            return false;
    for (const auto& row : rows)
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1])
                return false;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
            if (rows[i + 1][j] <= rows[i][j])
                return false;
    return true;
}

bool validate_rsct(const Filling& f)
{
    const int l = f.row_count();
    int w = 0;
    for (const auto& row : f.rows())
        w = std::max(w, static_cast<int>(row.size()));

    for (const auto& row : f.rows())
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] <= row[j + 1])
                return false;

    for (int i = 2; i <= l; ++i)
        if (f.at(i, 1) < f.at(i - 1, 1))
            return false;

    for (int k = 2; k <= w; ++k)
        for (int j = 2; j <= l; ++j)
            for (int i = 1; i < j; ++i)
                if (f.at(j, k) > f.at(i, k) && f.at(j, k) < f.at(i, k - 1))
                    return false;
    return true;
}

std::vector<Filling> enumerate_ssyt(const Partition& lambda, int n)
{
    std::vector<Filling> out;
    const auto& shape = lambda.parts();
    if (shape.empty()) {
        out.emplace_back(n, std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        rows[i].assign(static_cast<std::size_t>(shape[i]), 0);

    // Row-major DFS; each cell ranges over [max(left, above+1), n].
    auto fill = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows.size()) {
            out.emplace_back(n, rows);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == rows[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, rows[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[i][j] = v;
            self(self, ni, nj);
        }
        rows[i][j] = 0;
    };
    fill(fill, 0, 0);
    return out;
}

std::vector<Filling> enumerate_rsct(const Composition& alpha, int n)
{
    std::vector<Filling> out;
    const auto& shape = alpha.parts();
    if (shape.empty()) {
        out.emplace_back(n, std::vector<std::vector<int>>{});
        return out;
    }
    const int l = static_cast<int>(shape.size());
    int w = 0;
    for (int p : shape)
        w = std::max(w, p);

    // Column-major order over the cells of the diagram.
    std::vector<std::pair<int, int>> cells; // (row, col), 1-based
    for (int k = 1; k <= w; ++k)
        for (int r = 1; r <= l; ++r)
            if (shape[static_cast<std::size_t>(r - 1)] >= k)
                cells.emplace_back(r, k);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(l));
    for (int r = 0; r < l; ++r)
        rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]), 0);

    auto entry = [&](int r, int k) -> int { // zero-padded view of the partial filling
        if (k > shape[static_cast<std::size_t>(r - 1)])
            return 0;
        return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)];
    };

    // Placing v at (r, k) with column k-1 complete and column k filled above
    // r: the strict row decrease, the first-column weak increase, and every
    // triple-rule instance whose latest cell is (r, k) are all decidable now,
    // so a completed DFS branch is a valid RSCT by construction.
    auto admissible = [&](int r, int k, int v) -> bool {
        if (k == 1) {
            if (r > 1 && v < entry(r - 1, 1))
                return false;
            return true;
        }
        if (v >= entry(r, k - 1))
            return false;
        for (int i = 1; i < r; ++i)
            if (v > entry(i, k) && v < entry(i, k - 1))
                return false;
        return true;
    };

    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.emplace_back(n, rows);
            return;
        }
        const auto [r, k] = cells[idx];
        for (int v = 1; v <= n; ++v) {
            if (!admissible(r, k, v))
                continue;
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)] = v;
            self(self, idx + 1);
        }
        rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)] = 0;
    };
    fill(fill, 0);
    return out;
}

std::vector<int> content(const Filling& f)
{
    std::vector<int> counts(static_cast<std::size_t>(f.n()), 0);
    for (const auto& row : f.rows())
        for (int e : row)
            ++counts[static_cast<std::size_t>(e - 1)];
    return counts;
}

Filling tp_map(const Filling& f)
{
    std::vector<std::vector<int>> sorted = f.rows();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> cols;
    if (!sorted.empty()) {
        cols.resize(sorted[0].size());
        for (std::size_t j = 0; j < sorted[0].size(); ++j)
            for (const auto& row : sorted)
                if (j < row.size())
                    cols[j].push_back(row[j]);
    }
    return Filling(f.n(), std::move(cols));
}

} // namespace rsct
