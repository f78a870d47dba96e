#pragma once

#include <vector>

#include "rsct/shapes.hpp"

namespace rsct {

/// A filling of a diagram with entries in [1, n]. Row i carries
/// shape.parts[i] entries; the shape is implied by the row lengths.
class Filling {
public:
    Filling() : n_(1) {}
    Filling(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    std::vector<int> shape_parts() const;
    int cell_count() const;

    /// Entry at 1-based (row, col); 0 outside the diagram (the zero-padded
    /// view used by the row-strict triple rule).
    int at(int row, int col) const;

    bool operator==(const Filling&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

/// Semistandard filling of a partition shape: rows weakly increase left to
/// right, columns strictly increase top to bottom. Also false when the row
/// lengths are not weakly decreasing.
bool validate_ssyt(const Filling& f);

/// Row strict composition tableau: rows strictly decrease, the leftmost
/// column weakly increases, and the zero-padded array satisfies the
/// row-strict triple rule
///   Y(j,k) > Y(i,k)  =>  Y(j,k) >= Y(i,k-1)
/// for rows i < j and columns k >= 2, with padded zeros participating.
bool validate_rsct(const Filling& f);

/// All semistandard tableaux of the given shape with entries in [1, n], in
/// lexicographic order of the row-major reading word.
std::vector<Filling> enumerate_ssyt(const Partition& lambda, int n);

/// All row strict composition tableaux of the given shape with entries in
/// [1, n], in lexicographic order of the column-major reading word.
std::vector<Filling> enumerate_rsct(const Composition& alpha, int n);

/// counts[v-1] = number of cells holding the value v.
std::vector<int> content(const Filling& f);

/// Stable-sort the rows by length, longest first, then transpose rows and
/// columns. Sends an RSCT of shape alpha to a filling of
/// transpose(rearrange(alpha)); preserves content.
Filling tp_map(const Filling& f);

} // namespace rsct
