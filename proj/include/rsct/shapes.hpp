#pragma once

#include <compare>
#include <vector>

namespace rsct {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction; the empty partition is the empty diagram.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Sequence of positive integers, order significant. Trailing zeros are
/// trimmed on construction; interior zeros are rejected.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// Index of the last non-zero part (0 for the empty composition).
int length(const Composition& alpha);

/// Largest part (0 for the empty composition).
int width(const Composition& alpha);

/// Sort the parts descending: the unique partition the composition
/// rearranges to. Preserves the multiset of parts.
Partition rearrange(const Composition& alpha);

/// Diagram transpose: part j of the result counts rows of length >= j.
/// An involution.
Partition transpose(const Partition& lambda);

/// All compositions alpha with transpose(rearrange(alpha)) == lambda and
/// every part <= n, i.e. the distinct orderings of the parts of
/// transpose(lambda), in lexicographically increasing order. Empty when
/// transpose(lambda) has a part exceeding n.
std::vector<Composition> fiber(const Partition& lambda, int n);

/// All partitions with sum <= max_sum and at most max_length parts
/// (including the empty partition), ordered by sum, then by
/// lexicographically decreasing parts.
std::vector<Partition> partitions_up_to(int max_sum, int max_length);

/// All compositions with sum <= max_cells and parts <= max_part
/// (including the empty composition), ordered by sum, then
/// lexicographically.
std::vector<Composition> compositions_up_to(int max_cells, int max_part);

} // namespace rsct
