#include "rsct/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rsct {

namespace {

void trim_trailing_zeros(std::vector<int>& parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    trim_trailing_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    trim_trailing_zeros(parts_);
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("composition parts must be positive");
}

int Composition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int length(const Composition& alpha)
{
    return static_cast<int>(alpha.parts().size());
}

int width(const Composition& alpha)
{
    int w = 0;
    for (int p : alpha.parts())
        w = std::max(w, p);
    return w;
}

Partition rearrange(const Composition& alpha)
{
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda)
{
    const auto& parts = lambda.parts();
    if (parts.empty())
        return Partition{};
    std::vector<int> out(static_cast<std::size_t>(parts[0]));
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int p : parts)
            if (p >= j)
                ++count;
        out[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(out));
}

std::vector<Composition> fiber(const Partition& lambda, int n)
{
    const Partition tr = transpose(lambda);
    for (int p : tr.parts())
        if (p > n)
            return {};
    std::vector<int> parts = tr.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

std::vector<Partition> partitions_up_to(int max_sum, int max_length)
{
    std::vector<Partition> out;
    out.emplace_back(); // empty diagram
    std::vector<int> acc;
    // Largest-part-first descent emits partitions of m in lexicographically
    // decreasing order.
    auto descend = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        if (static_cast<int>(acc.size()) >= max_length)
            return;
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            acc.push_back(p);
            self(self, remaining - p, p);
            acc.pop_back();
        }
    };
    for (int m = 1; m <= max_sum; ++m)
        descend(descend, m, m);
    return out;
}

std::vector<Composition> compositions_up_to(int max_cells, int max_part)
{
    std::vector<Composition> out;
    out.emplace_back();
    std::vector<int> acc;
    auto descend = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = 1; p <= std::min(remaining, max_part); ++p) {
            acc.push_back(p);
            self(self, remaining - p);
            acc.pop_back();
        }
    };
    for (int m = 1; m <= max_cells; ++m)
        descend(descend, m);
    return out;
}

} // namespace rsct
