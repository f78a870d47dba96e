#include "rsct/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rsct {

namespace {

// Position of z_{row,col} in the variable precedence; 0 is the largest
// variable z_{1,n}.
inline int precedence_rank(int n, int row, int col)
{
    return (row - 1) * n + (n - col);
}

} // namespace

Monomial::Monomial(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("monomial: n must be >= 1");
}

Monomial::Monomial(int n, std::vector<VarPower> powers) : n_(n), powers_(std::move(powers))
{
    if (n < 1)
        throw std::invalid_argument("monomial: n must be >= 1");
    for (const auto& p : powers_) {
        if (p.row < 1 || p.row > n || p.col < 1 || p.col > n)
            throw std::invalid_argument("monomial: variable index out of [1, n]");
        if (p.exp < 0)
            throw std::invalid_argument("monomial: negative exponent");
    }
    std::sort(powers_.begin(), powers_.end(), [n](const VarPower& a, const VarPower& b) {
        return precedence_rank(n, a.row, a.col) < precedence_rank(n, b.row, b.col);
    });
    // merge duplicates, drop zero exponents
    std::vector<VarPower> merged;
    for (const auto& p : powers_) {
        if (!merged.empty() && merged.back().row == p.row && merged.back().col == p.col)
            merged.back().exp += p.exp;
        else
            merged.push_back(p);
    }
    std::erase_if(merged, [](const VarPower& p) { return p.exp == 0; });
    powers_ = std::move(merged);
}

int Monomial::exponent(int row, int col) const
{
    for (const auto& p : powers_)
        if (p.row == row && p.col == col)
            return p.exp;
    return 0;
}

int Monomial::total_degree() const
{
    int d = 0;
    for (const auto& p : powers_)
        d += p.exp;
    return d;
}

Monomial Monomial::times(const Monomial& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("monomial: dimension mismatch");
    std::vector<VarPower> merged;
    merged.reserve(powers_.size() + other.powers_.size());
    std::size_t i = 0, j = 0;
    while (i < powers_.size() || j < other.powers_.size()) {
        if (j == other.powers_.size()) {
            merged.push_back(powers_[i++]);
        } else if (i == powers_.size()) {
            merged.push_back(other.powers_[j++]);
        } else {
            const int ra = precedence_rank(n_, powers_[i].row, powers_[i].col);
            const int rb = precedence_rank(n_, other.powers_[j].row, other.powers_[j].col);
            if (ra < rb) {
                merged.push_back(powers_[i++]);
            } else if (rb < ra) {
                merged.push_back(other.powers_[j++]);
            } else {
                VarPower p = powers_[i++];
                p.exp += other.powers_[j++].exp;
                merged.push_back(p);
            }
        }
    }
    Monomial out(n_);
    out.powers_ = std::move(merged);
    return out;
}

std::vector<std::vector<int>> Monomial::exponent_matrix() const
{
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (const auto& p : powers_)
        m[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)] = p.exp;
    return m;
}

std::strong_ordering antidiag_compare(const Monomial& a, const Monomial& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("antidiag_compare: dimension mismatch");
    const int n = a.n();
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        const int ra = precedence_rank(n, pa[i].row, pa[i].col);
        const int rb = precedence_rank(n, pb[j].row, pb[j].col);
        if (ra != rb) // the earlier-ranked side has a positive exponent where the other has zero
            return ra < rb ? std::strong_ordering::greater : std::strong_ordering::less;
        if (pa[i].exp != pb[j].exp)
            return pa[i].exp > pb[j].exp ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        ++i;
        ++j;
    }
    if (i < pa.size())
        return std::strong_ordering::greater;
    if (j < pb.size())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(int n, Int c)
{
    Polynomial p(n);
    p.add_term(Monomial(n), c);
    return p;
}

Polynomial Polynomial::variable(int n, int row, int col)
{
    Polynomial p(n);
    p.add_term(Monomial(n, {{row, col, 1}}), 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Int& coeff)
{
    if (m.n() != n_)
        throw std::invalid_argument("polynomial: dimension mismatch");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Int& Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

Int Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("polynomial: dimension mismatch");
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial determinant(int n, const std::vector<int>& cols)
{
    const int k = static_cast<int>(cols.size());
    for (int c : cols)
        if (c < 1 || c > n)
            throw std::invalid_argument("determinant: column index out of [1, n]");
    if (k > 20)
        throw std::invalid_argument("determinant: index list too large");
    {
        std::vector<int> sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return Polynomial::zero(n);
    }

    // det over column subset S uses rows k-|S|+1 .. k, expanding along its
    // top row; memoized on S so the whole expansion costs O(2^k) merges
    // instead of k! term constructions.
    std::vector<std::optional<Polynomial>> memo(std::size_t{1} << k);
    auto det = [&](auto&& self, unsigned mask) -> const Polynomial& {
        auto& slot = memo[mask];
        if (slot)
            return *slot;
        if (mask == 0) {
            slot = Polynomial::constant(n, 1);
            return *slot;
        }
        const int size = std::popcount(mask);
        const int row = k - size + 1;
        Polynomial acc(n);
        int sign = 1;
        for (int t = 0; t < k; ++t) {
            if (!(mask & (1u << t)))
                continue;
            const Polynomial& sub = self(self, mask & ~(1u << t));
            Polynomial term = Polynomial::variable(n, row, cols[static_cast<std::size_t>(t)]) * sub;
            if (sign < 0)
                acc -= term;
            else
                acc += term;
            sign = -sign;
        }
        slot = std::move(acc);
        return *slot;
    };
    return det(det, static_cast<unsigned>((std::size_t{1} << k) - 1));
}

namespace {

std::optional<std::vector<int>> multidegree(const Polynomial& p, bool by_column)
{
    std::vector<int> ref(static_cast<std::size_t>(p.n()), 0);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> deg(static_cast<std::size_t>(p.n()), 0);
        for (const auto& vp : m.powers())
            deg[static_cast<std::size_t>((by_column ? vp.col : vp.row) - 1)] += vp.exp;
        if (first) {
            ref = std::move(deg);
            first = false;
        } else if (deg != ref) {
            return std::nullopt;
        }
    }
    return ref;
}

} // namespace

std::optional<std::vector<int>> multidegree_by_column(const Polynomial& p)
{
    return multidegree(p, true);
}

std::optional<std::vector<int>> multidegree_by_row(const Polynomial& p)
{
    return multidegree(p, false);
}

} // namespace rsct
