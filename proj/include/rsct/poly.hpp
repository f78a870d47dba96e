#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsct {

using Int = boost::multiprecision::cpp_int;

/// One variable z_{row,col} raised to exp (exp >= 1 in stored form).
struct VarPower {
    int row;
    int col;
    int exp;
    bool operator==(const VarPower&) const = default;
};

/// Monic monomial in the n*n variables z_{i,j}, kept as a sparse exponent
/// matrix. Entries are stored sorted by the anti-diagonal variable
/// precedence z_{1,n} > z_{1,n-1} > ... > z_{1,1} > z_{2,n} > ... > z_{n,1}.
class Monomial {
public:
    explicit Monomial(int n = 1);
    Monomial(int n, std::vector<VarPower> powers);

    int n() const { return n_; }
    const std::vector<VarPower>& powers() const { return powers_; }
    bool is_unit() const { return powers_.empty(); }
    int exponent(int row, int col) const;
    int total_degree() const;

    Monomial times(const Monomial& other) const;

    /// Dense n x n exponent matrix, row-major.
    std::vector<std::vector<int>> exponent_matrix() const;

    bool operator==(const Monomial&) const = default;

private:
    int n_;
    std::vector<VarPower> powers_;
};

/// Total order on same-dimension monomials: lexicographic on exponent
/// vectors under the precedence above. The anti-diagonal term of every
/// top-justified minor is maximal under this order.
std::strong_ordering antidiag_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return antidiag_compare(a, b) == std::strong_ordering::greater;
    }
};

/// Sparse polynomial in z_{i,j} with exact integer coefficients. Terms are
/// stored in decreasing anti-diagonal order, so the leading term is the
/// first entry; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialGreater>;

    explicit Polynomial(int n = 1) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, Int c);
    static Polynomial variable(int n, int row, int col);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& coeff);

    const Monomial& leading_monomial() const; // throws std::domain_error on zero
    const Int& leading_coefficient() const;
    Int coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

private:
    int n_;
    TermMap terms_;
};

/// Determinant of the top-justified |cols| x |cols| submatrix of [z_{i,j}]
/// on the given columns, in the given column order (so swapping two columns
/// negates the result). Repeated columns give the zero polynomial; the
/// empty list gives 1. Expands by cofactors with memoization on column
/// subsets.
Polynomial determinant(int n, const std::vector<int>& cols);

/// Column-degree vector (entry j-1 sums the exponents of z_{*,j}) when it is
/// the same for every term; std::nullopt when inhomogeneous. The zero
/// polynomial and constants give the zero vector.
std::optional<std::vector<int>> multidegree_by_column(const Polynomial& p);

/// Row-degree counterpart of multidegree_by_column.
std::optional<std::vector<int>> multidegree_by_row(const Polynomial& p);

} // namespace rsct
