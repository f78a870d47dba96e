#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rsct/patterns.hpp"
#include "rsct/pluecker.hpp"

namespace rsct {

using Json = nlohmann::ordered_json;

/// Desk-scale limits on the basis matrices. Exceeding them aborts the check
/// with a guard_exceeded carrying a sizing message instead of thrashing.
struct Guards {
    std::size_t max_rows = 5000;
    std::size_t max_nonzeros = 200000;
};

class guard_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generating function over fillings in x_1..x_n: maps a content vector to
/// the number of fillings with that content.
class SymPoly {
public:
    using TermMap = std::map<std::vector<int>, Int, std::greater<std::vector<int>>>;

    explicit SymPoly(int n = 1) : n_(n) {}

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    Int total() const;

    void add_term(const std::vector<int>& exps, const Int& c);
    SymPoly& operator+=(const SymPoly& other);

    bool operator==(const SymPoly&) const = default;

private:
    int n_;
    TermMap terms_;
};

/// sum over SSYT(lambda,[n]) of x^content.
SymPoly schur_poly(const Partition& lambda, int n);

/// sum over RSCT(alpha,[n]) of x^content.
SymPoly rs_poly(const Composition& alpha, int n);

/// #SSYT(lambda,[n]) by the hook content formula; exact, and independent of
/// every enumeration code path.
Int hook_content_dimension(const Partition& lambda, int n);

/// Machine-readable result of one check.
struct Report {
    std::string check;
    Json params = Json::object();
    bool pass = false;
    Json counts = Json::object();
    Json witness; // null unless the check failed
    double wall_ms = 0.0;
};

/// schur_poly(lambda) == sum of rs_poly over fiber(lambda, n), exactly.
Report check_identity(const Partition& lambda, int n);

/// #SSYT(lambda,[n]) == sum of #RSCT(alpha,[n]) over the fiber.
Report check_cardinality(const Partition& lambda, int n);

/// The basis certificate for one lambda: the RSCT Pluecker monomials over
/// the fiber are as many as the hook content dimension, their leading
/// monomials are pairwise distinct, the coefficient matrix has full row
/// rank over exact arithmetic, and the submatrix on leading-term columns is
/// upper triangular with +-1 diagonal.
Report check_basis(const Partition& lambda, int n, const Guards& guards = {},
                   int threads = 1);

/// phi(psi(leading term)) rebuilds every RSCT with at most max_cells cells
/// and parts <= n, and every psi image is an anti-diagonal pattern.
Report check_roundtrip(int n, int max_cells, int threads = 1);

/// Per-column entry multisets identify an RSCT uniquely across every shape
/// within the bounds.
Report check_rigidity(int n, int max_cells);

/// Column multidegree of the expanded Pluecker monomial equals the content
/// of the filling, for every RSCT within the bounds.
Report check_weights(int n, int max_cells, int threads = 1);

/// identity, cardinality and basis for every partition with sum <= max_cells
/// and length <= n, then roundtrip, rigidity and weights. The report order
/// is fixed; checks are fanned across `threads` workers with order-stable
/// aggregation, so the output is identical for any thread count.
std::vector<Report> run_suite(int n, int max_cells, const Guards& guards = {},
                              int threads = 1);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination; every
/// intermediate entry is a minor of the input, so no rationals appear.
int bareiss_rank(std::vector<std::vector<Int>> m);

} // namespace rsct
