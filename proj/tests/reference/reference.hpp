#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsct/poly.hpp"
#include "rsct/tableaux.hpp"

// Naive serial implementations, independent of the library's enumeration,
// expansion and elimination paths. They exist to cross-check those paths in
// the tests and to serve as the slow side of the benchmarks; nothing in the
// library proper calls them.
namespace rsct::reference {

using Rational = boost::multiprecision::cpp_rational;

/// All n^cells fillings of the shape, filtered by the predicate, in
/// row-major lexicographic order.
std::vector<Filling> brute_force_fillings(const std::vector<int>& shape, int n,
                                          const std::function<bool(const Filling&)>& pred);

std::vector<Filling> brute_force_ssyt(const Partition& lambda, int n);
std::vector<Filling> brute_force_rsct(const Composition& alpha, int n);

/// Signed sum over all permutations; no cofactor recursion or memoization.
Polynomial determinant_perm_sum(int n, const std::vector<int>& cols);

/// Rank by plain Gaussian elimination over the rationals.
int rank_rational(const std::vector<std::vector<Int>>& m);

} // namespace rsct::reference
