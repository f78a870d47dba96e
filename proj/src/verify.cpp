#include "rsct/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "rsct/io.hpp"
#include "rsct/parallel.hpp"

namespace rsct {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json partition_params(const Partition& lambda, int n)
{
    Json j = Json::object();
    j["lambda"] = shape_json(lambda.parts());
    j["n"] = n;
    return j;
}

Json range_params(int n, int max_cells)
{
    Json j = Json::object();
    j["n"] = n;
    j["max_cells"] = max_cells;
    return j;
}

} // namespace

Int SymPoly::total() const
{
    Int t = 0;
    for (const auto& [e, c] : terms_)
        t += c;
    return t;
}

void SymPoly::add_term(const std::vector<int>& exps, const Int& c)
{
    if (static_cast<int>(exps.size()) != n_)
        throw std::invalid_argument("sympoly: exponent vector length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("sympoly: dimension mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

SymPoly schur_poly(const Partition& lambda, int n)
{
    SymPoly s(n);
    for (const Filling& t : enumerate_ssyt(lambda, n))
        s.add_term(content(t), 1);
    return s;
}

SymPoly rs_poly(const Composition& alpha, int n)
{
    SymPoly s(n);
    for (const Filling& y : enumerate_rsct(alpha, n))
        s.add_term(content(y), 1);
    return s;
}

Int hook_content_dimension(const Partition& lambda, int n)
{
    const auto& parts = lambda.parts();
    const Partition tr = transpose(lambda);
    Int num = 1, den = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= parts[static_cast<std::size_t>(i - 1)]; ++j) {
            num *= n + j - i;
            const int arm = parts[static_cast<std::size_t>(i - 1)] - j;
            const int leg = tr.parts()[static_cast<std::size_t>(j - 1)] - i;
            den *= arm + leg + 1;
        }
    }
    if (num % den != 0)
        throw std::logic_error("hook content product not divisible by hook product");
    return num / den;
}

Report check_identity(const Partition& lambda, int n)
{
    const auto start = Clock::now();
    Report r;
    r.check = "identity";
    r.params = partition_params(lambda, n);

    const SymPoly lhs = schur_poly(lambda, n);
    SymPoly rhs(n);
    const auto fib = fiber(lambda, n);
    for (const Composition& alpha : fib)
        rhs += rs_poly(alpha, n);

    r.counts["fiber"] = fib.size();
    r.counts["schur_terms"] = lhs.terms().size();
    r.counts["ssyt"] = lhs.total().str();
    r.pass = lhs == rhs;
    if (!r.pass) {
        // first exponent vector where the two sides disagree
        for (const auto& [e, c] : lhs.terms()) {
            auto it = rhs.terms().find(e);
            if (it == rhs.terms().end() || it->second != c) {
                r.witness["exponents"] = e;
                r.witness["schur_coeff"] = c.str();
                r.witness["rs_sum_coeff"] = (it == rhs.terms().end() ? Int(0) : it->second).str();
                break;
            }
        }
        if (r.witness.is_null())
            for (const auto& [e, c] : rhs.terms())
                if (!lhs.terms().contains(e)) {
                    r.witness["exponents"] = e;
                    r.witness["schur_coeff"] = "0";
                    r.witness["rs_sum_coeff"] = c.str();
                    break;
                }
    }
    r.wall_ms = ms_since(start);
    return r;
}

Report check_cardinality(const Partition& lambda, int n)
{
    const auto start = Clock::now();
    Report r;
    r.check = "cardinality";
    r.params = partition_params(lambda, n);

    const std::size_t ssyt = enumerate_ssyt(lambda, n).size();
    std::size_t rsct_total = 0;
    const auto fib = fiber(lambda, n);
    for (const Composition& alpha : fib)
        rsct_total += enumerate_rsct(alpha, n).size();

    r.counts["fiber"] = fib.size();
    r.counts["ssyt"] = ssyt;
    r.counts["rsct_total"] = rsct_total;
    r.pass = ssyt == rsct_total;
    if (!r.pass) {
        r.witness["ssyt"] = ssyt;
        r.witness["rsct_total"] = rsct_total;
    }
    r.wall_ms = ms_since(start);
    return r;
}

Report check_basis(const Partition& lambda, int n, const Guards& guards, int threads)
{
    const auto start = Clock::now();
    Report r;
    r.check = "basis";
    r.params = partition_params(lambda, n);

    // gather the fillings over the fiber
    const auto fib = fiber(lambda, n);
    std::vector<Filling> fillings;
    for (const Composition& alpha : fib) {
        auto batch = enumerate_rsct(alpha, n);
        fillings.insert(fillings.end(), batch.begin(), batch.end());
    }
    const std::size_t m = fillings.size();
    if (m > guards.max_rows) {
        std::ostringstream msg;
        msg << "basis check for n=" << n << " needs " << m << " rows, over the limit of "
            << guards.max_rows;
        throw guard_exceeded(msg.str());
    }

    std::vector<Polynomial> polys(m, Polynomial(n));
    parallel_for(static_cast<std::int64_t>(m), threads, [&](std::int64_t i) {
        polys[static_cast<std::size_t>(i)] =
            expand(monomial_from_rsct(fillings[static_cast<std::size_t>(i)]));
    });

    std::size_t nonzeros = 0;
    for (const auto& p : polys)
        nonzeros += p.term_count();
    if (nonzeros > guards.max_nonzeros) {
        std::ostringstream msg;
        msg << "basis matrix has " << nonzeros << " nonzero entries, over the limit of "
            << guards.max_nonzeros;
        throw guard_exceeded(msg.str());
    }

    const Int dim = hook_content_dimension(lambda, n);
    const bool size_ok = Int(m) == dim;

    // pairwise distinct leading monomials
    bool leading_distinct = true;
    std::map<Monomial, std::size_t, MonomialGreater> leading;
    for (std::size_t i = 0; i < m; ++i) {
        auto [it, inserted] = leading.emplace(polys[i].leading_monomial(), i);
        if (!inserted) {
            leading_distinct = false;
            if (r.witness.is_null()) {
                r.witness["collision"] = Json::object();
                r.witness["collision"]["monomial"] = monomial_json(polys[i].leading_monomial());
                r.witness["collision"]["first"] = filling_json(fillings[it->second]);
                r.witness["collision"]["second"] = filling_json(fillings[i]);
            }
        }
    }

    // rows sorted by descending leading term (stable on the enumeration
    // order when a collision slipped through)
    std::vector<std::size_t> row_order(m);
    for (std::size_t i = 0; i < m; ++i)
        row_order[i] = i;
    std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
        return antidiag_compare(polys[a].leading_monomial(), polys[b].leading_monomial())
            == std::strong_ordering::greater;
    });

    // all occurring monomials, descending
    std::map<Monomial, std::size_t, MonomialGreater> columns;
    for (const auto& p : polys)
        for (const auto& [mono, c] : p.terms())
            columns.emplace(mono, 0);
    std::size_t col = 0;
    for (auto& [mono, idx] : columns)
        idx = col++;

    std::vector<std::vector<Int>> matrix(m, std::vector<Int>(columns.size(), 0));
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [mono, c] : polys[row_order[i]].terms())
            matrix[i][columns.at(mono)] = c;

    const int rank = bareiss_rank(matrix);
    const bool full_rank = rank == static_cast<int>(m);

    // leading-term column submatrix: upper triangular with +-1 diagonal
    bool triangular = true;
    bool diag_pm1 = true;
    for (std::size_t i = 0; i < m && (triangular && diag_pm1); ++i) {
        const auto& p = polys[row_order[i]];
        const Int& lead = p.leading_coefficient();
        if (lead != 1 && lead != -1) {
            diag_pm1 = false;
            if (r.witness.is_null()) {
                r.witness["diagonal"] = Json::object();
                r.witness["diagonal"]["row"] = i;
                r.witness["diagonal"]["coeff"] = lead.str();
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            const Int below = p.coefficient(polys[row_order[j]].leading_monomial());
            if (below != 0) {
                triangular = false;
                if (r.witness.is_null()) {
                    r.witness["subdiagonal"] = Json::object();
                    r.witness["subdiagonal"]["row"] = i;
                    r.witness["subdiagonal"]["col"] = j;
                    r.witness["subdiagonal"]["coeff"] = below.str();
                }
                break;
            }
        }
    }

    r.counts["fiber"] = fib.size();
    r.counts["fillings"] = m;
    r.counts["dimension"] = dim.str();
    r.counts["monomials"] = columns.size();
    r.counts["nonzeros"] = nonzeros;
    r.counts["rank"] = rank;
    r.counts["leading_distinct"] = leading_distinct;
    r.counts["triangular"] = triangular;
    r.counts["diagonal_pm1"] = diag_pm1;

    r.pass = size_ok && leading_distinct && full_rank && triangular && diag_pm1;
    if (!r.pass && r.witness.is_null()) {
        r.witness["fillings"] = m;
        r.witness["dimension"] = dim.str();
        r.witness["rank"] = rank;
    }
    r.wall_ms = ms_since(start);
    return r;
}

Report check_roundtrip(int n, int max_cells, int threads)
{
    const auto start = Clock::now();
    Report r;
    r.check = "roundtrip";
    r.params = range_params(n, max_cells);

    const auto shapes = compositions_up_to(max_cells, n);
    struct PerShape {
        std::size_t checked = 0;
        Json witness;
    };
    std::vector<PerShape> results(shapes.size());

    parallel_for(static_cast<std::int64_t>(shapes.size()), threads, [&](std::int64_t idx) {
        const Composition& alpha = shapes[static_cast<std::size_t>(idx)];
        PerShape& out = results[static_cast<std::size_t>(idx)];
        for (const Filling& y : enumerate_rsct(alpha, n)) {
            const Polynomial p = expand(monomial_from_rsct(y));
            const IntMatrix pattern = psi(p.leading_monomial());
            if (!validate_ad(pattern)) {
                out.witness = Json::object();
                out.witness["stage"] = "ad_membership";
                out.witness["alpha"] = shape_json(alpha.parts());
                out.witness["filling"] = filling_json(y);
                out.witness["pattern"] = matrix_json(pattern);
                return;
            }
            const Filling rebuilt = phi(pattern);
            if (!(rebuilt == y)) {
                out.witness = Json::object();
                out.witness["stage"] = "rebuild";
                out.witness["alpha"] = shape_json(alpha.parts());
                out.witness["filling"] = filling_json(y);
                out.witness["rebuilt"] = filling_json(rebuilt);
                return;
            }
            ++out.checked;
        }
    });

    std::size_t total = 0;
    r.pass = true;
    for (const auto& res : results) {
        total += res.checked;
        if (r.pass && !res.witness.is_null()) {
            r.pass = false;
            r.witness = res.witness;
        }
    }
    r.counts["shapes"] = shapes.size();
    r.counts["fillings"] = total;
    r.wall_ms = ms_since(start);
    return r;
}

Report check_rigidity(int n, int max_cells)
{
    const auto start = Clock::now();
    Report r;
    r.check = "rigidity";
    r.params = range_params(n, max_cells);
    r.pass = true;

    // key: sorted entry list per column of the zero-padded array
    std::map<std::vector<std::vector<int>>, Filling> seen;
    std::size_t total = 0;
    for (const Composition& alpha : compositions_up_to(max_cells, n)) {
        for (const Filling& y : enumerate_rsct(alpha, n)) {
            ++total;
            std::vector<std::vector<int>> key(static_cast<std::size_t>(width(alpha)));
            for (const auto& row : y.rows())
                for (std::size_t k = 0; k < row.size(); ++k)
                    key[k].push_back(row[k]);
            for (auto& column : key)
                std::sort(column.begin(), column.end());
            auto [it, inserted] = seen.emplace(std::move(key), y);
            if (!inserted && !(it->second == y) && r.pass) {
                r.pass = false;
                r.witness["first"] = filling_json(it->second);
                r.witness["second"] = filling_json(y);
            }
        }
    }
    r.counts["fillings"] = total;
    r.counts["distinct_column_multisets"] = seen.size();
    r.wall_ms = ms_since(start);
    return r;
}

Report check_weights(int n, int max_cells, int threads)
{
    const auto start = Clock::now();
    Report r;
    r.check = "weights";
    r.params = range_params(n, max_cells);

    const auto shapes = compositions_up_to(max_cells, n);
    struct PerShape {
        std::size_t checked = 0;
        Json witness;
    };
    std::vector<PerShape> results(shapes.size());

    parallel_for(static_cast<std::int64_t>(shapes.size()), threads, [&](std::int64_t idx) {
        const Composition& alpha = shapes[static_cast<std::size_t>(idx)];
        PerShape& out = results[static_cast<std::size_t>(idx)];
        for (const Filling& y : enumerate_rsct(alpha, n)) {
            const Polynomial p = expand(monomial_from_rsct(y));
            const auto deg = multidegree_by_column(p);
            if (!deg || *deg != content(y)) {
                out.witness = Json::object();
                out.witness["alpha"] = shape_json(alpha.parts());
                out.witness["filling"] = filling_json(y);
                out.witness["content"] = content(y);
                if (deg)
                    out.witness["multidegree"] = *deg;
                else
                    out.witness["multidegree"] = "inhomogeneous";
                return;
            }
            ++out.checked;
        }
    });

    std::size_t total = 0;
    r.pass = true;
    for (const auto& res : results) {
        total += res.checked;
        if (r.pass && !res.witness.is_null()) {
            r.pass = false;
            r.witness = res.witness;
        }
    }
    r.counts["shapes"] = shapes.size();
    r.counts["fillings"] = total;
    r.wall_ms = ms_since(start);
    return r;
}

std::vector<Report> run_suite(int n, int max_cells, const Guards& guards, int threads)
{
    std::vector<std::function<Report()>> tasks;
    for (const Partition& lambda : partitions_up_to(max_cells, n)) {
        tasks.emplace_back([lambda, n] { return check_identity(lambda, n); });
        tasks.emplace_back([lambda, n] { return check_cardinality(lambda, n); });
        tasks.emplace_back([lambda, n, guards] { return check_basis(lambda, n, guards, 1); });
    }
    tasks.emplace_back([n, max_cells] { return check_roundtrip(n, max_cells, 1); });
    tasks.emplace_back([n, max_cells] { return check_rigidity(n, max_cells); });
    tasks.emplace_back([n, max_cells] { return check_weights(n, max_cells, 1); });

    std::vector<Report> reports(tasks.size());
    parallel_for(static_cast<std::int64_t>(tasks.size()), threads, [&](std::int64_t i) {
        reports[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
    });
    return reports;
}

int bareiss_rank(std::vector<std::vector<Int>> m)
{
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("bareiss_rank: ragged matrix");

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                if (prev != 1 && num % prev != 0)
                    throw std::logic_error("bareiss_rank: inexact division");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace rsct
