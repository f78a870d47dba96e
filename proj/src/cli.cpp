#include "rsct/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "rsct/io.hpp"
#include "rsct/parallel.hpp"
#include "rsct/verify.hpp"

namespace rsct {

namespace {

struct Options {
    std::string format = "json";
    std::string output_path;
    int threads = 0; // 0 = OpenMP default (OMP_NUM_THREADS)
    bool timings = false;
};

std::string table_cells(const std::vector<int>& v)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ",";
        out << v[i];
    }
    return out.str();
}

std::string filling_table(const Filling& f)
{
    if (f.rows().empty())
        return "(empty)";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.rows().size(); ++i) {
        if (i)
            out << " | ";
        out << table_cells(f.rows()[i]);
    }
    return out.str();
}

std::string matrix_table(const IntMatrix& m)
{
    std::ostringstream out;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    }
    return out.str();
}

std::string params_table(const Json& params)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : params.items()) {
        if (!first)
            out << " ";
        first = false;
        out << key << "=" << value.dump();
    }
    return out.str();
}

// one line per report, then a summary; exit code 1 when anything failed
int render_reports(const std::vector<Report>& reports, const Options& opts, std::ostream& out)
{
    std::size_t passed = 0;
    for (const auto& r : reports)
        if (r.pass)
            ++passed;

    if (opts.format == "json") {
        Json j = Json::object();
        j["reports"] = Json::array();
        for (const auto& r : reports)
            j["reports"].push_back(report_json(r, opts.timings));
        j["summary"] = Json::object();
        j["summary"]["total"] = reports.size();
        j["summary"]["passed"] = passed;
        j["summary"]["failed"] = reports.size() - passed;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.check;
            for (std::size_t pad = r.check.size(); pad < 12; ++pad)
                out << ' ';
            out << params_table(r.params);
            if (opts.timings)
                out << "  (" << r.wall_ms << " ms)";
            out << "\n";
            if (!r.pass)
                out << "      witness: " << r.witness.dump() << "\n";
        }
        out << "summary: " << passed << "/" << reports.size() << " passed\n";
    }
    return passed == reports.size() ? 0 : 1;
}

void require_parts_bounded(const std::vector<int>& parts, int n)
{
    for (int p : parts)
        if (p > n)
            throw std::invalid_argument("shape part exceeds n");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Row strict composition tableaux, Pluecker monomials and exact basis checks"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "latex", "table"}))
        ->capture_default_str();
    app.add_option("--output", opts.output_path, "Write output to this path instead of stdout");
    app.add_option("--threads", opts.threads,
                   "Worker threads for verification batches (0 = OpenMP default)");
    app.add_flag("--timings", opts.timings, "Include wall-clock timings in reports");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List all SSYT or RSCT fillings of a shape");
    std::string enum_kind, enum_shape;
    int enum_n = 0;
    cmd_enum->add_option("kind", enum_kind)->required()->check(CLI::IsMember({"ssyt", "rsct"}));
    cmd_enum->add_option("--shape", enum_shape, "Comma-separated parts")->required();
    cmd_enum->add_option("--n", enum_n, "Entry bound")->required()->check(CLI::PositiveNumber);

    // fiber
    auto* cmd_fiber = app.add_subcommand("fiber", "Compositions rearranging-transposing to lambda");
    std::string fiber_lambda;
    int fiber_n = 0;
    cmd_fiber->add_option("--lambda", fiber_lambda)->required();
    cmd_fiber->add_option("--n", fiber_n)->required()->check(CLI::PositiveNumber);

    // expand / leading-term share inputs
    std::string factors_text;
    int expand_n = 0;
    bool orient_rows = false, orient_cols = false;
    auto add_spec_options = [&](CLI::App* cmd) {
        cmd->add_flag("--rows", orient_rows, "Row-indexed factors (RSCT convention)");
        cmd->add_flag("--cols", orient_cols, "Column-indexed factors (tableau convention)");
        cmd->add_option("--factors", factors_text, "Semicolon-separated index lists")->required();
        cmd->add_option("--n", expand_n)->required()->check(CLI::PositiveNumber);
    };
    auto* cmd_expand =
        app.add_subcommand("expand", "Expand a Pluecker monomial into a polynomial");
    add_spec_options(cmd_expand);
    auto* cmd_leading = app.add_subcommand(
        "leading-term", "Leading monomial of an expanded Pluecker monomial");
    add_spec_options(cmd_leading);

    // phi
    auto* cmd_phi = app.add_subcommand("phi", "Build the RSCT of an anti-diagonal pattern");
    std::string phi_matrix;
    cmd_phi->add_option("--matrix", phi_matrix, "Inline JSON matrix or a file path")->required();

    // psi
    auto* cmd_psi = app.add_subcommand(
        "psi", "Exponent matrix of a monomial, validated as an anti-diagonal pattern");
    std::string psi_monomial;
    int psi_n = 0;
    cmd_psi->add_option("--monomial", psi_monomial, "Entries i,j[,e] separated by ';'")->required();
    cmd_psi->add_option("--n", psi_n)->required()->check(CLI::PositiveNumber);

    // gt
    auto* cmd_gt = app.add_subcommand("gt", "Convert between anti-diagonal and GT patterns");
    std::string gt_matrix;
    bool gt_to = false, gt_from = false;
    cmd_gt->add_flag("--to", gt_to, "Anti-diagonal pattern to GT pattern");
    cmd_gt->add_flag("--from", gt_from, "GT pattern to anti-diagonal pattern");
    cmd_gt->add_option("--matrix", gt_matrix)->required();

    // ad-validate
    auto* cmd_ad = app.add_subcommand("ad-validate", "Check the anti-diagonal pattern conditions");
    std::string ad_matrix;
    bool ad_literal = false;
    cmd_ad->add_option("--matrix", ad_matrix)->required();
    cmd_ad->add_flag("--literal", ad_literal,
                     "Use the weaker literal summation limits instead of the interlacing reading");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run certification checks");
    cmd_verify->require_subcommand(1);
    std::string verify_lambda;
    int verify_n = 0, verify_max_m = 6, verify_max_cells = 6;
    Guards guards;
    auto* v_basis = cmd_verify->add_subcommand("basis", "Basis certificate for one lambda");
    v_basis->add_option("--lambda", verify_lambda)->required();
    v_basis->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
    v_basis->add_option("--max-rows", guards.max_rows)->capture_default_str();
    v_basis->add_option("--max-nonzeros", guards.max_nonzeros)->capture_default_str();
    auto* v_identity =
        cmd_verify->add_subcommand("identity", "Schur = sum of row-strict polynomials sweep");
    v_identity->add_option("--max-m", verify_max_m)->capture_default_str();
    v_identity->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
    auto* v_roundtrip = cmd_verify->add_subcommand("roundtrip", "phi(psi(leading term)) identity");
    v_roundtrip->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
    v_roundtrip->add_option("--max-cells", verify_max_cells)->capture_default_str();
    auto* v_rigidity =
        cmd_verify->add_subcommand("rigidity", "Column multisets identify fillings");
    v_rigidity->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
    v_rigidity->add_option("--max-cells", verify_max_cells)->capture_default_str();
    auto* v_suite = cmd_verify->add_subcommand("suite", "All checks over a desk-scale range");
    v_suite->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
    v_suite->add_option("--max-cells", verify_max_cells)->capture_default_str();
    v_suite->add_option("--max-rows", guards.max_rows)->capture_default_str();
    v_suite->add_option("--max-nonzeros", guards.max_nonzeros)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        if (app.got_subcommand(cmd_enum)) {
            const std::vector<int> parts = parse_int_list(enum_shape);
            std::vector<Filling> fillings;
            if (enum_kind == "ssyt") {
                fillings = enumerate_ssyt(Partition(parts), enum_n);
            } else {
                require_parts_bounded(parts, enum_n);
                fillings = enumerate_rsct(Composition(parts), enum_n);
            }
            if (opts.format == "json") {
                Json j = Json::object();
                j["kind"] = enum_kind;
                j["shape"] = parts;
                j["n"] = enum_n;
                j["count"] = fillings.size();
                j["fillings"] = Json::array();
                for (const auto& f : fillings)
                    j["fillings"].push_back(filling_json(f));
                buffer << j.dump(2) << "\n";
            } else if (opts.format == "latex") {
                for (const auto& f : fillings)
                    buffer << filling_latex(f) << "\n";
            } else {
                buffer << "count: " << fillings.size() << "\n";
                for (const auto& f : fillings)
                    buffer << filling_table(f) << "\n";
            }
        } else if (app.got_subcommand(cmd_fiber)) {
            const Partition lambda(parse_int_list(fiber_lambda));
            const auto fib = fiber(lambda, fiber_n);
            if (opts.format == "json") {
                Json j = Json::object();
                j["lambda"] = lambda.parts();
                j["n"] = fiber_n;
                j["count"] = fib.size();
                j["compositions"] = Json::array();
                for (const auto& alpha : fib)
                    j["compositions"].push_back(alpha.parts());
                buffer << j.dump(2) << "\n";
            } else {
                buffer << "count: " << fib.size() << "\n";
                for (const auto& alpha : fib)
                    buffer << table_cells(alpha.parts()) << "\n";
            }
        } else if (app.got_subcommand(cmd_expand) || app.got_subcommand(cmd_leading)) {
            if (orient_rows == orient_cols)
                throw std::invalid_argument("pass exactly one of --rows / --cols");
            PlueckerSpec spec;
            spec.n = expand_n;
            spec.orientation = orient_rows ? Orientation::row : Orientation::column;
            spec.factors = parse_factors(factors_text);
            for (auto& factor : spec.factors) {
                if (factor.empty())
                    throw std::invalid_argument("empty factor");
                std::sort(factor.begin(), factor.end());
            }
            const Polynomial p = expand(spec);
            Json j = Json::object();
            j["orientation"] = orient_rows ? "row" : "column";
            j["factors"] = spec.factors;
            j["n"] = expand_n;
            if (app.got_subcommand(cmd_expand)) {
                if (opts.format == "json") {
                    j["zero"] = p.is_zero();
                    j["terms"] = polynomial_json(p);
                    buffer << j.dump(2) << "\n";
                } else if (opts.format == "latex") {
                    buffer << polynomial_latex(p) << "\n";
                } else {
                    buffer << polynomial_text(p) << "\n";
                }
            } else {
                if (p.is_zero())
                    throw std::invalid_argument("zero polynomial has no leading term");
                if (opts.format == "json") {
                    j["monomial"] = monomial_json(p.leading_monomial());
                    j["coeff"] = p.leading_coefficient().str();
                    buffer << j.dump(2) << "\n";
                } else {
                    buffer << (opts.format == "latex" ? monomial_latex(p.leading_monomial())
                                                      : monomial_text(p.leading_monomial()));
                    if (p.leading_coefficient() != 1)
                        buffer << "  (coefficient " << p.leading_coefficient().str() << ")";
                    buffer << "\n";
                }
            }
        } else if (app.got_subcommand(cmd_phi)) {
            const IntMatrix m = parse_matrix(phi_matrix);
            if (!validate_ad(m))
                throw std::invalid_argument("matrix is not an anti-diagonal pattern");
            const Filling f = phi(m);
            if (opts.format == "json")
                buffer << filling_json(f).dump(2) << "\n";
            else if (opts.format == "latex")
                buffer << filling_latex(f);
            else
                buffer << filling_table(f) << "\n";
        } else if (app.got_subcommand(cmd_psi)) {
            const Monomial m = parse_monomial(psi_monomial, psi_n);
            const IntMatrix pattern = psi(m);
            const bool valid = validate_ad(pattern);
            if (opts.format == "json") {
                Json j = Json::object();
                j["n"] = psi_n;
                j["matrix"] = matrix_json(pattern);
                j["valid_ad"] = valid;
                buffer << j.dump(2) << "\n";
            } else {
                buffer << matrix_table(pattern);
                buffer << (valid ? "valid anti-diagonal pattern"
                                 : "not an anti-diagonal pattern (not an RSCT initial monomial)")
                       << "\n";
            }
            if (!valid)
                code = 1;
        } else if (app.got_subcommand(cmd_gt)) {
            if (gt_to == gt_from)
                throw std::invalid_argument("pass exactly one of --to / --from");
            const IntMatrix m = parse_matrix(gt_matrix);
            IntMatrix converted;
            if (gt_to) {
                if (!validate_ad(m))
                    throw std::invalid_argument("matrix is not an anti-diagonal pattern");
                converted = ad_to_gt(m);
            } else {
                if (!validate_gt(m))
                    throw std::invalid_argument("matrix is not a GT pattern");
                converted = gt_to_ad(m);
            }
            if (opts.format == "json") {
                Json j = Json::object();
                j["direction"] = gt_to ? "ad_to_gt" : "gt_to_ad";
                j["matrix"] = matrix_json(converted);
                buffer << j.dump(2) << "\n";
            } else {
                buffer << matrix_table(converted);
            }
        } else if (app.got_subcommand(cmd_ad)) {
            const IntMatrix m = parse_matrix(ad_matrix);
            const bool valid = ad_literal ? validate_ad_literal(m) : validate_ad(m);
            if (opts.format == "json") {
                Json j = Json::object();
                j["reading"] = ad_literal ? "literal" : "interlacing";
                j["valid"] = valid;
                j["matrix"] = matrix_json(m);
                buffer << j.dump(2) << "\n";
            } else {
                buffer << (valid ? "valid" : "invalid") << " under the "
                       << (ad_literal ? "literal" : "interlacing") << " reading\n";
            }
            if (!valid)
                code = 1;
        } else if (app.got_subcommand(cmd_verify)) {
            std::vector<Report> reports;
            if (cmd_verify->got_subcommand(v_basis)) {
                const Partition lambda(parse_int_list(verify_lambda));
                reports.push_back(check_basis(lambda, verify_n, guards, opts.threads));
            } else if (cmd_verify->got_subcommand(v_identity)) {
                const auto lambdas = partitions_up_to(verify_max_m, verify_n);
                reports.resize(lambdas.size());
                parallel_for(static_cast<std::int64_t>(lambdas.size()), opts.threads,
                             [&](std::int64_t i) {
                                 reports[static_cast<std::size_t>(i)] = check_identity(
                                     lambdas[static_cast<std::size_t>(i)], verify_n);
                             });
            } else if (cmd_verify->got_subcommand(v_roundtrip)) {
                reports.push_back(check_roundtrip(verify_n, verify_max_cells, opts.threads));
            } else if (cmd_verify->got_subcommand(v_rigidity)) {
                reports.push_back(check_rigidity(verify_n, verify_max_cells));
            } else {
                reports = run_suite(verify_n, verify_max_cells, guards, opts.threads);
            }
            code = render_reports(reports, opts, buffer);
        }
    } catch (const guard_exceeded& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!opts.output_path.empty()) {
        std::ofstream file(opts.output_path);
        if (!file) {
            err << "error: cannot write to " << opts.output_path << "\n";
            return 2;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

} // namespace rsct
