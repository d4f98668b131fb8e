// Command-line front end: evaluation, transforms, residue summation,
// identity verification, and table generation.  Exit codes: 0 success,
// 1 numerical failure, 2 usage or parse error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mellin/mellin.hpp"

using namespace mellin;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_numeric = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string format = "plain";
    bool format_set = false;
    double tol_rel = 1e-8;
    double tol_abs = 1e-10;
    bool tol_rel_set = false;
    bool tol_abs_set = false;
    std::uint64_t seed = 12345;
    int samples = 10;
    bool quiet = false;
    bool timing = false;
};

std::string fmt_complex(Complex v) {
    char buf[80];
    if (v.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_complex(Complex v) {
    return "{\"im\":" + fmt_num(v.imag()) + ",\"re\":" + fmt_num(v.real()) + "}";
}

// Columns are 1-based for humans; ParseError carries 0-based offsets.
void print_parse_error(const std::string& src, const ParseError& e) {
    std::fprintf(stderr, "parse error at column %d: %s\n", e.position + 1,
                 e.what());
    std::fprintf(stderr, "  %s\n  %*s^\n", src.c_str(), e.position, "");
}

// Complex literal ("0.5", "-1", "0.5+2i", "pi") through the expression
// grammar; no free variables allowed.
Complex parse_complex_arg(const std::string& text) {
    return evaluate(*parse(text), {});
}

bool within(double err, Complex v, const Options& g) {
    return err <= std::max(g.tol_abs, g.tol_rel * std::abs(v));
}

// value plus metadata in the selected format; extra is a list of
// (key, rendered-number) pairs appended in the given order
void print_value(const Options& g, Complex v,
                 const std::vector<std::pair<std::string, std::string>>& extra) {
    if (g.format == "json") {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, rendered] : extra) {
            if (!first) out += ",";
            first = false;
            out += "\"" + k + "\":" + rendered;
        }
        if (!first) out += ",";
        out += "\"value\":" + json_complex(v) + "}";
        std::printf("%s\n", out.c_str());
    } else if (g.format == "csv") {
        std::string head = "value_re,value_im";
        std::string row = fmt_num(v.real()) + "," + fmt_num(v.imag());
        for (const auto& [k, rendered] : extra) {
            head += "," + k;
            row += "," + rendered;
        }
        std::printf("%s\n%s\n", head.c_str(), row.c_str());
    } else {
        if (g.quiet) {
            std::printf("%s\n", fmt_complex(v).c_str());
            return;
        }
        std::string line = fmt_complex(v);
        for (const auto& [k, rendered] : extra)
            line += "  " + k + " " + rendered;
        std::printf("%s\n", line.c_str());
    }
}

int cmd_eval(const Options& g, const std::string& fn,
             const std::vector<std::string>& args) {
    std::string src = fn + "(";
    for (size_t k = 0; k < args.size(); ++k) {
        if (k) src += ",";
        src += args[k];
    }
    src += ")";
    try {
        Complex v = evaluate(*parse(src), {});
        print_value(g, v, {});
        return exit_ok;
    } catch (const ParseError& e) {
        print_parse_error(src, e);
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
}

int cmd_mellin(const Options& g, const std::string& direction,
               const std::string& expr_src, const std::string& s_str, double x,
               double a, double T) {
    ExprPtr ast;
    try {
        ast = parse(expr_src);
    } catch (const ParseError& e) {
        print_parse_error(expr_src, e);
        return exit_usage;
    }
    try {
        QuadratureConfig qcfg{1e-13, 1e-13, 12};
        ValueWithError r;
        if (direction == "forward") {
            if (s_str.empty()) {
                std::fprintf(stderr, "mellin forward requires --s\n");
                return exit_usage;
            }
            Complex s = parse_complex_arg(s_str);
            r = mellin_forward(
                [&](double xv) {
                    return evaluate(*ast, {{"x", Complex{xv}}});
                },
                s, qcfg);
        } else {
            if (!(x > 0.0)) {
                std::fprintf(stderr, "mellin inverse requires --x > 0\n");
                return exit_usage;
            }
            VerticalLine line;
            line.a = a;
            line.T = T > 0.0 ? T : choose_truncation(a, 1.0, g.tol_abs);
            line.gamma_dominated = true;
            line.sup_f = 1.0;
            r = mellin_inverse(
                [&](Complex s) { return evaluate(*ast, {{"s", s}}); }, x, line,
                qcfg);
        }
        print_value(g, r.value,
                    {{"error_estimate", fmt_num(r.error_estimate)},
                     {"evaluations", std::to_string(r.evaluations)}});
        return within(r.error_estimate, r.value, g) ? exit_ok : exit_numeric;
    } catch (const ParseError& e) {
        print_parse_error(s_str, e);
        return exit_usage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    }
}

int cmd_residue_sum(const Options& g, const std::string& expr_src, double x,
                    const SeriesConfig& scfg) {
    ExprPtr ast;
    try {
        ast = parse(expr_src);
    } catch (const ParseError& e) {
        print_parse_error(expr_src, e);
        return exit_usage;
    }
    try {
        ValueWithError r = residue_series(
            [&](Complex s) { return evaluate(*ast, {{"s", s}}); }, x, scfg);
        print_value(g, r.value,
                    {{"error_estimate", fmt_num(r.error_estimate)},
                     {"terms_used", std::to_string(r.evaluations)}});
        return within(r.error_estimate, r.value, g) ? exit_ok : exit_numeric;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    }
}

int cmd_master_check(const Options& g, const std::string& f_src,
                     const std::string& s_str, double tol) {
    ExprPtr ast;
    try {
        ast = parse(f_src);
    } catch (const ParseError& e) {
        print_parse_error(f_src, e);
        return exit_usage;
    }
    try {
        Complex s = parse_complex_arg(s_str);
        double residual = master_theorem_check(
            [&](Complex w) { return evaluate(*ast, {{"s", w}}); }, s,
            {1e-14, 1e-8, 8});
        bool ok = residual <= tol;
        if (g.format == "json") {
            std::printf("{\"pass\":%s,\"residual\":%s,\"tolerance\":%s}\n",
                        ok ? "true" : "false", fmt_num(residual).c_str(),
                        fmt_num(tol).c_str());
        } else if (g.format == "csv") {
            std::printf("residual,tolerance,pass\n%s,%s,%s\n",
                        fmt_num(residual).c_str(), fmt_num(tol).c_str(),
                        ok ? "true" : "false");
        } else {
            std::printf("residual %.3g  tolerance %.3g  %s\n", residual, tol,
                        ok ? "pass" : "FAIL");
        }
        return ok ? exit_ok : exit_numeric;
    } catch (const ParseError& e) {
        print_parse_error(s_str, e);
        return exit_usage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    }
}

int cmd_verify(const Options& g, const std::string& identity) {
    RunConfig rc;
    rc.seed = g.seed;
    rc.samples = g.samples;
    if (g.tol_rel_set) rc.tol_rel = g.tol_rel;
    if (g.tol_abs_set) rc.tol_abs = g.tol_abs;
    Report rep;
    try {
        if (identity.empty()) {
            rep = run_all(rc);
        } else {
            auto t0 = std::chrono::steady_clock::now();
            rep.seed = rc.seed;
            rep.results = run_identity(identity, rc);
            for (const auto& r : rep.results) (r.pass ? rep.n_pass : rep.n_fail)++;
            rep.wall_time_s = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
        }
    } catch (const UnknownIdentity& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
    if (!g.quiet) {
        // verify reports default to JSON; --format overrides
        std::string format = g.format_set ? g.format : "json";
        std::string out;
        if (format == "json")
            out = report_json(rep, g.timing) + "\n";
        else if (format == "csv")
            out = report_csv(rep);
        else
            out = report_plain(rep, g.timing);
        std::fputs(out.c_str(), stdout);
    }
    return rep.n_fail == 0 ? exit_ok : exit_numeric;
}

struct TableRow {
    int n;
    double z;
    double value;
    bool has_z;
};

int cmd_table(const Options& g, const std::string& family,
              const std::string& n_range, const std::string& z_list) {
    int n_lo = 0, n_hi = 0;
    if (size_t dots = n_range.find(".."); dots != std::string::npos) {
        try {
            n_lo = std::stoi(n_range.substr(0, dots));
            n_hi = std::stoi(n_range.substr(dots + 2));
        } catch (const std::exception&) {
            std::fprintf(stderr, "bad --n range: %s\n", n_range.c_str());
            return exit_usage;
        }
    } else {
        try {
            n_lo = n_hi = std::stoi(n_range);
        } catch (const std::exception&) {
            std::fprintf(stderr, "bad --n value: %s\n", n_range.c_str());
            return exit_usage;
        }
    }
    if (n_lo < 0 || n_hi < n_lo || n_hi > 30) {
        std::fprintf(stderr, "--n out of range (0..30): %s\n", n_range.c_str());
        return exit_usage;
    }
    std::vector<double> zs;
    {
        size_t pos = 0;
        while (pos <= z_list.size()) {
            size_t next = z_list.find(',', pos);
            std::string piece = z_list.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            try {
                zs.push_back(std::stod(piece));
            } catch (const std::exception&) {
                std::fprintf(stderr, "bad --z value: %s\n", piece.c_str());
                return exit_usage;
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    bool has_z = family == "zeta-neg" || family == "eta-neg" ||
                 family == "bell" || family == "hermite";
    std::vector<TableRow> rows;
    try {
        for (int n = n_lo; n <= n_hi; ++n) {
            if (!has_z) {
                double v = 0.0;
                if (family == "L-neg")
                    v = 0.5 * euler_numbers(2 * n).values[size_t(2 * n)];
                else if (family == "bernoulli")
                    v = bernoulli_numbers(n).values[size_t(n)];
                else if (family == "euler")
                    v = euler_numbers(n).values[size_t(n)];
                else {
                    std::fprintf(stderr, "unknown table family: %s\n",
                                 family.c_str());
                    return exit_usage;
                }
                rows.push_back({n, 0.0, v, false});
                continue;
            }
            for (double z : zs) {
                double v = 0.0;
                if (family == "zeta-neg")
                    v = hurwitz_zeta_neg_int(n, Complex{z}).real();
                else if (family == "eta-neg")
                    v = 0.5 * euler_poly(n, Complex{z}).real();
                else if (family == "bell")
                    v = exp_poly(n, Complex{z}).real();
                else
                    v = hermite(n, Complex{z}).real();
                rows.push_back({n, z, v, true});
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numeric;
    }
    if (g.format == "json") {
        std::string out = "[";
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k) out += ",";
            out += "{\"n\":" + std::to_string(rows[k].n);
            out += ",\"value\":" + fmt_num(rows[k].value);
            if (rows[k].has_z) out += ",\"z\":" + fmt_num(rows[k].z);
            out += "}";
        }
        out += "]";
        std::printf("%s\n", out.c_str());
    } else if (g.format == "csv") {
        std::printf(has_z ? "n,z,value\n" : "n,value\n");
        for (const auto& r : rows) {
            if (r.has_z)
                std::printf("%d,%s,%s\n", r.n, fmt_num(r.z).c_str(),
                            fmt_num(r.value).c_str());
            else
                std::printf("%d,%s\n", r.n, fmt_num(r.value).c_str());
        }
    } else {
        for (const auto& r : rows) {
            if (r.has_z)
                std::printf("%-4d %-22s %s\n", r.n, fmt_num(r.z).c_str(),
                            fmt_num(r.value).c_str());
            else
                std::printf("%-4d %s\n", r.n, fmt_num(r.value).c_str());
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    Options g;
    if (const char* env = std::getenv("MELLIN_VERIFY_SEED"))
        g.seed = std::strtoull(env, nullptr, 10);

    CLI::App app{"Mellin transform toolkit"};
    app.require_subcommand(1);
    app.footer(
        "Expression grammar (version 1):\n"
        "  expr    := term (('+'|'-') term)*\n"
        "  term    := unary (('*'|'/') unary)*\n"
        "  unary   := '-' unary | power\n"
        "  power   := primary ('^' unary)?          right associative\n"
        "  primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'\n"
        "  number  := decimal or scientific literal, optional trailing 'i'\n"
        "Constants pi, e, i; bindings shadow constants.  '^' uses the\n"
        "principal branch exp(b log a), cut along the negative real axis.\n"
        "Functions: gamma(s) zeta(s,z) eta(s,z) L(s) hermite(n,z) bell(n,z)\n"
        "sin cos exp log cosh sqrt abs re im.");
    app.add_option("--format", g.format, "Output format (default plain)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--tol-rel", g.tol_rel,
                   "Relative tolerance for pass/fail decisions (default 1e-8)");
    app.add_option("--tol-abs", g.tol_abs,
                   "Absolute tolerance for pass/fail decisions (default 1e-10)");
    app.add_option("--seed", g.seed,
                   "RNG seed (default 12345 or MELLIN_VERIFY_SEED)");
    app.add_option("--samples", g.samples,
                   "Samples per identity for verify (default 10)");
    app.add_flag("--quiet", g.quiet, "Suppress non-essential output");
    app.add_flag("--timing", g.timing,
                 "Include wall time in reports (breaks byte determinism)");

    auto* eval_cmd =
        app.add_subcommand("eval", "Evaluate a builtin function at arguments");
    std::string eval_fn;
    std::vector<std::string> eval_args;
    eval_cmd->add_option("function", eval_fn, "Builtin name (e.g. zeta)")
        ->required();
    eval_cmd->add_option("args", eval_args, "Arguments as complex literals");
    eval_cmd->fallthrough();

    auto* mellin_cmd = app.add_subcommand(
        "mellin", "Forward or inverse Mellin transform of an expression");
    std::string mellin_dir, mellin_expr, mellin_s;
    double mellin_x = 0.0, mellin_a = 0.5, mellin_T = 0.0;
    mellin_cmd->add_option("direction", mellin_dir)
        ->check(CLI::IsMember({"forward", "inverse"}))
        ->required();
    mellin_cmd->add_option("expr", mellin_expr,
                           "Integrand in x (forward) or transform in s (inverse)")
        ->required();
    mellin_cmd->add_option("--s", mellin_s, "Transform point (complex literal)");
    mellin_cmd->add_option("--x", mellin_x, "Inversion point, x > 0");
    mellin_cmd->add_option("--a", mellin_a, "Inversion abscissa (default 0.5)");
    mellin_cmd->add_option("--T", mellin_T,
                           "Truncation height (default: from --tol-abs)");
    mellin_cmd->fallthrough();

    auto* residue_cmd = app.add_subcommand(
        "residue-sum", "Sum ((-1)^n/n!) f(-n) x^n for f given in s");
    std::string residue_expr;
    double residue_x = 0.0;
    residue_cmd->add_option("expr", residue_expr)->required();
    residue_cmd->add_option("--x", residue_x, "Expansion point, x > 0")
        ->required();
    residue_cmd->fallthrough();

    auto* master_cmd = app.add_subcommand(
        "master-check", "Residual of the interpolation rule for a kernel f");
    std::string master_f, master_s;
    master_cmd->add_option("--f", master_f, "Kernel f as expression in s")
        ->required();
    master_cmd->add_option("--s", master_s, "Point with 0 < Re(s) < 1")
        ->required();
    master_cmd->fallthrough();

    auto* verify_cmd =
        app.add_subcommand("verify", "Run the identity verification suite");
    std::string verify_identity;
    verify_cmd->add_option("--identity", verify_identity,
                           "Run a single identity by id");
    verify_cmd->fallthrough();

    auto* table_cmd =
        app.add_subcommand("table", "Emit special-value tables");
    std::string table_family, table_n = "0..10", table_z = "1";
    table_cmd
        ->add_option("family", table_family,
                     "zeta-neg | eta-neg | L-neg | bell | hermite | bernoulli "
                     "| euler")
        ->required();
    table_cmd->add_option("--n", table_n, "Index or range a..b, 0 <= n <= 30");
    table_cmd->add_option("--z", table_z, "Comma-separated z values");
    table_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    g.format_set = app.count("--format") > 0;
    g.tol_rel_set = app.count("--tol-rel") > 0;
    g.tol_abs_set = app.count("--tol-abs") > 0;

    if (*eval_cmd) return cmd_eval(g, eval_fn, eval_args);
    if (*mellin_cmd)
        return cmd_mellin(g, mellin_dir, mellin_expr, mellin_s, mellin_x,
                          mellin_a, mellin_T);
    if (*residue_cmd) {
        SeriesConfig scfg;
        if (g.tol_rel_set) scfg.rel_tol = g.tol_rel;
        return cmd_residue_sum(g, residue_expr, residue_x, scfg);
    }
    if (*master_cmd)
        return cmd_master_check(g, master_f, master_s,
                                g.tol_abs_set ? g.tol_abs : 1e-7);
    if (*verify_cmd) return cmd_verify(g, verify_identity);
    if (*table_cmd) return cmd_table(g, table_family, table_n, table_z);
    return exit_usage;
}
