// qderange: compute the q-derangement polynomials d_n(q) exactly, cross-check
// the independent generators, and verify the structure of the coefficients
// (ratio monotonicity, spiral, unimodal peak, log-concavity, boundary closed
// forms).
//
// Exit codes: 0 all requested checks pass, 1 at least one property violation,
// 2 usage or scope error (including oracle resource limits).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qderange/qderange.hpp"

namespace {

using namespace qderange;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int env_oracle_cap() {
    const char* env = std::getenv("QDERANGE_ORACLE_CAP");
    if (env == nullptr) return kDefaultOracleCap;
    try {
        const int cap = std::stoi(env);
        if (cap < 1) throw std::invalid_argument("");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument("QDERANGE_ORACLE_CAP must be a positive integer");
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string witness(const PropertyReport& report) {
    if (!report.first_violation) return "";
    const Violation& v = *report.first_violation;
    std::ostringstream out;
    out << "(index " << v.index << ": " << v.left << " vs " << v.right << ")";
    return out.str();
}

int run_compute(int n, const std::string& method_name, const std::string& format_name, int cap) {
    const Method method = method_from_string(method_name);
    const OutputFormat format = format_from_string(format_name);
    if (n < 1) throw std::invalid_argument("compute: n must be >= 1");
    std::cout << render(compute(n, method, cap), method, format);
    return kExitPass;
}

const std::vector<std::string> kAllChecks = {"ratio",      "spiral", "unimodal",
                                             "logconcave", "lemma2", "crossmethod"};

int run_verify(int from, int to, std::vector<std::string> checks, int cap) {
    if (from < 1 || to < from) throw std::invalid_argument("verify: need 1 <= from <= to");
    if (checks.empty()) checks = kAllChecks;
    bool any_fail = false;
    bool any_scope = false;

    for (int n = from; n <= to; ++n) {
        const CoeffSeq seq = compute_recursive(n);
        std::ostringstream line;
        line << "n=" << n;
        for (const std::string& check : checks) {
            std::string cell;
            try {
                if (check == "crossmethod") {
                    bool ok = compute_wachs(n) == seq &&
                              compute(n, Method::CoeffRecurrence) == seq;
                    if (n <= cap) ok = ok && oracle_dn(n, cap) == seq;
                    cell = ok ? "pass" : "FAIL(methods disagree)";
                    any_fail |= !ok;
                } else if (check == "lemma2" && n % 2 != 0) {
                    cell = "n/a(odd n)";  // the closed forms are stated for even n only
                } else {
                    PropertyReport report;
                    if (check == "ratio") report = verify_ratio_monotone(seq);
                    else if (check == "spiral") report = verify_spiral(seq);
                    else if (check == "unimodal") report = verify_unimodal_peak(seq);
                    else if (check == "logconcave") report = verify_log_concave(seq);
                    else if (check == "lemma2") report = verify_lemma2(seq);
                    else throw std::invalid_argument("unknown check '" + check + "'");
                    cell = report.pass ? "pass" : "FAIL" + witness(report);
                    any_fail |= !report.pass;
                }
            } catch (const scope_error&) {
                cell = "scope(n<6)";
                any_scope = true;
            }
            line << "  " << check << "=" << cell;
        }
        std::cout << line.str() << "\n";
    }

    if (any_fail) {
        std::cout << "verify: at least one property violation\n";
        return kExitViolation;
    }
    if (any_scope) {
        std::cout << "verify: some checks were out of scope (theorem checks need n >= 6)\n";
        return kExitUsage;
    }
    std::cout << "verify: all requested checks pass\n";
    return kExitPass;
}

int run_bench(int n_max, const std::string& method_name) {
    const Method method = method_from_string(method_name);
    if (method == Method::Oracle)
        throw std::invalid_argument("bench: the enumeration oracle is factorial-time; benchmark "
                                    "recursive, wachs or coeff-recurrence instead");
    if (n_max < 2) throw std::invalid_argument("bench: n-max must be >= 2");

    std::vector<int> schedule;
    for (double x = std::min(10, n_max); x < n_max; x *= 1.41421356)
        if (schedule.empty() || static_cast<int>(x) != schedule.back())
            schedule.push_back(static_cast<int>(x));
    schedule.push_back(n_max);

    std::cout << "      n     coeffs      wall_ms   (" << to_string(method) << ")\n";
    CoeffSeq largest;
    for (int n : schedule) {
        const auto start = std::chrono::steady_clock::now();
        CoeffSeq seq = compute(n, method);
        const double ms = elapsed_ms(start);
        std::ostringstream row;
        row.setf(std::ios::fixed);
        row.precision(2);
        row.width(7);
        row << n;
        row.width(11);
        row << seq.degree();
        row.width(13);
        row << ms;
        std::cout << row.str() << "\n";
        if (n == n_max) largest = std::move(seq);
    }

    const Method other = method == Method::Recursive ? Method::CoeffRecurrence : Method::Recursive;
    if (compute(n_max, other) != largest) {
        std::cout << "bench: methods disagree at n=" << n_max << "\n";
        return kExitViolation;
    }
    std::cout << "cross-check vs " << to_string(other) << " at n=" << n_max << ": OK\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-derangement polynomials: compute, cross-check and verify d_n(q)"};
    app.require_subcommand(1);

    int compute_n = 0;
    std::string compute_method = "recursive";
    std::string compute_format = "text";
    CLI::App* cmd_compute = app.add_subcommand("compute", "print the coefficient table of d_n(q)");
    cmd_compute->add_option("--n", compute_n, "order n")->required();
    cmd_compute->add_option("--method", compute_method, "generator (default recursive)")
        ->check(CLI::IsMember({"recursive", "wachs", "oracle", "coeff-recurrence"}));
    cmd_compute->add_option("--format", compute_format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int verify_from = 0;
    int verify_to = 0;
    std::vector<std::string> verify_checks;
    int verify_cap = -1;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the structural checks over a range of n");
    cmd_verify->add_option("--from", verify_from, "first n")->required();
    cmd_verify->add_option("--to", verify_to, "last n")->required();
    cmd_verify
        ->add_option("--checks", verify_checks,
                     "subset of ratio,spiral,unimodal,logconcave,lemma2,crossmethod (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(kAllChecks));
    cmd_verify->add_option("--oracle-cap", verify_cap,
                           "largest n the enumeration oracle will attempt");

    int bench_n_max = 0;
    std::string bench_method = "recursive";
    CLI::App* cmd_bench = app.add_subcommand("bench", "time a generator on a geometric schedule");
    cmd_bench->add_option("--n-max", bench_n_max, "largest n to time")->required();
    cmd_bench->add_option("--method", bench_method, "generator (oracle excluded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        const int cap = verify_cap > 0 ? verify_cap : env_oracle_cap();
        if (cmd_compute->parsed())
            return run_compute(compute_n, compute_method, compute_format, cap);
        if (cmd_verify->parsed()) return run_verify(verify_from, verify_to, verify_checks, cap);
        if (cmd_bench->parsed()) return run_bench(bench_n_max, bench_method);
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const scope_error& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
