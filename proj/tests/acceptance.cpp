// Acceptance gate: runs every verification suite at its pinned
// configuration and prints one pass/fail line per criterion. All checks
// are exact equalities in Q(t); the only numeric cells are the positivity
// smoke tests at rational sample points, which are themselves exact.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "qharm/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string description;
    std::string suite;
};

const std::array<Criterion, 13> kSuiteCriteria = {{
    {1, "algebra soundness (associativity, star anti-automorphism)", "algebra-soundness"},
    {2, "centrality and radius identities (Q central, Q_j list, product form)", "radius-centrality"},
    {3, "derivative relations (8)-(13) as zero operators", "derivative-relations"},
    {4, "Laplacian equivalence: composition == closed monomial form", "laplace-equivalence"},
    {5, "Laplacian-radius relations (18)/(19) with basic brackets", "laplacian-radius"},
    {6, "equivariance of Delta_q and Qhat under U_q(so_N)", "equivariance"},
    {7, "projector: kernel, idempotence, rank = dim H_m", "projector"},
    {8, "harmonic decomposition A_m = sum Q^j H_{m-2j}", "harmonic-decomposition"},
    {9, "closed forms (31)/(33), little q-Jacobi rendering, q->1 limit", "closed-forms"},
    {10, "zonal and t-polynomials against the projector, (41)/(44)/(45)", "zonal-tpoly"},
    {11, "Xi bases: count, harmonicity, full rank; Prop 7 dimensions", "xi-basis"},
    {12, "sphere functional, Gram orthogonality, positivity smoke", "sphere"},
    {13, "dual pair: sl_2 relations, module coefficients, bookkeeping", "dual-pair"},
}};

bool run_command(const std::string& cmd, std::string* output, int* exit_code) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return false;
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (output) *output = std::move(out);
    if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return true;
}

void report(int number, const std::string& description, bool ok, int* failures,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++*failures;
}

std::string first_failure(const qharm::Report& rep) {
    for (const auto& c : rep.cells)
        if (!c.ok) return c.id + (c.detail.empty() ? "" : ": " + c.detail);
    return "";
}

} // namespace

int main(int argc, char** argv) {
    int failures = 0;

    for (const Criterion& c : kSuiteCriteria) {
        qharm::Report rep;
        bool ok = false;
        std::string detail;
        try {
            rep = qharm::run_suite(c.suite, {});
            ok = rep.ok();
            if (!ok) detail = first_failure(rep);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        report(c.number, c.description, ok, &failures, detail);
    }

    // Criterion 14: CLI round-trip property, `verify all` exits 0,
    // byte-identical output across two runs.
    {
        bool ok = false;
        std::string detail;
        try {
            qharm::Report rep = qharm::run_suite("cli-roundtrip", {});
            ok = rep.ok();
            if (!ok) detail = first_failure(rep);
        } catch (const std::exception& e) {
            detail = e.what();
        }

        if (ok) {
            if (argc < 2) {
                ok = false;
                detail = "path to the CLI binary required as argv[1]";
            } else {
                const std::string cli = "'" + std::string(argv[1]) + "'";
                std::string out;
                int code = -1;
                if (run_command(cli + " dims 3 2", &out, &code) &&
                    (code != 0 || out != "dim A_m = 6, dim H_m = 5\n")) {
                    ok = false;
                    detail = "dims output fixture mismatch: " + out;
                }
                if (ok && run_command(cli + " eval \"(1-q^2)/(1-q)\" --t0 1", &out, &code) &&
                    (code != 0 || out != "2\n")) {
                    ok = false;
                    detail = "eval output fixture mismatch: " + out;
                }
                if (ok) {
                    std::string out1, out2;
                    int code1 = -1, code2 = -1;
                    bool ran = run_command(cli + " verify all", &out1, &code1) &&
                               run_command(cli + " verify all", &out2, &code2);
                    if (!ran) {
                        ok = false;
                        detail = "could not launch the CLI";
                    } else if (code1 != 0 || code2 != 0) {
                        ok = false;
                        detail = "verify all exit codes: " + std::to_string(code1) + ", " +
                                 std::to_string(code2);
                    } else if (out1 != out2) {
                        ok = false;
                        detail = "verify all output differs between runs";
                    }
                }
            }
        }
        report(14, "CLI: parse/print round-trip, verify all exit 0, deterministic output", ok,
               &failures, detail);
    }

    if (failures == 0) {
        std::cout << "acceptance: all 14 criteria PASS" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
