// Command-line front end for the quantum Euclidean harmonics engine.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qharm/dualpair.hpp"
#include "qharm/harmonic.hpp"
#include "qharm/jsonio.hpp"
#include "qharm/parse.hpp"
#include "qharm/sphere.hpp"
#include "qharm/verify.hpp"

namespace {

using namespace qharm;

struct Args {
    bool json = false;
    int N = 0, m = 0, m1 = 0, m1p = 0, l = 0;
    std::string expr, expr2, suite, n_range, t0 = "1";
    int deg = -1;
    std::uint64_t seed = 0x5EED5EEDULL;
    bool has_seed_default = true;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const Report& rep) {
    std::cout << "suite: " << rep.suite << "\n";
    int okc = 0;
    for (const Cell& c : rep.cells) {
        std::cout << (c.ok ? "  [ok]   " : "  [FAIL] ") << c.id;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
        if (c.ok) ++okc;
    }
    std::cout << "result: " << (rep.ok() ? "PASS" : "FAIL") << " (" << okc << "/"
              << rep.cells.size() << " cells)\n";
}

VerifyOptions make_options(const Args& a) {
    VerifyOptions o;
    o.seed = a.seed;
    if (!a.n_range.empty()) {
        o.has_n = true;
        auto dots = a.n_range.find("..");
        if (dots == std::string::npos) {
            o.n_lo = o.n_hi = std::stoi(a.n_range);
        } else {
            o.n_lo = std::stoi(a.n_range.substr(0, dots));
            o.n_hi = std::stoi(a.n_range.substr(dots + 2));
        }
        if (o.n_lo < 2 || o.n_hi < o.n_lo) throw InvalidDimension("bad --N range");
    }
    if (a.deg >= 0) {
        o.has_deg = true;
        o.deg = a.deg;
    }
    return o;
}

int run_verify(const Args& a) {
    VerifyOptions o = make_options(a);
    std::vector<Report> reports;
    if (a.suite == "all") {
        reports = run_all_suites(o);
    } else {
        if (!is_suite_name(a.suite)) {
            std::cerr << "unknown suite '" << a.suite << "'; available:";
            for (const auto& n : suite_names()) std::cerr << " " << n;
            std::cerr << " all\n";
            return 2;
        }
        reports.push_back(run_suite(a.suite, o));
    }
    bool all_ok = true;
    if (a.json) {
        json out = json::array();
        for (const Report& r : reports) {
            out.push_back(report_to_json(r));
            all_ok = all_ok && r.ok();
        }
        print_json(a.suite == "all" ? out : out[0]);
    } else {
        for (const Report& r : reports) {
            print_report(r);
            all_ok = all_ok && r.ok();
        }
        std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact harmonic analysis on the quantum Euclidean space E^N_q"};
    app.require_subcommand(1);
    Args a;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", a.json, "machine-readable output"); };

    CLI::App* dims = app.add_subcommand("dims", "dimensions of A_m and H_m");
    dims->add_option("N", a.N)->required();
    dims->add_option("m", a.m)->required();
    add_json(dims);

    CLI::App* project_cmd = app.add_subcommand("project", "harmonic projection of an expression");
    project_cmd->add_option("N", a.N)->required();
    project_cmd->add_option("expr", a.expr)->required();
    add_json(project_cmd);

    CLI::App* zonal_cmd = app.add_subcommand("zonal", "zonal polynomial H_m(x_1^{m1} x_1'^{m1'})");
    zonal_cmd->add_option("N", a.N)->required();
    zonal_cmd->add_option("m1", a.m1)->required();
    zonal_cmd->add_option("m1p", a.m1p)->required();
    add_json(zonal_cmd);

    CLI::App* tpoly_cmd = app.add_subcommand("tpoly", "associated t-polynomial t^{N,m}_{m1,m1'}");
    tpoly_cmd->add_option("N", a.N)->required();
    tpoly_cmd->add_option("m", a.m)->required();
    tpoly_cmd->add_option("m1", a.m1)->required();
    tpoly_cmd->add_option("m1p", a.m1p)->required();
    tpoly_cmd->add_option("l", a.l)->required();
    add_json(tpoly_cmd);

    CLI::App* basis_cmd = app.add_subcommand("basis", "orthogonal basis of H_m");
    basis_cmd->add_option("N", a.N)->required();
    basis_cmd->add_option("m", a.m)->required();
    add_json(basis_cmd);

    CLI::App* gram_cmd = app.add_subcommand("gram", "Gram matrix of the H_m basis");
    gram_cmd->add_option("N", a.N)->required();
    gram_cmd->add_option("m", a.m)->required();
    add_json(gram_cmd);

    CLI::App* inner_cmd = app.add_subcommand("inner", "scalar product of two expressions");
    inner_cmd->add_option("N", a.N)->required();
    inner_cmd->add_option("expr1", a.expr)->required();
    inner_cmd->add_option("expr2", a.expr2)->required();
    add_json(inner_cmd);

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a scalar expression at t = t0");
    eval_cmd->add_option("expr", a.expr)->required();
    eval_cmd->add_option("--t0", a.t0, "rational value of t = q^(1/2)")->required();
    add_json(eval_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", a.suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--N", a.n_range, "dimension or range, e.g. 4 or 3..5");
    verify_cmd->add_option("--deg", a.deg, "degree cap override");
    verify_cmd->add_option("--seed", a.seed, "seed for randomized cells");
    add_json(verify_cmd);

    CLI::App* suites_cmd = app.add_subcommand("suites", "list verification suites");
    add_json(suites_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) {
            mpz_class da = dim_full(a.N, a.m), dh = dim_harmonic(a.N, a.m);
            if (a.json) {
                json j;
                j["N"] = a.N;
                j["m"] = a.m;
                j["dim_A"] = da.get_str();
                j["dim_H"] = dh.get_str();
                print_json(j);
            } else {
                std::cout << "dim A_m = " << da.get_str() << ", dim H_m = " << dh.get_str() << "\n";
            }
        } else if (project_cmd->parsed()) {
            Poly p = project(parse_poly(a.expr, a.N));
            if (a.json) print_json(poly_to_json(p));
            else std::cout << p.str() << "\n";
        } else if (zonal_cmd->parsed()) {
            Poly p = zonal(a.N, a.m1, a.m1p);
            if (a.json) print_json(poly_to_json(p));
            else std::cout << p.str() << "\n";
        } else if (tpoly_cmd->parsed()) {
            Poly p = t_poly(a.N, a.m, a.m1, a.m1p, a.l);
            if (a.json) print_json(poly_to_json(p));
            else std::cout << p.str() << "\n";
        } else if (basis_cmd->parsed()) {
            auto basis = xi_basis(a.N, a.m);
            if (a.json) {
                json arr = json::array();
                for (const auto& [lab, xi] : basis) {
                    json e;
                    e["label"] = label_to_json(lab);
                    e["poly"] = poly_to_json(xi);
                    arr.push_back(std::move(e));
                }
                json j;
                j["N"] = a.N;
                j["m"] = a.m;
                j["basis"] = std::move(arr);
                print_json(j);
            } else {
                for (const auto& [lab, xi] : basis)
                    std::cout << lab.str() << "  " << xi.str() << "\n";
            }
        } else if (gram_cmd->parsed()) {
            std::vector<Poly> fam;
            for (const auto& [lab, xi] : xi_basis(a.N, a.m)) fam.push_back(xi);
            QMatrix g = gram(fam);
            if (a.json) {
                print_json(matrix_to_json(g));
            } else {
                for (const auto& row : g) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? " ; " : "") << row[j].str();
                    std::cout << "\n";
                }
            }
        } else if (inner_cmd->parsed()) {
            QScalar v = inner(parse_poly(a.expr, a.N), parse_poly(a.expr2, a.N));
            if (a.json) {
                json j;
                j["value"] = v.str();
                print_json(j);
            } else {
                std::cout << v.str() << "\n";
            }
        } else if (eval_cmd->parsed()) {
            mpq_class t0(a.t0);
            t0.canonicalize();
            mpq_class v = parse_scalar(a.expr).eval_at(t0);
            if (a.json) {
                json j;
                j["value"] = v.get_str();
                print_json(j);
            } else {
                std::cout << v.get_str() << "\n";
            }
        } else if (verify_cmd->parsed()) {
            return run_verify(a);
        } else if (suites_cmd->parsed()) {
            if (a.json) {
                json j;
                j["suites"] = suite_names();
                print_json(j);
            } else {
                for (const auto& n : suite_names()) std::cout << n << "\n";
            }
        }
        return 0;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
