#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "sympclif/bases.hpp"
#include "sympclif/expr.hpp"
#include "sympclif/json_io.hpp"
#include "sympclif/oplib.hpp"
#include "sympclif/pairing.hpp"
#include "sympclif/spectral.hpp"
#include "sympclif/suites.hpp"
#include "sympclif/symmetry.hpp"

using namespace sympclif;
using nlohmann::json;

namespace {

json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error("cannot open " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

json rescale_json(const RescaleFactor& f) {
    return {{"log2", std::to_string(f.log2_twice) + "/2"},
            {"pi_pow", std::to_string(f.pi4) + "/4"},
            {"value", f.value()},
            {"text", f.str()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator calculus for the symplectic Dirac operator"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite, JSON lines output");
    std::string suite_name = "all";
    SuiteParams params;
    verify->add_option("suite", suite_name, "commutators|bases|pairing|spectral|symmetry|all");
    verify->add_option("--n", params.n_max, "max dimension for bracket suites");
    verify->add_option("--degree", params.degree, "symmetry ansatz degree");
    verify->add_option("--max-j", params.max_j, "spectral Laguerre degree bound");
    verify->add_option("--max-k", params.max_k, "spectral homogeneity bound");
    verify->add_option("--h", params.h_max, "basis homogeneity bound");
    verify->add_option("--k", params.k_max, "basis index bound");
    verify->add_option("--threads", params.threads, "parallelism cap (default SYMPCLIF_THREADS)");

    // ---- basis ----
    auto* basis_cmd = app.add_subcommand("basis", "emit a monogenic basis element");
    std::string coords = "real", parity_s = "even", variant = "s";
    int bh = 0, bk = 0, bl = 0;
    basis_cmd->add_option("--coords", coords, "real|complex");
    basis_cmd->add_option("--parity", parity_s, "odd|even");
    basis_cmd->add_option("--variant", variant, "s|sE (sE: complex even sums, uses --l)");
    basis_cmd->add_option("--h", bh, "base homogeneity")->required();
    basis_cmd->add_option("--k", bk, "index k");
    basis_cmd->add_option("--l", bl, "index l for the sE variant");

    // ---- pair ----
    auto* pair_cmd = app.add_subcommand("pair", "evaluate a Fischer product");
    std::string form = "fischer", left_arg, right_arg;
    pair_cmd->add_option("--form", form, "fischer|fischer1");
    pair_cmd->add_option("--left", left_arg, "spinor JSON (inline or @file)")->required();
    pair_cmd->add_option("--right", right_arg, "spinor JSON (inline or @file)")->required();

    // ---- kernel ----
    auto* kernel_cmd = app.add_subcommand("kernel", "emit a two-point kernel");
    int kernel_k = 0;
    std::string which = "Z";
    kernel_cmd->add_option("--k", kernel_k, "kernel degree")->required();
    kernel_cmd->add_option("--which", which, "K|Z");

    // ---- apply ----
    auto* apply_cmd = app.add_subcommand("apply", "apply an operator expression to a spinor");
    std::string op_text, spinor_arg;
    int apply_n = 1;
    apply_cmd->add_option("--op", op_text, "operator expression, e.g. \"i*q*dy - dx*dq\"")->required();
    apply_cmd->add_option("--to", spinor_arg, "spinor JSON (inline or @file)")->required();
    apply_cmd->add_option("--n", apply_n, "dimension");

    // ---- spectral ----
    auto* spectral_cmd = app.add_subcommand("spectral", "spectral-theory checks");
    spectral_cmd->require_subcommand(1);
    auto* sp_verify = spectral_cmd->add_subcommand("verify", "eigen identity for given j, k, n");
    int sj = 0, sk = 0, sn = 1;
    sp_verify->add_option("--j", sj)->required();
    sp_verify->add_option("--k", sk)->required();
    sp_verify->add_option("--n", sn);
    auto* sp_exp = spectral_cmd->add_subcommand("exp-lemma", "exponential vacuum identity");
    int order = 8;
    sp_exp->add_option("--order", order, "alpha-degree truncation");

    // ---- symmetry ----
    auto* symmetry_cmd = app.add_subcommand("symmetry", "symmetry classification");
    symmetry_cmd->require_subcommand(1);
    auto* sym_solve = symmetry_cmd->add_subcommand("solve", "solve Ds A = B Ds");
    int sym_degree = 3;
    sym_solve->add_option("--degree", sym_degree, "coefficient degree bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            auto results = run_suite(suite_name, params);
            bool all = true;
            for (const auto& r : results) {
                std::cout << check_to_json_line(r) << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
        if (*basis_cmd) {
            Parity par = parity_s == "odd" ? Parity::Odd : Parity::Even;
            json out;
            if (variant == "sE") {
                if (coords != "complex" || par != Parity::Even)
                    throw std::runtime_error("variant sE requires --coords complex --parity even");
                out["spinor"] = to_json(basis_sE(bh, bl));
                out["rescale"] = rescale_json(rescale_sE());
            } else if (coords == "real") {
                out["spinor"] = to_json(basis_real(par, bh, bk));
                out["rescale"] = rescale_json(RescaleFactor{});
            } else if (coords == "complex") {
                out["spinor"] = to_json(basis_complex_rescaled(par, bh, bk));
                out["rescale"] = rescale_json(rescale_complex(par, bk));
            } else {
                throw std::runtime_error("unknown --coords " + coords);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*pair_cmd) {
            Spinor a = spinor_from_json(parse_json_arg(left_arg));
            Spinor b = spinor_from_json(parse_json_arg(right_arg));
            PairingValue v = form == "fischer1" ? fischer1(a, b) : fischer(a, b);
            json out = to_json(v);
            out["float"] = {v.to_float().real(), v.to_float().imag()};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*kernel_cmd) {
            TwoPointKernel k = which == "K" ? kernel_K(kernel_k) : kernel_Z(kernel_k);
            json out = to_json(k);
            out["k"] = kernel_k;
            out["which"] = which;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*apply_cmd) {
            OpExpr e = parse(op_text);
            WeylElement op = evaluate(e, apply_n);
            Spinor s = spinor_from_json(parse_json_arg(spinor_arg));
            std::cout << to_json(apply(op, s)).dump(2) << "\n";
            return 0;
        }
        if (*spectral_cmd) {
            if (*sp_verify) {
                json results = json::array();
                bool all = true;
                auto corpus = monogenic_corpus(sn, sk);
                for (size_t i = 0; i < corpus.size(); ++i) {
                    bool ok = verify_conjugated_eigen(sj, sk, sn, corpus[i]);
                    all = all && ok;
                    results.push_back({{"monogenic", i}, {"pass", ok}});
                }
                json out{{"j", sj},
                         {"k", sk},
                         {"n", sn},
                         {"eigenvalue", eigenvalue(sj, sk, sn).str()},
                         {"checks", results}};
                std::cout << out.dump(2) << "\n";
                return all ? 0 : 1;
            }
            if (*sp_exp) {
                bool ok = exp_identity_truncated(order);
                std::cout << json{{"order", order}, {"pass", ok}}.dump(2) << "\n";
                return ok ? 0 : 1;
            }
        }
        if (*symmetry_cmd && *sym_solve) {
            SymmetryBasis basis = solve_symmetries(sym_degree);
            json ops = json::array();
            for (const auto& pr : basis.ops)
                ops.push_back({{"A", to_json(pr.A)}, {"B", to_json(pr.B)}});
            json out{{"degree", sym_degree}, {"dimension", basis.ops.size()}, {"basis", ops}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
