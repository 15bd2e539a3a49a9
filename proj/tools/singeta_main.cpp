#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "singeta/analysis.hpp"

using namespace singeta;

namespace {

int finish(const AnalysisReport& rep, bool json) {
    if (json)
        std::cout << report_to_json(rep);
    else
        std::cout << report_to_text(rep);
    std::cerr << "elapsed: " << rep.timing_ms << " ms\n";
    return rep.exit_code;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// random Lagrangian in a dim-2m standard space: graph of a random unitary
Lagrangian random_lagrangian(const HermSymplecticSpace& sp, std::mt19937& rng) {
    int m = sp.half_dim();
    std::normal_distribution<double> g;
    CMatrix z(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) z(i, j) = Cx(g(rng), g(rng));
    CMatrix q = orthonormal_columns(z);
    return lagrangian_of_phi(sp, {q});
}

HermSymplecticSpace standard_space(int m) {
    CMatrix gamma(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        gamma(2 * i, 2 * i) = Cx(0, 1);
        gamma(2 * i + 1, 2 * i + 1) = Cx(0, -1);
    }
    return HermSymplecticSpace(std::move(gamma));
}

int run_maslov_demo() {
    HermSymplecticSpace sp = standard_space(1);
    CMatrix v(2, 1), w(2, 1);
    v(0, 0) = 1;
    v(1, 0) = 1; // span(e1 + e2)
    w(0, 0) = 1;
    w(1, 0) = Cx(0, 1); // span(e1 + i e2)
    Lagrangian lv{sp, v}, lw{sp, w};
    std::cout << "gamma = diag(i, -i)\n";
    std::cout << "m(V, V) = " << maslov_m(lv, lv) << "\n";
    std::cout << "m(V, W) = " << maslov_m(lv, lw) << "  (V = e1+e2, W = e1+i e2)\n";
    std::cout << "m(W, V) = " << maslov_m(lw, lv) << "\n";
    Cx val(-1.0, 4.0 / 3.0);
    std::cout << "arg(-1+4i/3): principal " << arg_pi(val) << ", in [0,2pi) " << arg_2pi(val)
              << "\n";
    return 0;
}

int run_maslov_random(int dim, unsigned seed) {
    if (dim < 1 || dim > 64) {
        std::cerr << "dim must be in [1, 64]\n";
        return 1;
    }
    std::mt19937 rng(seed);
    HermSymplecticSpace sp = standard_space(dim);
    double worst_antisym = 0, worst_self = 0, worst_unitary = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Lagrangian v = random_lagrangian(sp, rng);
        Lagrangian w = random_lagrangian(sp, rng);
        double mvw = maslov_m(v, w), mwv = maslov_m(w, v);
        worst_antisym = std::max(worst_antisym, std::abs(mvw + mwv));
        worst_self = std::max(worst_self, std::abs(maslov_m(v, v)));
        CMatrix phi = phi_of_lagrangian(v).matrix;
        worst_unitary = std::max(
            worst_unitary,
            (phi * phi.adjoint() - CMatrix::identity(dim)).max_abs());
    }
    std::cout << "trials: 50, dim: " << dim << ", seed: " << seed << "\n";
    std::cout << "max |m(V,W)+m(W,V)| = " << worst_antisym << "\n";
    std::cout << "max |m(V,V)|        = " << worst_self << "\n";
    std::cout << "max |phi phi* - I|  = " << worst_unitary << "\n";
    bool ok = worst_antisym < 1e-9 && worst_self < 1e-9 && worst_unitary < 1e-10;
    std::cout << (ok ? "all properties hold\n" : "PROPERTY VIOLATION\n");
    return ok ? 0 : 1;
}

int run_table(const std::string& ranges, const std::string& out_path, int threads) {
    std::vector<std::pair<long long, long long>> spans;
    for (const std::string& part : split_commas(ranges)) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            std::cerr << "range must look like 2..6\n";
            return 1;
        }
        long long lo = std::stoll(part.substr(0, dots));
        long long hi = std::stoll(part.substr(dots + 2));
        if (lo < 2 || hi < lo) {
            std::cerr << "invalid range " << part << "\n";
            return 1;
        }
        spans.push_back({lo, hi});
    }
    if (spans.empty()) {
        std::cerr << "no ranges given\n";
        return 1;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
    }
    int k = static_cast<int>(spans.size());
    for (int i = 0; i < k; ++i) out << "a_" << (i + 1) << ",";
    out << "mu,signature,r0,r1,eta_float\n";
    std::vector<long long> a(k);
    for (int i = 0; i < k; ++i) a[i] = spans[i].first;
    while (true) {
        EtaValue eta = eta_brieskorn_fast(a, threads);
        long long sig = brieskorn_signature(a, threads);
        long long mu = 1;
        for (long long aj : a) mu *= (aj - 1);
        for (int i = 0; i < k; ++i) out << a[i] << ",";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", eta.to_float());
        out << mu << "," << sig << "," << eta.r0.str() << "," << eta.r1.str() << "," << buf
            << "\n";
        int pos = k - 1; // lexicographic order: last exponent varies fastest
        while (pos >= 0) {
            if (++a[pos] <= spans[pos].second) break;
            a[pos] = spans[pos].first;
            --pos;
        }
        if (pos < 0) break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral invariants of quasihomogeneous hypersurface singularities"};
    app.require_subcommand(1);

    std::string poly_text, vars_csv, sign_flag = "general";
    bool json = false;
    int threads = 1;

    auto* analyze = app.add_subcommand("analyze", "analyze a polynomial end to end");
    analyze->add_option("poly", poly_text, "polynomial, e.g. \"x^3+y^2\"")->required();
    analyze->add_option("--vars", vars_csv, "comma-separated variable order");
    analyze->add_flag("--json", json, "machine-readable report");
    analyze->add_option("--unit-eigenvalue-sign", sign_flag, "general|brieskorn")
        ->check(CLI::IsMember({"general", "brieskorn"}));
    analyze->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

    std::vector<long long> exponents;
    bool fast_only = false, naive_only = false, both = false;
    auto* brieskorn = app.add_subcommand("brieskorn", "analyze sum z_j^{a_j}");
    brieskorn->add_option("exponents", exponents, "a_1 a_2 ...")->required()->expected(-1);
    brieskorn->add_flag("--fast", fast_only, "fast lattice path only");
    brieskorn->add_flag("--naive", naive_only, "naive lattice path only");
    brieskorn->add_flag("--both", both, "both lattice paths (default)");
    brieskorn->add_flag("--json", json, "machine-readable report");
    std::string bk_sign = "brieskorn";
    brieskorn->add_option("--unit-eigenvalue-sign", bk_sign, "general|brieskorn")
        ->check(CLI::IsMember({"general", "brieskorn"}));
    brieskorn->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

    std::string ranges, out_path = "table.csv";
    auto* table = app.add_subcommand("table", "CSV over exponent ranges");
    table->add_option("--ranges", ranges, "e.g. 2..6,2..6,2..6")->required();
    table->add_option("--out", out_path, "output CSV path");
    table->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

    bool demo = false;
    std::vector<std::string> random_args;
    auto* maslov = app.add_subcommand("maslov", "Maslov-index demonstrations");
    maslov->add_flag("--demo", demo, "worked 1x1 examples");
    maslov->add_option("--random", random_args, "dim seed")->expected(2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            AnalysisOptions opt;
            if (!vars_csv.empty()) opt.variables = split_commas(vars_csv);
            opt.convention = sign_flag == "general" ? UnitEigenvalueSign::General
                                                    : UnitEigenvalueSign::BrieskornSign;
            opt.threads = threads;
            return finish(analyze_polynomial(poly_text, opt), json);
        }
        if (*brieskorn) {
            AnalysisOptions opt;
            opt.convention = bk_sign == "general" ? UnitEigenvalueSign::General
                                                  : UnitEigenvalueSign::BrieskornSign;
            opt.threads = threads;
            if (fast_only && naive_only) {
                std::cerr << "--fast and --naive are mutually exclusive\n";
                return 1;
            }
            if (fast_only) opt.run_naive = false;
            if (naive_only) opt.run_fast = false;
            return finish(analyze_brieskorn(exponents, opt), json);
        }
        if (*table) return run_table(ranges, out_path, threads);
        if (*maslov) {
            if (demo) return run_maslov_demo();
            if (random_args.size() == 2)
                return run_maslov_random(std::stoi(random_args[0]),
                                         static_cast<unsigned>(std::stoul(random_args[1])));
            std::cerr << "maslov needs --demo or --random dim seed\n";
            return 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
