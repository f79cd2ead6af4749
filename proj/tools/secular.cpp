// Command-line front end: exact moment tables, piecewise-gamma curves,
// Monte-Carlo estimators, conjecture predictors, and the finite-field
// variance laboratory, with CSV / SVG / text output and stable exit codes
// (0 ok, 1 precondition, 2 budget, 3 verification).
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "secular/acceptance.hpp"
#include "secular/csvout.hpp"
#include "secular/svgout.hpp"

using namespace secular;

namespace {

struct OutputSink {
    std::string format = "text"; // csv | svg | text
    std::string path;            // empty = stdout
};

void write_out(const OutputSink& sink, const std::string& payload) {
    if (sink.path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(sink.path, std::ios::binary);
    require(f.good(), "output path must be writable");
    f << payload;
    require(f.good(), "output path must be writable");
}

struct Series {
    std::vector<double> xs, ys;
    std::string title, x_label, y_label;
    std::vector<double> marks;
};

// render a table (and optional plot series) in the requested format
void emit(const OutputSink& sink, const OutputTable& table, const Series* series) {
    if (sink.format == "csv") {
        write_out(sink, to_csv(table));
    } else if (sink.format == "text") {
        write_out(sink, to_text(table));
    } else if (sink.format == "svg") {
        require(series != nullptr, "svg output needs a plottable series; use table or gamma");
        write_out(sink, svg_line_plot(series->xs, series->ys, series->title, series->x_label,
                                      series->y_label, series->marks));
    } else {
        require(false, "format must be one of csv, svg, text");
    }
}

void add_output_flags(CLI::App* cmd, OutputSink& sink) {
    cmd->add_option("--format", sink.format, "output format: csv, svg, or text")
        ->check(CLI::IsMember({"csv", "svg", "text"}));
    cmd->add_option("--out", sink.path, "write output to this path instead of stdout");
}

std::string branch_label(int k, long long m, long long N) {
    if (m < 0 || m > static_cast<long long>(k) * N) return "zero-outside-support";
    if (m <= N) return "binomial-low";
    if (m >= static_cast<long long>(k - 1) * N) return "binomial-high";
    if (k == 3) return "middle-closed-form";
    return "antidiagonal-split";
}

std::string ratio_cell(const VarianceReport& r) {
    if (r.both_zero) return "exact-zero";
    if (r.prediction == 0) return "undefined";
    return format_float(r.ratio);
}

// ---- verify suites ------------------------------------------------------

struct CheckLog {
    int failures = 0;
    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            std::printf("ok    %s\n", name.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %s: %s\n", name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
};

void verify_moments(CheckLog& log, bool quick) {
    log.run("brute-force enumeration matches the lattice DP", [&] {
        for (int k : {2, 3})
            for (long long N = 1; N <= (quick ? 3 : 4); ++N) {
                std::vector<BigInt> v = ik_lattice_distribution(k, N);
                for (long long m = 0; m <= k * N; ++m)
                    require_verified(ik_bruteforce(k, m, N) == v[m],
                                     "brute force must equal the DP");
            }
    });
    log.run("anti-diagonal split matches the lattice DP", [&] {
        for (int k : {2, 3, 4})
            for (long long N = 1; N <= (quick ? 4 : 6); ++N) {
                std::vector<BigInt> v = ik_lattice_distribution(k, N);
                for (long long m = 0; m <= k * N; ++m)
                    require_verified(ik_antidiagonal_split(k, m, N) == v[m],
                                     "split evaluation must equal the DP");
            }
    });
    log.run("moment-table invariants (flanks, palindrome, box total)", [&] {
        for (int k : {1, 2, 3, 4})
            for (long long N = 1; N <= (quick ? 5 : 8); ++N) moment_table(k, N);
    });
    log.run("generating-function coefficients match the table", [&] {
        for (int k : {2, 3})
            for (long long N = 1; N <= (quick ? 5 : (k == 2 ? 12 : 10)); ++N) {
                MomentTable t = moment_table(k, N);
                DensePoly<Rational> p = pk_closed_form(k, N);
                for (long long m = 0; m <= k * N; ++m)
                    require_verified(p.get(m) == Rational(t.values[m]),
                                     "generating function must match the table");
            }
    });
    log.run("middle-range closed form for k = 3", [&] {
        for (long long N = 1; N <= (quick ? 6 : 10); ++N) {
            MomentTable t = moment_table(3, N);
            for (long long m = N + 1; m < 2 * N; ++m)
                require_verified(i3_middle_closed_form(N, m) == t.values[m],
                                 "middle closed form must match the table");
        }
        require_verified(ik_value(3, 15, 10) == BigInt(144743),
                         "spot value I_3(15;10) must equal 144743");
    });
    log.run("contingency counts and composition identities", [&] {
        require_verified(contingency_count({2, 1, 1}, {3, 1}) == BigInt(3),
                         "contingency spot count must equal 3");
        require_verified(*ik_closed_form(2, 3, 5) == BigInt(20),
                         "I_2(3;5) must equal 20");
        require_verified(macmahon_box(2, 2, 20) == BigInt(19481),
                         "box total must match the k=2, N=20 sum");
    });
}

void verify_gamma(CheckLog& log, bool quick, uint64_t seed) {
    log.run("printed piecewise polynomials (k = 2, 3)", [&] { printed_piece_regression(); });
    log.run("structural invariants up to the budget cap", [&] {
        for (int k = 1; k <= (quick ? 3 : 4); ++k) gamma_full(k);
    });
    log.run("spot rational values", [&] {
        require_verified(gamma_at_rational(2, parse_rational("1/2")) == parse_rational("1/48"),
                         "gamma_2(1/2) must equal 1/48");
        require_verified(gamma_at_rational(2, parse_rational("4/5")) == parse_rational("32/375"),
                         "gamma_2(4/5) must equal 32/375");
        require_verified(gamma_at_rational(3, parse_rational("3/2")) ==
                             parse_rational("103/573440"),
                         "gamma_3(3/2) must equal 103/573440");
        require_verified(gamma_at_rational(3, parse_rational("7/5")) ==
                             parse_rational("2639233/15750000000"),
                         "gamma_3(7/5) must equal 2639233/15750000000");
    });
    log.run("shape factor spot values", [&] {
        require_verified(script_P(2, parse_rational("1/4")) == parse_rational("1/48"),
                         "P_2(1/4) must equal 1/48");
        require_verified(script_P(3, parse_rational("3/5")) == parse_rational("1/15750000000"),
                         "P_3(3/5) must equal 1/15750000000");
    });
    log.run("Monte-Carlo concordance (5 sigma at the given seed)", [&] {
        McEstimate e = gamma_monte_carlo(2, 0.5, quick ? 100000 : 400000, seed);
        double exact = 1.0 / 48.0;
        require_verified(std::abs(e.mean - exact) <= 5.0 * e.std_error,
                         "gamma Monte Carlo must sit within 5 standard errors");
    });
}

void verify_ff(CheckLog& log, bool quick, uint64_t seed) {
    log.run("divisor-table sanity and multiplicativity", [&] {
        DivisorTable t = dk_table(3, 6, 2);
        require_verified(t.dk_value(fq_monomial(3, 3)) == 4, "d_2(t^3) must equal 4");
        require_verified(t.dk_of(0, 0) == 1, "d_k(1) must equal 1");
        CounterRng rng(seed);
        int found = 0;
        const int want = quick ? 20 : 100;
        while (found < want) {
            int df = 1 + static_cast<int>(rng.next_u64() % 3);
            int dg = 1 + static_cast<int>(rng.next_u64() % 3);
            long long cf = static_cast<long long>(rng.next_u64() % pow_ll(3, df));
            long long cg = static_cast<long long>(rng.next_u64() % pow_ll(3, dg));
            FqPoly f = monic_of_code(3, df, cf), g = monic_of_code(3, dg, cg);
            if (fq_gcd(f, g).degree() != 0) continue;
            ++found;
            require_verified(t.dk_value(fq_mul(f, g)) == t.dk_value(f) * t.dk_value(g),
                             "d_k must be multiplicative on coprime pairs");
        }
    });
    log.run("short-interval variance spot values", [&] {
        require_verified(short_interval_variance(3, 4, 0, 2).variance == 2,
                         "variance at q=3, n=4, h=0, k=2 must equal 2");
        require_verified(short_interval_variance(3, 5, 0, 2).variance == 8,
                         "variance at q=3, n=5, h=0, k=2 must equal 8");
        require_verified(short_interval_variance(3, 3, 0, 3).variance == 2,
                         "variance at q=3, n=3, h=0, k=3 must equal 2");
        if (!quick)
            require_verified(short_interval_variance(3, 4, 0, 3).variance == 84,
                             "variance at q=3, n=4, h=0, k=3 must equal 84");
    });
    log.run("zero-variance range and identical interval sums", [&] {
        VarianceReport r = short_interval_variance(3, 4, 2, 2);
        require_verified(r.variance == 0 && r.both_zero,
                         "variance must vanish for h at the theorem threshold");
        DivisorTable t = dk_table(3, 4, 2);
        BigInt first = short_interval_sum(t, monic_of_code(3, 4, 0), 2);
        for (long long c = 0; c < 81; c += 27)
            require_verified(short_interval_sum(t, monic_of_code(3, 4, c), 2) == first,
                             "all interval sums must coincide in the zero range");
    });
    log.run("progression variance spot values", [&] {
        FqPoly Q(3, {1, 0, 1});
        require_verified(ap_variance_direct(3, Q, 2, 2).variance == parse_rational("39/64"),
                         "variance at q=3, Q=t^2+1, n=2, k=2 must equal 39/64");
        require_verified(ap_variance_direct(3, Q, 2, 3).variance == parse_rational("351/64"),
                         "variance at q=3, Q=t^2+1, n=2, k=3 must equal 351/64");
        require_verified(ap_variance_direct(3, Q, 3, 3).variance == parse_rational("111/64"),
                         "variance at q=3, Q=t^2+1, n=3, k=3 must equal 111/64");
        require_verified(ap_variance_direct(3, Q, 3, 2).variance == 0,
                         "variance must vanish once n exceeds the L-power degree");
    });
    log.run("character route equals direct enumeration", [&] {
        for (int q : quick ? std::vector<int>{3} : std::vector<int>{3, 5}) {
            FqPoly Q(q, {0, 1, 1});
            for (int k : {2, 3})
                for (int n = 2; n <= 3; ++n) {
                    VarianceReport direct = ap_variance_direct(q, Q, n, k);
                    Rational via = ap_variance_characters(q, Q, n, k);
                    require_verified(direct.variance == via,
                                     "character route must equal the direct variance");
                }
        }
    });
    log.run("even characters mod t^m", [&] {
        require_verified(even_character_count_tm(5, 3) == 25,
                         "even characters mod t^3 over F_5 must number 25");
        require_verified(even_character_count_tm(3, 2) == 3,
                         "even characters mod t^2 over F_3 must number 3");
    });
}

// ---- subcommand bodies ---------------------------------------------------

struct Args {
    int k = 2;
    long long m = 0;
    long long N = 1;
    int q = 3;
    int n = 2;
    int h = 0;
    std::vector<int> modulus;
    double delta = -1.0;
    double qsize = -1.0;
    double X = 0.0;
    double alpha = 0.0;
    double at = 0.5;
    long long samples = 0;
    uint64_t seed = 0;
    int threads = 0;
    std::string suite = "all";
    bool quick = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moments of unitary secular coefficients and divisor variances"};
    app.require_subcommand(1);
    Args a;
    OutputSink out;

    CLI::App* c_ik = app.add_subcommand("ik", "one exact moment value I_k(m;N)");
    c_ik->add_option("-k", a.k, "number of factors")->required();
    c_ik->add_option("-m", a.m, "total degree m")->required();
    c_ik->add_option("-N", a.N, "matrix size N")->required();
    add_output_flags(c_ik, out);

    CLI::App* c_table = app.add_subcommand("table", "full moment sequence for fixed k, N");
    c_table->add_option("-k", a.k, "number of factors")->required();
    c_table->add_option("-N", a.N, "matrix size N")->required();
    add_output_flags(c_table, out);

    CLI::App* c_gamma = app.add_subcommand("gamma", "piecewise gamma_k sampled over [0, k]");
    c_gamma->add_option("-k", a.k, "moment order")->required();
    c_gamma->add_option("--samples", a.samples, "number of subdivisions of [0, k]")
        ->default_val(100);
    add_output_flags(c_gamma, out);

    CLI::App* c_gmc = app.add_subcommand("gamma-mc", "Monte-Carlo estimate of gamma_k(c)");
    c_gmc->add_option("-k", a.k, "moment order")->required();
    c_gmc->add_option("--at", a.at, "evaluation point c in (0, k)")->required();
    c_gmc->add_option("--samples", a.samples, "sample count")->default_val(100000);
    c_gmc->add_option("--seed", a.seed, "RNG seed (results are reproducible)")->required();
    c_gmc->add_option("--threads", a.threads, "worker threads (0 = hardware)");
    add_output_flags(c_gmc, out);

    CLI::App* c_pk = app.add_subcommand("pk", "moment sequence via the generating function");
    c_pk->add_option("-k", a.k, "moment order (2 or 3)")->required();
    c_pk->add_option("-N", a.N, "matrix size N")->required();
    add_output_flags(c_pk, out);

    CLI::App* c_pred = app.add_subcommand("predict", "heuristic variance predictions");
    c_pred->add_option("-k", a.k, "divisor order")->required();
    c_pred->add_option("--X", a.X, "main parameter X")->required();
    CLI::Option* o_delta =
        c_pred->add_option("--delta", a.delta, "short-interval exponent delta");
    CLI::Option* o_qsize =
        c_pred->add_option("-q", a.qsize, "progression modulus size Q (number)");
    o_delta->excludes(o_qsize);
    add_output_flags(c_pred, out);

    CLI::App* c_ffs = app.add_subcommand("ff-short", "short-interval divisor variance");
    c_ffs->set_help_flag("--help", "print help"); // frees -h so --h can name the radius
    c_ffs->add_option("-q", a.q, "field order (prime)")->required();
    c_ffs->add_option("-n", a.n, "polynomial degree n")->required();
    c_ffs->add_option("--h", a.h, "interval radius h")->required();
    c_ffs->add_option("-k", a.k, "divisor order")->required();
    c_ffs->add_option("--threads", a.threads, "accepted for symmetry; the sweep is one pass");
    add_output_flags(c_ffs, out);

    CLI::App* c_ffa = app.add_subcommand("ff-ap", "progression divisor variance");
    c_ffa->add_option("-q", a.q, "field order (prime)")->required();
    c_ffa->add_option("-n", a.n, "polynomial degree n")->required();
    c_ffa->add_option("-k", a.k, "divisor order")->required();
    c_ffa->add_option("--modulus", a.modulus,
                      "modulus coefficients c0,c1,... from degree 0 upward")
        ->required()
        ->delimiter(',');
    add_output_flags(c_ffa, out);

    CLI::App* c_wk = app.add_subcommand("wk", "Riemann sum of the moment sequence vs its limit");
    c_wk->add_option("-k", a.k, "moment order")->required();
    c_wk->add_option("--alpha", a.alpha, "frequency alpha")->required();
    c_wk->add_option("-N", a.N, "matrix size N")->required();
    add_output_flags(c_wk, out);

    CLI::App* c_ver = app.add_subcommand("verify", "run an invariant suite");
    c_ver->add_option("suite", a.suite, "moments, gamma, ff, or all")
        ->check(CLI::IsMember({"moments", "gamma", "ff", "all"}));
    c_ver->add_flag("--quick", a.quick, "smaller grids");
    c_ver->add_option("--seed", a.seed, "seed for the sampled checks")->default_val(20240);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_ik) {
            require(a.k >= 1, "ik requires k >= 1");
            require(a.N >= 0, "ik requires N >= 0");
            require(a.m >= 0 && a.m <= static_cast<long long>(a.k) * a.N,
                    "m must satisfy 0 <= m <= k*N");
            std::string branch;
            BigInt v = ik_value(a.k, a.m, a.N, &branch);
            OutputTable t;
            t.header = {"k", "m", "N", "value", "branch"};
            t.add_row({std::to_string(a.k), std::to_string(a.m), std::to_string(a.N),
                       v.get_str(), branch});
            if (out.format == "text" && out.path.empty()) {
                std::printf("I_%d(%lld;%lld) = %s  [%s]\n", a.k, a.m, a.N, v.get_str().c_str(),
                            branch.c_str());
            } else {
                emit(out, t, nullptr);
            }
        } else if (*c_table) {
            MomentTable mt = moment_table(a.k, a.N);
            OutputTable t;
            t.header = {"m", "I_k", "branch"};
            Series s;
            s.title = "moment sequence, k=" + std::to_string(a.k) + ", N=" + std::to_string(a.N);
            s.x_label = "m";
            s.y_label = "I_k(m;N)";
            for (long long m = 0; m < static_cast<long long>(mt.values.size()); ++m) {
                t.add_row({std::to_string(m), mt.values[m].get_str(),
                           branch_label(a.k, m, a.N)});
                s.xs.push_back(static_cast<double>(m));
                s.ys.push_back(mpz_get_d(mt.values[m].get_mpz_t()));
            }
            emit(out, t, &s);
        } else if (*c_gamma) {
            require(a.samples >= 2, "gamma sampling needs at least 2 subdivisions");
            require(a.samples <= 100000, "gamma sampling resolution capped at 100000");
            PiecewiseGamma g = gamma_full(a.k);
            OutputTable t;
            t.header = {"c", "gamma_exact", "gamma_float"};
            Series s;
            s.title = "gamma_" + std::to_string(a.k) + " over [0, " + std::to_string(a.k) + "]";
            s.x_label = "c";
            s.y_label = "gamma_k(c)";
            for (int j = 0; j <= a.k; ++j) s.marks.push_back(j);
            for (long long j = 0; j <= a.samples; ++j) {
                Rational c = make_rational(BigInt(static_cast<long>(j * a.k)),
                                           BigInt(static_cast<long>(a.samples)));
                Rational gv = g.eval_exact(c);
                double cf = c.get_d(), gf = gv.get_d();
                t.add_row({rational_str(c), rational_str(gv), format_float(gf)});
                s.xs.push_back(cf);
                s.ys.push_back(gf);
            }
            emit(out, t, &s);
        } else if (*c_gmc) {
            McEstimate e = gamma_monte_carlo(a.k, a.at, a.samples, a.seed, a.threads);
            OutputTable t;
            t.header = {"k", "c", "samples", "seed", "estimate", "std_error"};
            t.add_row({std::to_string(a.k), format_float(a.at), std::to_string(a.samples),
                       std::to_string(a.seed), format_float(e.mean), format_float(e.std_error)});
            if (out.format == "text" && out.path.empty()) {
                std::printf("gamma_%d(%s) ~ %s +- %s  (%lld samples)\n", a.k,
                            format_float(a.at).c_str(), format_float(e.mean).c_str(),
                            format_float(e.std_error).c_str(), a.samples);
            } else {
                emit(out, t, nullptr);
            }
        } else if (*c_pk) {
            DensePoly<Rational> p = pk_closed_form(a.k, a.N);
            OutputTable t;
            t.header = {"m", "I_k"};
            for (long long m = 0; m <= static_cast<long long>(a.k) * a.N; ++m) {
                Rational c = p.get(m);
                t.add_row({std::to_string(m), c.get_num().get_str()});
            }
            emit(out, t, nullptr);
        } else if (*c_pred) {
            require(a.delta >= 0.0 || a.qsize > 0.0,
                    "predict needs either --delta (short intervals) or -q (progressions)");
            OutputTable t;
            if (a.delta >= 0.0) {
                SiPrediction p = predict_variance_si(a.k, a.X, a.delta);
                t.header = {"mode", "k", "X", "delta", "a_k", "shape", "H", "log_power", "value"};
                t.add_row({"short-interval", std::to_string(a.k), format_float(a.X),
                           format_float(a.delta), format_float(p.a_k), format_float(p.shape),
                           format_float(p.H), format_float(p.log_power), format_float(p.value)});
                if (out.format == "text" && out.path.empty()) {
                    std::printf("HEURISTIC short-interval variance prediction\n");
                    std::printf("  k = %d, X = %s, delta = %s\n", a.k, format_float(a.X).c_str(),
                                format_float(a.delta).c_str());
                    std::printf("  arithmetic constant a_k   = %s\n",
                                format_float(p.a_k).c_str());
                    std::printf("  shape factor              = %s\n",
                                format_float(p.shape).c_str());
                    std::printf("  interval length H = X^d   = %s\n", format_float(p.H).c_str());
                    std::printf("  (log X)^(k^2-1)           = %s\n",
                                format_float(p.log_power).c_str());
                    std::printf("  predicted variance        = %s\n",
                                format_float(p.value).c_str());
                } else {
                    emit(out, t, nullptr);
                }
            } else {
                ApPrediction p = predict_variance_ap(a.k, a.X, a.qsize);
                t.header = {"mode", "k", "X", "Q", "c", "a_k", "gamma_c", "value"};
                t.add_row({"progression", std::to_string(a.k), format_float(a.X),
                           format_float(a.qsize), format_float(p.c), format_float(p.a_k),
                           format_float(p.gamma_c), format_float(p.value)});
                if (out.format == "text" && out.path.empty()) {
                    std::printf("HEURISTIC progression variance prediction\n");
                    std::printf("  k = %d, X = %s, Q = %s\n", a.k, format_float(a.X).c_str(),
                                format_float(a.qsize).c_str());
                    std::printf("  c = log X / log Q         = %s\n", format_float(p.c).c_str());
                    std::printf("  arithmetic constant a_k   = %s\n",
                                format_float(p.a_k).c_str());
                    std::printf("  gamma_k(c)                = %s\n",
                                format_float(p.gamma_c).c_str());
                    std::printf("  predicted variance        = %s\n",
                                format_float(p.value).c_str());
                } else {
                    emit(out, t, nullptr);
                }
            }
        } else if (*c_ffs) {
            long long qn = 1;
            for (int i = 0; i < a.n; ++i) qn *= a.q;
            std::fprintf(stderr, "sweeping %lld monic polynomials of degree %d over F_%d...\n",
                         qn, a.n, a.q);
            auto t0 = std::chrono::steady_clock::now();
            VarianceReport r = short_interval_variance(a.q, a.n, a.h, a.k);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
            std::fprintf(stderr, "done in %.2fs\n", dt);
            BigInt ik = ik_value(a.k, a.n, a.n - a.h - 2);
            OutputTable t;
            t.header = {"q", "n", "h", "k", "H", "I_k", "variance", "prediction", "ratio"};
            t.add_row({std::to_string(r.q), std::to_string(r.n), std::to_string(r.h),
                       std::to_string(r.k), std::to_string(r.support), ik.get_str(),
                       rational_str(r.variance), rational_str(r.prediction), ratio_cell(r)});
            emit(out, t, nullptr);
        } else if (*c_ffa) {
            require(!a.modulus.empty(), "modulus coefficient list must be nonempty");
            FqPoly Q(a.q, a.modulus);
            long long qn = 1;
            for (int i = 0; i < a.n; ++i) qn *= a.q;
            std::fprintf(stderr, "sweeping %lld monic polynomials of degree %d over F_%d...\n",
                         qn, a.n, a.q);
            VarianceReport r = ap_variance_direct(a.q, Q, a.n, a.k);
            Rational via = ap_variance_characters(a.q, Q, a.n, a.k);
            Rational diff = r.variance - via;
            double rel = std::abs(diff.get_d()) / std::max(1.0, std::abs(r.variance.get_d()));
            require_verified(rel <= 1e-6,
                             "direct and character-route variances must agree to 1e-6");
            OutputTable t;
            t.header = {"q", "n", "k", "modulus", "phi", "I_k", "variance_direct",
                        "variance_characters", "prediction", "ratio"};
            t.add_row({std::to_string(r.q), std::to_string(r.n), std::to_string(r.k), r.modulus,
                       std::to_string(r.support),
                       ik_value(a.k, a.n, Q.degree() - 1).get_str(),
                       rational_str(r.variance), rational_str(via), rational_str(r.prediction),
                       ratio_cell(r)});
            emit(out, t, nullptr);
        } else if (*c_wk) {
            std::complex<double> w = w_k_riemann(a.k, a.alpha, a.N);
            PiecewiseGamma g = gamma_full(a.k);
            std::complex<double> ref = gamma_fourier_reference(g, a.alpha);
            OutputTable t;
            t.header = {"k", "alpha", "N", "w_real", "w_imag", "ref_real", "ref_imag",
                        "abs_error"};
            t.add_row({std::to_string(a.k), format_float(a.alpha), std::to_string(a.N),
                       format_float(w.real()), format_float(w.imag()),
                       format_float(ref.real()), format_float(ref.imag()),
                       format_float(std::abs(w - ref))});
            emit(out, t, nullptr);
        } else if (*c_ver) {
            CheckLog log;
            if (a.suite == "moments" || a.suite == "all") verify_moments(log, a.quick);
            if (a.suite == "gamma" || a.suite == "all") verify_gamma(log, a.quick, a.seed);
            if (a.suite == "ff" || a.suite == "all") verify_ff(log, a.quick, a.seed);
            if (log.failures > 0) {
                std::printf("%d check(s) failed\n", log.failures);
                return 3;
            }
            std::printf("all checks passed\n");
        }
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const budget_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const verification_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
