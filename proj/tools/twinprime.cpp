// twinprime: command-line front end for table regeneration, estimates,
// the published-table audit and the invariant suite.
//
// Exit codes: 0 ok, 1 usage/runtime error, 2 invariant failure,
// 3 paper mismatches (only with --strict-paper).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "twinprime/twinprime.hpp"

namespace {

using namespace twinprime;

constexpr int exit_invariant_failure = 2;
constexpr int exit_paper_mismatch = 3;

void emit(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
    } else {
        write_file(path, content);
        std::cerr << "wrote " << path << "\n";
    }
}

template <class Table>
void write_table(const Table& t, const RunConfig& cfg) {
    emit(render(t, cfg.format), resolve_output_path(cfg, t.doc.name));
}

std::uint64_t limit_for(const RunConfig& cfg, std::span<const std::uint64_t> xs, bool limit_given) {
    if (limit_given) return cfg.limit;
    return std::max<std::uint64_t>(5, *std::max_element(xs.begin(), xs.end()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime and twin-prime counts, bounds and estimators"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    bool strict_paper = false;
    std::string format = "csv";
    app.add_option("--threads", cfg.threads, "Sieve construction threads")->check(CLI::PositiveNumber);
    app.add_flag("--strict-paper", strict_paper, "Exit 3 when recomputed values differ from the published tables");

    auto add_table_opts = [&](CLI::App* sub) {
        sub->add_option("--limit", cfg.limit, "Sieve limit (default: largest checkpoint)");
        sub->add_option("--checkpoints", cfg.checkpoints, "Comma-separated x values")->delimiter(',');
        sub->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", cfg.out_path, "Output file (default: $TWINPRIME_OUT_DIR or stdout)");
    };

    std::uint64_t sieve_limit = 0;
    std::uint64_t segment_size = default_segment_size;
    auto* sieve_cmd = app.add_subcommand("sieve", "Build a sieve and report pi and pi_2 at the limit");
    sieve_cmd->add_option("--limit", sieve_limit, "Inclusive upper bound")->required();
    sieve_cmd->add_option("--segment-size", segment_size, "Odd candidates per segment");

    auto* t1 = app.add_subcommand("table1", "x, pi(x), pi_2(x), pi(pi(x)), ratio");
    auto* t2 = app.add_subcommand("table2", "x, A, pi_2(x), B");
    auto* t3 = app.add_subcommand("table3", "x, h, pi_2(x), pi_2*(x), |delta|, relative error");
    for (auto* sub : {t1, t2, t3}) add_table_opts(sub);
    t3->add_option("--hc", cfg.h_c, "Calibration constant h_c");

    std::uint64_t est_x = 0;
    auto* est = app.add_subcommand("estimate", "Every estimator and bound at one x");
    est->add_option("--x", est_x, "Point to evaluate")->required()->check(CLI::Range(std::uint64_t{5}, std::uint64_t{100'000'000}));
    est->add_option("--hc", cfg.h_c, "Calibration constant h_c");
    est->add_option("--euler-pmax", cfg.euler_pmax, "Truncation bound for the Euler products");

    auto* cal = app.add_subcommand("calibrate", "Mean h over checkpoints");
    cal->add_option("--checkpoints", cfg.checkpoints, "Comma-separated x values")->delimiter(',');
    cal->add_option("--limit", cfg.limit, "Sieve limit (default: largest checkpoint)");

    std::uint64_t phi_y = 0;
    std::size_t phi_r = 0;
    auto* phi = app.add_subcommand("phi", "Legendre phi(y, r) by recurrence and Moebius sum");
    phi->add_option("--y", phi_y, "Range bound")->required();
    phi->add_option("--r", phi_r, "Number of leading primes excluded")->required();

    auto* audit = app.add_subcommand("audit", "Compare recomputed tables with the published values");
    audit->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    audit->add_option("--out", cfg.out_path, "Output file");
    audit->add_option("--hc", cfg.h_c, "Calibration constant h_c");

    bool check_json = false;
    auto* check = app.add_subcommand("check", "Run the invariant suite");
    check->add_option("--limit", cfg.limit, "Sieve limit; grids are clamped to it");
    check->add_option("--hc", cfg.h_c, "Calibration constant h_c");
    check->add_flag("--json", check_json, "Machine-readable summary");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = parse_format(format);

        if (*sieve_cmd) {
            SieveOptions opts = cfg.sieve_options();
            opts.segment_size = segment_size;
            const auto t0 = std::chrono::steady_clock::now();
            const auto s = build_sieve(sieve_limit, opts);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            std::cout << "limit " << s.limit() << "\npi " << count_primes(s, s.limit()) << "\npi2 "
                      << count_twin_pairs(s, s.limit()) << "\nseconds " << format_fixed(dt.count(), 3) << "\n";
            return 0;
        }

        auto run_table = [&](CLI::App* sub, std::span<const std::uint64_t> defaults, auto&& make) {
            const bool limit_given = sub->count("--limit") > 0;
            const auto probe = cfg.checkpoints.empty() ? std::vector<std::uint64_t>(defaults.begin(), defaults.end())
                                                       : cfg.checkpoints;
            cfg.limit = limit_for(cfg, probe, limit_given);
            const auto xs = cfg.resolve_checkpoints(defaults);
            const auto s = build_sieve(cfg.limit, cfg.sieve_options());
            write_table(make(s, xs), cfg);
        };
        if (*t1) {
            run_table(t1, paper::table1_checkpoints, [](const PrimeSieve& s, const auto& xs) { return emit_table1(s, xs); });
            return 0;
        }
        if (*t2) {
            run_table(t2, paper::table2_checkpoints, [](const PrimeSieve& s, const auto& xs) { return emit_table2(s, xs); });
            return 0;
        }
        if (*t3) {
            const auto ecfg = cfg.estimator();
            run_table(t3, paper::table3_checkpoints,
                      [&](const PrimeSieve& s, const auto& xs) { return emit_table3(s, xs, ecfg); });
            return 0;
        }

        if (*est) {
            const auto ecfg = cfg.estimator();
            const auto s = build_sieve(est_x, cfg.sieve_options());
            const auto pi_x = count_primes(s, est_x);
            const auto pi2 = count_twin_pairs(s, est_x);
            const auto tb = trost_bounds(est_x);
            const auto ab = theorem1_bounds(est_x);
            const double eq1 = hl_estimate_eq1(est_x, ecfg);
            const double eq2 = hl_estimate_eq2(est_x, ecfg);
            std::cout << "x " << est_x << "\npi_x " << pi_x << "\npi2_x " << pi2 << "\npi_pi_x "
                      << count_primes(s, pi_x) << "\ntrost_lower " << format_fixed(tb.lower, 6) << "\ntrost_upper "
                      << format_fixed(tb.upper, 6) << "\na_bound " << format_fixed(ab.a, 6) << "\nb_bound "
                      << format_fixed(ab.b, 6) << "\nh " << format_fixed(h_ratio(est_x, pi_x, pi2), 6) << "\nh_c "
                      << format_fixed(ecfg.h_c, 6) << "\npi2_star " << pi2_star(est_x, pi_x, ecfg)
                      << "\ntwin_prime_constant " << format_fixed(twin_prime_constant(ecfg.euler_pmax), 12)
                      << "\nhl_eq1 " << format_fixed(eq1, 3) << "\nhl_eq1_over_pi2 "
                      << (pi2 ? format_fixed(eq1 / static_cast<double>(pi2), 3) : "inf") << "\nhl_eq2 "
                      << format_fixed(eq2, 3) << "\n";
            std::cerr << "warning: hl_eq2 uses prod (p-1)/(p-2) truncated at p <= " << ecfg.euler_pmax
                      << "; the untruncated product diverges, so this value grows with --euler-pmax\n";
            return 0;
        }

        if (*cal) {
            const bool limit_given = cal->count("--limit") > 0;
            const auto probe = cfg.checkpoints.empty()
                                   ? std::vector<std::uint64_t>(paper::table3_checkpoints.begin(),
                                                                paper::table3_checkpoints.end())
                                   : cfg.checkpoints;
            cfg.limit = limit_for(cfg, probe, limit_given);
            const auto xs = cfg.resolve_checkpoints(paper::table3_checkpoints);
            const auto s = build_sieve(cfg.limit, cfg.sieve_options());
            const auto rows = estimate_rows(s, xs, cfg.estimator());
            for (const auto& r : rows) std::cout << r.x << " h=" << format_fixed(r.h, 6) << "\n";
            std::cout << "h_c " << format_fixed(calibrate_hc(rows), 6) << " (" << rows.size() << " checkpoints)\n";
            return 0;
        }

        if (*phi) {
            const auto s = build_sieve(std::max<std::uint64_t>(phi_y, 5), cfg.sieve_options());
            legendre::PhiQuery q(phi_y, phi_r);
            std::cout << "y " << phi_y << "\nr " << phi_r << "\nphi_recursive " << legendre::phi_recursive(q) << "\n";
            if (phi_r <= legendre::mobius_max_r)
                std::cout << "phi_mobius " << legendre::phi_mobius(q) << "\n";
            else
                std::cout << "phi_mobius skipped (r > " << legendre::mobius_max_r << ")\n";
            const auto e9 = legendre::check_eq9(s, phi_y, phi_r);
            std::cout << "pi_y " << e9.pi_y << "\neq9_holds " << (e9.bound_ok ? "true" : "false")
                      << "\nsqrt_rank " << legendre::sqrt_rank(s, phi_y) << "\n";
            return 0;
        }

        if (*audit) {
            const auto s = build_sieve(audit_min_limit, cfg.sieve_options());
            const auto rep = audit_against_paper(s, cfg.estimator());
            emit(render_audit(rep, cfg.format), resolve_output_path(cfg, "audit"));
            return strict_paper && rep.mismatches() > 0 ? exit_paper_mismatch : 0;
        }

        if (*check) {
            const auto s = build_sieve(cfg.limit, cfg.sieve_options());
            const auto sum = run_invariant_suite(s, cfg.estimator());
            std::cout << render_summary(sum, check_json);
            if (!sum.all_passed()) return exit_invariant_failure;
            if (strict_paper && s.limit() >= audit_min_limit &&
                audit_against_paper(s, cfg.estimator()).mismatches() > 0)
                return exit_paper_mismatch;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
