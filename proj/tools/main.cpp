#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mpbt/protocol.hpp"
#include "mpbt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitResourceCap = 3;

std::string sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    Range r;
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, colon));
        r.hi = std::stoi(text.substr(colon + 1));
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "range lower bound exceeds upper bound");
    return r;
}

nlohmann::json report_json(const mpbt::PerformanceReport& report) {
    nlohmann::json spectrum = nlohmann::json::array();
    for (const mpbt::SpectrumEntry& e : report.spectrum) {
        spectrum.push_back({{"alpha", e.alpha.rows()},
                            {"mu", e.mu.rows()},
                            {"lambda", {{"num", e.eigenvalue.num()}, {"den", e.eigenvalue.den()}}},
                            {"mult", e.multiplicity}});
    }
    return {{"params",
             {{"N", report.params.ports},
              {"k", report.params.teleported},
              {"d", report.params.local_dim}}},
            {"fidelity", report.fidelity},
            {"probability", {{"num", report.probability.num()}, {"den", report.probability.den()}}},
            {"spectrum", spectrum}};
}

int cmd_fidelity(int N, int k, int d) {
    const mpbt::ProtocolParams params(N, k, d);
    std::printf("F = %s\n", sig12(mpbt::entanglement_fidelity(params)).c_str());
    std::printf("%-10s %-16s %s\n", "alpha", "weight", "contribution");
    for (const mpbt::FidelityTerm& t : mpbt::fidelity_breakdown(params)) {
        std::printf("%-10s %-16s %s\n", t.alpha.str().c_str(), sig12(t.weight_sum).c_str(),
                    sig12(t.contribution).c_str());
    }
    return kExitOk;
}

int cmd_probability(int N, int k, int d) {
    const mpbt::ProtocolParams params(N, k, d);
    const mpbt::SuccessProbability p = mpbt::success_probability(params);
    std::printf("p = %s = %s\n", p.value.str().c_str(), sig12(p.value.to_double()).c_str());
    std::printf("%-10s %-10s %s\n", "alpha", "mu*", "m_a*d_a/lambda");
    for (const mpbt::ProbabilityTerm& t : p.terms) {
        std::printf("%-10s %-10s %s\n", t.alpha.str().c_str(), t.minimizer.str().c_str(),
                    t.contribution.str().c_str());
    }
    return kExitOk;
}

int cmd_sweep(const std::string& ports, const std::string& teleported, const std::string& dims,
              const std::string& format, const std::string& out_path) {
    const Range rn = parse_range(ports);
    const Range rk = parse_range(teleported);
    const Range rd = parse_range(dims);

    std::vector<std::tuple<int, int, int>> grid;
    for (int N = rn.lo; N <= rn.hi; ++N) {
        for (int k = rk.lo; k <= rk.hi; ++k) {
            for (int d = rd.lo; d <= rd.hi; ++d) {
                if (N < 1 || d < 2 || k < 1 || k > N / 2) {
                    std::fprintf(stderr, "skipping N=%d k=%d d=%d: invalid protocol point\n", N,
                                 k, d);
                    continue;
                }
                grid.emplace_back(N, k, d);
            }
        }
    }

    // points evaluate independently; rows are assembled in grid order
    std::vector<mpbt::PerformanceReport> reports(grid.size(),
                                                 mpbt::PerformanceReport{
                                                     mpbt::ProtocolParams(2, 1, 2), 0, {}, {}});
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
                const auto& [N, k, d] = grid[i];
                reports[i] = mpbt::evaluate(mpbt::ProtocolParams(N, k, d));
            }
        });
    }
    for (std::thread& t : pool) t.join();

    std::ostringstream body;
    if (format == "csv") {
        body << "N,k,d,F,p_num,p_den,num_eigs,trace_residual\n";
        for (const mpbt::PerformanceReport& r : reports) {
            const mpbt::Rational residual =
                mpbt::spectrum_trace(r.spectrum) - mpbt::Rational(r.params.signal_count());
            body << r.params.ports << ',' << r.params.teleported << ',' << r.params.local_dim
                 << ',' << sig12(r.fidelity) << ',' << r.probability.num() << ','
                 << r.probability.den() << ',' << r.spectrum.size() << ',' << residual.str()
                 << '\n';
        }
    } else if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const mpbt::PerformanceReport& r : reports) rows.push_back(report_json(r));
        body << rows.dump(2) << '\n';
    } else {
        std::fprintf(stderr, "unknown format '%s' (expected csv or json)\n", format.c_str());
        return kExitUsage;
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::fprintf(stderr, "cannot open output path '%s'\n", out_path.c_str());
            return kExitUsage;
        }
        out << body.str();
    }
    return kExitOk;
}

int cmd_verify(long max_dim, unsigned seed) {
    mpbt::VerifyOptions options;
    options.max_dim = max_dim;
    options.heavy_dim = std::min<long>(1024, max_dim);
    options.seed = seed;
    const std::vector<mpbt::CheckResult> checks = mpbt::run_verification(options);
    int failures = 0;
    for (const mpbt::CheckResult& c : checks) {
        if (c.passed) {
            std::printf("[ ok ] %-55s residual %.3e\n", c.name.c_str(), c.residual);
        } else {
            ++failures;
            std::printf("[FAIL] %-55s residual %.3e (tolerance %.1e)\n", c.name.c_str(),
                        c.residual, c.tolerance);
        }
    }
    std::printf("%zu checks, %d failed\n", checks.size(), failures);
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact performance calculator for multi-port teleportation protocols"};
    app.require_subcommand(1);

    int ports = 0, teleported = 0, dim = 0;
    std::string ports_range, teleported_range = "1", dim_range = "2";
    std::string format = "csv", out_path;
    long max_dim = mpbt::kDefaultDimCap;
    unsigned seed = 12345;

    CLI::App* fid = app.add_subcommand("fidelity", "deterministic-protocol entanglement fidelity");
    fid->add_option("--ports", ports, "number of ports N")->required();
    fid->add_option("--k", teleported, "number of teleported systems")->required();
    fid->add_option("--dim", dim, "local dimension d")->required();

    CLI::App* prob = app.add_subcommand("probability", "probabilistic-protocol success probability");
    prob->add_option("--ports", ports, "number of ports N")->required();
    prob->add_option("--k", teleported, "number of teleported systems")->required();
    prob->add_option("--dim", dim, "local dimension d")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate fidelity and probability over a grid");
    sweep->add_option("--ports", ports_range, "port range, lo:hi or a single value")->required();
    sweep->add_option("--k", teleported_range, "teleported-system range (default 1)");
    sweep->add_option("--dim", dim_range, "local-dimension range (default 2)");
    sweep->add_option("--format", format, "csv or json (default csv)");
    sweep->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the dense verification suite");
    verify->add_option("--max-dim", max_dim,
                       "largest d^(N+k) on the verification grid (default 4096); "
                       "eigendecomposition-backed checks cap at 1024");
    verify->add_option("--seed", seed, "seed for the randomized identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fid->parsed()) return cmd_fidelity(ports, teleported, dim);
        if (prob->parsed()) return cmd_probability(ports, teleported, dim);
        if (sweep->parsed()) {
            return cmd_sweep(ports_range, teleported_range, dim_range, format, out_path);
        }
        if (verify->parsed()) return cmd_verify(max_dim, seed);
    } catch (const mpbt::DimensionCapError& e) {
        std::fprintf(stderr, "resource cap exceeded: %s\n", e.what());
        return kExitResourceCap;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "verification error: %s\n", e.what());
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
