// Command-line front end: giant detection on generator files, cycle-type
// sampling, and experiment reproduction.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altsym/altsym.hpp"
#include "altsym/experiment.hpp"
#include "altsym/group_file.hpp"
#include "altsym/ktable.hpp"

namespace {

altsym::Strategy parse_strategy(const std::string& s) {
    if (s == "altsym") return altsym::Strategy::altsym;
    if (s == "cameron_cannon") return altsym::Strategy::cameron_cannon;
    if (s == "large_prime") return altsym::Strategy::large_prime;
    throw CLI::ValidationError("strategy", "unknown strategy: " + s);
}

altsym::Predicate parse_predicate(const std::string& s) {
    using altsym::Predicate;
    if (s == "large_prime_order") return Predicate::large_prime_order;
    if (s == "odd_cycle_gt_half") return Predicate::odd_cycle_gt_half;
    if (s == "all_even_cycles") return Predicate::all_even_cycles;
    if (s == "many_cycles") return Predicate::many_cycles;
    throw CLI::ValidationError("predicate", "unknown predicate: " + s);
}

std::string join_r(const std::vector<std::uint64_t>& rs) {
    std::string out;
    for (std::uint64_t r : rs) {
        if (!out.empty()) out += ",";
        out += std::to_string(r);
    }
    return out.empty() ? "-" : out;
}

void print_verdict(const altsym::Verdict& v, const std::string& strategy,
                   bool machine) {
    if (machine) {
        std::cout << "giant_proven=" << (v.giant_proven ? 1 : 0)
                  << " transitive=" << (v.transitive ? 1 : 0)
                  << " strategy=" << strategy << " certificate="
                  << (v.jordan ? v.jordan->describe() : std::string("-"))
                  << " remaining_r=" << join_r(v.remaining_r)
                  << " elements_examined=" << v.elements_examined
                  << " elements_skipped=" << v.elements_skipped << "\n";
        return;
    }
    std::cout << (v.giant_proven ? "giant proven (contains the alternating group)"
                                 : "not proven")
              << "\n";
    std::cout << "  strategy:          " << strategy << "\n";
    std::cout << "  transitive:        " << (v.transitive ? "yes" : "no") << "\n";
    std::cout << "  certificate:       "
              << (v.jordan ? v.jordan->describe() : std::string("none")) << "\n";
    std::cout << "  remaining r:       " << join_r(v.remaining_r) << "\n";
    std::cout << "  elements examined: " << v.elements_examined << "\n";
    std::cout << "  elements skipped:  " << v.elements_skipped << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-sided randomized detection of giant permutation groups"};
    app.require_subcommand(1);

    // detect
    std::string detect_input;
    std::uint64_t detect_k = 0;
    double detect_eps = 0;
    std::string detect_strategy = "altsym";
    std::uint64_t detect_seed = 1;
    std::string detect_format = "human";
    bool detect_verbose = false;
    auto* detect = app.add_subcommand("detect", "Test a generator file");
    detect->add_option("input", detect_input, "generator file")->required();
    auto* opt_k = detect->add_option("--k", detect_k, "number of random elements");
    auto* opt_eps =
        detect->add_option("--epsilon", detect_eps, "target error probability")
            ->check(CLI::Range(1e-12, 0.999999));
    opt_k->excludes(opt_eps);
    detect->add_option("--strategy", detect_strategy,
                       "altsym | cameron_cannon | large_prime");
    detect->add_option("--seed", detect_seed, "random seed");
    detect->add_option("--format", detect_format, "human | machine");
    detect->add_flag("--verbose", detect_verbose, "explain parameter choices");

    // sample
    std::uint64_t sample_degree = 0, sample_count = 1, sample_seed = 1;
    bool sample_alt = false;
    auto* sample = app.add_subcommand("sample", "Emit random cycle types");
    sample->add_option("--degree", sample_degree, "degree n")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, altsym::kFactorizeLimit));
    sample->add_option("--count", sample_count, "number of types");
    sample->add_flag("--alternating", sample_alt, "even types only");
    sample->add_option("--seed", sample_seed, "random seed");

    // ktable
    std::vector<std::uint64_t> kt_degrees;
    std::vector<double> kt_epsilons;
    std::uint64_t kt_trials = 20000, kt_seed = 1;
    std::string kt_strategy = "altsym", kt_class = "sym", kt_format = "csv";
    auto* kt = app.add_subcommand("ktable", "Estimate k(N, epsilon)");
    kt->add_option("--degrees", kt_degrees, "degrees N")->required();
    kt->add_option("--epsilons", kt_epsilons, "error bounds")
        ->required()
        ->check(CLI::Range(1e-12, 0.999999));
    kt->add_option("--trials", kt_trials, "trials per (N,k) point");
    kt->add_option("--strategy", kt_strategy,
                   "altsym | cameron_cannon | large_prime");
    kt->add_option("--class", kt_class, "sym | alt");
    kt->add_option("--seed", kt_seed, "random seed");
    kt->add_option("--format", kt_format, "csv | kv");

    // proportion
    std::uint64_t pr_degree = 0, pr_trials = 10000, pr_seed = 1;
    std::string pr_predicate, pr_class = "sym", pr_format = "csv";
    auto* pr = app.add_subcommand("proportion", "Estimate a cycle-type proportion");
    pr->add_option("--degree", pr_degree, "degree N")->required();
    pr->add_option("--predicate", pr_predicate,
                   "large_prime_order | odd_cycle_gt_half | all_even_cycles | "
                   "many_cycles")
        ->required();
    pr->add_option("--trials", pr_trials, "sample count");
    pr->add_option("--class", pr_class, "sym | alt");
    pr->add_option("--seed", pr_seed, "random seed");
    pr->add_option("--format", pr_format, "csv | kv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*detect) {
            if (opt_k->count() == 0 && opt_eps->count() == 0)
                throw std::invalid_argument("detect needs exactly one of --k / --epsilon");
            std::ifstream in(detect_input);
            if (!in) throw std::invalid_argument("cannot open " + detect_input);
            altsym::GeneratorSet g = altsym::parse_generator_file(in);
            std::uint64_t k = detect_k;
            if (opt_eps->count()) {
                k = altsym::ktable::k_for(g.degree, detect_eps);
                if (detect_verbose)
                    std::cerr << "epsilon " << detect_eps << " mapped to k=" << k
                              << " via tabulated k(N,epsilon) plus the doubling "
                                 "heuristic (experimental values, not a proof)\n";
            }
            altsym::RandomSource rng(detect_seed);
            altsym::Verdict v =
                altsym::run_test(g, k, rng, parse_strategy(detect_strategy));
            print_verdict(v, detect_strategy, detect_format == "machine");
            return v.giant_proven ? 0 : 1;
        }
        if (*sample) {
            altsym::RandomSource rng(sample_seed);
            for (std::uint64_t i = 0; i < sample_count; ++i) {
                altsym::CycleType t =
                    sample_alt ? altsym::random_even_cycle_type(sample_degree, rng)
                               : altsym::random_cycle_type(sample_degree, rng);
                std::cout << altsym::format_cycle_type(t) << "\n";
            }
            return 0;
        }
        if (*kt) {
            altsym::Strategy strategy = parse_strategy(kt_strategy);
            altsym::ElementClass cls = kt_class == "alt"
                                           ? altsym::ElementClass::alt
                                           : altsym::ElementClass::sym;
            if (kt_format == "csv")
                std::cout << "degree,epsilon,strategy,class,trials,k,"
                             "failure_rate,ci_lo,ci_hi\n";
            for (std::uint64_t n : kt_degrees) {
                for (double eps : kt_epsilons) {
                    altsym::KEstimate est = altsym::estimate_k(
                        n, eps, strategy, kt_trials, cls, kt_seed);
                    std::string kstr =
                        est.k ? std::to_string(*est.k) : std::string("not_found");
                    const auto& r = est.report;
                    if (kt_format == "kv") {
                        std::cout << "degree=" << n << " epsilon=" << eps
                                  << " strategy=" << kt_strategy
                                  << " class=" << kt_class
                                  << " trials=" << r.trials << " k=" << kstr
                                  << " failure_rate=" << r.failure_rate
                                  << " ci_lo=" << r.interval.lo
                                  << " ci_hi=" << r.interval.hi << "\n";
                    } else {
                        std::cout << n << "," << eps << "," << kt_strategy << ","
                                  << kt_class << "," << r.trials << "," << kstr
                                  << "," << r.failure_rate << ","
                                  << r.interval.lo << "," << r.interval.hi
                                  << "\n";
                    }
                }
            }
            return 0;
        }
        if (*pr) {
            altsym::ElementClass cls = pr_class == "alt"
                                           ? altsym::ElementClass::alt
                                           : altsym::ElementClass::sym;
            altsym::ProportionReport r = altsym::proportion(
                pr_degree, parse_predicate(pr_predicate), pr_trials, pr_seed, cls);
            if (pr_format == "kv") {
                std::cout << "degree=" << r.degree << " predicate=" << r.predicate
                          << " class=" << pr_class << " trials=" << r.trials
                          << " hits=" << r.hits << " estimate=" << r.estimate
                          << " ci_lo=" << r.interval.lo
                          << " ci_hi=" << r.interval.hi << "\n";
            } else {
                std::cout << "degree,predicate,class,trials,hits,estimate,ci_lo,"
                             "ci_hi\n";
                std::cout << r.degree << "," << r.predicate << "," << pr_class
                          << "," << r.trials << "," << r.hits << ","
                          << r.estimate << "," << r.interval.lo << ","
                          << r.interval.hi << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
