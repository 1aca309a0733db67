#pragma once
//
// Randomized operation-count benchmark over (k, l, P, Q) quadruples.
//
// Trial i draws from its own generator seeded with (seed, i), so the report
// depends only on (seed, trials, config) and not on thread scheduling.
//

#include "jtdfe/scalar_mul.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace jtdfe {

enum class Method { Naive, Tjsf, Jtdfe };

std::string method_name(Method m);
/// Comma-separated list of naive|tjsf|jtdfe. Throws std::invalid_argument.
std::vector<Method> parse_methods(const std::string& list);

/// Uniform integer in [1, n - 1].
BigInt random_scalar(std::mt19937_64& rng, const BigInt& n);

struct BenchConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::vector<Method> methods{Method::Tjsf, Method::Jtdfe};
    /// Required when methods include Jtdfe.
    const Lut* lut = nullptr;
    /// Also measure greedy expansion length against log N / log log N.
    bool greedy_stats = true;
};

struct Summary {
    std::size_t count = 0;
    double mean = 0;
    double stddev = 0;  // population

    friend bool operator==(const Summary&, const Summary&) = default;
};

Summary summarize(const std::vector<double>& xs);

struct MethodStats {
    Method method = Method::Naive;
    Summary point_adds;
    Summary level_adds;
    Summary mul;
    Summary sqr;
    Summary inv;

    friend bool operator==(const MethodStats&, const MethodStats&) = default;
};

struct BenchReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<MethodStats> methods;
    /// Nonzero-digit fraction of tau-NAF over both reduced scalars per trial.
    Summary tnaf_density;
    /// Joint-weight fraction of the tau-JSF of the reduced pair.
    Summary tjsf_density;
    Summary tjsf_joint_weight;
    Summary jtdfe_joint_cost;
    /// 100 * (1 - mean jtdfe cost / mean tjsf joint weight); 0 when unavailable.
    double jtdfe_gain_percent = 0;
    /// Greedy term count d divided by log2 N / log2 log2 N.
    Summary greedy_ratio;
    std::size_t greedy_fallbacks = 0;
    /// Trials where two methods returned different points.
    std::size_t mismatches = 0;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Trials run concurrently (OpenMP); aggregation is serial in trial order.
BenchReport run_bench(const KoblitzCurve& curve, const BenchConfig& config);
/// Serial reference; produces a report identical to run_bench.
BenchReport run_bench_serial(const KoblitzCurve& curve, const BenchConfig& config);

/// Human-readable table followed by one "#data key=value" line per figure.
std::string format_report(const BenchReport& report);

}  // namespace jtdfe
