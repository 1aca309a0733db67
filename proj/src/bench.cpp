#include "jtdfe/bench.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>

namespace jtdfe {

namespace {

struct MethodSample {
    double point_adds = 0;
    double level_adds = 0;
    double mul = 0;
    double sqr = 0;
    double inv = 0;
};

struct TrialRecord {
    std::vector<MethodSample> samples;
    bool mismatch = false;
    double tnaf_density = 0;
    double tjsf_density = 0;
    double tjsf_weight = 0;
    double jtdfe_cost = -1;
    std::vector<double> greedy_ratios;
    std::size_t greedy_fallbacks = 0;
};

double log2_big(const BigInt& v) {
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

TrialRecord run_trial(const KoblitzCurve& curve, const BenchConfig& config, std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
    std::mt19937_64 rng(seq);
    const CurveParams& params = curve.params();
    const Mu mu = curve.mu();

    const BigInt k = random_scalar(rng, params.n);
    const BigInt l = random_scalar(rng, params.n);
    const AffinePoint p = curve.random_point(rng);
    const AffinePoint q = curve.random_point(rng);
    const KleinianInt e0 = reduce_scalar(k, params);
    const KleinianInt e1 = reduce_scalar(l, params);

    TrialRecord rec;
    const TauNaf n0 = tnaf(e0, mu);
    const TauNaf n1 = tnaf(e1, mu);
    rec.tnaf_density = static_cast<double>(n0.weight() + n1.weight()) / static_cast<double>(n0.length() + n1.length());
    const TauJsf jsf = tjsf(e0, e1, mu);
    rec.tjsf_weight = static_cast<double>(jsf.joint_weight());
    rec.tjsf_density = rec.tjsf_weight / static_cast<double>(jsf.length());
    if (config.lut) rec.jtdfe_cost = static_cast<double>(joint_cost(joint_blocking(e0, e1, *config.lut)));

    if (config.greedy_stats) {
        for (const KleinianInt* e : {&e0, &e1}) {
            const BigInt nrm = norm(*e, mu);
            if (nrm < 16) continue;
            const TermTable table(greedy_bounds_for(*e, mu, 4), mu);
            const GreedyResult g = greedy_tdfe_detailed(*e, table);
            const double lg = log2_big(nrm);
            rec.greedy_ratios.push_back(static_cast<double>(g.expansion.length()) / (lg / std::log2(lg)));
            if (g.fell_back) ++rec.greedy_fallbacks;
        }
    }

    std::vector<AffinePoint> points;
    for (Method m : config.methods) {
        DsmResult r;
        switch (m) {
            case Method::Naive: r = double_scalar_naive(curve, k, l, p, q); break;
            case Method::Tjsf: r = double_scalar_tjsf(curve, e0, e1, p, q); break;
            case Method::Jtdfe: r = double_scalar_jtdfe(curve, e0, e1, p, q, *config.lut); break;
        }
        rec.samples.push_back({static_cast<double>(r.point_adds), static_cast<double>(r.level_adds),
                               static_cast<double>(r.counters.mul), static_cast<double>(r.counters.sqr),
                               static_cast<double>(r.counters.inv)});
        points.push_back(r.point);
    }
    for (const auto& pt : points)
        if (!(pt == points.front())) rec.mismatch = true;
    return rec;
}

BenchReport aggregate(const BenchConfig& config, const std::vector<TrialRecord>& records) {
    BenchReport rep;
    rep.trials = config.trials;
    rep.seed = config.seed;
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        std::vector<double> pa, la, mu, sq, in;
        for (const auto& r : records) {
            pa.push_back(r.samples[mi].point_adds);
            la.push_back(r.samples[mi].level_adds);
            mu.push_back(r.samples[mi].mul);
            sq.push_back(r.samples[mi].sqr);
            in.push_back(r.samples[mi].inv);
        }
        rep.methods.push_back({config.methods[mi], summarize(pa), summarize(la), summarize(mu), summarize(sq),
                               summarize(in)});
    }
    std::vector<double> tn, tj, tw, jc, gr;
    for (const auto& r : records) {
        tn.push_back(r.tnaf_density);
        tj.push_back(r.tjsf_density);
        tw.push_back(r.tjsf_weight);
        if (r.jtdfe_cost >= 0) jc.push_back(r.jtdfe_cost);
        gr.insert(gr.end(), r.greedy_ratios.begin(), r.greedy_ratios.end());
        rep.greedy_fallbacks += r.greedy_fallbacks;
        if (r.mismatch) ++rep.mismatches;
    }
    rep.tnaf_density = summarize(tn);
    rep.tjsf_density = summarize(tj);
    rep.tjsf_joint_weight = summarize(tw);
    rep.jtdfe_joint_cost = summarize(jc);
    rep.greedy_ratio = summarize(gr);
    if (rep.jtdfe_joint_cost.count > 0 && rep.tjsf_joint_weight.mean > 0)
        rep.jtdfe_gain_percent = 100.0 * (1.0 - rep.jtdfe_joint_cost.mean / rep.tjsf_joint_weight.mean);
    return rep;
}

void check_config(const BenchConfig& config) {
    for (Method m : config.methods)
        if (m == Method::Jtdfe && !config.lut) throw InvalidConfig("bench: method jtdfe needs a lookup table");
}

std::string fmt(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Naive: return "naive";
        case Method::Tjsf: return "tjsf";
        case Method::Jtdfe: return "jtdfe";
    }
    return "?";
}

std::vector<Method> parse_methods(const std::string& list) {
    std::vector<Method> out;
    std::istringstream is(list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        Method m;
        if (tok == "naive") m = Method::Naive;
        else if (tok == "tjsf") m = Method::Tjsf;
        else if (tok == "jtdfe") m = Method::Jtdfe;
        else throw std::invalid_argument("unknown method '" + tok + "' (expected naive, tjsf or jtdfe)");
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (out.empty()) throw std::invalid_argument("empty method list");
    return out;
}

BigInt random_scalar(std::mt19937_64& rng, const BigInt& n) {
    if (n < 2) throw std::invalid_argument("random_scalar: n must be at least 2");
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    BigInt v;
    while (true) {
        for (auto& w : buf) w = rng();
        if (bits % 64) buf.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
        mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
        if (v >= 1 && v < n) return v;
    }
}

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    s.count = xs.size();
    if (xs.empty()) return s;
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(var / static_cast<double>(xs.size()));
    return s;
}

BenchReport run_bench(const KoblitzCurve& curve, const BenchConfig& config) {
    check_config(config);
    std::vector<TrialRecord> records(config.trials);
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            records[static_cast<std::size_t>(i)] = run_trial(curve, config, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(jtdfe_bench_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return aggregate(config, records);
}

BenchReport run_bench_serial(const KoblitzCurve& curve, const BenchConfig& config) {
    check_config(config);
    std::vector<TrialRecord> records;
    records.reserve(config.trials);
    for (std::size_t i = 0; i < config.trials; ++i) records.push_back(run_trial(curve, config, i));
    return aggregate(config, records);
}

std::string format_report(const BenchReport& r) {
    std::ostringstream os;
    os << "trials " << r.trials << ", seed " << r.seed << "\n";
    if (!r.methods.empty()) {
        char line[160];
        std::snprintf(line, sizeof line, "%-7s %14s %14s %12s %12s %8s\n", "method", "pointAdds", "levelAdds",
                      "mul", "sqr", "inv");
        os << line;
        for (const auto& m : r.methods) {
            std::snprintf(line, sizeof line, "%-7s %7.2f+-%-5.2f %7.2f+-%-5.2f %12.1f %12.1f %8.2f\n",
                          method_name(m.method).c_str(), m.point_adds.mean, m.point_adds.stddev, m.level_adds.mean,
                          m.level_adds.stddev, m.mul.mean, m.sqr.mean, m.inv.mean);
            os << line;
        }
    }
    if (r.trials > 0) {
        os << "tau-NAF density        " << fmt(r.tnaf_density.mean, 4) << "\n";
        os << "tau-JSF joint density  " << fmt(r.tjsf_density.mean, 4) << "\n";
        os << "tau-JSF joint weight   " << fmt(r.tjsf_joint_weight.mean, 2) << "\n";
        if (r.jtdfe_joint_cost.count > 0) {
            os << "JTDFE joint cost       " << fmt(r.jtdfe_joint_cost.mean, 2) << "\n";
            os << "JTDFE vs tau-JSF       " << fmt(r.jtdfe_gain_percent, 2) << "% fewer point additions\n";
        }
        if (r.greedy_ratio.count > 0)
            os << "greedy d/(lgN/lglgN)   " << fmt(r.greedy_ratio.mean, 3) << " (fallbacks " << r.greedy_fallbacks
               << ")\n";
        os << "mismatches             " << r.mismatches << "\n";
    }

    auto data = [&](const std::string& key, const std::string& value) { os << "#data " << key << "=" << value << "\n"; };
    data("trials", std::to_string(r.trials));
    data("seed", std::to_string(r.seed));
    for (const auto& m : r.methods) {
        const std::string p = method_name(m.method) + ".";
        data(p + "point_adds.mean", fmt(m.point_adds.mean, 6));
        data(p + "point_adds.stddev", fmt(m.point_adds.stddev, 6));
        data(p + "level_adds.mean", fmt(m.level_adds.mean, 6));
        data(p + "level_adds.stddev", fmt(m.level_adds.stddev, 6));
        data(p + "mul.mean", fmt(m.mul.mean, 6));
        data(p + "mul.stddev", fmt(m.mul.stddev, 6));
        data(p + "sqr.mean", fmt(m.sqr.mean, 6));
        data(p + "sqr.stddev", fmt(m.sqr.stddev, 6));
        data(p + "inv.mean", fmt(m.inv.mean, 6));
        data(p + "inv.stddev", fmt(m.inv.stddev, 6));
    }
    if (r.trials > 0) {
        data("tnaf.density", fmt(r.tnaf_density.mean, 6));
        data("tjsf.density", fmt(r.tjsf_density.mean, 6));
        data("tjsf.joint_weight.mean", fmt(r.tjsf_joint_weight.mean, 6));
        if (r.jtdfe_joint_cost.count > 0) {
            data("jtdfe.joint_cost.mean", fmt(r.jtdfe_joint_cost.mean, 6));
            data("jtdfe.gain_percent", fmt(r.jtdfe_gain_percent, 4));
        }
        if (r.greedy_ratio.count > 0) {
            data("greedy.ratio.mean", fmt(r.greedy_ratio.mean, 6));
            data("greedy.fallbacks", std::to_string(r.greedy_fallbacks));
        }
        data("mismatches", std::to_string(r.mismatches));
    }
    return os.str();
}

}  // namespace jtdfe
