// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "jtdfe/bench.hpp"
#include "jtdfe/scalar_mul.hpp"
#include "oracles/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace jtdfe;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s AC%d %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void guarded(int id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

std::string padded(const KleinianInt& x, std::size_t width) {
    const std::string s = tau_expand_unsigned(x, Mu::Plus).msb_string();
    return std::string(width - std::min(width, s.size()), '0') + s;
}

std::vector<KTerm> sorted(std::vector<KTerm> v) {
    std::sort(v.begin(), v.end(), KTermLess{});
    return v;
}

std::vector<int> as_ints(const std::vector<std::int8_t>& d) { return {d.begin(), d.end()}; }

}  // namespace

int main() {
    const KoblitzCurve curve(CurveConfig::k163());
    const CurveParams& params = curve.params();
    const Mu mu = curve.mu();
    std::mt19937_64 rng(20240607);

    const KleinianInt eta0(-5L, -18L), eta1(-21L, 5L);
    Lut lut = gen_lut(LutConfig::make(5, 4, mu));

    guarded(1, [&] {
        const std::string u0 = padded(eta0, 10), u1 = padded(eta1, 10);
        const bool ok = u0 == "1101011011" && u1 == "0111011001";
        report(1, ok, "unsigned expansions " + u0 + " / " + u1);
    });

    guarded(2, [&] {
        const auto t0 = std::chrono::steady_clock::now();
        lut = gen_lut(LutConfig::make(5, 4, mu));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const JointTdfe j = joint_blocking(eta0, eta1, lut);
        const std::vector<KTerm> l0{{1, 8, 0}, {1, 6, 2}, {-1, 0, 4}};
        const std::vector<KTerm> l1{{1, 8, 0}, {-1, 6, 2}, {-1, 1, 0}, {-1, 0, 4}};
        const bool sound = eval_terms(j.rows[0], mu) == eta0 && eval_terms(j.rows[1], mu) == eta1;
        const bool ok = sorted(j.rows[0]) == sorted(l0) && sorted(j.rows[1]) == sorted(l1) && joint_cost(j) == 4 &&
                        sound && secs < 300.0;
        std::ostringstream d;
        d << "L0 = " << to_string(std::span<const KTerm>(j.rows[0])) << ", L1 = "
          << to_string(std::span<const KTerm>(j.rows[1])) << ", jointCost " << joint_cost(j) << ", table built in "
          << secs << " s";
        report(2, ok, d.str());
    });

    guarded(3, [&] {
        std::size_t bad = 0, adds_off = 0;
        for (int i = 0; i < 100; ++i) {
            const AffinePoint p = curve.random_point(rng), q = curve.random_point(rng);
            const DsmResult r = double_scalar_jtdfe(curve, eta0, eta1, p, q, lut);
            if (r.point != double_scalar_naive(curve, eta0, eta1, p, q).point) ++bad;
            if (r.point_adds != 4) ++adds_off;
        }
        report(3, bad == 0 && adds_off == 0,
               "100 random (P,Q): " + std::to_string(bad) + " mismatches, " + std::to_string(adds_off) +
                   " runs with pointAdds != 4");
    });

    guarded(4, [&] {
        std::size_t bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const BigInt k = random_scalar(rng, params.n), l = random_scalar(rng, params.n);
            const AffinePoint p = curve.random_point(rng), q = curve.random_point(rng);
            const AffinePoint want = double_scalar_naive(curve, k, l, p, q).point;
            if (double_scalar_tjsf(curve, k, l, p, q).point != want ||
                double_scalar_jtdfe(curve, k, l, p, q, lut).point != want)
                ++bad;
        }
        report(4, bad == 0, "1000 random (k,l,P,Q): " + std::to_string(bad) + " disagreements");
    });

    guarded(5, [&] {
        std::size_t naf_w = 0, naf_len = 0, jsf_w = 0, jsf_len = 0, wrong = 0;
        for (int i = 0; i < 10000; ++i) {
            const KleinianInt a = reduce_scalar(random_scalar(rng, params.n), params);
            const KleinianInt b = reduce_scalar(random_scalar(rng, params.n), params);
            for (const auto& x : {a, b}) {
                const TauNaf n = tnaf(x, mu);
                if (oracle::eval_lsb_first(as_ints(n.digits), mu) != x) ++wrong;
                naf_w += n.weight();
                naf_len += n.length();
            }
            const TauJsf j = tjsf(a, b, mu);
            if (oracle::eval_lsb_first(as_ints(j.rows[0]), mu) != a ||
                oracle::eval_lsb_first(as_ints(j.rows[1]), mu) != b)
                ++wrong;
            jsf_w += j.joint_weight();
            jsf_len += j.length();
        }
        const double dn = double(naf_w) / double(naf_len), dj = double(jsf_w) / double(jsf_len);
        const bool ok = wrong == 0 && std::abs(dn - 1.0 / 3.0) <= 0.02 && std::abs(dj - 0.5) <= 0.02;
        char buf[160];
        std::snprintf(buf, sizeof buf, "tau-NAF density %.4f, tau-JSF density %.4f, %zu wrong expansions", dn, dj,
                      wrong);
        report(5, ok, buf);
    });

    guarded(6, [&] {
        const AffinePoint p = curve.random_point(rng), q = curve.random_point(rng), s = curve.random_point(rng);
        const LDPoint a = curve.add_mixed(curve.to_ld(p), q);
        const LDPoint b = curve.add_mixed(curve.to_ld(q), s);
        OpCounter mixed, full, inversion;
        const LDPoint m = curve.add_mixed(a, s, &mixed);
        const LDPoint f = curve.add_ld(a, b, &full);
        gf163::inv(p.x, &inversion);
        const bool right = curve.to_affine(m) == curve.add(curve.add(p, q), s) &&
                           curve.to_affine(f) == curve.add(curve.add(p, q), curve.add(q, s));
        const bool ok = right && mixed.mul == 8 && mixed.sqr == 5 && full.mul == 13 && full.sqr == 4 &&
                        inversion.mul == 9;
        std::ostringstream d;
        d << "add_mixed " << mixed.mul << "M+" << mixed.sqr << "S, add_ld " << full.mul << "M+" << full.sqr
          << "S, inversion " << inversion.mul << "M";
        report(6, ok, d.str());
    });

    guarded(7, [&] {
        BenchConfig cfg;
        cfg.trials = 1000;
        cfg.seed = 42;
        cfg.methods = {Method::Tjsf, Method::Jtdfe};
        cfg.lut = &lut;
        cfg.greedy_stats = false;
        const BenchReport r = run_bench(curve, cfg);
        std::cout << format_report(r);
        const double jt = r.methods[1].point_adds.mean;
        const bool ok = r.mismatches == 0 && jt < r.tjsf_joint_weight.mean;
        char buf[200];
        std::snprintf(buf, sizeof buf, "mean JTDFE pointAdds %.2f vs tau-JSF joint weight %.2f (%.2f%% fewer)", jt,
                      r.tjsf_joint_weight.mean, r.jtdfe_gain_percent);
        report(7, ok, buf);
    });

    guarded(8, [&] {
        std::size_t keys = 0, diff = 0;
        for (std::uint32_t w = 1; w <= 3; ++w) {
            const LutConfig c = LutConfig::make(w, 4, mu);
            const Lut small = gen_lut(c);
            const std::vector<int> brute = oracle::brute_lut_costs(c.w, c.b_max, c.x_max, c.mu);
            for (std::size_t i = 0; i < brute.size(); ++i, ++keys)
                if (brute[i] != static_cast<int>(joint_cost(small.entries()[i]))) ++diff;
        }
        report(8, diff == 0, std::to_string(keys) + " keys for w=1..3, " + std::to_string(diff) + " differ");
    });

    guarded(9, [&] {
        std::size_t eq_bad = 0, mul_bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const AffinePoint p = curve.random_point(rng);
            const AffinePoint t = curve.frobenius(p);
            const AffinePoint lhs = curve.add(curve.frobenius(t), curve.dbl(p));
            const AffinePoint rhs = mu == Mu::Plus ? t : curve.neg(t);
            if (lhs != rhs) ++eq_bad;
        }
        const bool order = curve.mul_naive(params.r, curve.generator()).infinity;
        for (int i = 0; i < 100; ++i) {
            const BigInt k = random_scalar(rng, params.n);
            const AffinePoint p = curve.random_point(rng);
            if (curve.mul_naive(k, p) != curve.mul_naive(reduce_scalar(k, params), p)) ++mul_bad;
        }
        report(9, eq_bad == 0 && order && mul_bad == 0,
               "characteristic equation failures " + std::to_string(eq_bad) + "/1000, [r]G = O " +
                   (order ? "yes" : "no") + ", [k]P != [rho]P " + std::to_string(mul_bad) + "/100");
    });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
    return failures == 0 ? 0 : 1;
}
