#include "jtdfe/cli.hpp"

#include "jtdfe/bench.hpp"
#include "jtdfe/errors.hpp"
#include "jtdfe/scalar_mul.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace jtdfe::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Shared option groups

struct CurveArgs {
    std::string path;

    void add(CLI::App* app) { app->add_option("--curve", path, "Curve config file (key=value); K-163 by default"); }

    KoblitzCurve load() const {
        if (path.empty()) return KoblitzCurve(CurveConfig::k163());
        if (!fs::exists(path)) throw UsageError("curve config '" + path + "' does not exist");
        return KoblitzCurve(CurveConfig::load(path));
    }
};

struct ScalarArgs {
    std::string k, l, eta0, eta1;

    void add(CLI::App* app) {
        app->add_option("--k", k, "First scalar (decimal or 0x-hex), reduced mod delta");
        app->add_option("--l", l, "Second scalar (decimal or 0x-hex), reduced mod delta");
        app->add_option("--eta0", eta0, "First scalar as an explicit Kleinian pair a,b");
        app->add_option("--eta1", eta1, "Second scalar as an explicit Kleinian pair a,b");
    }

    struct Slot {
        std::string label;
        std::optional<BigInt> integer;
        KleinianInt reduced;
    };

    std::array<Slot, 2> resolve(const CurveParams& params) const {
        return {slot(k, eta0, "k", "eta0", params), slot(l, eta1, "l", "eta1", params)};
    }

private:
    static Slot slot(const std::string& integer, const std::string& pair, const char* iname, const char* pname,
                     const CurveParams& params) {
        if (integer.empty() == pair.empty())
            throw UsageError(std::string("give exactly one of --") + iname + " and --" + pname);
        Slot s;
        if (!integer.empty()) {
            s.label = iname;
            s.integer = parse_scalar(integer);
            s.reduced = reduce_scalar(*s.integer, params);
        } else {
            s.label = pname;
            s.reduced = parse_kleinian(pair);
        }
        return s;
    }
};

struct LutArgs {
    std::string path;
    std::uint32_t w = 5;
    std::uint32_t bmax = 4;
    CLI::Option* w_opt = nullptr;
    CLI::Option* b_opt = nullptr;

    void add(CLI::App* app) {
        app->add_option("--lut", path, "KTAB lookup table file");
        w_opt = app->add_option("--w", w, "Window size")->capture_default_str();
        b_opt = app->add_option("--bmax", bmax, "Maximum (tau-1) exponent")->capture_default_str();
    }

    Lut resolve(Mu mu, std::ostream& err) const {
        const LutConfig want = LutConfig::make(w, bmax, mu);
        want.validate();
        if (!path.empty()) {
            if (!fs::exists(path)) throw UsageError("lookup table '" + path + "' does not exist");
            Lut lut = read_lut_file(path);
            const LutConfig& got = lut.config();
            if (got.mu != mu) throw ValidationError("lookup table mu does not match the curve");
            if (w_opt->count() && got.w != w)
                throw ValidationError("lookup table has w=" + std::to_string(got.w) + ", --w is " + std::to_string(w));
            if (b_opt->count() && got.b_max != bmax)
                throw ValidationError("lookup table has bmax=" + std::to_string(got.b_max) + ", --bmax is " +
                                      std::to_string(bmax));
            return lut;
        }
        const fs::path bundled = fs::path(JTDFE_DATA_DIR) / ("lut_w" + std::to_string(w) + "_b" +
                                                              std::to_string(bmax) + "_mu" +
                                                              (mu == Mu::Plus ? "+1" : "-1") + ".ktab");
        if (fs::exists(bundled)) {
            Lut lut = read_lut_file(bundled);
            if (lut.config() == want) return lut;
        }
        err << "note: generating the w=" << w << " bmax=" << bmax << " lookup table in memory\n";
        return gen_lut(want);
    }
};

// ---------------------------------------------------------------------------
// Formatting helpers

std::string signed_digits(std::span<const std::int8_t> digits, std::size_t width) {
    std::string s;
    for (std::size_t i = width; i-- > 0;) {
        const int d = i < digits.size() ? digits[i] : 0;
        s += d > 0 ? '+' : d < 0 ? '-' : '0';
    }
    return s;
}

std::string padded(const TauExpansion& e, std::size_t width) {
    return std::string(width - e.length(), '0') + e.msb_string();
}

std::string term_list(const std::vector<KTerm>& terms) { return to_string(std::span<const KTerm>(terms)); }

void print_grid(std::ostream& out, const std::string& name, const std::vector<KTerm>& row, std::uint32_t x_max,
                std::uint32_t y_max) {
    out << "grid " << name << " (rows: (tau-1) exponent, columns: tau exponent)\n";
    std::vector<std::vector<int>> cell(y_max + 1, std::vector<int>(x_max + 1, 0));
    std::vector<std::vector<int>> hits(y_max + 1, std::vector<int>(x_max + 1, 0));
    for (const auto& t : row) {
        cell[t.y][t.x] += t.sign;
        ++hits[t.y][t.x];
    }
    std::ostringstream head;
    head << " y\\x";
    for (std::uint32_t x = 0; x <= x_max; ++x) head << ' ' << (x % 10);
    out << head.str() << "\n";
    for (std::uint32_t y = y_max + 1; y-- > 0;) {
        out << (y < 10 ? "   " : "  ") << y;
        for (std::uint32_t x = 0; x <= x_max; ++x) {
            char ch = '.';
            if (hits[y][x] > 1) ch = '*';
            else if (cell[y][x] > 0) ch = '+';
            else if (cell[y][x] < 0) ch = '-';
            out << ' ' << ch;
        }
        out << "\n";
    }
}

void print_counters(std::ostream& out, const DsmResult& r) {
    out << "pointAdds  " << r.point_adds << "\n";
    out << "levelAdds  " << r.level_adds << "\n";
    out << "field ops  mul=" << r.counters.mul << " sqr=" << r.counters.sqr << " inv=" << r.counters.inv
        << " add=" << r.counters.add << "\n";
}

Mu parse_mu(const std::string& s) {
    if (s == "+1" || s == "1") return Mu::Plus;
    if (s == "-1") return Mu::Minus;
    throw UsageError("--mu must be +1 or -1, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_recode(const CurveArgs& ca, const ScalarArgs& sa, const LutArgs& la, bool grid, std::ostream& out,
               std::ostream& err) {
    const KoblitzCurve curve = ca.load();
    const Mu mu = curve.mu();
    const auto slots = sa.resolve(curve.params());
    const Lut lut = la.resolve(mu, err);
    const LutConfig& lc = lut.config();

    for (const auto& s : slots) {
        if (s.integer) out << s.label << " = " << s.integer->get_str() << " -> rho = " << s.reduced.str() << "\n";
        else out << s.label << " = " << s.reduced.str() << "\n";
    }

    const TauExpansion u0 = tau_expand_unsigned(slots[0].reduced, mu);
    const TauExpansion u1 = tau_expand_unsigned(slots[1].reduced, mu);
    const std::size_t ulen = std::max(u0.length(), u1.length());
    out << "unsigned   " << padded(u0, ulen) << "\n";
    out << "           " << padded(u1, ulen) << "\n";

    const TauNaf n0 = tnaf(slots[0].reduced, mu);
    const TauNaf n1 = tnaf(slots[1].reduced, mu);
    const std::size_t nlen = std::max(n0.length(), n1.length());
    out << "tnaf       " << signed_digits(n0.digits, nlen) << "  weight " << n0.weight() << "\n";
    out << "           " << signed_digits(n1.digits, nlen) << "  weight " << n1.weight() << "\n";

    const TauJsf jsf = tjsf(slots[0].reduced, slots[1].reduced, mu);
    out << "tjsf       " << signed_digits(jsf.rows[0], jsf.length()) << "\n";
    out << "           " << signed_digits(jsf.rows[1], jsf.length()) << "  joint weight " << jsf.joint_weight()
        << "\n";

    const std::size_t blocks = (ulen + lc.w - 1) / lc.w;
    const std::string s0 = padded(u0, blocks * lc.w);
    const std::string s1 = padded(u1, blocks * lc.w);
    out << "jtdfe      w=" << lc.w << " bmax=" << lc.b_max << " xmax=" << lc.x_max << "\n";
    for (std::size_t i = 0; i < blocks; ++i) {
        // Block i holds digits i*w .. i*w+w-1, i.e. a slice from the right of the MSB-first string.
        const std::size_t from = (blocks - 1 - i) * lc.w;
        const std::string b0 = s0.substr(from, lc.w);
        const std::string b1 = s1.substr(from, lc.w);
        const JointTdfe& e = lut.lookup(static_cast<std::uint32_t>(std::stoul(b0, nullptr, 2)),
                                        static_cast<std::uint32_t>(std::stoul(b1, nullptr, 2)));
        out << "  block " << i << "  " << b0 << " " << b1 << " : " << term_list(e.rows[0]) << " | "
            << term_list(e.rows[1]) << "\n";
    }
    const JointTdfe j = joint_blocking(slots[0].reduced, slots[1].reduced, lut);
    out << "  L0 = " << term_list(j.rows[0]) << "\n";
    out << "  L1 = " << term_list(j.rows[1]) << "\n";
    out << "  joint cost " << joint_cost(j) << "\n";

    if (grid) {
        std::uint32_t x_max = 0;
        for (const auto& row : j.rows)
            for (const auto& t : row) x_max = std::max(x_max, t.x);
        print_grid(out, "L0", j.rows[0], x_max, lc.b_max);
        print_grid(out, "L1", j.rows[1], x_max, lc.b_max);
    }

    out << "#data eta0=" << slots[0].reduced.str() << "\n";
    out << "#data eta1=" << slots[1].reduced.str() << "\n";
    out << "#data unsigned0=" << padded(u0, ulen) << "\n";
    out << "#data unsigned1=" << padded(u1, ulen) << "\n";
    out << "#data tnaf.weight=" << n0.weight() + n1.weight() << "\n";
    out << "#data tjsf.joint_weight=" << jsf.joint_weight() << "\n";
    out << "#data jtdfe.L0=" << term_list(j.rows[0]) << "\n";
    out << "#data jtdfe.L1=" << term_list(j.rows[1]) << "\n";
    out << "#data jtdfe.joint_cost=" << joint_cost(j) << "\n";
    return kExitOk;
}

int cmd_lut_gen(std::uint32_t w, std::uint32_t bmax, std::optional<std::uint32_t> xmax, const std::string& mu_text,
                const std::string& output, bool stats, bool serial, std::ostream& out, std::ostream& err) {
    LutConfig c = LutConfig::make(w, bmax, parse_mu(mu_text));
    if (xmax) c.x_max = *xmax;
    try {
        c.validate();
    } catch (const InvalidConfig& e) {
        throw UsageError(e.what());
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Lut lut = serial ? gen_lut_serial(c) : gen_lut(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << "generated " << lut.size() << " entries in " << secs << " s\n";

    if (!output.empty()) write_lut_file(output, lut);
    else if (!stats) out << serialize_lut(lut);

    if (stats) {
        out << "entries " << lut.size() << "\n";
        const auto hist = lut_cost_histogram(lut);
        double mean = 0;
        for (const auto& [cost, n] : hist) {
            out << "cost " << cost << ": " << n << "\n";
            mean += static_cast<double>(cost * n);
        }
        mean /= static_cast<double>(lut.size());
        out << "#data entries=" << lut.size() << "\n";
        for (const auto& [cost, n] : hist) out << "#data cost." << cost << "=" << n << "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", mean);
        out << "#data cost.mean=" << buf << "\n";
    }
    return kExitOk;
}

AffinePoint point_arg(const KoblitzCurve& curve, const std::string& text, const AffinePoint& fallback,
                      const char* name) {
    if (text.empty()) return fallback;
    AffinePoint p;
    try {
        p = AffinePoint::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
    if (!curve.on_curve(p)) throw ValidationError(std::string("point ") + name + " is not on the curve");
    if (!curve.in_subgroup(p)) throw ValidationError(std::string("point ") + name + " is not in the order-r subgroup");
    return p;
}

int cmd_dsmul(const CurveArgs& ca, const ScalarArgs& sa, const LutArgs& la, const std::string& p_text,
              const std::string& q_text, const std::string& method, std::ostream& out, std::ostream& err) {
    const KoblitzCurve curve = ca.load();
    const auto slots = sa.resolve(curve.params());
    const AffinePoint p = point_arg(curve, p_text, curve.generator(), "P");
    const AffinePoint q = point_arg(curve, q_text, curve.dbl(curve.generator()), "Q");

    DsmResult r;
    if (method == "naive") {
        if (slots[0].integer && slots[1].integer)
            r = double_scalar_naive(curve, *slots[0].integer, *slots[1].integer, p, q);
        else
            r = double_scalar_naive(curve, slots[0].reduced, slots[1].reduced, p, q);
    } else if (method == "tjsf") {
        r = double_scalar_tjsf(curve, slots[0].reduced, slots[1].reduced, p, q);
    } else if (method == "jtdfe") {
        const Lut lut = la.resolve(curve.mu(), err);
        r = double_scalar_jtdfe(curve, slots[0].reduced, slots[1].reduced, p, q, lut);
    } else {
        throw UsageError("--method must be naive, tjsf or jtdfe");
    }

    out << "method     " << method << "\n";
    out << "result     " << r.point.str() << "\n";
    print_counters(out, r);
    out << "#data method=" << method << "\n";
    out << "#data point=" << r.point.str() << "\n";
    out << "#data point_adds=" << r.point_adds << "\n";
    out << "#data level_adds=" << r.level_adds << "\n";
    out << "#data mul=" << r.counters.mul << "\n";
    out << "#data sqr=" << r.counters.sqr << "\n";
    out << "#data inv=" << r.counters.inv << "\n";
    out << "#data add=" << r.counters.add << "\n";
    return kExitOk;
}

int cmd_bench(const CurveArgs& ca, const LutArgs& la, std::size_t trials, std::uint64_t seed,
              const std::string& methods, bool serial, bool no_greedy, std::ostream& out, std::ostream& err) {
    const KoblitzCurve curve = ca.load();
    BenchConfig c;
    c.trials = trials;
    c.seed = seed;
    try {
        c.methods = parse_methods(methods);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    c.greedy_stats = !no_greedy;
    std::optional<Lut> lut;
    if (std::find(c.methods.begin(), c.methods.end(), Method::Jtdfe) != c.methods.end()) {
        lut.emplace(la.resolve(curve.mu(), err));
        c.lut = &*lut;
    }
    const BenchReport rep = serial ? run_bench_serial(curve, c) : run_bench(curve, c);
    out << format_report(rep);
    return rep.mismatches == 0 ? kExitOk : kExitInternal;
}

int cmd_selftest(const CurveArgs& ca, const LutArgs& la, std::size_t samples, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
    const KoblitzCurve curve = ca.load();
    const Mu mu = curve.mu();
    int failures = 0;
    auto report = [&](bool ok, const std::string& name, const std::string& detail = "") {
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) out << ": " << detail;
        out << "\n";
        if (!ok) ++failures;
    };

    if (mu != Mu::Plus) {
        out << "SKIP worked example (defined for a = 1 curves)\n";
    } else {
        const KleinianInt eta0(-5L, -18L);
        const KleinianInt eta1(-21L, 5L);
        const std::string u0 = tau_expand_unsigned(eta0, mu).msb_string();
        const std::string u1 = tau_expand_unsigned(eta1, mu).msb_string();
        report(u0 == "1101011011", "unsigned expansion of -5-18tau", u0);
        report(u1 == "111011001", "unsigned expansion of -21+5tau", u1);

        const Lut lut = la.resolve(mu, err);
        if (lut.config().w == 5 && lut.config().b_max == 4) {
            const JointTdfe j = joint_blocking(eta0, eta1, lut);
            JointTdfe want;
            want.rows[0] = {{-1, 0, 4}, {1, 8, 0}, {1, 6, 2}};
            want.rows[1] = {{-1, 1, 0}, {1, 8, 0}, {-1, 6, 2}, {-1, 0, 4}};
            for (auto& row : want.rows) std::sort(row.begin(), row.end(), KTermLess{});
            report(j == want && joint_cost(j) == 4, "worked example joint expansion",
                   term_list(j.rows[0]) + " | " + term_list(j.rows[1]));

            std::mt19937_64 rng(seed);
            bool four_adds_ok = true;
            std::string detail;
            for (int i = 0; i < 3 && four_adds_ok; ++i) {
                const AffinePoint p = curve.random_point(rng);
                const AffinePoint q = curve.random_point(rng);
                const DsmResult r = double_scalar_jtdfe(curve, eta0, eta1, p, q, lut);
                const AffinePoint want_pt = double_scalar_naive(curve, eta0, eta1, p, q).point;
                if (!(r.point == want_pt) || r.point_adds != 4) {
                    four_adds_ok = false;
                    detail = "pointAdds " + std::to_string(r.point_adds);
                }
            }
            report(four_adds_ok, "four-addition evaluation", detail);

            BenchConfig bc;
            bc.trials = samples;
            bc.seed = seed;
            bc.methods = {Method::Naive, Method::Tjsf, Method::Jtdfe};
            bc.lut = &lut;
            bc.greedy_stats = false;
            const BenchReport rep = run_bench(curve, bc);
            report(rep.mismatches == 0, "strategy agreement over " + std::to_string(samples) + " samples",
                   std::to_string(rep.mismatches) + " mismatches");
        } else {
            out << "SKIP worked example (needs w=5, bmax=4)\n";
        }
    }

    {
        std::mt19937_64 rng(seed + 1);
        const AffinePoint a = curve.random_point(rng);
        const AffinePoint b = curve.random_point(rng);
        const LDPoint la_pt = curve.frobenius(curve.to_ld(a));
        OpCounter cm, cl, ci;
        curve.add_mixed(la_pt, b, &cm);
        curve.add_ld(la_pt, curve.to_ld(b), &cl);
        gf163::inv(a.x, &ci);
        report(cm.mul == 8 && cm.sqr == 5, "mixed addition costs 8M+5S");
        report(cl.mul == 13 && cl.sqr == 4, "projective addition costs 13M+4S");
        report(ci.mul == 9 && ci.inv == 1, "inversion costs 9M");
    }

    out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

BigInt parse_scalar(const std::string& text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s.remove_prefix(2);
    }
    const bool ok = !s.empty() && std::all_of(s.begin(), s.end(), [base](char ch) {
        return base == 16 ? std::isxdigit(static_cast<unsigned char>(ch)) != 0
                          : std::isdigit(static_cast<unsigned char>(ch)) != 0;
    });
    if (!ok) throw std::invalid_argument("malformed scalar '" + text + "'");
    BigInt v(std::string(s), base);
    return negative ? BigInt(-v) : v;
}

KleinianInt parse_kleinian(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("Kleinian integer must be 'a,b', got '" + text + "'");
    return KleinianInt(parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Joint two-dimensional Frobenius expansions on Koblitz curves", "jtdfe"};
    app.require_subcommand(1);

    CurveArgs curve_args;
    ScalarArgs scalar_args;
    LutArgs lut_args;

    auto* recode = app.add_subcommand("recode", "Show tau-adic, tau-NAF, tau-JSF and JTDFE forms of a scalar pair");
    bool grid = false;
    curve_args.add(recode);
    scalar_args.add(recode);
    lut_args.add(recode);
    recode->add_flag("--grid", grid, "Print the (tau, tau-1) exponent grid of each row");

    auto* lutgen = app.add_subcommand("lut-gen", "Generate a window lookup table by exhaustive search");
    std::uint32_t gen_w = 5, gen_b = 4;
    std::optional<std::uint32_t> gen_x;
    std::string gen_mu = "+1", gen_out;
    bool gen_stats = false, gen_serial = false;
    lutgen->add_option("--w", gen_w, "Window size")->capture_default_str();
    lutgen->add_option("--bmax", gen_b, "Maximum (tau-1) exponent")->capture_default_str();
    lutgen->add_option("--xmax", gen_x, "Maximum tau exponent inside a block (default w+2)");
    lutgen->add_option("--mu", gen_mu, "Frobenius trace sign, +1 or -1")->capture_default_str();
    lutgen->add_option("-o,--out", gen_out, "Output KTAB file (stdout when omitted)");
    lutgen->add_flag("--stats", gen_stats, "Print entry count and joint-cost histogram");
    lutgen->add_flag("--serial", gen_serial, "Use the serial reference generator");

    auto* dsmul = app.add_subcommand("dsmul", "Compute [k]P + [l]Q with one strategy");
    CurveArgs ds_curve;
    ScalarArgs ds_scalars;
    LutArgs ds_lut;
    std::string ds_p, ds_q, ds_method = "jtdfe";
    ds_curve.add(dsmul);
    ds_scalars.add(dsmul);
    ds_lut.add(dsmul);
    dsmul->add_option("--P", ds_p, "Point P as (x,y) in hex; base point by default");
    dsmul->add_option("--Q", ds_q, "Point Q as (x,y) in hex; [2]G by default");
    dsmul->add_option("--method", ds_method, "naive, tjsf or jtdfe")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Randomized operation-count comparison");
    CurveArgs b_curve;
    LutArgs b_lut;
    std::size_t b_trials = 1000;
    std::uint64_t b_seed = 42;
    std::string b_methods = "tjsf,jtdfe";
    bool b_serial = false, b_no_greedy = false;
    b_curve.add(bench);
    b_lut.add(bench);
    bench->add_option("--trials", b_trials, "Number of random (k, l, P, Q)")->capture_default_str();
    bench->add_option("--seed", b_seed, "Generator seed")->capture_default_str();
    bench->add_option("--methods", b_methods, "Comma-separated naive,tjsf,jtdfe")->capture_default_str();
    bench->add_flag("--serial", b_serial, "Run trials serially");
    bench->add_flag("--no-greedy", b_no_greedy, "Skip the greedy expansion-length statistic");

    auto* selftest = app.add_subcommand("selftest", "Worked example, four-addition check and strategy agreement");
    CurveArgs s_curve;
    LutArgs s_lut;
    std::size_t s_samples = 20;
    std::uint64_t s_seed = 7;
    s_curve.add(selftest);
    s_lut.add(selftest);
    selftest->add_option("--samples", s_samples, "Random quadruples for the agreement check")->capture_default_str();
    selftest->add_option("--seed", s_seed, "Generator seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (recode->parsed()) return cmd_recode(curve_args, scalar_args, lut_args, grid, out, err);
        if (lutgen->parsed())
            return cmd_lut_gen(gen_w, gen_b, gen_x, gen_mu, gen_out, gen_stats, gen_serial, out, err);
        if (dsmul->parsed()) return cmd_dsmul(ds_curve, ds_scalars, ds_lut, ds_p, ds_q, ds_method, out, err);
        if (bench->parsed())
            return cmd_bench(b_curve, b_lut, b_trials, b_seed, b_methods, b_serial, b_no_greedy, out, err);
        if (selftest->parsed()) return cmd_selftest(s_curve, s_lut, s_samples, s_seed, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidConfig& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NonTerminating& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace jtdfe::cli
