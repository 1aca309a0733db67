#include "jtdfe/tdfe.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

namespace jtdfe {

namespace {

const KleinianInt kTauMinusOne(-1L, 1L);

KleinianInt pow_of(const KleinianInt& base, std::uint32_t e, Mu mu) {
    KleinianInt r(1L, 0L);
    for (std::uint32_t i = 0; i < e; ++i) r = mul(r, base, mu);
    return r;
}

// Complex embedding with tau = (mu + i*sqrt(7))/2.
struct Approx {
    double re = 0;
    double im = 0;
};

Approx approx(const KleinianInt& v, Mu mu) {
    const double a = mpz_get_d(v.a.get_mpz_t());
    const double b = mpz_get_d(v.b.get_mpz_t());
    return {a + 0.5 * to_int(mu) * b, 0.5 * std::sqrt(7.0) * b};
}

double magnitude(const Approx& z) { return std::hypot(z.re, z.im); }

}  // namespace

std::string to_string(const KTerm& t) {
    std::string s = t.sign > 0 ? "+" : "-";
    if (t.x == 0 && t.y == 0) return s + "1";
    if (t.x == 1) s += "tau";
    else if (t.x > 1) s += "tau^" + std::to_string(t.x);
    if (t.y == 1) s += "(tau-1)";
    else if (t.y > 1) s += "(tau-1)^" + std::to_string(t.y);
    return s;
}

std::string to_string(std::span<const KTerm> terms) {
    if (terms.empty()) return "0";
    std::vector<KTerm> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(), KTermDisplayOrder{});
    std::string out;
    for (const auto& t : sorted) {
        if (!out.empty()) out += ' ';
        out += to_string(t);
    }
    return out;
}

std::uint32_t Tdfe::max_y() const {
    std::uint32_t m = 0;
    for (const auto& t : terms) m = std::max(m, t.y);
    return m;
}

std::uint32_t JointTdfe::max_y() const {
    std::uint32_t m = 0;
    for (const auto& row : rows)
        for (const auto& t : row) m = std::max(m, t.y);
    return m;
}

TermTable::TermTable(ExpansionBounds bounds, Mu mu) : bounds_(bounds), mu_(mu) {
    const std::size_t nx = bounds.x_max + 1;
    values_.reserve(nx * (bounds.y_max + 1));
    KleinianInt level(1L, 0L);  // (tau-1)^y
    for (std::uint32_t y = 0; y <= bounds.y_max; ++y) {
        KleinianInt v = level;
        const KleinianInt tau(0L, 1L);
        for (std::uint32_t x = 0; x <= bounds.x_max; ++x) {
            values_.push_back(v);
            v = mul(v, tau, mu);
        }
        level = mul(level, kTauMinusOne, mu);
    }
}

const KleinianInt& TermTable::value(std::uint32_t x, std::uint32_t y) const {
    return values_.at(static_cast<std::size_t>(y) * (bounds_.x_max + 1) + x);
}

KleinianInt term_value(const KTerm& t, Mu mu) {
    KleinianInt v = mul(tau_pow(t.x, mu), pow_of(kTauMinusOne, t.y, mu), mu);
    return t.sign < 0 ? -v : v;
}

KleinianInt eval_terms(std::span<const KTerm> terms, Mu mu) {
    KleinianInt sum;
    for (const auto& t : terms) sum = sum + term_value(t, mu);
    return sum;
}

std::size_t joint_cost(const JointTdfe& j) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> cols;
    for (const auto& row : j.rows)
        for (const auto& t : row) cols.emplace(t.x, t.y);
    return cols.size();
}

KTerm closest_kterm(const KleinianInt& x, const TermTable& table) {
    if (x.is_zero()) throw Error("closest_kterm: x must be nonzero");
    const Mu mu = table.mu();
    const ExpansionBounds b = table.bounds();

    // Screen in floating point, then decide exactly among everything that the
    // rounding error could not separate from the approximate minimum.
    const Approx ax = approx(x, mu);
    const double mx = magnitude(ax);
    struct Cand {
        KTerm term;
        double dist;
    };
    std::vector<Cand> cands;
    cands.reserve(2 * (b.x_max + 1) * (b.y_max + 1));
    double best = std::numeric_limits<double>::infinity();
    double max_mag = 0;
    for (std::uint32_t y = 0; y <= b.y_max; ++y) {
        for (std::uint32_t xx = 0; xx <= b.x_max; ++xx) {
            const Approx at = approx(table.value(xx, y), mu);
            max_mag = std::max(max_mag, magnitude(at));
            for (int s : {1, -1}) {
                const double d = std::hypot(ax.re - s * at.re, ax.im - s * at.im);
                cands.push_back({KTerm{static_cast<std::int8_t>(s), xx, y}, d});
                best = std::min(best, d);
            }
        }
    }
    const double slack = 1e-12 * (mx + max_mag) + 1e-9;

    KTerm chosen{};
    BigInt chosen_norm;
    bool have = false;
    for (const auto& c : cands) {
        if (c.dist > best + slack) continue;
        const KleinianInt& v = table.value(c.term.x, c.term.y);
        const BigInt n = norm(c.term.sign > 0 ? x - v : x + v, mu);
        if (!have || n < chosen_norm || (n == chosen_norm && KTermLess{}(c.term, chosen))) {
            chosen = c.term;
            chosen_norm = n;
            have = true;
        }
    }
    return chosen;
}

KTerm closest_kterm(const KleinianInt& x, ExpansionBounds bounds, Mu mu) {
    return closest_kterm(x, TermTable(bounds, mu));
}

ExpansionBounds greedy_bounds_for(const KleinianInt& x, Mu mu, std::uint32_t y_max) {
    const BigInt n = norm(x, mu);
    const auto bits = sgn(n) == 0 ? 0u : static_cast<std::uint32_t>(mpz_sizeinbase(n.get_mpz_t(), 2));
    return {bits + 4, y_max};
}

namespace {

GreedyResult greedy_impl(const KleinianInt& x, const TermTable& table, bool strict) {
    const Mu mu = table.mu();
    GreedyResult out;
    KleinianInt rem = x;
    BigInt rem_norm = norm(rem, mu);
    while (!rem.is_zero()) {
        const KTerm t = closest_kterm(rem, table);
        const KleinianInt& v = table.value(t.x, t.y);
        KleinianInt next = t.sign > 0 ? rem - v : rem + v;
        BigInt next_norm = norm(next, mu);
        if (next_norm >= rem_norm) {
            if (strict) throw NoProgress("greedy expansion stalled at remainder " + rem.str());
            const TauNaf tail = tnaf(rem, mu);
            for (std::size_t i = 0; i < tail.digits.size(); ++i)
                if (tail.digits[i] != 0)
                    out.expansion.terms.push_back(KTerm{tail.digits[i], static_cast<std::uint32_t>(i), 0});
            out.fell_back = true;
            return out;
        }
        out.expansion.terms.push_back(t);
        rem = std::move(next);
        rem_norm = std::move(next_norm);
    }
    return out;
}

}  // namespace

GreedyResult greedy_tdfe_detailed(const KleinianInt& x, const TermTable& table) {
    return greedy_impl(x, table, false);
}

Tdfe greedy_tdfe_strict(const KleinianInt& x, const TermTable& table) {
    return greedy_impl(x, table, true).expansion;
}

Tdfe greedy_tdfe(const KleinianInt& x, ExpansionBounds bounds, Mu mu) {
    return greedy_tdfe_detailed(x, TermTable(bounds, mu)).expansion;
}

}  // namespace jtdfe
