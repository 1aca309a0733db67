#include "jtdfe/ztau.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace jtdfe {

namespace {

bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

BigInt half_exact(const BigInt& v) {
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
    return r;
}

// Low two bits of a two's-complement view, i.e. v mod 4 in [0,3].
unsigned mod4(const BigInt& v) { return static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), 4)); }

// NAF digit for an element with odd rational part: makes x - u divisible by tau^2.
int naf_digit(const KleinianInt& x) {
    const BigInt t = x.a - 2 * x.b;
    return mod4(t) == 1 ? 1 : -1;
}

// Parity of the rational part of v / tau for v with even rational part.
bool quotient_is_odd(const KleinianInt& v) {
    return (mpz_tstbit(v.b.get_mpz_t(), 0) ^ mpz_tstbit(v.a.get_mpz_t(), 1)) != 0;
}

KleinianInt sub_digit(const KleinianInt& x, int u) {
    KleinianInt r = x;
    if (u > 0) r.a -= static_cast<unsigned long>(u);
    else if (u < 0) r.a += static_cast<unsigned long>(-u);
    return r;
}

template <class Digit>
KleinianInt horner(std::span<const Digit> digits, Mu mu) {
    const KleinianInt tau(0L, 1L);
    KleinianInt acc;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = mul(acc, tau, mu);
        acc.a += static_cast<long>(*it);
    }
    return acc;
}

}  // namespace

std::string KleinianInt::str() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }

KleinianInt operator+(const KleinianInt& x, const KleinianInt& y) { return {x.a + y.a, x.b + y.b}; }
KleinianInt operator-(const KleinianInt& x, const KleinianInt& y) { return {x.a - y.a, x.b - y.b}; }
KleinianInt operator-(const KleinianInt& x) { return {BigInt(-x.a), BigInt(-x.b)}; }

KleinianInt mul(const KleinianInt& x, const KleinianInt& y, Mu mu) {
    // (a + b t)(c + d t) = (ac - 2bd) + (ad + bc + mu*bd) t
    const BigInt bd = x.b * y.b;
    BigInt re = x.a * y.a - 2 * bd;
    BigInt im = x.a * y.b + x.b * y.a;
    if (mu == Mu::Plus) im += bd;
    else im -= bd;
    return {std::move(re), std::move(im)};
}

BigInt norm(const KleinianInt& x, Mu mu) {
    BigInt ab = x.a * x.b;
    if (mu == Mu::Minus) ab = -ab;
    return x.a * x.a + ab + 2 * x.b * x.b;
}

KleinianInt conj(const KleinianInt& x, Mu mu) {
    BigInt re = mu == Mu::Plus ? BigInt(x.a + x.b) : BigInt(x.a - x.b);
    return {std::move(re), BigInt(-x.b)};
}

KleinianInt div_tau(const KleinianInt& x, Mu mu) {
    if (is_odd(x.a)) throw NotDivisible("div_tau: " + x.str() + " is not divisible by tau");
    const BigInt h = half_exact(x.a);
    BigInt re = mu == Mu::Plus ? BigInt(x.b + h) : BigInt(x.b - h);
    return {std::move(re), BigInt(-h)};
}

std::optional<KleinianInt> exact_quotient(const KleinianInt& x, const KleinianInt& y, Mu mu) {
    const BigInt n = norm(y, mu);
    if (sgn(n) == 0) throw DivisionByZero("exact_quotient: division by zero");
    const KleinianInt num = mul(x, conj(y, mu), mu);
    if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    KleinianInt q;
    mpz_divexact(q.a.get_mpz_t(), num.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.b.get_mpz_t(), num.b.get_mpz_t(), n.get_mpz_t());
    return q;
}

KleinianInt tau_pow(unsigned e, Mu mu) {
    // tau^{i+1} = mu*tau^i - 2*tau^{i-1}
    KleinianInt prev(1L, 0L);
    if (e == 0) return prev;
    KleinianInt cur(0L, 1L);
    for (unsigned i = 1; i < e; ++i) {
        KleinianInt next = to_int(mu) > 0 ? cur - prev - prev : -cur - prev - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

KleinianInt eval_digits(std::span<const std::int8_t> digits, Mu mu) { return horner(digits, mu); }
KleinianInt eval_digits(std::span<const std::uint8_t> digits, Mu mu) { return horner(digits, mu); }

BigInt round_div(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DivisionByZero("round_div: zero denominator");
    BigInt n = abs(num);
    BigInt d = abs(den);
    BigInt q;
    BigInt twice_n = 2 * n + d;
    BigInt twice_d = 2 * d;
    mpz_fdiv_q(q.get_mpz_t(), twice_n.get_mpz_t(), twice_d.get_mpz_t());
    if (sgn(num) * sgn(den) < 0) q = -q;
    return q;
}

// ---------------------------------------------------------------------------

std::string TauExpansion::msb_string() const {
    std::string s;
    s.reserve(digits.size());
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(*it ? '1' : '0');
    return s;
}

std::size_t TauNaf::weight() const {
    return static_cast<std::size_t>(std::count_if(digits.begin(), digits.end(), [](auto d) { return d != 0; }));
}

std::size_t TauJsf::joint_weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < length(); ++i)
        if (rows[0][i] != 0 || rows[1][i] != 0) ++w;
    return w;
}

std::size_t unsigned_expansion_cap(const KleinianInt& x, Mu mu) {
    const BigInt n = norm(x, mu);
    const std::size_t bits = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    return 2 * (bits + 16);
}

TauExpansion tau_expand_unsigned(const KleinianInt& x, Mu mu) {
    TauExpansion out;
    const std::size_t cap = unsigned_expansion_cap(x, mu);
    // Large values shrink geometrically; a cycle can only occur once the norm
    // is small, so only small states are remembered.
    const BigInt small_norm = 1 << 12;
    std::set<std::pair<BigInt, BigInt>> seen;
    KleinianInt cur = x;
    while (!cur.is_zero()) {
        if (out.digits.size() >= cap)
            throw NonTerminating("unsigned tau-adic expansion of " + x.str() + " exceeded " +
                                 std::to_string(cap) + " digits");
        if (norm(cur, mu) <= small_norm && !seen.emplace(cur.a, cur.b).second)
            throw NonTerminating("unsigned tau-adic expansion of " + x.str() + " entered a cycle");
        const std::uint8_t u = is_odd(cur.a) ? 1 : 0;
        out.digits.push_back(u);
        if (u) cur.a -= 1;
        cur = div_tau(cur, mu);
    }
    return out;
}

TauNaf tnaf(const KleinianInt& x, Mu mu) {
    TauNaf out;
    KleinianInt cur = x;
    while (!cur.is_zero()) {
        int u = 0;
        if (is_odd(cur.a)) {
            u = naf_digit(cur);
            cur = sub_digit(cur, u);
        }
        out.digits.push_back(static_cast<std::int8_t>(u));
        cur = div_tau(cur, mu);
    }
    return out;
}

TauJsf tjsf(const KleinianInt& x0, const KleinianInt& x1, Mu mu) {
    TauJsf out;
    std::array<KleinianInt, 2> cur{x0, x1};
    const std::size_t cap = std::max(unsigned_expansion_cap(x0, mu), unsigned_expansion_cap(x1, mu)) + 64;

    while (!cur[0].is_zero() || !cur[1].is_zero()) {
        if (out.rows[0].size() > cap)
            throw Error("tjsf: no termination within " + std::to_string(cap) + " columns");
        std::array<int, 2> u{0, 0};
        for (int i = 0; i < 2; ++i) {
            if (!is_odd(cur[i].a)) continue;
            u[i] = naf_digit(cur[i]);
            const KleinianInt& other = cur[1 - i];
            const bool other_next_nonzero = !is_odd(other.a) && quotient_is_odd(other);
            if (other_next_nonzero) {
                const KleinianInt next = div_tau(sub_digit(cur[i], u[i]), mu);
                if (quotient_is_odd(next)) u[i] = -u[i];
            }
        }
        for (int i = 0; i < 2; ++i) {
            out.rows[i].push_back(static_cast<std::int8_t>(u[i]));
            cur[i] = div_tau(sub_digit(cur[i], u[i]), mu);
        }
    }
    return out;
}

}  // namespace jtdfe
