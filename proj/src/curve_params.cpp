#include "jtdfe/curve_params.hpp"

#include "jtdfe/errors.hpp"

namespace jtdfe {

CurveParams CurveParams::koblitz(int a, unsigned m) {
    if (a != 0 && a != 1) throw InvalidConfig("curve coefficient a must be 0 or 1");
    if (m < 2) throw InvalidConfig("extension degree m must be at least 2");
    CurveParams p;
    p.a = a;
    p.mu = mu_for_curve_a(a);
    p.m = m;
    p.h = a == 1 ? 2 : 4;
    p.n = norm(tau_pow(m, p.mu) - KleinianInt(1L, 0L), p.mu);
    p.r = p.n / p.h;
    return p;
}

void CurveParams::validate() const {
    if (a != 0 && a != 1) throw InvalidConfig("curve coefficient a must be 0 or 1");
    if (mu != mu_for_curve_a(a)) throw InvalidConfig("mu must be +1 exactly when a = 1");
    if (m < 2) throw InvalidConfig("extension degree m must be at least 2");
    if (BigInt(h) * r != n) throw InvalidConfig("group order n must equal h * r");
    if (norm(tau_pow(m, mu) - KleinianInt(1L, 0L), mu) != n)
        throw InvalidConfig("group order n must equal N(tau^m - 1)");
}

KleinianInt delta(unsigned m, Mu mu) {
    if (m < 2) throw InvalidConfig("delta: m must be at least 2");
    KleinianInt sum(1L, 0L);
    KleinianInt prev(1L, 0L);
    KleinianInt cur(0L, 1L);
    for (unsigned i = 1; i < m; ++i) {
        sum = sum + cur;
        KleinianInt next = to_int(mu) > 0 ? cur - prev - prev : -cur - prev - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return sum;
}

KleinianInt reduce_mod_delta_any(const BigInt& k, unsigned m, Mu mu) {
    const KleinianInt d = delta(m, mu);
    const BigInt nd = norm(d, mu);
    const KleinianInt kc = conj(d, mu);  // k * conj(delta) = (k*kc.a) + (k*kc.b) tau
    const KleinianInt q(round_div(k * kc.a, nd), round_div(k * kc.b, nd));
    return KleinianInt(k, BigInt(0)) - mul(d, q, mu);
}

KleinianInt reduce_mod_delta(const BigInt& k, const CurveParams& params) {
    if (k < 1 || k >= params.n)
        throw OutOfRange("scalar " + k.get_str() + " outside [1, n-1]");
    return reduce_mod_delta_any(k, params.m, params.mu);
}

}  // namespace jtdfe
