#pragma once

#include "jtdfe/ztau.hpp"

#include <vector>

namespace jtdfe {

/// Arithmetic parameters of a Koblitz curve E_a over GF(2^m).
struct CurveParams {
    int a = 1;
    Mu mu = Mu::Plus;
    unsigned m = 163;
    BigInt n;  // #E(GF(2^m)) = h*r
    BigInt r;  // prime subgroup order
    unsigned h = 2;
    /// Exponents of the field reduction polynomial, descending (e.g. 163,7,6,3,0).
    std::vector<unsigned> field_poly;

    /// Parameters derived from (a, m): n = N(tau^m - 1), h = 2 (a=1) or 4 (a=0),
    /// r = n / h. The field polynomial is left empty.
    static CurveParams koblitz(int a, unsigned m);

    /// Throws InvalidConfig unless mu matches a, n = h*r and N(tau^m - 1) = n.
    void validate() const;
};

/// delta = (tau^m - 1)/(tau - 1) = sum_{i<m} tau^i. Requires m >= 2.
KleinianInt delta(unsigned m, Mu mu);

/// rho = k - delta * round(k * conj(delta) / N(delta)), componentwise rounding
/// with halves away from zero. N(rho) <= N(delta).
/// Throws OutOfRange unless 1 <= k <= n - 1.
KleinianInt reduce_mod_delta(const BigInt& k, const CurveParams& params);

/// Same rounding reduction without the range check (k may be any integer).
KleinianInt reduce_mod_delta_any(const BigInt& k, unsigned m, Mu mu);

}  // namespace jtdfe
