#include "jtdfe/scalar_mul.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace jtdfe {

using gf163::add;
using gf163::inv;
using gf163::mul;
using gf163::sqr;

namespace {

// P + Q' where i = 1/(xP + xQ') is already known.
AffinePoint add_with_inverse(const KoblitzCurve& curve, const AffinePoint& p, const AffinePoint& q,
                             const FieldElement& i, OpCounter* ctr) {
    const FieldElement lambda = mul(add(p.y, q.y, ctr), i, ctr);
    FieldElement x3 = add(add(sqr(lambda, ctr), lambda, ctr), add(p.x, q.x, ctr), ctr);
    if (curve.params().a) x3 = add(x3, FieldElement::one(), ctr);
    const FieldElement y3 = add(add(mul(lambda, add(p.x, x3, ctr), ctr), x3, ctr), p.y, ctr);
    return AffinePoint::finite(x3, y3);
}

// Affine points c0*P + c1*Q and their Frobenius orbits, built on demand.
// Negative combinations are served by negating the positive one.
class CombinationTable {
public:
    CombinationTable(const KoblitzCurve& curve, const AffinePoint& p, const AffinePoint& q, OpCounter* ctr)
        : curve_(curve), p_(p), q_(q), ctr_(ctr) {
        orbits_[{1, 0}].push_back(p);
        orbits_[{0, 1}].push_back(q);
        // P + Q and P - Q share the denominator xP + xQ.
        if (!p.infinity && !q.infinity && p.x != q.x) {
            const FieldElement i = inv(add(p.x, q.x, ctr), ctr);
            orbits_[{1, 1}].push_back(add_with_inverse(curve, p, q, i, ctr));
            orbits_[{1, -1}].push_back(add_with_inverse(curve, p, curve.neg(q, ctr), i, ctr));
        } else {
            orbits_[{1, 1}].push_back(curve.add(p, q, ctr));
            orbits_[{1, -1}].push_back(curve.add(p, curve.neg(q, ctr), ctr));
        }
    }

    /// tau^x (c0 P + c1 Q).
    AffinePoint get(int c0, int c1, std::uint32_t x) {
        const bool flip = c0 < 0 || (c0 == 0 && c1 < 0);
        if (flip) {
            c0 = -c0;
            c1 = -c1;
        }
        auto& orbit = orbits_[{c0, c1}];
        if (orbit.empty()) orbit.push_back(combine(c0, c1));
        const std::uint32_t k = x % curve_.params().m;
        while (orbit.size() <= k) orbit.push_back(curve_.frobenius(orbit.back(), ctr_));
        return flip ? curve_.neg(orbit[k], ctr_) : orbit[k];
    }

private:
    AffinePoint combine(int c0, int c1) {
        return curve_.add(curve_.mul_naive(BigInt(c0), p_, ctr_), curve_.mul_naive(BigInt(c1), q_, ctr_), ctr_);
    }

    const KoblitzCurve& curve_;
    AffinePoint p_;
    AffinePoint q_;
    OpCounter* ctr_;
    std::map<std::pair<int, int>, std::vector<AffinePoint>> orbits_;
};

}  // namespace

KleinianInt reduce_scalar(const BigInt& k, const CurveParams& params) {
    if (k < 0 || k >= params.n) throw OutOfRange("scalar " + k.get_str() + " outside [0, n-1]");
    if (k == 0) return KleinianInt{};
    return reduce_mod_delta(k, params);
}

DsmResult evaluate_joint(const KoblitzCurve& curve, const JointTdfe& j, const AffinePoint& p,
                         const AffinePoint& q) {
    DsmResult res;
    OpCounter* ctr = &res.counters;

    // (y, x) -> (c0, c1), iterated from the highest level and largest x.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<int, int>, std::greater<>> columns;
    for (int r = 0; r < 2; ++r)
        for (const auto& t : j.rows[r]) {
            auto& c = columns[{t.y, t.x}];
            (r == 0 ? c.first : c.second) += t.sign;
        }
    std::erase_if(columns, [](const auto& kv) { return kv.second.first == 0 && kv.second.second == 0; });

    CombinationTable table(curve, p, q, ctr);
    LDPoint acc = LDPoint::at_infinity();
    const std::uint32_t top = columns.empty() ? 0 : columns.begin()->first.first;
    auto it = columns.begin();
    for (std::uint32_t y = top + 1; y-- > 0;) {
        if (y < top) {
            // acc <- (tau - 1) acc
            acc = curve.add_ld(curve.frobenius(acc, ctr), curve.neg(acc, ctr), ctr);
            ++res.level_adds;
        }
        for (; it != columns.end() && it->first.first == y; ++it) {
            const auto [c0, c1] = it->second;
            acc = curve.add_mixed(acc, table.get(c0, c1, it->first.second), ctr);
            ++res.point_adds;
        }
    }
    res.point = curve.to_affine(acc, ctr);
    return res;
}

DsmResult scalar_mul_tdfe(const KoblitzCurve& curve, const Tdfe& t, const AffinePoint& p, std::uint32_t bound) {
    if (t.max_y() > bound)
        throw BoundExceeded("expansion uses (tau-1)^" + std::to_string(t.max_y()) + ", bound is " +
                            std::to_string(bound));
    JointTdfe j;
    j.rows[0] = t.terms;
    return evaluate_joint(curve, j, p, AffinePoint::at_infinity());
}

DsmResult double_scalar_naive(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                              const AffinePoint& q) {
    DsmResult res;
    res.point = curve.add(curve.mul_naive(k, p, &res.counters), curve.mul_naive(l, q, &res.counters), &res.counters);
    return res;
}

DsmResult double_scalar_naive(const KoblitzCurve& curve, const KleinianInt& k, const KleinianInt& l,
                              const AffinePoint& p, const AffinePoint& q) {
    DsmResult res;
    res.point = curve.add(curve.mul_naive(k, p, &res.counters), curve.mul_naive(l, q, &res.counters), &res.counters);
    return res;
}

DsmResult double_scalar_tjsf(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                             const AffinePoint& q) {
    return double_scalar_tjsf(curve, reduce_scalar(k, curve.params()), reduce_scalar(l, curve.params()), p, q);
}

DsmResult double_scalar_tjsf(const KoblitzCurve& curve, const KleinianInt& e0, const KleinianInt& e1,
                             const AffinePoint& p, const AffinePoint& q) {
    DsmResult res;
    OpCounter* ctr = &res.counters;
    const TauJsf jsf = tjsf(e0, e1, curve.mu());
    CombinationTable table(curve, p, q, ctr);
    LDPoint acc = LDPoint::at_infinity();
    for (std::size_t i = jsf.length(); i-- > 0;) {
        acc = curve.frobenius(acc, ctr);
        const int c0 = jsf.rows[0][i];
        const int c1 = jsf.rows[1][i];
        if (c0 == 0 && c1 == 0) continue;
        acc = curve.add_mixed(acc, table.get(c0, c1, 0), ctr);
        ++res.point_adds;
    }
    res.point = curve.to_affine(acc, ctr);
    return res;
}

DsmResult double_scalar_jtdfe(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                              const AffinePoint& q, const Lut& lut, JointTdfe* used) {
    return double_scalar_jtdfe(curve, reduce_scalar(k, curve.params()), reduce_scalar(l, curve.params()), p, q, lut,
                               used);
}

DsmResult double_scalar_jtdfe(const KoblitzCurve& curve, const KleinianInt& e0, const KleinianInt& e1,
                              const AffinePoint& p, const AffinePoint& q, const Lut& lut, JointTdfe* used) {
    if (lut.config().mu != curve.mu()) throw InvalidConfig("lookup table mu does not match the curve");
    const JointTdfe j = joint_blocking(e0, e1, lut);
    if (used) *used = j;
    return evaluate_joint(curve, j, p, q);
}

}  // namespace jtdfe
