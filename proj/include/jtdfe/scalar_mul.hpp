#pragma once
//
// Single and double scalar multiplication strategies with operation
// accounting. Every strategy returns the affine result together with the
// field-operation counters of the whole call (precomputation included).
//

#include "jtdfe/curve.hpp"
#include "jtdfe/lut.hpp"
#include "jtdfe/tdfe.hpp"

namespace jtdfe {

struct DsmResult {
    AffinePoint point;
    OpCounter counters;
    /// Mixed additions of precomputed points into the accumulator.
    std::size_t point_adds = 0;
    /// Additions spent on (tau - 1) level steps; not part of point_adds.
    std::size_t level_adds = 0;
};

/// k mapped to its reduced Kleinian representative. 0 maps to 0; otherwise
/// reduce_mod_delta applies (OutOfRange outside [0, n-1]).
KleinianInt reduce_scalar(const BigInt& k, const CurveParams& params);

/// Evaluate a joint expansion against (P, Q): Horner in (tau - 1) from the
/// highest level, one add_mixed per distinct (x, y) column. Q may be O.
DsmResult evaluate_joint(const KoblitzCurve& curve, const JointTdfe& j, const AffinePoint& p,
                         const AffinePoint& q);

/// [t]P from a single two-dimensional expansion. Throws BoundExceeded when a
/// term has y > bound.
DsmResult scalar_mul_tdfe(const KoblitzCurve& curve, const Tdfe& t, const AffinePoint& p, std::uint32_t bound);

/// Oracle: affine double-and-add for each scalar, then one affine addition.
DsmResult double_scalar_naive(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                              const AffinePoint& q);
DsmResult double_scalar_naive(const KoblitzCurve& curve, const KleinianInt& k, const KleinianInt& l,
                              const AffinePoint& p, const AffinePoint& q);

/// Straus over the tau-adic joint sparse form, most significant column first.
DsmResult double_scalar_tjsf(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                             const AffinePoint& q);
DsmResult double_scalar_tjsf(const KoblitzCurve& curve, const KleinianInt& e0, const KleinianInt& e1,
                             const AffinePoint& p, const AffinePoint& q);

/// Joint blocking with the given table, then evaluate_joint. When `used` is
/// non-null it receives the expansion that was evaluated.
DsmResult double_scalar_jtdfe(const KoblitzCurve& curve, const BigInt& k, const BigInt& l, const AffinePoint& p,
                              const AffinePoint& q, const Lut& lut, JointTdfe* used = nullptr);
DsmResult double_scalar_jtdfe(const KoblitzCurve& curve, const KleinianInt& e0, const KleinianInt& e1,
                              const AffinePoint& p, const AffinePoint& q, const Lut& lut,
                              JointTdfe* used = nullptr);

}  // namespace jtdfe
