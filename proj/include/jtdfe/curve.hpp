#pragma once
//
// Koblitz curve E_a: y^2 + xy = x^3 + a x^2 + 1 over GF(2^163).
//

#include "jtdfe/curve_params.hpp"
#include "jtdfe/gf163.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <string_view>

namespace jtdfe {

using gf163::FieldElement;

struct AffinePoint {
    FieldElement x;
    FieldElement y;
    bool infinity = true;

    static AffinePoint at_infinity() { return {}; }
    static AffinePoint finite(FieldElement x, FieldElement y) { return {x, y, false}; }

    /// "(<x-hex>,<y-hex>)" or "inf".
    std::string str() const;
    /// Inverse of str(); throws ParseError.
    static AffinePoint parse(std::string_view text);

    friend bool operator==(const AffinePoint& p, const AffinePoint& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
};

/// Lopez-Dahab projective point: x = X/Z, y = Y/Z^2; Z = 0 is infinity.
struct LDPoint {
    FieldElement X = FieldElement::one();
    FieldElement Y;
    FieldElement Z;

    static LDPoint at_infinity() { return {}; }
    bool is_infinity() const { return Z.is_zero(); }
};

/// Curve parameters plus base point, as read from a key=value config file.
struct CurveConfig {
    std::string name;
    CurveParams params;
    AffinePoint generator;

    /// Keys: name, a, m, field_poly, gx, gy, r, h. '#' starts a comment.
    /// Throws ParseError / InvalidConfig.
    static CurveConfig parse(std::string_view text);
    static CurveConfig load(const std::filesystem::path& path);
    /// The bundled NIST K-163 parameters (same content as data/k163.conf).
    static CurveConfig k163();
};

/// Text of the bundled K-163 config file.
std::string_view k163_config_text();

class KoblitzCurve {
public:
    /// Validates the parameters, requires the field core's pentanomial, and
    /// checks that the generator is on the curve with [r]G = O.
    explicit KoblitzCurve(CurveConfig config);

    const CurveConfig& config() const { return config_; }
    const CurveParams& params() const { return config_.params; }
    const AffinePoint& generator() const { return config_.generator; }
    Mu mu() const { return config_.params.mu; }

    bool on_curve(const AffinePoint& p) const;
    /// [r]P = O.
    bool in_subgroup(const AffinePoint& p) const;

    AffinePoint neg(const AffinePoint& p, OpCounter* ctr = nullptr) const;
    AffinePoint frobenius(const AffinePoint& p, OpCounter* ctr = nullptr) const;
    AffinePoint add(const AffinePoint& p, const AffinePoint& q, OpCounter* ctr = nullptr) const;
    AffinePoint dbl(const AffinePoint& p, OpCounter* ctr = nullptr) const;

    LDPoint to_ld(const AffinePoint& p) const;
    AffinePoint to_affine(const LDPoint& p, OpCounter* ctr = nullptr) const;
    LDPoint neg(const LDPoint& p, OpCounter* ctr = nullptr) const;
    LDPoint frobenius(const LDPoint& p, OpCounter* ctr = nullptr) const;
    LDPoint dbl(const LDPoint& p, OpCounter* ctr = nullptr) const;
    /// LD + affine: 8 multiplications and 5 squarings in the generic case.
    LDPoint add_mixed(const LDPoint& p, const AffinePoint& q, OpCounter* ctr = nullptr) const;
    /// LD + LD: 13 multiplications and 4 squarings in the generic case.
    LDPoint add_ld(const LDPoint& p, const LDPoint& q, OpCounter* ctr = nullptr) const;

    /// Affine double-and-add; the ground truth for every other strategy.
    AffinePoint mul_naive(const BigInt& k, const AffinePoint& p, OpCounter* ctr = nullptr) const;
    /// [a + b tau]P = [a]P + [b] tau(P).
    AffinePoint mul_naive(const KleinianInt& k, const AffinePoint& p, OpCounter* ctr = nullptr) const;

    /// Uniform x, y from the quadratic, then cofactor-multiplied into the
    /// prime-order subgroup.
    AffinePoint random_point(std::mt19937_64& rng) const;

private:
    FieldElement a_coeff() const { return config_.params.a ? FieldElement::one() : FieldElement::zero(); }

    CurveConfig config_;
};

}  // namespace jtdfe
