#include "jtdfe/curve.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace jtdfe {

using gf163::inv;
using gf163::mul;
using gf163::sqr;

namespace {

inline FieldElement fadd(const FieldElement& x, const FieldElement& y, OpCounter* ctr = nullptr) {
    return gf163::add(x, y, ctr);
}

constexpr std::string_view kK163Text =
    "# NIST K-163 (sect163k1), FIPS 186 recommended Koblitz curve over GF(2^163).\n"
    "# y^2 + xy = x^3 + a x^2 + 1, field reduction t^163 + t^7 + t^6 + t^3 + 1.\n"
    "name=K-163\n"
    "a=1\n"
    "m=163\n"
    "field_poly=163,7,6,3,0\n"
    "gx=2fe13c0537bbc11acaa07d793de4e6d5e5c94eee8\n"
    "gy=289070fb05d38ff58321f2e800536d538ccdaa3d9\n"
    "r=0x4000000000000000000020108a2e0cc0d99f8a5ef\n"
    "h=2\n";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

unsigned parse_unsigned(std::string_view s, std::size_t line, const std::string& key) {
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(line, "invalid value for '" + key + "': '" + std::string(s) + "'");
    return v;
}

BigInt parse_big(std::string_view s, std::size_t line, const std::string& key) {
    std::string digits(s);
    int base = 10;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) {
        digits = digits.substr(2);
        base = 16;
    }
    BigInt v;
    if (digits.empty() || v.set_str(digits, base) != 0 || v < 0)
        throw ParseError(line, "invalid value for '" + key + "': '" + std::string(s) + "'");
    return v;
}

FieldElement parse_coord(std::string_view s, std::size_t line, const std::string& key) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s.remove_prefix(2);
    try {
        return FieldElement::from_hex(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, "invalid value for '" + key + "': " + e.what());
    }
}

}  // namespace

std::string_view k163_config_text() { return kK163Text; }

// ---------------------------------------------------------------------------
// AffinePoint

std::string AffinePoint::str() const {
    if (infinity) return "inf";
    return "(" + x.to_hex() + "," + y.to_hex() + ")";
}

AffinePoint AffinePoint::parse(std::string_view text) {
    const std::string_view t = trim(text);
    if (t == "inf") return at_infinity();
    if (t.size() < 5 || t.front() != '(' || t.back() != ')')
        throw ParseError(0, "point must be '(<x-hex>,<y-hex>)' or 'inf', got '" + std::string(text) + "'");
    const std::string_view body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, "point is missing ',': '" + std::string(text) + "'");
    try {
        return finite(FieldElement::from_hex(trim(body.substr(0, comma))),
                      FieldElement::from_hex(trim(body.substr(comma + 1))));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, "bad point coordinate: " + std::string(e.what()));
    }
}

// ---------------------------------------------------------------------------
// CurveConfig

CurveConfig CurveConfig::parse(std::string_view text) {
    std::map<std::string, std::pair<std::string, std::size_t>> kv;
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!kv.emplace(key, std::make_pair(value, line_no)).second)
            throw ParseError(line_no, "duplicate key '" + key + "'");
    }

    auto need = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(0, "missing key '" + key + "'");
        return it->second;
    };
    static const std::vector<std::string> known{"name", "a", "m", "field_poly", "gx", "gy", "r", "h"};
    for (const auto& [key, v] : kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError(v.second, "unknown key '" + key + "'");

    CurveConfig c;
    c.name = kv.count("name") ? kv["name"].first : "unnamed";

    const auto& [a_text, a_line] = need("a");
    const unsigned a = parse_unsigned(a_text, a_line, "a");
    if (a > 1) throw ParseError(a_line, "curve coefficient a must be 0 or 1");
    const auto& [m_text, m_line] = need("m");
    const unsigned m = parse_unsigned(m_text, m_line, "m");
    if (m < 2) throw ParseError(m_line, "extension degree m must be >= 2");

    c.params = CurveParams::koblitz(static_cast<int>(a), m);

    const auto& [fp_text, fp_line] = need("field_poly");
    c.params.field_poly.clear();
    std::string_view fp = fp_text;
    while (true) {
        const auto comma = fp.find(',');
        c.params.field_poly.push_back(parse_unsigned(trim(fp.substr(0, comma)), fp_line, "field_poly"));
        if (comma == std::string_view::npos) break;
        fp.remove_prefix(comma + 1);
    }

    const auto& [r_text, r_line] = need("r");
    c.params.r = parse_big(r_text, r_line, "r");
    const auto& [h_text, h_line] = need("h");
    c.params.h = parse_unsigned(h_text, h_line, "h");
    c.params.n = c.params.r * c.params.h;

    const auto& [gx_text, gx_line] = need("gx");
    const auto& [gy_text, gy_line] = need("gy");
    c.generator = AffinePoint::finite(parse_coord(gx_text, gx_line, "gx"), parse_coord(gy_text, gy_line, "gy"));

    c.params.validate();
    return c;
}

CurveConfig CurveConfig::load(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open curve config '" + path.string() + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse(ss.str());
}

CurveConfig CurveConfig::k163() { return parse(kK163Text); }

// ---------------------------------------------------------------------------
// KoblitzCurve

KoblitzCurve::KoblitzCurve(CurveConfig config) : config_(std::move(config)) {
    const CurveParams& p = config_.params;
    p.validate();
    if (p.m != gf163::kDegree || p.field_poly != gf163::kPentanomial)
        throw InvalidConfig("field arithmetic supports only GF(2^163) modulo t^163 + t^7 + t^6 + t^3 + 1");
    if (config_.generator.infinity || !on_curve(config_.generator))
        throw InvalidConfig("base point is not on the curve");
    if (!in_subgroup(config_.generator)) throw InvalidConfig("[r]G != O for the configured base point");
}

bool KoblitzCurve::on_curve(const AffinePoint& p) const {
    if (p.infinity) return true;
    // y^2 + xy = x^3 + a x^2 + 1
    const FieldElement x2 = sqr(p.x);
    FieldElement lhs = fadd(sqr(p.y), mul(p.x, p.y));
    FieldElement rhs = fadd(mul(x2, p.x), FieldElement::one());
    if (config_.params.a) rhs = fadd(rhs, x2);
    return lhs == rhs;
}

bool KoblitzCurve::in_subgroup(const AffinePoint& p) const { return mul_naive(config_.params.r, p).infinity; }

AffinePoint KoblitzCurve::neg(const AffinePoint& p, OpCounter* ctr) const {
    if (p.infinity) return p;
    return AffinePoint::finite(p.x, fadd(p.x, p.y, ctr));
}

AffinePoint KoblitzCurve::frobenius(const AffinePoint& p, OpCounter* ctr) const {
    if (p.infinity) return p;
    return AffinePoint::finite(sqr(p.x, ctr), sqr(p.y, ctr));
}

AffinePoint KoblitzCurve::add(const AffinePoint& p, const AffinePoint& q, OpCounter* ctr) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x) {
        if (p.y == q.y) return dbl(p, ctr);
        return AffinePoint::at_infinity();  // q = -p
    }
    const FieldElement sx = fadd(p.x, q.x, ctr);
    const FieldElement lambda = mul(fadd(p.y, q.y, ctr), inv(sx, ctr), ctr);
    FieldElement x3 = fadd(fadd(sqr(lambda, ctr), lambda, ctr), sx, ctr);
    if (config_.params.a) x3 = fadd(x3, FieldElement::one(), ctr);
    const FieldElement y3 = fadd(fadd(mul(lambda, fadd(p.x, x3, ctr), ctr), x3, ctr), p.y, ctr);
    return AffinePoint::finite(x3, y3);
}

AffinePoint KoblitzCurve::dbl(const AffinePoint& p, OpCounter* ctr) const {
    if (p.infinity || p.x.is_zero()) return AffinePoint::at_infinity();
    const FieldElement lambda = fadd(p.x, mul(p.y, inv(p.x, ctr), ctr), ctr);
    FieldElement x3 = fadd(sqr(lambda, ctr), lambda, ctr);
    if (config_.params.a) x3 = fadd(x3, FieldElement::one(), ctr);
    const FieldElement y3 = fadd(sqr(p.x, ctr), mul(fadd(lambda, FieldElement::one(), ctr), x3, ctr), ctr);
    return AffinePoint::finite(x3, y3);
}

LDPoint KoblitzCurve::to_ld(const AffinePoint& p) const {
    if (p.infinity) return LDPoint::at_infinity();
    return LDPoint{p.x, p.y, FieldElement::one()};
}

AffinePoint KoblitzCurve::to_affine(const LDPoint& p, OpCounter* ctr) const {
    if (p.is_infinity()) return AffinePoint::at_infinity();
    const FieldElement zi = inv(p.Z, ctr);
    return AffinePoint::finite(mul(p.X, zi, ctr), mul(p.Y, sqr(zi, ctr), ctr));
}

LDPoint KoblitzCurve::neg(const LDPoint& p, OpCounter* ctr) const {
    if (p.is_infinity()) return p;
    // -(x, y) = (x, x + y)  ->  Y' = X*Z + Y
    return LDPoint{p.X, fadd(mul(p.X, p.Z, ctr), p.Y, ctr), p.Z};
}

LDPoint KoblitzCurve::frobenius(const LDPoint& p, OpCounter* ctr) const {
    if (p.is_infinity()) return p;
    return LDPoint{sqr(p.X, ctr), sqr(p.Y, ctr), sqr(p.Z, ctr)};
}

LDPoint KoblitzCurve::dbl(const LDPoint& p, OpCounter* ctr) const {
    if (p.is_infinity() || p.X.is_zero()) return LDPoint::at_infinity();
    // b = 1: Z3 = X^2 Z^2, X3 = X^4 + Z^4, Y3 = Z^4 Z3 + X3 (a Z3 + Y^2 + Z^4)
    const FieldElement x2 = sqr(p.X, ctr);
    const FieldElement z2 = sqr(p.Z, ctr);
    const FieldElement z4 = sqr(z2, ctr);
    const FieldElement Z3 = mul(x2, z2, ctr);
    const FieldElement X3 = fadd(sqr(x2, ctr), z4, ctr);
    FieldElement t = fadd(sqr(p.Y, ctr), z4, ctr);
    if (config_.params.a) t = fadd(t, Z3, ctr);
    const FieldElement Y3 = fadd(mul(z4, Z3, ctr), mul(X3, t, ctr), ctr);
    return LDPoint{X3, Y3, Z3};
}

LDPoint KoblitzCurve::add_mixed(const LDPoint& p, const AffinePoint& q, OpCounter* ctr) const {
    if (q.infinity) return p;
    if (p.is_infinity()) return to_ld(q);
    const FieldElement S = sqr(p.Z, ctr);
    const FieldElement A = fadd(mul(q.y, S, ctr), p.Y, ctr);
    const FieldElement B = fadd(mul(q.x, p.Z, ctr), p.X, ctr);
    if (B.is_zero()) {
        if (A.is_zero()) return dbl(p, ctr);
        return LDPoint::at_infinity();
    }
    const FieldElement C = mul(p.Z, B, ctr);
    const FieldElement cs = config_.params.a ? fadd(C, S, ctr) : C;
    const FieldElement D = mul(sqr(B, ctr), cs, ctr);
    const FieldElement Z3 = sqr(C, ctr);
    const FieldElement E = mul(A, C, ctr);
    const FieldElement X3 = fadd(fadd(sqr(A, ctr), D, ctr), E, ctr);
    const FieldElement F = fadd(X3, mul(q.x, Z3, ctr), ctr);
    const FieldElement G = mul(fadd(q.x, q.y, ctr), sqr(Z3, ctr), ctr);
    const FieldElement Y3 = fadd(mul(fadd(E, Z3, ctr), F, ctr), G, ctr);
    return LDPoint{X3, Y3, Z3};
}

LDPoint KoblitzCurve::add_ld(const LDPoint& p, const LDPoint& q, OpCounter* ctr) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const FieldElement A1 = mul(p.X, q.Z, ctr);
    const FieldElement A2 = mul(q.X, p.Z, ctr);
    const FieldElement C = sqr(A1, ctr);
    const FieldElement D = sqr(A2, ctr);
    const FieldElement E = fadd(A1, A2, ctr);
    const FieldElement G = mul(p.Y, sqr(q.Z, ctr), ctr);
    const FieldElement H = mul(q.Y, sqr(p.Z, ctr), ctr);
    const FieldElement I = fadd(G, H, ctr);
    if (E.is_zero()) {
        if (I.is_zero()) return dbl(p, ctr);
        return LDPoint::at_infinity();
    }
    const FieldElement F = fadd(C, D, ctr);
    const FieldElement J = mul(I, E, ctr);
    const FieldElement Z3 = mul(mul(F, p.Z, ctr), q.Z, ctr);
    const FieldElement X3 = fadd(mul(A1, fadd(H, D, ctr), ctr), mul(A2, fadd(C, G, ctr), ctr), ctr);
    const FieldElement Y3 = fadd(mul(fadd(mul(A1, J, ctr), mul(F, G, ctr), ctr), F, ctr),
                                mul(fadd(J, Z3, ctr), X3, ctr), ctr);
    return LDPoint{X3, Y3, Z3};
}

AffinePoint KoblitzCurve::mul_naive(const BigInt& k, const AffinePoint& p, OpCounter* ctr) const {
    if (p.infinity || sgn(k) == 0) return AffinePoint::at_infinity();
    const BigInt e = abs(k);
    AffinePoint acc = AffinePoint::at_infinity();
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = dbl(acc, ctr);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(acc, p, ctr);
    }
    return sgn(k) < 0 ? neg(acc, ctr) : acc;
}

AffinePoint KoblitzCurve::mul_naive(const KleinianInt& k, const AffinePoint& p, OpCounter* ctr) const {
    return add(mul_naive(k.a, p, ctr), mul_naive(k.b, frobenius(p, ctr), ctr), ctr);
}

AffinePoint KoblitzCurve::random_point(std::mt19937_64& rng) const {
    const FieldElement a = a_coeff();
    while (true) {
        const FieldElement x = FieldElement::from_words({rng(), rng(), rng() & ((std::uint64_t{1} << 35) - 1)});
        if (x.is_zero()) continue;
        // y = x z with z^2 + z = x + a + 1/x^2
        const FieldElement c = fadd(fadd(x, a), sqr(inv(x)));
        const auto z = gf163::solve_quadratic(c);
        if (!z) continue;
        const FieldElement zz = (rng() & 1) ? fadd(*z, FieldElement::one()) : *z;
        AffinePoint p = AffinePoint::finite(x, mul(x, zz));
        p = mul_naive(BigInt(config_.params.h), p);
        if (!p.infinity) return p;
    }
}

}  // namespace jtdfe
