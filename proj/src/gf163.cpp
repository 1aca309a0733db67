#include "jtdfe/gf163.hpp"

#include "jtdfe/errors.hpp"

#include <stdexcept>

namespace jtdfe::gf163 {

namespace {

using Words = FieldElement::Words;
using Wide = std::array<std::uint64_t, 6>;

constexpr std::uint64_t kTopMask = (std::uint64_t{1} << 35) - 1;  // bits 128..162 of word 2

void xor_at(Wide& r, std::uint64_t v, unsigned bitpos) {
    const unsigned w = bitpos / 64;
    const unsigned s = bitpos % 64;
    r[w] ^= v << s;
    if (s != 0) r[w + 1] ^= v >> (64 - s);
}

// t^163 = t^7 + t^6 + t^3 + 1
Words reduce(Wide r) {
    for (int i = 5; i >= 3; --i) {
        const std::uint64_t v = r[i];
        r[i] = 0;
        const unsigned base = 64 * static_cast<unsigned>(i - 3) + 29;
        xor_at(r, v, base);
        xor_at(r, v, base + 3);
        xor_at(r, v, base + 6);
        xor_at(r, v, base + 7);
    }
    const std::uint64_t v = r[2] >> 35;
    r[2] &= kTopMask;
    r[0] ^= v ^ (v << 3) ^ (v << 6) ^ (v << 7);
    return {r[0], r[1], r[2]};
}

Wide clmul(const Words& a, const Words& b) {
    // 4-bit window over a; each table entry u(t)*b(t) has degree < 166.
    std::array<Words, 16> table{};
    table[1] = b;
    for (unsigned u = 2; u < 16; ++u) {
        if (u & 1) {
            for (int k = 0; k < 3; ++k) table[u][k] = table[u - 1][k] ^ b[k];
        } else {
            const Words& h = table[u / 2];
            table[u] = {h[0] << 1, (h[1] << 1) | (h[0] >> 63), (h[2] << 1) | (h[1] >> 63)};
        }
    }
    Wide r{};
    for (int k = 40; k >= 0; --k) {
        for (int j = 5; j > 0; --j) r[j] = (r[j] << 4) | (r[j - 1] >> 60);
        r[0] <<= 4;
        const unsigned bit = 4 * static_cast<unsigned>(k);
        const unsigned nib = static_cast<unsigned>((a[bit / 64] >> (bit % 64)) & 0xF);
        const Words& t = table[nib];
        r[0] ^= t[0];
        r[1] ^= t[1];
        r[2] ^= t[2];
    }
    return r;
}

struct SpreadTable {
    std::array<std::uint16_t, 256> v{};
    SpreadTable() {
        for (unsigned i = 0; i < 256; ++i) {
            std::uint16_t s = 0;
            for (unsigned b = 0; b < 8; ++b)
                if (i & (1u << b)) s |= static_cast<std::uint16_t>(1u << (2 * b));
            v[i] = s;
        }
    }
};

std::uint64_t spread32(std::uint32_t x) {
    static const SpreadTable t;
    return static_cast<std::uint64_t>(t.v[x & 0xFF]) | (static_cast<std::uint64_t>(t.v[(x >> 8) & 0xFF]) << 16) |
           (static_cast<std::uint64_t>(t.v[(x >> 16) & 0xFF]) << 32) |
           (static_cast<std::uint64_t>(t.v[(x >> 24) & 0xFF]) << 48);
}

Words square_words(const Words& a) {
    Wide r{};
    for (int i = 0; i < 3; ++i) {
        r[2 * i] = spread32(static_cast<std::uint32_t>(a[i]));
        r[2 * i + 1] = spread32(static_cast<std::uint32_t>(a[i] >> 32));
    }
    return reduce(r);
}

FieldElement trace_mask() {
    Words m{0, 0, 0};
    for (unsigned i = 0; i < kDegree; ++i)
        if (trace_by_definition(FieldElement::monomial(i))) m[i / 64] |= std::uint64_t{1} << (i % 64);
    return FieldElement::from_words(m);
}

}  // namespace

FieldElement FieldElement::monomial(unsigned i) {
    if (i >= kDegree) throw std::invalid_argument("monomial degree out of range");
    Words w{0, 0, 0};
    w[i / 64] = std::uint64_t{1} << (i % 64);
    return from_words(w);
}

FieldElement FieldElement::from_words(const Words& w) {
    if (w[2] & ~kTopMask) throw std::invalid_argument("field element has degree >= 163");
    FieldElement f;
    f.w_ = w;
    return f;
}

FieldElement FieldElement::from_hex(std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("empty hex string");
    Words w{0, 0, 0};
    for (char ch : hex) {
        unsigned v;
        if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') v = static_cast<unsigned>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') v = static_cast<unsigned>(ch - 'A' + 10);
        else throw std::invalid_argument(std::string("invalid hex digit '") + ch + "'");
        if (w[2] >> 60) throw std::invalid_argument("hex value exceeds 163 bits");
        w[2] = (w[2] << 4) | (w[1] >> 60);
        w[1] = (w[1] << 4) | (w[0] >> 60);
        w[0] = (w[0] << 4) | v;
    }
    if (w[2] & ~kTopMask) throw std::invalid_argument("hex value exceeds 163 bits");
    return from_words(w);
}

std::string FieldElement::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (int nib = 40; nib >= 0; --nib) {
        const unsigned bit = 4 * static_cast<unsigned>(nib);
        const unsigned v = static_cast<unsigned>((w_[bit / 64] >> (bit % 64)) & 0xF);
        if (s.empty() && v == 0) continue;
        s.push_back(digits[v]);
    }
    return s.empty() ? "0" : s;
}

FieldElement add(const FieldElement& x, const FieldElement& y, OpCounter* ctr) {
    if (ctr) ++ctr->add;
    const auto& a = x.words();
    const auto& b = y.words();
    return FieldElement::from_words({a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]});
}

FieldElement mul(const FieldElement& x, const FieldElement& y, OpCounter* ctr) {
    if (ctr) ++ctr->mul;
    return FieldElement::from_words(reduce(clmul(x.words(), y.words())));
}

FieldElement sqr(const FieldElement& x, OpCounter* ctr) {
    if (ctr) ++ctr->sqr;
    return FieldElement::from_words(square_words(x.words()));
}

FieldElement sqr_n(const FieldElement& x, unsigned k, OpCounter* ctr) {
    FieldElement r = x;
    for (unsigned i = 0; i < k; ++i) r = sqr(r, ctr);
    return r;
}

FieldElement inv(const FieldElement& x, OpCounter* ctr) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero");
    if (ctr) ++ctr->inv;
    // b_k = x^(2^k - 1), b_(i+j) = b_i^(2^j) * b_j, chain 1,2,4,5,10,20,40,80,81,162;
    // x^-1 = x^(2^163 - 2) = b_162^2.
    const FieldElement b1 = x;
    const FieldElement b2 = mul(sqr_n(b1, 1, ctr), b1, ctr);
    const FieldElement b4 = mul(sqr_n(b2, 2, ctr), b2, ctr);
    const FieldElement b5 = mul(sqr_n(b4, 1, ctr), b1, ctr);
    const FieldElement b10 = mul(sqr_n(b5, 5, ctr), b5, ctr);
    const FieldElement b20 = mul(sqr_n(b10, 10, ctr), b10, ctr);
    const FieldElement b40 = mul(sqr_n(b20, 20, ctr), b20, ctr);
    const FieldElement b80 = mul(sqr_n(b40, 40, ctr), b40, ctr);
    const FieldElement b81 = mul(sqr_n(b80, 1, ctr), b1, ctr);
    const FieldElement b162 = mul(sqr_n(b81, 81, ctr), b81, ctr);
    return sqr(b162, ctr);
}

int trace_by_definition(const FieldElement& x) {
    FieldElement s = x;
    FieldElement c = x;
    for (unsigned i = 1; i < kDegree; ++i) {
        c = sqr(c);
        s = add(s, c);
    }
    // The sum lies in GF(2).
    return s.bit(0) ? 1 : 0;
}

int trace(const FieldElement& x) {
    static const FieldElement mask = trace_mask();
    const auto& a = x.words();
    const auto& m = mask.words();
    const std::uint64_t v = (a[0] & m[0]) ^ (a[1] & m[1]) ^ (a[2] & m[2]);
    return __builtin_parityll(v);
}

FieldElement half_trace(const FieldElement& x) {
    FieldElement s = x;
    FieldElement c = x;
    for (unsigned i = 1; i <= (kDegree - 1) / 2; ++i) {
        c = sqr(sqr(c));
        s = add(s, c);
    }
    return s;
}

std::optional<FieldElement> solve_quadratic(const FieldElement& c) {
    if (trace(c) != 0) return std::nullopt;
    return half_trace(c);
}

}  // namespace jtdfe::gf163
