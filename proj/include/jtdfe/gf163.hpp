#pragma once
//
// GF(2^163) in polynomial basis modulo t^163 + t^7 + t^6 + t^3 + 1.
//
// Every arithmetic function takes an optional OpCounter; callers own the
// counter for the scope they want to measure.
//

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jtdfe {

struct OpCounter {
    std::uint64_t mul = 0;
    std::uint64_t sqr = 0;
    std::uint64_t inv = 0;
    std::uint64_t add = 0;

    OpCounter& operator+=(const OpCounter& o) {
        mul += o.mul;
        sqr += o.sqr;
        inv += o.inv;
        add += o.add;
        return *this;
    }
    friend OpCounter operator-(OpCounter l, const OpCounter& r) {
        l.mul -= r.mul;
        l.sqr -= r.sqr;
        l.inv -= r.inv;
        l.add -= r.add;
        return l;
    }
    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

namespace gf163 {

inline constexpr unsigned kDegree = 163;
/// Reduction pentanomial exponents, descending.
inline const std::vector<unsigned> kPentanomial{163, 7, 6, 3, 0};

class FieldElement {
public:
    using Words = std::array<std::uint64_t, 3>;

    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement(); }
    static constexpr FieldElement one() {
        FieldElement f;
        f.w_[0] = 1;
        return f;
    }
    /// t^i for i < 163.
    static FieldElement monomial(unsigned i);
    /// Throws std::invalid_argument if a bit at position >= 163 is set.
    static FieldElement from_words(const Words& w);
    /// Big-endian hex, no prefix, leading zeros allowed. Throws std::invalid_argument.
    static FieldElement from_hex(std::string_view hex);

    /// Lowercase hex without leading zeros ("0" for zero).
    std::string to_hex() const;

    bool is_zero() const { return (w_[0] | w_[1] | w_[2]) == 0; }
    bool bit(unsigned i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    const Words& words() const { return w_; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    Words w_{0, 0, 0};
};

FieldElement add(const FieldElement& x, const FieldElement& y, OpCounter* ctr = nullptr);
FieldElement mul(const FieldElement& x, const FieldElement& y, OpCounter* ctr = nullptr);
FieldElement sqr(const FieldElement& x, OpCounter* ctr = nullptr);
/// x^(2^k) by k squarings.
FieldElement sqr_n(const FieldElement& x, unsigned k, OpCounter* ctr = nullptr);
/// Itoh-Tsujii inversion: 9 multiplications and 162 squarings.
/// Throws DivisionByZero for x = 0.
FieldElement inv(const FieldElement& x, OpCounter* ctr = nullptr);

/// Absolute trace Tr(x) = sum x^(2^i), in {0, 1}.
int trace(const FieldElement& x);
/// Trace computed directly as the sum of 163 conjugates (reference for `trace`).
int trace_by_definition(const FieldElement& x);
/// Half-trace sum_{i=0}^{81} x^(4^i); solves z^2 + z = x when Tr(x) = 0.
FieldElement half_trace(const FieldElement& x);
/// A root z of z^2 + z = c, or nullopt when Tr(c) = 1. The other root is z + 1.
std::optional<FieldElement> solve_quadratic(const FieldElement& c);

}  // namespace gf163
}  // namespace jtdfe
