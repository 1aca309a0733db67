#pragma once
//
// Arithmetic in Z[tau], tau^2 = mu*tau - 2, and the one-dimensional tau-adic
// recoders (unsigned, NAF, joint sparse form).
//
// All digit vectors are least-significant first: digits[i] is the coefficient
// of tau^i.
//

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jtdfe {

using BigInt = mpz_class;

/// Trace sign of the Frobenius map, mu = (-1)^(1-a).
enum class Mu : int { Minus = -1, Plus = 1 };

constexpr int to_int(Mu mu) noexcept { return static_cast<int>(mu); }
constexpr Mu mu_for_curve_a(int a) noexcept { return a == 1 ? Mu::Plus : Mu::Minus; }

/// Element a + b*tau of Z[tau].
struct KleinianInt {
    BigInt a{0};
    BigInt b{0};

    KleinianInt() = default;
    KleinianInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
    KleinianInt(long a_, long b_) : a(a_), b(b_) {}

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    /// "(a,b)" with decimal components.
    std::string str() const;

    friend bool operator==(const KleinianInt& x, const KleinianInt& y) {
        return x.a == y.a && x.b == y.b;
    }
};

KleinianInt operator+(const KleinianInt& x, const KleinianInt& y);
KleinianInt operator-(const KleinianInt& x, const KleinianInt& y);
KleinianInt operator-(const KleinianInt& x);

KleinianInt mul(const KleinianInt& x, const KleinianInt& y, Mu mu);
/// N(a + b tau) = a^2 + mu*a*b + 2*b^2.
BigInt norm(const KleinianInt& x, Mu mu);
/// Complex conjugate a + b*conj(tau) = (a + mu*b) - b*tau.
KleinianInt conj(const KleinianInt& x, Mu mu);

/// Exact division by tau. Throws NotDivisible when x.a is odd.
KleinianInt div_tau(const KleinianInt& x, Mu mu);

/// x / y when y divides x in Z[tau], nullopt otherwise. y must be nonzero.
std::optional<KleinianInt> exact_quotient(const KleinianInt& x, const KleinianInt& y, Mu mu);

KleinianInt tau_pow(unsigned e, Mu mu);

/// Evaluate sum digits[i] * tau^i by Horner's rule.
KleinianInt eval_digits(std::span<const std::int8_t> digits, Mu mu);
KleinianInt eval_digits(std::span<const std::uint8_t> digits, Mu mu);

/// Nearest integer to num/den, halves rounded away from zero.
BigInt round_div(const BigInt& num, const BigInt& den);

// ---------------------------------------------------------------------------
// Recoders

struct TauExpansion {
    std::vector<std::uint8_t> digits;  // {0,1}

    std::size_t length() const { return digits.size(); }
    /// MSB-first string of 0/1 characters; "" for zero.
    std::string msb_string() const;
};

struct TauNaf {
    std::vector<std::int8_t> digits;  // {-1,0,1}

    std::size_t length() const { return digits.size(); }
    std::size_t weight() const;
};

struct TauJsf {
    std::array<std::vector<std::int8_t>, 2> rows;  // equal length

    std::size_t length() const { return rows[0].size(); }
    /// Number of columns with at least one nonzero digit.
    std::size_t joint_weight() const;
};

/// Step cap used by tau_expand_unsigned: 2*(bitlength(N(x)) + 16).
std::size_t unsigned_expansion_cap(const KleinianInt& x, Mu mu);

/// Digits in {0,1}: u = a mod 2, then recurse on (x - u)/tau.
/// Throws NonTerminating past the cap or on a repeated state.
TauExpansion tau_expand_unsigned(const KleinianInt& x, Mu mu);

TauNaf tnaf(const KleinianInt& x, Mu mu);

/// Tau-adic joint sparse form of a pair.
///
/// Per column, each odd row takes its NAF digit; the sign is flipped when the
/// NAF choice would leave that row nonzero two columns ahead while the other
/// row is already forced nonzero in the next column. This keeps at least one
/// all-zero column in every three.
TauJsf tjsf(const KleinianInt& x0, const KleinianInt& x1, Mu mu);

}  // namespace jtdfe
