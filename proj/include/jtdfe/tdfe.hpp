#pragma once
//
// Two-dimensional Frobenius expansions: sums of signed {tau, tau-1}-Kleinian
// integers  s * tau^x * (tau - 1)^y.
//

#include "jtdfe/ztau.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jtdfe {

struct KTerm {
    std::int8_t sign = 1;  // +1 or -1
    std::uint32_t x = 0;   // exponent of tau
    std::uint32_t y = 0;   // exponent of (tau - 1)

    friend bool operator==(const KTerm&, const KTerm&) = default;
};

/// Canonical term order: smaller y, then smaller x, then +1 before -1.
struct KTermLess {
    bool operator()(const KTerm& l, const KTerm& r) const {
        if (l.y != r.y) return l.y < r.y;
        if (l.x != r.x) return l.x < r.x;
        return l.sign > r.sign;
    }
};

/// Display order: larger x first, then larger y.
struct KTermDisplayOrder {
    bool operator()(const KTerm& l, const KTerm& r) const {
        if (l.x != r.x) return l.x > r.x;
        if (l.y != r.y) return l.y > r.y;
        return l.sign > r.sign;
    }
};

/// "+tau^8", "-tau^6(tau-1)^2", "-1" ...
std::string to_string(const KTerm& t);
/// Terms in display order joined with " "; "0" when empty.
std::string to_string(std::span<const KTerm> terms);

struct Tdfe {
    std::vector<KTerm> terms;

    std::size_t length() const { return terms.size(); }
    std::uint32_t max_y() const;
};

struct JointTdfe {
    std::array<std::vector<KTerm>, 2> rows;  // L0, L1

    friend bool operator==(const JointTdfe&, const JointTdfe&) = default;
    std::size_t total_terms() const { return rows[0].size() + rows[1].size(); }
    std::uint32_t max_y() const;
};

/// Exponent bounds for a term search.
struct ExpansionBounds {
    std::uint32_t x_max = 0;
    std::uint32_t y_max = 4;
};

/// Exact values tau^x (tau-1)^y for x <= x_max, y <= y_max.
class TermTable {
public:
    TermTable(ExpansionBounds bounds, Mu mu);

    const KleinianInt& value(std::uint32_t x, std::uint32_t y) const;
    ExpansionBounds bounds() const { return bounds_; }
    Mu mu() const { return mu_; }

private:
    ExpansionBounds bounds_;
    Mu mu_;
    std::vector<KleinianInt> values_;  // y-major
};

KleinianInt term_value(const KTerm& t, Mu mu);
KleinianInt eval_terms(std::span<const KTerm> terms, Mu mu);
inline KleinianInt eval_tdfe(const Tdfe& t, Mu mu) { return eval_terms(t.terms, mu); }

/// Number of distinct (x, y) exponent pairs across L0 and L1.
std::size_t joint_cost(const JointTdfe& j);

/// Closest in-bounds term to x under the norm of the difference. Ties go to
/// smaller y, then smaller x, then sign +1. Requires x != 0.
KTerm closest_kterm(const KleinianInt& x, const TermTable& table);
KTerm closest_kterm(const KleinianInt& x, ExpansionBounds bounds, Mu mu);

/// x_max large enough for the greedy search to reach the leading power of x.
ExpansionBounds greedy_bounds_for(const KleinianInt& x, Mu mu, std::uint32_t y_max);

/// Greedy expansion: repeatedly subtract the closest term until the remainder
/// is zero. If no term lowers the remainder norm, the remainder is finished
/// with its tau-NAF digits (y = 0 terms) and `fell_back` is set.
struct GreedyResult {
    Tdfe expansion;
    bool fell_back = false;
};
GreedyResult greedy_tdfe_detailed(const KleinianInt& x, const TermTable& table);

/// Strict variant: throws NoProgress instead of falling back.
Tdfe greedy_tdfe_strict(const KleinianInt& x, const TermTable& table);

Tdfe greedy_tdfe(const KleinianInt& x, ExpansionBounds bounds, Mu mu);

}  // namespace jtdfe
