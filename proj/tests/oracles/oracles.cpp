#include "oracles.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>

namespace oracle {

using jtdfe::BigInt;
using jtdfe::KleinianInt;
using jtdfe::Mu;
using jtdfe::gf163::FieldElement;

FieldElement slow_mul(const FieldElement& a, const FieldElement& b) {
    std::array<std::uint64_t, 3> r{0, 0, 0};
    const auto& bw = b.words();
    for (int i = 162; i >= 0; --i) {
        // r <- r * t
        const bool carry = (r[2] >> 34) & 1;  // bit 162
        r[2] = (r[2] << 1) | (r[1] >> 63);
        r[1] = (r[1] << 1) | (r[0] >> 63);
        r[0] <<= 1;
        r[2] &= (std::uint64_t{1} << 35) - 1;
        if (carry) r[0] ^= 0xC9;  // t^7 + t^6 + t^3 + 1
        if (a.bit(static_cast<unsigned>(i)))
            for (int k = 0; k < 3; ++k) r[k] ^= bw[k];
    }
    return FieldElement::from_words(r);
}

KleinianInt eval_lsb_first(const std::vector<int>& digits, Mu mu) {
    const int m = jtdfe::to_int(mu);
    BigInt sa = 0, sb = 0;
    BigInt pa = 1, pb = 0;  // tau^i
    for (int d : digits) {
        sa += d * pa;
        sb += d * pb;
        BigInt na = -2 * pb;
        BigInt nb = pa + m * pb;
        pa = na;
        pb = nb;
    }
    return KleinianInt(sa, sb);
}

namespace {

struct Small {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const Small&, const Small&) = default;
    friend auto operator<=>(const Small&, const Small&) = default;
};

Small times_tau(Small v, int mu) { return {-2 * v.b, v.a + mu * v.b}; }

Small div_tau(Small v, int mu) { return {v.b + mu * (v.a / 2), -(v.a / 2)}; }

Small to_small(const KleinianInt& x) { return {x.a.get_si(), x.b.get_si()}; }

}  // namespace

int brute_min_joint_weight(const KleinianInt& x0, const KleinianInt& x1, Mu mu, int max_len) {
    const int m = jtdfe::to_int(mu);
    constexpr int kInf = 1 << 20;
    std::map<std::tuple<Small, Small, int>, int> memo;
    std::function<int(Small, Small, int)> go = [&](Small u, Small v, int left) -> int {
        if (u == Small{} && v == Small{}) return 0;
        if (left == 0) return kInf;
        const auto key = std::make_tuple(u, v, left);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<int> du = (u.a % 2 != 0) ? std::vector<int>{1, -1} : std::vector<int>{0};
        std::vector<int> dv = (v.a % 2 != 0) ? std::vector<int>{1, -1} : std::vector<int>{0};
        int best = kInf;
        for (int a : du)
            for (int b : dv) {
                const Small nu = div_tau({u.a - a, u.b}, m);
                const Small nv = div_tau({v.a - b, v.b}, m);
                const int cost = (a != 0 || b != 0) + go(nu, nv, left - 1);
                best = std::min(best, cost);
            }
        memo[key] = best;
        return best;
    };
    const int r = go(to_small(x0), to_small(x1), max_len);
    return r >= kInf ? -1 : r;
}

std::vector<int> brute_lut_costs(std::uint32_t w, std::uint32_t b_max, std::uint32_t x_max, Mu mu, int d_limit) {
    const int m = jtdfe::to_int(mu);

    std::vector<Small> pos;  // tau^x (tau-1)^y
    Small level{1, 0};
    for (std::uint32_t y = 0; y <= b_max; ++y) {
        Small v = level;
        for (std::uint32_t x = 0; x <= x_max; ++x) {
            pos.push_back(v);
            v = times_tau(v, m);
        }
        const Small t = times_tau(level, m);
        level = {t.a - level.a, t.b - level.b};
    }

    std::vector<Small> block(std::size_t{1} << w);
    for (std::uint32_t bits = 0; bits < block.size(); ++bits) {
        Small s{}, p{1, 0};
        for (std::uint32_t i = 0; i < w; ++i) {
            if (bits & (1u << i)) s = {s.a + p.a, s.b + p.b};
            p = times_tau(p, m);
        }
        block[bits] = s;
    }

    std::map<std::pair<Small, Small>, std::size_t> key_of;
    for (std::size_t b0 = 0; b0 < block.size(); ++b0)
        for (std::size_t b1 = 0; b1 < block.size(); ++b1) key_of[{block[b0], block[b1]}] = (b0 << w) | b1;

    std::vector<int> cost(key_of.size(), -1);
    std::size_t found = 0;
    auto visit = [&](const Small& s0, const Small& s1, int d) {
        const auto it = key_of.find({s0, s1});
        if (it != key_of.end() && cost[it->second] < 0) {
            cost[it->second] = d;
            ++found;
        }
    };

    static constexpr int kPairs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::function<void(std::size_t, int, int, Small, Small)> dfs = [&](std::size_t start, int depth, int target,
                                                                       Small s0, Small s1) {
        if (depth == target) {
            visit(s0, s1, depth);
            return;
        }
        for (std::size_t p = start; p < pos.size(); ++p)
            for (const auto& d : kPairs)
                dfs(p + 1, depth + 1, target, {s0.a + d[0] * pos[p].a, s0.b + d[0] * pos[p].b},
                    {s1.a + d[1] * pos[p].a, s1.b + d[1] * pos[p].b});
    };
    for (int d = 0; d <= d_limit && found < cost.size(); ++d) dfs(0, 0, d, {}, {});
    return cost;
}

}  // namespace oracle
