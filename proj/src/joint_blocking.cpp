#include "jtdfe/lut.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace jtdfe {

namespace {

// Drop +t/-t pairs sharing (x, y) within a row; blocks can overlap once
// shifted because x_max may exceed w - 1.
std::vector<KTerm> cancel_opposites(std::vector<KTerm> row) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<int, int>> count;  // (+, -)
    for (const auto& t : row) {
        auto& c = count[{t.x, t.y}];
        (t.sign > 0 ? c.first : c.second)++;
    }
    std::vector<KTerm> out;
    for (const auto& [xy, c] : count) {
        const int net = c.first - c.second;
        for (int i = 0; i < std::abs(net); ++i)
            out.push_back(KTerm{static_cast<std::int8_t>(net > 0 ? 1 : -1), xy.first, xy.second});
    }
    std::sort(out.begin(), out.end(), KTermLess{});
    return out;
}

}  // namespace

JointTdfe joint_blocking(const KleinianInt& e0, const KleinianInt& e1, const Lut& lut) {
    const LutConfig& c = lut.config();
    const TauExpansion u0 = tau_expand_unsigned(e0, c.mu);
    const TauExpansion u1 = tau_expand_unsigned(e1, c.mu);
    const std::size_t length = std::max(u0.length(), u1.length());
    const std::size_t blocks = (length + c.w - 1) / c.w;

    auto block_bits = [&](const TauExpansion& e, std::size_t i) {
        std::uint32_t bits = 0;
        for (std::uint32_t j = 0; j < c.w; ++j) {
            const std::size_t k = i * c.w + j;
            if (k < e.digits.size() && e.digits[k]) bits |= 1u << j;
        }
        return bits;
    };

    JointTdfe out;
    for (std::size_t i = 0; i < blocks; ++i) {
        const JointTdfe& entry = lut.lookup(block_bits(u0, i), block_bits(u1, i));
        const auto shift = static_cast<std::uint32_t>(i * c.w);
        for (int r = 0; r < 2; ++r)
            for (const auto& t : entry.rows[r]) out.rows[r].push_back(KTerm{t.sign, t.x + shift, t.y});
    }
    for (auto& row : out.rows) row = cancel_opposites(std::move(row));
    return out;
}

}  // namespace jtdfe
