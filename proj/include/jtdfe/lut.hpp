#pragma once
//
// Window lookup table of optimal joint two-dimensional Frobenius expansions
// for every pair of w-digit unsigned tau-adic blocks, and the joint blocking
// recoder that consumes it.
//
// A block is stored as an integer whose bit i is the coefficient of tau^i,
// so its MSB-first binary string is the usual written form (11011 = 1 + tau
// + tau^3 + tau^4).
//

#include "jtdfe/tdfe.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace jtdfe {

struct LutConfig {
    std::uint32_t w = 5;      // window size
    std::uint32_t b_max = 4;  // max (tau - 1) exponent
    std::uint32_t x_max = 7;  // max tau exponent inside a block
    Mu mu = Mu::Plus;

    /// Config with the default x_max = w + 2.
    static LutConfig make(std::uint32_t w, std::uint32_t b_max, Mu mu);

    /// 1 <= w <= 8, b_max <= 6, w - 1 <= x_max <= w + 4.
    void validate() const;

    std::size_t key_count() const { return std::size_t{1} << (2 * w); }

    friend bool operator==(const LutConfig&, const LutConfig&) = default;
};

KleinianInt block_value(std::uint32_t bits, std::uint32_t w, Mu mu);
/// MSB-first 0/1 string of exactly w characters.
std::string block_string(std::uint32_t bits, std::uint32_t w);

class Lut {
public:
    /// Entries indexed by (block0 << w) | block1. Throws InvalidConfig when the
    /// entry count does not match the config.
    Lut(LutConfig config, std::vector<JointTdfe> entries);

    const LutConfig& config() const { return config_; }
    const JointTdfe& lookup(std::uint32_t block0, std::uint32_t block1) const;
    const std::vector<JointTdfe>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const Lut&, const Lut&) = default;

private:
    LutConfig config_;
    std::vector<JointTdfe> entries_;
};

/// Exhaustive search for one block pair. Owns the precomputed column tables,
/// so a single instance is shared across all keys of a table; solve() is
/// const and safe to call concurrently.
class BlockPairSearch {
public:
    explicit BlockPairSearch(const LutConfig& config);
    ~BlockPairSearch();
    BlockPairSearch(const BlockPairSearch&) = delete;
    BlockPairSearch& operator=(const BlockPairSearch&) = delete;

    /// Minimal joint_cost expansion of (block0, block1), canonical tie-break:
    /// fewer total terms, then smaller max y, then lexicographically smaller
    /// sorted L0 then L1 (KTermLess order). Rows come back sorted.
    JointTdfe solve(std::uint32_t block0, std::uint32_t block1) const;

    /// Columnwise y = 0 form of the two blocks; always valid.
    JointTdfe columnwise(std::uint32_t block0, std::uint32_t block1) const;

private:
    struct Tables;
    LutConfig config_;
    std::unique_ptr<const Tables> tables_;
};

/// Strict-weak "better than" used for the LUT tie-break (equal cost assumed).
bool lut_prefer(const JointTdfe& candidate, const JointTdfe& incumbent);

/// Parallel generation (OpenMP over keys).
Lut gen_lut(const LutConfig& config);
/// Serial reference generation; must produce the same table as gen_lut.
Lut gen_lut_serial(const LutConfig& config);

/// Histogram joint_cost -> number of entries.
std::map<std::size_t, std::size_t> lut_cost_histogram(const Lut& lut);

// Text persistence ("KTAB 1" format).
std::string serialize_lut(const Lut& lut);
/// Throws ParseError (with a 1-based line number where one applies).
Lut parse_lut(std::string_view text);
void write_lut_file(const std::filesystem::path& path, const Lut& lut);
Lut read_lut_file(const std::filesystem::path& path);

/// Joint blocking: unsigned tau-adic expansions of both inputs, zero-padded to
/// a common length, split into w-digit blocks from the least significant end;
/// each block pair is looked up and shifted by tau^(i*w). Terms that cancel
/// exactly within a row (same x, y, opposite sign) are dropped. Rows come back
/// in KTermLess order. Propagates NonTerminating.
JointTdfe joint_blocking(const KleinianInt& e0, const KleinianInt& e1, const Lut& lut);

}  // namespace jtdfe
