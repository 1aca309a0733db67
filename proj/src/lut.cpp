#include "jtdfe/lut.hpp"

#include "jtdfe/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>

namespace jtdfe {

LutConfig LutConfig::make(std::uint32_t w, std::uint32_t b_max, Mu mu) {
    LutConfig c;
    c.w = w;
    c.b_max = b_max;
    c.x_max = w + 2;
    c.mu = mu;
    return c;
}

void LutConfig::validate() const {
    if (w < 1 || w > 8) throw InvalidConfig("window size w must be in [1, 8]");
    if (b_max > 6) throw InvalidConfig("bmax must be at most 6");
    if (x_max + 1 < w) throw InvalidConfig("xmax must be at least w - 1");
    if (x_max > w + 4) throw InvalidConfig("xmax must be at most w + 4");
}

KleinianInt block_value(std::uint32_t bits, std::uint32_t w, Mu mu) {
    std::vector<std::uint8_t> digits(w);
    for (std::uint32_t i = 0; i < w; ++i) digits[i] = (bits >> i) & 1u;
    return eval_digits(std::span<const std::uint8_t>(digits), mu);
}

std::string block_string(std::uint32_t bits, std::uint32_t w) {
    std::string s(w, '0');
    for (std::uint32_t i = 0; i < w; ++i)
        if ((bits >> i) & 1u) s[w - 1 - i] = '1';
    return s;
}

Lut::Lut(LutConfig config, std::vector<JointTdfe> entries)
    : config_(config), entries_(std::move(entries)) {
    config_.validate();
    if (entries_.size() != config_.key_count())
        throw InvalidConfig("lookup table has " + std::to_string(entries_.size()) + " entries, expected " +
                            std::to_string(config_.key_count()));
}

const JointTdfe& Lut::lookup(std::uint32_t block0, std::uint32_t block1) const {
    const std::uint32_t mask = (1u << config_.w) - 1;
    return entries_[(static_cast<std::size_t>(block0 & mask) << config_.w) | (block1 & mask)];
}

bool lut_prefer(const JointTdfe& candidate, const JointTdfe& incumbent) {
    if (candidate.total_terms() != incumbent.total_terms())
        return candidate.total_terms() < incumbent.total_terms();
    if (candidate.max_y() != incumbent.max_y()) return candidate.max_y() < incumbent.max_y();
    for (int r = 0; r < 2; ++r) {
        const auto& a = candidate.rows[r];
        const auto& b = incumbent.rows[r];
        if (a == b) continue;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), KTermLess{});
    }
    return false;
}

// ---------------------------------------------------------------------------
// Search tables.
//
// A column is a position p = (x, y) together with a digit pair (s0, s1) != (0, 0);
// it contributes (s0 * V_p, s1 * V_p) with V_p = tau^x (tau-1)^y. Block values are
// tiny, so everything lives in 64-bit integers here.

namespace {

using Vec4 = std::array<std::int64_t, 4>;  // row0.a, row0.b, row1.a, row1.b

struct Position {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    double mag = 0;
};

struct PairEntry {
    Vec4 sum;
    std::uint16_t p1, p2;  // p1 < p2
    std::int8_t s[4];      // s0(p1), s1(p1), s0(p2), s1(p2)
};

constexpr std::array<std::array<int, 2>, 8> kDigitPairs{{
    {1, 1}, {1, 0}, {1, -1}, {0, 1}, {0, -1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

struct Chosen {
    std::uint16_t p;
    std::int8_t s0, s1;
};

}  // namespace

struct BlockPairSearch::Tables {
    std::vector<Position> pos;
    std::vector<PairEntry> pairs;  // sorted by sum
    // top[k][p]: sum of the k largest |V_q| over q >= p.
    std::vector<std::vector<double>> top;
    double sqrt7_half = std::sqrt(7.0) / 2;
};

namespace {

double embed_mag(std::int64_t a, std::int64_t b, Mu mu, double s7h) {
    return std::hypot(static_cast<double>(a) + 0.5 * to_int(mu) * static_cast<double>(b),
                      s7h * static_cast<double>(b));
}

}  // namespace

BlockPairSearch::BlockPairSearch(const LutConfig& config) : config_(config) {
    config_.validate();
    auto t = std::make_unique<Tables>();
    const TermTable terms(ExpansionBounds{config.x_max, config.b_max}, config.mu);
    for (std::uint32_t y = 0; y <= config.b_max; ++y) {
        for (std::uint32_t x = 0; x <= config.x_max; ++x) {
            const KleinianInt& v = terms.value(x, y);
            Position p;
            p.a = v.a.get_si();
            p.b = v.b.get_si();
            p.x = x;
            p.y = y;
            p.mag = embed_mag(p.a, p.b, config.mu, t->sqrt7_half);
            t->pos.push_back(p);
        }
    }
    const std::size_t np = t->pos.size();
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = i + 1; j < np; ++j) {
            for (const auto& di : kDigitPairs) {
                for (const auto& dj : kDigitPairs) {
                    const Position& P = t->pos[i];
                    const Position& Q = t->pos[j];
                    PairEntry e;
                    e.sum = {di[0] * P.a + dj[0] * Q.a, di[0] * P.b + dj[0] * Q.b,
                             di[1] * P.a + dj[1] * Q.a, di[1] * P.b + dj[1] * Q.b};
                    e.p1 = static_cast<std::uint16_t>(i);
                    e.p2 = static_cast<std::uint16_t>(j);
                    e.s[0] = static_cast<std::int8_t>(di[0]);
                    e.s[1] = static_cast<std::int8_t>(di[1]);
                    e.s[2] = static_cast<std::int8_t>(dj[0]);
                    e.s[3] = static_cast<std::int8_t>(dj[1]);
                    t->pairs.push_back(e);
                }
            }
        }
    }
    std::sort(t->pairs.begin(), t->pairs.end(), [](const PairEntry& l, const PairEntry& r) {
        if (l.sum != r.sum) return l.sum < r.sum;
        if (l.p1 != r.p1) return l.p1 < r.p1;
        return l.p2 < r.p2;
    });

    const std::size_t kmax = 2 * config.w + 1;
    t->top.assign(kmax + 1, std::vector<double>(np + 1, 0.0));
    for (std::size_t p = 0; p <= np; ++p) {
        std::vector<double> mags;
        for (std::size_t q = p; q < np; ++q) mags.push_back(t->pos[q].mag);
        std::sort(mags.rbegin(), mags.rend());
        double acc = 0;
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (k <= mags.size()) acc += mags[k - 1];
            t->top[k][p] = acc;
        }
    }
    tables_ = std::move(t);
}

BlockPairSearch::~BlockPairSearch() = default;

JointTdfe BlockPairSearch::columnwise(std::uint32_t block0, std::uint32_t block1) const {
    JointTdfe j;
    for (std::uint32_t i = 0; i < config_.w; ++i) {
        if ((block0 >> i) & 1u) j.rows[0].push_back(KTerm{1, i, 0});
        if ((block1 >> i) & 1u) j.rows[1].push_back(KTerm{1, i, 0});
    }
    for (auto& row : j.rows) std::sort(row.begin(), row.end(), KTermLess{});
    return j;
}

JointTdfe BlockPairSearch::solve(std::uint32_t block0, std::uint32_t block1) const {
    const Tables& t = *tables_;
    const Mu mu = config_.mu;
    const KleinianInt v0 = block_value(block0, config_.w, mu);
    const KleinianInt v1 = block_value(block1, config_.w, mu);
    const Vec4 target{v0.a.get_si(), v0.b.get_si(), v1.a.get_si(), v1.b.get_si()};
    if (target == Vec4{0, 0, 0, 0}) return {};

    const std::size_t np = t.pos.size();
    const std::uint32_t upper = static_cast<std::uint32_t>(std::popcount(block0 | block1));
    const std::uint32_t d_limit = std::min<std::uint32_t>(2 * config_.w, upper);

    bool found = false;
    JointTdfe best;
    std::vector<Chosen> chosen;

    auto consider = [&](const std::vector<Chosen>& cols) {
        JointTdfe cand;
        for (const auto& c : cols) {
            const Position& P = t.pos[c.p];
            if (c.s0) cand.rows[0].push_back(KTerm{c.s0, P.x, P.y});
            if (c.s1) cand.rows[1].push_back(KTerm{c.s1, P.x, P.y});
        }
        for (auto& row : cand.rows) std::sort(row.begin(), row.end(), KTermLess{});
        if (!found || lut_prefer(cand, best)) {
            best = std::move(cand);
            found = true;
        }
    };

    auto mag = [&](std::int64_t a, std::int64_t b) { return embed_mag(a, b, mu, t.sqrt7_half); };

    // Finish with exactly two columns at positions > `after` (or any when after < 0).
    auto finish_pairs = [&](const Vec4& rem, int after) {
        auto lo = std::lower_bound(t.pairs.begin(), t.pairs.end(), rem,
                                   [](const PairEntry& e, const Vec4& v) { return e.sum < v; });
        for (auto it = lo; it != t.pairs.end() && it->sum == rem; ++it) {
            if (static_cast<int>(it->p1) <= after) continue;
            chosen.push_back({it->p1, it->s[0], it->s[1]});
            chosen.push_back({it->p2, it->s[2], it->s[3]});
            consider(chosen);
            chosen.pop_back();
            chosen.pop_back();
        }
    };

    // Choose `left` more columns at positions >= start, the last two via the pair table.
    std::function<void(const Vec4&, std::size_t, std::uint32_t)> dfs =
        [&](const Vec4& rem, std::size_t start, std::uint32_t left) {
            if (left == 2) {
                finish_pairs(rem, static_cast<int>(start) - 1);
                return;
            }
            const double bound_r0 = mag(rem[0], rem[1]);
            const double bound_r1 = mag(rem[2], rem[3]);
            const double slack = 1e-9;
            if (bound_r0 > t.top[left][start] + slack || bound_r1 > t.top[left][start] + slack) return;
            for (std::size_t p = start; p + left <= np; ++p) {
                const Position& P = t.pos[p];
                for (const auto& d : kDigitPairs) {
                    const Vec4 next{rem[0] - d[0] * P.a, rem[1] - d[0] * P.b, rem[2] - d[1] * P.a,
                                    rem[3] - d[1] * P.b};
                    chosen.push_back({static_cast<std::uint16_t>(p), static_cast<std::int8_t>(d[0]),
                                      static_cast<std::int8_t>(d[1])});
                    dfs(next, p + 1, left - 1);
                    chosen.pop_back();
                }
            }
        };

    for (std::uint32_t d = 1; d <= d_limit && !found; ++d) {
        if (d == 1) {
            for (std::size_t p = 0; p < np; ++p) {
                const Position& P = t.pos[p];
                for (const auto& dd : kDigitPairs) {
                    if (Vec4{dd[0] * P.a, dd[0] * P.b, dd[1] * P.a, dd[1] * P.b} == target) {
                        chosen = {{static_cast<std::uint16_t>(p), static_cast<std::int8_t>(dd[0]),
                                   static_cast<std::int8_t>(dd[1])}};
                        consider(chosen);
                    }
                }
            }
            chosen.clear();
        } else {
            dfs(target, 0, d);
        }
    }
    if (!found) return columnwise(block0, block1);
    return best;
}

// ---------------------------------------------------------------------------

namespace {

Lut generate(const LutConfig& config, bool parallel) {
    config.validate();
    const BlockPairSearch search(config);
    const std::size_t n = config.key_count();
    const std::uint32_t mask = (1u << config.w) - 1;
    std::vector<JointTdfe> entries(n);

    if (!parallel) {
        for (std::size_t k = 0; k < n; ++k)
            entries[k] = search.solve(static_cast<std::uint32_t>(k >> config.w), static_cast<std::uint32_t>(k) & mask);
        return Lut(config, std::move(entries));
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < static_cast<long>(n); ++k) {
        try {
            entries[static_cast<std::size_t>(k)] =
                search.solve(static_cast<std::uint32_t>(k >> config.w), static_cast<std::uint32_t>(k) & mask);
        } catch (...) {
#pragma omp critical(jtdfe_lut_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return Lut(config, std::move(entries));
}

}  // namespace

Lut gen_lut(const LutConfig& config) { return generate(config, true); }
Lut gen_lut_serial(const LutConfig& config) { return generate(config, false); }

std::map<std::size_t, std::size_t> lut_cost_histogram(const Lut& lut) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& e : lut.entries()) ++h[joint_cost(e)];
    return h;
}

}  // namespace jtdfe
