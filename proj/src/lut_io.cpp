#include "jtdfe/lut.hpp"

#include "jtdfe/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace jtdfe {

namespace {

constexpr std::string_view kMagic = "KTAB";
constexpr std::string_view kVersion = "1";

std::string header_line(const LutConfig& c) {
    std::ostringstream os;
    os << kMagic << ' ' << kVersion << " mu=" << (c.mu == Mu::Plus ? "+1" : "-1") << " w=" << c.w
       << " bmax=" << c.b_max << " xmax=" << c.x_max;
    return os.str();
}

void append_terms(std::string& out, const std::vector<KTerm>& terms) {
    if (terms.empty()) {
        out += '.';
        return;
    }
    bool first = true;
    for (const auto& t : terms) {
        if (!first) out += ';';
        first = false;
        out += t.sign > 0 ? '+' : '-';
        out += ',';
        out += std::to_string(t.x);
        out += ',';
        out += std::to_string(t.y);
    }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::uint32_t parse_uint(std::string_view s, std::size_t line, const char* what) {
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

std::uint32_t parse_block(std::string_view s, std::uint32_t w, std::size_t line) {
    if (s.size() != w) throw ParseError(line, "block '" + std::string(s) + "' is not " + std::to_string(w) + " digits");
    std::uint32_t bits = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw ParseError(line, "block '" + std::string(s) + "' has a non-binary digit");
        bits = (bits << 1) | static_cast<std::uint32_t>(ch == '1');
    }
    return bits;
}

std::vector<KTerm> parse_terms(std::string_view s, const LutConfig& c, std::size_t line) {
    std::vector<KTerm> terms;
    if (s == ".") return terms;
    for (auto item : split(s, ';')) {
        const auto f = split(item, ',');
        if (f.size() != 3 || (f[0] != "+" && f[0] != "-"))
            throw ParseError(line, "malformed term '" + std::string(item) + "'");
        KTerm t;
        t.sign = f[0] == "+" ? 1 : -1;
        t.x = parse_uint(f[1], line, "tau exponent");
        t.y = parse_uint(f[2], line, "(tau-1) exponent");
        if (t.x > c.x_max || t.y > c.b_max)
            throw ParseError(line, "term '" + std::string(item) + "' exceeds the table bounds");
        terms.push_back(t);
    }
    return terms;
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

LutConfig parse_header(std::string_view line) {
    std::istringstream is{std::string(line)};
    std::string magic, version, mu, w, bmax, xmax, extra;
    is >> magic >> version >> mu >> w >> bmax >> xmax;
    if (magic != kMagic) throw ParseError(1, "missing KTAB header");
    if (version != kVersion) throw ParseError(1, "unsupported KTAB version '" + version + "'");
    if (is >> extra) throw ParseError(1, "trailing fields in header");
    LutConfig c;
    if (mu == "mu=+1") c.mu = Mu::Plus;
    else if (mu == "mu=-1") c.mu = Mu::Minus;
    else throw ParseError(1, "bad mu field '" + mu + "'");
    auto field = [](const std::string& tok, std::string_view key) -> std::uint32_t {
        if (tok.rfind(key, 0) != 0) throw ParseError(1, "expected field '" + std::string(key) + "' in header");
        return parse_uint(std::string_view(tok).substr(key.size()), 1, key.data());
    };
    c.w = field(w, "w=");
    c.b_max = field(bmax, "bmax=");
    c.x_max = field(xmax, "xmax=");
    try {
        c.validate();
    } catch (const InvalidConfig& e) {
        throw ParseError(1, e.what());
    }
    return c;
}

}  // namespace

std::string serialize_lut(const Lut& lut) {
    const LutConfig& c = lut.config();
    std::string out = header_line(c);
    out += '\n';
    const std::uint32_t n = 1u << c.w;
    for (std::uint32_t b0 = 0; b0 < n; ++b0) {
        for (std::uint32_t b1 = 0; b1 < n; ++b1) {
            const JointTdfe& e = lut.lookup(b0, b1);
            out += block_string(b0, c.w);
            out += ' ';
            out += block_string(b1, c.w);
            out += " : ";
            append_terms(out, e.rows[0]);
            out += " | ";
            append_terms(out, e.rows[1]);
            out += '\n';
        }
    }
    return out;
}

Lut parse_lut(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "empty lookup table file");
    const LutConfig c = parse_header(strip_cr(lines[0]));

    const std::size_t expected = c.key_count();
    std::vector<JointTdfe> entries;
    entries.reserve(expected);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = strip_cr(lines[i]);
        if (entries.size() == expected) throw ParseError(line_no, "more entries than 2^(2w)");

        const auto colon = line.find(" : ");
        const auto bar = line.find(" | ");
        if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon)
            throw ParseError(line_no, "expected '<block0> <block1> : <terms> | <terms>'");
        const auto keys = split(line.substr(0, colon), ' ');
        if (keys.size() != 2) throw ParseError(line_no, "expected two blocks before ':'");
        const std::uint32_t b0 = parse_block(keys[0], c.w, line_no);
        const std::uint32_t b1 = parse_block(keys[1], c.w, line_no);
        const std::size_t index = (static_cast<std::size_t>(b0) << c.w) | b1;
        if (index != entries.size())
            throw ParseError(line_no, "key " + std::string(keys[0]) + " " + std::string(keys[1]) +
                                          " out of order or duplicated (expected entry " +
                                          std::to_string(entries.size()) + ")");

        JointTdfe e;
        e.rows[0] = parse_terms(line.substr(colon + 3, bar - colon - 3), c, line_no);
        e.rows[1] = parse_terms(line.substr(bar + 3), c, line_no);
        if (eval_terms(e.rows[0], c.mu) != block_value(b0, c.w, c.mu) ||
            eval_terms(e.rows[1], c.mu) != block_value(b1, c.w, c.mu))
            throw ParseError(line_no, "entry does not evaluate to its key");
        entries.push_back(std::move(e));
    }
    if (entries.size() != expected)
        throw ParseError(0, "incomplete table: " + std::to_string(entries.size()) + " of " +
                                std::to_string(expected) + " keys present");
    return Lut(c, std::move(entries));
}

void write_lut_file(const std::filesystem::path& path, const Lut& lut) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open '" + path.string() + "' for writing");
    os << serialize_lut(lut);
    if (!os) throw Error("write to '" + path.string() + "' failed");
}

Lut read_lut_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_lut(ss.str());
}

}  // namespace jtdfe
