#pragma once

// Segments and multisegments on a cyclic cuspidal line. Endpoints are
// half-integers stored doubled, so every twist in the skeleton recursion is
// integer arithmetic. Equality of segments is always taken modulo the line
// period; the canonical representative has left endpoint in [0, o).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "thetamult/partition.hpp"

namespace thetamult {

// A cuspidal line abstracted to (cardinality o, per-point degree, ell).
// e = o when o > 1 and ell otherwise; e governs aperiodicity.
struct LineContext {
    int o = 1;
    int deg_point = 1;
    std::uint64_t ell = 2;

    LineContext() = default;
    LineContext(int o_, int deg_, std::uint64_t ell_) : o(o_), deg_point(deg_), ell(ell_) {
        if (o < 1 || deg_point < 1 || ell < 2)
            throw std::invalid_argument("LineContext: o, deg >= 1 and ell >= 2 required");
    }
    long long e() const { return o > 1 ? o : static_cast<long long>(ell); }
    bool operator==(const LineContext& c) const {
        return o == c.o && deg_point == c.deg_point && ell == c.ell;
    }
    bool operator!=(const LineContext& c) const { return !(*this == c); }

    std::string to_string() const {
        return "@o=" + std::to_string(o) + ",deg=" + std::to_string(deg_point) +
               ",ell=" + std::to_string(ell);
    }
    static LineContext parse(const std::string& text);
};

namespace detail {
// "3", "-5", "3/2", "-7/2" -> doubled value.
inline long long parse_half(const std::string& tok) {
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad endpoint: " + tok);
        return 2 * v;
    }
    std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
    if (den != "2") throw std::invalid_argument("endpoint denominators must be 2: " + tok);
    std::size_t used = 0;
    long long v = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument("bad endpoint: " + tok);
    if (v % 2 == 0) throw std::invalid_argument("half-integer endpoint must be odd/2: " + tok);
    return v;
}
inline std::string format_half(long long doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}
}  // namespace detail

inline LineContext LineContext::parse(const std::string& text) {
    if (text.empty() || text[0] != '@')
        throw std::invalid_argument("line literal must start with '@': " + text);
    int o = -1, deg = -1;
    long long ell = -1;
    std::size_t pos = 1;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad line literal: " + text);
        std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        if (k == "o") o = std::stoi(v);
        else if (k == "deg") deg = std::stoi(v);
        else if (k == "ell") ell = std::stoll(v);
        else throw std::invalid_argument("unknown line field '" + k + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (o < 0 || deg < 0 || ell < 0)
        throw std::invalid_argument("line literal needs o, deg and ell: " + text);
    return LineContext(o, deg, static_cast<std::uint64_t>(ell));
}

// The interval [a, b] on its line, a <= b, endpoints both integers or both
// half-integers (stored doubled).
struct Segment {
    LineContext line;
    long long a2 = 0, b2 = 0;

    Segment() = default;
    Segment(LineContext l, long long a_doubled, long long b_doubled)
        : line(l), a2(a_doubled), b2(b_doubled) {
        if (a2 > b2) throw std::invalid_argument("segment needs a <= b");
        if (((a2 - b2) % 2 + 2) % 2 != 0)
            throw std::invalid_argument("segment endpoints must lie in the same lattice");
    }

    long long length() const { return (b2 - a2) / 2 + 1; }
    long long degree() const { return length() * line.deg_point; }

    // (canonical left endpoint in [0, 2o), length): the seg_equal invariant.
    std::pair<long long, long long> key() const {
        long long mod = 2LL * line.o;
        long long ac = ((a2 % mod) + mod) % mod;
        return {ac, length()};
    }

    std::string to_string() const {
        return "[" + detail::format_half(a2) + "," + detail::format_half(b2) + "]";
    }
};

inline bool seg_equal(const Segment& s, const Segment& t) {
    if (s.line != t.line) throw std::invalid_argument("seg_equal: segments on different lines");
    return s.key() == t.key();
}

inline Segment seg_dual(const Segment& s) { return Segment(s.line, -s.b2, -s.a2); }

inline Segment seg_twist(const Segment& s, long long i_doubled) {
    return Segment(s.line, s.a2 + i_doubled, s.b2 + i_doubled);
}

// Cut [a,b] after degree s from the left: empty unless deg_point divides s,
// otherwise ([a, a+u-1], [a+u, b]) with u = s / deg_point. The right factor's
// left endpoint is forced by degree additivity.
inline std::optional<std::pair<Segment, Segment>> segment_jacquet(const Segment& s, long long deg_s) {
    if (deg_s <= 0 || deg_s >= s.degree())
        throw std::invalid_argument("segment_jacquet: split degree out of range");
    if (deg_s % s.line.deg_point != 0) return std::nullopt;
    long long u = deg_s / s.line.deg_point;
    Segment left(s.line, s.a2, s.a2 + 2 * (u - 1));
    Segment right(s.line, s.a2 + 2 * u, s.b2);
    return std::make_pair(left, right);
}

// A formal multiset of segments on one line. Kept sorted by (a2, b2) so that
// value identity (and printed form) is deterministic.
class Multisegment {
public:
    explicit Multisegment(LineContext line) : line_(line) {}
    Multisegment(LineContext line, std::vector<Segment> segs) : line_(line), segs_(std::move(segs)) {
        for (const auto& s : segs_)
            if (s.line != line_)
                throw std::invalid_argument("multisegment: all segments must share the line");
        normalize();
    }

    const LineContext& line() const { return line_; }
    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    std::size_t count() const { return segs_.size(); }

    long long degree() const {
        long long d = 0;
        for (const auto& s : segs_) d += s.degree();
        return d;
    }

    Multisegment twist(long long i_doubled) const {
        std::vector<Segment> out;
        out.reserve(segs_.size());
        for (const auto& s : segs_) out.push_back(seg_twist(s, i_doubled));
        return Multisegment(line_, std::move(out));
    }

    Multisegment dual() const {
        std::vector<Segment> out;
        out.reserve(segs_.size());
        for (const auto& s : segs_) out.push_back(seg_dual(s));
        return Multisegment(line_, std::move(out));
    }

    Multisegment plus(const Multisegment& o) const {
        if (line_ != o.line_) throw std::invalid_argument("multisegment sum: line mismatch");
        std::vector<Segment> out = segs_;
        out.insert(out.end(), o.segs_.begin(), o.segs_.end());
        return Multisegment(line_, std::move(out));
    }

    // Multiset of seg_equal classes.
    std::map<std::pair<long long, long long>, long long> class_counts() const {
        std::map<std::pair<long long, long long>, long long> c;
        for (const auto& s : segs_) c[s.key()]++;
        return c;
    }

    // Equality as multisets up to seg_equal.
    bool equals_mod_line(const Multisegment& o) const {
        if (line_ != o.line_) throw std::invalid_argument("multisegment comparison: line mismatch");
        return class_counts() == o.class_counts();
    }

    std::string to_string() const {
        if (segs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (i) s += "+";
            s += segs_[i].to_string();
        }
        return s;
    }

    static Multisegment parse(const std::string& text, LineContext line);

private:
    void normalize() {
        std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) {
            return std::tie(x.a2, x.b2) < std::tie(y.a2, y.b2);
        });
    }
    LineContext line_;
    std::vector<Segment> segs_;
};

inline Multisegment Multisegment::parse(const std::string& text, LineContext line) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "0") return Multisegment(line);
    std::vector<Segment> segs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '[') throw std::invalid_argument("expected '[' in multisegment: " + text);
        std::size_t close = s.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced segment: " + text);
        std::string body = s.substr(pos + 1, close - pos - 1);
        std::size_t comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("segment needs two endpoints: " + text);
        long long a2 = detail::parse_half(body.substr(0, comma));
        long long b2 = detail::parse_half(body.substr(comma + 1));
        segs.emplace_back(line, a2, b2);
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != '+') throw std::invalid_argument("segments must be '+'-joined: " + text);
            ++pos;
        }
    }
    return Multisegment(line, std::move(segs));
}

// False iff the multisegment contains e(rho) consecutive shifts
// [a,b], [a+1,b+1], ..., [a+e-1,b+e-1] (as a sub-multiset up to seg_equal).
inline bool is_aperiodic(const Multisegment& m) {
    auto counts = m.class_counts();
    long long e = m.line().e();
    long long mod = 2LL * m.line().o;
    for (const auto& [key, cnt] : counts) {
        (void)cnt;
        std::map<std::pair<long long, long long>, long long> required;
        for (long long i = 0; i < e; ++i) {
            long long ac = (key.first + 2 * i) % mod;
            required[{ac, key.second}]++;
        }
        bool chain = true;
        for (const auto& [rk, rc] : required) {
            auto it = counts.find(rk);
            if (it == counts.end() || it->second < rc) {
                chain = false;
                break;
            }
        }
        if (chain) return false;
    }
    return true;
}

// m(lambda) = [1, lambda_1 o] + ... + [1, lambda_k o].
inline Multisegment m_of_lambda(const Partition& lambda, LineContext line) {
    if (lambda.degenerate() && !lambda.is_zero())
        throw std::invalid_argument("m_of_lambda: degenerate partition");
    std::vector<Segment> segs;
    for (int part : lambda.parts())
        segs.emplace_back(line, 2, 2LL * part * line.o);
    return Multisegment(line, std::move(segs));
}

// Inverse of m_of_lambda up to line shift: requires a common left endpoint
// class and lengths divisible by o. The empty multisegment maps to the zero
// partition.
inline Partition lambda_of_m(const Multisegment& m) {
    if (m.empty()) return Partition::zero();
    long long mod = 2LL * m.line().o;
    long long a0 = ((m.segments().front().a2 % mod) + mod) % mod;
    std::vector<int> parts;
    for (const auto& s : m.segments()) {
        long long ac = ((s.a2 % mod) + mod) % mod;
        if (ac != a0)
            throw std::invalid_argument("lambda_of_m: segment " + s.to_string() +
                                        " does not share the common left endpoint class");
        if (s.length() % m.line().o != 0)
            throw std::invalid_argument("lambda_of_m: segment " + s.to_string() +
                                        " has length not divisible by o");
        parts.push_back(static_cast<int>(s.length() / m.line().o));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace thetamult
