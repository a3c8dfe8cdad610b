#pragma once

// Partitions and compositions: dominance order, l-regularity, horizontal
// strips and the Pieri expansion. This is the combinatorial substrate for
// every multiplicity formula in the library.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetamult {

// A partition (weakly decreasing positive parts) extended by the two formal
// size-0 elements written "0" and "empty". They carry the degenerate
// multiplicity conventions d(0,.) = 1 and d(empty,.) = 0 and never compare
// equal to each other or to a nonempty partition.
class Partition {
public:
    enum class Tag { none, zero, empty };

    // The zero partition (the ordinary partition of 0).
    Partition() : tag_(Tag::zero) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        if (parts_.empty()) tag_ = Tag::zero;
    }

    static Partition zero() { return Partition(); }
    static Partition empty() {
        Partition p;
        p.tag_ = Tag::empty;
        return p;
    }

    const std::vector<int>& parts() const { return parts_; }
    Tag tag() const { return tag_; }
    bool is_zero() const { return tag_ == Tag::zero; }
    bool is_empty() const { return tag_ == Tag::empty; }
    bool degenerate() const { return tag_ != Tag::none; }

    // |lambda|, the number being partitioned.
    long long size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {  // zero-padded access, 0-based
        return i < rows() ? parts_[i] : 0;
    }

    bool operator==(const Partition& o) const {
        return tag_ == o.tag_ && parts_ == o.parts_;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    // Total order for deterministic containers: degenerates first, then by
    // (size, reverse lex on parts).
    bool operator<(const Partition& o) const {
        if (tag_ != o.tag_) return static_cast<int>(tag_) > static_cast<int>(o.tag_);
        if (size() != o.size()) return size() < o.size();
        return parts_ > o.parts_;
    }

    // Entrywise containment with zero padding. Degenerate "empty" contains
    // nothing and is contained in nothing.
    bool contains(const Partition& nu) const {
        if (is_empty() || nu.is_empty()) return false;
        if (nu.rows() > rows()) {
            for (int i = rows(); i < nu.rows(); ++i)
                if (nu.part(i) > 0) return false;
        }
        for (int i = 0; i < nu.rows(); ++i)
            if (nu.part(i) > part(i)) return false;
        return true;
    }

    // "[3,1,1]"; "[0]" is the zero partition, "[]" the empty one.
    std::string to_string() const {
        if (is_empty()) return "[]";
        if (is_zero()) return "[0]";
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    Tag tag_ = Tag::none;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

inline Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition literal must look like [3,1,1]: " + text);
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return Partition::empty();
    if (body == "0") return Partition::zero();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in partition literal: " + text);
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad entry in partition literal: " + text);
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

// Ordered tuple of positive parts. Only the little that the Young-subgroup
// machinery needs.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x <= 0) throw std::invalid_argument("composition parts must be positive");
    }
    long long total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    Composition opposite() const {
        std::vector<int> r(parts.rbegin(), parts.rend());
        return Composition(std::move(r));
    }
    Composition scaled(int k) const {
        if (k <= 0) throw std::invalid_argument("scale factor must be positive");
        std::vector<int> r = parts;
        for (int& x : r) x *= k;
        return Composition(std::move(r));
    }
};

// True iff no part value occurs ell or more times.
inline bool is_l_regular(const Partition& lambda, long long ell) {
    if (ell < 2) throw std::invalid_argument("is_l_regular needs ell >= 2");
    if (lambda.is_empty()) return true;
    const auto& p = lambda.parts();
    long long run = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= ell) return false;
    }
    return true;
}

// mu <= lambda in dominance order: every prefix sum of lambda is >= the
// corresponding prefix sum of mu. Requires |mu| = |lambda|.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance_leq: partitions of different sizes");
    long long smu = 0, slam = 0;
    int k = std::max(mu.rows(), lambda.rows());
    for (int i = 0; i < k; ++i) {
        smu += mu.part(i);
        slam += lambda.part(i);
        if (slam < smu) return false;
    }
    return true;
}

// Decreasing list of the distinct part values of lambda.
inline std::vector<int> distinct_parts(const Partition& lambda) {
    std::vector<int> out;
    for (int x : lambda.parts())
        if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

// nu contained in lambda with at most one cell of lambda/nu in each column,
// i.e. lambda_{i+1} <= nu_i for all i.
inline bool is_horizontal_strip(const Partition& nu, const Partition& lambda) {
    if (nu.is_empty() || lambda.is_empty()) return false;
    if (!lambda.contains(nu)) return false;
    for (int i = 0; i + 1 < lambda.rows(); ++i)
        if (lambda.part(i + 1) > nu.part(i)) return false;
    return true;
}

namespace detail {
inline void pieri_rec(const Partition& lambda, int row, int remaining, int upper,
                      std::vector<int>& acc, std::vector<Partition>& out) {
    if (row > lambda.rows()) {
        if (remaining == 0) {
            std::vector<int> parts;
            for (int x : acc)
                if (x > 0) parts.push_back(x);
            out.emplace_back(std::move(parts));
        }
        return;
    }
    int base = lambda.part(row);
    // mu_row ranges over [base, min(upper, base + remaining)]
    int hi = std::min<long long>(upper, static_cast<long long>(base) + remaining);
    for (int v = base; v <= hi; ++v) {
        acc.push_back(v);
        pieri_rec(lambda, row + 1, remaining - (v - base), base, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

// All partitions mu of |lambda|+k with lambda contained in mu and mu/lambda a
// horizontal strip; the decomposition of inducing a trivial block against
// D_lambda in the semisimple range. Returned sorted, pairwise distinct.
inline std::vector<Partition> pieri_expand(const Partition& lambda, int k) {
    if (lambda.is_empty()) throw std::invalid_argument("pieri_expand: empty partition");
    if (k < 0) throw std::invalid_argument("pieri_expand: negative k");
    std::vector<Partition> out;
    std::vector<int> acc;
    int upper = lambda.part(0) + k;
    detail::pieri_rec(lambda, 0, k, upper, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of standard Young tableaux of shape lambda, by the hook length
// formula. Exact for |lambda| <= 20.
inline unsigned long long count_standard_tableaux(const Partition& lambda) {
    if (lambda.is_empty())
        throw std::invalid_argument("count_standard_tableaux: empty partition");
    long long n = lambda.size();
    if (n == 0) return 1;
    if (n > 20) throw std::invalid_argument("count_standard_tableaux: |lambda| > 20");
    std::vector<int> conj(lambda.part(0), 0);
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) conj[j]++;
    unsigned __int128 num = 1, den = 1;
    for (long long t = 2; t <= n; ++t) num *= static_cast<unsigned>(t);
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j)
            den *= static_cast<unsigned>((lambda.parts()[i] - j) + (conj[j] - i) - 1);
    if (num % den != 0)
        throw std::logic_error("hook length product does not divide n!");
    return static_cast<unsigned long long>(num / den);
}

// All partitions of n, deterministically ordered (first part descending).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            acc.push_back(v);
            self(self, remaining - v, v);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> l_regular_partitions_of(int n, long long ell) {
    std::vector<Partition> out;
    for (const auto& p : partitions_of(n))
        if (is_l_regular(p, ell)) out.push_back(p);
    return out;
}

}  // namespace thetamult
