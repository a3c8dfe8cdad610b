#pragma once

// Permutations in one-line notation (0-based internally), Coxeter lengths,
// minimal coset representatives and conjugacy-class bookkeeping for S_n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "thetamult/partition.hpp"

namespace thetamult {

class Permutation {
public:
    explicit Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    // Adjacent transposition s_{i+1} = (i, i+1), 0-based i in [0, n-2].
    static Permutation transposition(int n, int i) {
        if (i < 0 || i + 1 >= n) throw std::invalid_argument("transposition index out of range");
        Permutation p(n);
        std::swap(p.img_[i], p.img_[i + 1]);
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (this*other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const {
        if (n() != other.n()) throw std::invalid_argument("composing permutations of different degrees");
        std::vector<int> r(n());
        for (int i = 0; i < n(); ++i) r[i] = img_[other.img_[i]];
        Permutation p(0);
        p.img_ = std::move(r);
        return p;
    }

    Permutation inverse() const {
        std::vector<int> r(n());
        for (int i = 0; i < n(); ++i) r[img_[i]] = i;
        Permutation p(0);
        p.img_ = std::move(r);
        return p;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// Number of inversions = minimal word length in the adjacent transpositions.
inline long long coxeter_length(const Permutation& w) {
    long long inv = 0;
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

// A word in the generators s_1..s_{n-1} (as 0-based indices) whose product,
// left to right, is w. The word is reduced.
inline std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    std::vector<int> img = w.images();
    // Peel generators from the left: if s_i * w is shorter, w starts with s_i.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i + 1 < static_cast<int>(img.size()); ++i) {
            // s_i * w swaps the values i and i+1; it shortens w iff i+1
            // appears before i in the one-line notation.
            int pos_i = -1, pos_i1 = -1;
            for (int k = 0; k < static_cast<int>(img.size()); ++k) {
                if (img[k] == i) pos_i = k;
                if (img[k] == i + 1) pos_i1 = k;
            }
            if (pos_i1 < pos_i) {
                std::swap(img[pos_i], img[pos_i1]);
                word.push_back(i);
                progress = true;
                break;
            }
        }
    }
    // w = s_{word[0]} * s_{word[1]} * ... * s_{word.back()}
    return word;
}

// The C(n,k) minimal-length representatives of the left cosets w*S_(k,n-k);
// each is increasing on positions 0..k-1 and on positions k..n-1. Ordered by
// the image set of the first block.
inline std::vector<Permutation> min_coset_representatives(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("min_coset_representatives: bad k");
    std::vector<Permutation> reps;
    std::vector<int> subset(k);
    auto emit = [&]() {
        std::vector<bool> used(n, false);
        std::vector<int> img(n);
        for (int i = 0; i < k; ++i) {
            img[i] = subset[i];
            used[subset[i]] = true;
        }
        int pos = k;
        for (int v = 0; v < n; ++v)
            if (!used[v]) img[pos++] = v;
        reps.emplace_back(std::move(img));
    };
    auto rec = [&](auto&& self, int idx, int start) -> void {
        if (idx == k) { emit(); return; }
        for (int v = start; v < n; ++v) {
            subset[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return reps;
}

// Cycle type as a partition (cycle lengths, decreasing).
inline Partition cycle_type(const Permutation& w) {
    std::vector<bool> seen(w.n(), false);
    std::vector<int> lens;
    for (int i = 0; i < w.n(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = w(j);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

// Canonical representative of the class of cycle type `shape`: cycles of
// decreasing length on consecutive integers.
inline Permutation class_representative(const Partition& shape) {
    int n = static_cast<int>(shape.size());
    std::vector<int> img(n);
    int base = 0;
    for (int len : shape.parts()) {
        for (int i = 0; i < len; ++i) img[base + i] = base + (i + 1) % len;
        base += len;
    }
    if (base != n) throw std::logic_error("class_representative: shape mismatch");
    return Permutation(std::move(img));
}

inline unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

// |class of cycle type shape| = n! / prod_i (i^{m_i} m_i!)
inline unsigned long long conjugacy_class_size(const Partition& shape) {
    int n = static_cast<int>(shape.size());
    unsigned long long z = 1;
    const auto& p = shape.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        unsigned long long mult = j - i;
        for (unsigned long long t = 1; t <= mult; ++t) z *= t * 1ULL;
        for (unsigned long long t = 0; t < mult; ++t) z *= static_cast<unsigned long long>(p[i]);
        i = j;
    }
    return factorial(n) / z;
}

}  // namespace thetamult
