#pragma once

// Ordinary irreducible characters of S_n by the Murnaghan-Nakayama rule,
// evaluated through beta-sets. These power the characteristic-zero oracles.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetamult/partition.hpp"

namespace thetamult {

namespace detail {

using MnMemo = std::map<std::pair<std::vector<int>, std::size_t>, long long>;

inline long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& cls,
                        std::size_t cls_pos, MnMemo& memo) {
    if (cls_pos == cls.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, cls_pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Remove a border strip of size t in every possible way, via the beta-set
    // description beta_i = lambda_i + (k-1-i). The strip height equals the
    // number of beta values strictly between beta_i - t and beta_i.
    int t = cls[cls_pos];
    int k = static_cast<int>(lambda.size());
    std::vector<long long> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        long long b = beta[i];
        if (b < t) continue;
        long long nb = b - t;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) { clash = true; break; }
            if (beta[j] > nb && beta[j] < b) ++height;
        }
        if (clash) continue;
        std::vector<long long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlambda;
        int nk = static_cast<int>(nbeta.size());
        for (int j = 0; j < nk; ++j) {
            long long part = nbeta[j] - (nk - 1 - j);
            if (part > 0) nlambda.push_back(static_cast<int>(part));
        }
        long long sign = (height % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(nlambda, cls, cls_pos + 1, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// chi_lambda evaluated on the conjugacy class of cycle type class_shape.
inline long long mn_character(const Partition& lambda, const Partition& class_shape) {
    if (lambda.is_empty() || class_shape.is_empty())
        throw std::invalid_argument("mn_character: degenerate partition");
    if (lambda.size() != class_shape.size())
        throw std::invalid_argument("mn_character: size mismatch");
    if (lambda.size() == 0) return 1;
    detail::MnMemo memo;
    return detail::mn_rec(lambda.parts(), class_shape.parts(), 0, memo);
}

}  // namespace thetamult
