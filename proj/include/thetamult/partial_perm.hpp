#pragma once

// Partial permutations, their S_n x S_m bimodule, and the four routes to the
// multiplicities d^r and d: the horizontal-strip formula, the closed-form
// case analysis, the characteristic-zero character oracle, and the
// module-theoretic brute force over F_ell.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "thetamult/characters.hpp"
#include "thetamult/exact_linalg.hpp"
#include "thetamult/matrix_rep.hpp"
#include "thetamult/partition.hpp"
#include "thetamult/permutation.hpp"
#include "thetamult/specht.hpp"

namespace thetamult {

// Raised when a brute-force route is asked for something outside its
// feasibility bounds; the CLI maps it to exit code 3.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (U, V, f): U and V sorted ascending, f_of_v[i] = f(v[i]) in U.
struct PartialPermutation {
    int n = 0, m = 0;
    std::vector<int> u, v, f_of_v;

    int rank() const { return static_cast<int>(u.size()); }
    auto key() const { return std::tie(u, v, f_of_v); }
    bool operator==(const PartialPermutation& o) const { return key() == o.key(); }
    bool operator<(const PartialPermutation& o) const { return key() < o.key(); }
};

namespace detail {
inline void subsets_rec(int n, int r, int start, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.push_back(acc);
        return;
    }
    for (int v = start; v < n; ++v) {
        acc.push_back(v);
        subsets_rec(n, r, v + 1, acc, out);
        acc.pop_back();
    }
}
inline std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    subsets_rec(n, r, 0, acc, out);
    return out;
}
}  // namespace detail

// All rank-r partial permutations, in (U, V, f) lexicographic order;
// count = C(n,r) C(m,r) r!.
inline std::vector<PartialPermutation> enumerate_pp(int n, int m, int r) {
    if (r < 0 || r > std::min(n, m)) throw std::invalid_argument("enumerate_pp: rank out of range");
    std::vector<PartialPermutation> out;
    auto us = detail::subsets(n, r);
    auto vs = detail::subsets(m, r);
    for (const auto& u : us)
        for (const auto& v : vs) {
            std::vector<int> img = u;
            std::sort(img.begin(), img.end());
            do {
                out.push_back(PartialPermutation{n, m, u, v, img});
            } while (std::next_permutation(img.begin(), img.end()));
        }
    return out;
}

// (sigma, tau) . (U, V, f) = (sigma(U), tau^{-1}(V), v -> sigma(f(tau(v)))).
// A left action of S_n x S_m; the tau side realizes the right-module twist.
inline PartialPermutation act(const Permutation& sigma, const Permutation& tau,
                              const PartialPermutation& p) {
    if (sigma.n() != p.n || tau.n() != p.m)
        throw std::invalid_argument("act: degree mismatch");
    Permutation tinv = tau.inverse();
    std::vector<std::pair<int, int>> pairs;  // (new v, new u)
    for (std::size_t i = 0; i < p.v.size(); ++i)
        pairs.emplace_back(tinv(p.v[i]), sigma(p.f_of_v[i]));
    std::sort(pairs.begin(), pairs.end());
    PartialPermutation q;
    q.n = p.n;
    q.m = p.m;
    for (auto& [nv, nu] : pairs) {
        q.v.push_back(nv);
        q.f_of_v.push_back(nu);
    }
    q.u = q.f_of_v;
    std::sort(q.u.begin(), q.u.end());
    return q;
}

// F_ell[PP^r_{n,m}] as a permutation representation of S_n x S_m on the basis
// enumerate_pp(n, m, r).
template <class F>
MatrixRep<F> pp_module(int n, int m, int r, F field) {
    auto basis = enumerate_pp(n, m, r);
    std::map<std::vector<int>, int> index;
    auto flat = [](const PartialPermutation& p) {
        std::vector<int> k = p.u;
        k.insert(k.end(), p.v.begin(), p.v.end());
        k.insert(k.end(), p.f_of_v.begin(), p.f_of_v.end());
        return k;
    };
    for (std::size_t i = 0; i < basis.size(); ++i) index[flat(basis[i])] = static_cast<int>(i);
    int dim = static_cast<int>(basis.size());
    std::vector<ExactMatrix<F>> gens;
    std::vector<std::vector<int>> images;
    auto push_gen = [&](const Permutation& sigma, const Permutation& tau) {
        std::vector<int> im(dim);
        for (int i = 0; i < dim; ++i) im[i] = index.at(flat(act(sigma, tau, basis[i])));
        ExactMatrix<F> mat(field, dim, dim);
        for (int i = 0; i < dim; ++i) mat.at(im[i], i) = field.one();
        gens.push_back(std::move(mat));
        images.push_back(std::move(im));
    };
    for (int i = 0; i + 1 < n; ++i) push_gen(Permutation::transposition(n, i), Permutation(m));
    for (int j = 0; j + 1 < m; ++j) push_gen(Permutation(n), Permutation::transposition(m, j));
    return MatrixRep<F>(GroupShape{{n, m}}, field, dim, std::move(gens), std::move(images));
}

// Strip formula: d^r = #{ nu |- r : nu -> lambda and nu -> mu are horizontal
// strips }. Here r is the rank of the stratum. Valid as the multiplicity in
// the semisimple range |lambda|, |mu| < ell.
inline long long d_rank(const Partition& lambda, const Partition& mu, int r) {
    if (lambda.degenerate() || mu.degenerate())
        throw std::invalid_argument("d_rank: degenerate partition");
    if (r < 0 || r > std::min(lambda.size(), mu.size()))
        throw std::invalid_argument("d_rank: rank out of range");
    long long count = 0;
    for (const auto& nu : partitions_of(r))
        if (is_horizontal_strip(nu, lambda) && is_horizontal_strip(nu, mu)) ++count;
    return count;
}

// The closed-form case analysis for n = m, with r read as the corank index:
// d_closed_form(lambda, mu, r) agrees with d_rank(lambda, mu, n-r) for
// r >= 1. The r = 0 cell is excluded: the printed formula gives the number
// of distinct parts there, while the rank-n stratum always contributes 1
// (and the rank-0 stratum is the trivial bimodule).
inline long long d_closed_form(const Partition& lambda, const Partition& mu, int r) {
    if (lambda.degenerate() || mu.degenerate())
        throw std::invalid_argument("d_closed_form: degenerate partition");
    if (lambda.size() != mu.size())
        throw std::invalid_argument("d_closed_form: needs |lambda| = |mu|");
    if (r < 1 || r > lambda.size())
        throw std::domain_error("d_closed_form: r out of range (r = 0 cell is excluded)");
    if (lambda == mu) {
        long long c = 0;
        for (int a : distinct_parts(lambda))
            if (a >= r) ++c;
        return c;
    }
    // "differ in exactly two entries by +-r", comparing zero-padded rows
    int k = std::max(lambda.rows(), mu.rows());
    std::vector<int> diffs;
    for (int i = 0; i < k; ++i)
        if (lambda.part(i) != mu.part(i)) diffs.push_back(lambda.part(i) - mu.part(i));
    if (diffs.size() == 2 &&
        ((diffs[0] == r && diffs[1] == -r) || (diffs[0] == -r && diffs[1] == r)))
        return 1;
    return 0;
}

// <chi of pp_module, chi_lambda x chi_mu> by fixed-point counting over the
// conjugacy classes of S_n x S_m. Characteristic-zero semantics.
inline long long d_char_oracle(const Partition& lambda, const Partition& mu, int r) {
    if (lambda.degenerate() || mu.degenerate())
        throw std::invalid_argument("d_char_oracle: degenerate partition");
    int n = static_cast<int>(lambda.size());
    int m = static_cast<int>(mu.size());
    if (n > 6 || m > 6) throw SizeLimitError("d_char_oracle: |lambda|, |mu| <= 6 required");
    if (r < 0 || r > std::min(n, m)) throw std::invalid_argument("d_char_oracle: rank out of range");
    auto basis = enumerate_pp(n, m, r);
    __int128 total = 0;
    for (const auto& alpha : partitions_of(n)) {
        Permutation sigma = class_representative(alpha);
        long long ca = static_cast<long long>(conjugacy_class_size(alpha));
        long long chl = mn_character(lambda, alpha);
        if (chl == 0) continue;
        for (const auto& beta : partitions_of(m)) {
            Permutation tau = class_representative(beta);
            long long chm = mn_character(mu, beta);
            if (chm == 0) continue;
            long long cb = static_cast<long long>(conjugacy_class_size(beta));
            long long fixed = 0;
            for (const auto& p : basis)
                if (act(sigma, tau, p) == p) ++fixed;
            total += static_cast<__int128>(ca) * cb * fixed * chl * chm;
        }
    }
    __int128 order = static_cast<__int128>(factorial(n)) * factorial(m);
    if (total % order != 0) throw std::logic_error("d_char_oracle: inner product not integral");
    return static_cast<long long>(total / order);
}

// dim Hom(F_ell[PP^r], D_lambda (x) D_mu): the ground truth, valid for every
// ell including n >= ell. Feasibility bound |lambda|, |mu| <= 5.
inline long long d_module_oracle(const Partition& lambda, const Partition& mu, int r,
                                 std::uint64_t ell) {
    if (lambda.degenerate() || mu.degenerate())
        throw std::invalid_argument("d_module_oracle: degenerate partition");
    int n = static_cast<int>(lambda.size());
    int m = static_cast<int>(mu.size());
    if (n > 5 || m > 5) throw SizeLimitError("d_module_oracle: |lambda|, |mu| <= 5 required");
    if (r < 0 || r > std::min(n, m))
        throw std::invalid_argument("d_module_oracle: rank out of range");
    PrimeField field(ell);
    auto dl = irreducible_head(lambda, ell);
    auto dm = irreducible_head(mu, ell);
    auto target = tensor_product(dl, dm);
    auto source = pp_module(n, m, r, field);
    return hom_space_dim(source, target);
}

// Characteristic-zero sibling of the module oracle: dim Hom over Q from the
// partial-permutation module to Sp_lambda (x) Sp_mu. Equals d^r in the
// semisimple range.
inline long long d_specht_oracle_rational(const Partition& lambda, const Partition& mu, int r) {
    if (lambda.degenerate() || mu.degenerate())
        throw std::invalid_argument("d_specht_oracle_rational: degenerate partition");
    int n = static_cast<int>(lambda.size());
    int m = static_cast<int>(mu.size());
    if (n > 5 || m > 5) throw SizeLimitError("d_specht_oracle_rational: |lambda|, |mu| <= 5 required");
    if (r < 0 || r > std::min(n, m))
        throw std::invalid_argument("d_specht_oracle_rational: rank out of range");
    RationalField field;
    auto sl = specht_module(lambda, field);
    auto sm = specht_module(mu, field);
    auto target = tensor_product(sl.rep, sm.rep);
    auto source = pp_module(n, m, r, field);
    return hom_space_dim(source, target);
}

enum class OutOfRangePolicy { reject, module_oracle };

// Total multiplicity with the Par_0 conventions: 1 if either argument is the
// zero partition, 0 if either is the empty one. Outside the semisimple range
// the strip formula is not claimed; route to the module oracle only when the
// caller explicitly allows it.
inline long long d_total(const Partition& lambda, const Partition& mu, std::uint64_t ell,
                         OutOfRangePolicy policy = OutOfRangePolicy::reject) {
    if (lambda.is_empty() || mu.is_empty()) return 0;
    if (lambda.is_zero() || mu.is_zero()) return 1;
    long long n = lambda.size(), m = mu.size();
    bool semisimple = std::max(n, m) < static_cast<long long>(ell);
    long long total = 0;
    if (semisimple) {
        for (int r = 0; r <= std::min(n, m); ++r) total += d_rank(lambda, mu, r);
        return total;
    }
    if (policy == OutOfRangePolicy::reject)
        throw std::domain_error("d_total: outside the semisimple range (|lambda| or |mu| >= ell); "
                                "pass the module-oracle policy to force the brute-force route");
    for (int r = 0; r <= std::min(n, m); ++r)
        total += d_module_oracle(lambda, mu, static_cast<int>(r), ell);
    return total;
}

struct MultiplicityTable {
    Partition lambda, mu;
    std::vector<long long> per_rank;
    long long total = 0;
    std::string method;
    std::uint64_t ell = 0;
};

enum class MultMethod { strip, closed_form, char_oracle, module_oracle };

inline std::string to_string(MultMethod m) {
    switch (m) {
        case MultMethod::strip: return "strip";
        case MultMethod::closed_form: return "closed_form";
        case MultMethod::char_oracle: return "char_oracle";
        case MultMethod::module_oracle: return "module_oracle";
    }
    return "?";
}

inline MultiplicityTable multiplicity_table(const Partition& lambda, const Partition& mu,
                                            std::uint64_t ell, MultMethod method) {
    MultiplicityTable t;
    t.lambda = lambda;
    t.mu = mu;
    t.method = to_string(method);
    t.ell = ell;
    if (lambda.degenerate() || mu.degenerate()) {
        t.total = (lambda.is_empty() || mu.is_empty()) ? 0 : 1;
        return t;
    }
    long long n = lambda.size(), m = mu.size();
    int rmax = static_cast<int>(std::min(n, m));
    switch (method) {
        case MultMethod::strip:
            if (std::max(n, m) >= static_cast<long long>(ell))
                throw std::domain_error("strip method needs the semisimple range |lambda|,|mu| < ell");
            for (int r = 0; r <= rmax; ++r) t.per_rank.push_back(d_rank(lambda, mu, r));
            break;
        case MultMethod::closed_form: {
            if (n != m) throw std::domain_error("closed form needs |lambda| = |mu|");
            if (std::max(n, m) >= static_cast<long long>(ell))
                throw std::domain_error("closed form needs the semisimple range");
            // corank cells r = 1..n reported at rank n-r; the rank-n cell is
            // the excluded r = 0 entry, filled from the strip formula.
            for (int rank_idx = 0; rank_idx <= rmax; ++rank_idx)
                t.per_rank.push_back(rank_idx == n
                                         ? d_rank(lambda, mu, static_cast<int>(n))
                                         : d_closed_form(lambda, mu, static_cast<int>(n) - rank_idx));
            break;
        }
        case MultMethod::char_oracle:
            for (int r = 0; r <= rmax; ++r) t.per_rank.push_back(d_char_oracle(lambda, mu, r));
            break;
        case MultMethod::module_oracle:
            for (int r = 0; r <= rmax; ++r) t.per_rank.push_back(d_module_oracle(lambda, mu, r, ell));
            break;
    }
    for (long long v : t.per_rank) t.total += v;
    return t;
}

}  // namespace thetamult
