#pragma once

// Explicit models: the Young permutation module M_lambda on tabloids, the
// Specht module on the span of standard polytabloids, and the head D_lambda
// over F_ell as the quotient by the radical of the Gram form.

#include <map>
#include <stdexcept>
#include <vector>

#include "thetamult/exact_linalg.hpp"
#include "thetamult/matrix_rep.hpp"
#include "thetamult/partition.hpp"

namespace thetamult {

// Tabloid = row assignment: entry e lives in row row_of[e]. Basis listed in
// lexicographic order of the assignment vector.
inline std::vector<std::vector<int>> tabloid_basis(const Partition& lambda) {
    if (lambda.is_empty()) throw std::invalid_argument("tabloid_basis: empty partition");
    int n = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> out;
    std::vector<int> counts(lambda.rows());
    std::vector<int> acc(n);
    auto rec = [&](auto&& self, int e) -> void {
        if (e == n) {
            out.push_back(acc);
            return;
        }
        for (int r = 0; r < lambda.rows(); ++r) {
            if (counts[r] == lambda.parts()[r]) continue;
            counts[r]++;
            acc[e] = r;
            self(self, e + 1);
            counts[r]--;
        }
    };
    rec(rec, 0);
    return out;
}

// M_lambda: the permutation representation of S_n on tabloids.
template <class F>
MatrixRep<F> young_module(const Partition& lambda, F field) {
    if (lambda.degenerate() && !lambda.is_zero())
        throw std::invalid_argument("young_module: degenerate partition");
    int n = static_cast<int>(lambda.size());
    auto basis = tabloid_basis(lambda);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    int dim = static_cast<int>(basis.size());
    std::vector<ExactMatrix<F>> gens;
    std::vector<std::vector<int>> images;
    for (int g = 0; g + 1 < n; ++g) {
        std::vector<int> im(dim);
        for (int i = 0; i < dim; ++i) {
            std::vector<int> t = basis[i];
            std::swap(t[g], t[g + 1]);
            im[i] = index.at(t);
        }
        ExactMatrix<F> m(field, dim, dim);
        for (int i = 0; i < dim; ++i) m.at(im[i], i) = field.one();
        gens.push_back(std::move(m));
        images.push_back(std::move(im));
    }
    return MatrixRep<F>(GroupShape{{n}}, field, dim, std::move(gens), std::move(images));
}

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // 0-based entries

    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    }
};

// All standard tableaux of the given shape, sorted by row-reading word.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    if (lambda.is_empty()) throw std::invalid_argument("standard_tableaux: empty partition");
    int n = static_cast<int>(lambda.size());
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(lambda.rows());
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(StandardTableau{lambda, rows});
            return;
        }
        for (int r = 0; r < lambda.rows(); ++r) {
            int c = static_cast<int>(rows[r].size());
            if (c == lambda.parts()[r]) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) continue;
            rows[r].push_back(v);
            self(self, v + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

namespace detail {

// Polytabloid of T as a vector on the tabloid basis:
// e_T = sum over the column group of sgn(sigma) . {sigma T}.
template <class F>
std::vector<typename F::Elem> polytabloid(const StandardTableau& t,
                                          const std::map<std::vector<int>, int>& tabloid_index,
                                          F field, int dim) {
    int n = static_cast<int>(t.shape.size());
    int ncols = t.shape.part(0);
    std::vector<std::vector<int>> columns(ncols);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            columns[c].push_back(t.rows[r][c]);

    std::vector<typename F::Elem> vec(dim, field.zero());
    std::vector<int> row_of(n);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int e : t.rows[r]) row_of[e] = static_cast<int>(r);

    // Iterate over the column group: one permutation of each column's entries.
    std::vector<std::vector<int>> arrangements(ncols);
    for (int c = 0; c < ncols; ++c) arrangements[c] = columns[c];
    auto parity = [](const std::vector<int>& original, const std::vector<int>& arranged) {
        int inv = 0;
        std::vector<int> pos(original.size());
        std::map<int, int> orig_pos;
        for (std::size_t i = 0; i < original.size(); ++i) orig_pos[original[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < arranged.size(); ++i) pos[i] = orig_pos[arranged[i]];
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = i + 1; j < pos.size(); ++j)
                if (pos[i] > pos[j]) ++inv;
        return inv % 2;
    };
    auto rec = [&](auto&& self, int c, int sign) -> void {
        if (c == ncols) {
            // sigma maps the original column entry to the arranged one; the
            // tabloid of sigma T has the arranged entry in the original row.
            std::vector<int> tab(n);
            for (int col = 0; col < ncols; ++col)
                for (std::size_t k = 0; k < columns[col].size(); ++k)
                    tab[arrangements[col][k]] = row_of[columns[col][k]];
            int idx = tabloid_index.at(tab);
            vec[idx] = field.add(vec[idx], sign ? field.neg(field.one()) : field.one());
            return;
        }
        std::vector<int> arr = columns[c];
        std::sort(arr.begin(), arr.end());
        do {
            arrangements[c] = arr;
            self(self, c + 1, (sign + parity(columns[c], arr)) % 2);
        } while (std::next_permutation(arr.begin(), arr.end()));
        arrangements[c] = columns[c];
    };
    rec(rec, 0, 0);
    return vec;
}

}  // namespace detail

// The Specht module realized inside M_lambda, with its embedding matrix and
// the Gram form induced by the tabloid inner product.
template <class F>
struct SpechtModule {
    MatrixRep<F> rep;
    std::vector<StandardTableau> basis;
    ExactMatrix<F> embedding;  // tabloid-dim x f, columns are polytabloids
    ExactMatrix<F> gram;       // f x f
};

template <class F>
SpechtModule<F> specht_module(const Partition& lambda, F field) {
    if (lambda.degenerate() && !lambda.is_zero())
        throw std::invalid_argument("specht_module: degenerate partition");
    int n = static_cast<int>(lambda.size());
    auto tabloids = tabloid_basis(lambda);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < tabloids.size(); ++i) index[tabloids[i]] = static_cast<int>(i);
    int mdim = static_cast<int>(tabloids.size());

    auto tabs = standard_tableaux(lambda);
    int f = static_cast<int>(tabs.size());
    ExactMatrix<F> embed(field, mdim, f);
    for (int j = 0; j < f; ++j) {
        auto v = detail::polytabloid(tabs[j], index, field, mdim);
        for (int i = 0; i < mdim; ++i) embed.at(i, j) = v[i];
    }

    // Generator action: permute tabloid coordinates of each polytabloid, then
    // express in the standard polytabloid basis (unique: the embedding has
    // full column rank over every field).
    std::vector<ExactMatrix<F>> gens;
    for (int g = 0; g + 1 < n; ++g) {
        ExactMatrix<F> moved(field, mdim, f);
        for (int i = 0; i < mdim; ++i) {
            std::vector<int> t = tabloids[i];
            std::swap(t[g], t[g + 1]);
            int dst = index.at(t);
            for (int j = 0; j < f; ++j) moved.at(dst, j) = embed.at(i, j);
        }
        gens.push_back(solve_full_column_rank(embed, moved));
    }

    ExactMatrix<F> gram = embed.transpose().mul(embed);
    MatrixRep<F> rep(GroupShape{{n}}, field, f, std::move(gens));
    return SpechtModule<F>{std::move(rep), std::move(tabs), std::move(embed), std::move(gram)};
}

// D_lambda over F_ell: the Specht module modulo the radical of its Gram form.
// Requires lambda l-regular. The quotient is computed on the complement of
// the radical spanned by the first independent standard basis vectors.
inline MatrixRep<PrimeField> irreducible_head(const Partition& lambda, std::uint64_t ell) {
    if (!is_l_regular(lambda, static_cast<long long>(ell)))
        throw std::invalid_argument("irreducible_head: partition is not l-regular");
    PrimeField field(ell);
    auto sp = specht_module(lambda, field);
    auto rad = kernel_basis(sp.gram);
    int f = sp.rep.dim();
    int r = static_cast<int>(rad.size());
    if (r == 0) return sp.rep;

    ExactMatrix<PrimeField> radmat(field, f, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < f; ++i) radmat.at(i, j) = rad[j][i];

    // Pick complement columns greedily in basis order.
    std::vector<int> comp;
    {
        ExactMatrix<PrimeField> probe = radmat;
        int cur_rank = rank(probe);
        for (int j = 0; j < f && static_cast<int>(comp.size()) < f - r; ++j) {
            ExactMatrix<PrimeField> ext(field, f, probe.cols() + 1);
            for (int i = 0; i < f; ++i) {
                for (int c = 0; c < probe.cols(); ++c) ext.at(i, c) = probe.at(i, c);
                ext.at(i, probe.cols()) = (i == j) ? field.one() : field.zero();
            }
            int next_rank = rank(ext);
            if (next_rank > cur_rank) {
                comp.push_back(j);
                probe = std::move(ext);
                cur_rank = next_rank;
            }
        }
    }
    int d = static_cast<int>(comp.size());

    // Basis change matrix [C | R] with C the chosen standard columns.
    ExactMatrix<PrimeField> cr(field, f, f);
    for (int j = 0; j < d; ++j) cr.at(comp[j], j) = field.one();
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < f; ++i) cr.at(i, d + j) = radmat.at(i, j);

    std::vector<ExactMatrix<PrimeField>> qgens;
    for (const auto& sg : sp.rep.generators()) {
        ExactMatrix<PrimeField> picked(field, f, d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < f; ++i) picked.at(i, j) = sg.at(i, comp[j]);
        ExactMatrix<PrimeField> coords = solve_full_column_rank(cr, picked);
        ExactMatrix<PrimeField> q(field, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) q.at(i, j) = coords.at(i, j);
        qgens.push_back(std::move(q));
    }
    int n = static_cast<int>(lambda.size());
    return MatrixRep<PrimeField>(GroupShape{{n}}, field, d, std::move(qgens));
}

}  // namespace thetamult
