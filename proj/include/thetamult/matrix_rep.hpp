#pragma once

// Explicit matrix models of representations of S_n and S_n x S_m over exact
// fields, plus the equivariant-Hom-space dimension solver that realizes every
// "dim Hom" in the multiplicity computations.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "thetamult/exact_linalg.hpp"
#include "thetamult/permutation.hpp"

namespace thetamult {

// S_{f1} or S_{f1} x S_{f2}; generators are the adjacent transpositions of
// each factor, flattened factor-major.
struct GroupShape {
    std::vector<int> factors;

    int generator_count() const {
        int g = 0;
        for (int f : factors) g += std::max(0, f - 1);
        return g;
    }
    // (factor, index within factor) of flattened generator g.
    std::pair<int, int> locate(int g) const {
        for (std::size_t f = 0; f < factors.size(); ++f) {
            int cnt = std::max(0, factors[f] - 1);
            if (g < cnt) return {static_cast<int>(f), g};
            g -= cnt;
        }
        throw std::out_of_range("generator index");
    }
    bool operator==(const GroupShape& o) const { return factors == o.factors; }
};

// A representation given by one matrix per Coxeter generator. The generator
// matrices are verified against the Coxeter relations on construction, so a
// bad action function cannot produce a silently wrong module. When the
// representation is a permutation representation the basis images are kept
// alongside the matrices; hom_space_dim exploits them.
template <class F>
class MatrixRep {
public:
    MatrixRep(GroupShape group, F field, int dim, std::vector<ExactMatrix<F>> gens,
              std::vector<std::vector<int>> perm_images = {})
        : group_(std::move(group)), field_(field), dim_(dim), gens_(std::move(gens)),
          perm_images_(std::move(perm_images)) {
        if (static_cast<int>(gens_.size()) != group_.generator_count())
            throw std::invalid_argument("generator count does not match group shape");
        for (const auto& g : gens_)
            if (g.rows() != dim_ || g.cols() != dim_)
                throw std::invalid_argument("generator matrix has wrong shape");
        if (!perm_images_.empty() && perm_images_.size() != gens_.size())
            throw std::invalid_argument("permutation images must cover all generators");
        for (std::size_t g = 0; g < perm_images_.size(); ++g) {
            if (static_cast<int>(perm_images_[g].size()) != dim_)
                throw std::invalid_argument("permutation image has wrong length");
            for (int j = 0; j < dim_; ++j)
                for (int i = 0; i < dim_; ++i) {
                    bool expect_one = (perm_images_[g][j] == i);
                    const auto& v = gens_[g].at(i, j);
                    if (expect_one ? !field_.eq(v, field_.one()) : !field_.is_zero(v))
                        throw std::invalid_argument("permutation images disagree with matrices");
                }
        }
        verify_coxeter_relations();
    }

    const GroupShape& group() const { return group_; }
    const F& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<ExactMatrix<F>>& generators() const { return gens_; }
    const ExactMatrix<F>& generator(int i) const { return gens_.at(i); }
    bool is_permutation_rep() const { return !perm_images_.empty(); }
    const std::vector<std::vector<int>>& permutation_images() const { return perm_images_; }

    // Product of generator matrices along a word (left to right).
    ExactMatrix<F> evaluate_word(const std::vector<int>& word) const {
        ExactMatrix<F> m = ExactMatrix<F>::identity(field_, dim_);
        for (int g : word) m = m.mul(gens_.at(g));
        return m;
    }

    // Matrix of a group element, one permutation per factor.
    ExactMatrix<F> evaluate(const std::vector<Permutation>& element) const {
        if (element.size() != group_.factors.size())
            throw std::invalid_argument("element has wrong number of factors");
        ExactMatrix<F> m = ExactMatrix<F>::identity(field_, dim_);
        int offset = 0;
        for (std::size_t f = 0; f < element.size(); ++f) {
            if (element[f].n() != group_.factors[f])
                throw std::invalid_argument("factor degree mismatch");
            for (int i : reduced_word(element[f])) m = m.mul(gens_.at(offset + i));
            offset += std::max(0, group_.factors[f] - 1);
        }
        return m;
    }

    typename F::Elem trace(const ExactMatrix<F>& m) const {
        auto t = field_.zero();
        for (int i = 0; i < m.rows(); ++i) t = field_.add(t, m.at(i, i));
        return t;
    }

private:
    void verify_coxeter_relations() const {
        if (!perm_images_.empty())
            verify_on([&](int g) { return perm_images_[g]; });
        else
            verify_on([&](int g) { return gens_[g]; });
    }

    static std::vector<int> compose_images(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
        return r;
    }
    static bool images_identity(const std::vector<int>& a) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != static_cast<int>(i)) return false;
        return true;
    }

    template <class GetGen>
    void verify_on(GetGen get) const {
        const int G = static_cast<int>(gens_.size());
        auto mulg = [&](const auto& a, const auto& b) {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::vector<int>>)
                return compose_images(a, b);
            else
                return a.mul(b);
        };
        auto is_id = [&](const auto& a) {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::vector<int>>)
                return images_identity(a);
            else
                return a == ExactMatrix<F>::identity(field_, dim_);
        };
        for (int i = 0; i < G; ++i) {
            if (!is_id(mulg(get(i), get(i))))
                throw std::logic_error("generator is not an involution");
            for (int j = i + 1; j < G; ++j) {
                auto [fi, ii] = group_.locate(i);
                auto [fj, ij] = group_.locate(j);
                auto ab = mulg(get(i), get(j));
                auto ba = mulg(get(j), get(i));
                if (fi == fj && std::abs(ii - ij) == 1) {
                    if (!(mulg(ab, get(i)) == mulg(ba, get(j))))
                        throw std::logic_error("braid relation fails");
                } else {
                    if (!(ab == ba)) throw std::logic_error("commutation relation fails");
                }
            }
        }
    }

    GroupShape group_;
    F field_;
    int dim_;
    std::vector<ExactMatrix<F>> gens_;
    std::vector<std::vector<int>> perm_images_;
};

// Contragredient model: g -> transpose(g^{-1}). Generators are involutions,
// so this is just the transpose generator by generator.
template <class F>
MatrixRep<F> contragredient(const MatrixRep<F>& rep) {
    std::vector<ExactMatrix<F>> gens;
    gens.reserve(rep.generators().size());
    for (const auto& g : rep.generators()) gens.push_back(g.transpose());
    return MatrixRep<F>(rep.group(), rep.field(), rep.dim(), std::move(gens));
}

// Outer tensor product: a rep of S_n and a rep of S_m give a rep of
// S_n x S_m on the tensor space, basis ordered row-major (a-index major).
template <class F>
MatrixRep<F> tensor_product(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    if (a.group().factors.size() != 1 || b.group().factors.size() != 1)
        throw std::invalid_argument("tensor_product expects single-factor representations");
    if (!(a.field() == b.field())) throw std::invalid_argument("tensor_product: field mismatch");
    const F& fld = a.field();
    int dim = a.dim() * b.dim();
    GroupShape shape{{a.group().factors[0], b.group().factors[0]}};
    std::vector<ExactMatrix<F>> gens;
    std::vector<std::vector<int>> images;
    bool perms = a.is_permutation_rep() && b.is_permutation_rep();
    auto kron = [&](const ExactMatrix<F>& x, const ExactMatrix<F>& y) {
        ExactMatrix<F> r(fld, dim, dim);
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) {
                if (fld.is_zero(x.at(i, j))) continue;
                for (int k = 0; k < y.rows(); ++k)
                    for (int l = 0; l < y.cols(); ++l)
                        if (!fld.is_zero(y.at(k, l)))
                            r.at(i * y.rows() + k, j * y.cols() + l) =
                                fld.mul(x.at(i, j), y.at(k, l));
            }
        return r;
    };
    ExactMatrix<F> ia = ExactMatrix<F>::identity(fld, a.dim());
    ExactMatrix<F> ib = ExactMatrix<F>::identity(fld, b.dim());
    for (int g = 0; g < static_cast<int>(a.generators().size()); ++g) {
        gens.push_back(kron(a.generator(g), ib));
        if (perms) {
            std::vector<int> im(dim);
            for (int i = 0; i < a.dim(); ++i)
                for (int k = 0; k < b.dim(); ++k)
                    im[i * b.dim() + k] = a.permutation_images()[g][i] * b.dim() + k;
            images.push_back(std::move(im));
        }
    }
    for (int g = 0; g < static_cast<int>(b.generators().size()); ++g) {
        gens.push_back(kron(ia, b.generator(g)));
        if (perms) {
            std::vector<int> im(dim);
            for (int i = 0; i < a.dim(); ++i)
                for (int k = 0; k < b.dim(); ++k)
                    im[i * b.dim() + k] = i * b.dim() + b.permutation_images()[g][k];
            images.push_back(std::move(im));
        }
    }
    return MatrixRep<F>(shape, fld, dim, std::move(gens), std::move(images));
}

// The regular bimodule F[S_n] as a rep of S_n x S_n: basis S_n in
// lexicographic one-line order, (sigma, tau) . w = sigma w tau^{-1}
// (the right factor acts through the inverse twist, matching the
// right-module convention).
template <class F>
MatrixRep<F> regular_bimodule(int n, F field) {
    std::vector<Permutation> basis;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
        basis.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    auto index_of = [&](const Permutation& w) {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        return static_cast<int>(it - basis.begin());
    };
    int dim = static_cast<int>(basis.size());
    std::vector<ExactMatrix<F>> gens;
    std::vector<std::vector<int>> images;
    auto push_gen = [&](auto action) {
        std::vector<int> im(dim);
        for (int i = 0; i < dim; ++i) im[i] = index_of(action(basis[i]));
        ExactMatrix<F> m(field, dim, dim);
        for (int i = 0; i < dim; ++i) m.at(im[i], i) = field.one();
        gens.push_back(std::move(m));
        images.push_back(std::move(im));
    };
    for (int i = 0; i + 1 < n; ++i) {
        Permutation s = Permutation::transposition(n, i);
        push_gen([&](const Permutation& w) { return s.compose(w); });
    }
    for (int i = 0; i + 1 < n; ++i) {
        Permutation s = Permutation::transposition(n, i);
        push_gen([&](const Permutation& w) { return w.compose(s); });
    }
    return MatrixRep<F>(GroupShape{{n, n}}, field, dim, std::move(gens), std::move(images));
}

namespace detail {

// dim of { c : for all basis points x and generators g,
//               B(g) W_x c = W_{g.x} c }  summed over orbits, where W_x is the
// product of B-generator matrices along a spanning-tree path to x. This is
// Hom(F[X], B) = sum over orbits of B^{Stab}, assembled from Schreier
// consistency relations.
template <class F>
int hom_dim_from_permutation_source(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    const F& fld = b.field();
    const int dimA = a.dim(), dimW = b.dim();
    const auto& images = a.permutation_images();
    const int G = static_cast<int>(images.size());
    std::vector<int> orbit_id(dimA, -1);
    int total = 0;
    for (int root = 0; root < dimA; ++root) {
        if (orbit_id[root] >= 0) continue;
        std::vector<int> orbit;
        std::vector<ExactMatrix<F>> path(1, ExactMatrix<F>::identity(fld, dimW));
        std::vector<int> path_index(dimA, -1);
        orbit.push_back(root);
        orbit_id[root] = root;
        path_index[root] = 0;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            int x = orbit[head];
            for (int g = 0; g < G; ++g) {
                int y = images[g][x];
                if (orbit_id[y] >= 0) continue;
                orbit_id[y] = root;
                path_index[y] = static_cast<int>(path.size());
                path.push_back(b.generator(g).mul(path[path_index[x]]));
                orbit.push_back(y);
            }
        }
        // Stack the consistency constraints and take the kernel.
        ExactMatrix<F> cons(fld, static_cast<int>(orbit.size()) * G * dimW, dimW);
        int row = 0;
        for (int x : orbit) {
            const auto& wx = path[path_index[x]];
            for (int g = 0; g < G; ++g) {
                int y = images[g][x];
                ExactMatrix<F> lhs = b.generator(g).mul(wx);
                const auto& rhs = path[path_index[y]];
                for (int i = 0; i < dimW; ++i, ++row)
                    for (int j = 0; j < dimW; ++j)
                        cons.at(row, j) = fld.sub(lhs.at(i, j), rhs.at(i, j));
            }
        }
        total += dimW - rref(std::move(cons)).rank;
    }
    return total;
}

template <class F>
int hom_dim_stacked(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    const F& fld = a.field();
    const int dimA = a.dim(), dimB = b.dim();
    const int unknowns = dimA * dimB;  // T is dimB x dimA, vec index i*dimA+j
    const int G = static_cast<int>(a.generators().size());
    ExactMatrix<F> sys(fld, G * unknowns, unknowns);
    int row = 0;
    for (int g = 0; g < G; ++g) {
        const auto& ag = a.generator(g);
        const auto& bg = b.generator(g);
        for (int i = 0; i < dimB; ++i)
            for (int j = 0; j < dimA; ++j, ++row) {
                // (T ag - bg T)_{ij} = sum_k T_{ik} ag_{kj} - sum_k bg_{ik} T_{kj}
                for (int k = 0; k < dimA; ++k)
                    if (!fld.is_zero(ag.at(k, j)))
                        sys.at(row, i * dimA + k) =
                            fld.add(sys.at(row, i * dimA + k), ag.at(k, j));
                for (int k = 0; k < dimB; ++k)
                    if (!fld.is_zero(bg.at(i, k)))
                        sys.at(row, k * dimA + j) =
                            fld.sub(sys.at(row, k * dimA + j), bg.at(i, k));
            }
    }
    return unknowns - rref(std::move(sys)).rank;
}

}  // namespace detail

// Dimension of { T : T A(g) = B(g) T for every generator g }, the space of
// equivariant maps A -> B. Assembled over generators only; correctness for
// the full group follows from the relations checked at construction.
template <class F>
int hom_space_dim(const MatrixRep<F>& a, const MatrixRep<F>& b, bool force_generic = false) {
    if (!(a.group() == b.group()))
        throw std::invalid_argument("hom_space_dim: group mismatch");
    if (!(a.field() == b.field()))
        throw std::invalid_argument("hom_space_dim: field mismatch");
    if (a.dim() == 0 || b.dim() == 0) return 0;
    if (a.generators().empty()) return a.dim() * b.dim();
    if (a.is_permutation_rep() && !force_generic)
        return detail::hom_dim_from_permutation_source(a, b);
    return detail::hom_dim_stacked(a, b);
}

}  // namespace thetamult
