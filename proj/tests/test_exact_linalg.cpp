#include <catch2/catch_amalgamated.hpp>

#include "thetamult/exact_linalg.hpp"
#include "thetamult/matrix_rep.hpp"
#include "thetamult/specht.hpp"

using namespace thetamult;

namespace {

// Deterministic pseudo-random entries.
struct Lcg {
    std::uint64_t s;
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
};

template <class F>
ExactMatrix<F> random_matrix(F field, int rows, int cols, Lcg& g) {
    ExactMatrix<F> m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = field.from_int(static_cast<long long>(g.next() % 19) - 9);
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.sub(2, 5) == 4);
    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("rref basics") {
    RationalField q;
    auto id3 = ExactMatrix<RationalField>::identity(q, 3);
    auto rr = rref(id3);
    CHECK(rr.rank == 3);
    CHECK(rr.matrix == id3);

    ExactMatrix<RationalField> z(q, 2, 5);
    CHECK(rref(z).rank == 0);

    ExactMatrix<RationalField> m(q, 2, 2);
    m.at(0, 0) = q.from_int(1);
    m.at(0, 1) = q.from_int(2);
    m.at(1, 0) = q.from_int(2);
    m.at(1, 1) = q.from_int(4);
    CHECK(rref(m).rank == 1);
}

TEST_CASE("rref is idempotent") {
    Lcg g{12345};
    RationalField q;
    PrimeField f5(5);
    for (int t = 0; t < 10; ++t) {
        auto a = random_matrix(q, 4, 6, g);
        auto r1 = rref(a);
        auto r2 = rref(r1.matrix);
        CHECK(r1.matrix == r2.matrix);
        auto b = random_matrix(f5, 5, 4, g);
        auto s1 = rref(b);
        CHECK(s1.matrix == rref(s1.matrix).matrix);
    }
}

TEST_CASE("kernel basics") {
    RationalField q;
    auto idn = ExactMatrix<RationalField>::identity(q, 4);
    CHECK(kernel_basis(idn).empty());

    ExactMatrix<RationalField> z(q, 3, 3);
    CHECK(kernel_basis(z).size() == 3);

    PrimeField f3(3);
    ExactMatrix<PrimeField> row(f3, 1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    auto kb = kernel_basis(row);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == std::vector<std::uint64_t>{2, 1});
}

TEST_CASE("rank plus nullity equals column count") {
    Lcg g{999};
    RationalField q;
    PrimeField f7(7);
    for (int t = 0; t < 12; ++t) {
        auto a = random_matrix(q, 3 + t % 3, 5, g);
        CHECK(rank(a) + static_cast<int>(kernel_basis(a).size()) == a.cols());
        auto b = random_matrix(f7, 4, 3 + t % 4, g);
        CHECK(rank(b) + static_cast<int>(kernel_basis(b).size()) == b.cols());
        for (const auto& v : kernel_basis(b)) {
            auto out = b.apply(v);
            for (const auto& x : out) CHECK(f7.is_zero(x));
        }
    }
}

TEST_CASE("hom space dimensions for S_2") {
    RationalField q;
    // trivial and sign representations of S_2
    ExactMatrix<RationalField> one(q, 1, 1), minus(q, 1, 1);
    one.at(0, 0) = q.one();
    minus.at(0, 0) = q.neg(q.one());
    MatrixRep<RationalField> triv(GroupShape{{2}}, q, 1, {one});
    MatrixRep<RationalField> sign(GroupShape{{2}}, q, 1, {minus});
    CHECK(hom_space_dim(triv, sign) == 0);
    CHECK(hom_space_dim(triv, triv) == 1);

    PrimeField f2(2);
    ExactMatrix<PrimeField> swap2(f2, 2, 2);
    swap2.at(0, 1) = f2.one();
    swap2.at(1, 0) = f2.one();
    MatrixRep<PrimeField> reg(GroupShape{{2}}, f2, 2, {swap2}, {{1, 0}});
    ExactMatrix<PrimeField> one2(f2, 1, 1);
    one2.at(0, 0) = f2.one();
    MatrixRep<PrimeField> triv2(GroupShape{{2}}, f2, 1, {one2});
    CHECK(hom_space_dim(reg, triv2) == 1);
    CHECK(hom_space_dim(reg, triv2, /*force_generic=*/true) == 1);
}

TEST_CASE("schur's lemma via the explicit solver") {
    RationalField q;
    auto sp = specht_module(Partition({2, 1}), q);
    CHECK(hom_space_dim(sp.rep, sp.rep) == 1);
}

TEST_CASE("hom dimension matches on transposed-inverse models") {
    RationalField q;
    for (auto shape : {std::vector<int>{2, 1}, std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
        auto a = specht_module(Partition(shape), q);
        auto b = young_module(Partition(shape), q);
        CHECK(hom_space_dim(a.rep, b) == hom_space_dim(contragredient(a.rep), contragredient(b)));
        CHECK(hom_space_dim(b, a.rep) == hom_space_dim(contragredient(b), contragredient(a.rep)));
    }
}

TEST_CASE("solve_full_column_rank recovers coefficients") {
    RationalField q;
    Lcg g{777};
    auto a = random_matrix(q, 5, 3, g);
    while (rank(a) < 3) a = random_matrix(q, 5, 3, g);
    auto x = random_matrix(q, 3, 2, g);
    auto b = a.mul(x);
    CHECK(solve_full_column_rank(a, b) == x);
}
