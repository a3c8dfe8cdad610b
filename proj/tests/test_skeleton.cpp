#include <catch2/catch_amalgamated.hpp>

#include "thetamult/skeleton.hpp"

using namespace thetamult;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("IrrParam validation") {
    LineContext o2(2, 1, 5);
    CHECK_THROWS_AS(IrrParam(Multisegment(o2, {Segment(o2, 2, 4), Segment(o2, 4, 6)})),
                    std::invalid_argument);  // periodic
    CHECK_THROWS_AS(IrrParam(Multisegment(o2, {Segment(o2, 0, 0), Segment(o2, 1, 1)})),
                    std::invalid_argument);  // mixed lattices
    CHECK(IrrParam(m_of_lambda(P({2, 1}), o2)).degree() == 6);
}

TEST_CASE("saturated_split uses the right-endpoint rule") {
    LineContext o2(2, 1, 5);
    auto m = m_of_lambda(P({2, 1}), o2);  // [1,4] + [1,2], right endpoints even
    auto [sat, red] = saturated_split(m, 0);
    CHECK(sat.count() == 2);
    CHECK(red.empty());

    LineContext o3(3, 1, 5);
    Multisegment single(o3, {Segment(o3, 2, 4)});  // [1,2], right endpoint 2 != 0 mod 3
    auto [sat2, red2] = saturated_split(single, 0);
    CHECK(sat2.empty());
    CHECK(red2.count() == 1);

    auto [se, re] = saturated_split(Multisegment(o2), 0);
    CHECK(se.empty());
    CHECK(re.empty());
}

TEST_CASE("sk on positioned dictionary pairs is the identity") {
    for (int d : {1, 2, 3}) {
        for (std::uint64_t ell : {5ULL, 7ULL}) {
            LineContext line(d, 1, ell);
            for (int a = 0; a <= 3; ++a)
                for (const auto& lambda : l_regular_partitions_of(a, ell))
                    for (int b = 0; b <= 3; ++b)
                        for (const auto& mu : l_regular_partitions_of(b, ell)) {
                            long long n = lambda.size() * d, m = mu.size() * d;
                            IrrParam pi = positioned_param_first(lambda, line, m);
                            IrrParam pip = positioned_param_second(mu, line);
                            auto r = sk(pi, pip);
                            INFO("d=" << d << " ell=" << ell << " lambda=" << lambda.to_string()
                                      << " mu=" << mu.to_string());
                            CHECK(r.first == (n == 0 ? Partition::zero() : lambda));
                            CHECK(r.second == (m == 0 ? Partition::zero() : mu));
                        }
        }
    }
}

TEST_CASE("sk first components have at most n/d boxes on the test family") {
    for (int d : {1, 2, 3}) {
        LineContext line(d, 1, 7);
        for (int a = 1; a <= 4; ++a)
            for (const auto& lambda : l_regular_partitions_of(a, 7))
                for (int b = 1; b <= 3; ++b)
                    for (const auto& mu : l_regular_partitions_of(b, 7)) {
                        long long n = lambda.size() * d, m = mu.size() * d;
                        auto r = sk(positioned_param_first(lambda, line, m),
                                    positioned_param_second(mu, line));
                        if (!r.first.is_empty()) CHECK(r.first.size() * d <= n);
                        if (!r.second.is_empty()) CHECK(r.second.size() * d <= m);
                    }
    }
}

TEST_CASE("trivial representations: theta is 1 + min(n/d, m/d)") {
    for (int d : {1, 2, 3}) {
        LineContext line(d, 1, 7);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                long long n = a * d, m = b * d;
                long long got = theta_multiplicity(trivial_rep_param(n, line),
                                                   trivial_rep_param(m, line));
                INFO("d=" << d << " n=" << n << " m=" << m);
                CHECK(got == 1 + std::min(a, b));
            }
    }
}

TEST_CASE("step-3 parity: n != m mod d yields the formal zero (or empty in strict mode)") {
    LineContext line(3, 1, 7);
    IrrParam pi = trivial_rep_param(3, line);
    IrrParam pip = trivial_rep_param(4, line);
    // 1_4 on the d=3 line: step 1 consumes nothing; the swapped pair fires
    // and mismatches, so this lands in empty, not the parity case.
    auto r = sk(pi, pip);
    CHECK(r.vanished());

    // A genuine parity case: zero-degree against 1_4 with d = 3.
    IrrParam empty_param{Multisegment(line)};
    auto r2 = sk(empty_param, pip);
    CHECK(r2.first.is_zero());
    CHECK(r2.second.is_zero());
    auto r3 = sk(empty_param, pip, /*strict_zero_mode=*/true);
    CHECK(r3.vanished());
    CHECK(theta_multiplicity(empty_param, pip) == 1);
    CHECK(theta_multiplicity(empty_param, pip, /*strict_zero_mode=*/true) == 0);
}

TEST_CASE("step-1 matching is taken modulo the line") {
    // on the o=2 line the dual of [0,1] is [-1,0] = [1,2] mod 2, so this
    // pair matches, consumes everything and lands on the formal zero pair
    LineContext o2(2, 1, 7);
    IrrParam pi2(Multisegment(o2, {Segment(o2, 2, 4)}));
    IrrParam pip2(Multisegment(o2, {Segment(o2, 0, 2)}));
    auto r2 = sk(pi2, pip2);
    CHECK(r2.first.is_zero());
    CHECK(theta_multiplicity(pi2, pip2) == 1);
}

TEST_CASE("step-1 mismatch vanishes") {
    LineContext line(3, 1, 7);
    // both sides reduced at their rho-points, but [1,2] and dual([0,1])
    // = [-1,0] are in different classes mod 3
    IrrParam pi(Multisegment(line, {Segment(line, 2, 4)}));
    IrrParam pip(Multisegment(line, {Segment(line, 0, 2)}));
    auto r = sk(pi, pip);
    CHECK(r.vanished());
    CHECK(theta_multiplicity(pi, pip) == 0);
}

TEST_CASE("banal exponents vanish and d_0 = n/d on trivials") {
    for (int d : {2, 3}) {
        LineContext line(d, 1, 7);
        for (long long n = 1; n < d; ++n) {
            IrrParam pi = trivial_rep_param(n, line);
            for (long long i = 0; i < d; ++i) CHECK(d_i_exponent(pi, i) == 0);
        }
        for (long long a = 1; a <= 3; ++a)
            CHECK(d_i_exponent(trivial_rep_param(a * d, line), 0) == a);
    }
}

TEST_CASE("exponents are periodic in i") {
    LineContext line(3, 1, 7);
    IrrParam pi = trivial_rep_param(6, line);
    for (long long i = 0; i < 3; ++i) CHECK(d_i_exponent(pi, i) == d_i_exponent(pi, i + 3));
}

TEST_CASE("fourier symmetry on the tested families") {
    for (int d : {2, 3}) {
        LineContext line(d, 1, 7);
        auto check_pair = [&](const IrrParam& pi, const IrrParam& pip) {
            long long n = pi.degree(), m = pip.degree();
            long long lhs = theta_multiplicity(pi, pip);
            long long rhs = theta_multiplicity(pi.dual().twist(2 * m), pip.dual().twist(-2 * n));
            CHECK(lhs == rhs);
        };
        for (long long a = 1; a <= 3; ++a)
            for (long long b = 1; b <= 3; ++b)
                check_pair(trivial_rep_param(a * d, line), trivial_rep_param(b * d, line));
        for (const auto& lambda : partitions_of(2))
            for (const auto& mu : partitions_of(2))
                check_pair(positioned_param_first(lambda, line, 2 * d),
                           positioned_param_second(mu, line));
        for (long long n = 1; n < d; ++n)
            check_pair(trivial_rep_param(n, line), trivial_rep_param(n, line));
    }
}

TEST_CASE("d = 1 base case extracts the dictionary partitions") {
    LineContext o1(1, 1, 5);
    IrrParam pi(m_of_lambda(P({2, 1}), o1));
    IrrParam pip(m_of_lambda(P({2, 1}), o1));
    auto r = sk(pi, pip);
    CHECK(r.first == P({2, 1}));
    CHECK(r.second == P({2, 1}));
    CHECK(theta_multiplicity(pi, pip) == 4);
}

TEST_CASE("sk_m: dictionary members recover lambda and are stable under m -> m + d") {
    for (int d : {1, 2, 3}) {
        LineContext line(d, 1, 7);
        for (int a = 1; a <= 3; ++a)
            for (const auto& lambda : l_regular_partitions_of(a, 7)) {
                long long n = lambda.size() * d;
                for (long long m : {n, n + d, n + 2 * d}) {
                    IrrParam pi = positioned_param_first(lambda, line, m);
                    INFO("d=" << d << " lambda=" << lambda.to_string() << " m=" << m);
                    CHECK(sk_m(pi, m) == lambda);
                }
            }
    }
}

TEST_CASE("sk_m on off-parity degrees is the formal zero partition") {
    LineContext line(3, 1, 7);
    Partition lambda({2});
    long long n = 6;
    IrrParam pi = positioned_param_first(lambda, line, /*m=*/7);
    CHECK(pi.degree() == n);
    auto got = sk_m(pi, 7);  // 7 != 6 mod 3
    CHECK(got.is_zero());
}

TEST_CASE("sk rejects mismatched lines") {
    LineContext a(2, 1, 5), b(3, 1, 5);
    IrrParam pa{Multisegment(a)}, pb{Multisegment(b)};
    CHECK_THROWS_AS(sk(pa, pb), std::invalid_argument);
    LineContext deg2(2, 2, 5);
    IrrParam pc{Multisegment(deg2)};
    CHECK_THROWS_AS(sk(pc, pc), std::invalid_argument);
}

TEST_CASE("traces record the path taken") {
    LineContext line(2, 1, 7);
    SkeletonResult r;
    theta_multiplicity(trivial_rep_param(2, line), trivial_rep_param(4, line), false,
                       OutOfRangePolicy::reject, &r);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace.front().step == "input");
    bool saw_step3 = false;
    for (const auto& t : r.trace)
        if (t.step.rfind("step3", 0) == 0) saw_step3 = true;
    CHECK(saw_step3);
}

TEST_CASE("out-of-range theta routes through the policy flag") {
    // d = 1, ell = 3: sk gives ((3),(3)) whose size meets ell, so the strip
    // route is rejected and the module oracle must be requested explicitly.
    LineContext line(1, 1, 3);
    IrrParam pi(m_of_lambda(P({3}), line));
    CHECK_THROWS_AS(theta_multiplicity(pi, pi), std::domain_error);
    CHECK(theta_multiplicity(pi, pi, false, OutOfRangePolicy::module_oracle) == 4);
}
