#pragma once

// The recursive skeleton map on multisegment parameters and the theta
// multiplicity dim Hom(S(Mat_{n,m}), pi (x) pi') = d_{sk(pi, pi')}.
//
// Everything runs on one unramified-type line with o = d and deg_point = 1.
// Positions are exponents of |.|, stored doubled so the (n-1)/2-style twists
// stay integral. The saturated/reduced split of a parameter at a point rho
// is the right-endpoint rule: segments ending at rho's class are saturated.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetamult/multisegment.hpp"
#include "thetamult/partial_perm.hpp"
#include "thetamult/partition.hpp"

namespace thetamult {

// Zelevinsky-style parameter of an irreducible: an aperiodic multisegment on
// a single line (and a single endpoint lattice; mixing the integer and
// half-integer lattices would mix cuspidal lines).
struct IrrParam {
    Multisegment m;

    explicit IrrParam(Multisegment mm) : m(std::move(mm)) {
        if (!is_aperiodic(m)) throw std::invalid_argument("IrrParam: multisegment is not aperiodic");
        for (const auto& s : m.segments())
            if (((s.a2 - m.segments().front().a2) % 2 + 2) % 2 != 0)
                throw std::invalid_argument(
                    "IrrParam: mixed endpoint lattices (mixed cuspidal lines) are not modeled");
    }

    const LineContext& line() const { return m.line(); }
    long long degree() const { return m.degree(); }

    IrrParam dual() const { return IrrParam(m.dual()); }
    IrrParam twist(long long i_doubled) const { return IrrParam(m.twist(i_doubled)); }
};

struct TraceStep {
    std::string step;
    std::string info;
};

struct SkeletonResult {
    Partition first, second;
    std::vector<TraceStep> trace;

    bool vanished() const { return first.is_empty() || second.is_empty(); }
};

// Split m at the point rho (doubled position): segments whose right endpoint
// is congruent to rho mod o are the saturated part, the rest the reduced one.
inline std::pair<Multisegment, Multisegment> saturated_split(const Multisegment& m,
                                                             long long rho_pos_doubled) {
    long long mod = 2LL * m.line().o;
    std::vector<Segment> sat, red;
    for (const auto& s : m.segments()) {
        long long diff = ((s.b2 - rho_pos_doubled) % mod + mod) % mod;
        (diff == 0 ? sat : red).push_back(s);
    }
    return {Multisegment(m.line(), std::move(sat)), Multisegment(m.line(), std::move(red))};
}

namespace detail {

inline Partition lengths_over_o(const Multisegment& m) {
    if (m.empty()) return Partition::zero();
    return lambda_of_m(m);
}

inline void note(std::vector<TraceStep>& trace, std::string step, std::string info) {
    trace.push_back(TraceStep{std::move(step), std::move(info)});
}

struct SkEngine {
    bool strict_zero = false;
    std::vector<TraceStep> trace;

    std::pair<Partition, Partition> fail(const std::string& why) {
        note(trace, "vanish", why);
        return {Partition::empty(), Partition::empty()};
    }

    // One call level of the recursion on bare multisegments.
    std::pair<Partition, Partition> run(const Multisegment& a, const Multisegment& b, int depth) {
        const LineContext& line = a.line();
        const long long d = line.o;
        if (depth > 512) throw std::logic_error("sk recursion failed to terminate");

        if (d == 1) {
            // One point on the line: the parameter is its multiset of segment
            // lengths, and aperiodicity already makes those l-regular.
            note(trace, "base-d1", "extract lengths on the one-point line");
            return {lengths_over_o_any_position(a), lengths_over_o_any_position(b)};
        }

        const long long n = a.degree(), m = b.degree();
        const long long rho2 = n - 1, rhop2 = m - 1;  // (n-1)/2 and (m-1)/2, doubled

        // Step 1: split pi at rho and the dual parameter of pi' at rho'.
        auto [sat_a, red_a] = saturated_split(a, rho2);
        auto [sat_bd, red_bd] = saturated_split(b.dual(), rhop2);
        note(trace, "step1-split",
             "rho=" + detail_pos(rho2) + " rho'=" + detail_pos(rhop2) + " D_rho(pi)=" +
                 red_a.to_string() + " D_rho'(pi'^v)=" + red_bd.to_string());
        if (!red_a.empty() || !red_bd.empty()) {
            // Matching condition of the rank-reduction theorem:
            // |.|^{(m-n)/2} D_rho(pi) = D_rho'(pi'^v) up to seg_equal.
            if (!red_a.twist(m - n).equals_mod_line(red_bd))
                return fail("step1: reduced parts do not match after the (m-n)/2 twist");
            long long t = red_a.degree();
            note(trace, "step1-fire", "t=" + std::to_string(t));
            return run(sat_a.twist(-t), sat_bd.dual().twist(t), depth + 1);
        }

        // Step 2: Fourier swap, applied only if Step 1 fires on the swapped
        // pair (this guard is what makes the recursion terminate).
        Multisegment a_hat = a.dual().twist(2 * m);
        Multisegment b_hat = b.dual().twist(-2 * n);
        auto red_ah = saturated_split(a_hat, rho2).second;
        auto red_bh = saturated_split(b_hat.dual(), rhop2).second;
        if (!red_ah.empty() || !red_bh.empty()) {
            note(trace, "step2-swap", "recursing on (|.|^m pi^v, |.|^{-n} pi'^v)");
            return run(a_hat, b_hat, depth + 1);
        }

        // Step 3.
        if (((n - m) % d + d) % d != 0) {
            note(trace, "step3-parity", "n != m mod d");
            if (strict_zero) return fail("step3: n != m mod d (strict zero mode)");
            return {Partition::zero(), Partition::zero()};
        }
        // Endpoint verification (reading: e_rho = right endpoint class,
        // b_rho = left endpoint class; with n = m mod d both sign readings
        // of the pi' condition coincide).
        note(trace, "step3-endpoints",
             "verify e_rho(Delta)=0, b_rho(Delta)=m+1-n on pi; b=0, e=n-1-m on pi' (dual base point)");
        long long mod = 2 * d;
        for (const auto& s : a.segments()) {
            bool right_ok = ((s.b2 - rho2) % mod + mod) % mod == 0;
            bool left_ok = ((s.a2 - (2 * m + 1 - n)) % mod + mod) % mod == 0;
            if (!right_ok || !left_ok)
                return fail("step3: segment " + s.to_string() + " of pi fails the endpoint classes");
        }
        for (const auto& s : b.segments()) {
            bool left_ok = ((s.a2 - (1 - m)) % mod + mod) % mod == 0;
            bool right_ok = ((s.b2 - (m - 1 - 2 * n)) % mod + mod) % mod == 0;
            if (!left_ok || !right_ok)
                return fail("step3: segment " + s.to_string() + " of pi' fails the endpoint classes");
        }
        note(trace, "step3-extract", "lengths/d on both sides");
        return {lengths_over_o(a), lengths_over_o(b)};
    }

    static std::string detail_pos(long long doubled) { return detail::format_half(doubled); }

    // d = 1 extraction: positions are meaningless, only lengths matter.
    static Partition lengths_over_o_any_position(const Multisegment& m) {
        if (m.empty()) return Partition::zero();
        std::vector<int> parts;
        for (const auto& s : m.segments()) parts.push_back(static_cast<int>(s.length()));
        std::sort(parts.rbegin(), parts.rend());
        return Partition(std::move(parts));
    }
};

}  // namespace detail

// The skeleton map. Both parameters must live on the same line with
// deg_point = 1 (the unramified-character line with o = d).
inline SkeletonResult sk(const IrrParam& pi, const IrrParam& pip, bool strict_zero_mode = false) {
    if (pi.line() != pip.line())
        throw std::invalid_argument("sk: parameters on different lines");
    if (pi.line().deg_point != 1)
        throw std::invalid_argument("sk: the skeleton pipeline models the unramified line (deg = 1)");
    detail::SkEngine engine;
    engine.strict_zero = strict_zero_mode;
    detail::note(engine.trace, "input",
                 "n=" + std::to_string(pi.degree()) + " m=" + std::to_string(pip.degree()) +
                     " d=" + std::to_string(pi.line().o) + " pi=" + pi.m.to_string() +
                     " pi'=" + pip.m.to_string());
    auto [first, second] = engine.run(pi.m, pip.m, 0);
    return SkeletonResult{std::move(first), std::move(second), std::move(engine.trace)};
}

// dim Hom(S(Mat_{n,m}), pi (x) pi') = d_{sk(pi,pi')} with the Par_0
// conventions (zero -> 1, empty -> 0).
inline long long theta_multiplicity(const IrrParam& pi, const IrrParam& pip,
                                    bool strict_zero_mode = false,
                                    OutOfRangePolicy policy = OutOfRangePolicy::reject,
                                    SkeletonResult* result_out = nullptr) {
    SkeletonResult r = sk(pi, pip, strict_zero_mode);
    long long v = d_total(r.first, r.second, pi.line().ell, policy);
    if (result_out) *result_out = std::move(r);
    return v;
}

// d_i(pi) = dim Hom(S(Mat_{n,n}), |.|^i pi (x) |.|^{-i} pi^v) - 1.
inline long long d_i_exponent(const IrrParam& pi, long long i,
                              OutOfRangePolicy policy = OutOfRangePolicy::reject) {
    IrrParam twisted = pi.twist(2 * i);
    IrrParam dual_twisted = pi.dual().twist(-2 * i);
    return theta_multiplicity(twisted, dual_twisted, false, policy) - 1;
}

// The parameter of Z(m(lambda)) of degree n = d|lambda|, positioned for use
// as the FIRST argument of sk against a degree-m partner: left endpoints at
// m + (1-n)/2, right endpoints at (n-1)/2 (mod d). With this placement and
// the matching second-slot placement below, sk(Z(m(lambda)), Z(m(mu))) =
// (lambda, mu) falls straight out of Step 3.
inline IrrParam positioned_param_first(const Partition& lambda, LineContext line, long long m) {
    if (line.deg_point != 1)
        throw std::invalid_argument("positioned_param_first: unramified line required");
    long long n = lambda.size() * line.o;
    // m_of_lambda starts segments at 1 (doubled 2); shift left endpoint to
    // m + (1-n)/2 (doubled 2m + 1 - n).
    return IrrParam(m_of_lambda(lambda, line).twist(2 * m + 1 - n - 2));
}

// The SECOND-slot placement: left endpoints at (1-m)/2, m = d|mu|.
inline IrrParam positioned_param_second(const Partition& mu, LineContext line) {
    if (line.deg_point != 1)
        throw std::invalid_argument("positioned_param_second: unramified line required");
    long long m = mu.size() * line.o;
    return IrrParam(m_of_lambda(mu, line).twist(1 - m - 2));
}

// The trivial representation 1_K: the centered segment [(1-K)/2, (K-1)/2]
// (a + b = 0), the m((K/o))-shape positioned so Z of it is trivial.
inline IrrParam trivial_rep_param(long long k, LineContext line) {
    if (k < 0) throw std::invalid_argument("trivial_rep_param: negative degree");
    if (line.deg_point != 1)
        throw std::invalid_argument("trivial_rep_param: unramified line required");
    if (k == 0) return IrrParam(Multisegment(line));
    return IrrParam(Multisegment(line, {Segment(line, 1 - k, k - 1)}));
}

// Probe family for sk_m (documented in the README): partition probes when
// d | m, the mirror probe when m = n, and mirror+filler probes for m > n.
inline std::vector<IrrParam> sk_probe_family(const IrrParam& pi, long long m) {
    const LineContext& line = pi.line();
    long long d = line.o;
    long long n = pi.degree();
    std::vector<IrrParam> probes;
    auto try_push = [&](Multisegment ms) {
        if (ms.degree() != m) return;
        if (!is_aperiodic(ms)) return;
        bool single_lattice = true;
        for (const auto& s : ms.segments())
            if (((s.a2 - ms.segments().front().a2) % 2 + 2) % 2 != 0) single_lattice = false;
        if (!single_lattice) return;
        probes.push_back(IrrParam(std::move(ms)));
    };
    if (m % d == 0) {
        for (const auto& mu : partitions_of(static_cast<int>(m / d))) {
            if (d == 1 && !is_l_regular(mu, line.ell)) continue;
            std::vector<Segment> segs;
            for (int part : mu.parts())
                segs.emplace_back(line, 1 - m, 1 - m + 2 * (static_cast<long long>(part) * d - 1));
            try_push(Multisegment(line, std::move(segs)));
        }
    }
    if (m == n) try_push(pi.m.dual());
    if (m > n) {
        Segment filler(line, 1 - m, 1 - m + 2 * (m - n - 1));
        try_push(pi.m.dual().twist(n - m).plus(Multisegment(line, {filler})));
        try_push(pi.m.dual().twist(3 * (m - n)).plus(Multisegment(line, {filler})));
    }
    return probes;
}

// sk_m(pi): the common first component of sk(pi, pi') over probes pi' of
// degree m, empty when no probe yields a non-empty first component. Two
// probes disagreeing would contradict the probe-independence property, so
// that is reported loudly rather than swallowed.
inline Partition sk_m(const IrrParam& pi, long long m, bool strict_zero_mode = false,
                      std::vector<Partition>* all_out = nullptr) {
    Partition best = Partition::empty();
    for (const auto& probe : sk_probe_family(pi, m)) {
        SkeletonResult r = sk(pi, probe, strict_zero_mode);
        if (r.first.is_empty()) continue;
        if (all_out) all_out->push_back(r.first);
        if (best.is_empty())
            best = r.first;
        else if (!(best == r.first))
            throw std::logic_error("sk_m: probes disagree on the first component (" +
                                   best.to_string() + " vs " + r.first.to_string() + ")");
    }
    return best;
}

}  // namespace thetamult
