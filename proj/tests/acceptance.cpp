// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eacode/capacity.hpp"
#include "eacode/codes.hpp"
#include "eacode/error.hpp"
#include "eacode/harness.hpp"
#include "eacode/quantum.hpp"
#include "eacode/verify.hpp"
#include "oracles.hpp"

using namespace eacode;
using R = Rational;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects failed sub-checks; the first few are kept for the report line.
struct Checker {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (notes.size() < 3) notes.push_back(what);
    }
    Outcome done(std::string summary) const {
        for (auto& n : notes) summary += "; " + n;
        return {ok, summary};
    }
};

RegionParams params_of(const CodeSpec& s) { return {s.N, s.K, s.NB, s.KB}; }

std::string tuple_str(const CodeSpec& s) {
    std::ostringstream o;
    o << "(" << s.N << "," << s.K << "," << s.NB << "," << s.KB << ") q=" << s.q;
    return o.str();
}

bool rate_is(const LinearScheme& s, R l0, R lb) { return s.spec.lambda0 == l0 && s.spec.lambdaB == lb; }

bool audit_all(const LinearScheme& s, std::size_t expected_patterns) {
    auto rep = audit(s);
    return rep.pass && rep.patterns.size() == expected_patterns;
}

// q^n, saturating above the cap.
std::uint64_t power_capped(std::uint64_t q, std::size_t n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v *= q;
        if (v > cap) return cap + 1;
    }
    return v;
}

struct SweepEntry {
    SchemeKind kind;
    LinearScheme scheme;
};

// Every (N, K, NB, KB) with N <= 6, NB <= 5 and the constructors whose case
// precondition it meets, at the smallest admissible q.
std::vector<SweepEntry> build_sweep() {
    std::vector<SweepEntry> out;
    for (int N = 1; N <= 6; ++N)
        for (int K = 1; K <= N; ++K)
            for (int NB = 1; NB <= 5; ++NB)
                for (int KB = 1; KB <= NB; ++KB) {
                    std::vector<SchemeKind> kinds;
                    switch (case_of({N, K, NB, KB})) {
                        case RegionCase::Case1: kinds = {SchemeKind::Baseline}; break;
                        case RegionCase::Case2: kinds = {SchemeKind::Case2}; break;
                        case RegionCase::Case3: kinds = {SchemeKind::Case3a, SchemeKind::Case3b}; break;
                    }
                    if (NB == 1 && KB == 1 && 2 * K < N) kinds.push_back(SchemeKind::AppendixB);
                    for (auto k : kinds)
                        out.push_back({k, construct(k, N, K, NB, KB, min_field_order(k, N, K, NB, KB))});
                }
    return out;
}

const std::vector<SweepEntry>& sweep() {
    static const std::vector<SweepEntry> s = build_sweep();
    return s;
}

LinearScheme random_scheme(std::mt19937_64& rng, std::uint32_t q) {
    auto f = Field::make(q);
    CodeSpec sp;
    sp.N = 2 + static_cast<int>(rng() % 2);
    sp.K = 1 + static_cast<int>(rng() % static_cast<unsigned>(sp.N));
    sp.NB = static_cast<int>(rng() % 3);
    sp.KB = sp.NB ? 1 + static_cast<int>(rng() % static_cast<unsigned>(sp.NB)) : 0;
    sp.q = q;
    sp.kappa = 1 + static_cast<int>(rng() % 2);
    sp.lambda0 = R(1 + static_cast<int>(rng() % 2), sp.kappa);
    sp.lambdaB = R(static_cast<int>(rng() % 2), sp.kappa);
    sp.L = static_cast<int>(rng() % 3);
    Matrix g(f, sp.input_len(), sp.storage_len());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = static_cast<Elem>(rng() % q);
    return LinearScheme::from_generator("random", sp, g);
}

Outcome c1() {
    Checker c;
    auto s = construct_case2(2, 1, 3, 2, 8);
    c.expect(rate_is(s, R(1, 2), R(1, 2)), "rate");
    c.expect(s.spec.kappa == 2, "kappa");
    c.expect(audit_all(s, 6), "audit over 6 patterns");
    return c.done("case2(2,1,3,2) q=8: (1/2,1/2), kappa=2, 6/6 patterns");
}

Outcome c2() {
    Checker c;
    auto s = construct_case3_a(3, 1, 3, 2, 13);
    c.expect(rate_is(s, R(1, 4), R(1, 4)), "rate");
    c.expect(s.spec.kappa == 4, "kappa");
    c.expect(s.spec.L == 4, "L");
    c.expect(audit_all(s, 9), "audit over 9 patterns");
    return c.done("case3a(3,1,3,2) q=13: (1/4,1/4), kappa=4, L=4, 9/9 patterns");
}

Outcome c3() {
    Checker c;
    auto b = construct_case3_b(3, 1, 3, 2, 13);
    c.expect(rate_is(b, R(1, 2), R(5, 6)) && b.spec.kappa == 6, "case3b rate/kappa");
    c.expect(audit_all(b, 9), "case3b audit");
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto f = construct_fig1(q);
        c.expect(rate_is(f, R(1, 2), R(5, 6)) && f.spec.kappa == 6, "fig1 rate/kappa q=" + std::to_string(q));
        c.expect(audit_all(f, 9), "fig1 audit q=" + std::to_string(q));
    }
    return c.done("case3b q=13 and fig1 q in {2,3,4,5}: (1/2,5/6), kappa=6, audits pass");
}

Outcome c4() {
    Checker c;
    RegionParams p{3, 2, 4, 3};
    const R corner(1, 3);
    auto bps = breakpoints(p);
    c.expect(std::find(bps.begin(), bps.end(), corner) != bps.end(), "corner 1/3 not a breakpoint");
    int checked = 0;
    for (int den = 1; den <= 12; ++den)
        for (int num = 0; num <= 12 * den; ++num) {
            R lb(num, den);
            R out = outer_capacity(p, lb);
            if (lb >= corner) {
                c.expect(out == R(5, 3), "outer != 5/3 at lambdaB=" + to_string(lb));
                ++checked;
            } else {
                c.expect(out < R(5, 3), "outer reaches 5/3 below the corner at " + to_string(lb));
            }
        }
    for (R lb : {R(1000), R(1000000)}) c.expect(outer_capacity(p, lb) == R(5, 3), "large lambdaB");
    return c.done("outer((3,2,4,3), lambdaB) = 5/3 for all " + std::to_string(checked) +
                  " grid points >= 1/3, < 5/3 below");
}

Outcome c5() {
    Checker c;
    std::size_t patterns = 0;
    for (auto& e : sweep()) {
        const auto& s = e.scheme;
        std::string id = to_string(e.kind) + tuple_str(s.spec);
        auto rep = audit(s);
        patterns += rep.patterns.size();
        c.expect(rep.pass, "audit " + id);
        auto m = membership(params_of(s.spec), {s.spec.lambda0, s.spec.lambdaB});
        c.expect(m.status == Membership::InsideInner || m.status == Membership::OnInnerBoundary, "membership " + id);
    }
    // The open gap stays open: a Case-3 point strictly between the bounds.
    RegionParams gap{3, 1, 3, 2};
    c.expect(membership(gap, {R(2, 5), R(1, 2)}).status == Membership::OpenGap, "gap point not OpenGap");
    return c.done(std::to_string(sweep().size()) + " schemes, " + std::to_string(patterns) +
                  " patterns audited; all rate points inside or on the inner bound");
}

Outcome c6() {
    Checker c;
    const std::uint64_t cap = std::uint64_t{1} << 20;
    OracleOptions opt;
    opt.input_cap = cap;
    std::vector<LinearScheme> candidates{construct_fig1(2), construct_case2(2, 1, 3, 2, 8),
                                        construct_appendix_b(3, 1, 7)};
    for (auto& e : sweep()) candidates.push_back(e.scheme);
    std::mt19937_64 rng(20240501);
    for (int t = 0; t < 40; ++t) candidates.push_back(random_scheme(rng, t % 2 ? 2 : 3));
    std::vector<LinearScheme> schemes;
    for (auto& s : candidates)
        if (power_capped(s.spec.q, s.spec.input_len(), cap) <= cap) schemes.push_back(s);
    std::size_t verdicts = 0, agree = 0, failing = 0, passing_schemes = 0;
    for (auto& s : schemes) {
        auto ps = enumerate_patterns(s.spec);
        auto ov = oracle_pattern_verdicts(s, ps, opt);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            bool d = check_decodability(s, ps[i]), sec = check_security(s, ps[i]);
            verdicts += 2;
            agree += (d == ov[i].decodable) + (sec == ov[i].secure);
            failing += !d + !sec;
        }
        bool sr = check_sr_recovery(s);
        ++verdicts;
        agree += sr == oracle_sr_recovery(s, opt);
        passing_schemes += audit(s).pass;
    }
    c.expect(schemes.size() >= 50, "fewer than 50 schemes");
    c.expect(agree == verdicts, std::to_string(verdicts - agree) + " disagreements");
    c.expect(failing > 0 && passing_schemes > 0, "sample lacks passing or failing verdicts");
    return c.done(std::to_string(schemes.size()) + " schemes (" + std::to_string(passing_schemes) + " passing), " +
                  std::to_string(agree) + "/" + std::to_string(verdicts) + " verdicts agree, " +
                  std::to_string(failing) + " negative verdicts");
}

bool brute_verdict(const CosetState& st, const ErasurePattern& p) {
    auto reg = output_registers(st.layout(), p);
    return oracle::brute_factorizes(st.generator(), st.offset(), reg.r, reg.qhat);
}

Outcome c7() {
    Checker c;
    const std::uint64_t brute_cap = std::uint64_t{1} << 16;
    std::size_t schemes = 0, patterns = 0, brute_schemes = 0;
    auto run = [&](const LinearScheme& s, const std::string& id) {
        auto st = css_encode_state(s);
        auto ps = enumerate_patterns(s.spec);
        auto qv = quantum_check(s, ps);
        bool small = power_capped(s.spec.q, st.rank(), brute_cap) <= brute_cap;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            c.expect(qv[i].synthesized && qv[i].factorizes, "factorization " + id + " " + to_string(ps[i]));
            if (small)
                c.expect(brute_verdict(apply_all(st, qv[i].transcript), ps[i]) == qv[i].factorizes,
                         "brute force disagrees " + id);
        }
        ++schemes;
        patterns += ps.size();
        brute_schemes += small;
    };
    for (auto& e : sweep()) run(e.scheme, to_string(e.kind) + tuple_str(e.scheme.spec));
    // Top up the brute-force sample with small isometric schemes whose audit passes.
    std::mt19937_64 rng(77);
    for (int t = 0; t < 2000 && brute_schemes < 10; ++t) {
        auto s = random_scheme(rng, 2);
        if (!audit(s).pass) continue;
        run(s, "random" + tuple_str(s.spec));
    }
    c.expect(brute_schemes >= 10, "fewer than 10 brute-force schemes");
    return c.done(std::to_string(schemes) + " schemes, " + std::to_string(patterns) +
                  " patterns factorize; brute-force support enumeration confirms " + std::to_string(brute_schemes) +
                  " schemes with q^r <= 2^16");
}

Outcome c8() {
    Checker c;
    std::mt19937_64 rng(31337);
    const std::uint32_t qs[] = {13, 17, 31};
    int passed = 0;
    for (int t = 0; t < 500; ++t) {
        std::uint32_t q = qs[t % 3];
        auto f = Field::make(q);
        std::size_t n = 2 + rng() % (q - 2);
        std::size_t k = 1 + rng() % (n - 1);
        std::vector<Elem> pool(q);
        for (Elem i = 0; i < q; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Elem> alphas(pool.begin(), pool.begin() + static_cast<long>(n)), v(n);
        for (auto& x : v) x = static_cast<Elem>(1 + rng() % (q - 1));
        bool ok = lemma3_check(f, v, alphas, k);
        passed += ok;
        c.expect(ok, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    return c.done(std::to_string(passed) + "/500 draws over q in {13,17,31}");
}

Outcome c9() {
    Checker c;
    auto a = construct_case3_a(3, 1, 3, 2, 13);
    auto b = construct_case3_b(3, 1, 3, 2, 13);
    RegionParams p{3, 1, 3, 2};
    int mixtures = 0;
    for (int v = 1; v <= 6; ++v)
        for (int u = 0; u <= v; ++u) {
            auto s = space_share(a, b, u, v);
            R t(u, v);
            R l0 = t * a.spec.lambda0 + (R(1) - t) * b.spec.lambda0;
            R lb = t * a.spec.lambdaB + (R(1) - t) * b.spec.lambdaB;
            std::string id = std::to_string(u) + "/" + std::to_string(v);
            c.expect(rate_is(s, l0, lb), "rate " + id);
            c.expect(r1_bound(p, s.spec.lambdaB) == s.spec.lambda0, "off the r1 line " + id);
            c.expect(audit(s).pass, "audit " + id);
            ++mixtures;
        }
    return c.done(std::to_string(mixtures) + " mixtures u/v, v <= 6: exact convex combinations on the r1 line");
}

Outcome c10() {
    Checker c;
    auto s = construct_appendix_b(3, 1, 7);
    c.expect(rate_is(s, R(1, 2), R(1, 2)), "rate");
    c.expect(audit_all(s, 3), "audit over 3 patterns");
    auto ps = enumerate_patterns(s.spec);
    auto qv = quantum_check(s, ps);
    int ok = 0;
    for (auto& v : qv) ok += v.synthesized && v.factorizes;
    c.expect(ok == 3 && ps.size() == 3, "factorization");
    return c.done("appendixb(3,1) q=7: (1/2,1/2), audit and " + std::to_string(ok) + "/3 factorizations pass");
}

Outcome c11() {
    Checker c;
    auto s = construct_fig1(2);
    SimConfig cfg;
    cfg.trials = 4;
    cfg.seed = 2024;
    cfg.policy = ErasurePolicy::Exhaustive;
    std::mt19937_64 rng(99);
    cfg.payload.resize(1024);
    for (auto& x : cfg.payload) x = static_cast<std::uint8_t>(rng());
    auto r = run_sim(s, cfg);
    c.expect(r.successes == r.attempts && r.attempts == 4 * 9, "recovery");
    c.expect(r.payload_roundtrip, "payload round trip");
    c.expect(r.sr_failures == 0, "shared randomness");
    return c.done("fig1 q=2, 1 KiB, " + std::to_string(r.successes) + "/" + std::to_string(r.attempts) +
                  " decodes, byte-exact round trip");
}

}  // namespace

// Optional arguments select criteria by number; default runs all.
int main(int argc, char** argv) {
    struct Criterion {
        int id;
        double limit_s;  // 0: no runtime bound
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria{
        {1, 1, c1},  {2, 1, c2},  {3, 5, c3},   {4, 0, c4},   {5, 0, c5},  {6, 0, c6},
        {7, 0, c7},  {8, 0, c8},  {9, 30, c9},  {10, 5, c10}, {11, 5, c11},
    };
    // Built up front so criterion timings measure checks, not construction.
    sweep();
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    int failed = 0, ran = 0;
    for (auto& cr : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
        ++ran;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.limit_s > 0 && secs >= cr.limit_s) {
            o.ok = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit";
        }
        failed += !o.ok;
        std::printf("%s criterion %d (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", cr.id, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed ? 1 : 0;
}
