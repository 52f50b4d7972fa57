#include <random>

#include "doctest.h"
#include "eacode/codes.hpp"
#include "eacode/error.hpp"
#include "eacode/verify.hpp"

using namespace eacode;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::BadFormat;
}

Rational R(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

EncodingInput random_input(const LinearScheme& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> d(0, s.field.q() - 1);
    EncodingInput in;
    in.y0.resize(s.spec.msg_len());
    in.b.resize(s.spec.b_len());
    in.z.resize(static_cast<std::size_t>(s.spec.L));
    for (auto* v : {&in.y0, &in.b, &in.z})
        for (auto& x : *v) x = d(rng);
    return in;
}

}  // namespace

TEST_CASE("case2 extreme point") {
    auto s = construct_case2(2, 1, 3, 2, 8);
    CHECK(s.spec.kappa == 2);
    CHECK(s.spec.lambda0 == R(1, 2));
    CHECK(s.spec.lambdaB == R(1, 2));
    CHECK(s.spec.L == 0);
    CHECK(audit(s).pass);
    CHECK(audit(s).patterns.size() == 6);

    // Message 1, zero SR: the storage word is the first row of the 4 x 4 Cauchy matrix.
    auto f = Field::make(8);
    auto h = cauchy(f, ascending_points(f, 4), ascending_points(f, 4, 4));
    auto w = encode(s, {{1}, {0, 0, 0}, {}});
    CHECK(w[0] == Vector{h(0, 0), h(0, 1)});
    CHECK(w[1] == Vector{h(0, 2), h(0, 3)});

    auto s2 = construct_case2(3, 2, 3, 2, 13);
    CHECK(s2.spec.lambda0 == R(3, 2));
    CHECK(s2.spec.lambdaB == R(1, 2));
    CHECK(audit(s2).pass);
    auto s3 = construct_case2(4, 2, 3, 2, 17);
    CHECK(s3.spec.lambda0 == R(1));
    CHECK(s3.spec.lambdaB == R(1));
    CHECK(audit(s3).pass);

    CHECK(code_of([] { construct_case2(3, 1, 3, 2, 13); }) == ErrorCode::CaseMismatch);
    CHECK(code_of([] { construct_case2(2, 1, 4, 2, 13); }) == ErrorCode::CaseMismatch);
    CHECK(code_of([] { construct_case2(2, 1, 3, 2, 7); }) == ErrorCode::FieldTooSmall);
}

TEST_CASE("case3 extreme points") {
    auto a = construct_case3_a(3, 1, 3, 2, 13);
    CHECK(a.spec.kappa == 4);
    CHECK(a.spec.lambda0 == R(1, 4));
    CHECK(a.spec.lambdaB == R(1, 4));
    CHECK(a.spec.L == 4);
    CHECK(audit(a).pass);

    auto a2 = construct_case3_a(5, 2, 3, 2, 23);
    CHECK(a2.spec.lambda0 == R(1, 2));
    CHECK(a2.spec.lambdaB == R(1, 2));
    CHECK(audit(a2).pass);
    auto a3 = construct_case3_a(3, 1, 5, 3, 31);
    CHECK(a3.spec.lambda0 == R(1, 6));
    CHECK(a3.spec.lambdaB == R(1, 6));
    CHECK(audit(a3).pass);

    auto b = construct_case3_b(3, 1, 3, 2, 13);
    CHECK(b.spec.kappa == 6);
    CHECK(b.spec.lambda0 == R(1, 2));
    CHECK(b.spec.lambdaB == R(5, 6));
    CHECK(audit(b).pass);
    auto b2 = construct_case3_b(5, 2, 3, 2, 61);
    CHECK(b2.spec.lambda0 == R(1));
    CHECK(b2.spec.lambdaB == R(4, 3));
    CHECK(audit(b2).pass);
    auto b3 = construct_case3_b(4, 1, 3, 2, 17);
    CHECK(b3.spec.lambda0 == R(1, 2));
    CHECK(b3.spec.lambdaB == R(7, 6));
    CHECK(audit(b3).pass);

    CHECK(code_of([] { construct_case3_a(2, 1, 3, 2, 13); }) == ErrorCode::CaseMismatch);
    CHECK(code_of([] { construct_case3_b(3, 1, 3, 2, 11); }) == ErrorCode::FieldTooSmall);
}

TEST_CASE("hand-built (3,1,3,2) code") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto s = construct_fig1(q);
        CHECK(s.spec.kappa == 6);
        CHECK(s.spec.lambda0 == R(1, 2));
        CHECK(s.spec.lambdaB == R(5, 6));
        CHECK(s.spec.msg_len() == 3);
        CHECK(s.spec.sr_len() == 5);
        auto rep = audit(s);
        CHECK(rep.pass);
        CHECK(rep.patterns.size() == 9);
    }
    // y0 = (1, 0, 0): a1 = a4 = 1, a2 = a3 = 0. Column-major 2 x 3 blocks:
    // (a1, a2, a3, a4, a3, a2) in every node.
    auto s = construct_fig1(2);
    auto w = encode(s, {{1, 0, 0}, Vector(15, 0), {}});
    for (auto& blk : w) CHECK(blk == Vector{1, 0, 0, 1, 0, 0});
    // b0^(1) only: appears at (row 2, col 2) and (row 1, col 3) of each node.
    Vector b(15, 0);
    b[0] = 1;
    w = encode(s, {{0, 0, 0}, b, {}});
    for (auto& blk : w) CHECK(blk == Vector{0, 0, 0, 1, 1, 0});
    // b_{11}^{(2)} at offset 5 + 1: row 1, col 2 of Y_1 and (as b_{31}) of Y_3.
    b.assign(15, 0);
    b[6] = 1;
    w = encode(s, {{0, 0, 0}, b, {}});
    CHECK(w[0] == Vector{0, 0, 1, 0, 0, 0});
    CHECK(w[1] == Vector{0, 0, 0, 0, 0, 0});
    CHECK(w[2] == Vector{0, 0, 1, 0, 0, 0});
}

TEST_CASE("baseline and single-SR-node schemes") {
    auto s = construct_baseline(3, 2, 7);
    CHECK(s.spec.lambda0 == R(1));
    CHECK(s.spec.L == 1);
    CHECK(s.spec.kappa == 1);
    CHECK(audit(s).pass);
    auto t = construct_baseline(3, 1, 7);
    CHECK(t.spec.lambda0 == R(0));
    CHECK(audit(t).pass);
    auto full = construct_baseline(2, 2, 5);
    CHECK(full.spec.lambda0 == R(2));
    CHECK(audit(full).pass);
    CHECK(code_of([] { construct_baseline(4, 3, 7); }) == ErrorCode::FieldTooSmall);

    auto ab = construct_appendix_b(3, 1, 7);
    CHECK(ab.spec.lambda0 == R(1, 2));
    CHECK(ab.spec.lambdaB == R(1, 2));
    CHECK(ab.spec.kappa == 2);
    CHECK(audit(ab).pass);
    auto ab2 = construct_appendix_b(5, 2, 11);
    CHECK(ab2.spec.lambda0 == R(1));
    CHECK(ab2.spec.lambdaB == R(1));
    CHECK(audit(ab2).pass);
    auto zero = encode(ab, {{0}, {0}, {0, 0}});
    for (auto& blk : zero) CHECK(blk == Vector{0, 0});
}

TEST_CASE("encode is linear and zero maps to zero") {
    std::mt19937_64 rng(5);
    std::vector<LinearScheme> schemes{construct_case2(2, 1, 3, 2, 8), construct_case3_a(3, 1, 3, 2, 13),
                                      construct_case3_b(3, 1, 3, 2, 13), construct_fig1(3),
                                      construct_appendix_b(3, 1, 7)};
    for (auto& s : schemes) {
        const Field& f = s.field;
        EncodingInput z{Vector(s.spec.msg_len(), 0), Vector(s.spec.b_len(), 0),
                        Vector(static_cast<std::size_t>(s.spec.L), 0)};
        for (auto& blk : encode(s, z))
            for (Elem e : blk) CHECK(e == 0);
        for (int t = 0; t < 20; ++t) {
            auto x1 = random_input(s, rng), x2 = random_input(s, rng);
            EncodingInput sum{add(f, x1.y0, x2.y0), add(f, x1.b, x2.b), add(f, x1.z, x2.z)};
            auto w1 = encode(s, x1), w2 = encode(s, x2), ws = encode(s, sum);
            for (std::size_t n = 0; n < ws.size(); ++n) CHECK(ws[n] == add(f, w1[n], w2[n]));
        }
        CHECK(code_of([&] { encode(s, {Vector(s.spec.msg_len() + 1, 0), z.b, z.z}); }) ==
              ErrorCode::LengthMismatch);
    }
}

TEST_CASE("space sharing") {
    auto a = construct_case3_a(3, 1, 3, 2, 13);
    auto b = construct_case3_b(3, 1, 3, 2, 13);
    auto s = space_share(a, b, 1, 2);
    CHECK(s.spec.kappa == 2 * 4 * 6);
    CHECK(s.spec.lambda0 == R(3, 8));
    CHECK(s.spec.lambdaB == R(13, 24));
    CHECK(audit(s).pass);

    auto all1 = space_share(a, b, 3, 3);
    CHECK(all1.spec.lambda0 == a.spec.lambda0);
    CHECK(all1.spec.lambdaB == a.spec.lambdaB);
    auto all2 = space_share(a, b, 0, 2);
    CHECK(all2.spec.lambda0 == b.spec.lambda0);
    CHECK(all2.spec.lambdaB == b.spec.lambdaB);
    CHECK(audit(all2).pass);

    CHECK(code_of([&] { space_share(a, construct_case3_a(3, 1, 3, 2, 16), 1, 2); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { space_share(a, construct_case2(3, 2, 3, 2, 13), 1, 2); }) == ErrorCode::ParamMismatch);
    CHECK(code_of([&] { space_share(a, b, 3, 2); }) == ErrorCode::ParamMismatch);
}

TEST_CASE("constructor sweep at small sizes passes audit") {
    for (int N = 1; N <= 4; ++N)
        for (int K = 1; K <= N; ++K)
            for (int NB = 1; NB <= 3; ++NB)
                for (int KB = 1; KB <= NB; ++KB) {
                    std::vector<SchemeKind> kinds;
                    if (2 * KB <= NB) kinds.push_back(SchemeKind::Baseline);
                    else if (2 * K >= N) kinds.push_back(SchemeKind::Case2);
                    else kinds.insert(kinds.end(), {SchemeKind::Case3a, SchemeKind::Case3b});
                    for (auto k : kinds) {
                        auto s = construct(k, N, K, NB, KB, min_field_order(k, N, K, NB, KB));
                        INFO(to_string(k), " ", N, K, NB, KB);
                        CHECK(audit(s).pass);
                    }
                }
}

TEST_CASE("scheme kind helpers") {
    CHECK(parse_scheme_kind("case3b") == SchemeKind::Case3b);
    CHECK(code_of([] { parse_scheme_kind("nope"); }) == ErrorCode::BadFormat);
    CHECK(min_field_order(SchemeKind::Case2, 2, 1, 3, 2) == 8);
    CHECK(min_field_order(SchemeKind::Case3b, 3, 1, 3, 2) == 13);
    CHECK(min_field_order(SchemeKind::Case3a, 3, 1, 3, 2) == 13);
    CHECK(min_field_order(SchemeKind::AppendixB, 3, 1, 1, 1) == 7);
}
