#include "eacode/codes.hpp"

#include <algorithm>

#include "eacode/error.hpp"

namespace eacode {

namespace {

std::size_t integral(const Rational& x, int kappa, const char* what) {
    Rational v = x * Rational(kappa);
    if (v.denominator() != 1 || v.numerator() < 0)
        throw Error(ErrorCode::DimensionMismatch, std::string("kappa * ") + what + " is not a nonnegative integer");
    return static_cast<std::size_t>(v.numerator());
}

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// Columns of the r x r identity from `start`: the functionals reading
// input coordinates start .. start + len - 1. Symbols built from them are r x k
// matrices whose columns are linear functionals of the input.
Matrix coords(const Field& f, std::size_t r, std::size_t start, std::size_t len) {
    Matrix m(f, r, len);
    for (std::size_t j = 0; j < len; ++j) m(start + j, j) = 1;
    return m;
}

Matrix cols(const Matrix& m, std::size_t start, std::size_t len) { return m.block(0, m.rows(), start, len); }

Matrix hcat(std::initializer_list<Matrix> parts) {
    auto it = parts.begin();
    Matrix out = *it++;
    for (; it != parts.end(); ++it) out = Matrix::hconcat(out, *it);
    return out;
}

void require_field(const Field& f, std::uint32_t need) {
    if (f.q() < need)
        throw Error(ErrorCode::FieldTooSmall,
                    "construction needs q >= " + std::to_string(need) + ", got " + std::to_string(f.q()));
}

void check_counts(int N, int K, int NB, int KB) {
    if (N < 0 || K < 0 || K > N || NB < 0 || KB < 0 || KB > NB)
        throw Error(ErrorCode::DimensionMismatch, "need 0 <= K <= N and 0 <= K_B <= N_B");
}

// Case 2 needs K/N >= 1/2, case 3 needs K/N < 1/2; both need K_B/N_B > 1/2.
void check_case(int N, int K, int NB, int KB, bool case2) {
    check_counts(N, K, NB, KB);
    if (2 * KB <= NB) throw Error(ErrorCode::CaseMismatch, "requires K_B/N_B > 1/2");
    if (case2 && 2 * K < N) throw Error(ErrorCode::CaseMismatch, "requires K/N >= 1/2");
    if (!case2 && 2 * K >= N) throw Error(ErrorCode::CaseMismatch, "requires K/N < 1/2");
    if (!case2 && K < 1) throw Error(ErrorCode::CaseMismatch, "requires K >= 1");
}

CodeSpec make_spec(int N, int K, int NB, int KB, std::uint32_t q, int kappa, std::size_t msg, std::size_t sr,
                   std::size_t L) {
    CodeSpec s;
    s.N = N;
    s.K = K;
    s.NB = NB;
    s.KB = KB;
    s.q = q;
    s.kappa = kappa;
    s.lambda0 = Rational(static_cast<std::int64_t>(msg), kappa);
    s.lambdaB = Rational(static_cast<std::int64_t>(sr), kappa);
    s.L = static_cast<int>(L);
    return s;
}

}  // namespace

std::size_t CodeSpec::msg_len() const { return integral(lambda0, kappa, "lambda0"); }
std::size_t CodeSpec::sr_len() const { return integral(lambdaB, kappa, "lambdaB"); }

void CodeSpec::validate() const {
    check_counts(N, K, NB, KB);
    if (kappa < 1) throw Error(ErrorCode::DimensionMismatch, "kappa must be >= 1");
    if (L < 0) throw Error(ErrorCode::DimensionMismatch, "L must be >= 0");
    (void)msg_len();
    (void)sr_len();
}

LinearScheme::LinearScheme(std::string label_, CodeSpec spec_, Field field_, Matrix a, Matrix b, Matrix z)
    : label(std::move(label_)), spec(spec_), field(std::move(field_)), A(std::move(a)), B(std::move(b)),
      Z(std::move(z)) {
    spec.validate();
    if (field.q() != spec.q) throw Error(ErrorCode::FieldMismatch, "spec q differs from field");
    const std::size_t w = spec.storage_len();
    if (A.rows() != spec.msg_len() || B.rows() != spec.b_len() || Z.rows() != sz(spec.L) || A.cols() != w ||
        B.cols() != w || Z.cols() != w)
        throw Error(ErrorCode::DimensionMismatch, "precoding matrix shapes do not match the code parameters");
    if (!(A.field() == field) || !(B.field() == field) || !(Z.field() == field))
        throw Error(ErrorCode::FieldMismatch, "precoding matrices over a different field");
}

LinearScheme LinearScheme::from_generator(std::string label, CodeSpec spec, const Matrix& g) {
    spec.validate();
    if (g.rows() != spec.input_len() || g.cols() != spec.storage_len())
        throw Error(ErrorCode::DimensionMismatch, "generator shape does not match the code parameters");
    const std::size_t m = spec.msg_len(), b = spec.b_len(), w = g.cols();
    return LinearScheme(std::move(label), spec, g.field(), g.block(0, m, 0, w), g.block(m, b, 0, w),
                        g.block(m + b, sz(spec.L), 0, w));
}

Matrix LinearScheme::generator() const { return Matrix::vconcat(Matrix::vconcat(A, B), Z); }

std::vector<std::size_t> LinearScheme::node_columns(int n) const {
    std::vector<std::size_t> c(sz(spec.kappa));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = sz(n) * sz(spec.kappa) + j;
    return c;
}

StorageWord encode(const LinearScheme& s, const EncodingInput& in) {
    const auto& sp = s.spec;
    if (in.y0.size() != sp.msg_len() || in.b.size() != sp.b_len() || in.z.size() != sz(sp.L))
        throw Error(ErrorCode::LengthMismatch, "encoding input lengths do not match the code parameters");
    Vector x = in.y0;
    x.insert(x.end(), in.b.begin(), in.b.end());
    x.insert(x.end(), in.z.begin(), in.z.end());
    for (Elem e : x)
        if (!s.field.contains(e)) throw Error(ErrorCode::BadFormat, "input entry outside field");
    Vector y = mul(x, s.generator());
    StorageWord out(sz(sp.N));
    for (int n = 0; n < sp.N; ++n)
        out[sz(n)].assign(y.begin() + n * sp.kappa, y.begin() + (n + 1) * sp.kappa);
    return out;
}

LinearScheme construct_baseline(int N, int K, std::uint32_t q, int NB, int KB) {
    check_counts(N, K, NB, KB);
    Field f = Field::make(q);
    if (2 * K <= N) {
        CodeSpec s = make_spec(N, K, NB, KB, q, 1, 0, 0, 0);
        std::size_t w = sz(N);
        return LinearScheme("baseline", s, f, Matrix(f, 0, w), Matrix(f, 0, w), Matrix(f, 0, w));
    }
    require_field(f, 2 * static_cast<std::uint32_t>(N));
    // Rows 0 .. 2K-N-1 carry the message, the remaining N-K rows local randomness.
    Matrix g = cauchy(f, ascending_points(f, sz(K)), ascending_points(f, sz(N), sz(K)));
    CodeSpec s = make_spec(N, K, NB, KB, q, 1, sz(2 * K - N), 0, sz(N - K));
    return LinearScheme::from_generator("baseline", s, g);
}

LinearScheme construct_case2(int N, int K, int NB, int KB, std::uint32_t q) {
    check_case(N, K, NB, KB, true);
    Field f = Field::make(q);
    const std::size_t n = sz(N) * sz(KB);
    require_field(f, 2 * static_cast<std::uint32_t>(n));
    Matrix h = cauchy(f, ascending_points(f, n), ascending_points(f, n, n));
    const std::size_t sr = sz(N - K), msg = n - sr * sz(NB);
    CodeSpec s = make_spec(N, K, NB, KB, q, KB, msg, sr, 0);
    return LinearScheme::from_generator("case2", s, h);
}

LinearScheme construct_case3_a(int N, int K, int NB, int KB, std::uint32_t q) {
    check_case(N, K, NB, KB, false);
    Field f = Field::make(q);
    const std::size_t n = sz(N), k = sz(K), nb = sz(NB), kb = sz(KB);
    require_field(f, static_cast<std::uint32_t>(2 * n * kb));

    const std::size_t msg = k * (2 * kb - nb), sr = k, L = (n - k) * kb;
    CodeSpec s = make_spec(N, K, NB, KB, q, 2 * KB, msg, sr, L);
    const std::size_t r = s.input_len();

    Matrix F = cauchy(f, ascending_points(f, 2 * k * kb), ascending_points(f, k * nb, 2 * k * kb));
    Matrix V = vandermonde(f, ascending_points(f, n), k);
    Matrix H = cauchy(f, ascending_points(f, n * kb), ascending_points(f, n * kb, n * kb));

    Matrix fv = coords(f, r, 0, msg + nb * sr) * F;  // (f0, f_1, .., f_K)
    const std::size_t f0_len = k * (nb - kb);
    Matrix h = hcat({cols(fv, 0, f0_len), coords(f, r, 0, msg), coords(f, r, s.z_offset(), L)}) * H;

    Matrix g(f, r, s.storage_len());
    for (std::size_t node = 0; node < n; ++node) {
        for (std::size_t j = 0; j < kb; ++j)
            for (std::size_t i = 0; i < k; ++i) {
                Elem c = V(i, node);
                if (c == 0) continue;
                for (std::size_t row = 0; row < r; ++row) {
                    Elem e = fv(row, f0_len + i * kb + j);
                    if (e) g(row, node * 2 * kb + j) = f.add(g(row, node * 2 * kb + j), f.mul(c, e));
                }
            }
        g.set_block(0, node * 2 * kb + kb, cols(h, node * kb, kb));
    }
    return LinearScheme::from_generator("case3a", s, g);
}

LinearScheme construct_case3_b(int N, int K, int NB, int KB, std::uint32_t q) {
    check_case(N, K, NB, KB, false);
    Field f = Field::make(q);
    const std::size_t n = sz(N), k = sz(K), nb = sz(NB), kb = sz(KB);
    // alpha_n = 1 .. N: a zero point would give F an all-zero column.
    require_field(f, static_cast<std::uint32_t>(std::max(2 * k * nb * kb, n + 1)));

    const std::size_t msg = k * nb * (2 * kb - nb);
    const std::size_t xlen = (n - k) * kb, ylen = k * (nb - kb);
    const std::size_t sr = xlen + ylen;
    CodeSpec s = make_spec(N, K, NB, KB, q, NB * KB, msg, sr, 0);
    const std::size_t r = s.input_len();

    std::vector<Elem> ones(n, 1);
    Matrix grs_full = grs(f, ones, ascending_points(f, n, 1));
    Matrix G = grs_full.block(0, k, 0, n), Fm = grs_full.block(k, n - k, 0, n);
    const std::size_t hn = k * nb * kb;
    Matrix H = cauchy(f, ascending_points(f, hn), ascending_points(f, hn, hn));

    // h input: (y0, b^y_1, .., b^y_NB)
    Matrix hin = coords(f, r, 0, msg);
    for (std::size_t t = 0; t < nb; ++t) hin = Matrix::hconcat(hin, coords(f, r, s.b_offset(int(t)) + xlen, ylen));
    Matrix h = hin * H;  // block (t, i) at column (t * K + i) * KB

    Matrix g(f, r, s.storage_len());
    for (std::size_t node = 0; node < n; ++node)
        for (std::size_t t = 0; t < nb; ++t)
            for (std::size_t j = 0; j < kb; ++j) {
                const std::size_t col = node * nb * kb + t * kb + j;
                for (std::size_t i = 0; i < k; ++i) {
                    Elem c = G(i, node);
                    for (std::size_t row = 0; row < r; ++row) {
                        Elem e = h(row, (t * k + i) * kb + j);
                        if (e) g(row, col) = f.add(g(row, col), f.mul(c, e));
                    }
                }
                // b^{i,x}_t[j] is a single input coordinate.
                for (std::size_t i = 0; i < n - k; ++i) {
                    std::size_t row = s.b_offset(int(t)) + i * kb + j;
                    g(row, col) = f.add(g(row, col), Fm(i, node));
                }
            }
    return LinearScheme::from_generator("case3b", s, g);
}

LinearScheme construct_fig1(std::uint32_t q) {
    Field f = Field::make(q);
    CodeSpec s = make_spec(3, 1, 3, 2, q, 6, 3, 5, 0);
    const std::size_t r = s.input_len();  // 3 + 15
    Matrix g(f, r, s.storage_len());

    // a1..a3 are coordinates 0..2, a4 = a1 + a2.
    auto add_a = [&](std::size_t col, int which) {
        if (which == 4) {
            g(0, col) = f.add(g(0, col), 1);
            g(1, col) = f.add(g(1, col), 1);
        } else {
            g(sz(which - 1), col) = f.add(g(sz(which - 1), col), 1);
        }
    };
    auto b0 = [&](int owner) { return 3 + sz(owner - 1) * 5; };
    auto bji = [&](int owner, int j, int i) { return b0(owner) + 1 + sz(j - 1) * 2 + sz(i - 1); };
    const int a_part[2][3] = {{1, 3, 3}, {2, 4, 2}};
    const int b0_part[2][3] = {{2, 3, 1}, {3, 1, 2}};

    for (int node = 1; node <= 3; ++node)
        for (int col = 1; col <= 3; ++col)
            for (int row = 1; row <= 2; ++row) {
                // 2 x 3 block stored column-major.
                std::size_t c = sz(node - 1) * 6 + sz(col - 1) * 2 + sz(row - 1);
                add_a(c, a_part[row - 1][col - 1]);
                std::size_t r0 = b0(b0_part[row - 1][col - 1]);
                g(r0, c) = f.add(g(r0, c), 1);
                if (node == 3) {  // b_{3i} = b_{1i} + b_{2i}
                    for (int j = 1; j <= 2; ++j) {
                        std::size_t rr = bji(col, j, row);
                        g(rr, c) = f.add(g(rr, c), 1);
                    }
                } else {
                    std::size_t rr = bji(col, node, row);
                    g(rr, c) = f.add(g(rr, c), 1);
                }
            }
    return LinearScheme::from_generator("fig1", s, g);
}

LinearScheme construct_appendix_b(int N, int K, std::uint32_t q) {
    check_counts(N, K, 1, 1);
    if (2 * K >= N || K < 1) throw Error(ErrorCode::CaseMismatch, "requires 1 <= K and K/N < 1/2");
    Field f = Field::make(q);
    const std::size_t n = sz(N), k = sz(K);
    require_field(f, static_cast<std::uint32_t>(2 * n));
    CodeSpec s = make_spec(N, K, 1, 1, q, 2, k, k, n - k);
    const std::size_t r = s.input_len();

    Matrix V = vandermonde(f, ascending_points(f, n), k);
    Matrix H = cauchy(f, ascending_points(f, n), ascending_points(f, n, n));
    Matrix fv = (coords(f, r, 0, k) + coords(f, r, k, k)) * V;
    Matrix hv = hcat({coords(f, r, 0, k), coords(f, r, s.z_offset(), n - k)}) * H;
    Matrix g(f, r, 2 * n);
    for (std::size_t node = 0; node < n; ++node) {
        g.set_block(0, 2 * node, cols(fv, node, 1));
        g.set_block(0, 2 * node + 1, cols(hv, node, 1));
    }
    return LinearScheme::from_generator("appendixb", s, g);
}

LinearScheme space_share(const LinearScheme& s1, const LinearScheme& s2, int u, int v) {
    const auto &p1 = s1.spec, &p2 = s2.spec;
    if (p1.N != p2.N || p1.K != p2.K || p1.NB != p2.NB || p1.KB != p2.KB)
        throw Error(ErrorCode::ParamMismatch, "space sharing needs equal (N, K, N_B, K_B)");
    if (!(s1.field == s2.field)) throw Error(ErrorCode::FieldMismatch, "space sharing needs a common field");
    if (u < 0 || v < 1 || u > v) throw Error(ErrorCode::ParamMismatch, "need 0 <= u <= v and v >= 1");

    struct Copy {
        const LinearScheme* s;
        std::size_t msg_off, b_off, z_off, col_off;
    };
    std::vector<Copy> copies;
    const std::size_t c1 = sz(u) * sz(p2.kappa), c2 = sz(v - u) * sz(p1.kappa);
    std::size_t msg = 0, sr = 0, L = 0, w = 0;
    for (std::size_t i = 0; i < c1 + c2; ++i) {
        const LinearScheme* s = i < c1 ? &s1 : &s2;
        copies.push_back({s, msg, sr, L, w});
        msg += s->spec.msg_len();
        sr += s->spec.sr_len();
        L += sz(s->spec.L);
        w += sz(s->spec.kappa);
    }
    const int kappa = v * p1.kappa * p2.kappa;
    CodeSpec spec = make_spec(p1.N, p1.K, p1.NB, p1.KB, p1.q, kappa, msg, sr, L);
    const Field& f = s1.field;
    Matrix g(f, spec.input_len(), spec.storage_len());

    for (const Copy& c : copies) {
        const CodeSpec& cs = c.s->spec;
        Matrix gc = c.s->generator();
        // Input row of the copy -> row of the shared scheme.
        std::vector<std::size_t> row_map(gc.rows());
        for (std::size_t j = 0; j < cs.msg_len(); ++j) row_map[j] = c.msg_off + j;
        for (int m = 0; m < cs.NB; ++m)
            for (std::size_t j = 0; j < cs.sr_len(); ++j)
                row_map[cs.b_offset(m) + j] = spec.b_offset(m) + c.b_off + j;
        for (std::size_t j = 0; j < sz(cs.L); ++j) row_map[cs.z_offset() + j] = spec.z_offset() + c.z_off + j;
        for (int n = 0; n < cs.N; ++n)
            for (std::size_t j = 0; j < sz(cs.kappa); ++j) {
                std::size_t src = sz(n) * sz(cs.kappa) + j, dst = sz(n) * sz(kappa) + c.col_off + j;
                for (std::size_t row = 0; row < gc.rows(); ++row)
                    if (gc(row, src)) g(row_map[row], dst) = gc(row, src);
            }
    }
    return LinearScheme::from_generator("space_share(" + s1.label + "," + s2.label + ")", spec, g);
}

SchemeKind parse_scheme_kind(const std::string& name) {
    if (name == "baseline") return SchemeKind::Baseline;
    if (name == "case2") return SchemeKind::Case2;
    if (name == "case3a") return SchemeKind::Case3a;
    if (name == "case3b") return SchemeKind::Case3b;
    if (name == "fig1") return SchemeKind::Fig1;
    if (name == "appendixb") return SchemeKind::AppendixB;
    throw Error(ErrorCode::BadFormat, "unknown scheme '" + name + "'");
}

std::string to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::Baseline: return "baseline";
        case SchemeKind::Case2: return "case2";
        case SchemeKind::Case3a: return "case3a";
        case SchemeKind::Case3b: return "case3b";
        case SchemeKind::Fig1: return "fig1";
        case SchemeKind::AppendixB: return "appendixb";
    }
    return "?";
}

std::uint32_t min_field_order(SchemeKind k, int N, int K, int NB, int KB) {
    std::uint64_t need = 2;
    switch (k) {
        case SchemeKind::Baseline: need = 2 * K > N ? 2u * sz(N) : 2; break;
        case SchemeKind::Case2:
        case SchemeKind::Case3a: need = 2u * sz(N) * sz(KB); break;
        case SchemeKind::Case3b: need = std::max<std::uint64_t>(2u * sz(K) * sz(NB) * sz(KB), sz(N) + 1); break;
        case SchemeKind::Fig1: need = 2; break;
        case SchemeKind::AppendixB: need = 2u * sz(N); break;
    }
    if (need > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "required field order exceeds supported range");
    return next_prime_power(static_cast<std::uint32_t>(std::max<std::uint64_t>(need, 2)));
}

LinearScheme construct(SchemeKind k, int N, int K, int NB, int KB, std::uint32_t q) {
    switch (k) {
        case SchemeKind::Baseline: return construct_baseline(N, K, q, NB, KB);
        case SchemeKind::Case2: return construct_case2(N, K, NB, KB, q);
        case SchemeKind::Case3a: return construct_case3_a(N, K, NB, KB, q);
        case SchemeKind::Case3b: return construct_case3_b(N, K, NB, KB, q);
        case SchemeKind::Fig1: return construct_fig1(q);
        case SchemeKind::AppendixB: return construct_appendix_b(N, K, q);
    }
    throw Error(ErrorCode::BadFormat, "unknown scheme kind");
}

}  // namespace eacode
