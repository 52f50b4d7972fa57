#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eacode/gf.hpp"
#include "eacode/linalg.hpp"
#include "eacode/rational.hpp"

namespace eacode {

/// Parameters of a linear storage scheme with shared-randomness (SR) nodes.
struct CodeSpec {
    int N = 0, K = 0, NB = 0, KB = 0;
    std::uint32_t q = 2;
    int kappa = 1;
    Rational lambda0{0}, lambdaB{0};
    int L = 0;

    /// Message length kappa * lambda0 in dits.
    std::size_t msg_len() const;
    /// Per-SR-node length kappa * lambdaB in dits.
    std::size_t sr_len() const;
    std::size_t b_len() const { return static_cast<std::size_t>(NB) * sr_len(); }
    std::size_t input_len() const { return msg_len() + b_len() + static_cast<std::size_t>(L); }
    /// Offsets into the input x = (y0, b, z).
    std::size_t b_offset(int sr_node) const { return msg_len() + static_cast<std::size_t>(sr_node) * sr_len(); }
    std::size_t z_offset() const { return msg_len() + b_len(); }
    std::size_t storage_len() const { return static_cast<std::size_t>(N) * kappa; }

    /// Throws DimensionMismatch when the invariants fail (negative counts,
    /// K > N, non-integral kappa * lambda).
    void validate() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// y0 * A + b * B + z * Z, with column block n (width kappa) feeding node n.
struct LinearScheme {
    std::string label;
    CodeSpec spec;
    Field field;
    Matrix A, B, Z;

    LinearScheme(std::string label, CodeSpec spec, Field field, Matrix a, Matrix b, Matrix z);
    /// Builds the three blocks from the stacked generator [A; B; Z].
    static LinearScheme from_generator(std::string label, CodeSpec spec, const Matrix& g);

    /// [A; B; Z], one row per input coordinate.
    Matrix generator() const;
    /// Column indices of storage node n (0-based).
    std::vector<std::size_t> node_columns(int n) const;
};

struct EncodingInput {
    Vector y0, b, z;
};

using StorageWord = std::vector<Vector>;

/// Throws LengthMismatch for wrong input lengths.
StorageWord encode(const LinearScheme& s, const EncodingInput& in);

/// Ramp secret sharing through a K x N Cauchy generator: rate (2K - N, 0) when
/// 2K > N, otherwise the empty scheme. SR counts only shape the pattern space.
LinearScheme construct_baseline(int N, int K, std::uint32_t q, int NB = 0, int KB = 0);
/// Stacked (message, SR) generator is one N*KB square Cauchy matrix.
LinearScheme construct_case2(int N, int K, int NB, int KB, std::uint32_t q);
/// Cauchy precode, (N, K) Vandermonde spreading and a Cauchy mask.
LinearScheme construct_case3_a(int N, int K, int NB, int KB, std::uint32_t q);
/// GRS split into G / F with Cauchy precoding of the y-parts.
LinearScheme construct_case3_b(int N, int K, int NB, int KB, std::uint32_t q);
/// The hand-built (3,1,3,2) code with kappa = 6 over any field.
LinearScheme construct_fig1(std::uint32_t q);
/// N_B = K_B = 1 scheme: f = (a + b) V, h = (a, z) H, Y_n = (f_n, h_n).
LinearScheme construct_appendix_b(int N, int K, std::uint32_t q);

/// u * kappa2 copies of s1 and (v - u) * kappa1 copies of s2 side by side.
/// Throws ParamMismatch for different (N, K, NB, KB) and FieldMismatch for
/// different fields.
LinearScheme space_share(const LinearScheme& s1, const LinearScheme& s2, int u, int v);

enum class SchemeKind { Baseline, Case2, Case3a, Case3b, Fig1, AppendixB };

/// Parses "baseline", "case2", "case3a", "case3b", "fig1", "appendixb".
SchemeKind parse_scheme_kind(const std::string& name);
std::string to_string(SchemeKind k);
/// Smallest field order the deterministic construction accepts.
std::uint32_t min_field_order(SchemeKind k, int N, int K, int NB, int KB);
/// Dispatches to the constructors above; fig1 ignores the counts.
LinearScheme construct(SchemeKind k, int N, int K, int NB, int KB, std::uint32_t q);

}  // namespace eacode
