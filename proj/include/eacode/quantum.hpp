#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eacode/codes.hpp"
#include "eacode/linalg.hpp"
#include "eacode/verify.hpp"

namespace eacode {

struct Subsystem {
    std::string name;
    std::size_t dits = 0;
    friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Subsystems R, Q1..QN, B1..BNB in that order.
struct SubsystemLayout {
    std::vector<Subsystem> parts;

    static SubsystemLayout for_spec(const CodeSpec& spec);

    std::size_t total() const;
    /// First coordinate of subsystem i.
    std::size_t offset(std::size_t i) const;
    /// Index of the named subsystem; throws LayoutMismatch.
    std::size_t index(const std::string& name) const;
    /// Coordinates of the listed subsystems, concatenated in list order.
    std::vector<std::size_t> coordinates(const std::vector<std::size_t>& subsystems) const;

    friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;
};

/// Uniform phase-free superposition over rowspace(generator) + offset.
/// Kept canonical: generator in reduced row echelon form without zero rows,
/// offset reduced against the pivots, so equal states compare equal.
class CosetState {
public:
    CosetState(SubsystemLayout layout, const Matrix& generator, Vector offset);

    const SubsystemLayout& layout() const { return layout_; }
    const Matrix& generator() const { return gen_; }
    const Vector& offset() const { return offset_; }
    /// log_q of the support size.
    std::size_t rank() const { return gen_.rows(); }

    friend bool operator==(const CosetState&, const CosetState&) = default;

private:
    SubsystemLayout layout_;
    Matrix gen_;
    Vector offset_;
};

/// Maximally entangled message: support {(a, encode(a, b, z), b)}.
/// Throws InfeasibleScheme when (a, b) is not recoverable from all storage
/// nodes, i.e. the encoder is not an isometry.
CosetState css_encode_state(const LinearScheme& s);
/// The message register R fixed to the basis state a.
CosetState css_encode_basis_state(const LinearScheme& s, const Vector& a);

/// Basis relabeling x_T -> x_T * matrix on the coordinates of `targets`.
struct LabelUnitary {
    std::string description;
    std::vector<std::size_t> targets;
    Matrix matrix;
    friend bool operator==(const LabelUnitary&, const LabelUnitary&) = default;
};

/// Throws LayoutMismatch for unknown targets or a wrong matrix size, and
/// NonInvertible for a singular matrix.
CosetState apply_label_unitary(const CosetState& state, const LabelUnitary& u);

/// Subsystem indices that survive the pattern: Q_k (ascending), then B_i.
std::vector<std::size_t> available_subsystems(const SubsystemLayout& layout, const ErasurePattern& p);

/// Change-of-basis decoder on the surviving subsystems. Afterwards the first
/// msg_len available coordinates (the output register) carry the message.
/// Throws InfeasibleScheme when the message is not decodable from the
/// pattern or the encoder is not an isometry; PatternMismatch for bad patterns.
std::vector<LabelUnitary> synthesize_decoder(const LinearScheme& s, const ErasurePattern& p);

CosetState apply_all(CosetState state, const std::vector<LabelUnitary>& steps);

/// Coordinates of R and of the output register for the pattern.
struct OutputRegisters {
    std::vector<std::size_t> r, qhat;
};
OutputRegisters output_registers(const SubsystemLayout& layout, const ErasurePattern& p);

/// True iff the (zero-offset) support splits as {(a, a, 0...)} + W' with W'
/// vanishing on R and the output register. Throws LayoutMismatch.
bool factorization_check(const CosetState& state, const ErasurePattern& p);
/// After decoding a basis state: the output register is constant and equals a.
bool basis_state_check(const CosetState& state, const ErasurePattern& p, const Vector& a);

struct QuantumVerdict {
    ErasurePattern pattern;
    bool synthesized = false;
    bool factorizes = false;
    std::vector<LabelUnitary> transcript;
    friend bool operator==(const QuantumVerdict&, const QuantumVerdict&) = default;
};

/// Encode, decode and check each pattern. Patterns whose decoder cannot be
/// synthesized are reported with synthesized = false.
std::vector<QuantumVerdict> quantum_check(const LinearScheme& s, const std::vector<ErasurePattern>& patterns);
std::vector<QuantumVerdict> quantum_check_serial(const LinearScheme& s, const std::vector<ErasurePattern>& patterns);

}  // namespace eacode
