#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eacode/codes.hpp"
#include "eacode/rational.hpp"

namespace eacode {

/// Surviving storage nodes and SR nodes, 0-based and sorted.
struct ErasurePattern {
    std::vector<int> storage;
    std::vector<int> sr;

    friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;
};

/// "K=1,3;KB=1,2" with 1-based indices.
std::string to_string(const ErasurePattern& p);
/// Inverse of to_string. Throws BadFormat.
ErasurePattern parse_pattern(const std::string& s);

std::size_t pattern_count(const CodeSpec& spec);
/// All (K, KB) patterns in lexicographic order: storage set first, then SR set.
/// Throws TooManyPatterns above `cap`.
std::vector<ErasurePattern> enumerate_patterns(const CodeSpec& spec, std::size_t cap = 1'000'000);
/// Throws PatternMismatch unless sizes are exactly K and KB with valid indices.
void check_pattern(const CodeSpec& spec, const ErasurePattern& p);

/// Complement of p's index sets within [N] and [NB].
ErasurePattern erased_part(const CodeSpec& spec, const ErasurePattern& p);

/// Map x -> (Y_K, b_KB): node columns of the generator, then SR selector columns.
Matrix observation_matrix(const LinearScheme& s, const ErasurePattern& p);
/// Same for the erased view (Y_Kc, b_KBc).
Matrix erased_matrix(const LinearScheme& s, const ErasurePattern& p);

bool check_decodability(const LinearScheme& s, const ErasurePattern& p);
bool check_security(const LinearScheme& s, const ErasurePattern& p);
bool check_sr_recovery(const LinearScheme& s);

struct PatternVerdict {
    ErasurePattern pattern;
    bool decodable = false;
    bool secure = false;
    friend bool operator==(const PatternVerdict&, const PatternVerdict&) = default;
};

struct AuditReport {
    std::vector<PatternVerdict> patterns;
    bool sr_recovery = false;
    bool pass = false;

    std::size_t failures() const;
    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct AuditOptions {
    std::size_t pattern_cap = 1'000'000;
};

/// All checks over every pattern. Patterns are evaluated in parallel; the
/// verdict order is the enumeration order regardless of thread count.
AuditReport audit(const LinearScheme& s, const AuditOptions& opt = {});
/// Single-threaded reference for audit.
AuditReport audit_serial(const LinearScheme& s, const AuditOptions& opt = {});

/// What the decoder sees: surviving storage blocks and SR blocks, in pattern order.
struct Observation {
    std::vector<Vector> storage;
    std::vector<Vector> sr;
};

/// Restricts an encoding to the survivors of p.
Observation observe(const LinearScheme& s, const ErasurePattern& p, const StorageWord& word, const Vector& b);

/// Linear decoder for one pattern, precomputed once and reused.
class PatternDecoder {
public:
    /// Throws Infeasible when the pattern is not decodable.
    PatternDecoder(const LinearScheme& s, const ErasurePattern& p);

    /// Throws InconsistentObservation when obs is outside the code's image,
    /// LengthMismatch on malformed blocks.
    Vector decode(const Observation& obs) const;

    const ErasurePattern& pattern() const { return pattern_; }

private:
    Vector flatten(const Observation& obs) const;

    Field field_;
    ErasurePattern pattern_;
    std::size_t kappa_, sr_len_;
    Matrix d_;       // obs * d_ = y0
    Matrix checks_;  // obs * checks_ = 0 on the image
};

Vector decode(const LinearScheme& s, const ErasurePattern& p, const Observation& obs);

/// Random variables of the storage model, used by the entropy oracle.
struct Var {
    enum Kind { Message, Storage, SR, Local } kind;
    int index = 0;  // node index for Storage / SR
};
using VarSet = std::vector<Var>;

struct OracleOptions {
    /// Upper bound on q^(input length).
    std::uint64_t input_cap = std::uint64_t{1} << 22;
    /// Projected values held in memory during one enumeration pass; variable
    /// sets that do not fit are tabulated in further passes.
    std::uint64_t table_budget = std::uint64_t{1} << 22;
};

/// H(target | conditioning) in q-ary units by tabulating the joint
/// distribution over every input. Throws TooLarge above the cap.
Rational entropy_oracle(const LinearScheme& s, const VarSet& target, const VarSet& conditioning,
                        const OracleOptions& opt = {});

/// Joint entropies H(set) for several sets, sharing enumeration passes.
std::vector<Rational> joint_entropies(const LinearScheme& s, const std::vector<VarSet>& sets,
                                      const OracleOptions& opt = {});

/// The three feasibility verdicts recomputed from entropies.
struct OracleVerdict {
    bool decodable = false;  // H(Y0 | Y_K, B_KB) == 0
    bool secure = false;     // I(Y0 ; Y_Kc, B_KBc) == 0
};
std::vector<OracleVerdict> oracle_pattern_verdicts(const LinearScheme& s, const std::vector<ErasurePattern>& ps,
                                                   const OracleOptions& opt = {});
/// H(B | Y_1..Y_N) == 0.
bool oracle_sr_recovery(const LinearScheme& s, const OracleOptions& opt = {});

}  // namespace eacode
